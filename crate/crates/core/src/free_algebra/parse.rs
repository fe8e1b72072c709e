//! Relation grammar:
//!
//! ```text
//! element := [sign] term (sign term)*
//! term    := integer ['*'] factors | integer | factors
//! factors := factor (['*'] factor)*
//! factor  := 'x' index ['^' exponent]
//! ```
//!
//! Whitespace is ignored between tokens.

use num_bigint::BigInt;
use num_traits::One;

use super::{AlgebraError, Element, Word};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, msg: impl Into<String>) -> AlgebraError {
        AlgebraError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }
}

/// Parses a homogeneous element of the free algebra on `k` generators.
pub fn parse_element(src: &str, k: usize) -> Result<Element, AlgebraError> {
    let mut cur = Cursor {
        src: src.as_bytes(),
        pos: 0,
    };
    let mut terms: Vec<(Word, BigInt, usize)> = Vec::new();

    let mut sign = BigInt::one();
    match cur.peek() {
        Some(b'-') => {
            cur.pos += 1;
            sign = -sign;
        }
        Some(b'+') => cur.pos += 1,
        None => return Err(cur.syntax("empty expression")),
        _ => {}
    }
    loop {
        let start = cur.pos;
        let (word, coeff) = parse_term(&mut cur, k)?;
        terms.push((word, sign * coeff, start));
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.pos += 1;
                sign = BigInt::one();
            }
            Some(b'-') => {
                cur.pos += 1;
                sign = -BigInt::one();
            }
            Some(c) => return Err(cur.syntax(format!("unexpected `{}`", c as char))),
        }
    }

    let degree = terms[0].0.multidegree(k);
    let mut out = Element::zero(degree.clone());
    for (w, c, _) in terms {
        let wd = w.multidegree(k);
        if wd != degree {
            return Err(AlgebraError::Inhomogeneous {
                expected: degree,
                found: wd,
            });
        }
        out.add_term(w, c);
    }
    Ok(out)
}

fn parse_term(cur: &mut Cursor<'_>, k: usize) -> Result<(Word, BigInt), AlgebraError> {
    let mut coeff = BigInt::one();
    let mut letters = Vec::new();
    let mut saw_anything = false;

    if let Some(d) = cur.digits() {
        coeff = d.parse().expect("digits parse as an integer");
        saw_anything = true;
        if cur.peek() == Some(b'*') {
            cur.pos += 1;
            if cur.peek() != Some(b'x') {
                return Err(cur.syntax("expected a generator after `*`"));
            }
        }
    }
    loop {
        match cur.peek() {
            Some(b'x') => {
                let gen_pos = cur.pos;
                cur.pos += 1;
                let idx: usize = match cur.digits() {
                    Some(d) => d.parse().map_err(|_| cur.syntax("generator index too large"))?,
                    None => return Err(cur.syntax("expected generator index after `x`")),
                };
                if idx == 0 || idx > k {
                    return Err(AlgebraError::UnknownGenerator {
                        index: idx,
                        pos: gen_pos,
                        gens: k,
                    });
                }
                let mut exp = 1usize;
                if cur.peek() == Some(b'^') {
                    cur.pos += 1;
                    exp = match cur.digits() {
                        Some(d) => d.parse().map_err(|_| cur.syntax("exponent too large"))?,
                        None => return Err(cur.syntax("expected exponent after `^`")),
                    };
                }
                letters.extend(std::iter::repeat_n(idx as u8, exp));
                saw_anything = true;
                if cur.peek() == Some(b'*') {
                    cur.pos += 1;
                    if cur.peek() != Some(b'x') {
                        return Err(cur.syntax("expected a generator after `*`"));
                    }
                }
            }
            _ => break,
        }
    }
    if !saw_anything {
        return Err(cur.syntax("expected a term"));
    }
    Ok((Word::new(letters), coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::{bracket, MultiDegree};
    use proptest::prelude::*;

    #[test]
    fn monomial_relation() {
        let e = parse_element("x1^3", 2).unwrap();
        assert_eq!(e.degree(), &MultiDegree::new(vec![3, 0]));
        assert_eq!(e.terms().len(), 1);
        assert_eq!(e.coefficient(&Word::new(vec![1, 1, 1])), BigInt::one());
    }

    #[test]
    fn commutator_parses() {
        let e = parse_element("x1*x2 - x2*x1", 2).unwrap();
        let y = bracket(&Element::generator(2, 1), &Element::generator(2, 2));
        assert_eq!(e, y);
        assert_eq!(parse_element("x1 x2-x2 x1", 2).unwrap(), y);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let err = parse_element("x1 + x2^2", 2).unwrap_err();
        assert!(matches!(err, AlgebraError::Inhomogeneous { .. }), "{err}");
    }

    #[test]
    fn unknown_generator() {
        let err = parse_element("x1*x3", 2).unwrap_err();
        assert_eq!(
            err,
            AlgebraError::UnknownGenerator {
                index: 3,
                pos: 3,
                gens: 2
            }
        );
        assert!(matches!(
            parse_element("x0", 2),
            Err(AlgebraError::UnknownGenerator { index: 0, .. })
        ));
    }

    #[test]
    fn syntax_errors_report_position() {
        match parse_element("x1 + + x2", 2) {
            Err(AlgebraError::Syntax { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_element("", 2), Err(AlgebraError::Syntax { .. })));
        assert!(matches!(parse_element("x1^", 2), Err(AlgebraError::Syntax { .. })));
        assert!(matches!(parse_element("x1 * ", 2), Err(AlgebraError::Syntax { .. })));
        assert!(matches!(parse_element("x1 / x2", 2), Err(AlgebraError::Syntax { .. })));
    }

    #[test]
    fn coefficients_and_cancellation() {
        let e = parse_element("2*x1*x2 + 3 x1 x2 - 5x1x2", 2).unwrap();
        assert!(e.is_zero());
        assert_eq!(e.degree(), &MultiDegree::new(vec![1, 1]));
        let c = parse_element("7", 2).unwrap();
        assert_eq!(c.degree(), &MultiDegree::zero(2));
    }

    fn arb_element() -> impl Strategy<Value = Element> {
        (0u32..3, 0u32..3, proptest::collection::vec(-4i64..=4, 1..6)).prop_map(|(a, b, coeffs)| {
            let d = MultiDegree::new(vec![a, b]);
            let words = crate::free_algebra::monomials_of_multidegree(2, &d);
            let terms = words.into_iter().zip(coeffs).map(|(w, c)| (w, BigInt::from(c)));
            Element::from_terms(d, terms).unwrap()
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_render(e in arb_element()) {
            prop_assume!(!e.is_zero());
            let text = e.to_string();
            let back = parse_element(&text, 2).unwrap();
            prop_assert_eq!(back, e);
        }
    }
}

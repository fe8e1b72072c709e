//! Tables as printed, one LaTeX body row per line.

pub const N2_3_7: [&str; 12] = [
    r"$0$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } \\ \hline",
    r"$1$ &{\tiny $0$ } & $1$ & $1$ & $1$ & $1$ & $1$ & $1$ & {\tiny $0$ }{  $(7)$} & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  \\ \hline",
    r"$2$ &{\tiny $0$ } & $1$ & $1$ & $1$ & $1$ & $1$ & $1$ & {\tiny $0$ }{  $(7)$} & {\tiny $0$ } & {\tiny $0$ } &  &  \\ \hline",
    r"$3$ &{\tiny $0$ } & {\tiny $0$ }{  $(3)$} & {\tiny $0$ }{  $(3)$} & {\tiny $0$ }{  $(3)$} & {\tiny $0$ }{  $(3)$} & {\tiny $0$ }{  $(3)$} & {\tiny $0$ }{  $(3)$} & {\tiny $0$ } & {\tiny $0$ } &  &  &  \\ \hline",
    r"$4$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  \\ \hline",
    r"$5$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  \\ \hline",
    r"$6$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  \\ \hline",
    r"$7$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  \\ \hline",
    r"$8$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  \\ \hline",
    r"$9$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  &  \\ \hline",
    r"$10$ &{\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  &  &  \\ \hline",
    r"$11$ &{\tiny $0$ } &  &  &  &  &  &  &  &  &  &  &  \\ \hline",
];

pub const N2_4_6: [&str; 12] = [
    r"$0$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } \\ \hline",
    r"$1$ &{\tiny $0$ } & $1$ & $1$ & $1$ & $1$ & $1$ & {\tiny $0$ }{  $(2 \cdot 3)$} & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  \\ \hline",
    r"$2$ &{\tiny $0$ } & $1$ & $1$ & $1$ & $1$ & $1$ & {\tiny $0$ }{  $(2 \cdot 3)$} & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  \\ \hline",
    r"$3$ &{\tiny $0$ } & $1$ & $1$ & $1$ & $1$ & $1$ & {\tiny $0$ }{  $(2 \cdot 3)$} & {\tiny $0$ } & {\tiny $0$ } &  &  &  \\ \hline",
    r"$4$ &{\tiny $0$ } & {\tiny $0$ }{  $(4)$} & {\tiny $0$ }{  $(4)$} & {\tiny $0$ }{  $(4)$} & {\tiny $0$ }{  $(4)$} & {\tiny $0$ }{  $(4)$} & {\tiny $0$ }{  $(2)$} & {\tiny $0$ } &  &  &  &  \\ \hline",
    r"$5$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  \\ \hline",
    r"$6$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  \\ \hline",
    r"$7$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  \\ \hline",
    r"$8$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  \\ \hline",
    r"$9$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  &  \\ \hline",
    r"$10$ &{\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  &  &  \\ \hline",
    r"$11$ &{\tiny $0$ } &  &  &  &  &  &  &  &  &  &  &  \\ \hline",
];

pub const N3_3_4: [&str; 12] = [
    r"$0$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } \\ \hline",
    r"$1$ &{\tiny $0$ } & {\tiny $0$ } & $1$ & $1$ & $1$ & {\tiny $0$ }{  $(2)$} & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  \\ \hline",
    r"$2$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $2${  $(4)$} & {\tiny $0$ }{  $(2 \cdot 4)$} & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  \\ \hline",
    r"$3$ &{\tiny $0$ } & $1$ & $2${  $(3)$} & $2${  $(3)$} & $1${  $(3 \cdot 4)$} & {\tiny $0$ }{  $(4)$} & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  \\ \hline",
    r"$4$ &{\tiny $0$ } & {\tiny $0$ }{  $(3)$} & {\tiny $0$ }{  $(3^{2})$} & {\tiny $0$ }{  $(3^{2})$} & {\tiny $0$ }{  $(3)$} & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  \\ \hline",
    r"$5$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  \\ \hline",
    r"$6$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  \\ \hline",
    r"$7$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  \\ \hline",
    r"$8$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  \\ \hline",
    r"$9$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  &  \\ \hline",
    r"$10$ &{\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  &  &  \\ \hline",
    r"$11$ &{\tiny $0$ } &  &  &  &  &  &  &  &  &  &  &  \\ \hline",
];

pub const N3_3_4_F3: [&str; 12] = [
    r"$0$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } \\ \hline",
    r"$1$ &{\tiny $0$ } & {\tiny $0$ } & $1$ & $1$ & $1$ & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  \\ \hline",
    r"$2$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $2$ & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  \\ \hline",
    r"$3$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $2$ & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  \\ \hline",
    r"$4$ &{\tiny $0$ } & $1$ & $2$ & $2$ & $1$ & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  \\ \hline",
    r"$5$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  \\ \hline",
    r"$6$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  \\ \hline",
    r"$7$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  \\ \hline",
    r"$8$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  \\ \hline",
    r"$9$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  &  \\ \hline",
    r"$10$ &{\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  &  &  \\ \hline",
    r"$11$ &{\tiny $0$ } &  &  &  &  &  &  &  &  &  &  &  \\ \hline",
];

pub const N3_7_7: [&str; 12] = [
    r"$0$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } \\ \hline",
    r"$1$ &{\tiny $0$ } & {\tiny $0$ } & $1$ & $1$ & $1$ & $1$ & $1$ & $1$ & {\tiny $0$ }{  $(7)$} & {\tiny $0$ } & {\tiny $0$ } &  \\ \hline",
    r"$2$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ & $2${  $(7)$} & {\tiny $0$ }{  $(7^{2})$} & {\tiny $0$ } &  &  \\ \hline",
    r"$3$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ & $2${  $(7)$} & {\tiny $0$ }{  $(7^{2})$} &  &  &  \\ \hline",
    r"$4$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ & $2${  $(7)$} &  &  &  &  \\ \hline",
    r"$5$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ &  &  &  &  &  \\ \hline",
    r"$6$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ & $3$ &  &  &  &  &  &  \\ \hline",
    r"$7$ &{\tiny $0$ } & $1$ & $2${  $(7)$} & $2${  $(7)$} & $2${  $(7)$} &  &  &  &  &  &  &  \\ \hline",
    r"$8$ &{\tiny $0$ } & {\tiny $0$ }{  $(7)$} & {\tiny $0$ }{  $(7^{2})$} & {\tiny $0$ }{  $(7^{2})$} &  &  &  &  &  &  &  &  \\ \hline",
    r"$9$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  &  \\ \hline",
    r"$10$ &{\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  &  &  \\ \hline",
    r"$11$ &{\tiny $0$ } &  &  &  &  &  &  &  &  &  &  &  \\ \hline",
];

pub const N3_7_7_F7: [&str; 12] = [
    r"$(0,n)$ &{\tiny $0$} & {\tiny $0$} & {\tiny $0$} & {\tiny $0$} & {\tiny $0$} & {\tiny $0$} & {\tiny $0$} & {\tiny $0$} & {\tiny $0$} & {\tiny $0$} & {\tiny $0$} & {\tiny $0$} \\ \hline",
    r"$(1,n)$ &{\tiny $0$} & {\tiny $0$} & $1$ & $1$ & $1$ & $1$ & $1$ & $1$ & $1$ & {\tiny $0$} & {\tiny $0$} & $$ \\ \hline",
    r"$(2,n)$ &{\tiny $0$} & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ & $3$ & $2$ & {\tiny $0$} & $$ & $$ \\ \hline",
    r"$(3,n)$ &{\tiny $0$} & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ & $3$ & $2$ & $$ & $$ & $$ \\ \hline",
    r"$(4,n)$ &{\tiny $0$} & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ & $3$ & $$ & $$ & $$ & $$ \\ \hline",
    r"$(5,n)$ &{\tiny $0$} & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ & $$ & $$ & $$ & $$ & $$ \\ \hline",
    r"$(6,n)$ &{\tiny $0$} & $1$ & $3$ & $3$ & $3$ & $3$ & $$ & $$ & $$ & $$ & $$ & $$ \\ \hline",
    r"$(7,n)$ &{\tiny $0$} & $1$ & $3$ & $3$ & $3$ & $$ & $$ & $$ & $$ & $$ & $$ & $$ \\ \hline",
    r"$(8,n)$ &{\tiny $0$} & $1$ & $2$ & $2$ & $$ & $$ & $$ & $$ & $$ & $$ & $$ & $$ \\ \hline",
    r"$(9,n)$ &{\tiny $0$} & {\tiny $0$} & {\tiny $0$} & $$ & $$ & $$ & $$ & $$ & $$ & $$ & $$ & $$ \\ \hline",
    r"$(10,n)$ &{\tiny $0$} & {\tiny $0$} & $$ & $$ & $$ & $$ & $$ & $$ & $$ & $$ & $$ & $$ \\ \hline",
    r"$(11,n)$ &{\tiny $0$} & $$ & $$ & $$ & $$ & $$ & $$ & $$ & $$ & $$ & $$ & $$ \\ \hline",
];

pub const N3_8_8: [&str; 12] = [
    r"$0$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } \\ \hline",
    r"$1$ &{\tiny $0$ } & {\tiny $0$ } & $1$ & $1$ & $1$ & $1$ & $1$ & $1$ & $1$ & {\tiny $0$ }{  $(4)$} & {\tiny $0$ } &  \\ \hline",
    r"$2$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ & $3$ & $2${  $(8)$} & {\tiny $0$ }{  $(4 \cdot 8)$} &  &  \\ \hline",
    r"$3$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ & $3$ & $2${  $(8)$} &  &  &  \\ \hline",
    r"$4$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ & $3$ &  &  &  &  \\ \hline",
    r"$5$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ &  &  &  &  &  \\ \hline",
    r"$6$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ & $3$ &  &  &  &  &  &  \\ \hline",
    r"$7$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ &  &  &  &  &  &  &  \\ \hline",
    r"$8$ &{\tiny $0$ } & $1$ & $2${  $(8)$} & $2${  $(8)$} &  &  &  &  &  &  &  &  \\ \hline",
    r"$9$ &{\tiny $0$ } & {\tiny $0$ }{  $(4)$} & {\tiny $0$ }{  $(4 \cdot 8)$} &  &  &  &  &  &  &  &  &  \\ \hline",
    r"$10$ &{\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  &  &  \\ \hline",
    r"$11$ &{\tiny $0$ } &  &  &  &  &  &  &  &  &  &  &  \\ \hline",
];

pub const N3_8_9: [&str; 12] = [
    r"$0$ &{\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } & {\tiny $0$ } \\ \hline",
    r"$1$ &{\tiny $0$ } & {\tiny $0$ } & $1$ & $1$ & $1$ & $1$ & $1$ & $1$ & $1$ & $1$ & {\tiny $0$ }{  $(9)$} &  \\ \hline",
    r"$2$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ & $3$ & $3$ & $2${  $(9)$} &  &  \\ \hline",
    r"$3$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ & $3$ & $3$ &  &  &  \\ \hline",
    r"$4$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ & $3$ &  &  &  &  \\ \hline",
    r"$5$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ & $3$ & $3$ &  &  &  &  &  \\ \hline",
    r"$6$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ & $3$ &  &  &  &  &  &  \\ \hline",
    r"$7$ &{\tiny $0$ } & $1$ & $3$ & $3$ & $3$ &  &  &  &  &  &  &  \\ \hline",
    r"$8$ &{\tiny $0$ } & $1$ & $2${  $(8)$} & $2${  $(8)$} &  &  &  &  &  &  &  &  \\ \hline",
    r"$9$ &{\tiny $0$ } & {\tiny $0$ }{  $(4)$} & {\tiny $0$ }{  $(4 \cdot 8)$} &  &  &  &  &  &  &  &  &  \\ \hline",
    r"$10$ &{\tiny $0$ } & {\tiny $0$ } &  &  &  &  &  &  &  &  &  &  \\ \hline",
    r"$11$ &{\tiny $0$ } &  &  &  &  &  &  &  &  &  &  &  \\ \hline",
];

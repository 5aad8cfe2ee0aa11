//! Published constants for the figure-eight recurrence, kept as printed and
//! parsed on first use.

use std::sync::OnceLock;

use crate::error::Result;
use crate::expr::{parse_expr, parse_laurent};
use crate::laurent::MultiLaurent;
use crate::ratfun::RationalFunction;

/// `(name, expression)` pairs in the order they appear in the derivation.
pub const SOURCES: &[(&str, &str)] = &[
    ("A_prime", "L+L^{-1}-M^{4} - M^{-4}+ M^{2} + M^{-2}+ 2"),
    ("at2", "1"),
    ("at1", "-2 M^{4} - 2 M^{-4} + 2 M^{2} + 2 M^{-2} + 4"),
    ("at0", "M^{8} + M^{-8} - 2 M^{6} - 2 M^{-6} - 3 M^{4} - 3 M^{-4} + 2 M^{2} + 2 M^{-2} + 10"),
    ("atm1", "-2 M^{4} - 2 M^{-4} + 2 M^{2} + 2 M^{-2} + 4"),
    ("atm2", "1"),
    ("a1", "t^{-2} M^2 - t^2 M^{-2}"),
    ("am1", "t^2 M^2 - t^{-2} M^{-2}"),
    ("a0", "(M^2 - M^{-2}) (-M^4 - M^{-4} + M^2 + M^{-2} + t^4 + t^{-4})"),
    ("g1", "-M^{14} (-1 + M^8) (t^4 + M^8 t^4 - M^4 (1 + t^8))"),
    ("g2", "-M^{10} (-1 + M^8) t^2 (t^4 + M^8 t^4 - M^4 (1 + t^8))"),
    (
        "g3",
        "(-1 + M^4)  (M - t) (M + t) (-1 + M t) (1 + M t) (M^2 + t^2) (1 + M^2 t^2) \
         * (M^4 + M^6 + M^8 + 2 M^{10} + 3 M^{12} + M^{14} + 2 M^{16} - t^4)",
    ),
    (
        "g4",
        "t^2 (-M + t) (M + t) (-1 + M t) (1 + M t) (M^2 + t^2) (1 + M^2 t^2) \
         *(-M^4 - M^6 - M^8 + M^{14} + M^{16} + t^4)",
    ),
    (
        "m11",
        "(-1 + M^4)  t^2 *(1 - 2 M^2 + M^4 - 2 M^6 + 2 M^8 - M^{10} + M^{12} - M^{14} - M^4 t^4 + M^6 t^4 + M^{10} t^4)",
    ),
    ("m12", "-M^4 (M^6 + M^{10} + t^4 - M^2 t^4 - M^6 t^4)"),
    ("m21", "-(-1 + M^4)  (1 - M^2 - M^6 - M^8 - M^6 t^4 - M^{10} t^4 + M^{12} t^4 - M^8 t^8)"),
    ("m22", "M^4 t^2 (-1 + M^8 - M^4 t^4)"),
    (
        "m31",
        "(-1 + M^4)  t^2 *(-4 + M^2 - 2 M^4 + 3 M^6 - 2 M^8 + M^{10} - 2 M^{12} + 3 M^4 t^4 + M^6 t^4 + 2 M^8 t^4)",
    ),
    ("m32", "1 + M^2 + M^4 + 2 M^6 + 3 M^8 + M^{10} + 2 M^{12} - 3 M^4 t^4 - M^6 t^4 - 2 M^8 t^4"),
    (
        "m41",
        "-2 - M^2 - M^4 + 2 M^8 + M^{10} - M^2 t^4 - M^4 t^4 + M^8 t^4 + 2 M^{10} t^4 \
         - M^{14} t^4 - M^4 t^8 - M^6 t^8 + M^8 t^8 + M^{10} t^8",
    ),
    ("m42", "-(1 + M^2) t^2 (1 - M^8 + M^4 t^4)"),
    (
        "q1",
        "M^{-4} t^{-10}(3 + M^2 + 2 M^4 + t^4 - M^2 t^4 - M^4 t^4 - 2 M^6 t^4 - 4 t^8 - 6 M^2 t^8 \
         - 7 M^4 t^8 - 7 M^6 t^8 - 4 M^8 t^8 - 4 M^{10} t^8 - 5 t^{12} - 7 M^2 t^{12} - 6 M^4 t^{12}- 7 M^6 t^{12} \
         - 2 M^8 t^{12} - 4 t^{16} - 6 M^2 t^{16} - 3 M^4 t^{16} - 5 M^6 t^{16} - M^8 t^{16} - 2 M^{10} t^{16} - t^{20} \
         - 2 M^2 t^{20} - 2 M^4 t^{20} - 3 M^6 t^{20} - 2 M^8 t^{20} + M^4 t^{24} + M^6 t^{24} + M^8 t^{24} + 2 M^{10} t^{24})",
    ),
    ("q2", "-M^{-4} t^{-8}(-1 - M^2 + 4 t^4 + 8 M^2 t^4 + 4 t^8 + 6 M^2 t^8 + 4 t^{12} + 7 M^2 t^{12} - t^{20})"),
    (
        "q3",
        "M^{-4} t^{-10}(-1 + M^2 + M^6 + M^2 t^4 - M^8 t^4 - 2 t^8 - M^4 t^8 - M^6 t^8 - 2 M^8 t^8 \
         - M^{10} t^8- 2 M^{12} t^8 - 2 t^{12} - M^4 t^{12} - M^6 t^{12} - 3 M^8 t^{12} - M^{10} t^{12} - 2 t^{16} \
         - 2 M^4 t^{16}- 2 M^8 t^{16} - M^{12} t^{16} - M^8 t^{20} - M^{10} t^{20} + M^{12} t^{24})",
    ),
    ("q4", "-2 M^{-4} t^{-4}(1 - t + t^2) (1 + t + t^2) (1 - t^2 + t^4)"),
    (
        "pt0",
        "(1)/(M^4 t^{10}) (-M^4 t^2 - M^6 t^2 - M^8 t^2 + 2 M^{12} t^2 + M^{14} t^2 + t^6 - M^2 t^6 \
         + 14 M^4 t^6 + 5 M^6 t^6 - 2 M^8 t^6 + 3 M^{10} t^6 - 10 M^{12} t^6 - 6 M^{14} t^6 - M^{16} t^6 \
         - M^{18} t^6 - 12 t^{10} + 6 M^2 t^{10} + 18 M^4 t^{10} + 17 M^6 t^{10} + 6 M^8 t^{10}- 12 M^{10} t^{10} \
         - 14 M^{12} t^{10} - 19 M^{14} t^{10} + 4 M^{16} t^{10} + 8 M^{18} t^{10} - 13 t^{14}+ 6 M^2 t^{14} \
         + 35 M^4 t^{14} + 23 M^6 t^{14} + 2 M^8 t^{14} - 10 M^{10} t^{14} - 26 M^{12} t^{14} -  25 M^{14} t^{14} \
         + 4 M^{16} t^{14} + 6 M^{18} t^{14} - 12 t^{18} + 6 M^2 t^{18} + 20 M^4 t^{18} + 17 M^6 t^{18} +  3 M^8 t^{18} \
         - 12 M^{10} t^{18} - 15 M^{12} t^{18} - 18 M^{14} t^{18} + 4 M^{16} t^{18} + 7 M^{18} t^{18} - M^2 t^{22} \
         + 13 M^4 t^{22} + 7 M^6 t^{22} - 3 M^8 t^{22} - 10 M^{12} t^{22} - 6 M^{14} t^{22} + 2 M^4 t^{26} -  M^6 t^{26} \
         - 2 M^8 t^{26} - M^{10} t^{26} + 2 M^{12} t^{26} + 2 M^{14} t^{26} - 2 M^{16} t^{26} - 2 M^8 t^{30}+ 2 M^{12} t^{30})",
    ),
    (
        "pt1",
        "(1)/(M^4 t^{10}) (-1 + M^2 t^4 + M^8 t^4 + M^{10} t^4 + 2 M^{12} t^4 + M^{14} t^4 + M^6 t^8 \
         - 14 M^8 t^8 - 7 M^{10} t^8 - 12 M^{12} t^8 - 8 M^{14} t^8 + 13 M^4 t^{12} + 6 M^6 t^{12} - M^8 t^{12} \
         + 2 M^{10} t^{12} - 10 M^{12} t^{12} - 6 M^{14} t^{12} + 13 M^4 t^{16} + 7 M^6 t^{16} - 2 M^8 t^{16} \
         - 11 M^{12} t^{16} - 7 M^{14} t^{16} + 12 M^4 t^{20} + 6 M^6 t^{20} + 10 M^8 t^{20} + 6 M^{10} t^{20} \
         + M^6 t^{24} + 2 M^{12} t^{24} - 2 M^8 t^{28})",
    ),
    ("sym_c", "M^8 t^{14} - M^4 t^{10}"),
    ("sym_d", "-(M^8 t^{10} - M^4 t^{14})"),
    (
        "sym_rhs",
        "1 + M^{12} - M^2 t^4 - M^4 t^4 - M^8 t^4 - M^{10} t^4 - M^4 t^8 - M^8 t^8 + M^4 t^{16} \
         + M^8 t^{16} + M^2 t^{20} + M^4 t^{20} + M^8 t^{20} + M^{10} t^{20} - t^{24} - M^{12} t^{24}",
    ),
    ("eqf_c", "M^{14} t^8"),
    ("eqf_d", "M^2 t^8"),
    (
        "eqf_rhs",
        "-1 - 2 M^2 - M^4 - M^6 - M^{10} - M^{12} - 2 M^{14} - M^{16} \
         + 8 t^4 + 12 M^2 t^4 + 6 M^4 t^4 + 12 M^6 t^4 - 2 M^8 t^4 + 12 M^{10} t^4 + 6 M^{12} t^4 + 12 M^{14} t^4 \
         + 8 M^{16} t^4 + 6 t^8 + 10 M^2 t^8 + 6 M^4 t^8 + 13 M^6 t^8 + 13 M^{10} t^8 + 6 M^{12} t^8 + 10 M^{14} t^8 \
         + 6 M^{16} t^8 + 7 t^{12} + 11 M^2 t^{12} + 6 M^4 t^{12} + 12 M^6 t^{12} + 12 M^{10} t^{12} + 6 M^{12} t^{12} \
         + 11 M^{14} t^{12} + 7 M^{16} t^{12} + M^4 t^{16} + M^{12} t^{16} - 2 M^2 t^{20} - 2 M^{14} t^{20}",
    ),
    ("f_at_1", "M^{-8} - M^{-6} + 35 M^{-4} + 18 M^{-2} + 29 + 20 M^{2}"),
    ("h_over_k_printed", "t^8 M^{-6}"),
    (
        "k_rhs",
        "2 t^4 + 2 t^6 + (1 + t^2 - 11 t^4 - 11 t^6 + 12 t^8 + 12 t^{10}) (M^2 +M^{-2}) \
         + (1 + t^2 - 5 t^4 - 5 t^6 + 7 t^8 + 7 t^{10} + t^{12} + t^{14}) (M^4 + M^{-4}) \
         + (2 + 2 t^2 - 10 t^4 - 10 t^6 + 9 t^8 + 9 t^{10} - 2 t^{12} - 2 t^{14} - 2 t^{16} - 2 t^{18}) (M^6 + M^{-6}) \
         + (1 + t^2 - 7 t^4 - 7 t^6 + 7 t^8 + 7 t^{10}) (M^8 + M^{-8})",
    ),
    (
        "k",
        "t^4 +  t^6 + (1 + t^2 - 11 t^4 - 11 t^6 + 12 t^8 + 12 t^{10}) M^2 \
         + (1 + t^2 - 5 t^4 - 5 t^6 + 7 t^8 + 7 t^{10} + t^{12} + t^{14}) M^4 \
         + (2 + 2 t^2 - 10 t^4 - 10 t^6 + 9 t^8 + 9 t^{10} - 2 t^{12} - 2 t^{14} - 2 t^{16} - 2 t^{18}) M^6 \
         + (1 + t^2 - 7 t^4 - 7 t^6 + 7 t^8 + 7 t^{10}) M^8",
    ),
    (
        "b0",
        "-((-1 + M) (1 + M) (1 + M^2) t^4 (-M^2 - M^4 - M^6 + t^4 + M^8 t^4 - M^4 t^8))\
         /(M^2 (M - t) (M + t) (-1 + M t) (1 + M t) (M^2 + t^2) (1 + M^2 t^2))",
    ),
    (
        "p1",
        "(-1 - t^{16} + M^4 t^8 (1 + t^4)^2 + M^2 (t^4 + t^{12}) + M^6 (t^{8} + t^{16}) - M^8 (t^{12} + t^{20}))/(M^{4}t^{10})",
    ),
    (
        "pm1",
        "(M^4 t^8 (1 + t^4)^2 - t^{12} (1 + t^8) + M^6 (t^4 + t^{12}) - M^8 (1 + t^{16}) + M^2 (t^8 + t^{16}))/(M^4t^{10})",
    ),
    (
        "p0",
        "(1)/(M^8t^4)(t^8 + M^{16} t^8 - M^4 t^8 (2 + t^4) - M^{12} t^8 (2 + t^4) - M^2 (t^4 + t^8) \
         + M^6 (t^4 + t^8) + M^{10} (t^4 + t^8) - M^{14} (t^4 + t^8) + 2 M^8 (1 + t^4 + 2 t^8 + t^{12}))",
    ),
];

pub fn source(name: &str) -> Option<&'static str> {
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PaperConstants {
    /// The A-polynomial factor, in `M` and `L`.
    pub a_prime: MultiLaurent,
    /// Coefficients of `L^2, L, 1, 1/L, 1/L^2` in its square.
    pub a_sq: [MultiLaurent; 5],
    /// Coefficients of `L, 1, 1/L` in the inhomogeneous recurrence.
    pub a1: MultiLaurent,
    pub a0: MultiLaurent,
    pub am1: MultiLaurent,
    pub g: [MultiLaurent; 4],
    /// `m[i] = (m_i1, m_i2)`.
    pub m: [(MultiLaurent, MultiLaurent); 4],
    pub q: [MultiLaurent; 4],
    pub pt0: MultiLaurent,
    pub pt1: MultiLaurent,
    /// `c p1(M) + d p1(1/M) = rhs`, the symmetry constraint on `p1`.
    pub sym: (MultiLaurent, MultiLaurent, MultiLaurent),
    /// `c f(M) + d f(1/M) = rhs`.
    pub eqf: (MultiLaurent, MultiLaurent, MultiLaurent),
    pub f_at_1: MultiLaurent,
    /// The substitution factor `h / k` as printed.
    pub h_over_k_printed: MultiLaurent,
    pub k_rhs: MultiLaurent,
    pub k: MultiLaurent,
    pub b0: RationalFunction,
    pub p1: MultiLaurent,
    pub pm1: MultiLaurent,
    pub p0: MultiLaurent,
}

impl PaperConstants {
    pub fn load() -> Result<Self> {
        let l = |name: &str| parse_laurent(source(name).expect("known constant"));
        Ok(Self {
            a_prime: l("A_prime")?,
            a_sq: [l("at2")?, l("at1")?, l("at0")?, l("atm1")?, l("atm2")?],
            a1: l("a1")?,
            a0: l("a0")?,
            am1: l("am1")?,
            g: [l("g1")?, l("g2")?, l("g3")?, l("g4")?],
            m: [(l("m11")?, l("m12")?), (l("m21")?, l("m22")?), (l("m31")?, l("m32")?), (l("m41")?, l("m42")?)],
            q: [l("q1")?, l("q2")?, l("q3")?, l("q4")?],
            pt0: l("pt0")?,
            pt1: l("pt1")?,
            sym: (l("sym_c")?, l("sym_d")?, l("sym_rhs")?),
            eqf: (l("eqf_c")?, l("eqf_d")?, l("eqf_rhs")?),
            f_at_1: l("f_at_1")?,
            h_over_k_printed: l("h_over_k_printed")?,
            k_rhs: l("k_rhs")?,
            k: l("k")?,
            b0: parse_expr(source("b0").expect("known constant"))?,
            p1: l("p1")?,
            pm1: l("pm1")?,
            p0: l("p0")?,
        })
    }

    /// Parsed once and shared.
    pub fn get() -> &'static PaperConstants {
        static C: OnceLock<PaperConstants> = OnceLock::new();
        C.get_or_init(|| PaperConstants::load().expect("published constants parse"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_parse_and_round_trip() {
        for (name, src) in SOURCES {
            let v = parse_expr(src).unwrap_or_else(|e| panic!("{name}: {e}"));
            if let Some(p) = v.to_laurent() {
                let back: MultiLaurent = p.to_string().parse().unwrap();
                assert_eq!(&back, p, "{name}");
            } else {
                let again = parse_expr(&v.to_string()).unwrap();
                assert_eq!(again, v, "{name}");
            }
        }
        let c = PaperConstants::get();
        assert_eq!(c.a1, "t^-2*M^2 - t^2*M^-2".parse().unwrap());
    }
}

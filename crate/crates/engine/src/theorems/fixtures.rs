//! Printed target polynomials, transcribed once as data. Each is stored as
//! `lhs` of the printed `lhs = 0` (or `lhs - rhs` for displayed equalities).

use crate::poly::MultiPoly;

const FIXTURES: &[(&str, &str)] = &[
    // n = 3
    ("n31", "T'' - 3 T T' + T^3 + (4c - 11 lambda^2) T + 12 lambda lambda'"),
    (
        "n32",
        "1/3 T''' - T'^2 + (4/3 c - 26/3 lambda^2 - 2 T^2) T' + T^4 + (4c - 6 lambda^2) T^2
         - 7/3 lambda lambda' T - 9 lambda^4 - lambda^2 R + 11 c lambda^2 + 7 lambda lambda'' + 4 lambda'^2",
    ),
    ("n33", "5 lambda T' - 5 lambda T^2 + 7 lambda' T + 9 lambda^3 + lambda R - 11 c lambda - 3 lambda''"),
    (
        "n34",
        "(5 lambda T + 12 lambda') T' - 5 lambda T^3 - 5 lambda' T^2 + 7 lambda'' T + 55 lambda^3 T
         - 20 lambda T c + R lambda' - 33 lambda^2 lambda' - 11 c lambda' - 3 lambda'''",
    ),
    ("p1", "50 lambda lambda'' - 84 lambda'^2 + 230 lambda^4 - 5 R lambda^2 - 45 c lambda^2"),
    ("p2", "-15 lambda lambda''' + 36 lambda' lambda'' - 273 lambda^3 lambda' - 7 R lambda lambda' + 77 c lambda lambda'"),
    ("n36", "-252 lambda'^2 - 60 lambda^4 + 2485 R lambda^2 - 12635 c lambda^2"),
    ("n37", "-25980 lambda^4 - 61495 R lambda^2 + 321545 c lambda^2 + 10584 lambda'^2"),
    ("n38", "228 lambda^2 - 343 R + 1673 c"),
    // Theorem 1
    ("thm1-case1", "lambda^2 - 4c + 2/3 R"),
    ("Tn31", "6 lambda^2 + 6 lambda lambda2 + 2 lambda2^2 - 6c + R"),
    ("Tn32", "(6 lambda + 3 lambda2) lambda' + (3 lambda + 2 lambda2) lambda2'"),
    (
        "Tn36",
        "(lambda lambda2 + c)(lambda - lambda2)^2 (3 lambda + 2 lambda2)^3
         + 9 (28 lambda^3 + 51 lambda^2 lambda2 + 30 lambda lambda2^2 + 6 lambda2^3) lambda'^2
         + 3 (lambda2 - lambda)(2 lambda + lambda2)(3 lambda + 2 lambda2)^2 lambda''",
    ),
    (
        "Tn37",
        "(lambda lambda3 + c)(lambda - lambda3)^2 (3 lambda + 2 lambda3)^3
         + 9 (28 lambda^3 + 51 lambda^2 lambda3 + 30 lambda lambda3^2 + 6 lambda3^3) lambda'^2
         + 3 (lambda3 - lambda)(2 lambda + lambda3)(3 lambda + 2 lambda3)^2 lambda''",
    ),
    (
        "Tn310",
        "9 (2 lambda + lambda2)(2 lambda + lambda3) lambda'^2
         + (lambda2 lambda3 + c)(lambda2 - lambda)(lambda3 - lambda)(3 lambda + 2 lambda2)(3 lambda + 2 lambda3)",
    ),
    (
        "Tn311",
        "3 lambda2^6 + 27 lambda lambda2^5 + (99 lambda^2 - 4c) lambda2^4 + (189 lambda^3 - 24 c lambda) lambda2^3
         + (196 lambda^4 - 55 c lambda^2) lambda2^2 + (102 lambda^5 - 57 c lambda^3) lambda2 + 24 lambda^6 - 20 c lambda^4",
    ),
    (
        "Tn312",
        "24 lambda^6 + (176c - 28R) lambda^4 + (196 c R - 18 R^2 - 528 c^2) lambda^2
         - 3 R^3 + 46 c R^2 - 228 c^2 R + 360 c^3",
    ),
    // n = 4, Lemma 4.2
    (
        "LM1",
        "-T''' + 4 T T'' + 3 T'^2 - (6 T^2 - 26 lambda^2 + 10 c) T' + T^4 - (26 lambda^2 - 10 c) T^2
         + 55 lambda lambda' T - 21 lambda lambda'' - 12 lambda'^2 + 27 lambda^4 + (3R - 72c) lambda^2 + 9 c^2",
    ),
    (
        "LM2",
        "-T'''' + (10 T' + 10 T^2 + 50 lambda^2 - 10 c) T'' - (20 T^3 + 20 lambda^2 T + 20 c T
         - 155 lambda lambda') T' + 4 T^5 + (40 c - 80 lambda^2) T^3 + 120 lambda lambda' T^2
         + (11 lambda lambda'' + 7 lambda'^2 - 84 lambda^4 - 48 c lambda^2 + 36 c^2) T - 33 lambda lambda'''
         - 45 lambda' lambda'' + (408 lambda^2 + 10 R - 252 c) lambda lambda'",
    ),
    (
        "LM3",
        "-6 lambda T'' + (18 lambda T - 12 lambda') T' - 6 lambda T^3 + 12 lambda' T^2
         + (48 lambda^3 - 10 lambda'' + 3 R lambda - 60 c lambda) T + 3 lambda''' + (27 c - R - 75 lambda^2) lambda'",
    ),
    ("a1", "36 lambda'^2 - 22 lambda lambda'' - 108 lambda^4 + 3 R lambda^2"),
    ("a2", "30 lambda' lambda'' - 13 lambda lambda''' + 93 c lambda lambda' - 255 lambda^3 lambda' - 5 R lambda lambda'"),
    (
        "a3",
        "3 lambda lambda'''' - 9 lambda' lambda''' + (51 lambda^2 + 27 c - R) lambda lambda''
         + (147 lambda^2 + 3 R - 81 c) lambda'^2 - 162 lambda^6 + (432 c - 18 R) lambda^4 - 54 lambda^2 c^2",
    ),
    ("CE1", "36 lambda'^2 - 22 lambda lambda'' - 108 lambda^4 + 3 R lambda^2"),
    ("CE2", "30 lambda' lambda'' - 13 lambda lambda''' + 93 c lambda lambda' - 255 lambda^3 lambda' - 5 R lambda lambda'"),
    ("CE-final", "96 lambda^2 - 121 R + 1302 c"),
    (
        "b1",
        "10368 lambda^4 lambda'''' - 288 lambda^2 lambda'''' R + 2112 lambda lambda'' lambda''''
         - 3456 lambda'^2 lambda'''' - 107136 lambda^3 lambda' lambda'''
         - 972 lambda lambda' lambda''' R + 26784 lambda lambda' lambda''' c
         - 2730 lambda lambda'''^2 + 12540 lambda' lambda'' lambda''' + 288360 lambda^6 lambda''
         + 9108 lambda^4 lambda'' R - 270864 lambda^4 lambda'' c - 3336 lambda^3 lambda''^2
         + 330516 lambda^2 lambda'^2 lambda'' - 558 lambda^2 lambda'' R^2
         + 9108 lambda^2 lambda'' R c - 7128 lambda^2 lambda'' c^2 + 3840 lambda lambda''^2 R
         - 37752 lambda lambda''^2 c - 2100 lambda'^2 lambda'' R + 396 lambda'^2 lambda'' c
         - 8800 lambda''^3 - 467910 lambda^5 lambda'^2 - 42084 lambda^3 lambda'^2 R
         + 665604 lambda^3 lambda'^2 c - 244944 lambda lambda'^4 + 354 lambda lambda'^2 R^2
         - 4248 lambda lambda'^2 R c - 40230 lambda lambda'^2 c^2 + 454896 lambda^9
         - 4860 lambda^7 R - 419904 lambda^7 c - 1188 lambda^5 R^2 + 31104 lambda^5 R c
         - 34992 lambda^5 c^2 + 27 lambda^3 R^3 - 540 lambda^3 R^2 c + 972 lambda^3 R c^2",
    ),
    (
        "b2",
        "648 lambda'^2 lambda''''' + 54 lambda^2 lambda''''' R - 1944 lambda^4 lambda'''''
         - 396 lambda lambda'' lambda''''' + 12366 lambda^3 lambda' lambda''''
         - 18 lambda lambda' lambda'''' R - 1674 lambda lambda' lambda'''' c
         + 630 lambda lambda''' lambda'''' - 1440 lambda' lambda'' lambda''''
         - 32076 lambda^6 lambda''' - 4158 lambda^4 lambda''' R + 73224 lambda^4 lambda''' c
         + 24066 lambda^3 lambda'' lambda''' - 6876 lambda^2 lambda'^2 lambda'''
         + 9 lambda^2 lambda''' R^2 + 486 lambda^2 lambda''' R c - 11340 lambda^2 lambda''' c^2
         - 636 lambda lambda'' lambda''' R + 2106 lambda lambda'' lambda''' c
         + 792 lambda'^2 lambda''' R - 6156 lambda'^2 lambda''' c - 1890 lambda' lambda'''^2
         + 2640 lambda''^2 lambda''' - 253098 lambda^5 lambda' lambda''
         + 31554 lambda^3 lambda' lambda'' R - 285876 lambda^3 lambda' lambda'' c
         - 133248 lambda^2 lambda' lambda''^2 + 89208 lambda lambda'^3 lambda''
         + 192 lambda lambda' lambda'' R^2 - 4626 lambda lambda' lambda'' R c
         + 39366 lambda lambda' lambda'' c^2 - 400 lambda' lambda''^2 R
         + 10800 lambda' lambda''^2 c - 702756 lambda^8 lambda' + 10368 lambda^6 lambda' R
         + 506412 lambda^6 lambda' c + 528174 lambda^4 lambda'^3 - 1863 lambda^4 lambda' R^2
         + 36612 lambda^4 lambda' R c - 323676 lambda^4 lambda' c^2 - 13572 lambda^2 lambda'^3 R
         + 38988 lambda^2 lambda'^3 c - 9 lambda^2 lambda' R^3 + 243 lambda^2 lambda' R^2 c
         - 3564 lambda^2 lambda' R c^2 + 30132 lambda^2 lambda' c^3 + 29808 lambda'^5
         - 126 lambda'^3 R^2 + 1728 lambda'^3 R c - 1458 lambda'^3 c^2",
    ),
    // Theorem 2
    ("thm2-case1", "R - 12c"),
    ("PF3", "(lambda + mu)^2 - 2c + 1/6 R"),
    ("PF6", "(lambda - mu) lambda'' - 3 lambda'^2 - (lambda mu + c)(lambda - mu)^2"),
    ("PF7", "(4 lambda + 2 mu) lambda'' - 3 lambda'^2 + (3 lambda^2 + 2 lambda mu - c)(4 lambda + 2 mu)^2"),
    ("PF8", "3 (lambda + mu) lambda'^2 + (4 lambda + 2 mu)(lambda + mu)(lambda - mu)(4 lambda^2 + lambda mu - c)"),
    ("PF9", "lambda'^2 + 1/3 (4 lambda + 2 mu)(lambda - mu)(4 lambda^2 + lambda mu - c)"),
    ("PF11", "lambda'^2 - (4 lambda + 2 mu)(lambda - mu)(2 mu^2 + 3 lambda mu - c)"),
    ("PF12", "2 lambda^2 + 5 lambda mu + 3 mu^2 - 2c"),
    ("PF13", "2 (R - 12c) lambda^2 + 3 R^2 - 48 R c + 192 c^2"),
    ("R6", "6 beta^2 - 12 lambda alpha beta + (6 lambda^2 + R - 12 c) alpha^2 + 6 lambda^2 + R - 6c"),
    (
        "R8",
        "6 beta^3 - 18 lambda alpha beta^2 + (18 lambda^2 + 12 c - R) alpha^2 beta + 6 (lambda^2 + c) beta
         + (3 R - 6 lambda^2 - 36 c) lambda alpha^3 + (3 R - 6 lambda^2 - 42 c) lambda alpha",
    ),
    (
        "R9",
        "18 beta^4 - 72 alpha beta^3 lambda + (108 lambda^2 - 9 R + 108 c) alpha^2 beta^2
         + (12 lambda^2 + 24 c) beta^2 + (24 R - 72 lambda^2 - 288 c) alpha^3 beta lambda
         + (11 R - 24 lambda^2 - 180 c) alpha beta lambda + (18 lambda^2 - 3 R + 36 c) lambda^2 alpha^4
         + (R^2 - 24 R c + 144 c^2) alpha^4 + (12 lambda^2 + 24 c) alpha^2 lambda^2
         + (R^2 - 27 R c + 180 c^2) alpha^2 + (3 R - 6 lambda^2 - 36 c) lambda^2 + 6 c^2",
    ),
    ("S1", "(R - 12 c) ((2 alpha^2 + 1) beta - 4 alpha^3 lambda - 4 alpha lambda)"),
    (
        "S2",
        "6 (alpha^2 + 1)(4 alpha^4 + 12 alpha^2 + 1) lambda^2 + (4 alpha^6 + 8 alpha^4 + 5 alpha^2 + 1) R
         - (48 alpha^6 + 72 alpha^4 + 36 alpha^2 + 6) c",
    ),
    (
        "S3",
        "(R - 12 c) ((12 alpha^2 + 22) alpha beta lambda + (12 lambda^2 + 6 R - 72 c) alpha^4
         + (26 lambda^2 + 7 R - 68 c) alpha^2 + (14 lambda^2 + R - 8 c))",
    ),
    (
        "S4",
        "2 (alpha^2 + 1)(36 alpha^4 + 64 alpha^2 + 7) lambda^2 + (12 alpha^6 + 20 alpha^4 + 9 alpha^2 + 1) R
         - (144 alpha^6 + 208 alpha^4 + 84 alpha^2 + 8) c",
    ),
    ("S5", "(32 R - 504 c) alpha^6 + (20 R - 420 c) alpha^4 - (14 R - 30 c) alpha^2 - (2 R - 9 c)"),
    ("G8", "T^2 - T' + 3 lambda^2 - 3c + R"),
    (
        "G12",
        "(T^3 - 11 lambda^2 T + 7 c T + T'' - 3 T T' + 12 lambda lambda')^2
         + 36 (K^2 - 3 c lambda K + 3 c^2 lambda^2 - 5 c^3 + 1/2 c^2 R)",
    ),
    (
        "G18",
        "36 K^2 T + (162 T lambda c + 324 lambda^2 lambda' - 18 R T lambda - 252 T lambda^3
         - 54 lambda' c) K + 27 R T lambda^2 c + 3 T^5 T' - 3 T^4 T'' - 22 T^4 lambda lambda'
         - 12 T^3 T'^2 - 44 T^3 T' lambda^2 + 28 T^3 T' c + T^3 T''' + 12 T^3 lambda lambda''
         + 12 T^3 lambda'^2 + 12 T^2 T' T'' + 102 T^2 T' lambda lambda' + 33 T^2 T'' lambda^2
         - 21 T^2 T'' c + 242 T^2 lambda^3 lambda' - 154 T^2 lambda lambda' c + 9 T T'^3
         + 66 T T'^2 lambda^2 - 42 T T'^2 c - 3 T T' T''' + 121 T T' lambda^4
         - 154 T T' lambda^2 c - 36 T T' lambda lambda'' - 36 T T' lambda'^2 + 49 T T' c^2
         - 3 T T''^2 - 58 T T'' lambda lambda' - 11 T T''' lambda^2 + 7 T T''' c
         + 378 T lambda^4 c - 132 T lambda^3 lambda'' - 396 T lambda^2 lambda'^2
         - 324 T lambda^2 c^2 + 84 T lambda lambda'' c + 84 T lambda'^2 c - 3 T'^2 T''
         - 36 T'^2 lambda lambda' - 11 T' T'' lambda^2 + 7 T' T'' c - 132 T' lambda^3 lambda'
         + 84 T' lambda lambda' c + T'' T''' + 12 T'' lambda lambda'' + 12 T'' lambda'^2
         + 12 T''' lambda lambda' - 486 lambda^3 lambda' c + 144 lambda^2 lambda' lambda''
         + 144 lambda lambda'^3 + 108 lambda lambda' c^2",
    ),
    ("d1", "18 R T lambda + 252 T lambda^3 - 270 T lambda c - 324 lambda^2 lambda' + 54 lambda' c"),
    (
        "d2",
        "- 27 R T lambda^2 c + 18 R T c^2 + T^7 - 9 T^5 T' - 22 T^5 lambda^2 + 14 T^5 c
         + 5 T^4 T'' + 46 T^4 lambda lambda' + 21 T^3 T'^2 + 110 T^3 T' lambda^2 - 70 T^3 T' c
         - T^3 T''' + 121 T^3 lambda^4 - 154 T^3 lambda^2 c - 12 T^3 lambda lambda''
         - 12 T^3 lambda'^2 + 49 T^3 c^2 - 18 T^2 T' T'' - 174 T^2 T' lambda lambda'
         - 55 T^2 T'' lambda^2 + 35 T^2 T'' c - 506 T^2 lambda^3 lambda'
         + 322 T^2 lambda lambda' c - 9 T T'^3 - 66 T T'^2 lambda^2 + 42 T T'^2 c + 3 T T' T'''
         - 121 T T' lambda^4 + 154 T T' lambda^2 c + 36 T T' lambda lambda'' + 36 T T' lambda'^2
         - 49 T T' c^2 + 4 T T''^2 + 82 T T'' lambda lambda' + 11 T T''' lambda^2 - 7 T T''' c
         - 378 T lambda^4 c + 132 T lambda^3 lambda'' + 540 T lambda^2 lambda'^2
         + 432 T lambda^2 c^2 - 84 T lambda lambda'' c - 84 T lambda'^2 c - 180 T c^3 + 3 T'^2 T''
         + 36 T'^2 lambda lambda' + 11 T' T'' lambda^2 - 7 T' T'' c + 132 T' lambda^3 lambda'
         - 84 T' lambda lambda' c - T'' T''' - 12 T'' lambda lambda'' - 12 T'' lambda'^2
         - 12 T''' lambda lambda' + 486 lambda^3 lambda' c - 144 lambda^2 lambda' lambda''
         - 144 lambda lambda'^3 - 108 lambda lambda' c^2",
    ),
];

/// Names of every fixture, in declaration order.
pub fn names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}

pub fn get(name: &str) -> Option<MultiPoly> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, s)| {
        s.parse()
            .unwrap_or_else(|e| panic!("fixture `{name}` does not parse: {e}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lemma22::homogeneous_weight;

    #[test]
    fn every_fixture_parses_and_is_nonzero() {
        for n in names() {
            assert!(!get(n).unwrap().is_zero(), "{n}");
        }
        assert!(get("nope").is_none());
    }

    #[test]
    fn printed_term_counts() {
        assert_eq!(get("b1").unwrap().len(), 38);
        assert_eq!(get("b2").unwrap().len(), 50);
    }

    /// The n=3 and n=4 chains are homogeneous under the curvature grading, so
    /// a dropped prime or exponent in transcription shows up here.
    #[test]
    fn fixtures_are_weighted_homogeneous() {
        let expected = [
            ("n31", 3),
            ("n32", 4),
            ("n33", 3),
            ("n34", 4),
            ("p1", 4),
            ("p2", 5),
            ("n36", 4),
            ("n37", 4),
            ("n38", 2),
            ("LM1", 4),
            ("LM2", 5),
            ("LM3", 4),
            ("a1", 4),
            ("a2", 5),
            ("a3", 6),
            ("b1", 9),
            ("b2", 10),
            ("Tn312", 6),
            ("PF13", 4),
            ("G8", 2),
            ("d1", 4),
            ("d2", 7),
        ];
        for (name, w) in expected {
            assert_eq!(homogeneous_weight(&get(name).unwrap()), Some(w), "{name}");
        }
    }
}

//! Frozen Table 2 data: the divisor classes R1..R6 and R6' underlying the
//! two built-in collections, and the collections themselves.

use crate::collections::BlockedCollection;
use crate::picard::{DivClass, TorsionClass};

const fn div(d: i64, a0: i64, b0: i64, c0: i64, t: [u8; 6]) -> DivClass {
    DivClass {
        d,
        a0,
        b0,
        c0,
        t: TorsionClass(t),
    }
}

pub const R1: DivClass = div(3, 0, 0, 0, [0, 0, 0, 0, 0, 0]);
pub const R2: DivClass = div(3, 1, 1, 1, [1, 0, 1, 0, 1, 0]);
pub const R3: DivClass = div(2, 1, 0, 0, [1, 1, 0, 1, 0, 0]);
pub const R4: DivClass = div(2, 0, 0, 1, [0, 1, 0, 0, 1, 1]);
pub const R5: DivClass = div(2, 0, 1, 0, [0, 0, 1, 1, 0, 1]);
pub const R6: DivClass = DivClass::ZERO;
pub const R6_PRIME: DivClass = div(0, 0, 0, 0, [1, 0, 1, 0, 1, 0]);

/// `R1..R6` by index 1..=6; index 7 is `R6'`.
pub fn r_class(i: usize) -> DivClass {
    match i {
        1 => R1,
        2 => R2,
        3 => R3,
        4 => R4,
        5 => R5,
        6 => R6,
        7 => R6_PRIME,
        _ => panic!("no builtin class R{i}"),
    }
}

/// Block sizes shared by both built-in collections.
pub const BLOCK_SIZES: [usize; 3] = [2, 3, 1];

/// The collection Upsilon = (L1..L6), blocks 2+3+1.
pub fn upsilon() -> BlockedCollection {
    BlockedCollection::new(vec![R1, R2, R3, R4, R5, R6], BLOCK_SIZES.to_vec()).unwrap()
}

/// The collection Upsilon' = (L1..L5, L6'), blocks 2+3+1.
pub fn upsilon_prime() -> BlockedCollection {
    BlockedCollection::new(vec![R1, R2, R3, R4, R5, R6_PRIME], BLOCK_SIZES.to_vec()).unwrap()
}

/// Resolve a built-in dataset name from the CLI.
pub fn by_name(name: &str) -> Option<BlockedCollection> {
    match name {
        "table2-upsilon" => Some(upsilon()),
        "table2-upsilon-prime" => Some(upsilon_prime()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::CurveId;

    #[test]
    fn r6_prime_is_two_torsion() {
        assert_eq!(-R6_PRIME, R6_PRIME);
        // R6' = A0+B0+C0+A3+B3+C3 - K
        let sum = CurveId::ELLIPTIC
            .iter()
            .fold(DivClass::ZERO, |s, &e| s + crate::picard::generator(e));
        assert_eq!(sum - crate::picard::canonical(), R6_PRIME);
    }

    #[test]
    fn r_classes_satisfy_congruence() {
        for i in 1..=7 {
            let r = r_class(i);
            assert_eq!((r.d + r.a0 + r.b0 + r.c0).rem_euclid(3), 0);
        }
    }

    #[test]
    fn generator_expressions() {
        use crate::picard::generator as g;
        use CurveId::*;
        assert_eq!(R1, g(A3) + g(B0) + g(C0) + g(A1) - g(A2));
        assert_eq!(R2, g(A0) + g(B3) + g(C3) + g(A2) - g(A1));
        assert_eq!(R3, g(C2) + g(A2) - g(C0) - g(A3));
        assert_eq!(R3, g(C1) + g(A1) - g(C3) - g(A0));
        assert_eq!(R4, g(B2) + g(C2) - g(B0) - g(C3));
        assert_eq!(R5, g(A2) + g(B2) - g(A0) - g(B3));
        assert_eq!(R1 + R2, R3 + R4 + R5);
    }

    #[test]
    fn table2_derived_columns() {
        // a3, b3, c3 columns of Table 2 as (deg, bit1, bit2)
        let expected: [[(i64, u8, u8); 3]; 7] = [
            [(1, 1, 0), (1, 1, 0), (1, 1, 0)],
            [(0, 0, 0), (0, 0, 0), (0, 0, 0)],
            [(1, 1, 1), (0, 0, 1), (0, 0, 0)],
            [(0, 0, 1), (0, 0, 0), (1, 1, 1)],
            [(0, 0, 0), (1, 1, 1), (0, 0, 1)],
            [(0, 0, 0), (0, 0, 0), (0, 0, 0)],
            [(0, 1, 0), (0, 1, 0), (0, 1, 0)],
        ];
        for i in 1..=7 {
            let r = r_class(i);
            for (j, e) in [CurveId::A3, CurveId::B3, CurveId::C3].iter().enumerate() {
                let got = r.restrict(*e);
                let (deg, b1, b2) = expected[i - 1][j];
                assert_eq!((got.deg, got.tor[0], got.tor[1]), (deg, b1, b2), "R{i} at {e}");
            }
        }
    }
}

//! Riemann-Roch Euler characteristics and numerical exceptionality.

use serde::Serialize;

use crate::picard::{canonical, DivClass};

/// Full Riemann-Roch on X: `chi(D) = chi(O_X) + D(D - K)/2` with
/// `chi(O_X) = 1`. Depends only on the free part of `D`.
pub fn chi(d: DivClass) -> i64 {
    let k = canonical();
    let num = d.intersect(d) - d.intersect(k);
    debug_assert_eq!(num % 2, 0);
    1 + num / 2
}

/// Euler pairing `chi(L_i, L_j) = sum (-1)^k dim Ext^k(L_i, L_j)` for line
/// bundles `L = O(R)`: equals `chi(R_j - R_i)`.
pub fn euler_pair(r_i: DivClass, r_j: DivClass) -> i64 {
    chi(r_j - r_i)
}

/// 6 x 6 matrix of Euler pairings, entry `(i, j) = chi(L_i, L_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerMatrix(pub [[i64; 6]; 6]);

impl EulerMatrix {
    pub fn for_collection(rs: &[DivClass; 6]) -> EulerMatrix {
        let mut m = [[0i64; 6]; 6];
        for i in 0..6 {
            for j in 0..6 {
                m[i][j] = euler_pair(rs[i], rs[j]);
            }
        }
        EulerMatrix(m)
    }

    pub fn is_upper_triangular_unit_diagonal(&self) -> bool {
        (0..6).all(|i| self.0[i][i] == 1 && (0..i).all(|j| self.0[i][j] == 0))
    }

    /// Exact integer determinant (Bareiss fraction-free elimination).
    pub fn det(&self) -> i64 {
        let mut m = self.0.map(|r| r.map(i128::from));
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..6 {
            if m[k][k] == 0 {
                let Some(p) = (k + 1..6).find(|&r| m[r][k] != 0) else {
                    return 0;
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..6 {
                for j in k + 1..6 {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        (sign * m[5][5]) as i64
    }

    pub fn to_csv(&self) -> String {
        self.0
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("\n")
            + "\n"
    }
}

/// True iff the sequence is numerically exceptional: unit diagonal and
/// vanishing Euler pairing in the backward direction. Returns the full
/// matrix either way.
pub fn is_numerically_exceptional(rs: &[DivClass; 6]) -> (bool, EulerMatrix) {
    let m = EulerMatrix::for_collection(rs);
    (m.is_upper_triangular_unit_diagonal(), m)
}

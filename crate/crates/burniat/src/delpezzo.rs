//! Exact model of `Pic Y` for the degree-6 del Pezzo surface `Y` (the
//! plane blown up in three points), a toric lattice-point oracle for
//! `h^0`, the 1+3+2 block collection, and the chi lift identity linking
//! `Y` to `X`.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::numerics::chi;
use crate::picard::{DivClass, TorsionClass};

/// Class `nH - aA0 - bB0 - cC0` in the blown-up-plane basis of `Pic Y`.
/// Intersection form `n1 n2 - a1 a2 - b1 b2 - c1 c2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DPClass {
    pub n: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

pub const fn dp(n: i64, a: i64, b: i64, c: i64) -> DPClass {
    DPClass { n, a, b, c }
}

pub const K_Y: DPClass = dp(-3, -1, -1, -1);

/// The three conic pencils (fibres of the maps to P^1).
pub const F1: DPClass = dp(1, 0, 1, 0);
pub const F2: DPClass = dp(1, 0, 0, 1);
pub const F3: DPClass = dp(1, 1, 0, 0);
/// The two hyperplane pullbacks under the contractions to P^2.
pub const H1: DPClass = dp(1, 0, 0, 0);
pub const H2: DPClass = dp(2, 1, 1, 1);

impl DPClass {
    pub const ZERO: DPClass = dp(0, 0, 0, 0);

    pub fn intersect(self, o: DPClass) -> i64 {
        self.n * o.n - self.a * o.a - self.b * o.b - self.c * o.c
    }
}

impl Add for DPClass {
    type Output = DPClass;
    fn add(self, o: DPClass) -> DPClass {
        dp(self.n + o.n, self.a + o.a, self.b + o.b, self.c + o.c)
    }
}

impl Sub for DPClass {
    type Output = DPClass;
    fn sub(self, o: DPClass) -> DPClass {
        self + (-o)
    }
}

impl Neg for DPClass {
    type Output = DPClass;
    fn neg(self) -> DPClass {
        dp(-self.n, -self.a, -self.b, -self.c)
    }
}

impl fmt::Display for DPClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}H; {}, {}, {})", self.n, self.a, self.b, self.c)
    }
}

/// Riemann-Roch on Y: `chi(D) = 1 + D(D - K_Y)/2`.
pub fn chi_y(d: DPClass) -> i64 {
    let num = d.intersect(d - K_Y);
    debug_assert_eq!(num % 2, 0);
    1 + num / 2
}

/// Toric model of the hexagon: six fan rays with the boundary curve
/// matched to each ray, frozen so that the toric Gram matrix reproduces
/// the hexagon adjacency.
#[derive(Debug, Clone, Copy)]
pub struct ToricModel {
    pub rays: [(i64, i64); 6],
    pub labels: [&'static str; 6],
    pub classes: [DPClass; 6],
}

pub const TORIC: ToricModel = ToricModel {
    rays: [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)],
    labels: ["A0", "C3", "B0", "A3", "C0", "B3"],
    classes: [
        dp(0, -1, 0, 0), // A0: exceptional curve
        dp(1, 1, 1, 0),  // C3: line through two points
        dp(0, 0, -1, 0), // B0
        dp(1, 0, 1, 1),  // A3
        dp(0, 0, 0, -1), // C0
        dp(1, 1, 0, 1),  // B3
    ],
};

impl ToricModel {
    /// Check the frozen data: smooth complete fan, boundary Gram matrix
    /// equal to the hexagon adjacency, and boundary sum `-K_Y`.
    pub fn validate(&self) -> Result<(), String> {
        for i in 0..6 {
            let (x1, y1) = self.rays[i];
            let (x2, y2) = self.rays[(i + 1) % 6];
            if x1 * y2 - y1 * x2 != 1 {
                return Err(format!("rays {i} and {} are not a positive basis", (i + 1) % 6));
            }
        }
        for i in 0..6 {
            for j in 0..6 {
                let expected = if i == j {
                    -1
                } else if (i + 1) % 6 == j || (j + 1) % 6 == i {
                    1
                } else {
                    0
                };
                if self.classes[i].intersect(self.classes[j]) != expected {
                    return Err(format!(
                        "Gram mismatch at ({}, {})",
                        self.labels[i], self.labels[j]
                    ));
                }
            }
        }
        let sum = self.classes.iter().fold(DPClass::ZERO, |s, &c| s + c);
        if sum != -K_Y {
            return Err("boundary sum is not -K_Y".into());
        }
        Ok(())
    }

    /// One integer solution of `D = sum a_i . boundary_i`; any solution
    /// differs by the two toric relations and gives a translated polytope.
    pub fn boundary_coeffs(&self, d: DPClass) -> [i64; 6] {
        let coeffs = [d.n - d.a - d.c, d.n - d.c, d.n - d.b, d.c, 0, 0];
        debug_assert_eq!(
            coeffs
                .iter()
                .zip(self.classes)
                .fold(DPClass::ZERO, |s, (&m, cl)| {
                    s + dp(m * cl.n, m * cl.a, m * cl.b, m * cl.c)
                }),
            d
        );
        coeffs
    }

    /// Lattice points of `{m : <m, v_i> >= -a_i for all rays}`.
    pub fn lattice_points(&self, a: [i64; 6]) -> i64 {
        // rays 0/3 bound x, rays 2/5 bound y; rays 1/4 are the diagonals
        let (xlo, xhi) = (-a[0], a[3]);
        let (ylo, yhi) = (-a[2], a[5]);
        let mut count = 0;
        for x in xlo..=xhi {
            for y in ylo..=yhi {
                if x + y >= -a[1] && x + y <= a[4] {
                    count += 1;
                }
            }
        }
        count
    }
}

/// Section count `h^0(Y, O(D))` by toric lattice-point counting. Exact for
/// every class; an empty polytope gives 0.
pub fn h0_y(d: DPClass) -> i64 {
    TORIC.lattice_points(TORIC.boundary_coeffs(d))
}

/// `(h0, h1, h2)`: h2 by Serre duality, h1 closed through Riemann-Roch.
/// A negative h1 would mean the model is broken, so it panics.
pub fn h_all_y(d: DPClass) -> (i64, i64, i64) {
    let h0 = h0_y(d);
    let h2 = h0_y(K_Y - d);
    let h1 = h0 + h2 - chi_y(d);
    assert!(h1 >= 0, "negative h1 for {d}; model bug");
    (h0, h1, h2)
}

/// The Karpov-Nogin collection (O, f1, f2, f3, h1, h2), blocks 1+3+2.
pub const SIGMA: [DPClass; 6] = [DPClass::ZERO, F1, F2, F3, H1, H2];
pub const SIGMA_BLOCKS: [usize; 3] = [1, 3, 2];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaReport {
    /// `hom[i][j] = h^0(D_j - D_i)`.
    pub hom: [[i64; 6]; 6],
    /// All backward `(h0, h1, h2)` vanish and the diagonal is `(1,0,0)`.
    pub exceptional: bool,
    /// All forward `h1` and `h2` vanish.
    pub strong: bool,
    /// Within each block both orders are fully orthogonal.
    pub blocks_orthogonal: bool,
    /// The Hom table matches the frozen (2,2,2 / 3,3 / six 1s) pattern.
    pub hom_table_ok: bool,
}

impl SigmaReport {
    pub fn ok(&self) -> bool {
        self.exceptional && self.strong && self.blocks_orthogonal && self.hom_table_ok
    }
}

const SIGMA_HOM: [[i64; 6]; 6] = [
    [1, 2, 2, 2, 3, 3],
    [0, 1, 0, 0, 1, 1],
    [0, 0, 1, 0, 1, 1],
    [0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
];

pub fn verify_sigma() -> SigmaReport {
    verify_dp_collection(&SIGMA, &SIGMA_BLOCKS)
}

/// Full check of a collection of line bundles on Y with block structure.
pub fn verify_dp_collection(classes: &[DPClass; 6], blocks: &[usize]) -> SigmaReport {
    let mut hom = [[0i64; 6]; 6];
    let mut all = [[(0i64, 0i64, 0i64); 6]; 6];
    for i in 0..6 {
        for j in 0..6 {
            all[i][j] = h_all_y(classes[j] - classes[i]);
            hom[i][j] = all[i][j].0;
        }
    }
    let exceptional = (0..6).all(|i| {
        all[i][i] == (1, 0, 0) && (0..i).all(|j| all[i][j] == (0, 0, 0))
    });
    let strong = (0..6).all(|i| (i..6).all(|j| all[i][j].1 == 0 && all[i][j].2 == 0));
    let mut blocks_orthogonal = true;
    let mut start = 0;
    for &size in blocks {
        for i in start..start + size {
            for j in start..start + size {
                if i != j && all[i][j] != (0, 0, 0) {
                    blocks_orthogonal = false;
                }
            }
        }
        start += size;
    }
    let hom_table_ok = hom == SIGMA_HOM;
    SigmaReport {
        hom,
        exceptional,
        strong,
        blocks_orthogonal,
        hom_table_ok,
    }
}

/// The X-class with image `dbar` in `Pic Y = Pic X / Tors` and torsion
/// part `tau`.
pub fn lift(dbar: DPClass, tau: TorsionClass) -> DivClass {
    DivClass {
        d: 3 * dbar.n - dbar.a - dbar.b - dbar.c,
        a0: dbar.a,
        b0: dbar.b,
        c0: dbar.c,
        t: tau,
    }
}

/// The lift identity: `chi_X` of any lift of `Dbar` equals `chi_Y(-Dbar)`.
pub fn lift_chi_check(dbar: DPClass, tau: TorsionClass) -> bool {
    chi(lift(dbar, tau)) == chi_y(-dbar)
}

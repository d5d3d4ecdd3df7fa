//! The centrally extended Lie algebra spanned by `P`, `E` and `M`.
//!
//! Structure constants live in a dense `3 x 3 x 3` table so that the Jacobi
//! checker works on any table, including deliberately corrupted ones. The
//! second half of the module does physical-dimension bookkeeping for the
//! coordinates and the dual pairing.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

/// Number of basis vectors of the extended algebra.
pub const DIM: usize = 3;

/// Basis indices, in storage order.
pub const P: usize = 0;
pub const E: usize = 1;
pub const M: usize = 2;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("structure constants are not antisymmetric: c[{i}][{j}][{k}] = {forward}, c[{j}][{i}][{k}] = {backward}")]
    NotAntisymmetric {
        i: usize,
        j: usize,
        k: usize,
        forward: f64,
        backward: f64,
    },
    #[error("unknown dimension symbol `{0}`")]
    UnknownSymbol(String),
}

/// An element `c_p P + c_e E + c_m M` of the extended algebra.
///
/// Used as a group logarithm, `c_p` is the spatial coordinate (L), `c_e` the
/// time coordinate (T) and `c_m` the central coordinate (L^2 T^-1).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AlgebraElement {
    pub c_p: f64,
    pub c_e: f64,
    pub c_m: f64,
}

impl AlgebraElement {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0);
    pub const P: Self = Self::new(1.0, 0.0, 0.0);
    pub const E: Self = Self::new(0.0, 1.0, 0.0);
    pub const M: Self = Self::new(0.0, 0.0, 1.0);

    pub const fn new(c_p: f64, c_e: f64, c_m: f64) -> Self {
        Self { c_p, c_e, c_m }
    }

    pub fn from_coords(c: [f64; DIM]) -> Self {
        Self::new(c[P], c[E], c[M])
    }

    pub fn coords(&self) -> [f64; DIM] {
        [self.c_p, self.c_e, self.c_m]
    }

    pub fn is_finite(&self) -> bool {
        self.coords().iter().all(|c| c.is_finite())
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        self.coords().iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(s * self.c_p, s * self.c_e, s * self.c_m)
    }
}

impl Add for AlgebraElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.c_p + rhs.c_p, self.c_e + rhs.c_e, self.c_m + rhs.c_m)
    }
}

impl Sub for AlgebraElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.c_p - rhs.c_p, self.c_e - rhs.c_e, self.c_m - rhs.c_m)
    }
}

impl Neg for AlgebraElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.c_p, -self.c_e, -self.c_m)
    }
}

impl Mul<AlgebraElement> for f64 {
    type Output = AlgebraElement;
    fn mul(self, rhs: AlgebraElement) -> AlgebraElement {
        rhs.scale(self)
    }
}

/// Structure constants: `[e_i, e_j] = sum_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct BracketTable {
    constants: [[[f64; DIM]; DIM]; DIM],
}

impl BracketTable {
    /// The abelian table.
    pub fn zero() -> Self {
        Self {
            constants: [[[0.0; DIM]; DIM]; DIM],
        }
    }

    /// The Aristotle table: the only nontrivial bracket is `[P, E] = g M`.
    pub fn aristotle(g: f64) -> Self {
        Self::zero().with_bracket(P, E, M, g)
    }

    /// Raw constants, unchecked. Use [`BracketTable::check_antisymmetry`]
    /// before trusting the result.
    pub fn from_constants(constants: [[[f64; DIM]; DIM]; DIM]) -> Self {
        Self { constants }
    }

    /// Adds `value` to the `e_k` component of `[e_i, e_j]`, and the negated
    /// value to `[e_j, e_i]`, so antisymmetry is preserved.
    pub fn with_bracket(mut self, i: usize, j: usize, k: usize, value: f64) -> Self {
        self.constants[i][j][k] += value;
        self.constants[j][i][k] -= value;
        self
    }

    pub fn dimension(&self) -> usize {
        DIM
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> f64 {
        self.constants[i][j][k]
    }

    pub fn check_antisymmetry(&self) -> Result<(), AlgebraError> {
        for i in 0..DIM {
            for j in i..DIM {
                for k in 0..DIM {
                    let forward = self.constants[i][j][k];
                    let backward = self.constants[j][i][k];
                    if forward != -backward {
                        return Err(AlgebraError::NotAntisymmetric {
                            i,
                            j,
                            k,
                            forward,
                            backward,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn bracket(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let (x, y) = (a.coords(), b.coords());
        let mut out = [0.0; DIM];
        for (xi, row) in x.iter().zip(&self.constants) {
            if *xi == 0.0 {
                continue;
            }
            for (yj, column) in y.iter().zip(row) {
                if *yj == 0.0 {
                    continue;
                }
                let w = xi * yj;
                for (o, c) in out.iter_mut().zip(column) {
                    *o += w * c;
                }
            }
        }
        AlgebraElement::from_coords(out)
    }

    /// `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
    pub fn jacobi_sum(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
        z: &AlgebraElement,
    ) -> AlgebraElement {
        self.bracket(&self.bracket(x, y), z)
            + self.bracket(&self.bracket(y, z), x)
            + self.bracket(&self.bracket(z, x), y)
    }

    /// Largest norm of the cyclic Jacobi sum over all basis triples.
    /// Zero means the table defines a Lie algebra.
    pub fn jacobi_violation(&self) -> Result<f64, AlgebraError> {
        self.check_antisymmetry()?;
        let basis = [AlgebraElement::P, AlgebraElement::E, AlgebraElement::M];
        let mut worst = 0.0_f64;
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    worst = worst.max(self.jacobi_sum(x, y, z).norm());
                }
            }
        }
        Ok(worst)
    }
}

/// Bilinear bracket defined by `table`.
pub fn bracket(table: &BracketTable, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    table.bracket(a, b)
}

pub fn jacobi_violation(table: &BracketTable) -> Result<f64, AlgebraError> {
    table.jacobi_violation()
}

/// Exponents of `M^mass L^length T^time`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Dimension {
    pub mass: i32,
    pub length: i32,
    pub time: i32,
}

impl Dimension {
    pub const DIMENSIONLESS: Self = Self::new(0, 0, 0);
    pub const MASS: Self = Self::new(1, 0, 0);
    pub const LENGTH: Self = Self::new(0, 1, 0);
    pub const TIME: Self = Self::new(0, 0, 1);
    pub const ACTION: Self = Self::new(1, 2, -1);

    pub const fn new(mass: i32, length: i32, time: i32) -> Self {
        Self { mass, length, time }
    }

    pub fn recip(self) -> Self {
        Self::new(-self.mass, -self.length, -self.time)
    }

    pub fn powi(self, n: i32) -> Self {
        Self::new(self.mass * n, self.length * n, self.time * n)
    }
}

impl Mul for Dimension {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.mass + rhs.mass,
            self.length + rhs.length,
            self.time + rhs.time,
        )
    }
}

impl Div for Dimension {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        Self::new(
            self.mass - rhs.mass,
            self.length - rhs.length,
            self.time - rhs.time,
        )
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::DIMENSIONLESS {
            return f.write_str("1");
        }
        let mut first = true;
        for (sym, exp) in [("M", self.mass), ("L", self.length), ("T", self.time)] {
            if exp == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if exp == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Named quantities with a fixed physical dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Xi,
    T,
    X,
    Mass,
    Energy,
    Momentum,
    Gravity,
    Action,
}

impl Symbol {
    pub const ALL: [Symbol; 8] = [
        Symbol::Xi,
        Symbol::T,
        Symbol::X,
        Symbol::Mass,
        Symbol::Energy,
        Symbol::Momentum,
        Symbol::Gravity,
        Symbol::Action,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Symbol::Xi => "xi",
            Symbol::T => "t",
            Symbol::X => "x",
            Symbol::Mass => "m",
            Symbol::Energy => "e",
            Symbol::Momentum => "p",
            Symbol::Gravity => "g",
            Symbol::Action => "action",
        }
    }

    pub fn dimension(self) -> Dimension {
        match self {
            Symbol::Xi => Dimension::new(0, 2, -1),
            Symbol::T => Dimension::TIME,
            Symbol::X => Dimension::LENGTH,
            Symbol::Mass => Dimension::MASS,
            Symbol::Energy => Dimension::new(1, 2, -2),
            Symbol::Momentum => Dimension::new(1, 1, -1),
            Symbol::Gravity => Dimension::new(0, 1, -2),
            Symbol::Action => Dimension::ACTION,
        }
    }
}

impl FromStr for Symbol {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Symbol::ALL
            .into_iter()
            .find(|sym| sym.name() == s)
            .ok_or_else(|| AlgebraError::UnknownSymbol(s.to_string()))
    }
}

pub fn dimension_of(symbol: &str) -> Result<Dimension, AlgebraError> {
    symbol.parse::<Symbol>().map(Symbol::dimension)
}

/// A dimension assignment for the coordinates, their duals and `g`.
///
/// The generators are taken to carry the reciprocal dimension of their
/// coordinate, so that `x P + t E + xi M` is dimensionless.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionAssignment {
    pub xi: Dimension,
    pub t: Dimension,
    pub x: Dimension,
    pub m: Dimension,
    pub e: Dimension,
    pub p: Dimension,
    pub g: Dimension,
}

impl Default for DimensionAssignment {
    fn default() -> Self {
        Self {
            xi: Symbol::Xi.dimension(),
            t: Symbol::T.dimension(),
            x: Symbol::X.dimension(),
            m: Symbol::Mass.dimension(),
            e: Symbol::Energy.dimension(),
            p: Symbol::Momentum.dimension(),
            g: Symbol::Gravity.dimension(),
        }
    }
}

impl DimensionAssignment {
    /// The three pairing terms `m xi`, `e t`, `p x`.
    pub fn pairing_terms(&self) -> [Dimension; 3] {
        [self.m * self.xi, self.e * self.t, self.p * self.x]
    }

    pub fn pairing_is_action(&self) -> bool {
        self.pairing_terms().iter().all(|d| *d == Dimension::ACTION)
    }

    /// `[P, E] = g M` balances when `dim(P) dim(E) = dim(g) dim(M)`.
    pub fn bracket_is_balanced(&self) -> bool {
        let (gen_p, gen_e, gen_m) = (self.x.recip(), self.t.recip(), self.xi.recip());
        gen_p * gen_e == self.g * gen_m
    }

    pub fn check(&self) -> bool {
        self.pairing_is_action() && self.bracket_is_balanced()
    }
}

/// Dimensional consistency of the default assignment.
pub fn pairing_dimension_check() -> bool {
    DimensionAssignment::default().check()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn elem() -> impl Strategy<Value = AlgebraElement> {
        (-10.0..10.0f64, -10.0..10.0f64, -10.0..10.0f64)
            .prop_map(|(a, b, c)| AlgebraElement::new(a, b, c))
    }

    #[test]
    fn p_e_bracket_is_g_m() {
        let t = BracketTable::aristotle(2.0);
        assert_eq!(
            bracket(&t, &AlgebraElement::P, &AlgebraElement::E),
            AlgebraElement::new(0.0, 0.0, 2.0)
        );
        assert_eq!(
            bracket(&t, &AlgebraElement::P, &AlgebraElement::P),
            AlgebraElement::ZERO
        );
    }

    #[test]
    fn bracket_expands_bilinearly() {
        let t = BracketTable::aristotle(2.0);
        let r = t.bracket(
            &AlgebraElement::new(1.0, 2.0, 0.0),
            &AlgebraElement::new(3.0, 4.0, 0.0),
        );
        assert_eq!(r, AlgebraElement::new(0.0, 0.0, -4.0));
    }

    #[test]
    fn jacobi_on_valid_and_corrupted_tables() {
        for g in [-2.0, -1.0, 1.0, 2.0, 9.81] {
            assert_eq!(jacobi_violation(&BracketTable::aristotle(g)).unwrap(), 0.0);
        }
        assert_eq!(jacobi_violation(&BracketTable::zero()).unwrap(), 0.0);

        let corrupted = BracketTable::aristotle(2.0).with_bracket(P, M, P, 1.0);
        let v = jacobi_violation(&corrupted).unwrap();
        assert!((v - 2.0).abs() <= 1e-12, "violation {v}");
        let cyc = corrupted.jacobi_sum(&AlgebraElement::P, &AlgebraElement::E, &AlgebraElement::M);
        assert_eq!(cyc, AlgebraElement::new(0.0, 0.0, -2.0));
    }

    #[test]
    fn asymmetric_table_is_rejected() {
        let mut raw = [[[0.0; DIM]; DIM]; DIM];
        raw[P][E][M] = 1.0;
        let err = jacobi_violation(&BracketTable::from_constants(raw)).unwrap_err();
        assert!(matches!(err, AlgebraError::NotAntisymmetric { i: 0, j: 1, k: 2, .. }));

        let mut diag = [[[0.0; DIM]; DIM]; DIM];
        diag[E][E][P] = 0.5;
        assert!(BracketTable::from_constants(diag).check_antisymmetry().is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension_of("xi").unwrap(), Dimension::new(0, 2, -1));
        assert_eq!(dimension_of("action").unwrap(), Dimension::new(1, 2, -1));
        assert_eq!(dimension_of("g").unwrap(), Dimension::new(0, 1, -2));
        assert_eq!(dimension_of("e").unwrap(), Dimension::new(1, 2, -2));
        assert_eq!(dimension_of("p").unwrap(), Dimension::new(1, 1, -1));
        assert!(matches!(dimension_of("v"), Err(AlgebraError::UnknownSymbol(_))));
        assert_eq!(Dimension::new(1, 2, -1).to_string(), "M L^2 T^-1");
        assert_eq!(Dimension::DIMENSIONLESS.to_string(), "1");
    }

    #[test]
    fn dimension_check_and_its_mutations() {
        assert!(pairing_dimension_check());

        let wrong_energy = DimensionAssignment {
            e: Dimension::MASS,
            ..Default::default()
        };
        assert!(!wrong_energy.check());

        let flat_g = DimensionAssignment {
            g: Dimension::DIMENSIONLESS,
            ..Default::default()
        };
        assert!(flat_g.pairing_is_action());
        assert!(!flat_g.bracket_is_balanced());
        assert!(!flat_g.check());
    }

    proptest! {
        #[test]
        fn antisymmetric(a in elem(), b in elem(), g in -10.0..10.0f64) {
            let t = BracketTable::aristotle(g);
            prop_assert_eq!(t.bracket(&a, &b), -t.bracket(&b, &a));
        }

        #[test]
        fn jacobi_holds(a in elem(), b in elem(), c in elem(), g in -10.0..10.0f64) {
            let t = BracketTable::aristotle(g);
            prop_assert_eq!(t.jacobi_sum(&a, &b, &c), AlgebraElement::ZERO);
        }

        #[test]
        fn bilinear(a in elem(), b in elem(), c in elem(), s in -10.0..10.0f64, g in -10.0..10.0f64) {
            let t = BracketTable::aristotle(g);
            let lhs = t.bracket(&(s * a + b), &c);
            let rhs = s * t.bracket(&a, &c) + t.bracket(&b, &c);
            let scale = (s.abs() * a.norm() + b.norm()) * c.norm() * g.abs().max(1.0);
            prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
        }
    }
}

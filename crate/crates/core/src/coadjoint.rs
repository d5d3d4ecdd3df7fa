//! Dual space, coadjoint orbit and the symplectic structure on it.
//!
//! A dual point `(m, e, p)` pairs with an algebra element through
//! `m dxi + e dt + p dx`. On an orbit with `m != 0` and `g != 0` the chart is
//! `(p, q)` with `q = -e / (m g)` and symplectic form `dp ^ dq`.
//!
//! Sign conventions: the Hamiltonian field of `f` satisfies `i_X sigma = df`,
//! so `X_f = (df/dq, -df/dp)` in `(p, q)` components, and the bracket is
//! `{f, h} = df/dp dh/dq - dh/dp df/dq`. Under these conventions the
//! comomentum is an anti-homomorphism: `{lambda(P), lambda(E)} = -lambda([P, E])`.

use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::algebra::AlgebraElement;
use crate::group::{BaseElement, Gravity};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrbitError {
    #[error("degenerate orbit (m = {m}, g = {g}): the orbit is a single point and has no (p, q) chart")]
    Degenerate { m: f64, g: f64 },
    #[error("orbit parameters must be finite (m = {m}, g = {g})")]
    NonFinite { m: f64, g: f64 },
    #[error("point has m = {found} but the orbit has m = {expected}")]
    MassMismatch { expected: f64, found: f64 },
}

/// A point `(m, e, p)` of the dual of the extended algebra.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CoadjointPoint {
    pub m: f64,
    pub e: f64,
    pub p: f64,
}

impl CoadjointPoint {
    pub const fn new(m: f64, e: f64, p: f64) -> Self {
        Self { m, e, p }
    }

    pub fn is_finite(&self) -> bool {
        self.m.is_finite() && self.e.is_finite() && self.p.is_finite()
    }
}

/// The orbit labelled by `m`, together with the constant `g`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitContext {
    m: f64,
    g: f64,
}

impl OrbitContext {
    pub fn new(m: f64, g: f64) -> Result<Self, OrbitError> {
        if !m.is_finite() || !g.is_finite() {
            return Err(OrbitError::NonFinite { m, g });
        }
        if m == 0.0 || g == 0.0 {
            return Err(OrbitError::Degenerate { m, g });
        }
        Ok(Self { m, g })
    }

    /// The orbit through `f`.
    pub fn through(f: &CoadjointPoint, g: Gravity) -> Result<Self, OrbitError> {
        Self::new(f.m, g.0)
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn gravity(&self) -> Gravity {
        Gravity(self.g)
    }

    /// `m g`, the momentum gained per unit time.
    pub fn mg(&self) -> f64 {
        self.m * self.g
    }
}

/// Chart coordinates on an orbit.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct OrbitPoint {
    pub p: f64,
    pub q: f64,
}

impl OrbitPoint {
    pub const fn new(p: f64, q: f64) -> Self {
        Self { p, q }
    }

    pub fn is_finite(&self) -> bool {
        self.p.is_finite() && self.q.is_finite()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.p - other.p).abs().max((self.q - other.q).abs())
    }
}

/// A tangent vector `dp d/dp + dq d/dq` on the chart.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct OrbitTangent {
    pub dp: f64,
    pub dq: f64,
}

impl OrbitTangent {
    pub const fn new(dp: f64, dq: f64) -> Self {
        Self { dp, dq }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.dp - other.dp).abs().max((self.dq - other.dq).abs())
    }
}

impl Neg for OrbitTangent {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.dp, -self.dq)
    }
}

/// The observable `a_p p + a_q q + c`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AffineObservable {
    pub a_p: f64,
    pub a_q: f64,
    pub c: f64,
}

impl AffineObservable {
    pub const fn new(a_p: f64, a_q: f64, c: f64) -> Self {
        Self { a_p, a_q, c }
    }

    /// The coordinate function `p`.
    pub const MOMENTUM: Self = Self::new(1.0, 0.0, 0.0);
    /// The coordinate function `q`.
    pub const POSITION: Self = Self::new(0.0, 1.0, 0.0);

    pub const fn constant(c: f64) -> Self {
        Self::new(0.0, 0.0, c)
    }

    pub fn evaluate(&self, pt: &OrbitPoint) -> f64 {
        self.a_p * pt.p + self.a_q * pt.q + self.c
    }

    pub fn is_constant(&self) -> bool {
        self.a_p == 0.0 && self.a_q == 0.0
    }
}

impl Add for AffineObservable {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a_p + rhs.a_p, self.a_q + rhs.a_q, self.c + rhs.c)
    }
}

impl Sub for AffineObservable {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a_p - rhs.a_p, self.a_q - rhs.a_q, self.c - rhs.c)
    }
}

impl Neg for AffineObservable {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a_p, -self.a_q, -self.c)
    }
}

impl Mul<AffineObservable> for f64 {
    type Output = AffineObservable;
    fn mul(self, rhs: AffineObservable) -> AffineObservable {
        AffineObservable::new(self * rhs.a_p, self * rhs.a_q, self * rhs.c)
    }
}

/// `m dxi + e dt + p dx`.
pub fn pairing(f: &CoadjointPoint, x: &AlgebraElement) -> f64 {
    f.m * x.c_m + f.e * x.c_e + f.p * x.c_p
}

pub fn coadjoint_act(g: Gravity, a: BaseElement, f: &CoadjointPoint) -> CoadjointPoint {
    let mg = f.m * g.0;
    CoadjointPoint::new(f.m, f.e - mg * a.h, f.p + mg * a.t)
}

/// Derivative of conjugation by `a` in polarized coordinates. Conjugation is
/// already linear there, so this is exact.
pub fn adjoint_act(g: Gravity, a: BaseElement, x: &AlgebraElement) -> AlgebraElement {
    AlgebraElement::new(
        x.c_p,
        x.c_e,
        x.c_m + g.0 * (a.h * x.c_e - a.t * x.c_p),
    )
}

pub fn to_chart(ctx: &OrbitContext, f: &CoadjointPoint) -> Result<OrbitPoint, OrbitError> {
    if f.m != ctx.m {
        return Err(OrbitError::MassMismatch {
            expected: ctx.m,
            found: f.m,
        });
    }
    Ok(OrbitPoint::new(f.p, -f.e / ctx.mg()))
}

pub fn from_chart(ctx: &OrbitContext, pt: &OrbitPoint) -> CoadjointPoint {
    CoadjointPoint::new(ctx.m, -(ctx.mg() * pt.q), pt.p)
}

pub fn canonical_act(ctx: &OrbitContext, a: BaseElement, pt: &OrbitPoint) -> OrbitPoint {
    OrbitPoint::new(pt.p + ctx.mg() * a.t, pt.q + a.h)
}

/// `lambda(P) = p`, `lambda(E) = -m g q`, `lambda(M) = m`, extended linearly.
pub fn comomentum(ctx: &OrbitContext, x: &AlgebraElement) -> AffineObservable {
    AffineObservable::new(x.c_p, -ctx.mg() * x.c_e, ctx.m * x.c_m)
}

pub fn hamiltonian_vector_field(f: &AffineObservable) -> OrbitTangent {
    OrbitTangent::new(f.a_q, -f.a_p)
}

/// Bracket of two affine observables; always a constant.
pub fn poisson_bracket(f: &AffineObservable, h: &AffineObservable) -> AffineObservable {
    AffineObservable::constant(f.a_p * h.a_q - h.a_p * f.a_q)
}

/// `sigma(u, v) = u_p v_q - u_q v_p` for `sigma = dp ^ dq`.
pub fn symplectic_form(u: &OrbitTangent, v: &OrbitTangent) -> f64 {
    u.dp * v.dq - u.dq * v.dp
}

/// Jacobian `d(p', q') / d(p, q)` of a chart map by central differences.
pub fn jacobian<F>(map: F, pt: &OrbitPoint, step: f64) -> [[f64; 2]; 2]
where
    F: Fn(&OrbitPoint) -> OrbitPoint,
{
    let dp_plus = map(&OrbitPoint::new(pt.p + step, pt.q));
    let dp_minus = map(&OrbitPoint::new(pt.p - step, pt.q));
    let dq_plus = map(&OrbitPoint::new(pt.p, pt.q + step));
    let dq_minus = map(&OrbitPoint::new(pt.p, pt.q - step));
    let w = 2.0 * step;
    [
        [(dp_plus.p - dp_minus.p) / w, (dq_plus.p - dq_minus.p) / w],
        [(dp_plus.q - dp_minus.q) / w, (dq_plus.q - dq_minus.q) / w],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(m: f64, g: f64) -> OrbitContext {
        OrbitContext::new(m, g).unwrap()
    }

    #[test]
    fn pairing_values() {
        let f = CoadjointPoint::new(5.0, 10.0, 1.0);
        let x = AlgebraElement::new(4.0, 3.0, 2.0);
        assert_eq!(pairing(&f, &x), 44.0);
        assert_eq!(pairing(&f, &AlgebraElement::ZERO), 0.0);
        assert_eq!(pairing(&f, &(2.0 * x)), 88.0);
    }

    #[test]
    fn coadjoint_worked_point() {
        let g = Gravity(2.0);
        let f = CoadjointPoint::new(5.0, 10.0, 1.0);
        let a = BaseElement::new(3.0, 4.0);
        assert_eq!(coadjoint_act(g, a, &f), CoadjointPoint::new(5.0, -30.0, 31.0));
        assert_eq!(coadjoint_act(g, BaseElement::IDENTITY, &f), f);
        let massless = CoadjointPoint::new(0.0, 7.0, -2.0);
        assert_eq!(coadjoint_act(g, a, &massless), massless);
    }

    #[test]
    fn adjoint_and_equivariance() {
        let g = Gravity(2.0);
        let a = BaseElement::new(3.0, 4.0);
        let x = AlgebraElement::new(6.0, 5.0, 1.0);
        assert_eq!(adjoint_act(g, a, &x), AlgebraElement::new(6.0, 5.0, 5.0));
        assert_eq!(adjoint_act(g, BaseElement::IDENTITY, &x), x);

        let f = CoadjointPoint::new(5.0, 10.0, 1.0);
        let lhs = pairing(&coadjoint_act(g, a, &f), &x);
        let rhs = pairing(&f, &adjoint_act(g, a.inverse(), &x));
        assert_eq!(lhs, 41.0);
        assert_eq!(rhs, 41.0);
    }

    #[test]
    fn chart() {
        let c = ctx(5.0, 2.0);
        let f = CoadjointPoint::new(5.0, -30.0, 31.0);
        assert_eq!(to_chart(&c, &f).unwrap(), OrbitPoint::new(31.0, 3.0));
        assert_eq!(from_chart(&c, &OrbitPoint::new(31.0, 3.0)), f);
        assert_eq!(to_chart(&c, &CoadjointPoint::new(5.0, 0.0, 2.0)).unwrap().q, 0.0);
        assert_eq!(from_chart(&c, &OrbitPoint::new(2.0, 0.0)).e, 0.0);
        assert!(matches!(
            to_chart(&c, &CoadjointPoint::new(4.0, 1.0, 1.0)),
            Err(OrbitError::MassMismatch { .. })
        ));
    }

    #[test]
    fn degenerate_orbits_are_rejected() {
        assert!(matches!(OrbitContext::new(0.0, 2.0), Err(OrbitError::Degenerate { .. })));
        assert!(matches!(OrbitContext::new(5.0, 0.0), Err(OrbitError::Degenerate { .. })));
        assert!(matches!(
            OrbitContext::new(f64::NAN, 2.0),
            Err(OrbitError::NonFinite { .. })
        ));
        let msg = OrbitContext::new(0.0, 2.0).unwrap_err().to_string();
        assert!(msg.contains("degenerate orbit"));
    }

    #[test]
    fn canonical_action() {
        let c = ctx(5.0, 2.0);
        let a = BaseElement::new(3.0, 4.0);
        assert_eq!(canonical_act(&c, a, &OrbitPoint::new(1.0, 2.0)), OrbitPoint::new(31.0, 6.0));
        let pt = OrbitPoint::new(1.0, 2.0);
        assert_eq!(canonical_act(&c, BaseElement::IDENTITY, &pt), pt);

        let f = CoadjointPoint::new(5.0, 10.0, 1.0);
        let start = to_chart(&c, &f).unwrap();
        assert_eq!(start, OrbitPoint::new(1.0, -1.0));
        let via_dual = to_chart(&c, &coadjoint_act(c.gravity(), a, &f)).unwrap();
        assert_eq!(via_dual, OrbitPoint::new(31.0, 3.0));
        assert_eq!(canonical_act(&c, a, &start), via_dual);
    }

    #[test]
    fn momentum_map_and_fields() {
        let c = ctx(5.0, 2.0);
        let lp = comomentum(&c, &AlgebraElement::P);
        let le = comomentum(&c, &AlgebraElement::E);
        let lm = comomentum(&c, &AlgebraElement::M);
        assert_eq!(lp, AffineObservable::new(1.0, 0.0, 0.0));
        assert_eq!(le, AffineObservable::new(0.0, -10.0, 0.0));
        assert_eq!(lm, AffineObservable::new(0.0, 0.0, 5.0));

        assert_eq!(hamiltonian_vector_field(&lp), OrbitTangent::new(0.0, -1.0));
        assert_eq!(hamiltonian_vector_field(&le), OrbitTangent::new(-10.0, 0.0));
        assert_eq!(
            hamiltonian_vector_field(&AffineObservable::constant(3.0)),
            OrbitTangent::new(0.0, 0.0)
        );

        assert_eq!(
            poisson_bracket(&AffineObservable::MOMENTUM, &AffineObservable::POSITION),
            AffineObservable::constant(1.0)
        );
        assert_eq!(poisson_bracket(&lp, &le), AffineObservable::constant(-10.0));
        assert_eq!(poisson_bracket(&le, &le), AffineObservable::constant(0.0));
    }

    #[test]
    fn bracket_matches_symplectic_form_on_fields() {
        let f = AffineObservable::new(1.5, -2.0, 3.0);
        let h = AffineObservable::new(-0.5, 4.0, 1.0);
        let xf = hamiltonian_vector_field(&f);
        let xh = hamiltonian_vector_field(&h);
        assert_eq!(poisson_bracket(&f, &h).c, symplectic_form(&xf, &xh));
    }

    fn coord() -> impl Strategy<Value = f64> {
        -10.0..10.0f64
    }

    fn nonzero() -> impl Strategy<Value = f64> {
        (0.1..10.0f64, any::<bool>()).prop_map(|(v, neg)| if neg { -v } else { v })
    }

    proptest! {
        // Dyadic inputs make m g q representable, so the division undoes the
        // product exactly.
        #[test]
        fn chart_round_trip_is_exact_on_dyadics(
            k in prop::array::uniform4(-10_240i32..=10_240),
            g in prop::sample::select(vec![-2.0, -1.0, -0.5, 0.5, 1.0, 2.0]),
        ) {
            prop_assume!(k[0] != 0);
            let d = |n: i32| f64::from(n) / 1024.0;
            let c = ctx(d(k[0]), g);
            let pt = OrbitPoint::new(d(k[1]), d(k[2]));
            prop_assert_eq!(to_chart(&c, &from_chart(&c, &pt)).unwrap(), pt);
        }

        // On arbitrary doubles the round trip is off by at most one ulp.
        #[test]
        fn chart_round_trip_within_an_ulp(m in nonzero(), g in nonzero(), p in coord(), q in coord()) {
            let c = ctx(m, g);
            let pt = OrbitPoint::new(p, q);
            let back = to_chart(&c, &from_chart(&c, &pt)).unwrap();
            prop_assert_eq!(back.p, pt.p);
            prop_assert!((back.q - q).abs() <= f64::EPSILON * q.abs());
        }

        #[test]
        fn mass_is_invariant(g in nonzero(), t in coord(), h in coord(), m in coord(), e in coord(), p in coord()) {
            let f = CoadjointPoint::new(m, e, p);
            prop_assert_eq!(coadjoint_act(Gravity(g), BaseElement::new(t, h), &f).m, m);
        }

        #[test]
        fn equivariance(
            g in nonzero(), t in coord(), h in coord(),
            m in coord(), e in coord(), p in coord(),
            dp in coord(), de in coord(), dm in coord(),
        ) {
            let (g, a) = (Gravity(g), BaseElement::new(t, h));
            let f = CoadjointPoint::new(m, e, p);
            let x = AlgebraElement::new(dp, de, dm);
            let lhs = pairing(&coadjoint_act(g, a, &f), &x);
            let rhs = pairing(&f, &adjoint_act(g, a.inverse(), &x));
            prop_assert!((lhs - rhs).abs() <= 1e-9);
        }

        #[test]
        fn chart_equivariance(m in nonzero(), g in nonzero(), t in coord(), h in coord(), e in coord(), p in coord()) {
            let c = ctx(m, g);
            let a = BaseElement::new(t, h);
            let f = CoadjointPoint::new(m, e, p);
            let lhs = to_chart(&c, &coadjoint_act(c.gravity(), a, &f)).unwrap();
            let rhs = canonical_act(&c, a, &to_chart(&c, &f).unwrap());
            prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-9);
        }

        #[test]
        fn bracket_antisymmetry_and_jacobi(v in prop::array::uniform9(coord())) {
            let f = AffineObservable::new(v[0], v[1], v[2]);
            let h = AffineObservable::new(v[3], v[4], v[5]);
            let k = AffineObservable::new(v[6], v[7], v[8]);
            prop_assert_eq!(poisson_bracket(&f, &h), -poisson_bracket(&h, &f));
            let cyclic = poisson_bracket(&poisson_bracket(&f, &h), &k)
                + poisson_bracket(&poisson_bracket(&h, &k), &f)
                + poisson_bracket(&poisson_bracket(&k, &f), &h);
            prop_assert_eq!(cyclic, AffineObservable::constant(0.0));
        }

        #[test]
        fn comomentum_is_an_anti_homomorphism(m in nonzero(), g in nonzero()) {
            let c = ctx(m, g);
            let lp = comomentum(&c, &AlgebraElement::P);
            let le = comomentum(&c, &AlgebraElement::E);
            let bracket = crate::algebra::BracketTable::aristotle(g)
                .bracket(&AlgebraElement::P, &AlgebraElement::E);
            prop_assert_eq!(poisson_bracket(&lp, &le), AffineObservable::constant(-g * m));
            prop_assert_eq!(poisson_bracket(&lp, &le), -comomentum(&c, &bracket));
        }
    }
}

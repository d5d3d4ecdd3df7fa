//! The base translation group `A` and its central extension `G`.
//!
//! Extended elements use polarized coordinates `(xi, t, h)`, i.e. the element
//! `exp(xi M) exp(t E) exp(h P)`, in which the product carries the cocycle
//! `g h t'`. Canonical (single-exponential) coordinates are reachable through
//! [`to_canonical_coords`]; there the cocycle is the antisymmetric
//! `g (h t' - t h') / 2`.

use std::fmt;

/// The constant `g` (L T^-2) in `[P, E] = g M`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Gravity(pub f64);

impl Gravity {
    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<f64> for Gravity {
    fn from(g: f64) -> Self {
        Gravity(g)
    }
}

impl fmt::Display for Gravity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A space-time translation: `t` in T, `h` in L.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BaseElement {
    pub t: f64,
    pub h: f64,
}

impl BaseElement {
    pub const IDENTITY: Self = Self::new(0.0, 0.0);

    pub const fn new(t: f64, h: f64) -> Self {
        Self { t, h }
    }

    pub fn inverse(self) -> Self {
        Self::new(-self.t, -self.h)
    }
}

/// An element of the extended group in polarized coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ExtendedElement {
    pub xi: f64,
    pub t: f64,
    pub h: f64,
}

impl ExtendedElement {
    pub const IDENTITY: Self = Self::new(0.0, 0.0, 0.0);

    pub const fn new(xi: f64, t: f64, h: f64) -> Self {
        Self { xi, t, h }
    }

    pub fn base(self) -> BaseElement {
        BaseElement::new(self.t, self.h)
    }

    /// Lift of a base element with zero central coordinate.
    pub fn lift(a: BaseElement) -> Self {
        Self::new(0.0, a.t, a.h)
    }

    pub fn is_finite(&self) -> bool {
        self.xi.is_finite() && self.t.is_finite() && self.h.is_finite()
    }

    /// Largest coordinate-wise distance.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.xi - other.xi)
            .abs()
            .max((self.t - other.t).abs())
            .max((self.h - other.h).abs())
    }
}

pub fn multiply_base(a: BaseElement, b: BaseElement) -> BaseElement {
    BaseElement::new(a.t + b.t, a.h + b.h)
}

/// Translates the event `(t0, x0)` by `a`.
pub fn spacetime_act(a: BaseElement, t0: f64, x0: f64) -> (f64, f64) {
    (t0 + a.t, x0 + a.h)
}

/// The polarized 2-cocycle `g h t'`.
pub fn cocycle(g: Gravity, a: BaseElement, b: BaseElement) -> f64 {
    g.0 * a.h * b.t
}

/// The antisymmetric 2-cocycle of canonical coordinates, `g (h t' - t h') / 2`.
pub fn symmetric_cocycle(g: Gravity, a: BaseElement, b: BaseElement) -> f64 {
    0.5 * g.0 * (a.h * b.t - a.t * b.h)
}

/// `beta(t, h) = g t h / 2`; its coboundary is the difference between the
/// polarized and canonical cocycles.
pub fn coboundary_potential(g: Gravity, a: BaseElement) -> f64 {
    0.5 * g.0 * a.t * a.h
}

/// `(delta beta)(a, b) = beta(ab) - beta(a) - beta(b)`.
pub fn coboundary(g: Gravity, a: BaseElement, b: BaseElement) -> f64 {
    coboundary_potential(g, multiply_base(a, b))
        - coboundary_potential(g, a)
        - coboundary_potential(g, b)
}

pub fn multiply_extended(g: Gravity, a: ExtendedElement, b: ExtendedElement) -> ExtendedElement {
    #[cfg(not(feature = "mutant-no-cocycle"))]
    let xi = a.xi + b.xi + cocycle(g, a.base(), b.base());
    #[cfg(feature = "mutant-no-cocycle")]
    let xi = {
        let _ = g;
        a.xi + b.xi
    };
    ExtendedElement::new(xi, a.t + b.t, a.h + b.h)
}

pub fn inverse_extended(g: Gravity, a: ExtendedElement) -> ExtendedElement {
    ExtendedElement::new(-a.xi + g.0 * a.h * a.t, -a.t, -a.h)
}

/// Group law in canonical coordinates.
pub fn multiply_canonical(g: Gravity, a: ExtendedElement, b: ExtendedElement) -> ExtendedElement {
    ExtendedElement::new(
        a.xi + b.xi + symmetric_cocycle(g, a.base(), b.base()),
        a.t + b.t,
        a.h + b.h,
    )
}

/// Polarized `(xi, t, h)` to canonical coordinates:
/// `exp(xi M) exp(t E) exp(h P) = exp((xi - g t h / 2) M + t E + h P)`.
pub fn to_canonical_coords(g: Gravity, a: ExtendedElement) -> ExtendedElement {
    ExtendedElement::new(a.xi - coboundary_potential(g, a.base()), a.t, a.h)
}

pub fn from_canonical_coords(g: Gravity, a: ExtendedElement) -> ExtendedElement {
    ExtendedElement::new(a.xi + coboundary_potential(g, a.base()), a.t, a.h)
}

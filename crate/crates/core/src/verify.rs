//! Seeded property suite covering every identity of the construction.
//!
//! Each property draws `cases` random inputs from its own ChaCha stream,
//! seeded from `(seed, property name)`, so results do not depend on the order
//! in which properties run. A property reports the largest violation it saw
//! and passes when that stays within its threshold: the caller's tolerance,
//! zero for identities that hold exactly in floating point, or a fixed bound
//! for finite-difference checks.
//!
//! The extended group law is a parameter so that a deliberately broken law
//! can be run through the same suite.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{pairing_dimension_check, AlgebraElement, BracketTable};
use crate::coadjoint::{
    adjoint_act, canonical_act, coadjoint_act, comomentum, from_chart, hamiltonian_vector_field,
    jacobian, pairing, poisson_bracket, to_chart, AffineObservable, CoadjointPoint, OrbitContext,
    OrbitPoint, OrbitTangent,
};
use crate::dynamics::{
    evolve_exact, generator_left, hamiltonian, hamiltonian_observable, physical_drift, simulate,
    energy_drift, Generator, Integrator, SimulationConfig,
};
use crate::group::{
    coboundary, cocycle, from_canonical_coords, inverse_extended, multiply_base,
    multiply_canonical, multiply_extended, spacetime_act, symmetric_cocycle, to_canonical_coords,
    BaseElement, ExtendedElement, Gravity,
};

/// Signature of an extended group law in polarized coordinates.
pub type ExtendedLaw = fn(Gravity, ExtendedElement, ExtendedElement) -> ExtendedElement;

/// Values of `g` used for tolerance-checked properties.
pub const GRAVITY_VALUES: [f64; 5] = [1.0, -1.0, 2.0, -2.0, 9.81];
/// Values of `g` used where the property is checked for exact equality.
/// Dyadic, so products with dyadic coordinates stay exact.
pub const DYADIC_GRAVITY_VALUES: [f64; 6] = [1.0, -1.0, 2.0, -2.0, 0.5, -0.5];

pub const COORD_RANGE: f64 = 10.0;
pub const FINITE_DIFFERENCE_STEP: f64 = 1e-6;
pub const FINITE_DIFFERENCE_TOL: f64 = 1e-5;
pub const BILINEARITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("cases must be at least 1")]
    NoCases,
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub seed: u64,
    pub cases: usize,
    pub tol: f64,
    pub law: ExtendedLaw,
}

impl VerifyOptions {
    pub fn new(seed: u64, cases: usize, tol: f64) -> Self {
        Self {
            seed,
            cases,
            tol,
            law: multiply_extended,
        }
    }

    pub fn with_law(mut self, law: ExtendedLaw) -> Self {
        self.law = law;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Threshold {
    /// Caller's tolerance.
    Tolerance,
    Exact,
    Fixed(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyEntry {
    pub name: &'static str,
    pub passed: bool,
    pub max_violation: f64,
    pub threshold: f64,
}

impl fmt::Display for VerifyEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} max_violation={:e}", self.name, self.max_violation)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub entries: Vec<VerifyEntry>,
    pub seed: u64,
    pub cases: usize,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    /// 0 when every property passes, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn entry(&self, name: &str) -> Option<&VerifyEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in &self.entries {
            writeln!(f, "{entry}")?;
        }
        Ok(())
    }
}

/// Random inputs for one property.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, property: &str) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(stream_seed(seed, property)),
        }
    }

    pub fn coord(&mut self) -> f64 {
        self.rng.random_range(-COORD_RANGE..=COORD_RANGE)
    }

    /// A multiple of 2^-10 in the coordinate range.
    pub fn dyadic(&mut self) -> f64 {
        let k = self.rng.random_range(-10_240i32..=10_240);
        f64::from(k) / 1024.0
    }

    pub fn gravity(&mut self) -> Gravity {
        Gravity(GRAVITY_VALUES[self.rng.random_range(0..GRAVITY_VALUES.len())])
    }

    pub fn dyadic_gravity(&mut self) -> Gravity {
        Gravity(DYADIC_GRAVITY_VALUES[self.rng.random_range(0..DYADIC_GRAVITY_VALUES.len())])
    }

    /// Magnitude in `[0.1, 10]`, random sign.
    pub fn nonzero(&mut self) -> f64 {
        let v = self.rng.random_range(0.1..=COORD_RANGE);
        if self.rng.random_bool(0.5) {
            -v
        } else {
            v
        }
    }

    pub fn base(&mut self) -> BaseElement {
        BaseElement::new(self.coord(), self.coord())
    }

    pub fn extended(&mut self) -> ExtendedElement {
        ExtendedElement::new(self.coord(), self.coord(), self.coord())
    }

    pub fn algebra(&mut self) -> AlgebraElement {
        AlgebraElement::new(self.coord(), self.coord(), self.coord())
    }

    pub fn dual(&mut self) -> CoadjointPoint {
        CoadjointPoint::new(self.coord(), self.coord(), self.coord())
    }

    pub fn observable(&mut self) -> AffineObservable {
        AffineObservable::new(self.coord(), self.coord(), self.coord())
    }

    pub fn orbit(&mut self) -> OrbitContext {
        let m = self.nonzero();
        let g = self.gravity();
        OrbitContext::new(m, g.0).expect("nonzero finite parameters")
    }

    /// Orbit with dyadic `m` and `g`, for exact-equality properties.
    pub fn dyadic_orbit(&mut self) -> OrbitContext {
        let k = self.rng.random_range(1i32..=10_240);
        let m = if self.rng.random_bool(0.5) { -k } else { k };
        let g = self.dyadic_gravity();
        OrbitContext::new(f64::from(m) / 1024.0, g.0).expect("nonzero finite parameters")
    }

    pub fn orbit_point(&mut self) -> OrbitPoint {
        OrbitPoint::new(self.coord(), self.coord())
    }

    pub fn simulation(&mut self, integrator: Integrator) -> SimulationConfig {
        let dt = self.rng.random_range(0.01..=1.0);
        let t_max = self.rng.random_range(dt..=COORD_RANGE);
        let ctx = self.orbit();
        SimulationConfig {
            m: ctx.m(),
            g: ctx.g(),
            p0: self.coord(),
            q0: self.coord(),
            t_max,
            dt,
            integrator,
        }
    }
}

/// FNV-1a over the seed bytes followed by the property name.
fn stream_seed(seed: u64, property: &str) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    seed.to_le_bytes()
        .iter()
        .chain(property.as_bytes())
        .fold(OFFSET, |h, &b| (h ^ u64::from(b)).wrapping_mul(PRIME))
}

type Check = fn(&mut Sampler, &VerifyOptions) -> f64;

struct Property {
    name: &'static str,
    threshold: Threshold,
    check: Check,
}

/// Returns 0.0 when `ok`, 1.0 otherwise.
fn flag(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        1.0
    }
}

fn tangent_gap(a: OrbitTangent, b: OrbitTangent) -> f64 {
    a.max_abs_diff(&b)
}

/// Conjugation `b x b^-1` under the given law.
fn conjugate(opts: &VerifyOptions, g: Gravity, b: ExtendedElement, x: ExtendedElement) -> ExtendedElement {
    let law = opts.law;
    law(g, law(g, b, x), inverse_extended(g, b))
}

fn chart_round_trip_gap(ctx: &OrbitContext, pt: &OrbitPoint) -> f64 {
    match to_chart(ctx, &from_chart(ctx, pt)) {
        Ok(back) => back.max_abs_diff(pt),
        Err(_) => f64::INFINITY,
    }
}

fn as_group(x: &AlgebraElement) -> ExtendedElement {
    ExtendedElement::new(x.c_m, x.c_e, x.c_p)
}

fn as_algebra(x: &ExtendedElement) -> AlgebraElement {
    AlgebraElement::new(x.h, x.t, x.xi)
}

const PROPERTIES: &[Property] = &[
    Property {
        name: "group.associativity",
        threshold: Threshold::Tolerance,
        check: |s, o| {
            let (g, a, b, c) = (s.gravity(), s.extended(), s.extended(), s.extended());
            let law = o.law;
            law(g, law(g, a, b), c).max_abs_diff(&law(g, a, law(g, b, c)))
        },
    },
    Property {
        name: "group.identity",
        threshold: Threshold::Exact,
        check: |s, o| {
            let (g, a) = (s.gravity(), s.extended());
            let id = ExtendedElement::IDENTITY;
            (o.law)(g, id, a)
                .max_abs_diff(&a)
                .max((o.law)(g, a, id).max_abs_diff(&a))
        },
    },
    Property {
        name: "group.inverse",
        threshold: Threshold::Tolerance,
        check: |s, o| {
            let (g, a) = (s.gravity(), s.extended());
            let inv = inverse_extended(g, a);
            let id = ExtendedElement::IDENTITY;
            (o.law)(g, a, inv)
                .max_abs_diff(&id)
                .max((o.law)(g, inv, a).max_abs_diff(&id))
        },
    },
    Property {
        name: "group.cocycle_identity",
        threshold: Threshold::Tolerance,
        check: |s, _| {
            let (g, a, b, c) = (s.gravity(), s.base(), s.base(), s.base());
            let lhs = cocycle(g, a, b) + cocycle(g, multiply_base(a, b), c);
            let rhs = cocycle(g, a, multiply_base(b, c)) + cocycle(g, b, c);
            (lhs - rhs).abs()
        },
    },
    Property {
        name: "group.coboundary",
        threshold: Threshold::Tolerance,
        check: |s, _| {
            let (g, a, b) = (s.gravity(), s.base(), s.base());
            let diff = cocycle(g, a, b) - symmetric_cocycle(g, a, b);
            (diff - coboundary(g, a, b)).abs()
        },
    },
    Property {
        name: "group.canonical_coordinates",
        threshold: Threshold::Tolerance,
        check: |s, o| {
            let (g, a, b) = (s.gravity(), s.extended(), s.extended());
            let via_polar = to_canonical_coords(g, (o.law)(g, a, b));
            let direct =
                multiply_canonical(g, to_canonical_coords(g, a), to_canonical_coords(g, b));
            let round_trip = from_canonical_coords(g, to_canonical_coords(g, a));
            via_polar
                .max_abs_diff(&direct)
                .max(round_trip.max_abs_diff(&a))
        },
    },
    Property {
        name: "group.central_subgroup",
        threshold: Threshold::Exact,
        check: |s, o| {
            let (g, a) = (s.gravity(), s.extended());
            let z = ExtendedElement::new(s.coord(), 0.0, 0.0);
            (o.law)(g, z, a).max_abs_diff(&(o.law)(g, a, z))
        },
    },
    Property {
        name: "group.spacetime_action",
        threshold: Threshold::Exact,
        check: |s, _| {
            let a = BaseElement::new(s.dyadic(), s.dyadic());
            let b = BaseElement::new(s.dyadic(), s.dyadic());
            let (t0, x0) = (s.dyadic(), s.dyadic());
            let (t1, x1) = spacetime_act(b, t0, x0);
            let (ts, xs) = spacetime_act(a, t1, x1);
            let (tc, xc) = spacetime_act(multiply_base(a, b), t0, x0);
            (ts - tc).abs().max((xs - xc).abs())
        },
    },
    Property {
        name: "algebra.antisymmetry",
        threshold: Threshold::Exact,
        check: |s, _| {
            let t = BracketTable::aristotle(s.gravity().0);
            let (a, b) = (s.algebra(), s.algebra());
            (t.bracket(&a, &b) + t.bracket(&b, &a)).norm()
        },
    },
    Property {
        name: "algebra.jacobi",
        threshold: Threshold::Exact,
        check: |s, _| {
            let t = BracketTable::aristotle(s.gravity().0);
            let (a, b, c) = (s.algebra(), s.algebra(), s.algebra());
            let basis = t.jacobi_violation().unwrap_or(f64::INFINITY);
            t.jacobi_sum(&a, &b, &c).norm().max(basis)
        },
    },
    Property {
        name: "algebra.bilinearity",
        threshold: Threshold::Fixed(BILINEARITY_TOL),
        check: |s, _| {
            let g = s.gravity().0;
            let t = BracketTable::aristotle(g);
            let (a, b, c, k) = (s.algebra(), s.algebra(), s.algebra(), s.coord());
            let lhs = t.bracket(&(k * a + b), &c);
            let rhs = k * t.bracket(&a, &c) + t.bracket(&b, &c);
            let scale = (k.abs() * a.norm() + b.norm()) * c.norm() * g.abs().max(1.0);
            if scale == 0.0 {
                (lhs - rhs).norm()
            } else {
                (lhs - rhs).norm() / scale
            }
        },
    },
    Property {
        name: "algebra.dimensions",
        threshold: Threshold::Exact,
        check: |_, _| flag(pairing_dimension_check()),
    },
    Property {
        name: "coadjoint.mass_invariance",
        threshold: Threshold::Exact,
        check: |s, _| {
            let (g, a, f) = (s.gravity(), s.base(), s.dual());
            (coadjoint_act(g, a, &f).m - f.m).abs()
        },
    },
    Property {
        name: "coadjoint.action_law",
        threshold: Threshold::Exact,
        check: |s, _| {
            let g = s.dyadic_gravity();
            let a = BaseElement::new(s.dyadic(), s.dyadic());
            let b = BaseElement::new(s.dyadic(), s.dyadic());
            let f = CoadjointPoint::new(s.dyadic(), s.dyadic(), s.dyadic());
            let stepwise = coadjoint_act(g, a, &coadjoint_act(g, b, &f));
            let composed = coadjoint_act(g, multiply_base(a, b), &f);
            (stepwise.m - composed.m)
                .abs()
                .max((stepwise.e - composed.e).abs())
                .max((stepwise.p - composed.p).abs())
        },
    },
    Property {
        name: "coadjoint.equivariance",
        threshold: Threshold::Tolerance,
        check: |s, o| {
            let g = s.gravity();
            let lifted = s.extended();
            let a = lifted.base();
            let (f, x) = (s.dual(), s.algebra());
            // Conjugation is linear in polarized coordinates, so the adjoint
            // action can be read off a finite conjugation.
            let conj = as_algebra(&conjugate(o, g, inverse_extended(g, lifted), as_group(&x)));
            let lhs = pairing(&coadjoint_act(g, a, &f), &x);
            let rhs = pairing(&f, &conj);
            let closed_form = adjoint_act(g, a.inverse(), &x);
            (lhs - rhs).abs().max((conj - closed_form).norm())
        },
    },
    Property {
        name: "coadjoint.chart_round_trip",
        threshold: Threshold::Exact,
        check: |s, _| {
            let ctx = s.dyadic_orbit();
            let pt = OrbitPoint::new(s.dyadic(), s.dyadic());
            chart_round_trip_gap(&ctx, &pt)
        },
    },
    Property {
        name: "coadjoint.chart_round_trip_general",
        threshold: Threshold::Tolerance,
        check: |s, _| {
            let ctx = s.orbit();
            let pt = s.orbit_point();
            chart_round_trip_gap(&ctx, &pt)
        },
    },
    Property {
        name: "coadjoint.chart_equivariance",
        threshold: Threshold::Tolerance,
        check: |s, _| {
            let ctx = s.orbit();
            let a = s.base();
            let f = CoadjointPoint::new(ctx.m(), s.coord(), s.coord());
            let via_dual = to_chart(&ctx, &coadjoint_act(ctx.gravity(), a, &f));
            let via_chart = to_chart(&ctx, &f).map(|pt| canonical_act(&ctx, a, &pt));
            match (via_dual, via_chart) {
                (Ok(l), Ok(r)) => l.max_abs_diff(&r),
                _ => f64::INFINITY,
            }
        },
    },
    Property {
        name: "coadjoint.symplectic_preservation",
        threshold: Threshold::Tolerance,
        check: |s, _| {
            let ctx = s.orbit();
            let a = s.base();
            let pt = s.orbit_point();
            let j = jacobian(|x| canonical_act(&ctx, a, x), &pt, 1e-2);
            let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
            (det - 1.0)
                .abs()
                .max((j[0][0] - 1.0).abs())
                .max((j[1][1] - 1.0).abs())
                .max(j[0][1].abs())
                .max(j[1][0].abs())
        },
    },
    Property {
        name: "coadjoint.poisson_bracket",
        threshold: Threshold::Exact,
        check: |s, _| {
            let (f, h, k) = (s.observable(), s.observable(), s.observable());
            let anti = poisson_bracket(&f, &h).c + poisson_bracket(&h, &f).c;
            let cyclic = poisson_bracket(&poisson_bracket(&f, &h), &k).c
                + poisson_bracket(&poisson_bracket(&h, &k), &f).c
                + poisson_bracket(&poisson_bracket(&k, &f), &h).c;
            anti.abs().max(cyclic.abs())
        },
    },
    Property {
        name: "coadjoint.momentum_map",
        threshold: Threshold::Exact,
        check: |s, _| {
            let ctx = s.orbit();
            let (m, g) = (ctx.m(), ctx.g());
            let lp = comomentum(&ctx, &AlgebraElement::P);
            let le = comomentum(&ctx, &AlgebraElement::E);
            let lm = comomentum(&ctx, &AlgebraElement::M);
            let table = BracketTable::aristotle(g);
            let pe = table.bracket(&AlgebraElement::P, &AlgebraElement::E);
            let ok = lp == AffineObservable::new(1.0, 0.0, 0.0)
                && le == AffineObservable::new(0.0, -(m * g), 0.0)
                && lm == AffineObservable::new(0.0, 0.0, m)
                && hamiltonian_vector_field(&lp) == OrbitTangent::new(0.0, -1.0)
                && hamiltonian_vector_field(&le) == OrbitTangent::new(-(m * g), 0.0)
                && poisson_bracket(&lp, &le) == AffineObservable::constant(-g * m)
                && poisson_bracket(&lp, &le) == -comomentum(&ctx, &pe);
            flag(ok)
        },
    },
    Property {
        name: "dynamics.static_particle",
        threshold: Threshold::Exact,
        check: |s, _| {
            let mut worst = 0.0_f64;
            for integrator in [Integrator::Exact, Integrator::SymplecticEuler] {
                let cfg = s.simulation(integrator);
                let Ok(samples) = simulate(&cfg) else {
                    return f64::INFINITY;
                };
                for sample in &samples {
                    worst = worst.max((sample.q - cfg.q0).abs());
                }
            }
            worst
        },
    },
    Property {
        name: "dynamics.energy_conservation_exact",
        threshold: Threshold::Exact,
        check: |s, _| {
            let cfg = s.simulation(Integrator::Exact);
            simulate(&cfg)
                .ok()
                .and_then(|t| energy_drift(&t).ok())
                .unwrap_or(f64::INFINITY)
        },
    },
    Property {
        name: "dynamics.energy_conservation_euler",
        threshold: Threshold::Tolerance,
        check: |s, _| {
            let cfg = s.simulation(Integrator::SymplecticEuler);
            simulate(&cfg)
                .ok()
                .and_then(|t| energy_drift(&t).ok())
                .unwrap_or(f64::INFINITY)
        },
    },
    Property {
        name: "dynamics.momentum_law_exact",
        threshold: Threshold::Exact,
        check: |s, _| {
            let cfg = s.simulation(Integrator::Exact);
            let Ok(samples) = simulate(&cfg) else {
                return f64::INFINITY;
            };
            let mg = cfg.m * cfg.g;
            samples
                .iter()
                .map(|x| (x.p - (cfg.p0 + mg * x.t)).abs())
                .fold(0.0, f64::max)
        },
    },
    Property {
        name: "dynamics.euler_matches_exact",
        threshold: Threshold::Tolerance,
        check: |s, _| {
            let cfg = s.simulation(Integrator::SymplecticEuler);
            let exact = SimulationConfig {
                integrator: Integrator::Exact,
                ..cfg
            };
            let (Ok(euler), Ok(exact)) = (simulate(&cfg), simulate(&exact)) else {
                return f64::INFINITY;
            };
            if euler.len() != exact.len() {
                return f64::INFINITY;
            }
            let mg = cfg.m * cfg.g;
            euler
                .iter()
                .zip(&exact)
                .map(|(a, b)| {
                    let scale = (mg * b.t).abs().max(b.p.abs()).max(1.0);
                    ((a.p - b.p).abs() / scale)
                        .max((a.q - b.q).abs())
                        .max((a.t - b.t).abs())
                })
                .fold(0.0, f64::max)
        },
    },
    Property {
        name: "dynamics.generator_consistency",
        threshold: Threshold::Fixed(FINITE_DIFFERENCE_TOL),
        check: |s, _| {
            let ctx = s.orbit();
            let pt = s.orbit_point();
            let step = FINITE_DIFFERENCE_STEP;
            let central = |fwd: OrbitPoint, back: OrbitPoint| {
                OrbitTangent::new((fwd.p - back.p) / (2.0 * step), (fwd.q - back.q) / (2.0 * step))
            };
            let flow = central(evolve_exact(&ctx, &pt, step), evolve_exact(&ctx, &pt, -step));
            let left = |a: BaseElement| canonical_act(&ctx, a, &pt);
            let gen_e = central(
                left(BaseElement::new(-step, 0.0)),
                left(BaseElement::new(step, 0.0)),
            );
            let gen_p = central(
                left(BaseElement::new(0.0, -step)),
                left(BaseElement::new(0.0, step)),
            );
            tangent_gap(flow, physical_drift(&ctx))
                .max(tangent_gap(flow, -generator_left(&ctx, Generator::E)))
                .max(tangent_gap(gen_e, generator_left(&ctx, Generator::E)))
                .max(tangent_gap(gen_p, generator_left(&ctx, Generator::P)))
        },
    },
    Property {
        name: "dynamics.hamilton_equations",
        threshold: Threshold::Exact,
        check: |s, _| {
            let ctx = s.orbit();
            let h = hamiltonian_observable(&ctx);
            let pt = s.orbit_point();
            let from_bracket = OrbitTangent::new(
                poisson_bracket(&AffineObservable::MOMENTUM, &h).c,
                poisson_bracket(&AffineObservable::POSITION, &h).c,
            );
            tangent_gap(from_bracket, physical_drift(&ctx))
                .max(tangent_gap(hamiltonian_vector_field(&h), physical_drift(&ctx)))
                .max((h.evaluate(&pt) - hamiltonian(&ctx, &pt)).abs())
        },
    },
    Property {
        name: "dynamics.no_kinetic_term",
        threshold: Threshold::Exact,
        check: |s, _| {
            let ctx = s.orbit();
            let q = s.coord();
            let reference = hamiltonian(&ctx, &OrbitPoint::new(0.0, q));
            (hamiltonian(&ctx, &OrbitPoint::new(s.coord(), q)) - reference).abs()
        },
    },
];

/// Names of every property, in report order.
pub fn property_names() -> Vec<&'static str> {
    PROPERTIES.iter().map(|p| p.name).collect()
}

pub fn run_verify(seed: u64, cases: usize, tol: f64) -> Result<VerifyReport, VerifyError> {
    run_verify_with(&VerifyOptions::new(seed, cases, tol))
}

pub fn run_verify_with(opts: &VerifyOptions) -> Result<VerifyReport, VerifyError> {
    if opts.cases == 0 {
        return Err(VerifyError::NoCases);
    }
    if !(opts.tol > 0.0 && opts.tol.is_finite()) {
        return Err(VerifyError::BadTolerance(opts.tol));
    }
    let entries = PROPERTIES
        .iter()
        .map(|prop| {
            let mut sampler = Sampler::new(opts.seed, prop.name);
            let mut worst = 0.0_f64;
            for _ in 0..opts.cases {
                let v = (prop.check)(&mut sampler, opts);
                // f64::max would swallow a NaN.
                if v.is_nan() {
                    worst = f64::NAN;
                    break;
                }
                worst = worst.max(v);
            }
            let threshold = match prop.threshold {
                Threshold::Tolerance => opts.tol,
                Threshold::Exact => 0.0,
                Threshold::Fixed(t) => t,
            };
            VerifyEntry {
                name: prop.name,
                passed: worst <= threshold,
                max_violation: worst,
                threshold,
            }
        })
        .collect();
    Ok(VerifyReport {
        entries,
        seed: opts.seed,
        cases: opts.cases,
    })
}

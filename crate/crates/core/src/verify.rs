//! Oracle-equivalence checks for one sequence and truncation level.
//!
//! Each check compares an algebraic route (closed form, convolution,
//! inversion, reduction) against brute-force enumeration on the explicit
//! poset, and records the first counterexample it finds.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exact::Exact;
use crate::incidence::IncidenceFunction;
use crate::named::StandardFunction;
use crate::oracle::{cover_matrix, ChainCounter, ChainKind};
use crate::poset::{FinitePoset, Vertex};
use crate::reduced::{incidence_coefficient, ReducedFunction};
use crate::sequence::FSequence;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random functions (or triples) per randomized check.
    pub random_trials: usize,
    /// Highest power checked for `ζ^k`, `η^k`, `χ^k`.
    pub max_power: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0x00c0_b3eb,
            random_trials: 20,
            max_power: 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} cases)", self.name, self.cases),
            Some(why) => write!(f, "FAIL {} ({} cases): {}", self.name, self.cases, why),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{c}");
        }
        out
    }
}

struct Check {
    name: &'static str,
    cases: usize,
    failure: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            failure: None,
        }
    }

    fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn expect_eq<T: PartialEq + fmt::Display>(
        &mut self,
        got: T,
        want: T,
        at: impl FnOnce() -> String,
    ) {
        let ok = got == want;
        self.expect(ok, || format!("{}: got {got}, expected {want}", at()));
    }

    fn done(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            cases: self.cases,
            failure: self.failure,
        }
    }
}

/// Deterministic generator for the randomized checks.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer-valued incidence function with entries in `-bound..=bound`.
pub fn random_incidence<'p, R: Rng>(
    p: &'p FinitePoset,
    rng: &mut R,
    bound: i64,
) -> IncidenceFunction<'p> {
    IncidenceFunction::from_fn(p, |_, _| Exact::from(rng.random_range(-bound..=bound)))
}

/// Integer-valued reduced table with entries in `-bound..=bound`.
pub fn random_reduced<R: Rng>(
    seq: &FSequence,
    max_rank: usize,
    rng: &mut R,
    bound: i64,
) -> ReducedFunction {
    ReducedFunction::from_fn(seq, max_rank, |_, _| {
        Exact::from(rng.random_range(-bound..=bound))
    })
    .expect("max_rank within the sequence")
}

fn pairs(p: &FinitePoset) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for x in p.vertices() {
        for y in p.vertices() {
            if p.leq(x, y).unwrap_or(false) {
                out.push((*x, *y));
            }
        }
    }
    out
}

fn big(v: BigUint) -> Exact {
    Exact::from(v)
}

/// Runs every check on `P_max_level` of `seq`.
pub fn verify(seq: &FSequence, max_level: usize, config: &VerifyConfig) -> Result<Report> {
    let seq = seq.truncate(max_level)?;
    let p = FinitePoset::build(&seq, max_level)?;
    let mut report = Report::default();
    let comparable = pairs(&p);

    report.checks.push(partial_order(&p));
    report.checks.push(hasse_structure(&p));
    report.checks.push(segment_cardinality(&p, &comparable)?);
    report.checks.push(mobius_agreement(&p, &comparable)?);
    report.checks.push(chain_counts(&p, config.max_power)?);
    report.checks.push(inverse_counters(&p)?);
    report.checks.push(rank_dependence(&p, config.max_power)?);
    report
        .checks
        .push(reduction_soundness(&p, config.max_power)?);
    report.checks.push(incidence_coefficients(&p, &comparable)?);
    report.checks.push(homomorphism(&p, config)?);
    report.checks.push(algebra_laws(&p, config)?);
    Ok(report)
}

fn partial_order(p: &FinitePoset) -> CheckOutcome {
    let mut check = Check::new("partial-order");
    let v = p.vertices();
    let leq = |a: &Vertex, b: &Vertex| p.leq(a, b).unwrap();
    for a in v {
        check.expect(leq(a, a), || format!("{a} ≰ {a}"));
        for b in v {
            if a != b {
                check.expect(!(leq(a, b) && leq(b, a)), || format!("{a} ≤ {b} ≤ {a}"));
            }
            for c in v {
                if leq(a, b) && leq(b, c) {
                    check.expect(leq(a, c), || format!("{a} ≤ {b} ≤ {c} but {a} ≰ {c}"));
                }
            }
        }
    }
    check.done()
}

fn hasse_structure(p: &FinitePoset) -> CheckOutcome {
    let mut check = Check::new("hasse-structure");
    let seq = p.sequence().values();
    for level in 0..p.max_level() {
        let want = seq[level] * seq[level + 1];
        check.expect_eq(p.edges_between(level) as u64, want, || {
            format!("edges between levels {level} and {}", level + 1)
        });
    }
    let covers = cover_matrix(p);
    let mut from_edges = vec![vec![false; p.len()]; p.len()];
    for &(a, b) in p.hasse_edges() {
        from_edges[a][b] = true;
    }
    for a in 0..p.len() {
        for b in 0..p.len() {
            check.expect(covers[a][b] == from_edges[a][b], || {
                format!(
                    "cover relation and Hasse edges disagree at ({}, {})",
                    p.vertex(a),
                    p.vertex(b)
                )
            });
        }
    }
    check.done()
}

fn segment_cardinality(p: &FinitePoset, comparable: &[(Vertex, Vertex)]) -> Result<CheckOutcome> {
    let mut check = Check::new("segment-cardinality");
    let f = p.sequence().values();
    for (x, y) in comparable {
        let size = p.segment(x, y)?.len() as u64;
        let want = if x == y {
            1
        } else {
            f[x.s + 1..y.s].iter().sum::<u64>() + 2
        };
        check.expect_eq(size, want, || format!("|[{x}, {y}]|"));
    }
    Ok(check.done())
}

fn mobius_agreement(p: &FinitePoset, comparable: &[(Vertex, Vertex)]) -> Result<CheckOutcome> {
    let mut check = Check::new("mobius-agreement");
    let seq = p.sequence();
    let inverted = IncidenceFunction::standard_full(StandardFunction::Zeta, p)?.invert()?;
    let closed = IncidenceFunction::mobius_closed_form(p);
    let reduced =
        ReducedFunction::standard(StandardFunction::Mobius, seq, p.max_level())?.lift(p)?;
    for (x, y) in comparable {
        let oracle = Exact::from(p.mobius_recursive(x, y)?);
        for (route, f) in [
            ("inverse of zeta", &inverted),
            ("closed form", &closed),
            ("reduced", &reduced),
        ] {
            check.expect_eq(f.get(x, y)?, oracle.clone(), || {
                format!("μ({x}, {y}) via {route}")
            });
        }
    }
    Ok(check.done())
}

fn chain_counts(p: &FinitePoset, max_power: u32) -> Result<CheckOutcome> {
    let mut check = Check::new("chain-counts");
    let f = p.sequence().values();
    let zeta = IncidenceFunction::standard_full(StandardFunction::Zeta, p)?;
    let eta = IncidenceFunction::standard_full(StandardFunction::Eta, p)?;
    let chi = IncidenceFunction::standard_full(StandardFunction::Chi, p)?;
    for k in 1..=max_power {
        let (zk, ek, ck) = (zeta.power(k), eta.power(k), chi.power(k));
        for y in p.vertices() {
            let mut multi = ChainCounter::new(p, y, ChainKind::Weak)?;
            let mut strict = ChainCounter::new(p, y, ChainKind::Strict)?;
            let mut cover = ChainCounter::new(p, y, ChainKind::Cover)?;
            for x in p.vertices().iter().filter(|x| p.leq(x, y).unwrap()) {
                let k_us = k as usize;
                check.expect_eq(zk.get(x, y)?, big(multi.count(x, k_us)?), || {
                    format!("ζ^{k}({x}, {y}) vs multichains")
                });
                check.expect_eq(ek.get(x, y)?, big(strict.count(x, k_us)?), || {
                    format!("η^{k}({x}, {y}) vs chains")
                });
                let saturated = big(cover.count(x, k_us)?);
                check.expect_eq(ck.get(x, y)?, saturated.clone(), || {
                    format!("χ^{k}({x}, {y}) vs maximal chains")
                });
                let closed = if x.s + k_us == y.s {
                    Exact::from(f[x.s + 1..y.s].iter().product::<u64>())
                } else {
                    Exact::ZERO
                };
                check.expect_eq(saturated, closed, || {
                    format!("maximal chains ({x}, {y}, {k}) vs product formula")
                });
            }
        }
    }
    Ok(check.done())
}

fn inverse_counters(p: &FinitePoset) -> Result<CheckOutcome> {
    let mut check = Check::new("inverse-counters");
    let c_inv = IncidenceFunction::standard_full(StandardFunction::C, p)?.invert()?;
    let m_inv = IncidenceFunction::standard_full(StandardFunction::M, p)?.invert()?;
    for y in p.vertices() {
        let mut strict = ChainCounter::new(p, y, ChainKind::Strict)?;
        let mut cover = ChainCounter::new(p, y, ChainKind::Cover)?;
        for x in p.vertices().iter().filter(|x| p.leq(x, y).unwrap()) {
            // the one-element chain from x to x counts once
            let (all, maximal) = if x == y {
                (Exact::ONE, Exact::ONE)
            } else {
                (big(strict.count_all(x)?), big(cover.count_all(x)?))
            };
            check.expect_eq(c_inv.get(x, y)?, all, || {
                format!("C⁻¹({x}, {y}) vs all chains")
            });
            check.expect_eq(m_inv.get(x, y)?, maximal, || {
                format!("M⁻¹({x}, {y}) vs all maximal chains")
            });
        }
    }
    Ok(check.done())
}

fn rank_dependence(p: &FinitePoset, max_power: u32) -> Result<CheckOutcome> {
    use StandardFunction::*;
    let mut check = Check::new("rank-dependence");
    for name in StandardFunction::family(max_power) {
        let f = IncidenceFunction::standard_derived(name, p)?;
        let projected = ReducedFunction::project(&f);
        check.expect(projected.is_ok(), || {
            format!("{name}: {}", projected.as_ref().unwrap_err())
        });
        // distinct elements of one level are incomparable, so f vanishes there
        for s in 0..=p.max_level() {
            for x in p.level(s) {
                for y in p.level(s) {
                    if x != y {
                        check.expect_eq(f.get(x, y)?, Exact::ZERO, || format!("{name}({x}, {y})"));
                    }
                }
            }
        }
        if matches!(name, Zeta | Zeta2 | C | M | Mobius | Delta) {
            for x in p.vertices() {
                check.expect_eq(f.get(x, x)?, Exact::ONE, || format!("{name}({x}, {x})"));
            }
        }
    }
    Ok(check.done())
}

fn reduction_soundness(p: &FinitePoset, max_power: u32) -> Result<CheckOutcome> {
    use StandardFunction::*;
    let mut check = Check::new("reduction-soundness");
    let seq = p.sequence();
    let n = p.max_level();
    for name in StandardFunction::family(max_power) {
        let reduced = ReducedFunction::standard(name, seq, n)?;
        let lifted = reduced.lift(p)?;
        let full = IncidenceFunction::standard_derived(name, p)?;
        check.expect(lifted == full, || {
            let (x, y, _) = lifted
                .entries()
                .zip(full.entries())
                .find(|(a, b)| a.2 != b.2)
                .map(|(a, _)| a)
                .expect("unequal tables differ somewhere");
            format!(
                "{name}({x}, {y}): reduced closed form {} vs full algebra {}",
                lifted.get(&x, &y).unwrap(),
                full.get(&x, &y).unwrap()
            )
        });
        let back = ReducedFunction::project(&lifted)?;
        check.expect(back == reduced, || {
            format!("project(lift({name})) is not the identity")
        });

        // closed form against the reduced algebra itself
        let derived = match name {
            Zeta2 => Some(ReducedFunction::standard(Zeta, seq, n)?.power(2)),
            EtaPow(s) => Some(ReducedFunction::standard(Eta, seq, n)?.power(s)),
            ChiPow(s) => Some(ReducedFunction::standard(Chi, seq, n)?.power(s)),
            Mobius => Some(ReducedFunction::standard(Zeta, seq, n)?.invert()?),
            _ => None,
        };
        if let Some(derived) = derived {
            check.expect(derived == reduced, || {
                let t = reduced
                    .types()
                    .find(|t| reduced.get(t.k, t.n) != derived.get(t.k, t.n))
                    .unwrap();
                format!(
                    "{name}{t}: closed form {} vs reduced convolution {}",
                    reduced.get(t.k, t.n),
                    derived.get(t.k, t.n)
                )
            });
        }
    }
    for name in [C, M] {
        let reduced_inv = ReducedFunction::standard(name, seq, n)?.invert()?.lift(p)?;
        let full_inv = IncidenceFunction::standard_full(name, p)?.invert()?;
        check.expect(reduced_inv == full_inv, || {
            format!("{name}⁻¹: reduced and full inverses differ")
        });
    }
    Ok(check.done())
}

fn incidence_coefficients(
    p: &FinitePoset,
    comparable: &[(Vertex, Vertex)],
) -> Result<CheckOutcome> {
    let mut check = Check::new("incidence-coefficients");
    let seq = p.sequence();
    for (x, y) in comparable {
        for l in 0..=p.max_level() + 1 {
            let oracle = p.count_at_rank_in_segment(x, y, l)? as u64;
            check.expect_eq(incidence_coefficient(seq, x.s, y.s, l), oracle, || {
                format!("[{},{};{l}] on [{x}, {y}]", x.s, y.s)
            });
        }
    }
    Ok(check.done())
}

fn homomorphism(p: &FinitePoset, config: &VerifyConfig) -> Result<CheckOutcome> {
    let mut check = Check::new("homomorphism");
    let mut rng = seeded_rng(config.seed);
    let seq = p.sequence();
    for trial in 0..config.random_trials {
        let f = random_reduced(seq, p.max_level(), &mut rng, 9).lift(p)?;
        let g = random_reduced(seq, p.max_level(), &mut rng, 9).lift(p)?;
        let full = ReducedFunction::project(&f.convolve(&g)?)?;
        let reduced = ReducedFunction::project(&f)?.convolve(&ReducedFunction::project(&g)?)?;
        check.expect(full == reduced, || {
            format!("trial {trial}: project(f ∗ g) ≠ project(f) ∗ project(g)")
        });
    }
    Ok(check.done())
}

fn algebra_laws(p: &FinitePoset, config: &VerifyConfig) -> Result<CheckOutcome> {
    let mut check = Check::new("algebra-laws");
    let mut rng = seeded_rng(config.seed ^ 0xa55a);
    let seq = p.sequence();
    let delta = IncidenceFunction::delta(p);
    let delta_r = ReducedFunction::delta(seq, p.max_level())?;
    for trial in 0..config.random_trials {
        let (f, g, h) = (
            random_incidence(p, &mut rng, 5),
            random_incidence(p, &mut rng, 5),
            random_incidence(p, &mut rng, 5),
        );
        let left = f.convolve(&g)?.convolve(&h)?;
        let right = f.convolve(&g.convolve(&h)?)?;
        check.expect(left == right, || {
            format!("trial {trial}: full convolution not associative")
        });
        check.expect(delta.convolve(&f)? == f && f.convolve(&delta)? == f, || {
            format!("trial {trial}: δ is not a two-sided identity")
        });

        let (a, b, c) = (
            random_reduced(seq, p.max_level(), &mut rng, 5),
            random_reduced(seq, p.max_level(), &mut rng, 5),
            random_reduced(seq, p.max_level(), &mut rng, 5),
        );
        let left = a.convolve(&b)?.convolve(&c)?;
        let right = a.convolve(&b.convolve(&c)?)?;
        check.expect(left == right, || {
            format!("trial {trial}: reduced convolution not associative")
        });
        check.expect(
            delta_r.convolve(&a)? == a && a.convolve(&delta_r)? == a,
            || format!("trial {trial}: reduced δ is not a two-sided identity"),
        );
    }
    Ok(check.done())
}

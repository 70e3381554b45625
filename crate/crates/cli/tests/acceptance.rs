//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::process::Command;

use cobweb::verify::{random_incidence, random_reduced, seeded_rng};
use cobweb::{
    incidence_coefficient, Exact, FSequence, FinitePoset, IncidenceFunction, ReducedFunction,
    StandardFunction, Vertex,
};

type Outcome = Result<usize, String>;
type Criterion = (&'static str, fn(&[Instance]) -> Outcome);

const SEQUENCES: [(&str, usize); 4] = [
    ("fibonacci", 6),
    ("naturals", 6),
    ("constant:2", 6),
    ("custom:1,3,1,4,2", 4),
];

const SEED: u64 = 0x5eed_c0b3;

struct Instance {
    spec: &'static str,
    seq: FSequence,
    poset: FinitePoset,
}

impl Instance {
    fn new(spec: &'static str, n: usize) -> Self {
        let seq = FSequence::parse(spec, n).expect("sequence");
        let poset = FinitePoset::build(&seq, n).expect("poset");
        Instance { spec, seq, poset }
    }

    fn n(&self) -> usize {
        self.poset.max_level()
    }

    fn pairs(&self) -> Vec<(Vertex, Vertex)> {
        let v = self.poset.vertices();
        let mut out = Vec::new();
        for x in v {
            for y in v {
                if self.poset.leq(x, y).unwrap() {
                    out.push((*x, *y));
                }
            }
        }
        out
    }

    fn strict_pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.pairs().into_iter().filter(|(x, y)| x != y).collect()
    }
}

fn instances() -> Vec<Instance> {
    SEQUENCES
        .iter()
        .map(|&(s, n)| Instance::new(s, n))
        .collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same_full(f: &IncidenceFunction, g: &IncidenceFunction) -> Result<(), String> {
    for (x, y, v) in f.entries() {
        let w = g.get(&x, &y).map_err(|e| e.to_string())?;
        ensure(*v == w, || format!("({x},{y}): {v} vs {w}"))?;
    }
    ensure(f.support_len() == g.support_len(), || {
        "support sizes differ".into()
    })
}

fn interior_sum(f: &[u64], k: usize, n: usize) -> u64 {
    f[k + 1..n].iter().sum()
}

fn c1_segment_cardinality(all: &[Instance]) -> Outcome {
    let mut cases = 0;
    for inst in all {
        let f = inst.seq.values();
        for (x, y) in inst.pairs() {
            let size = inst.poset.segment(&x, &y).unwrap().len() as u64;
            let want = if x == y {
                1
            } else {
                interior_sum(f, x.s, y.s) + 2
            };
            ensure(size == want, || {
                format!("{}: [{x},{y}] has {size}, want {want}", inst.spec)
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn c2_mobius(all: &[Instance]) -> Outcome {
    let mut cases = 0;
    for inst in all {
        let p = &inst.poset;
        let inverted = IncidenceFunction::standard_full(StandardFunction::Zeta, p)
            .and_then(|z| z.invert())
            .map_err(|e| e.to_string())?;
        let closed = IncidenceFunction::mobius_closed_form(p);
        let lifted = ReducedFunction::standard(StandardFunction::Mobius, &inst.seq, inst.n())
            .and_then(|r| r.lift(p))
            .map_err(|e| e.to_string())?;
        for (x, y) in inst.pairs() {
            let oracle = Exact::from(p.mobius_recursive(&x, &y).unwrap());
            for (label, f) in [
                ("invert", &inverted),
                ("closed", &closed),
                ("reduced", &lifted),
            ] {
                let got = f.get(&x, &y).unwrap();
                ensure(got == oracle, || {
                    format!(
                        "{}: {label} mu({x},{y}) = {got}, recursion gives {oracle}",
                        inst.spec
                    )
                })?;
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn c3_chain_counts(all: &[Instance]) -> Outcome {
    let mut cases = 0;
    for inst in all {
        let p = &inst.poset;
        let f = inst.seq.values();
        let full = |name| IncidenceFunction::standard_full(name, p).unwrap();
        let (zeta, eta, chi) = (
            full(StandardFunction::Zeta),
            full(StandardFunction::Eta),
            full(StandardFunction::Chi),
        );
        for k in 1..=4u32 {
            let (zk, ek, ck) = (zeta.power(k), eta.power(k), chi.power(k));
            for (x, y) in inst.pairs() {
                let ku = k as usize;
                let strict = Exact::from(p.count_chains(&x, &y, ku).unwrap());
                let cover = Exact::from(p.count_maximal_chains(&x, &y, ku).unwrap());
                let multi = Exact::from(p.count_multichains(&x, &y, ku).unwrap());
                let closed = if x.s + ku == y.s {
                    Exact::from(f[x.s + 1..y.s].iter().product::<u64>())
                } else {
                    Exact::ZERO
                };
                let at = || format!("{} k={k} ({x},{y})", inst.spec);
                ensure(ek.get(&x, &y).unwrap() == strict, || {
                    format!("eta^k at {}", at())
                })?;
                ensure(ck.get(&x, &y).unwrap() == cover, || {
                    format!("chi^k at {}", at())
                })?;
                ensure(cover == closed, || format!("chi^k closed form at {}", at()))?;
                ensure(zk.get(&x, &y).unwrap() == multi, || {
                    format!("zeta^k at {}", at())
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn c4_inverse_counters(all: &[Instance]) -> Outcome {
    let mut cases = 0;
    for inst in all {
        let p = &inst.poset;
        let inv = |name| {
            IncidenceFunction::standard_full(name, p)
                .and_then(|f| f.invert())
                .unwrap()
        };
        let (c_inv, m_inv) = (inv(StandardFunction::C), inv(StandardFunction::M));
        for (x, y) in inst.strict_pairs() {
            let all_chains = Exact::from(p.count_all_chains(&x, &y).unwrap());
            let maximal = Exact::from(p.count_all_maximal_chains(&x, &y).unwrap());
            ensure(c_inv.get(&x, &y).unwrap() == all_chains, || {
                format!("{}: C^-1({x},{y}) != {all_chains}", inst.spec)
            })?;
            ensure(m_inv.get(&x, &y).unwrap() == maximal, || {
                format!("{}: M^-1({x},{y}) != {maximal}", inst.spec)
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn c5_reduction_soundness(all: &[Instance]) -> Outcome {
    let mut cases = 0;
    let mut rng = seeded_rng(SEED);
    for inst in all {
        let p = &inst.poset;
        for name in StandardFunction::family(4) {
            let reduced = ReducedFunction::standard(name, &inst.seq, inst.n()).unwrap();
            let lifted = reduced.lift(p).unwrap();
            let full = if name.is_elementary() {
                IncidenceFunction::standard_full(name, p)
            } else {
                IncidenceFunction::standard_derived(name, p)
            }
            .unwrap();
            same_full(&lifted, &full).map_err(|e| format!("{} {name}: {e}", inst.spec))?;
            let back = ReducedFunction::project(&lifted).map_err(|e| e.to_string())?;
            ensure(back == reduced, || {
                format!("{} {name}: project(lift) differs", inst.spec)
            })?;
            cases += 1;
        }
        for _ in 0..20 {
            let table = random_reduced(&inst.seq, inst.n(), &mut rng, 50);
            let back = ReducedFunction::project(&table.lift(p).unwrap()).unwrap();
            ensure(back == table, || {
                format!("{}: project(lift) on random table", inst.spec)
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn c6_homomorphism(all: &[Instance]) -> Outcome {
    let mut cases = 0;
    let mut rng = seeded_rng(SEED ^ 6);
    for inst in all {
        let p = &inst.poset;
        for trial in 0..100 {
            let f = random_reduced(&inst.seq, inst.n(), &mut rng, 9)
                .lift(p)
                .unwrap();
            let g = random_reduced(&inst.seq, inst.n(), &mut rng, 9)
                .lift(p)
                .unwrap();
            let via_full = ReducedFunction::project(&f.convolve(&g).unwrap())
                .map_err(|e| format!("{} trial {trial}: {e}", inst.spec))?;
            let via_reduced = ReducedFunction::project(&f)
                .unwrap()
                .convolve(&ReducedFunction::project(&g).unwrap())
                .unwrap();
            ensure(via_full == via_reduced, || {
                format!(
                    "{} trial {trial}: convolution does not commute with projection",
                    inst.spec
                )
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

/// Naive coefficient that also uses `F_l` at the lower endpoint.
fn naive_coefficient(f: &[u64], k: usize, n: usize, l: usize) -> u64 {
    if l < k || l > n {
        0
    } else if l == n && k < n {
        1
    } else {
        f[l]
    }
}

/// Naive squared zeta whose interior sum starts at `i = k`.
fn naive_zeta2(f: &[u64], k: usize, n: usize) -> u64 {
    if k == n {
        1
    } else {
        f[k..n].iter().sum::<u64>() + 2
    }
}

fn c7_endpoint_correction(all: &[Instance]) -> Outcome {
    let mut cases = 0;
    for inst in all {
        for (x, y) in inst.pairs() {
            for l in 0..=inst.n() + 1 {
                let oracle = inst.poset.count_at_rank_in_segment(&x, &y, l).unwrap() as u64;
                let got = incidence_coefficient(&inst.seq, x.s, y.s, l);
                ensure(got == oracle, || {
                    format!(
                        "{}: [{},{};{l}] = {got}, segment has {oracle}",
                        inst.spec, x.s, y.s
                    )
                })?;
                cases += 1;
            }
        }
    }

    let inst = Instance::new("constant:2", 5);
    let f = inst.seq.values();
    let n = inst.n();
    let zeta2 = ReducedFunction::standard(StandardFunction::Zeta2, &inst.seq, n).unwrap();
    let (mut coefficient_misses, mut zeta2_misses) = (0, 0);
    for k in 0..=n {
        for m in k..=n {
            let (x, y) = (Vertex::new(1, k), Vertex::new(1, m));
            for l in 0..=n {
                let oracle = inst.poset.count_at_rank_in_segment(&x, &y, l).unwrap() as u64;
                ensure(incidence_coefficient(&inst.seq, k, m, l) == oracle, || {
                    format!("corrected coefficient wrong at ({k},{m};{l})")
                })?;
                if naive_coefficient(f, k, m, l) != oracle {
                    coefficient_misses += 1;
                }
            }
            let oracle = Exact::from(inst.poset.count_multichains(&x, &y, 2).unwrap());
            ensure(zeta2.get(k, m) == oracle, || {
                format!("corrected zeta2 wrong at ({k},{m})")
            })?;
            if Exact::from(naive_zeta2(f, k, m)) != oracle {
                zeta2_misses += 1;
            }
            cases += 1;
        }
    }
    ensure(coefficient_misses > 0, || {
        "naive coefficient never disagrees".into()
    })?;
    ensure(zeta2_misses > 0, || "naive zeta2 never disagrees".into())?;
    Ok(cases)
}

fn c8_algebra_laws(all: &[Instance]) -> Outcome {
    let mut cases = 0;
    let mut rng = seeded_rng(SEED ^ 8);
    for inst in all {
        let p = &inst.poset;
        let delta = IncidenceFunction::delta(p);
        let delta_r = ReducedFunction::delta(&inst.seq, inst.n()).unwrap();
        for trial in 0..50 {
            let at = |what: &str| format!("{} trial {trial}: {what}", inst.spec);
            let (f, g, h) = (
                random_incidence(p, &mut rng, 9),
                random_incidence(p, &mut rng, 9),
                random_incidence(p, &mut rng, 9),
            );
            let left = f.convolve(&g).unwrap().convolve(&h).unwrap();
            let right = f.convolve(&g.convolve(&h).unwrap()).unwrap();
            same_full(&left, &right).map_err(|e| at(&format!("associativity {e}")))?;
            same_full(&delta.convolve(&f).unwrap(), &f)
                .map_err(|e| at(&format!("left identity {e}")))?;
            same_full(&f.convolve(&delta).unwrap(), &f)
                .map_err(|e| at(&format!("right identity {e}")))?;

            let (a, b, c) = (
                random_reduced(&inst.seq, inst.n(), &mut rng, 9),
                random_reduced(&inst.seq, inst.n(), &mut rng, 9),
                random_reduced(&inst.seq, inst.n(), &mut rng, 9),
            );
            let left = a.convolve(&b).unwrap().convolve(&c).unwrap();
            let right = a.convolve(&b.convolve(&c).unwrap()).unwrap();
            ensure(left == right, || at("reduced associativity"))?;
            ensure(delta_r.convolve(&a).unwrap() == a, || {
                at("reduced left identity")
            })?;
            ensure(a.convolve(&delta_r).unwrap() == a, || {
                at("reduced right identity")
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn c9_structure(all: &[Instance]) -> Outcome {
    let mut cases = 0;
    for inst in all {
        let p = &inst.poset;
        let f = inst.seq.values();
        let edges: Vec<(Vertex, Vertex)> = p.hasse_edge_vertices().collect();
        for (x, y) in &edges {
            ensure(y.s == x.s + 1, || {
                format!("{}: edge {x}->{y} skips a level", inst.spec)
            })?;
        }
        for level in 0..inst.n() {
            let want = f[level] * f[level + 1];
            let got = edges.iter().filter(|(x, _)| x.s == level).count() as u64;
            ensure(got == want && p.edges_between(level) as u64 == want, || {
                format!(
                    "{}: {got} edges between {level} and {}, want {want}",
                    inst.spec,
                    level + 1
                )
            })?;
            for x in p.level(level) {
                for y in p.level(level + 1) {
                    ensure(edges.contains(&(*x, *y)), || {
                        format!("{}: missing {x}->{y}", inst.spec)
                    })?;
                }
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn run_binary(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_cobweb"))
        .args(args)
        .output()
        .expect("run cobweb binary")
}

fn c10_cli(_: &[Instance]) -> Outcome {
    let mut cases = 0;
    for (spec, n) in SEQUENCES {
        let n = n.to_string();
        let out = run_binary(&["verify", "--seq", spec, "--n", &n]);
        ensure(out.status.code() == Some(0), || {
            format!(
                "verify --seq {spec} exited {:?}:\n{}",
                out.status.code(),
                String::from_utf8_lossy(&out.stdout)
            )
        })?;
        cases += 1;
        let commands: [&[&str]; 4] = [
            &[
                "table", "--seq", spec, "--n", &n, "--fn", "mobius", "--format", "csv",
            ],
            &[
                "table", "--seq", spec, "--n", &n, "--fn", "eta_pow", "--power", "2", "--format",
                "json",
            ],
            &["table", "--seq", spec, "--n", &n, "--fn", "zeta2"],
            &[
                "chains", "--seq", spec, "--n", &n, "--from", "0", "--to", &n, "--oracle",
            ],
        ];
        for args in commands {
            let (a, b) = (run_binary(args), run_binary(args));
            ensure(a.status.code() == Some(0), || format!("{args:?} failed"))?;
            ensure(a.stdout == b.stdout && a.stderr == b.stderr, || {
                format!("{args:?} output differs between runs")
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn main() {
    let all = instances();
    let criteria: [Criterion; 10] = [
        ("segment-cardinality", c1_segment_cardinality),
        ("mobius-agreement", c2_mobius),
        ("chain-counts", c3_chain_counts),
        ("inverse-counters", c4_inverse_counters),
        ("reduction-soundness", c5_reduction_soundness),
        ("homomorphism", c6_homomorphism),
        ("incidence-coefficient-corrections", c7_endpoint_correction),
        ("algebra-laws", c8_algebra_laws),
        ("hasse-structure", c9_structure),
        ("cli-determinism", c10_cli),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check(&all) {
            Ok(cases) => println!("PASS {:>2} {name} ({cases} cases)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}

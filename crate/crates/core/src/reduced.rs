//! The standard reduced incidence algebra.
//!
//! Two segments of a cobweb poset are isomorphic exactly when their endpoint
//! ranks agree, so a type is a rank pair `(k,n)` and a reduced function is a
//! triangular table over `min_rank ≤ k ≤ n ≤ N`.
//!
//! The number of elements of rank `l` inside a segment of type `(k,n)` is 1
//! at the endpoints `l = k` and `l = n` (only `x`, respectively `y`,
//! qualifies) and `F_l` strictly between. Convolution weights each
//! intermediate rank by that coefficient.

use std::collections::HashMap;
use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, RankWitness, Result};
use crate::exact::Exact;
use crate::incidence::{exact_to_json, IncidenceFunction};
use crate::named::StandardFunction;
use crate::poset::{FinitePoset, Vertex};
use crate::sequence::FSequence;

/// Rank pair `(k,n)`: the class of segments `[x,y]` with `r(x) = k`, `r(y) = n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankType {
    pub k: usize,
    pub n: usize,
}

impl RankType {
    pub const fn new(k: usize, n: usize) -> Self {
        RankType { k, n }
    }
}

impl fmt::Display for RankType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.n)
    }
}

/// `|{z ∈ [x,y] : r(z) = l}|` for any segment `[x,y]` of type `(k,n)`.
pub fn incidence_coefficient(seq: &FSequence, k: usize, n: usize, l: usize) -> u64 {
    if k > n || l < k || l > n || n > seq.max_level() || k < seq.min_rank() {
        0
    } else if l == k || l == n {
        1
    } else {
        seq.f(l)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedFunction {
    seq: FSequence,
    values: Vec<Exact>,
}

impl ReducedFunction {
    /// Tabulates `value(k, n)` over the triangle of `seq` truncated to `max_rank`.
    pub fn from_fn(
        seq: &FSequence,
        max_rank: usize,
        mut value: impl FnMut(usize, usize) -> Exact,
    ) -> Result<Self> {
        let seq = seq.truncate(max_rank)?;
        let mut values = Vec::new();
        for k in seq.min_rank()..=max_rank {
            for n in k..=max_rank {
                values.push(value(k, n));
            }
        }
        Ok(ReducedFunction { seq, values })
    }

    pub fn zero(seq: &FSequence, max_rank: usize) -> Result<Self> {
        Self::from_fn(seq, max_rank, |_, _| Exact::ZERO)
    }

    pub fn sequence(&self) -> &FSequence {
        &self.seq
    }

    pub fn max_rank(&self) -> usize {
        self.seq.max_level()
    }

    pub fn min_rank(&self) -> usize {
        self.seq.min_rank()
    }

    /// Types in ascending `(k, n)` order.
    pub fn types(&self) -> impl Iterator<Item = RankType> {
        let max = self.max_rank();
        (self.min_rank()..=max).flat_map(move |k| (k..=max).map(move |n| RankType::new(k, n)))
    }

    fn in_triangle(&self, k: usize, n: usize) -> bool {
        self.min_rank() <= k && k <= n && n <= self.max_rank()
    }

    fn slot(&self, k: usize, n: usize) -> usize {
        let width = self.max_rank() + 1 - self.min_rank();
        let row = k - self.min_rank();
        row * width - row * row.saturating_sub(1) / 2 + (n - k)
    }

    fn at(&self, k: usize, n: usize) -> &Exact {
        &self.values[self.slot(k, n)]
    }

    /// `f(k,n)`; zero off the triangle (including `k > n`).
    pub fn get(&self, k: usize, n: usize) -> Exact {
        if self.in_triangle(k, n) {
            self.at(k, n).clone()
        } else {
            Exact::ZERO
        }
    }

    pub fn set(&mut self, k: usize, n: usize, value: Exact) -> Result<()> {
        if !self.in_triangle(k, n) {
            return Err(Error::ShapeMismatch);
        }
        let slot = self.slot(k, n);
        self.values[slot] = value;
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = (RankType, &Exact)> + '_ {
        self.types().map(move |t| (t, self.at(t.k, t.n)))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.seq.values() == other.seq.values() {
            Ok(())
        } else {
            Err(Error::ShapeMismatch)
        }
    }

    /// `(f ∗ g)(k,n) = Σ_{k≤l≤n} [k,n;l] f(k,l) g(l,n)`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Self::from_fn(&self.seq, self.max_rank(), |k, n| {
            (k..=n)
                .map(|l| {
                    let c = Exact::from(incidence_coefficient(&self.seq, k, n, l));
                    &(&c * self.at(k, l)) * other.at(l, n)
                })
                .sum()
        })
    }

    pub fn delta(seq: &FSequence, max_rank: usize) -> Result<Self> {
        Self::from_fn(
            seq,
            max_rank,
            |k, n| if k == n { Exact::ONE } else { Exact::ZERO },
        )
    }

    /// `s`-fold reduced convolution; `s = 0` gives the identity.
    pub fn power(&self, s: u32) -> Self {
        let mut result = Self::delta(&self.seq, self.max_rank()).expect("valid shape");
        for _ in 0..s {
            result = result.convolve(self).expect("same shape");
        }
        result
    }

    /// Two-sided inverse under [`convolve`](Self::convolve).
    pub fn invert(&self) -> Result<Self> {
        let diag: HashMap<usize, Exact> = (self.min_rank()..=self.max_rank())
            .map(|k| {
                self.at(k, k)
                    .recip()
                    .map(|v| (k, v))
                    .ok_or(Error::NotInvertibleAtRank(k))
            })
            .collect::<Result<_>>()?;
        let mut inv = Self::zero(&self.seq, self.max_rank())?;
        for k in self.min_rank()..=self.max_rank() {
            inv.set(k, k, diag[&k].clone())?;
            for n in (k + 1)..=self.max_rank() {
                let acc: Exact = (k..n)
                    .map(|l| {
                        let c = Exact::from(incidence_coefficient(&self.seq, k, n, l));
                        &(&c * inv.at(k, l)) * self.at(l, n)
                    })
                    .sum();
                // the l = n term carries coefficient 1
                inv.set(k, n, -(&acc * &diag[&n]))?;
            }
        }
        Ok(inv)
    }

    /// Closed forms for the standard family.
    pub fn standard(name: StandardFunction, seq: &FSequence, max_rank: usize) -> Result<Self> {
        use StandardFunction::*;
        let seq = seq.truncate(max_rank)?;
        let f = |i: usize| Exact::from(seq.f(i));
        let product = |from: usize, to: usize, g: &dyn Fn(usize) -> Exact| -> Exact {
            (from..to).fold(Exact::ONE, |acc, i| &acc * &g(i))
        };
        let indicator = |b: bool| if b { Exact::ONE } else { Exact::ZERO };
        match name {
            EtaPow(0) | ChiPow(0) => return Err(Error::InvalidPower(0)),
            _ => {}
        }
        Self::from_fn(&seq, max_rank, |k, n| match name {
            Delta => indicator(k == n),
            Zeta => Exact::ONE,
            Zeta2 if k == n => Exact::ONE,
            Zeta2 => &((k + 1)..n).map(f).sum::<Exact>() + &Exact::from(2),
            Eta => indicator(k < n),
            EtaPow(_) if k == n => Exact::ZERO,
            EtaPow(s) => {
                let interior: Vec<Exact> = ((k + 1)..n).map(f).collect();
                elementary_symmetric(&interior, (s - 1) as usize)
            }
            C => {
                if k == n {
                    Exact::ONE
                } else {
                    Exact::Small(-1)
                }
            }
            Chi => indicator(k + 1 == n),
            ChiPow(s) if k + s as usize == n => product(k + 1, n, &f),
            ChiPow(_) => Exact::ZERO,
            M => {
                if k == n {
                    Exact::ONE
                } else {
                    -indicator(k + 1 == n)
                }
            }
            Mobius => {
                let sign = if (n - k) % 2 == 0 {
                    Exact::ONE
                } else {
                    Exact::Small(-1)
                };
                &sign * &product(k + 1, n, &|i| &f(i) - &Exact::ONE)
            }
        })
    }

    /// Full incidence function with value `f(r(x), r(y))` on each comparable pair.
    pub fn lift<'p>(&self, poset: &'p FinitePoset) -> Result<IncidenceFunction<'p>> {
        if poset.sequence().values() != self.seq.values() {
            return Err(Error::ShapeMismatch);
        }
        Ok(IncidenceFunction::from_fn(poset, |x, y| {
            self.at(x.s, y.s).clone()
        }))
    }

    /// Reads off the common value on each type, failing with two witness
    /// segments if `f` is not constant on some type.
    pub fn project(f: &IncidenceFunction<'_>) -> Result<Self> {
        let seq = f.poset().sequence();
        let mut seen: HashMap<RankType, ((Vertex, Vertex), Exact)> = HashMap::new();
        for (x, y, v) in f.entries() {
            let ty = RankType::new(x.s, y.s);
            match seen.get(&ty) {
                None => {
                    seen.insert(ty, ((x, y), v.clone()));
                }
                Some((witness, first)) if first != v => {
                    return Err(Error::NotRankDependent(Box::new(RankWitness {
                        ty,
                        first: *witness,
                        first_value: first.to_string(),
                        second: (x, y),
                        second_value: v.to_string(),
                    })))
                }
                Some(_) => {}
            }
        }
        Self::from_fn(seq, seq.max_level(), |k, n| {
            seen.remove(&RankType::new(k, n))
                .map(|(_, v)| v)
                .expect("every type has a segment")
        })
    }

    /// CSV with header `k,n,value`, rows ascending by `(k, n)`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,n,value\n");
        for (t, v) in self.entries() {
            let _ = writeln!(out, "{},{},{}", t.k, t.n, v);
        }
        out
    }

    /// Parses [`to_csv`](Self::to_csv) output; every type of the triangle must appear.
    pub fn from_csv(seq: &FSequence, max_rank: usize, text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        if lines.next().map(str::trim) != Some("k,n,value") {
            return Err(Error::Parse("expected header `k,n,value`".into()));
        }
        let mut cells = HashMap::new();
        for line in lines {
            let mut parts = line.splitn(3, ',');
            let mut field = || {
                parts
                    .next()
                    .ok_or_else(|| Error::Parse(format!("short row `{line}`")))
            };
            let k: usize = field()?
                .trim()
                .parse()
                .map_err(|_| Error::Parse(line.into()))?;
            let n: usize = field()?
                .trim()
                .parse()
                .map_err(|_| Error::Parse(line.into()))?;
            let v: Exact = field()?.parse()?;
            cells.insert((k, n), v);
        }
        let shape = Self::zero(seq, max_rank)?;
        if let Some(t) = shape.types().find(|t| !cells.contains_key(&(t.k, t.n))) {
            return Err(Error::Parse(format!("missing type {t}")));
        }
        let table = Self::from_fn(seq, max_rank, |k, n| cells.remove(&(k, n)).unwrap())?;
        if let Some((k, n)) = cells.keys().next() {
            return Err(Error::Parse(format!(
                "type ({k},{n}) is outside the triangle"
            )));
        }
        Ok(table)
    }

    /// JSON object keyed `"k,n"`.
    pub fn to_json(&self) -> String {
        // keys in triangle order; a sorted map would put "10,10" before "2,2"
        let mut out = String::from("{");
        for (i, (t, v)) in self.entries().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "\n  \"{},{}\": {}", t.k, t.n, exact_to_json(v));
        }
        out.push_str("\n}\n");
        out
    }

    /// Upper-triangular grid, rows `k`, columns `n`.
    pub fn to_plain(&self) -> String {
        let min = self.min_rank();
        let max = self.max_rank();
        let cells: Vec<String> = self.entries().map(|(_, v)| v.to_string()).collect();
        let width = cells
            .iter()
            .map(|c| c.chars().count())
            .chain(std::iter::once(max.to_string().len()))
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        let _ = write!(out, "{:>4}", "k\\n");
        for n in min..=max {
            let _ = write!(out, " {:>width$}", n);
        }
        out.push('\n');
        for k in min..=max {
            let _ = write!(out, "{:>4}", k);
            for n in min..=max {
                if n < k {
                    let _ = write!(out, " {:>width$}", "");
                } else {
                    let _ = write!(out, " {:>width$}", self.at(k, n).to_string());
                }
            }
            out.truncate(out.trim_end().len());
            out.push('\n');
        }
        out
    }
}

/// `e_r(values)`: sum over all `r`-subsets of the product of their elements.
fn elementary_symmetric(values: &[Exact], r: usize) -> Exact {
    // e[j] after processing a prefix holds e_j of that prefix
    let mut e = vec![Exact::ZERO; r + 1];
    e[0] = Exact::ONE;
    for v in values {
        for j in (1..=r).rev() {
            let term = &e[j - 1] * v;
            e[j] = &e[j] + &term;
        }
    }
    e.swap_remove(r)
}

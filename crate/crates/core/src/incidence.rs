//! The incidence algebra of an explicit finite cobweb poset.
//!
//! Values are stored only for comparable pairs. Because vertices are indexed
//! level by level, the elements above `x` are `x` itself followed by the
//! contiguous index range starting at the first level above `r(x)`, so each
//! row of the table is a dense slice.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::Exact;
use crate::named::StandardFunction;
use crate::poset::{FinitePoset, Vertex};

#[derive(Clone, Debug)]
pub struct IncidenceFunction<'p> {
    poset: &'p FinitePoset,
    row_start: Vec<usize>,
    values: Vec<Exact>,
}

impl PartialEq for IncidenceFunction<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.poset == other.poset && self.values == other.values
    }
}

impl Eq for IncidenceFunction<'_> {}

fn row_layout(p: &FinitePoset) -> Vec<usize> {
    let mut starts = Vec::with_capacity(p.len() + 1);
    let mut offset = 0;
    starts.push(0);
    for a in 0..p.len() {
        offset += 1 + p.len() - p.above(p.vertex(a).s);
        starts.push(offset);
    }
    starts
}

fn delta(a: bool) -> Exact {
    if a {
        Exact::ONE
    } else {
        Exact::ZERO
    }
}

impl<'p> IncidenceFunction<'p> {
    /// Tabulates `value(x, y)` on every comparable pair `x ≤ y`.
    pub fn from_fn(poset: &'p FinitePoset, mut value: impl FnMut(Vertex, Vertex) -> Exact) -> Self {
        let row_start = row_layout(poset);
        let mut values = Vec::with_capacity(*row_start.last().unwrap());
        for a in 0..poset.len() {
            let x = poset.vertex(a);
            values.push(value(x, x));
            for b in poset.above(x.s)..poset.len() {
                values.push(value(x, poset.vertex(b)));
            }
        }
        IncidenceFunction {
            poset,
            row_start,
            values,
        }
    }

    pub fn zero(poset: &'p FinitePoset) -> Self {
        Self::from_fn(poset, |_, _| Exact::ZERO)
    }

    pub fn poset(&self) -> &'p FinitePoset {
        self.poset
    }

    /// Slot of the comparable pair `(a, b)`.
    fn slot(&self, a: usize, b: usize) -> usize {
        if a == b {
            self.row_start[a]
        } else {
            self.row_start[a] + 1 + b - self.poset.above(self.poset.vertex(a).s)
        }
    }

    /// Value at comparable index pair; caller guarantees `a ≤ b`.
    pub(crate) fn at(&self, a: usize, b: usize) -> &Exact {
        &self.values[self.slot(a, b)]
    }

    /// `f(x,y)`, zero when `x ≰ y`.
    pub fn get(&self, x: &Vertex, y: &Vertex) -> Result<Exact> {
        let a = self.poset.index_of(x)?;
        let b = self.poset.index_of(y)?;
        if !self.poset.leq_idx(a, b) {
            return Ok(Exact::ZERO);
        }
        Ok(self.at(a, b).clone())
    }

    pub fn set(&mut self, x: &Vertex, y: &Vertex, value: Exact) -> Result<()> {
        let a = self.poset.index_of(x)?;
        let b = self.poset.index_of(y)?;
        if !self.poset.leq_idx(a, b) {
            return Err(Error::NotComparable { x: *x, y: *y });
        }
        let slot = self.slot(a, b);
        self.values[slot] = value;
        Ok(())
    }

    /// Comparable pairs and values, ascending by `x` index then `y` index.
    pub fn entries(&self) -> impl Iterator<Item = (Vertex, Vertex, &Exact)> + '_ {
        let p = self.poset;
        (0..p.len()).flat_map(move |a| {
            let x = p.vertex(a);
            std::iter::once(a)
                .chain(p.above(x.s)..p.len())
                .map(move |b| (x, p.vertex(b), self.at(a, b)))
        })
    }

    /// Number of stored (comparable) pairs.
    pub fn support_len(&self) -> usize {
        self.values.len()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.poset, other.poset) || self.poset == other.poset {
            Ok(())
        } else {
            Err(Error::PosetMismatch)
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&Exact, &Exact) -> Exact) -> Result<Self> {
        self.check_same(other)?;
        Ok(IncidenceFunction {
            poset: self.poset,
            row_start: self.row_start.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| op(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Exact) -> Self {
        IncidenceFunction {
            poset: self.poset,
            row_start: self.row_start.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// Elementary members of the standard family, built from vertex data.
    pub fn standard_full(name: StandardFunction, poset: &'p FinitePoset) -> Result<Self> {
        use StandardFunction::*;
        let value: fn(&Vertex, &Vertex) -> Exact = match name {
            Delta => |x, y| delta(x == y),
            // δ(s,u)δ(t,v) + Σ_{k≥1} δ(t+k,v)
            Zeta => |x, y| &delta(x == y) + &delta(x.s < y.s),
            Eta => |x, y| delta(x.s < y.s),
            Chi => |x, y| delta(x.s + 1 == y.s),
            C => |x, y| &delta(x == y) - &delta(x.s < y.s),
            M => |x, y| &delta(x == y) - &delta(x.s + 1 == y.s),
            other => return Err(Error::NotElementary(other.to_string())),
        };
        Ok(Self::from_fn(poset, |x, y| value(&x, &y)))
    }

    /// Any member of the standard family, deriving the non-elementary ones
    /// by convolution powers and inversion.
    pub fn standard_derived(name: StandardFunction, poset: &'p FinitePoset) -> Result<Self> {
        use StandardFunction::*;
        match name {
            Zeta2 => Ok(Self::standard_full(Zeta, poset)?.power(2)),
            EtaPow(s) | ChiPow(s) if s == 0 => Err(Error::InvalidPower(0)),
            EtaPow(s) => Ok(Self::standard_full(Eta, poset)?.power(s)),
            ChiPow(s) => Ok(Self::standard_full(Chi, poset)?.power(s)),
            Mobius => Self::standard_full(Zeta, poset)?.invert(),
            elementary => Self::standard_full(elementary, poset),
        }
    }

    pub fn delta(poset: &'p FinitePoset) -> Self {
        Self::from_fn(poset, |x, y| delta(x == y))
    }

    /// `(f ∗ g)(x,y) = Σ_{x≤z≤y} f(x,z) g(z,y)`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let p = self.poset;
        let mut values = Vec::with_capacity(self.values.len());
        for a in 0..p.len() {
            let ra = p.vertex(a).s;
            let inner_from = p.above(ra);
            values.push(self.at(a, a) * other.at(a, a));
            for b in inner_from..p.len() {
                let inner_to = p.level_range(p.vertex(b).s).start;
                let mut acc = self.at(a, a) * other.at(a, b);
                for z in inner_from..inner_to {
                    let term = self.at(a, z) * other.at(z, b);
                    acc = &acc + &term;
                }
                let last = self.at(a, b) * other.at(b, b);
                values.push(&acc + &last);
            }
        }
        Ok(IncidenceFunction {
            poset: p,
            row_start: self.row_start.clone(),
            values,
        })
    }

    /// `k`-fold convolution; `k = 0` gives `δ`.
    pub fn power(&self, k: u32) -> Self {
        let mut result = Self::delta(self.poset);
        let mut base = self.clone();
        let mut k = k;
        // the poset is shared, so convolve cannot fail here
        while k > 0 {
            if k & 1 == 1 {
                result = result.convolve(&base).expect("same poset");
            }
            k >>= 1;
            if k > 0 {
                base = base.convolve(&base).expect("same poset");
            }
        }
        result
    }

    /// Two-sided convolution inverse by the triangular recursion
    /// `g(x,x) = 1/f(x,x)`, `g(x,y) = -(1/f(y,y)) Σ_{x≤z<y} g(x,z) f(z,y)`.
    pub fn invert(&self) -> Result<Self> {
        let p = self.poset;
        let diag_inv: Vec<Exact> = (0..p.len())
            .map(|a| {
                self.at(a, a)
                    .recip()
                    .ok_or_else(|| Error::NotInvertible(p.vertex(a)))
            })
            .collect::<Result<_>>()?;
        let mut inv = IncidenceFunction::zero(p);
        for a in 0..p.len() {
            let inner_from = p.above(p.vertex(a).s);
            let slot = inv.slot(a, a);
            inv.values[slot] = diag_inv[a].clone();
            for (b, d) in diag_inv.iter().enumerate().skip(inner_from) {
                let inner_to = p.level_range(p.vertex(b).s).start;
                let mut acc = inv.at(a, a) * self.at(a, b);
                for z in inner_from..inner_to {
                    let term = inv.at(a, z) * self.at(z, b);
                    acc = &acc + &term;
                }
                let value = -(&acc * d);
                let slot = inv.slot(a, b);
                inv.values[slot] = value;
            }
        }
        Ok(inv)
    }

    /// Möbius function from its closed form
    /// `δ(t,v)δ(s,u) − δ(t+1,v) + Σ_{k≥2} δ(t+k,v) (−1)^k Π_{i=t+1}^{v−1} (F_i − 1)`.
    pub fn mobius_closed_form(poset: &'p FinitePoset) -> Self {
        let seq = poset.sequence();
        Self::from_fn(poset, |x, y| {
            let (t, v) = (x.s, y.s);
            let mut value = &delta(x == y) - &delta(t + 1 == v);
            if v >= t + 2 {
                let sign = if (v - t) % 2 == 0 {
                    Exact::ONE
                } else {
                    Exact::Small(-1)
                };
                let product = ((t + 1)..v)
                    .map(|i| &Exact::from(seq.f(i)) - &Exact::ONE)
                    .fold(sign, |acc, factor| &acc * &factor);
                value = &value + &product;
            }
            value
        })
    }

    /// CSV with header `x_j,x_s,y_j,y_s,value`, one row per comparable pair.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x_j,x_s,y_j,y_s,value\n");
        for (x, y, v) in self.entries() {
            let _ = writeln!(out, "{},{},{},{},{}", x.j, x.s, y.j, y.s, v);
        }
        out
    }

    /// JSON array of `{"x_j", "x_s", "y_j", "y_s", "value"}` objects.
    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .entries()
            .map(|(x, y, v)| {
                json!({
                    "x_j": x.j,
                    "x_s": x.s,
                    "y_j": y.j,
                    "y_s": y.s,
                    "value": exact_to_json(v),
                })
            })
            .collect();
        serde_json::to_string_pretty(&Value::Array(rows)).expect("serializable")
    }
}

/// Integers that fit in `i64` become JSON numbers; anything else a string
/// (`"p/q"` or a long decimal integer).
pub(crate) fn exact_to_json(v: &Exact) -> Value {
    match v.to_i64() {
        Some(i) => Value::from(i),
        None => Value::String(v.to_string()),
    }
}

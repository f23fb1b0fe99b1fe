//! Symbolic measure variables indexed by isomorphism classes of class
//! members, and sparse polynomials over them with exact rational
//! coefficients.

use std::collections::{BTreeMap, BTreeSet};

use num::Zero;

use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph};
use crate::measure::unipoly::{RatFunc, UPoly};
use crate::predim::{in_class, GoodFunction};
use crate::rational::{q, q_str, Q};

/// A measure variable: one per isomorphism class of class members. The
/// single-vertex class is the distinguished unit (normalized to 1 by the
/// eliminator); the single-edge class is the elimination target.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MVar(CanonicalForm);

impl MVar {
    /// Builds the variable of a graph's isomorphism class; the graph must be
    /// a class member.
    pub fn new(g: &Graph, cfg: &GoodFunction) -> Result<MVar> {
        if !in_class(g, cfg)? {
            return Err(Error::Precondition(
                "measure variables are indexed by class members only".into(),
            ));
        }
        Ok(MVar(g.canonical_form()))
    }

    pub fn certificate(&self) -> &CanonicalForm {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    /// Predimension of the underlying class: `alpha * n - e`.
    pub fn predim(&self, alpha: &Q) -> Q {
        alpha.clone() * q(self.vertex_count() as i64) - q(self.edge_count() as i64)
    }

    pub fn representative(&self) -> Graph {
        self.0.to_graph()
    }

    pub fn key(&self) -> String {
        self.0.key()
    }
}

/// Multiset of measure variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial(BTreeMap<MVar, u32>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(BTreeMap::new())
    }

    pub fn var(v: MVar) -> Monomial {
        Monomial(BTreeMap::from([(v, 1)]))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (v, e) in &other.0 {
            *out.entry(v.clone()).or_insert(0) += e;
        }
        Monomial(out)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&MVar, u32)> {
        self.0.iter().map(|(v, e)| (v, *e))
    }

    pub fn exponent_of(&self, v: &MVar) -> u32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Predimension-weighted degree: the dimension bookkeeping that every
    /// raw derived identity must balance.
    pub fn weighted_degree(&self, alpha: &Q) -> Q {
        let mut d = q(0);
        for (v, e) in &self.0 {
            d += v.predim(alpha) * q(*e as i64);
        }
        d
    }

    fn without(&self, v: &MVar) -> Monomial {
        let mut out = self.0.clone();
        out.remove(v);
        Monomial(out)
    }

    pub fn render(&self, alias: &dyn Fn(&MVar) -> String) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|(v, e)| {
                let name = alias(v);
                if *e == 1 {
                    format!("m({name})")
                } else {
                    format!("m({name})^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Sparse polynomial in measure variables over exact rationals. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly(BTreeMap<Monomial, Q>);

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly(BTreeMap::new())
    }

    pub fn constant(c: Q) -> MPoly {
        let mut p = MPoly::zero();
        p.insert(Monomial::one(), c);
        p
    }

    pub fn one() -> MPoly {
        MPoly::constant(q(1))
    }

    pub fn var(v: MVar) -> MPoly {
        let mut p = MPoly::zero();
        p.insert(Monomial::var(v), q(1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.0.iter()
    }

    fn insert(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.0 {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly(self.0.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &other.0 {
                out.insert(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly(self.0.iter().map(|(m, a)| (m.clone(), a * c)).collect())
    }

    pub fn vars(&self) -> BTreeSet<MVar> {
        let mut out = BTreeSet::new();
        for m in self.0.keys() {
            for (v, _) in m.exponents() {
                out.insert(v.clone());
            }
        }
        out
    }

    /// Substitutes a variable by a polynomial.
    pub fn substitute(&self, var: &MVar, value: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.0 {
            let e = m.exponent_of(var);
            let mut term = MPoly::zero();
            term.insert(m.without(var), c.clone());
            for _ in 0..e {
                term = term.mul(value);
            }
            out = out.add(&term);
        }
        out
    }

    pub fn render(&self, alias: &dyn Fn(&MVar) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in self.0.iter().rev() {
            let body = if m.is_one() {
                q_str(c)
            } else if *c == q(1) {
                m.render(alias)
            } else if *c == q(-1) {
                format!("-{}", m.render(alias))
            } else {
                format!("{}*{}", q_str(c), m.render(alias))
            };
            parts.push(body);
        }
        let mut out = String::new();
        for (k, p) in parts.iter().enumerate() {
            if k == 0 {
                out.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

/// Polynomial in the measure variables that are still unsolved, with
/// coefficients that are rational functions in the elimination target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RPoly(BTreeMap<Monomial, RatFunc>);

impl RPoly {
    pub fn zero() -> RPoly {
        RPoly(BTreeMap::new())
    }

    fn insert(&mut self, m: Monomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().add(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RatFunc)> {
        self.0.iter()
    }

    pub fn sub(&self, other: &RPoly) -> RPoly {
        let mut out = self.clone();
        for (m, c) in &other.0 {
            out.insert(m.clone(), c.neg());
        }
        out
    }

    pub fn vars(&self) -> BTreeSet<MVar> {
        let mut out = BTreeSet::new();
        for m in self.0.keys() {
            for (v, _) in m.exponents() {
                out.insert(v.clone());
            }
        }
        out
    }

    pub fn constant_part(&self) -> RatFunc {
        self.0
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    /// Coefficient of `var^1`, summed over monomials linear in `var`.
    /// Errors if `var` occurs with exponent 2 or more.
    pub fn linear_coefficient(&self, var: &MVar) -> Result<RatFunc> {
        let mut acc = RatFunc::zero();
        for (m, c) in &self.0 {
            match m.exponent_of(var) {
                0 => {}
                1 => {
                    let rest = m.without(var);
                    if !rest.is_one() {
                        return Err(Error::NotTriangular(format!(
                            "variable appears mixed with unsolved variables in {}",
                            m.render(&|v: &MVar| v.key())
                        )));
                    }
                    acc = acc.add(c);
                }
                _ => {
                    return Err(Error::NotTriangular(
                        "variable appears nonlinearly".into(),
                    ))
                }
            }
        }
        Ok(acc)
    }

    /// Smallest order of vanishing at 0 among the coefficients.
    pub fn lambda_valuation(&self) -> Option<i64> {
        self.0
            .values()
            .map(|c| c.lambda_valuation())
            .min()
    }
}

/// Converts a raw measure polynomial into an [`RPoly`]: the unit variable
/// becomes 1, the target variable becomes the rational-function generator,
/// and previously solved variables are substituted.
pub fn to_rpoly(
    p: &MPoly,
    target: &MVar,
    unit: &MVar,
    solved: &BTreeMap<MVar, RatFunc>,
) -> Result<RPoly> {
    let lambda = RatFunc::from_poly(UPoly::monomial(q(1), 1));
    let mut out = RPoly::zero();
    for (m, c) in p.terms() {
        let mut coeff = RatFunc::constant(c.clone());
        let mut residual = Monomial::one();
        for (v, e) in m.exponents() {
            if v == unit {
                continue;
            }
            if v == target {
                coeff = coeff.mul(&lambda.pow(e));
            } else if let Some(s) = solved.get(v) {
                coeff = coeff.mul(&s.pow(e));
            } else {
                for _ in 0..e {
                    residual = residual.mul(&Monomial::var(v.clone()));
                }
            }
        }
        out.insert(residual, coeff);
    }
    Ok(out)
}

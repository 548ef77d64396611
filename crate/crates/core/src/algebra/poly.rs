//! Sparse multivariate polynomials in canonical form.
//!
//! Terms are kept in a `BTreeMap` keyed by monomial under a graded
//! lexicographic order (parameter names ordered alphabetically), so equal
//! polynomials have identical representations and serialization is
//! deterministic. Zero coefficients are never stored.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::scalar::Scalar;

use super::valuation::Valuation;

/// A power product of parameters, e.g. `p^2 * q`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: BTreeMap<String, u32>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn var(name: &str) -> Self {
        let mut exps = BTreeMap::new();
        exps.insert(name.to_string(), 1);
        Monomial { exps }
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        self.exps.get(name).copied().unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.exps.keys().map(|s| s.as_str())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            *exps.entry(v.clone()).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// Exact monomial quotient, `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            let cur = exps.get_mut(v)?;
            if *cur < *e {
                return None;
            }
            *cur -= e;
            if *cur == 0 {
                exps.remove(v);
            }
        }
        Some(Monomial { exps })
    }

    fn with_exp(name: &str, e: u32) -> Monomial {
        let mut exps = BTreeMap::new();
        if e > 0 {
            exps.insert(name.to_string(), e);
        }
        Monomial { exps }
    }
}

/// Graded lexicographic order; admissible, so leading terms behave under
/// multiplication and exact division by leading term is sound.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        // Tie-break: earlier parameter name = higher precedence; greater
        // exponent on the first differing name wins.
        let mut a = self.exps.iter();
        let mut b = other.exps.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => {
                    if va == vb {
                        match ea.cmp(eb) {
                            Ordering::Equal => continue,
                            o => return o,
                        }
                    }
                    // The lexicographically smaller name carries a positive
                    // exponent where the other has zero.
                    return if va < vb { Ordering::Greater } else { Ordering::Less };
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with coefficients in `C`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<C: Scalar> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero_poly() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        Polynomial { terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(name), C::one());
        Polynomial { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Polynomial::zero_poly();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_unit())
    }

    /// The constant value if this polynomial has no parameters.
    pub fn as_constant(&self) -> Option<C> {
        if self.terms.is_empty() {
            return Some(C::zero());
        }
        if self.is_constant() {
            return self.terms.get(&Monomial::unit()).cloned();
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        self.terms.keys().map(|m| m.degree_in(name)).max().unwrap_or(0)
    }

    /// All parameter names occurring with nonzero exponent.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            out.extend(m.vars().map(|s| s.to_string()));
        }
        out
    }

    /// Leading term under the graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Polynomial::zero_poly();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::constant(C::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact substitution. Errors if a parameter of the polynomial is
    /// unassigned; extra assignments in `v` are fine.
    pub fn eval(&self, v: &Valuation<C>) -> Result<C, AlgebraError> {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (name, e) in &m.exps {
                let x = v
                    .get(name)
                    .ok_or_else(|| AlgebraError::MissingParameter(name.clone()))?;
                for _ in 0..*e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to `name`.
    pub fn partial_derivative(&self, name: &str) -> Self {
        let mut out = Polynomial::zero_poly();
        for (m, c) in &self.terms {
            let e = m.degree_in(name);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            if e == 1 {
                exps.remove(name);
            } else {
                exps.insert(name.to_string(), e - 1);
            }
            out.add_term(Monomial { exps }, c.clone() * C::from_nat(e));
        }
        out
    }

    /// Substitutes a single parameter by a constant, keeping the rest.
    pub fn substitute(&self, name: &str, value: &C) -> Self {
        let mut out = Polynomial::zero_poly();
        for (m, c) in &self.terms {
            let e = m.degree_in(name);
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff = coeff * value.clone();
            }
            let mut exps = m.exps.clone();
            exps.remove(name);
            out.add_term(Monomial { exps }, coeff);
        }
        out
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `name`
    /// over the ring of polynomials in the remaining parameters, indexed by
    /// the exponent of `name`.
    pub fn coeffs_in(&self, name: &str) -> BTreeMap<u32, Polynomial<C>> {
        let mut out: BTreeMap<u32, Polynomial<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.degree_in(name);
            let mut exps = m.exps.clone();
            exps.remove(name);
            out.entry(e)
                .or_insert_with(Polynomial::zero_poly)
                .add_term(Monomial { exps }, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Rebuilds from univariate coefficients in `name`.
    pub fn from_coeffs_in(name: &str, coeffs: &BTreeMap<u32, Polynomial<C>>) -> Self {
        let mut out = Polynomial::zero_poly();
        for (e, p) in coeffs {
            let m = Monomial::with_exp(name, *e);
            for (k, c) in &p.terms {
                out.add_term(k.mul(&m), c.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Zero for Polynomial<C> {
    fn zero() -> Self {
        Polynomial::zero_poly()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Scalar> One for Polynomial<C> {
    fn one() -> Self {
        Polynomial::constant(C::one())
    }
}

impl<C: Scalar> Add for Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<C: Scalar> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<C: Scalar> Sub for Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<C: Scalar> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<C: Scalar> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Self {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Scalar> Mul for Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Scalar> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        let mut out = Polynomial::zero_poly();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Ascending graded-lex: constants first, reads naturally.
        let mut first = true;
        for (m, c) in &self.terms {
            let cs = format!("{c}");
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_unit() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

// ---- division and gcd over a field -------------------------------------

impl<C: crate::scalar::FieldScalar> Polynomial<C> {
    /// Exact multivariate division; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial<C>) -> Option<Polynomial<C>> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Polynomial::zero_poly();
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rm.div(&dm)?;
            let qc = rc / dc.clone();
            let t = Polynomial::from_terms([(qm, qc)]);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Multivariate GCD, normalized monic (leading coefficient one).
    /// Recursive primitive-PRS construction: pick a main variable, split
    /// into content and primitive part over the remaining parameters.
    pub fn gcd(a: &Polynomial<C>, b: &Polynomial<C>) -> Polynomial<C> {
        let g = Self::gcd_raw(a, b);
        g.monic()
    }

    fn monic(&self) -> Polynomial<C> {
        match self.leading() {
            None => Polynomial::zero_poly(),
            Some((_, c)) => {
                let inv = C::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    fn gcd_raw(a: &Polynomial<C>, b: &Polynomial<C>) -> Polynomial<C> {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        let mut vars = a.vars();
        vars.extend(b.vars());
        let var = match vars.iter().next() {
            None => return Polynomial::constant(C::one()),
            Some(v) => v.clone(),
        };

        let ca = a.coeffs_in(&var);
        let cb = b.coeffs_in(&var);
        let cont_a = Self::content(&ca);
        let cont_b = Self::content(&cb);
        let cont_gcd = Self::gcd_raw(&cont_a, &cont_b);
        let pa = Self::div_coeffs(&ca, &cont_a);
        let pb = Self::div_coeffs(&cb, &cont_b);

        let pp = Self::univariate_gcd(pa, pb);
        let pp_poly = Polynomial::from_coeffs_in(&var, &pp);
        &pp_poly * &cont_gcd
    }

    fn content(c: &BTreeMap<u32, Polynomial<C>>) -> Polynomial<C> {
        let mut g = Polynomial::zero_poly();
        for p in c.values() {
            g = Self::gcd_raw(&g, p);
        }
        g
    }

    fn div_coeffs(
        c: &BTreeMap<u32, Polynomial<C>>,
        d: &Polynomial<C>,
    ) -> BTreeMap<u32, Polynomial<C>> {
        c.iter()
            .map(|(e, p)| {
                let q = p.exact_div(d).expect("content must divide");
                (*e, q)
            })
            .collect()
    }

    /// Primitive PRS on primitive parts viewed in `(rest)[var]`.
    fn univariate_gcd(
        mut f: BTreeMap<u32, Polynomial<C>>,
        mut g: BTreeMap<u32, Polynomial<C>>,
    ) -> BTreeMap<u32, Polynomial<C>> {
        let deg = |p: &BTreeMap<u32, Polynomial<C>>| p.keys().next_back().copied();
        if deg(&f) < deg(&g) {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_empty() {
            let r = Self::pseudo_rem(&f, &g);
            f = g;
            g = Self::primitive(&r);
        }
        Self::primitive(&f)
    }

    fn primitive(p: &BTreeMap<u32, Polynomial<C>>) -> BTreeMap<u32, Polynomial<C>> {
        if p.is_empty() {
            return BTreeMap::new();
        }
        let cont = Self::content(p);
        Self::div_coeffs(p, &cont)
    }

    /// Pseudo-remainder of `f` by `g` in `(rest)[var]`.
    fn pseudo_rem(
        f: &BTreeMap<u32, Polynomial<C>>,
        g: &BTreeMap<u32, Polynomial<C>>,
    ) -> BTreeMap<u32, Polynomial<C>> {
        let dg = *g.keys().next_back().expect("nonzero divisor");
        let lg = g[&dg].clone();
        let mut r = f.clone();
        loop {
            let dr = match r.keys().next_back() {
                None => return r,
                Some(d) => *d,
            };
            if dr < dg {
                return r;
            }
            let lr = r[&dr].clone();
            // r := lg * r - lr * x^(dr-dg) * g
            let mut next: BTreeMap<u32, Polynomial<C>> = BTreeMap::new();
            for (e, p) in &r {
                next.insert(*e, p * &lg);
            }
            for (e, p) in g {
                let shifted = e + (dr - dg);
                let sub = p * &lr;
                let entry = next.entry(shifted).or_insert_with(Polynomial::zero_poly);
                *entry = &*entry - &sub;
            }
            next.retain(|_, p| !p.is_zero());
            r = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;
    use crate::Poly;

    fn p(s: &str) -> Poly {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let f = p("p + 1 - p - 1");
        assert!(f.is_zero());
        assert_eq!(p("p + 1 - p"), p("1"));
    }

    #[test]
    fn expansion_matches_composition_labels() {
        assert_eq!(p("(1-p)*(1-p)"), p("1 - 2*p + p^2"));
        assert_eq!(p("(1-p)^2"), p("1 - 2*p + p^2"));
    }

    #[test]
    fn scale_by_zero() {
        assert!(p("q").scale(&crate::rat(0, 1)).is_zero());
    }

    #[test]
    fn derivative_examples() {
        let f = p("1 - (p^2/10 + (p - p^2)*q)");
        assert_eq!(f.partial_derivative("q"), p("-(p - p^2)"));
        assert_eq!(p("q").partial_derivative("p"), p("0"));
        assert_eq!(p("p^2").partial_derivative("p"), p("2*p"));
    }

    #[test]
    fn gcd_cancels_common_factor() {
        let a = p("p^2 - p*q");
        let b = p("p*q - q^2");
        // common factor p - q
        let g = Poly::gcd(&a, &b);
        assert_eq!(g, p("p - q"));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = p("(1-p)*(1+q)^2");
        let b = p("1+q");
        let q = a.exact_div(&b).unwrap();
        assert_eq!(&q * &b, a);
        assert!(p("p^2+q").exact_div(&p("p+1")).is_none());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("q*p - 1 + p*p").to_string(), "-1 + p*q + p^2");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("9/10").to_string(), "9/10");
    }
}

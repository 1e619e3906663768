//! Sparse multivariate polynomials over ℚ with a canonical graded-lex term
//! order.
//!
//! Terms are kept sorted descending (leading term first) with no stored zero
//! coefficients, so structural equality is mathematical equality. The module
//! also provides the exact-division and subresultant-PRS GCD machinery that
//! rational-function normalization and the fraction-free determinant rely on.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ambient::Ambient;
use crate::Result;

/// Exact rational scalar. `num-rational` maintains the invariants the crate
/// needs: reduced fraction, positive denominator.
pub type Rat = num_rational::BigRational;

/// Convenience: integer as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Convenience: reduced fraction n/d as a [`Rat`].
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Raw term data: exponent vector → nonzero coefficient, sorted descending
/// graded-lex. Shared with [`crate::ambient`] to avoid reference cycles.
pub type TermData = Vec<(Vec<u32>, Rat)>;

/// Graded-lexicographic comparison: total degree first, then lexicographic
/// in the declared variable order.
pub fn cmp_grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => a.cmp(b),
        o => o,
    }
}

/// A sparse multivariate polynomial attached to an ambient algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ambient: Ambient,
    terms: TermData,
}

impl Poly {
    pub fn zero(ambient: Ambient) -> Self {
        Poly { ambient, terms: Vec::new() }
    }

    pub fn one(ambient: Ambient) -> Self {
        Self::constant(ambient, Rat::one())
    }

    pub fn constant(ambient: Ambient, c: Rat) -> Self {
        let n = ambient.n_vars();
        let mut p = Poly { ambient, terms: Vec::new() };
        if !c.is_zero() {
            p.terms.push((vec![0; n], c));
        }
        p
    }

    pub fn int_constant(ambient: Ambient, c: i64) -> Self {
        Self::constant(ambient, rat_int(c))
    }

    /// The variable `xᵢ`.
    pub fn var(ambient: Ambient, i: usize) -> Self {
        assert!(i < ambient.n_vars(), "variable index out of range");
        let mut expo = vec![0; ambient.n_vars()];
        expo[i] = 1;
        Poly { ambient, terms: vec![(expo, Rat::one())] }
    }

    pub fn monomial(ambient: Ambient, expo: Vec<u32>, c: Rat) -> Self {
        assert_eq!(expo.len(), ambient.n_vars());
        let mut p = Poly { ambient, terms: Vec::new() };
        if !c.is_zero() {
            p.terms.push((expo, c));
        }
        p
    }

    /// Build from raw terms (any order, duplicates allowed).
    pub fn from_terms(ambient: Ambient, terms: TermData) -> Self {
        let n = ambient.n_vars();
        for (e, _) in &terms {
            assert_eq!(e.len(), n, "exponent vector length mismatch");
        }
        let mut p = Poly { ambient, terms };
        p.normalize();
        p
    }

    pub fn into_terms(self) -> TermData {
        self.terms
    }

    pub fn terms(&self) -> &[(Vec<u32>, Rat)] {
        &self.terms
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    fn normalize(&mut self) {
        self.terms.sort_by(|a, b| cmp_grlex(&b.0, &a.0));
        let mut out: TermData = Vec::with_capacity(self.terms.len());
        for (e, c) in self.terms.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.0 == e {
                    last.1 += c;
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((e, c));
            }
        }
        self.terms = out;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0))
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0) && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&[u32], &Rat)> {
        self.terms.first().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn leading_coeff(&self) -> Rat {
        self.terms.first().map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert!(crate::ambient::same_ambient(&self.ambient, &other.ambient));
        // merge two descending-sorted term lists
        let mut out: TermData = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match cmp_grlex(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { ambient: self.ambient.clone(), terms: out }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert!(crate::ambient::same_ambient(&self.ambient, &other.ambient));
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.ambient.clone());
        }
        let mut acc: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let c = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        let mut terms: TermData = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| cmp_grlex(&b.0, &a.0));
        Poly { ambient: self.ambient.clone(), terms }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.ambient.clone());
        }
        Poly {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut result = Poly::one(self.ambient.clone());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Poly {
        assert!(i < self.ambient.n_vars());
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] > 0)
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2[i] -= 1;
                (e2, c * Rat::from_integer(BigInt::from(e[i])))
            })
            .collect();
        Poly::from_terms(self.ambient.clone(), terms)
    }

    /// Degree in a single variable.
    pub fn deg_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(e, _)| e[var]).max().unwrap_or(0)
    }

    /// View as a univariate polynomial in `var`: exponent → coefficient
    /// polynomial (with `var` zeroed out).
    fn coeffs_in(&self, var: usize) -> BTreeMap<u32, Poly> {
        let mut map: BTreeMap<u32, TermData> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[var];
            let mut e2 = e.clone();
            e2[var] = 0;
            map.entry(k).or_default().push((e2, c.clone()));
        }
        map.into_iter()
            .map(|(k, ts)| (k, Poly::from_terms(self.ambient.clone(), ts)))
            .collect()
    }

    fn lead_coeff_in(&self, var: usize) -> Poly {
        let d = self.deg_in(var);
        let ts: TermData = self
            .terms
            .iter()
            .filter(|(e, _)| e[var] == d)
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2[var] = 0;
                (e2, c.clone())
            })
            .collect();
        Poly::from_terms(self.ambient.clone(), ts)
    }

    fn mul_var_pow(&self, var: usize, k: u32) -> Poly {
        Poly {
            ambient: self.ambient.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2[var] += k;
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Exact division: returns `Some(q)` with `self = q·divisor`, else `None`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero(self.ambient.clone()));
        }
        if let Some(c) = divisor.as_constant() {
            let inv = Rat::one() / c;
            return Some(self.scale(&inv));
        }
        let (lead_e, lead_c) = divisor.leading().unwrap();
        let lead_e = lead_e.to_vec();
        let lead_c = lead_c.clone();
        let mut rem = self.clone();
        let mut quo: TermData = Vec::new();
        while !rem.is_zero() {
            let (re, rc) = rem.leading().unwrap();
            if !lead_e.iter().zip(re).all(|(d, r)| d <= r) {
                return None;
            }
            let qe: Vec<u32> = re.iter().zip(&lead_e).map(|(r, d)| r - d).collect();
            let qc = rc / &lead_c;
            let t = Poly::monomial(self.ambient.clone(), qe.clone(), qc.clone());
            rem = rem.sub(&t.mul(divisor));
            quo.push((qe, qc));
        }
        Some(Poly::from_terms(self.ambient.clone(), quo))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Split into `(scale, primitive)` with `self = scale · primitive`, where
    /// `primitive` has integer coefficients, content 1, and positive leading
    /// coefficient. The zero polynomial yields `(0, 0)`.
    pub fn int_primitive(&self) -> (Rat, Poly) {
        if self.is_zero() {
            return (Rat::zero(), self.clone());
        }
        let mut denom_lcm = BigInt::one();
        for (_, c) in &self.terms {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut numer_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            let scaled = c.numer() * (&denom_lcm / c.denom());
            numer_gcd = numer_gcd.gcd(&scaled);
        }
        // sign from the graded-lex leading coefficient
        let mut scale = Rat::new(numer_gcd, denom_lcm);
        if self.terms[0].1.is_negative() {
            scale = -scale;
        }
        let inv = Rat::one() / scale.clone();
        (scale, self.scale(&inv))
    }

    /// GCD of the integer-primitive parts, canonical (primitive, positive
    /// leading coefficient). Rational content is the caller's business.
    pub fn gcd(&self, other: &Poly) -> Poly {
        debug_assert!(crate::ambient::same_ambient(&self.ambient, &other.ambient));
        let (_, p) = self.int_primitive();
        let (_, q) = other.int_primitive();
        pp_gcd(&p, &q)
    }

    /// LCM of the integer-primitive parts.
    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.ambient.clone());
        }
        let g = self.gcd(other);
        let (_, p) = self.int_primitive();
        let (_, q) = other.int_primitive();
        let (_, l) = p.mul(&q.div_exact(&g).expect("gcd divides")).int_primitive();
        l
    }

    /// Membership in the multiplicative set generated by the declared
    /// denominator generators: true when `self` is a nonzero constant times a
    /// product of powers of the generators, established by repeated exact
    /// division.
    pub fn is_supported_denominator(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let mut p = self.clone();
        let gens = self.ambient.denominator_gens();
        loop {
            if p.is_constant() {
                return true;
            }
            let mut divided = false;
            for g in &gens {
                while let Some(q) = p.div_exact(g) {
                    p = q;
                    divided = true;
                    if p.is_constant() {
                        return true;
                    }
                }
            }
            if !divided {
                return false;
            }
        }
    }

    /// Substitute variables: `values[i]` replaces `xᵢ`. Used by the checkers'
    /// point probes; exact.
    pub fn eval_rat(&self, values: &[Rat]) -> Rat {
        assert_eq!(values.len(), self.ambient.n_vars());
        let mut total = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term *= &values[i];
                }
            }
            total += term;
        }
        total
    }

    /// Reattach to a compatible ambient handle (used by cover restrictions:
    /// same variables, possibly more denominator generators).
    pub fn with_ambient(&self, ambient: &Ambient) -> Result<Poly> {
        if ambient.n_vars() != self.ambient.n_vars() {
            return Err(crate::Error::AmbientMismatch);
        }
        Ok(Poly { ambient: ambient.clone(), terms: self.terms.clone() })
    }
}

/// GCD of integer-coefficient polynomials, canonicalized to a primitive
/// polynomial with positive graded-lex leading coefficient.
fn pp_gcd(p: &Poly, q: &Poly) -> Poly {
    if p.is_zero() {
        return q.int_primitive().1;
    }
    if q.is_zero() {
        return p.int_primitive().1;
    }
    // constants and monomials resolve without the PRS machinery
    if p.is_constant() || q.is_constant() {
        let g = int_content(p).gcd(&int_content(q));
        return Poly::constant(p.ambient().clone(), Rat::from_integer(g));
    }
    if p.terms().len() == 1 || q.terms().len() == 1 {
        return monomial_gcd(p, q);
    }
    let n = p.ambient().n_vars();
    let var = (0..n).find(|&v| p.deg_in(v) > 0 || q.deg_in(v) > 0);
    let var = match var {
        None => {
            // both integer constants
            let a = p.as_constant().unwrap();
            let b = q.as_constant().unwrap();
            let g = a.numer().gcd(b.numer());
            return Poly::constant(p.ambient().clone(), Rat::from_integer(g));
        }
        Some(v) => v,
    };
    if p.deg_in(var) == 0 {
        return pp_gcd(p, &content_in(q, var));
    }
    if q.deg_in(var) == 0 {
        return pp_gcd(&content_in(p, var), q);
    }
    let cont_p = content_in(p, var);
    let cont_q = content_in(q, var);
    let c = pp_gcd(&cont_p, &cont_q);
    let pb = p.div_exact(&cont_p).expect("content divides");
    let qb = q.div_exact(&cont_q).expect("content divides");
    let g = subresultant_gcd(&pb, &qb, var);
    c.mul(&g).int_primitive().1
}

/// GCD of the integer numerators of all coefficients (inputs have integer
/// coefficients when this is called).
fn int_content(p: &Poly) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in p.terms() {
        debug_assert!(c.denom().is_one());
        g = g.gcd(c.numer());
        if g.is_one() {
            break;
        }
    }
    g
}

/// GCD when at least one side is a single term: the common monomial part
/// times the integer content GCD.
fn monomial_gcd(p: &Poly, q: &Poly) -> Poly {
    let n = p.ambient().n_vars();
    let mut expo = vec![u32::MAX; n];
    for (e, _) in p.terms().iter().chain(q.terms()) {
        for (m, &k) in e.iter().enumerate() {
            expo[m] = expo[m].min(k);
        }
    }
    let g = int_content(p).gcd(&int_content(q));
    Poly::monomial(p.ambient().clone(), expo, Rat::from_integer(g))
}

/// Content with respect to one variable: GCD of the coefficient polynomials.
fn content_in(p: &Poly, var: usize) -> Poly {
    let mut acc = Poly::zero(p.ambient().clone());
    for (_, coeff) in p.coeffs_in(var) {
        acc = pp_gcd(&acc, &coeff);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Pseudo-remainder of `a` by `b` in the main variable `var`:
/// `lc(b)^(deg a − deg b + 1) · a ≡ prem  (mod b)`.
fn prem(a: &Poly, b: &Poly, var: usize) -> Poly {
    let db = b.deg_in(var);
    let lb = b.lead_coeff_in(var);
    let mut r = a.clone();
    let mut e = a.deg_in(var) as i64 - db as i64 + 1;
    while !r.is_zero() && r.deg_in(var) >= db {
        let dr = r.deg_in(var);
        let lr = r.lead_coeff_in(var);
        r = r.mul(&lb).sub(&lr.mul(&b.mul_var_pow(var, dr - db)));
        e -= 1;
    }
    debug_assert!(e >= 0);
    let mut scale = Poly::one(a.ambient().clone());
    for _ in 0..e {
        scale = scale.mul(&lb);
    }
    r.mul(&scale)
}

/// Subresultant polynomial remainder sequence on polynomials primitive in
/// `var`; returns the primitive part of the GCD.
fn subresultant_gcd(p: &Poly, q: &Poly, var: usize) -> Poly {
    let (mut a, mut b) = if p.deg_in(var) >= q.deg_in(var) {
        (p.clone(), q.clone())
    } else {
        (q.clone(), p.clone())
    };
    let one = Poly::one(p.ambient().clone());
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let delta = a.deg_in(var) - b.deg_in(var);
        let r = prem(&a, &b, var);
        if r.is_zero() {
            let cont = content_in(&b, var);
            return b.div_exact(&cont).expect("content divides").int_primitive().1;
        }
        if r.deg_in(var) == 0 {
            // common divisor of var-primitive polynomials has var-degree 0
            return one;
        }
        a = b;
        let mut divisor = g.clone();
        for _ in 0..delta {
            divisor = divisor.mul(&h);
        }
        b = r.div_exact(&divisor).expect("subresultant division is exact");
        g = a.lead_coeff_in(var);
        h = if delta == 0 {
            h
        } else {
            let mut num = g.clone();
            for _ in 1..delta {
                num = num.mul(&g);
            }
            let mut den = one.clone();
            for _ in 1..delta {
                den = den.mul(&h);
            }
            num.div_exact(&den).expect("subresultant h-update is exact")
        };
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let is_const = e.iter().all(|&k| k == 0);
            let abs = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut wrote_coeff = false;
            if is_const || !abs.is_one() {
                write!(f, "{abs}")?;
                wrote_coeff = true;
            }
            let mut first_var = !wrote_coeff;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first_var || wrote_coeff {
                    write!(f, "*")?;
                }
                first_var = false;
                write!(f, "{}", self.ambient.var_name(i))?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
            let _ = first_var;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::AlgebraDescriptor;

    fn ring(vars: &[&str]) -> Ambient {
        AlgebraDescriptor::polynomial_ring(vars.to_vec()).unwrap()
    }

    fn p(ambient: &Ambient, s: &str) -> Poly {
        crate::expr::parse_expr(s, ambient).unwrap().as_poly().unwrap()
    }

    #[test]
    fn grlex_order() {
        // x^2 > x*y > y^2 > x > y > 1 for variables [x, y]
        assert_eq!(cmp_grlex(&[2, 0], &[1, 1]), Ordering::Greater);
        assert_eq!(cmp_grlex(&[1, 1], &[0, 2]), Ordering::Greater);
        assert_eq!(cmp_grlex(&[1, 0], &[0, 2]), Ordering::Less);
        assert_eq!(cmp_grlex(&[1, 0], &[0, 1]), Ordering::Greater);
    }

    #[test]
    fn arithmetic_and_display() {
        let a = ring(&["x", "y"]);
        let f = p(&a, "x^2 - 1/3*y + 2");
        assert_eq!(f.to_string(), "x^2 - 1/3*y + 2");
        let g = p(&a, "x^2 + x*y");
        assert_eq!(f.add(&g).to_string(), "2*x^2 + x*y - 1/3*y + 2");
        assert_eq!(f.sub(&f).to_string(), "0");
        assert_eq!(
            p(&a, "x + y").mul(&p(&a, "x - y")).to_string(),
            "x^2 - y^2"
        );
        assert_eq!(p(&a, "x + 1").pow(3).to_string(), "x^3 + 3*x^2 + 3*x + 1");
    }

    #[test]
    fn partial_derivatives() {
        let a = ring(&["x", "y"]);
        assert_eq!(p(&a, "x^2*y").partial(0).to_string(), "2*x*y");
        assert_eq!(p(&a, "x").partial(1).to_string(), "0");
        // mixed partials commute
        let f = p(&a, "x^3*y^2 - 4*x*y + y^3");
        assert_eq!(f.partial(0).partial(1), f.partial(1).partial(0));
    }

    #[test]
    fn exact_division() {
        let a = ring(&["x", "y"]);
        let num = p(&a, "x^2 - y^2");
        let q = num.div_exact(&p(&a, "x - y")).unwrap();
        assert_eq!(q.to_string(), "x + y");
        assert!(num.div_exact(&p(&a, "x + 1")).is_none());
        assert!(p(&a, "x").divides(&p(&a, "x^3*y")));
    }

    #[test]
    fn int_primitive_parts() {
        let a = ring(&["x"]);
        let f = p(&a, "2*x + 2");
        let (s, prim) = f.int_primitive();
        assert_eq!(s, rat_int(2));
        assert_eq!(prim.to_string(), "x + 1");
        let g = p(&a, "-1/2*x");
        let (s, prim) = g.int_primitive();
        assert_eq!(s, rat(-1, 2));
        assert_eq!(prim.to_string(), "x");
    }

    #[test]
    fn gcd_univariate() {
        let a = ring(&["x"]);
        let f = p(&a, "x^2 - 1");
        let g = p(&a, "x - 1");
        assert_eq!(f.gcd(&g).to_string(), "x - 1");
        let f = p(&a, "x^4 - 1");
        let g = p(&a, "x^6 - 1");
        assert_eq!(f.gcd(&g).to_string(), "x^2 - 1");
        // sign canonicalization: positive leading coefficient
        let f = p(&a, "-x - 1");
        assert_eq!(f.gcd(&f).to_string(), "x + 1");
    }

    #[test]
    fn gcd_multivariate() {
        let a = ring(&["x", "y"]);
        let u = p(&a, "x + y");
        let v = p(&a, "x - y");
        let f = u.mul(&u).mul(&v);
        let g = u.mul(&v).mul(&v);
        assert_eq!(f.gcd(&g), u.mul(&v).int_primitive().1);
        // coprime
        assert_eq!(p(&a, "x + 1").gcd(&p(&a, "y + 1")).to_string(), "1");
        // integer contents are stripped: gcd of the primitive parts only
        let f = p(&a, "2*x^2*y + 2*x*y^2");
        let g = p(&a, "4*x*y");
        assert_eq!(f.gcd(&g).to_string(), "x*y");
    }

    #[test]
    fn gcd_three_vars() {
        let a = ring(&["x", "y", "z"]);
        let u = p(&a, "x*y - z^2");
        let f = u.mul(&p(&a, "x + z"));
        let g = u.mul(&p(&a, "y - 1"));
        assert_eq!(f.gcd(&g), u);
    }

    #[test]
    fn lcm_basic() {
        let a = ring(&["x"]);
        let f = p(&a, "x^2 - 1");
        let g = p(&a, "x^2 - x");
        // lcm = x(x-1)(x+1)
        assert_eq!(f.lcm(&g).to_string(), "x^3 - x");
    }

    #[test]
    fn supported_denominators() {
        let a = AlgebraDescriptor::new(vec!["x", "y"], &["x", "y"]).unwrap();
        assert!(p(&a, "x^2*y").is_supported_denominator());
        assert!(p(&a, "3*x").is_supported_denominator());
        assert!(p(&a, "7").is_supported_denominator());
        assert!(!p(&a, "x + 1").is_supported_denominator());
        assert!(!p(&a, "0").is_supported_denominator());
    }
}

//! Derivations, differential p-forms (p ≤ 4), and form-valued matrices.
//!
//! Forms are stored on strictly increasing index tuples only; all sign
//! bookkeeping happens in the wedge/contraction routines. Degree 4 exists
//! solely so closedness of 3-forms can be stated.

use std::collections::BTreeMap;
use std::fmt;

use crate::ambient::{check_ambient, same_ambient, Ambient};
use crate::matrix::MatrixA;
use crate::ratfunc::RatFunc;
use crate::{Error, Result};

pub const MAX_DEGREE: usize = 4;

/// An element of T(A): coefficients against the coordinate derivations ∂ᵢ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    ambient: Ambient,
    coeffs: Vec<RatFunc>,
}

impl Derivation {
    pub fn new(ambient: Ambient, coeffs: Vec<RatFunc>) -> Result<Self> {
        if coeffs.len() != ambient.n_vars() {
            return Err(Error::DimensionMismatch(format!(
                "derivation needs {} coefficients, got {}",
                ambient.n_vars(),
                coeffs.len()
            )));
        }
        for c in &coeffs {
            check_ambient(&ambient, c.ambient())?;
        }
        Ok(Derivation { ambient, coeffs })
    }

    pub fn zero(ambient: Ambient) -> Self {
        let coeffs = vec![RatFunc::zero(ambient.clone()); ambient.n_vars()];
        Derivation { ambient, coeffs }
    }

    /// The coordinate derivation ∂ᵢ.
    pub fn coordinate(ambient: Ambient, i: usize) -> Self {
        let mut d = Self::zero(ambient.clone());
        d.coeffs[i] = RatFunc::one(ambient);
        d
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &RatFunc {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Apply to a function: τ(f) = Σ τᵢ ∂ᵢf.
    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero(self.ambient.clone());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add_rf(&c.mul_rf(&f.partial(i)));
            }
        }
        acc
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        debug_assert!(same_ambient(&self.ambient, &other.ambient));
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add_rf(b)).collect();
        Derivation { ambient: self.ambient.clone(), coeffs }
    }

    pub fn sub(&self, other: &Derivation) -> Derivation {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Derivation {
        Derivation {
            ambient: self.ambient.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg_rf()).collect(),
        }
    }

    pub fn scale(&self, a: &RatFunc) -> Derivation {
        Derivation {
            ambient: self.ambient.clone(),
            coeffs: self.coeffs.iter().map(|c| c.mul_rf(a)).collect(),
        }
    }

    pub fn with_ambient(&self, ambient: &Ambient) -> Result<Derivation> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.with_ambient(ambient))
            .collect::<Result<Vec<_>>>()?;
        Derivation::new(ambient.clone(), coeffs)
    }
}

/// Lie bracket of derivations: [σ, τ] = Σ (σ(τₘ) − τ(σₘ)) ∂ₘ.
pub fn lie_bracket(a: &Derivation, b: &Derivation) -> Result<Derivation> {
    check_ambient(a.ambient(), b.ambient())?;
    let coeffs = (0..a.ambient().n_vars())
        .map(|m| a.apply(b.coeff(m)).sub_rf(&b.apply(a.coeff(m))))
        .collect();
    Derivation::new(a.ambient().clone(), coeffs)
}

/// A differential form of fixed degree 0..4 on strictly increasing tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PForm {
    ambient: Ambient,
    degree: usize,
    terms: BTreeMap<Vec<u8>, RatFunc>,
}

impl PForm {
    pub fn zero(ambient: Ambient, degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE);
        PForm { ambient, degree, terms: BTreeMap::new() }
    }

    /// A 0-form.
    pub fn from_ratfunc(f: RatFunc) -> Self {
        let ambient = f.ambient().clone();
        let mut form = PForm::zero(ambient, 0);
        if !f.is_zero() {
            form.terms.insert(Vec::new(), f);
        }
        form
    }

    /// The basis 1-form dxᵢ.
    pub fn dx(ambient: Ambient, i: usize) -> Self {
        assert!(i < ambient.n_vars());
        let mut form = PForm::zero(ambient.clone(), 1);
        form.terms.insert(vec![i as u8], RatFunc::one(ambient));
        form
    }

    pub fn from_terms(
        ambient: Ambient,
        degree: usize,
        terms: Vec<(Vec<u8>, RatFunc)>,
    ) -> Result<Self> {
        let mut form = PForm::zero(ambient.clone(), degree);
        for (idx, c) in terms {
            if idx.len() != degree {
                return Err(Error::WrongDegree { expected: degree, got: idx.len() });
            }
            if !idx.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::Descriptor(format!(
                    "index tuple {idx:?} is not strictly increasing"
                )));
            }
            if idx.iter().any(|&i| (i as usize) >= ambient.n_vars()) {
                return Err(Error::Descriptor(format!("index tuple {idx:?} out of range")));
            }
            check_ambient(&ambient, c.ambient())?;
            form.insert_term(idx, c);
        }
        Ok(form)
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &RatFunc)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, idx: &[u8]) -> RatFunc {
        self.terms.get(idx).cloned().unwrap_or_else(|| RatFunc::zero(self.ambient.clone()))
    }

    /// The underlying function of a 0-form.
    pub fn as_ratfunc(&self) -> Result<RatFunc> {
        if self.degree != 0 {
            return Err(Error::WrongDegree { expected: 0, got: self.degree });
        }
        Ok(self.coeff(&[]))
    }

    fn insert_term(&mut self, idx: Vec<u8>, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(v) => {
                *v = v.add_rf(&c);
                if v.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c);
            }
        }
    }

    pub fn add(&self, other: &PForm) -> PForm {
        debug_assert!(same_ambient(&self.ambient, &other.ambient));
        assert_eq!(self.degree, other.degree, "cannot add forms of different degree");
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.insert_term(idx.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PForm) -> PForm {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PForm {
        PForm {
            ambient: self.ambient.clone(),
            degree: self.degree,
            terms: self.terms.iter().map(|(i, c)| (i.clone(), c.neg_rf())).collect(),
        }
    }

    pub fn scale(&self, a: &RatFunc) -> PForm {
        if a.is_zero() {
            return PForm::zero(self.ambient.clone(), self.degree);
        }
        let mut out = PForm::zero(self.ambient.clone(), self.degree);
        for (idx, c) in &self.terms {
            out.insert_term(idx.clone(), c.mul_rf(a));
        }
        out
    }

    pub fn scale_int(&self, k: i64) -> PForm {
        self.scale(&RatFunc::int_constant(self.ambient.clone(), k))
    }

    pub fn with_ambient(&self, ambient: &Ambient) -> Result<PForm> {
        let mut out = PForm::zero(ambient.clone(), self.degree);
        for (idx, c) in &self.terms {
            out.insert_term(idx.clone(), c.with_ambient(ambient)?);
        }
        Ok(out)
    }

    /// Full evaluation against `degree` many derivations, first argument
    /// contracted first.
    pub fn eval_on(&self, derivs: &[&Derivation]) -> Result<RatFunc> {
        if derivs.len() != self.degree {
            return Err(Error::WrongDegree { expected: self.degree, got: derivs.len() });
        }
        if self.degree == 0 {
            return self.as_ratfunc();
        }
        let mut current = self.clone();
        for d in derivs {
            current = contract(d, &current)?;
        }
        current.as_ratfunc()
    }
}

/// Wedge product with sign bookkeeping by sorting-permutation parity.
pub fn wedge(a: &PForm, b: &PForm) -> Result<PForm> {
    check_ambient(a.ambient(), b.ambient())?;
    let degree = a.degree + b.degree;
    if degree > MAX_DEGREE {
        return Err(Error::DegreeOverflow);
    }
    let mut out = PForm::zero(a.ambient.clone(), degree);
    for (ia, ca) in &a.terms {
        'next: for (ib, cb) in &b.terms {
            // drop wedges with a repeated index, count inversions for the sign
            let mut inversions = 0usize;
            for &x in ia {
                for &y in ib {
                    if x == y {
                        continue 'next;
                    }
                    if x > y {
                        inversions += 1;
                    }
                }
            }
            let mut idx: Vec<u8> = ia.iter().chain(ib.iter()).copied().collect();
            idx.sort_unstable();
            let mut c = ca.mul_rf(cb);
            if inversions % 2 == 1 {
                c = c.neg_rf();
            }
            out.insert_term(idx, c);
        }
    }
    Ok(out)
}

/// Exterior differential; defined for degrees 0..3.
pub fn de_rham(a: &PForm) -> Result<PForm> {
    if a.degree >= MAX_DEGREE {
        return Err(Error::DegreeOverflow);
    }
    let n = a.ambient.n_vars();
    let mut out = PForm::zero(a.ambient.clone(), a.degree + 1);
    for (idx, c) in &a.terms {
        for m in 0..n {
            let m = m as u8;
            if idx.contains(&m) {
                continue;
            }
            let dc = c.partial(m as usize);
            if dc.is_zero() {
                continue;
            }
            let pos = idx.iter().take_while(|&&i| i < m).count();
            let mut new_idx = idx.clone();
            new_idx.insert(pos, m);
            let signed = if pos % 2 == 1 { dc.neg_rf() } else { dc };
            out.insert_term(new_idx, signed);
        }
    }
    Ok(out)
}

/// Interior product i_τ; lowers degree by one.
pub fn contract(tau: &Derivation, a: &PForm) -> Result<PForm> {
    check_ambient(tau.ambient(), a.ambient())?;
    if a.degree == 0 {
        return Err(Error::DegreeUnderflow);
    }
    let mut out = PForm::zero(a.ambient.clone(), a.degree - 1);
    for (idx, c) in &a.terms {
        for (k, &i) in idx.iter().enumerate() {
            let t = tau.coeff(i as usize);
            if t.is_zero() {
                continue;
            }
            let mut rest = idx.clone();
            rest.remove(k);
            let mut term = t.mul_rf(c);
            if k % 2 == 1 {
                term = term.neg_rf();
            }
            out.insert_term(rest, term);
        }
    }
    Ok(out)
}

/// Canonical pairing ⟨τ, ω⟩ for a 1-form ω.
pub fn pairing(tau: &Derivation, omega: &PForm) -> Result<RatFunc> {
    if omega.degree != 1 {
        return Err(Error::WrongDegree { expected: 1, got: omega.degree });
    }
    contract(tau, omega)?.as_ratfunc()
}

/// Lie derivative by Cartan's formula L_τ = i_τ∘d + d∘i_τ.
pub fn lie_derivative(tau: &Derivation, a: &PForm) -> Result<PForm> {
    check_ambient(tau.ambient(), a.ambient())?;
    if a.degree == 0 {
        return Ok(PForm::from_ratfunc(tau.apply(&a.as_ratfunc()?)));
    }
    let d_then_i = contract(tau, &de_rham(a)?)?;
    let i_then_d = de_rham(&contract(tau, a)?)?;
    Ok(d_then_i.add(&i_then_d))
}

/// The unique 1-form ω with ⟨∂ᵢ, ω⟩ = vals[i]; inverts the nondegenerate
/// pairing on the coordinate basis.
pub fn one_form_from_functional(ambient: &Ambient, vals: &[RatFunc]) -> Result<PForm> {
    if vals.len() != ambient.n_vars() {
        return Err(Error::DimensionMismatch(format!(
            "need {} coefficients, got {}",
            ambient.n_vars(),
            vals.len()
        )));
    }
    PForm::from_terms(
        ambient.clone(),
        1,
        vals.iter().enumerate().map(|(i, v)| (vec![i as u8], v.clone())).collect(),
    )
}

impl fmt::Display for PForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.degree == 0 {
            return write!(f, "{}", self.coeff(&[]));
        }
        let mut first = true;
        for (idx, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let basis = idx
                .iter()
                .map(|&i| format!("d{}", self.ambient.var_name(i as usize)))
                .collect::<Vec<_>>()
                .join("^");
            write!(f, "({c})*{basis}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*@{}", self.ambient.var_name(i))?;
        }
        Ok(())
    }
}

/// A matrix of homogeneous forms; multiplication wedges the entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormMatrix {
    ambient: Ambient,
    rows: usize,
    cols: usize,
    degree: usize,
    entries: Vec<PForm>,
}

impl FormMatrix {
    pub fn from_matrix(m: &MatrixA) -> FormMatrix {
        FormMatrix {
            ambient: m.ambient().clone(),
            rows: m.rows(),
            cols: m.cols(),
            degree: 0,
            entries: (0..m.rows())
                .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
                .map(|(i, j)| PForm::from_ratfunc(m.get(i, j).clone()))
                .collect(),
        }
    }

    pub fn zero(ambient: Ambient, rows: usize, cols: usize, degree: usize) -> FormMatrix {
        FormMatrix {
            ambient: ambient.clone(),
            rows,
            cols,
            degree,
            entries: vec![PForm::zero(ambient, degree); rows * cols],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &PForm {
        &self.entries[i * self.cols + j]
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Entrywise exterior differential.
    pub fn d(&self) -> Result<FormMatrix> {
        let entries = self.entries.iter().map(de_rham).collect::<Result<Vec<_>>>()?;
        Ok(FormMatrix {
            ambient: self.ambient.clone(),
            rows: self.rows,
            cols: self.cols,
            degree: self.degree + 1,
            entries,
        })
    }

    /// Entrywise application of a derivation (degree-0 matrices).
    pub fn apply_derivation(&self, tau: &Derivation) -> Result<FormMatrix> {
        if self.degree != 0 {
            return Err(Error::WrongDegree { expected: 0, got: self.degree });
        }
        let entries = self
            .entries
            .iter()
            .map(|e| Ok(PForm::from_ratfunc(tau.apply(&e.as_ratfunc()?))))
            .collect::<Result<Vec<_>>>()?;
        Ok(FormMatrix {
            degree: 0,
            ambient: self.ambient.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn mul(&self, other: &FormMatrix) -> Result<FormMatrix> {
        check_ambient(&self.ambient, &other.ambient)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let degree = self.degree + other.degree;
        if degree > MAX_DEGREE {
            return Err(Error::DegreeOverflow);
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = PForm::zero(self.ambient.clone(), degree);
                for k in 0..self.cols {
                    acc = acc.add(&wedge(self.get(i, k), other.get(k, j))?);
                }
                entries.push(acc);
            }
        }
        Ok(FormMatrix {
            ambient: self.ambient.clone(),
            rows: self.rows,
            cols: other.cols,
            degree,
            entries,
        })
    }

    pub fn add(&self, other: &FormMatrix) -> FormMatrix {
        assert_eq!(
            (self.rows, self.cols, self.degree),
            (other.rows, other.cols, other.degree)
        );
        FormMatrix {
            ambient: self.ambient.clone(),
            rows: self.rows,
            cols: self.cols,
            degree: self.degree,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &FormMatrix) -> FormMatrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FormMatrix {
        FormMatrix {
            ambient: self.ambient.clone(),
            rows: self.rows,
            cols: self.cols,
            degree: self.degree,
            entries: self.entries.iter().map(|e| e.neg()).collect(),
        }
    }

    pub fn trace(&self) -> Result<PForm> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("trace of a non-square form matrix".into()));
        }
        let mut acc = PForm::zero(self.ambient.clone(), self.degree);
        for i in 0..self.rows {
            acc = acc.add(self.get(i, i));
        }
        Ok(acc)
    }
}

/// All strictly increasing p-tuples from `0..n`, ascending.
pub fn increasing_tuples(n: usize, p: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if p > n {
        return out;
    }
    if p == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut idx: Vec<u8> = (0..p as u8).collect();
    loop {
        out.push(idx.clone());
        // advance to the next increasing tuple
        let mut i = p;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if idx[i] < (n - (p - i)) as u8 {
                idx[i] += 1;
                for j in i + 1..p {
                    idx[j] = idx[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::AlgebraDescriptor;
    use crate::expr::parse_expr;
    use crate::sampler::Sampler;

    fn ring3() -> Ambient {
        AlgebraDescriptor::polynomial_ring(vec!["x", "y", "z"]).unwrap()
    }

    fn rf(a: &Ambient, s: &str) -> RatFunc {
        parse_expr(s, a).unwrap()
    }

    fn deriv(a: &Ambient, coeffs: &[&str]) -> Derivation {
        Derivation::new(a.clone(), coeffs.iter().map(|s| rf(a, s)).collect()).unwrap()
    }

    #[test]
    fn increasing_tuple_enumeration() {
        assert_eq!(increasing_tuples(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(increasing_tuples(2, 3), Vec::<Vec<u8>>::new());
        assert_eq!(increasing_tuples(3, 0), vec![Vec::<u8>::new()]);
    }

    #[test]
    fn de_rham_examples() {
        let a = ring3();
        // d(x^2) = 2x dx
        let f = PForm::from_ratfunc(rf(&a, "x^2"));
        assert_eq!(de_rham(&f).unwrap().to_string(), "(2*x)*dx");
        // d(x dy) = dx^dy
        let xdy = PForm::from_terms(a.clone(), 1, vec![(vec![1], rf(&a, "x"))]).unwrap();
        assert_eq!(de_rham(&xdy).unwrap().to_string(), "(1)*dx^dy");
    }

    #[test]
    fn d_squared_is_zero_randomized() {
        let a = ring3();
        let mut s = Sampler::new(a.clone(), 11);
        for degree in 0..=2 {
            for _ in 0..10 {
                let w = s.form(degree, 3);
                assert!(de_rham(&de_rham(&w).unwrap()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn wedge_alternation_and_sign() {
        let a = ring3();
        let dx = PForm::dx(a.clone(), 0);
        let dy = PForm::dx(a.clone(), 1);
        assert!(wedge(&dx, &dx).unwrap().is_zero());
        assert_eq!(wedge(&dx, &dy).unwrap(), wedge(&dy, &dx).unwrap().neg());
        // (x dy)∧(y dz) = xy dy^dz
        let xdy = PForm::from_terms(a.clone(), 1, vec![(vec![1], rf(&a, "x"))]).unwrap();
        let ydz = PForm::from_terms(a.clone(), 1, vec![(vec![2], rf(&a, "y"))]).unwrap();
        assert_eq!(wedge(&xdy, &ydz).unwrap().to_string(), "(x*y)*dy^dz");
    }

    #[test]
    fn wedge_graded_commutativity_randomized() {
        let a = ring3();
        let mut s = Sampler::new(a.clone(), 5);
        for (p, q) in [(1, 1), (1, 2), (2, 2), (1, 3), (0, 2)] {
            let alpha = s.form(p, 2);
            let beta = s.form(q, 2);
            let lhs = wedge(&alpha, &beta).unwrap();
            let mut rhs = wedge(&beta, &alpha).unwrap();
            if (p * q) % 2 == 1 {
                rhs = rhs.neg();
            }
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn graded_leibniz_randomized() {
        let a = ring3();
        let mut s = Sampler::new(a.clone(), 23);
        for (p, q) in [(0, 1), (1, 1), (1, 2), (2, 1)] {
            let alpha = s.form(p, 2);
            let beta = s.form(q, 2);
            let lhs = de_rham(&wedge(&alpha, &beta).unwrap()).unwrap();
            let mut second = wedge(&alpha, &de_rham(&beta).unwrap()).unwrap();
            if p % 2 == 1 {
                second = second.neg();
            }
            let rhs = wedge(&de_rham(&alpha).unwrap(), &beta).unwrap().add(&second);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn contraction_examples() {
        let a = ring3();
        let px = Derivation::coordinate(a.clone(), 0);
        assert!(contract(&px, &PForm::dx(a.clone(), 0)).unwrap().as_ratfunc().unwrap().is_one());
        let dydz = wedge(&PForm::dx(a.clone(), 1), &PForm::dx(a.clone(), 2)).unwrap();
        assert!(contract(&px, &dydz).unwrap().is_zero());
        let dxdy = wedge(&PForm::dx(a.clone(), 0), &PForm::dx(a.clone(), 1)).unwrap();
        assert_eq!(contract(&px, &dxdy).unwrap(), PForm::dx(a.clone(), 1));
        // i_τ i_τ = 0
        let mut s = Sampler::new(a.clone(), 3);
        let tau = s.derivation(2);
        let w = s.form(3, 2);
        assert!(contract(&tau, &contract(&tau, &w).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn pairing_examples() {
        let a = ring3();
        let px = Derivation::coordinate(a.clone(), 0);
        assert!(pairing(&px, &PForm::dx(a.clone(), 0)).unwrap().is_one());
        let f_px = deriv(&a, &["x", "0", "0"]);
        let gdy = PForm::from_terms(a.clone(), 1, vec![(vec![1], rf(&a, "y^2"))]).unwrap();
        assert!(pairing(&f_px, &gdy).unwrap().is_zero());
        let xdx = PForm::from_terms(a.clone(), 1, vec![(vec![0], rf(&a, "x"))]).unwrap();
        assert_eq!(pairing(&f_px, &xdx).unwrap().to_string(), "x^2");
        // wrong degree
        assert!(pairing(&px, &PForm::from_ratfunc(rf(&a, "1"))).is_err());
    }

    #[test]
    fn lie_bracket_examples() {
        let a = ring3();
        let px = Derivation::coordinate(a.clone(), 0);
        let py = Derivation::coordinate(a.clone(), 1);
        assert!(lie_bracket(&px, &py).unwrap().is_zero());
        let xpx = deriv(&a, &["x", "0", "0"]);
        assert_eq!(lie_bracket(&px, &xpx).unwrap(), px);
        // [x∂y, y∂x] = x∂x − y∂y
        let xpy = deriv(&a, &["0", "x", "0"]);
        let ypx = deriv(&a, &["y", "0", "0"]);
        assert_eq!(lie_bracket(&xpy, &ypx).unwrap(), deriv(&a, &["x", "-y", "0"]));
    }

    #[test]
    fn jacobi_identity_randomized() {
        let a = ring3();
        let mut s = Sampler::new(a.clone(), 41);
        for _ in 0..10 {
            let t1 = s.derivation(2);
            let t2 = s.derivation(2);
            let t3 = s.derivation(2);
            let j = lie_bracket(&t1, &lie_bracket(&t2, &t3).unwrap())
                .unwrap()
                .add(&lie_bracket(&t2, &lie_bracket(&t3, &t1).unwrap()).unwrap())
                .add(&lie_bracket(&t3, &lie_bracket(&t1, &t2).unwrap()).unwrap());
            assert!(j.is_zero());
        }
    }

    #[test]
    fn bracket_module_rule() {
        // [τ, aτ'] = a[τ,τ'] + τ(a)τ'
        let a = ring3();
        let mut s = Sampler::new(a.clone(), 17);
        for _ in 0..5 {
            let t1 = s.derivation(2);
            let t2 = s.derivation(2);
            let f = s.ratfunc(2);
            let lhs = lie_bracket(&t1, &t2.scale(&f)).unwrap();
            let rhs = lie_bracket(&t1, &t2).unwrap().scale(&f).add(&t2.scale(&t1.apply(&f)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn lie_derivative_examples() {
        let a = ring3();
        let px = Derivation::coordinate(a.clone(), 0);
        let xdx = PForm::from_terms(a.clone(), 1, vec![(vec![0], rf(&a, "x"))]).unwrap();
        assert_eq!(lie_derivative(&px, &xdx).unwrap(), PForm::dx(a.clone(), 0));
        assert!(lie_derivative(&px, &PForm::dx(a.clone(), 1)).unwrap().is_zero());
        // L_{x∂x}(dx) = dx
        let xpx = deriv(&a, &["x", "0", "0"]);
        assert_eq!(
            lie_derivative(&xpx, &PForm::dx(a.clone(), 0)).unwrap(),
            PForm::dx(a.clone(), 0)
        );
    }

    #[test]
    fn lie_derivative_leibniz_and_commutes_with_d() {
        let a = ring3();
        let mut s = Sampler::new(a.clone(), 29);
        for degree in [1usize, 2] {
            let tau = s.derivation(2);
            let w = s.form(degree, 2);
            let f = s.ratfunc(2);
            // L_τ(fω) = τ(f)ω + f L_τω
            let lhs = lie_derivative(&tau, &w.scale(&f)).unwrap();
            let rhs = w.scale(&tau.apply(&f)).add(&lie_derivative(&tau, &w).unwrap().scale(&f));
            assert_eq!(lhs, rhs);
            // L_τ d = d L_τ
            let lhs = lie_derivative(&tau, &de_rham(&w).unwrap()).unwrap();
            let rhs = de_rham(&lie_derivative(&tau, &w).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn cartan_formula_as_operator_identity() {
        let a = ring3();
        let mut s = Sampler::new(a.clone(), 31);
        for degree in [1usize, 2, 3] {
            let tau = s.derivation(2);
            let w = s.form(degree, 2);
            let lhs = lie_derivative(&tau, &w).unwrap();
            let rhs = contract(&tau, &de_rham(&w).unwrap())
                .unwrap()
                .add(&de_rham(&contract(&tau, &w).unwrap()).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn functional_round_trip() {
        let a = ring3();
        let vals = vec![rf(&a, "1"), rf(&a, "0"), rf(&a, "0")];
        assert_eq!(one_form_from_functional(&a, &vals).unwrap(), PForm::dx(a.clone(), 0));
        let vals = vec![rf(&a, "0"), rf(&a, "x"), rf(&a, "0")];
        let w = one_form_from_functional(&a, &vals).unwrap();
        assert_eq!(w.to_string(), "(x)*dy");
        // reconstruct(pairings(ω)) = ω on a random 1-form
        let mut s = Sampler::new(a.clone(), 99);
        let w = s.form(1, 3);
        let pairings: Vec<RatFunc> = (0..3)
            .map(|i| pairing(&Derivation::coordinate(a.clone(), i), &w).unwrap())
            .collect();
        assert_eq!(one_form_from_functional(&a, &pairings).unwrap(), w);
    }

    #[test]
    fn degree_guards() {
        let a = ring3();
        let mut s = Sampler::new(a.clone(), 1);
        let w3 = s.form(3, 1);
        let w4 = de_rham(&w3).unwrap();
        assert_eq!(w4.degree(), 4);
        assert!(matches!(de_rham(&w4), Err(Error::DegreeOverflow)));
        let f = PForm::from_ratfunc(rf(&a, "x"));
        let tau = Derivation::coordinate(a.clone(), 0);
        assert!(matches!(contract(&tau, &f), Err(Error::DegreeUnderflow)));
        let dx = PForm::dx(a.clone(), 0);
        assert!(matches!(wedge(&w4, &dx), Err(Error::DegreeOverflow)));
    }

    #[test]
    fn form_matrix_trace_smoke() {
        // φ unipotent upper triangular: φ⁻¹dφ is strictly upper triangular,
        // so tr(ξ) and tr(ξ³) vanish.
        let a = ring3();
        let phi = MatrixA::from_rows(
            a.clone(),
            vec![
                vec![rf(&a, "1"), rf(&a, "-2*x")],
                vec![rf(&a, "0"), rf(&a, "1")],
            ],
        )
        .unwrap();
        let xi = FormMatrix::from_matrix(&phi.inverse().unwrap())
            .mul(&FormMatrix::from_matrix(&phi).d().unwrap())
            .unwrap();
        assert!(xi.trace().unwrap().is_zero());
        let cube = xi.mul(&xi).unwrap().mul(&xi).unwrap();
        assert!(cube.trace().unwrap().is_zero());
    }

    #[test]
    fn eval_on_is_antisymmetric() {
        let a = ring3();
        let mut s = Sampler::new(a.clone(), 55);
        let w = s.form(3, 2);
        let t1 = s.derivation(1);
        let t2 = s.derivation(1);
        let t3 = s.derivation(1);
        let v = w.eval_on(&[&t1, &t2, &t3]).unwrap();
        let swapped = w.eval_on(&[&t2, &t1, &t3]).unwrap();
        assert_eq!(v, swapped.neg_rf());
        let cyc = w.eval_on(&[&t3, &t1, &t2]).unwrap();
        assert_eq!(v, cyc);
    }
}

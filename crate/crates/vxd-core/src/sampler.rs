//! Deterministic seeded samplers for the randomized identity suites.
//!
//! Everything is driven by `ChaCha8Rng`, whose stream is stable across
//! platforms and releases, so a (seed, trials, degree) triple pins a report
//! byte for byte.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ambient::Ambient;
use crate::forms::{de_rham, increasing_tuples, Derivation, PForm};
use crate::poly::{rat_int, Poly, TermData};
use crate::ratfunc::RatFunc;

/// Deterministic random polynomial: total degree ≤ `degree_bound`,
/// coefficients in `[-5, 5]`, fixed by the seed.
pub fn random_poly(ambient: &Ambient, seed: u64, degree_bound: u32) -> Poly {
    Sampler::new(ambient.clone(), seed).poly(degree_bound)
}

/// Stateful sampler: a suite draws all of its inputs from one stream.
pub struct Sampler {
    ambient: Ambient,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(ambient: Ambient, seed: u64) -> Self {
        Sampler { ambient, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    /// Random polynomial of total degree ≤ `degree_bound`; roughly a third
    /// of the monomials appear, with coefficients in `[-5, -1] ∪ [1, 5]`.
    pub fn poly(&mut self, degree_bound: u32) -> Poly {
        let n = self.ambient.n_vars();
        let mut terms: TermData = Vec::new();
        for expo in monomials_up_to(n, degree_bound) {
            if self.rng.gen_range(0..3u8) != 0 {
                continue;
            }
            let mut c = self.rng.gen_range(-5i64..=4);
            if c >= 0 {
                c += 1;
            }
            terms.push((expo, rat_int(c)));
        }
        Poly::from_terms(self.ambient.clone(), terms)
    }

    pub fn nonzero_poly(&mut self, degree_bound: u32) -> Poly {
        loop {
            let p = self.poly(degree_bound);
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// Random element of the localized algebra: polynomial over a product of
    /// small powers of the declared denominator generators.
    pub fn ratfunc(&mut self, degree_bound: u32) -> RatFunc {
        let num = self.poly(degree_bound);
        let gens = self.ambient.denominator_gens();
        if gens.is_empty() {
            return RatFunc::from_poly(num);
        }
        let mut den = Poly::one(self.ambient.clone());
        for g in &gens {
            let e = self.rng.gen_range(0..=2u32);
            den = den.mul(&g.pow(e));
        }
        RatFunc::new(num, den).expect("generator powers are declared denominators")
    }

    pub fn nonzero_ratfunc(&mut self, degree_bound: u32) -> RatFunc {
        loop {
            let f = self.ratfunc(degree_bound);
            if !f.is_zero() {
                return f;
            }
        }
    }

    pub fn derivation(&mut self, degree_bound: u32) -> Derivation {
        let coeffs = (0..self.ambient.n_vars()).map(|_| self.ratfunc(degree_bound)).collect();
        Derivation::new(self.ambient.clone(), coeffs).expect("coefficient count matches")
    }

    /// Random p-form: a sampled coefficient on every increasing tuple.
    pub fn form(&mut self, degree: usize, degree_bound: u32) -> PForm {
        let terms = increasing_tuples(self.ambient.n_vars(), degree)
            .into_iter()
            .map(|idx| (idx, self.ratfunc(degree_bound)))
            .collect();
        PForm::from_terms(self.ambient.clone(), degree, terms).expect("tuples are increasing")
    }

    /// Random closed 3-form, as the differential of a random 2-form.
    pub fn closed_3form(&mut self, degree_bound: u32) -> PForm {
        de_rham(&self.form(2, degree_bound)).expect("degree 2 differentiates")
    }
}

/// All exponent vectors of total degree ≤ `bound`, ascending graded-lex.
fn monomials_up_to(n_vars: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n_vars];
    fill(&mut out, &mut current, 0, bound);
    out.sort_by(|a, b| crate::poly::cmp_grlex(a, b));
    out
}

fn fill(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, var: usize, remaining: u32) {
    if var == current.len() {
        out.push(current.clone());
        return;
    }
    for e in 0..=remaining {
        current[var] = e;
        fill(out, current, var + 1, remaining - e);
        current[var] = 0;
    }
}

//! Seeded random problem instances.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use syzcalc_core::orders::{BaseOrderKind, ModuleOrder, MonomialOrder};
use syzcalc_core::polynomials::{FreeModule, ModuleMonomial, Monomial, PolyVector, Term};
use syzcalc_core::rings::{Ring, RingDescriptor};

/// Upper limits for [`RandomInstanceSpec::draw`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceBounds {
    pub max_vars: usize,
    pub max_rank: usize,
    pub max_count: usize,
    pub max_degree: u32,
    pub coeff_bound: i64,
    pub max_terms: usize,
}

impl Default for InstanceBounds {
    fn default() -> Self {
        InstanceBounds {
            max_vars: 3,
            max_rank: 2,
            max_count: 3,
            max_degree: 4,
            coeff_bound: 9,
            max_terms: 4,
        }
    }
}

/// One instance: a module `R[X_1..X_n]^m` with an order, and `p` vectors.
/// Everything is a function of the fields, so the seed reproduces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomInstanceSpec {
    pub ring: RingDescriptor,
    pub nvars: usize,
    pub rank: usize,
    pub count: usize,
    pub max_degree: u32,
    pub coeff_bound: i64,
    pub max_terms: usize,
    pub order: BaseOrderKind,
    pub position_over_term: bool,
    pub seed: u64,
}

impl RandomInstanceSpec {
    /// Draws the shape from `seed`, within `bounds`.
    pub fn draw(ring: RingDescriptor, bounds: InstanceBounds, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let order = match rng.gen_range(0..3) {
            0 => BaseOrderKind::Lex,
            1 => BaseOrderKind::Grlex,
            _ => BaseOrderKind::Grevlex,
        };
        RandomInstanceSpec {
            ring,
            nvars: rng.gen_range(1..=bounds.max_vars),
            rank: rng.gen_range(1..=bounds.max_rank),
            count: rng.gen_range(1..=bounds.max_count),
            max_degree: bounds.max_degree,
            coeff_bound: bounds.coeff_bound,
            max_terms: bounds.max_terms,
            order,
            position_over_term: rng.gen_bool(0.5),
            seed,
        }
    }

    pub fn module_order(&self) -> ModuleOrder {
        let base = MonomialOrder::new(self.order, self.nvars);
        if self.position_over_term {
            ModuleOrder::Pot(base)
        } else {
            ModuleOrder::Top(base)
        }
    }

    /// # Panics
    /// If `ring` does not match the descriptor.
    pub fn module<R: Ring>(&self, ring: R) -> FreeModule<R> {
        assert_eq!(ring.descriptor(), self.ring, "ring does not match the instance");
        FreeModule::new(ring, self.nvars, self.rank, self.module_order())
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    fn monomial(&self, rng: &mut ChaCha8Rng) -> Monomial {
        let total = rng.gen_range(0..=self.max_degree);
        let mut e = vec![0u32; self.nvars];
        for _ in 0..total {
            e[rng.gen_range(0..self.nvars)] += 1;
        }
        Monomial::new(e)
    }

    /// A nonzero vector. Coefficients come from `[-b, b]` through the
    /// canonical map, so they may vanish; such draws are repeated.
    pub fn vector<R: Ring>(&self, module: &FreeModule<R>, rng: &mut ChaCha8Rng) -> PolyVector<R::Elem> {
        loop {
            let k = rng.gen_range(1..=self.max_terms);
            let terms = (0..k)
                .map(|_| {
                    let c = BigInt::from(rng.gen_range(-self.coeff_bound..=self.coeff_bound));
                    let m = self.monomial(rng);
                    let pos = rng.gen_range(0..self.rank);
                    Term::new(module.ring().from_integer(&c), ModuleMonomial::new(m, pos))
                })
                .collect();
            let v = module.normalize(terms);
            if !v.is_zero() {
                return v;
            }
        }
    }

    /// The `p` generators of the instance.
    pub fn polynomials<R: Ring>(&self, module: &FreeModule<R>) -> Vec<PolyVector<R::Elem>> {
        let mut rng = self.rng(1);
        (0..self.count).map(|_| self.vector(module, &mut rng)).collect()
    }

    /// A further vector, independent of [`Self::polynomials`].
    pub fn extra<R: Ring>(&self, module: &FreeModule<R>) -> PolyVector<R::Elem> {
        let mut rng = self.rng(2);
        self.vector(module, &mut rng)
    }

    /// `p` single-term vectors, for syzygies of terms.
    pub fn terms<R: Ring>(&self, module: &FreeModule<R>) -> Vec<Term<R::Elem>> {
        let mut rng = self.rng(3);
        let mut out = Vec::new();
        while out.len() < self.count {
            let c = BigInt::from(rng.gen_range(-self.coeff_bound..=self.coeff_bound));
            let c = module.ring().from_integer(&c);
            if module.ring().is_zero(&c) {
                continue;
            }
            let m = ModuleMonomial::new(self.monomial(&mut rng), rng.gen_range(0..self.rank));
            out.push(Term::new(c, m));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use syzcalc_core::rings::IntegersMod;

    #[test]
    fn reproducible() {
        let ring = IntegersMod::new(8);
        let d = ring.descriptor();
        for seed in 0..20 {
            let a = RandomInstanceSpec::draw(d, InstanceBounds::default(), seed);
            let b = RandomInstanceSpec::draw(d, InstanceBounds::default(), seed);
            assert_eq!(a, b);
            let h = a.module(ring);
            let ps = a.polynomials(&h);
            assert_eq!(ps, b.polynomials(&b.module(ring)));
            assert_eq!(ps.len(), a.count);
            assert!(ps.iter().all(|p| !p.is_zero()));
            for t in ps.iter().flat_map(|p| p.terms()) {
                assert!(t.monomial.monomial.degree() <= 4);
                assert!(t.monomial.position < a.rank);
            }
        }
    }
}

use alloc::vec::Vec;

use super::{flatten, syzygies_of_terms, SyzygyError, SyzygyLabel, TermSyzygies};
use crate::polynomials::{FreeModule, Poly, PolyVector, Term};
use crate::rings::CoherentRing;

/// One item of an S-list, with its expression over the original inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SListItem<E> {
    pub vector: PolyVector<E>,
    /// `vector = Σ combination[j] · f_j` over the original `f`.
    pub combination: Vec<Poly<E>>,
    /// The `S^E_i` that produced it, indexed into the list it came from.
    /// Inputs carry no label.
    pub label: Option<SyzygyLabel>,
}

fn leading_terms<E: Clone>(fs: &[PolyVector<E>]) -> Result<Vec<Term<E>>, SyzygyError> {
    fs.iter()
        .enumerate()
        .map(|(j, f)| f.leading_term().cloned().ok_or(SyzygyError::ZeroInput(j)))
        .collect()
}

/// `S(items)`, expressed over the originals through the items' combinations.
fn s_list_of_items<R: CoherentRing>(
    module: &FreeModule<R>,
    items: &[SListItem<R::Elem>],
    cap: usize,
    strategy: TermSyzygies<R>,
) -> Result<Vec<SListItem<R::Elem>>, SyzygyError> {
    let fs: Vec<PolyVector<R::Elem>> = items.iter().map(|i| i.vector.clone()).collect();
    let lts = leading_terms(&fs)?;
    let scalars = module.scalar_module();
    let width = items.first().map_or(0, |i| i.combination.len());
    let mut out = Vec::new();
    for s in flatten(&strategy(module, &lts, cap)?) {
        let vector = module.dot(&s.entries, &fs);
        if vector.is_zero() {
            continue;
        }
        let combination = (0..width)
            .map(|k| {
                scalars.linear_combination(
                    s.entries.iter().zip(items).map(|(g, it)| (g, &it.combination[k])),
                )
            })
            .collect();
        out.push(SListItem {
            vector,
            combination,
            label: s.label,
        });
    }
    Ok(out)
}

fn originals<R: CoherentRing>(
    module: &FreeModule<R>,
    fs: &[PolyVector<R::Elem>],
) -> Result<Vec<SListItem<R::Elem>>, SyzygyError> {
    leading_terms(fs)?;
    let scalars = module.scalar_module();
    let one = scalars.constant(module.ring().one());
    Ok(fs
        .iter()
        .enumerate()
        .map(|(j, f)| {
            let mut combination: Vec<_> = (0..fs.len()).map(|_| scalars.zero()).collect();
            combination[j] = one.clone();
            SListItem {
                vector: f.clone(),
                combination,
                label: None,
            }
        })
        .collect())
}

/// `Σ_j S_{i,j} f_j` for every syzygy `S_i` of `LT(f_1), …, LT(f_p)`,
/// vanishing combinations deleted.
pub fn s_list<R: CoherentRing>(
    module: &FreeModule<R>,
    fs: &[PolyVector<R::Elem>],
    cap: usize,
) -> Result<Vec<SListItem<R::Elem>>, SyzygyError> {
    s_list_with(module, fs, cap, syzygies_of_terms)
}

/// [`s_list`] with another generator of the syzygies of the leading terms.
pub fn s_list_with<R: CoherentRing>(
    module: &FreeModule<R>,
    fs: &[PolyVector<R::Elem>],
    cap: usize,
    strategy: TermSyzygies<R>,
) -> Result<Vec<SListItem<R::Elem>>, SyzygyError> {
    s_list_of_items(module, &originals(module, fs)?, cap, strategy)
}

/// `S^0 = f` and `S^{k+1} = S^k` followed by `S(S^k)`.
pub fn iterated_s_list<R: CoherentRing>(
    module: &FreeModule<R>,
    q: usize,
    fs: &[PolyVector<R::Elem>],
    cap: usize,
) -> Result<Vec<SListItem<R::Elem>>, SyzygyError> {
    let mut list = originals(module, fs)?;
    for _ in 0..q {
        let next = s_list_of_items(module, &list, cap, syzygies_of_terms)?;
        list.extend(next);
    }
    Ok(list)
}

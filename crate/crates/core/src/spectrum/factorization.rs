use std::collections::HashMap;
use std::fmt;

use crate::scalar::{CycNum, FactoredValue, NumericScalar};

/// Eigenvalue types that can be merged into a canonical multiset.
pub trait Eigenvalue: Clone + Send + Sync + fmt::Display + fmt::Debug {
    /// Merges equal values, summing multiplicities, and returns the result
    /// in a deterministic order.
    fn merge(items: Vec<(Self, u64)>) -> Vec<(Self, u64)>;

    fn same(&self, other: &Self) -> bool;
}

/// Sort-and-merge for types whose `Ord` is canonical equality.
pub(crate) fn merge_ordered<T: Ord + Clone>(mut items: Vec<(T, u64)>) -> Vec<(T, u64)> {
    items.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out: Vec<(T, u64)> = Vec::with_capacity(items.len());
    for (v, n) in items {
        match out.last_mut() {
            Some((w, m)) if *w == v => *m += n,
            _ => out.push((v, n)),
        }
    }
    out.retain(|(_, n)| *n > 0);
    out
}

macro_rules! ordered_eigenvalue {
    ($t:ty) => {
        impl Eigenvalue for $t {
            fn merge(items: Vec<(Self, u64)>) -> Vec<(Self, u64)> {
                merge_ordered(items)
            }
            fn same(&self, other: &Self) -> bool {
                self == other
            }
        }
    };
}

ordered_eigenvalue!(CycNum);
ordered_eigenvalue!(FactoredValue);

impl Eigenvalue for NumericScalar {
    /// Values within tolerance are merged into the first (in sorted order)
    /// member of their cluster. Neighbouring grid cells are probed so the
    /// pass is linear in the number of items.
    fn merge(mut items: Vec<(Self, u64)>) -> Vec<(Self, u64)> {
        items.sort_by(|a, b| a.0.value.re.total_cmp(&b.0.value.re).then(a.0.value.im.total_cmp(&b.0.value.im)));
        let Some(tol) = items.iter().map(|(v, _)| v.tolerance).reduce(f64::max) else {
            return items;
        };
        let cell = tol.max(f64::MIN_POSITIVE);
        let key = |v: &NumericScalar| ((v.value.re / cell).floor() as i64, (v.value.im / cell).floor() as i64);
        let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
        let mut out: Vec<(NumericScalar, u64)> = Vec::new();
        for (v, n) in items {
            let (kx, ky) = key(&v);
            let mut hit = None;
            'probe: for dx in -1..=1 {
                for dy in -1..=1 {
                    if let Some(ids) = grid.get(&(kx + dx, ky + dy)) {
                        if let Some(&id) = ids.iter().find(|&&id| out[id].0.approx_eq(&v)) {
                            hit = Some(id);
                            break 'probe;
                        }
                    }
                }
            }
            match hit {
                Some(id) => out[id].1 += n,
                None => {
                    grid.entry((kx, ky)).or_default().push(out.len());
                    out.push((v, n));
                }
            }
        }
        out.retain(|(_, n)| *n > 0);
        out
    }

    fn same(&self, other: &Self) -> bool {
        self.approx_eq(other)
    }
}

/// `χ(z) = ∏ (z − λ)^n` as a multiset of distinct eigenvalues.
#[derive(Debug, Clone)]
pub struct SpectrumFactorization<E> {
    pub factors: Vec<(E, u64)>,
    pub total_degree: u64,
}

impl<E: Eigenvalue> SpectrumFactorization<E> {
    pub fn from_items(items: Vec<(E, u64)>) -> Self {
        let factors = E::merge(items);
        let total_degree = factors.iter().map(|(_, n)| n).sum();
        SpectrumFactorization { factors, total_degree }
    }

    pub fn multiplicity_of(&self, v: &E) -> u64 {
        self.factors.iter().filter(|(w, _)| w.same(v)).map(|(_, n)| n).sum()
    }

    /// Multiset equality under the eigenvalue type's notion of equality.
    pub fn same_as(&self, other: &Self) -> bool {
        self.total_degree == other.total_degree
            && self.factors.len() == other.factors.len()
            && self.factors.iter().all(|(v, n)| other.multiplicity_of(v) == *n)
    }

    pub fn map<F: Eigenvalue>(&self, f: impl Fn(&E) -> F) -> SpectrumFactorization<F> {
        SpectrumFactorization::from_items(self.factors.iter().map(|(v, n)| (f(v), *n)).collect())
    }

    pub fn try_map<F: Eigenvalue, Err>(
        &self,
        f: impl Fn(&E) -> Result<F, Err>,
    ) -> Result<SpectrumFactorization<F>, Err> {
        let items = self.factors.iter().map(|(v, n)| Ok((f(v)?, *n))).collect::<Result<Vec<_>, Err>>()?;
        Ok(SpectrumFactorization::from_items(items))
    }
}

impl<E: Eigenvalue> PartialEq for SpectrumFactorization<E> {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl<E: Eigenvalue> fmt::Display for SpectrumFactorization<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, n) in &self.factors {
            writeln!(f, "(z - ({v}))^{n}")?;
        }
        write!(f, "total degree {}", self.total_degree)
    }
}

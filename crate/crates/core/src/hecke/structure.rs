use std::collections::BTreeMap;
use std::sync::Arc;

use super::{hecke_algebra, HeckeError, HeckeOptions, HeckeResult, Resolution};
use crate::algebra::{
    induced_module, invariants, AugmentedSubalgebra, InducedModule, LeftModule, LieAction,
};
use crate::complexes::{
    hom_complex, tensor_complex, EndComplex, GradedAlgebraTable, ProductConvention,
};
use crate::linalg::{rank, Matrix, SparseVec, Subspace};
use crate::resolutions::{
    bar_resolution, ce_complex, collapse_right_factor, induced_bar_complex, two_sided_bar_complex,
    two_sided_bar_complex_over_b, ResolutionError,
};

fn padded(mut dims: Vec<usize>, len: usize) -> Vec<usize> {
    dims.resize(len, 0);
    dims
}

/// Dimensions of `Tor_n^B(A, K)` for `n < L`, from the homology of `A ⊗_B X`
/// and, independently, from `A_B ⊗_B X` with `A` as a right `B`-module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorReport {
    pub dims: Vec<usize>,
    /// Same dimensions from the tensor-product route.
    pub tensor_dims: Vec<usize>,
    pub vanishes: bool,
}

impl TorReport {
    pub fn routes_agree(&self) -> bool {
        self.dims == self.tensor_dims
    }
}

/// `A` with `B` acting on the right, as a left module over `B^opp`.
pub fn parent_as_right_module(b: &AugmentedSubalgebra) -> LeftModule {
    let a = b.parent();
    let action = b.inclusion().iter().map(|x| a.right_mult(x)).collect();
    LeftModule::new(Arc::new(b.algebra().opposite()), a.dim(), action)
        .expect("right multiplication is a right action")
}

/// `Tor_n^B(W, K)` for `n < L`, for a right `B`-module `W` (a left module over `B^opp`).
pub fn tor_of_right_module(b: &AugmentedSubalgebra, w: &LeftModule, l: usize) -> Vec<usize> {
    padded(tensor_complex(w, &bar_resolution(b, l)).homology_dims(), l)
}

/// `Tor_n^B(A, K)` for `n < L`.
pub fn tor(b: &AugmentedSubalgebra, l: usize) -> TorReport {
    let l = l.max(1);
    let dims = padded(
        induced_bar_complex(b, l).scalar_complex().homology_dims(),
        l,
    );
    let tensor_dims = tor_of_right_module(b, &parent_as_right_module(b), l);
    let vanishes = dims[1..].iter().all(|&d| d == 0);
    TorReport {
        dims,
        tensor_dims,
        vanishes,
    }
}

/// `Tor^{U(g)}(A, K)`, the homology of `A ⊗ Λ(g)`. Both fields carry the
/// same dimensions since no second model is available here.
pub fn ce_tor(act: &LieAction) -> Result<TorReport, ResolutionError> {
    let dims = ce_complex(act)?.scalar_complex().homology_dims();
    let vanishes = dims[1..].iter().all(|&d| d == 0);
    Ok(TorReport {
        tensor_dims: dims.clone(),
        dims,
        vanishes,
    })
}

/// `Ext_B^n(K, V)` for `n < L`, from `Hom_B(X, V)` over the bar resolution.
pub fn ext_b(b: &AugmentedSubalgebra, v: &LeftModule, l: usize) -> Vec<usize> {
    padded(hom_complex(&bar_resolution(b, l), v).cohomology_dims(), l)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtReport {
    pub dims: Vec<usize>,
    /// `A ⊗_B X` is not known to be a resolution (Tor does not vanish).
    pub advisory: bool,
}

/// `Ext_A^n(A ⊗_B K, A ⊗_B K)` for `n < L`, computed from `Hom_A(A ⊗_B X, A ⊗_B K)`.
pub fn ext_a_selfext(b: &AugmentedSubalgebra, l: usize) -> ExtReport {
    let m = induced_module(b).module;
    let dims = padded(
        hom_complex(&induced_bar_complex(b, l), &m).cohomology_dims(),
        l,
    );
    ExtReport {
        dims,
        advisory: !tor(b, l).vanishes,
    }
}

/// `Hom_B(K, A ⊗_B K)`: the `B`-invariant classes of `A/J` with `[a][a'] = [a a']`.
#[derive(Clone, Debug)]
pub struct Hk0Direct {
    pub induced: InducedModule,
    /// Invariants inside `A/J`, in class coordinates.
    pub invariants: Subspace,
    /// Degree-0 table; the convention is `Opposite` relative to composition in `End`.
    pub table: GradedAlgebraTable,
    /// Products agree after shifting every representative by a fixed element of `J`.
    pub well_defined: bool,
}

impl Hk0Direct {
    /// Coordinates in the invariant basis of `[a1 a2]`, for arbitrary lifts `a1, a2 ∈ A`.
    pub fn product_of_lifts(&self, a1: &SparseVec, a2: &SparseVec) -> Option<SparseVec> {
        let alg = self.induced.module.algebra();
        let class = self.induced.class_of(&alg.mul(a1, a2));
        Some(SparseVec::from_dense(&self.invariants.coordinates(&class)?))
    }

    /// Representative in `A` of the `i`-th invariant basis vector.
    pub fn lift(&self, i: usize) -> SparseVec {
        self.induced.lift(&self.invariants.basis()[i])
    }

    pub fn dim(&self) -> usize {
        self.invariants.dim()
    }
}

pub fn hk0_direct(b: &AugmentedSubalgebra) -> Hk0Direct {
    let induced = induced_module(b);
    let inv = invariants(&induced.module, b);
    let n = inv.dim();
    let mut out = Hk0Direct {
        induced,
        invariants: inv,
        table: GradedAlgebraTable {
            degrees: vec![0],
            dims: BTreeMap::from([(0, n)]),
            representatives: BTreeMap::new(),
            products: BTreeMap::new(),
            unavailable: Vec::new(),
            unit: None,
            convention: ProductConvention::Opposite,
        },
        well_defined: true,
    };
    let lifts: Vec<SparseVec> = (0..n).map(|i| out.lift(i)).collect();
    let shift = out
        .induced
        .ideal
        .basis()
        .iter()
        .fold(SparseVec::new(), |acc, v| acc.add(v));
    let mut products = Vec::with_capacity(n);
    for a1 in &lifts {
        let mut row = Vec::with_capacity(n);
        for a2 in &lifts {
            let p = out
                .product_of_lifts(a1, a2)
                .expect("invariants form a subalgebra");
            let shifted = out.product_of_lifts(&a1.add(&shift), &a2.add(&shift));
            out.well_defined &= shifted.as_ref() == Some(&p);
            row.push(p);
        }
        products.push(row);
    }
    let unit_class = out.induced.class_of(out.induced.module.algebra().unit());
    out.table.unit = out
        .invariants
        .coordinates(&unit_class)
        .map(|c| SparseVec::from_dense(&c));
    out.table.representatives = BTreeMap::from([(0, lifts)]);
    out.table.products = BTreeMap::from([((0, 0), products)]);
    out
}

/// Comparison of the degree-0 Hecke table with [`hk0_direct`] through
/// `T[f] = [f_0(1)]`, which reverses products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hk0Comparison {
    pub dims_equal: bool,
    /// `T` is a linear isomorphism.
    pub bijective: bool,
    /// `T(x ∘ y) = T(y) T(x)` on all basis pairs.
    pub anti_multiplicative: bool,
    pub unit_matches: bool,
}

impl Hk0Comparison {
    pub fn passed(&self) -> bool {
        self.dims_equal && self.bijective && self.anti_multiplicative && self.unit_matches
    }
}

/// `None` when the source complex has more than one generator in degree 0.
pub fn compare_hk0(
    end: &EndComplex,
    table: &GradedAlgebraTable,
    direct: &Hk0Direct,
) -> Option<Hk0Comparison> {
    if end.source().fiber_dim(0) != 1 {
        return None;
    }
    let n = table.dim(0);
    let dims_equal = n == direct.dim();
    let reps = table.representatives.get(&0).cloned().unwrap_or_default();
    let mut images = Vec::with_capacity(n);
    for r in &reps {
        let f = end.cochain(0, r).ok()?;
        let a = f.component(0).map(|m| m.get(0, 0)).unwrap_or_default();
        images.push(
            direct
                .invariants
                .coordinates(&direct.induced.class_of(&a))
                .map(|c| SparseVec::from_dense(&c)),
        );
    }
    if images.iter().any(Option::is_none) {
        return Some(Hk0Comparison {
            dims_equal,
            bijective: false,
            anti_multiplicative: false,
            unit_matches: false,
        });
    }
    let images: Vec<SparseVec> = images.into_iter().flatten().collect();
    let t = Matrix::from_columns(direct.dim(), &images);
    let bijective = dims_equal && rank(&t) == n;
    let apply = |v: &SparseVec| t.mul_vec(v);
    let mut anti_multiplicative = table.product(0, 0, 0, 0).is_some() || n == 0;
    if anti_multiplicative {
        'pairs: for i in 0..n {
            for j in 0..n {
                let lhs = apply(
                    table
                        .product(0, i, 0, j)
                        .expect("degree 0 products present"),
                );
                let rhs = direct
                    .table
                    .multiply(0, &images[j], 0, &images[i])
                    .expect("direct table is complete");
                if lhs != rhs {
                    anti_multiplicative = false;
                    break 'pairs;
                }
            }
        }
    }
    let unit_matches = match (&table.unit, &direct.table.unit) {
        (Some(u), Some(v)) => &apply(u) == v,
        (None, None) => n == 0,
        _ => false,
    };
    Some(Hk0Comparison {
        dims_equal,
        bijective,
        anti_multiplicative,
        unit_matches,
    })
}

/// Does multiplication `N ⊗ B -> A` map a basis to a basis?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessCertificate {
    pub products: usize,
    pub rank: usize,
    pub dim_a: usize,
    pub passed: bool,
}

pub fn freeness_certificate(
    b: &AugmentedSubalgebra,
    candidates: &[SparseVec],
) -> FreenessCertificate {
    let a = b.parent();
    let rows: Vec<SparseVec> = candidates
        .iter()
        .flat_map(|n| b.inclusion().iter().map(move |x| a.mul(n, x)))
        .collect();
    let products = rows.len();
    let r = rank(&Matrix::from_rows(a.dim(), rows));
    FreenessCertificate {
        products,
        rank: r,
        dim_a: a.dim(),
        passed: products == a.dim() && r == a.dim(),
    }
}

/// Both bar models of `A ⊗ T(I(B)) ⊗ K` compared as literal data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarModelReport {
    pub len: usize,
    pub fiber_dims: Vec<usize>,
    /// Collapse of `A ⊗_A (A ⊗ T ⊗ A)` equals the induced bar complex.
    pub via_a: bool,
    /// Induction of the collapse of `B ⊗ T ⊗ B` equals the induced bar complex.
    pub via_b: bool,
}

impl BarModelReport {
    pub fn passed(&self) -> bool {
        self.via_a && self.via_b
    }
}

pub fn bar_model_consistency(b: &AugmentedSubalgebra, len: usize) -> BarModelReport {
    let direct = induced_bar_complex(b, len);
    let via_a = collapse_right_factor(&two_sided_bar_complex(b, len), b) == direct;
    let via_b = collapse_right_factor(&two_sided_bar_complex_over_b(b, len), b)
        .map_entries(b.parent().clone(), |x| b.include(x))
        == direct;
    BarModelReport {
        len,
        fiber_dims: direct.fiber_dims().to_vec(),
        via_a,
        via_b,
    }
}

/// The three dimension sequences that agree when `Tor_{>0}^B(A, K) = 0`,
/// plus the degree-0 algebra comparison and vanishing in negative degrees.
#[derive(Clone, Debug)]
pub struct TriangleReport {
    pub hecke: HeckeResult,
    /// Hecke dims in degrees `0..=max_degree`.
    pub hecke_dims: Vec<usize>,
    pub ext_a_dims: Vec<usize>,
    pub ext_b_dims: Vec<usize>,
    pub tor: TorReport,
    pub hk0: Option<Hk0Comparison>,
    pub negative_vanish: bool,
}

impl TriangleReport {
    pub fn dims_agree(&self) -> bool {
        self.hecke_dims == self.ext_a_dims && self.ext_a_dims == self.ext_b_dims
    }

    /// Whether the identities hold; vacuous when Tor does not vanish.
    pub fn holds(&self) -> bool {
        !self.tor.vanishes
            || (self.dims_agree()
                && self.negative_vanish
                && self.hk0.as_ref().is_some_and(Hk0Comparison::passed))
    }
}

pub fn structure_triangle(
    b: &AugmentedSubalgebra,
    opts: &HeckeOptions,
) -> Result<TriangleReport, HeckeError> {
    let hecke = hecke_algebra(&Resolution::Bar(b.clone()), opts)?;
    let top = opts.max_degree.max(0) as usize;
    let l = (top + 1).max(opts.window);
    let hecke_dims = (0..=opts.max_degree.max(0))
        .map(|n| hecke.table.dim(n))
        .collect();
    let ext_a_dims = ext_a_selfext(b, l).dims[..=top].to_vec();
    let induced = induced_module(b).module.restrict(b);
    let ext_b_dims = ext_b(b, &induced, l)[..=top].to_vec();
    let negative_vanish = (opts.min_degree..0).all(|n| hecke.table.dim(n) == 0);
    let direct = hk0_direct(b);
    let hk0 = if hecke.table.degrees.contains(&0) {
        compare_hk0(&hecke.end, &hecke.table, &direct)
    } else {
        None
    };
    let tor = hecke.tor.clone().unwrap_or_else(|| tor(b, l));
    Ok(TriangleReport {
        hecke,
        hecke_dims,
        ext_a_dims,
        ext_b_dims,
        tor,
        hk0,
        negative_vanish,
    })
}

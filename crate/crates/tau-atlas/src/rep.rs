//! Right modules as quiver representations: per-vertex spaces and arrow
//! matrices acting on row vectors. Everything is exact over F_p.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{AssocAlgebra, TwoSidedIdeal};
use crate::error::{AtlasError, Result};
use crate::linalg::{fmul, fneg, Matrix, Subspace};

#[derive(Clone)]
pub struct QuiverRep {
    alg: Arc<AssocAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
    actions: OnceLock<Vec<Matrix>>,
}

impl fmt::Debug for QuiverRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuiverRep(dims={:?})", self.dims)
    }
}

/// Per-vertex linear maps M_v → N_v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub blocks: Vec<Matrix>,
}

/// Per-vertex subspaces of a module.
pub type Spaces = Vec<Subspace>;

impl QuiverRep {
    /// Builds a module from arrow matrices (indexed like `alg.arrows()`).
    pub fn new(alg: &Arc<AssocAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != alg.n() || maps.len() != alg.arrows().len() {
            return Err(AtlasError::AlgebraMismatch);
        }
        for (a, m) in alg.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.src] || m.cols() != dims[a.tgt] || m.p() != alg.p() {
                return Err(AtlasError::Inconsistent(format!("arrow {} has the wrong shape", a.name)));
            }
        }
        Ok(QuiverRep { alg: alg.clone(), dims, maps, actions: OnceLock::new() })
    }

    fn raw(alg: &Arc<AssocAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        QuiverRep { alg: alg.clone(), dims, maps, actions: OnceLock::new() }
    }

    pub fn zero(alg: &Arc<AssocAlgebra>) -> Self {
        let dims = vec![0; alg.n()];
        let maps = alg.arrows().iter().map(|_| Matrix::zeros(alg.p(), 0, 0)).collect();
        Self::raw(alg, dims, maps)
    }

    pub fn simple(alg: &Arc<AssocAlgebra>, i: usize) -> Self {
        let mut dims = vec![0; alg.n()];
        dims[i] = 1;
        let maps = alg.arrows().iter().map(|a| Matrix::zeros(alg.p(), dims[a.src], dims[a.tgt])).collect();
        Self::raw(alg, dims, maps)
    }

    /// The projective e_i A (0-based vertex i).
    pub fn projective(alg: &Arc<AssocAlgebra>, i: usize) -> Self {
        let p = alg.p();
        let blocks: Vec<Vec<usize>> = (0..alg.n()).map(|v| alg.block(i, v)).collect();
        let dims = blocks.iter().map(|b| b.len()).collect();
        let maps = alg
            .arrows()
            .iter()
            .map(|a| {
                let rows = &blocks[a.src];
                let cols = &blocks[a.tgt];
                let mut m = Matrix::zeros(p, rows.len(), cols.len());
                for (r, &x) in rows.iter().enumerate() {
                    for &(z, c) in alg.mul_basis(x, a.elem) {
                        let col = cols.iter().position(|&y| y == z).expect("product stays in block");
                        m.set(r, col, c);
                    }
                }
                m
            })
            .collect();
        Self::raw(alg, dims, maps)
    }

    pub fn algebra(&self) -> &Arc<AssocAlgebra> {
        &self.alg
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
    pub fn arrow_map(&self, k: usize) -> &Matrix {
        &self.maps[k]
    }
    pub fn arrow_maps(&self) -> &[Matrix] {
        &self.maps
    }
    pub fn p(&self) -> u32 {
        self.alg.p()
    }
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    /// ρ(x) for every basis element x, d_src × d_tgt.
    pub fn actions(&self) -> &[Matrix] {
        self.actions.get_or_init(|| {
            let alg = &self.alg;
            (0..alg.dim())
                .map(|x| {
                    let path = alg.path(x);
                    if path.is_empty() {
                        return Matrix::identity(alg.p(), self.dims[alg.src(x)]);
                    }
                    let mut m = self.maps[path[0]].clone();
                    for &a in &path[1..] {
                        m = m.mul(&self.maps[a]);
                    }
                    m
                })
                .collect()
        })
    }

    pub fn action(&self, x: usize) -> &Matrix {
        &self.actions()[x]
    }

    /// ρ(e_u λ e_v): M_u → M_v.
    pub fn act_elem(&self, u: usize, v: usize, elem: &[u32]) -> Matrix {
        let alg = &self.alg;
        let mut m = Matrix::zeros(alg.p(), self.dims[u], self.dims[v]);
        for (x, &c) in elem.iter().enumerate() {
            if c != 0 && alg.src(x) == u && alg.tgt(x) == v {
                m.add_assign_scaled(c, self.action(x));
            }
        }
        m
    }

    /// Checks that ρ respects the multiplication table.
    pub fn satisfies_relations(&self) -> bool {
        let alg = &self.alg;
        let d = alg.dim();
        for x in 0..d {
            for y in 0..d {
                if alg.tgt(x) != alg.src(y) {
                    continue;
                }
                let lhs = self.action(x).mul(self.action(y));
                let mut rhs = Matrix::zeros(alg.p(), lhs.rows(), lhs.cols());
                for &(z, c) in alg.mul_basis(x, y) {
                    rhs.add_assign_scaled(c, self.action(z));
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// The same arrow matrices viewed over another algebra with the same quiver.
    pub fn change_algebra(&self, target: &Arc<AssocAlgebra>) -> Result<QuiverRep> {
        let maps = target
            .arrows()
            .iter()
            .map(|a| self.alg.arrow_by_name(&a.name).map(|k| self.maps[k].clone()).ok_or(AtlasError::AlgebraMismatch))
            .collect::<Result<Vec<_>>>()?;
        if target.arrows().len() != self.alg.arrows().len() {
            // every dropped arrow has to act as zero
            for (k, a) in self.alg.arrows().iter().enumerate() {
                if target.arrow_by_name(&a.name).is_none() && !self.maps[k].is_zero() {
                    return Err(AtlasError::AlgebraMismatch);
                }
            }
        }
        let m = QuiverRep::new(target, self.dims.clone(), maps)?;
        if !m.satisfies_relations() {
            return Err(AtlasError::Inconsistent("module does not satisfy the target relations".into()));
        }
        Ok(m)
    }

    /// Vector-space dual of a module over the opposite algebra.
    pub fn dual_to(&self, target: &Arc<AssocAlgebra>) -> QuiverRep {
        let maps = self.maps.iter().map(|m| m.transpose()).collect();
        QuiverRep::raw(target, self.dims.clone(), maps)
    }

    pub fn full_spaces(&self) -> Spaces {
        self.dims.iter().map(|&d| Subspace::full(self.p(), d)).collect()
    }

    pub fn zero_spaces(&self) -> Spaces {
        self.dims.iter().map(|&d| Subspace::zero(self.p(), d)).collect()
    }

    pub fn is_closed(&self, spaces: &Spaces) -> bool {
        self.alg.arrows().iter().enumerate().all(|(k, a)| {
            let b = spaces[a.src].basis();
            (0..b.rows()).all(|r| spaces[a.tgt].contains(&self.maps[k].apply(b.row(r))))
        })
    }

    /// Closure of the given per-vertex vectors under the arrows.
    pub fn generated(&self, gens: &[(usize, Vec<u32>)]) -> Spaces {
        let mut spaces = self.zero_spaces();
        let mut queue = Vec::new();
        for (v, x) in gens {
            if spaces[*v].insert(x) {
                queue.push((*v, x.clone()));
            }
        }
        while let Some((v, x)) = queue.pop() {
            for (k, a) in self.alg.arrows().iter().enumerate() {
                if a.src == v {
                    let y = self.maps[k].apply(&x);
                    if spaces[a.tgt].insert(&y) {
                        queue.push((a.tgt, y));
                    }
                }
            }
        }
        spaces
    }

    /// The submodule on closed `spaces`, with its inclusion.
    pub fn submodule(&self, spaces: &Spaces) -> (QuiverRep, ModuleMap) {
        debug_assert!(self.is_closed(spaces));
        let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
        let maps = self
            .alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let b = spaces[a.src].basis();
                let mut m = Matrix::zeros(self.p(), dims[a.src], dims[a.tgt]);
                for r in 0..b.rows() {
                    let y = self.maps[k].apply(b.row(r));
                    let c = spaces[a.tgt].coords(&y);
                    m.row_mut(r).copy_from_slice(&c);
                }
                m
            })
            .collect();
        let inc = ModuleMap { blocks: spaces.iter().map(|s| s.basis().clone()).collect() };
        (QuiverRep::raw(&self.alg, dims, maps), inc)
    }

    /// The quotient by closed `spaces`, with its projection.
    pub fn quotient(&self, spaces: &Spaces) -> (QuiverRep, ModuleMap) {
        debug_assert!(self.is_closed(spaces));
        let p = self.p();
        let keep: Vec<Vec<usize>> = spaces.iter().map(|s| s.complement_coords()).collect();
        let dims: Vec<usize> = keep.iter().map(|k| k.len()).collect();
        let maps = self
            .alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let mut m = Matrix::zeros(p, dims[a.src], dims[a.tgt]);
                for (r, &c) in keep[a.src].iter().enumerate() {
                    let y = self.maps[k].row(c).to_vec();
                    let q = spaces[a.tgt].quotient_coords(&y);
                    m.row_mut(r).copy_from_slice(&q);
                }
                m
            })
            .collect();
        let proj = ModuleMap {
            blocks: (0..self.dims.len())
                .map(|v| {
                    let mut m = Matrix::zeros(p, self.dims[v], dims[v]);
                    for r in 0..self.dims[v] {
                        let mut e = vec![0; self.dims[v]];
                        e[r] = 1;
                        let q = spaces[v].quotient_coords(&e);
                        m.row_mut(r).copy_from_slice(&q);
                    }
                    m
                })
                .collect(),
        };
        (QuiverRep::raw(&self.alg, dims, maps), proj)
    }

    /// rad M = Σ of arrow images.
    pub fn radical_spaces(&self) -> Spaces {
        self.image_of_arrows(&self.full_spaces())
    }

    fn image_of_arrows(&self, spaces: &Spaces) -> Spaces {
        let mut out = self.zero_spaces();
        for (k, a) in self.alg.arrows().iter().enumerate() {
            let b = spaces[a.src].basis();
            if b.rows() > 0 {
                let img = Subspace::span(&b.mul(&self.maps[k]));
                out[a.tgt] = out[a.tgt].sum(&img);
            }
        }
        out
    }

    /// soc M = vectors killed by every arrow.
    pub fn socle_spaces(&self) -> Spaces {
        self.preimage_under_arrows(&self.zero_spaces())
    }

    /// {x ∈ M_s : xα ∈ target_t for every arrow α: s → t}.
    fn preimage_under_arrows(&self, target: &Spaces) -> Spaces {
        let p = self.p();
        (0..self.dims.len())
            .map(|s| {
                // stack the conditions x * A_α ≡ 0 mod target_t as one linear system
                let mut cols: Vec<Matrix> = Vec::new();
                for (k, a) in self.alg.arrows().iter().enumerate() {
                    if a.src != s || self.dims[a.tgt] == 0 {
                        continue;
                    }
                    let keep = target[a.tgt].complement_coords();
                    let mut m = Matrix::zeros(p, self.dims[s], keep.len());
                    for r in 0..self.dims[s] {
                        let q = target[a.tgt].quotient_coords(self.maps[k].row(r));
                        m.row_mut(r).copy_from_slice(&q);
                    }
                    cols.push(m);
                }
                let mut sys = Matrix::zeros(p, self.dims[s], 0);
                for c in cols {
                    sys = sys.hstack(&c);
                }
                Subspace::span(&sys.left_null_space())
            })
            .collect()
    }

    pub fn radical(&self) -> (QuiverRep, ModuleMap) {
        self.submodule(&self.radical_spaces())
    }

    pub fn socle(&self) -> (QuiverRep, ModuleMap) {
        self.submodule(&self.socle_spaces())
    }

    pub fn top(&self) -> (QuiverRep, ModuleMap) {
        self.quotient(&self.radical_spaces())
    }

    /// Dimension vectors of rad^k M / rad^{k+1} M, from the top.
    pub fn radical_layers(&self) -> Vec<Vec<usize>> {
        let mut cur = self.full_spaces();
        let mut out = Vec::new();
        while cur.iter().any(|s| s.dim() > 0) {
            let next = self.image_of_arrows(&cur);
            out.push(cur.iter().zip(&next).map(|(a, b)| a.dim() - b.dim()).collect());
            cur = next;
        }
        out
    }

    /// Dimension vectors of soc^k M / soc^{k−1} M, from the socle up.
    pub fn socle_layers(&self) -> Vec<Vec<usize>> {
        let mut prev = self.zero_spaces();
        let mut out = Vec::new();
        while prev.iter().zip(&self.dims).any(|(s, &d)| s.dim() < d) {
            let next = self.preimage_under_arrows(&prev);
            out.push(next.iter().zip(&prev).map(|(a, b)| a.dim() - b.dim()).collect());
            prev = next;
        }
        out
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            dim_vector: self.dims.clone(),
            radical_layers: self.radical_layers(),
            socle_layers: self.socle_layers(),
        }
    }

    pub fn descriptor(&self) -> ModuleDescriptor {
        self.fingerprint().descriptor()
    }

    /// Vectors at each vertex spanning a complement of rad M.
    pub fn top_generators(&self) -> Vec<(usize, Vec<u32>)> {
        let rad = self.radical_spaces();
        let mut out = Vec::new();
        for (v, r) in rad.iter().enumerate() {
            for c in r.complement_coords() {
                let mut e = vec![0; self.dims[v]];
                e[c] = 1;
                out.push((v, e));
            }
        }
        out
    }

    /// M / MJ for a two-sided ideal J of the same algebra.
    pub fn act_quotient(&self, j: &TwoSidedIdeal) -> QuiverRep {
        self.quotient(&self.times_ideal(j)).0
    }

    /// The submodule MJ.
    pub fn times_ideal(&self, j: &TwoSidedIdeal) -> Spaces {
        let n = self.dims.len();
        let mut spaces = self.zero_spaces();
        let b = j.space().basis();
        for r in 0..b.rows() {
            let elem = b.row(r);
            for s in 0..n {
                if self.dims[s] == 0 {
                    continue;
                }
                for t in 0..n {
                    if self.dims[t] == 0 {
                        continue;
                    }
                    let m = self.act_elem(s, t, elem);
                    if !m.is_zero() {
                        spaces[t] = spaces[t].sum(&Subspace::span(&m));
                    }
                }
            }
        }
        spaces
    }

    /// Whether the indecomposable-certifying socle or top is one-dimensional.
    pub fn local_witness(&self) -> Option<LocalWitness> {
        let soc = self.socle_spaces();
        if soc.iter().map(|s| s.dim()).sum::<usize>() == 1 {
            let v = soc.iter().position(|s| s.dim() == 1).unwrap();
            return Some(LocalWitness::Socle(v, soc[v].basis().row(0).to_vec()));
        }
        let rad = self.radical_spaces();
        let top: usize = rad.iter().zip(&self.dims).map(|(r, &d)| d - r.dim()).sum();
        if top == 1 {
            let v = (0..self.dims.len()).find(|&v| rad[v].dim() < self.dims[v]).unwrap();
            return Some(LocalWitness::Top(v, rad[v].clone()));
        }
        None
    }
}

/// Data certifying that End(M) is local with residue field F_p: either a
/// one-dimensional socle or a one-dimensional top.
#[derive(Clone, Debug)]
pub enum LocalWitness {
    Socle(usize, Vec<u32>),
    Top(usize, Subspace),
}

impl LocalWitness {
    /// The scalar c with h − c·id nilpotent, for h ∈ End(M).
    pub fn scalar(&self, h: &ModuleMap) -> u32 {
        match self {
            LocalWitness::Socle(v, s) => {
                let img = h.blocks[*v].apply(s);
                let k = s.iter().position(|&x| x != 0).unwrap();
                let inv = crate::linalg::finv(h.blocks[*v].p(), s[k]);
                fmul(h.blocks[*v].p(), img[k], inv)
            }
            LocalWitness::Top(v, rad) => {
                let c = rad.complement_coords()[0];
                let mut e = vec![0; rad.ambient()];
                e[c] = 1;
                let img = h.blocks[*v].apply(&e);
                rad.quotient_coords(&img)[0]
            }
        }
    }
}

/// Isomorphism-invariant summary used as a prefilter.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Fingerprint {
    pub dim_vector: Vec<usize>,
    pub radical_layers: Vec<Vec<usize>>,
    pub socle_layers: Vec<Vec<usize>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ModuleDescriptor {
    pub dim_vector: Vec<usize>,
    pub comp_factors: BTreeMap<usize, usize>,
    pub radical_layers: Vec<Vec<usize>>,
    pub socle_layers: Vec<Vec<usize>>,
}

impl Fingerprint {
    pub fn descriptor(&self) -> ModuleDescriptor {
        ModuleDescriptor {
            dim_vector: self.dim_vector.clone(),
            comp_factors: self
                .dim_vector
                .iter()
                .enumerate()
                .filter(|(_, &d)| d > 0)
                .map(|(v, &d)| (v + 1, d))
                .collect(),
            radical_layers: self.radical_layers.clone(),
            socle_layers: self.socle_layers.clone(),
        }
    }

    /// Deterministic text form, e.g. `d=1,2|r=1,0;0,2|s=0,2;1,0`.
    pub fn canonical_text(&self) -> String {
        let vec_str = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let layers = |l: &[Vec<usize>]| l.iter().map(|v| vec_str(v)).collect::<Vec<_>>().join(";");
        format!("d={}|r={}|s={}", vec_str(&self.dim_vector), layers(&self.radical_layers), layers(&self.socle_layers))
    }

    /// Radical layers as vertex lists, e.g. `2.13.2` (1-based labels).
    pub fn loewy_string(&self) -> String {
        self.radical_layers
            .iter()
            .map(|layer| {
                let mut s = String::new();
                for (v, &m) in layer.iter().enumerate() {
                    for _ in 0..m {
                        s.push_str(&(v + 1).to_string());
                    }
                }
                s
            })
            .collect::<Vec<_>>()
            .join(".")
    }
}

impl ModuleMap {
    pub fn zero(m: &QuiverRep, n: &QuiverRep) -> Self {
        ModuleMap { blocks: m.dims.iter().zip(&n.dims).map(|(&a, &b)| Matrix::zeros(m.p(), a, b)).collect() }
    }

    pub fn identity(m: &QuiverRep) -> Self {
        ModuleMap { blocks: m.dims.iter().map(|&a| Matrix::identity(m.p(), a)).collect() }
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &ModuleMap) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, g: &ModuleMap) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, c: u32) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn flatten(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for b in &self.blocks {
            for r in 0..b.rows() {
                out.extend_from_slice(b.row(r));
            }
        }
        out
    }

    pub fn is_homomorphism(&self, m: &QuiverRep, n: &QuiverRep) -> bool {
        m.alg
            .arrows()
            .iter()
            .enumerate()
            .all(|(k, a)| m.maps[k].mul(&self.blocks[a.tgt]) == self.blocks[a.src].mul(&n.maps[k]))
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_bijective(&self) -> bool {
        self.blocks.iter().all(|b| b.rows() == b.cols() && b.rank() == b.rows())
    }

    pub fn image_spaces(&self) -> Spaces {
        self.blocks.iter().map(Subspace::span).collect()
    }

    pub fn kernel_spaces(&self) -> Spaces {
        self.blocks.iter().map(|b| Subspace::span(&b.left_null_space())).collect()
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }
}

/// Basis of Hom(M, N): null space of M_α f_t = f_s N_α over all arrows.
pub fn hom_basis(m: &QuiverRep, n: &QuiverRep) -> Vec<ModuleMap> {
    assert!(Arc::ptr_eq(&m.alg, &n.alg) || *m.alg == *n.alg, "algebra mismatch");
    let p = m.p();
    let nv = m.dims.len();
    let mut offsets = vec![0; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + m.dims[v] * n.dims[v];
    }
    let unknowns = offsets[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    let idx = |v: usize, r: usize, c: usize| offsets[v] + r * n.dims[v] + c;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (k, a) in m.alg.arrows().iter().enumerate() {
        let (s, t) = (a.src, a.tgt);
        let ma = &m.maps[k];
        let na = &n.maps[k];
        for r in 0..m.dims[s] {
            for c in 0..n.dims[t] {
                let mut row = vec![0u32; unknowns];
                // (M_α f_t)[r][c]
                for q in 0..m.dims[t] {
                    let x = ma.get(r, q);
                    if x != 0 {
                        let i = idx(t, q, c);
                        row[i] = (row[i] + x) % p;
                    }
                }
                // − (f_s N_α)[r][c]
                for q in 0..n.dims[s] {
                    let x = na.get(q, c);
                    if x != 0 {
                        let i = idx(s, r, q);
                        row[i] = (row[i] + fneg(p, x)) % p;
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = Matrix::from_rows(p, unknowns, &rows);
    let null = sys.null_space();
    (0..null.rows())
        .map(|k| {
            let v = null.row(k);
            ModuleMap {
                blocks: (0..nv).map(|w| Matrix::from_fn(p, m.dims[w], n.dims[w], |r, c| v[idx(w, r, c)])).collect(),
            }
        })
        .collect()
}

pub fn hom_dim(m: &QuiverRep, n: &QuiverRep) -> usize {
    hom_basis(m, n).len()
}

/// Trace of T in X: Σ of images of all maps T → X.
pub fn trace_spaces(t: &QuiverRep, x: &QuiverRep) -> Spaces {
    let mut out = x.zero_spaces();
    for f in hom_basis(t, x) {
        for (v, b) in f.blocks.iter().enumerate() {
            if b.rows() > 0 && !b.is_zero() {
                out[v] = out[v].sum(&Subspace::span(b));
            }
        }
    }
    out
}

/// X ∈ Fac T.
pub fn in_fac(x: &QuiverRep, t: &QuiverRep) -> bool {
    trace_spaces(t, x).iter().all(|s| s.is_full())
}

pub fn direct_sum(parts: &[&QuiverRep]) -> QuiverRep {
    assert!(!parts.is_empty());
    let alg = parts[0].alg.clone();
    let nv = alg.n();
    let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let mut m = Matrix::zeros(alg.p(), dims[a.src], dims[a.tgt]);
            let (mut r0, mut c0) = (0, 0);
            for part in parts {
                m.put_block(r0, c0, &part.maps[k]);
                r0 += part.dims[a.src];
                c0 += part.dims[a.tgt];
            }
            m
        })
        .collect();
    QuiverRep::raw(&alg, dims, maps)
}

/// Inclusion of the `k`-th summand into a direct sum of `parts`.
pub fn summand_inclusion(parts: &[&QuiverRep], k: usize) -> ModuleMap {
    let nv = parts[0].dims.len();
    let p = parts[0].p();
    ModuleMap {
        blocks: (0..nv)
            .map(|v| {
                let total: usize = parts.iter().map(|m| m.dims[v]).sum();
                let off: usize = parts[..k].iter().map(|m| m.dims[v]).sum();
                let mut b = Matrix::zeros(p, parts[k].dims[v], total);
                for r in 0..parts[k].dims[v] {
                    b.set(r, off + r, 1);
                }
                b
            })
            .collect(),
    }
}

/// Maps out of a direct sum, given componentwise.
pub fn map_from_sum(components: &[ModuleMap]) -> ModuleMap {
    let nv = components[0].blocks.len();
    ModuleMap {
        blocks: (0..nv)
            .map(|v| {
                let mut b = components[0].blocks[v].clone();
                for c in &components[1..] {
                    b = b.vstack(&c.blocks[v]);
                }
                b
            })
            .collect(),
    }
}

/// Maps into a direct sum, given componentwise.
pub fn map_to_sum(components: &[ModuleMap]) -> ModuleMap {
    let nv = components[0].blocks.len();
    ModuleMap {
        blocks: (0..nv)
            .map(|v| {
                let mut b = components[0].blocks[v].clone();
                for c in &components[1..] {
                    b = b.hstack(&c.blocks[v]);
                }
                b
            })
            .collect(),
    }
}

// ── Projective presentations ────────────────────────────────────────────

/// A map ⊕_l e_{src_l}A → ⊕_k e_{tgt_k}A; the generator of summand l goes to
/// (entries[k][l])_k with entries[k][l] ∈ e_{tgt_k} A e_{src_l}.
#[derive(Clone, Debug)]
pub struct ProjMap {
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub entries: Vec<Vec<Vec<u32>>>,
}

/// ⊕ e_v A over the listed vertices.
pub fn proj_sum(alg: &Arc<AssocAlgebra>, vertices: &[usize]) -> QuiverRep {
    if vertices.is_empty() {
        return QuiverRep::zero(alg);
    }
    let ps: Vec<QuiverRep> = vertices.iter().map(|&v| QuiverRep::projective(alg, v)).collect();
    direct_sum(&ps.iter().collect::<Vec<_>>())
}

/// Coordinates of the summand blocks of ⊕ e_v A at each vertex.
fn proj_layout(alg: &AssocAlgebra, vertices: &[usize]) -> Vec<Vec<(usize, Vec<usize>)>> {
    (0..alg.n())
        .map(|w| {
            let mut off = 0;
            vertices
                .iter()
                .map(|&v| {
                    let b = alg.block(v, w);
                    let r = (off, b);
                    off += r.1.len();
                    r
                })
                .collect()
        })
        .collect()
}

impl ProjMap {
    pub fn module_map(&self, alg: &Arc<AssocAlgebra>) -> ModuleMap {
        let p = alg.p();
        let src_layout = proj_layout(alg, &self.src);
        let tgt_layout = proj_layout(alg, &self.tgt);
        let blocks = (0..alg.n())
            .map(|w| {
                let rows: usize = src_layout[w].iter().map(|(_, b)| b.len()).sum();
                let cols: usize = tgt_layout[w].iter().map(|(_, b)| b.len()).sum();
                let mut m = Matrix::zeros(p, rows, cols);
                for (l, (roff, rblock)) in src_layout[w].iter().enumerate() {
                    for (ri, &x) in rblock.iter().enumerate() {
                        for (k, (coff, cblock)) in tgt_layout[w].iter().enumerate() {
                            let lam = &self.entries[k][l];
                            let prod = alg.mul(lam, &alg.unit(x));
                            for (ci, &y) in cblock.iter().enumerate() {
                                if prod[y] != 0 {
                                    m.set(roff + ri, coff + ci, prod[y]);
                                }
                            }
                        }
                    }
                }
                m
            })
            .collect();
        ModuleMap { blocks }
    }
}

/// Projective cover P → M by lifting a basis of the top.
pub fn projective_cover(m: &QuiverRep) -> (Vec<usize>, ModuleMap) {
    let alg = m.algebra();
    let gens = m.top_generators();
    let vertices: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let p = m.p();
    let layout = proj_layout(alg, &vertices);
    let blocks = (0..alg.n())
        .map(|u| {
            let rows: usize = layout[u].iter().map(|(_, b)| b.len()).sum();
            let mut out = Matrix::zeros(p, rows, m.dims[u]);
            for (l, (off, block)) in layout[u].iter().enumerate() {
                let (w, vec) = &gens[l];
                for (ri, &x) in block.iter().enumerate() {
                    debug_assert_eq!(alg.src(x), *w);
                    let img = m.action(x).apply(vec);
                    out.row_mut(off + ri).copy_from_slice(&img);
                }
            }
            out
        })
        .collect();
    (vertices, ModuleMap { blocks })
}

/// Elements (λ_k)_k of ⊕ e_{v_k} A from coordinates at vertex w.
fn coords_to_elements(alg: &AssocAlgebra, vertices: &[usize], w: usize, coords: &[u32]) -> Vec<Vec<u32>> {
    let layout = proj_layout(alg, vertices);
    layout[w]
        .iter()
        .map(|(off, block)| {
            let mut e = alg.zero();
            for (i, &x) in block.iter().enumerate() {
                e[x] = coords[off + i];
            }
            e
        })
        .collect()
}

/// Minimal projective resolution truncated after `max_len` differentials.
/// `terms[0]` is P_0; `diffs[k]` maps `terms[k+1]` to `terms[k]`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub terms: Vec<Vec<usize>>,
    pub diffs: Vec<ProjMap>,
    /// True when the last computed kernel was zero.
    pub complete: bool,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.terms.iter().rposition(|t| !t.is_empty()).unwrap_or(0)
    }
}

pub fn min_projective_resolution(m: &QuiverRep, max_len: usize) -> Resolution {
    let alg = m.algebra().clone();
    let (p0, cover) = projective_cover(m);
    let mut terms = vec![p0.clone()];
    let mut diffs = Vec::new();
    let mut prev_vertices = p0;
    let mut prev_map = cover;
    let mut complete = false;
    for _ in 0..max_len {
        let big = proj_sum(&alg, &prev_vertices);
        let ker = prev_map.kernel_spaces();
        if ker.iter().all(|s| s.dim() == 0) {
            complete = true;
            break;
        }
        let (k, inc) = big.submodule(&ker);
        let (kv, kcover) = projective_cover(&k);
        let into_big = kcover.then(&inc);
        // read off the generator images as algebra elements
        let gens = k.top_generators();
        let mut entries = vec![vec![alg.zero(); kv.len()]; prev_vertices.len()];
        for (l, (w, vec)) in gens.iter().enumerate() {
            let coords = inc.blocks[*w].apply(vec);
            let els = coords_to_elements(&alg, &prev_vertices, *w, &coords);
            for (kk, e) in els.into_iter().enumerate() {
                entries[kk][l] = e;
            }
        }
        let d = ProjMap { src: kv.clone(), tgt: prev_vertices.clone(), entries };
        debug_assert_eq!(d.module_map(&alg), into_big);
        terms.push(kv.clone());
        diffs.push(d);
        prev_map = into_big;
        prev_vertices = kv;
    }
    if !complete {
        complete = prev_map.kernel_spaces().iter().all(|s| s.dim() == 0);
    }
    Resolution { terms, diffs, complete }
}

/// P_1 → P_0 → M → 0 minimal.
pub fn min_projective_presentation(m: &QuiverRep) -> Resolution {
    min_projective_resolution(m, 1)
}

pub fn projective_dimension(m: &QuiverRep, bound: usize) -> Option<usize> {
    if m.is_zero() {
        return Some(0);
    }
    let r = min_projective_resolution(m, bound + 1);
    if r.complete {
        Some(r.length())
    } else {
        None
    }
}

/// Matrix of Hom(d, N): Hom(tgt, N) → Hom(src, N), rows indexed by ⊕_k N_{tgt_k}.
fn hom_dual_matrix(d: &ProjMap, n: &QuiverRep) -> Matrix {
    let p = n.p();
    let rows: usize = d.tgt.iter().map(|&v| n.dim(v)).sum();
    let cols: usize = d.src.iter().map(|&v| n.dim(v)).sum();
    let mut out = Matrix::zeros(p, rows, cols);
    let mut roff = 0;
    for (k, &tv) in d.tgt.iter().enumerate() {
        let mut coff = 0;
        for (l, &sv) in d.src.iter().enumerate() {
            let b = n.act_elem(tv, sv, &d.entries[k][l]);
            out.put_block(roff, coff, &b);
            coff += n.dim(sv);
        }
        roff += n.dim(tv);
    }
    out
}

/// dim Ext^k(M, N) from the minimal projective resolution of M.
pub fn ext_dim(m: &QuiverRep, n: &QuiverRep, k: usize) -> Result<usize> {
    if k > 2 {
        return Err(AtlasError::DegreeOutOfRange(k));
    }
    if m.is_zero() {
        return Ok(0);
    }
    let res = min_projective_resolution(m, k + 1);
    Ok(ext_from_resolution(&res, n, k))
}

pub fn ext_from_resolution(res: &Resolution, n: &QuiverRep, k: usize) -> usize {
    let hom_q = |j: usize| -> usize { res.terms.get(j).map(|t| t.iter().map(|&v| n.dim(v)).sum()).unwrap_or(0) };
    let rank_dual = |j: usize| -> usize {
        // d_j : Q_j → Q_{j−1}, j ≥ 1
        if j == 0 {
            return 0;
        }
        match res.diffs.get(j - 1) {
            Some(d) => hom_dual_matrix(d, n).rank(),
            None => 0,
        }
    };
    hom_q(k) - rank_dual(k + 1) - rank_dual(k)
}

/// dim Tor_k(M, A/J) via Q ⊗ (A/J) = Q/QJ.
pub fn tor_dim_quotient(m: &QuiverRep, j: &TwoSidedIdeal, k: usize) -> Result<usize> {
    if k > 2 {
        return Err(AtlasError::DegreeOutOfRange(k));
    }
    if m.is_zero() {
        return Ok(0);
    }
    let alg = m.algebra();
    let space = j.space();
    // a two-sided ideal splits into blocks, so its free coordinates do too
    let keep = space.complement_coords();
    let free: Vec<Vec<usize>> =
        (0..alg.n()).map(|v| keep.iter().copied().filter(|&x| alg.src(x) == v).collect()).collect();
    let res = min_projective_resolution(m, k + 1);
    let c_dim = |t: &[usize]| -> usize { t.iter().map(|&v| free[v].len()).sum() };
    let tensor_rank = |idx: usize| -> usize {
        // rank of d_idx ⊗ A/J : C_idx → C_{idx−1}
        if idx == 0 {
            return 0;
        }
        let Some(d) = res.diffs.get(idx - 1) else { return 0 };
        let mut mat = Matrix::zeros(alg.p(), c_dim(&d.src), c_dim(&d.tgt));
        let mut roff = 0;
        for (l, &sv) in d.src.iter().enumerate() {
            for (ri, &y) in free[sv].iter().enumerate() {
                let mut coff = 0;
                for (kk, &tv) in d.tgt.iter().enumerate() {
                    let prod = space.reduce(&alg.mul(&d.entries[kk][l], &alg.unit(y)));
                    for (ci, &z) in free[tv].iter().enumerate() {
                        if prod[z] != 0 {
                            mat.set(roff + ri, coff + ci, prod[z]);
                        }
                    }
                    coff += free[tv].len();
                }
            }
            roff += free[sv].len();
        }
        mat.rank()
    };
    let ck = res.terms.get(k).map(|t| c_dim(t)).unwrap_or(0);
    Ok(ck - tensor_rank(k) - tensor_rank(k + 1))
}

/// Tr M over the opposite algebra: the cokernel of the dual of a minimal presentation.
pub fn transpose(m: &QuiverRep) -> QuiverRep {
    let alg = m.algebra().clone();
    let op = alg.opposite();
    if m.is_zero() {
        return QuiverRep::zero(&op);
    }
    let pres = min_projective_presentation(m);
    let Some(d1) = pres.diffs.first() else {
        return QuiverRep::zero(&op);
    };
    // Hom(−, A) turns d1 into P_0^* → P_1^* over A^op with transposed entries.
    let entries = (0..d1.src.len()).map(|l| (0..d1.tgt.len()).map(|k| d1.entries[k][l].clone()).collect()).collect();
    let dual = ProjMap { src: d1.tgt.clone(), tgt: d1.src.clone(), entries };
    let big = proj_sum(&op, &dual.tgt);
    let img = dual.module_map(&op).image_spaces();
    big.quotient(&img).0
}

/// τM = D Tr M.
pub fn tau(m: &QuiverRep) -> QuiverRep {
    transpose(m).dual_to(m.algebra())
}

pub fn is_tau_rigid(m: &QuiverRep) -> bool {
    hom_dim(m, &tau(m)) == 0
}

// ── Isomorphism ─────────────────────────────────────────────────────────

/// Budget for exhaustive search over Hom-space combinations.
pub const ISO_EXHAUSTIVE_BUDGET: u64 = 4096;
pub const ISO_RANDOM_SAMPLES: usize = 256;

#[derive(Clone, Copy, Debug, Default)]
pub struct IsoOptions {
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// An explicit isomorphism was found.
    Isomorphic,
    /// Non-isomorphism is certified (invariants differ, a local witness, or exhaustive search).
    NotIsomorphic,
    /// Randomized search found nothing; not a certificate.
    Unknown,
}

pub fn find_isomorphism(m: &QuiverRep, n: &QuiverRep, opts: &IsoOptions) -> (IsoVerdict, Option<ModuleMap>) {
    if m.dims != n.dims {
        return (IsoVerdict::NotIsomorphic, None);
    }
    if m.is_zero() {
        return (IsoVerdict::Isomorphic, Some(ModuleMap::zero(m, n)));
    }
    if m.fingerprint() != n.fingerprint() {
        return (IsoVerdict::NotIsomorphic, None);
    }
    let basis = hom_basis(m, n);
    if let Some(f) = basis.iter().find(|f| f.is_bijective()) {
        return (IsoVerdict::Isomorphic, Some(f.clone()));
    }
    // With a one-dimensional socle or top the invertible maps avoid a proper
    // subspace, so some basis element would have been invertible.
    if m.local_witness().is_some() {
        return (IsoVerdict::NotIsomorphic, None);
    }
    let p = m.p() as u64;
    let k = basis.len() as u32;
    if k == 0 {
        return (IsoVerdict::NotIsomorphic, None);
    }
    if p.checked_pow(k).map(|t| t <= ISO_EXHAUSTIVE_BUDGET).unwrap_or(false) {
        let total = p.pow(k);
        for code in 1..total {
            let f = combination(&basis, code, m.p());
            if f.is_bijective() {
                return (IsoVerdict::Isomorphic, Some(f));
            }
        }
        return (IsoVerdict::NotIsomorphic, None);
    }
    log::warn!("iso search outside the exhaustive regime (dim Hom = {k}); sampling");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..ISO_RANDOM_SAMPLES {
        let coeffs: Vec<u32> = (0..basis.len()).map(|_| rng.gen_range(0..m.p())).collect();
        let f = linear_combination(&basis, &coeffs);
        if f.is_bijective() {
            return (IsoVerdict::Isomorphic, Some(f));
        }
    }
    (IsoVerdict::Unknown, None)
}

fn combination(basis: &[ModuleMap], mut code: u64, p: u32) -> ModuleMap {
    let mut coeffs = Vec::with_capacity(basis.len());
    for _ in 0..basis.len() {
        coeffs.push((code % p as u64) as u32);
        code /= p as u64;
    }
    linear_combination(basis, &coeffs)
}

pub fn linear_combination(basis: &[ModuleMap], coeffs: &[u32]) -> ModuleMap {
    let mut acc = basis[0].scale(coeffs[0]);
    for (f, &c) in basis.iter().zip(coeffs).skip(1) {
        if c != 0 {
            acc = acc.add(&f.scale(c));
        }
    }
    acc
}

pub fn is_isomorphic(m: &QuiverRep, n: &QuiverRep) -> bool {
    find_isomorphism(m, n, &IsoOptions::default()).0 == IsoVerdict::Isomorphic
}

/// Whether End(M) is local with residue field F_p (certified only through a
/// one-dimensional socle or top).
pub fn has_local_witness(m: &QuiverRep) -> bool {
    m.local_witness().is_some()
}

/// Decomposes M as ⊕ Z_k^{m_k} over catalog entries with local witnesses.
/// Returns (catalog index, multiplicity) pairs, certified by an explicit isomorphism.
pub fn split_indecomposables(m: &QuiverRep, catalog: &[QuiverRep]) -> Result<Vec<(usize, usize)>> {
    split_with_candidates(m, catalog, &(0..catalog.len()).collect::<Vec<_>>())
}

pub fn split_with_candidates(
    m: &QuiverRep,
    catalog: &[QuiverRep],
    candidates: &[usize],
) -> Result<Vec<(usize, usize)>> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let p = m.p();
    let mut found: Vec<(usize, usize)> = Vec::new();
    let mut pieces: Vec<(QuiverRep, ModuleMap)> = Vec::new();
    let mut remaining: Vec<usize> = m.dims.clone();
    for &idx in candidates {
        let z = &catalog[idx];
        if z.is_zero() || z.dims.iter().zip(&remaining).any(|(a, b)| a > b) {
            continue;
        }
        let witness = z
            .local_witness()
            .ok_or_else(|| AtlasError::Inconsistent(format!("catalog entry {idx} lacks a local witness")))?;
        let into = hom_basis(z, m);
        if into.is_empty() {
            continue;
        }
        let back = hom_basis(m, z);
        if back.is_empty() {
            continue;
        }
        let pairing = Matrix::from_fn(p, back.len(), into.len(), |i, j| witness.scalar(&into[j].then(&back[i])));
        let r = pairing.rank();
        if r == 0 {
            continue;
        }
        // columns giving an invertible minor
        let chosen = pairing.transpose().rref_rows_independent();
        for &j in chosen.iter().take(r) {
            pieces.push((z.clone(), into[j].clone()));
        }
        for (a, b) in remaining.iter_mut().zip(&z.dims) {
            *a -= b * r;
        }
        found.push((idx, r));
        if remaining.iter().all(|&x| x == 0) {
            break;
        }
    }
    if remaining.iter().any(|&x| x != 0) {
        return Err(AtlasError::NotInCatalog(format!("residual dimension vector {remaining:?}")));
    }
    let parts: Vec<&QuiverRep> = pieces.iter().map(|(z, _)| z).collect();
    let _sum = direct_sum(&parts);
    let phi = map_from_sum(&pieces.iter().map(|(_, f)| f.clone()).collect::<Vec<_>>());
    if !phi.is_bijective() {
        return Err(AtlasError::Inconsistent("splitting map is not bijective".into()));
    }
    Ok(found)
}

impl Matrix {
    /// Indices of a maximal set of linearly independent rows, chosen greedily.
    pub fn rref_rows_independent(&self) -> Vec<usize> {
        let mut acc = Subspace::zero(self.p(), self.cols());
        let mut out = Vec::new();
        for r in 0..self.rows() {
            if acc.insert(self.row(r)) {
                out.push(r);
            }
        }
        out
    }
}

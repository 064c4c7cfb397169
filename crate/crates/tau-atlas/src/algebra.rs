//! Basis-and-table algebras: the Auslander algebra Λ of K[x]/(x^n), its
//! quotients and opposites.
//!
//! Λ is the path algebra of the quiver with arrows a_i: i → i+1 and
//! b_i: i → i−1 modulo a_1b_2 = 0 and a_ib_{i+1} = b_ia_{i−1}, paths being
//! written in travel order. Every nonzero path equals a unique b^s a^t.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{AtlasError, Result};
use crate::linalg::{fmul, is_prime, Matrix, Subspace};

/// The path b^s a^t starting at `start` (vertices 1-based).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Monomial {
    pub start: usize,
    pub downs: usize,
    pub ups: usize,
}

impl Monomial {
    pub fn idempotent(i: usize) -> Self {
        Monomial { start: i, downs: 0, ups: 0 }
    }
    pub fn valley(&self) -> usize {
        self.start - self.downs
    }
    pub fn target(&self) -> usize {
        self.start - self.downs + self.ups
    }
    pub fn degree(&self) -> usize {
        self.downs + self.ups
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "e{}", self.start);
        }
        let mut parts = Vec::new();
        let mut v = self.start;
        for _ in 0..self.downs {
            parts.push(format!("b{v}"));
            v -= 1;
        }
        for _ in 0..self.ups {
            parts.push(format!("a{v}"));
            v += 1;
        }
        write!(f, "{}", parts.join("."))
    }
}

/// Product of normal-form monomials, or `None` when it vanishes.
///
/// Moving each a past each b by the mesh relation keeps both counts, so the
/// product of (i,s,t) and (i−s+t,s',t') is (i,s+s',t+t') unless the path is
/// pushed below vertex 1, where a_1b_2 = 0 kills it.
pub fn multiply_monomials(x: Monomial, y: Monomial) -> Option<Monomial> {
    if x.target() != y.start {
        return None;
    }
    let downs = x.downs + y.downs;
    if downs >= x.start {
        return None;
    }
    Some(Monomial { start: x.start, downs, ups: x.ups + y.ups })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    /// Basis index of the arrow.
    pub elem: usize,
    /// 0-based source and target vertices.
    pub src: usize,
    pub tgt: usize,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Auslander,
    Quotient,
    Opposite,
}

/// A basic algebra with a basis of paths, each lying in some e_u A e_v.
pub struct AssocAlgebra {
    n: usize,
    p: u32,
    kind: Kind,
    labels: Vec<Monomial>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    table: Vec<Vec<(usize, u32)>>,
    idempotents: Vec<usize>,
    arrows: Vec<Arrow>,
    paths: Vec<Vec<usize>>,
    parent: Option<(Arc<AssocAlgebra>, Subspace)>,
    op: OnceLock<Arc<AssocAlgebra>>,
}

impl fmt::Debug for AssocAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AssocAlgebra({:?}, n={}, p={}, dim={})", self.kind, self.n, self.p, self.dim())
    }
}

impl PartialEq for AssocAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.p == other.p
            && self.labels == other.labels
            && self.src == other.src
            && self.tgt == other.tgt
            && self.table == other.table
            && self.arrows == other.arrows
    }
}

#[derive(Serialize)]
pub struct AlgebraDescriptor {
    pub n: usize,
    pub p: u32,
    pub dim: usize,
    pub basis: Vec<Monomial>,
    pub idempotents: Vec<usize>,
}

pub fn check_field(p: u32) -> Result<()> {
    if !is_prime(p) || p > 65521 {
        return Err(AtlasError::NotPrime(p));
    }
    Ok(())
}

/// Normal-form basis of Λ sorted by (start, downs, ups).
pub fn auslander_basis(n: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for start in 1..=n {
        for downs in 0..start {
            let valley = start - downs;
            for ups in 0..=(n - valley) {
                out.push(Monomial { start, downs, ups });
            }
        }
    }
    out
}

/// Builds Λ for K[x]/(x^n) over F_p.
pub fn build_auslander(n: usize, p: u32) -> Result<Arc<AssocAlgebra>> {
    if n < 1 {
        return Err(AtlasError::InvalidSize(n));
    }
    check_field(p)?;
    let labels = auslander_basis(n);
    let dim = labels.len();
    let index: std::collections::HashMap<Monomial, usize> = labels.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let mut table = vec![Vec::new(); dim * dim];
    for (a, &x) in labels.iter().enumerate() {
        for (b, &y) in labels.iter().enumerate() {
            if let Some(z) = multiply_monomials(x, y) {
                table[a * dim + b] = vec![(index[&z], 1)];
            }
        }
    }
    let idempotents = (1..=n).map(|i| index[&Monomial::idempotent(i)]).collect();
    let mut arrows = Vec::new();
    for i in 1..n {
        let m = Monomial { start: i, downs: 0, ups: 1 };
        arrows.push(Arrow { elem: index[&m], src: i - 1, tgt: i, name: format!("a{i}") });
    }
    for i in 2..=n {
        let m = Monomial { start: i, downs: 1, ups: 0 };
        arrows.push(Arrow { elem: index[&m], src: i - 1, tgt: i - 2, name: format!("b{i}") });
    }
    let arrow_of = |name: String| arrows.iter().position(|a| a.name == name).unwrap();
    let paths = labels
        .iter()
        .map(|m| {
            let mut path = Vec::new();
            let mut v = m.start;
            for _ in 0..m.downs {
                path.push(arrow_of(format!("b{v}")));
                v -= 1;
            }
            for _ in 0..m.ups {
                path.push(arrow_of(format!("a{v}")));
                v += 1;
            }
            path
        })
        .collect();
    let src = labels.iter().map(|m| m.start - 1).collect();
    let tgt = labels.iter().map(|m| m.target() - 1).collect();
    Ok(Arc::new(AssocAlgebra {
        n,
        p,
        kind: Kind::Auslander,
        labels,
        src,
        tgt,
        table,
        idempotents,
        arrows,
        paths,
        parent: None,
        op: OnceLock::new(),
    }))
}

impl AssocAlgebra {
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[Monomial] {
        &self.labels
    }
    pub fn label(&self, x: usize) -> Monomial {
        self.labels[x]
    }
    /// 0-based vertex u with x ∈ e_u A.
    pub fn src(&self, x: usize) -> usize {
        self.src[x]
    }
    /// 0-based vertex v with x ∈ A e_v.
    pub fn tgt(&self, x: usize) -> usize {
        self.tgt[x]
    }
    pub fn idempotent(&self, i: usize) -> usize {
        self.idempotents[i]
    }
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn path(&self, x: usize) -> &[usize] {
        &self.paths[x]
    }
    pub fn is_opposite(&self) -> bool {
        self.kind == Kind::Opposite
    }
    pub fn parent(&self) -> Option<&(Arc<AssocAlgebra>, Subspace)> {
        self.parent.as_ref()
    }

    pub fn mul_basis(&self, x: usize, y: usize) -> &[(usize, u32)] {
        &self.table[x * self.dim() + y]
    }

    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.dim()]
    }

    pub fn unit(&self, x: usize) -> Vec<u32> {
        let mut v = self.zero();
        v[x] = 1;
        v
    }

    pub fn one(&self) -> Vec<u32> {
        let mut v = self.zero();
        for &e in &self.idempotents {
            v[e] = 1;
        }
        v
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut out = self.zero();
        for (a, &ca) in x.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (b, &cb) in y.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                let c = fmul(p, ca, cb);
                for &(z, cz) in self.mul_basis(a, b) {
                    out[z] = (out[z] + fmul(p, c, cz)) % p;
                }
            }
        }
        out
    }

    /// Basis elements of e_u A e_v (0-based vertices), in basis order.
    pub fn block(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&x| self.src[x] == u && self.tgt[x] == v).collect()
    }

    /// Basis elements of e_u A, in basis order.
    pub fn row_block(&self, u: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&x| self.src[x] == u).collect()
    }

    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|x| !self.idempotents.contains(x)).collect()
    }

    /// Left and right multiplication generators: idempotents and arrows.
    pub fn generators(&self) -> Vec<usize> {
        let mut g = self.idempotents.clone();
        g.extend(self.arrows.iter().map(|a| a.elem));
        g
    }

    pub fn descriptor(&self) -> AlgebraDescriptor {
        AlgebraDescriptor {
            n: self.n,
            p: self.p,
            dim: self.dim(),
            basis: self.labels.clone(),
            idempotents: self.idempotents.clone(),
        }
    }

    /// Checks (xy)z = x(yz) on all basis triples.
    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        for x in 0..d {
            for y in 0..d {
                let xy = self.mul(&self.unit(x), &self.unit(y));
                for z in 0..d {
                    let l = self.mul(&xy, &self.unit(z));
                    let yz = self.mul(&self.unit(y), &self.unit(z));
                    let r = self.mul(&self.unit(x), &yz);
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Element given by a path of arrow indices (travel order).
    pub fn path_element(&self, arrows: &[usize]) -> Vec<u32> {
        let mut acc = match arrows.first() {
            None => return self.one(),
            Some(&a) => self.unit(self.arrows[a].elem),
        };
        for &a in &arrows[1..] {
            acc = self.mul(&acc, &self.unit(self.arrows[a].elem));
        }
        acc
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// The opposite algebra: same basis, reversed products, arrows reversed.
    pub fn opposite(self: &Arc<Self>) -> Arc<AssocAlgebra> {
        self.op
            .get_or_init(|| {
                let d = self.dim();
                let mut table = vec![Vec::new(); d * d];
                for x in 0..d {
                    for y in 0..d {
                        table[x * d + y] = self.table[y * d + x].clone();
                    }
                }
                let arrows = self
                    .arrows
                    .iter()
                    .map(|a| Arrow { elem: a.elem, src: a.tgt, tgt: a.src, name: a.name.clone() })
                    .collect();
                let paths = self.paths.iter().map(|p| p.iter().rev().copied().collect()).collect();
                let kind = if self.kind == Kind::Opposite { Kind::Auslander } else { Kind::Opposite };
                Arc::new(AssocAlgebra {
                    n: self.n,
                    p: self.p,
                    kind,
                    labels: self.labels.clone(),
                    src: self.tgt.clone(),
                    tgt: self.src.clone(),
                    table,
                    idempotents: self.idempotents.clone(),
                    arrows,
                    paths,
                    parent: None,
                    op: OnceLock::new(),
                })
            })
            .clone()
    }

    /// Projection of a parent element into this quotient algebra.
    pub fn project_from_parent(&self, v: &[u32]) -> Vec<u32> {
        let (_, j) = self.parent.as_ref().expect("not a quotient algebra");
        j.quotient_coords(v)
    }
}

/// A two-sided ideal stored as an echelonized subspace of A.
#[derive(Clone)]
pub struct TwoSidedIdeal {
    alg: Arc<AssocAlgebra>,
    space: Subspace,
}

impl fmt::Debug for TwoSidedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoSidedIdeal(dim={}, rows={:?})", self.dim(), self.row_dims())
    }
}

impl PartialEq for TwoSidedIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space
    }
}
impl Eq for TwoSidedIdeal {}

impl std::hash::Hash for TwoSidedIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.space.hash(state)
    }
}

impl TwoSidedIdeal {
    /// Wraps a subspace after verifying closure under both actions.
    pub fn from_subspace(alg: &Arc<AssocAlgebra>, space: Subspace) -> Result<Self> {
        let ideal = TwoSidedIdeal { alg: alg.clone(), space };
        if !ideal.is_closed() {
            return Err(AtlasError::NotAnIdeal);
        }
        Ok(ideal)
    }

    pub fn zero(alg: &Arc<AssocAlgebra>) -> Self {
        TwoSidedIdeal { alg: alg.clone(), space: Subspace::zero(alg.p(), alg.dim()) }
    }

    pub fn whole(alg: &Arc<AssocAlgebra>) -> Self {
        TwoSidedIdeal { alg: alg.clone(), space: Subspace::full(alg.p(), alg.dim()) }
    }

    pub fn algebra(&self) -> &Arc<AssocAlgebra> {
        &self.alg
    }
    pub fn space(&self) -> &Subspace {
        &self.space
    }
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn contains(&self, v: &[u32]) -> bool {
        self.space.contains(v)
    }

    fn is_closed(&self) -> bool {
        let gens = self.alg.generators();
        let b = self.space.basis();
        (0..b.rows()).all(|r| {
            gens.iter().all(|&g| {
                let gv = self.alg.unit(g);
                self.space.contains(&self.alg.mul(&gv, b.row(r))) && self.space.contains(&self.alg.mul(b.row(r), &gv))
            })
        })
    }

    /// Subspace e_u T (rows over the full basis).
    pub fn row_component(&self, u: usize) -> Subspace {
        let e = self.alg.unit(self.alg.idempotent(u));
        let b = self.space.basis();
        let mut m = Matrix::zeros(self.alg.p(), 0, self.alg.dim());
        for r in 0..b.rows() {
            m.push_row(&self.alg.mul(&e, b.row(r)));
        }
        Subspace::span(&m)
    }

    /// dim e_u T e_v for all u, v.
    pub fn block_dims(&self) -> Vec<Vec<usize>> {
        let n = self.alg.n();
        let mut out = vec![vec![0; n]; n];
        for u in 0..n {
            let eu = self.alg.unit(self.alg.idempotent(u));
            for v in 0..n {
                let ev = self.alg.unit(self.alg.idempotent(v));
                let b = self.space.basis();
                let mut m = Matrix::zeros(self.alg.p(), 0, self.alg.dim());
                for r in 0..b.rows() {
                    m.push_row(&self.alg.mul(&self.alg.mul(&eu, b.row(r)), &ev));
                }
                out[u][v] = m.rank();
            }
        }
        out
    }

    /// Dimension vectors of the right modules e_u T.
    pub fn row_dims(&self) -> Vec<Vec<usize>> {
        self.block_dims()
    }

    /// Canonical bytes for deduplication.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let b = self.space.basis();
        let mut out = Vec::with_capacity(b.rows() * b.cols());
        for r in 0..b.rows() {
            out.extend(b.row(r).iter().map(|&x| x as u8));
        }
        out
    }
}

/// Smallest two-sided ideal containing the generators.
pub fn two_sided_closure(alg: &Arc<AssocAlgebra>, generators: &[Vec<u32>]) -> TwoSidedIdeal {
    let mut space = Subspace::zero(alg.p(), alg.dim());
    let mut queue: Vec<Vec<u32>> = Vec::new();
    for g in generators {
        if space.insert(g) {
            queue.push(g.clone());
        }
    }
    let gens: Vec<Vec<u32>> = alg.generators().iter().map(|&g| alg.unit(g)).collect();
    while let Some(v) = queue.pop() {
        for g in &gens {
            for w in [alg.mul(g, &v), alg.mul(&v, g)] {
                if space.insert(&w) {
                    queue.push(w);
                }
            }
        }
    }
    TwoSidedIdeal { alg: alg.clone(), space }
}

/// Smallest right ideal (closed under right multiplication) containing the generators.
pub fn right_closure(alg: &Arc<AssocAlgebra>, generators: &[Vec<u32>]) -> Subspace {
    one_sided_closure(alg, generators, false)
}

/// Smallest left ideal containing the generators.
pub fn left_closure(alg: &Arc<AssocAlgebra>, generators: &[Vec<u32>]) -> Subspace {
    one_sided_closure(alg, generators, true)
}

fn one_sided_closure(alg: &Arc<AssocAlgebra>, generators: &[Vec<u32>], left: bool) -> Subspace {
    let mut space = Subspace::zero(alg.p(), alg.dim());
    let mut queue = Vec::new();
    for g in generators {
        if space.insert(g) {
            queue.push(g.clone());
        }
    }
    let gens: Vec<Vec<u32>> = alg.generators().iter().map(|&g| alg.unit(g)).collect();
    while let Some(v) = queue.pop() {
        for g in &gens {
            let w = if left { alg.mul(g, &v) } else { alg.mul(&v, g) };
            if space.insert(&w) {
                queue.push(w);
            }
        }
    }
    space
}

impl TwoSidedIdeal {
    /// Wraps a subspace already known to be closed (checked in debug builds).
    pub(crate) fn from_closed(alg: &Arc<AssocAlgebra>, space: Subspace) -> Self {
        let t = TwoSidedIdeal { alg: alg.clone(), space };
        debug_assert!(t.is_closed());
        t
    }
}

/// Quotient A/J on the complement basis left free by the echelon pivots of J.
pub fn quotient_algebra(alg: &Arc<AssocAlgebra>, j: &TwoSidedIdeal) -> Result<Arc<AssocAlgebra>> {
    if !j.is_closed() {
        return Err(AtlasError::NotAnIdeal);
    }
    let space = j.space().clone();
    let keep = space.complement_coords();
    let d = keep.len();
    let p = alg.p();
    let mut table = vec![Vec::new(); d * d];
    for (a, &x) in keep.iter().enumerate() {
        for (b, &y) in keep.iter().enumerate() {
            let mut v = alg.zero();
            for &(z, c) in alg.mul_basis(x, y) {
                v[z] = (v[z] + c) % p;
            }
            let q = space.quotient_coords(&v);
            table[a * d + b] = q.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (k, c)).collect();
        }
    }
    let pos = |x: usize| keep.iter().position(|&k| k == x);
    let idempotents = alg
        .idempotents()
        .iter()
        .map(|&e| pos(e).ok_or_else(|| AtlasError::Inconsistent("ideal contains an idempotent".into())))
        .collect::<Result<Vec<_>>>()?;
    // arrows of A that survive; arrow images must be basis vectors
    let mut arrow_map = vec![None; alg.arrows().len()];
    let mut arrows = Vec::new();
    for (k, a) in alg.arrows().iter().enumerate() {
        if let Some(x) = pos(a.elem) {
            if !space.reduce(&alg.unit(a.elem)).iter().enumerate().all(|(c, &v)| (c == a.elem) == (v != 0)) {
                return Err(AtlasError::Inconsistent("arrow is not a basis vector mod the ideal".into()));
            }
            arrow_map[k] = Some(arrows.len());
            arrows.push(Arrow { elem: x, src: a.src, tgt: a.tgt, name: a.name.clone() });
        } else if !space.contains(&alg.unit(a.elem)) {
            return Err(AtlasError::Inconsistent("arrow neither kept nor killed".into()));
        }
    }
    let paths = keep
        .iter()
        .map(|&x| {
            alg.path(x)
                .iter()
                .map(|&a| {
                    arrow_map[a].ok_or_else(|| AtlasError::Inconsistent("surviving path through killed arrow".into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let labels = keep.iter().map(|&x| alg.label(x)).collect();
    let src = keep.iter().map(|&x| alg.src(x)).collect();
    let tgt = keep.iter().map(|&x| alg.tgt(x)).collect();
    Ok(Arc::new(AssocAlgebra {
        n: alg.n(),
        p,
        kind: Kind::Quotient,
        labels,
        src,
        tgt,
        table,
        idempotents,
        arrows,
        paths,
        parent: Some((alg.clone(), space)),
        op: OnceLock::new(),
    }))
}

/// The ideal M generated by e_n.
pub fn ideal_m(alg: &Arc<AssocAlgebra>) -> TwoSidedIdeal {
    let e = alg.unit(alg.idempotent(alg.n() - 1));
    two_sided_closure(alg, &[e])
}

/// The ideal L generated by the loop at n (b_n a_{n−1}); zero when n = 1.
pub fn ideal_l(alg: &Arc<AssocAlgebra>) -> TwoSidedIdeal {
    let n = alg.n();
    if n == 1 {
        return TwoSidedIdeal::zero(alg);
    }
    let lp = alg.labels().iter().position(|m| *m == Monomial { start: n, downs: 1, ups: 1 }).expect("loop at n");
    two_sided_closure(alg, &[alg.unit(lp)])
}

/// Matrix of right multiplication by `y` on A, in basis coordinates (rows = basis).
pub fn right_mult_matrix(alg: &AssocAlgebra, y: &[u32]) -> Matrix {
    let d = alg.dim();
    let mut m = Matrix::zeros(alg.p(), d, d);
    for x in 0..d {
        let mut row = vec![0; d];
        for (b, &cb) in y.iter().enumerate() {
            if cb == 0 {
                continue;
            }
            for &(z, c) in alg.mul_basis(x, b) {
                row[z] = (row[z] + fmul(alg.p(), c, cb)) % alg.p();
            }
        }
        m.row_mut(x).copy_from_slice(&row);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims() {
        assert_eq!(build_auslander(1, 2).unwrap().dim(), 1);
        assert_eq!(build_auslander(4, 2).unwrap().dim(), 30);
        assert_eq!(build_auslander(5, 3).unwrap().dim(), 55);
        assert!(build_auslander(0, 2).is_err());
        assert!(build_auslander(2, 4).is_err());
    }

    #[test]
    fn relations_in_table() {
        let a = build_auslander(3, 2).unwrap();
        let a1 = a.arrow_by_name("a1").unwrap();
        let b2 = a.arrow_by_name("b2").unwrap();
        assert!(a.path_element(&[a1, b2]).iter().all(|&x| x == 0));
        let a2 = a.arrow_by_name("a2").unwrap();
        let b3 = a.arrow_by_name("b3").unwrap();
        let lhs = a.path_element(&[a2, b3]);
        let rhs = a.path_element(&[b2, a1]);
        assert_eq!(lhs, rhs);
        let loop2 = a.labels().iter().position(|m| *m == Monomial { start: 2, downs: 1, ups: 1 }).unwrap();
        assert_eq!(lhs, a.unit(loop2));
    }

    #[test]
    fn ideal_m_and_l() {
        let a = build_auslander(4, 2).unwrap();
        let m = ideal_m(&a);
        let dims = m.block_dims();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(dims[i][j], (i + j + 2).saturating_sub(4));
            }
        }
        let a2 = build_auslander(2, 2).unwrap();
        let l = ideal_l(&a2);
        assert_eq!(l.dim(), 1);
        assert_eq!(l.block_dims(), vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn quotients() {
        let a = build_auslander(2, 2).unwrap();
        let g = quotient_algebra(&a, &ideal_l(&a)).unwrap();
        assert_eq!(g.dim(), 4);
        let z = quotient_algebra(&a, &TwoSidedIdeal::zero(&a)).unwrap();
        assert_eq!(z.dim(), a.dim());
        let a4 = build_auslander(4, 2).unwrap();
        assert_eq!(quotient_algebra(&a4, &ideal_l(&a4)).unwrap().dim(), 20);
    }

    #[test]
    fn opposite_roundtrip() {
        let a = build_auslander(3, 3).unwrap();
        let o = a.opposite();
        let oo = o.opposite();
        assert_eq!(*oo, *a);
        assert_eq!(o.block(0, 2).len(), 1);
        assert_eq!(o.block(2, 1).len(), 2);
    }
}

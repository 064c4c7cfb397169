//! The semigroup generated by the maximal ideals I_i = Λ(1−e_i)Λ, the map
//! w ↦ I(w), tilting checks and the tilting Hasse quiver.
//!
//! Vertex indices in this module are 1-based to match the letters of words.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{left_closure, right_closure, two_sided_closure, AssocAlgebra, TwoSidedIdeal};
use crate::error::{AtlasError, Result};
use crate::linalg::{Matrix, Subspace};
use crate::poset::HassePoset;
use crate::rep::{
    ext_dim, find_isomorphism, projective_dimension, tor_dim_quotient, IsoOptions, IsoVerdict, QuiverRep,
};
use crate::report::Report;
use crate::symgroup::{canonical_reduced_word, GenWord, Permutation};

fn check_vertex(alg: &AssocAlgebra, i: usize) -> Result<()> {
    if i == 0 || i > alg.n() {
        return Err(AtlasError::IndexOutOfRange(format!("vertex {i} for n = {}", alg.n())));
    }
    Ok(())
}

/// I_i = Λ(1−e_i)Λ.
pub fn maximal_ideal(alg: &Arc<AssocAlgebra>, i: usize) -> Result<TwoSidedIdeal> {
    check_vertex(alg, i)?;
    let gens: Vec<Vec<u32>> = (1..=alg.n()).filter(|&j| j != i).map(|j| alg.unit(alg.idempotent(j - 1))).collect();
    Ok(two_sided_closure(alg, &gens))
}

/// Span of all products tu, echelonized.
pub fn ideal_product(t: &TwoSidedIdeal, u: &TwoSidedIdeal) -> Result<TwoSidedIdeal> {
    let alg = t.algebra();
    if !Arc::ptr_eq(alg, u.algebra()) {
        return Err(AtlasError::AlgebraMismatch);
    }
    let tb = t.space().basis();
    let ub = u.space().basis();
    let mut space = Subspace::zero(alg.p(), alg.dim());
    for r in 0..tb.rows() {
        for s in 0..ub.rows() {
            let prod = alg.mul(tb.row(r), ub.row(s));
            if prod.iter().any(|&x| x != 0) {
                space.insert(&prod);
            }
        }
    }
    Ok(TwoSidedIdeal::from_closed(alg, space))
}

/// I_i T = Λ(1−e_i)T, computed as a left closure.
pub fn left_mul_maximal(i: usize, t: &TwoSidedIdeal) -> Result<TwoSidedIdeal> {
    let alg = t.algebra();
    check_vertex(alg, i)?;
    let mut proj = alg.one();
    proj[alg.idempotent(i - 1)] = 0;
    let b = t.space().basis();
    let gens: Vec<Vec<u32>> = (0..b.rows()).map(|r| alg.mul(&proj, b.row(r))).collect();
    Ok(TwoSidedIdeal::from_closed(alg, left_closure(alg, &gens)))
}

/// T I_i = T(1−e_i)Λ, computed as a right closure.
pub fn right_mul_maximal(t: &TwoSidedIdeal, i: usize) -> Result<TwoSidedIdeal> {
    let alg = t.algebra();
    check_vertex(alg, i)?;
    let mut proj = alg.one();
    proj[alg.idempotent(i - 1)] = 0;
    let b = t.space().basis();
    let gens: Vec<Vec<u32>> = (0..b.rows()).map(|r| alg.mul(b.row(r), &proj)).collect();
    Ok(TwoSidedIdeal::from_closed(alg, right_closure(alg, &gens)))
}

/// I_{i_1} ⋯ I_{i_l} for an arbitrary word.
pub fn ideal_of_gen_word(alg: &Arc<AssocAlgebra>, word: &GenWord) -> Result<TwoSidedIdeal> {
    let mut t = TwoSidedIdeal::whole(alg);
    for &i in word.letters.iter().rev() {
        if i == 0 || i >= alg.n() {
            return Err(AtlasError::LetterOutOfRange { letter: i, degree: alg.n() });
        }
        t = left_mul_maximal(i, &t)?;
    }
    Ok(t)
}

/// I(w) along the canonical reduced word.
pub fn ideal_of_word(alg: &Arc<AssocAlgebra>, w: &Permutation) -> Result<TwoSidedIdeal> {
    if w.degree() != alg.n() {
        return Err(AtlasError::DegreeMismatch(w.degree(), alg.n()));
    }
    ideal_of_gen_word(alg, &canonical_reduced_word(w))
}

/// Components e_jT as submodules of P_j, j = 1..n.
pub fn ideal_summands(t: &TwoSidedIdeal) -> Vec<QuiverRep> {
    let alg = t.algebra();
    (0..alg.n()).map(|j| ideal_component(t, j)).collect()
}

/// e_jT (0-based j) as a right module.
pub fn ideal_component(t: &TwoSidedIdeal, j: usize) -> QuiverRep {
    let alg = t.algebra();
    let pj = QuiverRep::projective(alg, j);
    let row = t.row_component(j);
    let spaces = (0..alg.n())
        .map(|v| {
            let block = alg.block(j, v);
            let b = row.basis();
            let mut m = Matrix::zeros(alg.p(), 0, block.len());
            for r in 0..b.rows() {
                let v: Vec<u32> = block.iter().map(|&x| b.row(r)[x]).collect();
                m.push_row(&v);
            }
            Subspace::span(&m)
        })
        .collect();
    pj.submodule(&spaces).0
}

/// Hom_Λ(I_i, T) realized inside Λ as {λ : λ I_i ⊆ T}.
pub fn hom_from_ideal(i: usize, t: &TwoSidedIdeal) -> Result<TwoSidedIdeal> {
    let alg = t.algebra();
    let ii = maximal_ideal(alg, i)?;
    colon(t, &ii, true)
}

/// Hom_{Λ^op}(I_i, T) realized inside Λ as {λ : I_i λ ⊆ T}.
pub fn hom_op_from_ideal(i: usize, t: &TwoSidedIdeal) -> Result<TwoSidedIdeal> {
    let alg = t.algebra();
    let ii = maximal_ideal(alg, i)?;
    colon(t, &ii, false)
}

/// {λ : λT = 0}.
pub fn left_annihilator(t: &TwoSidedIdeal) -> Result<TwoSidedIdeal> {
    colon(&TwoSidedIdeal::zero(t.algebra()), t, true)
}

/// dim Tor_k(M, S_i) with S_i = Λ/I_i.
pub fn tor_dim(m: &QuiverRep, i: usize, k: usize) -> Result<usize> {
    let ii = maximal_ideal(m.algebra(), i)?;
    tor_dim_quotient(m, &ii, k)
}

/// {λ : λJ ⊆ T} (right = true) or {λ : Jλ ⊆ T}.
fn colon(t: &TwoSidedIdeal, j: &TwoSidedIdeal, right: bool) -> Result<TwoSidedIdeal> {
    let alg = t.algebra();
    let d = alg.dim();
    let jb = j.space().basis();
    let keep = t.space().complement_coords();
    // row x of the system: images of basis x under λ ↦ (λy mod T)_y
    let mut sys = Matrix::zeros(alg.p(), d, jb.rows() * keep.len());
    for x in 0..d {
        let ux = alg.unit(x);
        let mut row = Vec::with_capacity(jb.rows() * keep.len());
        for r in 0..jb.rows() {
            let prod = if right { alg.mul(&ux, jb.row(r)) } else { alg.mul(jb.row(r), &ux) };
            row.extend(t.space().quotient_coords(&prod));
        }
        sys.row_mut(x).copy_from_slice(&row);
    }
    let null = sys.left_null_space();
    TwoSidedIdeal::from_subspace(alg, Subspace::span(&null))
}

#[derive(Clone, Debug, Serialize)]
pub struct TiltingCertificate {
    pub proj_dim_le_1: bool,
    pub ext1_vanishes: bool,
    pub distinct_summands: usize,
    pub expected_summands: usize,
    pub is_tilting: bool,
}

/// Tilting check for a module given by indecomposable summands.
pub fn is_tilting(summands: &[QuiverRep]) -> TiltingCertificate {
    let nonzero: Vec<&QuiverRep> = summands.iter().filter(|m| !m.is_zero()).collect();
    let n = summands.first().map(|m| m.algebra().n()).unwrap_or(0);
    let proj_dim_le_1 = nonzero.iter().all(|m| matches!(projective_dimension(m, 1), Some(d) if d <= 1));
    let ext1_vanishes =
        nonzero.iter().all(|a| nonzero.iter().all(|b| ext_dim(a, b, 1).map(|d| d == 0).unwrap_or(false)));
    let mut classes: Vec<&QuiverRep> = Vec::new();
    for m in &nonzero {
        let known = classes.iter().any(|c| {
            let (v, _) = find_isomorphism(c, m, &IsoOptions::default());
            v == IsoVerdict::Isomorphic
        });
        if !known {
            classes.push(m);
        }
    }
    let distinct_summands = classes.len();
    TiltingCertificate {
        proj_dim_le_1,
        ext1_vanishes,
        distinct_summands,
        expected_summands: n,
        is_tilting: proj_dim_le_1 && ext1_vanishes && distinct_summands == n,
    }
}

#[derive(Clone, Debug)]
pub struct TiltEntry {
    pub perm: Permutation,
    pub word: GenWord,
    pub ideal: TwoSidedIdeal,
}

/// All I(w), w ∈ S_n, in lexicographic order of w.
pub struct TiltCatalog {
    alg: Arc<AssocAlgebra>,
    pub entries: Vec<TiltEntry>,
    index: HashMap<TwoSidedIdeal, usize>,
    perm_index: HashMap<Permutation, usize>,
}

#[derive(Serialize)]
pub struct TiltRecord {
    pub word: Vec<usize>,
    pub perm: Permutation,
    pub summand_dim_vectors: Vec<Vec<usize>>,
    pub ideal_dim: usize,
}

pub fn tilt_enumerate(alg: &Arc<AssocAlgebra>) -> Result<TiltCatalog> {
    tilt_enumerate_threads(alg, 1)
}

pub fn tilt_enumerate_threads(alg: &Arc<AssocAlgebra>, threads: usize) -> Result<TiltCatalog> {
    let perms = Permutation::all(alg.n());
    let compute = |w: &Permutation| -> Result<TiltEntry> {
        let word = canonical_reduced_word(w);
        let ideal = ideal_of_gen_word(alg, &word)?;
        Ok(TiltEntry { perm: w.clone(), word, ideal })
    };
    let entries: Vec<TiltEntry> = crate::par::par_map(threads, &perms, compute).into_iter().collect::<Result<_>>()?;
    let mut index = HashMap::new();
    let mut perm_index = HashMap::new();
    for (k, e) in entries.iter().enumerate() {
        if index.insert(e.ideal.clone(), k).is_some() {
            return Err(AtlasError::Inconsistent(format!("I(w) not injective at {}", e.perm)));
        }
        perm_index.insert(e.perm.clone(), k);
    }
    let expected: usize = (1..=alg.n()).product();
    if entries.len() != expected {
        return Err(AtlasError::CountMismatch { expected, found: entries.len() });
    }
    Ok(TiltCatalog { alg: alg.clone(), entries, index, perm_index })
}

impl TiltCatalog {
    pub fn algebra(&self) -> &Arc<AssocAlgebra> {
        &self.alg
    }
    pub fn len(&self) -> usize {
        self.entries.len()
    }
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
    pub fn find(&self, t: &TwoSidedIdeal) -> Option<usize> {
        self.index.get(t).copied()
    }
    pub fn find_perm(&self, w: &Permutation) -> Option<usize> {
        self.perm_index.get(w).copied()
    }

    pub fn records(&self) -> Vec<TiltRecord> {
        self.entries
            .iter()
            .map(|e| TiltRecord {
                word: e.word.letters.clone(),
                perm: e.perm.clone(),
                summand_dim_vectors: ideal_summands(&e.ideal).iter().map(|m| m.dims().to_vec()).collect(),
                ideal_dim: e.ideal.dim(),
            })
            .collect()
    }

    /// Hasse quiver: T → I_iT when I_iT ≠ T; otherwise the upper neighbour is
    /// Hom_{Λ^op}(I_i, T). Every edge is emitted once from its upper end.
    pub fn hasse(&self) -> Result<HassePoset<Permutation>> {
        let n = self.alg.n();
        let mut edges = Vec::new();
        for (k, e) in self.entries.iter().enumerate() {
            for i in 1..n {
                let down = left_mul_maximal(i, &e.ideal)?;
                if down != e.ideal {
                    let to =
                        self.find(&down).ok_or_else(|| AtlasError::Inconsistent("I_iT left the catalog".into()))?;
                    edges.push((k, to, i));
                } else {
                    let up = hom_op_from_ideal(i, &e.ideal)?;
                    let from = self
                        .find(&up)
                        .ok_or_else(|| AtlasError::Inconsistent("Hom(I_i, T) left the catalog".into()))?;
                    if from == k || left_mul_maximal(i, &up)? != e.ideal {
                        return Err(AtlasError::Inconsistent("upper neighbour does not mutate back".into()));
                    }
                    edges.push((from, k, i));
                }
            }
        }
        let verts = self.entries.iter().map(|e| e.perm.clone()).collect();
        Ok(HassePoset::new(verts, edges))
    }
}

/// I_i² = I_i, I_iI_j = I_jI_i for |i−j| ≥ 2, I_iI_jI_i = I_jI_iI_j for |i−j| = 1.
pub fn check_semigroup_relations(alg: &Arc<AssocAlgebra>) -> Result<Report> {
    let n = alg.n();
    let mut report = Report::new("semigroup_relations");
    let gens: Vec<TwoSidedIdeal> = (1..n).map(|i| maximal_ideal(alg, i)).collect::<Result<_>>()?;
    for i in 1..n {
        let ii = &gens[i - 1];
        report.check(format!("I{i}^2 = I{i}"), ideal_product(ii, ii)? == *ii, "");
        for j in i + 1..n {
            let jj = &gens[j - 1];
            if j - i >= 2 {
                let ok = ideal_product(ii, jj)? == ideal_product(jj, ii)?;
                report.check(format!("I{i}I{j} = I{j}I{i}"), ok, "");
            } else {
                let l = ideal_product(&ideal_product(ii, jj)?, ii)?;
                let r = ideal_product(&ideal_product(jj, ii)?, jj)?;
                report.check(format!("I{i}I{j}I{i} = I{j}I{i}I{j}"), l == r, "");
            }
        }
    }
    Ok(report)
}

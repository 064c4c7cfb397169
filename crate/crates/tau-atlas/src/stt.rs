//! Support τ-tilting pairs: a shared catalog of indecomposables, the generic
//! left-mutation engine, the structural route through tilting ideals, and the
//! bijection with S_{n+1}.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::algebra::{ideal_m, AssocAlgebra};
use crate::error::{AtlasError, Result};
use crate::ideal::{ideal_component, tilt_enumerate_threads, TiltCatalog};
use crate::linalg::Subspace;
use crate::par::par_map;
use crate::poset::HassePoset;
use crate::rep::{
    direct_sum, find_isomorphism, hom_basis, map_to_sum, split_with_candidates, tau, Fingerprint, IsoOptions,
    IsoVerdict, ModuleDescriptor, ModuleMap, QuiverRep,
};
use crate::report::Report;
use crate::symgroup::{coset_factorize, inversion_length, Permutation};

/// One coordinate of a pair: an indecomposable from the catalog, or the
/// shifted projective P_v[1] recorded by its (0-based) vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Slot {
    Module(usize),
    Zero(usize),
}

impl Slot {
    pub fn module(&self) -> Option<usize> {
        match *self {
            Slot::Module(id) => Some(id),
            Slot::Zero(_) => None,
        }
    }
}

/// Sorted module ids plus sorted support complement.
pub type PairId = (Vec<usize>, Vec<usize>);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SttPair {
    pub slots: Vec<Slot>,
}

impl SttPair {
    pub fn modules(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.slots.iter().filter_map(|s| s.module()).collect();
        v.sort_unstable();
        v
    }

    /// Modules in slot order.
    pub fn slot_modules(&self) -> Vec<usize> {
        self.slots.iter().filter_map(|s| s.module()).collect()
    }

    pub fn complement(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .slots
            .iter()
            .filter_map(|s| match *s {
                Slot::Zero(v) => Some(v),
                Slot::Module(_) => None,
            })
            .collect();
        v.sort_unstable();
        v
    }

    pub fn identity(&self) -> PairId {
        (self.modules(), self.complement())
    }
}

// ── Catalog ─────────────────────────────────────────────────────────────

/// Indecomposable modules up to isomorphism, each with a local witness.
/// Hom spaces between entries and τ of entries are memoized.
pub struct ModuleCatalog {
    alg: Arc<AssocAlgebra>,
    modules: Vec<QuiverRep>,
    fingerprints: Vec<Fingerprint>,
    origins: Vec<String>,
    by_fp: HashMap<Fingerprint, Vec<usize>>,
    homs: Mutex<HashMap<(usize, usize), Arc<Vec<ModuleMap>>>>,
    taus: Mutex<HashMap<usize, Arc<QuiverRep>>>,
    opts: IsoOptions,
}

impl ModuleCatalog {
    pub fn new(alg: &Arc<AssocAlgebra>, opts: IsoOptions) -> Self {
        ModuleCatalog {
            alg: alg.clone(),
            modules: Vec::new(),
            fingerprints: Vec::new(),
            origins: Vec::new(),
            by_fp: HashMap::new(),
            homs: Mutex::new(HashMap::new()),
            taus: Mutex::new(HashMap::new()),
            opts,
        }
    }

    pub fn algebra(&self) -> &Arc<AssocAlgebra> {
        &self.alg
    }
    pub fn len(&self) -> usize {
        self.modules.len()
    }
    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }
    pub fn module(&self, id: usize) -> &QuiverRep {
        &self.modules[id]
    }
    pub fn modules(&self) -> &[QuiverRep] {
        &self.modules
    }
    pub fn fingerprint(&self, id: usize) -> &Fingerprint {
        &self.fingerprints[id]
    }
    pub fn origin(&self, id: usize) -> &str {
        &self.origins[id]
    }

    /// Catalog id of a module isomorphic to `m`, if any.
    pub fn lookup(&self, m: &QuiverRep) -> Result<Option<usize>> {
        let fp = m.fingerprint();
        for &id in self.by_fp.get(&fp).map(|v| v.as_slice()).unwrap_or(&[]) {
            match find_isomorphism(&self.modules[id], m, &self.opts).0 {
                IsoVerdict::Isomorphic => return Ok(Some(id)),
                IsoVerdict::NotIsomorphic => {}
                IsoVerdict::Unknown => {
                    return Err(AtlasError::Inconsistent(format!("isomorphism undecided against entry {id}")))
                }
            }
        }
        Ok(None)
    }

    /// Adds `m` unless an isomorphic entry exists; returns its id.
    pub fn intern(&mut self, m: QuiverRep, origin: impl Into<String>) -> Result<usize> {
        if m.is_zero() {
            return Err(AtlasError::Inconsistent("zero module offered to the catalog".into()));
        }
        if let Some(id) = self.lookup(&m)? {
            return Ok(id);
        }
        if m.local_witness().is_none() {
            return Err(AtlasError::Inconsistent(format!(
                "catalog candidate {} lacks a simple socle or top",
                m.fingerprint().loewy_string()
            )));
        }
        let id = self.modules.len();
        let fp = m.fingerprint();
        self.by_fp.entry(fp.clone()).or_default().push(id);
        self.fingerprints.push(fp);
        self.modules.push(m);
        self.origins.push(origin.into());
        Ok(id)
    }

    pub fn hom(&self, a: usize, b: usize) -> Arc<Vec<ModuleMap>> {
        if let Some(h) = self.homs.lock().unwrap().get(&(a, b)) {
            return h.clone();
        }
        let h = Arc::new(hom_basis(&self.modules[a], &self.modules[b]));
        self.homs.lock().unwrap().insert((a, b), h.clone());
        h
    }

    pub fn tau(&self, a: usize) -> Arc<QuiverRep> {
        if let Some(t) = self.taus.lock().unwrap().get(&a) {
            return t.clone();
        }
        let t = Arc::new(tau(&self.modules[a]));
        self.taus.lock().unwrap().insert(a, t.clone());
        t
    }

    /// Y ≅ ⊕ Z_k^{m_k} over catalog entries.
    pub fn split(&self, y: &QuiverRep) -> Result<Vec<(usize, usize)>> {
        let candidates: Vec<usize> =
            (0..self.modules.len()).filter(|&id| divides(self.modules[id].dims(), y.dims())).collect();
        split_with_candidates(y, &self.modules, &candidates)
    }

    pub fn support(&self, ids: &[usize]) -> BTreeSet<usize> {
        ids.iter().flat_map(|&id| self.modules[id].support()).collect()
    }

    /// Trace of ⊕ `sources` inside entry `x`.
    fn trace_in(&self, sources: &[usize], x: usize) -> Vec<Subspace> {
        let mut spaces = self.modules[x].zero_spaces();
        for &s in sources {
            for f in self.hom(s, x).iter() {
                for (acc, img) in spaces.iter_mut().zip(f.image_spaces()) {
                    *acc = acc.sum(&img);
                }
            }
        }
        spaces
    }

    pub fn in_fac(&self, x: usize, sources: &[usize]) -> bool {
        self.trace_in(sources, x).iter().zip(self.modules[x].dims()).all(|(s, &d)| s.dim() == d)
    }

    pub fn descriptor(&self, id: usize) -> ModuleDescriptor {
        self.fingerprints[id].descriptor()
    }

    /// Hash of sorted summand fingerprints plus the support complement.
    pub fn key(&self, pair: &SttPair) -> String {
        let mut fps: Vec<String> = pair.modules().iter().map(|&id| self.fingerprints[id].canonical_text()).collect();
        fps.sort();
        let comp: Vec<String> = pair.complement().iter().map(|v| (v + 1).to_string()).collect();
        let text = format!("{}#{}", fps.join("/"), comp.join(","));
        let digest = Sha256::digest(text.as_bytes());
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    /// Loewy strings of the summands in slot order, e.g. `1.2 | 2.1.2`.
    pub fn loewy_summary(&self, pair: &SttPair) -> String {
        pair.slot_modules().iter().map(|&id| self.fingerprints[id].loewy_string()).collect::<Vec<_>>().join(" | ")
    }
}

fn divides(z: &[usize], y: &[usize]) -> bool {
    let Some(k) = z.iter().position(|&d| d > 0) else { return false };
    if y[k] % z[k] != 0 {
        return false;
    }
    let m = y[k] / z[k];
    m > 0 && z.iter().zip(y).all(|(&a, &b)| a * m == b)
}

// ── Approximations and mutation ─────────────────────────────────────────

/// Greedy minimalization. `h[a]` is a basis of Hom(X, V_a) and `psi(a, b)` a
/// basis of Hom(V_a, V_b). Returns the kept (a, c) copies of V_a, mapped by h[a][c].
fn approx_core(h: &[Arc<Vec<ModuleMap>>], psi: impl Fn(usize, usize) -> Arc<Vec<ModuleMap>>) -> Vec<(usize, usize)> {
    let t = h.len();
    let copies: Vec<(usize, usize)> = (0..t).flat_map(|a| (0..h[a].len()).map(move |c| (a, c))).collect();
    // rows[copy][b]: flattened composites X → V_a → V_b
    let rows: Vec<Vec<Vec<Vec<u32>>>> = copies
        .iter()
        .map(|&(a, c)| (0..t).map(|b| psi(a, b).iter().map(|g| h[a][c].then(g).flatten()).collect()).collect())
        .collect();
    let approximates = |keep: &[bool]| -> bool {
        (0..t).all(|b| {
            let need = h[b].len();
            if need == 0 {
                return true;
            }
            let width = rows.iter().flat_map(|r| r[b].first()).map(|v| v.len()).next().unwrap_or(0);
            let mut acc = Subspace::zero(h[b][0].blocks.first().map(|m| m.p()).unwrap_or(2), width);
            for (idx, r) in rows.iter().enumerate() {
                if keep[idx] {
                    for v in &r[b] {
                        acc.insert(v);
                    }
                }
            }
            acc.dim() == need
        })
    };
    let mut keep = vec![true; copies.len()];
    for idx in 0..copies.len() {
        keep[idx] = false;
        if !approximates(&keep) {
            keep[idx] = true;
        }
    }
    copies.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect()
}

/// Minimal left add(⊕ `v`)-approximation of `x`. Returns, for each summand of
/// the target, its index in `v`, together with the map into their direct sum.
pub fn min_left_approx(x: &QuiverRep, v: &[QuiverRep]) -> (Vec<usize>, ModuleMap) {
    let h: Vec<Arc<Vec<ModuleMap>>> = v.iter().map(|b| Arc::new(hom_basis(x, b))).collect();
    let psi = |a: usize, b: usize| Arc::new(hom_basis(&v[a], &v[b]));
    let kept = approx_core(&h, psi);
    let parts: Vec<usize> = kept.iter().map(|&(a, _)| a).collect();
    let maps: Vec<ModuleMap> = kept.iter().map(|&(a, c)| h[a][c].clone()).collect();
    let f = if maps.is_empty() { ModuleMap { blocks: Vec::new() } } else { map_to_sum(&maps) };
    (parts, f)
}

/// Left mutation at slot `k`; `None` when the slot is a shifted projective or
/// its module lies in Fac of the others.
pub fn left_mutation(cat: &ModuleCatalog, pair: &SttPair, k: usize) -> Result<Option<SttPair>> {
    let x = match pair.slots.get(k) {
        Some(Slot::Module(id)) => *id,
        Some(Slot::Zero(_)) => return Ok(None),
        None => return Err(AtlasError::IndexOutOfRange(format!("slot {k}"))),
    };
    let others: Vec<usize> =
        pair.slots.iter().enumerate().filter(|&(j, _)| j != k).filter_map(|(_, s)| s.module()).collect();
    if cat.in_fac(x, &others) {
        return Ok(None);
    }
    let h: Vec<Arc<Vec<ModuleMap>>> = others.iter().map(|&b| cat.hom(x, b)).collect();
    let kept = approx_core(&h, |a, b| cat.hom(others[a], others[b]));
    let new_slot = if kept.is_empty() {
        Slot::Zero(dropped_vertex(cat, x, &others)?)
    } else {
        let parts: Vec<&QuiverRep> = kept.iter().map(|&(a, _)| cat.module(others[a])).collect();
        let maps: Vec<ModuleMap> = kept.iter().map(|&(a, c)| h[a][c].clone()).collect();
        let f = map_to_sum(&maps);
        let sum = direct_sum(&parts);
        let (y, _) = sum.quotient(&f.image_spaces());
        if y.is_zero() {
            Slot::Zero(dropped_vertex(cat, x, &others)?)
        } else {
            let split = cat.split(&y)?;
            match split.as_slice() {
                [(id, _)] if !others.contains(id) => Slot::Module(*id),
                _ => {
                    return Err(AtlasError::Inconsistent(format!(
                        "cokernel {} is not a power of a new indecomposable",
                        y.fingerprint().loewy_string()
                    )))
                }
            }
        }
    };
    let mut slots = pair.slots.clone();
    slots[k] = new_slot;
    Ok(Some(SttPair { slots }))
}

fn dropped_vertex(cat: &ModuleCatalog, x: usize, others: &[usize]) -> Result<usize> {
    let mut all = others.to_vec();
    all.push(x);
    let before = cat.support(&all);
    let after = cat.support(others);
    let lost: Vec<usize> = before.difference(&after).copied().collect();
    match lost.as_slice() {
        [v] => Ok(*v),
        _ => Err(AtlasError::Inconsistent(format!("support dropped by {} vertices", lost.len()))),
    }
}

// ── Generic enumeration ─────────────────────────────────────────────────

/// Pairs reached from the regular pair by left mutations, with Hasse arrows
/// (from, to, 1-based slot).
#[derive(Clone, Debug)]
pub struct SttGraph {
    pub n: usize,
    pub pairs: Vec<SttPair>,
    pub edges: Vec<(usize, usize, usize)>,
    index: HashMap<PairId, usize>,
}

impl SttGraph {
    pub fn from_parts(n: usize, pairs: Vec<SttPair>, mut edges: Vec<(usize, usize, usize)>) -> Result<Self> {
        let mut index = HashMap::new();
        for (k, p) in pairs.iter().enumerate() {
            if index.insert(p.identity(), k).is_some() {
                return Err(AtlasError::Inconsistent(format!("pair {k} listed twice")));
            }
        }
        edges.sort_unstable();
        Ok(SttGraph { n, pairs, edges, index })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
    pub fn find(&self, pair: &SttPair) -> Option<usize> {
        self.index.get(&pair.identity()).copied()
    }

    /// μ_k for every pair and 1-based k: the left mutation when it exists,
    /// otherwise the unique pair whose left mutation at k lands here.
    pub fn total_mutations(&self) -> Result<Vec<Vec<usize>>> {
        let mut table = vec![vec![usize::MAX; self.n]; self.pairs.len()];
        for &(a, b, k) in &self.edges {
            for (u, v) in [(a, b), (b, a)] {
                let slot = &mut table[u][k - 1];
                if *slot != usize::MAX && *slot != v {
                    return Err(AtlasError::Inconsistent(format!("μ_{k} is ambiguous at pair {u}")));
                }
                *slot = v;
            }
        }
        if let Some(u) = table.iter().position(|r| r.contains(&usize::MAX)) {
            return Err(AtlasError::Inconsistent(format!("pair {u} lacks a mutation")));
        }
        Ok(table)
    }
}

/// The regular pair P_1, …, P_n.
pub fn regular_pair(cat: &ModuleCatalog) -> Result<SttPair> {
    let alg = cat.algebra();
    let slots = (0..alg.n())
        .map(|v| {
            let p = QuiverRep::projective(alg, v);
            cat.lookup(&p)?.map(Slot::Module).ok_or_else(|| AtlasError::NotInCatalog(format!("P_{}", v + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SttPair { slots })
}

/// Downward BFS from the regular pair. Each frontier level is mutated in
/// parallel and merged in order, so results do not depend on `threads`.
pub fn enumerate_stt(cat: &ModuleCatalog, threads: usize) -> Result<SttGraph> {
    let n = cat.algebra().n();
    let start = regular_pair(cat)?;
    let mut pairs = vec![start.clone()];
    let mut index = HashMap::from([(start.identity(), 0usize)]);
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let results = {
            let snapshot = &pairs;
            par_map(threads, &frontier, |&u| {
                (0..n).map(|k| left_mutation(cat, &snapshot[u], k)).collect::<Result<Vec<_>>>()
            })
        };
        let mut next = Vec::new();
        for (&u, res) in frontier.iter().zip(results) {
            for (k, r) in res?.into_iter().enumerate() {
                let Some(v) = r else { continue };
                let id = match index.get(&v.identity()) {
                    Some(&id) => {
                        if pairs[id] != v {
                            return Err(AtlasError::Inconsistent(format!(
                                "pair {id} reached with a different slot labelling"
                            )));
                        }
                        id
                    }
                    None => {
                        let id = pairs.len();
                        index.insert(v.identity(), id);
                        pairs.push(v);
                        next.push(id);
                        id
                    }
                };
                edges.push((u, id, k + 1));
            }
        }
        log::debug!("stt frontier: {} new pairs, {} total", next.len(), pairs.len());
        frontier = next;
    }
    edges.sort_unstable();
    Ok(SttGraph { n, pairs, edges, index })
}

/// U ≤ V iff every summand of U lies in Fac V.
pub fn stt_leq(cat: &ModuleCatalog, u: &SttPair, v: &SttPair) -> bool {
    let vs = v.modules();
    u.modules().iter().all(|&x| vs.contains(&x) || cat.in_fac(x, &vs))
}

// ── Structural route ────────────────────────────────────────────────────

/// Tilting ideals with their summands T_j = e_jT and T_j/T_jM interned in a
/// shared catalog.
pub struct StructuralAtlas {
    pub n: usize,
    pub tilt: TiltCatalog,
    pub catalog: ModuleCatalog,
    /// `summands[t][j-1]` = id of T_j.
    pub summands: Vec<Vec<usize>>,
    /// `bars[t][j-1]` = id of T_j/T_jM for j < n, `None` when zero.
    pub bars: Vec<Vec<Option<usize>>>,
}

impl StructuralAtlas {
    pub fn build(alg: &Arc<AssocAlgebra>, threads: usize, opts: IsoOptions) -> Result<Self> {
        let n = alg.n();
        let tilt = tilt_enumerate_threads(alg, threads)?;
        let m = ideal_m(alg);
        let modules: Vec<(Vec<QuiverRep>, Vec<QuiverRep>)> = par_map(threads, &tilt.entries, |e| {
            let ts: Vec<QuiverRep> = (0..n).map(|j| ideal_component(&e.ideal, j)).collect();
            let bars = ts[..n - 1].iter().map(|t| t.act_quotient(&m)).collect();
            (ts, bars)
        });
        let mut catalog = ModuleCatalog::new(alg, opts);
        let mut summands = Vec::new();
        let mut bars = Vec::new();
        for (e, (ts, bs)) in tilt.entries.iter().zip(modules) {
            let mut row = Vec::new();
            for (j, t) in ts.into_iter().enumerate() {
                row.push(catalog.intern(t, format!("T{}(w={})", j + 1, e.perm))?);
            }
            summands.push(row);
            let mut brow = Vec::new();
            for (j, b) in bs.into_iter().enumerate() {
                brow.push(if b.is_zero() {
                    None
                } else {
                    Some(catalog.intern(b, format!("T{}/T{}M(w={})", j + 1, j + 1, e.perm))?)
                });
            }
            bars.push(brow);
        }
        log::info!("structural catalog: {} tilting ideals, {} indecomposables", tilt.len(), catalog.len());
        Ok(StructuralAtlas { n, tilt, catalog, summands, bars })
    }

    /// μ_{[i+1,n]}(T): slots 1..i hold T_1..T_i, slot k > i holds T_{k−1}/T_{k−1}M.
    /// A zero slot records the vertex lost from the support at the step that
    /// produced it.
    pub fn mu_interval(&self, t: usize, i: usize) -> Result<SttPair> {
        if i > self.n {
            return Err(AtlasError::IndexOutOfRange(format!("interval start {i} for n = {}", self.n)));
        }
        let mut slots: Vec<Slot> = self.summands[t].iter().map(|&id| Slot::Module(id)).collect();
        for level in (i..self.n).rev() {
            let bar = if level == 0 { None } else { self.bars[t][level - 1] };
            slots[level] = match bar {
                Some(id) => Slot::Module(id),
                None => {
                    let x = slots[level].module();
                    let others: Vec<usize> =
                        slots.iter().enumerate().filter(|&(j, _)| j != level).filter_map(|(_, s)| s.module()).collect();
                    match x {
                        Some(x) => Slot::Zero(dropped_vertex(&self.catalog, x, &others)?),
                        None => return Err(AtlasError::Inconsistent("interval slot already zero".into())),
                    }
                }
            };
        }
        Ok(SttPair { slots })
    }

    /// I(w) for w ∈ S_{n+1} via w = s_{i+1}⋯s_n·v.
    pub fn stt_of_word(&self, w: &Permutation) -> Result<SttPair> {
        if w.degree() != self.n + 1 {
            return Err(AtlasError::DegreeMismatch(w.degree(), self.n + 1));
        }
        let (i, v) = coset_factorize(w);
        let t = self.tilt.find_perm(&v).ok_or_else(|| AtlasError::Inconsistent(format!("no tilting ideal for {v}")))?;
        self.mu_interval(t, i)
    }

    /// All (n+1)! pairs in lexicographic order of w, with Hasse arrows
    /// I(w) → I(s_iw) whenever l(s_iw) > l(w).
    pub fn atlas(&self) -> Result<SttAtlas> {
        let words = Permutation::all(self.n + 1);
        let mut pairs = Vec::with_capacity(words.len());
        let mut index = HashMap::new();
        let mut classes = Vec::with_capacity(words.len());
        let mut word_index = HashMap::new();
        for (k, w) in words.iter().enumerate() {
            let pair = self.stt_of_word(w)?;
            if index.insert(pair.identity(), k).is_some() {
                return Err(AtlasError::Inconsistent(format!("I is not injective at {w}")));
            }
            let (i, v) = coset_factorize(w);
            classes.push((i, v));
            pairs.push(pair);
            word_index.insert(w.clone(), k);
        }
        let mut edges = Vec::new();
        for (k, w) in words.iter().enumerate() {
            let l = inversion_length(w);
            for i in 1..=self.n {
                let sw = w.left_mul_simple(i);
                if inversion_length(&sw) > l {
                    edges.push((k, word_index[&sw], i));
                }
            }
        }
        let expected: usize = (1..=self.n + 1).product();
        if pairs.len() != expected {
            return Err(AtlasError::CountMismatch { expected, found: pairs.len() });
        }
        Ok(SttAtlas { hasse: HassePoset::new(words.clone(), edges), words, pairs, index, classes })
    }

    /// (i, v) with U = μ_{[i+1,n]}(I(v)); i counts the summands with S_n as a
    /// composition factor.
    pub fn classify(&self, atlas: &SttAtlas, pair: &SttPair) -> Result<(usize, Permutation)> {
        let k = atlas.find(pair).ok_or_else(|| AtlasError::NotInCatalog(format!("pair {:?}", pair.identity())))?;
        let count = pair.modules().iter().filter(|&&id| self.catalog.module(id).dims()[self.n - 1] > 0).count();
        let (i, v) = atlas.classes[k].clone();
        if i != count {
            return Err(AtlasError::Inconsistent(format!("S_n count {count} disagrees with interval start {i}")));
        }
        Ok((i, v))
    }
}

/// The structural catalog indexed by w ∈ S_{n+1}.
#[derive(Clone, Debug)]
pub struct SttAtlas {
    pub words: Vec<Permutation>,
    pub pairs: Vec<SttPair>,
    pub classes: Vec<(usize, Permutation)>,
    pub hasse: HassePoset<Permutation>,
    index: HashMap<PairId, usize>,
}

#[derive(Serialize)]
pub struct SttRecord {
    pub key: String,
    pub word: Permutation,
    pub i: usize,
    pub base_word: Permutation,
    pub summands: Vec<ModuleDescriptor>,
    pub support_complement: Vec<usize>,
}

impl SttAtlas {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
    pub fn find(&self, pair: &SttPair) -> Option<usize> {
        self.index.get(&pair.identity()).copied()
    }

    pub fn records(&self, cat: &ModuleCatalog) -> Vec<SttRecord> {
        self.pairs
            .iter()
            .enumerate()
            .map(|(k, pair)| SttRecord {
                key: cat.key(pair),
                word: self.words[k].clone(),
                i: self.classes[k].0,
                base_word: self.classes[k].1.clone(),
                summands: pair.slot_modules().iter().map(|&id| cat.descriptor(id)).collect(),
                support_complement: pair.complement().iter().map(|v| v + 1).collect(),
            })
            .collect()
    }

    /// Keys must separate the pairs.
    pub fn check_keys(&self, cat: &ModuleCatalog) -> Result<()> {
        let keys: BTreeSet<String> = self.pairs.iter().map(|p| cat.key(p)).collect();
        if keys.len() != self.pairs.len() {
            return Err(AtlasError::Inconsistent("pair keys collide".into()));
        }
        Ok(())
    }

    /// Re-indexes a generic enumeration by w; `None` if some pair is unknown.
    pub fn relabel(&self, graph: &SttGraph) -> Option<Vec<usize>> {
        graph.pairs.iter().map(|p| self.find(p)).collect()
    }
}

// ── Checks ──────────────────────────────────────────────────────────────

/// Hom(N, τN) = 0 summand-wise, and the pair counts add up to n.
pub fn tau_rigidity_report(cat: &ModuleCatalog, pairs: &[SttPair], suite: &str) -> Report {
    let mut report = Report::new(suite);
    let n = cat.algebra().n();
    let mut bad = Vec::new();
    for (k, pair) in pairs.iter().enumerate() {
        let ms = pair.modules();
        let sized = pair.slots.len() == n && ms.len() + pair.complement().len() == n;
        let off_support = pair.complement().iter().all(|&v| ms.iter().all(|&id| cat.module(id).dims()[v] == 0));
        let rigid = ms.iter().all(|&a| {
            ms.iter().all(|&b| {
                let tb = cat.tau(b);
                tb.is_zero() || hom_basis(cat.module(a), &tb).is_empty()
            })
        });
        if !(sized && off_support && rigid) {
            bad.push(k);
        }
    }
    report.check(
        "Hom(N, tau N) = 0 and |N| + |P| = n",
        bad.is_empty(),
        format!("{} pairs, failing {:?}", pairs.len(), bad),
    );
    report
}

/// Anti-isomorphism between the weak order on S_{n+1} and the pairs.
pub fn verify_anti_isomorphism(structural: &StructuralAtlas, atlas: &SttAtlas, graph: &SttGraph) -> Result<Report> {
    let mut report = Report::new("anti_isomorphism");
    let expected: usize = (1..=structural.n + 1).product();
    report.check("image has (n+1)! pairs", atlas.len() == expected, format!("{}", atlas.len()));
    let weak = crate::symgroup::weak_left_hasse(structural.n + 1);
    let phi: Vec<usize> = weak.vertices.iter().map(|w| atlas.words.iter().position(|x| x == w).unwrap()).collect();
    report.check("weak-order Hasse is opposite to I-image Hasse", weak.is_anti_isomorphic_via(&atlas.hasse, &phi), "");
    match atlas.relabel(graph) {
        Some(map) => {
            let mapped: BTreeSet<(usize, usize, usize)> =
                graph.edges.iter().map(|&(a, b, k)| (map[a], map[b], k)).collect();
            let own: BTreeSet<(usize, usize, usize)> = atlas.hasse.edges.iter().copied().collect();
            report.check("mutation arrows equal s_i arrows with matching letters", mapped == own, "");
            report.check("enumeration reaches every I(w)", graph.len() == atlas.len(), format!("{}", graph.len()));
        }
        None => report.check("enumerated pairs lie in the image of I", false, ""),
    }
    Ok(report)
}

/// μ_j² = id, commutation and braid relations of the total mutations.
pub fn verify_mutation_relations(graph: &SttGraph) -> Result<Report> {
    let mut report = Report::new("mutation_relations");
    let mu = graph.total_mutations()?;
    let n = graph.n;
    let (mut square, mut commute, mut braid) = (true, true, true);
    for u in 0..graph.len() {
        for j in 0..n {
            square &= mu[mu[u][j]][j] == u;
            for k in j + 1..n {
                if k - j >= 2 {
                    commute &= mu[mu[u][k]][j] == mu[mu[u][j]][k];
                } else {
                    braid &= mu[mu[mu[u][k]][j]][k] == mu[mu[mu[u][j]][k]][j];
                }
            }
        }
    }
    report.check("mu_j mu_j = id", square, "");
    report.check("mu_j mu_k = mu_k mu_j for |j-k| >= 2", commute, "");
    report.check("mu_j mu_k mu_j = mu_k mu_j mu_k for |j-k| = 1", braid, "");
    Ok(report)
}

/// Covers of the generation order coincide with the mutation arrows.
pub fn verify_order_covers(cat: &ModuleCatalog, graph: &SttGraph) -> Report {
    let mut report = Report::new("generation_order");
    let m = graph.len();
    let leq: Vec<Vec<bool>> =
        (0..m).map(|a| (0..m).map(|b| stt_leq(cat, &graph.pairs[a], &graph.pairs[b])).collect()).collect();
    let mut covers = BTreeSet::new();
    for a in 0..m {
        for b in 0..m {
            if a == b || !leq[b][a] || leq[a][b] {
                continue;
            }
            let between = (0..m).any(|c| c != a && c != b && leq[b][c] && leq[c][a] && !leq[a][c] && !leq[c][b]);
            if !between {
                covers.insert((a, b));
            }
        }
    }
    report.check(
        "Hasse arrows are exactly the covers",
        covers == arrow_pairs(graph),
        format!("{} covers", covers.len()),
    );
    let reach = HassePoset::new(graph.pairs.clone(), graph.edges.clone()).order_closure();
    let same = (0..m).all(|a| (0..m).all(|b| reach[a][b] == leq[b][a]));
    report.check("order closure of arrows equals the Fac order", same, "");
    report
}

fn arrow_pairs(graph: &SttGraph) -> BTreeSet<(usize, usize)> {
    graph.edges.iter().map(|&(a, b, _)| (a, b)).collect()
}

/// Agreement between the generic engine and the structural recursion.
pub fn verify_engine_agreement(structural: &StructuralAtlas, atlas: &SttAtlas, graph: &SttGraph) -> Result<Report> {
    let mut report = Report::new("engine_agreement");
    let cat = &structural.catalog;
    let n = structural.n;
    let generic: BTreeSet<&SttPair> = graph.pairs.iter().collect();
    let fast: BTreeSet<&SttPair> = atlas.pairs.iter().collect();
    report.check("identical catalogs", generic == fast, format!("{} vs {}", generic.len(), fast.len()));

    // per-step: every (pair, coordinate)
    let mut mismatches = Vec::new();
    let mut cases = 0usize;
    for (k, w) in atlas.words.iter().enumerate() {
        let l = inversion_length(w);
        for i in 1..=n {
            cases += 1;
            let got = left_mutation(cat, &atlas.pairs[k], i - 1)?;
            let sw = w.left_mul_simple(i);
            let want = if inversion_length(&sw) > l { Some(structural.stt_of_word(&sw)?) } else { None };
            if got != want {
                mismatches.push(format!("{w}/mu{i}"));
            }
        }
    }
    report.check(
        "per-step left mutations match s_i",
        mismatches.is_empty(),
        format!("{cases} cases, mismatches {mismatches:?}"),
    );

    // μ_{i+1} ⋯ μ_n (T) by iterated left mutation
    let mut chain_ok = true;
    for t in 0..structural.tilt.len() {
        let mut cur = structural.mu_interval(t, n)?;
        for i in (0..n).rev() {
            match left_mutation(cat, &cur, i)? {
                Some(next) => cur = next,
                None => {
                    chain_ok = false;
                    break;
                }
            }
            chain_ok &= cur == structural.mu_interval(t, i)?;
        }
    }
    report.check("iterated mu_n..mu_{i+1} equals the interval formula", chain_ok, "");

    // classification round trip
    let mut round_trip = true;
    for t in 0..structural.tilt.len() {
        for i in 0..=n {
            let pair = structural.mu_interval(t, i)?;
            let (ci, v) = structural.classify(atlas, &pair)?;
            round_trip &= ci == i && v == structural.tilt.entries[t].perm;
        }
    }
    report.check("classify inverts mu_interval", round_trip, "");
    Ok(report)
}

/// Index shifts: μ_k μ_{[i+1,n]} T = μ_{[i+1,n]} μ_k T for k ≤ i−1, and
/// μ_{[i+1,n]} μ_{k−1} T for k ≥ i+2.
pub fn verify_index_shifts(structural: &StructuralAtlas, atlas: &SttAtlas, graph: &SttGraph) -> Result<Report> {
    let mut report = Report::new("index_shifts");
    let mu = graph.total_mutations()?;
    let map = atlas.relabel(graph).ok_or_else(|| AtlasError::Inconsistent("unlabelled pair".into()))?;
    let n = structural.n;
    let gid = |pair: &SttPair| -> Result<usize> {
        graph.find(pair).ok_or_else(|| AtlasError::NotInCatalog("interval pair".into()))
    };
    let mut ok = true;
    let mut count = 0;
    for t in 0..structural.tilt.len() {
        let tg = gid(&structural.mu_interval(t, n)?)?;
        for i in 0..n {
            let u = gid(&structural.mu_interval(t, i)?)?;
            for k in 1..=n {
                let shifted = if k + 1 <= i {
                    k
                } else if k >= i + 2 {
                    k - 1
                } else {
                    continue;
                };
                let moved = mu[tg][shifted - 1];
                let (mi, _) = atlas.classes[map[moved]].clone();
                if mi != n {
                    ok = false;
                    continue;
                }
                let t2 = structural
                    .tilt
                    .find_perm(&atlas.classes[map[moved]].1)
                    .ok_or_else(|| AtlasError::Inconsistent("tilt lookup".into()))?;
                let rhs = gid(&structural.mu_interval(t2, i)?)?;
                ok &= mu[u][k - 1] == rhs;
                count += 1;
            }
        }
    }
    report.check("interval mutation index shifts", ok, format!("{count} cases"));
    Ok(report)
}

/// I(s_{i_1}⋯s_{i_l}) = μ_{i_1}⋯μ_{i_l}(Λ) for all words up to `max_len`,
/// reduced or not.
pub fn verify_words(atlas: &SttAtlas, graph: &SttGraph, max_len: usize) -> Result<Report> {
    let mut report = Report::new("mutation_words");
    let mu = graph.total_mutations()?;
    let map = atlas.relabel(graph).ok_or_else(|| AtlasError::Inconsistent("unlabelled pair".into()))?;
    let n = graph.n;
    let mut ok = true;
    let mut count = 0usize;
    // breadth over words: (pair reached, permutation) per word of current length
    let mut layer: Vec<(usize, Permutation)> = vec![(0, Permutation::identity(n + 1))];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * n);
        for (u, w) in &layer {
            for i in 1..=n {
                // prepend s_i: the new outermost mutation is μ_i
                let v = mu[*u][i - 1];
                let w2 = w.left_mul_simple(i);
                ok &= atlas.words[map[v]] == w2;
                count += 1;
                next.push((v, w2));
            }
        }
        layer = next;
    }
    report.check(format!("words of length <= {max_len}"), ok, format!("{count} words"));
    Ok(report)
}

/// Socles and composition factors of T_j and T_j/T_jM.
pub fn verify_summand_shapes(structural: &StructuralAtlas) -> Report {
    let mut report = Report::new("summand_shapes");
    let n = structural.n;
    let cat = &structural.catalog;
    let socle_dims = |id: usize| -> Vec<usize> { cat.module(id).socle_spaces().iter().map(|s| s.dim()).collect() };
    let unit = |v: usize| -> Vec<usize> { (0..n).map(|u| usize::from(u == v)).collect() };
    let mut socle_t = true;
    let mut bar_shape = true;
    for (t, row) in structural.summands.iter().enumerate() {
        for &id in row {
            socle_t &= socle_dims(id) == unit(n - 1);
        }
        for (j, bar) in structural.bars[t].iter().enumerate() {
            if let Some(id) = *bar {
                let i = j + 1;
                bar_shape &= socle_dims(id) == unit(n - i - 1) && cat.module(id).dims()[n - 1] == 0;
            }
        }
    }
    report.check("soc T_j = S_n", socle_t, "");
    report.check("T_j/T_jM is zero or has socle S_{n-j} and no S_n factor", bar_shape, "");
    let witnesses = (0..cat.len()).all(|id| cat.module(id).local_witness().is_some());
    report.check("catalog entries are certified indecomposable", witnesses, format!("{} entries", cat.len()));
    report
}

/// Loewy strings in slot order, then the shifted projectives.
pub fn describe_pair(cat: &ModuleCatalog, pair: &SttPair) -> String {
    let mut body = cat.loewy_summary(pair);
    if body.is_empty() {
        body.push('0');
    }
    let comp = pair.complement();
    if comp.is_empty() {
        body
    } else {
        let c: Vec<String> = comp.iter().map(|v| (v + 1).to_string()).collect();
        format!("{body} ; P[1] at {}", c.join(","))
    }
}

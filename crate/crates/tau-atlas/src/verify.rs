//! Invariant suites over a fixed (n, p), and the cross-field comparison.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{build_auslander, AssocAlgebra, TwoSidedIdeal};
use crate::error::Result;
use crate::gamma::{build_image, gamma_tau_rigidity_check, verify_gamma_bijection, GammaContext, GammaImage};
use crate::ideal::{
    check_semigroup_relations, hom_from_ideal, ideal_component, ideal_of_gen_word, ideal_summands, is_tilting,
    left_annihilator, maximal_ideal, right_mul_maximal, tor_dim, TiltCatalog,
};
use crate::linalg::Matrix;
use crate::rep::{
    direct_sum, ext_dim, find_isomorphism, hom_dim, min_projective_resolution, projective_dimension, tau, transpose,
    IsoOptions, IsoVerdict, QuiverRep,
};
use crate::report::Report;
use crate::stt::{
    enumerate_stt, tau_rigidity_report, verify_anti_isomorphism, verify_engine_agreement, verify_index_shifts,
    verify_mutation_relations, verify_order_covers, verify_summand_shapes, verify_words, StructuralAtlas, SttAtlas,
    SttGraph,
};
use crate::symgroup::{canonical_reduced_word, weak_left_hasse, GenWord, Permutation};

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub threads: usize,
    pub seed: u64,
    /// Also rerun over the other small field and compare.
    pub p2p3: bool,
    /// Independent mutation enumeration on the Γ side.
    pub gamma_bfs: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { threads: 1, seed: 0, p2p3: false, gamma_bfs: true }
    }
}

/// Everything computed for one (n, p).
pub struct Atlas {
    pub alg: Arc<AssocAlgebra>,
    pub structural: StructuralAtlas,
    pub stt: SttAtlas,
    pub graph: SttGraph,
    pub gamma: GammaContext,
    pub gamma_image: GammaImage,
}

impl Atlas {
    pub fn build(n: usize, p: u32, threads: usize, seed: u64) -> Result<Self> {
        let alg = build_auslander(n, p)?;
        let opts = IsoOptions { seed };
        let structural = StructuralAtlas::build(&alg, threads, opts)?;
        let stt = structural.atlas()?;
        let graph = enumerate_stt(&structural.catalog, threads)?;
        let gamma = GammaContext::new(&alg)?;
        let gamma_image = build_image(&gamma, &structural, &stt, opts)?;
        Ok(Atlas { alg, structural, stt, graph, gamma, gamma_image })
    }

    pub fn tilt(&self) -> &TiltCatalog {
        &self.structural.tilt
    }

    /// The module ⊕ e_jT.
    pub fn tilting_module(&self, t: usize) -> QuiverRep {
        let parts = ideal_summands(&self.tilt().entries[t].ideal);
        direct_sum(&parts.iter().collect::<Vec<_>>())
    }
}

pub fn verify_all(n: usize, p: u32, opts: &VerifyOptions) -> Result<Report> {
    let atlas = Atlas::build(n, p, opts.threads, opts.seed)?;
    let mut report = Report::new(format!("verify n={n} p={p}"));
    report.extend(check_semigroup_relations(&atlas.alg)?);
    report.extend(tilt_suite(&atlas)?);
    if n <= 4 {
        report.extend(homological_suite(&atlas, opts.seed)?);
    }
    report.extend(stt_suite(&atlas)?);
    report.extend(verify_gamma_bijection(
        &atlas.gamma,
        &atlas.structural,
        &atlas.stt,
        &atlas.gamma_image,
        opts.gamma_bfs,
        opts.threads,
    )?);
    report.extend(gamma_tau_rigidity_check(&atlas.gamma_image));
    if opts.p2p3 {
        let q = if p == 2 { 3 } else { 2 };
        let other = Atlas::build(n, q, opts.threads, opts.seed)?;
        report.extend(field_independence(&atlas, &other));
    }
    Ok(report)
}

// ── Tilting ─────────────────────────────────────────────────────────────

pub fn tilt_suite(atlas: &Atlas) -> Result<Report> {
    let alg = &atlas.alg;
    let n = alg.n();
    let tilt = atlas.tilt();
    let mut report = Report::new("tilting");
    let expected: usize = (1..=n).product();
    report.check("#tilt = n!", tilt.len() == expected, format!("{}", tilt.len()));

    let hasse = tilt.hasse()?;
    let weak = weak_left_hasse(n);
    let phi: Vec<usize> = weak.vertices.iter().map(|w| tilt.find_perm(w).unwrap()).collect();
    report.check("tilt Hasse is opposite to the weak order via I", weak.is_anti_isomorphic_via(&hasse, &phi), "");
    report.check(
        "every tilting module has n-1 mutations",
        hasse.degrees().iter().all(|&d| d == n - 1),
        format!("{} arrows", hasse.edges.len()),
    );

    let pn = QuiverRep::projective(alg, n - 1);
    let mut pn_summand = true;
    for e in &tilt.entries {
        let tn = ideal_component(&e.ideal, n - 1);
        pn_summand &= find_isomorphism(&pn, &tn, &IsoOptions::default()).0 == IsoVerdict::Isomorphic;
    }
    report.check("P_n is a summand of every tilting module", pn_summand, "");

    if n <= 4 {
        let all_tilting = (0..tilt.len()).all(|t| is_tilting(&ideal_summands(&tilt.entries[t].ideal)).is_tilting);
        report.check("every I(w) is tilting", all_tilting, "");
        if n >= 2 {
            let i_n = maximal_ideal(alg, n)?;
            let cert = is_tilting(&ideal_summands(&i_n));
            report.check(
                "I_n is not tilting",
                !cert.is_tilting && cert.distinct_summands == n - 1,
                format!("{} distinct summands", cert.distinct_summands),
            );
        }

        let mut end_ok = true;
        let mut next_ok = true;
        let mut hom_ok = true;
        for e in &tilt.entries {
            end_ok &= end_dim(&e.ideal) == alg.dim() && left_annihilator(&e.ideal)?.dim() == 0;
            for i in 1..n {
                let ti = right_mul_maximal(&e.ideal, i)?;
                if ti != e.ideal {
                    next_ok &= tilt.find(&ti).is_some() && end_dim(&ti) == alg.dim();
                }
                hom_ok &= hom_from_ideal_checks(&e.ideal, i, n <= 3)?;
            }
        }
        report.check("End(T) = Λ by left multiplication", end_ok, "");
        report.check("TI_i stays tilting when it moves", next_ok, "");
        report.check("T ⊆ Hom(I_i,T) with semisimple S_i-quotient and matching dimensions", hom_ok, "");

        let mut hom_simple = true;
        for i in 1..=n {
            let ii = maximal_ideal(alg, i)?;
            let s = QuiverRep::simple(alg, i - 1);
            hom_simple &= ideal_summands(&ii).iter().all(|c| hom_dim(c, &s) == 0);
        }
        report.check("Hom(I_i, S_i) = 0", hom_simple, "");

        let mut chains = true;
        for e in &tilt.entries {
            let letters = &e.word.letters;
            let mut prev = TwoSidedIdeal::whole(alg).dim();
            for start in (0..letters.len()).rev() {
                let d = ideal_of_gen_word(alg, &GenWord::new(letters[start..].to_vec()))?.dim();
                chains &= d < prev;
                prev = d;
            }
        }
        report.check("suffix products strictly decrease along reduced words", chains, "");
    }

    if n <= 3 {
        let tilting_pairs: Vec<_> =
            (0..tilt.len()).map(|t| atlas.structural.mu_interval(t, n)).collect::<Result<_>>()?;
        let cat = &atlas.structural.catalog;
        let reach = hasse.order_closure();
        let mut same = true;
        for a in 0..tilt.len() {
            for b in 0..tilt.len() {
                same &= reach[a][b] == crate::stt::stt_leq(cat, &tilting_pairs[b], &tilting_pairs[a]);
            }
        }
        report.check("tilt Hasse order equals the Fac order", same, "");
    }
    Ok(report)
}

/// dim End(⊕ e_jT).
fn end_dim(t: &TwoSidedIdeal) -> usize {
    let parts = ideal_summands(t);
    parts.iter().map(|a| parts.iter().map(|b| hom_dim(a, b)).sum::<usize>()).sum()
}

fn hom_from_ideal_checks(t: &TwoSidedIdeal, i: usize, with_pd: bool) -> Result<bool> {
    let alg = t.algebra();
    let n = alg.n();
    let h = hom_from_ideal(i, t)?;
    let contains = t.space().basis().row_vecs().iter().all(|r| h.contains(r));
    // H/T is concentrated at vertex i
    let hd = h.block_dims();
    let td = t.block_dims();
    let mut shape = true;
    for u in 0..n {
        for v in 0..n {
            let extra = hd[u][v] - td[u][v];
            shape &= extra == 0 || v == i - 1;
        }
    }
    // dim He_j = dim Hom(e_jI_i, T)
    let ii = maximal_ideal(alg, i)?;
    let ts = ideal_summands(t);
    let mut dims = true;
    for j in 0..n {
        let src = ideal_component(&ii, j);
        let want: usize = ts.iter().map(|x| hom_dim(&src, x)).sum();
        let got: usize = (0..n).map(|u| hd[u][j]).sum();
        dims &= want == got;
    }
    let pd = !with_pd || ideal_summands(&h).iter().all(|m| matches!(projective_dimension(m, 1), Some(d) if d <= 1));
    Ok(contains && shape && dims && pd)
}

// ── Homological algebra ─────────────────────────────────────────────────

pub fn homological_suite(atlas: &Atlas, seed: u64) -> Result<Report> {
    let alg = &atlas.alg;
    let n = alg.n();
    let mut report = Report::new("homological");
    report.check("minimal resolutions of simples", resolution_shapes(alg), "");

    let lambda: Vec<QuiverRep> = (0..n).map(|v| QuiverRep::projective(alg, v)).collect();
    let mut ext_lambda = true;
    for i in 1..n {
        let s = QuiverRep::simple(alg, i - 1);
        let e = |k: usize| -> Result<usize> { lambda.iter().map(|p| ext_dim(&s, p, k)).sum() };
        ext_lambda &= e(0)? == 0 && e(1)? == 0 && e(2)? == 1;
    }
    report.check("Ext^k(S_i, Λ) = 0, 0, 1 for i < n", ext_lambda, "");

    let tilt = atlas.tilt();
    let modules: Vec<QuiverRep> = (0..tilt.len()).map(|t| atlas.tilting_module(t)).collect();
    let mut ext_tor = true;
    let mut hom_ext = true;
    let mut tor_pair = true;
    for x in &modules {
        for i in 1..=n {
            let s = QuiverRep::simple(alg, i - 1);
            let (t0, t1) = (tor_dim(x, i, 0)?, tor_dim(x, i, 1)?);
            if i < n {
                ext_tor &= ext_dim(&s, x, 1)? == t1 && ext_dim(&s, x, 2)? == t0;
            }
            hom_ext &= (hom_dim(x, &s) == 0) != (ext_dim(x, &s, 1)? == 0);
            tor_pair &= (t0 == 0) != (t1 == 0);
        }
    }
    report.check("Ext^1(S_i,T) = Tor_1(T,S_i), Ext^2(S_i,T) = Tor_0(T,S_i) for i < n", ext_tor, "");
    report.check("exactly one of Hom(T,S), Ext^1(T,S) vanishes", hom_ext, "");
    report.check("exactly one of Tor_0(T,S_i), Tor_1(T,S_i) vanishes", tor_pair, "");

    let mut euler = true;
    for j in 1..n {
        let sj = QuiverRep::simple(alg, j - 1);
        for i in 1..n {
            let chi = tor_dim(&sj, i, 0)? as i64 - tor_dim(&sj, i, 1)? as i64 + tor_dim(&sj, i, 2)? as i64;
            let want = match i.abs_diff(j) {
                0 => 2,
                1 => -1,
                _ => 0,
            };
            euler &= chi == want;
        }
    }
    report.check("Euler form on simples is 2 / -1 / 0", euler, "");

    let free = (0..n).all(|v| {
        (1..=n).all(|i| {
            let p = &lambda[v];
            let t0 = tor_dim(p, i, 0).unwrap_or(usize::MAX);
            t0 == usize::from(i == v + 1) && tor_dim(p, i, 1).ok() == Some(0) && tor_dim(p, i, 2).ok() == Some(0)
        })
    });
    report.check("Tor_k(P_v, S_i) is concentrated in degree 0", free, "");

    let cat = &atlas.structural.catalog;
    report.check("τ of projectives vanishes", lambda.iter().all(|p| tau(p).is_zero()), "");
    report.check("τ is isomorphism invariant", tau_invariance(cat.modules(), seed), "");

    if n <= 3 {
        let op = alg.opposite();
        let mut tr_ok = true;
        for m in cat.modules() {
            if matches!(projective_dimension(m, 1), Some(d) if d <= 1) {
                let tr = transpose(m);
                for v in 0..n {
                    tr_ok &= ext_dim(&tr, &QuiverRep::projective(&op, v), 1)? == 0;
                }
            }
        }
        report.check("Ext^1(Tr M, Λ) = 0 when pd M ≤ 1", tr_ok, "");
    }

    let mut split_ok = true;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8.min(cat.len().max(1)) {
        let picks: Vec<usize> = (0..3).map(|_| rng.gen_range(0..cat.len())).collect();
        let parts: Vec<&QuiverRep> = picks.iter().map(|&id| cat.module(id)).collect();
        let sum = direct_sum(&parts);
        let mut want: Vec<(usize, usize)> = Vec::new();
        for &id in &picks {
            match want.iter_mut().find(|(x, _)| *x == id) {
                Some(e) => e.1 += 1,
                None => want.push((id, 1)),
            }
        }
        want.sort_unstable();
        let mut got = crate::rep::split_indecomposables(&sum, cat.modules())?;
        got.sort_unstable();
        split_ok &= got == want;
    }
    report.check("splitting recovers direct sums of catalog entries", split_ok, "");
    Ok(report)
}

/// 0 → P_i → P_{i−1} ⊕ P_{i+1} → P_i → S_i → 0 for i < n and
/// 0 → P_{n−1} → P_n → S_n → 0.
pub fn resolution_shapes(alg: &Arc<AssocAlgebra>) -> bool {
    let n = alg.n();
    (1..=n).all(|i| {
        let res = min_projective_resolution(&QuiverRep::simple(alg, i - 1), 3);
        let mut terms: Vec<Vec<usize>> = res.terms.iter().filter(|t| !t.is_empty()).cloned().collect();
        for t in terms.iter_mut() {
            t.sort_unstable();
        }
        let want: Vec<Vec<usize>> = if n == 1 {
            vec![vec![0]]
        } else if i < n {
            let mid: Vec<usize> = [i.checked_sub(2), Some(i)].into_iter().flatten().filter(|&v| v < n).collect();
            vec![vec![i - 1], mid, vec![i - 1]]
        } else {
            vec![vec![n - 1], vec![n - 2]]
        };
        res.complete && terms == want
    })
}

/// Conjugates each module by random invertible base changes and compares τ.
fn tau_invariance(modules: &[QuiverRep], seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7a75);
    let mut ok = true;
    for m in modules {
        let p = m.p();
        let bases: Vec<Matrix> = m
            .dims()
            .iter()
            .map(|&d| loop {
                let entries: Vec<u32> = (0..d * d).map(|_| rng.gen_range(0..p)).collect();
                let g = Matrix::from_fn(p, d, d, |r, c| entries[r * d + c]);
                if g.is_invertible() {
                    break g;
                }
            })
            .collect();
        let maps: Vec<Matrix> = m
            .algebra()
            .arrows()
            .iter()
            .zip(m.arrow_maps())
            .map(|(a, x)| bases[a.src].inverse().unwrap().mul(x).mul(&bases[a.tgt]))
            .collect();
        let twisted = QuiverRep::new(m.algebra(), m.dims().to_vec(), maps).expect("same shape");
        ok &= twisted.satisfies_relations()
            && find_isomorphism(m, &twisted, &IsoOptions::default()).0 == IsoVerdict::Isomorphic
            && tau(m).fingerprint() == tau(&twisted).fingerprint();
    }
    ok
}

// ── Support τ-tilting ───────────────────────────────────────────────────

pub fn stt_suite(atlas: &Atlas) -> Result<Report> {
    let n = atlas.alg.n();
    let s = &atlas.structural;
    let mut report = Report::new("support_tau_tilting");
    let expected: usize = (1..=n + 1).product();
    report.check("#stt = (n+1)!", atlas.graph.len() == expected, format!("{}", atlas.graph.len()));
    report.check("keys separate pairs", atlas.stt.check_keys(&s.catalog).is_ok(), "");
    report.extend(verify_anti_isomorphism(s, &atlas.stt, &atlas.graph)?);
    report.extend(verify_mutation_relations(&atlas.graph)?);
    report.extend(verify_engine_agreement(s, &atlas.stt, &atlas.graph)?);
    report.extend(verify_index_shifts(s, &atlas.stt, &atlas.graph)?);
    report.extend(verify_words(&atlas.stt, &atlas.graph, if n <= 3 { 6 } else { 4 })?);
    report.extend(verify_summand_shapes(s));
    report.extend(tau_rigidity_report(&s.catalog, &atlas.stt.pairs, "tau_rigidity"));
    if n <= 3 {
        report.extend(verify_order_covers(&s.catalog, &atlas.graph));
    }
    let used: BTreeSet<usize> = atlas.stt.pairs.iter().flat_map(|p| p.modules()).collect();
    report.check(
        "every catalog module is a summand of some pair",
        used.len() == s.catalog.len(),
        format!("{} of {}", used.len(), s.catalog.len()),
    );
    let disjoint = (0..=n).all(|i| atlas.stt.classes.iter().filter(|c| c.0 == i).count() == s.tilt.len());
    report.check("each interval start contributes n! pairs", disjoint, "");
    Ok(report)
}

// ── Field independence ──────────────────────────────────────────────────

/// Counts, Hasse quivers and fingerprints agree between two fields.
pub fn field_independence(a: &Atlas, b: &Atlas) -> Report {
    let mut report = Report::new(format!("fields p={} vs p={}", a.alg.p(), b.alg.p()));
    report.check("tilt counts", a.tilt().len() == b.tilt().len(), "");
    let ha = a.tilt().hasse().map(|h| h.edges).ok();
    let hb = b.tilt().hasse().map(|h| h.edges).ok();
    report.check("tilt Hasse quivers", ha.is_some() && ha == hb, "");
    report.check("stt counts", a.graph.len() == b.graph.len(), "");
    report.check("stt Hasse quivers", a.stt.hasse.edges == b.stt.hasse.edges, "");
    let relabelled = |x: &Atlas| -> Option<BTreeSet<(usize, usize, usize)>> {
        let map = x.stt.relabel(&x.graph)?;
        Some(x.graph.edges.iter().map(|&(u, v, k)| (map[u], map[v], k)).collect())
    };
    report.check("enumerated Hasse quivers", relabelled(a).is_some() && relabelled(a) == relabelled(b), "");
    let fps = |x: &Atlas| -> Vec<Vec<String>> {
        let cat = &x.structural.catalog;
        x.stt
            .pairs
            .iter()
            .map(|p| p.slot_modules().iter().map(|&id| cat.fingerprint(id).canonical_text()).collect())
            .collect()
    };
    report.check("summand fingerprints of every pair", fps(a) == fps(b), "");
    let tilt_fps = |x: &Atlas| -> Vec<Vec<String>> {
        x.tilt()
            .entries
            .iter()
            .map(|e| ideal_summands(&e.ideal).iter().map(|m| m.fingerprint().canonical_text()).collect())
            .collect()
    };
    report.check("tilting summand fingerprints", tilt_fps(a) == tilt_fps(b), "");
    let gamma_fps = |x: &Atlas| -> Vec<Vec<String>> {
        let cat = &x.gamma_image.catalog;
        x.gamma_image
            .pairs
            .iter()
            .map(|p| p.slot_modules().iter().map(|&id| cat.fingerprint(id).canonical_text()).collect())
            .collect()
    };
    report.check("Γ summand fingerprints", gamma_fps(a) == gamma_fps(b), "");
    report
}

/// Canonical word of a permutation, for labels.
pub fn word_label(w: &Permutation) -> String {
    canonical_reduced_word(w).to_string()
}

//! Worked quivers for n = 2, 3 and the μ_4…μ_1 chain at n = 4, written by
//! radical layers: vertices of one layer concatenated, layers joined by '.'.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use tau_atlas::ideal::{ideal_of_gen_word, ideal_summands, tilt_enumerate};
use tau_atlas::rep::IsoOptions;
use tau_atlas::stt::{left_mutation, ModuleCatalog, Slot, StructuralAtlas, SttPair};
use tau_atlas::symgroup::parse_word;
use tau_atlas::verify::Atlas;
use tau_atlas::{build_auslander, TwoSidedIdeal};

pub type Check = std::result::Result<(), String>;

const P3: &str = "3.2.13.2.3";

/// (reduced word, summands e_1T, …, e_nT)
pub const TILT_N2: [(&str, [&str; 2]); 2] = [("", ["1.2", "2.1.2"]), ("1", ["2", "2.1.2"])];
pub const TILT_N2_ARROWS: [(&str, &str); 1] = [("", "1")];

pub const TILT_N3: [(&str, [&str; 3]); 6] = [
    ("", ["1.2.3", "2.13.2.3", P3]),
    ("1", ["2.3", "2.13.2.3", P3]),
    ("2", ["1.2.3", "13.2.3", P3]),
    ("2,1", ["2.3", "3.2.3", P3]),
    ("1,2", ["3", "13.2.3", P3]),
    ("1,2,1", ["3", "3.2.3", P3]),
];
pub const TILT_N3_ARROWS: [(&str, &str); 6] =
    [("", "1"), ("", "2"), ("1", "2,1"), ("2", "1,2"), ("2,1", "1,2,1"), ("1,2", "1,2,1")];

pub const STT_N2: [&[&str]; 6] = [&["1.2", "2.1.2"], &["2", "2.1.2"], &["1.2", "1"], &["2"], &["1"], &[]];
pub const STT_N2_ARROWS: [(usize, usize); 6] = [(1, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 6)];

pub const STT_N3: [&[&str]; 24] = [
    &["1.2.3", "2.13.2.3", P3],
    &["2.3", "2.13.2.3", P3],
    &["1.2.3", "13.2.3", P3],
    &["1.2.3", "2.13.2.3", "2.1"],
    &["2.3", "3.2.3", P3],
    &["3", "13.2.3", P3],
    &["2.3", "2.13.2.3", "2.1"],
    &["1.2.3", "13.2.3", "1"],
    &["1.2.3", "1.2", "2.1"],
    &["2.3", "3.2.3"],
    &["3", "3.2.3", P3],
    &["3", "13.2.3", "1"],
    &["2.3", "2", "2.1"],
    &["1.2.3", "1.2", "1"],
    &["1.2", "2.1"],
    &["3", "3.2.3"],
    &["2.3", "2"],
    &["1", "3"],
    &["2", "2.1"],
    &["1.2", "1"],
    &["3"],
    &["2"],
    &["1"],
    &[],
];
pub const STT_N3_ARROWS: [(usize, usize); 36] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 5),
    (2, 7),
    (3, 6),
    (3, 8),
    (4, 7),
    (4, 9),
    (5, 10),
    (5, 11),
    (6, 11),
    (6, 12),
    (7, 13),
    (8, 12),
    (8, 14),
    (9, 14),
    (9, 15),
    (10, 16),
    (10, 17),
    (11, 16),
    (12, 18),
    (13, 17),
    (13, 19),
    (14, 20),
    (15, 19),
    (15, 20),
    (16, 21),
    (17, 22),
    (18, 21),
    (18, 23),
    (19, 22),
    (20, 23),
    (21, 24),
    (22, 24),
    (23, 24),
];

/// Λ, μ_4Λ, μ_3μ_4Λ, μ_2μ_3μ_4Λ, μ_1μ_2μ_3μ_4Λ; "" marks the zero slot.
pub const MU_CHAIN_N4: [[&str; 4]; 5] = [
    ["1.2.3.4", "2.13.24.3.4", "3.24.13.24.3.4", "4.3.24.13.24.3.4"],
    ["1.2.3.4", "2.13.24.3.4", "3.24.13.24.3.4", "3.2.1"],
    ["1.2.3.4", "2.13.24.3.4", "2.13.2", "3.2.1"],
    ["1.2.3.4", "1.2.3", "2.13.2", "3.2.1"],
    ["", "1.2.3", "2.13.2", "3.2.1"],
];

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

pub fn summand_strings(t: &TwoSidedIdeal) -> Vec<String> {
    ideal_summands(t).iter().map(|m| m.fingerprint().loewy_string()).collect()
}

pub fn check_tilt_example<const N: usize>(table: &[(&str, [&str; N])], arrows: &[(&str, &str)]) -> Check {
    let a = build_auslander(N, 2).map_err(|e| e.to_string())?;
    let cat = tilt_enumerate(&a).map_err(|e| e.to_string())?;
    ensure(cat.len() == table.len(), || format!("{} tilting ideals", cat.len()))?;
    let mut idx = HashMap::new();
    for (w, want) in table {
        let word = parse_word(w).map_err(|e| e.to_string())?;
        let t = ideal_of_gen_word(&a, &word).map_err(|e| e.to_string())?;
        let got = summand_strings(&t);
        ensure(got == want.to_vec(), || format!("word [{w}]: {got:?}"))?;
        idx.insert(*w, cat.find(&t).ok_or_else(|| format!("word [{w}] not enumerated"))?);
    }
    let expected: BTreeSet<(usize, usize)> = arrows.iter().map(|(x, y)| (idx[x], idx[y])).collect();
    let got = cat.hasse().map_err(|e| e.to_string())?.arrow_set();
    ensure(got == expected, || format!("arrows {got:?}"))
}

pub fn pair_strings(cat: &ModuleCatalog, pair: &SttPair) -> Vec<String> {
    let mut v: Vec<String> = pair.modules().iter().map(|&id| cat.fingerprint(id).loewy_string()).collect();
    v.sort();
    v
}

/// Enumerated quiver against vertices (summand strings) and 1-based arrows,
/// for both the mutation graph and the word-labelled quiver.
pub fn check_stt_example(atlas: &Atlas, vertices: &[&[&str]], arrows: &[(usize, usize)]) -> Check {
    let cat = &atlas.structural.catalog;
    let want: Vec<Vec<String>> = vertices
        .iter()
        .map(|v| {
            let mut s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            s.sort();
            s
        })
        .collect();
    let mut at: HashMap<Vec<String>, usize> = HashMap::new();
    for (k, p) in atlas.graph.pairs.iter().enumerate() {
        ensure(at.insert(pair_strings(cat, p), k).is_none(), || "summand strings collide".into())?;
    }
    ensure(at.len() == want.len(), || format!("{} pairs", at.len()))?;
    let pos = want
        .iter()
        .map(|w| at.get(w).copied().ok_or_else(|| format!("missing {w:?}")))
        .collect::<std::result::Result<Vec<usize>, String>>()?;
    let expected: BTreeSet<(usize, usize)> = arrows.iter().map(|&(x, y)| (pos[x - 1], pos[y - 1])).collect();
    let got: BTreeSet<(usize, usize)> = atlas.graph.edges.iter().map(|&(u, v, _)| (u, v)).collect();
    ensure(got == expected, || "mutation arrows differ".into())?;
    let mut via_words = BTreeSet::new();
    for &(u, v, _) in &atlas.stt.hasse.edges {
        let a = atlas.graph.find(&atlas.stt.pairs[u]).ok_or("word pair not enumerated")?;
        let b = atlas.graph.find(&atlas.stt.pairs[v]).ok_or("word pair not enumerated")?;
        via_words.insert((a, b));
    }
    ensure(via_words == expected, || "word-labelled arrows differ".into())
}

pub fn slot_strings(s: &StructuralAtlas, p: &SttPair) -> Vec<String> {
    p.slots
        .iter()
        .map(|sl| match *sl {
            Slot::Module(id) => s.catalog.fingerprint(id).loewy_string(),
            Slot::Zero(_) => String::new(),
        })
        .collect()
}

/// Both the interval recursion and generic left mutation reproduce every frame.
pub fn check_mu_chain(s: &StructuralAtlas) -> Check {
    let a = s.catalog.algebra();
    let top = s.tilt.find(&TwoSidedIdeal::whole(a)).ok_or("Λ not enumerated")?;
    let mut prev: Option<SttPair> = None;
    for (step, frame) in MU_CHAIN_N4.iter().enumerate() {
        let pair = s.mu_interval(top, 4 - step).map_err(|e| e.to_string())?;
        let got = slot_strings(s, &pair);
        ensure(got == frame.to_vec(), || format!("frame {step}: {got:?}"))?;
        if let Some(p) = prev {
            let next = left_mutation(&s.catalog, &p, 4 - step).map_err(|e| e.to_string())?;
            ensure(next.map(|q| q.identity()) == Some(pair.identity()), || format!("μ_{} differs", 4 - step + 1))?;
        }
        prev = Some(pair);
    }
    ensure(prev.map(|p| p.complement()) == Some(vec![3]), || "final support".into())
}

pub fn structural(n: usize) -> StructuralAtlas {
    let a = build_auslander(n, 2).unwrap();
    StructuralAtlas::build(&a, 1, IsoOptions::default()).unwrap()
}

//! The preprojective algebra Γ = Λ/L and the map U ↦ U ⊗_Λ Γ = U/UL on
//! support τ-tilting pairs.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{ideal_l, quotient_algebra, AssocAlgebra, TwoSidedIdeal};
use crate::error::{AtlasError, Result};
use crate::ideal::ideal_product;
use crate::rep::{IsoOptions, ModuleDescriptor, QuiverRep};
use crate::report::Report;
use crate::stt::{
    enumerate_stt, left_mutation, tau_rigidity_report, verify_order_covers, ModuleCatalog, Slot, StructuralAtlas,
    SttAtlas, SttGraph, SttPair,
};
use crate::symgroup::Permutation;

pub struct GammaContext {
    pub lambda: Arc<AssocAlgebra>,
    pub gamma: Arc<AssocAlgebra>,
    pub l: TwoSidedIdeal,
}

impl GammaContext {
    pub fn new(lambda: &Arc<AssocAlgebra>) -> Result<Self> {
        let l = ideal_l(lambda);
        let gamma = quotient_algebra(lambda, &l)?;
        Ok(GammaContext { lambda: lambda.clone(), gamma, l })
    }

    /// X ↦ X/XL, re-expressed over Γ.
    pub fn to_gamma_module(&self, x: &QuiverRep) -> Result<QuiverRep> {
        x.act_quotient(&self.l).change_algebra(&self.gamma)
    }

    /// L_i = e_iL as a subspace of Λ (0-based i).
    pub fn l_component(&self, i: usize) -> crate::linalg::Subspace {
        self.l.row_component(i)
    }
}

/// Γ-side catalog holding the images of the Λ catalog, plus the id map.
pub struct GammaImage {
    pub catalog: ModuleCatalog,
    /// `ids[λ-id]` = Γ-id of the image, `None` if the image vanished.
    pub ids: Vec<Option<usize>>,
    pub pairs: Vec<SttPair>,
}

pub fn to_gamma(image: &GammaImage, pair: &SttPair) -> Result<SttPair> {
    let slots = pair
        .slots
        .iter()
        .map(|s| match *s {
            Slot::Module(id) => image.ids[id]
                .map(Slot::Module)
                .ok_or_else(|| AtlasError::Inconsistent(format!("summand {id} vanishes over Γ"))),
            Slot::Zero(v) => Ok(Slot::Zero(v)),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SttPair { slots })
}

pub fn build_image(
    ctx: &GammaContext,
    structural: &StructuralAtlas,
    atlas: &SttAtlas,
    opts: IsoOptions,
) -> Result<GammaImage> {
    let lcat = &structural.catalog;
    let mut catalog = ModuleCatalog::new(&ctx.gamma, opts);
    let mut ids = Vec::with_capacity(lcat.len());
    for id in 0..lcat.len() {
        let img = ctx.to_gamma_module(lcat.module(id))?;
        ids.push(if img.is_zero() { None } else { Some(catalog.intern(img, format!("{}/L", lcat.origin(id)))?) });
    }
    let mut image = GammaImage { catalog, ids, pairs: Vec::new() };
    image.pairs = atlas.pairs.iter().map(|p| to_gamma(&image, p)).collect::<Result<_>>()?;
    Ok(image)
}

#[derive(Serialize)]
pub struct GammaRecord {
    pub key: String,
    pub word: Permutation,
    pub i: usize,
    pub base_word: Permutation,
    pub summands: Vec<ModuleDescriptor>,
    pub support_complement: Vec<usize>,
    pub source_key: String,
}

pub fn gamma_records(image: &GammaImage, structural: &StructuralAtlas, atlas: &SttAtlas) -> Vec<GammaRecord> {
    image
        .pairs
        .iter()
        .enumerate()
        .map(|(k, pair)| GammaRecord {
            key: image.catalog.key(pair),
            word: atlas.words[k].clone(),
            i: atlas.classes[k].0,
            base_word: atlas.classes[k].1.clone(),
            summands: pair.slot_modules().iter().map(|&id| image.catalog.descriptor(id)).collect(),
            support_complement: pair.complement().iter().map(|v| v + 1).collect(),
            source_key: structural.catalog.key(&atlas.pairs[k]),
        })
        .collect()
}

/// The image pairs with the Λ arrows carried over.
pub fn image_graph(image: &GammaImage, atlas: &SttAtlas) -> Result<SttGraph> {
    SttGraph::from_parts(image.catalog.algebra().n(), image.pairs.clone(), atlas.hasse.edges.clone())
}

pub fn verify_gamma_bijection(
    ctx: &GammaContext,
    structural: &StructuralAtlas,
    atlas: &SttAtlas,
    image: &GammaImage,
    independent_bfs: bool,
    threads: usize,
) -> Result<Report> {
    let mut report = Report::new("gamma_bridge");
    let n = structural.n;
    let expected: usize = (1..=n + 1).product();
    let distinct: BTreeSet<_> = image.pairs.iter().map(|p| p.identity()).collect();
    report.check("images are pairwise distinct", distinct.len() == expected, format!("{} images", distinct.len()));
    let keys: BTreeSet<String> = image.pairs.iter().map(|p| image.catalog.key(p)).collect();
    report.check("Γ keys separate the images", keys.len() == image.pairs.len(), "");

    let arrows: HashMap<(usize, usize), usize> = atlas.hasse.edges.iter().map(|&(a, b, k)| ((a, k), b)).collect();
    let index: HashMap<&SttPair, usize> = image.pairs.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut arrows_ok = true;
    for (a, pair) in image.pairs.iter().enumerate() {
        for k in 1..=n {
            let got = left_mutation(&image.catalog, pair, k - 1)?.map(|q| index.get(&q).copied());
            let want = arrows.get(&(a, k)).copied().map(Some);
            arrows_ok &= got == want;
        }
    }
    report.check("Γ left mutations are exactly the images of Λ arrows", arrows_ok, "");

    let graph = image_graph(image, atlas)?;
    if n <= 3 {
        report.extend(verify_order_covers(&image.catalog, &graph));
    }
    if independent_bfs {
        let bfs = enumerate_stt(&image.catalog, threads)?;
        let found: BTreeSet<_> = bfs.pairs.iter().map(|p| p.identity()).collect();
        report.check("independent Γ enumeration finds the image", found == distinct, format!("{} pairs", bfs.len()));
    }

    // TL = L for tilting T, i.e. T_iL = L_i componentwise
    let mut tl = true;
    for e in &structural.tilt.entries {
        let prod = ideal_product(&e.ideal, &ctx.l)?;
        tl &= (0..n).all(|i| prod.row_component(i) == ctx.l_component(i));
    }
    report.check("T_i L = L_i for every tilting T", tl, "");

    let lcat = &structural.catalog;
    let mut seen = HashMap::new();
    let mut injective = true;
    for (id, g) in image.ids.iter().enumerate() {
        if let Some(g) = g {
            if seen.insert(*g, id).is_some() {
                injective = false;
            }
        } else {
            injective = false;
        }
    }
    report.check("X ↦ X/XL is injective on indecomposables", injective, "");

    let mut socles = true;
    for row in &structural.summands {
        for (j, &id) in row.iter().enumerate() {
            let img = image.ids[id].map(|g| image.catalog.module(g));
            let want: Vec<usize> = (0..n).map(|v| usize::from(v == n - 1 - j)).collect();
            socles &=
                img.map(|m| m.socle_spaces().iter().map(|s| s.dim()).collect::<Vec<_>>() == want).unwrap_or(false);
        }
    }
    report.check("T_j/L_j has simple socle S_{n-j+1}", socles, "");

    let mut bars_fixed = true;
    for row in &structural.bars {
        for id in row.iter().flatten() {
            bars_fixed &= lcat.module(*id).times_ideal(&ctx.l).iter().all(|s| s.dim() == 0);
        }
    }
    report.check("T_j/T_jM is annihilated by L", bars_fixed, "");
    Ok(report)
}

pub fn gamma_tau_rigidity_check(image: &GammaImage) -> Report {
    tau_rigidity_report(&image.catalog, &image.pairs, "gamma_tau_rigidity")
}

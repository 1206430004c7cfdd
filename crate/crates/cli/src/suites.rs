//! The verification suites. Each returns its records in a fixed order so that
//! report bodies are reproducible; independent points run in parallel and are
//! merged by index.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use hecke_core::hecke_bernstein::{BernsteinAlgebra, Formula, HeckeElt};
use hecke_core::hecke_im::{Flavor, IMAlgebra, IMHeckeElt};
use hecke_core::laurent::TorusPoint;
use hecke_core::quotient_ht::{
    lie_criterion_type_a, lt_dimension, module_report, orbit_sum, poincare_value, principal_point, principal_report,
    reductions_agree, sample_points, vanishing_criteria, weight_box, PointKind, Reduction, SamplePoint, TypeContext,
};
use hecke_core::root_data::{RootDatum, RootType, Weight};
use hecke_core::scalar::{fmt_rational, int, Specialization};
use hecke_core::weyl_affine::{AffineWeyl, ExtAffineElt, Simple};
use hecke_core::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cache::{self, CacheStats};
use crate::config::{RunConfig, Suite};
use crate::report::{Record, Verdict};

pub fn run(cfg: &RunConfig, stats: &mut CacheStats) -> Result<Vec<Record>> {
    match cfg.suite {
        Suite::Prop12 => prop12(cfg),
        Suite::Lemma22 => lemma22(cfg, stats),
        Suite::Formulas => formulas(cfg),
        Suite::Thm34 => thm34(cfg),
        Suite::Thm35 => thm35(cfg),
        Suite::Thm41 => thm41(cfg),
        Suite::LieCheck => lie_check(cfg),
        Suite::Cells => cells(cfg),
        Suite::Presentation => presentation(cfg),
    }
}

fn datum(t: RootType) -> Arc<RootDatum> {
    Arc::new(RootDatum::build(t))
}

fn affine(t: RootType) -> Arc<AffineWeyl> {
    Arc::new(AffineWeyl::new(datum(t)))
}

fn elt_str(u: &ExtAffineElt) -> String {
    format!("{u:?}")
}

fn default_ball_len(t: RootType) -> usize {
    match t {
        RootType::A1 => 10,
        RootType::A2 => 6,
        RootType::B2 | RootType::G2 => 5,
        RootType::A3 => 4,
    }
}

// Identities in the Bernstein presentation.

fn formulas(cfg: &RunConfig) -> Result<Vec<Record>> {
    let d = datum(cfg.root_type);
    let b = BernsteinAlgebra::new(d.clone());
    let nu = d.nu as i32;
    let mut out = Vec::new();

    let xs = weight_box(d.rank, 2);
    let checks = xs.par_iter().map(|x| b.verify(Formula::SphericalSandwich(*x))).collect::<Result<Vec<_>>>()?;
    let failures: Vec<Value> = xs
        .iter()
        .zip(&checks)
        .filter(|(_, c)| !c.holds)
        .map(|(x, c)| json!({"x": x.to_string(), "difference": c.first_difference}))
        .collect();
    out.push(Record::new(
        "spherical-sandwich",
        "C θ_x C = v^{-ν} W(θ_x) C for every x in the box",
        json!({"box_radius": 2, "weights": xs.len()}),
        json!({"failures": failures}),
        Verdict::from_bool(failures.is_empty()),
    ));
    let texts = ["C′ θ_{-ρ} C = C′ B", "C′ θ_ρ C = C′ A", "C θ_{-ρ} C′ = B C′", "C θ_ρ C′ = A C′"];
    let checks = Formula::FIXED.par_iter().map(|f| b.verify(*f)).collect::<Result<Vec<_>>>()?;
    for ((f, text), c) in Formula::FIXED.iter().zip(texts).zip(checks) {
        out.push(Record::new(
            f.name(),
            text,
            json!({}),
            json!({"first_difference": c.first_difference, "lhs_terms": c.lhs.terms().count()}),
            Verdict::from_bool(c.holds),
        ));
    }

    let sum = b.a_element_sum();
    let prod = b.a_element_product();
    out.push(Record::new(
        "a-element-forms",
        "subset-sum and product forms of A agree",
        json!({"summands": 1u64 << d.nu}),
        json!({"agree": sum == prod, "terms": sum.len()}),
        Verdict::from_bool(sum == prod),
    ));

    let c = b.c_element();
    let cp = b.cprime_element();
    let sign = if nu % 2 == 0 { 1 } else { -1 };
    let star_ok = b.star(&c) == cp.scale(&hecke_core::scalar::ScalarQ::from_int(sign));
    let tilde_ok = b.tilde(&c) == c && b.tilde(&cp) == cp;
    out.push(Record::new(
        "involutions",
        "tilde fixes C and C′; star(C) = (-1)^ν C′",
        json!({"nu": nu}),
        json!({"tilde_fixes": tilde_ok, "star_relation": star_ok}),
        Verdict::from_bool(star_ok && tilde_ok),
    ));

    let (_, _, ratio) = b.cprime_rho_relation();
    let expected = hecke_core::scalar::ScalarQ::from_int(sign);
    out.push(Record::new(
        "cprime-rho-relation",
        "C′ θ_{-ρ} C = (-1)^ν C′ θ_ρ C",
        json!({"nu": nu}),
        json!({"ratio": ratio.as_ref().map(|r| r.to_string())}),
        Verdict::from_bool(ratio == Some(expected)),
    ));

    let subsets = b.c_theta_subset_cprime();
    let full = d.rank;
    let bad: Vec<String> = subsets
        .iter()
        .filter(|(idx, h)| (idx.len() < full) != h.is_zero())
        .map(|(idx, _)| format!("{idx:?}"))
        .collect();
    out.push(Record::new(
        "proper-subset-vanishing",
        "C θ_I C′ = 0 exactly for proper subsets I of the simple roots",
        json!({"subsets": subsets.len()}),
        json!({"violations": bad}),
        Verdict::from_bool(bad.is_empty()),
    ));

    let central: Vec<bool> =
        (0..d.rank).map(|i| b.is_central(&b.from_theta(&orbit_sum(&d, &Weight::fundamental(d.rank, i))))).collect();
    let theta_not_central = !b.is_central(&b.theta_of(Weight::fundamental(d.rank, 0)));
    out.push(Record::new(
        "center",
        "orbit sums of fundamental weights are central; θ_{x_1} is not",
        json!({}),
        json!({"orbit_sums_central": central, "theta_x1_not_central": theta_not_central}),
        Verdict::from_bool(central.iter().all(|&c| c) && theta_not_central),
    ));

    out.push(Record::new(
        "poincare-product",
        "Π (1 - q^{1+ht}) / (1 - q^{ht}) = Σ_w q^{l(w)}",
        json!({}),
        json!({"poincare": d.poincare_polynomial()}),
        Verdict::from_bool(d.poincare_product_identity_holds()),
    ));
    Ok(out)
}

// Combinatorics of the extended affine Weyl group.

fn prop12(cfg: &RunConfig) -> Result<Vec<Record>> {
    let aff = affine(cfg.root_type);
    let d = aff.datum().clone();
    let len = cfg.max_len.unwrap_or(default_ball_len(cfg.root_type));
    let mut out = Vec::new();

    let brute = aff.enumerate_y0(len);
    let built = aff.y0_from_antidominant(len);
    let only_brute: Vec<String> = brute.difference(&built).map(elt_str).collect();
    let only_built: Vec<String> = built.difference(&brute).map(elt_str).collect();
    out.push(Record::new(
        "y0-factorization",
        "descent definition of Y_0 equals {w t_x : x antidominant, R(w) ⊆ L(t_x)}",
        json!({"max_len": len}),
        json!({"size": brute.len(), "only_descent": only_brute, "only_construction": only_built}),
        Verdict::from_bool(only_brute.is_empty() && only_built.is_empty()),
    ));

    let ball: Vec<ExtAffineElt> = aff.ball(len).into_iter().flatten().collect();
    let facts = ball.par_iter().map(|u| aff.factor_canonical(u).map(|f| (*u, f))).collect::<Vec<_>>();
    let mut missing = Vec::new();
    let mut non_unique = Vec::new();
    let mut non_additive = Vec::new();
    let mut y0_trivial_right = true;
    for r in facts {
        match r {
            Err(e) => missing.push(e.to_string()),
            Ok((u, f)) => {
                if f.solutions != 1 {
                    non_unique.push(elt_str(&u));
                }
                if !f.length_additive {
                    non_additive.push(elt_str(&u));
                }
                if brute.contains(&u) && f.v != 0 {
                    y0_trivial_right = false;
                }
            }
        }
    }
    out.push(Record::new(
        "canonical-factorization",
        "u = w t_x v exists, is unique and length-additive; v = e on Y_0",
        json!({"max_len": len, "elements": ball.len()}),
        json!({"missing": missing, "non_unique": non_unique, "non_additive": non_additive, "y0_trivial_right": y0_trivial_right}),
        Verdict::from_bool(missing.is_empty() && non_unique.is_empty() && non_additive.is_empty() && y0_trivial_right),
    ));

    let xs = weight_box(d.rank, 2);
    let w0 = aff.finite(d.longest);
    let mut seen = HashSet::new();
    let (mut in_y0, mut gamma0, mut injective) = (true, true, true);
    for x in &xs {
        let n = aff.n_x(x);
        in_y0 &= (0..d.rank).all(|i| !aff.is_right_descent(&n, Simple::Finite(i)));
        let nw = aff.mul(&n, &w0);
        gamma0 &= (0..d.rank).all(|i| aff.is_right_descent(&nw, Simple::Finite(i)));
        injective &= seen.insert(n) && aff.length(&nw) == aff.length(&n) + d.nu;
    }
    out.push(Record::new(
        "n-x-bijection",
        "n_x ∈ Y_0, R(n_x w_0) = S_0, and x ↦ n_x is injective",
        json!({"box_radius": 2, "weights": xs.len()}),
        json!({"n_x_in_y0": in_y0, "n_x_w0_in_gamma0": gamma0, "injective": injective}),
        Verdict::from_bool(in_y0 && gamma0 && injective),
    ));

    let cell = aff.canonical_cell_c0(len);
    let outside: Vec<String> = cell.iter().filter(|u| !aff.c0_membership(u)).map(elt_str).collect();
    let ok = outside.is_empty() && aff.c0_membership(&w0) && !aff.c0_membership(&aff.identity());
    out.push(Record::new(
        "lowest-cell-membership",
        "canonical elements w t_x t_{-ρ} lie in the lowest two-sided cell",
        json!({"max_len": len}),
        json!({"size": cell.len(), "not_members": outside}),
        Verdict::from_bool(ok),
    ));
    Ok(out)
}

fn cells(cfg: &RunConfig) -> Result<Vec<Record>> {
    let aff = affine(cfg.root_type);
    let d = aff.datum().clone();
    let len = cfg.max_len.unwrap_or(default_ball_len(cfg.root_type));
    let ball = aff.ball(len);
    let brute = aff.enumerate_y0(len);
    let built = aff.y0_from_antidominant(len);
    let cell = aff.canonical_cell_c0(len);
    let mut rows = Vec::new();
    let mut all_match = true;
    for (l, layer) in ball.iter().enumerate() {
        let count = |s: &BTreeSet<ExtAffineElt>| s.iter().filter(|u| aff.length(u) == l).count();
        let gamma0 = layer.iter().filter(|u| (0..d.rank).all(|i| aff.is_right_descent(u, Simple::Finite(i)))).count();
        let (a, b) = (count(&brute), count(&built));
        all_match &= a == b;
        rows.push(json!({
            "length": l, "elements": layer.len(), "y0_descent": a, "y0_construction": b,
            "gamma0": gamma0, "canonical_c0": count(&cell),
        }));
    }
    let mut out = vec![Record::new(
        "y0-census",
        "Y_0 counts by length agree between the descent definition and the construction",
        json!({"max_len": len}),
        json!({"rows": rows}),
        Verdict::from_bool(all_match),
    )];

    // Exploratory: lengths and descents of n_{kx} for antidominant fundamental directions.
    let mut powers = Vec::new();
    for i in 0..d.rank {
        let x = -Weight::fundamental(d.rank, i);
        let data: Vec<Value> = (1..=4)
            .map(|k| {
                let n = aff.n_x(&x.scaled(k));
                let (l, r) = aff.descent_sets(&n);
                json!({
                    "k": k, "length": aff.length(&n),
                    "left": l.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    "right": r.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        powers.push(json!({"x": x.to_string(), "powers": data}));
    }
    out.push(Record::new(
        "power-descents",
        "lengths and descent sets of n_{kx}, k = 1..4 (no cell equality asserted)",
        json!({}),
        json!({"directions": powers}),
        Verdict::ReportOnly,
    ));
    Ok(out)
}

// Kazhdan–Lusztig bases against C and C′.

fn default_kernel_len(t: RootType) -> usize {
    match t {
        RootType::A1 => 8,
        RootType::A2 => 6,
        _ => 4,
    }
}

fn kl_cache_path(dir: &std::path::Path, t: RootType, bound: usize) -> std::path::PathBuf {
    dir.join(format!("kl-{t}-len{bound}.bin"))
}

/// Loads cached KL entries into `im`; returns the number loaded.
fn load_kl(im: &mut IMAlgebra, cfg: &RunConfig, bound: usize, stats: &mut CacheStats) -> Result<usize> {
    let Some(dir) = cache::resolve_dir(cfg.cache_dir.clone()) else { return Ok(0) };
    stats.enabled = true;
    let key = format!("kl/{}/{bound}", cfg.root_type);
    let d = im.affine().datum().clone();
    let loaded = cache::load(&kl_cache_path(&dir, cfg.root_type, bound), &key)
        .map_err(|e| Error::Parse(format!("cache read failed: {e}")))?;
    let Some(dec) = loaded else {
        stats.file_misses += 1;
        return Ok(0);
    };
    if dec.rejected {
        stats.rejected_files += 1;
        return Ok(0);
    }
    stats.file_hits += 1;
    let mut corrupt = dec.corrupt;
    let mut entries = Vec::new();
    for r in &dec.records {
        match cache::decode_kl_entry(r, d.rank, d.order()) {
            Some(e) => entries.push(e),
            None => corrupt += 1,
        }
    }
    stats.corrupt_records += corrupt;
    stats.loaded_records += entries.len();
    let n = entries.len();
    im.kl().insert_entries(entries);
    Ok(n)
}

fn store_kl(im: &mut IMAlgebra, cfg: &RunConfig, bound: usize, stats: &mut CacheStats) -> Result<()> {
    let Some(dir) = cache::resolve_dir(cfg.cache_dir.clone()) else { return Ok(()) };
    let rank = im.affine().datum().rank;
    let records: Vec<Vec<u8>> = im.kl().entries().iter().map(|e| cache::encode_kl_entry(e, rank)).collect();
    let key = format!("kl/{}/{bound}", cfg.root_type);
    cache::store(&kl_cache_path(&dir, cfg.root_type, bound), &key, &records)
        .map_err(|e| Error::Parse(format!("cache write failed: {e}")))?;
    stats.stored_records += records.len();
    Ok(())
}

fn lemma22(cfg: &RunConfig, stats: &mut CacheStats) -> Result<Vec<Record>> {
    let len = cfg.max_len.unwrap_or(default_kernel_len(cfg.root_type));
    let mut im = IMAlgebra::new(affine(cfg.root_type), len);
    let loaded = load_kl(&mut im, cfg, len, stats)?;
    let mut out = Vec::new();
    for (flavor, text) in [
        (Flavor::C, "C_u C′ = 0 for u ∉ Y_0; images of Y_0 independent"),
        (Flavor::CPrime, "C′_u C = 0 for u ∉ Y_0; images of Y_0 independent"),
    ] {
        let k = im.kernel_check(len, flavor)?;
        out.push(Record::new(
            "cell-module-kernel",
            text,
            json!({"max_len": len}),
            json!({
                "checked": k.checked, "outside_y0": k.outside_y0,
                "nonzero_outside_y0": k.nonzero_outside_y0.iter().map(elt_str).collect::<Vec<_>>(),
                "y0_count": k.y0_count, "y0_rank": k.y0_rank,
            }),
            Verdict::from_bool(k.holds()),
        ));
    }
    if im.kl().len() != loaded {
        store_kl(&mut im, cfg, len, stats)?;
    }
    Ok(out)
}

/// Random elements `Σ c_u T_u` with `l(u) ≤ max_len` and small Laurent coefficients.
fn random_im_elements(aff: &AffineWeyl, max_len: usize, count: usize, seed: u64) -> Vec<IMHeckeElt> {
    let ball: Vec<ExtAffineElt> = aff.ball(max_len).into_iter().flatten().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut h = IMHeckeElt::zero();
            for _ in 0..rng.gen_range(1..=3) {
                let u = ball[rng.gen_range(0..ball.len())];
                let c = hecke_core::scalar::ScalarQ::monomial(
                    int(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 }),
                    rng.gen_range(-2..=2),
                );
                h.add_term(u, &c);
            }
            h
        })
        .collect()
}

fn presentation(cfg: &RunConfig) -> Result<Vec<Record>> {
    let len = cfg.max_len.unwrap_or(6);
    let count = cfg.samples.max(100);
    let aff = affine(cfg.root_type);
    let mut im = IMAlgebra::new(aff.clone(), 2 * len);
    let elts = random_im_elements(&aff, len, count, cfg.seed);
    let mut bad_round_trip = Vec::new();
    let mut bern: Vec<HeckeElt> = Vec::with_capacity(count);
    for (i, h) in elts.iter().enumerate() {
        let b = im.to_bernstein(h)?;
        if im.from_bernstein(&b) != *h {
            bad_round_trip.push(i);
        }
        bern.push(b);
    }
    let mut bad_mul = Vec::new();
    for i in 0..count {
        let j = (i + 1) % count;
        let lhs = im.to_bernstein(&im.mul(&elts[i], &elts[j]))?;
        if lhs != im.bernstein().mul(&bern[i], &bern[j]) {
            bad_mul.push(i);
        }
    }
    Ok(vec![
        Record::new(
            "presentation-round-trip",
            "T-basis → Bernstein → T-basis is the identity",
            json!({"elements": count, "max_len": len, "seed": cfg.seed}),
            json!({"failures": bad_round_trip}),
            Verdict::from_bool(bad_round_trip.is_empty()),
        ),
        Record::new(
            "multiplication-engines",
            "T-basis products agree with Bernstein products after conversion",
            json!({"pairs": count, "max_len": len, "seed": cfg.seed}),
            json!({"failures": bad_mul}),
            Verdict::from_bool(bad_mul.is_empty()),
        ),
    ])
}

// Central-character quotients.

fn kind_str(k: PointKind) -> &'static str {
    match k {
        PointKind::Principal => "principal",
        PointKind::Identity => "identity",
        PointKind::NonRegular => "non-regular",
        PointKind::RootMinusOne => "root-minus-one",
        PointKind::Random => "random",
    }
}

fn points(cfg: &RunConfig, d: &RootDatum) -> Result<Vec<SamplePoint>> {
    match &cfg.points {
        Some(ps) => ps
            .iter()
            .map(|p| {
                let t = p.torus_point()?;
                let kind = if t.is_regular(d) { PointKind::Random } else { PointKind::NonRegular };
                Ok(SamplePoint { kind, t })
            })
            .collect(),
        None => sample_points(d, cfg.seed, cfg.samples),
    }
}

fn reduction_str(r: Reduction) -> &'static str {
    match r {
        Reduction::Regular => "regular",
        Reduction::Generic => "generic",
    }
}

fn thm34(cfg: &RunConfig) -> Result<Vec<Record>> {
    let d = datum(cfg.root_type);
    let ctx = TypeContext::new(d.clone())?;
    let pts = points(cfg, &d)?;
    let per_point = pts
        .par_iter()
        .map(|p| -> Result<Vec<Record>> {
            let t = &p.t;
            let m = ctx.model(t.clone(), None)?;
            let mi = ctx.model(t.inverse(), None)?;
            let inputs = json!({"point": t.label(), "kind": kind_str(p.kind)});
            let chk = m.self_check()?;
            let mut recs = vec![Record::new(
                "steinberg-basis",
                "dim H_t = |W_0|^2, dim Θ_t = |W_0|, model relations hold",
                inputs.clone(),
                json!({"reduction": reduction_str(m.reducer().method()), "checks": chk}),
                Verdict::from_bool(chk.holds(d.order())),
            )];
            if t.is_regular(&d) {
                let agree = reductions_agree(&d, t, 1)?;
                recs.push(Record::new(
                    "reduction-paths",
                    "regular and generic reductions agree on a weight box",
                    inputs.clone(),
                    json!({"agree": agree, "box_radius": 1}),
                    Verdict::from_bool(agree),
                ));
            }
            let r = vanishing_criteria(&ctx, &m, &mi, m.steinberg_radius())?;
            recs.push(Record::new(
                "ideal-vanishing-equivalence",
                "CH_tC, CH_tC′, C′H_tC, C′H_{t⁻¹}C′ vanish together; criteria agree",
                inputs,
                serde_json::to_value(&r).expect("serializable"),
                Verdict::from_bool(r.holds()),
            ));
            Ok(recs)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out: Vec<Record> = per_point.into_iter().flatten().collect();
    let nonregular = pts.iter().filter(|p| !p.t.is_regular(&d)).count();
    out.push(Record::new(
        "sample-coverage",
        "number of sampled points and of non-regular points",
        json!({"seed": cfg.seed}),
        json!({"points": pts.len(), "non_regular": nonregular}),
        Verdict::ReportOnly,
    ));
    Ok(out)
}

fn default_specs() -> Result<Vec<Specialization>> {
    [int(4), int(9), int(-1)].into_iter().map(Specialization::q).collect()
}

fn thm35(cfg: &RunConfig) -> Result<Vec<Record>> {
    let d = datum(cfg.root_type);
    let ctx = TypeContext::new(d.clone())?;
    let specs = match cfg.specialization()? {
        Some(s) => vec![s],
        None => default_specs()?,
    };
    let sign = if d.nu.is_multiple_of(2) { 1 } else { -1 };
    let reports = specs.par_iter().map(|s| principal_report(&ctx, s)).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for (s, r) in specs.iter().zip(reports) {
        let inputs = json!({"q0": fmt_rational(&s.q0()), "point": r.point});
        out.push(Record::new(
            "principal-ideal-dimension",
            format!("dim CH_tC′ = dim C′H_tC = {}; two-sided; eigenvalues (q0, -1)", r.expected_dim),
            inputs.clone(),
            serde_json::to_value(&r).expect("serializable"),
            Verdict::from_bool(r.holds()),
        ));
        out.push(Record::new(
            "pairing-prefactor",
            "sign in (Aθ_x, θ_{e_u})(t) = ± q^{-ν/2} ρ(t)x(t)e_u(t) Σ q^{l(w)}",
            inputs,
            json!({"found_sign": r.pairing_sign, "stated_sign": sign, "poincare_value": poincare_value(&d, &s.q0()).to_string()}),
            Verdict::ReportOnly,
        ));
    }
    Ok(out)
}

fn thm41(cfg: &RunConfig) -> Result<Vec<Record>> {
    let d = datum(cfg.root_type);
    let ctx = TypeContext::new(d.clone())?;
    let mut pts = points(cfg, &d)?;
    let example = cfg.root_type == RootType::A1 && cfg.points.is_none();
    if example {
        let t = TorusPoint::rational(&[int(3)], Specialization::q(int(4))?)?;
        pts.insert(0, SamplePoint { kind: PointKind::Random, t });
    }
    let reports = pts
        .par_iter()
        .map(|p| ctx.model(p.t.clone(), None).and_then(|m| module_report(&ctx, &m)))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for (i, (p, r)) in pts.iter().zip(&reports).enumerate() {
        let inputs = json!({"point": p.t.label(), "kind": kind_str(p.kind)});
        if example && i == 0 {
            out.push(Record::new(
                "example-module",
                "t = (3), q0 = 4: dim L_t = 2, M_{t,0} = 0, irreducible",
                inputs.clone(),
                json!({"dim_lt": r.dim_lt, "dim_m_t0": r.dim_m_t0, "burnside_span": r.burnside_span}),
                Verdict::from_bool(r.holds() && r.dim_lt == 2 && r.dim_m_t0 == 0 && r.irreducible),
            ));
        }
        out.push(Record::new(
            "irreducible-module",
            "Cθ_ρC′ ≠ 0 generates an absolutely irreducible L_t with CL_t ≠ 0 and L_t ≅ H_tC / M_{t,0}; dually for C′θ_ρC",
            inputs,
            serde_json::to_value(r).expect("serializable"),
            Verdict::from_bool(r.holds()),
        ));
    }
    let dims: BTreeSet<usize> = reports.iter().filter(|r| r.generator_nonzero).map(|r| r.dim_lt).collect();
    out.push(Record::new(
        "module-dimensions",
        "observed dimensions of nonzero L_t",
        json!({"order": d.order()}),
        json!({"dimensions": dims}),
        Verdict::ReportOnly,
    ));
    Ok(out)
}

fn lie_check(cfg: &RunConfig) -> Result<Vec<Record>> {
    let d = datum(cfg.root_type);
    if !cfg.root_type.is_type_a() {
        return Err(Error::UnsupportedForType(cfg.root_type.to_string()));
    }
    let ctx = TypeContext::new(d.clone())?;
    let mut pts: Vec<(String, TorusPoint)> = Vec::new();
    let q4 = Specialization::q(int(4))?;
    let qm1 = Specialization::q(int(-1))?;
    let q1 = Specialization::q(int(1))?;
    match cfg.root_type {
        RootType::A1 => pts.push(("listed".into(), TorusPoint::rational(&[int(3)], q4.clone())?)),
        RootType::A2 => pts.push(("listed".into(), TorusPoint::rational(&[int(2), int(1)], q4.clone())?)),
        _ => {}
    }
    for s in [&q4, &qm1, &q1] {
        pts.push(("principal".into(), principal_point(&d, s)));
    }
    if let Some(s) = cfg.specialization()? {
        pts.push(("principal".into(), principal_point(&d, &s)));
    }
    let one = int(1);
    for p in points(cfg, &d)? {
        let q0 = p.t.spec.q0();
        if q0 == int(4) || q0 == int(-1) {
            pts.push((kind_str(p.kind).into(), p.t));
        }
    }
    let results = pts
        .par_iter()
        .map(|(_, t)| -> Result<_> {
            let lie = lie_criterion_type_a(&d, t)?;
            let m = ctx.model(t.clone(), None)?;
            Ok((lie, lt_dimension(&ctx, &m)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for ((origin, t), (lie, dim)) in pts.iter().zip(results) {
        let agree = lie.predicts_zero == (dim == 0);
        out.push(Record::new(
            "lie-criterion",
            "g_{t,q} has a nonzero semisimple element iff H_tCθ_ρC′ = 0",
            json!({"point": t.label(), "origin": origin, "q0_is_one": t.spec.q0() == one}),
            json!({"criterion": lie, "dim_h_c_theta_rho_cprime": dim, "agree": agree}),
            Verdict::ReportOnly,
        ));
    }
    Ok(out)
}

//! Acceptance criteria 1-9, one line each. Runs without the libtest
//! harness so that every criterion reports even when an earlier one fails.

mod gen;
mod oracles;
mod schema;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use covdim::bounds::{catalog_entries, verify_catalog};
use covdim::cli;
use covdim::covariant::io::CovariantFile;
use covdim::covariant::{
    degree_congruences, image_dimension, is_equivariant, projective_image_dimension, twist_by_invariant,
    GradedSpace, MatrixRep, PolyMap,
};
use covdim::dsl::{build, group_from_spec, parse_group_spec};
use covdim::reps::{character_table, has_faithful_irreducible, min_faithful_rep_dim};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn manifest(path: &str) -> String {
    format!("{}/{path}", env!("CARGO_MANIFEST_DIR"))
}

// 1 -----------------------------------------------------------------------

/// Worked values: (spec, covdim, edim).
const WORKED: &[(&str, u64, Option<u64>)] = &[
    ("S3", 2, Some(1)),
    ("S4", 3, None),
    ("S3 x S3", 3, None),
    ("S3 x S4", 4, None),
    ("S4 x S4", 5, None),
    ("C3 : C4 [inv]", 2, Some(2)),
    ("A4 : C4 [a -> b, b -> b a^-1]", 3, Some(3)),
    ("(C3 x C3) : (C4 x C8) [inv; a -> a^-1, b -> b]", 4, Some(4)),
    ("C4 : C2 [a -> a^3]", 2, None),
    ("C8 : C2 [a -> a^3]", 2, None),
    ("C8 : C2 [a -> a^5]", 2, None),
    ("C8 : C2 [a -> a^7]", 2, None),
];

fn abelian_spec(inv: &[usize]) -> String {
    inv.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join(" x ")
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let report = verify_catalog();
    let elapsed = start.elapsed();
    let find = |spec: &str| {
        let ast = parse_group_spec(spec).unwrap();
        report.outcomes.iter().find(|o| parse_group_spec(&o.entry.spec).ok().as_ref() == Some(&ast))
    };
    let mut expected: Vec<(String, u64, Option<u64>)> =
        WORKED.iter().map(|&(s, c, e)| (s.to_string(), c, e)).collect();
    expected.push(("C1".into(), 0, Some(0)));
    for inv in oracles::abelian_groups(64) {
        let rank = inv.len() as u64;
        expected.push((abelian_spec(&inv), rank, Some(rank)));
    }
    let mut bad = Vec::new();
    for (spec, covdim, edim) in &expected {
        let Some(o) = find(spec) else {
            bad.push(format!("{spec}: not in the catalog"));
            continue;
        };
        let ok = o.error.is_none()
            && o.covdim.and_then(|i| i.value()) == Some(*covdim)
            && edim.is_none_or(|e| o.edim.and_then(|i| i.value()) == Some(e));
        if !ok {
            bad.push(format!("{spec}: covdim {:?} edim {:?} error {:?}", o.covdim, o.edim, o.error));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    ensure(report.all_passed(), || format!("{} catalog entries fail", report.failures().len()))?;
    ensure(elapsed < Duration::from_secs(60), || format!("catalog took {elapsed:.1?}"))?;
    Ok(format!("{} expected values reproduced, {} entries in {elapsed:.1?}", expected.len(), report.outcomes.len()))
}

// 2 -----------------------------------------------------------------------

/// `Z/p^k` acting on `Z/p^l` through `a -> a^r`, for each admissible `r`,
/// with the order of the automorphism.
fn cyclic_semidirects(p: u64, k: u32, l: u32) -> Vec<(String, u64)> {
    let m = p.pow(l);
    (1..m)
        .filter(|r| r % p != 0 && oracles::mult_order(*r, m) <= p.pow(k) && p.pow(k).is_multiple_of(oracles::mult_order(*r, m)))
        .map(|r| (format!("C{m} : C{} [a -> a^{r}]", p.pow(k)), oracles::mult_order(r, m)))
        .collect()
}

fn criterion_2() -> Outcome {
    let mut specs: Vec<String> = Vec::new();
    specs.extend((2..=12).map(|n| format!("C{n}")));
    specs.extend([4, 6, 8, 10, 12, 14, 16, 18].iter().map(|n| format!("D{n}")));
    specs.extend((2..=6).map(|n| format!("S{n}")));
    specs.extend((3..=6).map(|n| format!("A{n}")));
    specs.push("Q8".into());
    specs.extend(WORKED.iter().map(|w| w.0.to_string()));
    specs.extend(
        ["S4 x C2", "Q8 x C2", "Q8 x C3", "D8 x C3", "S3 x C2 x C2", "A4 x C3", "C3 : C4 [inv] x S3", "D8 x D8", "A5 x C2"]
            .map(String::from),
    );
    let mut gp = Vec::new();
    for (p, k, l) in [(2, 1, 2), (2, 2, 2), (3, 1, 2), (3, 2, 2)] {
        for (spec, alpha) in cyclic_semidirects(p, k, l) {
            gp.push((spec.clone(), alpha == p.pow(k)));
            specs.push(spec);
        }
    }
    let mut disagreements = Vec::new();
    for s in &specs {
        let g = group_from_spec(s).map_err(|e| format!("{s}: {e}"))?;
        let a = g.is_faithful_gaschutz().map_err(|e| format!("{s}: {e}"))?;
        let b = has_faithful_irreducible(&g).map_err(|e| format!("{s}: {e}"))?;
        if a != b {
            disagreements.push(format!("{s}: socle {a}, table {b}"));
        }
        // abelian groups are faithful exactly when cyclic
        if g.is_abelian() && b != g.element_orders().iter().any(|&o| o as usize == g.order()) {
            disagreements.push(format!("{s}: abelian but faithful = {b}"));
        }
    }
    for (s, want) in &gp {
        let got = has_faithful_irreducible(&group_from_spec(s).unwrap()).unwrap();
        if got != *want {
            disagreements.push(format!("{s}: faithful = {got}, |alpha| = p^k is {want}"));
        }
    }
    ensure(specs.len() >= 40, || format!("only {} groups", specs.len()))?;
    ensure(disagreements.is_empty(), || disagreements.join("; "))?;
    Ok(format!("{} groups agree, {} semidirect G_p cases match |alpha| = p^k", specs.len(), gp.len()))
}

// 3 -----------------------------------------------------------------------

fn criterion_3() -> Outcome {
    let s4 = group_from_spec("S4").unwrap();
    let klein: Vec<usize> = [vec![], vec![vec![0, 1], vec![2, 3]], vec![vec![0, 2], vec![1, 3]], vec![vec![0, 3], vec![1, 2]]]
        .iter()
        .map(|c| s4.index_of(&covdim::Permutation::from_cycles(4, c).unwrap()).unwrap())
        .collect();
    let mut klein_sorted = klein.clone();
    klein_sorted.sort();
    let minimal = s4.minimal_normal_abelian_subgroups().map_err(|e| e.to_string())?;
    ensure(minimal.len() == 1, || format!("S4 has {} minimal normal abelian subgroups", minimal.len()))?;
    ensure(minimal[0].elements().collect::<Vec<_>>() == klein_sorted, || "S4: not the Klein group".into())?;
    let socle = s4.socle_abelian().map_err(|e| e.to_string())?;
    ensure(socle.elements().collect::<Vec<_>>() == klein_sorted, || "S4 socle is not the Klein group".into())?;

    let d8 = group_from_spec("D8").unwrap();
    let center = oracles::naive_center(&d8);
    let socle = d8.socle_abelian().map_err(|e| e.to_string())?;
    ensure(center.len() == 2, || "D8 center is not of order 2".into())?;
    ensure(socle.elements().collect::<Vec<_>>() == center, || "D8 socle is not the center".into())?;
    let minimal = d8.minimal_normal_abelian_subgroups().map_err(|e| e.to_string())?;
    ensure(minimal.len() == 1 && minimal[0].elements().collect::<Vec<_>>() == center, || "D8 minimal".into())?;

    // Non-faithfulness passes to every subgroup containing the socle part.
    let mut groups: Vec<String> = catalog_entries().into_iter().map(|e| e.spec).collect();
    groups.extend(["S3 x C2 x C2", "D8 x C2", "Q8 x C2", "C4 : C4 [a -> a^3]", "C9 : C9 [a -> a^4]", "A4 x C2 x C2"].map(String::from));
    let (mut pairs, mut nonfaithful) = (0, 0);
    let mut bad = Vec::new();
    for spec in &groups {
        let g = group_from_spec(spec).unwrap();
        if g.is_trivial() || g.order() > 200 || g.is_faithful_gaschutz().unwrap() {
            continue;
        }
        nonfaithful += 1;
        let n = g.socle_abelian().unwrap();
        for h in oracles::overgroups(&n) {
            pairs += 1;
            let hg = h.to_group().unwrap();
            if hg.is_faithful_gaschutz().unwrap() || has_faithful_irreducible(&hg).unwrap() {
                bad.push(format!("{spec}: subgroup of order {} is faithful", hg.order()));
            }
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("S4 -> Klein group, D8 -> center; {pairs} pairs over {nonfaithful} non-faithful groups"))
}

// 4 -----------------------------------------------------------------------

/// Equivariant maps for the catalog groups: projections of random maps for
/// permutation and product representations, plus the example files.
fn catalog_covariants(rng: &mut ChaCha8Rng) -> Vec<(String, PolyMap, MatrixRep, MatrixRep)> {
    let mut out = Vec::new();
    for path in ["examples/veronese.json", "examples/sign_pair.json"] {
        let f = CovariantFile::from_json_str(&std::fs::read_to_string(manifest(path)).unwrap()).unwrap();
        out.push((path.to_string(), f.map.clone(), f.rho_v.clone(), f.rho_w.clone()));
    }
    for (spec, copies) in [("S3", 1), ("S3", 2), ("S4", 1), ("D8", 1), ("A4", 1), ("C4", 2), ("C2 x C2", 1)] {
        let g = group_from_spec(spec).unwrap();
        let rho = gen::permutation_rep(&g, copies);
        for _ in 0..2 {
            let phi = gen::sparse_map(rng, rho.space(), rho.space(), 3);
            let eq = gen::equivariant_projection(&phi, &rho, &rho);
            if eq.components().iter().all(|p| !p.is_zero()) {
                out.push((format!("{spec} on {copies} permutation blocks"), eq, rho.clone(), rho.clone()));
            }
        }
    }
    for specs in [["C4", "C2"], ["Q8", "C2"], ["D8", "C4"]] {
        let (_, _, rho) = gen::product_rep(&specs);
        for _ in 0..3 {
            let phi = gen::sparse_map(rng, rho.space(), rho.space(), 4);
            let eq = gen::equivariant_projection(&phi, &rho, &rho);
            if eq.components().iter().all(|p| !p.is_zero()) {
                out.push((specs.join(" x "), eq, rho.clone(), rho.clone()));
            }
        }
    }
    out
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut violations = Vec::new();
    let trials = 120;
    for t in 0..trials {
        let domain = gen::space(&mut rng, 2..=4, 1..=3);
        let codomain = gen::space(&mut rng, 1..=3, 1..=3);
        let phi = gen::sparse_map(&mut rng, &domain, &codomain, 4);
        let beta = if t % 2 == 0 {
            phi.choose_generic_beta(&mut rng)
        } else {
            loop {
                let b: Vec<u64> = (0..domain.num_blocks()).map(|_| rng.gen_range(1..=9)).collect();
                if phi.beta_separates(&b) {
                    break b;
                }
            }
        };
        let lead = phi.phi_max(&beta).map_err(|e| e.to_string())?;
        ensure(lead.is_multihomogeneous(), || format!("trial {t}: leading part is not multihomogeneous"))?;
        let (a, b) = (image_dimension(&lead, &mut rng), image_dimension(&phi, &mut rng));
        if a > b {
            violations.push(format!("trial {t}: dim phi_max {a} > dim phi {b}"));
        }
    }
    let covariants = catalog_covariants(&mut rng);
    let mut checked = 0;
    for (name, phi, rv, rw) in &covariants {
        ensure(is_equivariant(phi, rv, rw), || format!("{name}: generated map is not equivariant"))?;
        for _ in 0..3 {
            let beta = phi.choose_generic_beta(&mut rng);
            let lead = phi.phi_max(&beta).map_err(|e| e.to_string())?;
            if !is_equivariant(&lead, rv, rw) {
                violations.push(format!("{name}: phi_max for {beta:?} is not equivariant"));
            }
            checked += 1;
        }
    }
    ensure(covariants.len() >= 10, || format!("only {} catalog covariants", covariants.len()))?;
    ensure(violations.is_empty(), || violations.join("; "))?;
    Ok(format!("{trials} random maps, {checked} leading parts of {} covariants", covariants.len()))
}

// 5 -----------------------------------------------------------------------

fn rows_i64(rows: &[Vec<u32>]) -> Vec<Vec<i64>> {
    rows.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect()
}

fn composition_cases(rng: &mut ChaCha8Rng, want: usize) -> Result<usize, String> {
    let mut done = 0;
    let mut attempts = 0;
    while done < want {
        attempts += 1;
        ensure(attempts < 10 * want, || "too many degenerate compositions".into())?;
        let v = gen::space(rng, 1..=3, 1..=2);
        let w = gen::space(rng, 1..=3, 1..=2);
        let u = gen::space(rng, 1..=2, 1..=2);
        let a = gen::degree_rows(rng, w.num_blocks(), v.num_blocks(), 2);
        let b = gen::degree_rows(rng, u.num_blocks(), w.num_blocks(), 2);
        let phi = gen::multihomogeneous_map(rng, &v, &w, &a, false);
        let psi = gen::multihomogeneous_map(rng, &w, &u, &b, false);
        let c = psi.compose(&phi).map_err(|e| e.to_string())?;
        let Ok(got) = c.degree_matrix() else { continue };
        let want_m = oracles::mat_mul(&rows_i64(&b), &rows_i64(&a));
        ensure(got.entries() == want_m.as_slice(), || format!("degree {got} instead of {want_m:?}"))?;
        done += 1;
    }
    Ok(done)
}

fn twist_cases(rng: &mut ChaCha8Rng, want: usize) -> Result<usize, String> {
    // sign representation of C2 x C2 on two lines, for twists by invariants
    let g = group_from_spec("C2 x C2").unwrap();
    let one = |v: i64| vec![vec![gen::int(v)]];
    let lines = GradedSpace::new(vec![1, 1]).unwrap();
    let signs = MatrixRep::new(&g, &lines, vec![vec![one(-1), one(1)], vec![one(1), one(-1)]]).unwrap();
    let mut done = 0;
    while done < want {
        let invariant = done % 2 == 0;
        let v = if invariant { lines.clone() } else { gen::space(rng, 1..=3, 1..=2) };
        let n = v.num_blocks();
        let a = loop {
            let a = gen::degree_rows(rng, n, n, 3);
            if oracles::det(&rows_i64(&a)) != 0 {
                break a;
            }
        };
        let phi = gen::multihomogeneous_map(rng, &v, &v, &a, false);
        let (fdeg, f) = if invariant {
            let d: Vec<u32> = (0..2).map(|_| 2 * rng.gen_range(0..=2)).collect();
            let d = if d.iter().all(|&x| x == 0) { vec![2, 0] } else { d };
            let f = gen::homogeneous_poly(rng, &v, &d, 1);
            (d, f)
        } else {
            let d: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
            let d = if d.iter().all(|&x| x == 0) { vec![1; n] } else { d };
            let f = gen::homogeneous_poly(rng, &v, &d, 2);
            (d, f)
        };
        let mu: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        let rho = invariant.then_some(&signs);
        let t = twist_by_invariant(&phi, &f, &mu, rho).map_err(|e| e.to_string())?;
        if let Some(r) = rho {
            ensure(is_equivariant(&t, r, r) == is_equivariant(&phi, r, r), || "twist changed equivariance".into())?;
        }
        let want_m: Vec<Vec<i64>> =
            (0..n).map(|j| (0..n).map(|i| mu[j] * fdeg[i] as i64 + a[j][i] as i64).collect()).collect();
        let got = t.degree_matrix().map_err(|e| e.to_string())?;
        ensure(got.entries() == want_m.as_slice(), || format!("twist degree {got} instead of {want_m:?}"))?;
        done += 1;
    }
    Ok(done)
}

/// Equivariant self-maps of `V_1 + .. + V_n` for `G_1 x .. x G_n`: project
/// random maps with random degree rows; every surviving map must have
/// `A = I (mod p)`.
fn congruence_cases(rng: &mut ChaCha8Rng, want: usize) -> Result<usize, String> {
    let setups: [(&[&str], u64); 8] = [
        (&["C2", "C2"], 2),
        (&["C4", "C2"], 2),
        (&["D8", "C2"], 2),
        (&["Q8", "C4"], 2),
        (&["C2", "C2", "C2"], 2),
        (&["C3", "C3"], 3),
        (&["C3", "C6"], 3),
        (&["C9", "C3"], 3),
    ];
    let mut done = 0;
    let mut attempts = 0;
    while done < want {
        let (specs, p) = setups[attempts % setups.len()];
        attempts += 1;
        ensure(attempts < 400 * want, || format!("only {done} congruence cases found"))?;
        let (factors, _, rho) = gen::product_rep(specs);
        let n = factors.len();
        let p32 = p as u32;
        // bias toward admissible residues, but allow any
        let rows: Vec<Vec<u32>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| {
                        let base = u32::from(i == j);
                        if rng.gen_bool(0.7) {
                            base + p32 * rng.gen_range(0..=1)
                        } else {
                            rng.gen_range(0..=p32 + 1)
                        }
                    })
                    .collect()
            })
            .collect();
        if rows.iter().any(|r| r.iter().all(|&v| v == 0)) {
            continue;
        }
        let phi = gen::multihomogeneous_map(rng, rho.space(), rho.space(), &rows, false);
        let eq = gen::equivariant_projection(&phi, &rho, &rho);
        if (0..n).any(|j| eq.block_is_zero(j)) {
            continue;
        }
        let a = eq.degree_matrix().map_err(|e| e.to_string())?;
        ensure(a.entries() == rows_i64(&rows).as_slice(), || "projection changed the degree".into())?;
        let congruent = rows.iter().enumerate().all(|(j, r)| {
            r.iter().enumerate().all(|(i, &v)| (v as i64 - i64::from(i == j)).rem_euclid(p as i64) == 0)
        });
        ensure(congruent && oracles::det(&rows_i64(&rows)) != 0, || format!("{specs:?}: covariant of degree {a}"))?;
        let verdict = degree_congruences(&eq, &rho, &rho, &factors, p).map_err(|e| e.to_string())?;
        ensure(verdict, || format!("{specs:?}: degree_congruences rejects {a}"))?;
        done += 1;
    }
    Ok(done)
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let c = composition_cases(&mut rng, 110)?;
    let t = twist_cases(&mut rng, 60)?;
    let k = congruence_cases(&mut rng, 24)?;
    Ok(format!("{c} compositions, {t} twists, {k} product-group covariants"))
}

// 6 -----------------------------------------------------------------------

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut cases = 0;
    let mut non_full = 0;
    while cases < 36 {
        let k = rng.gen_range(1..=2);
        let trailing = rng.gen_range(1..=2);
        let mut dims: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=3)).collect();
        dims.extend(std::iter::repeat_n(1, trailing));
        let sp = GradedSpace::new(dims).unwrap();
        let n = sp.num_blocks();
        let a = gen::degree_rows(&mut rng, n, n, 3);
        if oracles::det(&rows_i64(&a)) == 0 {
            continue;
        }
        let dependent = rng.gen_bool(0.5);
        let phi = gen::multihomogeneous_map(&mut rng, &sp, &sp, &a, dependent);
        let head = phi.truncate(k).map_err(|e| e.to_string())?;
        let (whole, part) = (image_dimension(&phi, &mut rng), image_dimension(&head, &mut rng));
        ensure(whole == part + (n - k), || format!("A = {a:?}: dim {whole}, truncation {part}, n - k = {}", n - k))?;
        if part < sp.block_dims()[..k].iter().sum() {
            non_full += 1;
        }
        cases += 1;
    }
    Ok(format!("{cases} maps ({non_full} with a non-dominant truncation)"))
}

// 7 -----------------------------------------------------------------------

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cases = 0;
    let mut violations = Vec::new();
    while cases < 40 {
        let v = gen::space(&mut rng, 1..=3, 1..=3);
        let w = gen::space(&mut rng, 1..=3, 1..=3);
        let a = gen::degree_rows(&mut rng, w.num_blocks(), v.num_blocks(), 3);
        let dependent = rng.gen_bool(0.3);
        let phi = gen::multihomogeneous_map(&mut rng, &v, &w, &a, dependent);
        let dm = phi.degree_matrix().map_err(|e| e.to_string())?;
        ensure(dm.rank() == oracles::rank(&rows_i64(&a)), || format!("rank of {dm}"))?;
        let affine = image_dimension(&phi, &mut rng);
        let projective = projective_image_dimension(&phi, &mut rng).map_err(|e| e.to_string())?;
        if projective + dm.rank() > affine {
            violations.push(format!("A = {dm}: projective {projective}, affine {affine}"));
        }
        cases += 1;
    }
    ensure(violations.is_empty(), || violations.join("; "))?;
    Ok(format!("{cases} multihomogeneous maps"))
}

// 8 -----------------------------------------------------------------------

fn criterion_8() -> Outcome {
    let mut groups: Vec<String> = catalog_entries().into_iter().map(|e| e.spec).collect();
    groups.extend(["Q8", "D8", "A5", "S5", "C3 : C4 [inv] x S3"].map(String::from));
    let mut checked = 0;
    for spec in &groups {
        let g = group_from_spec(spec).unwrap();
        let t = character_table(&g).map_err(|e| format!("{spec}: {e}"))?;
        let sum: u64 = t.degrees().iter().map(|d| d * d).sum();
        ensure(sum == g.order() as u64, || format!("{spec}: sum of squared degrees {sum}"))?;
        oracles::orthogonality(&t).map_err(|e| format!("{spec}: orthogonality fails for {e}"))?;
        checked += 1;
    }
    let mut dims = Vec::new();
    for (spec, want) in [("Q8", 2), ("C2 x C2", 2), ("S4", 3)] {
        let g = group_from_spec(spec).unwrap();
        let d = min_faithful_rep_dim(&g).map_err(|e| e.to_string())?;
        let brute = oracles::brute_min_faithful(&character_table(&g).unwrap());
        ensure(d == want && brute == want, || format!("{spec}: engine {d}, brute force {brute}, expected {want}"))?;
        dims.push(format!("{spec} {d}"));
    }
    for spec in ["S3 x S3", "D8 x C4", "C3 x C3 x C3", "Q8 x C2", "A4 : C4 [a -> b, b -> b a^-1]", "S4 x C2"] {
        let g = group_from_spec(spec).unwrap();
        let d = min_faithful_rep_dim(&g).map_err(|e| e.to_string())?;
        let brute = oracles::brute_min_faithful(&character_table(&g).unwrap());
        ensure(d == brute, || format!("{spec}: engine {d}, brute force {brute}"))?;
    }
    Ok(format!("{checked} tables exact; min faithful dimension {}", dims.join(", ")))
}

// 9 -----------------------------------------------------------------------

fn run_cli(args: &[&str]) -> cli::CliOutput {
    cli::run(std::iter::once("covdim").chain(args.iter().copied()))
}

fn criterion_9() -> Outcome {
    let veronese = manifest("examples/veronese.json");
    let signs = manifest("examples/sign_pair.json");
    let mut calls: Vec<(Vec<String>, schema::Ty)> = Vec::new();
    let owned = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    for spec in ["S3", "S4 x S4", "C3 : C4 [inv]", "C2 x C2", "C1"] {
        calls.push((owned(&["analyze", spec, "--json"]), schema::analyze()));
        calls.push((owned(&["faithful", spec, "--json"]), schema::faithful()));
        calls.push((owned(&["table", spec, "--json"]), schema::table()));
    }
    for file in [&veronese, &signs] {
        for op in ["check", "degrees", "phimax", "dim", "faithful"] {
            if op == "degrees" && file == &signs {
                continue;
            }
            calls.push((owned(&["covariant", op, file, "--json", "--seed", "11"]), schema::covariant(op)));
        }
    }
    calls.push((owned(&["covariant", "phimax", &signs, "--beta", "1,6", "--json"]), schema::covariant("phimax")));
    calls.push((owned(&["catalog", "--json"]), schema::catalog()));
    calls.push((owned(&["analyze", "X3", "--json"]), schema::error()));
    calls.push((owned(&["covariant", "degrees", &signs, "--json"]), schema::error()));

    for (args, ty) in &calls {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = run_cli(&refs);
        let v: serde_json::Value =
            serde_json::from_str(&first.stdout).map_err(|e| format!("{args:?}: invalid JSON: {e}"))?;
        schema::check(&v, ty, "$").map_err(|e| format!("{args:?}: {e}"))?;
        let second = run_cli(&refs);
        ensure(first == second, || format!("{args:?}: output differs between runs"))?;
    }

    // printing round-trips on the catalog
    for e in catalog_entries() {
        let ast = parse_group_spec(&e.spec).map_err(|x| x.to_string())?;
        let printed = ast.to_string();
        ensure(parse_group_spec(&printed).ok() == Some(ast.clone()), || format!("{}: round trip", e.spec))?;
        ensure(build(&ast).is_ok(), || format!("{}: does not build", e.spec))?;
    }
    // leading parts written by the tool read back to the same file
    let out = run_cli(&["covariant", "phimax", &signs, "--beta", "1,6"]);
    let file = CovariantFile::from_json_str(&out.stdout).map_err(|e| e.to_string())?;
    ensure(file.to_json_string().unwrap() == out.stdout, || "phimax output is not canonical".into())?;
    let dim: serde_json::Value = serde_json::from_str(&run_cli(&["covariant", "dim", &veronese, "--json"]).stdout).unwrap();
    ensure(dim["dim"] == 2, || format!("veronese dimension {}", dim["dim"]))?;
    let s4: serde_json::Value = serde_json::from_str(&run_cli(&["analyze", "S4 x S4", "--json"]).stdout).unwrap();
    ensure(s4["covdim"] == serde_json::json!([5, 5]), || format!("S4 x S4 covdim {}", s4["covdim"]))?;
    Ok(format!("{} invocations schema-valid and reproducible, {} specs round-trip", calls.len(), catalog_entries().len()))
}

// -------------------------------------------------------------------------

fn panic_message(p: Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<String>()
        .cloned()
        .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "panic".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("golden catalog", criterion_1),
        ("faithfulness oracle agreement", criterion_2),
        ("socle example and monotonicity", criterion_3),
        ("leading parts", criterion_4),
        ("degree algebra", criterion_5),
        ("trailing one-dimensional blocks", criterion_6),
        ("projective drop", criterion_7),
        ("character tables", criterion_8),
        ("command-line contract", criterion_9),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let n = i + 1;
        if !filter.is_empty() && !filter.iter().any(|x| x == &n.to_string()) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| Err(panic_message(p)));
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {n} PASS {name}: {detail} [{t:.1?}]"),
            Err(e) => {
                failed += 1;
                println!("criterion {n} FAIL {name}: {e} [{t:.1?}]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

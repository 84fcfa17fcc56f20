use super::*;
use crate::group::{
    abelian, alternating, cyclic, dihedral, direct_product, quaternion8, semidirect_product, symmetric,
};

/// Degree multisets allowed by: `|G/G'|` linear characters, one irreducible
/// per class, degrees dividing `|G|`, and the sum of squares.
fn degree_candidates(g: &FiniteGroup) -> Vec<Vec<u64>> {
    let n = g.order() as u64;
    let k = g.conjugacy_classes().len();
    let linear = n / g.derived_subgroup().order() as u64;
    let rest = k - linear as usize;
    let divisors: Vec<u64> = (2..=n).filter(|d| n.is_multiple_of(*d) && d * d <= n).collect();
    let mut out = Vec::new();
    fn go(divs: &[u64], from: usize, left: usize, budget: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            if budget == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for i in from..divs.len() {
            let sq = divs[i] * divs[i];
            if sq > budget {
                break;
            }
            acc.push(divs[i]);
            go(divs, i, left - 1, budget - sq, acc, out);
            acc.pop();
        }
    }
    go(&divisors, 0, rest, n - linear, &mut Vec::new(), &mut out);
    for v in out.iter_mut() {
        let mut full = vec![1; linear as usize];
        full.append(v);
        *v = full;
    }
    out
}

fn inversion(k: &FiniteGroup) -> Vec<usize> {
    k.generator_indices().iter().map(|&x| k.inv(x)).collect()
}

fn c3_c4() -> FiniteGroup {
    let k = cyclic(3).unwrap();
    semidirect_product(&k, &cyclic(4).unwrap(), &[inversion(&k)]).unwrap()
}

fn c3c3_c4c8() -> FiniteGroup {
    let k = abelian(&[3, 3]).unwrap();
    let q = abelian(&[4, 8]).unwrap();
    let [a, b] = [k.generator_indices()[0], k.generator_indices()[1]];
    semidirect_product(&k, &q, &[vec![k.inv(a), k.inv(b)], vec![k.inv(a), b]]).unwrap()
}

fn brute_force_min_faithful(g: &FiniteGroup) -> u64 {
    let t = character_table(g).unwrap();
    let irr = t.irreducibles();
    let kernels: Vec<Subgroup> = irr.iter().map(|c| t.kernel(c)).collect();
    let mut best = u64::MAX;
    for mask in 1u32..(1 << irr.len()) {
        let mut k = Subgroup::whole(g);
        let mut cost = 0;
        for (i, ker) in kernels.iter().enumerate() {
            if mask >> i & 1 == 1 {
                k = k.intersection(ker);
                cost += irr[i].degree();
            }
        }
        if k.is_trivial() {
            best = best.min(cost);
        }
    }
    best
}

#[test]
fn degrees_of_small_groups() {
    for (g, expected) in [
        (symmetric(3).unwrap(), vec![1, 1, 2]),
        (symmetric(4).unwrap(), vec![1, 1, 2, 3, 3]),
        (quaternion8().unwrap(), vec![1, 1, 1, 1, 2]),
        (alternating(5).unwrap(), vec![1, 3, 3, 4, 5]),
    ] {
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees(), expected);
        assert_eq!(degree_candidates(&g), vec![expected]);
    }
}

#[test]
fn tables_are_orthogonal() {
    let groups = [
        cyclic(1).unwrap(),
        cyclic(4).unwrap(),
        symmetric(3).unwrap(),
        symmetric(4).unwrap(),
        dihedral(10).unwrap(),
        quaternion8().unwrap(),
        alternating(5).unwrap(),
        c3_c4(),
        abelian(&[2, 4]).unwrap(),
    ];
    for g in groups {
        let t = character_table(&g).unwrap();
        assert_eq!(t.irreducibles().len(), g.conjugacy_classes().len());
        let sq: u64 = t.degrees().iter().map(|d| d * d).sum();
        assert_eq!(sq, g.order() as u64);
        assert!(t.check_orthogonality());
        for chi in t.irreducibles() {
            assert!(t.inner_product(chi, chi).is_one());
        }
    }
}

#[test]
fn cyclic_four_takes_values_in_gaussian_integers() {
    let g = cyclic(4).unwrap();
    let t = character_table(&g).unwrap();
    assert_eq!(t.exponent(), 4);
    let i = CycNumber::root_of_unity(4, 1);
    let allowed = [CycNumber::one(), i.clone(), -CycNumber::one(), -i];
    for chi in t.irreducibles() {
        assert_eq!(chi.degree(), 1);
        for v in chi.values() {
            assert!(allowed.contains(v));
        }
    }
    assert_eq!(t.irreducibles().iter().filter(|c| c.is_faithful()).count(), 2);
}

#[test]
fn kernels_in_s4() {
    let g = symmetric(4).unwrap();
    let t = character_table(&g).unwrap();
    let irr = t.irreducibles();
    assert_eq!(t.kernel(&irr[0]).order(), 24);
    let sign = irr.iter().skip(1).find(|c| c.degree() == 1).unwrap();
    let ker = t.kernel(sign);
    assert_eq!(ker.order(), 12);
    assert!(ker.elements().all(|x| {
        let p = g.element(x);
        p.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }));
    for chi in irr.iter().filter(|c| c.degree() == 3) {
        assert!(t.kernel(chi).is_trivial());
    }
    assert!(t.kernel(&irr[2]).is_normal());
}

#[test]
fn faithful_groups() {
    assert!(has_faithful_irreducible(&symmetric(4).unwrap()).unwrap());
    assert!(!has_faithful_irreducible(&abelian(&[2, 2]).unwrap()).unwrap());
    // trivial centers are coprime: rho x rho is a faithful irreducible
    let s3 = symmetric(3).unwrap();
    let s3s3 = direct_product(&s3, &s3).unwrap();
    assert!(has_faithful_irreducible(&s3s3).unwrap());
    assert!(s3s3.is_faithful_gaschutz().unwrap());
    for g in [cyclic(6).unwrap(), quaternion8().unwrap(), c3_c4(), dihedral(8).unwrap(), c3c3_c4c8()] {
        assert_eq!(is_faithful(&g).unwrap(), g.is_faithful_gaschutz().unwrap());
    }
    // abelian groups: faithful iff cyclic
    for inv in [&[2, 2][..], &[6][..], &[2, 4][..], &[3, 9][..], &[5][..]] {
        let g = abelian(inv).unwrap();
        assert_eq!(has_faithful_irreducible(&g).unwrap(), g.is_cyclic());
    }
}

#[test]
fn product_criterion() {
    let s3 = symmetric(3).unwrap();
    let c3 = cyclic(3).unwrap();
    assert!(is_faithful_product_criterion(&[s3.clone(), c3.clone()]).unwrap());
    assert!(has_faithful_irreducible(&direct_product(&s3, &c3).unwrap()).unwrap());
    let q8 = quaternion8().unwrap();
    let d4 = dihedral(8).unwrap();
    assert!(!is_faithful_product_criterion(&[q8.clone(), d4.clone()]).unwrap());
    assert!(!has_faithful_irreducible(&direct_product(&q8, &d4).unwrap()).unwrap());
    assert!(is_faithful_product_criterion(&[q8]).unwrap());
    assert_eq!(
        is_faithful_product_criterion(&[s3, abelian(&[2, 2]).unwrap()]).unwrap_err(),
        RepsError::NotFaithfulFactor(1)
    );
}

#[test]
fn minimal_faithful_dimension() {
    let cases = [
        (abelian(&[2, 2]).unwrap(), 2),
        (quaternion8().unwrap(), 2),
        (symmetric(4).unwrap(), 3),
        (abelian(&[2, 2, 2]).unwrap(), 3),
        (symmetric(3).unwrap(), 2),
        (dihedral(8).unwrap(), 2),
    ];
    for (g, d) in cases {
        assert_eq!(min_faithful_rep_dim(&g).unwrap(), d);
        assert_eq!(brute_force_min_faithful(&g), d);
    }
    let s3 = symmetric(3).unwrap();
    let g = direct_product(&s3, &s3).unwrap();
    assert_eq!(min_faithful_rep_dim(&g).unwrap(), brute_force_min_faithful(&g));
    let z = center_rank_and_cyclicity(&g).unwrap();
    assert!(min_faithful_rep_dim(&g).unwrap() as usize >= z.0);
}

#[test]
fn center_shapes() {
    assert_eq!(center_rank_and_cyclicity(&c3_c4()).unwrap(), (1, true));
    assert_eq!(center_rank_and_cyclicity(&c3c3_c4c8()).unwrap(), (2, false));
    assert_eq!(center_rank_and_cyclicity(&symmetric(3).unwrap()).unwrap(), (0, true));
}

#[test]
fn json_report_lists_classes() {
    let t = character_table(&symmetric(3).unwrap()).unwrap();
    let v = t.to_json();
    assert_eq!(v["classes"].as_array().unwrap().len(), 3);
    assert_eq!(v["characters"][2]["degree"], 2);
    assert_eq!(v["classes"][0]["representative"], "()");
}

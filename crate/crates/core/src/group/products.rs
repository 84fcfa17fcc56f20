use super::{FiniteGroup, Subgroup};
use crate::error::GroupError;
use crate::perm::Permutation;

/// `G x H` acting on the disjoint union of the two point sets; the
/// generators are those of `G` followed by those of `H`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let cap = g.order_cap().min(h.order_cap());
    if g.order().saturating_mul(h.order()) > cap {
        return Err(GroupError::CapExceeded { cap });
    }
    let degree = g.degree() + h.degree();
    let gens = g
        .generators()
        .iter()
        .map(|p| p.embed(0, degree))
        .chain(h.generators().iter().map(|p| p.embed(g.degree(), degree)))
        .collect();
    FiniteGroup::with_cap(degree, gens, cap)
}

pub fn direct_product_many(factors: &[FiniteGroup]) -> Result<FiniteGroup, GroupError> {
    let mut iter = factors.iter();
    let Some(first) = iter.next() else {
        return Ok(FiniteGroup::trivial());
    };
    iter.try_fold(first.clone(), |acc, f| direct_product(&acc, f))
}

/// Automorphism of `kernel` determined by the images of its generators,
/// as a table over element indices.
pub fn extend_automorphism(
    kernel: &FiniteGroup,
    gen_images: &[usize],
) -> Result<Vec<usize>, GroupError> {
    if gen_images.len() != kernel.generators().len() {
        return Err(GroupError::NotAHomomorphism(format!(
            "expected {} generator images, got {}",
            kernel.generators().len(),
            gen_images.len()
        )));
    }
    if gen_images.iter().any(|&i| i >= kernel.order()) {
        return Err(GroupError::NotAnElement);
    }
    let table = kernel.extend_along_tree(gen_images, 0, |&a, &b| kernel.mul(a, b));
    if !kernel.check_homomorphism(&table, |&a, &b| kernel.mul(a, b)) {
        return Err(GroupError::NotAHomomorphism(
            "generator images do not respect the kernel's relations".into(),
        ));
    }
    let mut hit = vec![false; kernel.order()];
    for &t in &table {
        if std::mem::replace(&mut hit[t], true) {
            return Err(GroupError::NotAHomomorphism("map is not bijective".into()));
        }
    }
    Ok(table)
}

/// `K x| Q` where the `s`-th generator of `Q` acts on `K` by the automorphism
/// sending the `t`-th generator of `K` to `action[s][t]` (element indices of
/// `K`). Multiplication is `(k1,q1)(k2,q2) = (k1 q1(k2), q1 q2)`. The result
/// acts on itself by right multiplication; its generators are those of `K`
/// followed by those of `Q`.
pub fn semidirect_product(
    kernel: &FiniteGroup,
    actor: &FiniteGroup,
    action: &[Vec<usize>],
) -> Result<FiniteGroup, GroupError> {
    if action.len() != actor.generators().len() {
        return Err(GroupError::NotAHomomorphism(format!(
            "expected an automorphism for each of the {} actor generators, got {}",
            actor.generators().len(),
            action.len()
        )));
    }
    let cap = kernel.order_cap().min(actor.order_cap());
    let (nk, nq) = (kernel.order(), actor.order());
    if nk.saturating_mul(nq) > cap {
        return Err(GroupError::CapExceeded { cap });
    }
    let autos = action
        .iter()
        .map(|imgs| extend_automorphism(kernel, imgs))
        .collect::<Result<Vec<_>, _>>()?;
    let compose = |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
    let identity: Vec<usize> = (0..nk).collect();
    let theta = actor.extend_along_tree(&autos, identity, compose);
    if !actor.check_homomorphism(&theta, compose) {
        return Err(GroupError::NotAHomomorphism(
            "automorphisms do not respect the actor's relations".into(),
        ));
    }

    let degree = nk * nq;
    let point = |k: usize, q: usize| (k * nq + q) as u32;
    let mut gens = Vec::new();
    for &kg in kernel.generator_indices() {
        let mut images = vec![0u32; degree];
        for k in 0..nk {
            for (q, th) in theta.iter().enumerate() {
                images[point(k, q) as usize] = point(kernel.mul(k, th[kg]), q);
            }
        }
        gens.push(Permutation::from_images(images)?);
    }
    for &qg in actor.generator_indices() {
        let mut images = vec![0u32; degree];
        for k in 0..nk {
            for q in 0..nq {
                images[point(k, q) as usize] = point(k, actor.mul(q, qg));
            }
        }
        gens.push(Permutation::from_images(images)?);
    }
    FiniteGroup::with_cap(degree, gens, cap)
}

/// A quotient group together with the projection from the parent.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub group: FiniteGroup,
    /// Element index in `group` of the image of each parent element.
    pub projection: Vec<usize>,
}

/// `G/N`, acting on the cosets of `N`. The generators of the quotient are
/// the images of the generators of `G`, in order.
pub fn quotient(n: &Subgroup) -> Result<QuotientMap, GroupError> {
    if !n.is_normal() {
        return Err(GroupError::NotNormal);
    }
    let g = n.parent();
    let mut coset = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for m in n.elements() {
            coset[g.mul(m, x)] = id;
        }
    }
    let degree = reps.len();
    let gens = g
        .generator_indices()
        .iter()
        .map(|&s| {
            let images = reps.iter().map(|&r| coset[g.mul(r, s)] as u32).collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let group = FiniteGroup::with_cap(degree, gens, g.order_cap())?;
    let gi = group.generator_indices().to_vec();
    let projection = g.extend_along_tree(&gi, 0, |&a, &b| group.mul(a, b));
    Ok(QuotientMap { group, projection })
}

// Multihomogeneous covariants: degree matrices, leading parts, composition
// and image dimensions.
//
// ```bash
// cargo run --example covariant_lab
// ```

use std::error::Error;

use covdim::covariant::io::CovariantFile;
use covdim::covariant::{
    image_dimension, is_equivariant, projective_image_dimension, twist_by_invariant, GradedSpace, MatrixRep, Poly,
    PolyMap,
};
use covdim::cyclotomic::CycNumber;
use covdim::dsl::group_from_spec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const VERONESE: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/veronese.json"));

fn mono(n: usize, e: &[u32], c: i64) -> Poly {
    Poly::term(n, e.to_vec(), CycNumber::from_int(c))
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    // (x, y) -> (x^2, xy, y^2) for -1 acting on the plane: the cone over a
    // conic.
    let conic = CovariantFile::from_json_str(VERONESE)?;
    let a = conic.map.degree_matrix()?;
    let dim = image_dimension(&conic.map, &mut rng);
    let pdim = projective_image_dimension(&conic.map, &mut rng)?;
    println!("veronese: degree matrix {a}, image dimension {dim}, projective {pdim}");

    // Z/2 x Z/2 acting by signs on two lines; the map is equivariant in
    // each block separately.
    let g = group_from_spec("C2 x C2")?;
    let one = |v: i64| vec![vec![CycNumber::from_int(v)]];
    let lines = GradedSpace::new(vec![1, 1])?;
    let rho = MatrixRep::new(&g, &lines, vec![vec![one(-1), one(1)], vec![one(1), one(-1)]])?;
    let phi = PolyMap::new(
        lines.clone(),
        lines.clone(),
        vec![&mono(2, &[3, 2], 1) + &mono(2, &[1, 0], 5), &mono(2, &[2, 1], 1) + &mono(2, &[0, 3], -2)],
    )?;
    println!("\nphi = ({}, {})", phi.components()[0], phi.components()[1]);
    println!("equivariant: {}", is_equivariant(&phi, &rho, &rho));
    println!("multihomogeneous: {}", phi.is_multihomogeneous());

    // Leading parts per weight vector are multihomogeneous and still
    // equivariant, and their image dimension can only drop.
    let beta = phi.choose_generic_beta(&mut rng);
    let lead = phi.phi_max(&beta)?;
    let la = lead.degree_matrix()?;
    println!("beta {beta:?}: phi_max = ({}, {})", lead.components()[0], lead.components()[1]);
    println!("degree matrix {la}, det {:?}", la.det());
    println!(
        "image dimension: phi {}, phi_max {}",
        image_dimension(&phi, &mut rng),
        image_dimension(&lead, &mut rng)
    );
    if !is_equivariant(&lead, &rho, &rho) {
        return Err("leading part lost equivariance".into());
    }

    // Degree matrices multiply under composition.
    let twice = lead.compose(&lead)?;
    println!("\ncomposite degree matrix {} = {}^2", twice.degree_matrix()?, la);

    // Twisting by the invariant x^2 y^2 shifts the degree matrix by
    // mu * deg f.
    let f = mono(2, &[2, 2], 1);
    let twisted = twist_by_invariant(&lead, &f, &[1, 0], Some(&rho))?;
    println!("twisted by f = {f} with mu = (1, 0): {}", twisted.degree_matrix()?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

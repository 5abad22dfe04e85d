//! Prints the numeric facet systems for r = 2..=5 at dyadic weights,
//! with the weight dependence of each bound.

use bosonic_polytope::halfspace::numeric_facets;
use bosonic_polytope::polytope::SpectralPolytope;
use bosonic_polytope::weights::WeightVector;

fn main() {
    for r in 2..=5usize {
        let p = SpectralPolytope::build(r - 1, r as u32, &WeightVector::dyadic(r)).unwrap();
        println!("r = {r}");
        for c in numeric_facets(&p).unwrap().inequalities() {
            let forms: Vec<String> = c.weight_forms.iter().map(|f| f.to_string()).collect();
            let normal: Vec<String> = c.normal().iter().map(|x| x.to_string()).collect();
            println!("  ({}) <= {}   forms: {}", normal.join(","), c.bound, forms.join(" | "));
        }
    }
}

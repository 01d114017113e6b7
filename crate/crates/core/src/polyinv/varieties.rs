//! Named projective varieties given by homogeneous forms.

use super::{MultiPoly, PolyError};
use crate::exactnum::Cyclotomic;

/// Registry names accepted by [`variety`].
pub const VARIETY_NAMES: [&str; 5] = ["klein_cubic", "segre_cubic", "burkhardt", "x6prime", "palatini"];

#[derive(Clone, Debug)]
pub struct Variety {
    pub name: &'static str,
    pub nvars: usize,
    pub forms: Vec<MultiPoly>,
}

fn sigma(n: usize, k: usize) -> MultiPoly {
    MultiPoly::elementary_symmetric(n, k)
}

/// `sum_i x_i^2 x_{i+1}` over five variables, cyclically.
pub fn klein_cubic() -> MultiPoly {
    MultiPoly::from_terms(
        5,
        (0..5).map(|i| {
            let mut e = vec![0; 5];
            e[i] = 2;
            e[(i + 1) % 5] = 1;
            (Cyclotomic::one(), e)
        }),
    )
}

/// Quartic in `x_0, ..., x_5`:
/// `x_0^4 + x_0 K(x_1..x_5) + sum_i x_i^2 x_{i+2} x_{i+4}` with `K` the Klein cubic.
pub fn palatini_quartic() -> MultiPoly {
    let mut terms = vec![(Cyclotomic::one(), vec![4, 0, 0, 0, 0, 0])];
    for i in 0..5 {
        let mut e = vec![0; 6];
        e[0] = 1;
        e[1 + i] = 2;
        e[1 + (i + 1) % 5] = 1;
        terms.push((Cyclotomic::one(), e));
        let mut e = vec![0; 6];
        e[1 + i] = 2;
        e[1 + (i + 2) % 5] = 1;
        e[1 + (i + 4) % 5] = 1;
        terms.push((Cyclotomic::one(), e));
    }
    MultiPoly::from_terms(6, terms)
}

pub fn variety(name: &str) -> Result<Variety, PolyError> {
    let (name, nvars, forms) = match name {
        "klein_cubic" => ("klein_cubic", 5, vec![klein_cubic()]),
        "segre_cubic" => ("segre_cubic", 6, vec![sigma(6, 1), sigma(6, 3)]),
        "burkhardt" => ("burkhardt", 6, vec![sigma(6, 1), sigma(6, 4)]),
        "x6prime" => ("x6prime", 7, vec![sigma(7, 1), sigma(7, 2), sigma(7, 3)]),
        "palatini" => ("palatini", 6, vec![palatini_quartic()]),
        other => return Err(PolyError::UnknownVariety(other.to_string())),
    };
    Ok(Variety { name, nvars, forms })
}

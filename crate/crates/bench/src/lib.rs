//! Shared inputs for the benchmarks.

use segre_core::polyring::MultiPoly;
use segre_core::HomogeneousIdeal;

/// `(x0^a, x1^b)` in `nvars` variables.
pub fn complete_intersection(nvars: usize, a: u32, b: u32) -> HomogeneousIdeal {
    let mut e0 = vec![0; nvars];
    let mut e1 = vec![0; nvars];
    e0[0] = a;
    e1[1] = b;
    HomogeneousIdeal::monomial(nvars, &[e0, e1]).unwrap()
}

/// Degree-`d` monomials `x_i^{d-1} x_{i+1}` cycling through `nvars` variables.
pub fn cyclic(nvars: usize, d: u32) -> HomogeneousIdeal {
    let gens: Vec<Vec<u32>> = (0..nvars)
        .map(|i| {
            let mut e = vec![0; nvars];
            e[i] = d - 1;
            e[(i + 1) % nvars] += 1;
            e
        })
        .collect();
    HomogeneousIdeal::monomial(nvars, &gens).unwrap()
}

/// `(x0^2 + x1*x2, x0*x1)`, which has no monomial shortcut.
pub fn mixed() -> HomogeneousIdeal {
    let x = |i| MultiPoly::var(3, i);
    HomogeneousIdeal::new(3, vec![&(&x(0) * &x(0)) + &(&x(1) * &x(2)), &x(0) * &x(1)]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_are_well_formed() {
        assert_eq!(complete_intersection(4, 2, 3).degrees(), &[2, 3]);
        assert!(cyclic(4, 3).is_monomial());
        assert!(!mixed().is_monomial());
    }
}

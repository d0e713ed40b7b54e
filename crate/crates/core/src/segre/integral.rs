use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::SegreError;
use crate::exactnum::{binomial, format_rational, Rational, RationalFunction, UniPoly};
use crate::polyhedra::PiecewisePolynomial;

/// `coefficient / t^power`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMonomial {
    pub coefficient: Rational,
    pub power: u32,
}

/// `(n+1) ∫_0^∞ s^i / (1+st)^{n+2} ds = 1 / (binom(n,i) t^{i+1})`.
pub fn beta_integral(n: usize, i: usize) -> Result<LaurentMonomial, SegreError> {
    if i > n {
        return Err(SegreError::IndexOutOfRange { n, i });
    }
    Ok(LaurentMonomial { coefficient: Rational::new(BigInt::one(), binomial(n as u64, i as u64)), power: i as u32 + 1 })
}

fn r(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The antiderivative term at one end of the interval: with `u = 1 + at`,
/// `(n+1) Σ_k c_k t^{n-k} Σ_j binom(k,j) (-1)^{k-j} u^{j-n-1} / (n+1-j)`.
fn boundary_term(p: &UniPoly, a: &Rational, n: usize) -> RationalFunction {
    let u = UniPoly::linear_unit(a.clone());
    let mut u_pow = vec![UniPoly::one()];
    for j in 1..=n {
        u_pow.push(&u_pow[j - 1] * &u);
    }
    let mut num = UniPoly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut inner = UniPoly::zero();
        for (j, uj) in u_pow.iter().enumerate().take(k + 1) {
            let sign = if (k - j) % 2 == 0 { Rational::one() } else { -Rational::one() };
            let w = sign * Rational::from_integer(binomial(k as u64, j as u64)) * r(n + 1) / r(n + 1 - j);
            inner = &inner + &uj.scale(&w);
        }
        num = &num + &inner.shift(n - k).scale(c);
    }
    RationalFunction::new(num, u.pow(n as u32 + 1)).expect("1 + at has unit constant term")
}

/// `(n+1) ∫_α^β p(s) t^{n+1} / (1+st)^{n+2} ds` in closed form; `beta = None`
/// integrates to infinity.
pub fn integrate_piece(p: &UniPoly, alpha: &Rational, beta: Option<&Rational>, n: usize) -> Result<RationalFunction, SegreError> {
    if p.degree().is_some_and(|d| d > n) {
        return Err(SegreError::DegreeTooLarge { degree: p.degree().unwrap(), n });
    }
    if alpha.is_negative() || beta.is_some_and(|b| b < alpha) {
        return Err(SegreError::BadInterval {
            from: format_rational(alpha),
            to: beta.map(format_rational).unwrap_or_else(|| "inf".into()),
        });
    }
    if p.is_zero() {
        return Ok(RationalFunction::zero());
    }
    let lower = boundary_term(p, alpha, n);
    Ok(match beta {
        None => lower,
        Some(b) => &lower - &boundary_term(p, b, n),
    })
}

/// Sum of [`integrate_piece`] over the pieces of a fiber-volume function, with
/// no pole check.
pub fn density_integral_unchecked(vol: &PiecewisePolynomial, n: usize) -> Result<RationalFunction, SegreError> {
    let mut acc = RationalFunction::zero();
    for (lo, hi, p) in vol.intervals() {
        acc = &acc + &integrate_piece(p, &lo, hi.as_ref(), n)?;
    }
    Ok(acc)
}

/// Roots of the reduced denominator that are not `-1/d` for a listed degree.
pub fn spurious_poles(f: &RationalFunction, degrees: &[u32]) -> Vec<String> {
    let mut rest = f.den().clone();
    let mut ds: Vec<u32> = degrees.to_vec();
    ds.sort_unstable();
    ds.dedup();
    for &d in &ds {
        let factor = UniPoly::linear_unit(Rational::from_integer(d.into()));
        while rest.degree().unwrap_or(0) > 0 && factor.divides(&rest) {
            rest = rest.div_rem(&factor).0;
        }
    }
    if rest.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let (roots, residue) = rational_roots(&rest);
    let mut out: Vec<String> = roots.iter().map(|x| format!("t = {}", format_rational(x))).collect();
    if residue.degree().unwrap_or(0) > 0 {
        out.push(format!("irreducible factor {}", residue));
    }
    out
}

/// `(n+1) ∫_0^∞ Vol(s) t^{n+1} / (1+st)^{n+2} ds`, which is `1 - ζ(t)` for an
/// exact body. Poles other than `-1/d` for a generator degree `d` are an error.
pub fn density_integral(vol: &PiecewisePolynomial, n: usize, degrees: &[u32]) -> Result<RationalFunction, SegreError> {
    let f = density_integral_unchecked(vol, n)?;
    let bad = spurious_poles(&f, degrees);
    if !bad.is_empty() {
        return Err(SegreError::ResidualSpuriousPole { poles: bad.join(", "), denominator: f.den().to_string() });
    }
    Ok(f)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    // trial division is only attempted on small constants
    if n.bits() > 40 {
        return None;
    }
    let n = u64::try_from(&n).ok()?;
    let mut out = Vec::new();
    let mut k = 1u64;
    while k * k <= n {
        if n % k == 0 {
            out.push(BigInt::from(k));
            if k * k != n {
                out.push(BigInt::from(n / k));
            }
        }
        k += 1;
    }
    Some(out)
}

/// Rational roots (with multiplicity) by the rational root test, and the
/// cofactor left after dividing them out.
pub fn rational_roots(p: &UniPoly) -> (Vec<Rational>, UniPoly) {
    let mut rest = p.clone();
    let mut roots = Vec::new();
    while rest.degree().unwrap_or(0) > 0 && rest.coeff(0).is_zero() {
        roots.push(Rational::zero());
        rest = rest.div_rem(&UniPoly::monomial(Rational::one(), 1)).0;
    }
    while let Some(deg) = rest.degree().filter(|&d| d > 0) {
        let l = rest.coeffs().iter().fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        let ints: Vec<BigInt> = rest.coeffs().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(&ints[deg])) else {
            break;
        };
        let mut found = None;
        'search: for q in &qs {
            for p in &ps {
                for sign in [1, -1] {
                    let x = Rational::new(p * sign, q.clone());
                    if rest.eval(&x).is_zero() {
                        found = Some(x);
                        break 'search;
                    }
                }
            }
        }
        let Some(x) = found else {
            break;
        };
        rest = rest.div_rem(&UniPoly::new(vec![-x.clone(), Rational::one()])).0;
        roots.push(x);
    }
    roots.sort();
    (roots, rest)
}

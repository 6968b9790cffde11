//! Closed-form chromatic polynomials for the clique-graph families: the
//! clique-path product, Read's general ring-of-cliques formula, the reduced
//! ring formula with its "interesting factor", and the clique-theta formula
//! together with its deletion-contraction recurrence as an independent
//! second computation path.
//!
//! Every formula here is validated against the deletion-contraction oracle;
//! in debug builds each public entry point re-checks its own output on
//! small inputs. See FORMULA_NOTES.md for the transcription choices that
//! were fixed against the oracle.

use crate::graph::{build, CliqueThetaSpec, FamilySpec};
use crate::oracle::chromatic_poly_oracle;
use crate::poly::{
    binomial_poly, falling_factorial, falling_factorial_int, falling_factorial_shifted, IntPoly,
    PolyError, RatPoly,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("invalid spec for this formula: {0}")]
    InvalidSpec(String),
    /// A rational residue survived in a formula that must produce an
    /// integer polynomial; indicates a transcription bug, never swallowed.
    #[error("integrality violation in ring formula at degree {0}")]
    IntegralityViolation(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The possibly-non-linear factor of a family polynomial, tagged with the
/// spec it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterestingFactor {
    pub poly: IntPoly,
    pub provenance: FamilySpec,
}

impl InterestingFactor {
    pub fn of_ring(a: &[usize]) -> Result<Self, FormulaError> {
        if a.first() != Some(&1) {
            return Err(FormulaError::InvalidSpec("ring interesting factor needs a_1 = 1".into()));
        }
        Ok(Self {
            poly: interesting_factor_ring(&a[1..]),
            provenance: FamilySpec::RingOfCliques { a: a.to_vec() },
        })
    }

    pub fn of_clique_theta(spec: &CliqueThetaSpec) -> Result<Self, FormulaError> {
        Ok(Self {
            poly: interesting_factor_theta(spec)?,
            provenance: FamilySpec::CliqueTheta(spec.clone()),
        })
    }
}

fn check_positive(a: &[usize], what: &str) -> Result<(), FormulaError> {
    if a.is_empty() {
        return Err(FormulaError::InvalidSpec(format!("{what} must be nonempty")));
    }
    if a.contains(&0) {
        return Err(FormulaError::InvalidSpec(format!("{what} entries must be positive")));
    }
    Ok(())
}

#[cfg(debug_assertions)]
fn debug_check_oracle(poly: &IntPoly, spec: &FamilySpec) {
    if spec.n_vertices() <= 12 {
        let g = build(spec).expect("formula input built fine");
        let want = chromatic_poly_oracle(&g).expect("under oracle cap");
        assert_eq!(poly, &want, "closed form disagrees with oracle on {spec}");
    }
}

#[cfg(not(debug_assertions))]
fn debug_check_oracle(_poly: &IntPoly, _spec: &FamilySpec) {
    let _ = chromatic_poly_oracle;
    let _ = build;
}

/// Chromatic polynomial of the clique-path L(a_1,...,a_n):
/// prod (X)_{a_i + a_{i+1}} over consecutive pairs, divided by
/// prod (X)_{a_i} over the interior cliques.
pub fn clique_path_poly(a: &[usize]) -> Result<IntPoly, FormulaError> {
    check_positive(a, "clique-path sizes")?;
    let n = a.len();
    if n == 1 {
        return Ok(falling_factorial(a[0]));
    }
    let mut num = IntPoly::one();
    for w in a.windows(2) {
        num = num.mul(&falling_factorial(w[0] + w[1]));
    }
    let mut den = IntPoly::one();
    for &ai in &a[1..n - 1] {
        den = den.mul(&falling_factorial(ai));
    }
    let poly = num.div_exact(&den)?;
    debug_check_oracle(&poly, &FamilySpec::CliquePath { a: a.to_vec() });
    Ok(poly)
}

/// Interesting factor r(1, a_2, ..., a_n; X) of a ring of cliques with one
/// trivial clique; `tail` is (a_2, ..., a_n). The defining numerator
/// prod(X - a_i) - prod(-a_i) has zero constant term, so dividing by X is
/// exact.
pub fn interesting_factor_ring(tail: &[usize]) -> IntPoly {
    assert!(!tail.is_empty(), "interesting factor needs at least one clique size");
    let mut prod = IntPoly::one();
    let mut consts = BigInt::one();
    for &ai in tail {
        prod = prod.mul(&IntPoly::from_coeffs(vec![-(ai as i64), 1]));
        consts *= -BigInt::from(ai);
    }
    let num = prod.sub(&IntPoly::constant(consts));
    num.div_exact(&IntPoly::x()).expect("constant term cancels by construction")
}

/// Chromatic polynomial of R(1, a_2, ..., a_n) in the reduced product form:
/// X (X-1)_{a_{n-1}+a_n-1} prod_{i=2}^{n-2} (X-a_{i+1}-1)_{a_i-1} times the
/// interesting factor.
pub fn ring_reduced_poly(a: &[usize]) -> Result<IntPoly, FormulaError> {
    check_positive(a, "ring sizes")?;
    if a.len() < 3 {
        return Err(FormulaError::InvalidSpec("ring needs at least 3 cliques".into()));
    }
    if a[0] != 1 {
        return Err(FormulaError::InvalidSpec("reduced ring formula needs a_1 = 1".into()));
    }
    let n = a.len();
    let mut poly = IntPoly::x();
    poly = poly.mul(&falling_factorial_shifted(a[n - 2] + a[n - 1] - 1, &BigInt::one()));
    for i in 1..n - 2 {
        let shift = BigInt::from(a[i + 1] + 1);
        poly = poly.mul(&falling_factorial_shifted(a[i] - 1, &shift));
    }
    poly = poly.mul(&interesting_factor_ring(&a[1..]));
    debug_check_oracle(&poly, &FamilySpec::RingOfCliques { a: a.to_vec() });
    Ok(poly)
}

/// Binomial difference v_k(X) = C(X,k) - C(X,k-1), with C(X,-1) = 0.
fn binomial_difference(k: usize) -> RatPoly {
    match k {
        0 => RatPoly::one(),
        _ => binomial_poly(k).sub(&binomial_poly(k - 1)),
    }
}

/// Read's general ring-of-cliques formula, evaluated in exact rational
/// arithmetic and asserted integral.
///
/// The sum is computed over the common denominator prod_i (X)_{a_i+n}: the
/// 1/(X)_{a_i+k} tails become the shifted falling factorials
/// (X-a_i-k)_{n-k}. The sign is (-1)^{nk} applied to the positive products
/// (a_i)_k / (X)_{a_i+k}; carrying a per-factor negation instead flips the
/// result for odd n (see FORMULA_NOTES.md).
pub fn ring_general_poly(a: &[usize]) -> Result<IntPoly, FormulaError> {
    check_positive(a, "ring sizes")?;
    let n = a.len();
    if n < 3 {
        return Err(FormulaError::InvalidSpec("ring needs at least 3 cliques".into()));
    }
    let mut sum = RatPoly::zero();
    for k in 0..=n {
        let mut scalar = BigInt::one();
        for &ai in a {
            scalar *= falling_factorial_int(&BigInt::from(ai), k);
        }
        if scalar.is_zero() {
            continue;
        }
        if (n * k) % 2 == 1 {
            scalar = -scalar;
        }
        let mut tails = IntPoly::constant(scalar);
        for &ai in a {
            tails = tails.mul(&falling_factorial_shifted(n - k, &BigInt::from(ai + k)));
        }
        sum = sum.add(&binomial_difference(k).mul(&RatPoly::from(tails)));
    }
    let mut prefactor = IntPoly::one();
    for i in 0..n {
        prefactor = prefactor.mul(&falling_factorial(a[i] + a[(i + 1) % n]));
    }
    let mut denom = IntPoly::one();
    for &ai in a {
        denom = denom.mul(&falling_factorial(ai + n));
    }
    let quotient = RatPoly::from(prefactor).mul(&sum).div_exact(&RatPoly::from(denom))?;
    let poly = quotient.to_int_poly().map_err(|e| match e {
        PolyError::NotIntegral(d) => FormulaError::IntegralityViolation(d),
        other => FormulaError::Poly(other),
    })?;
    debug_check_oracle(&poly, &FamilySpec::RingOfCliques { a: a.to_vec() });
    Ok(poly)
}

fn require_trivial_extremal(spec: &CliqueThetaSpec) -> Result<(), FormulaError> {
    if spec.j != 1 {
        return Err(FormulaError::InvalidSpec(format!(
            "closed forms exist only for j = 1, got j = {}",
            spec.j
        )));
    }
    if spec.k == 0 || spec.paths.is_empty() {
        return Err(FormulaError::InvalidSpec("clique-theta needs k >= 1 and a path".into()));
    }
    for s in &spec.paths {
        check_positive(s, "clique-theta path sizes")?;
    }
    Ok(())
}

/// Non-linear factor of the chromatic polynomial of T(1, S_1..S_n, k):
/// k (X-k)^{n-1} prod_i r(1,S_i;X) + prod_i r(1,S_i,k;X).
///
/// Monic of degree sum |S_i|.
pub fn interesting_factor_theta(spec: &CliqueThetaSpec) -> Result<IntPoly, FormulaError> {
    require_trivial_extremal(spec)?;
    let n = spec.paths.len();
    let k = spec.k;
    let mut open = IntPoly::constant(BigInt::from(k));
    open = open.mul(&IntPoly::from_coeffs(vec![-(k as i64), 1]).pow(n - 1));
    let mut closed = IntPoly::one();
    for s in &spec.paths {
        open = open.mul(&interesting_factor_ring(s));
        let mut with_k = s.clone();
        with_k.push(k);
        closed = closed.mul(&interesting_factor_ring(&with_k));
    }
    Ok(open.add(&closed))
}

/// Product of the linear factors of the chromatic polynomial of
/// T(1, S_1..S_n, k).
fn clique_theta_prefactor(spec: &CliqueThetaSpec) -> IntPoly {
    let n = spec.paths.len();
    let k = spec.k;
    let last_path = &spec.paths[n - 1];
    let mut poly = falling_factorial(last_path[last_path.len() - 1] + k);
    for s in &spec.paths[..n - 1] {
        let shift = BigInt::from(k + 1);
        poly = poly.mul(&falling_factorial_shifted(s[s.len() - 1] - 1, &shift));
    }
    for s in &spec.paths {
        for l in 0..s.len() - 1 {
            let shift = BigInt::from(s[l + 1] + 1);
            poly = poly.mul(&falling_factorial_shifted(s[l] - 1, &shift));
        }
    }
    poly
}

/// Chromatic polynomial of the clique-theta graph T(1, S_1..S_n, k) by the
/// closed product formula.
pub fn clique_theta_poly(spec: &CliqueThetaSpec) -> Result<IntPoly, FormulaError> {
    require_trivial_extremal(spec)?;
    let poly = clique_theta_prefactor(spec).mul(&interesting_factor_theta(spec)?);
    debug_check_oracle(&poly, &FamilySpec::CliqueTheta(spec.clone()));
    Ok(poly)
}

/// Chromatic polynomial of T(1, S_1..S_n, k) by repeated deletion-
/// contraction along the first clique of a path, an independent second
/// computation path for the closed formula.
///
/// Each step trades the leading clique of one path for a clique-path
/// factor; once every S_i is a singleton the polynomial is the k-step
/// addition-contraction sum g(X) + k f(X) over the two clique-sum shapes.
pub fn clique_theta_poly_recursive(spec: &CliqueThetaSpec) -> Result<IntPoly, FormulaError> {
    require_trivial_extremal(spec)?;
    fn rec(paths: &[Vec<usize>], k: usize) -> Result<IntPoly, FormulaError> {
        if paths.is_empty() {
            // A lone endpoint vertex next to a detached k-clique.
            return Ok(IntPoly::x().mul(&falling_factorial(k)));
        }
        if let Some(idx) = paths.iter().position(|s| s.len() >= 2) {
            let s1 = &paths[idx];
            let (a11, a12) = (s1[0], s1[1]);
            let mut rest: Vec<Vec<usize>> = paths.to_vec();
            rest.remove(idx);
            let mut l_spec = s1.clone();
            l_spec.push(k);
            let term1 = rec(&rest, k)?
                .mul(&clique_path_poly(&l_spec)?)
                .div_exact(&falling_factorial(k))?;
            let mut shortened = paths.to_vec();
            shortened[idx] = s1[1..].to_vec();
            let term2 = falling_factorial(a11 + a12)
                .mul(&rec(&shortened, k)?)
                .scale(&BigInt::from(a11))
                .div_exact(&falling_factorial(a12 + 1))?;
            return Ok(term1.sub(&term2));
        }
        // Base case: every path is a single clique around the endpoint.
        let n = paths.len();
        let mut f_num = IntPoly::one();
        let mut g_num = IntPoly::one();
        for s in paths {
            f_num = f_num.mul(&falling_factorial(s[0] + k));
            g_num = g_num.mul(&falling_factorial(s[0] + k + 1));
        }
        let f = f_num.div_exact(&falling_factorial(k).pow(n - 1))?;
        let g = g_num.div_exact(&falling_factorial(k + 1).pow(n - 1))?;
        Ok(g.add(&f.scale(&BigInt::from(k))))
    }
    rec(&spec.paths, spec.k)
}

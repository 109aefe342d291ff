//! Polynomial roots by Aberth–Ehrlich iteration and bottleneck matching of
//! root sets.

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::StandardPolynomial;

const MAX_ITERATIONS: usize = 200;
/// Per-root residual allowed on the unit-scaled polynomial.
const RESIDUAL_TOL: f64 = 1e-8;
/// Exhaustive permutation search is used up to this many roots.
const EXHAUSTIVE_MAX: usize = 8;

/// Roots of a polynomial, counted with multiplicity, sorted by real then
/// imaginary part.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub iterations: usize,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &ck in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + ck;
    }
    (p, dp)
}

/// |p(z)| on the unit-scaled polynomial, relative to max(1, |z|)^n.
fn scaled_residual(c: &[f64], z: Complex64) -> f64 {
    let norm = c.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let n = (c.len() - 1) as i32;
    horner(c, z).0.norm() / norm / z.norm().max(1.0).powi(n)
}

/// All complex roots of `p`. Constants (and the zero polynomial) have none.
pub fn find_roots(p: &StandardPolynomial) -> Result<RootSet> {
    let c = p.to_f64_vec();
    if c.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain("polynomial has non-finite coefficients".into()));
    }
    let n = match p.degree() {
        None | Some(0) => return Ok(RootSet { roots: vec![], iterations: 0 }),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(RootSet {
            roots: vec![Complex64::new(-c[0] / c[1], 0.0)],
            iterations: 0,
        });
    }
    let lead = c[n];
    let monic: Vec<f64> = c.iter().map(|v| v / lead).collect();

    let radius = (0..n)
        .filter(|&k| monic[k] != 0.0)
        .map(|k| monic[k].abs().powf(1.0 / (n - k) as f64))
        .fold(0.0_f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let mut z: Vec<Complex64> = (0..n)
        .map(|j| Complex64::from_polar(radius, std::f64::consts::TAU * j as f64 / n as f64 + 0.4))
        .collect();

    let mut iterations = 0;
    let mut converged = vec![false; n];
    while iterations < MAX_ITERATIONS && converged.iter().any(|&done| !done) {
        iterations += 1;
        for i in 0..n {
            if converged[i] {
                continue;
            }
            let (pv, dpv) = horner(&monic, z[i]);
            if pv.norm() == 0.0 {
                converged[i] = true;
                continue;
            }
            let newton = pv / dpv;
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = newton / (Complex64::new(1.0, 0.0) - newton * repulsion);
            if !step.is_finite() {
                continue;
            }
            z[i] -= step;
            if step.norm() <= 4.0 * f64::EPSILON * z[i].norm().max(f64::MIN_POSITIVE) {
                converged[i] = true;
            }
        }
    }

    let worst = z.iter().map(|&r| scaled_residual(&c, r)).fold(0.0_f64, f64::max);
    if !(worst <= RESIDUAL_TOL) {
        return Err(Error::NoConvergence {
            iterations,
            worst_residual: worst,
        });
    }
    for r in &mut z {
        if r.im.abs() <= 1e-12 * r.norm().max(1.0) {
            r.im = 0.0;
        }
    }
    z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(RootSet { roots: z, iterations })
}

/// min over bijections of the largest |f_i − g_σ(i)|.
pub fn root_match(f: &RootSet, g: &RootSet) -> Result<f64> {
    if f.len() != g.len() {
        return Err(Error::DegreeMismatch(f.len(), g.len()));
    }
    if f.len() <= EXHAUSTIVE_MAX {
        Ok(exhaustive_match(&f.roots, &g.roots))
    } else {
        Ok(bottleneck_match(&f.roots, &g.roots))
    }
}

/// Bottleneck distance by trying every permutation (Heap's algorithm).
pub fn exhaustive_match(f: &[Complex64], g: &[Complex64]) -> f64 {
    assert_eq!(f.len(), g.len());
    let n = f.len();
    if n == 0 {
        return 0.0;
    }
    let cost = |perm: &[usize]| (0..n).map(|i| (f[i] - g[perm[i]]).norm()).fold(0.0, f64::max);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = cost(&perm);
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(cost(&perm));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// Bottleneck distance by binary search over the candidate distances with a
/// bipartite perfect-matching test (Kuhn's augmenting paths).
pub fn bottleneck_match(f: &[Complex64], g: &[Complex64]) -> f64 {
    assert_eq!(f.len(), g.len());
    let n = f.len();
    if n == 0 {
        return 0.0;
    }
    let dist: Vec<Vec<f64>> = f.iter().map(|a| g.iter().map(|b| (a - b).norm()).collect()).collect();
    let mut candidates: Vec<f64> = dist.iter().flatten().copied().collect();
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();
    let (mut lo, mut hi) = (0, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if perfect_matching(&dist, candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    candidates[lo]
}

fn perfect_matching(dist: &[Vec<f64>], limit: f64) -> bool {
    let n = dist.len();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    fn augment(u: usize, dist: &[Vec<f64>], limit: f64, seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for v in 0..dist.len() {
            if dist[u][v] <= limit && !seen[v] {
                seen[v] = true;
                if owner[v].is_none_or(|w| augment(w, dist, limit, seen, owner)) {
                    owner[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }
    (0..n).all(|u| augment(u, dist, limit, &mut vec![false; n], &mut owner))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn simple_roots() {
        let r = find_roots(&StandardPolynomial::from_ints(&[-1, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r.roots[0] - c(-1.0, 0.0)).norm() < 1e-14);
        assert!((r.roots[1] - c(1.0, 0.0)).norm() < 1e-14);

        let l2 = StandardPolynomial::new(vec![Scalar::one(), Scalar::int(-2), Scalar::ratio(1, 2)]);
        let r = find_roots(&l2).unwrap();
        let s2 = std::f64::consts::SQRT_2;
        assert!((r.roots[0].re - (2.0 - s2)).abs() < 1e-14);
        assert!((r.roots[1].re - (2.0 + s2)).abs() < 1e-14);

        assert!(find_roots(&StandardPolynomial::from_ints(&[3])).unwrap().is_empty());
        assert!(find_roots(&StandardPolynomial::zero()).unwrap().is_empty());
        let lin = find_roots(&StandardPolynomial::from_ints(&[3, 2])).unwrap();
        assert_eq!(lin.roots, vec![c(-1.5, 0.0)]);
    }

    #[test]
    fn complex_and_multiple_roots() {
        // x² + 1
        let r = find_roots(&StandardPolynomial::from_ints(&[1, 0, 1])).unwrap();
        assert!((r.roots[0] - c(0.0, -1.0)).norm() < 1e-14);
        assert!((r.roots[1] - c(0.0, 1.0)).norm() < 1e-14);
        // x²: double root at zero
        let r = find_roots(&StandardPolynomial::monomial(2)).unwrap();
        assert!(r.roots.iter().all(|z| z.norm() < 1e-6));
        // (x − 1)³
        let r = find_roots(&StandardPolynomial::from_ints(&[-1, 3, -3, 1])).unwrap();
        assert!(r.roots.iter().all(|z| (z - c(1.0, 0.0)).norm() < 1e-4));
    }

    #[test]
    fn roots_reconstruct_random_polynomials() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=10);
            let coeffs: Vec<Scalar> = (0..=n).map(|_| Scalar::float(rng.gen_range(-2.0..2.0))).collect();
            let p = StandardPolynomial::new(coeffs);
            let r = find_roots(&p).unwrap();
            assert_eq!(r.len(), p.degree().unwrap());
            for z in &r.roots {
                assert!(scaled_residual(&p.to_f64_vec(), *z) <= RESIDUAL_TOL);
            }
        }
    }

    #[test]
    fn matching_examples() {
        let a = [c(1.0, 0.0), c(-1.0, 0.0)];
        let z = [c(0.0, 0.0), c(0.0, 0.0)];
        assert_eq!(exhaustive_match(&a, &a), 0.0);
        assert_eq!(exhaustive_match(&a, &z), 1.0);
        assert_eq!(exhaustive_match(&[c(1.0, 1.0)], &[c(4.0, 5.0)]), 5.0);
        // the identity pairing is not optimal here
        let f = [c(0.0, 0.0), c(10.0, 0.0)];
        let g = [c(9.0, 0.0), c(1.0, 0.0)];
        assert_eq!(exhaustive_match(&f, &g), 1.0);
        assert_eq!(bottleneck_match(&f, &g), 1.0);
    }

    #[test]
    fn bottleneck_agrees_with_exhaustive() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=7);
            let mut pts = || (0..n).map(|_| c(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0))).collect::<Vec<_>>();
            let (f, g) = (pts(), pts());
            assert_eq!(exhaustive_match(&f, &g), bottleneck_match(&f, &g));
        }
    }

    #[test]
    fn root_match_requires_equal_sizes() {
        let a = RootSet { roots: vec![c(0.0, 0.0)], iterations: 0 };
        let b = RootSet { roots: vec![], iterations: 0 };
        assert!(matches!(root_match(&a, &b), Err(Error::DegreeMismatch(1, 0))));
    }
}

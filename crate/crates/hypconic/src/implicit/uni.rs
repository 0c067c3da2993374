//! Univariate polynomials with Sturm-sequence real-root isolation.
//!
//! The chain is the signed polynomial remainder sequence; it is run down to
//! the (numerical) gcd, so sign-variation counts give the number of distinct
//! real roots in a half-open interval even for non-squarefree inputs.
//! Isolated roots are then refined by count-halving bisection, which also
//! converges on even-multiplicity roots where value-sign bisection stalls.

/// Coefficients low-to-high: `coeffs[k]` is the coefficient of `x^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly {
    coeffs: Vec<f64>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::new(Vec::new());
        }
        Self::new(self.coeffs[1..].iter().enumerate().map(|(k, c)| c * (k + 1) as f64).collect())
    }

    fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()))
    }

    /// Drops coefficients below `rel * max_abs` and rescales to max-abs 1.
    fn cleaned(&self, rel: f64) -> Self {
        let m = self.max_abs();
        if m == 0.0 {
            return Self::new(Vec::new());
        }
        Self::new(self.coeffs.iter().map(|c| if c.abs() < rel * m { 0.0 } else { c / m }).collect())
    }

    /// Remainder of `self / div` (both assumed trimmed, `div` nonzero).
    fn rem(&self, div: &Self) -> Self {
        let mut r = self.coeffs.clone();
        let d = div.coeffs.len();
        let lead = div.coeffs[d - 1];
        while r.len() >= d && !r.is_empty() {
            let k = r.len() - d;
            let q = r[r.len() - 1] / lead;
            for (i, c) in div.coeffs.iter().enumerate() {
                r[k + i] -= q * c;
            }
            r.pop();
            while r.last().is_some_and(|c| c.abs() < 1e-14) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Cauchy bound: all real roots lie in `(-b, b]`.
    pub fn root_bound(&self) -> f64 {
        if self.coeffs.len() <= 1 {
            return 1.0;
        }
        let lead = self.coeffs.last().unwrap().abs();
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .fold(0.0f64, |acc, c| acc.max(c.abs()));
        1.0 + m / lead
    }
}

/// Sturm chain with count-based root isolation.
pub struct SturmChain {
    chain: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Self {
        let p0 = p.cleaned(1e-13);
        if p0.is_zero() || p0.degree() == 0 {
            return Self { chain: vec![p0] };
        }
        let mut chain = vec![p0.clone(), p0.derivative().cleaned(0.0)];
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            let r = r.cleaned(1e-12);
            if r.is_zero() {
                break;
            }
            let neg = UniPoly::new(r.coeffs.iter().map(|c| -c).collect());
            chain.push(neg);
            if chain.last().unwrap().degree() == 0 {
                break;
            }
        }
        Self { chain }
    }

    fn sign_variations(&self, x: f64) -> Option<usize> {
        let mut count = 0;
        let mut prev = 0.0f64;
        let mut any = false;
        for p in &self.chain {
            let v = p.eval(x);
            if v == 0.0 {
                continue;
            }
            any = true;
            if prev != 0.0 && (v < 0.0) != (prev < 0.0) {
                count += 1;
            }
            prev = v;
        }
        // a common factor of the whole chain vanished here (multiple root):
        // the count is undefined at this exact point
        any.then_some(count)
    }

    /// Sign variations at `x`, nudged off chain zeros toward `x + scale`.
    fn variations_near(&self, x: f64, scale: f64) -> usize {
        for k in 0..8 {
            let probe = x + scale * k as f64 * 1e-12;
            if let Some(v) = self.sign_variations(probe) {
                return v;
            }
        }
        0
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_roots(&self, a: f64, b: f64) -> usize {
        let span = (b - a).abs().max(1e-9);
        let va = self.variations_near(a, span);
        let vb = self.variations_near(b, span);
        va.saturating_sub(vb)
    }

    /// Half-open intervals `(lo, hi]`, each containing exactly one distinct
    /// root of the original polynomial in `(a, b]`.
    pub fn isolate(&self, a: f64, b: f64) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        let mut stack = vec![(a, b)];
        while let Some((lo, hi)) = stack.pop() {
            match self.count_roots(lo, hi) {
                0 => {}
                1 => out.push((lo, hi)),
                _ => {
                    if hi - lo < 1e-13 * (1.0 + hi.abs()) {
                        // cluster below resolution: report once
                        out.push((lo, hi));
                        continue;
                    }
                    let mid = 0.5 * (lo + hi);
                    stack.push((mid, hi));
                    stack.push((lo, mid));
                }
            }
        }
        out.sort_by(|p, q| p.0.total_cmp(&q.0));
        out
    }

    /// Refines an isolating interval by count-halving bisection.
    pub fn refine(&self, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
        for _ in 0..200 {
            if hi - lo < tol {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_roots(lo, mid) >= 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }
}

/// All distinct real roots of `p` in `(a, b]`, refined to absolute
/// tolerance `tol`. Exact zero roots (all-zero low coefficients) are
/// deflated first so chain evaluations never land on a common factor.
pub fn real_roots_in(p: &UniPoly, a: f64, b: f64, tol: f64) -> Vec<f64> {
    if p.is_zero() || p.degree() == 0 {
        return Vec::new();
    }
    let zero_mult = p.coeffs.iter().take_while(|c| **c == 0.0).count();
    if zero_mult > 0 {
        let deflated = UniPoly::new(p.coeffs[zero_mult..].to_vec());
        let mut roots = real_roots_in(&deflated, a, b, tol);
        if a < 0.0 && b >= 0.0 && !roots.iter().any(|r| r.abs() < tol) {
            roots.push(0.0);
            roots.sort_by(f64::total_cmp);
        }
        return roots;
    }
    let chain = SturmChain::new(p);
    chain.isolate(a, b).into_iter().map(|(lo, hi)| chain.refine(lo, hi, tol)).collect()
}

/// All distinct real roots of `p`, using the Cauchy bound as the search box.
pub fn real_roots(p: &UniPoly, tol: f64) -> Vec<f64> {
    let b = p.root_bound();
    real_roots_in(p, -b, b, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn quadratic_roots() {
        // x^2 - 2
        let p = UniPoly::new(vec![-2.0, 0.0, 1.0]);
        let roots = real_roots(&p, 1e-13);
        assert_eq!(roots.len(), 2);
        assert_relative_eq!(roots[0], -(2.0f64.sqrt()), epsilon = 1e-12);
        assert_relative_eq!(roots[1], 2.0f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn double_root_is_found_once() {
        // x^2 (x - 1): distinct roots {0, 1}, 0 with multiplicity 2
        let p = UniPoly::new(vec![0.0, 0.0, -1.0, 1.0]);
        let roots = real_roots(&p, 1e-13);
        assert_eq!(roots.len(), 2);
        assert!(roots[0].abs() < 1e-12);
        assert_relative_eq!(roots[1], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn no_real_roots() {
        let p = UniPoly::new(vec![1.0, 0.0, 1.0]); // x^2 + 1
        assert!(real_roots(&p, 1e-13).is_empty());
    }

    #[test]
    fn wilkinson_like_spread() {
        // (x - 1)(x - 2)(x - 3)(x - 4)
        let p = UniPoly::new(vec![24.0, -50.0, 35.0, -10.0, 1.0]);
        let roots = real_roots(&p, 1e-12);
        assert_eq!(roots.len(), 4);
        for (r, expect) in roots.iter().zip([1.0, 2.0, 3.0, 4.0]) {
            assert_relative_eq!(*r, expect, epsilon = 1e-10);
        }
    }

    #[test]
    fn count_in_interval() {
        let p = UniPoly::new(vec![0.0, -1.0, 0.0, 1.0]); // x^3 - x
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots(-2.0, 2.0), 3);
        assert_eq!(chain.count_roots(0.5, 2.0), 1);
        assert_eq!(chain.count_roots(-0.5, 0.5), 1);
    }
}

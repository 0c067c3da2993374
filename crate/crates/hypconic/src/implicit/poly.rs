//! Dense bivariate real polynomials.

use super::uni::UniPoly;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A polynomial in `(x, y)` stored as dense rows: `coeffs[i][j]` is the
/// coefficient of `x^i y^j`. Trailing zero entries and rows are trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct BivarPoly {
    coeffs: Vec<Vec<f64>>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self::from_coeffs(vec![vec![c]])
    }

    /// `c * x^i y^j`.
    pub fn monomial(i: usize, j: usize, c: f64) -> Self {
        let mut rows = vec![vec![0.0; j + 1]; i + 1];
        rows[i][j] = c;
        Self::from_coeffs(rows)
    }

    pub fn from_coeffs(coeffs: Vec<Vec<f64>>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        for row in &mut self.coeffs {
            while row.last().is_some_and(|c| *c == 0.0) {
                row.pop();
            }
        }
        while self.coeffs.last().is_some_and(|r| r.is_empty()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Vec<f64>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> f64 {
        self.coeffs.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Total degree (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        let mut d = 0;
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if *c != 0.0 {
                    d = d.max(i + j);
                }
            }
        }
        d
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs
            .iter()
            .flat_map(|r| r.iter())
            .fold(0.0f64, |m, c| m.max(c.abs()))
    }

    /// Horner evaluation, inner in y then outer in x.
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let mut acc = 0.0;
        for row in self.coeffs.iter().rev() {
            let mut ry = 0.0;
            for c in row.iter().rev() {
                ry = ry * y + c;
            }
            acc = acc * x + ry;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let ni = self.coeffs.len().max(other.coeffs.len());
        let mut rows = Vec::with_capacity(ni);
        for i in 0..ni {
            let a = self.coeffs.get(i).map(|r| r.as_slice()).unwrap_or(&[]);
            let b = other.coeffs.get(i).map(|r| r.as_slice()).unwrap_or(&[]);
            let nj = a.len().max(b.len());
            let mut row = vec![0.0; nj];
            for (j, item) in row.iter_mut().enumerate() {
                *item = a.get(j).copied().unwrap_or(0.0) + b.get(j).copied().unwrap_or(0.0);
            }
            rows.push(row);
        }
        Self::from_coeffs(rows)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().map(|r| r.iter().map(|c| c * s).collect()).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let ni = self.coeffs.len() + other.coeffs.len() - 1;
        let nj = self.coeffs.iter().map(|r| r.len()).max().unwrap_or(1)
            + other.coeffs.iter().map(|r| r.len()).max().unwrap_or(1);
        let mut rows = vec![vec![0.0; nj]; ni];
        for (i1, r1) in self.coeffs.iter().enumerate() {
            for (j1, c1) in r1.iter().enumerate() {
                if *c1 == 0.0 {
                    continue;
                }
                for (i2, r2) in other.coeffs.iter().enumerate() {
                    for (j2, c2) in r2.iter().enumerate() {
                        rows[i1 + i2][j1 + j2] += c1 * c2;
                    }
                }
            }
        }
        Self::from_coeffs(rows)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn partial_x(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let rows = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(k, row)| row.iter().map(|c| c * (k + 1) as f64).collect())
            .collect();
        Self::from_coeffs(rows)
    }

    pub fn partial_y(&self) -> Self {
        let rows = self
            .coeffs
            .iter()
            .map(|row| {
                if row.len() <= 1 {
                    Vec::new()
                } else {
                    row[1..].iter().enumerate().map(|(k, c)| c * (k + 1) as f64).collect()
                }
            })
            .collect();
        Self::from_coeffs(rows)
    }

    /// Univariate restriction `x -> p(x, y0)` (coefficients of powers of x).
    pub fn slice_at_y(&self, y0: f64) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|row| {
                let mut acc = 0.0;
                for c in row.iter().rev() {
                    acc = acc * y0 + c;
                }
                acc
            })
            .collect();
        UniPoly::new(coeffs)
    }

    /// Univariate restriction `y -> p(x0, y)`.
    pub fn slice_at_x(&self, x0: f64) -> UniPoly {
        let nj = self.coeffs.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut coeffs = vec![0.0; nj];
        let mut xp = 1.0;
        for row in &self.coeffs {
            for (j, c) in row.iter().enumerate() {
                coeffs[j] += c * xp;
            }
            xp *= x0;
        }
        UniPoly::new(coeffs)
    }

    /// Divides by `y^2` if every term allows it.
    pub fn try_divide_y2(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        for row in &self.coeffs {
            if row.first().is_some_and(|c| *c != 0.0) || row.get(1).is_some_and(|c| *c != 0.0) {
                return None;
            }
        }
        let rows = self
            .coeffs
            .iter()
            .map(|row| if row.len() >= 2 { row[2..].to_vec() } else { Vec::new() })
            .collect();
        Some(Self::from_coeffs(rows))
    }

    /// Drops coefficients below `rel_tol * max_abs_coeff` (used to clear
    /// cancellation residue after radical elimination).
    pub fn chop(&self, rel_tol: f64) -> Self {
        let cut = self.max_abs_coeff() * rel_tol;
        Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|r| r.iter().map(|c| if c.abs() <= cut { 0.0 } else { *c }).collect())
                .collect(),
        )
    }

    /// Scales so the largest-magnitude coefficient is +1 (sign anchored at
    /// the lexicographically first coefficient of largest magnitude).
    pub fn normalized(&self) -> Self {
        let m = self.max_abs_coeff();
        if m == 0.0 {
            return self.clone();
        }
        let mut anchor = 1.0;
        'outer: for row in &self.coeffs {
            for c in row {
                if c.abs() == m {
                    anchor = *c;
                    break 'outer;
                }
            }
        }
        self.scale(1.0 / anchor)
    }

    /// Largest coefficient difference between the normalized forms of `self`
    /// and `other`; near zero when the two are proportional.
    pub fn proportional_distance(&self, other: &Self) -> f64 {
        let a = self.normalized();
        let b = other.normalized();
        let d = a.sub(&b);
        let d2 = a.add(&b); // in case the sign anchors disagree
        d.max_abs_coeff().min(d2.max_abs_coeff())
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    degree: usize,
    rows: Vec<Vec<f64>>,
}

impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        Wire { degree: self.degree(), rows: self.coeffs.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivarPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(deserializer)?;
        let p = BivarPoly::from_coeffs(w.rows);
        if p.degree() != w.degree {
            return Err(D::Error::custom("declared degree does not match rows"));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn zero_evaluates_to_zero() {
        assert_eq!(BivarPoly::zero().eval(3.1, -2.7), 0.0);
    }

    #[test]
    fn circle_limit_quartic_vanishes_at_known_points() {
        // (x^2 - y^2 + 1)^2 + 4 x^2 y^2 - 4 r^2 with r = 1/4 vanishes at
        // (0, sqrt(3/2))
        let x2 = BivarPoly::monomial(2, 0, 1.0);
        let y2 = BivarPoly::monomial(0, 2, 1.0);
        let one = BivarPoly::constant(1.0);
        let p = x2.sub(&y2).add(&one).square().add(&x2.mul(&y2).scale(4.0)).sub(
            &BivarPoly::constant(4.0 * 0.25 * 0.25),
        );
        assert!(p.eval(0.0, (1.5f64).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn horner_matches_term_by_term_oracle() {
        // brute-force evaluation oracle: sum c_ij x^i y^j with powi
        let p = BivarPoly::from_coeffs(vec![
            vec![0.3, -1.1, 2.0, 0.07],
            vec![4.5, 0.0, -3.3],
            vec![0.0, 9.1, 0.2, -0.8, 1.5],
            vec![-2.2],
        ]);
        let oracle = |x: f64, y: f64| {
            let mut s = 0.0;
            for (i, row) in p.coeffs().iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    s += c * x.powi(i as i32) * y.powi(j as i32);
                }
            }
            s
        };
        for (x, y) in [(0.5, -0.25), (3.0, 2.0), (-7.5, 9.9), (10.0, -10.0)] {
            let a = p.eval(x, y);
            let b = oracle(x, y);
            assert_relative_eq!(a, b, max_relative = 1e-13);
        }
    }

    #[test]
    fn arithmetic_and_partials() {
        let p = BivarPoly::monomial(2, 1, 3.0); // 3 x^2 y
        let q = p.partial_x(); // 6 x y
        assert_eq!(q.coeff(1, 1), 6.0);
        let q = p.partial_y(); // 3 x^2
        assert_eq!(q.coeff(2, 0), 3.0);
        let r = p.mul(&p);
        assert_eq!(r.coeff(4, 2), 9.0);
        assert_eq!(r.degree(), 6);
    }

    #[test]
    fn divide_by_y2() {
        let p = BivarPoly::monomial(1, 2, 2.0).add(&BivarPoly::monomial(0, 4, -1.0));
        let q = p.try_divide_y2().unwrap();
        assert_eq!(q.coeff(1, 0), 2.0);
        assert_eq!(q.coeff(0, 2), -1.0);
        assert!(BivarPoly::monomial(1, 1, 1.0).try_divide_y2().is_none());
    }

    #[test]
    fn slices() {
        let p = BivarPoly::from_coeffs(vec![vec![1.0, 2.0], vec![0.0, 0.0, 3.0]]);
        // p = 1 + 2y + 3 x y^2
        let sx = p.slice_at_y(2.0); // 5 + 12 x
        assert_relative_eq!(sx.eval(1.0), 17.0);
        let sy = p.slice_at_x(1.0); // 1 + 2y + 3y^2
        assert_relative_eq!(sy.eval(2.0), 17.0);
    }

    #[test]
    fn proportionality() {
        let p = BivarPoly::from_coeffs(vec![vec![2.0, -4.0], vec![6.0]]);
        let q = p.scale(-0.37);
        assert!(p.proportional_distance(&q) < 1e-15);
        let r = p.add(&BivarPoly::constant(0.5));
        assert!(p.proportional_distance(&r) > 1e-3);
    }

    #[test]
    fn serde_round_trip() {
        let p = BivarPoly::from_coeffs(vec![vec![1.5, 0.0, 2.0], vec![-0.25]]);
        let s = serde_json::to_string(&p).unwrap();
        let q: BivarPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
    }
}

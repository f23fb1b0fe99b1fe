//! Exact univariate polynomials and rational functions over the rationals,
//! with Sturm-chain root counting. Degrees stay tiny here, so everything is
//! dense and allocation-happy by design.

use num::{One, Signed, Zero};

use crate::rational::{q, q_str, Q};

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
/// The empty vector is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly(Vec<Q>);

impl UPoly {
    pub fn zero() -> UPoly {
        UPoly(Vec::new())
    }

    pub fn constant(c: Q) -> UPoly {
        UPoly::from_coeffs(vec![c])
    }

    pub fn one() -> UPoly {
        UPoly::constant(q(1))
    }

    /// `c * x^k`.
    pub fn monomial(c: Q, k: usize) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![q(0); k + 1];
        v[k] = c;
        UPoly(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Q>) -> UPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Q> {
        self.0.last()
    }

    /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.0
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = q(0);
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![q(0); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            v[i] += c;
        }
        UPoly::from_coeffs(v)
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![q(0); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(v)
    }

    pub fn scale(&self, c: &Q) -> UPoly {
        UPoly::from_coeffs(self.0.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quo = vec![q(0); self.0.len().saturating_sub(d.0.len() - 1)];
        let dl = d.leading().expect("nonzero").clone();
        while !rem.is_zero() && rem.0.len() >= d.0.len() {
            let shift = rem.0.len() - d.0.len();
            let c = rem.leading().expect("nonzero") / &dl;
            quo[shift] = c.clone();
            rem = rem.sub(&d.mul(&UPoly::monomial(c, shift)));
        }
        (UPoly::from_coeffs(quo), rem)
    }

    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Leading coefficient scaled to 1 (zero stays zero).
    pub fn monic(&self) -> UPoly {
        match self.leading() {
            None => UPoly::zero(),
            Some(l) => self.scale(&(q(1) / l)),
        }
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut content: Option<Q> = None;
        for c in &self.0 {
            if c.is_zero() {
                continue;
            }
            content = Some(match content {
                None => c.abs(),
                Some(g) => {
                    // gcd of rationals: gcd of numerators over lcm of denoms.
                    let gn = num::integer::gcd(g.numer().clone(), c.numer().abs());
                    let gd = num::integer::lcm(g.denom().clone(), c.denom().clone());
                    Q::new(gn, gd)
                }
            });
        }
        let content = content.expect("nonzero poly has content");
        let mut out = self.scale(&(q(1) / content));
        if out.leading().is_some_and(|l| l.is_negative()) {
            out = out.neg();
        }
        out
    }

    pub fn derivative(&self) -> UPoly {
        if self.0.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::from_coeffs(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * q(i as i64))
                .collect(),
        )
    }

    /// Divides by `x^k`; the valuation must be at least `k`.
    pub fn shift_down(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        assert!(self.valuation() >= k, "insufficient valuation");
        UPoly::from_coeffs(self.0[k..].to_vec())
    }

    /// Squarefree part `p / gcd(p, p')`.
    pub fn squarefree(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.divrem(&g).0.monic()
    }

    /// Number of distinct real roots in the open interval `(a, b)` by Sturm's
    /// theorem. Neither endpoint may be a root.
    pub fn count_roots_in(&self, a: &Q, b: &Q) -> usize {
        assert!(a < b);
        let p = self.squarefree();
        if p.degree().unwrap_or(0) == 0 {
            return 0;
        }
        assert!(!p.eval(a).is_zero() && !p.eval(b).is_zero(), "endpoint root");
        let mut chain = vec![p.clone(), p.derivative()];
        while !chain.last().expect("non-empty").is_zero() {
            let n = chain.len();
            let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
            chain.push(r.neg());
        }
        chain.pop();
        let variations = |x: &Q| -> usize {
            let signs: Vec<i8> = chain
                .iter()
                .map(|p| {
                    let v = p.eval(x);
                    if v.is_zero() {
                        0
                    } else if v.is_positive() {
                        1
                    } else {
                        -1
                    }
                })
                .filter(|s| *s != 0)
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        variations(a) - variations(b)
    }

    /// Cauchy bound: every real root has absolute value below the result.
    pub fn root_bound(&self) -> Q {
        match self.leading() {
            None => q(1),
            Some(l) => {
                let mut m = q(0);
                for c in &self.0 {
                    let a = (c / l).abs();
                    if a > m {
                        m = a;
                    }
                }
                m + q(1)
            }
        }
    }

    /// Number of distinct roots in `(0, ∞)`. Requires a nonzero value at 0;
    /// strip the `x^k` factor first.
    pub fn count_positive_roots(&self) -> usize {
        assert!(!self.is_zero());
        assert!(!self.eval(&q(0)).is_zero(), "strip the zero root first");
        if self.degree() == Some(0) {
            return 0;
        }
        let bound = self.root_bound();
        self.count_roots_in(&q(0), &bound)
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = if (c.is_one() || (-c).is_one()) && i > 0 {
                if c.is_one() {
                    String::new()
                } else {
                    "-".to_string()
                }
            } else {
                format!("{}", q_str(c))
            };
            let body = match i {
                0 => coeff,
                1 if coeff.is_empty() || coeff == "-" => format!("{coeff}{var}"),
                1 => format!("{coeff}*{var}"),
                _ if coeff.is_empty() || coeff == "-" => format!("{coeff}{var}^{i}"),
                _ => format!("{coeff}*{var}^{i}"),
            };
            parts.push(body);
        }
        let mut out = String::new();
        for (k, p) in parts.iter().enumerate() {
            if k == 0 {
                out.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }

    pub fn coeffs_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.0.iter().map(crate::rational::q_json).collect())
    }
}

/// Quotient of two polynomials, kept reduced with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn new(num: UPoly, den: UPoly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: UPoly::zero(),
                den: UPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.divrem(&g).0, den.divrem(&g).0)
        } else {
            (num, den)
        };
        let lead = den.leading().expect("nonzero").clone();
        RatFunc {
            num: num.scale(&(q(1) / &lead)),
            den: den.scale(&(q(1) / &lead)),
        }
    }

    pub fn from_poly(p: UPoly) -> RatFunc {
        RatFunc::new(p, UPoly::one())
    }

    pub fn constant(c: Q) -> RatFunc {
        RatFunc::from_poly(UPoly::constant(c))
    }

    pub fn zero() -> RatFunc {
        RatFunc::from_poly(UPoly::zero())
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(UPoly::one())
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &RatFunc) -> RatFunc {
        assert!(!other.is_zero(), "division by zero rational function");
        RatFunc::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        let mut out = RatFunc::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Order of vanishing at 0 (negative for a pole).
    pub fn lambda_valuation(&self) -> i64 {
        assert!(!self.is_zero());
        self.num.valuation() as i64 - self.den.valuation() as i64
    }

    /// Multiplies by `x^(-k)` (use a negative `k` to multiply by `x^|k|`).
    pub fn shift_down(&self, k: i64) -> RatFunc {
        if k >= 0 {
            RatFunc::new(self.num.clone(), self.den.mul(&UPoly::monomial(q(1), k as usize)))
        } else {
            RatFunc::new(
                self.num.mul(&UPoly::monomial(q(1), (-k) as usize)),
                self.den.clone(),
            )
        }
    }

    /// `Some((c, k))` when the function is exactly `c * x^k` with `k ∈ ℤ`.
    pub fn as_monomial(&self) -> Option<(Q, i64)> {
        let single = |p: &UPoly| -> Option<(Q, usize)> {
            let d = p.degree()?;
            if p.coeffs().iter().take(d).all(|c| c.is_zero()) {
                Some((p.leading().expect("nonzero").clone(), d))
            } else {
                None
            }
        };
        let (cn, kn) = single(&self.num)?;
        let (cd, kd) = single(&self.den)?;
        Some((cn / cd, kn as i64 - kd as i64))
    }

    pub fn render(&self, var: &str) -> String {
        if self.den == UPoly::one() {
            self.num.render(var)
        } else {
            format!("({}) / ({})", self.num.render(var), self.den.render(var))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_ratio;

    fn poly(coeffs: &[i64]) -> UPoly {
        UPoly::from_coeffs(coeffs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn arithmetic_and_division() {
        let a = poly(&[1, 0, 1]); // 1 + x^2
        let b = poly(&[0, 1]); // x
        assert_eq!(a.mul(&b), poly(&[0, 1, 0, 1]));
        let (quo, rem) = a.divrem(&b);
        assert_eq!(quo, poly(&[0, 1]));
        assert_eq!(rem, poly(&[1]));
        assert_eq!(a.sub(&a), UPoly::zero());
        assert_eq!(a.eval(&q(2)), q(5));
    }

    #[test]
    fn gcd_and_primitive() {
        // (x-1)(x+1) and (x-1)(x+2)
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[-2, 1, 1]);
        assert_eq!(a.gcd(&b), poly(&[-1, 1]));
        assert_eq!(poly(&[2, 0, 4]).primitive(), poly(&[1, 0, 2]));
        assert_eq!(poly(&[0, -2, 0, -6]).primitive(), poly(&[0, 1, 0, 3]));
    }

    #[test]
    fn sturm_counts() {
        // (x - 1/2)(x - 2): one root in (0, 1), two in (0, 3).
        let p = poly(&[2, -5, 2]);
        assert_eq!(p.count_roots_in(&q(0), &q(1)), 1);
        assert_eq!(p.count_roots_in(&q(0), &q(3)), 2);
        assert_eq!(p.count_positive_roots(), 2);

        // x^2 + 1: no real roots.
        assert_eq!(poly(&[1, 0, 1]).count_positive_roots(), 0);

        // x^8 - x^2 + 1: no positive roots.
        let g = poly(&[1, 0, -1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(g.count_positive_roots(), 0);

        // Repeated root: (x - 1/3)^2.
        let h = poly(&[1, -6, 9]);
        assert_eq!(h.count_positive_roots(), 1);
    }

    #[test]
    fn valuation_and_shift() {
        let p = poly(&[0, 0, 3, 1]);
        assert_eq!(p.valuation(), 2);
        assert_eq!(p.shift_down(2), poly(&[3, 1]));
    }

    #[test]
    fn rational_functions() {
        // (x^2 - 1)/(x - 1) reduces to x + 1.
        let f = RatFunc::new(poly(&[-1, 0, 1]), poly(&[-1, 1]));
        assert_eq!(f, RatFunc::from_poly(poly(&[1, 1])));
        let g = RatFunc::new(poly(&[0, 0, 1]), poly(&[1, 1]));
        assert_eq!(g.lambda_valuation(), 2);
        assert_eq!(
            g.shift_down(2),
            RatFunc::new(poly(&[1]), poly(&[1, 1]))
        );
        assert_eq!(
            RatFunc::from_poly(poly(&[0, 0, -3])).as_monomial(),
            Some((q(-3), 2))
        );
        assert_eq!(g.as_monomial(), None);
        let half_x = RatFunc::new(poly(&[0, 1]), poly(&[2]));
        assert_eq!(half_x.as_monomial(), Some((q_ratio(1, 2), 1)));
    }

    #[test]
    fn rendering() {
        assert_eq!(poly(&[0, 0, 0, 0, 0, 0, 1]).render("x"), "x^6");
        assert_eq!(poly(&[1, -2, 1]).render("x"), "x^2 - 2*x + 1");
        assert_eq!(UPoly::zero().render("x"), "0");
    }
}

//! Truncated formal power series with exact rational coefficients; just
//! enough arithmetic (multiply, log, exp) to move between moment sequences
//! and cumulant sequences the generating-function way.

use num::{BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// A power series known through degree `order()`, all higher terms dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSeries {
    coeffs: Vec<BigRational>,
}

impl FormalSeries {
    /// `coeffs[k]` is the coefficient of `t^k`; must be nonempty.
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Parse("a series needs at least a constant term".into()));
        }
        Ok(FormalSeries { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    fn same_order(&self, other: &FormalSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// Product, truncated to the common order.
    pub fn mul(&self, other: &FormalSeries) -> Result<FormalSeries> {
        self.same_order(other)?;
        let n = self.order();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(FormalSeries { coeffs })
    }

    /// Logarithm of a series with constant term 1, via the alternating sum
    /// over powers of `self - 1`.
    pub fn log(&self) -> Result<FormalSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm {
                expected: "1".into(),
                found: format_rational(&self.coeffs[0]),
            });
        }
        let n = self.order();
        let mut u = self.clone();
        u.coeffs[0] = BigRational::zero();
        let mut out = vec![BigRational::zero(); n + 1];
        let mut power = u.clone();
        for j in 1..=n {
            let sign = if j % 2 == 1 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            let factor = sign / BigRational::from_integer(j.into());
            for (k, c) in power.coeffs.iter().enumerate() {
                out[k] += &factor * c;
            }
            if j < n {
                power = power.mul(&u)?;
            }
        }
        Ok(FormalSeries { coeffs: out })
    }

    /// Exponential of a series with constant term 0.
    pub fn exp(&self) -> Result<FormalSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm {
                expected: "0".into(),
                found: format_rational(&self.coeffs[0]),
            });
        }
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        out[0] = BigRational::one();
        let mut power = FormalSeries {
            coeffs: {
                let mut v = vec![BigRational::zero(); n + 1];
                v[0] = BigRational::one();
                v
            },
        };
        let mut factorial = BigRational::one();
        for j in 1..=n {
            power = power.mul(self)?;
            factorial *= BigRational::from_integer(j.into());
            for (k, c) in power.coeffs.iter().enumerate() {
                out[k] += c / &factorial;
            }
        }
        Ok(FormalSeries { coeffs: out })
    }
}

/// Renders a reduced rational as `p` or `p/q`.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses a comma-separated list of integers and fractions such as
/// `0, 1, -3/4`.
pub fn parse_rationals(s: &str) -> Result<Vec<BigRational>> {
    let mut out = Vec::new();
    for piece in s.split(',') {
        let trimmed = piece.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse("empty entry in rational list".into()));
        }
        let (numer_text, denom_text) = match trimmed.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (trimmed, "1"),
        };
        let numer: num::BigInt = numer_text
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator {numer_text:?}")))?;
        let denom: num::BigInt = denom_text
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator {denom_text:?}")))?;
        if denom.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        if denom.is_negative() {
            return Err(Error::Parse(format!(
                "denominators are written positive, got {trimmed:?}"
            )));
        }
        out.push(BigRational::new(numer, denom));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(values: &[i64]) -> FormalSeries {
        FormalSeries::new(values.iter().map(|&v| rat(v, 1)).collect()).unwrap()
    }

    #[test]
    fn multiplication_truncates() {
        let a = ints(&[1, 1, 0, 0]); // 1 + t
        let b = ints(&[1, -1, 0, 0]); // 1 - t
        assert_eq!(a.mul(&b).unwrap(), ints(&[1, 0, -1, 0]));
        assert!(a.mul(&ints(&[1, 1])).is_err());
    }

    #[test]
    fn log_of_one_plus_t() {
        let s = ints(&[1, 1, 0, 0, 0]).log().unwrap();
        assert_eq!(
            s.coeffs(),
            &[rat(0, 1), rat(1, 1), rat(-1, 2), rat(1, 3), rat(-1, 4)]
        );
    }

    #[test]
    fn exp_undoes_log() {
        let s = FormalSeries::new(vec![
            rat(1, 1),
            rat(2, 3),
            rat(-1, 2),
            rat(5, 1),
            rat(0, 1),
            rat(7, 11),
        ])
        .unwrap();
        assert_eq!(s.log().unwrap().exp().unwrap(), s);
    }

    #[test]
    fn constant_term_is_checked() {
        assert!(matches!(
            ints(&[2, 1]).log(),
            Err(Error::BadConstantTerm { .. })
        ));
        assert!(matches!(
            ints(&[1, 1]).exp(),
            Err(Error::BadConstantTerm { .. })
        ));
    }

    #[test]
    fn rational_parsing_and_formatting() {
        let parsed = parse_rationals("0, 1, -3/4, 10/5").unwrap();
        assert_eq!(parsed, vec![rat(0, 1), rat(1, 1), rat(-3, 4), rat(2, 1)]);
        assert_eq!(format_rational(&rat(-3, 4)), "-3/4");
        assert_eq!(format_rational(&rat(10, 5)), "2");
        for bad in ["", "1,,2", "x", "1/0", "1/-2", "--3"] {
            assert!(parse_rationals(bad).is_err(), "{bad:?}");
        }
    }
}

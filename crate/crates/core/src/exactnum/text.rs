//! Text form: plain fractions `p/q` for rationals, `cyc(n)[c0,c1,...]` otherwise.

use std::fmt;
use std::str::FromStr;

use super::{Cyclotomic, NumError, Rational};

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        write!(f, "cyc({})[", self.conductor())?;
        for (i, c) in self.coeffs().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

fn parse_rational(s: &str) -> Result<Rational, NumError> {
    s.trim().parse::<Rational>().map_err(|_| NumError::Parse(s.to_string()))
}

impl FromStr for Cyclotomic {
    type Err = NumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let Some(rest) = t.strip_prefix("cyc(") else {
            return Ok(Cyclotomic::from_rational(parse_rational(t)?));
        };
        let err = || NumError::Parse(s.to_string());
        let (n, rest) = rest.split_once(')').ok_or_else(err)?;
        let n: u32 = n.trim().parse().map_err(|_| err())?;
        if n == 0 {
            return Err(err());
        }
        let body = rest.trim().strip_prefix('[').and_then(|b| b.strip_suffix(']')).ok_or_else(err)?;
        let coeffs = body.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
        // Accept any conductor with a full coefficient vector; normalise.
        let terms: Vec<(i64, Rational)> = coeffs.into_iter().enumerate().map(|(i, c)| (i as i64, c)).collect();
        if n % 4 != 2 && terms.len() != super::euler_phi(n) as usize {
            return Err(err());
        }
        Ok(Cyclotomic::from_terms(n, terms))
    }
}

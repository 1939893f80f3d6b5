//! Cartan types, Coxeter matrices and crystallographic Cartan matrices.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Series letter of an irreducible crystallographic Cartan type.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Series {
    A,
    B,
    C,
    D,
    F,
    G,
}

impl Series {
    fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// A finite crystallographic Cartan type: an irreducible factor or a product
/// of factors (written `A3`, `B2`, `A2xA1`, ...).
///
/// Supported factors: A1-A7, B2-B4, C2-C4, D4-D5, F4, G2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanType {
    factors: Vec<(Series, u8)>,
}

impl CartanType {
    pub fn new(factors: Vec<(Series, u8)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::UnsupportedType("empty type".into()));
        }
        for &(series, n) in &factors {
            let ok = match series {
                Series::A => (1..=7).contains(&n),
                Series::B | Series::C => (2..=4).contains(&n),
                Series::D => (4..=5).contains(&n),
                Series::F => n == 4,
                Series::G => n == 2,
            };
            if !ok {
                return Err(Error::UnsupportedType(format!("{}{}", series.letter(), n)));
            }
        }
        Ok(CartanType { factors })
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|&(_, n)| n as usize).sum()
    }

    /// Order of the Weyl group, by the product formula for each factor.
    pub fn expected_order(&self) -> u64 {
        fn factorial(n: u64) -> u64 {
            (1..=n).product()
        }
        self.factors
            .iter()
            .map(|&(series, n)| {
                let n = n as u64;
                match series {
                    Series::A => factorial(n + 1),
                    Series::B | Series::C => (1u64 << n) * factorial(n),
                    Series::D => (1u64 << (n - 1)) * factorial(n),
                    Series::F => 1152,
                    Series::G => 12,
                }
            })
            .product()
    }

    /// Crystallographic Cartan matrix, block diagonal over the factors.
    ///
    /// Entry `(i, j)` is `<alpha_j, alpha_i^vee>`; off-diagonal entries are
    /// `0`, `-1`, `-2` or `-3`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let rank = self.rank();
        let mut a = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            a[i][i] = 2;
        }
        let mut base = 0usize;
        for &(series, n) in &self.factors {
            let n = n as usize;
            // edges within the factor, as (i, j, a_ij, a_ji) with 0-based local indices
            let mut edges: Vec<(usize, usize, i64, i64)> = Vec::new();
            match series {
                Series::A => {
                    for i in 0..n - 1 {
                        edges.push((i, i + 1, -1, -1));
                    }
                }
                Series::B => {
                    for i in 0..n.saturating_sub(2) {
                        edges.push((i, i + 1, -1, -1));
                    }
                    edges.push((n - 2, n - 1, -2, -1));
                }
                Series::C => {
                    for i in 0..n.saturating_sub(2) {
                        edges.push((i, i + 1, -1, -1));
                    }
                    edges.push((n - 2, n - 1, -1, -2));
                }
                Series::D => {
                    for i in 0..n - 2 {
                        edges.push((i, i + 1, -1, -1));
                    }
                    edges.push((n - 3, n - 1, -1, -1));
                }
                Series::F => {
                    edges.push((0, 1, -1, -1));
                    edges.push((1, 2, -2, -1));
                    edges.push((2, 3, -1, -1));
                }
                Series::G => {
                    edges.push((0, 1, -3, -1));
                }
            }
            for (i, j, aij, aji) in edges {
                a[base + i][base + j] = aij;
                a[base + j][base + i] = aji;
            }
            base += n;
        }
        a
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for part in s.split('x') {
            let part = part.trim();
            let mut chars = part.chars();
            let series = match chars.next() {
                Some('A') | Some('a') => Series::A,
                Some('B') | Some('b') => Series::B,
                Some('C') | Some('c') => Series::C,
                Some('D') | Some('d') => Series::D,
                Some('F') | Some('f') => Series::F,
                Some('G') | Some('g') => Series::G,
                _ => return Err(Error::UnsupportedType(part.to_string())),
            };
            let n: u8 = chars
                .as_str()
                .parse()
                .map_err(|_| Error::UnsupportedType(part.to_string()))?;
            factors.push((series, n));
        }
        CartanType::new(factors)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(series, n)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{}{}", series.letter(), n)?;
        }
        Ok(())
    }
}

/// A finite Weyl group presentation: Cartan type, the Coxeter matrix derived
/// from it, and the Cartan matrix used for the root-system realization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterDatum {
    pub cartan_type: CartanType,
    rank: usize,
    coxeter: Vec<u8>,
    cartan: Vec<i64>,
}

impl CoxeterDatum {
    pub fn new(cartan_type: CartanType) -> Self {
        let rank = cartan_type.rank();
        let a = cartan_type.cartan_matrix();
        let mut coxeter = vec![0u8; rank * rank];
        let mut cartan = vec![0i64; rank * rank];
        for i in 0..rank {
            for j in 0..rank {
                cartan[i * rank + j] = a[i][j];
                coxeter[i * rank + j] = if i == j {
                    1
                } else {
                    match a[i][j] * a[j][i] {
                        0 => 2,
                        1 => 3,
                        2 => 4,
                        3 => 6,
                        _ => unreachable!("crystallographic Cartan entries"),
                    }
                };
            }
        }
        CoxeterDatum {
            cartan_type,
            rank,
            coxeter,
            cartan,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coxeter matrix entry m(s, t), 0-based indices.
    pub fn coxeter(&self, s: usize, t: usize) -> u8 {
        self.coxeter[s * self.rank + t]
    }

    /// Cartan matrix entry `<alpha_j, alpha_i^vee>`, 0-based indices.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i * self.rank + j]
    }

    pub fn validate(&self) -> Result<()> {
        for s in 0..self.rank {
            if self.coxeter(s, s) != 1 {
                return Err(Error::InvalidCoxeterMatrix(format!("m({s},{s}) != 1")));
            }
            for t in 0..self.rank {
                let m = self.coxeter(s, t);
                if m != self.coxeter(t, s) {
                    return Err(Error::InvalidCoxeterMatrix("not symmetric".into()));
                }
                if s != t && ![2, 3, 4, 6].contains(&m) {
                    return Err(Error::InvalidCoxeterMatrix(format!(
                        "m({s},{t}) = {m} not in {{2,3,4,6}}"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let t: CartanType = "A3".parse().unwrap();
        assert_eq!(t.rank(), 3);
        assert_eq!(t.to_string(), "A3");
        let p: CartanType = "A2xB2".parse().unwrap();
        assert_eq!(p.rank(), 4);
        assert_eq!(p.expected_order(), 6 * 8);
        assert!("H3".parse::<CartanType>().is_err());
        assert!("A8".parse::<CartanType>().is_err());
        assert!("B1".parse::<CartanType>().is_err());
    }

    #[test]
    fn expected_orders() {
        for (ty, order) in [
            ("A3", 24),
            ("A4", 120),
            ("G2", 12),
            ("B2", 8),
            ("B3", 48),
            ("B4", 384),
            ("C3", 48),
            ("D4", 192),
            ("D5", 1920),
            ("F4", 1152),
        ] {
            let t: CartanType = ty.parse().unwrap();
            assert_eq!(t.expected_order(), order, "{ty}");
        }
    }

    #[test]
    fn coxeter_matrix_values() {
        let d = CoxeterDatum::new("G2".parse().unwrap());
        assert_eq!(d.coxeter(0, 1), 6);
        d.validate().unwrap();
        let d = CoxeterDatum::new("B3".parse().unwrap());
        assert_eq!(d.coxeter(0, 1), 3);
        assert_eq!(d.coxeter(1, 2), 4);
        assert_eq!(d.coxeter(0, 2), 2);
        d.validate().unwrap();
        let d = CoxeterDatum::new("D4".parse().unwrap());
        assert_eq!(d.coxeter(1, 2), 3);
        assert_eq!(d.coxeter(1, 3), 3);
        assert_eq!(d.coxeter(2, 3), 2);
        d.validate().unwrap();
    }
}

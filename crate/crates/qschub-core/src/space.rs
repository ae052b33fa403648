//! Descriptors for the supported homogeneous spaces.
//!
//! The text grammar is `A:d,n | OG:n | LG:n | Q:m | E6P1 | E7P7 | C3P2`.
//! `A:d,n` is the Grassmannian of d-planes in n-space, `OG:n` the spinor
//! variety of maximal isotropic subspaces in 2n+2 variables, `LG:n` the
//! Lagrangian Grassmannian of n-planes in 2n-space, `Q:m` the even quadric
//! of dimension m, and `C3P2` the symplectic Grassmannian of isotropic
//! planes in 6-space.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HomSpace {
    TypeA { d: u32, n: u32 },
    Og { n: u32 },
    Lg { n: u32 },
    Quadric { m: u32 },
    E6P1,
    E7P7,
    C3P2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl HomSpace {
    pub fn parse(text: &str) -> Result<HomSpace> {
        let bad = |m: &str| Error::Invalid(format!("space descriptor `{text}`: {m}"));
        let t = text.trim();
        match t {
            "E6P1" => return Ok(HomSpace::E6P1),
            "E7P7" => return Ok(HomSpace::E7P7),
            "C3P2" => return Ok(HomSpace::C3P2),
            _ => {}
        }
        let (head, rest) = t
            .split_once(':')
            .ok_or_else(|| bad("expected `TAG:params`"))?;
        let parse_u32 = |s: &str| -> Result<u32> {
            s.trim()
                .parse::<u32>()
                .map_err(|_| bad("parameters must be positive integers"))
        };
        match head {
            "A" => {
                let (d, n) = rest
                    .split_once(',')
                    .ok_or_else(|| bad("expected `A:d,n`"))?;
                let (d, n) = (parse_u32(d)?, parse_u32(n)?);
                if d == 0 || d >= n {
                    return Err(bad("need 0 < d < n"));
                }
                Ok(HomSpace::TypeA { d, n })
            }
            "OG" => {
                let n = parse_u32(rest)?;
                if n < 2 {
                    return Err(bad("need n >= 2"));
                }
                Ok(HomSpace::Og { n })
            }
            "LG" => {
                let n = parse_u32(rest)?;
                if !(1..=5).contains(&n) {
                    return Err(bad("need 1 <= n <= 5"));
                }
                Ok(HomSpace::Lg { n })
            }
            "Q" => {
                let m = parse_u32(rest)?;
                if m < 4 || m % 2 != 0 {
                    return Err(bad("need m even, m >= 4"));
                }
                Ok(HomSpace::Quadric { m })
            }
            _ => Err(bad("unknown family tag")),
        }
    }

    /// Complex dimension.
    pub fn dimension(&self) -> u32 {
        match *self {
            HomSpace::TypeA { d, n } => d * (n - d),
            HomSpace::Og { n } => n * (n + 1) / 2,
            HomSpace::Lg { n } => n * (n + 1) / 2,
            HomSpace::Quadric { m } => m,
            HomSpace::E6P1 => 16,
            HomSpace::E7P7 => 27,
            HomSpace::C3P2 => 7,
        }
    }

    /// Fano index; the quantum parameter has this degree.
    pub fn index(&self) -> u32 {
        match *self {
            HomSpace::TypeA { n, .. } => n,
            HomSpace::Og { n } => 2 * n,
            HomSpace::Lg { n } => n + 1,
            HomSpace::Quadric { m } => m,
            HomSpace::E6P1 => 12,
            HomSpace::E7P7 => 18,
            HomSpace::C3P2 => 5,
        }
    }

    /// Rank of the cohomology, which is also the length of the spectrum.
    pub fn rank(&self) -> u32 {
        match *self {
            HomSpace::TypeA { d, n } => binomial(n, d),
            HomSpace::Og { n } => 1 << n,
            HomSpace::Lg { n } => 1 << n,
            HomSpace::Quadric { m } => m + 2,
            HomSpace::E6P1 => 27,
            HomSpace::E7P7 => 56,
            HomSpace::C3P2 => 12,
        }
    }

    /// Ambient root system family, its rank, and the marked simple node
    /// (1-based, Bourbaki numbering).
    pub fn root_data(&self) -> Option<(Family, u32, u32)> {
        match *self {
            HomSpace::TypeA { d, n } => Some((Family::A, n - 1, d)),
            HomSpace::Og { n } => Some((Family::D, n + 1, n + 1)),
            HomSpace::Lg { n } => Some((Family::C, n, n)),
            HomSpace::Quadric { m } => Some((Family::D, m / 2 + 1, 1)),
            HomSpace::E6P1 => Some((Family::E6, 6, 1)),
            HomSpace::E7P7 => Some((Family::E7, 7, 7)),
            // Entered from static data; no root-theoretic generation.
            HomSpace::C3P2 => None,
        }
    }

    pub fn is_semisimple_family(&self) -> bool {
        !matches!(self, HomSpace::C3P2)
    }
}

impl fmt::Display for HomSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HomSpace::TypeA { d, n } => write!(f, "A:{d},{n}"),
            HomSpace::Og { n } => write!(f, "OG:{n}"),
            HomSpace::Lg { n } => write!(f, "LG:{n}"),
            HomSpace::Quadric { m } => write!(f, "Q:{m}"),
            HomSpace::E6P1 => write!(f, "E6P1"),
            HomSpace::E7P7 => write!(f, "E7P7"),
            HomSpace::C3P2 => write!(f, "C3P2"),
        }
    }
}

pub(crate) fn binomial(n: u32, k: u32) -> u32 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u64 = 1;
    let mut den: u64 = 1;
    for i in 0..k as u64 {
        num *= n as u64 - i;
        den *= i + 1;
    }
    (num / den) as u32
}

impl serde::Serialize for HomSpace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_through_parse_and_print() {
        for text in ["A:2,4", "A:3,6", "OG:3", "LG:3", "Q:8", "E6P1", "E7P7", "C3P2"] {
            let sp = HomSpace::parse(text).unwrap();
            assert_eq!(sp.to_string(), text);
        }
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        for text in ["A:4,4", "A:0,3", "Q:7", "Q:2", "LG:6", "LG:0", "X:1", "A:2"] {
            assert!(HomSpace::parse(text).is_err(), "{text} should fail");
        }
    }

    #[test]
    fn dimensions_and_indices() {
        let cases = [
            ("A:2,4", 4, 4, 6),
            ("A:2,5", 6, 5, 10),
            ("A:3,6", 9, 6, 20),
            ("OG:3", 6, 6, 8),
            ("OG:4", 10, 8, 16),
            ("LG:3", 6, 4, 8),
            ("Q:8", 8, 8, 10),
            ("E6P1", 16, 12, 27),
            ("E7P7", 27, 18, 56),
            ("C3P2", 7, 5, 12),
        ];
        for (text, dim, index, rank) in cases {
            let sp = HomSpace::parse(text).unwrap();
            assert_eq!(sp.dimension(), dim, "{text} dim");
            assert_eq!(sp.index(), index, "{text} index");
            assert_eq!(sp.rank(), rank, "{text} rank");
        }
    }
}

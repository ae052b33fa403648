//! Schubert class labels for every supported family, with the CLI text forms:
//! comma-separated partitions for A/OG/LG, `k`/`+`/`-` for quadrics,
//! `a|alpha` for the symplectic Grassmannian, and `w<deg>.<i>` for cosets of
//! the exceptional spaces.

use crate::error::{Error, Result};
use crate::space::HomSpace;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchubertLabel {
    /// Partition in the d x (n-d) box.
    Partition(Vec<u32>),
    /// Strict partition in the staircase (n, ..., 1).
    Strict(Vec<u32>),
    /// Quadric class H^k away from the middle degree.
    QuadricK(u32),
    QuadricPlus,
    QuadricMinus,
    /// Pair (a | alpha) with 0 <= a <= 2, alpha strict with parts <= 3 and
    /// length <= a.
    Pair(u32, Vec<u32>),
    /// Coset vertex of an exceptional space, indexed inside its degree.
    Coset { degree: u32, idx: u32 },
}

use SchubertLabel::*;

impl SchubertLabel {
    pub fn degree(&self, space: &HomSpace) -> u32 {
        match self {
            Partition(p) | Strict(p) => p.iter().sum(),
            QuadricK(k) => *k,
            QuadricPlus | QuadricMinus => space.index() / 2,
            Pair(a, alpha) => a + alpha.iter().sum::<u32>(),
            Coset { degree, .. } => *degree,
        }
    }

    pub fn parse(space: &HomSpace, text: &str) -> Result<SchubertLabel> {
        let bad = |m: &str| Error::Invalid(format!("label `{text}` for {space}: {m}"));
        let t = text.trim();
        let parse_parts = |s: &str| -> Result<Vec<u32>> {
            if s.is_empty() || s == "0" {
                return Ok(vec![]);
            }
            s.split(',')
                .map(|p| p.trim().parse::<u32>().map_err(|_| bad("bad part")))
                .collect::<Result<Vec<u32>>>()
        };
        let label = match space {
            HomSpace::TypeA { .. } => Partition(parse_parts(t)?),
            HomSpace::Og { .. } | HomSpace::Lg { .. } => Strict(parse_parts(t)?),
            HomSpace::Quadric { .. } => match t {
                "+" => QuadricPlus,
                "-" => QuadricMinus,
                _ => QuadricK(t.parse().map_err(|_| bad("expected k, + or -"))?),
            },
            HomSpace::C3P2 => {
                let (a, alpha) = t.split_once('|').ok_or_else(|| bad("expected a|alpha"))?;
                let a: u32 = a.trim().parse().map_err(|_| bad("bad a"))?;
                let alpha: Vec<u32> = alpha
                    .trim()
                    .chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| c.to_digit(10).map(|d| d as u32).ok_or_else(|| bad("bad alpha digit")))
                    .collect::<Result<Vec<u32>>>()?;
                let alpha: Vec<u32> = alpha.into_iter().filter(|&x| x != 0).collect();
                // The degree-2 class next to (1|1) is written both as 2|0 and
                // 0|2 in the wild; canonicalize the latter.
                if a == 0 && alpha == vec![2] {
                    Pair(2, vec![])
                } else {
                    Pair(a, alpha)
                }
            }
            HomSpace::E6P1 | HomSpace::E7P7 => {
                let rest = t
                    .strip_prefix('w')
                    .ok_or_else(|| bad("expected w<deg>.<i>"))?;
                let (d, i) = rest.split_once('.').ok_or_else(|| bad("expected w<deg>.<i>"))?;
                Coset {
                    degree: d.parse().map_err(|_| bad("bad degree"))?,
                    idx: i.parse().map_err(|_| bad("bad index"))?,
                }
            }
        };
        label.validate(space)?;
        Ok(label)
    }

    pub fn validate(&self, space: &HomSpace) -> Result<()> {
        let bad = |m: String| Err(Error::Invalid(m));
        match (space, self) {
            (HomSpace::TypeA { d, n }, Partition(p)) => {
                if !is_partition(p) || !crate::combin::fits_box(p, *d, n - d) {
                    return bad(format!("{self} does not fit the {d}x{} box", n - d));
                }
            }
            (HomSpace::Og { n }, Strict(p)) | (HomSpace::Lg { n }, Strict(p)) => {
                if !is_strict(p) || p.first().copied().unwrap_or(0) > *n {
                    return bad(format!("{self} is not strict inside ({n},...,1)"));
                }
            }
            (HomSpace::Quadric { m }, QuadricK(k)) => {
                if *k > *m || *k == m / 2 {
                    return bad(format!("quadric label {k} out of range (middle is +/-)"));
                }
            }
            (HomSpace::Quadric { .. }, QuadricPlus | QuadricMinus) => {}
            (HomSpace::C3P2, Pair(a, alpha)) => {
                if *a > 2
                    || !is_strict(alpha)
                    || alpha.first().copied().unwrap_or(0) > 3
                    || alpha.len() as u32 > *a
                {
                    return bad(format!("{self} is not a valid (a|alpha) pair"));
                }
            }
            (HomSpace::E6P1 | HomSpace::E7P7, Coset { degree, .. }) => {
                if *degree > space.dimension() {
                    return bad(format!("{self} degree exceeds the dimension"));
                }
            }
            _ => return bad(format!("label {self} does not belong to {space}")),
        }
        Ok(())
    }
}

fn is_partition(p: &[u32]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1]) && p.last() != Some(&0)
}

fn is_strict(p: &[u32]) -> bool {
    p.windows(2).all(|w| w[0] > w[1]) && p.last() != Some(&0)
}

impl fmt::Display for SchubertLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Partition(p) | Strict(p) => {
                if p.is_empty() {
                    write!(f, "0")
                } else {
                    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                    write!(f, "{}", parts.join(","))
                }
            }
            QuadricK(k) => write!(f, "{k}"),
            QuadricPlus => write!(f, "+"),
            QuadricMinus => write!(f, "-"),
            Pair(a, alpha) => {
                if alpha.is_empty() {
                    write!(f, "{a}|0")
                } else {
                    let s: String = alpha.iter().map(|x| x.to_string()).collect();
                    write!(f, "{a}|{s}")
                }
            }
            Coset { degree, idx } => write!(f, "w{degree}.{idx}"),
        }
    }
}

impl serde::Serialize for SchubertLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let a24 = HomSpace::parse("A:2,4").unwrap();
        for text in ["0", "1", "2,1", "2,2"] {
            let l = SchubertLabel::parse(&a24, text).unwrap();
            assert_eq!(l.to_string(), text);
        }
        let q8 = HomSpace::parse("Q:8").unwrap();
        assert_eq!(SchubertLabel::parse(&q8, "+").unwrap(), QuadricPlus);
        assert!(SchubertLabel::parse(&q8, "4").is_err());
        assert!(SchubertLabel::parse(&q8, "9").is_err());
        let c = HomSpace::C3P2;
        assert_eq!(
            SchubertLabel::parse(&c, "2|31").unwrap(),
            Pair(2, vec![3, 1])
        );
        assert_eq!(SchubertLabel::parse(&c, "0|2").unwrap(), Pair(2, vec![]));
        assert!(SchubertLabel::parse(&c, "1|21").is_err());
    }

    #[test]
    fn degrees() {
        let c = HomSpace::C3P2;
        assert_eq!(SchubertLabel::parse(&c, "2|32").unwrap().degree(&c), 7);
        let q6 = HomSpace::parse("Q:6").unwrap();
        assert_eq!(QuadricPlus.degree(&q6), 3);
    }
}

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::TruncatedSimplicialSet;
use crate::error::{invalid, Error, Result};

/// The standard complexes and their common subobjects and quotients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    /// `Δ^0`.
    Point,
    /// `Δ^n`.
    Simplex,
    /// `∂Δ^n`.
    Boundary,
    /// `Λ^n_k`.
    Horn,
    /// `S^n = Δ^n / ∂Δ^n`.
    Sphere,
}

impl std::str::FromStr for ComplexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "point" => ComplexKind::Point,
            "simplex" | "delta" => ComplexKind::Simplex,
            "boundary" => ComplexKind::Boundary,
            "horn" => ComplexKind::Horn,
            "sphere" => ComplexKind::Sphere,
            other => return invalid(format!("unknown complex kind {other:?}")),
        })
    }
}

/// Nondecreasing vertex sequences of length `m + 1` in `0..=n`.
pub(crate) fn sequences(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m + 1);
    fn rec(n: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..=n {
            cur.push(v);
            rec(n, len, cur, out);
            cur.pop();
        }
    }
    rec(n, m + 1, &mut cur, &mut out);
    out
}

pub(crate) fn seq_name(n: usize, s: &[usize]) -> String {
    if n < 10 {
        s.iter().map(|v| v.to_string()).collect()
    } else {
        s.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

fn face_seq(i: usize, s: &[usize]) -> Vec<usize> {
    let mut t = s.to_vec();
    t.remove(i);
    t
}

fn degen_seq(i: usize, s: &[usize]) -> Vec<usize> {
    let mut t = s.to_vec();
    t.insert(i, s[i]);
    t
}

fn image(s: &[usize]) -> BTreeSet<usize> {
    s.iter().copied().collect()
}

/// Build a standard complex materialized to `depth`, degeneracies included.
pub fn standard_complex(
    kind: ComplexKind,
    n: usize,
    k: Option<usize>,
    depth: usize,
) -> Result<TruncatedSimplicialSet> {
    let n = if kind == ComplexKind::Point { 0 } else { n };
    if depth < n {
        return Err(Error::DepthTooSmall {
            have: depth,
            need: n,
            context: format!("standard complex {kind:?} of dimension {n}"),
        });
    }
    let keep: Box<dyn Fn(&[usize]) -> bool> = match kind {
        ComplexKind::Point | ComplexKind::Simplex => Box::new(|_| true),
        ComplexKind::Boundary => Box::new(move |s| image(s).len() < n + 1),
        ComplexKind::Horn => {
            let k = match k {
                Some(k) if k <= n && n >= 1 => k,
                _ => return invalid(format!("horn Λ^{n}_k needs 0 ≤ k ≤ n and n ≥ 1")),
            };
            // union of the faces opposite vertices j ≠ k
            Box::new(move |s| {
                let im = image(s);
                (0..=n).any(|j| j != k && !im.contains(&j))
            })
        }
        ComplexKind::Sphere => {
            let levels: Vec<Vec<Option<Vec<usize>>>> = (0..=depth)
                .map(|m| {
                    std::iter::once(None)
                        .chain(
                            sequences(n, m)
                                .into_iter()
                                .filter(|s| image(s).len() == n + 1)
                                .map(Some),
                        )
                        .collect()
                })
                .collect();
            let collapse = move |s: Vec<usize>| {
                if image(&s).len() == n + 1 {
                    Some(s)
                } else {
                    None
                }
            };
            return TruncatedSimplicialSet::build(
                depth,
                levels,
                |_, s: &Option<Vec<usize>>| match s {
                    None => "*".to_string(),
                    Some(s) => seq_name(n, s),
                },
                |_, i, s| s.as_ref().and_then(|s| collapse(face_seq(i, s))),
                |_, i, s| s.as_ref().map(|s| degen_seq(i, s)),
            );
        }
    };
    let levels: Vec<Vec<Vec<usize>>> = (0..=depth)
        .map(|m| sequences(n, m).into_iter().filter(|s| keep(s)).collect())
        .collect();
    TruncatedSimplicialSet::build(
        depth,
        levels,
        |_, s| seq_name(n, s),
        |_, i, s| face_seq(i, s),
        |_, i, s| degen_seq(i, s),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::validate_sset;

    #[test]
    fn delta1_counts() {
        let x = standard_complex(ComplexKind::Simplex, 1, None, 1).unwrap();
        assert_eq!(x.nondegenerate_counts(), vec![2, 1]);
    }

    #[test]
    fn horn_2_1_counts() {
        let x = standard_complex(ComplexKind::Horn, 2, Some(1), 2).unwrap();
        assert_eq!(x.nondegenerate_counts(), vec![3, 2, 0]);
        assert!(x.id(1, "02").is_err());
    }

    #[test]
    fn circle_level_sizes() {
        let x = standard_complex(ComplexKind::Sphere, 1, None, 2).unwrap();
        assert_eq!(x.level_sizes(), vec![1, 2, 3]);
        assert!(validate_sset(&x).is_empty());
    }

    #[test]
    fn circle_at_depth_three_is_valid() {
        let x = standard_complex(ComplexKind::Sphere, 1, None, 3).unwrap();
        assert!(validate_sset(&x).is_empty());
        assert_eq!(x.level_sizes(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn depth_too_small() {
        assert!(matches!(
            standard_complex(ComplexKind::Simplex, 3, None, 2),
            Err(Error::DepthTooSmall { .. })
        ));
    }

    #[test]
    fn all_kinds_validate() {
        for (kind, n, k) in [
            (ComplexKind::Point, 0, None),
            (ComplexKind::Simplex, 2, None),
            (ComplexKind::Boundary, 2, None),
            (ComplexKind::Horn, 3, Some(0)),
            (ComplexKind::Sphere, 2, None),
        ] {
            let x = standard_complex(kind, n, k, 4).unwrap();
            assert!(validate_sset(&x).is_empty(), "{kind:?}");
        }
    }
}

//! Named test systems. All are right-angled unless labels are overridden:
//! `m = 2` on the edges of the nerve graph and `m = inf` elsewhere.
//!
//! | family        | generators               | nerve                                |
//! |---------------|--------------------------|--------------------------------------|
//! | `cycle n`     | `v1..vn`                 | `n`-cycle                            |
//! | `wheel n`     | `v1..vn c`               | cone from `c` over the `n`-cycle     |
//! | `simplex n`   | `v1..vn`                 | `(n-1)`-simplex (`W` is finite)      |
//! | `antiprism n` | `t1..tn b1..bn`          | annulus `ti-ti+1, bi-bi+1, ti-bi, ti-bi+1` |
//! | `bipyramid n` | `v1..vn n s`             | suspension of the `n`-cycle          |
//! | `octahedron`  | `x1 x2 y1 y2 z1 z2`      | boundary of the octahedron           |

use thiserror::Error;

use crate::coxeter::{CoxeterError, CoxeterMatrix, Exponent};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family {0:?}; known: cycle, wheel, simplex, antiprism, bipyramid, octahedron")]
    UnknownFamily(String),
    #[error("{family} needs {expected}")]
    InvalidParameter { family: String, expected: String },
    #[error(transparent)]
    Label(#[from] CoxeterError),
}

/// Families and their smallest parameter; `None` for parameterless ones.
pub const FAMILIES: [(&str, Option<usize>); 6] = [
    ("cycle", Some(3)),
    ("wheel", Some(3)),
    ("simplex", Some(1)),
    ("antiprism", Some(3)),
    ("bipyramid", Some(3)),
    ("octahedron", None),
];

fn numbered(prefix: &str, n: usize) -> impl Iterator<Item = String> + '_ {
    (1..=n).map(move |i| format!("{prefix}{i}"))
}

fn cycle_edges(n: usize, offset: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |i| (offset + i, offset + (i + 1) % n))
}

pub fn make_family(name: &str, n: Option<usize>) -> Result<CoxeterMatrix, FamilyError> {
    let (_, min) = FAMILIES
        .iter()
        .find(|(f, _)| *f == name)
        .ok_or_else(|| FamilyError::UnknownFamily(name.to_owned()))?;
    let invalid = |expected: String| FamilyError::InvalidParameter { family: name.to_owned(), expected };
    let n = match (min, n) {
        (None, None) => 0,
        (None, Some(_)) => return Err(invalid("no parameter".into())),
        (Some(lo), Some(n)) if n >= *lo => n,
        (Some(lo), _) => return Err(invalid(format!("a parameter n >= {lo}"))),
    };
    let (names, edges): (Vec<String>, Vec<(usize, usize)>) = match name {
        "cycle" => (numbered("v", n).collect(), cycle_edges(n, 0).collect()),
        "wheel" => (
            numbered("v", n).chain(["c".to_owned()]).collect(),
            cycle_edges(n, 0).chain((0..n).map(|i| (i, n))).collect(),
        ),
        "simplex" => (numbered("v", n).collect(), (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()),
        "antiprism" => (
            numbered("t", n).chain(numbered("b", n)).collect(),
            (0..n)
                .flat_map(|i| {
                    let j = (i + 1) % n;
                    [(i, j), (n + i, n + j), (i, n + i), (i, n + j)]
                })
                .collect(),
        ),
        "bipyramid" => (
            numbered("v", n).chain(["n".to_owned(), "s".to_owned()]).collect(),
            cycle_edges(n, 0).chain((0..n).flat_map(|i| [(i, n), (i, n + 1)])).collect(),
        ),
        _ => {
            let names: Vec<String> = ["x1", "x2", "y1", "y2", "z1", "z2"].map(String::from).to_vec();
            let edges = (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).filter(|&(i, j)| i / 2 != j / 2).collect();
            (names, edges)
        }
    };
    Ok(CoxeterMatrix::right_angled(&names, &edges)?)
}

/// Replaces `m_st` for each `(s, t, m)`.
pub fn with_labels(
    m: &CoxeterMatrix,
    overrides: &[(String, String, Exponent)],
) -> Result<CoxeterMatrix, FamilyError> {
    let mut out = m.clone();
    for (s, t, e) in overrides {
        let i = m.index_of(s).ok_or_else(|| CoxeterError::UnknownGenerator(s.clone()))?;
        let j = m.index_of(t).ok_or_else(|| CoxeterError::UnknownGenerator(t.clone()))?;
        out = out.with_exponent(i, j, *e)?;
    }
    Ok(out)
}

/// Every family at every parameter up to `max_n`, named like `wheel(5)`.
pub fn all_families(max_n: usize) -> Vec<(String, CoxeterMatrix)> {
    let mut out = Vec::new();
    for (name, min) in FAMILIES {
        match min {
            None => out.push((name.to_owned(), make_family(name, None).expect("valid family"))),
            Some(lo) => {
                for n in lo..=max_n {
                    out.push((format!("{name}({n})"), make_family(name, Some(n)).expect("valid family")));
                }
            }
        }
    }
    out
}

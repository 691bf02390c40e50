//! Standard Dynkin data and identification of induced sub-diagrams.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Cartan–Killing series of a simple component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub const ALL: [Series; 7] = [
        Series::A,
        Series::B,
        Series::C,
        Series::D,
        Series::E,
        Series::F,
        Series::G,
    ];

    pub fn check_rank(self, rank: usize) -> Result<()> {
        let reason = match self {
            Series::A if rank >= 1 => return Ok(()),
            Series::B | Series::C if rank >= 2 => return Ok(()),
            Series::D if rank >= 3 => return Ok(()),
            Series::E if (6..=8).contains(&rank) => return Ok(()),
            Series::F if rank == 4 => return Ok(()),
            Series::G if rank == 2 => return Ok(()),
            Series::A => "rank must be at least 1",
            Series::B | Series::C => "rank must be at least 2",
            Series::D => "rank must be at least 3",
            Series::E => "rank must be 6, 7 or 8",
            Series::F => "rank must be 4",
            Series::G => "rank must be 2",
        };
        Err(Error::InvalidComponent {
            series: self,
            rank,
            reason,
        })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E => "E",
            Series::F => "F",
            Series::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Series {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "E" => Ok(Series::E),
            "F" => Ok(Series::F),
            "G" => Ok(Series::G),
            other => Err(format!("unknown series `{other}`")),
        }
    }
}

/// Bonds of the Dynkin diagram in Bourbaki numbering (0-based).
fn edges(series: Series, rank: usize) -> Vec<(usize, usize)> {
    match series {
        Series::A | Series::B | Series::C | Series::F | Series::G => {
            (1..rank).map(|i| (i - 1, i)).collect()
        }
        Series::D => {
            let mut e: Vec<_> = (1..rank - 1).map(|i| (i - 1, i)).collect();
            e.push((rank - 3, rank - 1));
            e
        }
        Series::E => {
            // 1-3-4-5-6-7-8 with 2 hanging off 4
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((3..rank).map(|i| (i - 1, i)));
            e
        }
    }
}

/// Squared lengths of the simple roots, short roots normalized to 2.
fn lengths(series: Series, rank: usize) -> Vec<i64> {
    match series {
        Series::A | Series::D | Series::E => vec![2; rank],
        Series::B => {
            let mut l = vec![4; rank];
            l[rank - 1] = 2;
            l
        }
        Series::C => {
            let mut l = vec![2; rank];
            l[rank - 1] = 4;
            l
        }
        Series::F => vec![4, 4, 2, 2],
        // the short root is the second one
        Series::G => vec![6, 2],
    }
}

/// Invariant form on the simple roots, short roots of squared length 2.
pub(crate) fn standard_form(series: Series, rank: usize) -> Vec<Vec<i64>> {
    let len = lengths(series, rank);
    let mut m = vec![vec![0; rank]; rank];
    for i in 0..rank {
        m[i][i] = len[i];
    }
    for (i, j) in edges(series, rank) {
        // (a, b) = -max(|a|^2, |b|^2) / 2 for every bond type
        let v = -len[i].max(len[j]) / 2;
        m[i][j] = v;
        m[j][i] = v;
    }
    m
}

/// Cartan matrix with entries `<α_i^∨, α_j>`.
pub(crate) fn standard_cartan(series: Series, rank: usize) -> Vec<Vec<i64>> {
    let len = lengths(series, rank);
    let mut m = vec![vec![0; rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in edges(series, rank) {
        let (long, short) = if len[i] >= len[j] { (i, j) } else { (j, i) };
        let multiplicity = len[long] / len[short];
        m[long][short] = -1;
        m[short][long] = -multiplicity;
    }
    m
}

/// Candidate types for a connected diagram with `k` nodes, in preference
/// order. `B2` is preferred over `C2` and `A3` over `D3`.
fn candidates(k: usize) -> impl Iterator<Item = Series> {
    Series::ALL.into_iter().filter(move |s| match s {
        Series::A => true,
        Series::B => k >= 2,
        Series::C => k >= 3,
        Series::D => k >= 4,
        Series::E => (6..=8).contains(&k),
        Series::F => k == 4,
        Series::G => k == 2,
    })
}

/// Identifies a connected induced Cartan submatrix.
///
/// Returns the series and the ordering of the input nodes that realizes
/// the standard matrix; among all realizing orderings the lexicographically
/// smallest one is returned.
pub(crate) fn identify(sub: &[Vec<i64>]) -> Option<(Series, Vec<usize>)> {
    let k = sub.len();
    for series in candidates(k) {
        let target = standard_cartan(series, k);
        let mut order = Vec::with_capacity(k);
        let mut used = vec![false; k];
        if assign(sub, &target, &mut order, &mut used) {
            return Some((series, order));
        }
    }
    None
}

fn assign(
    sub: &[Vec<i64>],
    target: &[Vec<i64>],
    order: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let pos = order.len();
    if pos == sub.len() {
        return true;
    }
    for node in 0..sub.len() {
        if used[node] {
            continue;
        }
        let consistent = order.iter().enumerate().all(|(q, &other)| {
            sub[node][other] == target[pos][q] && sub[other][node] == target[q][pos]
        });
        if !consistent {
            continue;
        }
        used[node] = true;
        order.push(node);
        if assign(sub, target, order, used) {
            return true;
        }
        order.pop();
        used[node] = false;
    }
    false
}

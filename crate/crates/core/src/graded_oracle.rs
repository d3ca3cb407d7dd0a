//! Brute-force count of Borel-stable commutative subalgebras in the
//! off-diagonal blocks of 𝔤𝔩_n for the Levi 𝔤𝔩_r × 𝔤𝔩_{n−r}.
//!
//! The module `V` is spanned by the matrix units `E_ij` outside the two
//! diagonal blocks. Its weights ε_i − ε_j are multiplicity free, so every
//! Borel-stable subspace is spanned by a set of matrix units, and the search
//! runs over subsets of positions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `2r(n − r)` accepted by [`gl_count`].
pub const MAX_POSITIONS: usize = 24;

/// Matrix unit position (1-based) outside the diagonal blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockPosition {
    pub row: usize,
    pub col: usize,
}

fn check_shape(n: usize, r: usize) -> Result<()> {
    if r == 0 || r >= n {
        return Err(Error::BlockShape { n, r });
    }
    Ok(())
}

/// Positions of `V`: the upper block (`i ≤ r < j`) then the lower block
/// (`j ≤ r < i`), each row-major.
pub fn block_positions(n: usize, r: usize) -> Vec<BlockPosition> {
    let mut out = Vec::with_capacity(2 * r * (n - r));
    for row in 1..=r {
        for col in r + 1..=n {
            out.push(BlockPosition { row, col });
        }
    }
    for row in r + 1..=n {
        for col in 1..=r {
            out.push(BlockPosition { row, col });
        }
    }
    out
}

fn same_block(a: usize, b: usize, r: usize) -> bool {
    (a <= r) == (b <= r)
}

/// Per position: the positions forced by Borel stability and the positions
/// it fails to commute with.
fn constraints(n: usize, r: usize, pos: &[BlockPosition]) -> (Vec<u32>, Vec<u32>) {
    let index = |row: usize, col: usize| pos.iter().position(|p| p.row == row && p.col == col);
    let mut needs = vec![0u32; pos.len()];
    let mut conflicts = vec![0u32; pos.len()];
    for (a, e) in pos.iter().enumerate() {
        // [E_kl, E_ij] = δ_li E_kj − δ_jk E_il for k < l in one diagonal block.
        for k in 1..=n {
            for l in k + 1..=n {
                if !same_block(k, l, r) {
                    continue;
                }
                if l == e.row {
                    needs[a] |= 1 << index(k, e.col).expect("E_kj lies in V");
                }
                if e.col == k {
                    needs[a] |= 1 << index(e.row, l).expect("E_il lies in V");
                }
            }
        }
        // [E_ij, E_kl] = δ_jk E_il − δ_li E_kj.
        for (b, f) in pos.iter().enumerate() {
            if e.col == f.row || f.col == e.row {
                conflicts[a] |= 1 << b;
            }
        }
    }
    (needs, conflicts)
}

/// Every stable commutative subset, as position masks over
/// [`block_positions`].
pub fn gl_stable_commutative_masks(n: usize, r: usize) -> Result<Vec<u32>> {
    check_shape(n, r)?;
    let size = 2 * r * (n - r);
    if size > MAX_POSITIONS {
        return Err(Error::GuardExceeded {
            what: "2r(n-r) positions",
            got: size,
            limit: MAX_POSITIONS,
            hint: "compare gl_formula directly instead",
        });
    }
    let pos = block_positions(n, r);
    let (needs, conflicts) = constraints(n, r, &pos);
    let mut out = Vec::new();
    // Depth-first over positions; a position is only added when it commutes
    // with everything chosen so far.
    let mut stack: Vec<(usize, u32, u32)> = vec![(0, 0, 0)];
    while let Some((next, chosen, blocked)) = stack.pop() {
        if next == size {
            let closed = (0..size)
                .filter(|&a| chosen >> a & 1 == 1)
                .all(|a| needs[a] & !chosen == 0);
            if closed {
                out.push(chosen);
            }
            continue;
        }
        stack.push((next + 1, chosen, blocked));
        if blocked >> next & 1 == 0 {
            stack.push((next + 1, chosen | 1 << next, blocked | conflicts[next]));
        }
    }
    out.sort_unstable();
    Ok(out)
}

pub fn gl_stable_commutative_sets(n: usize, r: usize) -> Result<Vec<Vec<BlockPosition>>> {
    let pos = block_positions(n, r);
    Ok(gl_stable_commutative_masks(n, r)?
        .into_iter()
        .map(|m| {
            pos.iter()
                .enumerate()
                .filter(|(a, _)| m >> a & 1 == 1)
                .map(|(_, p)| *p)
                .collect()
        })
        .collect())
}

pub fn gl_count(n: usize, r: usize) -> Result<u64> {
    Ok(gl_stable_commutative_masks(n, r)?.len() as u64)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(n, r) + (n − r)·C(n − 1, r − 1)`.
pub fn gl_formula(n: usize, r: usize) -> u64 {
    let (n, r) = (n as u64, r as u64);
    binomial(n, r) + (n - r) * binomial(n - 1, r - 1)
}

pub fn gl_verify(n: usize, r: usize) -> Result<bool> {
    Ok(gl_count(n, r)? == gl_formula(n, r))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlReport {
    pub n: usize,
    pub r: usize,
    pub count: u64,
    pub formula: u64,
    pub ok: bool,
}

pub fn gl_report(n: usize, r: usize) -> Result<GlReport> {
    let count = gl_count(n, r)?;
    let formula = gl_formula(n, r);
    Ok(GlReport {
        n,
        r,
        count,
        formula,
        ok: count == formula,
    })
}

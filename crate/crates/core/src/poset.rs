//! Upper sets of a small finite poset, enumerated through antichains.
//!
//! Elements are `0..n` with `n ≤ 128`; sets are `u128` bit masks.

use crate::error::{Error, Result};

pub const MAX_ELEMENTS: usize = 128;

pub fn bits(mask: u128) -> impl Iterator<Item = usize> {
    (0..MAX_ELEMENTS).filter(move |&i| mask >> i & 1 == 1)
}

/// Finite poset stored as its reflexive up-closures.
#[derive(Clone, Debug)]
pub struct Poset {
    up: Vec<u128>,
    down: Vec<u128>,
}

impl Poset {
    /// Transitive closure of the cover-like relation `covers[i]` (elements
    /// directly above `i`). The relation must be acyclic.
    pub fn from_relation(covers: &[u128]) -> Result<Self> {
        let n = covers.len();
        if n > MAX_ELEMENTS {
            return Err(Error::GuardExceeded {
                what: "poset size",
                got: n,
                limit: MAX_ELEMENTS,
                hint: "use a smaller root system",
            });
        }
        let mut up: Vec<u128> = (0..n).map(|i| covers[i] | 1u128 << i).collect();
        loop {
            let mut changed = false;
            for i in 0..n {
                let mut acc = up[i];
                for j in bits(up[i]) {
                    acc |= up[j];
                }
                if acc != up[i] {
                    up[i] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for (i, &u) in up.iter().enumerate() {
            if bits(u).any(|j| j != i && up[j] >> i & 1 == 1) {
                return Err(Error::InvariantViolation("relation has a cycle".into()));
            }
        }
        let mut down = vec![0u128; n];
        for i in 0..n {
            for j in bits(up[i]) {
                down[j] |= 1u128 << i;
            }
        }
        Ok(Self { up, down })
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    /// Elements ≥ `i`, including `i`.
    pub fn up(&self, i: usize) -> u128 {
        self.up[i]
    }

    pub fn is_upper_set(&self, mask: u128) -> bool {
        bits(mask).all(|i| self.up[i] & !mask == 0)
    }

    /// Minimal elements of `mask`.
    pub fn minimal(&self, mask: u128) -> u128 {
        bits(mask)
            .filter(|&i| self.down[i] & mask == 1u128 << i)
            .fold(0, |acc, i| acc | 1u128 << i)
    }

    /// All upper sets, one per antichain (its set of minimal elements).
    /// Upper sets are produced in depth-first antichain order.
    pub fn upper_sets(&self) -> Vec<u128> {
        let n = self.len();
        let comparable: Vec<u128> = (0..n).map(|i| self.up[i] | self.down[i]).collect();
        let mut out = Vec::new();
        let mut stack: Vec<(usize, u128, u128)> = vec![(0, 0, 0)];
        while let Some((start, upper, forbidden)) = stack.pop() {
            out.push(upper);
            for j in (start..n).rev() {
                if forbidden >> j & 1 == 0 {
                    stack.push((j + 1, upper | self.up[j], forbidden | comparable[j]));
                }
            }
        }
        out
    }
}

//! Mullineux map by iterated rim stripping, kept independent of the crystal
//! code so it can serve as a cross-check.
//!
//! The `e`-rim of a partition is built from segments of its rim: each segment
//! takes `e` consecutive rim nodes (or what is left), and the next segment
//! starts in the row below the last row touched. Removing the `e`-rim
//! repeatedly yields the Mullineux symbol, a column of pairs
//! `(rim size, number of rows)`. The image has the symbol with columns
//! `(a, a - r + ε)` where `ε = 0` when `e | a` and `1` otherwise.

use std::collections::HashMap;

use mullineux_core::{Modulus, Partition};

pub type MullineuxSymbol = Vec<(usize, usize)>;

fn rim_nodes(parts: &[usize]) -> Vec<(usize, usize)> {
    let mut rim = Vec::new();
    for a in 0..parts.len() {
        let next = parts.get(a + 1).copied().unwrap_or(0);
        let lo = next.max(1);
        for b in (lo..=parts[a]).rev() {
            rim.push((a, b));
        }
    }
    rim
}

fn e_rim(parts: &[usize], e: usize) -> Vec<(usize, usize)> {
    let rim = rim_nodes(parts);
    let mut chosen = Vec::new();
    let mut i = 0;
    while i < rim.len() {
        let end = (i + e).min(rim.len());
        chosen.extend_from_slice(&rim[i..end]);
        let last_row = rim[end - 1].0;
        i = end;
        while i < rim.len() && rim[i].0 <= last_row {
            i += 1;
        }
    }
    chosen
}

pub fn mullineux_symbol(p: &Partition, e: usize) -> MullineuxSymbol {
    let mut parts = p.parts().to_vec();
    let mut symbol = Vec::new();
    while !parts.is_empty() {
        let rim = e_rim(&parts, e);
        symbol.push((rim.len(), parts.len()));
        for (a, _) in rim {
            parts[a] -= 1;
        }
        parts.retain(|&x| x > 0);
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "rim removal left a non-partition"
        );
    }
    symbol
}

fn image_symbol(symbol: &MullineuxSymbol, e: usize) -> MullineuxSymbol {
    symbol
        .iter()
        .map(|&(a, r)| (a, a - r + usize::from(a % e != 0)))
        .collect()
}

/// Lookup table from Mullineux symbol to `e`-regular partition of rank `n`.
pub struct RimOracle {
    e: usize,
    by_symbol: HashMap<MullineuxSymbol, Partition>,
}

impl RimOracle {
    pub fn new(n: usize, e: usize) -> Self {
        let regular: Vec<Partition> = Partition::all_of_size(n)
            .into_iter()
            .filter(|p| p.is_e_regular(Modulus::Finite(e as i64)))
            .collect();
        let count = regular.len();
        let by_symbol: HashMap<MullineuxSymbol, Partition> =
            regular.into_iter().map(|p| (mullineux_symbol(&p, e), p)).collect();
        assert_eq!(by_symbol.len(), count, "Mullineux symbols are not distinct");
        RimOracle { e, by_symbol }
    }

    pub fn image(&self, p: &Partition) -> Partition {
        let target = image_symbol(&mullineux_symbol(p, self.e), self.e);
        self.by_symbol
            .get(&target)
            .cloned()
            .unwrap_or_else(|| panic!("no regular partition with symbol {target:?}"))
    }
}

/// Single-shot convenience wrapper.
pub fn m1_rim(p: &Partition, e: usize) -> Partition {
    RimOracle::new(p.rank(), e).image(p)
}

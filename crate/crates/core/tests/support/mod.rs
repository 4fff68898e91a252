#![allow(dead_code)]

pub mod fixtures;
pub mod rim;

use mullineux_core::{Modulus, Multicharge, Multipartition, Partition};

/// Parses compact notation such as `(2.1,∅,1)`.
pub fn compact(text: &str) -> Multipartition {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let comps = inner
        .split(',')
        .map(|c| {
            let c = c.trim();
            if c == "∅" {
                Partition::empty()
            } else {
                Partition::new(c.split('.').map(|x| x.parse().unwrap()).collect()).unwrap()
            }
        })
        .collect();
    Multipartition::new(comps).unwrap()
}

pub fn mc(v: &[i64], e: i64) -> Multicharge {
    Multicharge::new(v.to_vec(), Modulus::Finite(e)).unwrap()
}

pub fn mp(parts: &[&[usize]]) -> Multipartition {
    Multipartition::from_parts(parts).unwrap()
}

/// The single cell in which `big` exceeds `small`, as (row, col, comp),
/// 1-based rows and columns.
pub fn added_cell(small: &Multipartition, big: &Multipartition) -> (usize, usize, usize) {
    assert_eq!(small.rank() + 1, big.rank());
    for c in 0..big.level() {
        let (a, b) = (small.component(c), big.component(c));
        for row in 1..=b.len() {
            if a.part(row) < b.part(row) {
                return (row, b.part(row), c);
            }
        }
    }
    panic!("{big} does not contain {small} plus a cell");
}

//! The level-one Mullineux map on `e`-regular partitions.
//!
//! The image of `p` is obtained by reading a path `∅ → p` in the level-one
//! crystal, negating every residue, and following the negated path from `∅`.
//! The result does not depend on the charge, so the crystal at charge `0` is
//! used throughout.

use crate::crystal::{follow_path, highest_weight_path, NodeOrder};
use crate::error::{Error, Result};
use crate::partitions::{Modulus, Multicharge, Multipartition, Partition};

fn level_one_order(e: Modulus) -> NodeOrder {
    NodeOrder::uglov(Multicharge { charges: vec![0], e })
}

/// Mullineux image of an `e`-regular partition. With `e = ∞` this is
/// conjugation.
pub fn m1(p: &Partition, e: Modulus) -> Result<Partition> {
    if !p.is_e_regular(e) {
        return Err(Error::NotRegular {
            partition: p.to_string(),
            e: e.value().unwrap_or(0),
        });
    }
    let ord = level_one_order(e);
    let mp = Multipartition::new(vec![p.clone()])?;
    let path = highest_weight_path(&mp, &ord)
        .map_err(|_| Error::InvariantViolated(format!("{p} regular but not in the level-one crystal")))?;
    let negated: Vec<i64> = path.iter().map(|&i| e.reduce(-i)).collect();
    let image = follow_path(&negated, &ord)?;
    Ok(image.into_components().swap_remove(0))
}

/// The `e = ∞` specialization: ordinary conjugation.
pub fn m1_infinity(p: &Partition) -> Partition {
    p.conjugate()
}

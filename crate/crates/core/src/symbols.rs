//! Symbols of charged bipartitions and the crystal isomorphisms `Ψ` between
//! Uglov crystals whose multicharges differ by a generator of the extended
//! affine symmetric group.
//!
//! For adjacent components `λ^(c-1)`, `λ^(c)` with charges `s_{c-1}`, `s_c`,
//! the symbol has top row `U` (β-numbers of `λ^(c)`) and bottom row `D`
//! (β-numbers of `λ^(c-1)`), where row `λ` with charge `s` holds
//! `λ_i - i + s + m` for `i = 1..m+s`. Pairing the rows and reading them back
//! with the charges swapped realises `Ψ` for `σ_c`; `τ` rotates components.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affine_weyl::{act, Generator, WeylWord};
use crate::error::{Error, Result};
use crate::partitions::{check_level, Multicharge, Multipartition, Partition};

/// A strictly increasing row of non-negative β-numbers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BetaRow {
    entries: Vec<i64>,
}

impl BetaRow {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.first().is_some_and(|&x| x < 0) {
            return Err(Error::NotASymbol(format!("negative entry in {entries:?}")));
        }
        if !is_strictly_increasing(&entries) {
            return Err(Error::NotASymbol(format!("row {entries:?} is not strictly increasing")));
        }
        Ok(BetaRow { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// β-numbers of `p` with charge `s` and shift `m`, ascending.
    pub fn of_partition(p: &Partition, s: i64, m: i64) -> Result<Self> {
        let len = m + s;
        if len < 1 || (p.len() as i64) > len {
            return Err(Error::InvalidM {
                m,
                min: min_m_for(p, s),
            });
        }
        let mut entries: Vec<i64> = (1..=len).map(|i| p.part(i as usize) as i64 - i + s + m).collect();
        entries.reverse();
        Ok(BetaRow { entries })
    }

    /// Inverse of [`BetaRow::of_partition`].
    pub fn to_partition(&self, s: i64, m: i64) -> Result<Partition> {
        let parts: Vec<i64> = self
            .entries
            .iter()
            .rev()
            .enumerate()
            .map(|(k, &b)| b + (k as i64 + 1) - s - m)
            .collect();
        if parts.iter().any(|&x| x < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotASymbol(format!(
                "row {:?} with charge {s} and m = {m} gives parts {parts:?}",
                self.entries
            )));
        }
        Partition::new(parts.into_iter().filter(|&x| x > 0).map(|x| x as usize).collect())
    }
}

impl fmt::Display for BetaRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.entries.iter().map(i64::to_string).collect();
        write!(f, "[{}]", items.join(","))
    }
}

fn is_strictly_increasing(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

fn min_m_for(p: &Partition, s: i64) -> i64 {
    (p.len() as i64 - s).max(-s).max(0) + 1
}

/// Two-row symbol of a charged bipartition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symbol {
    /// Row of `λ^(c)`, charge `s_c`.
    pub top: BetaRow,
    /// Row of `λ^(c-1)`, charge `s_{c-1}`.
    pub bottom: BetaRow,
    pub m: i64,
    /// `(s_{c-1}, s_c)`.
    pub charges: (i64, i64),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.top, self.bottom)
    }
}

/// Smallest valid shift for the bipartition `(lo, hi)` with charges
/// `(s_lo, s_hi)`: both rows must be non-empty and long enough.
pub fn minimal_m(lo: &Partition, hi: &Partition, charges: (i64, i64)) -> i64 {
    min_m_for(lo, charges.0).max(min_m_for(hi, charges.1))
}

/// Symbol of `(λ^(c-1), λ^(c)) = (lo, hi)` with charges `(s_{c-1}, s_c)`.
pub fn symbol_of(lo: &Partition, hi: &Partition, charges: (i64, i64), m: Option<i64>) -> Result<Symbol> {
    let min = minimal_m(lo, hi, charges);
    let m = m.unwrap_or(min);
    if m < min {
        return Err(Error::InvalidM { m, min });
    }
    Ok(Symbol {
        top: BetaRow::of_partition(hi, charges.1, m)?,
        bottom: BetaRow::of_partition(lo, charges.0, m)?,
        m,
        charges,
    })
}

/// `(λ^(c-1), λ^(c))` recovered from a symbol.
pub fn bipartition_of(sym: &Symbol) -> Result<(Partition, Partition)> {
    let (s_lo, s_hi) = sym.charges;
    if sym.top.len() as i64 != sym.m + s_hi || sym.bottom.len() as i64 != sym.m + s_lo {
        return Err(Error::NotASymbol(format!("row lengths do not match charges in {sym}")));
    }
    Ok((
        sym.bottom.to_partition(s_lo, sym.m)?,
        sym.top.to_partition(s_hi, sym.m)?,
    ))
}

/// Pairs the rows of a symbol.
///
/// With `r = |U| ≥ s = |D|`, each `y ∈ D` in increasing order takes the
/// largest remaining `x ∈ U` with `x ≤ y`, or the largest remaining `x` if
/// there is none. The matched elements form `D'`, and `U'` is the rest of `U`
/// together with `D`. With `r < s` the roles are mirrored: each `x ∈ U` takes
/// the smallest remaining `y ≥ x` (or the smallest remaining), the matched
/// elements form `U'`, and `D'` is the rest of `D` together with `U`.
pub fn pair_sequences(u: &[i64], d: &[i64]) -> Result<(Vec<i64>, Vec<i64>)> {
    if !is_strictly_increasing(u) || !is_strictly_increasing(d) {
        return Err(Error::MalformedInput(format!(
            "rows {u:?}, {d:?} must be strictly increasing"
        )));
    }
    if u.len() >= d.len() {
        let (matched, rest) = match_rows(u, d, |rem, y| {
            rem.iter().rposition(|&x| x <= y).or_else(|| rem.len().checked_sub(1))
        })?;
        Ok((merge(rest, d), matched))
    } else {
        let (matched, rest) = match_rows(d, u, |rem, x| {
            rem.iter()
                .position(|&y| y >= x)
                .or_else(|| (!rem.is_empty()).then_some(0))
        })?;
        Ok((matched, merge(rest, u)))
    }
}

/// Matches every element of `keys` (in order) against a distinct element of
/// `pool` chosen by `pick`; returns (matched sorted, unmatched sorted).
fn match_rows(pool: &[i64], keys: &[i64], pick: impl Fn(&[i64], i64) -> Option<usize>) -> Result<(Vec<i64>, Vec<i64>)> {
    let mut remaining = pool.to_vec();
    let mut matched = Vec::with_capacity(keys.len());
    for &k in keys {
        let idx = pick(&remaining, k).ok_or(Error::MatchExhausted)?;
        matched.push(remaining.remove(idx));
    }
    matched.sort_unstable();
    Ok((matched, remaining))
}

fn merge(mut a: Vec<i64>, b: &[i64]) -> Vec<i64> {
    a.extend_from_slice(b);
    a.sort_unstable();
    a
}

fn check_index(c: usize, l: usize) -> Result<()> {
    if c == 0 || c >= l {
        return Err(Error::IndexOutOfRange { index: c, level: l });
    }
    Ok(())
}

/// `Ψ` for `σ_c`: a bijection from the Uglov crystal of `s` to that of
/// `σ_c(s)`.
pub fn psi_sigma(mp: &Multipartition, s: &Multicharge, c: usize) -> Result<(Multipartition, Multicharge)> {
    psi_sigma_with_m(mp, s, c, None)
}

/// [`psi_sigma`] with an explicit symbol shift.
pub fn psi_sigma_with_m(
    mp: &Multipartition,
    s: &Multicharge,
    c: usize,
    m: Option<i64>,
) -> Result<(Multipartition, Multicharge)> {
    check_level(mp, s)?;
    check_index(c, mp.level())?;
    let charges = (s.get(c - 1), s.get(c));
    let sym = symbol_of(mp.component(c - 1), mp.component(c), charges, m)?;
    let (top, bottom) = pair_sequences(sym.top.entries(), sym.bottom.entries())?;
    let new_hi = BetaRow::new(top)?.to_partition(charges.1, sym.m)?;
    let new_lo = BetaRow::new(bottom)?.to_partition(charges.0, sym.m)?;
    let mut out = mp.clone();
    out.replace(c - 1, new_hi);
    out.replace(c, new_lo);
    let mut t = s.clone();
    t.charges.swap(c - 1, c);
    Ok((out, t))
}

/// `Ψ` for `τ`: rotate components left; the charge becomes `τ(s)`.
pub fn psi_tau(mp: &Multipartition, s: &Multicharge) -> Result<(Multipartition, Multicharge)> {
    check_level(mp, s)?;
    let mut comps = mp.components().to_vec();
    comps.rotate_left(1);
    Ok((Multipartition::new(comps)?, act(&WeylWord::tau(), s)?))
}

/// `Ψ` for `τ^{-1}`: rotate components right.
pub fn psi_tau_inv(mp: &Multipartition, s: &Multicharge) -> Result<(Multipartition, Multicharge)> {
    check_level(mp, s)?;
    let mut comps = mp.components().to_vec();
    comps.rotate_right(1);
    Ok((Multipartition::new(comps)?, act(&WeylWord::tau_inv(), s)?))
}

/// Applies the letters of `w` right to left, threading the integer
/// multicharge.
pub fn psi_word(mp: &Multipartition, s: &Multicharge, w: &WeylWord) -> Result<(Multipartition, Multicharge)> {
    check_level(mp, s)?;
    w.validate(mp.level())?;
    let mut cur = (mp.clone(), s.clone());
    for &g in w.letters.iter().rev() {
        cur = match g {
            Generator::Sigma(c) => psi_sigma(&cur.0, &cur.1, c)?,
            Generator::Tau => psi_tau(&cur.0, &cur.1)?,
            Generator::TauInv => psi_tau_inv(&cur.0, &cur.1)?,
        };
    }
    Ok(cur)
}

/// `κ = τσ_1` at level two: `(v_0, v_1) ↦ (v_0, v_1 + e)`.
fn kappa(mp: &Multipartition, s: &Multicharge) -> Result<(Multipartition, Multicharge)> {
    let (x, t) = psi_sigma(mp, s, 1)?;
    psi_tau(&x, &t)
}

fn check_level_two(mp: &Multipartition, s: &Multicharge) -> Result<()> {
    if s.level() != 2 {
        return Err(Error::LevelMismatch {
            expected: 2,
            found: s.level(),
        });
    }
    check_level(mp, s)
}

/// Least `m ≥ 0` with `s_1 - s_0 + m e > n - 1`.
pub fn translation_bound(s: &Multicharge, n: usize) -> Result<usize> {
    let e = s.e.require_finite()?;
    let gap = s.get(1) - s.get(0);
    let bound = n as i64 - 1;
    Ok(if gap > bound {
        0
    } else {
        ((bound - gap) / e + 1) as usize
    })
}

/// Level-two translation towards the asymptotic chamber, stopping at the
/// first `k` with `κ(μ^(k)) = μ^(k)`, where `μ^(0) = mp` and
/// `μ^(k+1) = Ψ_κ(μ^(k))`.
///
/// This early stop is a heuristic: the orbit can repeat an image before it
/// reaches the asymptotic chamber, in which case the result differs from
/// [`psi_tau_translate`]. Returns the image and `k`.
pub fn psi_tau_stabilized(mp: &Multipartition, s: &Multicharge, n: usize) -> Result<(Multipartition, usize)> {
    check_level_two(mp, s)?;
    let bound = translation_bound(s, n)?;
    let mut cur = (mp.clone(), s.clone());
    for k in 0..=bound {
        let next = kappa(&cur.0, &cur.1)?;
        if next.0 == cur.0 {
            return Ok((cur.0, k));
        }
        cur = next;
    }
    Err(Error::NoStabilization { bound })
}

/// Level-two translation applying `κ` exactly `m` times, where `m` is the
/// least integer making the charge asymptotic for rank `n`.
pub fn psi_tau_translate(mp: &Multipartition, s: &Multicharge, n: usize) -> Result<(Multipartition, Multicharge)> {
    check_level_two(mp, s)?;
    let bound = translation_bound(s, n)?;
    let mut cur = (mp.clone(), s.clone());
    for _ in 0..bound {
        cur = kappa(&cur.0, &cur.1)?;
    }
    Ok(cur)
}

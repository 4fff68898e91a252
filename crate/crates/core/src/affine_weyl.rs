//! The extended affine symmetric group as words in `σ_1..σ_{l-1}`, `τ` and
//! `τ^{-1}`, acting on integer multicharges.
//!
//! `σ_c` swaps entries `c-1` and `c`; `τ` sends `(s_0,…,s_{l-1})` to
//! `(s_1,…,s_{l-1},s_0+e)`. Words act on the left: the last letter is applied
//! first.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Multicharge;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    Sigma(usize),
    Tau,
    TauInv,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sigma(c) => write!(f, "s{c}"),
            Generator::Tau => f.write_str("t"),
            Generator::TauInv => f.write_str("t-"),
        }
    }
}

/// An unreduced word; `letters[0]` is the leftmost letter.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylWord {
    pub letters: Vec<Generator>,
}

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord::default()
    }

    pub fn from_letters(letters: Vec<Generator>) -> Self {
        WeylWord { letters }
    }

    pub fn sigma(c: usize) -> Self {
        WeylWord {
            letters: vec![Generator::Sigma(c)],
        }
    }

    pub fn tau() -> Self {
        WeylWord {
            letters: vec![Generator::Tau],
        }
    }

    pub fn tau_inv() -> Self {
        WeylWord {
            letters: vec![Generator::TauInv],
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self · other`: `other` acts first.
    pub fn then(&self, other: &WeylWord) -> WeylWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        WeylWord { letters }
    }

    pub fn pow(&self, k: usize) -> WeylWord {
        WeylWord {
            letters: self.letters.repeat(k),
        }
    }

    /// Word of the inverse element.
    pub fn inverse(&self) -> WeylWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|g| match g {
                Generator::Sigma(c) => Generator::Sigma(*c),
                Generator::Tau => Generator::TauInv,
                Generator::TauInv => Generator::Tau,
            })
            .collect();
        WeylWord { letters }
    }

    /// Checks every `σ_c` index lies in `1..=l-1`.
    pub fn validate(&self, l: usize) -> Result<()> {
        for g in &self.letters {
            if let Generator::Sigma(c) = *g {
                if c == 0 || c >= l {
                    return Err(Error::IndexOutOfRange { index: c, level: l });
                }
            }
        }
        Ok(())
    }
}

impl Mul for &WeylWord {
    type Output = WeylWord;
    fn mul(self, rhs: &WeylWord) -> WeylWord {
        self.then(rhs)
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("id");
        }
        for (k, g) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Applies one generator in place.
pub fn apply_generator(g: Generator, v: &mut [i64], e: Option<i64>) -> Result<()> {
    let l = v.len();
    match g {
        Generator::Sigma(c) => {
            if c == 0 || c >= l {
                return Err(Error::IndexOutOfRange { index: c, level: l });
            }
            v.swap(c - 1, c);
        }
        Generator::Tau => {
            let e = e.ok_or(Error::InfiniteModulus)?;
            if l > 0 {
                v.rotate_left(1);
                v[l - 1] += e;
            }
        }
        Generator::TauInv => {
            let e = e.ok_or(Error::InfiniteModulus)?;
            if l > 0 {
                v.rotate_right(1);
                v[0] -= e;
            }
        }
    }
    Ok(())
}

/// Left action of `w` on the multicharge `s`.
pub fn act(w: &WeylWord, s: &Multicharge) -> Result<Multicharge> {
    let mut v = s.charges.clone();
    for &g in w.letters.iter().rev() {
        apply_generator(g, &mut v, s.e.value())?;
    }
    Ok(Multicharge { charges: v, e: s.e })
}

/// `σ_c σ_{c-1} ⋯ σ_d` (empty when `c < d`).
fn descending(c: usize, d: usize) -> WeylWord {
    WeylWord {
        letters: (d..=c).rev().map(Generator::Sigma).collect(),
    }
}

fn check_p(p: usize, l: usize) -> Result<()> {
    if p == 0 || p >= l {
        return Err(Error::IndexOutOfRange { index: p, level: l });
    }
    Ok(())
}

/// `γ_p`, acting as the left rotation by `p`.
pub fn gamma_word(p: usize, l: usize) -> Result<WeylWord> {
    check_p(p, l)?;
    let mut w = WeylWord::identity();
    for j in 0..p {
        w = w.then(&descending(l - p + j, 1 + j));
    }
    Ok(w)
}

/// `α_p = τ^{l-p} γ_p`, adding `e` to the entries `p..l-1`.
pub fn alpha_word(p: usize, l: usize) -> Result<WeylWord> {
    Ok(WeylWord::tau().pow(l - p).then(&gamma_word(p, l)?))
}

/// The longest element of the finite symmetric group, reversing the tuple.
pub fn w0_word(l: usize) -> WeylWord {
    let mut w = WeylWord::identity();
    for c in 1..l {
        w = w.then(&descending(c, 1));
    }
    w
}

/// `η = α_1^{2(p_{l-1}+1)} ⋯ α_{l-1}^{2(p_1+1)} w_0`, with `p = (p_1,…,p_{l-1})`.
pub fn eta_word(p: &[u64], l: usize) -> Result<WeylWord> {
    if p.len() + 1 != l.max(1) {
        return Err(Error::LevelMismatch {
            expected: l.saturating_sub(1),
            found: p.len(),
        });
    }
    let mut w = WeylWord::identity();
    for k in 1..l {
        let exp = 2 * (p[l - k - 1] as usize + 1);
        w = w.then(&alpha_word(k, l)?.pow(exp));
    }
    Ok(w.then(&w0_word(l)))
}

/// Compact notation for `η`, e.g. `a1^8 a2^8 w0`.
pub fn eta_notation(p: &[u64]) -> String {
    let l = p.len() + 1;
    let mut tokens: Vec<String> = (1..l).map(|k| format!("a{k}^{}", 2 * (p[l - k - 1] + 1))).collect();
    tokens.push("w0".to_string());
    tokens.join(" ")
}

/// Lifts a residue class to an asymptotic multicharge for rank `n`.
///
/// Base entries are `b_c = -s_c` (with `negate`) or `s_c`, where
/// `s_c ∈ 0..e`. `p_c` is the least non-negative integer with
/// `b_c - b_{c-1} + p_c e > n - 1`, and entry `c` of the result is
/// `b_c + (p_1 + … + p_c) e`.
pub fn asymptotic_lift(class: &Multicharge, n: usize, negate: bool) -> Result<(Multicharge, Vec<u64>)> {
    let e = class.e.require_finite()?;
    let base: Vec<i64> = class
        .residue_class()
        .charges
        .iter()
        .map(|&x| if negate { -x } else { x })
        .collect();
    let bound = n as i64 - 1;
    let mut ps = Vec::with_capacity(base.len().saturating_sub(1));
    let mut out = Vec::with_capacity(base.len());
    let mut acc = 0i64;
    for (c, &b) in base.iter().enumerate() {
        if c > 0 {
            let gap = b - base[c - 1];
            let p = if gap > bound { 0 } else { (bound - gap) / e + 1 };
            ps.push(p as u64);
            acc += p * e;
        }
        out.push(b + acc);
    }
    Ok((
        Multicharge {
            charges: out,
            e: class.e,
        },
        ps,
    ))
}

/// Whether `s_{i+1} - s_i > n - 1` for every consecutive pair.
pub fn is_asymptotic(s: &Multicharge, n: usize) -> bool {
    s.charges.windows(2).all(|w| w[1] - w[0] > n as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Modulus;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn mc(v: &[i64], e: i64) -> Multicharge {
        Multicharge::new(v.to_vec(), Modulus::Finite(e)).unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(
            act(&WeylWord::tau(), &mc(&[0, 11, 21], 4)).unwrap().charges,
            vec![11, 21, 4]
        );
        assert_eq!(
            act(&WeylWord::sigma(1), &mc(&[0, 2, 0], 4)).unwrap().charges,
            vec![2, 0, 0]
        );
        assert_eq!(
            act(&WeylWord::sigma(3), &mc(&[0, 2, 0], 4)),
            Err(Error::IndexOutOfRange { index: 3, level: 3 })
        );
        let inf = Multicharge::new(vec![0, 1], Modulus::Infinite).unwrap();
        assert_eq!(act(&WeylWord::tau(), &inf), Err(Error::InfiniteModulus));
        assert_eq!(act(&WeylWord::sigma(1), &inf).unwrap().charges, vec![1, 0]);
    }

    #[test]
    fn named_elements() {
        let v = mc(&[10, 20, 30], 4);
        assert_eq!(act(&gamma_word(1, 3).unwrap(), &v).unwrap().charges, vec![20, 30, 10]);
        assert_eq!(act(&gamma_word(2, 3).unwrap(), &v).unwrap().charges, vec![30, 10, 20]);
        assert_eq!(gamma_word(1, 2).unwrap(), WeylWord::sigma(1));
        assert_eq!(act(&alpha_word(1, 3).unwrap(), &v).unwrap().charges, vec![10, 24, 34]);
        assert_eq!(act(&alpha_word(2, 3).unwrap(), &v).unwrap().charges, vec![10, 20, 34]);
        assert_eq!(act(&w0_word(3), &v).unwrap().charges, vec![30, 20, 10]);
        assert!(w0_word(1).is_empty());
        assert!(gamma_word(0, 3).is_err());
        assert!(alpha_word(3, 3).is_err());
    }

    #[test]
    fn gamma_and_alpha_for_all_small_levels() {
        for l in 2..=6 {
            let v: Vec<i64> = (0..l as i64).map(|x| 100 * x).collect();
            let s = mc(&v, 7);
            for p in 1..l {
                let mut rotated = v.clone();
                rotated.rotate_left(p);
                assert_eq!(act(&gamma_word(p, l).unwrap(), &s).unwrap().charges, rotated);
                let shifted: Vec<i64> = v
                    .iter()
                    .enumerate()
                    .map(|(k, &x)| if k >= p { x + 7 } else { x })
                    .collect();
                assert_eq!(act(&alpha_word(p, l).unwrap(), &s).unwrap().charges, shifted);
            }
            let mut rev = v.clone();
            rev.reverse();
            assert_eq!(act(&w0_word(l), &s).unwrap().charges, rev);
        }
    }

    #[test]
    fn eta_examples() {
        let eta = eta_word(&[3, 3], 3).unwrap();
        let expected = alpha_word(1, 3)
            .unwrap()
            .pow(8)
            .then(&alpha_word(2, 3).unwrap().pow(8))
            .then(&w0_word(3));
        assert_eq!(eta, expected);
        assert_eq!(eta_notation(&[3, 3]), "a1^8 a2^8 w0");
        let out = act(&eta, &mc(&[0, 11, 21], 4)).unwrap();
        assert_eq!(out.charges, vec![21, 43, 64]);
        assert_eq!(out.residue_class().charges, vec![1, 3, 0]);
        assert!(eta_word(&[], 1).unwrap().is_empty());
        assert!(eta_word(&[1], 3).is_err());
    }

    #[test]
    fn lift_examples() {
        let (s, p) = asymptotic_lift(&mc(&[0, 1, 3], 4), 10, true).unwrap();
        assert_eq!(s.charges, vec![0, 11, 21]);
        assert_eq!(p, vec![3, 3]);
        let (s, p) = asymptotic_lift(&mc(&[2], 4), 5, true).unwrap();
        assert_eq!(s.charges, vec![-2]);
        assert!(p.is_empty());
        let inf = Multicharge::new(vec![0, 1], Modulus::Infinite).unwrap();
        assert_eq!(asymptotic_lift(&inf, 2, true), Err(Error::InfiniteModulus));
    }

    #[test]
    fn asymptotic_predicate() {
        assert!(is_asymptotic(&mc(&[0, 11, 21], 4), 10));
        assert!(!is_asymptotic(&mc(&[0, 11, 20], 4), 11));
        assert!(is_asymptotic(&mc(&[5], 4), 100));
        assert!(is_asymptotic(&mc(&[3, 3], 4), 0));
    }

    #[test]
    fn lifts_are_asymptotic_and_minimal() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..500 {
            let e = rng.gen_range(2..=6);
            let l = rng.gen_range(1..=4);
            let n = rng.gen_range(0..=15);
            let class: Vec<i64> = (0..l).map(|_| rng.gen_range(0..e)).collect();
            for negate in [true, false] {
                let (s, p) = asymptotic_lift(&mc(&class, e), n, negate).unwrap();
                assert!(is_asymptotic(&s, n));
                assert!(s.same_class(&if negate {
                    mc(&class, e).negated_class()
                } else {
                    mc(&class, e)
                }));
                // decreasing any p_c breaks asymptoticity
                for c in 1..l {
                    if p[c - 1] > 0 {
                        assert!(s.charges[c] - s.charges[c - 1] - e < n as i64);
                    }
                }
                // η carries the lift to an asymptotic charge in the twisted class
                if negate {
                    let out = act(&eta_word(&p, l).unwrap(), &s).unwrap();
                    assert!(is_asymptotic(&out, n));
                    assert!(out.same_class(&mc(&class, e).twisted_class()));
                }
            }
        }
    }

    fn random_tuple(rng: &mut StdRng, l: usize) -> Vec<i64> {
        (0..l).map(|_| rng.gen_range(-50..50)).collect()
    }

    fn same_action(a: &WeylWord, b: &WeylWord, v: &Multicharge) -> bool {
        act(a, v).unwrap() == act(b, v).unwrap()
    }

    #[test]
    fn relations_on_random_tuples() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..1000 {
            let l = rng.gen_range(2..=5);
            let e = rng.gen_range(2..=6);
            let v = mc(&random_tuple(&mut rng, l), e);
            let c = rng.gen_range(1..l);
            let s = WeylWord::sigma;
            assert!(same_action(&s(c).pow(2), &WeylWord::identity(), &v));
            if c + 1 < l {
                let lhs = s(c).then(&s(c + 1)).then(&s(c));
                let rhs = s(c + 1).then(&s(c)).then(&s(c + 1));
                assert!(same_action(&lhs, &rhs, &v));
            }
            for d in 1..l {
                if d.abs_diff(c) > 1 {
                    assert!(same_action(&s(c).then(&s(d)), &s(d).then(&s(c)), &v));
                }
            }
            if c >= 2 {
                assert!(same_action(
                    &WeylWord::tau().then(&s(c)),
                    &s(c - 1).then(&WeylWord::tau()),
                    &v
                ));
            }
            let t = WeylWord::tau();
            assert!(same_action(&WeylWord::tau_inv().then(&t), &WeylWord::identity(), &v));
            assert!(same_action(&t.then(&WeylWord::tau_inv()), &WeylWord::identity(), &v));
            let all_shifted: Vec<i64> = v.charges.iter().map(|x| x + e).collect();
            assert_eq!(act(&t.pow(l), &v).unwrap().charges, all_shifted);
            let w: WeylWord = WeylWord::from_letters(
                (0..rng.gen_range(0..8))
                    .map(|_| match rng.gen_range(0..3) {
                        0 => Generator::Sigma(rng.gen_range(1..l)),
                        1 => Generator::Tau,
                        _ => Generator::TauInv,
                    })
                    .collect(),
            );
            assert!(same_action(&w.inverse().then(&w), &WeylWord::identity(), &v));
        }
    }

    #[test]
    fn translations_z_c() {
        // ξ = σ_{l-1}⋯σ_1 and z_c = ξ^{l-c} τ^c adds e to the first c entries
        for l in 2..=4 {
            let xi = descending(l - 1, 1);
            let v: Vec<i64> = (0..l as i64).map(|x| 3 * x - 1).collect();
            let s = mc(&v, 5);
            for c in 1..l {
                let z = xi.pow(l - c).then(&WeylWord::tau().pow(c));
                let want: Vec<i64> = v
                    .iter()
                    .enumerate()
                    .map(|(k, &x)| if k < c { x + 5 } else { x })
                    .collect();
                assert_eq!(act(&z, &s).unwrap().charges, want, "l={l} c={c}");
            }
        }
    }

    #[test]
    fn display() {
        let w = WeylWord::sigma(2).then(&WeylWord::tau()).then(&WeylWord::tau_inv());
        assert_eq!(w.to_string(), "s2 t t-");
        assert_eq!(WeylWord::identity().to_string(), "id");
    }
}

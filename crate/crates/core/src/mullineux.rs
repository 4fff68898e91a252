//! The Mullineux involution on Kleshchev multipartitions.
//!
//! For a Kleshchev multipartition `λ` in the crystal of class `𝔰`, the image
//! lies in the crystal of class `𝔰̃ = (-s_{l-1}, …, -s_0)`. It is computed
//! without good nodes:
//!
//! 1. `ν` = the level-one Mullineux map applied to every component;
//! 2. lift `-𝔰` to an asymptotic multicharge `-s` for the rank;
//! 3. carry `ν` along `η` with the symbol isomorphisms; the final charge is
//!    asymptotic and lies in `𝔰̃`, so the result is read as a Kleshchev
//!    multipartition of class `𝔰̃`.
//!
//! [`mullineux_oracle`] computes the same map by negating a crystal path.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::affine_weyl::{asymptotic_lift, eta_notation, eta_word, is_asymptotic, w0_word};
use crate::crystal::{enumerate, follow_path, highest_weight_path, is_vertex, EnumerateOptions, NodeOrder};
use crate::error::{Error, Result};
use crate::partitions::{check_level, Modulus, Multicharge, Multipartition, Partition};
use crate::rank1::m1;
use crate::symbols::{psi_sigma, psi_tau_translate, psi_word};

/// One step of the pipeline: the multipartition and the charge it is read
/// with after the step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stage {
    pub name: &'static str,
    pub charge: Multicharge,
    pub mp: Multipartition,
}

#[derive(Debug, Clone, Serialize)]
pub struct MullineuxResult {
    pub image: Multipartition,
    pub source_class: Multicharge,
    pub target_class: Multicharge,
    /// `(p_1, …, p_{l-1})` used for the lift and for `η`.
    pub exponents: Vec<u64>,
    /// `η` in compact notation.
    pub eta: String,
    pub trace: Vec<Stage>,
}

impl PartialEq for MullineuxResult {
    fn eq(&self, other: &Self) -> bool {
        self.image == other.image
            && self.source_class == other.source_class
            && self.target_class == other.target_class
            && self.exponents == other.exponents
            && self.eta == other.eta
    }
}

impl Eq for MullineuxResult {}

impl MullineuxResult {
    pub fn stage(&self, name: &str) -> Option<&Stage> {
        self.trace.iter().find(|s| s.name == name)
    }
}

fn check_components_regular(mp: &Multipartition, e: Modulus) -> Result<()> {
    for (c, p) in mp.components().iter().enumerate() {
        if !p.is_e_regular(e) {
            return Err(Error::NotRegularComponent {
                component: c,
                e: e.value().unwrap_or(0),
            });
        }
    }
    Ok(())
}

fn componentwise_m1(mp: &Multipartition, e: Modulus) -> Result<Multipartition> {
    let comps = mp
        .components()
        .iter()
        .map(|p| m1(p, e))
        .collect::<Result<Vec<Partition>>>()?;
    Multipartition::new(comps)
}

/// The Mullineux image of `mp`, a Kleshchev multipartition for `class`.
///
/// `n` is the rank used for the asymptotic bounds; it defaults to the rank of
/// `mp` and any larger value gives the same image.
pub fn mullineux(mp: &Multipartition, class: &Multicharge, n: Option<usize>) -> Result<MullineuxResult> {
    class.e.require_finite()?;
    check_level(mp, class)?;
    let rank = mp.rank();
    let n = n.unwrap_or(rank);
    if n < rank {
        return Err(Error::RankTooSmall { n, rank });
    }
    check_components_regular(mp, class.e)?;
    let source = class.residue_class();
    if !is_vertex(mp, &NodeOrder::kleshchev(source.clone())) {
        return Err(Error::NotKleshchev(mp.to_string()));
    }
    let l = mp.level();
    let target = source.twisted_class();

    let nu = componentwise_m1(mp, class.e)?;
    let (lift, exponents) = asymptotic_lift(&source, n, true)?;
    if !is_asymptotic(&lift, n) {
        return Err(Error::InvariantViolated(format!(
            "lift {lift} is not asymptotic for rank {n}"
        )));
    }
    let eta = eta_word(&exponents, l)?;
    let (image, end) = psi_word(&nu, &lift, &eta)?;
    if !is_asymptotic(&end, n) || !end.same_class(&target) {
        return Err(Error::InvariantViolated(format!(
            "η moved {lift} to {end}, expected an asymptotic charge in {target}"
        )));
    }

    let trace = vec![
        Stage {
            name: "m1",
            charge: source.negated_class(),
            mp: nu.clone(),
        },
        Stage {
            name: "lift",
            charge: lift,
            mp: nu,
        },
        Stage {
            name: "eta",
            charge: end,
            mp: image.clone(),
        },
        Stage {
            name: "reduce",
            charge: target.clone(),
            mp: image.clone(),
        },
    ];
    Ok(MullineuxResult {
        image,
        source_class: source,
        target_class: target,
        eta: eta_notation(&exponents),
        exponents,
        trace,
    })
}

/// Negated-path computation: read a path to `mp` in the Kleshchev crystal of
/// `class`, negate its residues and follow them in the crystal of `𝔰̃`.
pub fn mullineux_oracle(mp: &Multipartition, class: &Multicharge) -> Result<Multipartition> {
    let e = class.e.require_finite()?;
    let source = class.residue_class();
    let path = highest_weight_path(mp, &NodeOrder::kleshchev(source.clone())).map_err(|err| match err {
        Error::NotInCrystal(s) => Error::NotKleshchev(s),
        other => other,
    })?;
    let negated: Vec<i64> = path.iter().map(|&i| (-i).rem_euclid(e)).collect();
    follow_path(&negated, &NodeOrder::kleshchev(source.twisted_class()))
}

/// The `e = ∞` case for a vertex of the Uglov crystal of the integer charge
/// `s`: conjugate each component, then carry the result from `-s` to
/// `w_0(-s) = (-s_{l-1}, …, -s_0)`.
pub fn mullineux_infinity(mp: &Multipartition, s: &Multicharge) -> Result<Multipartition> {
    let s = Multicharge {
        charges: s.charges.clone(),
        e: Modulus::Infinite,
    };
    check_level(mp, &s)?;
    if !is_vertex(mp, &NodeOrder::uglov(s.clone())) {
        return Err(Error::NotInCrystal(mp.to_string()));
    }
    let conj = Multipartition::new(mp.components().iter().map(Partition::conjugate).collect())?;
    let neg = Multicharge {
        charges: s.charges.iter().map(|&x| -x).collect(),
        e: Modulus::Infinite,
    };
    Ok(psi_word(&conj, &neg, &w0_word(mp.level()))?.0)
}

/// Negated-path computation for `e = ∞` in the Uglov crystals of `s` and
/// `(-s_{l-1}, …, -s_0)`.
pub fn mullineux_infinity_oracle(mp: &Multipartition, s: &Multicharge) -> Result<Multipartition> {
    let s = Multicharge {
        charges: s.charges.clone(),
        e: Modulus::Infinite,
    };
    let path = highest_weight_path(mp, &NodeOrder::uglov(s.clone()))?;
    let negated: Vec<i64> = path.iter().map(|&i| -i).collect();
    follow_path(&negated, &NodeOrder::uglov(s.twisted()))
}

/// Level-two route through a single transposition: after `σ_1` the charge is
/// translated back into the asymptotic chamber with `κ = τσ_1`.
pub fn mullineux_level_two(mp: &Multipartition, class: &Multicharge, n: Option<usize>) -> Result<Multipartition> {
    if class.level() != 2 {
        return Err(Error::LevelMismatch {
            expected: 2,
            found: class.level(),
        });
    }
    let result = mullineux(mp, class, n)?;
    let n = n.unwrap_or(mp.rank());
    let nu = &result.trace[0].mp;
    let (lift, _) = asymptotic_lift(class, n, true)?;
    let (x, t) = psi_sigma(nu, &lift, 1)?;
    Ok(psi_tau_translate(&x, &t, n)?.0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub class: Vec<i64>,
    pub mp: String,
    pub pipeline: String,
    pub oracle: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub l: usize,
    pub e: i64,
    pub n_max: usize,
    pub classes: usize,
    pub cases: usize,
    /// Pipeline and oracle disagree (or one of them failed).
    pub mismatches: Vec<Mismatch>,
    /// Applying the map for `𝔰̃` to the image did not return the input.
    pub involution_failures: Vec<Mismatch>,
    /// The image is not a Kleshchev multipartition for `𝔰̃`.
    pub membership_failures: Vec<Mismatch>,
    /// The componentwise image `ν` is not Kleshchev for `-𝔰`.
    pub stage_one_failures: Vec<Mismatch>,
    pub elapsed_ms: u128,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
            && self.involution_failures.is_empty()
            && self.membership_failures.is_empty()
            && self.stage_one_failures.is_empty()
    }
}

/// Every class in `{0..e-1}^l`, in lexicographic order.
pub fn all_classes(l: usize, e: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..e).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

fn show(r: &Result<Multipartition>) -> String {
    match r {
        Ok(mp) => mp.to_string(),
        Err(err) => format!("error: {err}"),
    }
}

#[derive(Default)]
struct ClassOutcome {
    cases: usize,
    mismatches: Vec<Mismatch>,
    involution: Vec<Mismatch>,
    membership: Vec<Mismatch>,
    stage_one: Vec<Mismatch>,
}

fn verify_class(charges: &[i64], e: i64, n_max: usize) -> Result<ClassOutcome> {
    let class = Multicharge::new(charges.to_vec(), Modulus::finite(e)?)?;
    let target = class.twisted_class();
    let graph = enumerate(
        &NodeOrder::kleshchev(class.clone()),
        n_max,
        EnumerateOptions::vertices_only(),
    )?;
    let mut out = ClassOutcome::default();
    for mp in graph.vertices() {
        out.cases += 1;
        let record = |got: String, want: String| Mismatch {
            class: charges.to_vec(),
            mp: mp.to_string(),
            pipeline: got,
            oracle: want,
        };
        let pipeline = mullineux(mp, &class, None);
        let image = pipeline.as_ref().map(|r| r.image.clone()).map_err(Clone::clone);
        let oracle = mullineux_oracle(mp, &class);
        if image.is_err() || image != oracle {
            out.mismatches.push(record(show(&image), show(&oracle)));
        }
        let Ok(result) = pipeline else { continue };
        let back = mullineux(&result.image, &target, None).map(|r| r.image);
        if back.as_ref() != Ok(mp) {
            out.involution.push(record(show(&back), mp.to_string()));
        }
        if !is_vertex(&result.image, &NodeOrder::kleshchev(target.clone())) {
            out.membership
                .push(record(result.image.to_string(), format!("vertex of class {target}")));
        }
        let nu = &result.trace[0].mp;
        if !is_vertex(nu, &NodeOrder::kleshchev(class.negated_class())) {
            out.stage_one.push(record(
                nu.to_string(),
                format!("vertex of class {}", class.negated_class()),
            ));
        }
    }
    Ok(out)
}

/// Compares the pipeline with the oracle on every Kleshchev multipartition
/// of rank at most `n_max`, for every class in `{0..e-1}^l`.
pub fn verify_sweep(l: usize, e: i64, n_max: usize) -> Result<VerifyReport> {
    Modulus::finite(e)?;
    let start = Instant::now();
    let classes = all_classes(l, e);
    let outcomes = classes
        .par_iter()
        .map(|c| verify_class(c, e, n_max))
        .collect::<Result<Vec<_>>>()?;
    let mut report = VerifyReport {
        l,
        e,
        n_max,
        classes: classes.len(),
        cases: 0,
        mismatches: Vec::new(),
        involution_failures: Vec::new(),
        membership_failures: Vec::new(),
        stage_one_failures: Vec::new(),
        elapsed_ms: 0,
    };
    for o in outcomes {
        report.cases += o.cases;
        report.mismatches.extend(o.mismatches);
        report.involution_failures.extend(o.involution);
        report.membership_failures.extend(o.membership);
        report.stage_one_failures.extend(o.stage_one);
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Outcome of comparing the finite map at `e > n` with the `e = ∞` map.
#[derive(Debug, Clone, Default, Serialize)]
pub struct InfinityComparison {
    pub shared: usize,
    pub agree: usize,
    pub disagreements: Vec<Mismatch>,
}

/// For charges with entries in `0..e` and `e > n_max`, compares the finite
/// map with the `e = ∞` map on multipartitions lying in both the Kleshchev
/// crystal of the class and the `e = ∞` Uglov crystal of the charge.
/// Exploratory: the two maps are not claimed to agree.
pub fn compare_with_infinity(l: usize, e: i64, n_max: usize) -> Result<InfinityComparison> {
    let mut cmp = InfinityComparison::default();
    for charges in all_classes(l, e) {
        let class = Multicharge::new(charges.clone(), Modulus::finite(e)?)?;
        let s_inf = Multicharge::new(charges.clone(), Modulus::Infinite)?;
        let ord_inf = NodeOrder::uglov(s_inf.clone());
        let graph = enumerate(
            &NodeOrder::kleshchev(class.clone()),
            n_max,
            EnumerateOptions::vertices_only(),
        )?;
        for mp in graph.vertices().filter(|mp| is_vertex(mp, &ord_inf)) {
            cmp.shared += 1;
            let finite = mullineux(mp, &class, None).map(|r| r.image);
            let infinite = mullineux_infinity(mp, &s_inf);
            if finite.is_ok() && finite == infinite {
                cmp.agree += 1;
            } else {
                cmp.disagreements.push(Mismatch {
                    class: charges.clone(),
                    mp: mp.to_string(),
                    pipeline: show(&finite),
                    oracle: show(&infinite),
                });
            }
        }
    }
    Ok(cmp)
}

//! Machine verification of the removal theorems and of the combinatorial
//! lemmas feeding them.
//!
//! Every check sweeps all instances in a range of symmetric group degrees,
//! counts the instances whose hypotheses hold, skips the rest, and records
//! each mismatch together with the full multiplicity data of both sides.
//! Instances are independent, so each degree is processed with a parallel
//! map whose partial tallies are merged in a fixed order; reports do not
//! depend on the thread schedule (wall time aside).

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use num::{BigInt, BigRational, One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{
    expand_in_two_regular_basis, perm_character_value, rationals, tensor_perm_multiplicity,
    tensor_perm_multiplicity_via_characters,
};
use crate::modrep::DecompositionMatrix;
use crate::partition::{odd_part_partitions, partitions, strict_partitions, Cut, Partition};
use crate::session::{Session, SessionError};
use crate::spin::{
    basic_spin_brauer, basic_spin_coeffs, one_row_parity, spin_brauer_characters,
    two_part_decomposition, SpinDecompositionMatrix,
};
use crate::tableaux::{lr_coefficient, shifted_lr_coefficient};

/// Every registered check, in report order.
pub const CHECK_IDS: [&str; 28] = [
    "donkin-row",
    "donkin-col",
    "spin-row",
    "spin-col",
    "lr-symmetry",
    "lr-support-bounds",
    "lr-row-factorization",
    "lr-padding",
    "lr-double-dominance",
    "shifted-row-factorization",
    "shifted-padding",
    "shifted-triangularity",
    "tensor-row-factorization",
    "tensor-padding",
    "tensor-dual-path",
    "spin-join-factorization",
    "spin-padding-invariance",
    "spin-triangularity",
    "spin-degree",
    "spin-integrality",
    "perm-mackey",
    "character-orthogonality",
    "basic-spin-row",
    "basic-spin-restriction",
    "basic-spin-two-part",
    "basic-spin-perm",
    "decomp-triangularity",
    "decomp-brauer-consistency",
];

/// One mismatching instance: the inputs that produced it and the full data
/// computed for the two sides.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    /// Largest degree swept.
    pub bound: usize,
    /// Instances whose hypotheses held and that were actually tested.
    pub instances: u64,
    /// Instances rejected by hypothesis filtering (never counted as failures).
    pub skipped: u64,
    pub failures: Vec<Failure>,
    /// Observations worth keeping that are not failures.
    pub notes: Vec<String>,
    /// Wall time; excluded from any determinism guarantee.
    pub millis: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn default_bound(id: &str) -> usize {
    match id {
        "lr-symmetry" | "lr-support-bounds" | "lr-row-factorization" => 12,
        "basic-spin-two-part" | "basic-spin-perm" => 14,
        "lr-padding"
        | "lr-double-dominance"
        | "shifted-row-factorization"
        | "shifted-padding"
        | "shifted-triangularity"
        | "tensor-row-factorization"
        | "tensor-padding"
        | "tensor-dual-path"
        | "spin-join-factorization"
        | "spin-padding-invariance"
        | "character-orthogonality" => 10,
        _ => 9,
    }
}

/// Runs a single check over degrees `0..=bound`. Panics on an id that is not
/// in [`CHECK_IDS`].
pub fn run_check(session: &Session, id: &str, bound: usize) -> Result<CheckReport, SessionError> {
    let start = Instant::now();
    let tally = dispatch(session, id, bound)?;
    Ok(CheckReport {
        id: id.to_string(),
        bound,
        instances: tally.instances,
        skipped: tally.skipped,
        failures: tally.failures,
        notes: tally.notes,
        millis: start.elapsed().as_millis() as u64,
    })
}

/// Runs every registered check at its default bound, in registry order.
pub fn run_all(session: &Session) -> Result<Vec<CheckReport>, SessionError> {
    CHECK_IDS
        .iter()
        .map(|id| run_check(session, id, default_bound(id)))
        .collect()
}

fn dispatch(s: &Session, id: &str, bound: usize) -> Result<Tally, SessionError> {
    match id {
        "donkin-row" => donkin_row(s, bound),
        "donkin-col" => donkin_col(s, bound),
        "spin-row" => spin_row(s, bound),
        "spin-col" => spin_col(s, bound),
        "lr-symmetry" => Ok(lr_symmetry(bound)),
        "lr-support-bounds" => Ok(lr_support_bounds(bound)),
        "lr-row-factorization" => Ok(lr_row_factorization(bound)),
        "lr-padding" => Ok(lr_padding(bound)),
        "lr-double-dominance" => Ok(lr_double_dominance(bound)),
        "shifted-row-factorization" => Ok(shifted_row_factorization(bound)),
        "shifted-padding" => Ok(shifted_padding(bound)),
        "shifted-triangularity" => Ok(shifted_triangularity(bound)),
        "tensor-row-factorization" => Ok(tensor_row_factorization(bound)),
        "tensor-padding" => Ok(tensor_padding(bound)),
        "tensor-dual-path" => tensor_dual_path(s, bound),
        "spin-join-factorization" => Ok(spin_join_factorization(bound)),
        "spin-padding-invariance" => Ok(spin_padding_invariance(bound)),
        "spin-triangularity" => spin_triangularity(s, bound),
        "spin-degree" => spin_degree(s, bound),
        "spin-integrality" => spin_integrality(s, bound),
        "perm-mackey" => Ok(perm_mackey(bound)),
        "character-orthogonality" => character_orthogonality(s, bound),
        "basic-spin-row" => basic_spin_row(s, bound),
        "basic-spin-restriction" => Ok(basic_spin_restriction(bound)),
        "basic-spin-two-part" => Ok(basic_spin_two_part(bound)),
        "basic-spin-perm" => basic_spin_perm(s, bound),
        "decomp-triangularity" => decomp_triangularity(s, bound),
        "decomp-brauer-consistency" => decomp_brauer_consistency(s, bound),
        _ => panic!("unknown check id: {id}"),
    }
}

#[derive(Default)]
struct Tally {
    instances: u64,
    skipped: u64,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, detail: impl FnOnce() -> (String, String, String)) {
        self.instances += 1;
        if !ok {
            let (inputs, lhs, rhs) = detail();
            self.failures.push(Failure { inputs, lhs, rhs });
        }
    }

    fn skip(&mut self) {
        self.skipped += 1;
    }

    fn absorb(&mut self, other: Tally) {
        self.instances += other.instances;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

/// Maps `f` over `items` in parallel and merges the partial tallies in the
/// order of `items`.
fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T, &mut Tally) + Sync) -> Tally {
    let parts: Vec<Tally> = items
        .par_iter()
        .map(|item| {
            let mut t = Tally::default();
            f(item, &mut t);
            t
        })
        .collect();
    let mut total = Tally::default();
    for p in parts {
        total.absorb(p);
    }
    total
}

fn prefetch_decomps(
    s: &Session,
    bound: usize,
) -> Result<Vec<Arc<DecompositionMatrix>>, SessionError> {
    (0..=bound).map(|n| s.decomposition(n)).collect()
}

fn prefetch_spins(
    s: &Session,
    bound: usize,
) -> Result<Vec<Arc<SpinDecompositionMatrix>>, SessionError> {
    (0..=bound).map(|n| s.spin_decomposition(n)).collect()
}

fn row_text(row: Option<&BTreeMap<Partition, u64>>) -> String {
    match row {
        None => "{}".to_string(),
        Some(r) => {
            let body: Vec<String> = r.iter().map(|(mu, c)| format!("({mu}): {c}")).collect();
            format!("{{{}}}", body.join(", "))
        }
    }
}

/// `[S^la : D^mu]` with the slice conventions: zero when the sizes differ or
/// the label is not 2-regular.
fn slice_entry(ds: &[Arc<DecompositionMatrix>], la: &Partition, mu: &Partition) -> u64 {
    if la.size() != mu.size() || !mu.is_strict() {
        return 0;
    }
    ds[la.size()].entry(la, mu)
}

/// `[S(la, e) : D^mu]` with the slice conventions.
fn spin_slice_entry(sp: &[Arc<SpinDecompositionMatrix>], la: &Partition, mu: &Partition) -> u64 {
    if la.size() != mu.size() || !la.is_strict() || !mu.is_strict() {
        return 0;
    }
    sp[la.size()].entry(la, mu)
}

/// Row removal for ordinary decomposition numbers: when the first `m` rows
/// of `la` and `mu` have the same size, `[S^la : D^mu]` is the product of
/// the multiplicities for the top and bottom slices.
fn donkin_row(s: &Session, bound: usize) -> Result<Tally, SessionError> {
    let ds = prefetch_decomps(s, bound)?;
    let mut total = Tally::default();
    for n in 0..=bound {
        let d = &ds[n];
        let lambdas = partitions(n);
        let mus = strict_partitions(n);
        total.absorb(par_tally(&lambdas, |la, t| {
            for mu in &mus {
                for m in 1..=n {
                    let lt = la.rows_up_to(m);
                    let mt = mu.rows_up_to(m);
                    if lt.size() != mt.size() {
                        t.skip();
                        continue;
                    }
                    let lb = la.rows_after(m);
                    let mb = mu.rows_after(m);
                    let lhs = d.entry(la, mu);
                    let rhs = slice_entry(&ds, &lt, &mt) * slice_entry(&ds, &lb, &mb);
                    t.record(lhs == rhs, || {
                        (
                            format!("n={n}, m={m}, lambda=({la}), mu=({mu})"),
                            format!("[S^la:D^mu]={lhs}; row of ({la}): {}", row_text(d.row(la))),
                            format!(
                                "top*bottom={rhs}; row of ({lt}): {}; row of ({lb}): {}",
                                row_text(ds[lt.size()].row(&lt)),
                                row_text(ds[lb.size()].row(&lb)),
                            ),
                        )
                    });
                }
            }
        }));
    }
    Ok(total)
}

/// Column removal for ordinary decomposition numbers, with the row cut at
/// `b = la'_m` on both labels.
fn donkin_col(s: &Session, bound: usize) -> Result<Tally, SessionError> {
    let ds = prefetch_decomps(s, bound)?;
    let mut total = Tally::default();
    for n in 0..=bound {
        let d = &ds[n];
        let lambdas = partitions(n);
        let mus = strict_partitions(n);
        total.absorb(par_tally(&lambdas, |la, t| {
            for mu in &mus {
                for m in 1..=n {
                    if la.cols_up_to(m).size() != mu.cols_up_to(m).size() || !mu.dominates(la) {
                        t.skip();
                        continue;
                    }
                    let b = la.conjugate_part(m);
                    let lt = la.slice(Cut::Gt(b), Cut::Le(m));
                    let mt = mu.slice(Cut::Gt(b), Cut::Le(m));
                    let lb = la.cols_after(m);
                    let mb = mu.cols_after(m);
                    let lhs = d.entry(la, mu);
                    let rhs = slice_entry(&ds, &lt, &mt) * slice_entry(&ds, &lb, &mb);
                    t.record(lhs == rhs, || {
                        (
                            format!("n={n}, m={m}, b={b}, lambda=({la}), mu=({mu})"),
                            format!("[S^la:D^mu]={lhs}; row of ({la}): {}", row_text(d.row(la))),
                            format!(
                                "top*bottom={rhs}; row of ({lt}): {}; row of ({lb}): {}",
                                row_text(ds[lt.size()].row(&lt)),
                                row_text(ds[lb.size()].row(&lb)),
                            ),
                        )
                    });
                }
            }
        }));
    }
    Ok(total)
}

/// Row removal for spin decomposition numbers: `m` rows are cut from the
/// spin label and `2m` rows from the modular label, and a factor of 2
/// appears exactly when both slices of `la` label associate pairs.
fn spin_row(s: &Session, bound: usize) -> Result<Tally, SessionError> {
    let sp = prefetch_spins(s, bound)?;
    let mut total = Tally::default();
    for n in 0..=bound {
        let d = &sp[n];
        let strict = strict_partitions(n);
        total.absorb(par_tally(&strict, |la, t| {
            for mu in &strict {
                for m in 0..=n {
                    let lt = la.rows_up_to(m);
                    let mt = mu.rows_up_to(2 * m);
                    if lt.size() != mt.size() {
                        t.skip();
                        continue;
                    }
                    let lb = la.rows_after(m);
                    let mb = mu.rows_after(2 * m);
                    let a = lt.parity_a() * lb.parity_a();
                    let lhs = d.entry(la, mu);
                    let rhs = (1u64 << a)
                        * spin_slice_entry(&sp, &lt, &mt)
                        * spin_slice_entry(&sp, &lb, &mb);
                    t.record(lhs == rhs, || {
                        (
                            format!("n={n}, m={m}, lambda=({la}), mu=({mu})"),
                            format!("[S(la):D^mu]={lhs}; row of ({la}): {}", row_text(d.row(la))),
                            format!(
                                "2^{a}*top*bottom={rhs}; row of ({lt}): {}; row of ({lb}): {}",
                                row_text(sp[lt.size()].row(&lt)),
                                row_text(sp[lb.size()].row(&lb)),
                            ),
                        )
                    });
                }
            }
        }));
    }
    Ok(total)
}

/// Column removal for spin decomposition numbers: `2m` columns are cut from
/// the spin label and `m` from the modular label, rows are cut at
/// `b = la'_{2m}` resp. `2b`, under the dominance hypothesis on dblbar.
fn spin_col(s: &Session, bound: usize) -> Result<Tally, SessionError> {
    let sp = prefetch_spins(s, bound)?;
    let mut total = Tally::default();
    for n in 0..=bound {
        let d = &sp[n];
        let strict = strict_partitions(n);
        total.absorb(par_tally(&strict, |la, t| {
            let dbar = la.dblbar().expect("dblbar of a strict partition");
            for mu in &strict {
                for m in 1..=n {
                    if la.cols_up_to(2 * m).size() != mu.cols_up_to(m).size()
                        || !mu.dominates(&dbar)
                    {
                        t.skip();
                        continue;
                    }
                    let b = la.conjugate_part(2 * m);
                    let lt = la.slice(Cut::Gt(b), Cut::Le(2 * m));
                    let mt = mu.slice(Cut::Gt(2 * b), Cut::Le(m));
                    let lb = la.cols_after(2 * m);
                    let mb = mu.cols_after(m);
                    let a = lt.parity_a() * lb.parity_a();
                    let lhs = d.entry(la, mu);
                    let rhs = (1u64 << a)
                        * spin_slice_entry(&sp, &lt, &mt)
                        * spin_slice_entry(&sp, &lb, &mb);
                    t.record(lhs == rhs, || {
                        (
                            format!("n={n}, m={m}, b={b}, lambda=({la}), mu=({mu})"),
                            format!("[S(la):D^mu]={lhs}; row of ({la}): {}", row_text(d.row(la))),
                            format!(
                                "2^{a}*top*bottom={rhs}; inner labels ({lt})/({mt}), outer ({lb})/({mb})",
                            ),
                        )
                    });
                }
            }
        }));
    }
    Ok(total)
}

/// Littlewood-Richardson coefficients are symmetric in the two inner labels
/// and invariant under conjugating all three.
fn lr_symmetry(bound: usize) -> Tally {
    let mut total = Tally::default();
    for n in 0..=bound {
        let gammas = partitions(n);
        total.absorb(par_tally(&gammas, |gamma, t| {
            for k in 0..=n {
                for alpha in partitions(k) {
                    for beta in partitions(n - k) {
                        let c = lr_coefficient(gamma, &alpha, &beta);
                        let swapped = lr_coefficient(gamma, &beta, &alpha);
                        let conj =
                            lr_coefficient(&gamma.conjugate(), &alpha.conjugate(), &beta.conjugate());
                        t.record(c == swapped && c == conj, || {
                            (
                                format!("gamma=({gamma}), alpha=({alpha}), beta=({beta})"),
                                format!("c={c}"),
                                format!("swapped={swapped}, conjugated={conj}"),
                            )
                        });
                    }
                }
            }
        }));
    }
    total
}

/// A positive coefficient pins `gamma` between `alpha u beta` and
/// `alpha + beta` in the dominance order, and above each inner label.
fn lr_support_bounds(bound: usize) -> Tally {
    let mut total = Tally::default();
    for n in 0..=bound {
        let gammas = partitions(n);
        total.absorb(par_tally(&gammas, |gamma, t| {
            for k in 0..=n {
                for alpha in partitions(k) {
                    for beta in partitions(n - k) {
                        if lr_coefficient(gamma, &alpha, &beta) == 0 {
                            t.skip();
                            continue;
                        }
                        let ok = gamma.dominates_seq(alpha.parts())
                            && gamma.dominates_seq(beta.parts())
                            && gamma.dominates(&alpha.union_sorted(&beta))
                            && alpha.add(&beta).dominates(gamma);
                        t.record(ok, || {
                            (
                                format!("gamma=({gamma}), alpha=({alpha}), beta=({beta})"),
                                format!("support bounds for ({gamma})"),
                                format!(
                                    "union=({}), sum=({})",
                                    alpha.union_sorted(&beta),
                                    alpha.add(&beta)
                                ),
                            )
                        });
                    }
                }
            }
        }));
    }
    total
}

/// Row factorization of Littlewood-Richardson coefficients: when the first
/// `m` rows of `alpha` and `beta` jointly fill the first `m` rows of
/// `gamma`, the coefficient splits into top and bottom factors.
fn lr_row_factorization(bound: usize) -> Tally {
    let mut total = Tally::default();
    for n in 0..=bound {
        let gammas = partitions(n);
        total.absorb(par_tally(&gammas, |gamma, t| {
            for k in 0..=n {
                for alpha in partitions(k) {
                    for beta in partitions(n - k) {
                        let maxh = gamma.len().max(alpha.len()).max(beta.len());
                        for m in 0..=maxh {
                            let at = alpha.rows_up_to(m);
                            let bt = beta.rows_up_to(m);
                            let gt = gamma.rows_up_to(m);
                            if at.size() + bt.size() != gt.size() {
                                t.skip();
                                continue;
                            }
                            let c = lr_coefficient(gamma, &alpha, &beta);
                            let top = lr_coefficient(&gt, &at, &bt);
                            let bottom = lr_coefficient(
                                &gamma.rows_after(m),
                                &alpha.rows_after(m),
                                &beta.rows_after(m),
                            );
                            t.record(c == top * bottom, || {
                                (
                                    format!(
                                        "gamma=({gamma}), alpha=({alpha}), beta=({beta}), m={m}"
                                    ),
                                    format!("c={c}"),
                                    format!("top={top}, bottom={bottom}"),
                                )
                            });
                        }
                    }
                }
            }
        }));
    }
    total
}

/// Padding invariance: adding a full first column (or a long first row) to
/// `gamma` and `alpha` leaves the coefficient unchanged.
fn lr_padding(bound: usize) -> Tally {
    let mut total = Tally::default();
    for n in 0..=bound {
        let gammas = partitions(n);
        total.absorb(par_tally(&gammas, |gamma, t| {
            for k in 0..=n {
                for alpha in partitions(k) {
                    for beta in partitions(n - k) {
                        let l = gamma.len().max(alpha.len()).max(1);
                        let m = gamma.part(0).max(alpha.part(0)).max(1);
                        let column = Partition::rectangle(l, 1);
                        let row = Partition::new(vec![m]);
                        let c = lr_coefficient(gamma, &alpha, &beta);
                        let tall =
                            lr_coefficient(&gamma.add(&column), &alpha.add(&column), &beta);
                        let wide = lr_coefficient(
                            &gamma.union_sorted(&row),
                            &alpha.union_sorted(&row),
                            &beta,
                        );
                        t.record(c == tall && c == wide, || {
                            (
                                format!(
                                    "gamma=({gamma}), alpha=({alpha}), beta=({beta}), l={l}, m={m}"
                                ),
                                format!("c={c}"),
                                format!("column-padded={tall}, row-padded={wide}"),
                            )
                        });
                    }
                }
            }
        }));
    }
    total
}

fn dblbar_seq(p: &Partition) -> Vec<usize> {
    p.parts().iter().flat_map(|&x| [(x + 1) / 2, x / 2]).collect()
}

/// Any two outer shapes sharing an inner pair `(alpha, beta)` dominate each
/// other's halved doubling.
fn lr_double_dominance(bound: usize) -> Tally {
    let mut total = Tally::default();
    for n in 0..=bound {
        let gammas = partitions(n);
        let splits: Vec<(Partition, Partition)> = (0..=n)
            .flat_map(|i| {
                partitions(n - i)
                    .into_iter()
                    .flat_map(move |a| partitions(i).into_iter().map(move |b| (a.clone(), b)))
            })
            .collect();
        total.absorb(par_tally(&splits, |(alpha, beta), t| {
            let support: Vec<&Partition> = gammas
                .iter()
                .filter(|gamma| lr_coefficient(gamma, alpha, beta) > 0)
                .collect();
            for gamma in &support {
                let target = dblbar_seq(gamma);
                for delta in &support {
                    t.record(delta.dominates_seq(&target), || {
                        (
                            format!(
                                "alpha=({alpha}), beta=({beta}), gamma=({gamma}), delta=({delta})"
                            ),
                            format!("delta=({delta})"),
                            format!("dblbar(gamma)={target:?}"),
                        )
                    });
                }
            }
        }));
    }
    total
}

/// Row factorization for shifted coefficients: with a 2-regular content the
/// count splits at any row where the shape and content slice sizes agree.
fn shifted_row_factorization(bound: usize) -> Tally {
    let mut total = Tally::default();
    for n in 0..=bound {
        let shapes = partitions(n);
        let contents = strict_partitions(n);
        total.absorb(par_tally(&shapes, |alpha, t| {
            for beta in &contents {
                let maxh = alpha.len().max(beta.len());
                for m in 0..=maxh {
                    let at = alpha.rows_up_to(m);
                    let bt = beta.rows_up_to(m);
                    if at.size() != bt.size() {
                        t.skip();
                        continue;
                    }
                    let c = shifted_lr_coefficient(alpha, beta);
                    let top = shifted_lr_coefficient(&at, &bt);
                    let bottom =
                        shifted_lr_coefficient(&alpha.rows_after(m), &beta.rows_after(m));
                    t.record(c == top * bottom, || {
                        (
                            format!("alpha=({alpha}), beta=({beta}), m={m}"),
                            format!("cbar={c}"),
                            format!("top={top}, bottom={bottom}"),
                        )
                    });
                }
            }
        }));
    }
    total
}

/// Shifted coefficients are invariant under adding a first column of height
/// `m` when the shape fits in `m` rows and the content has height `m` or
/// `m - 1`.
fn shifted_padding(bound: usize) -> Tally {
    let mut total = Tally::default();
    for n in 0..=bound {
        let shapes = partitions(n);
        let contents = strict_partitions(n);
        total.absorb(par_tally(&shapes, |nu, t| {
            for psi in &contents {
                for m in [psi.len(), psi.len() + 1] {
                    if m < 1 || nu.len() > m {
                        t.skip();
                        continue;
                    }
                    let column = Partition::rectangle(m, 1);
                    let c = shifted_lr_coefficient(nu, psi);
                    let padded = shifted_lr_coefficient(&nu.add(&column), &psi.add(&column));
                    t.record(c == padded, || {
                        (
                            format!("nu=({nu}), psi=({psi}), m={m}"),
                            format!("cbar={c}"),
                            format!("padded={padded}"),
                        )
                    });
                }
            }
        }));
    }
    total
}

/// A positive shifted coefficient forces the content to dominate the shape;
/// on 2-regular diagonals the coefficient is positive. Any diagonal value
/// above 1 is recorded as a note.
fn shifted_triangularity(bound: usize) -> Tally {
    let mut total = Tally::default();
    for n in 0..=bound {
        let shapes = partitions(n);
        let contents = strict_partitions(n);
        total.absorb(par_tally(&shapes, |alpha, t| {
            for beta in &contents {
                let c = shifted_lr_coefficient(alpha, beta);
                t.record(c == 0 || beta.dominates(alpha), || {
                    (
                        format!("alpha=({alpha}), beta=({beta})"),
                        format!("cbar={c}"),
                        format!("({beta}) does not dominate ({alpha})"),
                    )
                });
            }
            if alpha.is_strict() {
                let diag = shifted_lr_coefficient(alpha, alpha);
                t.record(diag >= 1, || {
                    (
                        format!("alpha=({alpha})"),
                        format!("cbar={diag}"),
                        "diagonal must be positive".to_string(),
                    )
                });
                if diag > 1 {
                    t.notes.push(format!("diagonal cbar(({alpha}), ({alpha})) = {diag} > 1"));
                }
            }
        }));
    }
    total
}

/// Multiplicities of Specht modules in `S^nu (x) M^(n-k,k)` factor over a
/// row cut taking `m` rows from `nu` and `2m` rows from `psi`, summed over
/// the ways to split the two-row content.
fn tensor_row_factorization(bound: usize) -> Tally {
    let mut total = Tally::default();
    for n in 0..=bound {
        let all = partitions(n);
        total.absorb(par_tally(&all, |nu, t| {
            for psi in &all {
                let lhs_by_k: Vec<u64> =
                    (0..=n).map(|k| tensor_perm_multiplicity(nu, psi, k)).collect();
                let mcap = nu.len().max((psi.len() + 1) / 2);
                for m in 0..=mcap {
                    let nt = nu.rows_up_to(m);
                    let pt = psi.rows_up_to(2 * m);
                    let l = nt.size();
                    if pt.size() != l {
                        t.skip();
                        continue;
                    }
                    let nb = nu.rows_after(m);
                    let pb = psi.rows_after(2 * m);
                    let top: Vec<u64> =
                        (0..=l).map(|j| tensor_perm_multiplicity(&nt, &pt, j)).collect();
                    let bottom: Vec<u64> = (0..=n - l)
                        .map(|j| tensor_perm_multiplicity(&nb, &pb, j))
                        .collect();
                    for k in 0..=n {
                        let lo = k.saturating_sub(n - l);
                        let hi = k.min(l);
                        let rhs: u64 = (lo..=hi).map(|j| top[j] * bottom[k - j]).sum();
                        t.record(lhs_by_k[k] == rhs, || {
                            (
                                format!("nu=({nu}), psi=({psi}), m={m}, k={k}"),
                                format!("[S^nu x M^(n-k,k) : S^psi] = {}", lhs_by_k[k]),
                                format!("split sum = {rhs} (top {top:?}, bottom {bottom:?})"),
                            )
                        });
                    }
                }
            }
        }));
    }
    total
}

/// Padding `alpha` by two columns and `beta` by one column shifts the
/// two-row tensor multiplicities by `l` and kills everything outside the
/// shifted window.
fn tensor_padding(bound: usize) -> Tally {
    let mut total = Tally::default();
    for n in 0..=bound {
        let all = partitions(n);
        total.absorb(par_tally(&all, |alpha, t| {
            for beta in &all {
                let l = alpha.len().max((beta.len() + 1) / 2).max(1);
                if n + 2 * l > 12 {
                    t.skip();
                    continue;
                }
                let ap = alpha.add(&Partition::rectangle(l, 2));
                let bp = beta.add(&Partition::rectangle(2 * l, 1));
                for k in 0..=n + 2 * l {
                    let lhs = tensor_perm_multiplicity(&ap, &bp, k);
                    let rhs = if l <= k && k <= n + l {
                        tensor_perm_multiplicity(alpha, beta, k - l)
                    } else {
                        0
                    };
                    t.record(lhs == rhs, || {
                        (
                            format!("alpha=({alpha}), beta=({beta}), l={l}, k={k}"),
                            format!("padded multiplicity = {lhs}"),
                            format!("unpadded window value = {rhs}"),
                        )
                    });
                }
            }
        }));
    }
    total
}

/// The same tensor multiplicity computed along two independent routes:
/// Littlewood-Richardson sums and exact character inner products.
fn tensor_dual_path(s: &Session, bound: usize) -> Result<Tally, SessionError> {
    let mut total = Tally::default();
    for n in 0..=bound {
        let table = s.character_table(n)?;
        let all = partitions(n);
        total.absorb(par_tally(&all, |alpha, t| {
            for beta in all.iter().filter(|b| *b >= alpha) {
                for i in 0..=n / 2 {
                    let lr = tensor_perm_multiplicity(alpha, beta, i);
                    let ch = tensor_perm_multiplicity_via_characters(&table, alpha, beta, i);
                    t.record(ch == BigRational::from_integer(BigInt::from(lr)), || {
                        (
                            format!("alpha=({alpha}), beta=({beta}), i={i}"),
                            format!("lr route = {lr}"),
                            format!("character route = {ch}"),
                        )
                    });
                }
            }
        }));
    }
    Ok(total)
}

/// `[S^la (x) S((n)) : S(psi, e)]` from the shifted coefficient and the
/// explicit power of two. Callers must keep `psi` nonempty and strict.
fn spin_tensor_mult(shape: &Partition, psi: &Partition) -> u64 {
    let n = psi.size();
    let e = psi.len() as i64 - 1 - psi.parity_a() as i64 + one_row_parity(n) as i64;
    assert!(e >= 0 && e % 2 == 0, "odd or negative exponent for ({psi})");
    shifted_lr_coefficient(shape, psi) << (e / 2)
}

/// Joining a top shape of height `m` with a bottom shape of smaller parts
/// multiplies the basic-spin tensor multiplicities of the slices, up to an
/// explicit power of 2 from the associate bookkeeping.
fn spin_join_factorization(bound: usize) -> Tally {
    let mut total = Tally::default();
    for n in 0..=bound {
        let sigmas = strict_partitions(n);
        total.absorb(par_tally(&sigmas, |sigma, t| {
            for m in 1..sigma.len() {
                let st = sigma.rows_up_to(m);
                let sb = sigma.rows_after(m);
                let l = st.size();
                let a = st.parity_a() * sb.parity_a()
                    + (1 - one_row_parity(l)) * (1 - one_row_parity(n - l));
                for nu in partitions(l).iter().filter(|nu| nu.len() == m) {
                    for pi in partitions(n - l).iter().filter(|pi| pi.part(0) <= nu.part(m - 1)) {
                        let join = nu.union_sorted(pi);
                        let lhs = spin_tensor_mult(&join, sigma);
                        let rhs =
                            (1u64 << a) * spin_tensor_mult(nu, &st) * spin_tensor_mult(pi, &sb);
                        t.record(lhs == rhs, || {
                            (
                                format!("sigma=({sigma}), m={m}, nu=({nu}), pi=({pi})"),
                                format!("mult(({join}), ({sigma})) = {lhs}"),
                                format!("2^{a} * mult(({nu}), ({st})) * mult(({pi}), ({sb})) = {rhs}"),
                            )
                        });
                    }
                }
            }
        }));
    }
    total
}

/// Padding both labels by two full columns leaves the basic-spin tensor
/// multiplicity unchanged, including the power-of-two bookkeeping.
fn spin_padding_invariance(bound: usize) -> Tally {
    let mut total = Tally::default();
    for n in 1..=bound {
        let shapes = partitions(n);
        let contents = strict_partitions(n);
        total.absorb(par_tally(&shapes, |la, t| {
            let l = la.len();
            for nu in contents.iter().filter(|nu| nu.len() == l) {
                if n + 2 * l > bound + 4 {
                    t.skip();
                    continue;
                }
                let pad = Partition::rectangle(l, 2);
                let lhs = spin_tensor_mult(la, nu);
                let rhs = spin_tensor_mult(&la.add(&pad), &nu.add(&pad));
                t.record(lhs == rhs, || {
                    (
                        format!("lambda=({la}), nu=({nu}), l={l}"),
                        format!("mult = {lhs}"),
                        format!("padded mult = {rhs}"),
                    )
                });
            }
        }));
    }
    total
}

/// Spin rows are supported above the doubling of their label, the doubled
/// diagonal carries the predicted power of 2, and the one-row spin module
/// loses its 2-regular-label constituent exactly from degree 3 on.
fn spin_triangularity(s: &Session, bound: usize) -> Result<Tally, SessionError> {
    let sp = prefetch_spins(s, bound)?;
    let mut total = Tally::default();
    for n in 0..=bound {
        let d = &sp[n];
        let strict = strict_partitions(n);
        total.absorb(par_tally(&strict, |la, t| {
            let dbl = la.dbl();
            for mu in &strict {
                let v = d.entry(la, mu);
                t.record(v == 0 || mu.dominates_seq(dbl.parts()), || {
                    (
                        format!("n={n}, lambda=({la}), mu=({mu})"),
                        format!("[S(la):D^mu]={v}"),
                        format!("dbl(lambda)={}", dbl),
                    )
                });
            }
            if let Some(dblp) = dbl.as_partition() {
                if dblp.is_strict() {
                    let expected = 1u64 << (la.even_part_count() / 2);
                    let got = d.entry(la, &dblp);
                    t.record(got == expected, || {
                        (
                            format!("n={n}, lambda=({la})"),
                            format!("[S(la):D^dbl(la)]={got}"),
                            format!("2^(h2/2)={expected}; row: {}", row_text(d.row(la))),
                        )
                    });
                }
            }
        }));
        let one_row = if n == 0 { Partition::empty() } else { Partition::new(vec![n]) };
        let got = d.entry(&one_row, &one_row);
        let expected = u64::from(n <= 2);
        total.record(got == expected, || {
            (
                format!("n={n}"),
                format!("[S((n)):D^(n)]={got}"),
                format!("expected {expected}; row: {}", row_text(d.row(&one_row))),
            )
        });
    }
    Ok(total)
}

fn factorial(n: usize) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

/// Degrees of the spin Brauer characters against the classical product
/// formula `2^((n-h)/2) n!/prod(mu_i!) prod (mu_i-mu_j)/(mu_i+mu_j)`.
fn spin_degree(s: &Session, bound: usize) -> Result<Tally, SessionError> {
    let mut total = Tally::default();
    for n in 0..=bound {
        let table = s.character_table(n)?;
        let phi = spin_brauer_characters(&table);
        let odd = odd_part_partitions(n);
        let identity = if n == 0 { Partition::empty() } else { Partition::rectangle(n, 1) };
        let idx = odd.iter().position(|rho| *rho == identity).expect("identity class is odd");
        for (mu, values) in &phi {
            let h = mu.len();
            let mut expected = BigRational::from_integer(factorial(n));
            for &p in mu.parts() {
                expected /= BigRational::from_integer(factorial(p));
            }
            for i in 0..h {
                for j in i + 1..h {
                    let (a, b) = (mu.part(i) as i64, mu.part(j) as i64);
                    expected *= BigRational::new(BigInt::from(a - b), BigInt::from(a + b));
                }
            }
            expected *= BigRational::from_integer(BigInt::one() << ((n - h) / 2));
            let got = BigRational::from_integer(BigInt::from(values[idx]));
            total.record(got == expected, || {
                (
                    format!("n={n}, mu=({mu})"),
                    format!("phi_mu(1^n)={}", values[idx]),
                    format!("degree formula={expected}"),
                )
            });
        }
    }
    Ok(total)
}

/// The defining expansion of the spin Brauer characters, re-checked row by
/// row for every partition (the solver only ever used the 2-regular rows),
/// together with integrality of the exponents and the dimension bookkeeping
/// of the assembled spin matrix.
fn spin_integrality(s: &Session, bound: usize) -> Result<Tally, SessionError> {
    let sp = prefetch_spins(s, bound)?;
    let ds = prefetch_decomps(s, bound)?;
    let mut total = Tally::default();
    for n in 0..=bound {
        let table = s.character_table(n)?;
        let phi = spin_brauer_characters(&table);
        let bsb = basic_spin_brauer(n);
        let an = one_row_parity(n);
        let strict = strict_partitions(n);
        for mu in strict.iter().filter(|mu| !mu.is_empty()) {
            let e = mu.len() as i64 - 1 - mu.parity_a() as i64 + an as i64;
            total.record(e >= 0 && e % 2 == 0, || {
                (
                    format!("n={n}, mu=({mu})"),
                    format!("h-1-a(mu)+a(n) = {e}"),
                    "exponent must be an even nonnegative integer".to_string(),
                )
            });
        }
        let lambdas = partitions(n);
        total.absorb(par_tally(&lambdas, |la, t| {
            let lhs: Vec<i64> = table
                .odd_restriction(la)
                .iter()
                .zip(&bsb)
                .map(|(&x, &y)| x * y)
                .collect();
            let mut rhs = vec![0i64; lhs.len()];
            for mu in &strict {
                let cbar = shifted_lr_coefficient(la, mu) as i64;
                if cbar == 0 {
                    continue;
                }
                let e = if mu.is_empty() {
                    0
                } else {
                    mu.len() as i64 - 1 - mu.parity_a() as i64 + an as i64
                };
                let coeff = cbar << (mu.parity_a() as i64 + e / 2);
                for (r, k) in rhs.iter_mut().zip(&phi[mu]) {
                    *r += coeff * k;
                }
            }
            t.record(lhs == rhs, || {
                (
                    format!("n={n}, lambda=({la})"),
                    format!("chi_la * bsb on odd classes = {lhs:?}"),
                    format!("shifted expansion = {rhs:?}"),
                )
            });
        }));
        let identity = if n == 0 { Partition::empty() } else { Partition::rectangle(n, 1) };
        let idx = odd_part_partitions(n)
            .iter()
            .position(|rho| *rho == identity)
            .expect("identity class is odd");
        for (la, values) in &phi {
            let weighted: u64 = sp[n]
                .row(la)
                .map(|row| {
                    row.iter()
                        .map(|(mu, c)| c * ds[n].irreducible_dim(mu).unwrap())
                        .sum()
                })
                .unwrap_or(0);
            total.record(weighted as i64 == values[idx], || {
                (
                    format!("n={n}, lambda=({la})"),
                    format!("sum of entry*dim over the spin row = {weighted}"),
                    format!("phi_la(1^n) = {}", values[idx]),
                )
            });
        }
    }
    Ok(total)
}

/// Mackey-style branching of two-row permutation characters to a Young
/// subgroup, checked on every pair of classes.
fn perm_mackey(bound: usize) -> Tally {
    let mut total = Tally::default();
    for n in 0..=bound {
        for l in 0..=n {
            let left = partitions(l);
            let right = partitions(n - l);
            for a in 0..=n / 2 {
                total.absorb(par_tally(&left, |rho1, t| {
                    for rho2 in &right {
                        let joint = rho1.union_sorted(rho2);
                        let lhs = perm_character_value(&[n - a, a], &joint);
                        let lo = a.saturating_sub(n - l);
                        let hi = a.min(l);
                        let rhs: u64 = (lo..=hi)
                            .map(|j| {
                                perm_character_value(&two_row(l, j), rho1)
                                    * perm_character_value(&two_row(n - l, a - j), rho2)
                            })
                            .sum();
                        t.record(lhs == rhs, || {
                            (
                                format!("n={n}, l={l}, a={a}, rho1=({rho1}), rho2=({rho2})"),
                                format!("restricted value = {lhs}"),
                                format!("mackey sum = {rhs}"),
                            )
                        });
                    }
                }));
            }
        }
    }
    total
}

/// The parts of `M^(m-j,j)` as a plain composition, largest first.
fn two_row(m: usize, j: usize) -> Vec<usize> {
    let (hi, lo) = ((m - j).max(j), (m - j).min(j));
    if lo == 0 {
        if hi == 0 {
            vec![]
        } else {
            vec![hi]
        }
    } else {
        vec![hi, lo]
    }
}

/// Exact row orthogonality of the ordinary characters under the centralizer
/// weights.
fn character_orthogonality(s: &Session, bound: usize) -> Result<Tally, SessionError> {
    let mut total = Tally::default();
    for n in 0..=bound {
        let table = s.character_table(n)?;
        let all = partitions(n);
        total.absorb(par_tally(&all, |la, t| {
            let f = rationals(table.row(la));
            for mu in all.iter().filter(|mu| *mu >= la) {
                let g = rationals(table.row(mu));
                let ip = table.inner_product(&f, &g);
                let expected = if la == mu { BigRational::one() } else { BigRational::zero() };
                t.record(ip == expected, || {
                    (
                        format!("n={n}, lambda=({la}), mu=({mu})"),
                        format!("<chi_la, chi_mu> = {ip}"),
                        format!("expected {expected}"),
                    )
                });
            }
        }));
    }
    Ok(total)
}

/// The one-row spin module reduces to a single basic spin simple: the
/// per-associate matrix row is an indicator at dbl((n)), and the full
/// (both-associates) Brauer character expands with multiplicity `2^a(n)`.
fn basic_spin_row(s: &Session, bound: usize) -> Result<Tally, SessionError> {
    let sp = prefetch_spins(s, bound)?;
    let ds = prefetch_decomps(s, bound)?;
    let mut total = Tally::default();
    for n in 0..=bound {
        let one_row = if n == 0 { Partition::empty() } else { Partition::new(vec![n]) };
        let dblp = one_row.dbl().as_partition().expect("dbl of a one-row partition");
        let mut expected = BTreeMap::new();
        expected.insert(dblp.clone(), 1u64);
        let got = sp[n].row(&one_row).cloned().unwrap_or_default();
        total.record(got == expected, || {
            (
                format!("n={n}"),
                format!("spin row of ((n)): {}", row_text(Some(&got))),
                format!("indicator at ({dblp})"),
            )
        });

        let table = s.character_table(n)?;
        let bsb = basic_spin_brauer(n);
        let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (nu, x) in expand_in_two_regular_basis(&table, &rationals(&bsb)) {
            for (mu, &c) in ds[n].row(&nu).expect("decomposition row") {
                *acc.entry(mu.clone()).or_insert_with(BigRational::zero) +=
                    &x * BigRational::from_integer(BigInt::from(c));
            }
        }
        acc.retain(|_, v| !v.is_zero());
        let want = BigRational::from_integer(BigInt::one() << one_row_parity(n));
        let ok = acc.len() == 1 && acc.get(&dblp) == Some(&want);
        total.record(ok, || {
            (
                format!("n={n}"),
                format!("basic spin expansion: {acc:?}"),
                format!("2^a(n) = {want} at ({dblp}) only"),
            )
        });
    }
    Ok(total)
}

/// Restriction of a basic spin Brauer character to a Young subgroup,
/// written through two-row permutation characters on both factors and
/// compared on every pair of odd classes.
fn basic_spin_restriction(bound: usize) -> Tally {
    let mut total = Tally::default();
    for n in 2..=bound {
        let t_coeffs = basic_spin_coeffs(n);
        for l in 1..n {
            let bsb1 = basic_spin_brauer(l);
            let bsb2 = basic_spin_brauer(n - l);
            let (a1, a2) = (one_row_parity(l), one_row_parity(n - l));
            let odd1 = odd_part_partitions(l);
            let odd2 = odd_part_partitions(n - l);
            let doubling = 1 - (1 - a1) * (1 - a2);
            total.absorb(par_tally(&odd1, |rho1, t| {
                for (j2, rho2) in odd2.iter().enumerate() {
                    let i1 = odd1.iter().position(|r| r == rho1).unwrap();
                    let lhs = (1i64 << doubling) * bsb1[i1] * bsb2[j2];
                    let mut rhs = 0i64;
                    for (h, &c) in t_coeffs.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        let lo = h.saturating_sub(n - l);
                        let hi = h.min(l);
                        for j in lo..=hi {
                            rhs += c
                                * perm_character_value(&two_row(l, j), rho1) as i64
                                * perm_character_value(&two_row(n - l, h - j), rho2) as i64;
                        }
                    }
                    rhs <<= a1 + a2;
                    t.record(lhs == rhs, || {
                        (
                            format!("n={n}, l={l}, rho1=({rho1}), rho2=({rho2})"),
                            format!("2^{doubling} * bsb_l * bsb_(n-l) = {lhs}"),
                            format!("2^{} * mackey sum = {rhs}", a1 + a2),
                        )
                    });
                }
            }));
        }
    }
    total
}

/// The two-row D-basis vector of an alternating sum of two-row Specht
/// modules, starting from the even or odd staircase, is the indicator at
/// the basic spin label.
fn basic_spin_two_part(bound: usize) -> Tally {
    let mut total = Tally::default();
    for n in 1..=bound {
        let dim = (n - 1) / 2 + 1;
        let mut acc = vec![0i64; dim];
        for (h, sign) in alternating_two_row_terms(n) {
            for (k, &v) in two_part_decomposition(n, h).iter().enumerate() {
                acc[k] += sign * v as i64;
            }
        }
        let mut expected = vec![0i64; dim];
        expected[(n - 1) / 2] = 1;
        total.record(acc == expected, || {
            (
                format!("n={n}"),
                format!("alternating sum in the D-basis: {acc:?}"),
                format!("indicator at k={}", (n - 1) / 2),
            )
        });
    }
    total
}

/// The signed list of second parts `h` in the alternating two-row Specht
/// expansion of the basic spin simple.
fn alternating_two_row_terms(n: usize) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    if n % 2 == 0 {
        let m = n / 2;
        for i in 0.. {
            let plus = m as i64 - 4 * i - 1;
            let minus = m as i64 - 4 * i - 2;
            if plus < 0 {
                break;
            }
            out.push((plus as usize, 1));
            if minus >= 0 {
                out.push((minus as usize, -1));
            }
        }
    } else {
        let m = (n - 1) / 2;
        for i in 0.. {
            let plus = m as i64 - 4 * i;
            let minus = m as i64 - 2 - 4 * i;
            if plus < 0 {
                break;
            }
            out.push((plus as usize, 1));
            if minus >= 0 {
                out.push((minus as usize, -1));
            }
        }
    }
    out
}

/// The permutation-module expansion of the basic spin simple: its D-basis
/// vector is again the indicator, and on smaller degrees the corresponding
/// Brauer character identity is confirmed against ordinary characters.
fn basic_spin_perm(s: &Session, bound: usize) -> Result<Tally, SessionError> {
    let mut total = Tally::default();
    for n in 1..=bound {
        let coeffs = basic_spin_coeffs(n);
        let dim = (n - 1) / 2 + 1;
        let mut acc = vec![0i64; dim];
        for (h, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for k in 0..=h {
                for (i, &v) in two_part_decomposition(n, k).iter().enumerate() {
                    acc[i] += c * v as i64;
                }
            }
        }
        let mut expected = vec![0i64; dim];
        expected[(n - 1) / 2] = 1;
        total.record(acc == expected, || {
            (
                format!("n={n}"),
                format!("permutation expansion in the D-basis: {acc:?}"),
                format!("indicator at k={}", (n - 1) / 2),
            )
        });

        if n > 10.min(bound) {
            continue;
        }
        let table = s.character_table(n)?;
        let specht_terms = alternating_two_row_terms(n);
        for rho in odd_part_partitions(n) {
            let lhs: i64 = coeffs
                .iter()
                .enumerate()
                .map(|(h, &c)| c * perm_character_value(&two_row(n, h), &rho) as i64)
                .sum();
            let rhs: i64 = specht_terms
                .iter()
                .map(|&(h, sign)| {
                    sign * table.value(&Partition::new(two_row(n, h)), &rho)
                })
                .sum();
            total.record(lhs == rhs, || {
                (
                    format!("n={n}, rho=({rho})"),
                    format!("permutation route = {lhs}"),
                    format!("alternating Specht route = {rhs}"),
                )
            });
        }
    }
    Ok(total)
}

/// Ordinary decomposition rows live above their label in the dominance
/// order, with ones on 2-regular diagonals.
fn decomp_triangularity(s: &Session, bound: usize) -> Result<Tally, SessionError> {
    let ds = prefetch_decomps(s, bound)?;
    let mut total = Tally::default();
    for n in 0..=bound {
        let d = &ds[n];
        let lambdas = partitions(n);
        let mus = strict_partitions(n);
        total.absorb(par_tally(&lambdas, |la, t| {
            for mu in &mus {
                let v = d.entry(la, mu);
                t.record(v == 0 || mu.dominates(la), || {
                    (
                        format!("n={n}, lambda=({la}), mu=({mu})"),
                        format!("[S^la:D^mu]={v}"),
                        format!("({mu}) does not dominate ({la})"),
                    )
                });
            }
            if la.is_strict() {
                let diag = d.entry(la, la);
                t.record(diag == 1, || {
                    (
                        format!("n={n}, lambda=({la})"),
                        format!("diagonal={diag}"),
                        format!("row: {}", row_text(d.row(la))),
                    )
                });
            }
        }));
    }
    Ok(total)
}

/// Solves the Brauer characters of the simples out of the 2-regular rows of
/// the decomposition matrix and then re-checks the defining identity on
/// every row, including the 2-singular ones.
fn decomp_brauer_consistency(s: &Session, bound: usize) -> Result<Tally, SessionError> {
    let ds = prefetch_decomps(s, bound)?;
    let mut total = Tally::default();
    for n in 0..=bound {
        let d = &ds[n];
        let table = s.character_table(n)?;
        let mut phi: BTreeMap<Partition, Vec<i64>> = BTreeMap::new();
        for la in strict_partitions(n) {
            let mut v = table.odd_restriction(&la);
            for (mu, &c) in d.row(&la).expect("strict row") {
                if *mu == la {
                    continue;
                }
                let known = phi.get(mu).expect("constituent above the diagonal");
                for (x, k) in v.iter_mut().zip(known) {
                    *x -= c as i64 * k;
                }
            }
            phi.insert(la, v);
        }
        for la in partitions(n) {
            let lhs = table.odd_restriction(&la);
            let mut rhs = vec![0i64; lhs.len()];
            for (mu, &c) in d.row(&la).expect("decomposition row") {
                for (x, k) in rhs.iter_mut().zip(&phi[mu]) {
                    *x += c as i64 * k;
                }
            }
            total.record(lhs == rhs, || {
                (
                    format!("n={n}, lambda=({la})"),
                    format!("chi_la on odd classes = {lhs:?}"),
                    format!("sum of d_(la,mu) phi_mu = {rhs:?}; row: {}", row_text(d.row(&la))),
                )
            });
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_covers_every_id() {
        let session = Session::new(11);
        for id in CHECK_IDS {
            let bound = default_bound(id).min(4);
            let report = run_check(&session, id, bound).unwrap();
            assert!(report.passed(), "{id} failed at bound {bound}: {:?}", report.failures);
            assert_eq!(report.id, id);
            assert_eq!(report.bound, bound);
        }
    }

    #[test]
    fn ids_are_unique() {
        let mut seen = std::collections::HashSet::new();
        for id in CHECK_IDS {
            assert!(seen.insert(id), "duplicate id {id}");
        }
    }

    #[test]
    fn default_bounds_match_the_plan() {
        for id in CHECK_IDS {
            let expected = match id {
                "lr-symmetry" | "lr-support-bounds" | "lr-row-factorization" => 12,
                "basic-spin-two-part" | "basic-spin-perm" => 14,
                "lr-padding" | "lr-double-dominance" | "shifted-row-factorization"
                | "shifted-padding" | "shifted-triangularity" | "tensor-row-factorization"
                | "tensor-padding" | "tensor-dual-path" | "spin-join-factorization"
                | "spin-padding-invariance" | "character-orthogonality" => 10,
                _ => 9,
            };
            assert_eq!(default_bound(id), expected, "{id}");
        }
    }

    #[test]
    fn hypothesis_filtering_reports_skips() {
        let session = Session::new(5);
        let report = run_check(&session, "donkin-row", 3).unwrap();
        assert!(report.passed());
        assert!(report.skipped > 0);
        assert!(report.instances > 0);
    }

    #[test]
    fn failures_carry_both_sides() {
        let mut t = Tally::default();
        t.record(false, || ("x=1".into(), "lhs".into(), "rhs".into()));
        t.record(true, || unreachable!());
        assert_eq!(t.instances, 2);
        assert_eq!(t.failures.len(), 1);
        assert_eq!(t.failures[0].inputs, "x=1");
    }

    #[test]
    fn tallies_merge_in_order() {
        let items = vec![1u32, 2, 3];
        let tally = par_tally(&items, |i, t| {
            t.record(false, || (format!("item {i}"), String::new(), String::new()));
        });
        let order: Vec<String> = tally.failures.iter().map(|f| f.inputs.clone()).collect();
        assert_eq!(order, vec!["item 1", "item 2", "item 3"]);
    }
}

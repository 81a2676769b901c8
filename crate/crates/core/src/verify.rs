//! Verification driver: runs symbolic or sampled identity checks and
//! packages the outcome as a [`VerificationReport`] with a failure witness.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, AlgebraError};
use crate::constructors::{colored_operator, split_center_operator, SplitSpace, WxzTriple};
use crate::lie_super::{LieSuperalgebra, SuperError};
use crate::linalg::Matrix;
use crate::sampling;
use crate::scalars::{Assignment, ParamScalar};
use crate::tensor::{braid_defect, colored_defect, qybe_defect, yb_commutator, Operator2, Operator3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    Braid,
    Qybe,
    Colored,
    Wxz,
    InverseRoundtrip,
    AlgebraAxioms,
    SuperAxioms,
    DisplayMatch,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().unwrap_or("?"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Symbolic,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
}

/// Which constant equation [`verify_constant`] checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantEquation {
    Braid,
    Qybe,
}

/// Seeded sampling parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub samples: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Symbolic,
    Sampled(Sampling),
}

/// Where and why a check failed.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition: Option<String>,
    /// Output basis indices (one per tensor leg) of the offending entry.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row: Option<Vec<usize>>,
    /// Input basis indices of the offending entry.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub col: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl Witness {
    fn message(msg: impl Into<String>) -> Self {
        Witness {
            message: Some(msg.into()),
            ..Witness::default()
        }
    }

    fn at_point(mut self, point: &Assignment) -> Self {
        self.point = Some(point.iter().map(|(k, v)| (k.clone(), v.to_string())).collect());
        self
    }

    fn with_condition(mut self, name: &str) -> Self {
        self.condition = Some(name.to_string());
        self
    }
}

/// One named sub-condition of a compound check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleStats {
    pub requested: usize,
    pub evaluated: usize,
    /// Points rejected before evaluation because they hit an exclusion locus.
    pub skipped: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: Identity,
    pub mode: Mode,
    pub status: Status,
    pub subject: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<SubCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<SampleStats>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Wall-clock time; left out of JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    fn new(identity: Identity, mode: Mode, subject: impl Into<String>, witness: Option<Witness>, started: Instant) -> Self {
        VerificationReport {
            identity,
            mode,
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            subject: subject.into(),
            witness,
            checks: Vec::new(),
            samples: None,
            notes: Vec::new(),
            elapsed: started.elapsed(),
        }
    }

    /// A failing report carrying only a message, for checks that cannot
    /// even be set up (e.g. an operator with no inverse).
    pub fn failure(identity: Identity, subject: impl Into<String>, message: impl Into<String>) -> Self {
        VerificationReport::new(identity, Mode::Symbolic, subject, Some(Witness::message(message)), Instant::now())
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(c) = &self.condition {
            parts.push(format!("condition {c}"));
        }
        if let (Some(r), Some(c)) = (&self.row, &self.col) {
            parts.push(format!("entry out{r:?} in{c:?}"));
        }
        if let Some(v) = &self.value {
            parts.push(format!("value {v}"));
        }
        if let Some(p) = &self.point {
            let pt: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
            parts.push(format!("at {{{}}}", pt.join(", ")));
        }
        if let Some(m) = &self.message {
            parts.push(m.clone());
        }
        f.write_str(&parts.join("; "))
    }
}

/// Human-readable summary, one line per report plus indented detail.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            Mode::Symbolic => "symbolic",
            Mode::Sampled => "sampled",
        };
        writeln!(f, "{} {} [{}] {}", self.status, self.identity, mode, self.subject)?;
        for c in &self.checks {
            match &c.witness {
                Some(w) => writeln!(f, "  {} {}: {}", c.status, c.name, w)?,
                None => writeln!(f, "  {} {}", c.status, c.name)?,
            }
        }
        if let Some(s) = &self.samples {
            writeln!(
                f,
                "  samples: {} evaluated, {} skipped on exclusion loci (seed {})",
                s.evaluated, s.skipped, s.seed
            )?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "  witness: {w}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

fn defect_witness(defect: &Operator3) -> Option<Witness> {
    let (r, c, v) = defect.matrix().first_nonzero()?;
    Some(Witness {
        row: Some(defect.legs_of(r)),
        col: Some(defect.legs_of(c)),
        value: Some(v.to_string()),
        ..Witness::default()
    })
}

fn identity_witness(op: &Operator2) -> Option<Witness> {
    let diff = op.sub(&Operator2::identity(op.dim())).expect("same dim");
    let (r, c, v) = diff.matrix().first_nonzero()?;
    Some(Witness {
        row: Some(diff.legs_of(r)),
        col: Some(diff.legs_of(c)),
        value: Some(v.to_string()),
        ..Witness::default()
    })
}

fn constant_defect(r: &Operator2, which: ConstantEquation) -> Operator3 {
    match which {
        ConstantEquation::Braid => braid_defect(r),
        ConstantEquation::Qybe => qybe_defect(r),
    }
}

fn constant_identity(which: ConstantEquation) -> Identity {
    match which {
        ConstantEquation::Braid => Identity::Braid,
        ConstantEquation::Qybe => Identity::Qybe,
    }
}

/// Passes iff the braid (or QYBE) defect is the zero matrix.
pub fn verify_constant(r: &Operator2, which: ConstantEquation) -> VerificationReport {
    let started = Instant::now();
    let witness = defect_witness(&constant_defect(r, which));
    VerificationReport::new(constant_identity(which), Mode::Symbolic, "operator", witness, started)
}

/// Collected variable names of an operator's entries.
fn operator_variables(op: &Operator2) -> BTreeSet<String> {
    op.matrix().entries().flat_map(|(_, _, v)| v.variables()).collect()
}

/// Draws admissible points until `sampling.samples` have been accepted or the
/// attempt budget runs out. Rejected draws count as skipped.
fn draw_points(
    vars: &BTreeSet<String>,
    sampling: Sampling,
    admissible: impl Fn(&Assignment) -> bool,
) -> (Vec<Assignment>, usize) {
    let mut rng = sampling::rng(sampling.seed);
    let mut points = Vec::with_capacity(sampling.samples);
    let mut skipped = 0;
    let budget = sampling.samples.saturating_mul(20).max(20);
    for _ in 0..budget {
        if points.len() == sampling.samples {
            break;
        }
        let p = sampling::random_point(vars, &mut rng);
        if admissible(&p) {
            points.push(p);
        } else {
            skipped += 1;
        }
    }
    (points, skipped)
}

/// Evaluates `check` on every point in parallel; returns the witness of the
/// first failing point in draw order.
fn first_failure(
    points: &[Assignment],
    check: impl Fn(&Assignment) -> Option<Witness> + Sync,
) -> Option<Witness> {
    points
        .par_iter()
        .map(|p| check(p).map(|w| w.at_point(p)))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next()
}

fn sampled_report(
    identity: Identity,
    subject: &str,
    sampling: Sampling,
    points: &[Assignment],
    skipped: usize,
    witness: Option<Witness>,
    started: Instant,
) -> VerificationReport {
    let witness = witness.or_else(|| {
        (points.len() < sampling.samples).then(|| {
            Witness::message(format!(
                "only {} of {} sample points avoided the exclusion loci",
                points.len(),
                sampling.samples
            ))
        })
    });
    let mut rep = VerificationReport::new(identity, Mode::Sampled, subject, witness, started);
    rep.samples = Some(SampleStats {
        requested: sampling.samples,
        evaluated: points.len(),
        skipped,
        seed: sampling.seed,
    });
    rep
}

/// Checks the braid or QYBE equation after substituting random values for
/// every indeterminate of `r`. Points where an entry has a pole are skipped.
pub fn verify_constant_sampled(r: &Operator2, which: ConstantEquation, sampling: Sampling) -> VerificationReport {
    let started = Instant::now();
    let vars = operator_variables(r);
    let (points, skipped) = draw_points(&vars, sampling, |p| r.substitute(p).is_ok());
    let witness = first_failure(&points, |p| {
        let rp = r.substitute(p).expect("admissible point");
        defect_witness(&constant_defect(&rp, which))
    });
    sampled_report(constant_identity(which), "operator", sampling, &points, skipped, witness, started)
}

/// Builder for a colored family `R(u, v)` on an algebra with parameters p, q.
pub trait ColoredFamily: Sync {
    fn build(&self, alg: &Algebra, p: &ParamScalar, q: &ParamScalar, u: &ParamScalar, v: &ParamScalar) -> Operator2;
}

impl<F> ColoredFamily for F
where
    F: Fn(&Algebra, &ParamScalar, &ParamScalar, &ParamScalar, &ParamScalar) -> Operator2 + Sync,
{
    fn build(&self, alg: &Algebra, p: &ParamScalar, q: &ParamScalar, u: &ParamScalar, v: &ParamScalar) -> Operator2 {
        self(alg, p, q, u, v)
    }
}

/// A name based on `base` not present in `taken`.
pub fn fresh_name(base: &str, taken: &BTreeSet<String>) -> String {
    if !taken.contains(base) {
        return base.to_string();
    }
    (1..)
        .map(|k| format!("{base}_{k}"))
        .find(|n| !taken.contains(n))
        .expect("unbounded")
}

/// Colored QYBE for [`colored_operator`] with fresh spectral parameters.
pub fn verify_colored_family(alg: &Algebra, p: &ParamScalar, q: &ParamScalar, mode: VerifyMode) -> VerificationReport {
    verify_colored_with(alg, p, q, mode, &colored_operator)
}

/// Colored QYBE for an arbitrary family builder.
///
/// Symbolic mode uses fresh indeterminates u, v, w. Sampled mode assigns
/// random rationals to every free indeterminate (algebra, p, q, u, v, w) and
/// skips points where `p·a = q·b` or `q·a = p·b` for a spectral pair `(a, b)`.
pub fn verify_colored_with(
    alg: &Algebra,
    p: &ParamScalar,
    q: &ParamScalar,
    mode: VerifyMode,
    family: &dyn ColoredFamily,
) -> VerificationReport {
    let started = Instant::now();
    let mut taken = alg.variables();
    taken.extend(p.variables());
    taken.extend(q.variables());
    let mut names = Vec::new();
    for base in ["u", "v", "w"] {
        let n = fresh_name(base, &taken);
        taken.insert(n.clone());
        names.push(n);
    }
    let subject = format!("colored family over spectral parameters ({})", names.join(", "));
    let (u, v, w) = (
        ParamScalar::var(&names[0]),
        ParamScalar::var(&names[1]),
        ParamScalar::var(&names[2]),
    );
    match mode {
        VerifyMode::Symbolic => {
            let defect = colored_defect(
                &family.build(alg, p, q, &u, &v),
                &family.build(alg, p, q, &u, &w),
                &family.build(alg, p, q, &v, &w),
            )
            .expect("same algebra");
            VerificationReport::new(Identity::Colored, Mode::Symbolic, subject, defect_witness(&defect), started)
        }
        VerifyMode::Sampled(sampling) => {
            let specialize = |pt: &Assignment| -> Option<(Algebra, [ParamScalar; 5])> {
                let a = alg.substitute(pt).ok()?;
                let vals = [p, q, &u, &v, &w].map(|s| s.substitute(pt));
                let [p, q, u, v, w] = vals;
                Some((a, [p.ok()?, q.ok()?, u.ok()?, v.ok()?, w.ok()?]))
            };
            let admissible = |pt: &Assignment| {
                let Some((_, [p, q, u, v, w])) = specialize(pt) else {
                    return false;
                };
                [(&u, &v), (&u, &w), (&v, &w)].iter().all(|(a, b)| {
                    !(&(&p * *a) - &(&q * *b)).is_zero() && !(&(&q * *a) - &(&p * *b)).is_zero()
                })
            };
            let (points, skipped) = draw_points(&taken, sampling, admissible);
            let witness = first_failure(&points, |pt| {
                let (a, [p, q, u, v, w]) = specialize(pt).expect("admissible point");
                let defect = colored_defect(
                    &family.build(&a, &p, &q, &u, &v),
                    &family.build(&a, &p, &q, &u, &w),
                    &family.build(&a, &p, &q, &v, &w),
                )
                .expect("same algebra");
                defect_witness(&defect)
            });
            sampled_report(Identity::Colored, &subject, sampling, &points, skipped, witness, started)
        }
    }
}

/// All four WXZ conditions, in the order `[W,W,W]`, `[Z,Z,Z]`, `[W,X,X]`,
/// `[X,X,Z]`; the report witness names the first failing one.
pub fn verify_wxz(t: &WxzTriple) -> VerificationReport {
    let started = Instant::now();
    let conditions: [(&str, [&Operator2; 3]); 4] = [
        ("[W,W,W]", [&t.w, &t.w, &t.w]),
        ("[Z,Z,Z]", [&t.z, &t.z, &t.z]),
        ("[W,X,X]", [&t.w, &t.x, &t.x]),
        ("[X,X,Z]", [&t.x, &t.x, &t.z]),
    ];
    let checks: Vec<SubCheck> = conditions
        .par_iter()
        .map(|(name, [r, s, u])| {
            let defect = yb_commutator(r, s, u).expect("triple has equal dims");
            let witness = defect_witness(&defect).map(|w| w.with_condition(name));
            SubCheck {
                name: name.to_string(),
                status: if witness.is_some() { Status::Fail } else { Status::Pass },
                witness,
            }
        })
        .collect();
    let witness = checks.iter().find_map(|c| c.witness.clone());
    let mut rep = VerificationReport::new(Identity::Wxz, Mode::Symbolic, "WXZ triple", witness, started);
    rep.checks = checks;
    rep
}

/// [`verify_wxz`] at random values of every indeterminate in the triple.
pub fn verify_wxz_sampled(t: &WxzTriple, sampling: Sampling) -> VerificationReport {
    let started = Instant::now();
    let mut vars = operator_variables(&t.w);
    vars.extend(operator_variables(&t.x));
    vars.extend(operator_variables(&t.z));
    let specialize = |p: &Assignment| -> Option<WxzTriple> {
        WxzTriple::new(t.w.substitute(p).ok()?, t.x.substitute(p).ok()?, t.z.substitute(p).ok()?).ok()
    };
    let (points, skipped) = draw_points(&vars, sampling, |p| specialize(p).is_some());
    let witness = first_failure(&points, |p| verify_wxz(&specialize(p).expect("admissible point")).witness);
    sampled_report(Identity::Wxz, "WXZ triple", sampling, &points, skipped, witness, started)
}

/// Passes iff `r ∘ r_inv` and `r_inv ∘ r` are both the identity.
pub fn verify_inverse_pair(r: &Operator2, r_inv: &Operator2) -> VerificationReport {
    let started = Instant::now();
    if r.dim() != r_inv.dim() {
        let w = Witness::message(format!("dimension mismatch: {} vs {}", r.dim(), r_inv.dim()));
        return VerificationReport::new(Identity::InverseRoundtrip, Mode::Symbolic, "inverse pair", Some(w), started);
    }
    let right = r.compose(r_inv).expect("dims checked");
    let left = r_inv.compose(r).expect("dims checked");
    let checks: Vec<SubCheck> = [("R∘R⁻¹ = I", &right), ("R⁻¹∘R = I", &left)]
        .into_iter()
        .map(|(name, op)| {
            let witness = identity_witness(op).map(|w| w.with_condition(name));
            SubCheck {
                name: name.into(),
                status: if witness.is_some() { Status::Fail } else { Status::Pass },
                witness,
            }
        })
        .collect();
    let witness = checks.iter().find_map(|c| c.witness.clone());
    let mut rep = VerificationReport::new(Identity::InverseRoundtrip, Mode::Symbolic, "inverse pair", witness, started);
    rep.checks = checks;
    rep
}

/// Report for an algebra validation outcome.
pub fn algebra_report(result: &Result<Algebra, AlgebraError>) -> VerificationReport {
    let started = Instant::now();
    let (subject, witness) = match result {
        Ok(a) => (format!("algebra of dimension {}", a.dim()), None),
        Err(e) => ("algebra".to_string(), Some(algebra_witness(e))),
    };
    VerificationReport::new(Identity::AlgebraAxioms, Mode::Symbolic, subject, witness, started)
}

fn algebra_witness(e: &AlgebraError) -> Witness {
    let mut w = Witness::message(e.to_string());
    match e {
        AlgebraError::Associativity { i, j, k, coord, defect } => {
            w.condition = Some("associativity".into());
            w.row = Some(vec![*coord]);
            w.col = Some(vec![*i, *j, *k]);
            w.value = Some(defect.to_string());
        }
        AlgebraError::Unit { index, .. } => {
            w.condition = Some("unit".into());
            w.col = Some(vec![*index]);
        }
        _ => w.condition = Some("shape".into()),
    }
    w
}

/// Report for a superalgebra validation outcome.
pub fn superalgebra_report(result: &Result<LieSuperalgebra, SuperError>) -> VerificationReport {
    let started = Instant::now();
    let (subject, witness) = match result {
        Ok(l) => (format!("superalgebra of dimension {}", l.dim()), None),
        Err(e) => {
            let mut w = Witness::message(e.to_string());
            match e {
                SuperError::Grading { i, j, k } => {
                    w.condition = Some("grading".into());
                    w.col = Some(vec![*i, *j, *k]);
                }
                SuperError::Antisymmetry { i, j, k } => {
                    w.condition = Some("super-antisymmetry".into());
                    w.col = Some(vec![*i, *j, *k]);
                }
                SuperError::Jacobi { i, j, k, coord, defect } => {
                    w.condition = Some("super-jacobi".into());
                    w.row = Some(vec![*coord]);
                    w.col = Some(vec![*i, *j, *k]);
                    w.value = Some(defect.to_string());
                }
                _ => w.condition = Some("shape".into()),
            }
            ("superalgebra".to_string(), Some(w))
        }
    };
    VerificationReport::new(Identity::SuperAxioms, Mode::Symbolic, subject, witness, started)
}

/// How a printed 4×4 display relates to the operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DisplayReading {
    /// Column `c` holds the image of basis tensor `c` (the crate's convention).
    ColumnIsImage,
    /// Row `r` holds the image of basis tensor `r`.
    RowIsImage,
}

/// Indices of the image vectors (basis tensors) where the display differs
/// from the operator.
pub fn display_mismatches(op: &Operator2, printed: &Matrix, reading: DisplayReading) -> Vec<usize> {
    // Row k of each matrix below is the image of basis tensor k.
    let generated_images = op.matrix().transpose();
    let printed_images = match reading {
        DisplayReading::ColumnIsImage => printed.transpose(),
        DisplayReading::RowIsImage => printed.clone(),
    };
    (0..printed_images.rows())
        .filter(|&k| printed_images.row(k) != generated_images.row(k))
        .collect()
}

/// Compares a generated operator with a printed display. Passes when the
/// mismatching images are exactly the ones listed in `suspected`; each of
/// those is flagged in the notes with printed and derived values.
pub fn verify_display(
    op: &Operator2,
    printed: &Matrix,
    reading: DisplayReading,
    suspected: &[usize],
    labels: &[String],
) -> VerificationReport {
    let started = Instant::now();
    let mismatched = display_mismatches(op, printed, reading);
    let unexpected: Vec<usize> = mismatched.iter().copied().filter(|r| !suspected.contains(r)).collect();
    let missing: Vec<usize> = suspected.iter().copied().filter(|r| !mismatched.contains(r)).collect();
    let tensor_name = |k: usize| {
        let n = op.dim();
        format!("{}⊗{}", labels[k / n], labels[k % n])
    };
    let printed_image = |k: usize| -> Vec<String> {
        match reading {
            DisplayReading::RowIsImage => printed.row(k).iter().map(ToString::to_string).collect(),
            DisplayReading::ColumnIsImage => (0..printed.rows()).map(|r| printed.get(r, k).to_string()).collect(),
        }
    };
    let witness = if let Some(&k) = unexpected.first() {
        Some(Witness::message(format!(
            "image of {} differs from the display: printed ({}) vs derived ({})",
            tensor_name(k),
            printed_image(k).join(", "),
            op.image(k / op.dim(), k % op.dim()).iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        )))
    } else {
        missing.first().map(|&k| {
            Witness::message(format!("image of {} was expected to differ but matches", tensor_name(k)))
        })
    };
    let mut rep = VerificationReport::new(Identity::DisplayMatch, Mode::Symbolic, "printed display", witness, started);
    for &k in suspected.iter().filter(|k| mismatched.contains(k)) {
        rep.notes.push(format!(
            "suspected typo in the display: image of {} is printed as ({}) but the defining formula gives ({})",
            tensor_name(k),
            printed_image(k).join(", "),
            op.image(k / op.dim(), k % op.dim()).iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        ));
    }
    rep
}

/// Outcome of the split-center property run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SplitCenterSummary {
    pub admissible_checked: usize,
    pub inadmissible_rejected: usize,
    pub inadmissible_total: usize,
}

/// QYBE for `admissible` random split-center operators and rejection of
/// `inadmissible` random support-violating pairs, all from one seed.
pub fn verify_split_center_random(
    space: &SplitSpace,
    admissible: usize,
    inadmissible: usize,
    seed: u64,
) -> (VerificationReport, SplitCenterSummary) {
    let started = Instant::now();
    let mut rng = sampling::rng(seed);
    let good: Vec<_> = (0..admissible)
        .map(|_| sampling::random_admissible_maps(space, &mut rng))
        .collect();
    let bad: Vec<_> = (0..inadmissible)
        .map(|_| sampling::random_inadmissible_maps(space, &mut rng))
        .collect();
    let failures: Vec<Option<Witness>> = good
        .par_iter()
        .enumerate()
        .map(|(k, (f, g))| match split_center_operator(space, f, g) {
            Ok(r) => defect_witness(&qybe_defect(&r)).map(|mut w| {
                w.message = Some(format!("instance {k}"));
                w
            }),
            Err(e) => Some(Witness::message(format!("instance {k}: {e}"))),
        })
        .collect();
    let rejected = bad
        .iter()
        .filter(|(f, g)| split_center_operator(space, f, g).is_err())
        .count();
    let mut witness = failures.into_iter().flatten().next();
    if witness.is_none() && rejected != inadmissible {
        witness = Some(Witness::message(format!(
            "{} of {inadmissible} support-violating instances were accepted",
            inadmissible - rejected
        )));
    }
    let mut rep = VerificationReport::new(
        Identity::Qybe,
        Mode::Sampled,
        format!("split-center operators, dim V = {}, c = e{}", space.total_dim(), space.c_index()),
        witness,
        started,
    );
    rep.samples = Some(SampleStats {
        requested: admissible,
        evaluated: admissible,
        skipped: 0,
        seed,
    });
    rep.notes.push(format!("{rejected} of {inadmissible} support-violating instances rejected before evaluation"));
    (
        rep,
        SplitCenterSummary {
            admissible_checked: admissible,
            inadmissible_rejected: rejected,
            inadmissible_total: inadmissible,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::twist;

    #[test]
    fn twist_passes_braid() {
        let rep = verify_constant(&twist(2), ConstantEquation::Braid);
        assert!(rep.passed());
        assert!(rep.witness.is_none());
    }

    #[test]
    fn fail_carries_witness() {
        let mut rng = sampling::rng(3);
        let r = sampling::random_operator(2, &mut rng);
        let rep = verify_constant(&r, ConstantEquation::Braid);
        assert_eq!(rep.status, Status::Fail);
        let w = rep.witness.unwrap();
        assert_eq!(w.row.as_ref().map(Vec::len), Some(3));
        assert!(w.value.is_some());
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let taken: BTreeSet<String> = ["u", "u_1"].iter().map(|s| s.to_string()).collect();
        assert_eq!(fresh_name("u", &taken), "u_2");
        assert_eq!(fresh_name("v", &taken), "v");
    }

    #[test]
    fn json_omits_elapsed() {
        let rep = verify_constant(&twist(2), ConstantEquation::Qybe);
        let js = rep.to_json();
        assert!(js.contains("\"identity\": \"qybe\""));
        assert!(!js.contains("elapsed"));
    }

    #[test]
    fn sampled_constant_check_skips_poles() {
        let a = Algebra::quadratic_quotient(ParamScalar::var("m"), ParamScalar::var("n"));
        let alpha: ParamScalar = "1/(a - 1)".parse().unwrap();
        let r = crate::constructors::dn_operator(&a, &alpha, &"b".parse().unwrap(), &alpha);
        let rep = verify_constant_sampled(&r, ConstantEquation::Braid, Sampling { samples: 10, seed: 5 });
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.samples.as_ref().unwrap().evaluated, 10);
    }
}

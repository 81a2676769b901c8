use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};

use serde_json::json;
use ybx_core::io::{self, IoError, OperatorDoc};
use ybx_core::verify::{
    algebra_report, fresh_name, superalgebra_report, verify_colored_family, verify_constant,
    verify_constant_sampled, verify_inverse_pair, verify_split_center_random, verify_wxz, verify_wxz_sampled,
    ConstantEquation, Identity, Sampling, VerificationReport, VerifyMode,
};
use ybx_core::{
    canonical_solution, classify_dn_generic, colored_inverse, colored_operator, dn_inverse, dn_operator,
    super_phi, super_phi_inverse, twist, wxz_system, Algebra, Invertibility, LieSuperalgebra, Operator2,
    ParamScalar, SplitSpace,
};

use crate::args::{
    AlgebraArgs, Check, Command, DnParams, Equation, Export, Family, FamilyParams, Format, InvertArgs,
    InvertFamily, ModeArgs, OutputArgs, Validate,
};

/// Usage or input problem; maps to exit status 2.
#[derive(Debug)]
pub struct InputError(String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<IoError> for InputError {
    fn from(e: IoError) -> Self {
        InputError(e.to_string())
    }
}

fn input_err(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

/// Returns whether every check passed.
pub fn run(command: Command) -> Result<bool, InputError> {
    match command {
        Command::Check(c) => check(c),
        Command::Export(Export::Matrix {
            family,
            algebra,
            superalgebra,
            params,
            symbolic: _,
            output,
        }) => export(family, &algebra, superalgebra.as_deref(), &params, &output),
        Command::Validate(v) => validate(v),
        Command::Invert(a) => invert(&a),
    }
}

/// Names in use, so defaulted parameters get fresh indeterminates.
struct Scope {
    taken: BTreeSet<String>,
}

impl Scope {
    fn new(taken: BTreeSet<String>) -> Self {
        Scope { taken }
    }

    fn param(&mut self, given: &Option<String>, name: &str) -> Result<ParamScalar, InputError> {
        match given {
            Some(src) => {
                let v = parse_scalar(src, name)?;
                self.taken.extend(v.variables());
                Ok(v)
            }
            None => {
                let fresh = fresh_name(name, &self.taken);
                self.taken.insert(fresh.clone());
                Ok(ParamScalar::var(&fresh))
            }
        }
    }
}

fn parse_scalar(src: &str, flag: &str) -> Result<ParamScalar, InputError> {
    src.parse().map_err(|e| input_err(format!("--{flag} {src:?}: {e}")))
}

fn load_algebra(a: &AlgebraArgs) -> Result<Algebra, InputError> {
    let alg = match &a.algebra {
        Some(path) => io::load_algebra(path)?,
        None => Algebra::quadratic_quotient(ParamScalar::var("m"), ParamScalar::var("n")),
    };
    let vars = alg.variables();
    let mut bindings = BTreeMap::new();
    for (name, value) in [("m", &a.m), ("n", &a.n), ("sigma", &a.sigma)] {
        if let Some(src) = value {
            if !vars.contains(name) {
                return Err(input_err(format!("--{name} given but the algebra has no indeterminate `{name}`")));
            }
            bindings.insert(name.to_string(), parse_scalar(src, name)?);
        }
    }
    if bindings.is_empty() {
        return Ok(alg);
    }
    alg.bind(&bindings).map_err(|e| input_err(format!("cannot bind algebra parameters: {e}")))
}

fn load_superalgebra(path: Option<&Path>) -> Result<LieSuperalgebra, InputError> {
    let path = path.ok_or_else(|| input_err("this family needs --superalgebra PATH"))?;
    Ok(io::load_superalgebra(path)?)
}

fn even_center_element(l: &LieSuperalgebra, k: usize) -> Result<Vec<ParamScalar>, InputError> {
    let center = l.even_center();
    center.into_iter().nth(k).ok_or_else(|| {
        input_err(format!(
            "--z-index {k} is out of range: the even center has dimension {}",
            l.even_center().len()
        ))
    })
}

fn describe_vector(v: &[ParamScalar], labels: &[String]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(labels)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| if c.is_one() { l.clone() } else { format!("({c})*{l}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn mode(m: &ModeArgs) -> VerifyMode {
    match m.samples {
        Some(samples) => VerifyMode::Sampled(Sampling { samples, seed: m.seed }),
        None => VerifyMode::Symbolic,
    }
}

fn equation(e: Equation) -> ConstantEquation {
    match e {
        Equation::Braid => ConstantEquation::Braid,
        Equation::Qybe => ConstantEquation::Qybe,
    }
}

fn constant_report(r: &Operator2, which: ConstantEquation, mode: VerifyMode) -> VerificationReport {
    match mode {
        VerifyMode::Symbolic => verify_constant(r, which),
        VerifyMode::Sampled(s) => verify_constant_sampled(r, which, s),
    }
}

fn elimination_inverse_report(r: &Operator2) -> VerificationReport {
    match r.inverse() {
        Invertibility::Invertible { inverse, .. } => {
            verify_inverse_pair(r, &inverse).with_note("inverse computed by exact elimination")
        }
        Invertibility::NotInvertible { determinant } => VerificationReport::failure(
            Identity::InverseRoundtrip,
            "inverse pair",
            format!("operator is not invertible: determinant is {determinant}"),
        ),
    }
}

fn write_output(output: &OutputArgs, text: &str) -> Result<(), InputError> {
    match &output.out {
        Some(path) => Ok(io::write_text(path, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit(reports: &[VerificationReport], output: &OutputArgs) -> Result<bool, InputError> {
    let status = io::overall_status(reports);
    let text = match output.format {
        Format::Json => io::reports_to_json(reports),
        Format::Text => {
            let mut s: String = reports.iter().map(ToString::to_string).collect();
            s.push_str(&format!("overall: {status}\n"));
            s
        }
    };
    write_output(output, &text)?;
    Ok(reports.iter().all(VerificationReport::passed))
}

fn dn_params(scope: &mut Scope, p: &DnParams) -> Result<[ParamScalar; 3], InputError> {
    Ok([
        scope.param(&p.alpha, "alpha")?,
        scope.param(&p.beta, "beta")?,
        scope.param(&p.gamma, "gamma")?,
    ])
}

fn require_dn_dim(alg: &Algebra) -> Result<(), InputError> {
    if alg.dim() < 2 {
        return Err(input_err("the dn family needs an algebra of dimension at least 2"));
    }
    Ok(())
}

fn check(c: Check) -> Result<bool, InputError> {
    match c {
        Check::Constant {
            algebra,
            params,
            operator,
            equation: eq,
            mode: m,
            output,
        } => {
            let which = equation(eq);
            let mode = mode(&m);
            let reports = if let Some(path) = operator {
                let r = io::load_operator(&path)?;
                vec![constant_report(&r, which, mode), elimination_inverse_report(&r)]
            } else {
                let alg = load_algebra(&algebra)?;
                require_dn_dim(&alg)?;
                let mut scope = Scope::new(alg.variables());
                let [al, be, ga] = dn_params(&mut scope, &params)?;
                let r = dn_operator(&alg, &al, &be, &ga);
                let case = classify_dn_generic(&al, &be, &ga);
                let main = constant_report(&r, which, mode)
                    .with_note(format!("alpha = {al}, beta = {be}, gamma = {ga}; parameter case: {case}"));
                let inverse = match dn_inverse(&alg, &al, &be, &ga) {
                    Ok(inv) => verify_inverse_pair(&r, &inv).with_note("closed-form inverse of the parameter case"),
                    Err(_) => elimination_inverse_report(&r),
                };
                vec![main, inverse]
            };
            emit(&reports, &output)
        }
        Check::Colored {
            algebra,
            p,
            q,
            mode: m,
            output,
        } => {
            let alg = load_algebra(&algebra)?;
            let mut scope = Scope::new(alg.variables());
            let (p, q) = (scope.param(&p, "p")?, scope.param(&q, "q")?);
            let rep = verify_colored_family(&alg, &p, &q, mode(&m)).with_note(format!("p = {p}, q = {q}"));
            emit(&[rep], &output)
        }
        Check::Wxz {
            algebra,
            lambda,
            mu,
            mode: m,
            output,
        } => {
            let alg = load_algebra(&algebra)?;
            let mut scope = Scope::new(alg.variables());
            let (l, u) = (scope.param(&lambda, "lambda")?, scope.param(&mu, "mu")?);
            let triple = wxz_system(&alg, &l, &u);
            let rep = match mode(&m) {
                VerifyMode::Symbolic => verify_wxz(&triple),
                VerifyMode::Sampled(s) => verify_wxz_sampled(&triple, s),
            };
            emit(&[rep.with_note(format!("lambda = {l}, mu = {u}"))], &output)
        }
        Check::Super {
            superalgebra,
            alpha,
            z_index,
            mode: m,
            output,
        } => {
            let l = load_superalgebra(Some(&superalgebra))?;
            let z = even_center_element(&l, z_index)?;
            let alpha = Scope::new(BTreeSet::new()).param(&alpha, "alpha")?;
            let phi = super_phi(&l, &z, &alpha).map_err(|e| input_err(e.to_string()))?;
            let inv = super_phi_inverse(&l, &z, &alpha).map_err(|e| input_err(e.to_string()))?;
            let note = format!("z = {}, alpha = {alpha}", describe_vector(&z, l.labels()));
            let reports = vec![
                constant_report(&phi, ConstantEquation::Braid, mode(&m)).with_note(note),
                verify_inverse_pair(&phi, &inv).with_note("closed-form inverse with z on the left"),
            ];
            emit(&reports, &output)
        }
        Check::SplitCenter {
            dim,
            c_index,
            samples,
            inadmissible,
            seed,
            output,
        } => {
            let space = SplitSpace::new(dim, c_index).map_err(|e| input_err(e.to_string()))?;
            let (rep, _) = verify_split_center_random(&space, samples, inadmissible, seed);
            emit(&[rep], &output)
        }
    }
}

fn build_family(
    family: Family,
    algebra: &AlgebraArgs,
    superalgebra: Option<&Path>,
    params: &FamilyParams,
) -> Result<(Operator2, Vec<String>), InputError> {
    if family == Family::Super {
        let l = load_superalgebra(superalgebra)?;
        let z = even_center_element(&l, params.z_index)?;
        let alpha = Scope::new(BTreeSet::new()).param(&params.dn.alpha, "alpha")?;
        let phi = super_phi(&l, &z, &alpha).map_err(|e| input_err(e.to_string()))?;
        return Ok((phi, l.labels().to_vec()));
    }
    let alg = load_algebra(algebra)?;
    let labels = alg.labels().to_vec();
    let mut scope = Scope::new(alg.variables());
    let op = match family {
        Family::Dn => {
            require_dn_dim(&alg)?;
            let [a, b, g] = dn_params(&mut scope, &params.dn)?;
            dn_operator(&alg, &a, &b, &g)
        }
        Family::Colored => {
            let p = scope.param(&params.p, "p")?;
            let q = scope.param(&params.q, "q")?;
            let u = scope.param(&params.u, "u")?;
            let v = scope.param(&params.v, "v")?;
            colored_operator(&alg, &p, &q, &u, &v)
        }
        Family::WxzW | Family::WxzX | Family::WxzZ => {
            let l = scope.param(&params.lambda, "lambda")?;
            let m = scope.param(&params.mu, "mu")?;
            let t = wxz_system(&alg, &l, &m);
            match family {
                Family::WxzW => t.w,
                Family::WxzX => t.x,
                _ => t.z,
            }
        }
        Family::Canonical => {
            if alg.dim() != 2 {
                return Err(input_err("the canonical family is 4×4: use a two-dimensional algebra"));
            }
            let q = scope.param(&params.q, "q")?;
            let eta = scope.param(&params.eta, "eta")?;
            canonical_solution(&q, &eta)
        }
        Family::Twist => twist(alg.dim()),
        Family::Super => unreachable!("handled above"),
    };
    Ok((op, labels))
}

fn matrix_text(op: &Operator2, labels: &[String]) -> String {
    let n = op.dim();
    let basis: Vec<String> = (0..n * n).map(|k| format!("{}⊗{}", labels[k / n], labels[k % n])).collect();
    format!("# basis: {} (column k = image of basis tensor k)\n{}\n", basis.join(", "), op.matrix())
}

fn export(
    family: Family,
    algebra: &AlgebraArgs,
    superalgebra: Option<&Path>,
    params: &FamilyParams,
    output: &OutputArgs,
) -> Result<bool, InputError> {
    let (op, labels) = build_family(family, algebra, superalgebra, params)?;
    let text = match output.format {
        Format::Json => io::operator_to_json(&op),
        Format::Text => matrix_text(&op, &labels),
    };
    write_output(output, &text)?;
    Ok(true)
}

fn validate(v: Validate) -> Result<bool, InputError> {
    let pick = |flag: Option<PathBuf>, path: Option<PathBuf>| flag.or(path).expect("clap requires one");
    match v {
        Validate::Algebra { flag, path, output } => {
            let text = io::read_text(&pick(flag, path))?;
            let doc: io::AlgebraDoc = serde_json::from_str(&text).map_err(IoError::from)?;
            let result = match doc.into_algebra() {
                Ok(a) => Ok(a),
                Err(IoError::Algebra(e)) => Err(e),
                Err(e) => return Err(e.into()),
            };
            emit(&[algebra_report(&result)], &output)
        }
        Validate::Superalgebra { flag, path, output } => {
            let text = io::read_text(&pick(flag, path))?;
            let doc: io::SuperalgebraDoc = serde_json::from_str(&text).map_err(IoError::from)?;
            let result = match doc.into_superalgebra() {
                Ok(l) => Ok(l),
                Err(IoError::Super(e)) => Err(e),
                Err(e) => return Err(e.into()),
            };
            emit(&[superalgebra_report(&result)], &output)
        }
    }
}

fn invert(a: &InvertArgs) -> Result<bool, InputError> {
    let (op, inverse, note, labels) = match (&a.operator, a.family) {
        (Some(path), _) => {
            let op = io::load_operator(path)?;
            let inv = op.inverse().inverse().cloned();
            let labels = (0..op.dim()).map(|i| format!("e{i}")).collect();
            (op, inv, "inverse computed by exact elimination".to_string(), labels)
        }
        (None, Some(InvertFamily::Super)) => {
            let l = load_superalgebra(a.superalgebra.as_deref())?;
            let z = even_center_element(&l, a.params.z_index)?;
            let alpha = Scope::new(BTreeSet::new()).param(&a.params.dn.alpha, "alpha")?;
            let op = super_phi(&l, &z, &alpha).map_err(|e| input_err(e.to_string()))?;
            let inv = super_phi_inverse(&l, &z, &alpha).map_err(|e| input_err(e.to_string()))?;
            (op, Some(inv), "closed-form inverse".into(), l.labels().to_vec())
        }
        (None, Some(fam)) => {
            let alg = load_algebra(&a.algebra)?;
            let mut scope = Scope::new(alg.variables());
            let labels = alg.labels().to_vec();
            match fam {
                InvertFamily::Dn => {
                    require_dn_dim(&alg)?;
                    let [al, be, ga] = dn_params(&mut scope, &a.params.dn)?;
                    let op = dn_operator(&alg, &al, &be, &ga);
                    match dn_inverse(&alg, &al, &be, &ga) {
                        Ok(inv) => (op, Some(inv), "closed-form inverse".into(), labels),
                        Err(e) => {
                            let inv = op.inverse().inverse().cloned();
                            let note = match inv {
                                Some(_) => format!("{e}; inverse computed by exact elimination"),
                                None => e.to_string(),
                            };
                            (op, inv, note, labels)
                        }
                    }
                }
                InvertFamily::Colored => {
                    let p = scope.param(&a.params.p, "p")?;
                    let q = scope.param(&a.params.q, "q")?;
                    let u = scope.param(&a.params.u, "u")?;
                    let v = scope.param(&a.params.v, "v")?;
                    let op = colored_operator(&alg, &p, &q, &u, &v);
                    match colored_inverse(&alg, &p, &q, &u, &v) {
                        Ok(inv) => (op, Some(inv), "closed-form inverse".into(), labels),
                        Err(e) => (op, None, e.to_string(), labels),
                    }
                }
                InvertFamily::Super => unreachable!("handled above"),
            }
        }
        (None, None) => return Err(input_err("give --operator PATH or --family")),
    };
    let determinant = op.determinant();
    let report = match &inverse {
        Some(inv) => verify_inverse_pair(&op, inv).with_note(note),
        None => VerificationReport::failure(
            Identity::InverseRoundtrip,
            "inverse pair",
            format!("no inverse: {note}; determinant is {determinant}"),
        ),
    };
    let reports = [report];
    let text = match a.output.format {
        Format::Json => {
            let value = json!({
                "schema": "ybx.inverse/1",
                "status": io::overall_status(&reports),
                "determinant": determinant,
                "inverse": inverse.as_ref().map(OperatorDoc::from_operator),
                "reports": reports,
            });
            let mut s = serde_json::to_string_pretty(&value).expect("serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!("determinant: {determinant}\n");
            if let Some(inv) = &inverse {
                s.push_str("inverse:\n");
                s.push_str(&matrix_text(inv, &labels));
            }
            s.push_str(&reports[0].to_string());
            s
        }
    };
    write_output(&a.output, &text)?;
    Ok(reports[0].passed())
}

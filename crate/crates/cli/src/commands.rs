//! Command implementations and the exit-code contract:
//! 0 success, 1 verification failed, 2 parse/format, 3 not completely
//! positive, 4 ill-conditioned.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use vecq::channels::{Channel, VerificationReport};
use vecq::random;
use vecq::tomography::{
    aapt_reconstruct_with, eapt_reconstruct, presets, simulate_probs, spt_from_outputs_with,
    spt_from_probs_with, JointState, MeasurementSet, ProbabilityMatrix, Solver, TomographySet,
};
use vecq::veclib::{ReshuffleSpec, SwapSpec};
use vecq::{Error as VecqError, Superoperator};

use crate::document::{
    self, ChannelDocument, DocumentError, JointStateData, MatrixDocument, RunPath,
    TomographyRunDocument,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_CP: i32 = 3;
pub const EXIT_ILL_CONDITIONED: i32 = 4;

/// A command failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure::parse(e.0)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::parse(e.to_string())
    }
}

impl From<VecqError> for Failure {
    fn from(e: VecqError) -> Self {
        let code = match e {
            VecqError::NotCompletelyPositive { .. } => EXIT_NOT_CP,
            VecqError::IllConditionedSet { .. }
            | VecqError::IllConditionedAncillaState { .. } => EXIT_ILL_CONDITIONED,
            _ => EXIT_PARSE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

pub type CmdResult = Result<i32, Failure>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    Kraus,
    Choi,
    Superop,
}

impl Representation {
    pub fn name(self) -> &'static str {
        match self {
            Representation::Kraus => "kraus",
            Representation::Choi => "choi",
            Representation::Superop => "superop",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Spt,
    Aapt,
    Eapt,
}

#[derive(Serialize)]
struct ReportDocument {
    cp: bool,
    tp: bool,
    unital: bool,
    lambda_min: f64,
    choi_trace: f64,
    tp_deviation: f64,
    unital_deviation: f64,
    hermiticity_deviation: f64,
    tolerance: f64,
}

impl ReportDocument {
    fn new(report: &VerificationReport, tolerance: f64) -> Self {
        Self {
            cp: report.cp,
            tp: report.tp,
            unital: report.unital,
            lambda_min: report.lambda_min,
            choi_trace: report.choi_trace,
            tp_deviation: report.tp_deviation,
            unital_deviation: report.unital_deviation,
            hermiticity_deviation: report.hermiticity_deviation,
            tolerance,
        }
    }
}

fn read_channel(path: &str) -> Result<(ChannelDocument, Channel), Failure> {
    let text = document::read_text(path)?;
    let doc: ChannelDocument = document::from_json(&text)?;
    let channel = doc.to_channel()?;
    Ok((doc, channel))
}

pub fn cmd_convert(
    from: Representation,
    to: Representation,
    input: &str,
    output: &str,
    tol: Option<f64>,
) -> CmdResult {
    let (doc, channel) = read_channel(input)?;
    if doc.kind != from.name() {
        return Err(Failure::parse(format!(
            "document type {:?} does not match --from {}",
            doc.kind,
            from.name()
        )));
    }
    let converted = match to {
        Representation::Kraus => {
            let needs_extraction = !matches!(channel, Channel::Kraus(_));
            let kraus = channel.to_kraus(tol)?;
            if needs_extraction {
                let check = channel.cp_check(None)?;
                print!(
                    "{}",
                    document::to_json(&serde_json::json!({ "lambda_min": check.lambda_min }))
                );
            }
            Channel::Kraus(kraus)
        }
        Representation::Choi => Channel::Choi(channel.to_choi()),
        Representation::Superop => Channel::Superop(channel.to_superop()),
    };
    let out_doc = ChannelDocument::from_channel(&converted);
    document::write_text(output, &document::to_json(&out_doc))?;
    Ok(EXIT_OK)
}

pub fn cmd_verify(input: &str, tol: Option<f64>) -> CmdResult {
    let (_, channel) = read_channel(input)?;
    let report = channel.verify(tol)?;
    let tolerance = tol.unwrap_or(vecq::tol::VERIFICATION);
    print!(
        "{}",
        document::to_json(&ReportDocument::new(&report, tolerance))
    );
    if report.cp && report.tp {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_VERIFICATION_FAILED)
    }
}

fn load_fixtures(
    path: Option<&str>,
    d: usize,
) -> Result<(TomographySet, MeasurementSet), Failure> {
    if let Some(path) = path {
        let text = document::read_text(path)?;
        let doc: TomographyRunDocument = document::from_json(&text)?;
        let inputs = doc
            .inputs
            .as_ref()
            .ok_or_else(|| Failure::parse("fixtures document carries no inputs"))?;
        let povm = doc
            .povm
            .as_ref()
            .ok_or_else(|| Failure::parse("fixtures document carries no povm"))?;
        let states = inputs
            .iter()
            .map(|m| document::data_to_matrix(m))
            .collect::<Result<Vec<_>, _>>()?;
        let elements = povm
            .iter()
            .map(|m| document::data_to_matrix(m))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((TomographySet::new(states)?, MeasurementSet::new(elements)?))
    } else if d == 2 {
        Ok((presets::qubit_input_states(), presets::tetrahedral_povm()))
    } else {
        Ok((presets::standard_input_states(d), presets::ic_povm(d)))
    }
}

pub fn cmd_tomo_simulate(
    scheme: Scheme,
    input: &str,
    output: &str,
    shots: Option<u64>,
    seed: u64,
    fixtures: Option<&str>,
) -> CmdResult {
    let (_, channel) = read_channel(input)?;
    let d = channel.dim();
    let mut run = TomographyRunDocument::new();
    run.seed = Some(seed);
    match scheme {
        Scheme::Spt => {
            let (set, meas) = load_fixtures(fixtures, d)?;
            if set.dim() != d || meas.dim() != d {
                return Err(Failure::parse(format!(
                    "fixtures dimension {} does not match channel dimension {d}",
                    set.dim()
                )));
            }
            let probs = simulate_probs(&channel, &set, &meas, shots, seed)?;
            run.inputs = Some(set.states().iter().map(document::matrix_to_data).collect());
            run.povm = Some(meas.elements().iter().map(document::matrix_to_data).collect());
            run.probabilities = Some(
                (0..probs.outcomes())
                    .map(|mu| (0..probs.inputs()).map(|nu| probs.get(mu, nu)).collect())
                    .collect(),
            );
            run.shots = shots;
        }
        Scheme::Aapt | Scheme::Eapt => {
            if shots.is_some() {
                return Err(Failure::parse(
                    "--shots applies to the spt scheme only; joint-state outputs are noiseless",
                ));
            }
            let tau_in = match scheme {
                Scheme::Aapt => {
                    let mut rng = ChaCha12Rng::seed_from_u64(seed);
                    JointState::new(d, d, random::full_schmidt_pure_state(d, &mut rng))?
                }
                _ => JointState::maximally_entangled(d),
            };
            let tau_out = tau_in.evolve_first(&channel.to_superop())?;
            if scheme == Scheme::Aapt {
                run.joint_in = Some(JointStateData::from_state(&tau_in));
            }
            run.joint_out = Some(JointStateData::from_state(&tau_out));
        }
    }
    document::write_text(output, &document::to_json(&run))?;
    Ok(EXIT_OK)
}

pub fn cmd_tomo_reconstruct(
    scheme: Scheme,
    input: &str,
    output: &str,
    tol: Option<f64>,
    pseudo_inverse: bool,
) -> CmdResult {
    let text = document::read_text(input)?;
    let run: TomographyRunDocument = document::from_json(&text)?;
    let path = run.detect_path()?;
    let solver = if pseudo_inverse {
        Solver::PseudoInverse
    } else {
        Solver::Exact
    };
    let superop = reconstruct(scheme, &run, path, solver)?;
    let channel = Channel::Superop(superop);
    let report = channel.verify(tol)?;
    let tolerance = tol.unwrap_or(vecq::tol::VERIFICATION);
    print!(
        "{}",
        document::to_json(&ReportDocument::new(&report, tolerance))
    );
    let doc = ChannelDocument::from_channel(&channel);
    document::write_text(output, &document::to_json(&doc))?;
    Ok(EXIT_OK)
}

fn reconstruct(
    scheme: Scheme,
    run: &TomographyRunDocument,
    path: RunPath,
    solver: Solver,
) -> Result<Superoperator, Failure> {
    match scheme {
        Scheme::Spt => {
            let inputs = run
                .inputs
                .as_ref()
                .ok_or_else(|| Failure::parse("spt reconstruction needs inputs"))?;
            let states = inputs
                .iter()
                .map(|m| document::data_to_matrix(m))
                .collect::<Result<Vec<_>, _>>()?;
            let set = TomographySet::new(states)?;
            match path {
                RunPath::SptProbs => {
                    let povm = run.povm.as_ref().expect("path detection");
                    let elements = povm
                        .iter()
                        .map(|m| document::data_to_matrix(m))
                        .collect::<Result<Vec<_>, _>>()?;
                    let meas = MeasurementSet::new(elements)?;
                    let table = run.probabilities.as_ref().expect("path detection");
                    let probs = probability_matrix(table, meas.len(), set.len(), run.shots)?;
                    let duals = set.dual_basis_with(solver)?;
                    Ok(spt_from_probs_with(&meas, &probs, &duals, solver)?)
                }
                RunPath::SptOutputs => {
                    let outputs = run.outputs.as_ref().expect("path detection");
                    let out_states = outputs
                        .iter()
                        .map(|m| document::data_to_matrix(m))
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(spt_from_outputs_with(&set, &out_states, solver)?)
                }
                RunPath::Joint => Err(Failure::parse(
                    "document carries joint-state fields; use --scheme aapt or eapt",
                )),
            }
        }
        Scheme::Aapt => {
            let tau_out = joint_field(run, path)?;
            let tau_in = run
                .joint_in
                .as_ref()
                .ok_or_else(|| Failure::parse("aapt reconstruction needs joint_in"))?
                .to_state()?;
            Ok(aapt_reconstruct_with(&tau_in, &tau_out, solver)?)
        }
        Scheme::Eapt => {
            let tau_out = joint_field(run, path)?;
            Ok(eapt_reconstruct(&tau_out)?)
        }
    }
}

fn joint_field(run: &TomographyRunDocument, path: RunPath) -> Result<JointState, Failure> {
    if path != RunPath::Joint {
        return Err(Failure::parse(
            "document carries standard-tomography fields; use --scheme spt",
        ));
    }
    Ok(run
        .joint_out
        .as_ref()
        .expect("path detection")
        .to_state()?)
}

fn probability_matrix(
    table: &[Vec<f64>],
    outcomes: usize,
    inputs: usize,
    shots: Option<u64>,
) -> Result<ProbabilityMatrix, Failure> {
    if table.len() != outcomes {
        return Err(Failure::parse(format!(
            "probability table has {} rows, expected {outcomes}",
            table.len()
        )));
    }
    let mut entries = Vec::with_capacity(outcomes * inputs);
    for row in table {
        if row.len() != inputs {
            return Err(Failure::parse(format!(
                "probability row has {} entries, expected {inputs}",
                row.len()
            )));
        }
        for &v in row {
            if !v.is_finite() {
                return Err(Failure::parse("probabilities must be finite"));
            }
            entries.push(v);
        }
    }
    Ok(ProbabilityMatrix::new(outcomes, inputs, entries, shots)?)
}

pub fn cmd_dump_swap(r: usize, p: usize, output: &str) -> CmdResult {
    let spec = SwapSpec::new(r, p)?;
    let doc = MatrixDocument::from_matrix("swap", &spec.to_matrix());
    document::write_text(output, &document::to_json(&doc))?;
    Ok(EXIT_OK)
}

pub fn cmd_dump_reshuffle(p: usize, q: usize, r: usize, s: usize, output: &str) -> CmdResult {
    let spec = ReshuffleSpec::new(p, q, r, s)?;
    let doc = MatrixDocument::from_matrix("reshuffle", &spec.to_matrix());
    document::write_text(output, &document::to_json(&doc))?;
    Ok(EXIT_OK)
}

pub fn cmd_dump_bell(d: usize, output: &str) -> CmdResult {
    if d == 0 {
        return Err(Failure::parse("dimension must be positive"));
    }
    let state = JointState::maximally_entangled(d);
    let doc = MatrixDocument::from_matrix("bell", state.matrix());
    document::write_text(output, &document::to_json(&doc))?;
    Ok(EXIT_OK)
}

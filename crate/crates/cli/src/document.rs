//! JSON interchange documents.
//!
//! All matrices are stored row-major with each complex entry as a two-element
//! `[re, im]` array. Floating-point numbers are emitted with 17 significant
//! digits, which round-trips every finite double exactly, so
//! parse -> serialize is value-exact and repeated runs are byte-identical.

use std::io::{self, Write};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use vecq::channels::{Channel, ChoiMatrix, KrausSet, Superoperator};
use vecq::tomography::JointState;
use vecq::veclib::{Complex64, ComplexMatrix};

pub const FORMAT_VERSION: &str = "1";

pub type MatrixData = Vec<Vec<[f64; 2]>>;

/// A parse or format problem; maps to exit code 2.
#[derive(Debug)]
pub struct DocumentError(pub String);

impl std::fmt::Display for DocumentError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for DocumentError {}

fn err(message: impl Into<String>) -> DocumentError {
    DocumentError(message.into())
}

pub fn matrix_to_data(m: &ComplexMatrix) -> MatrixData {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| [m.get(i, j).re, m.get(i, j).im]).collect())
        .collect()
}

pub fn data_to_matrix(data: &MatrixData) -> Result<ComplexMatrix, DocumentError> {
    let rows = data.len();
    if rows == 0 {
        return Err(err("matrix has no rows"));
    }
    let cols = data[0].len();
    if cols == 0 {
        return Err(err("matrix has no columns"));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for row in data {
        if row.len() != cols {
            return Err(err("matrix rows have inconsistent lengths"));
        }
        for &[re, im] in row {
            if !re.is_finite() || !im.is_finite() {
                return Err(err("matrix entries must be finite"));
            }
            entries.push(Complex64::new(re, im));
        }
    }
    ComplexMatrix::new(rows, cols, entries).map_err(|e| err(e.to_string()))
}

/// A channel in one representation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChannelDocument {
    pub format_version: String,
    #[serde(rename = "type")]
    pub kind: String,
    pub dim: usize,
    pub matrices: Vec<MatrixData>,
}

impl ChannelDocument {
    pub fn from_channel(channel: &Channel) -> Self {
        let (kind, matrices) = match channel {
            Channel::Kraus(k) => (
                "kraus",
                k.operators().iter().map(matrix_to_data).collect(),
            ),
            Channel::Choi(c) => ("choi", vec![matrix_to_data(c.matrix())]),
            Channel::Superop(s) => ("superop", vec![matrix_to_data(s.matrix())]),
        };
        Self {
            format_version: FORMAT_VERSION.into(),
            kind: kind.into(),
            dim: channel.dim(),
            matrices,
        }
    }

    pub fn to_channel(&self) -> Result<Channel, DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(err(format!(
                "unsupported format_version {:?}",
                self.format_version
            )));
        }
        let d = self.dim;
        if d == 0 {
            return Err(err("dim must be positive"));
        }
        if self.matrices.is_empty() {
            return Err(err("document carries no matrices"));
        }
        match self.kind.as_str() {
            "kraus" => {
                let mut ops = Vec::with_capacity(self.matrices.len());
                for data in &self.matrices {
                    let m = data_to_matrix(data)?;
                    if m.rows() != d || m.cols() != d {
                        return Err(err(format!(
                            "kraus operator is {}x{}, expected {d}x{d}",
                            m.rows(),
                            m.cols()
                        )));
                    }
                    ops.push(m);
                }
                Ok(Channel::Kraus(
                    KrausSet::new(ops).map_err(|e| err(e.to_string()))?,
                ))
            }
            "choi" | "superop" => {
                if self.matrices.len() != 1 {
                    return Err(err(format!(
                        "{} document must carry exactly one matrix",
                        self.kind
                    )));
                }
                let m = data_to_matrix(&self.matrices[0])?;
                if m.rows() != d * d || m.cols() != d * d {
                    return Err(err(format!(
                        "{} matrix is {}x{}, expected {}x{}",
                        self.kind,
                        m.rows(),
                        m.cols(),
                        d * d,
                        d * d
                    )));
                }
                if self.kind == "choi" {
                    Ok(Channel::Choi(
                        ChoiMatrix::new(m).map_err(|e| err(e.to_string()))?,
                    ))
                } else {
                    Ok(Channel::Superop(
                        Superoperator::new(m).map_err(|e| err(e.to_string()))?,
                    ))
                }
            }
            other => Err(err(format!(
                "unknown channel type {other:?} (expected kraus, choi or superop)"
            ))),
        }
    }
}

/// A joint state with its factor dimensions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JointStateData {
    pub d1: usize,
    pub d2: usize,
    pub matrix: MatrixData,
}

impl JointStateData {
    pub fn from_state(state: &JointState) -> Self {
        let (d1, d2) = state.dims();
        Self {
            d1,
            d2,
            matrix: matrix_to_data(state.matrix()),
        }
    }

    pub fn to_state(&self) -> Result<JointState, DocumentError> {
        let m = data_to_matrix(&self.matrix)?;
        JointState::new(self.d1, self.d2, m).map_err(|e| err(e.to_string()))
    }
}

/// Inputs and results of one tomography run. Exactly one reconstruction
/// path's fields may be present.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct TomographyRunDocument {
    pub format_version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inputs: Option<Vec<MatrixData>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub povm: Option<Vec<MatrixData>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probabilities: Option<Vec<Vec<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outputs: Option<Vec<MatrixData>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub joint_in: Option<JointStateData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub joint_out: Option<JointStateData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shots: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// The single complete reconstruction path present in a run document.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunPath {
    /// Inputs, POVM and probability table.
    SptProbs,
    /// Inputs and output states.
    SptOutputs,
    /// Joint output, with or without a recorded joint input.
    Joint,
}

impl TomographyRunDocument {
    pub fn new() -> Self {
        Self {
            format_version: FORMAT_VERSION.into(),
            ..Default::default()
        }
    }

    pub fn detect_path(&self) -> Result<RunPath, DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(err(format!(
                "unsupported format_version {:?}",
                self.format_version
            )));
        }
        let spt_probs =
            self.inputs.is_some() && self.povm.is_some() && self.probabilities.is_some();
        let spt_outputs = self.inputs.is_some() && self.outputs.is_some();
        let joint = self.joint_out.is_some();
        let mut paths = Vec::new();
        if spt_probs {
            paths.push(RunPath::SptProbs);
        }
        if spt_outputs {
            paths.push(RunPath::SptOutputs);
        }
        if joint {
            paths.push(RunPath::Joint);
        }
        match paths.as_slice() {
            [single] => Ok(*single),
            [] => Err(err(
                "no complete reconstruction path: need inputs+povm+probabilities, \
                 inputs+outputs, or joint_out",
            )),
            _ => Err(err("document mixes fields of several reconstruction paths")),
        }
    }
}

/// A bare matrix or state, used by the dump command.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub format_version: String,
    #[serde(rename = "type")]
    pub kind: String,
    pub rows: usize,
    pub cols: usize,
    pub matrix: MatrixData,
}

impl MatrixDocument {
    pub fn from_matrix(kind: &str, m: &ComplexMatrix) -> Self {
        Self {
            format_version: FORMAT_VERSION.into(),
            kind: kind.into(),
            rows: m.rows(),
            cols: m.cols(),
            matrix: matrix_to_data(m),
        }
    }
}

/// JSON formatter emitting every float with 17 significant digits.
struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes with the 17-significant-digit float format, newline-terminated.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut serializer = serde_json::Serializer::with_formatter(&mut out, SciFormatter);
    value
        .serialize(&mut serializer)
        .expect("in-memory serialization cannot fail");
    out.push(b'\n');
    String::from_utf8(out).expect("serde_json emits UTF-8")
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T, DocumentError> {
    serde_json::from_str(text).map_err(|e| err(e.to_string()))
}

/// Reads a document from a path, or stdin when the path is `-`.
pub fn read_text(path: &str) -> io::Result<String> {
    if path == "-" {
        let mut buffer = String::new();
        io::Read::read_to_string(&mut io::stdin(), &mut buffer)?;
        Ok(buffer)
    } else {
        std::fs::read_to_string(path)
    }
}

/// Writes a document to a path, or stdout when the path is `-`.
pub fn write_text(path: &str, text: &str) -> io::Result<()> {
    if path == "-" {
        io::stdout().write_all(text.as_bytes())
    } else {
        std::fs::write(path, text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use vecq::channels::depolarizing;

    #[test]
    fn float_format_is_17_significant_digits() {
        let json = to_json(&vec![0.5_f64, 1.0 / 3.0]);
        assert!(json.contains("5.0000000000000000e-1"));
        assert!(json.contains("3.3333333333333331e-1"));
    }

    #[test]
    fn channel_document_round_trip_is_value_exact() {
        let chan = depolarizing(2, 1.0 / 3.0).unwrap();
        let doc = ChannelDocument::from_channel(&chan);
        let json = to_json(&doc);
        let parsed: ChannelDocument = from_json(&json).unwrap();
        let rebuilt = parsed.to_channel().unwrap();
        assert_eq!(&chan, &rebuilt);
        // Serialize again: byte-identical.
        assert_eq!(to_json(&parsed), json);
    }

    #[test]
    fn golden_channel_document_bytes() {
        let doc = ChannelDocument::from_channel(&vecq::channels::identity_channel(1));
        let expected = concat!(
            r#"{"format_version":"1","type":"kraus","dim":1,"#,
            r#""matrices":[[[[1.0000000000000000e0,0.0000000000000000e0]]]]}"#,
            "\n"
        );
        assert_eq!(to_json(&doc), expected);
        let parsed: ChannelDocument = from_json(expected).unwrap();
        assert_eq!(to_json(&parsed), expected);
    }

    #[test]
    fn golden_run_document_bytes() {
        let mut doc = TomographyRunDocument::new();
        doc.probabilities = Some(vec![vec![0.25, 0.75]]);
        doc.inputs = Some(vec![matrix_to_data(&ComplexMatrix::identity(1))]);
        doc.povm = Some(vec![matrix_to_data(&ComplexMatrix::identity(1))]);
        doc.shots = Some(4);
        let expected = concat!(
            r#"{"format_version":"1","#,
            r#""inputs":[[[[1.0000000000000000e0,0.0000000000000000e0]]]],"#,
            r#""povm":[[[[1.0000000000000000e0,0.0000000000000000e0]]]],"#,
            r#""probabilities":[[2.5000000000000000e-1,7.5000000000000000e-1]],"#,
            r#""shots":4}"#,
            "\n"
        );
        assert_eq!(to_json(&doc), expected);
        let parsed: TomographyRunDocument = from_json(expected).unwrap();
        assert_eq!(to_json(&parsed), expected);
        assert_eq!(parsed.detect_path().unwrap(), RunPath::SptProbs);
    }

    #[test]
    fn run_document_path_detection() {
        let mut doc = TomographyRunDocument::new();
        assert!(doc.detect_path().is_err());
        doc.joint_out = Some(JointStateData {
            d1: 2,
            d2: 2,
            matrix: matrix_to_data(&ComplexMatrix::identity(4)),
        });
        assert_eq!(doc.detect_path().unwrap(), RunPath::Joint);
        doc.inputs = Some(vec![matrix_to_data(&ComplexMatrix::identity(2))]);
        doc.outputs = Some(vec![matrix_to_data(&ComplexMatrix::identity(2))]);
        assert!(doc.detect_path().is_err());
    }

    #[test]
    fn rejects_non_finite_and_ragged_input() {
        let ragged: MatrixData = vec![vec![[1.0, 0.0], [0.0, 0.0]], vec![[0.0, 0.0]]];
        assert!(data_to_matrix(&ragged).is_err());
        let json = r#"[[[1e999,0.0],[0.0,0.0]],[[0.0,0.0],[1.0,0.0]]]"#;
        let data: Result<MatrixData, _> = from_json(json);
        match data {
            Ok(d) => assert!(data_to_matrix(&d).is_err()),
            Err(_) => {}
        }
    }

    #[test]
    fn wrong_version_is_rejected() {
        let chan = depolarizing(2, 0.5).unwrap();
        let mut doc = ChannelDocument::from_channel(&chan);
        doc.format_version = "0".into();
        assert!(doc.to_channel().is_err());
    }
}

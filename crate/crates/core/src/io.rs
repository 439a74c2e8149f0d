//! JSON wire formats. Rational literals travel as strings `"p/q"` or
//! `"p"`; matrices as `{rows, cols, entries}` with row-major string
//! entries; algebras as `{name, ambient_n, basis, unital_hint}`. Structure
//! constants are never read from a file — they are recomputed and validated
//! on load.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::decision::{Certificate, CounterexampleWitness};
use crate::error::{Error, Result};
use crate::linalg::{parse_scalar, scalar_to_string, RatMatrix, Scalar};
use crate::span::SpanMethod;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixDto {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDto {
    pub fn from_matrix(m: &RatMatrix) -> Self {
        MatrixDto {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| scalar_to_string(&m[(i, j)])).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<RatMatrix> {
        if self.entries.len() != self.rows
            || self.entries.iter().any(|r| r.len() != self.cols)
        {
            return Err(Error::Argument(format!(
                "matrix declared {}x{} but entries disagree",
                self.rows, self.cols
            )));
        }
        let mut parsed = Vec::with_capacity(self.rows);
        for row in &self.entries {
            let mut out = Vec::with_capacity(self.cols);
            for cell in row {
                out.push(parse_scalar(cell)?);
            }
            parsed.push(out);
        }
        Ok(RatMatrix::from_rows(parsed))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraDto {
    pub name: String,
    pub ambient_n: usize,
    pub basis: Vec<MatrixDto>,
    #[serde(default)]
    pub unital_hint: bool,
}

impl AlgebraDto {
    pub fn from_algebra(alg: &Algebra) -> Self {
        AlgebraDto {
            name: alg.name().to_string(),
            ambient_n: alg.ambient_n(),
            basis: alg.basis().iter().map(MatrixDto::from_matrix).collect(),
            unital_hint: alg.is_unital(),
        }
    }

    /// Rebuild and fully validate; the hint is checked, not trusted.
    pub fn to_algebra(&self) -> Result<Algebra> {
        let basis: Result<Vec<RatMatrix>> = self.basis.iter().map(MatrixDto::to_matrix).collect();
        let basis = basis?;
        for m in &basis {
            if m.rows() != self.ambient_n {
                return Err(Error::AmbientMismatch(m.rows(), self.ambient_n));
            }
        }
        let alg = Algebra::new(self.name.clone(), basis)?;
        if self.unital_hint && !alg.is_unital() {
            return Err(Error::Argument(
                "file claims a unital algebra but no unit exists".into(),
            ));
        }
        Ok(alg)
    }
}

pub fn vector_to_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(scalar_to_string).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DimsDto {
    pub ker: usize,
    pub span: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessDto {
    pub phi: MatrixDto,
    pub kernel_tensor: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpanReportDto {
    pub method: SpanMethod,
    pub samples_used: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateDto {
    pub property: crate::decision::Property,
    pub verdict: crate::decision::Verdict,
    pub dims: DimsDto,
    pub field_note: crate::decision::FieldNote,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDto>,
    pub span_report: SpanReportDto,
}

impl CertificateDto {
    pub fn from_certificate(cert: &Certificate) -> Self {
        CertificateDto {
            property: cert.property,
            verdict: cert.verdict,
            dims: DimsDto {
                ker: cert.ker_dim,
                span: cert.span_dim,
            },
            field_note: cert.field_note,
            witness: cert.witness.as_ref().map(|w: &CounterexampleWitness| WitnessDto {
                phi: MatrixDto::from_matrix(&w.phi.matrix),
                kernel_tensor: vector_to_strings(&w.kernel_tensor),
            }),
            span_report: SpanReportDto {
                method: cert.span_report.method,
                samples_used: cert.span_report.samples_used,
                seed: cert.span_report.seed,
            },
        }
    }
}

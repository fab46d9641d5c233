//! JSON schemas for certificates, matrices, and command reports, plus the
//! conversions between them and the core types.

use std::fmt;
use std::str::FromStr;

use nullpart_core::algebra::{Monomial, SparsePolynomial};
use nullpart_core::certificate::Certificate;
use nullpart_core::partition::{PartitionMatrix, PropertyReport};
use nullpart_core::{BigInt, BigRational, WeightSet};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// A file cannot be interpreted as the schema it claims to follow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError(pub String);

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed certificate: {}", self.0)
    }
}

impl std::error::Error for FormatError {}

fn bad(msg: impl Into<String>) -> FormatError {
    FormatError(msg.into())
}

/// One polynomial term: an exact coefficient and its monomial as
/// `[[variable, exponent], ..]` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTermFile {
    /// Coefficient as `"p/q"`, or `"p"` when the denominator is one.
    pub coeff: String,
    /// Sorted `[variable, exponent]` pairs; empty for the constant term.
    pub monomial: Vec<(u32, u32)>,
}

/// A polynomial as a term list, sorted by descending grevlex of the
/// monomial's support and then by total degree.
pub type PolyFile = Vec<PolyTermFile>;

/// Serializes a polynomial in canonical term order.
pub fn poly_to_file(p: &SparsePolynomial) -> PolyFile {
    p.sorted_terms()
        .into_iter()
        .map(|(m, c)| PolyTermFile {
            coeff: c.to_string(),
            monomial: m.factors().to_vec(),
        })
        .collect()
}

/// Parses `"p"` or `"p/q"` into an exact rational, rejecting a zero
/// denominator.
pub fn parse_rational(text: &str) -> Result<BigRational, FormatError> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| bad(format!("bad numerator in {text:?}")))?;
    let den =
        BigInt::from_str(den.trim()).map_err(|_| bad(format!("bad denominator in {text:?}")))?;
    if den.is_zero() {
        return Err(bad(format!("zero denominator in {text:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Rebuilds a polynomial over `n` variables, rejecting out-of-range
/// variables, zero exponents, zero coefficients, and repeated monomials;
/// the serializer never emits any of those.
pub fn poly_from_file(n: u32, terms: &PolyFile) -> Result<SparsePolynomial, FormatError> {
    let mut p = SparsePolynomial::zero(n);
    for term in terms {
        for &(v, e) in &term.monomial {
            if v < 1 || v > n {
                return Err(bad(format!("variable x{v} outside 1..={n}")));
            }
            if e == 0 {
                return Err(bad("zero exponent stored explicitly"));
            }
        }
        let mono = Monomial::from_factors(term.monomial.iter().copied());
        if mono.factors().len() != term.monomial.len() {
            return Err(bad("monomial lists a variable twice"));
        }
        let coeff = parse_rational(&term.coeff)?;
        if coeff.is_zero() {
            return Err(bad("zero coefficient stored explicitly"));
        }
        if p.coeff(&mono).is_some() {
            return Err(bad(format!("duplicate monomial {mono}")));
        }
        p.add_term(mono, coeff);
    }
    Ok(p)
}

/// Provenance block of a certificate file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateMeta {
    /// Determinant of the partition matrix, as a decimal string.
    pub det: String,
    /// How the coefficients were obtained: `"solve"` or `"cramer"`.
    pub method: String,
}

/// The certificate file schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    /// Variable count.
    pub n: u32,
    /// Weights `w_1..w_n` as decimal strings.
    pub weights: Vec<String>,
    /// Multiplier of `x_{i+1}^2 - 1` at index `i`.
    pub beta_squares: Vec<PolyFile>,
    /// Multiplier of the linear form.
    pub beta_linear: PolyFile,
    /// Provenance.
    pub meta: CertificateMeta,
}

/// Serializes a verified certificate together with its determinant.
pub fn certificate_to_file(cert: &Certificate, det: &BigInt, method: &str) -> CertificateFile {
    CertificateFile {
        n: cert.n(),
        weights: cert
            .weights()
            .weights()
            .iter()
            .map(|w| w.to_string())
            .collect(),
        beta_squares: cert.beta_squares().iter().map(poly_to_file).collect(),
        beta_linear: poly_to_file(cert.beta_linear()),
        meta: CertificateMeta {
            det: det.to_string(),
            method: method.to_string(),
        },
    }
}

/// Rebuilds the certificate. Content stays unchecked; verification decides.
pub fn certificate_from_file(file: &CertificateFile) -> Result<Certificate, FormatError> {
    if file.n == 0 {
        return Err(bad("n must be at least 1"));
    }
    if file.weights.len() != file.n as usize {
        return Err(bad(format!(
            "n = {} but {} weights",
            file.n,
            file.weights.len()
        )));
    }
    if file.beta_squares.len() != file.n as usize {
        return Err(bad(format!(
            "expected {} square multipliers, found {}",
            file.n,
            file.beta_squares.len()
        )));
    }
    let weights = file
        .weights
        .iter()
        .map(|w| BigInt::from_str(w.trim()).map_err(|_| bad(format!("bad weight {w:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let beta_squares = file
        .beta_squares
        .iter()
        .map(|p| poly_from_file(file.n, p))
        .collect::<Result<Vec<_>, _>>()?;
    let beta_linear = poly_from_file(file.n, &file.beta_linear)?;
    Ok(Certificate::from_parts(
        WeightSet::new(weights),
        beta_squares,
        beta_linear,
    ))
}

/// One structural check in a report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckFile {
    /// What was checked.
    pub name: String,
    /// Whether it held.
    pub passed: bool,
}

/// Structural property report of a matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PropertiesFile {
    /// Individual checks in a fixed order.
    pub checks: Vec<CheckFile>,
    /// Conjunction of all checks.
    pub all_passed: bool,
}

impl From<&PropertyReport> for PropertiesFile {
    fn from(report: &PropertyReport) -> Self {
        PropertiesFile {
            checks: report
                .checks
                .iter()
                .map(|c| CheckFile {
                    name: c.name.to_string(),
                    passed: c.passed,
                })
                .collect(),
            all_passed: report.all_passed(),
        }
    }
}

/// The matrix export schema: labels plus the nonzero cells, each as
/// `[row, col, k]` with `k` the 1-based weight index held at that cell.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    /// Weight count.
    pub n: u32,
    /// Weights as decimal strings.
    pub weights: Vec<String>,
    /// Row labels (even subsets), grevlex-descending.
    pub rows: Vec<String>,
    /// Column labels (odd subsets), grevlex-descending.
    pub cols: Vec<String>,
    /// Nonzero cells `[row, col, weight index]`, row-major.
    pub entries: Vec<(usize, usize, usize)>,
    /// Property report, present only when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub properties: Option<PropertiesFile>,
}

/// Serializes a partition matrix, optionally with its property report.
pub fn matrix_to_file(pm: &PartitionMatrix, props: Option<&PropertyReport>) -> MatrixFile {
    MatrixFile {
        n: pm.n() as u32,
        weights: pm
            .weights()
            .weights()
            .iter()
            .map(|w| w.to_string())
            .collect(),
        rows: pm.index().rows().iter().map(|s| s.to_string()).collect(),
        cols: pm.index().cols().iter().map(|s| s.to_string()).collect(),
        entries: pm.nonzero_cells(),
        properties: props.map(PropertiesFile::from),
    }
}

/// A reported equal-sum split.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessFile {
    /// The side containing the last weight.
    pub side: String,
    /// The other side.
    pub complement: String,
}

/// Report of the `check` command: both verdicts and their agreement.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    /// Weight count.
    pub n: usize,
    /// Weights as decimal strings.
    pub weights: Vec<String>,
    /// Verdict (from the brute-force oracle).
    pub partitionable: bool,
    /// Witness when partitionable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessFile>,
    /// Determinant of the partition matrix, as a decimal string.
    pub det: String,
    /// Whether the oracle and the determinant criterion agree.
    pub verdicts_agree: bool,
}

/// Report of the `det` command: both determinant routes and the factors.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DetReport {
    /// Weight count.
    pub n: usize,
    /// Weights as decimal strings.
    pub weights: Vec<String>,
    /// Fraction-free elimination determinant.
    pub bareiss: String,
    /// Product of the signed weight sums.
    pub product: String,
    /// All signed-sum factors, in enumeration order.
    pub factors: Vec<String>,
    /// Whether the two routes agree.
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Report emitted when certificate generation finds a partition instead.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NoCertificateReport {
    /// Always true in this report.
    pub partitionable: bool,
    /// The equal-sum split that rules a certificate out.
    pub witness: WitnessFile,
}

/// Report of the `verify` command.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    /// Whether the expansion is exactly 1.
    pub pass: bool,
    /// The nonzero residual on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<PolyFile>,
}

/// Canonical JSON emission: pretty-printed with a trailing newline,
/// byte-stable for equal values.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types always serialize");
    text.push('\n');
    text
}

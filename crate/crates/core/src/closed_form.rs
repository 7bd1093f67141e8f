//! Closed-form spectra, characteristic polynomials, quotient matrices and
//! integrality conditions for the co-centralizer graphs of the five
//! families. Where the source states two inconsistent values (the signless
//! Laplacian third class for PSL), both readings are encoded as explicit
//! variants and the verifier decides which matches reality.

use std::fmt;

use num_bigint::BigInt;


use crate::group::GroupSpec;
use crate::linalg::{char_poly, IntMatrix};
use crate::poly::{isqrt, BigPoly, SurdValue};
use crate::{Error, Result};

/// Which distance-based matrix a spectrum or condition refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    D,
    Dl,
    Dq,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [MatrixKind::D, MatrixKind::Dl, MatrixKind::Dq];

    pub fn name(&self) -> &'static str {
        match self {
            MatrixKind::D => "D",
            MatrixKind::Dl => "DL",
            MatrixKind::Dq => "DQ",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One exact eigenvalue expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EigenvalueExpr {
    Int(i64),
    /// Both conjugates of the pair; contributes 2 * multiplicity roots.
    SurdPair(SurdValue),
    /// Roots of a monic integer polynomial, taken together; contributes
    /// degree * multiplicity roots.
    PolyRoots(BigPoly),
}

impl EigenvalueExpr {
    pub fn root_count(&self) -> usize {
        match self {
            EigenvalueExpr::Int(_) => 1,
            EigenvalueExpr::SurdPair(_) => 2,
            EigenvalueExpr::PolyRoots(p) => p.degree(),
        }
    }
}

impl fmt::Display for EigenvalueExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenvalueExpr::Int(v) => write!(f, "{v}"),
            EigenvalueExpr::SurdPair(s) => write!(f, "{s}"),
            EigenvalueExpr::PolyRoots(p) => write!(f, "roots of {p}"),
        }
    }
}

/// A claimed spectrum: a multiset of exact eigenvalue expressions with
/// multiplicities, tagged with its source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumSpec {
    pub entries: Vec<(EigenvalueExpr, usize)>,
    pub source: String,
}

impl SpectrumSpec {
    pub fn new(source: impl Into<String>, entries: Vec<(EigenvalueExpr, usize)>) -> Self {
        assert!(entries.iter().all(|(_, m)| *m > 0));
        SpectrumSpec {
            entries,
            source: source.into(),
        }
    }

    /// Total number of roots including multiplicities.
    pub fn total_count(&self) -> usize {
        self.entries
            .iter()
            .map(|(e, m)| e.root_count() * m)
            .sum()
    }

    /// All values as floats (surds and polynomial roots expanded), unsorted.
    pub fn values_f64(&self) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(self.total_count());
        for (e, m) in &self.entries {
            let vals: Vec<f64> = match e {
                EigenvalueExpr::Int(v) => vec![*v as f64],
                EigenvalueExpr::SurdPair(s) => {
                    let (a, b) = s.values_f64();
                    vec![a, b]
                }
                EigenvalueExpr::PolyRoots(p) => crate::numeric::real_roots(p)?,
            };
            for _ in 0..*m {
                out.extend_from_slice(&vals);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SpectrumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write!(f, "{{")?;
        for (e, m) in &self.entries {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            if *m == 1 {
                write!(f, "{e}")?;
            } else {
                write!(f, "({e}) × {m}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Turn a claimed spectrum into the monic polynomial with exactly those
/// roots, for exact comparison against a characteristic polynomial.
pub fn spectrum_to_poly(s: &SpectrumSpec) -> Result<BigPoly> {
    let mut acc = BigPoly::one();
    for (e, m) in &s.entries {
        let factor = match e {
            EigenvalueExpr::Int(v) => BigPoly::linear(&BigInt::from(*v)),
            EigenvalueExpr::SurdPair(surd) => surd.monic_quadratic()?,
            EigenvalueExpr::PolyRoots(p) => {
                if !p.is_monic() {
                    return Err(Error::MalformedSpectrum(format!(
                        "PolyRoots factor is not monic: {p}"
                    )));
                }
                p.clone()
            }
        };
        acc = acc.mul(&factor.pow(*m));
    }
    Ok(acc)
}

/// Structural shape of a co-centralizer graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphShape {
    /// Star K_{1,n} (n leaves, n + 1 vertices).
    Star(usize),
    /// Complete tripartite K_{a,b,c}.
    Tripartite(usize, usize, usize),
    /// All proper centralizers share one cardinality: the co-centralizer
    /// graph is edgeless and the closed-form spectra do not apply.
    Degenerate(String),
}

impl GraphShape {
    pub fn part_sizes(&self) -> Option<Vec<usize>> {
        match self {
            GraphShape::Star(n) => Some(vec![1, *n]),
            GraphShape::Tripartite(a, b, c) => Some(vec![*a, *b, *c]),
            GraphShape::Degenerate(_) => None,
        }
    }
}

impl fmt::Display for GraphShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphShape::Star(n) => write!(f, "K_{{1,{n}}}"),
            GraphShape::Tripartite(a, b, c) => write!(f, "K_{{{a},{b},{c}}}"),
            GraphShape::Degenerate(r) => write!(f, "degenerate ({r})"),
        }
    }
}

/// The 3x3 quotient matrix of block-row sums under the equitable partition
/// of a complete tripartite graph; its eigenvalues complete the signless
/// Laplacian spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix3(pub [[i64; 3]; 3]);

impl QuotientMatrix3 {
    pub fn char_poly(&self) -> BigPoly {
        let rows: Vec<Vec<i64>> = self.0.iter().map(|r| r.to_vec()).collect();
        char_poly(&IntMatrix::from_rows(&rows)).expect("3x3 is under the cap")
    }

    pub fn row_sums(&self) -> [i64; 3] {
        [
            self.0[0].iter().sum(),
            self.0[1].iter().sum(),
            self.0[2].iter().sum(),
        ]
    }
}

/// Distance characteristic polynomial of K_{n_1,...,n_k}:
/// (l+2)^{n-k} [ prod_i (l - n_i + 2) - sum_i n_i prod_{j != i} (l - n_j + 2) ].
pub fn multipartite_distance_charpoly(parts: &[usize]) -> Result<BigPoly> {
    if parts.len() < 2 {
        return Err(Error::TooFewParts);
    }
    let n: usize = parts.iter().sum();
    let k = parts.len();
    let lin: Vec<BigPoly> = parts
        .iter()
        .map(|&p| BigPoly::from_i64(&[2 - p as i64, 1]))
        .collect();
    let mut prod = BigPoly::one();
    for l in &lin {
        prod = prod.mul(l);
    }
    let mut sum = BigPoly::new(vec![]);
    for i in 0..k {
        let mut term = BigPoly::from_i64(&[parts[i] as i64]);
        for (j, l) in lin.iter().enumerate() {
            if j != i {
                term = term.mul(l);
            }
        }
        sum = add(&sum, &term.scale(-1));
    }
    let bracket = add(&prod, &sum);
    Ok(BigPoly::from_i64(&[2, 1]).pow(n - k).mul(&bracket))
}

fn add(a: &BigPoly, b: &BigPoly) -> BigPoly {
    let n = a.coeffs().len().max(b.coeffs().len());
    let mut out = vec![BigInt::from(0); n];
    for (i, c) in a.coeffs().iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.coeffs().iter().enumerate() {
        out[i] += c;
    }
    BigPoly::new(out)
}

/// Predicted co-centralizer shape per family. Degenerate parameters are
/// the ones where brute force shows a single cardinality class.
pub fn family_cocentralizer_shape(spec: &GroupSpec) -> Result<GraphShape> {
    spec.validate()?;
    let degenerate =
        || GraphShape::Degenerate("all proper centralizer cardinalities are equal".into());
    Ok(match *spec {
        GroupSpec::Q4n { n } => {
            if n == 2 {
                degenerate()
            } else {
                GraphShape::Star(n as usize)
            }
        }
        GroupSpec::D2m { m } | GroupSpec::M2mn { m, .. } => {
            if m == 4 {
                degenerate()
            } else if m % 2 == 0 {
                GraphShape::Star(m as usize / 2)
            } else {
                GraphShape::Star(m as usize)
            }
        }
        GroupSpec::Qd2n { n } => GraphShape::Star(1 << (n - 2)),
        GroupSpec::Psl2 { k } => {
            if k < 2 {
                return Err(Error::ParamOutOfRange(
                    "tripartite shape requires k >= 2".into(),
                ));
            }
            let q = 1usize << k;
            GraphShape::Tripartite(q + 1, q / 2 * (q + 1), q / 2 * (q - 1))
        }
    })
}

/// Distance spectrum of the star K_{1,n}:
/// -2 with multiplicity n - 1 and the pair (n-1) ± sqrt(n^2 - n + 1).
pub fn star_distance_spectrum(n: usize) -> SpectrumSpec {
    assert!(n >= 2);
    let n = n as i64;
    SpectrumSpec::new(
        "star distance",
        vec![
            (EigenvalueExpr::Int(-2), (n - 1) as usize),
            (
                EigenvalueExpr::SurdPair(SurdValue::new(n - 1, n * n - n + 1, 1)),
                1,
            ),
        ],
    )
}

/// Distance Laplacian spectrum of K_{1,n}: {0, n+1, (2n+1)^(n-1)}.
pub fn star_dl_spectrum(n: usize) -> SpectrumSpec {
    assert!(n >= 2);
    let n = n as i64;
    SpectrumSpec::new(
        "star distance Laplacian",
        vec![
            (EigenvalueExpr::Int(0), 1),
            (EigenvalueExpr::Int(n + 1), 1),
            (EigenvalueExpr::Int(2 * n + 1), (n - 1) as usize),
        ],
    )
}

/// Distance signless Laplacian spectrum of K_{1,n}:
/// {(2n-3)^(n-1), ((5n-3) ± sqrt(9n^2 - 14n + 9)) / 2}.
pub fn star_dq_spectrum(n: usize) -> SpectrumSpec {
    assert!(n >= 2);
    let n = n as i64;
    SpectrumSpec::new(
        "star distance signless Laplacian",
        vec![
            (EigenvalueExpr::Int(2 * n - 3), (n - 1) as usize),
            (
                EigenvalueExpr::SurdPair(SurdValue::new(
                    5 * n - 3,
                    9 * n * n - 14 * n + 9,
                    2,
                )),
                1,
            ),
        ],
    )
}

fn pow2(e: u32) -> i64 {
    1i64 << e
}

/// The printed distance characteristic polynomial for the PSL tripartite
/// graph: (l+2)^{2^k + 2^{2k} - 2} times a cubic with explicit power-of-two
/// coefficients.
pub fn psl_distance_charpoly_paper(k: u32) -> Result<BigPoly> {
    require_psl_k(k)?;
    let cubic = psl_distance_cubic(k);
    let exp = (pow2(k) + pow2(2 * k) - 2) as usize;
    Ok(BigPoly::from_i64(&[2, 1]).pow(exp).mul(&cubic))
}

/// The cubic factor of the PSL distance characteristic polynomial.
pub fn psl_distance_cubic(k: u32) -> BigPoly {
    let c2 = 4 - pow2(2 * k + 1) - pow2(k + 1);
    let c1 = 4 + 3 * pow2(4 * k - 2) + 3 * pow2(3 * k) - 23 * pow2(2 * k - 2) - pow2(k + 3);
    let c0 = -pow2(5 * k) + pow2(4 * k - 1) + 7 * pow2(3 * k) - 5 * pow2(2 * k - 1) - pow2(k + 3);
    BigPoly::from_i64(&[c0, c1, c2, 1])
}

/// Distance spectrum claim for PSL(2,2^k): -2 with multiplicity
/// 2^k + 2^{2k} - 2 plus the three roots of the printed cubic.
pub fn psl_distance_spectrum(k: u32) -> Result<SpectrumSpec> {
    require_psl_k(k)?;
    Ok(SpectrumSpec::new(
        "PSL distance",
        vec![
            (
                EigenvalueExpr::Int(-2),
                (pow2(k) + pow2(2 * k) - 2) as usize,
            ),
            (EigenvalueExpr::PolyRoots(psl_distance_cubic(k)), 1),
        ],
    ))
}

/// Distance Laplacian spectrum of the PSL co-centralizer graph; all
/// entries are integers, so the graph is always distance Laplacian
/// integral.
pub fn psl_dl_spectrum(k: u32) -> Result<SpectrumSpec> {
    require_psl_k(k)?;
    Ok(SpectrumSpec::new(
        "PSL distance Laplacian",
        vec![
            (EigenvalueExpr::Int(0), 1),
            (
                EigenvalueExpr::Int(3 * pow2(2 * k - 1) + 3 * pow2(k - 1) + 1),
                (pow2(k - 1) * (pow2(k) + 1) - 1) as usize,
            ),
            (
                EigenvalueExpr::Int(3 * pow2(2 * k - 1) + pow2(k - 1) + 1),
                (pow2(k - 1) * (pow2(k) - 1) - 1) as usize,
            ),
            (
                EigenvalueExpr::Int(pow2(k + 1) + pow2(2 * k) + 2),
                pow2(k) as usize,
            ),
            (EigenvalueExpr::Int(pow2(2 * k) + pow2(k) + 1), 2),
        ],
    ))
}

/// The two readings of the PSL signless Laplacian third eigenvalue class:
/// the stated closed form prints "+3" where the underlying quotient
/// computation gives "-3".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DqVariant {
    StatementText,
    ProofBlocks,
}

impl DqVariant {
    pub const BOTH: [DqVariant; 2] = [DqVariant::ProofBlocks, DqVariant::StatementText];

    pub fn name(&self) -> &'static str {
        match self {
            DqVariant::StatementText => "statement-text",
            DqVariant::ProofBlocks => "proof-blocks",
        }
    }
}

/// The quotient matrix whose three eigenvalues complete the PSL signless
/// Laplacian spectrum.
pub fn psl_dq_quotient(k: u32) -> Result<QuotientMatrix3> {
    require_psl_k(k)?;
    let a = pow2(k) + 1;
    let b = pow2(k - 1) * (pow2(k) + 1);
    let c = pow2(k - 1) * (pow2(k) - 1);
    let e1 = pow2(k + 1) + pow2(2 * k) - 2;
    let e2 = 3 * pow2(2 * k - 1) + 3 * pow2(k - 1) - 3;
    let e3 = 3 * pow2(2 * k - 1) + pow2(k - 1) - 3;
    Ok(QuotientMatrix3([
        [e1 + 2 * a, b, c],
        [a, e2 + pow2(k) * (pow2(k) + 1), c],
        [a, b, e3 + pow2(k) * (pow2(k) - 1)],
    ]))
}

/// Distance signless Laplacian spectrum claim for PSL(2,2^k), under one of
/// the two readings of the third eigenvalue class.
pub fn psl_dq_spectrum(k: u32, variant: DqVariant) -> Result<SpectrumSpec> {
    require_psl_k(k)?;
    let third = match variant {
        DqVariant::StatementText => 3 * pow2(2 * k - 1) + pow2(k - 1) + 3,
        DqVariant::ProofBlocks => 3 * pow2(2 * k - 1) + pow2(k - 1) - 3,
    };
    Ok(SpectrumSpec::new(
        format!("PSL distance signless Laplacian ({})", variant.name()),
        vec![
            (
                EigenvalueExpr::Int(pow2(k + 1) + pow2(2 * k) - 2),
                pow2(k) as usize,
            ),
            (
                EigenvalueExpr::Int(3 * pow2(2 * k - 1) + 3 * pow2(k - 1) - 3),
                (pow2(k - 1) * (pow2(k) + 1) - 1) as usize,
            ),
            (
                EigenvalueExpr::Int(third),
                (pow2(k - 1) * (pow2(k) - 1) - 1) as usize,
            ),
            (
                EigenvalueExpr::PolyRoots(psl_dq_quotient(k)?.char_poly()),
                1,
            ),
        ],
    ))
}

fn require_psl_k(k: u32) -> Result<()> {
    if k >= 2 {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange(format!(
            "PSL closed forms require k >= 2, got {k}"
        )))
    }
}

/// Exact perfect-square test on a nonnegative integer.
pub fn is_perfect_square(n: u128) -> bool {
    let r = isqrt(n);
    r * r == n
}

/// Outcome of evaluating a family's printed integrality condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    /// The condition as printed, instantiated at the parameters.
    pub condition: String,
    /// Whether the printed condition holds.
    pub holds: bool,
}

/// Evaluate the printed integrality condition for the family and matrix
/// kind. Does not run the pipeline; the verifier cross-checks this against
/// the exact spectrum.
pub fn integrality_condition(spec: &GroupSpec, kind: MatrixKind) -> Result<ConditionReport> {
    let shape = family_cocentralizer_shape(spec)?;
    let star = match shape {
        GraphShape::Star(n) => Some(n as u128),
        GraphShape::Tripartite(..) => None,
        GraphShape::Degenerate(reason) => return Err(Error::Degenerate(reason)),
    };
    Ok(match (star, kind) {
        (Some(s), MatrixKind::D) => {
            // distance integral iff s^2 - s + 1 is a perfect square (the
            // same test as the even-case "sqrt(m^2-2m+4) is even" form)
            let v = s * s - s + 1;
            ConditionReport {
                condition: format!("{s}^2 - {s} + 1 = {v} is a perfect square"),
                holds: is_perfect_square(v),
            }
        }
        (Some(_), MatrixKind::Dl) => ConditionReport {
            condition: "star distance Laplacian spectra are always integral".into(),
            holds: true,
        },
        (Some(s), MatrixKind::Dq) => {
            // (5s-3) ± sqrt(9s^2 - 14s + 9) must be even
            let disc = 9 * s * s - 14 * s + 9;
            let root = isqrt(disc);
            let holds = root * root == disc && (5 * s - 3 + root) % 2 == 0;
            ConditionReport {
                condition: format!("(5·{s} - 3) ± √{disc} is even"),
                holds,
            }
        }
        (None, MatrixKind::D) => {
            let k = match spec {
                GroupSpec::Psl2 { k } => *k,
                _ => unreachable!("only PSL is tripartite"),
            };
            let cubic = psl_distance_cubic(k);
            let nroots = integer_root_count(&cubic);
            ConditionReport {
                condition: format!("distance cubic {cubic} has three integer roots"),
                holds: nroots == 3,
            }
        }
        (None, MatrixKind::Dl) => ConditionReport {
            condition: "PSL distance Laplacian spectrum is integral for all k".into(),
            holds: true,
        },
        (None, MatrixKind::Dq) => {
            let k = match spec {
                GroupSpec::Psl2 { k } => *k,
                _ => unreachable!("only PSL is tripartite"),
            };
            let cubic = psl_dq_quotient(k)?.char_poly();
            let nroots = integer_root_count(&cubic);
            ConditionReport {
                condition: format!("quotient cubic {cubic} has three integer roots"),
                holds: nroots == 3,
            }
        }
    })
}

/// Number of integer roots (with multiplicity) of a monic integer
/// polynomial. Rational roots of monic integer polynomials are integers,
/// so this decides rationality of the full root set for cubics.
pub fn integer_root_count(p: &BigPoly) -> usize {
    let mut count = 0;
    let mut cur = p.clone();
    for r in integer_root_candidates(p) {
        let (deflated, mult) = crate::poly::poly_div_linear(&cur, r);
        count += mult;
        cur = deflated;
    }
    count
}

/// Candidate integer roots located numerically and confirmed exactly.
fn integer_root_candidates(p: &BigPoly) -> Vec<i64> {
    use num_traits::ToPrimitive;
    let mut out = Vec::new();
    if let Ok(roots) = crate::numeric::real_roots(p) {
        for r in roots {
            for cand in [r.floor() as i64 - 1, r.floor() as i64, r.ceil() as i64, r.ceil() as i64 + 1] {
                if !out.contains(&cand)
                    && p.evaluate(&BigInt::from(cand)) == BigInt::from(0)
                {
                    out.push(cand);
                }
            }
        }
    }
    // constant term 0 means 0 is a root regardless of the numeric path
    if p.coeff(0).to_i64() == Some(0) && !out.contains(&0) {
        out.push(0);
    }
    out
}

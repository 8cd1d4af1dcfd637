//! Domain model of the two-bundle fiber joins: the catalogue of base
//! manifolds, bundle degree matrices with their admissibility gates, the
//! formal degree-two class data consumed by the solvers, quasi-regular
//! quotients, and cohomology of the total spaces.
//!
//! Everything here is a gate or a catalogue lookup. The validation path
//! returns errors instead of panicking because these types face user
//! input; the mathematical layers above assert.

mod cohomology;
mod quotient;

pub use cohomology::{cohomology, product_cohomology, CohomologyReport, GradedGroup};
pub use quotient::{
    quasiregular_quotient, InverseQuotientFamily, LineIntersection, LogPairQuotient,
};

use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exact::rational::{
    format_rational, parse_rational, rat_i, serde_rational, serde_rational_vec, Rational,
};
use crate::params::JoinParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeParity {
    Even,
    Odd,
}

/// Catalogued bases. The first four carry free degree matrices over their
/// product classes; the last two are fixtures whose bundle classes are
/// fixed by the catalogue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BaseManifold {
    /// One curve of genus `g >= 0`; the join is five-dimensional.
    Surface { genus: u32 },
    /// Product of two curves of genus `g1, g2 >= 1`.
    SurfaceProduct { g1: u32, g2: u32 },
    /// Product of two rational curves.
    Cp1xCp1,
    /// Projectivization of a polystable rank-two bundle over a curve of
    /// genus `g >= 1`. The first factor is the fiber direction. The parity
    /// of the bundle degree decides which degree matrices are integral.
    PolystableRuled { genus: u32, degree_parity: DegreeParity },
    /// Product of two copies of a genus `g >= 2` curve with the bundle
    /// classes shifted by the diagonal divisor class.
    DiagonalTwist { genus: u32 },
    /// Stage-four Bott manifold fibered over a product of two rational
    /// curves; the bundle classes mix the fiber divisor class.
    BottTower,
}

impl BaseManifold {
    /// Names of the catalogued degree-two classes, in the order used by
    /// every coefficient vector in this module.
    pub fn basis(&self) -> Vec<&'static str> {
        match self {
            BaseManifold::Surface { .. } => vec!["sigma"],
            BaseManifold::SurfaceProduct { .. } | BaseManifold::Cp1xCp1 => {
                vec!["omega_1", "omega_2"]
            }
            BaseManifold::PolystableRuled { .. } => vec!["fiber", "base"],
            BaseManifold::DiagonalTwist { .. } => vec!["gamma_1", "gamma_2", "delta"],
            BaseManifold::BottTower => vec!["fs_1", "fs_2", "chi"],
        }
    }

    /// Number of local product factors carrying a free degree column.
    /// Fixtures return zero: their classes are not column data.
    pub fn free_columns(&self) -> usize {
        match self {
            BaseManifold::Surface { .. } => 1,
            BaseManifold::SurfaceProduct { .. }
            | BaseManifold::Cp1xCp1
            | BaseManifold::PolystableRuled { .. } => 2,
            BaseManifold::DiagonalTwist { .. } | BaseManifold::BottTower => 0,
        }
    }

    /// Genus of each product factor, indexed like the degree columns. The
    /// fiber direction of the ruled base counts as genus zero, which feeds
    /// the right curvature normalization downstream.
    pub fn factor_genus(&self) -> Vec<u32> {
        match self {
            BaseManifold::Surface { genus } => vec![*genus],
            BaseManifold::SurfaceProduct { g1, g2 } => vec![*g1, *g2],
            BaseManifold::Cp1xCp1 => vec![0, 0],
            BaseManifold::PolystableRuled { genus, .. } => vec![0, *genus],
            BaseManifold::DiagonalTwist { .. } | BaseManifold::BottTower => vec![],
        }
    }

    /// Fixture bundle rows over `basis()`, when the base is a fixture.
    pub fn canonical_rows(&self) -> Option<[Vec<Rational>; 2]> {
        match self {
            BaseManifold::DiagonalTwist { genus } => {
                let g = *genus as i64;
                Some([
                    vec![rat_i(g + 1), rat_i(g + 1), rat_i(1)],
                    vec![rat_i(g), rat_i(g), rat_i(1)],
                ])
            }
            BaseManifold::BottTower => Some([
                vec![rat_i(6), rat_i(6), rat_i(2)],
                vec![rat_i(2), rat_i(2), rat_i(1)],
            ]),
            _ => None,
        }
    }

    /// Cup products of the basis classes on complex surfaces; the diagonal
    /// class squares to `2 - 2g`. Bases of other dimensions carry none.
    pub fn intersection_pairing(&self) -> Option<Vec<Vec<i64>>> {
        match self {
            BaseManifold::SurfaceProduct { .. } | BaseManifold::Cp1xCp1 => {
                Some(vec![vec![0, 1], vec![1, 0]])
            }
            BaseManifold::PolystableRuled { .. } => Some(vec![vec![0, 1], vec![1, 0]]),
            BaseManifold::DiagonalTwist { genus } => {
                let g = *genus as i64;
                Some(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 2 - 2 * g]])
            }
            _ => None,
        }
    }

    /// Tower matrix of the Bott fixture; catalogue metadata only.
    pub fn bott_matrix(&self) -> Option<[[i64; 4]; 4]> {
        match self {
            BaseManifold::BottTower => Some([
                [1, 0, 0, 0],
                [0, 1, 0, 0],
                [1, -1, 1, 0],
                [5, 3, 2, 1],
            ]),
            _ => None,
        }
    }

    fn check(&self) -> Result<(), JoinError> {
        match self {
            BaseManifold::SurfaceProduct { g1, g2 } if *g1 < 1 || *g2 < 1 => Err(
                JoinError::Genus("both product genera must be at least 1".into()),
            ),
            BaseManifold::PolystableRuled { genus: 0, .. } => Err(JoinError::Genus(
                "the ruled base needs genus at least 1".into(),
            )),
            BaseManifold::DiagonalTwist { genus } if *genus < 2 => Err(JoinError::Genus(
                "the diagonal twist fixture needs genus at least 2".into(),
            )),
            _ => Ok(()),
        }
    }
}

/// Bundle degrees over the basis classes: `rows[j]` is the coefficient
/// vector of bundle `j + 1`. Serialized as rows of exact rational strings.
#[derive(Clone, Debug, PartialEq)]
pub struct KMatrix {
    pub rows: [Vec<Rational>; 2],
}

impl KMatrix {
    pub fn of(rows: [Vec<Rational>; 2]) -> Self {
        KMatrix { rows }
    }

    pub fn ints(row1: &[i64], row2: &[i64]) -> Self {
        KMatrix {
            rows: [
                row1.iter().map(|&e| rat_i(e)).collect(),
                row2.iter().map(|&e| rat_i(e)).collect(),
            ],
        }
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    /// Both bundle degrees over factor `i`.
    pub fn column(&self, i: usize) -> (Rational, Rational) {
        (self.rows[0][i].clone(), self.rows[1][i].clone())
    }
}

impl Serialize for KMatrix {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect();
        rows.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for KMatrix {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(de)?;
        if rows.len() != 2 {
            return Err(D::Error::custom("exactly two bundle rows required"));
        }
        if rows[0].len() != rows[1].len() {
            return Err(D::Error::custom("bundle rows must have equal width"));
        }
        let mut parsed: [Vec<Rational>; 2] = [Vec::new(), Vec::new()];
        for (j, row) in rows.iter().enumerate() {
            for (i, entry) in row.iter().enumerate() {
                let q = parse_rational(entry).map_err(|e| {
                    D::Error::custom(format!("row {} entry {}: {e}", j + 1, i + 1))
                })?;
                parsed[j].push(q);
            }
        }
        Ok(KMatrix { rows: parsed })
    }
}

#[derive(Debug, Error)]
pub enum JoinError {
    #[error("spec document: {0}")]
    Schema(String),
    #[error("bundle degree {0} over factor {1} must be positive")]
    NonPositive(String, usize),
    #[error("equal bundle degrees over factor {0} collapse the join to a product")]
    EqualColumn(usize),
    #[error("bundle {bundle} violates the degree parity rule: first entry even with integer second, or odd with half-integer second; got [{row}]")]
    Parity { bundle: usize, row: String },
    #[error("degree matrix needs {expected} columns over this base, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("degree {0} must be an integer over this base")]
    NonInteger(String),
    #[error("this base fixes its bundle classes; omit the degree matrix or repeat the catalogued rows")]
    FixtureDegrees,
    #[error("a degree matrix is required over this base")]
    MissingDegrees,
    #[error("no catalogued data: {0}")]
    Uncatalogued(&'static str),
    #[error("weights must be positive and coprime, got ({0}, {1})")]
    BadWeights(i64, i64),
    #[error("genus out of range: {0}")]
    Genus(String),
}

/// A fiber join over a catalogued base. Construct with `new` or parse from
/// a JSON document; both run the full admissibility gate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberJoinSpec {
    pub base: BaseManifold,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<KMatrix>,
}

/// Degree-two class with coefficients over the catalogued basis plus the
/// fiberwise divisor-sum class, in units of the full circle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormalClass {
    pub basis: Vec<String>,
    #[serde(with = "serde_rational_vec")]
    pub coeffs: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub xi: Rational,
}

/// Per-factor data of the regular quotient over a product base: the
/// degree difference `n`, the asymmetry `x = n / (column sum)`, and the
/// normalized factor curvature `s = 2(1 - g) / n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorData {
    #[serde(with = "serde_rational")]
    pub n: Rational,
    #[serde(with = "serde_rational")]
    pub x: Rational,
    #[serde(with = "serde_rational")]
    pub s: Rational,
}

/// Output of the validation gate: the regular quotient's factor data (for
/// product bases), its transverse class, and the bundle class difference.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdmissibleData {
    pub factors: Vec<FactorData>,
    pub class: FormalClass,
    #[serde(with = "serde_rational_vec")]
    pub difference: Vec<Rational>,
}

impl AdmissibleData {
    /// Solver parameters, when the base is a product of curve factors.
    /// Fixtures carry class data only.
    pub fn join_params(&self) -> Option<JoinParams> {
        match self.factors.len() {
            1 => Some(JoinParams::dim5(self.factors[0].x.clone(), self.factors[0].s.clone())),
            2 => Some(JoinParams::dim7(
                self.factors[0].x.clone(),
                self.factors[0].s.clone(),
                self.factors[1].x.clone(),
                self.factors[1].s.clone(),
            )),
            _ => None,
        }
    }
}

fn is_integer(q: &Rational) -> bool {
    q.is_integer()
}

fn is_half_odd_integer(q: &Rational) -> bool {
    // q - 1/2 integral and q not integral
    !q.is_integer() && (q * rat_i(2)).is_integer()
}

impl FiberJoinSpec {
    pub fn new(base: BaseManifold, k: Option<KMatrix>) -> Result<Self, JoinError> {
        let spec = FiberJoinSpec { base, k };
        spec.validate()?;
        Ok(spec)
    }

    /// Strict parse of a JSON spec document; the admissibility gate runs
    /// after the schema check.
    pub fn from_json(text: &str) -> Result<Self, JoinError> {
        let spec: FiberJoinSpec =
            serde_json::from_str(text).map_err(|e| JoinError::Schema(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    /// The effective bundle rows: the given degree matrix over product
    /// bases, the catalogued rows over fixtures.
    pub fn rows(&self) -> [Vec<Rational>; 2] {
        match self.base.canonical_rows() {
            Some(rows) => rows,
            None => self.k.as_ref().expect("validated spec has rows").rows.clone(),
        }
    }

    /// Full admissibility gate. Checks the base catalogue ranges, the
    /// degree matrix shape and signs, the per-factor degree split, and the
    /// parity rule of the ruled base, then assembles the regular quotient
    /// data.
    pub fn validate(&self) -> Result<AdmissibleData, JoinError> {
        self.base.check()?;

        if self.base.canonical_rows().is_some() {
            if let Some(k) = &self.k {
                if k.rows != self.base.canonical_rows().unwrap() {
                    return Err(JoinError::FixtureDegrees);
                }
            }
            return Ok(self.fixture_data());
        }

        let k = self.k.as_ref().ok_or(JoinError::MissingDegrees)?;
        let width = self.base.free_columns();
        if k.width() != width {
            return Err(JoinError::Shape { expected: width, got: k.width() });
        }
        for row in &k.rows {
            for (i, e) in row.iter().enumerate() {
                if !e.is_positive() {
                    return Err(JoinError::NonPositive(format_rational(e), i + 1));
                }
            }
        }
        for i in 0..width {
            let (a, b) = k.column(i);
            if a == b {
                return Err(JoinError::EqualColumn(i + 1));
            }
        }
        self.check_integrality(k)?;

        let genus = self.base.factor_genus();
        let mut factors = Vec::with_capacity(width);
        for i in 0..width {
            let (a, b) = k.column(i);
            let n = a.clone() - b.clone();
            let d = a + b;
            let x = n.clone() / d;
            let s = rat_i(2 * (1 - genus[i] as i64)) / n.clone();
            debug_assert!((x.clone() * n.clone()).is_positive());
            factors.push(FactorData { n, x, s });
        }
        Ok(AdmissibleData {
            factors,
            class: self.class_sum(&k.rows),
            difference: Self::row_difference(&k.rows),
        })
    }

    fn check_integrality(&self, k: &KMatrix) -> Result<(), JoinError> {
        let half_integers_allowed = matches!(
            self.base,
            BaseManifold::PolystableRuled { degree_parity: DegreeParity::Odd, .. }
        );
        if !half_integers_allowed {
            for row in &k.rows {
                for e in row {
                    if !is_integer(e) {
                        return Err(JoinError::NonInteger(format_rational(e)));
                    }
                }
            }
            return Ok(());
        }
        // Odd bundle degree: per bundle, the fiber-direction degree is an
        // even integer with an integer curve degree, or an odd integer
        // with a half-odd curve degree.
        for (j, row) in k.rows.iter().enumerate() {
            let fiber = &row[0];
            let curve = &row[1];
            let ok = if is_integer(fiber) {
                let even = (fiber / rat_i(2)).is_integer();
                if even {
                    is_integer(curve)
                } else {
                    is_half_odd_integer(curve)
                }
            } else {
                false
            };
            if !ok {
                return Err(JoinError::Parity {
                    bundle: j + 1,
                    row: format!("{}, {}", format_rational(fiber), format_rational(curve)),
                });
            }
        }
        Ok(())
    }

    fn fixture_data(&self) -> AdmissibleData {
        let rows = self.base.canonical_rows().unwrap();
        AdmissibleData {
            factors: vec![],
            class: self.class_sum(&rows),
            difference: Self::row_difference(&rows),
        }
    }

    fn class_sum(&self, rows: &[Vec<Rational>; 2]) -> FormalClass {
        FormalClass {
            basis: self.base.basis().iter().map(|s| s.to_string()).collect(),
            coeffs: rows[0]
                .iter()
                .zip(&rows[1])
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
            xi: rat_i(1),
        }
    }

    fn row_difference(rows: &[Vec<Rational>; 2]) -> Vec<Rational> {
        rows[0].iter().zip(&rows[1]).map(|(a, b)| a.clone() - b.clone()).collect()
    }
}

/// Verdict of the strong admissibility gate: either the regular transverse
/// class is a positive rescale of a template class on the catalogued
/// lattice, or the decomposition shows the obstruction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum StrongAdmissibility {
    /// The class decomposes over the template with the listed inverse
    /// asymmetries, one per factor, each larger than one.
    StronglyAdmissible {
        #[serde(with = "serde_rational_vec")]
        inverse_asymmetries: Vec<Rational>,
    },
    /// Admissible join whose regular class leaves the template span.
    AdmissibleNotStrong { obstruction: Obstruction },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Obstruction {
    /// The class has a nonzero coefficient on a basis class outside the
    /// template span.
    OffTemplateClass {
        class_name: String,
        #[serde(with = "serde_rational")]
        coefficient: Rational,
    },
    /// The class sum is not proportional to the catalogued polarization.
    NotProportional {
        #[serde(with = "serde_rational_vec")]
        class_sum: Vec<Rational>,
        #[serde(with = "serde_rational_vec")]
        polarization: Vec<Rational>,
    },
}

/// Decide whether the regular transverse class `2pi([w1]+[w2]) + Xi` is a
/// positive rescale of an admissible template class.
///
/// Product bases always are: the template spans the product classes and
/// the inverse asymmetry over factor `i` is the column sum, at least two.
/// The two fixtures are admissible joins that fail the test, each with its
/// own catalogued obstruction shape.
pub fn strong_admissibility_check(spec: &FiberJoinSpec) -> Result<StrongAdmissibility, JoinError> {
    let data = spec.validate()?;
    match &spec.base {
        BaseManifold::Surface { .. }
        | BaseManifold::SurfaceProduct { .. }
        | BaseManifold::Cp1xCp1
        | BaseManifold::PolystableRuled { .. } => Ok(StrongAdmissibility::StronglyAdmissible {
            inverse_asymmetries: data.class.coeffs.clone(),
        }),
        BaseManifold::DiagonalTwist { .. } => {
            // Template classes span the two pullback classes only; the
            // diagonal coefficient is the obstruction.
            let delta = data.class.coeffs[2].clone();
            assert!(!delta.is_zero());
            Ok(StrongAdmissibility::AdmissibleNotStrong {
                obstruction: Obstruction::OffTemplateClass {
                    class_name: "delta".into(),
                    coefficient: delta,
                },
            })
        }
        BaseManifold::BottTower => {
            // Template classes are rescales of the catalogued polarization,
            // which equals the bundle class difference here.
            let polarization = data.difference.clone();
            let sum = data.class.coeffs.clone();
            assert!(!proportional(&sum, &polarization));
            Ok(StrongAdmissibility::AdmissibleNotStrong {
                obstruction: Obstruction::NotProportional { class_sum: sum, polarization },
            })
        }
    }
}

fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    assert_eq!(a.len(), b.len());
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if a[i].clone() * b[j].clone() != a[j].clone() * b[i].clone() {
                return false;
            }
        }
    }
    true
}

/// Data of a colinear join: both bundle classes are multiples `b_j` of one
/// primitive integral class, and the join collapses to a weighted
/// three-sphere join with weights `w_tilde = (b1, b2) / l`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ColinearData {
    #[serde(with = "serde_rational")]
    pub b1: Rational,
    #[serde(with = "serde_rational")]
    pub b2: Rational,
    /// Primitive integral class underneath both bundles.
    #[serde(with = "serde_rational_vec")]
    pub omega_n: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub l: Rational,
    pub w_tilde: (i64, i64),
}

impl ColinearData {
    /// Ray parameter of the quotient of the weight-`(w1, w2)` field seen
    /// through the collapsed single-class picture.
    pub fn quotient_ray(&self, w1: i64, w2: i64) -> Rational {
        let num = self.b1.clone() * rat_i(w2) - self.b2.clone() * rat_i(w1);
        let den = self.b1.clone() * rat_i(w2) + self.b2.clone() * rat_i(w1);
        num / den
    }
}

/// Detect proportional bundle rows. Surface joins are always colinear;
/// two-column bases are colinear exactly on vanishing determinant; the
/// fixtures never are.
pub fn colinearity_check(spec: &FiberJoinSpec) -> Result<Option<ColinearData>, JoinError> {
    spec.validate()?;
    let rows = spec.rows();
    if !proportional(&rows[0], &rows[1]) {
        return Ok(None);
    }
    let omega_n = primitive_direction(&rows[0]);
    let pivot = omega_n
        .iter()
        .position(|e| !e.is_zero())
        .expect("bundle classes are nonzero");
    let b1 = rows[0][pivot].clone() / omega_n[pivot].clone();
    let b2 = rows[1][pivot].clone() / omega_n[pivot].clone();
    debug_assert!(rows[0].iter().zip(&omega_n).all(|(e, v)| *e == b1.clone() * v.clone()));
    debug_assert!(rows[1].iter().zip(&omega_n).all(|(e, v)| *e == b2.clone() * v.clone()));
    let l = rational_gcd(&b1, &b2);
    let w1 = (b1.clone() / l.clone()).to_integer();
    let w2 = (b2.clone() / l.clone()).to_integer();
    use num_traits::ToPrimitive;
    Ok(Some(ColinearData {
        b1,
        b2,
        omega_n,
        l,
        w_tilde: (
            w1.to_i64().expect("weight fits in 64 bits"),
            w2.to_i64().expect("weight fits in 64 bits"),
        ),
    }))
}

/// Positive primitive integral vector on the ray of `v`.
fn primitive_direction(v: &[Rational]) -> Vec<Rational> {
    let mut scale: Option<Rational> = None;
    for e in v {
        if e.is_zero() {
            continue;
        }
        scale = Some(match scale {
            None => e.clone(),
            Some(s) => rational_gcd(&s, e),
        });
    }
    let s = scale.expect("nonzero vector");
    v.iter().map(|e| e / s.clone()).collect()
}

/// `gcd(p1/q1, p2/q2) = gcd(p1, p2) / lcm(q1, q2)`, positive.
fn rational_gcd(a: &Rational, b: &Rational) -> Rational {
    use num_integer::Integer;
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    Rational::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn surface(genus: u32, k1: i64, k2: i64) -> FiberJoinSpec {
        FiberJoinSpec::new(
            BaseManifold::Surface { genus },
            Some(KMatrix::ints(&[k1], &[k2])),
        )
        .unwrap()
    }

    fn two_curves(base: BaseManifold, k: [[i64; 2]; 2]) -> FiberJoinSpec {
        FiberJoinSpec::new(base, Some(KMatrix::ints(&k[0], &k[1]))).unwrap()
    }

    #[test]
    fn surface_degrees_validate_to_the_catalogued_data() {
        let data = surface(2, 3, 1).validate().unwrap();
        assert_eq!(data.factors.len(), 1);
        assert_eq!(data.factors[0].n, rat_i(2));
        assert_eq!(data.factors[0].x, rat(1, 2));
        assert_eq!(data.factors[0].s, rat_i(-1));
        assert_eq!(data.class.coeffs, vec![rat_i(4)]);
        assert_eq!(data.class.xi, rat_i(1));
        assert_eq!(data.difference, vec![rat_i(2)]);
        let params = data.join_params().unwrap();
        assert_eq!(params.factors[0].x, rat(1, 2));
    }

    #[test]
    fn degree_gates_reject_the_documented_shapes() {
        let cp = BaseManifold::Cp1xCp1;
        let equal_column =
            FiberJoinSpec::new(cp.clone(), Some(KMatrix::ints(&[2, 3], &[1, 3])));
        assert!(matches!(equal_column, Err(JoinError::EqualColumn(2))));

        let nonpositive = FiberJoinSpec::new(cp.clone(), Some(KMatrix::ints(&[2, 0], &[1, 3])));
        assert!(matches!(nonpositive, Err(JoinError::NonPositive(_, 2))));

        let fractional = FiberJoinSpec::new(
            cp.clone(),
            Some(KMatrix::of([vec![rat(7, 2), rat_i(3)], vec![rat_i(1), rat_i(2)]])),
        );
        assert!(matches!(fractional, Err(JoinError::NonInteger(_))));

        let missing = FiberJoinSpec::new(cp.clone(), None);
        assert!(matches!(missing, Err(JoinError::MissingDegrees)));

        let narrow = FiberJoinSpec::new(cp, Some(KMatrix::ints(&[2], &[1])));
        assert!(matches!(narrow, Err(JoinError::Shape { expected: 2, got: 1 })));

        let low_genus = FiberJoinSpec::new(
            BaseManifold::DiagonalTwist { genus: 1 },
            None,
        );
        assert!(matches!(low_genus, Err(JoinError::Genus(_))));
    }

    #[test]
    fn parity_rule_admits_both_branches_and_rejects_mixtures() {
        let odd = BaseManifold::PolystableRuled { genus: 1, degree_parity: DegreeParity::Odd };
        let even_branch =
            FiberJoinSpec::new(odd.clone(), Some(KMatrix::ints(&[10, 100], &[2, 1])));
        assert!(even_branch.is_ok());

        let odd_branch = FiberJoinSpec::new(
            odd.clone(),
            Some(KMatrix::of([vec![rat_i(3), rat(7, 2)], vec![rat_i(1), rat(3, 2)]])),
        );
        assert!(odd_branch.is_ok());

        let mixed = FiberJoinSpec::new(odd.clone(), Some(KMatrix::ints(&[3, 7], &[1, 2])));
        assert!(matches!(mixed, Err(JoinError::Parity { bundle: 1, .. })));

        let even = BaseManifold::PolystableRuled { genus: 1, degree_parity: DegreeParity::Even };
        let fractional = FiberJoinSpec::new(
            even,
            Some(KMatrix::of([vec![rat_i(3), rat(7, 2)], vec![rat_i(1), rat(3, 2)]])),
        );
        assert!(matches!(fractional, Err(JoinError::NonInteger(_))));
    }

    #[test]
    fn fixtures_fix_their_bundle_classes() {
        let twist = FiberJoinSpec::new(BaseManifold::DiagonalTwist { genus: 2 }, None).unwrap();
        let data = twist.validate().unwrap();
        assert!(data.factors.is_empty());
        assert_eq!(data.class.coeffs, vec![rat_i(5), rat_i(5), rat_i(2)]);
        assert_eq!(data.difference, vec![rat_i(1), rat_i(1), rat_i(0)]);
        assert!(data.join_params().is_none());

        let canonical = FiberJoinSpec::new(
            BaseManifold::DiagonalTwist { genus: 2 },
            Some(KMatrix::ints(&[3, 3, 1], &[2, 2, 1])),
        );
        assert!(canonical.is_ok());
        let forged = FiberJoinSpec::new(
            BaseManifold::DiagonalTwist { genus: 2 },
            Some(KMatrix::ints(&[4, 4, 1], &[2, 2, 1])),
        );
        assert!(matches!(forged, Err(JoinError::FixtureDegrees)));

        let bott = FiberJoinSpec::new(BaseManifold::BottTower, None).unwrap();
        let data = bott.validate().unwrap();
        assert_eq!(data.class.coeffs, vec![rat_i(8), rat_i(8), rat_i(3)]);
        assert_eq!(data.difference, vec![rat_i(4), rat_i(4), rat_i(1)]);
        assert!(bott.base.bott_matrix().is_some());
    }

    #[test]
    fn products_are_strongly_admissible_with_the_column_sums_as_witness() {
        let cp = two_curves(BaseManifold::Cp1xCp1, [[2, 3], [1, 2]]);
        match strong_admissibility_check(&cp).unwrap() {
            StrongAdmissibility::StronglyAdmissible { inverse_asymmetries } => {
                assert_eq!(inverse_asymmetries, vec![rat_i(3), rat_i(5)]);
                assert!(inverse_asymmetries.iter().all(|d| *d > rat_i(1)));
            }
            other => panic!("expected the strong verdict, got {other:?}"),
        }
        assert!(matches!(
            strong_admissibility_check(&surface(2, 3, 1)).unwrap(),
            StrongAdmissibility::StronglyAdmissible { .. }
        ));
    }

    #[test]
    fn fixture_obstructions_carry_the_decomposition_evidence() {
        let twist = FiberJoinSpec::new(BaseManifold::DiagonalTwist { genus: 3 }, None).unwrap();
        match strong_admissibility_check(&twist).unwrap() {
            StrongAdmissibility::AdmissibleNotStrong {
                obstruction: Obstruction::OffTemplateClass { class_name, coefficient },
            } => {
                assert_eq!(class_name, "delta");
                assert_eq!(coefficient, rat_i(2));
            }
            other => panic!("expected the diagonal obstruction, got {other:?}"),
        }

        let bott = FiberJoinSpec::new(BaseManifold::BottTower, None).unwrap();
        match strong_admissibility_check(&bott).unwrap() {
            StrongAdmissibility::AdmissibleNotStrong {
                obstruction: Obstruction::NotProportional { class_sum, polarization },
            } => {
                assert_eq!(class_sum, vec![rat_i(8), rat_i(8), rat_i(3)]);
                assert_eq!(polarization, vec![rat_i(4), rat_i(4), rat_i(1)]);
            }
            other => panic!("expected the proportionality obstruction, got {other:?}"),
        }
    }

    #[test]
    fn colinearity_detects_proportional_rows() {
        let s = surface(2, 3, 1);
        let data = colinearity_check(&s).unwrap().unwrap();
        assert_eq!((data.b1.clone(), data.b2.clone()), (rat_i(3), rat_i(1)));
        assert_eq!(data.omega_n, vec![rat_i(1)]);
        assert_eq!(data.w_tilde, (3, 1));

        let cp = two_curves(BaseManifold::Cp1xCp1, [[2, 4], [1, 2]]);
        let data = colinearity_check(&cp).unwrap().unwrap();
        assert_eq!(data.omega_n, vec![rat_i(1), rat_i(2)]);
        assert_eq!((data.b1.clone(), data.b2), (rat_i(2), rat_i(1)));
        assert_eq!(data.l, rat_i(1));
        assert_eq!(data.w_tilde, (2, 1));

        let skew = two_curves(BaseManifold::Cp1xCp1, [[2, 3], [1, 2]]);
        assert!(colinearity_check(&skew).unwrap().is_none());
        let twist = FiberJoinSpec::new(BaseManifold::DiagonalTwist { genus: 2 }, None).unwrap();
        assert!(colinearity_check(&twist).unwrap().is_none());
    }

    #[test]
    fn half_integer_multiples_still_collapse_to_integer_weights() {
        let odd = BaseManifold::PolystableRuled { genus: 1, degree_parity: DegreeParity::Odd };
        let spec = FiberJoinSpec::new(
            odd,
            Some(KMatrix::of([vec![rat_i(2), rat_i(1)], vec![rat_i(3), rat(3, 2)]])),
        )
        .unwrap();
        let data = colinearity_check(&spec).unwrap().unwrap();
        assert_eq!(data.omega_n, vec![rat_i(2), rat_i(1)]);
        assert_eq!((data.b1.clone(), data.b2.clone()), (rat_i(1), rat(3, 2)));
        assert_eq!(data.l, rat(1, 2));
        assert_eq!(data.w_tilde, (2, 3));
        assert_eq!(data.quotient_ray(1, 1), rat(-1, 5));
    }

    #[test]
    fn spec_documents_round_trip_and_unknown_fields_fail() {
        let text = r#"{"base": {"kind": "surface_product", "g1": 1, "g2": 2},
                       "k": [["2", "3"], ["1", "2"]]}"#;
        let spec = FiberJoinSpec::from_json(text).unwrap();
        assert_eq!(spec.base, BaseManifold::SurfaceProduct { g1: 1, g2: 2 });
        let encoded = serde_json::to_string(&spec).unwrap();
        assert_eq!(FiberJoinSpec::from_json(&encoded).unwrap(), spec);

        let bad_kind = r#"{"base": {"kind": "torus"}}"#;
        assert!(matches!(FiberJoinSpec::from_json(bad_kind), Err(JoinError::Schema(_))));
        let extra = r#"{"base": {"kind": "cp1xcp1"}, "k": [["2","3"],["1","2"]], "w": 3}"#;
        assert!(matches!(FiberJoinSpec::from_json(extra), Err(JoinError::Schema(_))));
        let fractional = r#"{"base": {"kind": "cp1xcp1"}, "k": [["2","3/0"],["1","2"]]}"#;
        assert!(matches!(FiberJoinSpec::from_json(fractional), Err(JoinError::Schema(_))));
    }
}

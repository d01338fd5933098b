//! Exhaustive and sampled censuses of matrix jet spaces over `F_p`.
//!
//! Matrices are addressed by a mixed-radix integer whose base-`p` digits are
//! the coefficients, entry-major then by degree, least significant first.
//! Shards are contiguous index ranges and partial reports merge by
//! componentwise addition, so any sharding yields the same report.

use std::collections::BTreeMap;
use std::ops::Range;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::jetlinalg::{minors_vanish, smith_normal_form, type_of, FieldMatrix, JetMatrix};
use crate::loci::minors_vanish_by_type;
use crate::partitions::Partition;
use crate::ring::{Field, JetScalar, Scalar};

pub const CSV_HEADER: &str = "p,type,length,count\n";

/// Default cap on the number of matrices an exhaustive run may visit.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum CensusMode {
    Exhaustive,
    Random { count: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusSpec {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub order: u32,
    /// Minor size to test; `None` tests every size from 1 to `min(rows, cols)`.
    pub minor_size: Option<usize>,
    pub mode: CensusMode,
    #[serde(skip)]
    pub budget: u128,
}

impl CensusSpec {
    pub fn exhaustive(p: u64, rows: usize, cols: usize, order: u32) -> Self {
        CensusSpec {
            p,
            rows,
            cols,
            order,
            minor_size: None,
            mode: CensusMode::Exhaustive,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn random(p: u64, rows: usize, cols: usize, order: u32, count: u64, seed: u64) -> Self {
        CensusSpec {
            mode: CensusMode::Random { count, seed },
            ..Self::exhaustive(p, rows, cols, order)
        }
    }

    pub fn with_minor_size(mut self, s: usize) -> Self {
        self.minor_size = Some(s);
        self
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub fn field(&self) -> Field {
        Field::Prime(self.p)
    }

    fn digits(&self) -> usize {
        self.rows * self.cols * (self.order as usize + 1)
    }

    /// `p^{(m+1)ab}`, saturating.
    pub fn space_size(&self) -> u128 {
        saturating_pow(self.p, self.digits())
    }

    fn minor_sizes(&self) -> Vec<usize> {
        match self.minor_size {
            Some(s) => vec![s],
            None => (1..=self.rows.min(self.cols)).collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        Field::prime(self.p)?;
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::Input("census shape must be positive".into()));
        }
        if let Some(s) = self.minor_size {
            if s == 0 || s > self.rows.min(self.cols) {
                return Err(Error::Range(format!("minor size {s} does not fit the shape")));
            }
        }
        match self.mode {
            CensusMode::Exhaustive => {
                let size = self.space_size();
                if size > self.budget {
                    return Err(Error::Budget {
                        size,
                        budget: self.budget,
                    });
                }
            }
            CensusMode::Random { count, .. } => {
                if count == 0 {
                    return Err(Error::Sampling("random census with zero samples".into()));
                }
                if count as u128 > self.budget {
                    return Err(Error::Budget {
                        size: count as u128,
                        budget: self.budget,
                    });
                }
            }
        }
        Ok(())
    }

    /// Number of matrices the run visits.
    pub fn len(&self) -> u128 {
        match self.mode {
            CensusMode::Exhaustive => self.space_size(),
            CensusMode::Random { count, .. } => count as u128,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The matrix at enumeration index `index`.
    pub fn matrix_at(&self, index: u128) -> JetMatrix {
        let field = self.field();
        match self.mode {
            CensusMode::Exhaustive => decode(self, index, None, 0),
            CensusMode::Random { seed, .. } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(index as u64);
                let n = self.order as usize + 1;
                JetMatrix::from_fn(self.rows, self.cols, field, self.order, |_, _| {
                    let coeffs = (0..n)
                        .map(|_| Scalar::Mod {
                            p: self.p,
                            v: rng.gen_range(0..self.p),
                        })
                        .collect();
                    JetScalar::new(field, coeffs).expect("one field")
                })
            }
        }
    }
}

fn saturating_pow(base: u64, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

/// Decodes `index` into coefficients starting at degree `first_degree`;
/// lower degrees come from `center` when given.
fn decode(spec: &CensusSpec, mut index: u128, center: Option<&FieldMatrix>, first_degree: usize) -> JetMatrix {
    let field = spec.field();
    let p = spec.p as u128;
    let n = spec.order as usize + 1;
    JetMatrix::from_fn(spec.rows, spec.cols, field, spec.order, |i, j| {
        let coeffs = (0..n)
            .map(|k| {
                if k < first_degree {
                    center.map_or_else(|| field.zero(), |c| c.get(i, j).clone())
                } else {
                    let v = (index % p) as u64;
                    index /= p;
                    Scalar::Mod { p: spec.p, v }
                }
            })
            .collect();
        JetScalar::new(field, coeffs).expect("one field")
    })
}

fn ser_type_counts<S: Serializer>(
    counts: &BTreeMap<Partition, u64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Row {
        r#type: String,
        count: u64,
    }
    s.collect_seq(counts.iter().map(|(p, &count)| Row {
        r#type: p.to_string(),
        count,
    }))
}

/// Tallies from a census. Every failure counter must end at zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub spec: CensusSpec,
    pub total: u64,
    #[serde(serialize_with = "ser_type_counts")]
    pub type_counts: BTreeMap<Partition, u64>,
    /// Minor size `s` -> number of matrices whose `s x s` minors all vanish.
    pub locus_counts: BTreeMap<usize, u64>,
    /// Matrices where minor expansion and the type criterion disagree.
    pub discrepancies: u64,
    pub kernel_law_checked: u64,
    pub kernel_law_violations: u64,
    pub truncation_violations: u64,
    pub snf_failures: u64,
}

impl CensusReport {
    fn empty(spec: &CensusSpec) -> Self {
        CensusReport {
            spec: spec.clone(),
            total: 0,
            type_counts: BTreeMap::new(),
            locus_counts: spec.minor_sizes().into_iter().map(|s| (s, 0)).collect(),
            discrepancies: 0,
            kernel_law_checked: 0,
            kernel_law_violations: 0,
            truncation_violations: 0,
            snf_failures: 0,
        }
    }

    /// Componentwise sum with a report over a disjoint range of the same spec.
    pub fn merge(mut self, other: CensusReport) -> CensusReport {
        debug_assert_eq!(self.spec, other.spec);
        self.total += other.total;
        for (k, v) in other.type_counts {
            *self.type_counts.entry(k).or_default() += v;
        }
        for (k, v) in other.locus_counts {
            *self.locus_counts.entry(k).or_default() += v;
        }
        self.discrepancies += other.discrepancies;
        self.kernel_law_checked += other.kernel_law_checked;
        self.kernel_law_violations += other.kernel_law_violations;
        self.truncation_violations += other.truncation_violations;
        self.snf_failures += other.snf_failures;
        self
    }

    /// Zero discrepancies and violations.
    pub fn is_clean(&self) -> bool {
        self.discrepancies == 0
            && self.kernel_law_violations == 0
            && self.truncation_violations == 0
            && self.snf_failures == 0
    }

    /// Per-type counts as CSV with a header row.
    pub fn to_csv(&self) -> String {
        format!("{CSV_HEADER}{}", self.csv_rows())
    }

    /// The CSV rows without the header, for concatenating several primes.
    pub fn csv_rows(&self) -> String {
        let mut out = String::new();
        for (lambda, c) in &self.type_counts {
            out.push_str(&format!("{},\"{lambda}\",{},{c}\n", self.spec.p, lambda.len()));
        }
        out
    }

    fn record(&mut self, a: &JetMatrix, sizes: &[usize]) {
        self.total += 1;
        let snf = smith_normal_form(a);
        if !snf_is_sound(a, &snf) {
            self.snf_failures += 1;
        }
        let lambda = snf.partition.clone();
        for &s in sizes {
            let oracle = minors_vanish(a, s).expect("size validated");
            let fast = minors_vanish_by_type(&snf, s).expect("size validated");
            if oracle {
                *self.locus_counts.entry(s).or_default() += 1;
            }
            if oracle != fast {
                self.discrepancies += 1;
            }
        }
        // Wide matrices are checked through their transpose.
        let kernel = if a.cols() <= a.rows() {
            a.module_kernel_dim()
        } else {
            a.transpose().module_kernel_dim()
        };
        self.kernel_law_checked += 1;
        if kernel as u64 != lambda.h0_at(a.order()).expect("level in range") {
            self.kernel_law_violations += 1;
        }
        for i in 0..a.order() {
            let lower = type_of(&a.truncate(i).expect("i < m"));
            if lower != lambda.truncate(i + 1).expect("i + 1 >= 1") {
                self.truncation_violations += 1;
            }
        }
        *self.type_counts.entry(lambda).or_default() += 1;
    }
}

/// Checks every normal-form invariant on one matrix.
pub fn snf_is_sound(a: &JetMatrix, snf: &crate::jetlinalg::SnfResult) -> bool {
    let Ok(ua) = snf.u.mul(a) else { return false };
    let Ok(uav) = ua.mul(&snf.v) else { return false };
    if uav != snf.d || !snf.u.is_unit() || !snf.v.is_unit() {
        return false;
    }
    let orders = snf.diagonal_orders();
    if orders.windows(2).any(|w| w[0] > w[1]) {
        return false;
    }
    if snf.unit_count + snf.partition.len() != a.rows().min(a.cols()) {
        return false;
    }
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let e = snf.d.get(i, j);
            let ok = if i == j {
                *e == JetScalar::t_power(a.field(), a.order(), e.t_order())
            } else {
                e.is_zero()
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Runs the census over the index range `range` only.
pub fn run_census_range(spec: &CensusSpec, range: Range<u128>) -> Result<CensusReport> {
    spec.validate()?;
    let sizes = spec.minor_sizes();
    let mut report = CensusReport::empty(spec);
    for index in range {
        report.record(&spec.matrix_at(index), &sizes);
    }
    Ok(report)
}

/// Splits the run into `shards` contiguous ranges processed in parallel.
pub fn run_census_sharded(spec: &CensusSpec, shards: usize) -> Result<CensusReport> {
    spec.validate()?;
    let total = spec.len();
    let shards = (shards.max(1) as u128).min(total.max(1));
    let step = total.div_ceil(shards);
    let ranges: Vec<Range<u128>> = (0..shards)
        .map(|k| (k * step).min(total)..((k + 1) * step).min(total))
        .collect();
    let parts = ranges
        .into_par_iter()
        .map(|r| run_census_range(spec, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(parts
        .into_iter()
        .fold(CensusReport::empty(spec), CensusReport::merge))
}

/// Full census using the rayon thread pool.
pub fn run_census(spec: &CensusSpec) -> Result<CensusReport> {
    run_census_sharded(spec, rayon::current_num_threads() * 4)
}

/// The jets with constant term `center`; higher coefficients enumerated in
/// exhaustive mode or drawn uniformly in random mode.
pub fn sample_arcs_centered<'a>(
    spec: &'a CensusSpec,
    center: &FieldMatrix,
) -> Result<Box<dyn Iterator<Item = JetMatrix> + Send + 'a>> {
    if (center.rows(), center.cols()) != (spec.rows, spec.cols) {
        return Err(Error::Input(format!(
            "center is {}x{}, census shape is {}x{}",
            center.rows(),
            center.cols(),
            spec.rows,
            spec.cols
        )));
    }
    if center.field() != spec.field() {
        return Err(Error::IncompatibleOperands("center over a different field".into()));
    }
    let center = center.clone();
    match spec.mode {
        CensusMode::Exhaustive => {
            let size = saturating_pow(spec.p, spec.rows * spec.cols * spec.order as usize);
            if size > spec.budget {
                return Err(Error::Budget {
                    size,
                    budget: spec.budget,
                });
            }
            Ok(Box::new(
                (0..size).map(move |i| decode(spec, i, Some(&center), 1)),
            ))
        }
        CensusMode::Random { count, .. } => {
            spec.validate()?;
            Ok(Box::new((0..count as u128).map(move |i| {
                let mut a = spec.matrix_at(i);
                for r in 0..spec.rows {
                    for c in 0..spec.cols {
                        let mut coeffs = a.get(r, c).coeffs().to_vec();
                        coeffs[0] = center.get(r, c).clone();
                        a.set(r, c, JetScalar::new(spec.field(), coeffs).expect("one field"));
                    }
                }
                a
            })))
        }
    }
}

/// Whether every arc centered at `center` lies in the `s`-minor jet locus at
/// level `spec.order`, by exhaustive enumeration and minor expansion.
pub fn jet_fiber_is_full(spec: &CensusSpec, center: &FieldMatrix, s: usize) -> Result<bool> {
    for a in sample_arcs_centered(spec, center)? {
        if !minors_vanish(&a, s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// How one level of a multiplicity computation was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LevelMethod {
    /// Every arc centered at the point was enumerated.
    Exhaustive,
    /// Entries of arcs through zero have order >= 1, so `det` has order >= n.
    OrderBound,
    /// `diag(t, ..., t)` has nonzero determinant `t^n`.
    Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelEvidence {
    pub m: u32,
    pub full: bool,
    pub method: LevelMethod,
    /// Arcs visited in exhaustive mode.
    pub arcs: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityReport {
    pub n: usize,
    pub p: u64,
    pub multiplicity: u32,
    pub levels: Vec<LevelEvidence>,
}

/// Multiplicity of the `n x n` determinant at the zero matrix over `F_p`:
/// the least `m >= 1` at which some arc centered at 0 leaves the jet locus.
/// Levels with at most `exhaustive_limit` arcs are decided by enumeration.
pub fn determinant_multiplicity_at_zero(
    n: usize,
    p: u64,
    horizon: u32,
    exhaustive_limit: u128,
) -> Result<MultiplicityReport> {
    if n == 0 {
        return Err(Error::Input("matrix size must be positive".into()));
    }
    let field = Field::prime(p)?;
    let mut levels = Vec::new();
    let mult = crate::loci::multiplicity_from_jets(
        |m| {
            let spec = CensusSpec::exhaustive(p, n, n, m).with_budget(exhaustive_limit);
            let arcs = saturating_pow(p, n * n * m as usize);
            let (full, method) = if arcs <= exhaustive_limit {
                let zero = FieldMatrix::zero(n, n, field);
                (jet_fiber_is_full(&spec, &zero, n)?, LevelMethod::Exhaustive)
            } else if m < n as u32 {
                (true, LevelMethod::OrderBound)
            } else {
                let witness = JetMatrix::diagonal_t_powers(field, m, &vec![1; n]);
                (minors_vanish(&witness, n)?, LevelMethod::Witness)
            };
            levels.push(LevelEvidence {
                m,
                full,
                method,
                arcs: if method == LevelMethod::Exhaustive { arcs } else { 0 },
            });
            Ok(full)
        },
        horizon,
    )?;
    Ok(MultiplicityReport {
        n,
        p,
        multiplicity: mult,
        levels,
    })
}

/// Dimension of the orbit of the normal form of type `(unit_count, lambda)`
/// under `GL_a(R) x GL_b(R)`, as the rank of the tangent map
/// `(X, Y) -> X D - D Y` over the base field.
pub fn stratum_orbit_dim(
    rows: usize,
    cols: usize,
    order: u32,
    unit_count: usize,
    lambda: &Partition,
) -> Result<usize> {
    let steps = rows.min(cols);
    if unit_count + lambda.len() != steps || lambda.cap() != order + 1 {
        return Err(Error::Instance(format!(
            "{unit_count} units and type {lambda} do not fit a {rows}x{cols} matrix at order {order}"
        )));
    }
    let field = Field::Rational;
    let mut orders = vec![0u32; unit_count];
    orders.extend_from_slice(lambda.parts());
    let d = JetMatrix::diagonal(
        rows,
        cols,
        &orders
            .iter()
            .map(|&o| JetScalar::t_power(field, order, o))
            .collect::<Vec<_>>(),
    )?;
    let n = order as usize + 1;
    let (xa, yb) = (rows * rows * n, cols * cols * n);
    let mut map = FieldMatrix::zero(rows * cols * n, xa + yb, field);
    let out_index = |i: usize, j: usize, k: usize| (i * cols + j) * n + k;
    // Column for X_{ik} t^c: contributes X_{ik} t^c D_{kj} to entry (i, j).
    for i in 0..rows {
        for k in 0..rows {
            for c in 0..n {
                let col = (i * rows + k) * n + c;
                for j in 0..cols {
                    let dk = d.get(k, j);
                    for (e, coeff) in dk.coeffs().iter().enumerate() {
                        if !coeff.is_zero() && c + e < n {
                            let idx = out_index(i, j, c + e);
                            let cur = map.get(idx, col).add(coeff);
                            map.set(idx, col, cur);
                        }
                    }
                }
            }
        }
    }
    // Column for Y_{kj} t^c: contributes -D_{ik} Y_{kj} t^c to entry (i, j).
    for k in 0..cols {
        for j in 0..cols {
            for c in 0..n {
                let col = xa + (k * cols + j) * n + c;
                for i in 0..rows {
                    let dk = d.get(i, k);
                    for (e, coeff) in dk.coeffs().iter().enumerate() {
                        if !coeff.is_zero() && c + e < n {
                            let idx = out_index(i, j, c + e);
                            let cur = map.get(idx, col).sub(coeff);
                            map.set(idx, col, cur);
                        }
                    }
                }
            }
        }
    }
    Ok(map.rank())
}

/// Per-prime evidence for one stratum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeFit {
    pub p: u64,
    pub count: u64,
    /// `D` with `count = p^D beta / gamma`, when that quotient is a power of `p`.
    pub exponent: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentRow {
    pub partition: Partition,
    pub unit_count: usize,
    pub fits: Vec<PrimeFit>,
    /// The common exponent when every prime yields the same one.
    pub exponent: Option<u32>,
    pub consistent: bool,
    /// Exact orbit dimension from the tangent map.
    pub orbit_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentTable {
    pub rows: usize,
    pub cols: usize,
    pub order: u32,
    pub primes: Vec<u64>,
    /// Exponent of the whole space, `(m+1)ab`.
    pub total_exponent: u32,
    pub strata: Vec<ExponentRow>,
}

/// `prod_{k=1}^{n} (1 - p^{-k})`, the fraction of `M_n(F_p)` that is invertible.
fn gl_fraction(p: u64, n: usize) -> BigRational {
    let p = BigInt::from(p);
    let mut acc = BigRational::one();
    let mut pk = BigInt::one();
    for _ in 0..n {
        pk *= &p;
        acc *= BigRational::one() - BigRational::new(BigInt::one(), pk.clone());
    }
    acc
}

/// Invertible fraction of the stabilizer algebra `{(X, Y) : X D = D Y}` of
/// the normal form. Its semisimple quotient has one matrix block per
/// distinct nonzero diagonal order (sized by the multiplicity), one for the
/// zero rows and one for the zero columns.
fn stabilizer_fraction(p: u64, rows: usize, cols: usize, order: u32, unit_count: usize, lambda: &Partition) -> BigRational {
    let mut mult: BTreeMap<u32, usize> = BTreeMap::new();
    if unit_count > 0 {
        mult.insert(0, unit_count);
    }
    for &o in lambda.parts() {
        if o <= order {
            *mult.entry(o).or_default() += 1;
        }
    }
    let nonzero: usize = mult.values().sum();
    let mut gamma = gl_fraction(p, rows - nonzero) * gl_fraction(p, cols - nonzero);
    for &n in mult.values() {
        gamma *= gl_fraction(p, n);
    }
    gamma
}

/// Exact exponent of one stratum count at one prime: the orbit has
/// `|G| / |Stab| = p^D beta / gamma` points, with `beta` the invertible
/// fraction of `M_a(F_p) x M_b(F_p)`. `None` if `count gamma / beta` is not
/// a power of `p` within range.
pub fn orbit_exponent(
    p: u64,
    rows: usize,
    cols: usize,
    order: u32,
    unit_count: usize,
    lambda: &Partition,
    count: u64,
) -> Option<u32> {
    let beta = gl_fraction(p, rows) * gl_fraction(p, cols);
    let gamma = stabilizer_fraction(p, rows, cols, order, unit_count, lambda);
    let value = BigRational::from_integer(BigInt::from(count)) * gamma / beta;
    let max_dim = (order as usize + 1) * rows * cols;
    let pb = BigRational::from_integer(BigInt::from(p));
    let mut pd = BigRational::one();
    for dim in 0..=max_dim {
        if pd == value {
            return Some(dim as u32);
        }
        if pd > value {
            return None;
        }
        pd *= &pb;
    }
    None
}

/// Fits a dimension to each type stratum from exhaustive censuses at
/// several primes.
pub fn codim_exponents(reports: &[CensusReport]) -> Result<ExponentTable> {
    let first = reports
        .first()
        .ok_or_else(|| Error::Input("no census reports".into()))?;
    if reports.len() < 2 {
        return Err(Error::Input("exponent fits need at least two primes".into()));
    }
    let (rows, cols, order) = (first.spec.rows, first.spec.cols, first.spec.order);
    let mut primes = Vec::new();
    for r in reports {
        if r.spec.mode != CensusMode::Exhaustive {
            return Err(Error::Input("exponent fits need exhaustive censuses".into()));
        }
        if (r.spec.rows, r.spec.cols, r.spec.order) != (rows, cols, order) {
            return Err(Error::Input("census reports differ in shape or order".into()));
        }
        if primes.contains(&r.spec.p) {
            return Err(Error::Input(format!("prime {} repeated", r.spec.p)));
        }
        primes.push(r.spec.p);
    }
    let steps = rows.min(cols);
    let mut types: Vec<&Partition> = reports.iter().flat_map(|r| r.type_counts.keys()).collect();
    types.sort();
    types.dedup();
    let strata = types
        .into_iter()
        .map(|lambda| {
            let unit_count = steps - lambda.len();
            let fits: Vec<PrimeFit> = reports
                .iter()
                .map(|r| {
                    let count = r.type_counts.get(lambda).copied().unwrap_or(0);
                    PrimeFit {
                        p: r.spec.p,
                        count,
                        exponent: orbit_exponent(r.spec.p, rows, cols, order, unit_count, lambda, count),
                    }
                })
                .collect();
            let consistent = fits[0].exponent.is_some() && fits.iter().all(|f| f.exponent == fits[0].exponent);
            Ok(ExponentRow {
                partition: lambda.clone(),
                unit_count,
                exponent: if consistent { fits[0].exponent } else { None },
                consistent,
                orbit_dim: stratum_orbit_dim(rows, cols, order, unit_count, lambda)?,
                fits,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExponentTable {
        rows,
        cols,
        order,
        primes,
        total_exponent: ((order + 1) as usize * rows * cols) as u32,
        strata,
    })
}

impl ExponentTable {
    /// Fitted dimension of the `s`-minor jet locus: the largest fitted
    /// exponent among member strata. `None` if a member stratum has no
    /// unique fit.
    pub fn locus_dim(&self, s: usize) -> Option<u32> {
        let m = self.order;
        let mut best = None;
        for row in &self.strata {
            let mut orders = vec![0u32; row.unit_count];
            orders.extend_from_slice(row.partition.parts());
            let member = orders[..s].iter().map(|&o| o as u64).sum::<u64>() > m as u64;
            if member {
                let e = row.exponent?;
                best = best.max(Some(e));
            }
        }
        best
    }

    /// Same as [`ExponentTable::locus_dim`] from the exact orbit dimensions.
    pub fn locus_orbit_dim(&self, s: usize) -> Option<usize> {
        let m = self.order;
        self.strata
            .iter()
            .filter(|row| {
                let mut orders = vec![0u32; row.unit_count];
                orders.extend_from_slice(row.partition.parts());
                orders[..s].iter().map(|&o| o as u64).sum::<u64>() > m as u64
            })
            .map(|row| row.orbit_dim)
            .max()
    }
}

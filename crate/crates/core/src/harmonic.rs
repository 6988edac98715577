//! The partition graphs `Y`, `SY`, `Ỹ`, `S̃Y`, harmonic functions on them
//! obtained from specializations, and checks of the extreme-point conditions.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::partitions::{box_successors, diagram, is_rook_strip, partitions_up_to, shifted_diagram, strict_partitions_up_to, strip_successors, Partition, StrictPartition};
use crate::specialize::{Atoms, Evaluator, SpecializeError};
use crate::symfunc::basis::{expand_in_basis, Basis, BetaValue};
use crate::symfunc::families::family_poly;
use crate::symfunc::poly::{rational_to_f64, Rational};
use crate::tableaux::{Family, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    /// Young's lattice: add one box.
    Y,
    /// Strict partitions, add one box of the shifted diagram.
    SY,
    /// Partitions, add a nonempty rook strip.
    Ytilde,
    /// Strict partitions, add a nonempty rook strip of the shifted diagram.
    SYtilde,
}

impl GraphKind {
    pub const ALL: [GraphKind; 4] = [GraphKind::Y, GraphKind::SY, GraphKind::Ytilde, GraphKind::SYtilde];

    pub fn shifted(self) -> bool {
        matches!(self, GraphKind::SY | GraphKind::SYtilde)
    }

    pub fn filtered(self) -> bool {
        matches!(self, GraphKind::Ytilde | GraphKind::SYtilde)
    }

    /// The family whose Pieri rule is the graph: `s`, `P`, `G`, `GP`.
    pub fn family(self) -> Family {
        if self.shifted() {
            Family::GP
        } else {
            Family::G
        }
    }

    /// `β` at which the Pieri rule has all edge weights equal to one.
    pub fn beta(self) -> Rational {
        Rational::from_integer(if self.filtered() { 1 } else { 0 }.into())
    }

    fn basis(self) -> Basis {
        if self.shifted() {
            Basis::GP
        } else {
            Basis::G
        }
    }

    pub fn successors(self, lambda: &Partition) -> Vec<Partition> {
        if self.filtered() {
            strip_successors(lambda, self.shifted())
        } else {
            box_successors(lambda, self.shifted())
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::Y => "y",
            GraphKind::SY => "sy",
            GraphKind::Ytilde => "ytilde",
            GraphKind::SYtilde => "sytilde",
        })
    }
}

impl FromStr for GraphKind {
    type Err = SpecializeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| SpecializeError::Parse(format!("unknown graph {s:?}; expected y, sy, ytilde or sytilde")))
    }
}

/// Vertices of size at most `rank`, with the full successor list of each.
#[derive(Clone, Debug, Serialize)]
pub struct PartitionGraph {
    pub kind: GraphKind,
    pub rank: u32,
    pub vertices: Vec<Partition>,
    #[serde(serialize_with = "crate::partitions::serialize_keyed")]
    pub edges: BTreeMap<Partition, Vec<Partition>>,
    /// Vertices whose successors all lie within the rank bound.
    pub interior: BTreeSet<Partition>,
}

impl PartitionGraph {
    pub fn successors(&self, lambda: &Partition) -> &[Partition] {
        self.edges.get(lambda).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn edge_count(&self) -> usize {
        self.edges.values().map(Vec::len).sum()
    }
}

fn vertices(kind: GraphKind, rank: u32) -> Vec<Partition> {
    if kind.shifted() {
        strict_partitions_up_to(rank).into_iter().map(StrictPartition::into_partition).collect()
    } else {
        partitions_up_to(rank)
    }
}

pub fn build_graph(kind: GraphKind, rank: u32) -> PartitionGraph {
    let vertices = vertices(kind, rank);
    let mut edges = BTreeMap::new();
    let mut interior = BTreeSet::new();
    for v in &vertices {
        let succ = kind.successors(v);
        if succ.iter().all(|nu| nu.size() <= rank) {
            interior.insert(v.clone());
        }
        edges.insert(v.clone(), succ);
    }
    PartitionGraph { kind, rank, vertices, edges, interior }
}

/// Edges between vertices of rank at most `rank`, found by testing every pair.
pub fn brute_force_edges(kind: GraphKind, rank: u32) -> BTreeMap<Partition, Vec<Partition>> {
    let vs = vertices(kind, rank);
    let cells = |p: &Partition| {
        if kind.shifted() {
            shifted_diagram(&p.to_strict().expect("strict vertex"))
        } else {
            diagram(p)
        }
    };
    let mut out = BTreeMap::new();
    for a in &vs {
        let ca = cells(a);
        let mut succ = Vec::new();
        for b in &vs {
            let cb = cells(b);
            if b.size() <= a.size() || !ca.is_subset(&cb) {
                continue;
            }
            let diff = cb.difference(&ca);
            let edge = if kind.filtered() { is_rook_strip(&diff) } else { diff.len() == 1 };
            if edge {
                succ.push(b.clone());
            }
        }
        succ.sort();
        out.insert(a.clone(), succ);
    }
    out
}

/// A value of a candidate function, exact when possible.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Rational),
    Approx(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => rational_to_f64(r),
            Value::Approx(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    fn zero(exact: bool) -> Value {
        if exact {
            Value::Exact(<Rational as Zero>::zero())
        } else {
            Value::Approx(0.0)
        }
    }

    fn add(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a + b),
            _ => Value::Approx(self.to_f64() + other.to_f64()),
        }
    }

    fn mul(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a * b),
            _ => Value::Approx(self.to_f64() * other.to_f64()),
        }
    }

    fn scale(&self, c: &Rational) -> Value {
        match self {
            Value::Exact(a) => Value::Exact(a * c),
            Value::Approx(x) => Value::Approx(x * rational_to_f64(c)),
        }
    }

    fn is_negative(&self) -> bool {
        match self {
            Value::Exact(a) => a.is_negative(),
            Value::Approx(x) => *x < 0.0,
        }
    }

    /// `|self − other|`, exactly zero for equal exact values.
    fn distance(&self, other: &Value) -> f64 {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => rational_to_f64(&(a - b).abs()),
            _ => (self.to_f64() - other.to_f64()).abs(),
        }
    }

    fn matches(&self, other: &Value, tol: f64) -> bool {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a == b,
            _ => {
                let scale = self.to_f64().abs().max(other.to_f64().abs()).max(1.0);
                self.distance(other) <= tol * scale
            }
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Approx(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Exact(r) => s.serialize_str(&r.to_string()),
            Value::Approx(x) => s.serialize_f64(*x),
        }
    }
}

/// Where a candidate's values come from.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CandidateSource {
    Specialization { atoms: Atoms },
    /// `Σ w_i ρ_i(F_λ)` for the listed weights and specializations.
    Mixture { parts: Vec<(String, Atoms)> },
    /// Values given directly on the graph.
    Explicit,
}

/// A function on the vertices of a graph.
#[derive(Clone, Debug, Serialize)]
pub struct HarmonicCandidate {
    pub kind: GraphKind,
    pub beta: String,
    pub exact: bool,
    pub source: CandidateSource,
    #[serde(serialize_with = "crate::partitions::serialize_keyed")]
    pub values: BTreeMap<Partition, Value>,
    #[serde(skip)]
    components: Vec<(Rational, Atoms)>,
}

fn evaluate(kind: GraphKind, atoms: &Atoms, nu: &Partition, exact: bool) -> Result<Value, SpecializeError> {
    let ev = Evaluator::new(atoms.clone(), kind.beta());
    if exact {
        Ok(Value::Exact(ev.value::<Rational>(kind.family(), nu, &Partition::empty())?))
    } else {
        Ok(Value::Approx(ev.value::<f64>(kind.family(), nu, &Partition::empty())?))
    }
}

impl HarmonicCandidate {
    /// Values supplied directly, for example to exhibit a non-harmonic function.
    pub fn from_values(kind: GraphKind, values: BTreeMap<Partition, Rational>) -> Self {
        HarmonicCandidate {
            kind,
            beta: kind.beta().to_string(),
            exact: true,
            source: CandidateSource::Explicit,
            values: values.into_iter().map(|(k, v)| (k, Value::Exact(v))).collect(),
            components: Vec::new(),
        }
    }

    /// The convex combination `Σ w_i φ_i` of specialization candidates on the same graph.
    pub fn mixture(parts: &[(Rational, &HarmonicCandidate)]) -> Result<Self, SpecializeError> {
        let Some((_, first)) = parts.first() else {
            return Err(SpecializeError::ParameterConstraintViolated("a mixture needs at least one part".into()));
        };
        let total = parts.iter().fold(<Rational as Zero>::zero(), |s, (w, _)| s + w);
        if !total.is_one() || parts.iter().any(|(w, _)| w.is_negative()) {
            return Err(SpecializeError::ParameterConstraintViolated("mixture weights must be nonnegative and sum to 1".into()));
        }
        let mut components = Vec::new();
        for (w, c) in parts {
            if c.kind != first.kind || c.components.is_empty() {
                return Err(SpecializeError::ParameterConstraintViolated("mixtures combine specialization candidates on one graph".into()));
            }
            components.extend(c.components.iter().map(|(v, a)| (w * v, a.clone())));
        }
        let exact = parts.iter().all(|(_, c)| c.exact);
        let mut values = BTreeMap::new();
        for v in first.values.keys() {
            let mut s = Value::zero(exact);
            for (w, c) in parts {
                let x = c.values.get(v).ok_or_else(|| SpecializeError::ParameterConstraintViolated(format!("vertex {v} missing from a part")))?;
                s = s.add(&x.scale(w));
            }
            values.insert(v.clone(), s);
        }
        Ok(HarmonicCandidate {
            kind: first.kind,
            beta: first.beta.clone(),
            exact,
            source: CandidateSource::Mixture { parts: components.iter().map(|(w, a)| (w.to_string(), a.clone())).collect() },
            values,
            components,
        })
    }

    pub fn value(&self, nu: &Partition) -> Option<&Value> {
        self.values.get(nu)
    }

    /// The value on any vertex, evaluating off the stored range when the
    /// candidate comes from specializations.
    pub fn value_at(&self, nu: &Partition) -> Result<Value, SpecializeError> {
        if let Some(v) = self.values.get(nu) {
            return Ok(v.clone());
        }
        if self.components.is_empty() {
            return Err(SpecializeError::ParameterConstraintViolated(format!("no value for {nu} outside the graph")));
        }
        let mut s = Value::zero(self.exact);
        for (w, atoms) in &self.components {
            s = s.add(&evaluate(self.kind, atoms, nu, self.exact)?.scale(w));
        }
        Ok(s)
    }
}

/// `φ(λ) = ρ(F_λ)` on every vertex, where `F` is `s`, `P`, `G` or `GP` by graph.
///
/// The exact path needs rational atoms without an exponential part; set
/// `numeric` to evaluate in floating point instead. `ρ(F_1) = 1` is required,
/// exactly or within `tol`.
pub fn candidate_from_specialization(atoms: &Atoms, graph: &PartitionGraph, beta: &Rational, numeric: bool, tol: f64) -> Result<HarmonicCandidate, SpecializeError> {
    let kind = graph.kind;
    if *beta != kind.beta() {
        return Err(SpecializeError::ParameterConstraintViolated(format!("graph {kind} is harmonic for β = {}, got β = {beta}", kind.beta())));
    }
    let exact = !numeric;
    if exact && atoms.has_pi() {
        return Err(SpecializeError::NotExact("exponential atoms need the numeric path".into()));
    }
    let one = evaluate(kind, atoms, &Partition::row(1), exact)?;
    let normalized = match &one {
        Value::Exact(r) => r.is_one(),
        Value::Approx(x) => (x - 1.0).abs() <= tol,
    };
    if !normalized {
        return Err(SpecializeError::NotNormalized { value: one.to_string() });
    }
    let values = graph
        .vertices
        .par_iter()
        .map(|v| Ok((v.clone(), evaluate(kind, atoms, v, exact)?)))
        .collect::<Result<BTreeMap<_, _>, SpecializeError>>()?;
    Ok(HarmonicCandidate {
        kind,
        beta: beta.to_string(),
        exact,
        source: CandidateSource::Specialization { atoms: atoms.clone() },
        values,
        components: vec![(<Rational as One>::one(), atoms.clone())],
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexCheck {
    pub vertex: Partition,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub successor_sum: Option<Value>,
    pub interior: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HarmonicReport {
    pub graph: GraphKind,
    pub rank: u32,
    pub exact: bool,
    pub pass: bool,
    pub normalized: bool,
    pub interior_checked: usize,
    pub max_abs_dev: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Partition>,
    pub vertices: Vec<VertexCheck>,
}

/// `φ(∅) = 1` and `φ(λ) = Σ_{λ→ν} φ(ν)` at every interior vertex.
pub fn check_harmonic(candidate: &HarmonicCandidate, graph: &PartitionGraph, tol: f64) -> Result<HarmonicReport, SpecializeError> {
    let missing = |v: &Partition| SpecializeError::ParameterConstraintViolated(format!("candidate has no value at {v}"));
    let empty = Partition::empty();
    let one = if candidate.exact { Value::Exact(<Rational as One>::one()) } else { Value::Approx(1.0) };
    let normalized = candidate.value(&empty).ok_or_else(|| missing(&empty))?.matches(&one, tol);
    let mut vertices = Vec::new();
    let mut max_abs_dev: f64 = 0.0;
    let mut first_failure = None;
    if !normalized {
        first_failure = Some(empty.clone());
    }
    for v in &graph.vertices {
        let value = candidate.value(v).ok_or_else(|| missing(v))?.clone();
        let interior = graph.interior.contains(v);
        let (successor_sum, pass) = if interior {
            let mut s = Value::zero(candidate.exact);
            for nu in graph.successors(v) {
                s = s.add(candidate.value(nu).ok_or_else(|| missing(nu))?);
            }
            max_abs_dev = max_abs_dev.max(value.distance(&s));
            let pass = value.matches(&s, tol);
            (Some(s), pass)
        } else {
            (None, true)
        };
        if !pass && first_failure.is_none() {
            first_failure = Some(v.clone());
        }
        vertices.push(VertexCheck { vertex: v.clone(), value, successor_sum, interior, pass });
    }
    Ok(HarmonicReport {
        graph: graph.kind,
        rank: graph.rank,
        exact: candidate.exact,
        pass: first_failure.is_none(),
        normalized,
        interior_checked: graph.interior.len(),
        max_abs_dev,
        first_failure,
        vertices,
    })
}

/// Structure constants `F_λ F_μ = Σ c_ν F_ν` at the graph's `β`.
///
/// The product is expanded exactly, without a degree cap, in
/// `ℓ(λ) + ℓ(μ) + 1` variables. There the `F_ν` with `ℓ(ν)` at most the
/// variable count are independent and the longer ones vanish, so the
/// expansion is complete when no term reaches the full length.
#[derive(Clone, Debug, Serialize)]
pub struct Product {
    pub lambda: Partition,
    pub mu: Partition,
    #[serde(serialize_with = "terms_as_strings")]
    pub terms: Vec<(Partition, Rational)>,
    pub complete: bool,
}

fn terms_as_strings<S: Serializer>(terms: &[(Partition, Rational)], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(terms.iter().map(|(nu, c)| (nu, c.to_string())))
}

pub fn structure_constants(kind: GraphKind, lambda: &Partition, mu: &Partition) -> Result<Product, SpecializeError> {
    let n = lambda.len() + mu.len() + 1;
    let family = kind.family();
    let f = family_poly(family, Mode::Quasi, lambda, &Partition::empty(), n, None)?;
    let g = family_poly(family, Mode::Quasi, mu, &Partition::empty(), n, None)?;
    let product = f.try_mul(&g)?;
    let combo = expand_in_basis(&product, kind.basis(), &BetaValue::Fixed(kind.beta()), None)?;
    let beta = kind.beta();
    let terms: Vec<(Partition, Rational)> = combo
        .coeffs
        .iter()
        .map(|(nu, c)| (nu.clone(), c.eval(&beta)))
        .filter(|(_, c)| !Zero::is_zero(c))
        .collect();
    let complete = terms.iter().all(|(nu, _)| nu.len() < n);
    Ok(Product { lambda: lambda.clone(), mu: mu.clone(), terms, complete })
}

/// `count` ordered pairs of vertices with `1 ≤ |λ|, |μ| ≤ max_size`, drawn
/// with replacement from a seeded generator.
pub fn sample_pairs(graph: &PartitionGraph, count: usize, max_size: u32, seed: u64) -> Vec<(Partition, Partition)> {
    let pool: Vec<&Partition> = graph.vertices.iter().filter(|v| !v.is_empty() && v.size() <= max_size).collect();
    if pool.is_empty() {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = pool.choose(&mut rng).expect("nonempty pool");
            let b = pool.choose(&mut rng).expect("nonempty pool");
            ((*a).clone(), (*b).clone())
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct PairCheck {
    pub lambda: Partition,
    pub mu: Partition,
    /// `ρ(F_λ F_μ)` through the structure constants.
    pub product_value: Value,
    /// `ρ(F_λ) ρ(F_μ)`.
    pub value_product: Value,
    pub complete: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremeReport {
    pub graph: GraphKind,
    pub exact: bool,
    pub nonnegative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub negative_vertex: Option<Partition>,
    pub multiplicative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failing_pair: Option<(Partition, Partition)>,
    pub pairs_checked: usize,
    pub pairs: Vec<PairCheck>,
    pub pass: bool,
    /// What the check establishes.
    pub scope: String,
}

/// Nonnegativity on every vertex and `ρ(F_λ F_μ) = ρ(F_λ) ρ(F_μ)` on the given pairs.
pub fn check_extreme_conditions(candidate: &HarmonicCandidate, graph: &PartitionGraph, pairs: &[(Partition, Partition)], tol: f64) -> Result<ExtremeReport, SpecializeError> {
    let negative_vertex = graph
        .vertices
        .iter()
        .find(|v| candidate.value(v).is_some_and(Value::is_negative))
        .cloned();
    let distinct: BTreeSet<(Partition, Partition)> = pairs.iter().cloned().collect();
    let products: Mutex<HashMap<(Partition, Partition), Product>> = Mutex::new(HashMap::new());
    distinct.par_iter().try_for_each(|(a, b)| -> Result<(), SpecializeError> {
        let p = structure_constants(graph.kind, a, b)?;
        products.lock().expect("product cache").insert((a.clone(), b.clone()), p);
        Ok(())
    })?;
    let products = products.into_inner().expect("product cache");
    let mut values: HashMap<Partition, Value> = HashMap::new();
    let mut checks = Vec::new();
    for (a, b) in pairs {
        let product = &products[&(a.clone(), b.clone())];
        let mut lookup = |nu: &Partition| -> Result<Value, SpecializeError> {
            if let Some(v) = values.get(nu) {
                return Ok(v.clone());
            }
            let v = candidate.value_at(nu)?;
            values.insert(nu.clone(), v.clone());
            Ok(v)
        };
        let mut product_value = Value::zero(candidate.exact);
        for (nu, c) in &product.terms {
            product_value = product_value.add(&lookup(nu)?.scale(c));
        }
        let value_product = lookup(a)?.mul(&lookup(b)?);
        let pass = product.complete && product_value.matches(&value_product, tol);
        checks.push(PairCheck { lambda: a.clone(), mu: b.clone(), product_value, value_product, complete: product.complete, pass });
    }
    let first_failing_pair = checks.iter().find(|c| !c.pass).map(|c| (c.lambda.clone(), c.mu.clone()));
    let nonnegative = negative_vertex.is_none();
    let multiplicative = first_failing_pair.is_none();
    Ok(ExtremeReport {
        graph: graph.kind,
        exact: candidate.exact,
        nonnegative,
        negative_vertex,
        multiplicative,
        first_failing_pair,
        pairs_checked: checks.len(),
        pairs: checks,
        pass: nonnegative && multiplicative,
        scope: format!(
            "nonnegativity on all {} vertices of rank <= {}; multiplicativity on {} sampled pairs only",
            graph.vertices.len(),
            graph.rank,
            pairs.len()
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::poly::int;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn atoms(s: &str) -> Atoms {
        s.parse().unwrap()
    }

    #[test]
    fn small_graphs() {
        let g = build_graph(GraphKind::SYtilde, 2);
        assert_eq!(g.vertices, vec![p(&[]), p(&[1]), p(&[2])]);
        assert_eq!(g.successors(&p(&[])), &[p(&[1])]);
        assert_eq!(g.successors(&p(&[1])), &[p(&[2])]);
        let g = build_graph(GraphKind::SYtilde, 6);
        assert_eq!(g.successors(&p(&[3, 1])), &[p(&[4, 1]), p(&[3, 2]), p(&[4, 2])]);
        let g = build_graph(GraphKind::Y, 2);
        assert_eq!(g.successors(&p(&[1])), &[p(&[2]), p(&[1, 1])]);
        assert!(g.interior.contains(&p(&[1])));
        assert!(!g.interior.contains(&p(&[2])));
    }

    #[test]
    fn edges_match_pairwise_search() {
        for kind in GraphKind::ALL {
            let g = build_graph(kind, 8);
            let brute = brute_force_edges(kind, 8);
            for v in &g.vertices {
                let within: Vec<Partition> = g.successors(v).iter().filter(|nu| nu.size() <= 8).cloned().collect();
                assert_eq!(within, brute[v], "{kind} at {v}");
            }
        }
    }

    #[test]
    fn phi_one_is_harmonic_and_extreme() {
        let g = build_graph(GraphKind::SYtilde, 7);
        let c = candidate_from_specialization(&atoms("phi:1"), &g, &int(1), false, 0.0).unwrap();
        assert_eq!(c.value(&p(&[1])), Some(&Value::Exact(int(1))));
        let r = check_harmonic(&c, &g, 0.0).unwrap();
        assert!(r.pass && r.exact, "{:?}", r.first_failure);
        let pairs = [(p(&[1]), p(&[1])), (p(&[2]), p(&[2, 1])), (p(&[]), p(&[3]))];
        let e = check_extreme_conditions(&c, &g, &pairs, 0.0).unwrap();
        assert!(e.pass, "{e:?}");
    }

    #[test]
    fn normalization_is_enforced() {
        let g = build_graph(GraphKind::SYtilde, 3);
        assert!(matches!(
            candidate_from_specialization(&Atoms::default(), &g, &int(1), false, 0.0),
            Err(SpecializeError::NotNormalized { .. })
        ));
        assert!(candidate_from_specialization(&atoms("phi:1/2,phi:1/3"), &g, &int(1), false, 0.0).is_ok());
        assert!(candidate_from_specialization(&atoms("phi:1"), &g, &int(0), false, 0.0).is_err());
    }

    #[test]
    fn all_ones_is_not_harmonic() {
        let g = build_graph(GraphKind::Y, 3);
        let values = g.vertices.iter().map(|v| (v.clone(), int(1))).collect();
        let r = check_harmonic(&HarmonicCandidate::from_values(GraphKind::Y, values), &g, 0.0).unwrap();
        assert!(!r.pass);
        assert_eq!(r.first_failure, Some(p(&[1])));
    }

    #[test]
    fn schur_candidate_on_young_lattice() {
        let g = build_graph(GraphKind::Y, 5);
        let c = candidate_from_specialization(&atoms("phi:1/2,phi:1/2"), &g, &int(0), false, 0.0).unwrap();
        assert!(check_harmonic(&c, &g, 0.0).unwrap().pass);
        let g = build_graph(GraphKind::SY, 5);
        let c = candidate_from_specialization(&atoms("phi:1/2,phi:1/4,eps:1/4"), &g, &int(0), false, 0.0).unwrap();
        assert!(check_harmonic(&c, &g, 0.0).unwrap().pass);
    }

    #[test]
    fn filtered_young_graph_with_pi() {
        // e^γ (1 + 1/2) = 2 for γ = ln(4/3).
        let g = build_graph(GraphKind::Ytilde, 4);
        let a = atoms(&format!("phi:1/2,pi:{}", (4.0f64 / 3.0).ln()));
        assert!(matches!(candidate_from_specialization(&a, &g, &int(1), false, 1e-9), Err(SpecializeError::NotExact(_))));
        let c = candidate_from_specialization(&a, &g, &int(1), true, 1e-9).unwrap();
        let r = check_harmonic(&c, &g, 1e-9).unwrap();
        assert!(r.pass && !r.exact, "{:?} {}", r.first_failure, r.max_abs_dev);
    }

    #[test]
    fn mixture_fails_multiplicativity() {
        let g = build_graph(GraphKind::SYtilde, 5);
        let a = candidate_from_specialization(&atoms("phi:1"), &g, &int(1), false, 0.0).unwrap();
        let b = candidate_from_specialization(&atoms("phi:1/2,phi:1/3"), &g, &int(1), false, 0.0).unwrap();
        let half = Rational::new(1.into(), 2.into());
        let m = HarmonicCandidate::mixture(&[(half.clone(), &a), (half, &b)]).unwrap();
        assert!(check_harmonic(&m, &g, 0.0).unwrap().pass);
        let pairs = sample_pairs(&g, 20, 3, 7);
        let e = check_extreme_conditions(&m, &g, &pairs, 0.0).unwrap();
        assert!(e.nonnegative && !e.multiplicative, "{e:?}");
    }
}

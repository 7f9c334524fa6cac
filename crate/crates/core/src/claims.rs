//! Closed-form statements about co-normal products, each checked on a
//! concrete instance against brute force.
//!
//! Every claim has a short identifier such as `Thm3.4`. [`verify_claim`]
//! builds the instance, checks the claim's hypotheses mechanically, computes
//! the true value by exhaustive search and attaches a checkable witness
//! whenever prediction and computation disagree. Predictions come only from
//! formulas and ground truth only from search.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::families::{as_complete_multipartite, as_cycle, as_path, as_null, as_star};
use crate::fixing::{fix_bounds_conormal, fixing_number, minimum_fixing_sets, surviving_automorphism, FixingResult};
use crate::graph::{Diameter, Graph, TwinKind, VertexSet};
use crate::products::{conormal_degree, conormal_neighborhood, fiber, predicted_connected, predicted_diameters, Products};
use crate::symmetry::{
    are_isomorphic, automorphisms, interchange_conditions, pair_map, rotation_map, split_pair, stabilizer_chain,
    stabilizer_order, StabilizerChain,
};
use crate::{Error, Limits, Permutation, Result};

macro_rules! claim_ids {
    ($($variant:ident => $text:literal,)*) => {
        /// Identifier of a checkable statement.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum ClaimId {
            $($variant,)*
        }

        impl ClaimId {
            /// Every registered claim, in registry order.
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $text,)*
                }
            }
        }
    };
}

claim_ids! {
    Obs1 => "Obs1",
    Obs2 => "Obs2",
    Thm2_1 => "Thm2.1",
    Thm2_2 => "Thm2.2",
    Thm2_4 => "Thm2.4",
    Cor2_5 => "Cor2.5",
    Prop2_8 => "Prop2.8",
    Prop2_9 => "Prop2.9",
    Thm2_10 => "Thm2.10",
    Cor2_11 => "Cor2.11",
    Thm2_12 => "Thm2.12",
    Cor2_13 => "Cor2.13",
    Thm2_15 => "Thm2.15",
    Cor2_16 => "Cor2.16",
    Thm2_17 => "Thm2.17",
    Thm2_18 => "Thm2.18",
    Thm3_1 => "Thm3.1",
    Obs3 => "Obs3",
    Obs5 => "Obs5",
    Prop3_2 => "Prop3.2",
    Lemma3_3 => "Lemma3.3",
    Thm3_4 => "Thm3.4",
    Lemma3_5 => "Lemma3.5",
    Thm3_6 => "Thm3.6",
    Thm3_7 => "Thm3.7",
    Cor3_8 => "Cor3.8",
    Thm3_9 => "Thm3.9",
    Thm3_10 => "Thm3.10",
    Thm3_11 => "Thm3.11",
    Cor3_12 => "Cor3.12",
    Thm3_13 => "Thm3.13",
    Cor3_14 => "Cor3.14",
    Thm3_15 => "Thm3.15",
    Thm3_16 => "Thm3.16",
}

impl ClaimId {
    /// Claims about one graph. When given several factors they apply to
    /// the co-normal product of all of them.
    pub fn takes_single_graph(self) -> bool {
        matches!(self, ClaimId::Obs3 | ClaimId::Obs5 | ClaimId::Prop3_2)
    }

    /// Claims whose prediction is a fixing number.
    pub fn predicts_fix(self) -> bool {
        use ClaimId::*;
        matches!(
            self,
            Thm3_1 | Thm3_4 | Thm3_6 | Thm3_7 | Cor3_8 | Thm3_9 | Thm3_11 | Cor3_12 | Thm3_13 | Cor3_14 | Thm3_15 | Thm3_16
        )
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .iter()
            .copied()
            .find(|c| c.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::input(format!("unknown claim id {s:?}")))
    }
}

/// A predicted or computed quantity. Predicates use `Bool`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Value {
    Int(u128),
    Bool(bool),
    Infinite,
}

impl Value {
    /// Integer encoding used by the line-oriented reports: booleans become
    /// 1 and 0, an infinite value becomes -1.
    pub fn as_report_int(self) -> i128 {
        match self {
            Value::Int(v) => v as i128,
            Value::Bool(b) => b as i128,
            Value::Infinite => -1,
        }
    }
}

impl From<Diameter> for Value {
    fn from(d: Diameter) -> Self {
        match d {
            Diameter::Finite(v) => Value::Int(v as u128),
            Diameter::Infinite => Value::Infinite,
        }
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as u128)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Confirmed,
    Discrepant,
    HypothesisNotMet,
    BudgetExceeded,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Discrepant => "discrepant",
            Verdict::HypothesisNotMet => "hypothesis-not-met",
            Verdict::BudgetExceeded => "budget-exceeded",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evidence for a disagreement. Each variant states a fact about the
/// record's subject graph that [`Witness::check`] re-establishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The set is fixing.
    FixingSet(VertexSet),
    /// A non-identity automorphism fixing every vertex of `fixed`.
    Surviving { fixed: VertexSet, automorphism: Permutation },
    /// A non-identity automorphism.
    Automorphism(Permutation),
    /// A permutation that is not an automorphism.
    NonAutomorphism(Permutation),
    /// An automorphism of a two-factor product that does not act
    /// coordinate-wise.
    NonProductAutomorphism(Permutation),
    /// A non-empty proper vertex set with no edge leaving it.
    Component(VertexSet),
    /// Edges of a spanning tree.
    SpanningTree(Vec<(usize, usize)>),
    /// A pair realising the diameter.
    Distance { u: usize, v: usize, distance: Diameter },
    TwinStatus { a: usize, b: usize, kind: TwinKind, twins: bool },
    DegreeMismatch { vertex: usize, formula: usize },
    NeighborhoodMismatch { vertex: usize, formula: VertexSet },
    /// `|Stab(fixed)| = order`.
    GroupOrder { fixed: VertexSet, order: u128 },
}

impl Witness {
    pub fn check(&self, subject: &Graph, limits: &Limits) -> Result<bool> {
        let n = subject.order();
        let is_nontrivial_auto = |p: &Permutation| p.len() == n && !p.is_identity() && subject.is_automorphism(p);
        Ok(match self {
            Witness::FixingSet(s) => {
                s.check_range(n).is_ok() && crate::fixing::is_fixing_set(subject, s, limits)?
            }
            Witness::Surviving { fixed, automorphism } => {
                is_nontrivial_auto(automorphism) && fixed.iter().all(|v| v < n && automorphism.fixes(v))
            }
            Witness::Automorphism(p) => is_nontrivial_auto(p),
            Witness::NonAutomorphism(p) => p.len() == n && !subject.is_automorphism(p),
            Witness::NonProductAutomorphism(p) => {
                let orders = subject.product_index().map(|ix| ix.factor_orders());
                match orders {
                    Some(&[m1, m2]) => is_nontrivial_auto(p) && split_pair(p, m1, m2).is_none(),
                    _ => false,
                }
            }
            Witness::Component(s) => {
                s.check_range(n).is_ok()
                    && !s.is_empty()
                    && s.len() < n
                    && s.iter().all(|v| subject.neighbors(v).all(|w| s.contains(w)))
            }
            Witness::SpanningTree(edges) => {
                let mut parent: Vec<usize> = (0..n).collect();
                fn find(p: &mut [usize], mut x: usize) -> usize {
                    while p[x] != x {
                        x = p[x];
                    }
                    x
                }
                edges.len() + 1 == n
                    && edges.iter().all(|&(u, v)| {
                        if u >= n || v >= n || !subject.has_edge(u, v) {
                            return false;
                        }
                        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                        parent[a] = b;
                        a != b
                    })
            }
            Witness::Distance { u, v, distance } => {
                let d = match subject.distance(*u, *v)? {
                    Some(d) => Diameter::Finite(d),
                    None => Diameter::Infinite,
                };
                d == *distance && subject.diameter() == d
            }
            Witness::TwinStatus { a, b, kind, twins } => {
                *a < n && *b < n && a != b && subject.are_twins(*a, *b, *kind) == *twins
            }
            Witness::DegreeMismatch { vertex, formula } => subject.degree(*vertex)? != *formula,
            Witness::NeighborhoodMismatch { vertex, formula } => subject.open_neighborhood(*vertex)? != *formula,
            Witness::GroupOrder { fixed, order } => stabilizer_order(subject, fixed, limits)? == *order,
        })
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::FixingSet(s) => write!(f, "fixing-set {s}"),
            Witness::Surviving { fixed, automorphism } => write!(f, "surviving {automorphism} fixes {fixed}"),
            Witness::Automorphism(p) => write!(f, "automorphism {p}"),
            Witness::NonAutomorphism(p) => write!(f, "non-automorphism {p}"),
            Witness::NonProductAutomorphism(p) => write!(f, "non-product-automorphism {p}"),
            Witness::Component(s) => write!(f, "component {s}"),
            Witness::SpanningTree(edges) => {
                f.write_str("spanning-tree ")?;
                for (k, (u, v)) in edges.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{u}-{v}")?;
                }
                Ok(())
            }
            Witness::Distance { u, v, distance } => write!(f, "distance d({u},{v}) = {distance}"),
            Witness::TwinStatus { a, b, kind, twins } => {
                let k = match kind {
                    TwinKind::False => "false",
                    TwinKind::True => "true",
                };
                write!(f, "{k}-twins({a},{b}) = {twins}")
            }
            Witness::DegreeMismatch { vertex, formula } => write!(f, "degree of {vertex} differs from formula {formula}"),
            Witness::NeighborhoodMismatch { vertex, formula } => {
                write!(f, "neighbourhood of {vertex} differs from formula {formula}")
            }
            Witness::GroupOrder { fixed, order } => write!(f, "|Stab({fixed})| = {order}"),
        }
    }
}

/// One claim instantiated on one instance.
#[derive(Clone, Debug)]
pub struct VerificationRecord {
    pub claim: ClaimId,
    /// Construction expression of the instance.
    pub instance: String,
    pub predicted: Option<Value>,
    pub computed: Option<Value>,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Interpretation notes, unmet hypotheses or budget messages.
    pub note: Option<String>,
    /// The graph the witness speaks about.
    pub subject: Option<Graph>,
}

impl VerificationRecord {
    /// Discrepant records need a witness that checks out on the subject;
    /// other verdicts are valid as they stand.
    pub fn witness_is_valid(&self, limits: &Limits) -> bool {
        if self.verdict != Verdict::Discrepant {
            return true;
        }
        match (&self.witness, &self.subject) {
            (Some(w), Some(g)) => w.check(g, limits).unwrap_or(false),
            _ => false,
        }
    }
}

/// Result of a closed-form prediction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prediction {
    Value { value: usize, note: Option<String> },
    HypothesisNotMet(String),
}

/// `fix(P_s * P_t)` by the piecewise formula, symmetric in `s` and `t`.
pub fn paths_fix(s: usize, t: usize) -> Option<usize> {
    let (s, t) = (s.min(t), s.max(t));
    match (s, t) {
        (s, _) if s < 2 => None,
        (s, _) if s >= 4 => Some(1),
        (2, t) if t >= 4 => Some(2),
        (2, 2) | (2, 3) => Some(3),
        (3, 3) => Some(5),
        (3, t) => Some(t + 1),
        _ => None,
    }
}

/// `|G1||G2| − rs` for factors with `r` and `s` false-twin classes.
pub fn twin_classes_fix(m1: usize, m2: usize, r: usize, s: usize) -> usize {
    m1 * m2 - r * s
}

/// `m1·m2 + m1 + m2 − 3` for two stars with `m1` and `m2` leaves.
pub fn stars_fix(m1: usize, m2: usize) -> usize {
    m1 * m2 + m1 + m2 - 3
}

/// `m1(m2 − 1)` for a path of order `m1` and a null graph of order `m2`.
pub fn path_null_fix(m1: usize, m2: usize) -> usize {
    m1 * (m2 - 1)
}

/// `m1(m2 − 1) + fix(G1)` for a star factor with `m2` leaves.
pub fn star_factor_fix(m1: usize, m2: usize, fix1: usize) -> usize {
    m1 * (m2 - 1) + fix1
}

/// `n(Σ m_i − l) + k·fix(G2)` with `n = |G2|`, `l` false-twin classes of
/// sizes `m_i` and `k` dominating vertices in the first factor.
pub fn dominating_twins_fix(n: usize, class_sizes: &[usize], k: usize, fix2: usize) -> usize {
    n * (class_sizes.iter().sum::<usize>() - class_sizes.len()) + k * fix2
}

struct Facts {
    order: u128,
    rigid: bool,
    dominating: usize,
    false_twins: bool,
}

impl Facts {
    fn of(g: &Graph, limits: &Limits) -> Result<Self> {
        let order = stabilizer_chain(g, &VertexSet::new(), limits)?.order();
        Ok(Facts {
            order,
            rigid: order == 1,
            dominating: g.dominating_vertices().len(),
            false_twins: g.twin_partition(TwinKind::False).has_twins(),
        })
    }
}

fn fix_of(g: &Graph, limits: &Limits) -> Result<usize> {
    Ok(fixing_number(g, limits)?.fix)
}

fn swapped_note(swapped: bool) -> Option<String> {
    swapped.then(|| "hypotheses matched with the factors in the other order".to_string())
}

/// Tries `test(g1, g2)`, then `test(g2, g1)`: the product is commutative up
/// to isomorphism, so either orientation instantiates the claim.
fn oriented<'a, T>(
    g1: &'a Graph,
    g2: &'a Graph,
    mut test: impl FnMut(&'a Graph, &'a Graph) -> Result<Option<T>>,
) -> Result<Option<(T, bool)>> {
    if let Some(t) = test(g1, g2)? {
        return Ok(Some((t, false)));
    }
    Ok(test(g2, g1)?.map(|t| (t, true)))
}

fn not_met(msg: &str) -> Result<Prediction> {
    Ok(Prediction::HypothesisNotMet(msg.to_string()))
}

/// The closed-form fixing number a claim predicts for `G1 * G2`.
pub fn predicted_fix(claim: ClaimId, g1: &Graph, g2: &Graph, limits: &Limits) -> Result<Prediction> {
    let value = |value: usize, swapped: bool| Prediction::Value { value, note: swapped_note(swapped) };
    match claim {
        ClaimId::Thm3_1 => {
            let strong = Products::from(limits).strong(&g1.complement(), &g2.complement())?;
            Ok(Prediction::Value { value: fix_of(&strong, limits)?, note: None })
        }
        ClaimId::Thm3_4 => match (as_path(g1), as_path(g2)) {
            (Some(s), Some(t)) if s >= 2 && t >= 2 => Ok(value(paths_fix(s, t).expect("orders >= 2"), false)),
            _ => not_met("both factors must be paths on at least 2 vertices"),
        },
        ClaimId::Thm3_6 => {
            if are_isomorphic(g1, g2, limits)?.is_some() {
                return not_met("factors are isomorphic");
            }
            let (f1, f2) = (Facts::of(g1, limits)?, Facts::of(g2, limits)?);
            let case2 = |a: &Facts, b: &Facts| a.rigid && a.dominating == 0 && !b.rigid && !b.false_twins;
            let case = if f1.rigid && f2.rigid {
                1
            } else if case2(&f1, &f2) || case2(&f2, &f1) {
                2
            } else if !f1.rigid
                && !f2.rigid
                && f1.dominating == 0
                && f2.dominating == 0
                && !f1.false_twins
                && !f2.false_twins
            {
                3
            } else {
                return not_met("none of the three cases applies");
            };
            let value = fix_of(g1, limits)?.max(fix_of(g2, limits)?);
            Ok(Prediction::Value { value, note: Some(format!("case {case}")) })
        }
        ClaimId::Thm3_7 => {
            let hit = oriented(g1, g2, |a, b| {
                let (fa, fb) = (Facts::of(a, limits)?, Facts::of(b, limits)?);
                let ok = fa.rigid && fa.dominating > 0 && !fb.rigid && !fb.false_twins;
                Ok(if ok { Some(2 * fix_of(b, limits)?) } else { None })
            })?;
            match hit {
                Some((v, s)) => Ok(value(v, s)),
                None => not_met("needs a rigid factor with a dominating vertex and a non-rigid factor without false twins"),
            }
        }
        ClaimId::Cor3_8 => {
            let hit = oriented(g1, g2, |a, b| {
                let fa = Facts::of(a, limits)?;
                if !(fa.rigid && fa.dominating > 0) {
                    return Ok(None);
                }
                Ok(match (as_path(b), as_cycle(b)) {
                    (Some(n), _) if n >= 4 => Some(2),
                    (_, Some(n)) if n >= 5 => Some(4),
                    _ => None,
                })
            })?;
            match hit {
                Some((v, s)) => Ok(value(v, s)),
                None => not_met("needs a rigid factor with a dominating vertex and a path (n >= 4) or cycle (n >= 5)"),
            }
        }
        ClaimId::Thm3_9 => {
            let hit = oriented(g1, g2, |a, b| {
                let k = a.dominating_vertices().len();
                let tp = a.twin_partition(TwinKind::False);
                let sizes: Vec<usize> = tp.nontrivial().map(VertexSet::len).collect();
                if k == 0 || sizes.is_empty() || b.twin_partition(TwinKind::False).has_twins() {
                    return Ok(None);
                }
                Ok(Some(dominating_twins_fix(b.order(), &sizes, k, fix_of(b, limits)?)))
            })?;
            match hit {
                Some((v, s)) => {
                    let mut note = String::from("the undefined multiplier n is read as |G2|");
                    if s {
                        note.push_str("; hypotheses matched with the factors in the other order");
                    }
                    Ok(Prediction::Value { value: v, note: Some(note) })
                }
                None => not_met("needs dominating vertices and false twins in one factor and no false twins in the other"),
            }
        }
        ClaimId::Thm3_11 => {
            let (t1, t2) = (g1.twin_partition(TwinKind::False), g2.twin_partition(TwinKind::False));
            if !t1.all_classes_nontrivial() || !t2.all_classes_nontrivial() {
                return not_met("every false-twin class of both factors must have at least 2 vertices");
            }
            Ok(value(twin_classes_fix(g1.order(), g2.order(), t1.classes.len(), t2.classes.len()), false))
        }
        ClaimId::Cor3_12 => match (as_complete_multipartite(g1), as_complete_multipartite(g2)) {
            (Some(p1), Some(p2)) => Ok(value(twin_classes_fix(g1.order(), g2.order(), p1.len(), p2.len()), false)),
            _ => not_met("both factors must be complete multipartite"),
        },
        ClaimId::Thm3_13 => {
            let hit = oriented(g1, g2, |a, b| {
                let ok = a.is_connected()
                    && !a.twin_partition(TwinKind::False).has_twins()
                    && b.twin_partition(TwinKind::False).all_classes_nontrivial();
                Ok(if ok { Some(a.order() * fix_of(b, limits)?) } else { None })
            })?;
            match hit {
                Some((v, s)) => Ok(value(v, s)),
                None => not_met("needs a connected twin-free factor and a factor whose false-twin classes all have size >= 2"),
            }
        }
        ClaimId::Cor3_14 => {
            let hit = oriented(g1, g2, |a, b| {
                Ok(match (as_path(a), as_null(b)) {
                    (Some(m1), Some(m2)) if m2 >= 2 => Some(path_null_fix(m1, m2)),
                    _ => None,
                })
            })?;
            match hit {
                Some((v, s)) => Ok(value(v, s)),
                None => not_met("needs a path and a null graph on at least 2 vertices"),
            }
        }
        ClaimId::Thm3_15 => {
            let hit = oriented(g1, g2, |a, b| {
                if a.twin_partition(TwinKind::False).has_twins() {
                    return Ok(None);
                }
                match as_star(b) {
                    Some(m2) => Ok(Some(star_factor_fix(a.order(), m2, fix_of(a, limits)?))),
                    None => Ok(None),
                }
            })?;
            match hit {
                Some((v, s)) => Ok(value(v, s)),
                None => not_met("needs a factor without false twins and a star"),
            }
        }
        ClaimId::Thm3_16 => match (as_star(g1), as_star(g2)) {
            (Some(m1), Some(m2)) if m1 >= 2 && m2 >= 2 => Ok(value(stars_fix(m1, m2), false)),
            _ => not_met("both factors must be stars with at least 2 leaves"),
        },
        other => Err(Error::input(format!("{other} does not predict a fixing number"))),
    }
}

enum Outcome {
    Checked {
        predicted: Value,
        computed: Value,
        agree: bool,
        witness: Option<Witness>,
        subject: Graph,
        note: Option<String>,
    },
    NotMet(String),
}

impl Outcome {
    fn compare(predicted: Value, computed: Value, witness: Option<Witness>, subject: Graph, note: Option<String>) -> Self {
        let agree = predicted == computed;
        Outcome::Checked { predicted, computed, agree, witness: if agree { None } else { witness }, subject, note }
    }

    fn holds(witness: Option<Witness>, subject: Graph) -> Self {
        let holds = witness.is_none();
        Outcome::compare(Value::Bool(true), Value::Bool(holds), witness, subject, None)
    }
}

fn describe(factors: &[Graph]) -> String {
    let labels: Vec<String> = factors
        .iter()
        .map(|g| g.label().map_or_else(|| format!("graph[{}]", g.order()), ToString::to_string))
        .collect();
    match labels.len() {
        1 => labels[0].clone(),
        _ => format!("conormal({})", labels.join(",")),
    }
}

/// Checks `claim` on the given factors. Never fails: problems become the
/// record's verdict.
pub fn verify_claim(claim: ClaimId, factors: &[Graph], limits: &Limits) -> VerificationRecord {
    let mut record = VerificationRecord {
        claim,
        instance: describe(factors),
        predicted: None,
        computed: None,
        verdict: Verdict::HypothesisNotMet,
        witness: None,
        note: None,
        subject: None,
    };
    match run(claim, factors, limits) {
        Ok(Outcome::Checked { predicted, computed, agree, witness, subject, note }) => {
            record.predicted = Some(predicted);
            record.computed = Some(computed);
            record.verdict = if agree { Verdict::Confirmed } else { Verdict::Discrepant };
            record.witness = witness;
            record.note = note;
            record.subject = Some(subject);
        }
        Ok(Outcome::NotMet(msg)) => record.note = Some(msg),
        Err(e @ (Error::Budget { .. } | Error::SizeCap { .. })) => {
            record.verdict = Verdict::BudgetExceeded;
            record.note = Some(e.to_string());
        }
        Err(e) => record.note = Some(e.to_string()),
    }
    record
}

fn two(factors: &[Graph]) -> Result<(&Graph, &Graph)> {
    match factors {
        [a, b] => Ok((a, b)),
        _ => Err(Error::input(format!("this claim takes two factors, got {}", factors.len()))),
    }
}

fn one(factors: &[Graph], limits: &Limits) -> Result<Graph> {
    match factors {
        [] => Err(Error::input("no graph given")),
        [g] => Ok(g.clone()),
        _ => Products::from(limits).conormal_k(factors),
    }
}

fn chain(g: &Graph, fixed: &[usize], limits: &Limits) -> Result<StabilizerChain> {
    stabilizer_chain(g, &fixed.iter().copied().collect(), limits)
}

fn with_identity(chain: &StabilizerChain) -> Vec<Permutation> {
    let mut v = Vec::from([Permutation::identity(chain.degree())]);
    v.extend(chain.generators().iter().cloned());
    v
}

/// Witness for a fixing-number prediction that disagrees with `r`.
fn fix_witness(subject: &Graph, predicted: usize, r: &FixingResult, limits: &Limits) -> Result<Option<Witness>> {
    use core::cmp::Ordering::*;
    Ok(match predicted.cmp(&r.fix) {
        Equal => None,
        Greater => Some(Witness::FixingSet(r.witness.clone())),
        Less => {
            let fixed: VertexSet = r.witness.iter().take(predicted).collect();
            let automorphism = surviving_automorphism(subject, &fixed, limits)?
                .expect("sets smaller than the fixing number are not fixing");
            Some(Witness::Surviving { fixed, automorphism })
        }
    })
}

fn spanning_tree(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut seen = alloc::vec![false; n];
    seen[0] = true;
    let mut queue = alloc::collections::VecDeque::from([0usize]);
    let mut edges = Vec::new();
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                edges.push((u.min(w), u.max(w)));
                queue.push_back(w);
            }
        }
    }
    edges
}

fn diameter_pair(g: &Graph) -> Result<Witness> {
    let n = g.order();
    let mut best = (0, 0, Diameter::Finite(0));
    for u in 0..n {
        for (v, d) in g.distances_from(u)?.into_iter().enumerate() {
            let d = d.map_or(Diameter::Infinite, Diameter::Finite);
            if d > best.2 {
                best = (u, v, d);
            }
        }
    }
    Ok(Witness::Distance { u: best.0, v: best.1, distance: best.2 })
}

/// A generator of `Aut(product)` outside the coordinate-wise subgroup.
fn non_product_generator(product: &Graph, m1: usize, m2: usize, limits: &Limits) -> Result<Option<Witness>> {
    let c = chain(product, &[], limits)?;
    Ok(c.generators()
        .iter()
        .find(|p| split_pair(p, m1, m2).is_none())
        .cloned()
        .map(Witness::NonProductAutomorphism))
}

fn run(claim: ClaimId, factors: &[Graph], limits: &Limits) -> Result<Outcome> {
    use ClaimId::*;
    let products = Products::from(limits);
    if claim.takes_single_graph() {
        return run_single(claim, one(factors, limits)?, limits);
    }
    let (g1, g2) = two(factors)?;
    let (m1, m2) = (g1.order(), g2.order());
    let p = products.conormal(g1, g2)?;
    let n = p.order();
    if claim.predicts_fix() {
        let (value, note) = match predicted_fix(claim, g1, g2, limits)? {
            Prediction::Value { value, note } => (value, note),
            Prediction::HypothesisNotMet(msg) => return Ok(Outcome::NotMet(msg)),
        };
        let r = fixing_number(&p, limits)?;
        let mut witness = fix_witness(&p, value, &r, limits)?;
        let mut agree = value == r.fix;
        let mut note = note;
        if claim == Thm3_1 {
            let strong = products.strong(&g1.complement(), &g2.complement())?;
            let same = p.complement() == strong;
            agree &= same;
            if !same {
                note = Some("the complement of the product differs from the strong product of complements".into());
                witness = witness.or(Some(Witness::FixingSet(r.witness.clone())));
            }
        }
        return Ok(Outcome::Checked {
            predicted: value.into(),
            computed: r.fix.into(),
            agree,
            witness: if agree { None } else { witness },
            subject: p,
            note,
        });
    }
    let outcome = match claim {
        Obs1 => {
            let mut bad = None;
            for f in 0..n {
                let formula = conormal_degree(g1, g2, f / m2, f % m2)?;
                if formula != p.deg(f) {
                    bad = Some(Witness::DegreeMismatch { vertex: f, formula });
                    break;
                }
            }
            Outcome::holds(bad, p)
        }
        Obs2 => {
            let mut bad = None;
            for f in 0..n {
                let formula = conormal_neighborhood(g1, g2, f / m2, f % m2)?;
                if formula != p.open_neighborhood(f)? {
                    bad = Some(Witness::NeighborhoodMismatch { vertex: f, formula });
                    break;
                }
            }
            Outcome::holds(bad, p)
        }
        Thm2_1 => {
            let computed = p.is_connected();
            let witness = if computed {
                Witness::SpanningTree(spanning_tree(&p))
            } else {
                Witness::Component(p.components().swap_remove(0))
            };
            Outcome::compare(Value::Bool(predicted_connected(g1, g2)), Value::Bool(computed), Some(witness), p, None)
        }
        Thm2_2 => {
            let cases = match predicted_diameters(g1, g2) {
                Some(c) if !c.is_empty() => c,
                _ => return Ok(Outcome::NotMet("no case of the diameter statement applies".into())),
            };
            let computed = p.diameter();
            let (case, predicted) = cases.iter().copied().find(|&(_, d)| d != computed).unwrap_or(cases[0]);
            let listed: Vec<String> = cases.iter().map(|(c, d)| format!("case {c}: {d}")).collect();
            let witness = diameter_pair(&p)?;
            let note = Some(format!("checked {}; reported case {case}", listed.join(", ")));
            Outcome::compare(predicted.into(), computed.into(), Some(witness), p, note)
        }
        Thm2_4 => {
            let (c1, c2) = (chain(g1, &[], limits)?, chain(g2, &[], limits)?);
            let mut maps: Vec<Permutation> = Vec::new();
            for a in with_identity(&c1) {
                for b in with_identity(&c2) {
                    maps.push(pair_map(&a, &b));
                }
            }
            if let Some(phi) = are_isomorphic(g1, g2, limits)? {
                let psi = phi.inverse();
                let images = (0..n).map(|f| psi.apply(f % m2) * m2 + phi.apply(f / m2)).collect();
                maps.push(Permutation::from_images(images)?);
            }
            let bad = maps.into_iter().find(|q| !p.is_automorphism(q)).map(Witness::NonAutomorphism);
            Outcome::holds(bad, p)
        }
        Cor2_5 => {
            let mut bad = None;
            'outer: for f in 0..n {
                let (i, j) = (f / m2, f % m2);
                let (s1, s2) = (chain(g1, &[i], limits)?, chain(g2, &[j], limits)?);
                let lifts = s1
                    .generators()
                    .iter()
                    .map(|a| pair_map(a, &Permutation::identity(m2)))
                    .chain(s2.generators().iter().map(|b| pair_map(&Permutation::identity(m1), b)));
                for q in lifts {
                    if !p.is_automorphism(&q) || !q.fixes(f) {
                        bad = Some(Witness::NonAutomorphism(q));
                        break 'outer;
                    }
                }
            }
            Outcome::holds(bad, p)
        }
        Prop2_8 => {
            let classes: Vec<VertexSet> = g2.twin_partition(TwinKind::True).nontrivial().cloned().collect();
            if classes.is_empty() {
                return Ok(Outcome::NotMet("the second factor has no true twins".into()));
            }
            let mut bad = None;
            'outer: for i in 0..m1 {
                let dominating = g1.deg(i) + 1 == m1;
                for class in &classes {
                    for (x, j) in class.iter().enumerate() {
                        for l in class.iter().skip(x + 1) {
                            let (a, b) = (i * m2 + j, i * m2 + l);
                            let twins = p.are_twins(a, b, TwinKind::True);
                            if twins != dominating {
                                bad = Some(Witness::TwinStatus { a, b, kind: TwinKind::True, twins });
                                break 'outer;
                            }
                        }
                    }
                }
            }
            Outcome::holds(bad, p)
        }
        Prop2_9 => {
            let c2 = chain(g2, &[], limits)?;
            let anchors = g1.dominating_vertices();
            if anchors.is_empty() || c2.order() == 1 {
                return Ok(Outcome::NotMet("needs a dominating vertex in the first factor and a non-rigid second factor".into()));
            }
            let bad = anchors
                .iter()
                .flat_map(|k| c2.generators().iter().map(move |psi| rotation_map(m1, k, psi)))
                .find(|q| !p.is_automorphism(q))
                .map(Witness::NonAutomorphism);
            Outcome::holds(bad, p)
        }
        Thm2_10 => {
            let anchors: Vec<usize> = (0..m1).filter(|&k| g1.deg(k) + 1 != m1).collect();
            let group = automorphisms(g2, limits)?;
            if anchors.is_empty() || group.is_trivial() {
                return Ok(Outcome::NotMet("needs a non-dominating vertex in the first factor and a non-rigid second factor".into()));
            }
            let mut bad = None;
            'outer: for &k in &anchors {
                for psi in &group.elements()[1..] {
                    let claimed = (0..m2).all(|j| psi.fixes(j) || g2.are_twins(j, psi.apply(j), TwinKind::False));
                    let q = rotation_map(m1, k, psi);
                    let actual = p.is_automorphism(&q);
                    if claimed != actual {
                        bad = Some(if actual { Witness::Automorphism(q) } else { Witness::NonAutomorphism(q) });
                        break 'outer;
                    }
                }
            }
            Outcome::holds(bad, p)
        }
        Cor2_11 => {
            let mut predicted = 0usize;
            let mut computed = 0usize;
            let mut bad = None;
            for a in 0..n {
                for b in a + 1..n {
                    let claimed = !interchange_conditions(g1, g2, (a / m2, a % m2), (b / m2, b % m2)).is_empty();
                    let t = Permutation::transposition(n, a, b);
                    let actual = p.is_automorphism(&t);
                    predicted += claimed as usize;
                    computed += actual as usize;
                    if claimed != actual && bad.is_none() {
                        bad = Some(if actual { Witness::Automorphism(t) } else { Witness::NonAutomorphism(t) });
                    }
                }
            }
            let agree = bad.is_none();
            let note = Some("values count interchange pairs: listed by the conditions vs. actual".to_string());
            Outcome::Checked { predicted: predicted.into(), computed: computed.into(), agree, witness: bad, subject: p, note }
        }
        Thm2_12 | Cor2_13 => {
            let (f1, f2) = (Facts::of(g1, limits)?, Facts::of(g2, limits)?);
            if f1.rigid || f2.rigid || are_isomorphic(g1, g2, limits)?.is_some() {
                return Ok(Outcome::NotMet("needs two non-isomorphic non-rigid factors".into()));
            }
            let clean = |f: &Facts| !f.false_twins && f.dominating == 0;
            let predicted = clean(&f1) && clean(&f2);
            if claim == Thm2_12 {
                let order = chain(&p, &[], limits)?.order();
                let computed = order == f1.order * f2.order;
                let witness = if computed {
                    Some(Witness::GroupOrder { fixed: VertexSet::new(), order })
                } else {
                    non_product_generator(&p, m1, m2, limits)?
                };
                Outcome::compare(Value::Bool(predicted), Value::Bool(computed), witness, p, None)
            } else {
                let mut mismatch = None;
                for f in 0..n {
                    let order = chain(&p, &[f], limits)?.order();
                    let split = chain(g1, &[f / m2], limits)?.order() * chain(g2, &[f % m2], limits)?.order();
                    if order != split {
                        mismatch = Some(Witness::GroupOrder { fixed: VertexSet::from([f]), order });
                        break;
                    }
                }
                let computed = mismatch.is_none();
                let witness = match mismatch {
                    Some(w) => Some(w),
                    None => Some(Witness::GroupOrder { fixed: VertexSet::from([0]), order: chain(&p, &[0], limits)?.order() }),
                };
                Outcome::compare(Value::Bool(predicted), Value::Bool(computed), witness, p, None)
            }
        }
        Thm2_15 => {
            let (f1, f2) = (Facts::of(g1, limits)?, Facts::of(g2, limits)?);
            if !f1.rigid || f2.rigid {
                return Ok(Outcome::NotMet("needs a rigid first factor and a non-rigid second factor".into()));
            }
            let predicted = f1.dominating == 0 && !f2.false_twins;
            let order = chain(&p, &[], limits)?.order();
            let computed = order == f2.order;
            let witness = if computed {
                Some(Witness::GroupOrder { fixed: VertexSet::new(), order })
            } else {
                non_product_generator(&p, m1, m2, limits)?
            };
            Outcome::compare(Value::Bool(predicted), Value::Bool(computed), witness, p, None)
        }
        Cor2_16 | Thm2_17 => {
            let (f1, f2) = (Facts::of(g1, limits)?, Facts::of(g2, limits)?);
            let met = if claim == Cor2_16 {
                f1.rigid && f1.dominating == 0 && as_path(g2).is_some_and(|k| k >= 4)
            } else {
                f1.rigid && f2.rigid && are_isomorphic(g1, g2, limits)?.is_some()
            };
            if !met {
                let msg = if claim == Cor2_16 {
                    "needs a rigid first factor without a dominating vertex and a path on at least 4 vertices"
                } else {
                    "needs two isomorphic rigid factors"
                };
                return Ok(Outcome::NotMet(msg.into()));
            }
            let order = chain(&p, &[], limits)?.order();
            let witness = Witness::GroupOrder { fixed: VertexSet::new(), order };
            Outcome::compare(Value::Int(2), Value::Int(order), Some(witness), p, None)
        }
        Thm2_18 => {
            let (f1, f2) = (Facts::of(g1, limits)?, Facts::of(g2, limits)?);
            let predicted = f1.rigid && f2.rigid && are_isomorphic(g1, g2, limits)?.is_none();
            let c = chain(&p, &[], limits)?;
            let computed = c.order() == 1;
            let witness = match c.generators().first() {
                Some(q) => Witness::Automorphism(q.clone()),
                None => Witness::GroupOrder { fixed: VertexSet::new(), order: 1 },
            };
            Outcome::compare(Value::Bool(predicted), Value::Bool(computed), Some(witness), p, None)
        }
        Lemma3_3 => {
            let dominating = g1.dominating_vertices();
            if dominating.is_empty() {
                return Ok(Outcome::NotMet("the first factor has no dominating vertex".into()));
            }
            if n > 16 {
                return Ok(Outcome::NotMet("exhaustive minimum-set enumeration is limited to 16 vertices".into()));
            }
            let need = fix_of(g2, limits)?;
            let sets = minimum_fixing_sets(&p, limits)?;
            let mut bad = None;
            'outer: for g in dominating.iter() {
                let fib = fiber(&p, 0, g)?;
                for s in &sets {
                    if s.intersection_len(&fib) < need {
                        bad = Some(Witness::FixingSet(s.clone()));
                        break 'outer;
                    }
                }
            }
            Outcome::holds(bad, p)
        }
        Lemma3_5 => {
            let (f1, f2) = (Facts::of(g1, limits)?, Facts::of(g2, limits)?);
            if !(f1.rigid && f1.dominating == 0 && !f2.rigid && !f2.false_twins) {
                return Ok(Outcome::NotMet(
                    "needs a rigid first factor without a dominating vertex and a non-rigid second factor without false twins".into(),
                ));
            }
            let mut bad = None;
            for f in 0..n {
                let order = chain(&p, &[f], limits)?.order();
                if order != chain(g2, &[f % m2], limits)?.order() {
                    bad = Some(Witness::GroupOrder { fixed: VertexSet::from([f]), order });
                    break;
                }
            }
            Outcome::holds(bad, p)
        }
        Thm3_10 => {
            let (lower, upper) = fix_bounds_conormal(g1, g2, limits)?;
            let r = fixing_number(&p, limits)?;
            let inside = lower <= r.fix && r.fix <= upper;
            let witness = (!inside).then(|| Witness::FixingSet(r.witness.clone()));
            let note = Some(format!("bounds {lower}..={upper}, fix = {}", r.fix));
            Outcome::compare(Value::Bool(true), Value::Bool(inside), witness, p, note)
        }
        _ => unreachable!("single-graph and fixing-number claims are handled above"),
    };
    Ok(outcome)
}

fn run_single(claim: ClaimId, g: Graph, limits: &Limits) -> Result<Outcome> {
    let c = chain(&g, &[], limits)?;
    let order = c.order();
    Ok(match claim {
        ClaimId::Obs3 => {
            if order == 1 {
                return Ok(Outcome::NotMet("the graph is rigid".into()));
            }
            let roots = c.orbit_roots();
            let mut size = alloc::vec![0u128; g.order()];
            for &r in &roots {
                size[r] += 1;
            }
            let regular = (0..g.order()).find(|&v| size[v] == order);
            let r = fixing_number(&g, limits)?;
            let computed = r.fix == 1;
            let witness = match regular {
                Some(v) if !computed => {
                    let fixed = VertexSet::from([v]);
                    surviving_automorphism(&g, &fixed, limits)?
                        .map(|automorphism| Witness::Surviving { fixed, automorphism })
                }
                _ => Some(Witness::FixingSet(r.witness.clone())),
            };
            let note = Some(format!("|Aut| = {order}, fix = {}", r.fix));
            Outcome::compare(Value::Bool(regular.is_some()), Value::Bool(computed), witness, g, note)
        }
        ClaimId::Obs5 => {
            if order != 1 {
                return Ok(Outcome::NotMet("the graph is not rigid".into()));
            }
            let d = g.dominating_vertices();
            let bad = (d.len() > 1).then(|| {
                let s = d.as_slice();
                Witness::Automorphism(Permutation::transposition(g.order(), s[0], s[1]))
            });
            Outcome::holds(bad, g)
        }
        ClaimId::Prop3_2 => {
            let Some(v) = g.dominating_vertices().first() else {
                return Ok(Outcome::NotMet("the graph has no dominating vertex".into()));
            };
            if order != 1 || g.order() < 2 {
                return Ok(Outcome::NotMet("needs a rigid graph on at least 2 vertices".into()));
            }
            let rest = g.remove_vertex(v)?;
            let bad = chain(&rest, &[], limits)?.generators().first().cloned().map(Witness::Automorphism);
            Outcome::holds(bad, rest)
        }
        _ => unreachable!("only single-graph claims reach here"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_multipartite, cycle, null, path, star};
    use crate::symmetry::{first_rigid_graph, first_rigid_tree};

    fn lim() -> Limits {
        Limits::default()
    }

    fn check(claim: ClaimId, factors: &[Graph]) -> VerificationRecord {
        let r = verify_claim(claim, factors, &lim());
        assert!(r.witness_is_valid(&lim()), "{claim} on {}: {:?}", r.instance, r.witness);
        r
    }

    #[test]
    fn ids_round_trip() {
        assert_eq!(ClaimId::ALL.len(), 34);
        for &c in ClaimId::ALL {
            assert_eq!(c.as_str().parse::<ClaimId>().unwrap(), c);
        }
        assert!("Thm9.9".parse::<ClaimId>().is_err());
    }

    #[test]
    fn formulas() {
        assert_eq!(paths_fix(2, 5), Some(2));
        assert_eq!(paths_fix(5, 2), Some(2));
        assert_eq!(paths_fix(3, 3), Some(5));
        assert_eq!(paths_fix(3, 6), Some(7));
        assert_eq!(paths_fix(1, 6), None);
        assert_eq!(twin_classes_fix(4, 6, 2, 2), 20);
        assert_eq!(stars_fix(2, 2), 5);
        assert_eq!(stars_fix(2, 2), paths_fix(3, 3).unwrap());
    }

    #[test]
    fn predictions_from_graphs() {
        let p = |n| path(n).unwrap();
        assert_eq!(
            predicted_fix(ClaimId::Thm3_4, &p(2), &p(5), &lim()).unwrap(),
            Prediction::Value { value: 2, note: None }
        );
        let (a, b) = (complete_multipartite(&[2, 2]).unwrap(), complete_multipartite(&[3, 3]).unwrap());
        assert_eq!(
            predicted_fix(ClaimId::Cor3_12, &a, &b, &lim()).unwrap(),
            Prediction::Value { value: 20, note: None }
        );
        let s = star(2).unwrap();
        assert_eq!(
            predicted_fix(ClaimId::Thm3_16, &s, &s, &lim()).unwrap(),
            Prediction::Value { value: 5, note: None }
        );
        assert!(matches!(
            predicted_fix(ClaimId::Thm3_4, &p(3), &cycle(4).unwrap(), &lim()).unwrap(),
            Prediction::HypothesisNotMet(_)
        ));
        assert!(predicted_fix(ClaimId::Obs1, &p(3), &p(3), &lim()).is_err());
    }

    #[test]
    fn record_examples() {
        let r = check(ClaimId::Thm3_4, &[path(2).unwrap(), path(2).unwrap()]);
        assert_eq!((r.predicted, r.computed, r.verdict), (Some(Value::Int(3)), Some(Value::Int(3)), Verdict::Confirmed));
        let r = check(ClaimId::Thm3_1, &[path(3).unwrap(), path(4).unwrap()]);
        assert_eq!(r.verdict, Verdict::Confirmed);
        let r = check(ClaimId::Obs3, &[cycle(6).unwrap()]);
        assert_eq!(r.verdict, Verdict::Confirmed);
        assert_eq!(r.computed, Some(Value::Bool(false)));
        let r = check(ClaimId::Thm3_11, &[complete_multipartite(&[2, 2]).unwrap(), complete_multipartite(&[2, 2]).unwrap()]);
        assert_eq!((r.predicted, r.verdict), (Some(Value::Int(12)), Verdict::Confirmed));
    }

    #[test]
    fn discrepancies_carry_witnesses() {
        // A single-edge factor with a null factor gives C4, which is connected.
        let r = check(ClaimId::Thm2_1, &[path(2).unwrap(), null(2).unwrap()]);
        assert_eq!(r.verdict, Verdict::Discrepant);
        assert!(matches!(r.witness, Some(Witness::SpanningTree(_))));
        let r = check(ClaimId::Cor3_14, &[path(3).unwrap(), null(2).unwrap()]);
        assert_eq!((r.predicted, r.computed), (Some(Value::Int(3)), Some(Value::Int(4))));
        assert_eq!(r.verdict, Verdict::Discrepant);
        assert!(matches!(r.witness, Some(Witness::Surviving { .. })));
    }

    #[test]
    fn structural_claims() {
        let pool = [path(3).unwrap(), path(4).unwrap(), cycle(4).unwrap(), star(3).unwrap(), null(2).unwrap()];
        for a in &pool {
            for b in &pool {
                for claim in [ClaimId::Obs1, ClaimId::Obs2, ClaimId::Thm2_4, ClaimId::Cor2_5, ClaimId::Prop2_9] {
                    let r = check(claim, &[a.clone(), b.clone()]);
                    assert_ne!(r.verdict, Verdict::Discrepant, "{claim} {}", r.instance);
                }
                let r = check(ClaimId::Thm3_10, &[a.clone(), b.clone()]);
                assert_eq!(r.verdict, Verdict::Confirmed, "{}", r.instance);
            }
        }
    }

    #[test]
    fn rigid_claims() {
        let t = first_rigid_tree(7, &lim()).unwrap().unwrap();
        let r6 = first_rigid_graph(6, &lim()).unwrap().unwrap();
        assert_eq!(check(ClaimId::Thm2_17, &[t.clone(), t.clone()]).verdict, Verdict::Confirmed);
        assert_eq!(check(ClaimId::Thm2_18, &[t.clone(), r6.clone()]).verdict, Verdict::Confirmed);
        assert_eq!(check(ClaimId::Thm2_18, &[t.clone(), t.clone()]).verdict, Verdict::Confirmed);
        let k1 = null(1).unwrap();
        let coned = crate::products::join(&k1, &r6).unwrap();
        assert_eq!(check(ClaimId::Prop3_2, &[coned.clone()]).verdict, Verdict::Confirmed);
        assert_eq!(check(ClaimId::Obs5, &[coned]).verdict, Verdict::Confirmed);
        assert_eq!(check(ClaimId::Prop3_2, &[path(3).unwrap()]).verdict, Verdict::HypothesisNotMet);
    }

    #[test]
    fn budget_becomes_verdict() {
        let l = Limits { max_product_vertices: 4, ..lim() };
        let r = verify_claim(ClaimId::Thm3_4, &[path(3).unwrap(), path(3).unwrap()], &l);
        assert_eq!(r.verdict, Verdict::BudgetExceeded);
        let r = verify_claim(ClaimId::Thm3_4, &[path(3).unwrap()], &lim());
        assert_eq!(r.verdict, Verdict::HypothesisNotMet);
        assert!(r.note.is_some());
    }
}

//! Certificates of membership in the class of fibered links generated from
//! the positive Hopf link by positive Hopf plumbing steps whose cut surface
//! satisfies the coefficient condition (*), plus connected sums.
//!
//! A certificate is a derivation tree that stores only combinatorial data
//! (words, trees, positions). [`verify`] recomputes every polynomial from
//! scratch and checks, at each plumbing step `L₊ = L₀ + Hopf band`:
//!
//! * the skein relation `Δ(L₊) = Δ(L₋) + (t^{1/2} - t^{-1/2}) Δ(L₀)`;
//! * condition (*): the coefficient `c` of `t^{b₁(Σ₋)/2}` in `Δ(L₋)` is ≤ 1;
//! * the coefficient bookkeeping `α(L₊) = α(L₀)` and
//!   `β(L₊) = c - α(L₀) + β(L₀)`.

use serde::{Deserialize, Serialize};

use crate::alexander::{braid_poly, tree_poly};
use crate::braid::PositiveBraidWord;
use crate::error::{Error, Result};
use crate::laurent::{ConwayParity, HalfLaurent};
use crate::surfaces::betti_data;
use crate::tree::PlaneTree;

pub const CERTIFICATE_SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PCertificate {
    /// The positive Hopf link.
    HopfBase,
    /// `word` has equal letters at 1-based positions `square_at` and
    /// `square_at + 1`. `L₀` drops one of them, `L₋` drops both.
    BraidStep {
        word: PositiveBraidWord,
        square_at: usize,
        l_minus_b1: usize,
        child: Box<PCertificate>,
    },
    /// `L₀` is the plumbing of `tree` minus `leaf`; `L₋` is the connected
    /// sum over `forest`, the tree minus `leaf` and its parent.
    TreeStep {
        tree: PlaneTree,
        leaf: usize,
        forest: Vec<PlaneTree>,
        l_minus_b1: usize,
        child: Box<PCertificate>,
    },
    SumStep {
        left: Box<PCertificate>,
        right: Box<PCertificate>,
    },
}

/// On-disk form: the certificate tree under a schema version.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub schema: u32,
    pub certificate: PCertificate,
}

impl PCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            PCertificate::HopfBase => "hopf_base",
            PCertificate::BraidStep { .. } => "braid_step",
            PCertificate::TreeStep { .. } => "tree_step",
            PCertificate::SumStep { .. } => "sum_step",
        }
    }

    /// Number of nodes in the derivation.
    pub fn size(&self) -> usize {
        match self {
            PCertificate::HopfBase => 1,
            PCertificate::BraidStep { child, .. } | PCertificate::TreeStep { child, .. } => {
                1 + child.size()
            }
            PCertificate::SumStep { left, right } => 1 + left.size() + right.size(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&CertificateFile {
            schema: CERTIFICATE_SCHEMA,
            certificate: self.clone(),
        })
        .expect("certificates always serialize")
    }

    /// Reads either a [`CertificateFile`] or a bare certificate node.
    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        if value.get("schema").is_some() {
            let file: CertificateFile = serde_json::from_value(value.clone())?;
            reject_unknown_fields(&file.certificate, &value["certificate"])?;
            if file.schema != CERTIFICATE_SCHEMA {
                return Err(serde::de::Error::custom(format!(
                    "unsupported schema {}",
                    file.schema
                )));
            }
            Ok(file.certificate)
        } else {
            let cert: PCertificate = serde_json::from_value(value.clone())?;
            reject_unknown_fields(&cert, &value)?;
            Ok(cert)
        }
    }
}

/// Unit variants of an internally tagged enum ignore extra keys, so
/// `deny_unknown_fields` alone does not catch `{"kind": "hopf_base", "x": 1}`
/// inside a tree. The parsed certificate must serialize back to its input.
fn reject_unknown_fields(
    cert: &PCertificate,
    value: &serde_json::Value,
) -> std::result::Result<(), serde_json::Error> {
    if serde_json::to_value(cert)? == *value {
        Ok(())
    } else {
        Err(serde::de::Error::custom(
            "certificate contains unknown fields",
        ))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StarCheck {
    pub holds: bool,
    pub c: i64,
}

/// Condition (*): the coefficient of `t^{b1_minus/2}` in `Δ(L₋)` is at most 1.
pub fn condition_star(delta_minus: &HalfLaurent, b1_minus: usize) -> StarCheck {
    let c = delta_minus.coeff(b1_minus as i64);
    StarCheck { holds: c <= 1, c }
}

/// Builds a certificate for the closure of a non-split positive braid word
/// whose closure is not the unknot.
pub fn certify_braid(word: &PositiveBraidWord) -> Result<PCertificate> {
    if word.strands() < 2 {
        return Err(Error::NotInScope(format!("{word} has a single strand")));
    }
    if !word.has_full_support() {
        return Err(Error::NotInScope(format!("{word} closes to a split link")));
    }
    if word.factor_single_occurrence()?.is_empty() {
        return Err(Error::NotInScope(format!("{word} closes to the unknot")));
    }
    certify_nontrivial(word)
}

fn certify_nontrivial(word: &PositiveBraidWord) -> Result<PCertificate> {
    let factors = word.factor_single_occurrence()?;
    match factors.as_slice() {
        [] => Err(Error::NotInScope(format!("{word} closes to the unknot"))),
        [only] if only == word => certify_prime(word),
        [only] => certify_nontrivial(only),
        [first, rest @ ..] => {
            let mut acc = certify_nontrivial(first)?;
            for f in rest {
                acc = certify_sum(acc, certify_nontrivial(f)?);
            }
            Ok(acc)
        }
    }
}

/// `word` has full support and every generator occurs at least twice.
fn certify_prime(word: &PositiveBraidWord) -> Result<PCertificate> {
    let (b1, _) = betti_data(word);
    if b1 == 1 {
        return Ok(PCertificate::HopfBase);
    }
    let rewritten = word.find_square_rewrite()?;
    let j = rewritten
        .square_position()
        .expect("rewrite returns a word with a square");
    let l_minus = rewritten.without_pair(j);
    let child = certify_nontrivial(&rewritten.without(j))?;
    Ok(PCertificate::BraidStep {
        l_minus_b1: betti_data(&l_minus).0,
        square_at: j + 1,
        word: rewritten,
        child: Box::new(child),
    })
}

/// Peels off the deepest, then leftmost, leaf until a single vertex remains.
pub fn certify_tree(tree: &PlaneTree) -> Result<PCertificate> {
    if tree.is_empty() {
        return Err(Error::NotInScope("empty tree".into()));
    }
    let Some(leaf) = tree.deepest_leftmost_leaf() else {
        return Ok(PCertificate::HopfBase);
    };
    let forest = tree.forest_without_leaf_and_parent(leaf)?;
    let child = certify_tree(&tree.remove_leaf(leaf)?)?;
    Ok(PCertificate::TreeStep {
        tree: tree.clone(),
        leaf,
        l_minus_b1: forest.iter().map(PlaneTree::len).sum(),
        forest,
        child: Box::new(child),
    })
}

pub fn certify_sum(a: PCertificate, b: PCertificate) -> PCertificate {
    PCertificate::SumStep {
        left: Box::new(a),
        right: Box::new(b),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeRecord {
    /// `$` for the root, then `.child`, `.left`, `.right`.
    pub path: String,
    pub kind: &'static str,
    pub degree_doubled: i64,
    pub alpha: i64,
    pub beta: i64,
    /// Coefficient `c` in condition (*), for plumbing steps.
    pub star_coefficient: Option<i64>,
    pub b1_minus: Option<usize>,
    pub checks: Vec<Check>,
}

impl NodeRecord {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub path: String,
    pub check: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub degree_doubled: i64,
    pub alpha: i64,
    pub beta: i64,
    pub polynomial: HalfLaurent,
    /// Preorder.
    pub nodes: Vec<NodeRecord>,
    /// First failing check in preorder, if any.
    pub failure: Option<Failure>,
}

/// Recomputes everything the certificate claims. Total: malformed
/// certificates come back invalid with the offending node named.
pub fn verify(cert: &PCertificate) -> VerificationReport {
    let mut nodes = Vec::new();
    let delta = verify_node(cert, "$".to_string(), &mut nodes);
    let summary = delta.summarize();
    let mut failure = nodes.iter().find_map(|n| {
        n.checks.iter().find(|c| !c.passed).map(|c| Failure {
            path: n.path.clone(),
            check: c.name.to_string(),
        })
    });
    let root_holds = !summary.is_zero && summary.alpha == 1 && summary.beta <= -1;
    if failure.is_none() && !root_holds {
        failure = Some(Failure {
            path: "$".into(),
            check: "root_coefficients".into(),
        });
    }
    VerificationReport {
        valid: failure.is_none(),
        degree_doubled: summary.degree_doubled,
        alpha: summary.alpha,
        beta: summary.beta,
        polynomial: delta,
        nodes,
        failure,
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: &'static str, passed: bool) -> bool {
        self.0.push(Check { name, passed });
        passed
    }
}

/// Checks shared by braid and tree plumbing steps. `expected_zero` is the
/// independently recomputed `Δ(L₀)`.
fn plumbing_checks(
    checks: &mut Checks,
    plus: &HalfLaurent,
    zero: &HalfLaurent,
    expected_zero: &HalfLaurent,
    minus: &HalfLaurent,
    b1_minus: usize,
) -> StarCheck {
    checks.push("child_link_matches", zero == expected_zero);
    checks.push(
        "skein_identity",
        *plus == minus + &(&HalfLaurent::skein_factor() * zero),
    );
    let star = condition_star(minus, b1_minus);
    checks.push("condition_star", star.holds);

    let (sp, s0, sm) = (plus.summarize(), zero.summarize(), minus.summarize());
    let degree_ok = !sp.is_zero && !s0.is_zero && sp.degree_doubled == s0.degree_doubled + 1;
    checks.push("degree_drop", degree_ok);
    checks.push(
        "l_minus_degree_bound",
        sm.is_zero || sm.degree_doubled <= sp.degree_doubled - 2,
    );
    checks.push("leading_coefficient_identity", sp.alpha == s0.alpha);
    // c at t^{b/2 - 1}; equals the (*) coefficient unless the cut separates,
    // in which case L₋ is split and both vanish
    let c = minus.coeff(sp.degree_doubled - 2);
    checks.push(
        "second_coefficient_identity",
        sp.beta == c - s0.alpha + s0.beta,
    );
    star
}

fn parity_ok(delta: &HalfLaurent, components: usize) -> bool {
    delta.conway_parity() == ConwayParity::expected_for_components(components)
}

fn verify_node(cert: &PCertificate, path: String, nodes: &mut Vec<NodeRecord>) -> HalfLaurent {
    let slot = nodes.len();
    nodes.push(NodeRecord {
        path: path.clone(),
        kind: cert.kind(),
        degree_doubled: 0,
        alpha: 0,
        beta: 0,
        star_coefficient: None,
        b1_minus: None,
        checks: Vec::new(),
    });
    let mut checks = Checks(Vec::new());
    let mut star = None;
    let mut b1_minus = None;

    let delta = match cert {
        PCertificate::HopfBase => HalfLaurent::skein_factor(),
        PCertificate::SumStep { left, right } => {
            let a = verify_node(left, format!("{path}.left"), nodes);
            let b = verify_node(right, format!("{path}.right"), nodes);
            let product = &a * &b;
            let (sa, sb, sp) = (a.summarize(), b.summarize(), product.summarize());
            checks.push(
                "leading_coefficient_multiplies",
                sp.alpha == sa.alpha * sb.alpha,
            );
            checks.push(
                "degree_adds",
                sp.degree_doubled == sa.degree_doubled + sb.degree_doubled,
            );
            product
        }
        PCertificate::BraidStep {
            word,
            square_at,
            l_minus_b1,
            child,
        } => {
            let zero = verify_node(child, format!("{path}.child"), nodes);
            let plus = braid_poly(word);
            b1_minus = Some(*l_minus_b1);
            let fibered_shape = checks.push(
                "full_support",
                word.strands() >= 2 && word.has_full_support(),
            );
            let in_range = *square_at >= 1 && *square_at < word.len();
            checks.push("square_at_in_range", in_range);
            if fibered_shape && in_range {
                let j = square_at - 1;
                if checks.push("square_present", word.letters()[j] == word.letters()[j + 1]) {
                    let l_minus = word.without_pair(j);
                    checks.push("b1_minus_matches", *l_minus_b1 == betti_data(&l_minus).0);
                    let minus = braid_poly(&l_minus);
                    let expected_zero = braid_poly(&word.without(j));
                    star = Some(plumbing_checks(
                        &mut checks,
                        &plus,
                        &zero,
                        &expected_zero,
                        &minus,
                        *l_minus_b1,
                    ));
                    checks.push(
                        "fibered_degree",
                        plus.summarize().degree_doubled == betti_data(word).0 as i64,
                    );
                    checks.push("conway_parity", parity_ok(&plus, word.closure_components()));
                }
            }
            plus
        }
        PCertificate::TreeStep {
            tree,
            leaf,
            forest,
            l_minus_b1,
            child,
        } => {
            let zero = verify_node(child, format!("{path}.child"), nodes);
            let plus = tree_poly(tree);
            b1_minus = Some(*l_minus_b1);
            let leaf_ok = *leaf != 0 && tree.is_leaf(*leaf);
            if checks.push("leaf_valid", leaf_ok) {
                let actual = tree
                    .forest_without_leaf_and_parent(*leaf)
                    .expect("leaf validated");
                let mut stored: Vec<String> = forest.iter().map(ToString::to_string).collect();
                let mut recomputed: Vec<String> = actual.iter().map(ToString::to_string).collect();
                stored.sort();
                recomputed.sort();
                checks.push("forest_matches", stored == recomputed);
                let forest_b1: usize = actual.iter().map(PlaneTree::len).sum();
                checks.push("b1_minus_matches", *l_minus_b1 == forest_b1);
                let minus: HalfLaurent = actual.iter().map(tree_poly).product();
                let expected_zero = tree_poly(&tree.remove_leaf(*leaf).expect("leaf validated"));
                star = Some(plumbing_checks(
                    &mut checks,
                    &plus,
                    &zero,
                    &expected_zero,
                    &minus,
                    *l_minus_b1,
                ));
                checks.push(
                    "fibered_degree",
                    plus.summarize().degree_doubled == tree.len() as i64,
                );
                // boundary components ≡ χ = 1 - b₁ (mod 2)
                let components_parity = (tree.len() + 1) % 2;
                let expected = if components_parity == 1 {
                    ConwayParity::SymmetricIntegral
                } else {
                    ConwayParity::AntisymmetricHalf
                };
                checks.push("conway_parity", plus.conway_parity() == expected);
            }
            plus
        }
    };

    let s = delta.summarize();
    let record = &mut nodes[slot];
    record.degree_doubled = s.degree_doubled;
    record.alpha = s.alpha;
    record.beta = s.beta;
    record.star_coefficient = star.map(|s| s.c);
    record.b1_minus = b1_minus;
    record.checks = checks.0;
    delta
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ItoReport {
    pub word: PositiveBraidWord,
    pub summands: usize,
    pub polynomial: HalfLaurent,
    pub beta: i64,
    pub holds: bool,
}

/// For a connected sum of prime positive braid knots, `-β` equals the number
/// of summands. Each input word must close to a knot.
pub fn ito_summand_check(summands: &[PositiveBraidWord]) -> Result<ItoReport> {
    if summands.is_empty() {
        return Err(Error::InvalidArgument("no summands given".into()));
    }
    if let Some(bad) = summands.iter().find(|w| w.closure_components() != 1) {
        return Err(Error::InvalidArgument(format!(
            "{bad} does not close to a knot"
        )));
    }
    let word = summands[1..]
        .iter()
        .fold(summands[0].clone(), |acc, w| acc.connected_sum(w));
    let polynomial = braid_poly(&word);
    let beta = polynomial.summarize().beta;
    Ok(ItoReport {
        holds: -beta == summands.len() as i64,
        summands: summands.len(),
        word,
        polynomial,
        beta,
    })
}

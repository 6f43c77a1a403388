//! Remote-state-preparation protocol runners.
//!
//! Every protocol follows the same skeleton: the parties share an invariant
//! resource state, Alice applies the inverse preparation unitary to each of
//! her slots and measures them, and each remote party applies a
//! parameter-independent correction keyed by the announced outcome. The
//! runners enumerate every measurement branch exactly, classify it, and
//! report the branch table together with a resource ledger; sampling replays
//! the same distribution with a seeded generator.
//!
//! Three flavors exist:
//!
//! * [`ProtocolKind::Exact`]: fully correctable ensembles, every branch
//!   succeeds.
//! * [`ProtocolKind::Probabilistic`]: some branches end in a declared
//!   failure; the success probability is strictly between 0 and 1 in
//!   general.
//! * [`ProtocolKind::Joint`]: two senders measure in sequence and the state
//!   appears at the third party.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dark::{self, DarkStateError, DarkStateSpec};
use crate::ensembles::{
    correction_unitary, preparation_unitary, rotated_basis, EnsembleError, EnsembleSpec, Params,
};
use crate::quantum::{Party, PureState, QuantumError, INVARIANT_TOL};
use crate::random::trial_rng;
use rand::Rng;

/// A marginal matches a rotated-basis element when its fidelity is within
/// this tolerance of one.
const MATCH_TOL: f64 = INVARIANT_TOL;

#[derive(Debug, Error, PartialEq)]
pub enum ProtocolError {
    #[error("incompatible combination: {reason}")]
    Incompatible { reason: String },
    #[error("branch {outcome:?} left a remote party without a matched basis element")]
    UnmatchedBranch { outcome: Vec<usize> },
    #[error("sampling needs at least one trial")]
    ZeroTrials,
    #[error(transparent)]
    Resource(#[from] DarkStateError),
    #[error(transparent)]
    Ensemble(#[from] EnsembleError),
    #[error(transparent)]
    Quantum(#[from] QuantumError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProtocolKind {
    Exact,
    Probabilistic,
    Joint,
}

impl std::fmt::Display for ProtocolKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ProtocolKind::Exact => "exact",
            ProtocolKind::Probabilistic => "probabilistic",
            ProtocolKind::Joint => "joint",
        })
    }
}

/// How probabilistic branches are classified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classifier {
    /// Alice declares failure whenever her announced indices disagree,
    /// without inspecting the post-measurement state. This is the rule the
    /// closed-form success probability of the superposed four-qubit
    /// resource describes.
    Strict,
    /// Branches are classified by the actual post-measurement state: a
    /// disagreeing-index branch still succeeds when each remote party is
    /// left holding a correctable basis element.
    SeparabilityAware,
}

/// How many classical bits each message is charged in the ledger.
///
/// Exact and joint runs always charge the announced digit, `log2(d)` bits
/// per message; this knob only affects probabilistic runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CbitAccounting {
    /// Alphabet of correctable indices only; failure is signalled out of
    /// band.
    SuccessOnly,
    /// Correctable indices plus an explicit failure symbol.
    SuccessFail,
    /// Alice broadcasts her full measurement outcome.
    FullOutcome,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProtocolConfig {
    pub kind: ProtocolKind,
    pub resource: DarkStateSpec,
    pub ensemble: EnsembleSpec,
    pub params: Params,
    pub classifier: Classifier,
    pub accounting: CbitAccounting,
}

impl ProtocolConfig {
    /// Config with the default strict classifier and success-plus-failure
    /// message accounting.
    pub fn new(
        kind: ProtocolKind,
        resource: DarkStateSpec,
        ensemble: EnsembleSpec,
        params: Params,
    ) -> Self {
        ProtocolConfig {
            kind,
            resource,
            ensemble,
            params,
            classifier: Classifier::Strict,
            accounting: CbitAccounting::SuccessFail,
        }
    }
}

/// Classical message sent to one remote party for one branch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Message {
    /// Apply the correction for this rotated-basis index.
    Correction { index: usize },
    /// The branch is a declared failure; discard the state.
    Fail,
}

/// One measurement branch of an enumerated run.
///
/// Branches of probability zero are kept for completeness but carry no
/// messages or fidelities. `fidelities` holds, per remote party in index
/// order, the overlap of that party's final marginal with the target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutcomeRecord {
    pub outcome: Vec<usize>,
    pub probability: f64,
    pub messages: Vec<Message>,
    pub fidelities: Vec<f64>,
    pub success: bool,
}

/// Entanglement and communication cost of one protocol run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResourceLedger {
    /// Entanglement entropy of the resource across the Alice | remote cut.
    pub ebits: f64,
    /// Number of remote parties.
    pub parties: usize,
    /// Number of classical messages sent.
    pub messages: usize,
    /// Bits charged per message.
    pub cbits_per_message: f64,
    /// Total classical cost, `messages * cbits_per_message`.
    pub cbits_total: f64,
}

/// Seeded empirical replay of the enumerated branch distribution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SamplingSummary {
    pub trials: u64,
    pub seed: u64,
    /// Hit counts aligned with the transcript's records.
    pub counts: Vec<u64>,
    pub empirical_success_rate: f64,
}

/// Full result of one protocol run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Transcript {
    pub config: ProtocolConfig,
    pub steps: Vec<String>,
    pub records: Vec<OutcomeRecord>,
    pub success_probability: f64,
    pub ledger: ResourceLedger,
    pub sampling: Option<SamplingSummary>,
}

/// Checks that the protocol flavor, resource, and ensemble fit together.
pub fn check_combination(
    kind: ProtocolKind,
    resource: &DarkStateSpec,
    ensemble: &EnsembleSpec,
) -> Result<(), ProtocolError> {
    resource.validate()?;
    ensemble.validate()?;
    let rd = resource.subsystem_dim();
    let ed = ensemble.dimension();
    if rd != ed {
        return Err(ProtocolError::Incompatible {
            reason: format!(
                "resource subsystems have dimension {rd} but the {} family prepares dimension {ed}",
                ensemble.family_name()
            ),
        });
    }
    match kind {
        ProtocolKind::Exact => {
            if matches!(resource, DarkStateSpec::SuperposedFourQubit { .. }) {
                Err(ProtocolError::Incompatible {
                    reason: "the superposed four-qubit resource has declared-failure branches; \
                             run it as a probabilistic protocol"
                        .into(),
                })
            } else if !ensemble.is_fully_correctable() {
                Err(ProtocolError::Incompatible {
                    reason: format!(
                        "exact runs need a fully correctable family, but {} corrects only \
                         indices {:?}",
                        ensemble.family_name(),
                        ensemble.correctable_indices()
                    ),
                })
            } else {
                Ok(())
            }
        }
        ProtocolKind::Probabilistic => match resource {
            DarkStateSpec::SuperposedFourQubit { .. } | DarkStateSpec::Antisymmetric { .. } => {
                Ok(())
            }
            _ => Err(ProtocolError::Incompatible {
                reason: "probabilistic runs use the superposed four-qubit resource or a single \
                         antisymmetric resource"
                    .into(),
            }),
        },
        ProtocolKind::Joint => {
            if !matches!(resource, DarkStateSpec::Antisymmetric { d: 3 }) {
                Err(ProtocolError::Incompatible {
                    reason: "joint runs use the three-qutrit antisymmetric resource".into(),
                })
            } else if !ensemble.is_fully_correctable() {
                Err(ProtocolError::Incompatible {
                    reason: format!(
                        "joint runs need a fully correctable family, got {}",
                        ensemble.family_name()
                    ),
                })
            } else {
                Ok(())
            }
        }
    }
}

/// Enumerates every branch of the configured protocol.
pub fn run(config: &ProtocolConfig) -> Result<Transcript, ProtocolError> {
    check_combination(config.kind, &config.resource, &config.ensemble)?;
    config.ensemble.validate_params(&config.params)?;
    match config.kind {
        ProtocolKind::Exact => run_single_round(config, true),
        ProtocolKind::Probabilistic => run_single_round(config, false),
        ProtocolKind::Joint => run_joint_inner(config),
    }
}

/// Enumerates the branches, then replays the distribution with a seeded
/// generator and attaches the empirical counts.
pub fn run_sampled(
    config: &ProtocolConfig,
    trials: u64,
    seed: u64,
) -> Result<Transcript, ProtocolError> {
    if trials == 0 {
        return Err(ProtocolError::ZeroTrials);
    }
    let mut transcript = run(config)?;
    let live: Vec<usize> = transcript
        .records
        .iter()
        .enumerate()
        .filter(|(_, r)| r.probability > 0.0)
        .map(|(i, _)| i)
        .collect();
    let mut counts = vec![0u64; transcript.records.len()];
    let mut successes = 0u64;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let draw: f64 = rng.gen();
        let mut acc = 0.0;
        let mut chosen = *live.last().expect("at least one branch has positive probability");
        for &i in &live {
            acc += transcript.records[i].probability;
            if draw < acc {
                chosen = i;
                break;
            }
        }
        counts[chosen] += 1;
        if transcript.records[chosen].success {
            successes += 1;
        }
    }
    transcript.sampling = Some(SamplingSummary {
        trials,
        seed,
        counts,
        empirical_success_rate: successes as f64 / trials as f64,
    });
    Ok(transcript)
}

/// Exact run with default classification and accounting.
pub fn run_exact(
    resource: DarkStateSpec,
    ensemble: EnsembleSpec,
    params: Params,
) -> Result<Transcript, ProtocolError> {
    run(&ProtocolConfig::new(ProtocolKind::Exact, resource, ensemble, params))
}

/// Probabilistic run with an explicit classifier and default accounting.
pub fn run_probabilistic(
    resource: DarkStateSpec,
    ensemble: EnsembleSpec,
    params: Params,
    classifier: Classifier,
) -> Result<Transcript, ProtocolError> {
    let mut config =
        ProtocolConfig::new(ProtocolKind::Probabilistic, resource, ensemble, params);
    config.classifier = classifier;
    run(&config)
}

/// Joint run: two senders, one receiver.
pub fn run_joint(
    resource: DarkStateSpec,
    ensemble: EnsembleSpec,
    params: Params,
) -> Result<Transcript, ProtocolError> {
    run(&ProtocolConfig::new(ProtocolKind::Joint, resource, ensemble, params))
}

/// Measure-once protocols: Alice transforms and measures all her slots,
/// then every branch is classified by per-party marginal matching. With
/// `exact` set, an unsuccessful branch is an invariant violation.
fn run_single_round(config: &ProtocolConfig, exact: bool) -> Result<Transcript, ProtocolError> {
    let resource_state = dark::build(&config.resource)?;
    let basis = rotated_basis(&config.ensemble, &config.params)?;
    let prep = preparation_unitary(&config.ensemble, &config.params)?;
    let inverse_prep = prep.dagger();
    let alice_slots = resource_state.layout().slots_of(Party::Alice);

    let mut working = resource_state.clone();
    for &slot in &alice_slots {
        working = working.apply_unitary(&inverse_prep, &[slot])?;
    }

    let n_parties = config.resource.remote_parties();
    let mut records = Vec::new();
    let mut success_probability = 0.0;
    for branch in working.measure_projective(&alice_slots)? {
        match branch.post_state {
            None => records.push(OutcomeRecord {
                outcome: branch.outcome,
                probability: 0.0,
                messages: Vec::new(),
                fidelities: Vec::new(),
                success: false,
            }),
            Some(rest) => {
                let veto = !exact
                    && config.classifier == Classifier::Strict
                    && matches!(config.resource, DarkStateSpec::SuperposedFourQubit { .. })
                    && branch.outcome.windows(2).any(|w| w[0] != w[1]);
                let (messages, fidelities, success) =
                    inspect_parties(&rest, &config.ensemble, &basis, veto)?;
                if exact && !success {
                    return Err(ProtocolError::UnmatchedBranch { outcome: branch.outcome });
                }
                if success {
                    success_probability += branch.probability;
                }
                records.push(OutcomeRecord {
                    outcome: branch.outcome,
                    probability: branch.probability,
                    messages,
                    fidelities,
                    success,
                });
            }
        }
    }

    let d = config.ensemble.dimension();
    let cbits_per_message = if exact {
        (d as f64).log2()
    } else {
        let correctable = config.ensemble.correctable_indices().len();
        match config.accounting {
            CbitAccounting::SuccessOnly => (correctable as f64).log2(),
            CbitAccounting::SuccessFail => ((correctable + 1) as f64).log2(),
            CbitAccounting::FullOutcome => (d as f64).log2() * alice_slots.len() as f64,
        }
    };
    let ledger = ResourceLedger {
        ebits: resource_state.entanglement_entropy(&alice_slots)?,
        parties: n_parties,
        messages: n_parties,
        cbits_per_message,
        cbits_total: cbits_per_message * n_parties as f64,
    };

    let mut steps = vec![
        format!("shared resource: {}", config.resource.describe()),
        format!(
            "Alice applies the inverse preparation unitary to each of her {} slot(s)",
            alice_slots.len()
        ),
        "Alice measures her slots in the computational basis and announces per-party indices"
            .to_string(),
        "each remote party applies the correction for its announced index".to_string(),
    ];
    if !exact {
        steps.push("branches without a correctable announced index are declared failures".into());
    }

    Ok(Transcript {
        config: config.clone(),
        steps,
        records,
        success_probability,
        ledger,
        sampling: None,
    })
}

/// Joint flavor: Alice and Bob measure in sequence, Charlie corrects.
fn run_joint_inner(config: &ProtocolConfig) -> Result<Transcript, ProtocolError> {
    let d = config.resource.subsystem_dim();
    let base = dark::build(&config.resource)?;
    let state = base.with_parties(vec![Party::Alice, Party::Remote(0), Party::Remote(1)])?;
    let basis = rotated_basis(&config.ensemble, &config.params)?;
    let inverse_prep = preparation_unitary(&config.ensemble, &config.params)?.dagger();

    let after_alice = state.apply_unitary(&inverse_prep, &[0])?;
    let mut records = Vec::new();
    let mut success_probability = 0.0;
    for alice_branch in after_alice.measure_projective(&[0])? {
        let alice_digit = alice_branch.outcome[0];
        match alice_branch.post_state {
            None => {
                for bob_digit in 0..d {
                    records.push(OutcomeRecord {
                        outcome: vec![alice_digit, bob_digit],
                        probability: 0.0,
                        messages: Vec::new(),
                        fidelities: Vec::new(),
                        success: false,
                    });
                }
            }
            Some(rest) => {
                let bob_slot = rest.layout().slots_of(Party::Remote(0))[0];
                let after_bob = rest.apply_unitary(&inverse_prep, &[bob_slot])?;
                for bob_branch in after_bob.measure_projective(&[bob_slot])? {
                    let outcome = vec![alice_digit, bob_branch.outcome[0]];
                    match bob_branch.post_state {
                        None => records.push(OutcomeRecord {
                            outcome,
                            probability: 0.0,
                            messages: Vec::new(),
                            fidelities: Vec::new(),
                            success: false,
                        }),
                        Some(charlie) => {
                            let probability = alice_branch.probability * bob_branch.probability;
                            let (messages, fidelities, success) =
                                inspect_parties(&charlie, &config.ensemble, &basis, false)?;
                            if !success {
                                return Err(ProtocolError::UnmatchedBranch { outcome });
                            }
                            success_probability += probability;
                            records.push(OutcomeRecord {
                                outcome,
                                probability,
                                messages,
                                fidelities,
                                success,
                            });
                        }
                    }
                }
            }
        }
    }

    // Alice tells Bob and Charlie her digit; Bob tells Charlie his.
    let cbits_per_message = (d as f64).log2();
    let ledger = ResourceLedger {
        ebits: state.entanglement_entropy(&[0])?,
        parties: 2,
        messages: 3,
        cbits_per_message,
        cbits_total: cbits_per_message * 3.0,
    };
    let steps = vec![
        format!("shared resource: {}", config.resource.describe()),
        "Alice applies the inverse preparation unitary to her slot, measures it, and announces \
         the digit"
            .to_string(),
        "Bob applies the inverse preparation unitary to his slot, measures it, and announces \
         the digit"
            .to_string(),
        "Charlie applies the correction for the one index missing from the announcements"
            .to_string(),
    ];

    Ok(Transcript {
        config: config.clone(),
        steps,
        records,
        success_probability,
        ledger,
        sampling: None,
    })
}

/// Per-party classification of one post-measurement state: match each
/// party's marginal against the rotated basis, apply the correction when one
/// exists, and report the final per-party fidelity with the target.
fn inspect_parties(
    rest: &PureState,
    ensemble: &EnsembleSpec,
    basis: &[PureState],
    veto: bool,
) -> Result<(Vec<Message>, Vec<f64>, bool), ProtocolError> {
    let mut parties: Vec<Party> = Vec::new();
    for p in rest.layout().parties() {
        if !parties.contains(p) {
            parties.push(*p);
        }
    }
    let target = &basis[0];

    let mut corrected = rest.clone();
    let mut messages = Vec::with_capacity(parties.len());
    if veto {
        messages = vec![Message::Fail; parties.len()];
    } else {
        for &party in &parties {
            let slots = corrected.layout().slots_of(party);
            let marginal = corrected.partial_trace(&slots)?;
            let mut matched = None;
            for (k, element) in basis.iter().enumerate() {
                if marginal.fidelity_with_pure(element)? >= 1.0 - MATCH_TOL {
                    matched = Some(k);
                    break;
                }
            }
            match matched {
                Some(k) => match correction_unitary(ensemble, k) {
                    Ok(fix) => {
                        corrected = corrected.apply_unitary(&fix, &slots)?;
                        messages.push(Message::Correction { index: k });
                    }
                    Err(EnsembleError::Uncorrectable { .. }) => messages.push(Message::Fail),
                    Err(other) => return Err(other.into()),
                },
                None => messages.push(Message::Fail),
            }
        }
    }

    let mut fidelities = Vec::with_capacity(parties.len());
    for &party in &parties {
        let slots = corrected.layout().slots_of(party);
        let marginal = corrected.partial_trace(&slots)?;
        fidelities.push(marginal.fidelity_with_pure(target)?);
    }
    let success = !veto && messages.iter().all(|m| matches!(m, Message::Correction { .. }));
    Ok((messages, fidelities, success))
}

/// Closed-form branch probabilities of the superposed four-qubit protocol
/// under the strict classifier.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BranchProbabilities {
    pub p00: f64,
    pub p01: f64,
    pub p10: f64,
    pub p11: f64,
    /// Probability that both announced indices agree.
    pub success: f64,
}

fn superposition_weight(a: f64, b: f64) -> Result<f64, ProtocolError> {
    let k = a * a + b * b + a * b;
    if k <= 1e-12 {
        return Err(DarkStateError::DegenerateSuperposition { a, b }.into());
    }
    Ok(k)
}

pub fn superposed_branch_probabilities(
    a: f64,
    b: f64,
) -> Result<BranchProbabilities, ProtocolError> {
    let k = superposition_weight(a, b)?;
    let p_same = a * a / (4.0 * k);
    let p_mixed = ((a + b) * (a + b) + b * b) / (4.0 * k);
    Ok(BranchProbabilities {
        p00: p_same,
        p01: p_mixed,
        p10: p_mixed,
        p11: p_same,
        success: a * a / (2.0 * k),
    })
}

/// Closed-form entanglement entropy of the superposed four-qubit resource
/// across the Alice | remote cut: the reduced state has one eigenvalue of
/// multiplicity three and one simple eigenvalue.
pub fn superposed_entanglement(a: f64, b: f64) -> Result<f64, ProtocolError> {
    let k = superposition_weight(a, b)?;
    let n2 = 1.0 / (4.0 * k);
    let triple = n2 * a * a;
    let simple = n2 * (a + 2.0 * b) * (a + 2.0 * b);
    Ok(-3.0 * xlog2(triple) - xlog2(simple))
}

fn xlog2(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::{PhaseParams, QubitParams, QutritParams, sample_params};
    use crate::quantum::EXACT_TOL;
    use crate::random::seeded_rng;
    use approx::assert_relative_eq;

    fn qubit_params(theta: f64, phi: f64) -> Params {
        Params::Qubit(QubitParams { theta, phi })
    }

    fn equatorial_phases(alphas: Vec<f64>) -> Params {
        Params::Phases(PhaseParams { alphas })
    }

    fn assert_success_fidelities(transcript: &Transcript) {
        for record in &transcript.records {
            if record.success {
                for &f in &record.fidelities {
                    assert!(f >= 1.0 - 1e-10, "success branch fidelity {f}");
                }
            }
        }
    }

    #[test]
    fn singlet_run_has_two_even_branches_with_swapped_indices() {
        let t = run_exact(
            DarkStateSpec::Singlet,
            EnsembleSpec::QubitPolarReal,
            qubit_params(1.234, 0.0),
        )
        .unwrap();
        assert_eq!(t.records.len(), 2);
        for record in &t.records {
            assert_relative_eq!(record.probability, 0.5, epsilon = EXACT_TOL);
            assert!(record.success);
        }
        assert_eq!(t.records[0].outcome, vec![0]);
        assert_eq!(t.records[0].messages, vec![Message::Correction { index: 1 }]);
        assert_eq!(t.records[1].messages, vec![Message::Correction { index: 0 }]);
        assert_relative_eq!(t.success_probability, 1.0, epsilon = EXACT_TOL);
        assert_relative_eq!(t.ledger.ebits, 1.0, epsilon = 1e-10);
        assert_relative_eq!(t.ledger.cbits_total, 1.0, epsilon = EXACT_TOL);
        assert_success_fidelities(&t);
    }

    #[test]
    fn paired_four_qubit_resources_send_swapped_party_messages() {
        let params = qubit_params(0.9, std::f64::consts::FRAC_PI_2);
        let a = run_exact(
            DarkStateSpec::FourQubitA,
            EnsembleSpec::QubitPolarImag,
            params.clone(),
        )
        .unwrap();
        let b = run_exact(DarkStateSpec::FourQubitB, EnsembleSpec::QubitPolarImag, params)
            .unwrap();
        assert_eq!(a.records.len(), 4);
        assert_eq!(b.records.len(), 4);
        for (ra, rb) in a.records.iter().zip(&b.records) {
            assert_relative_eq!(ra.probability, 0.25, epsilon = 1e-10);
            assert_relative_eq!(rb.probability, 0.25, epsilon = 1e-10);
            // First resource pairs Alice slot i with remote party i, the
            // second crosses the pairing, so the two-party messages swap.
            assert_eq!(ra.messages[0], rb.messages[1]);
            assert_eq!(ra.messages[1], rb.messages[0]);
            let x0 = ra.outcome[0];
            let x1 = ra.outcome[1];
            assert_eq!(ra.messages[0], Message::Correction { index: 1 - x0 });
            assert_eq!(ra.messages[1], Message::Correction { index: 1 - x1 });
        }
        assert_relative_eq!(a.success_probability, 1.0, epsilon = EXACT_TOL);
        assert_relative_eq!(a.ledger.ebits, 2.0, epsilon = 1e-10);
        assert_eq!(a.ledger.messages, 2);
        assert_relative_eq!(a.ledger.cbits_total, 2.0, epsilon = EXACT_TOL);
        assert_success_fidelities(&a);
        assert_success_fidelities(&b);
    }

    #[test]
    fn matching_product_routes_each_digit_to_its_partner() {
        let t = run_exact(
            DarkStateSpec::SingletMatchingProduct { m: 3, matching: vec![2, 0, 1] },
            EnsembleSpec::QubitEquatorial,
            qubit_params(std::f64::consts::FRAC_PI_2, 2.5),
        )
        .unwrap();
        assert_eq!(t.records.len(), 8);
        for record in &t.records {
            assert_relative_eq!(record.probability, 0.125, epsilon = 1e-10);
            assert!(record.success);
            // Party p was matched with the Alice slot i where matching[i] = p.
            let x = &record.outcome;
            assert_eq!(record.messages[0], Message::Correction { index: 1 - x[1] });
            assert_eq!(record.messages[1], Message::Correction { index: 1 - x[2] });
            assert_eq!(record.messages[2], Message::Correction { index: 1 - x[0] });
        }
        assert_relative_eq!(t.ledger.ebits, 3.0, epsilon = 1e-10);
        assert_relative_eq!(t.ledger.cbits_total, 3.0, epsilon = EXACT_TOL);
        assert_success_fidelities(&t);
    }

    #[test]
    fn superposed_branches_match_the_closed_form() {
        let spec = DarkStateSpec::SuperposedFourQubit { a: 1.0, b: 1.0 };
        let t = run_probabilistic(
            spec,
            EnsembleSpec::QubitPolarReal,
            qubit_params(0.8, 0.0),
            Classifier::Strict,
        )
        .unwrap();
        let expected = superposed_branch_probabilities(1.0, 1.0).unwrap();
        assert_eq!(t.records.len(), 4);
        assert_relative_eq!(t.records[0].probability, expected.p00, epsilon = 1e-10);
        assert_relative_eq!(t.records[1].probability, expected.p01, epsilon = 1e-10);
        assert_relative_eq!(t.records[2].probability, expected.p10, epsilon = 1e-10);
        assert_relative_eq!(t.records[3].probability, expected.p11, epsilon = 1e-10);
        assert_relative_eq!(expected.p00, 1.0 / 12.0, epsilon = 1e-12);
        assert_relative_eq!(expected.p01, 5.0 / 12.0, epsilon = 1e-12);
        assert_relative_eq!(t.success_probability, 1.0 / 6.0, epsilon = 1e-10);
        assert_eq!(
            t.records[0].messages,
            vec![Message::Correction { index: 1 }, Message::Correction { index: 1 }]
        );
        assert_eq!(
            t.records[3].messages,
            vec![Message::Correction { index: 0 }, Message::Correction { index: 0 }]
        );
        assert_eq!(t.records[1].messages, vec![Message::Fail, Message::Fail]);
        assert_success_fidelities(&t);
    }

    #[test]
    fn classifier_changes_the_product_endpoint_only() {
        let params = qubit_params(1.1, 0.0);
        // b = 0: the resource factorizes into same-party singlets, so the
        // disagreeing branches still hold per-party basis elements.
        let strict = run_probabilistic(
            DarkStateSpec::SuperposedFourQubit { a: 1.0, b: 0.0 },
            EnsembleSpec::QubitPolarReal,
            params.clone(),
            Classifier::Strict,
        )
        .unwrap();
        assert_relative_eq!(strict.success_probability, 0.5, epsilon = 1e-10);
        let aware = run_probabilistic(
            DarkStateSpec::SuperposedFourQubit { a: 1.0, b: 0.0 },
            EnsembleSpec::QubitPolarReal,
            params.clone(),
            Classifier::SeparabilityAware,
        )
        .unwrap();
        assert_relative_eq!(aware.success_probability, 1.0, epsilon = 1e-10);
        assert_eq!(
            aware.records[1].messages,
            vec![Message::Correction { index: 1 }, Message::Correction { index: 0 }]
        );
        // a = 0: the remote pair stays entangled on the surviving branches,
        // so both classifiers fail them.
        for classifier in [Classifier::Strict, Classifier::SeparabilityAware] {
            let t = run_probabilistic(
                DarkStateSpec::SuperposedFourQubit { a: 0.0, b: 1.0 },
                EnsembleSpec::QubitPolarReal,
                params.clone(),
                classifier,
            )
            .unwrap();
            assert_relative_eq!(t.success_probability, 0.0, epsilon = 1e-12);
            assert_relative_eq!(t.records[0].probability, 0.0, epsilon = 1e-12);
            assert!(t.records[0].messages.is_empty());
            assert_eq!(t.records[1].messages, vec![Message::Fail, Message::Fail]);
        }
        // Entangled-branch fidelity against the target is 1/2 on each side.
        let t = run_probabilistic(
            DarkStateSpec::SuperposedFourQubit { a: 0.0, b: 1.0 },
            EnsembleSpec::QubitPolarReal,
            params,
            Classifier::SeparabilityAware,
        )
        .unwrap();
        for &f in &t.records[1].fidelities {
            assert_relative_eq!(f, 0.5, epsilon = 1e-10);
        }
    }

    #[test]
    fn closed_forms_match_enumeration_on_a_grid() {
        let params = qubit_params(2.0, 0.0);
        for (a, b) in [(1.0, 1.0), (1.0, 0.0), (0.3, 1.7), (2.0, -1.0), (-1.2, 0.8), (1.0, -1.0)]
        {
            let expected = superposed_branch_probabilities(a, b).unwrap();
            let t = run_probabilistic(
                DarkStateSpec::SuperposedFourQubit { a, b },
                EnsembleSpec::QubitPolarReal,
                params.clone(),
                Classifier::Strict,
            )
            .unwrap();
            assert_relative_eq!(t.records[0].probability, expected.p00, epsilon = 1e-10);
            assert_relative_eq!(t.records[1].probability, expected.p01, epsilon = 1e-10);
            assert_relative_eq!(t.records[2].probability, expected.p10, epsilon = 1e-10);
            assert_relative_eq!(t.records[3].probability, expected.p11, epsilon = 1e-10);
            assert_relative_eq!(t.success_probability, expected.success, epsilon = 1e-10);
            let resource = dark::build(&DarkStateSpec::SuperposedFourQubit { a, b }).unwrap();
            assert_relative_eq!(
                resource.entanglement_entropy(&[0, 1]).unwrap(),
                superposed_entanglement(a, b).unwrap(),
                epsilon = 1e-9,
            );
            assert_relative_eq!(t.ledger.ebits, superposed_entanglement(a, b).unwrap(),
                epsilon = 1e-9);
        }
        assert_relative_eq!(
            superposed_entanglement(1.0, 1.0).unwrap(),
            2.0 - 0.5 * 3.0_f64.log2(),
            epsilon = 1e-12,
        );
        assert_relative_eq!(superposed_entanglement(1.0, 0.0).unwrap(), 2.0, epsilon = 1e-12);
        assert_relative_eq!(superposed_entanglement(0.0, 1.0).unwrap(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn general_qutrit_family_succeeds_one_third_of_the_time() {
        let mut rng = seeded_rng(77);
        let params = sample_params(&EnsembleSpec::QutritGeneral, &mut rng);
        let t = run_probabilistic(
            DarkStateSpec::Antisymmetric { d: 3 },
            EnsembleSpec::QutritGeneral,
            params,
            Classifier::Strict,
        )
        .unwrap();
        assert_eq!(t.records.len(), 9);
        let live: Vec<_> = t.records.iter().filter(|r| r.probability > 0.0).collect();
        assert_eq!(live.len(), 6);
        for record in &live {
            assert_relative_eq!(record.probability, 1.0 / 6.0, epsilon = 1e-10);
            let missing = 3 - record.outcome[0] - record.outcome[1];
            if missing == 0 {
                assert!(record.success);
                assert_eq!(record.messages, vec![Message::Correction { index: 0 }]);
            } else {
                assert!(!record.success);
                assert_eq!(record.messages, vec![Message::Fail]);
                // The uncorrected element is orthogonal to the target.
                assert_relative_eq!(record.fidelities[0], 0.0, epsilon = 1e-10);
            }
        }
        assert_relative_eq!(t.success_probability, 1.0 / 3.0, epsilon = 1e-10);
        assert_relative_eq!(t.ledger.ebits, 3.0_f64.log2(), epsilon = 1e-10);
    }

    #[test]
    fn restricted_families_double_the_success_rate() {
        let mut rng = seeded_rng(78);
        let params = sample_params(&EnsembleSpec::QutritRestricted, &mut rng);
        let t = run_probabilistic(
            DarkStateSpec::Antisymmetric { d: 3 },
            EnsembleSpec::QutritRestricted,
            params,
            Classifier::Strict,
        )
        .unwrap();
        assert_relative_eq!(t.success_probability, 2.0 / 3.0, epsilon = 1e-10);

        let params = sample_params(&EnsembleSpec::QuditRestricted4, &mut rng);
        let t = run_probabilistic(
            DarkStateSpec::Antisymmetric { d: 4 },
            EnsembleSpec::QuditRestricted4,
            params,
            Classifier::Strict,
        )
        .unwrap();
        assert_relative_eq!(t.success_probability, 0.5, epsilon = 1e-10);

        let params = sample_params(&EnsembleSpec::QuditGeneral { d: 4 }, &mut rng);
        let t = run_probabilistic(
            DarkStateSpec::Antisymmetric { d: 4 },
            EnsembleSpec::QuditGeneral { d: 4 },
            params,
            Classifier::Strict,
        )
        .unwrap();
        assert_relative_eq!(t.success_probability, 0.25, epsilon = 1e-10);
        let live = t.records.iter().filter(|r| r.probability > 0.0).count();
        assert_eq!(live, 24);
        assert_eq!(t.records.len(), 64);
    }

    #[test]
    fn equatorial_qutrit_run_is_exact_with_missing_index_corrections() {
        let t = run_exact(
            DarkStateSpec::Antisymmetric { d: 3 },
            EnsembleSpec::QutritEquatorial,
            equatorial_phases(vec![0.4, 5.1]),
        )
        .unwrap();
        assert_relative_eq!(t.success_probability, 1.0, epsilon = EXACT_TOL);
        let live: Vec<_> = t.records.iter().filter(|r| r.probability > 0.0).collect();
        assert_eq!(live.len(), 6);
        for record in &live {
            let missing = 3 - record.outcome[0] - record.outcome[1];
            assert_eq!(record.messages, vec![Message::Correction { index: missing }]);
        }
        assert_relative_eq!(t.ledger.ebits, 3.0_f64.log2(), epsilon = 1e-10);
        assert_relative_eq!(t.ledger.cbits_total, 3.0_f64.log2(), epsilon = EXACT_TOL);
        assert_success_fidelities(&t);
    }

    #[test]
    fn qudit_fourier_runs_are_exact_for_higher_dimensions() {
        for d in [4usize, 5] {
            let alphas: Vec<f64> = (1..d).map(|j| 0.3 * j as f64).collect();
            let t = run_exact(
                DarkStateSpec::Antisymmetric { d },
                EnsembleSpec::QuditFourier { d },
                equatorial_phases(alphas),
            )
            .unwrap();
            assert_relative_eq!(t.success_probability, 1.0, epsilon = 1e-10);
            let live = t.records.iter().filter(|r| r.probability > 0.0).count();
            let factorial: usize = (1..=d).product();
            assert_eq!(live, factorial);
            assert_relative_eq!(t.ledger.ebits, (d as f64).log2(), epsilon = 1e-10);
            assert_success_fidelities(&t);
        }
    }

    #[test]
    fn antisymmetric_product_serves_two_parties_exactly() {
        let t = run_exact(
            DarkStateSpec::AntisymmetricProduct { d: 3, m: 2 },
            EnsembleSpec::QutritEquatorial,
            equatorial_phases(vec![1.0, 2.0]),
        )
        .unwrap();
        assert_relative_eq!(t.success_probability, 1.0, epsilon = 1e-10);
        assert_eq!(t.records.len(), 81);
        let live = t.records.iter().filter(|r| r.probability > 0.0).count();
        assert_eq!(live, 36);
        assert_eq!(t.ledger.parties, 2);
        assert_relative_eq!(t.ledger.ebits, 2.0 * 3.0_f64.log2(), epsilon = 1e-10);
        assert_relative_eq!(t.ledger.cbits_total, 2.0 * 3.0_f64.log2(), epsilon = EXACT_TOL);
        assert_success_fidelities(&t);
    }

    #[test]
    fn joint_run_prepares_charlie_through_six_branches() {
        let t = run_joint(
            DarkStateSpec::Antisymmetric { d: 3 },
            EnsembleSpec::QutritEquatorial,
            equatorial_phases(vec![2.2, 0.9]),
        )
        .unwrap();
        assert_eq!(t.records.len(), 9);
        let live: Vec<_> = t.records.iter().filter(|r| r.probability > 0.0).collect();
        assert_eq!(live.len(), 6);
        for record in &live {
            assert_relative_eq!(record.probability, 1.0 / 6.0, epsilon = 1e-10);
            assert_ne!(record.outcome[0], record.outcome[1]);
            let missing = 3 - record.outcome[0] - record.outcome[1];
            assert_eq!(record.messages, vec![Message::Correction { index: missing }]);
            assert_eq!(record.fidelities.len(), 1);
            assert_relative_eq!(record.fidelities[0], 1.0, epsilon = 1e-10);
        }
        assert_relative_eq!(t.success_probability, 1.0, epsilon = 1e-10);
        assert_relative_eq!(t.ledger.ebits, 3.0_f64.log2(), epsilon = 1e-10);
        assert_eq!(t.ledger.messages, 3);
        assert_relative_eq!(t.ledger.cbits_total, 3.0 * 3.0_f64.log2(), epsilon = 1e-12);
    }

    #[test]
    fn ledger_accounting_options_change_probabilistic_message_cost() {
        let mut config = ProtocolConfig::new(
            ProtocolKind::Probabilistic,
            DarkStateSpec::SuperposedFourQubit { a: 1.0, b: 1.0 },
            EnsembleSpec::QubitPolarReal,
            qubit_params(0.4, 0.0),
        );
        let costs = [
            (CbitAccounting::SuccessOnly, 1.0),
            (CbitAccounting::SuccessFail, 3.0_f64.log2()),
            (CbitAccounting::FullOutcome, 2.0),
        ];
        for (accounting, per_message) in costs {
            config.accounting = accounting;
            let t = run(&config).unwrap();
            assert_relative_eq!(t.ledger.cbits_per_message, per_message, epsilon = 1e-12);
            assert_relative_eq!(t.ledger.cbits_total, 2.0 * per_message, epsilon = 1e-12);
        }

        let mut config = ProtocolConfig::new(
            ProtocolKind::Probabilistic,
            DarkStateSpec::Antisymmetric { d: 3 },
            EnsembleSpec::QutritGeneral,
            Params::Qutrit(QutritParams { gamma1: 0.5, gamma2: 0.6, delta: 0.7, phi: 0.8 }),
        );
        // One correctable index: nothing to send on success, one bit with an
        // explicit failure symbol.
        config.accounting = CbitAccounting::SuccessOnly;
        assert_relative_eq!(run(&config).unwrap().ledger.cbits_per_message, 0.0);
        config.accounting = CbitAccounting::SuccessFail;
        assert_relative_eq!(run(&config).unwrap().ledger.cbits_per_message, 1.0);
        config.accounting = CbitAccounting::FullOutcome;
        assert_relative_eq!(
            run(&config).unwrap().ledger.cbits_per_message,
            2.0 * 3.0_f64.log2(),
            epsilon = 1e-12,
        );
    }

    #[test]
    fn sampling_is_deterministic_and_tracks_the_distribution() {
        let config = ProtocolConfig::new(
            ProtocolKind::Probabilistic,
            DarkStateSpec::SuperposedFourQubit { a: 1.0, b: 1.0 },
            EnsembleSpec::QubitPolarReal,
            qubit_params(0.8, 0.0),
        );
        let trials = 20_000;
        let first = run_sampled(&config, trials, 7).unwrap();
        let second = run_sampled(&config, trials, 7).unwrap();
        assert_eq!(first.sampling, second.sampling);
        let summary = first.sampling.unwrap();
        assert_eq!(summary.counts.iter().sum::<u64>(), trials);
        let p = 1.0 / 6.0;
        let sigma = (p * (1.0 - p) / trials as f64).sqrt();
        assert!(
            (summary.empirical_success_rate - p).abs() < 3.0 * sigma,
            "empirical {} vs expected {p}",
            summary.empirical_success_rate,
        );
        let third = run_sampled(&config, trials, 8).unwrap();
        assert_ne!(summary.counts, third.sampling.unwrap().counts);
    }

    #[test]
    fn sampling_an_exact_run_always_succeeds() {
        let config = ProtocolConfig::new(
            ProtocolKind::Exact,
            DarkStateSpec::Singlet,
            EnsembleSpec::QubitPolarReal,
            qubit_params(0.3, 0.0),
        );
        let t = run_sampled(&config, 512, 3).unwrap();
        let summary = t.sampling.unwrap();
        assert_relative_eq!(summary.empirical_success_rate, 1.0);
        assert_eq!(summary.counts.len(), t.records.len());
    }

    #[test]
    fn zero_probability_records_never_draw_samples() {
        let config = ProtocolConfig::new(
            ProtocolKind::Probabilistic,
            DarkStateSpec::Antisymmetric { d: 3 },
            EnsembleSpec::QutritGeneral,
            Params::Qutrit(QutritParams { gamma1: 0.5, gamma2: 0.6, delta: 0.7, phi: 0.8 }),
        );
        let t = run_sampled(&config, 4_000, 21).unwrap();
        let summary = t.sampling.unwrap();
        for (record, &count) in t.records.iter().zip(&summary.counts) {
            if record.probability == 0.0 {
                assert_eq!(count, 0);
            }
        }
        let p = 1.0 / 3.0;
        let sigma: f64 = (p * (1.0 - p) / 4_000.0_f64).sqrt();
        assert!((summary.empirical_success_rate - p).abs() < 3.0 * sigma);
    }

    #[test]
    fn incompatible_combinations_are_rejected() {
        // A declared-failure resource cannot run exactly.
        let err = run_exact(
            DarkStateSpec::SuperposedFourQubit { a: 1.0, b: 1.0 },
            EnsembleSpec::QubitPolarReal,
            qubit_params(0.4, 0.0),
        )
        .unwrap_err();
        assert!(matches!(err, ProtocolError::Incompatible { .. }));
        // A partially correctable family cannot run exactly.
        let err = run_exact(
            DarkStateSpec::Antisymmetric { d: 3 },
            EnsembleSpec::QutritGeneral,
            Params::Qutrit(QutritParams { gamma1: 0.5, gamma2: 0.6, delta: 0.7, phi: 0.8 }),
        )
        .unwrap_err();
        assert!(matches!(err, ProtocolError::Incompatible { .. }));
        // Dimensions must agree.
        let err = run_exact(
            DarkStateSpec::Antisymmetric { d: 4 },
            EnsembleSpec::QutritEquatorial,
            equatorial_phases(vec![0.0, 0.0]),
        )
        .unwrap_err();
        assert!(matches!(err, ProtocolError::Incompatible { .. }));
        // Matching products are always exact resources.
        let err = run_probabilistic(
            DarkStateSpec::Singlet,
            EnsembleSpec::QubitPolarReal,
            qubit_params(0.4, 0.0),
            Classifier::Strict,
        )
        .unwrap_err();
        assert!(matches!(err, ProtocolError::Incompatible { .. }));
        // Joint runs are tied to the three-qutrit resource.
        let err = run_joint(
            DarkStateSpec::Antisymmetric { d: 4 },
            EnsembleSpec::QuditFourier { d: 4 },
            equatorial_phases(vec![0.0, 0.0, 0.0]),
        )
        .unwrap_err();
        assert!(matches!(err, ProtocolError::Incompatible { .. }));
        let err = run_joint(
            DarkStateSpec::Antisymmetric { d: 3 },
            EnsembleSpec::QutritGeneral,
            Params::Qutrit(QutritParams { gamma1: 0.5, gamma2: 0.6, delta: 0.7, phi: 0.8 }),
        )
        .unwrap_err();
        assert!(matches!(err, ProtocolError::Incompatible { .. }));
    }

    #[test]
    fn sampling_requires_trials_and_valid_superposition() {
        let config = ProtocolConfig::new(
            ProtocolKind::Exact,
            DarkStateSpec::Singlet,
            EnsembleSpec::QubitPolarReal,
            qubit_params(0.3, 0.0),
        );
        assert_eq!(run_sampled(&config, 0, 1).unwrap_err(), ProtocolError::ZeroTrials);
        assert!(matches!(
            superposed_branch_probabilities(0.0, 0.0).unwrap_err(),
            ProtocolError::Resource(DarkStateError::DegenerateSuperposition { .. })
        ));
        let err = run_probabilistic(
            DarkStateSpec::SuperposedFourQubit { a: 0.0, b: 0.0 },
            EnsembleSpec::QubitPolarReal,
            qubit_params(0.3, 0.0),
            Classifier::Strict,
        )
        .unwrap_err();
        assert!(matches!(err, ProtocolError::Resource(_)));
    }

    #[test]
    fn fixed_phase_family_works_through_the_full_protocol() {
        let phi0 = 1.9;
        let t = run_exact(
            DarkStateSpec::FourQubitA,
            EnsembleSpec::QubitFixedPhase { phi0 },
            qubit_params(2.4, phi0),
        )
        .unwrap();
        assert_relative_eq!(t.success_probability, 1.0, epsilon = EXACT_TOL);
        assert_success_fidelities(&t);
    }
}

//! The join phase: serial folding of the chunk mappings.
//!
//! Starting from the first chunk's survivors, each step intersects the
//! states the upstream chunk could end in with the states the downstream
//! chunk could start from, and maps the survivors through λ. The RID join
//! differs in one place: the upstream PLAS (powerset states) is first
//! decomposed into singleton interface states by the interface function
//! before intersecting.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::RecognizerError;
use crate::ids::StateId;
use crate::ridfa::RiDfa;
use crate::sets;

use super::reach::ChunkMapping;

/// One join step, kept for inspection and property checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinStep {
    /// PIS_i: the starts whose run survived chunk i.
    pub pis: Vec<StateId>,
    /// ι(PLAS_{i-1}) — RID joins only, from the second chunk on.
    pub interface_image: Option<Vec<StateId>>,
    /// PLAS_i after this step.
    pub plas: Vec<StateId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinOutcome {
    pub accepted: bool,
    pub steps: Vec<JoinStep>,
}

impl JoinOutcome {
    /// PLAS of the last chunk.
    pub fn final_plas(&self) -> &[StateId] {
        &self.steps.last().expect("join ran on at least one chunk").plas
    }
}

fn validate(
    mappings: &[ChunkMapping],
    state_count: usize,
) -> Result<(), RecognizerError> {
    if mappings.is_empty() {
        return Err(RecognizerError::InconsistentMapping(String::from(
            "no chunk mappings to join",
        )));
    }
    for (i, mapping) in mappings.iter().enumerate() {
        if let Some(max) = mapping.max_state() {
            if max >= state_count {
                return Err(RecognizerError::InconsistentMapping(alloc::format!(
                    "chunk {} references state {max}, but the chunk automaton has {state_count} states",
                    i + 1,
                )));
            }
        }
    }
    Ok(())
}

fn check_first_domain(
    mapping: &ChunkMapping,
    first_starts: &[StateId],
) -> Result<(), RecognizerError> {
    let domain = mapping.domain();
    if domain.iter().any(|q| !sets::contains(first_starts, *q)) {
        return Err(RecognizerError::InconsistentMapping(String::from(
            "first chunk mapping was not computed from the designated initials",
        )));
    }
    Ok(())
}

/// Classic join: PLAS_i = λ_i(PLAS_{i-1} ∩ PIS_i); accept iff the last
/// PLAS intersects the finals. Works for the DFA and NFA variants alike
/// (the NFA λ unions its image sets).
pub fn join_classic(
    mappings: &[ChunkMapping],
    first_starts: &[StateId],
    finals: &[StateId],
    state_count: usize,
) -> Result<JoinOutcome, RecognizerError> {
    validate(mappings, state_count)?;
    check_first_domain(&mappings[0], first_starts)?;

    let mut steps = Vec::with_capacity(mappings.len());
    let mut plas = mappings[0].apply(&mappings[0].domain());
    steps.push(JoinStep { pis: mappings[0].domain(), interface_image: None, plas: plas.clone() });
    for mapping in &mappings[1..] {
        let pis = mapping.domain();
        let allowed = sets::intersect(&plas, &pis);
        plas = mapping.apply(&allowed);
        steps.push(JoinStep { pis, interface_image: None, plas: plas.clone() });
    }
    let accepted = sets::intersects(&plas, finals);
    Ok(JoinOutcome { accepted, steps })
}

/// RID join: PLAS_i = λ_i(ι(PLAS_{i-1}) ∩ PIS_i); accept iff the last
/// PLAS intersects F^RID. On a reduced machine ι routes downgraded
/// singletons to their delegates.
pub fn join_rid(
    mappings: &[ChunkMapping],
    ridfa: &RiDfa,
) -> Result<JoinOutcome, RecognizerError> {
    validate(mappings, ridfa.state_count())?;
    check_first_domain(&mappings[0], ridfa.designated_initials())?;

    let mut steps = Vec::with_capacity(mappings.len());
    let mut plas = mappings[0].apply(&mappings[0].domain());
    steps.push(JoinStep { pis: mappings[0].domain(), interface_image: None, plas: plas.clone() });
    for mapping in &mappings[1..] {
        let pis = mapping.domain();
        let image = ridfa.interface_map_min(&plas);
        let allowed = sets::intersect(&image, &pis);
        plas = mapping.apply(&allowed);
        steps.push(JoinStep {
            pis,
            interface_image: Some(image),
            plas: plas.clone(),
        });
    }
    let accepted = sets::intersects(&plas, ridfa.finals());
    Ok(JoinOutcome { accepted, steps })
}

//! Answer generation: candidate selection, slot-by-slot matching and filler extraction.

mod engine;
mod render;

use std::fmt;

use crate::identity::{decide_referent, decide_slot, Decision, IdentityError, SubQuery};
use crate::lexicon::Lexicon;
use crate::model::{ActionFact, Code, CommFact, DirectObject, EventFact, FactRef, PredicateKind, SemanticCode};
use crate::question::{ActionPattern, CommPattern, EventPattern, Pattern, PropertyHint, QueryPredicate, ReferentQuery};
use crate::store::{FactBase, Referent};
use crate::text::{fold, same_phrase, same_text};

pub use engine::{Engine, Explanation};
pub use render::{project, render_answer, substitute, Projection};

/// A fact slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Verb,
    Subject,
    DirectObject,
    IndirectObject,
    Complement,
    Addressee,
    Content,
    Place,
    Time,
    Purpose,
    Way,
}

impl Slot {
    pub const ALL: [Slot; 11] = [
        Slot::Verb,
        Slot::Subject,
        Slot::DirectObject,
        Slot::IndirectObject,
        Slot::Complement,
        Slot::Addressee,
        Slot::Content,
        Slot::Place,
        Slot::Time,
        Slot::Purpose,
        Slot::Way,
    ];

    fn bit(self) -> u16 {
        1 << (self as u16)
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Slot::Verb => "verb",
            Slot::Subject => "subject",
            Slot::DirectObject => "direct_object",
            Slot::IndirectObject => "indirect_object",
            Slot::Complement => "complement",
            Slot::Addressee => "addressee",
            Slot::Content => "content",
            Slot::Place => "place",
            Slot::Time => "time",
            Slot::Purpose => "purpose",
            Slot::Way => "way",
        })
    }
}

/// The set of slots compared during matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SlotMask(u16);

impl SlotMask {
    pub fn of(slots: &[Slot]) -> Self {
        SlotMask(slots.iter().fold(0, |m, s| m | s.bit()))
    }

    /// Every slot a fact of this kind carries.
    pub fn full(kind: PredicateKind) -> Self {
        match kind {
            PredicateKind::Action => SlotMask::of(&[
                Slot::Verb,
                Slot::Subject,
                Slot::DirectObject,
                Slot::IndirectObject,
                Slot::Complement,
                Slot::Place,
                Slot::Time,
                Slot::Purpose,
                Slot::Way,
            ]),
            PredicateKind::Event => SlotMask::of(&[Slot::Verb, Slot::Subject, Slot::Place, Slot::Time]),
            _ => SlotMask::of(&[
                Slot::Verb,
                Slot::Subject,
                Slot::Addressee,
                Slot::Content,
                Slot::Place,
                Slot::Time,
            ]),
        }
    }

    pub fn without(self, slot: Slot) -> Self {
        SlotMask(self.0 & !slot.bit())
    }

    pub fn with(self, slot: Slot) -> Self {
        SlotMask(self.0 | slot.bit())
    }

    pub fn contains(self, slot: Slot) -> bool {
        self.0 & slot.bit() != 0
    }

    pub fn slots(self) -> impl Iterator<Item = Slot> {
        Slot::ALL.into_iter().filter(move |s| self.contains(*s))
    }
}

/// A value extracted from a fact slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlotValue {
    Referent(Code),
    Place(Code),
    Time(Code),
    Text(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CannotReason {
    /// A subject-property question found nothing.
    NotExecutable,
    /// Direct matching failed; answering would need inference.
    InferenceRequired,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnswerKind {
    Yes,
    No,
    Fillers,
    CannotAnswer(CannotReason),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Answer {
    pub kind: AnswerKind,
    pub fillers: Vec<String>,
    /// Codes of the facts the answer rests on.
    pub matched: Vec<Code>,
}

pub const NOT_EXECUTABLE: &str = "The question can not be executed";
pub const INFERENCE_REQUIRED: &str = "inference required";

impl Answer {
    fn yes(matched: Vec<Code>) -> Self {
        Answer {
            kind: AnswerKind::Yes,
            fillers: Vec::new(),
            matched,
        }
    }

    fn no() -> Self {
        Answer {
            kind: AnswerKind::No,
            fillers: Vec::new(),
            matched: Vec::new(),
        }
    }

    fn cannot(reason: CannotReason) -> Self {
        Answer {
            kind: AnswerKind::CannotAnswer(reason),
            fillers: Vec::new(),
            matched: Vec::new(),
        }
    }

    /// Human-readable answer text.
    pub fn text(&self) -> String {
        match self.kind {
            AnswerKind::Yes => "Yes".into(),
            AnswerKind::No => "No".into(),
            AnswerKind::Fillers => self.fillers.join("; "),
            AnswerKind::CannotAnswer(CannotReason::NotExecutable) => NOT_EXECUTABLE.into(),
            AnswerKind::CannotAnswer(CannotReason::InferenceRequired) => {
                format!("Cannot answer: {INFERENCE_REQUIRED}")
            }
        }
    }

    /// `ANSWER<TAB><kind><TAB><renderings>` line.
    pub fn machine_line(&self) -> String {
        let (kind, rest) = match self.kind {
            AnswerKind::Yes => ("YES", String::new()),
            AnswerKind::No => ("NO", String::new()),
            AnswerKind::Fillers => ("FILLERS", self.fillers.join("; ")),
            AnswerKind::CannotAnswer(CannotReason::NotExecutable) => ("CANNOT", NOT_EXECUTABLE.to_string()),
            AnswerKind::CannotAnswer(CannotReason::InferenceRequired) => {
                ("CANNOT_INFER", INFERENCE_REQUIRED.to_string())
            }
        };
        format!("ANSWER\t{kind}\t{rest}")
    }
}

/// Which fillers a special question returns when several facts match.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FillerPolicy {
    /// The filler of the last matching fact in file order.
    #[default]
    Latest,
    /// Every distinct filler, in file order.
    All,
}

/// Outcome of comparing one slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotVerdict {
    pub slot: Slot,
    pub passed: bool,
    /// Identification branch, for slots compared by identification.
    pub branch: Option<&'static str>,
}

/// One candidate fact and how it fared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateTrace {
    pub code: Code,
    pub verdicts: Vec<SlotVerdict>,
    pub hit: bool,
    pub filler: Option<String>,
}

/// Record of how an answer was reached.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Trace {
    pub steps: Vec<String>,
    pub candidates: Vec<CandidateTrace>,
}

impl Trace {
    fn step(trace: &mut Option<&mut Trace>, text: impl Into<String>) {
        let text = text.into();
        log::debug!("{text}");
        if let Some(t) = trace.as_deref_mut() {
            t.steps.push(text);
        }
    }

    fn candidate(trace: &mut Option<&mut Trace>, c: CandidateTrace) {
        if let Some(t) = trace.as_deref_mut() {
            t.candidates.push(c);
        }
    }
}

fn verdict(slot: Slot, passed: bool) -> SlotVerdict {
    SlotVerdict {
        slot,
        passed,
        branch: None,
    }
}

fn identified(slot: Slot, decision: Option<Decision>) -> SlotVerdict {
    SlotVerdict {
        slot,
        passed: decision.is_none_or(|d| d.is_identical()),
        branch: decision.map(|d| d.branch),
    }
}

/// Query text absent: passes. Present against absent fact text: fails.
fn text_slot(q: &Option<String>, f: &Option<String>, eq: fn(&str, &str) -> bool) -> bool {
    match (q, f) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(a), Some(b)) => eq(a, b),
    }
}

fn verbs_match(lexicon: &Lexicon, q: &str, f: &str) -> bool {
    lexicon.verbs_synonymous(q, f).unwrap_or_else(|_| fold(q) == fold(f))
}

fn referent_slot(
    slot: Slot,
    q: Option<&ReferentQuery>,
    f: Option<&Code>,
    fb: &FactBase,
) -> Result<SlotVerdict, IdentityError> {
    Ok(identified(slot, decide_slot(q.map(SubQuery::Referent), f, fb)?))
}

fn place_slot(
    q: &Option<crate::model::PlaceRecord>,
    f: Option<&Code>,
    fb: &FactBase,
) -> Result<SlotVerdict, IdentityError> {
    Ok(identified(
        Slot::Place,
        decide_slot(q.as_ref().map(SubQuery::Place), f, fb)?,
    ))
}

fn time_slot(
    q: &Option<crate::model::TimeRecord>,
    f: Option<&Code>,
    fb: &FactBase,
) -> Result<SlotVerdict, IdentityError> {
    Ok(identified(
        Slot::Time,
        decide_slot(q.as_ref().map(SubQuery::Time), f, fb)?,
    ))
}

fn action_verdicts(
    q: &ActionPattern,
    f: &ActionFact,
    mask: SlotMask,
    fb: &FactBase,
    lexicon: &Lexicon,
) -> Result<Vec<SlotVerdict>, IdentityError> {
    let mut out = Vec::new();
    for slot in mask.slots() {
        let v = match slot {
            Slot::Verb => verdict(slot, verbs_match(lexicon, &q.verb, &f.verb)),
            Slot::Subject => referent_slot(slot, q.subject.as_ref(), Some(&f.subject), fb)?,
            Slot::DirectObject => match (&q.direct_object, &f.direct_object) {
                (None, _) => verdict(slot, true),
                (Some(_), None) => verdict(slot, false),
                (Some(q), Some(DirectObject::Ref(code))) => identified(slot, Some(decide_referent(q, code, fb)?)),
                (Some(ReferentQuery::Phrase(np)), Some(DirectObject::Literal(text))) => {
                    verdict(slot, same_phrase(&np.text, text))
                }
                (Some(_), Some(DirectObject::Literal(_))) => verdict(slot, false),
            },
            Slot::IndirectObject => match (&q.indirect_object, &f.indirect_object) {
                (None, _) => verdict(slot, true),
                (Some(_), None) => verdict(slot, false),
                (Some(qi), Some(fi)) => {
                    let prep = match (&qi.preposition, &fi.preposition) {
                        (Some(a), Some(b)) => same_text(a, b),
                        _ => true,
                    };
                    let d = decide_referent(&qi.target, &fi.target, fb)?;
                    SlotVerdict {
                        slot,
                        passed: prep && d.is_identical(),
                        branch: Some(d.branch),
                    }
                }
            },
            Slot::Complement => verdict(slot, text_slot(&q.complement, &f.complement, same_phrase)),
            Slot::Place => place_slot(&q.place, f.place.as_ref(), fb)?,
            Slot::Time => time_slot(&q.time, f.time.as_ref(), fb)?,
            Slot::Purpose => verdict(slot, text_slot(&q.purpose, &f.purpose, same_text)),
            Slot::Way => verdict(slot, text_slot(&q.way, &f.way, same_text)),
            Slot::Addressee | Slot::Content => continue,
        };
        out.push(v);
    }
    Ok(out)
}

fn event_verdicts(
    q: &EventPattern,
    f: &EventFact,
    mask: SlotMask,
    fb: &FactBase,
    lexicon: &Lexicon,
) -> Result<Vec<SlotVerdict>, IdentityError> {
    let mut out = Vec::new();
    for slot in mask.slots() {
        let v = match slot {
            Slot::Verb => verdict(slot, verbs_match(lexicon, &q.verb, &f.verb)),
            Slot::Subject => referent_slot(slot, q.subject.as_ref(), Some(&f.subject), fb)?,
            Slot::Place => place_slot(&q.place, f.place.as_ref(), fb)?,
            Slot::Time => time_slot(&q.time, f.time.as_ref(), fb)?,
            _ => continue,
        };
        out.push(v);
    }
    Ok(out)
}

fn comm_verdicts(
    q: &CommPattern,
    f: &CommFact,
    mask: SlotMask,
    fb: &FactBase,
    lexicon: &Lexicon,
) -> Result<Vec<SlotVerdict>, IdentityError> {
    let mut out = Vec::new();
    for slot in mask.slots() {
        let v = match slot {
            Slot::Verb => verdict(slot, verbs_match(lexicon, &q.verb, &f.verb)),
            Slot::Subject => referent_slot(slot, q.subject.as_ref(), Some(&f.subject), fb)?,
            Slot::Addressee => referent_slot(slot, q.addressee.as_ref(), f.addressee.as_ref(), fb)?,
            Slot::Content => verdict(slot, text_slot(&q.content, &f.content, same_text)),
            Slot::Place => place_slot(&q.place, f.place.as_ref(), fb)?,
            Slot::Time => time_slot(&q.time, f.time.as_ref(), fb)?,
            _ => continue,
        };
        out.push(v);
    }
    Ok(out)
}

/// Subject, place and time of any pattern compared against any fact.
fn shared_verdicts(q: &Pattern, fact: FactRef<'_>, fb: &FactBase) -> Result<Vec<SlotVerdict>, IdentityError> {
    let (place, time) = match q {
        Pattern::Action(a) => (&a.place, &a.time),
        Pattern::Event(e) => (&e.place, &e.time),
        Pattern::Comm(c) => (&c.place, &c.time),
    };
    Ok(vec![
        referent_slot(Slot::Subject, q.subject(), Some(fact.subject()), fb)?,
        place_slot(place, fact.place(), fb)?,
        time_slot(time, fact.time(), fb)?,
    ])
}

/// Per-slot verdicts for the unmasked slots. A query and fact of different kinds compare
/// only on subject, place and time.
pub fn slot_verdicts(
    query: &QueryPredicate,
    fact: FactRef<'_>,
    mask: SlotMask,
    fb: &FactBase,
    lexicon: &Lexicon,
) -> Result<Vec<SlotVerdict>, IdentityError> {
    match (&query.pattern, fact) {
        (Pattern::Action(q), FactRef::Action(f)) => action_verdicts(q, f, mask, fb, lexicon),
        (Pattern::Event(q), FactRef::Event(f)) => event_verdicts(q, f, mask, fb, lexicon),
        (Pattern::Comm(q), FactRef::Comm(f)) => comm_verdicts(q, f, mask, fb, lexicon),
        (q, f) => Ok(shared_verdicts(q, f, fb)?
            .into_iter()
            .filter(|v| mask.contains(v.slot))
            .collect()),
    }
}

pub fn match_fact(
    query: &QueryPredicate,
    fact: FactRef<'_>,
    mask: SlotMask,
    fb: &FactBase,
    lexicon: &Lexicon,
) -> Result<bool, IdentityError> {
    Ok(slot_verdicts(query, fact, mask, fb, lexicon)?.iter().all(|v| v.passed))
}

/// The extension point for deduction; direct matching found nothing.
pub fn run_inference(query: &QueryPredicate, _fb: &FactBase) -> Answer {
    log::debug!(
        "no direct match for {:?} question; inference required",
        query.questioned_slot
    );
    Answer::cannot(CannotReason::InferenceRequired)
}

/// Candidate facts and the strategy that selected them.
fn candidates<'a>(query: &QueryPredicate, fb: &'a FactBase, lexicon: &Lexicon) -> (String, Vec<FactRef<'a>>) {
    match &query.pattern {
        Pattern::Action(a) if a.semantic_type == SemanticCode::Be && query.is_general() => (
            format!("BE actions with negation={}", a.negation),
            fb.actions()
                .iter()
                .filter(|f| f.semantic_type == SemanticCode::Be && f.negation == a.negation)
                .map(FactRef::Action)
                .collect(),
        ),
        Pattern::Action(a) => (
            format!(
                "{} actions with negation={} tense={} tense_type={}",
                a.semantic_type, a.negation, a.tense, a.tense_type
            ),
            fb.select_actions(a.semantic_type, a.negation, a.tense, a.tense_type)
                .into_iter()
                .map(FactRef::Action)
                .collect(),
        ),
        Pattern::Event(e) => {
            let scale = e
                .scale
                .clone()
                .or_else(|| lexicon.event_scale(&e.verb).map(str::to_string));
            let (label, events) = match &scale {
                Some(s) => (format!("events of scale {s}"), fb.select_events_by_scale(s)),
                None => ("all events".to_string(), fb.select_all_events()),
            };
            (
                format!("{label} with negation={}", e.negation),
                events
                    .into_iter()
                    .filter(|f| f.negation == e.negation)
                    .map(FactRef::Event)
                    .collect(),
            )
        }
        Pattern::Comm(c) => (
            format!(
                "{} predicates with negation={} tense={} tense_type={}",
                c.kind, c.negation, c.tense, c.tense_type
            ),
            fb.select_comms(c.kind)
                .into_iter()
                .filter(|f| f.negation == c.negation && f.tense == c.tense && f.tense_type == c.tense_type)
                .map(FactRef::Comm)
                .collect(),
        ),
    }
}

/// Scans candidates and returns the codes of the hits.
fn scan(
    query: &QueryPredicate,
    facts: &[FactRef<'_>],
    mask: SlotMask,
    fb: &FactBase,
    lexicon: &Lexicon,
    trace: &mut Option<&mut Trace>,
) -> Vec<Code> {
    let mut hits = Vec::new();
    for &fact in facts {
        let verdicts = match slot_verdicts(query, fact, mask, fb, lexicon) {
            Ok(v) => v,
            Err(e) => {
                log::warn!("fact {}: {e}", fact.code());
                Vec::from([verdict(Slot::Verb, false)])
            }
        };
        let hit = verdicts.iter().all(|v| v.passed);
        if hit {
            hits.push(fact.code().clone());
        }
        Trace::candidate(
            trace,
            CandidateTrace {
                code: fact.code().clone(),
                verdicts,
                hit,
                filler: None,
            },
        );
    }
    hits
}

pub fn answer_general(query: &QueryPredicate, fb: &FactBase, lexicon: &Lexicon) -> Answer {
    answer_general_traced(query, fb, lexicon, None)
}

pub fn answer_general_traced(
    query: &QueryPredicate,
    fb: &FactBase,
    lexicon: &Lexicon,
    trace: Option<&mut Trace>,
) -> Answer {
    let mut trace = trace;
    let (label, facts) = candidates(query, fb, lexicon);
    Trace::step(&mut trace, format!("selected {} candidate(s): {label}", facts.len()));
    let full = SlotMask::full(query.kind);
    match &query.pattern {
        Pattern::Action(a) if a.semantic_type == SemanticCode::Be => {
            let mut mask = SlotMask::of(&[Slot::Subject, Slot::Place, Slot::Time]);
            if a.complement.is_some() {
                mask = mask.with(Slot::Complement);
            }
            let hits = scan(query, &facts, mask, fb, lexicon, &mut trace);
            if !hits.is_empty() {
                return Answer::yes(hits);
            }
            if a.complement.is_some() {
                return Answer::no();
            }
            let others: Vec<FactRef<'_>> = fb
                .facts()
                .filter(|f| !matches!(f, FactRef::Action(_)))
                .filter(|f| fact_negation(*f) == a.negation)
                .collect();
            Trace::step(
                &mut trace,
                format!("scanning {} job/message/intelligence/event predicate(s)", others.len()),
            );
            let mask = SlotMask::of(&[Slot::Subject, Slot::Place, Slot::Time]);
            let hits = scan(query, &others, mask, fb, lexicon, &mut trace);
            if hits.is_empty() {
                Answer::no()
            } else {
                Answer::yes(hits)
            }
        }
        Pattern::Event(_) => {
            let hits = scan(query, &facts, full, fb, lexicon, &mut trace);
            if hits.is_empty() {
                Answer::no()
            } else {
                Answer::yes(hits)
            }
        }
        _ => {
            let hits = scan(query, &facts, full, fb, lexicon, &mut trace);
            if hits.is_empty() {
                Trace::step(&mut trace, "no direct match: inference stub");
                run_inference(query, fb)
            } else {
                Answer::yes(hits)
            }
        }
    }
}

fn fact_negation(fact: FactRef<'_>) -> bool {
    match fact {
        FactRef::Action(f) => f.negation,
        FactRef::Event(f) => f.negation,
        FactRef::Comm(f) => f.negation,
    }
}

/// Reads a slot of a fact. Property hints redirect a subject to its owner or quantity.
pub fn extract_slot(fact: FactRef<'_>, slot: Slot, hint: Option<PropertyHint>, fb: &FactBase) -> Option<SlotValue> {
    if slot == Slot::Subject {
        let subject = fact.subject();
        return match hint {
            Some(PropertyHint::Owner) => match fb.referent(subject.as_str())? {
                Referent::Entity(e) => e.owner.clone().map(SlotValue::Referent),
                Referent::Person(_) => None,
            },
            Some(PropertyHint::Quantity) => match fb.referent(subject.as_str())? {
                Referent::Entity(e) => e.quantity.map(|q| SlotValue::Text(q.to_string())),
                Referent::Person(_) => None,
            },
            _ => Some(SlotValue::Referent(subject.clone())),
        };
    }
    if slot == Slot::Place {
        return fact.place().cloned().map(SlotValue::Place);
    }
    if slot == Slot::Time {
        return fact.time().cloned().map(SlotValue::Time);
    }
    let text = |t: &Option<String>| t.clone().map(SlotValue::Text);
    match (fact, slot) {
        (_, Slot::Verb) => Some(SlotValue::Text(match fact {
            FactRef::Action(f) => f.verb.clone(),
            FactRef::Event(f) => f.verb.clone(),
            FactRef::Comm(f) => f.verb.clone(),
        })),
        (FactRef::Action(f), Slot::DirectObject) => f.direct_object.as_ref().map(|d| match d {
            DirectObject::Ref(c) => SlotValue::Referent(c.clone()),
            DirectObject::Literal(t) => SlotValue::Text(t.clone()),
        }),
        (FactRef::Action(f), Slot::IndirectObject) => f
            .indirect_object
            .as_ref()
            .map(|i| SlotValue::Referent(i.target.clone())),
        (FactRef::Action(f), Slot::Complement) => text(&f.complement),
        (FactRef::Action(f), Slot::Purpose) => text(&f.purpose),
        (FactRef::Action(f), Slot::Way) => text(&f.way),
        (FactRef::Comm(f), Slot::Addressee) => f.addressee.clone().map(SlotValue::Referent),
        (FactRef::Comm(f), Slot::Content) => text(&f.content),
        _ => None,
    }
}

fn satisfies_restriction(restriction: &ReferentQuery, value: &SlotValue, fb: &FactBase) -> bool {
    match value {
        SlotValue::Referent(code) => decide_referent(restriction, code, fb).is_ok_and(|d| d.is_identical()),
        SlotValue::Text(text) => match restriction {
            ReferentQuery::Phrase(np) => same_phrase(&np.text, text),
            _ => false,
        },
        SlotValue::Place(_) | SlotValue::Time(_) => false,
    }
}

pub fn answer_special(query: &QueryPredicate, fb: &FactBase, lexicon: &Lexicon) -> Answer {
    answer_special_with(query, fb, lexicon, FillerPolicy::default(), None)
}

pub fn answer_special_with(
    query: &QueryPredicate,
    fb: &FactBase,
    lexicon: &Lexicon,
    policy: FillerPolicy,
    trace: Option<&mut Trace>,
) -> Answer {
    let mut trace = trace;
    let Some(slot) = query.slot else {
        return answer_general_traced(query, fb, lexicon, trace);
    };
    if let Some(answer) = special_on_slot(query, slot, fb, lexicon, policy, &mut trace) {
        return answer;
    }
    if query.property_hint().is_some() {
        Trace::step(
            &mut trace,
            "subject property not found: the question can not be executed",
        );
        return Answer::cannot(CannotReason::NotExecutable);
    }
    if let Some(retry) = query.retry {
        Trace::step(&mut trace, format!("retrying with the {retry} slot"));
        if let Some(answer) = special_on_slot(query, retry, fb, lexicon, policy, &mut trace) {
            return answer;
        }
    }
    Trace::step(&mut trace, "no direct match: inference stub");
    run_inference(query, fb)
}

fn special_on_slot(
    query: &QueryPredicate,
    slot: Slot,
    fb: &FactBase,
    lexicon: &Lexicon,
    policy: FillerPolicy,
    trace: &mut Option<&mut Trace>,
) -> Option<Answer> {
    let (label, facts) = candidates(query, fb, lexicon);
    Trace::step(trace, format!("selected {} candidate(s): {label}", facts.len()));
    let hint = query.property_hint();
    let mut mask = SlotMask::full(query.kind).without(slot);
    if hint.is_some() {
        mask = mask.with(Slot::Subject);
    }
    Trace::step(trace, format!("{slot} masked; extracting {slot} from each hit"));
    let mut found: Vec<(Code, String)> = Vec::new();
    for &fact in &facts {
        let verdicts = match slot_verdicts(query, fact, mask, fb, lexicon) {
            Ok(v) => v,
            Err(e) => {
                log::warn!("fact {}: {e}", fact.code());
                vec![verdict(Slot::Verb, false)]
            }
        };
        let mut filler = None;
        if verdicts.iter().all(|v| v.passed) {
            let value = extract_slot(fact, slot, hint, fb).filter(|v| {
                query
                    .restriction
                    .as_ref()
                    .is_none_or(|r| satisfies_restriction(r, v, fb))
            });
            filler = value.map(|v| render_answer(&v, fb));
        }
        if let Some(text) = &filler {
            found.push((fact.code().clone(), text.clone()));
        }
        Trace::candidate(
            trace,
            CandidateTrace {
                code: fact.code().clone(),
                hit: filler.is_some(),
                verdicts,
                filler,
            },
        );
    }
    if found.is_empty() {
        return None;
    }
    let (matched, fillers) = match policy {
        FillerPolicy::Latest => {
            let (code, text) = found.pop().expect("non-empty");
            (vec![code], vec![text])
        }
        FillerPolicy::All => {
            let mut fillers: Vec<String> = Vec::new();
            for (_, text) in &found {
                if !fillers.iter().any(|f| fold(f) == fold(text)) {
                    fillers.push(text.clone());
                }
            }
            (found.into_iter().map(|(c, _)| c).collect(), fillers)
        }
    };
    Some(Answer {
        kind: AnswerKind::Fillers,
        fillers,
        matched,
    })
}

/// Answers a query of either sort.
pub fn answer(query: &QueryPredicate, fb: &FactBase, lexicon: &Lexicon, policy: FillerPolicy) -> Answer {
    if query.is_general() {
        answer_general(query, fb, lexicon)
    } else {
        answer_special_with(query, fb, lexicon, policy, None)
    }
}

//! The fact base: validated, code-indexed records and file-ordered fact predicates.

mod format;

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use crate::lexicon::Lexicon;
use crate::model::{
    classify_code, ActionFact, Code, CommFact, EntityRecord, EventFact, FactRef, PersonRecord, PlaceRecord,
    PredicateKind, SemanticCode, Tense, TenseType, TimeRecord,
};
use crate::text;

pub use format::{parse_facts, write_facts};

/// Line and column (both 1-based) in a fact file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

fn at(loc: &Option<Location>) -> String {
    loc.map(|l| format!("{l}: ")).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StoreError {
    #[error("{location}: {message}")]
    Parse { location: Location, message: String },
    #[error("{}dangling reference: no {namespace} `{code}`", at(.location))]
    DanglingReference {
        namespace: Namespace,
        code: Code,
        location: Option<Location>,
    },
    #[error("{}duplicate {namespace} code `{code}`", at(.location))]
    DuplicateCode {
        namespace: Namespace,
        code: Code,
        location: Option<Location>,
    },
    #[error("{}invalid record `{code}`: {message}", at(.location))]
    Invalid {
        code: Code,
        message: String,
        location: Option<Location>,
    },
    #[error("no {namespace} with code `{code}`")]
    NotFound { namespace: Namespace, code: Code },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

/// Code namespaces. Persons and entities share the referent namespace so that subject and
/// object references are unambiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Namespace {
    Person,
    Place,
    Time,
    Entity,
    Fact,
}

impl fmt::Display for Namespace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Namespace::Person => "person",
            Namespace::Place => "place",
            Namespace::Time => "time",
            Namespace::Entity => "entity",
            Namespace::Fact => "fact",
        })
    }
}

/// A resolved record.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Record<'a> {
    Person(&'a PersonRecord),
    Place(&'a PlaceRecord),
    Time(&'a TimeRecord),
    Entity(&'a EntityRecord),
}

/// Something that can fill a subject or object slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Referent<'a> {
    Person(&'a PersonRecord),
    Entity(&'a EntityRecord),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum FactId {
    Action(usize),
    Event(usize),
    Comm(usize),
}

type ActionKey = (SemanticCode, bool, Tense, TenseType);

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactBase {
    persons: Vec<PersonRecord>,
    places: Vec<PlaceRecord>,
    times: Vec<TimeRecord>,
    entities: Vec<EntityRecord>,
    actions: Vec<ActionFact>,
    events: Vec<EventFact>,
    comms: Vec<CommFact>,
    source_order: Vec<FactId>,
    person_index: HashMap<Code, usize>,
    place_index: HashMap<Code, usize>,
    time_index: HashMap<Code, usize>,
    entity_index: HashMap<Code, usize>,
    action_index: HashMap<ActionKey, Vec<usize>>,
    event_scale_index: HashMap<String, Vec<usize>>,
    comm_kind_index: HashMap<PredicateKind, Vec<usize>>,
}

impl FactBase {
    pub fn builder() -> FactBaseBuilder {
        FactBaseBuilder::default()
    }

    pub fn load(path: &Path) -> Result<Self, StoreError> {
        let text = std::fs::read_to_string(path).map_err(|e| StoreError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        parse_facts(&text)
    }

    pub fn is_empty(&self) -> bool {
        self.source_order.is_empty()
            && self.persons.is_empty()
            && self.places.is_empty()
            && self.times.is_empty()
            && self.entities.is_empty()
    }

    pub fn persons(&self) -> &[PersonRecord] {
        &self.persons
    }

    pub fn places(&self) -> &[PlaceRecord] {
        &self.places
    }

    pub fn times(&self) -> &[TimeRecord] {
        &self.times
    }

    pub fn entities(&self) -> &[EntityRecord] {
        &self.entities
    }

    pub fn actions(&self) -> &[ActionFact] {
        &self.actions
    }

    pub fn events(&self) -> &[EventFact] {
        &self.events
    }

    pub fn comms(&self) -> &[CommFact] {
        &self.comms
    }

    /// Every fact predicate in file order.
    pub fn facts(&self) -> impl Iterator<Item = FactRef<'_>> {
        self.source_order.iter().map(|id| self.fact(*id))
    }

    pub fn fact_count(&self) -> usize {
        self.source_order.len()
    }

    fn fact(&self, id: FactId) -> FactRef<'_> {
        match id {
            FactId::Action(i) => FactRef::Action(&self.actions[i]),
            FactId::Event(i) => FactRef::Event(&self.events[i]),
            FactId::Comm(i) => FactRef::Comm(&self.comms[i]),
        }
    }

    pub fn person(&self, code: &str) -> Option<&PersonRecord> {
        self.person_index.get(code).map(|&i| &self.persons[i])
    }

    pub fn place(&self, code: &str) -> Option<&PlaceRecord> {
        self.place_index.get(code).map(|&i| &self.places[i])
    }

    pub fn time(&self, code: &str) -> Option<&TimeRecord> {
        self.time_index.get(code).map(|&i| &self.times[i])
    }

    pub fn entity(&self, code: &str) -> Option<&EntityRecord> {
        self.entity_index.get(code).map(|&i| &self.entities[i])
    }

    pub fn referent(&self, code: &str) -> Option<Referent<'_>> {
        self.person(code)
            .map(Referent::Person)
            .or_else(|| self.entity(code).map(Referent::Entity))
    }

    /// Looks a code up in one namespace; namespaces never leak into each other.
    pub fn resolve(&self, namespace: Namespace, code: &str) -> Result<Record<'_>, StoreError> {
        let found = match namespace {
            Namespace::Person => self.person(code).map(Record::Person),
            Namespace::Place => self.place(code).map(Record::Place),
            Namespace::Time => self.time(code).map(Record::Time),
            Namespace::Entity => self.entity(code).map(Record::Entity),
            Namespace::Fact => None,
        };
        found.ok_or_else(|| StoreError::NotFound {
            namespace,
            code: Code::from(code),
        })
    }

    pub fn select_actions(
        &self,
        semantic_type: SemanticCode,
        negation: bool,
        tense: Tense,
        tense_type: TenseType,
    ) -> Vec<&ActionFact> {
        self.action_index
            .get(&(semantic_type, negation, tense, tense_type))
            .map(|ids| ids.iter().map(|&i| &self.actions[i]).collect())
            .unwrap_or_default()
    }

    pub fn select_events_by_scale(&self, scale: &str) -> Vec<&EventFact> {
        self.event_scale_index
            .get(&text::fold(scale))
            .map(|ids| ids.iter().map(|&i| &self.events[i]).collect())
            .unwrap_or_default()
    }

    pub fn select_all_events(&self) -> Vec<&EventFact> {
        self.events.iter().collect()
    }

    pub fn select_comms(&self, kind: PredicateKind) -> Vec<&CommFact> {
        self.comm_kind_index
            .get(&kind)
            .map(|ids| ids.iter().map(|&i| &self.comms[i]).collect())
            .unwrap_or_default()
    }

    /// Checks fact verbs against the lexicon classification.
    pub fn check_against(&self, lexicon: &Lexicon) -> Result<(), StoreError> {
        let invalid = |code: &Code, message: String| StoreError::Invalid {
            code: code.clone(),
            message,
            location: None,
        };
        for a in &self.actions {
            if let Ok(code) = lexicon.classify_verb(&a.verb) {
                if code != a.semantic_type {
                    return Err(invalid(
                        &a.code,
                        format!("verb `{}` is {code}, fact says {}", a.verb, a.semantic_type),
                    ));
                }
            }
        }
        for c in &self.comms {
            if let Ok(code) = lexicon.classify_verb(&c.verb) {
                if classify_code(code) != c.kind {
                    return Err(invalid(
                        &c.code,
                        format!("verb `{}` forms {}, not {}", c.verb, classify_code(code), c.kind),
                    ));
                }
            }
        }
        for e in &self.events {
            if let Ok(code) = lexicon.classify_verb(&e.verb) {
                if code != SemanticCode::Change {
                    return Err(invalid(&e.code, format!("verb `{}` is {code}, not CHANGE", e.verb)));
                }
            }
        }
        Ok(())
    }

    pub fn to_fact_file(&self) -> String {
        write_facts(self)
    }
}

#[derive(Debug, Clone)]
enum Item {
    Person(PersonRecord),
    Place(PlaceRecord),
    Time(TimeRecord),
    Entity(EntityRecord),
    Action(ActionFact),
    Event(EventFact),
    Comm(CommFact),
}

/// Collects records and facts in ingestion order; [`FactBaseBuilder::build`] validates.
#[derive(Debug, Clone, Default)]
pub struct FactBaseBuilder {
    items: Vec<(Item, Option<Location>)>,
}

impl FactBaseBuilder {
    fn push(&mut self, item: Item, location: Option<Location>) -> &mut Self {
        self.items.push((item, location));
        self
    }

    pub fn person(&mut self, r: PersonRecord) -> &mut Self {
        self.push(Item::Person(r), None)
    }

    pub fn place(&mut self, r: PlaceRecord) -> &mut Self {
        self.push(Item::Place(r), None)
    }

    pub fn time(&mut self, r: TimeRecord) -> &mut Self {
        self.push(Item::Time(r), None)
    }

    pub fn entity(&mut self, r: EntityRecord) -> &mut Self {
        self.push(Item::Entity(r), None)
    }

    pub fn action(&mut self, f: ActionFact) -> &mut Self {
        self.push(Item::Action(f), None)
    }

    pub fn event(&mut self, f: EventFact) -> &mut Self {
        self.push(Item::Event(f), None)
    }

    pub fn comm(&mut self, f: CommFact) -> &mut Self {
        self.push(Item::Comm(f), None)
    }

    pub(crate) fn push_located(&mut self, item: ItemLocated) -> &mut Self {
        let ItemLocated(item, loc) = item;
        self.push(item, Some(loc))
    }

    pub fn build(&self) -> Result<FactBase, StoreError> {
        let mut fb = FactBase::default();
        let mut locations: HashMap<(Namespace, Code), Option<Location>> = HashMap::new();

        fn claim(
            locations: &mut HashMap<(Namespace, Code), Option<Location>>,
            ns: Namespace,
            code: &Option<Code>,
            loc: Option<Location>,
        ) -> Result<Code, StoreError> {
            let code = code.clone().ok_or_else(|| StoreError::Invalid {
                code: Code::from(""),
                message: "record without a code".into(),
                location: loc,
            })?;
            // persons and entities share one referent namespace
            let key_ns = if ns == Namespace::Entity { Namespace::Person } else { ns };
            if locations.insert((key_ns, code.clone()), loc).is_some() {
                return Err(StoreError::DuplicateCode {
                    namespace: ns,
                    code,
                    location: loc,
                });
            }
            Ok(code)
        }

        for (item, loc) in &self.items {
            let loc = *loc;
            match item {
                Item::Person(r) => {
                    let code = claim(&mut locations, Namespace::Person, &r.code, loc)?;
                    fb.person_index.insert(code, fb.persons.len());
                    fb.persons.push(r.clone());
                }
                Item::Place(r) => {
                    let code = claim(&mut locations, Namespace::Place, &r.code, loc)?;
                    fb.place_index.insert(code, fb.places.len());
                    fb.places.push(r.clone());
                }
                Item::Time(r) => {
                    let code = claim(&mut locations, Namespace::Time, &r.code, loc)?;
                    validate_time(r, &code, loc)?;
                    fb.time_index.insert(code, fb.times.len());
                    fb.times.push(r.clone());
                }
                Item::Entity(r) => {
                    let code = claim(&mut locations, Namespace::Entity, &r.code, loc)?;
                    fb.entity_index.insert(code, fb.entities.len());
                    fb.entities.push(r.clone());
                }
                Item::Action(f) => {
                    claim(&mut locations, Namespace::Fact, &Some(f.code.clone()), loc)?;
                    if classify_code(f.semantic_type) != PredicateKind::Action {
                        return Err(StoreError::Invalid {
                            code: f.code.clone(),
                            message: format!("{} does not form an action", f.semantic_type),
                            location: loc,
                        });
                    }
                    let i = fb.actions.len();
                    fb.action_index
                        .entry((f.semantic_type, f.negation, f.tense, f.tense_type))
                        .or_default()
                        .push(i);
                    fb.actions.push(f.clone());
                    fb.source_order.push(FactId::Action(i));
                }
                Item::Event(f) => {
                    claim(&mut locations, Namespace::Fact, &Some(f.code.clone()), loc)?;
                    let i = fb.events.len();
                    if let Some(scale) = &f.scale {
                        fb.event_scale_index.entry(text::fold(scale)).or_default().push(i);
                    }
                    fb.events.push(f.clone());
                    fb.source_order.push(FactId::Event(i));
                }
                Item::Comm(f) => {
                    claim(&mut locations, Namespace::Fact, &Some(f.code.clone()), loc)?;
                    if !f.kind.is_comm() {
                        return Err(StoreError::Invalid {
                            code: f.code.clone(),
                            message: format!("{} is not a job, message or intelligence", f.kind),
                            location: loc,
                        });
                    }
                    let i = fb.comms.len();
                    fb.comm_kind_index.entry(f.kind).or_default().push(i);
                    fb.comms.push(f.clone());
                    fb.source_order.push(FactId::Comm(i));
                }
            }
        }

        // referential closure
        for (item, loc) in &self.items {
            let loc = *loc;
            let check = |ns: Namespace, code: Option<&Code>| -> Result<(), StoreError> {
                let Some(code) = code else { return Ok(()) };
                let ok = match ns {
                    Namespace::Person => fb.referent(code.as_str()).is_some(),
                    Namespace::Place => fb.place(code.as_str()).is_some(),
                    Namespace::Time => fb.time(code.as_str()).is_some(),
                    Namespace::Entity | Namespace::Fact => true,
                };
                if ok {
                    Ok(())
                } else {
                    Err(StoreError::DanglingReference {
                        namespace: ns,
                        code: code.clone(),
                        location: loc,
                    })
                }
            };
            match item {
                Item::Person(r) => {
                    check(Namespace::Place, r.birth_place.as_ref())?;
                    check(Namespace::Place, r.residence.as_ref())?;
                    check(Namespace::Time, r.birth_date.as_ref())?;
                }
                Item::Place(_) | Item::Time(_) => {}
                Item::Entity(r) => {
                    if let Some(owner) = &r.owner {
                        if fb.person(owner.as_str()).is_none() {
                            return Err(StoreError::DanglingReference {
                                namespace: Namespace::Person,
                                code: owner.clone(),
                                location: loc,
                            });
                        }
                    }
                    check(Namespace::Place, r.location.as_ref())?;
                }
                Item::Action(f) => {
                    check(Namespace::Person, Some(&f.subject))?;
                    if let Some(crate::model::DirectObject::Ref(code)) = &f.direct_object {
                        check(Namespace::Person, Some(code))?;
                    }
                    check(Namespace::Person, f.indirect_object.as_ref().map(|o| &o.target))?;
                    check(Namespace::Place, f.place.as_ref())?;
                    check(Namespace::Time, f.time.as_ref())?;
                }
                Item::Event(f) => {
                    check(Namespace::Person, Some(&f.subject))?;
                    check(Namespace::Place, f.place.as_ref())?;
                    check(Namespace::Time, f.time.as_ref())?;
                }
                Item::Comm(f) => {
                    check(Namespace::Person, Some(&f.subject))?;
                    check(Namespace::Person, f.addressee.as_ref())?;
                    check(Namespace::Place, f.place.as_ref())?;
                    check(Namespace::Time, f.time.as_ref())?;
                }
            }
        }
        Ok(fb)
    }
}

pub(crate) struct ItemLocated(Item, Location);

impl ItemLocated {
    pub(crate) fn person(r: PersonRecord, l: Location) -> Self {
        ItemLocated(Item::Person(r), l)
    }
    pub(crate) fn place(r: PlaceRecord, l: Location) -> Self {
        ItemLocated(Item::Place(r), l)
    }
    pub(crate) fn time(r: TimeRecord, l: Location) -> Self {
        ItemLocated(Item::Time(r), l)
    }
    pub(crate) fn entity(r: EntityRecord, l: Location) -> Self {
        ItemLocated(Item::Entity(r), l)
    }
    pub(crate) fn action(f: ActionFact, l: Location) -> Self {
        ItemLocated(Item::Action(f), l)
    }
    pub(crate) fn event(f: EventFact, l: Location) -> Self {
        ItemLocated(Item::Event(f), l)
    }
    pub(crate) fn comm(f: CommFact, l: Location) -> Self {
        ItemLocated(Item::Comm(f), l)
    }
}

fn validate_time(r: &TimeRecord, code: &Code, loc: Option<Location>) -> Result<(), StoreError> {
    let invalid = |message: &str| StoreError::Invalid {
        code: code.clone(),
        message: message.to_string(),
        location: loc,
    };
    if let Some(d) = r.day_in_month {
        if !(1..=31).contains(&d) {
            return Err(invalid("day_in_month must be within 1..=31"));
        }
    }
    if let Some(h) = r.hours {
        if h > 23 {
            return Err(invalid("hours must be within 0..=23"));
        }
    }
    Ok(())
}

//! Seeded random records, fact bases and query predicates.

use qa_core::answer::{project, Projection, Slot, SlotValue};
use qa_core::lexicon::Lexicon;
use qa_core::model::{
    classify_code, ActionFact, Code, CommFact, DayOfWeek, DirectObject, EntityKind, EntityRecord, EventFact, FactRef,
    IndirectObject, Month, PartOfDay, PersonRecord, PlaceRecord, PredicateKind, Season, SemanticCode, Sex, Tense,
    TenseType, TimeRecord,
};
use qa_core::question::{
    ActionPattern, CommPattern, EventPattern, IndirectQuery, Pattern, QueryPredicate, QuestionTarget, ReferentQuery,
};
use qa_core::store::FactBase;
use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pick<T: Clone>(r: &mut Rng, xs: &[T]) -> T {
    xs.choose(r).unwrap().clone()
}

fn chance(r: &mut Rng, p: f64) -> bool {
    r.gen_bool(p)
}

/// Same text under case and spacing noise.
fn noisy(r: &mut Rng, s: &str) -> String {
    match r.gen_range(0..4) {
        0 => s.to_uppercase(),
        1 => format!(" {} ", s.replace(' ', "  ")),
        2 => s.to_lowercase(),
        _ => s.to_string(),
    }
}

const FIRST: [&str; 3] = ["John", "Ann", "Peter"];
const LAST: [&str; 3] = ["Brown", "Doe", "Smith"];
const DESIGNATIONS: [&str; 4] = ["captain", "the mate", "sailor", "the man"];
const TEXTS: [&str; 3] = ["red", "dark", "Tall"];
const TONGUES: [&str; 3] = ["english", "french", "german"];
const CODES: [&str; 3] = ["x0", "x1", "t0"];
const TOWNS: [&str; 3] = ["Kiev", "Odessa", "London"];
const STREETS: [&str; 2] = ["Main", "Shore"];
const HOUSES: [&str; 3] = ["5", "005", "12"];
const DETAILS: [&str; 2] = ["roof", "stairs"];
const KINDS: [&str; 2] = ["ship", "station"];
const ENTITY_NAMES: [&str; 4] = ["boat", "men", "voice", "ship's company"];
const ATTRS: [&str; 2] = ["size", "colour"];
const ATTR_VALUES: [&str; 2] = ["small", "black"];

fn maybe<T>(r: &mut Rng, p: f64, f: impl FnOnce(&mut Rng) -> T) -> Option<T> {
    if chance(r, p) {
        Some(f(r))
    } else {
        None
    }
}

fn text_from(r: &mut Rng, p: f64, pool: &[&str]) -> Option<String> {
    maybe(r, p, |r| {
        let s = pick(r, pool);
        noisy(r, s)
    })
}

fn code_from(r: &mut Rng, p: f64) -> Option<Code> {
    maybe(r, p, |r| Code::from(pick(r, &CODES)))
}

/// A person with each field present with probability `p`.
pub fn person(r: &mut Rng, p: f64) -> PersonRecord {
    PersonRecord {
        code: None,
        designation: text_from(r, p, &DESIGNATIONS),
        sex: maybe(r, p, |r| pick(r, Sex::ALL)),
        first_name: text_from(r, p, &FIRST),
        last_name: text_from(r, p, &LAST),
        additional_data: text_from(r, p, &["Mister", "Dr"]),
        birth_place: code_from(r, p),
        nationality: text_from(r, p, &TEXTS),
        mother_tongue: text_from(r, p, &TONGUES),
        other_tongues: maybe(r, p, |r| {
            let n = r.gen_range(1..3);
            (0..n)
                .map(|_| {
                    let t = pick(r, &TONGUES);
                    noisy(r, t)
                })
                .collect()
        }),
        residence: code_from(r, p),
        face: text_from(r, p, &TEXTS),
        nose: text_from(r, p, &TEXTS),
        constitution: text_from(r, p, &TEXTS),
        eyes: text_from(r, p, &TEXTS),
        hair: text_from(r, p, &TEXTS),
        birth_date: code_from(r, p),
        stature: text_from(r, p, &TEXTS),
        temperament: text_from(r, p, &TEXTS),
        psychological_type: text_from(r, p, &TEXTS),
        profession: text_from(r, p, &TEXTS),
    }
}

pub fn place(r: &mut Rng, p: f64) -> PlaceRecord {
    PlaceRecord {
        code: None,
        country: text_from(r, p / 3.0, &["Ukraine", "England"]),
        region_type: text_from(r, p / 3.0, &["state"]),
        region_name: text_from(r, p / 3.0, &["Kent"]),
        territorial_entity: text_from(r, p / 3.0, &["town"]),
        territorial_name: text_from(r, p, &TOWNS),
        location_kind: text_from(r, p / 3.0, &["street"]),
        location_name: text_from(r, p, &STREETS),
        construction_kind: text_from(r, p / 3.0, &KINDS),
        construction_name: text_from(r, p, &HOUSES),
        construction_detail: text_from(r, p, &DETAILS),
        final_location: text_from(r, p, &HOUSES),
        room: text_from(r, p / 3.0, &["kitchen"]),
    }
}

pub fn time(r: &mut Rng, p: f64) -> TimeRecord {
    TimeRecord {
        code: None,
        year: maybe(r, p, |r| r.gen_range(1990..1992)),
        season: maybe(r, p, |r| pick(r, &Season::ALL[..2])),
        month: maybe(r, p, |r| pick(r, &[Month::May, Month::June])),
        day_in_month: maybe(r, p, |r| r.gen_range(1..3)),
        day_of_week: maybe(r, p / 4.0, |r| pick(r, DayOfWeek::ALL)),
        holiday: text_from(r, p / 4.0, &["Easter"]),
        part_of_day: maybe(r, p, |r| pick(r, &PartOfDay::ALL[..2])),
        hours: maybe(r, p, |r| r.gen_range(10..12)),
    }
}

pub fn entity(r: &mut Rng, p: f64, kind: EntityKind) -> EntityRecord {
    let mut e = EntityRecord::new(kind);
    e.designation = text_from(r, p, &ENTITY_NAMES);
    e.name = text_from(r, p, &["Acme", "Neptune"]);
    e.quantity = maybe(r, p, |r| r.gen_range(1..3));
    e.owner = code_from(r, p);
    e.location = code_from(r, p);
    if chance(r, p) {
        let attr = pick(r, &ATTRS);
        let value = pick(r, &ATTR_VALUES);
        e.properties.push((noisy(r, attr), noisy(r, value)));
    }
    e
}

/// A db record and an independently drawn query that often shares its values.
pub fn person_pair(r: &mut Rng) -> (PersonRecord, PersonRecord) {
    let db = person(r, 0.6);
    let density = pick(r, &[0.05, 0.15, 0.4]);
    let mut q = person(r, density);
    blend(r, &mut q.first_name, &db.first_name);
    blend(r, &mut q.last_name, &db.last_name);
    blend(r, &mut q.designation, &db.designation);
    blend(r, &mut q.profession, &db.profession);
    blend(r, &mut q.sex, &db.sex);
    blend(r, &mut q.other_tongues, &db.other_tongues);
    blend(r, &mut q.residence, &db.residence);
    (q, db)
}

pub fn place_pair(r: &mut Rng) -> (PlaceRecord, PlaceRecord) {
    let db = place(r, 0.7);
    let density = pick(r, &[0.2, 0.5, 0.8]);
    let mut q = place(r, density);
    blend(r, &mut q.territorial_name, &db.territorial_name);
    blend(r, &mut q.location_name, &db.location_name);
    blend(r, &mut q.construction_name, &db.construction_name);
    blend(r, &mut q.final_location, &db.final_location);
    blend(r, &mut q.construction_detail, &db.construction_detail);
    (q, db)
}

pub fn time_pair(r: &mut Rng) -> (TimeRecord, TimeRecord) {
    let db = time(r, 0.7);
    let density = pick(r, &[0.2, 0.5, 0.8]);
    let mut q = time(r, density);
    blend(r, &mut q.year, &db.year);
    blend(r, &mut q.season, &db.season);
    blend(r, &mut q.month, &db.month);
    blend(r, &mut q.day_in_month, &db.day_in_month);
    blend(r, &mut q.hours, &db.hours);
    blend(r, &mut q.part_of_day, &db.part_of_day);
    (q, db)
}

pub fn entity_pair(r: &mut Rng) -> (EntityRecord, EntityRecord) {
    let kinds = [EntityKind::Thing, EntityKind::Organization];
    let kind = pick(r, &kinds);
    let db = entity(r, 0.6, kind);
    let kind = if chance(r, 0.9) { db.kind } else { pick(r, &kinds) };
    let density = pick(r, &[0.1, 0.3, 0.6]);
    let mut q = entity(r, density, kind);
    blend(r, &mut q.designation, &db.designation);
    blend(r, &mut q.name, &db.name);
    blend(r, &mut q.quantity, &db.quantity);
    if chance(r, 0.3) {
        q.properties = db.properties.clone();
    }
    (q, db)
}

/// With probability 1/2, a present query field takes the db value.
fn blend<T: Clone>(r: &mut Rng, q: &mut Option<T>, db: &Option<T>) {
    if q.is_some() && db.is_some() && chance(r, 0.5) {
        q.clone_from(db);
    }
}

// ---------------------------------------------------------------------------
// fact bases

pub struct World {
    pub referents: Vec<Code>,
    pub places: Vec<Code>,
    pub times: Vec<Code>,
}

fn verbs_of(lexicon: &Lexicon, code: SemanticCode) -> Vec<String> {
    let mut v: Vec<String> = lexicon
        .verbs()
        .filter(|(_, c)| *c == code)
        .map(|(l, _)| l.to_string())
        .collect();
    v.sort();
    v
}

fn action_codes() -> Vec<SemanticCode> {
    SemanticCode::ALL
        .iter()
        .copied()
        .filter(|c| classify_code(*c) == PredicateKind::Action)
        .collect()
}

fn codes_forming(kind: PredicateKind) -> Vec<SemanticCode> {
    SemanticCode::ALL
        .iter()
        .copied()
        .filter(|c| classify_code(*c) == kind)
        .collect()
}

/// A random fact base of at most `max_facts` facts whose records all have a decidable
/// projection (names or designation, a town, a year).
pub fn fact_base(r: &mut Rng, lexicon: &Lexicon, max_facts: usize) -> FactBase {
    facts(r, lexicon, max_facts).0
}

pub fn facts(r: &mut Rng, lexicon: &Lexicon, max_facts: usize) -> (FactBase, Vec<FactItem>) {
    let mut b = FactBase::builder();
    let mut world = World {
        referents: Vec::new(),
        places: Vec::new(),
        times: Vec::new(),
    };
    for i in 0..r.gen_range(1..5) {
        let code = Code::from(format!("p{i}").as_str());
        let mut p = PersonRecord {
            code: Some(code.clone()),
            designation: text_from(r, 0.5, &DESIGNATIONS),
            first_name: text_from(r, 0.4, &FIRST),
            last_name: text_from(r, 0.5, &LAST),
            hair: text_from(r, 0.3, &TEXTS),
            ..Default::default()
        };
        if p.designation.is_none() && p.last_name.is_none() && p.first_name.is_none() {
            p.last_name = Some(pick(r, &LAST).to_string());
        }
        b.person(p);
        world.referents.push(code);
    }
    for i in 0..r.gen_range(0..4) {
        let code = Code::from(format!("e{i}").as_str());
        let mut e = EntityRecord::new(pick(r, &[EntityKind::Thing, EntityKind::Organization]));
        e.code = Some(code.clone());
        e.designation = text_from(r, 0.8, &ENTITY_NAMES);
        if e.designation.is_none() {
            e.name = Some("Acme".into());
        }
        b.entity(e);
        world.referents.push(code);
    }
    for i in 0..r.gen_range(0..4) {
        let code = Code::from(format!("x{i}").as_str());
        let street = text_from(r, 0.5, &STREETS);
        let house = street.as_ref().and_then(|_| text_from(r, 0.5, &HOUSES));
        let apartment = house.as_ref().and_then(|_| text_from(r, 0.3, &HOUSES));
        b.place(PlaceRecord {
            code: Some(code.clone()),
            territorial_name: Some(pick(r, &TOWNS).to_string()),
            location_name: street,
            construction_name: house,
            final_location: apartment,
            construction_kind: text_from(r, 0.2, &KINDS),
            ..Default::default()
        });
        world.places.push(code);
    }
    for i in 0..r.gen_range(0..4) {
        let code = Code::from(format!("t{i}").as_str());
        let month = maybe(r, 0.6, |r| pick(r, &[Month::May, Month::June]));
        let day = month.and_then(|_| maybe(r, 0.5, |r| r.gen_range(1..3)));
        b.time(TimeRecord {
            code: Some(code.clone()),
            year: Some(r.gen_range(1990..1992)),
            season: if day.is_none() {
                maybe(r, 0.3, |r| pick(r, &Season::ALL[..2]))
            } else {
                None
            },
            month,
            day_in_month: day,
            part_of_day: day.and_then(|_| maybe(r, 0.5, |r| pick(r, &PartOfDay::ALL[..2]))),
            ..Default::default()
        });
        world.times.push(code);
    }
    let n = r.gen_range(0..=max_facts);
    let mut items = Vec::new();
    for i in 0..n {
        let item = fact(r, lexicon, &world, i);
        match &item {
            FactItem::Action(a) => b.action(a.clone()),
            FactItem::Event(e) => b.event(e.clone()),
            FactItem::Comm(c) => b.comm(c.clone()),
        };
        items.push(item);
    }
    (b.build().expect("generated fact base is valid"), items)
}

#[derive(Debug, Clone)]
pub enum FactItem {
    Action(ActionFact),
    Event(EventFact),
    Comm(CommFact),
}

fn any_code(r: &mut Rng, codes: &[Code], p: f64) -> Option<Code> {
    if codes.is_empty() || !chance(r, p) {
        None
    } else {
        Some(pick(r, codes))
    }
}

fn tense(r: &mut Rng) -> (Tense, TenseType) {
    let t = pick(r, &[Tense::Past, Tense::Past, Tense::Present]);
    let tt = pick(
        r,
        &[TenseType::Indefinite, TenseType::Indefinite, TenseType::Continuous],
    );
    (t, tt)
}

pub fn fact(r: &mut Rng, lexicon: &Lexicon, w: &World, i: usize) -> FactItem {
    let (t, tt) = tense(r);
    let negation = chance(r, 0.1);
    let subject = pick(r, &w.referents);
    let place = any_code(r, &w.places, 0.4);
    let time = any_code(r, &w.times, 0.4);
    match r.gen_range(0..10) {
        0..=5 => {
            let code = if chance(r, 0.3) {
                SemanticCode::Be
            } else {
                pick(r, &action_codes())
            };
            let direct_object = if code == SemanticCode::Be {
                None
            } else if chance(r, 0.3) {
                Some(DirectObject::Literal(pick(r, &["his eyes", "where he is"]).to_string()))
            } else {
                any_code(r, &w.referents, 0.5).map(DirectObject::Ref)
            };
            let indirect_object = any_code(r, &w.referents, 0.3).map(|target| IndirectObject {
                target,
                preposition: maybe(r, 0.7, |r| pick(r, &["to", "in"]).to_string()),
            });
            FactItem::Action(ActionFact {
                code: Code::from(format!("a{i}").as_str()),
                semantic_type: code,
                verb: pick(r, &verbs_of(lexicon, code)),
                negation,
                tense: t,
                tense_type: tt,
                subject,
                direct_object,
                indirect_object,
                complement: if code == SemanticCode::Be {
                    text_from(r, 0.6, &["mate", "asleep", "a captain"])
                } else {
                    None
                },
                place,
                time,
                purpose: text_from(r, 0.15, &["to save man"]),
                way: text_from(r, 0.2, &["loudly", "fast"]),
            })
        }
        6..=7 => {
            let kind = pick(
                r,
                &[PredicateKind::Job, PredicateKind::Message, PredicateKind::Intelligence],
            );
            let code = pick(r, &codes_forming(kind));
            FactItem::Comm(CommFact {
                code: Code::from(format!("c{i}").as_str()),
                kind,
                verb: pick(r, &verbs_of(lexicon, code)),
                subject,
                addressee: any_code(r, &w.referents, 0.5),
                content: text_from(r, 0.7, &["to sail north-west", "the man did voyage", "something black"]),
                negation,
                tense: t,
                tense_type: tt,
                place,
                time,
            })
        }
        _ => {
            let verb = pick(r, &verbs_of(lexicon, SemanticCode::Change));
            let scale = if chance(r, 0.85) {
                lexicon.event_scale(&verb).map(str::to_string)
            } else {
                maybe(r, 0.5, |r| pick(r, &["local", "personal"]).to_string())
            };
            FactItem::Event(EventFact {
                code: Code::from(format!("v{i}").as_str()),
                verb,
                scale,
                subject,
                negation,
                tense: t,
                tense_type: tt,
                place,
                time,
            })
        }
    }
}

// ---------------------------------------------------------------------------
// queries

fn referent_query(r: &mut Rng, value: SlotValue, fb: &FactBase) -> Option<ReferentQuery> {
    match project(&value, fb)? {
        Projection::Referent(ReferentQuery::Person(p)) if p.designation.is_some() && chance(r, 0.3) => {
            Some(ReferentQuery::phrase(format!("the {}", p.designation.unwrap())))
        }
        Projection::Referent(q) => Some(q),
        Projection::Text(t) => Some(ReferentQuery::phrase(t)),
        _ => None,
    }
}

fn random_referent(r: &mut Rng, fb: &FactBase) -> Option<ReferentQuery> {
    let codes: Vec<Code> = fb
        .persons()
        .iter()
        .filter_map(|p| p.code.clone())
        .chain(fb.entities().iter().filter_map(|e| e.code.clone()))
        .collect();
    if codes.is_empty() || chance(r, 0.2) {
        return Some(ReferentQuery::phrase(pick(r, &["captain", "the boat", "nobody"])));
    }
    let code = pick(r, &codes);
    referent_query(r, SlotValue::Referent(code), fb)
}

fn random_place(r: &mut Rng, fb: &FactBase) -> Option<PlaceRecord> {
    match fb.places().choose(r) {
        Some(p) if chance(r, 0.8) => match project(&SlotValue::Place(p.code.clone()?), fb)? {
            Projection::Place(q) => Some(q),
            _ => None,
        },
        _ => Some(place(r, 0.5)),
    }
}

fn random_time(r: &mut Rng, fb: &FactBase) -> Option<TimeRecord> {
    match fb.times().choose(r) {
        Some(t) if chance(r, 0.8) => match project(&SlotValue::Time(t.code.clone()?), fb)? {
            Projection::Time(q) => Some(q),
            _ => None,
        },
        _ => Some(time(r, 0.5)),
    }
}

/// Keep (project the fact's value), drop, or replace a query slot.
enum Choice {
    Keep,
    Drop,
    Other,
}

fn choice(r: &mut Rng) -> Choice {
    match r.gen_range(0..20) {
        0..=10 => Choice::Keep,
        11..=16 => Choice::Drop,
        _ => Choice::Other,
    }
}

fn referent_slot(r: &mut Rng, fact: Option<&Code>, fb: &FactBase) -> Option<ReferentQuery> {
    match (choice(r), fact) {
        (Choice::Keep, Some(c)) => referent_query(r, SlotValue::Referent(c.clone()), fb),
        (Choice::Other, _) => random_referent(r, fb),
        _ => None,
    }
}

fn place_slot(r: &mut Rng, fact: Option<&Code>, fb: &FactBase) -> Option<PlaceRecord> {
    match (choice(r), fact) {
        (Choice::Keep, Some(c)) => match project(&SlotValue::Place(c.clone()), fb)? {
            Projection::Place(p) => Some(p),
            _ => None,
        },
        (Choice::Other, _) => random_place(r, fb),
        _ => None,
    }
}

fn time_slot(r: &mut Rng, fact: Option<&Code>, fb: &FactBase) -> Option<TimeRecord> {
    match (choice(r), fact) {
        (Choice::Keep, Some(c)) => match project(&SlotValue::Time(c.clone()), fb)? {
            Projection::Time(t) => Some(t),
            _ => None,
        },
        (Choice::Other, _) => random_time(r, fb),
        _ => None,
    }
}

fn text_slot(r: &mut Rng, fact: &Option<String>, pool: &[&str]) -> Option<String> {
    match (choice(r), fact) {
        (Choice::Keep, Some(t)) => Some(noisy(r, t)),
        (Choice::Other, _) => Some(pick(r, pool).to_string()),
        _ => None,
    }
}

fn verb_like(r: &mut Rng, lexicon: &Lexicon, verb: &str, code: SemanticCode) -> String {
    match r.gen_range(0..5) {
        0..=2 => verb.to_string(),
        3 => lexicon
            .synonym_groups()
            .iter()
            .find(|g| g.contains(verb))
            .map(|g| pick(r, &g.iter().cloned().collect::<Vec<_>>()))
            .unwrap_or_else(|| verb.to_string()),
        _ => pick(r, &verbs_of(lexicon, code)),
    }
}

fn flip<T: Copy>(r: &mut Rng, value: T, all: &[T]) -> T {
    if chance(r, 0.1) {
        pick(r, all)
    } else {
        value
    }
}

/// A general query, usually modelled on one of the base's facts.
pub fn general_query(r: &mut Rng, lexicon: &Lexicon, fb: &FactBase) -> QueryPredicate {
    let facts: Vec<FactRef<'_>> = fb.facts().collect();
    let seed = if !facts.is_empty() && chance(r, 0.85) {
        Some(pick(r, &facts))
    } else {
        None
    };
    let seed = match seed {
        Some(f) => f,
        None => {
            let world = World {
                referents: fb
                    .persons()
                    .iter()
                    .filter_map(|p| p.code.clone())
                    .chain(fb.entities().iter().filter_map(|e| e.code.clone()))
                    .collect(),
                places: fb.places().iter().filter_map(|p| p.code.clone()).collect(),
                times: fb.times().iter().filter_map(|t| t.code.clone()).collect(),
            };
            let item = fact(r, lexicon, &world, 999);
            return from_item(r, lexicon, fb, &item);
        }
    };
    let item = match seed {
        FactRef::Action(a) => FactItem::Action(a.clone()),
        FactRef::Event(e) => FactItem::Event(e.clone()),
        FactRef::Comm(c) => FactItem::Comm(c.clone()),
    };
    from_item(r, lexicon, fb, &item)
}

fn from_item(r: &mut Rng, lexicon: &Lexicon, fb: &FactBase, item: &FactItem) -> QueryPredicate {
    let (kind, pattern) = match item {
        FactItem::Action(a) => {
            let direct_object = match (&a.direct_object, choice(r)) {
                (Some(DirectObject::Ref(c)), Choice::Keep) => referent_query(r, SlotValue::Referent(c.clone()), fb),
                (Some(DirectObject::Literal(t)), Choice::Keep) => Some(ReferentQuery::phrase(noisy(r, t))),
                (_, Choice::Other) if a.semantic_type != SemanticCode::Be => random_referent(r, fb),
                _ => None,
            };
            let indirect_object = match (&a.indirect_object, choice(r)) {
                (Some(i), Choice::Keep) => {
                    referent_query(r, SlotValue::Referent(i.target.clone()), fb).map(|target| IndirectQuery {
                        target,
                        preposition: if chance(r, 0.8) {
                            i.preposition.clone()
                        } else {
                            Some("from".into())
                        },
                    })
                }
                (_, Choice::Other) if a.semantic_type != SemanticCode::Be => {
                    random_referent(r, fb).map(|target| IndirectQuery {
                        target,
                        preposition: None,
                    })
                }
                _ => None,
            };
            (
                PredicateKind::Action,
                Pattern::Action(ActionPattern {
                    semantic_type: a.semantic_type,
                    verb: verb_like(r, lexicon, &a.verb, a.semantic_type),
                    negation: flip(r, a.negation, &[true, false]),
                    tense: flip(r, a.tense, &[Tense::Past, Tense::Present]),
                    tense_type: flip(r, a.tense_type, &[TenseType::Indefinite, TenseType::Continuous]),
                    subject: referent_slot(r, Some(&a.subject), fb),
                    direct_object,
                    indirect_object,
                    complement: text_slot(r, &a.complement, &["mate", "captain"]),
                    place: place_slot(r, a.place.as_ref(), fb),
                    time: time_slot(r, a.time.as_ref(), fb),
                    purpose: text_slot(r, &a.purpose, &["to sleep"]),
                    way: text_slot(r, &a.way, &["quietly", "fast"]),
                }),
            )
        }
        FactItem::Event(e) => (
            PredicateKind::Event,
            Pattern::Event(EventPattern {
                verb: verb_like(r, lexicon, &e.verb, SemanticCode::Change),
                scale: None,
                subject: referent_slot(r, Some(&e.subject), fb),
                negation: flip(r, e.negation, &[true, false]),
                tense: e.tense,
                tense_type: e.tense_type,
                place: place_slot(r, e.place.as_ref(), fb),
                time: time_slot(r, e.time.as_ref(), fb),
            }),
        ),
        FactItem::Comm(c) => {
            let code = lexicon.classify_verb(&c.verb).unwrap();
            (
                c.kind,
                Pattern::Comm(CommPattern {
                    kind: c.kind,
                    verb: verb_like(r, lexicon, &c.verb, code),
                    subject: referent_slot(r, Some(&c.subject), fb),
                    addressee: referent_slot(r, c.addressee.as_ref(), fb),
                    content: text_slot(r, &c.content, &["to save man"]),
                    negation: flip(r, c.negation, &[true, false]),
                    tense: flip(r, c.tense, &[Tense::Past, Tense::Present]),
                    tense_type: c.tense_type,
                    place: place_slot(r, c.place.as_ref(), fb),
                    time: time_slot(r, c.time.as_ref(), fb),
                }),
            )
        }
    };
    QueryPredicate {
        kind,
        pattern,
        questioned_slot: QuestionTarget::YesNo,
        slot: None,
        restriction: None,
        retry: None,
    }
}

/// Opens one slot of a general query, turning it into a special one.
pub fn special_query(r: &mut Rng, general: &QueryPredicate) -> QueryPredicate {
    let mut q = general.clone();
    let (slot, target) = match &mut q.pattern {
        Pattern::Action(a) => {
            let options: &[(Slot, QuestionTarget)] = if a.semantic_type == SemanticCode::Be {
                &[
                    (Slot::Subject, QuestionTarget::Subject),
                    (Slot::Complement, QuestionTarget::DirectObject),
                    (Slot::Place, QuestionTarget::Place),
                    (Slot::Time, QuestionTarget::Time),
                ]
            } else {
                &[
                    (Slot::Subject, QuestionTarget::Subject),
                    (Slot::DirectObject, QuestionTarget::DirectObject),
                    (Slot::IndirectObject, QuestionTarget::IndirectObject),
                    (Slot::Place, QuestionTarget::Place),
                    (Slot::Time, QuestionTarget::Time),
                    (Slot::Way, QuestionTarget::Way),
                    (Slot::Purpose, QuestionTarget::Purpose),
                ]
            };
            let (slot, target) = pick(r, options);
            match slot {
                Slot::Subject => a.subject = None,
                Slot::Complement => a.complement = None,
                Slot::DirectObject => a.direct_object = None,
                Slot::IndirectObject => a.indirect_object = None,
                Slot::Place => a.place = None,
                Slot::Time => a.time = None,
                Slot::Way => a.way = None,
                _ => a.purpose = None,
            }
            (slot, target)
        }
        Pattern::Event(e) => {
            let (slot, target) = pick(
                r,
                &[
                    (Slot::Subject, QuestionTarget::Subject),
                    (Slot::Place, QuestionTarget::Place),
                    (Slot::Time, QuestionTarget::Time),
                ],
            );
            match slot {
                Slot::Subject => e.subject = None,
                Slot::Place => e.place = None,
                _ => e.time = None,
            }
            (slot, target)
        }
        Pattern::Comm(c) => {
            let (slot, target) = pick(
                r,
                &[
                    (Slot::Subject, QuestionTarget::Subject),
                    (Slot::Addressee, QuestionTarget::IndirectObject),
                    (Slot::Content, QuestionTarget::DirectObject),
                    (Slot::Place, QuestionTarget::Place),
                    (Slot::Time, QuestionTarget::Time),
                ],
            );
            match slot {
                Slot::Subject => c.subject = None,
                Slot::Addressee => c.addressee = None,
                Slot::Content => c.content = None,
                Slot::Place => c.place = None,
                _ => c.time = None,
            }
            (slot, target)
        }
    };
    q.slot = Some(slot);
    q.questioned_slot = target;
    q
}

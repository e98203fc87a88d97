//! Straight-line reference implementations used to cross-check the engine.

use qa_core::identity::IdentityError;
use qa_core::lexicon::Lexicon;
use qa_core::model::{Code, DirectObject, EntityRecord, PersonRecord, PlaceRecord, SemanticCode, TimeRecord};
use qa_core::question::{Pattern, QueryPredicate, ReferentQuery};
use qa_core::store::{FactBase, Referent};
use qa_core::{AnswerKind, CannotReason, IdVerdict};

const DETERMINERS: [&str; 14] = [
    "a", "an", "the", "his", "her", "its", "their", "my", "your", "our", "this", "that", "these", "those",
];

fn fold(s: &str) -> String {
    s.split_whitespace()
        .map(str::to_lowercase)
        .collect::<Vec<_>>()
        .join(" ")
}

fn phrase(s: &str) -> String {
    let f = fold(s);
    let mut words: Vec<&str> = f.split(' ').collect();
    if words.len() > 1 && DETERMINERS.contains(&words[0]) {
        words.remove(0);
    }
    words.join(" ")
}

fn number(s: &str) -> String {
    let f = fold(s);
    if !f.is_empty() && f.bytes().all(|b| b.is_ascii_digit()) {
        let t = f.trim_start_matches('0');
        return if t.is_empty() { "0".into() } else { t.into() };
    }
    f
}

/// `(present in query, coincides with db)` for one field.
type Field = (bool, bool);

fn text(q: &Option<String>, db: &Option<String>) -> Field {
    field(q, db, |a, b| fold(a) == fold(b))
}

fn field<T>(q: &Option<T>, db: &Option<T>, eq: impl Fn(&T, &T) -> bool) -> Field {
    match (q, db) {
        (None, _) => (false, true),
        (Some(_), None) => (true, false),
        (Some(a), Some(b)) => (true, eq(a, b)),
    }
}

fn same<T: PartialEq>(q: &Option<T>, db: &Option<T>) -> Field {
    field(q, db, |a, b| a == b)
}

fn verdict(identical: bool) -> IdVerdict {
    if identical {
        IdVerdict::Identical
    } else {
        IdVerdict::NotIdentical
    }
}

pub fn person(q: &PersonRecord, db: &PersonRecord) -> Result<IdVerdict, IdentityError> {
    let first = text(&q.first_name, &db.first_name);
    let last = text(&q.last_name, &db.last_name);
    let designation = field(&q.designation, &db.designation, |a, b| phrase(a) == phrase(b));
    let tongues = field(&q.other_tongues, &db.other_tongues, |a, b| {
        let mut a: Vec<String> = a.iter().map(|s| fold(s)).collect();
        let mut b: Vec<String> = b.iter().map(|s| fold(s)).collect();
        a.sort();
        b.sort();
        a == b
    });
    let properties = [
        designation,
        same(&q.sex, &db.sex),
        text(&q.additional_data, &db.additional_data),
        same(&q.birth_place, &db.birth_place),
        text(&q.nationality, &db.nationality),
        text(&q.mother_tongue, &db.mother_tongue),
        tongues,
        same(&q.residence, &db.residence),
        text(&q.face, &db.face),
        text(&q.nose, &db.nose),
        text(&q.constitution, &db.constitution),
        text(&q.eyes, &db.eyes),
        text(&q.hair, &db.hair),
        same(&q.birth_date, &db.birth_date),
        text(&q.stature, &db.stature),
        text(&q.temperament, &db.temperament),
        text(&q.psychological_type, &db.psychological_type),
        text(&q.profession, &db.profession),
    ];
    let property_count = properties.iter().filter(|p| p.0).count();

    if !first.0 && !last.0 && property_count == 0 {
        return Err(IdentityError::EmptyQuery);
    }
    // only the first or the last name
    if first.0 != last.0 && property_count == 0 {
        return Ok(verdict(if first.0 { first.1 } else { last.1 }));
    }
    // only first and last name
    if first.0 && last.0 && property_count == 0 {
        return Ok(verdict(first.1 && last.1));
    }
    // a name and properties
    if (first.0 || last.0) && property_count > 0 {
        let props_ok = properties.iter().filter(|p| p.0).all(|p| p.1);
        return Ok(verdict(first.1 && last.1 && props_ok));
    }
    // designation alone
    if property_count == 1 && designation.0 {
        return Ok(verdict(designation.1));
    }
    Ok(IdVerdict::Undecided)
}

pub fn place(q: &PlaceRecord, db: &PlaceRecord) -> Result<IdVerdict, IdentityError> {
    let town = text(&q.territorial_name, &db.territorial_name);
    let street = text(&q.location_name, &db.location_name);
    let house = field(&q.construction_name, &db.construction_name, |a, b| {
        number(a) == number(b)
    });
    let apartment = field(&q.final_location, &db.final_location, |a, b| number(a) == number(b));
    let detail = text(&q.construction_detail, &db.construction_detail);
    let others = [
        q.country.is_some(),
        q.region_type.is_some(),
        q.region_name.is_some(),
        q.territorial_entity.is_some(),
        q.location_kind.is_some(),
        q.construction_kind.is_some(),
        q.room.is_some(),
    ];
    let other = others.iter().any(|b| *b);
    let present = (town.0, street.0, house.0, apartment.0, detail.0);

    if !other && present == (false, false, false, false, false) {
        return Err(IdentityError::EmptyQuery);
    }
    if other {
        return Ok(IdVerdict::Undecided);
    }
    // steps 1-2
    if present == (true, false, false, false, false) {
        return Ok(verdict(town.1));
    }
    // steps 3-4
    if present == (true, true, false, false, false) {
        return Ok(verdict(town.1 && street.1));
    }
    // steps 5-6
    if present == (true, true, true, false, false) {
        return Ok(verdict(town.1 && street.1 && house.1));
    }
    // steps 7-8
    if present == (true, true, true, true, false) {
        return Ok(verdict(town.1 && street.1 && house.1 && apartment.1));
    }
    // steps 9-10
    if present == (true, true, true, false, true) {
        return Ok(verdict(town.1 && street.1 && house.1 && detail.1));
    }
    Ok(IdVerdict::Undecided)
}

pub fn time(q: &TimeRecord, db: &TimeRecord) -> Result<IdVerdict, IdentityError> {
    let year = same(&q.year, &db.year);
    let season = same(&q.season, &db.season);
    let month = same(&q.month, &db.month);
    let day = same(&q.day_in_month, &db.day_in_month);
    let hours = same(&q.hours, &db.hours);
    let part = same(&q.part_of_day, &db.part_of_day);
    let other = q.day_of_week.is_some() || q.holiday.is_some();
    let any = year.0 || season.0 || month.0 || day.0 || hours.0 || part.0 || other;

    if !any {
        return Err(IdentityError::EmptyQuery);
    }
    if other || !year.0 {
        return Ok(IdVerdict::Undecided);
    }
    // steps 1-2: only the year
    if !season.0 && !month.0 && !day.0 && !hours.0 && !part.0 {
        return Ok(verdict(year.1));
    }
    // steps 3-4: year and season or month
    if (season.0 || month.0) && !day.0 && !hours.0 && !part.0 {
        return Ok(verdict(year.1 && season.1 && month.1));
    }
    // steps 5-6: year, month, day
    if month.0 && day.0 && !season.0 && !hours.0 && !part.0 {
        return Ok(verdict(year.1 && month.1 && day.1));
    }
    // steps 7-8: year, month, day, and hours or part of day
    if month.0 && day.0 && !season.0 && (hours.0 || part.0) {
        return Ok(verdict(year.1 && month.1 && day.1 && hours.1 && part.1));
    }
    Ok(IdVerdict::Undecided)
}

pub fn entity(q: &EntityRecord, db: &EntityRecord) -> Result<IdVerdict, IdentityError> {
    if q.kind != db.kind {
        return Err(IdentityError::KindMismatch {
            query: q.kind,
            db: db.kind,
        });
    }
    let name = text(&q.name, &db.name);
    let designation = field(&q.designation, &db.designation, |a, b| phrase(a) == phrase(b));
    let mut props = vec![
        same(&q.quantity, &db.quantity),
        same(&q.owner, &db.owner),
        same(&q.location, &db.location),
    ];
    for (attr, value) in &q.properties {
        let found = db
            .properties
            .iter()
            .any(|(a, v)| fold(a) == fold(attr) && fold(v) == fold(value));
        props.push((true, found));
    }
    let ids = name.0 || designation.0;
    let has_props = props.iter().any(|p| p.0);
    if !ids && !has_props {
        return Err(IdentityError::EmptyQuery);
    }
    if ids && !has_props {
        return Ok(verdict(name.1 && designation.1));
    }
    if ids {
        return Ok(verdict(name.1 && designation.1 && props.iter().all(|p| p.1)));
    }
    Ok(IdVerdict::Undecided)
}

fn identical(r: Result<IdVerdict, IdentityError>) -> bool {
    r == Ok(IdVerdict::Identical)
}

/// Does a referent query denote the record behind `code`?
pub fn referent(q: &ReferentQuery, code: &Code, fb: &FactBase) -> bool {
    match (q, fb.referent(code.as_str())) {
        (_, None) => false,
        (ReferentQuery::Person(q), Some(Referent::Person(db))) => identical(person(q, db)),
        (ReferentQuery::Entity(q), Some(Referent::Entity(db))) => q.kind == db.kind && identical(entity(q, db)),
        (ReferentQuery::Phrase(np), Some(Referent::Person(db))) => {
            let q = PersonRecord {
                designation: Some(np.text.clone()),
                ..Default::default()
            };
            identical(person(&q, db))
        }
        (ReferentQuery::Phrase(np), Some(Referent::Entity(db))) => {
            let mut q = EntityRecord::new(db.kind);
            q.designation = Some(np.text.clone());
            identical(entity(&q, db))
        }
        _ => false,
    }
}

fn slot<Q>(q: Option<&Q>, db: Option<&Code>, eq: impl Fn(&Q, &Code) -> bool) -> bool {
    match (q, db) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(q), Some(c)) => eq(q, c),
    }
}

fn place_slot(q: &Option<PlaceRecord>, db: Option<&Code>, fb: &FactBase) -> bool {
    slot(q.as_ref(), db, |q, c| {
        fb.place(c.as_str()).is_some_and(|p| identical(place(q, p)))
    })
}

fn time_slot(q: &Option<TimeRecord>, db: Option<&Code>, fb: &FactBase) -> bool {
    slot(q.as_ref(), db, |q, c| {
        fb.time(c.as_str()).is_some_and(|t| identical(time(q, t)))
    })
}

fn referent_slot(q: Option<&ReferentQuery>, db: Option<&Code>, fb: &FactBase) -> bool {
    slot(q, db, |q, c| referent(q, c, fb))
}

fn text_slot(q: &Option<String>, db: &Option<String>, norm: fn(&str) -> String) -> bool {
    match (q, db) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(a), Some(b)) => norm(a) == norm(b),
    }
}

pub fn synonymous(lexicon: &Lexicon, a: &str, b: &str) -> bool {
    let (a, b) = (fold(&a.replace('_', " ")), fold(&b.replace('_', " ")));
    if a == b {
        return true;
    }
    lexicon
        .synonym_groups()
        .iter()
        .any(|g| g.contains(&a) && g.contains(&b))
}

/// Expected general answer by a full scan of the fact base in file order.
pub fn answer_general(query: &QueryPredicate, fb: &FactBase, lexicon: &Lexicon) -> AnswerKind {
    let subject = query_subject(query);
    match &query.pattern {
        Pattern::Action(q) if q.semantic_type == SemanticCode::Be => {
            for f in fb.actions() {
                if f.semantic_type == SemanticCode::Be
                    && f.negation == q.negation
                    && referent_slot(subject, Some(&f.subject), fb)
                    && place_slot(&q.place, f.place.as_ref(), fb)
                    && time_slot(&q.time, f.time.as_ref(), fb)
                    && text_slot(&q.complement, &f.complement, phrase)
                {
                    return AnswerKind::Yes;
                }
            }
            if q.complement.is_some() {
                return AnswerKind::No;
            }
            for f in fb.events() {
                if f.negation == q.negation
                    && referent_slot(subject, Some(&f.subject), fb)
                    && place_slot(&q.place, f.place.as_ref(), fb)
                    && time_slot(&q.time, f.time.as_ref(), fb)
                {
                    return AnswerKind::Yes;
                }
            }
            for f in fb.comms() {
                if f.negation == q.negation
                    && referent_slot(subject, Some(&f.subject), fb)
                    && place_slot(&q.place, f.place.as_ref(), fb)
                    && time_slot(&q.time, f.time.as_ref(), fb)
                {
                    return AnswerKind::Yes;
                }
            }
            AnswerKind::No
        }
        Pattern::Action(q) => {
            for f in fb.actions() {
                if f.semantic_type != q.semantic_type
                    || f.negation != q.negation
                    || f.tense != q.tense
                    || f.tense_type != q.tense_type
                {
                    continue;
                }
                let direct = match (&q.direct_object, &f.direct_object) {
                    (None, _) => true,
                    (Some(_), None) => false,
                    (Some(q), Some(DirectObject::Ref(c))) => referent(q, c, fb),
                    (Some(ReferentQuery::Phrase(np)), Some(DirectObject::Literal(t))) => phrase(&np.text) == phrase(t),
                    (Some(_), Some(DirectObject::Literal(_))) => false,
                };
                let indirect = match (&q.indirect_object, &f.indirect_object) {
                    (None, _) => true,
                    (Some(_), None) => false,
                    (Some(qi), Some(fi)) => {
                        let prep = match (&qi.preposition, &fi.preposition) {
                            (Some(a), Some(b)) => fold(a) == fold(b),
                            _ => true,
                        };
                        prep && referent(&qi.target, &fi.target, fb)
                    }
                };
                if synonymous(lexicon, &q.verb, &f.verb)
                    && referent_slot(subject, Some(&f.subject), fb)
                    && direct
                    && indirect
                    && text_slot(&q.complement, &f.complement, phrase)
                    && place_slot(&q.place, f.place.as_ref(), fb)
                    && time_slot(&q.time, f.time.as_ref(), fb)
                    && text_slot(&q.purpose, &f.purpose, fold)
                    && text_slot(&q.way, &f.way, fold)
                {
                    return AnswerKind::Yes;
                }
            }
            AnswerKind::CannotAnswer(CannotReason::InferenceRequired)
        }
        Pattern::Event(q) => {
            let scale = q
                .scale
                .clone()
                .or_else(|| lexicon.event_scale(&q.verb).map(str::to_string));
            for f in fb.events() {
                let scale_ok = match &scale {
                    None => true,
                    Some(s) => f.scale.as_deref().is_some_and(|t| fold(t) == fold(s)),
                };
                if scale_ok
                    && f.negation == q.negation
                    && synonymous(lexicon, &q.verb, &f.verb)
                    && referent_slot(subject, Some(&f.subject), fb)
                    && place_slot(&q.place, f.place.as_ref(), fb)
                    && time_slot(&q.time, f.time.as_ref(), fb)
                {
                    return AnswerKind::Yes;
                }
            }
            AnswerKind::No
        }
        Pattern::Comm(q) => {
            for f in fb.comms() {
                if f.kind == q.kind
                    && f.negation == q.negation
                    && f.tense == q.tense
                    && f.tense_type == q.tense_type
                    && synonymous(lexicon, &q.verb, &f.verb)
                    && referent_slot(subject, Some(&f.subject), fb)
                    && referent_slot(q.addressee.as_ref(), f.addressee.as_ref(), fb)
                    && text_slot(&q.content, &f.content, fold)
                    && place_slot(&q.place, f.place.as_ref(), fb)
                    && time_slot(&q.time, f.time.as_ref(), fb)
                {
                    return AnswerKind::Yes;
                }
            }
            AnswerKind::CannotAnswer(CannotReason::InferenceRequired)
        }
    }
}

fn query_subject(query: &QueryPredicate) -> Option<&ReferentQuery> {
    match &query.pattern {
        Pattern::Action(a) => a.subject.as_ref(),
        Pattern::Event(e) => e.subject.as_ref(),
        Pattern::Comm(c) => c.subject.as_ref(),
    }
}

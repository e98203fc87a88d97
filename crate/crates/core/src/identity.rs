//! Identification: does a query sub-predicate denote the same object as a database record?
//!
//! The query is always the first argument. Each ladder selects exactly one branch from the
//! set of populated query fields; a query field that the record lacks never coincides.

use std::fmt;

use crate::model::{Code, EntityKind, EntityRecord, PersonRecord, PlaceRecord, TimeRecord};
use crate::question::ReferentQuery;
use crate::store::{FactBase, Referent};
use crate::text::{fold, same_number_text, same_phrase, same_text};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdVerdict {
    Identical,
    NotIdentical,
    /// No branch of the ladder applies.
    Undecided,
}

impl fmt::Display for IdVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdVerdict::Identical => "IDENTICAL",
            IdVerdict::NotIdentical => "NOT_IDENTICAL",
            IdVerdict::Undecided => "UNDECIDED",
        })
    }
}

/// A verdict together with the ladder branch that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decision {
    pub verdict: IdVerdict,
    pub branch: &'static str,
}

impl Decision {
    fn of(branch: &'static str, equal: bool) -> Self {
        let verdict = if equal {
            IdVerdict::Identical
        } else {
            IdVerdict::NotIdentical
        };
        log::debug!("identification branch {branch}: {verdict}");
        Decision { verdict, branch }
    }

    fn undecided(branch: &'static str) -> Self {
        log::debug!("identification branch {branch}: UNDECIDED");
        Decision {
            verdict: IdVerdict::Undecided,
            branch,
        }
    }

    pub fn is_identical(&self) -> bool {
        self.verdict == IdVerdict::Identical
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdentityError {
    #[error("query predicate has no populated field")]
    EmptyQuery,
    #[error("cannot compare a {query} with a {db}")]
    KindMismatch { query: EntityKind, db: EntityKind },
    #[error("dangling reference `{0}`")]
    DanglingReference(Code),
}

/// Query field present: must coincide. Query field absent: not part of the comparison.
fn coincide<T>(q: &Option<T>, db: &Option<T>, eq: impl Fn(&T, &T) -> bool) -> bool {
    match (q, db) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(a), Some(b)) => eq(a, b),
    }
}

fn text(q: &Option<String>, db: &Option<String>) -> bool {
    coincide(q, db, |a, b| same_text(a, b))
}

fn phrase(q: &Option<String>, db: &Option<String>) -> bool {
    coincide(q, db, |a, b| same_phrase(a, b))
}

fn number(q: &Option<String>, db: &Option<String>) -> bool {
    coincide(q, db, |a, b| same_number_text(a, b))
}

fn exact<T: PartialEq>(q: &Option<T>, db: &Option<T>) -> bool {
    coincide(q, db, |a, b| a == b)
}

fn tongues(q: &Option<Vec<String>>, db: &Option<Vec<String>>) -> bool {
    coincide(q, db, |a, b| {
        let sorted = |v: &[String]| {
            let mut v: Vec<String> = v.iter().map(|s| fold(s)).collect();
            v.sort();
            v
        };
        sorted(a) == sorted(b)
    })
}

/// Populated person fields other than code and the two names.
fn person_properties(p: &PersonRecord) -> usize {
    [
        p.designation.is_some(),
        p.sex.is_some(),
        p.additional_data.is_some(),
        p.birth_place.is_some(),
        p.nationality.is_some(),
        p.mother_tongue.is_some(),
        p.other_tongues.is_some(),
        p.residence.is_some(),
        p.face.is_some(),
        p.nose.is_some(),
        p.constitution.is_some(),
        p.eyes.is_some(),
        p.hair.is_some(),
        p.birth_date.is_some(),
        p.stature.is_some(),
        p.temperament.is_some(),
        p.psychological_type.is_some(),
        p.profession.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count()
}

fn person_properties_coincide(q: &PersonRecord, db: &PersonRecord) -> bool {
    phrase(&q.designation, &db.designation)
        && exact(&q.sex, &db.sex)
        && text(&q.additional_data, &db.additional_data)
        && exact(&q.birth_place, &db.birth_place)
        && text(&q.nationality, &db.nationality)
        && text(&q.mother_tongue, &db.mother_tongue)
        && tongues(&q.other_tongues, &db.other_tongues)
        && exact(&q.residence, &db.residence)
        && text(&q.face, &db.face)
        && text(&q.nose, &db.nose)
        && text(&q.constitution, &db.constitution)
        && text(&q.eyes, &db.eyes)
        && text(&q.hair, &db.hair)
        && exact(&q.birth_date, &db.birth_date)
        && text(&q.stature, &db.stature)
        && text(&q.temperament, &db.temperament)
        && text(&q.psychological_type, &db.psychological_type)
        && text(&q.profession, &db.profession)
}

pub fn decide_person(q: &PersonRecord, db: &PersonRecord) -> Result<Decision, IdentityError> {
    let names = usize::from(q.first_name.is_some()) + usize::from(q.last_name.is_some());
    let props = person_properties(q);
    let names_coincide = text(&q.first_name, &db.first_name) && text(&q.last_name, &db.last_name);
    Ok(match (names, props) {
        (0, 0) => return Err(IdentityError::EmptyQuery),
        (1, 0) => Decision::of("person:single-name", names_coincide),
        (2, 0) => Decision::of("person:first-and-last-name", names_coincide),
        (_, _) if names > 0 => Decision::of(
            "person:name-and-property",
            names_coincide && person_properties_coincide(q, db),
        ),
        (0, 1) if q.designation.is_some() => {
            Decision::of("person:designation", phrase(&q.designation, &db.designation))
        }
        _ => Decision::undecided("person:no-branch"),
    })
}

pub fn identify_person(q: &PersonRecord, db: &PersonRecord) -> Result<IdVerdict, IdentityError> {
    decide_person(q, db).map(|d| d.verdict)
}

/// Populated place fields as (town, street, house, apartment, detail, any other).
fn place_pattern(p: &PlaceRecord) -> (bool, bool, bool, bool, bool, bool) {
    let other = p.country.is_some()
        || p.region_type.is_some()
        || p.region_name.is_some()
        || p.territorial_entity.is_some()
        || p.location_kind.is_some()
        || p.construction_kind.is_some()
        || p.room.is_some();
    (
        p.territorial_name.is_some(),
        p.location_name.is_some(),
        p.construction_name.is_some(),
        p.final_location.is_some(),
        p.construction_detail.is_some(),
        other,
    )
}

pub fn decide_place(q: &PlaceRecord, db: &PlaceRecord) -> Result<Decision, IdentityError> {
    let town = || text(&q.territorial_name, &db.territorial_name);
    let street = || text(&q.location_name, &db.location_name);
    let house = || number(&q.construction_name, &db.construction_name);
    Ok(match place_pattern(q) {
        (false, false, false, false, false, false) => return Err(IdentityError::EmptyQuery),
        (true, false, false, false, false, false) => Decision::of("place:town", town()),
        (true, true, false, false, false, false) => Decision::of("place:town-street", town() && street()),
        (true, true, true, false, false, false) => {
            Decision::of("place:town-street-house", town() && street() && house())
        }
        (true, true, true, true, false, false) => Decision::of(
            "place:town-street-house-apartment",
            town() && street() && house() && number(&q.final_location, &db.final_location),
        ),
        (true, true, true, false, true, false) => Decision::of(
            "place:town-street-house-detail",
            town() && street() && house() && text(&q.construction_detail, &db.construction_detail),
        ),
        _ => Decision::undecided("place:no-branch"),
    })
}

pub fn identify_place(q: &PlaceRecord, db: &PlaceRecord) -> Result<IdVerdict, IdentityError> {
    decide_place(q, db).map(|d| d.verdict)
}

pub fn decide_time(q: &TimeRecord, db: &TimeRecord) -> Result<Decision, IdentityError> {
    let other = q.day_of_week.is_some() || q.holiday.is_some();
    let year = q.year.is_some();
    let coarse = q.season.is_some() || q.month.is_some();
    let day = q.day_in_month.is_some();
    let fine = q.hours.is_some() || q.part_of_day.is_some();
    let populated = other || year || coarse || day || fine;
    if !populated {
        return Err(IdentityError::EmptyQuery);
    }
    let y = exact(&q.year, &db.year);
    let m = exact(&q.month, &db.month);
    let d = exact(&q.day_in_month, &db.day_in_month);
    Ok(if other || !year {
        Decision::undecided("time:no-branch")
    } else if !coarse && !day && !fine {
        Decision::of("time:year", y)
    } else if coarse && !day && !fine {
        Decision::of("time:year-season-or-month", y && exact(&q.season, &db.season) && m)
    } else if q.month.is_some() && q.season.is_none() && day && !fine {
        Decision::of("time:year-month-day", y && m && d)
    } else if q.month.is_some() && q.season.is_none() && day && fine {
        Decision::of(
            "time:year-month-day-hour",
            y && m && d && exact(&q.hours, &db.hours) && exact(&q.part_of_day, &db.part_of_day),
        )
    } else {
        Decision::undecided("time:no-branch")
    })
}

pub fn identify_time(q: &TimeRecord, db: &TimeRecord) -> Result<IdVerdict, IdentityError> {
    decide_time(q, db).map(|d| d.verdict)
}

fn entity_properties_coincide(q: &EntityRecord, db: &EntityRecord) -> bool {
    exact(&q.quantity, &db.quantity)
        && exact(&q.owner, &db.owner)
        && exact(&q.location, &db.location)
        && q.properties.iter().all(|(attr, value)| {
            db.properties
                .iter()
                .any(|(a, v)| same_text(a, attr) && same_text(v, value))
        })
}

pub fn decide_entity(q: &EntityRecord, db: &EntityRecord) -> Result<Decision, IdentityError> {
    if q.kind != db.kind {
        return Err(IdentityError::KindMismatch {
            query: q.kind,
            db: db.kind,
        });
    }
    let ids = q.name.is_some() || q.designation.is_some();
    let props = q.quantity.is_some() || q.owner.is_some() || q.location.is_some() || !q.properties.is_empty();
    let ids_coincide = text(&q.name, &db.name) && phrase(&q.designation, &db.designation);
    Ok(match (ids, props) {
        (false, false) => return Err(IdentityError::EmptyQuery),
        (true, false) => Decision::of("entity:name-or-designation", ids_coincide),
        (true, true) => Decision::of(
            "entity:name-and-property",
            ids_coincide && entity_properties_coincide(q, db),
        ),
        (false, true) => Decision::undecided("entity:no-branch"),
    })
}

pub fn identify_entity(q: &EntityRecord, db: &EntityRecord) -> Result<IdVerdict, IdentityError> {
    decide_entity(q, db).map(|d| d.verdict)
}

/// A query sub-predicate for a slot.
#[derive(Debug, Clone, Copy)]
pub enum SubQuery<'a> {
    Referent(&'a ReferentQuery),
    Place(&'a PlaceRecord),
    Time(&'a TimeRecord),
}

/// Identifies a referent query against the person or entity a code names. A phrase query
/// becomes a designation query of whichever record type the code resolves to.
pub fn decide_referent(q: &ReferentQuery, code: &Code, fb: &FactBase) -> Result<Decision, IdentityError> {
    let db = fb
        .referent(code.as_str())
        .ok_or_else(|| IdentityError::DanglingReference(code.clone()))?;
    match (q, db) {
        (ReferentQuery::Person(q), Referent::Person(db)) => decide_person(q, db),
        (ReferentQuery::Entity(q), Referent::Entity(db)) => {
            if q.kind != db.kind {
                // a thing never identifies with an organization
                return Ok(Decision::of("entity:kind", false));
            }
            decide_entity(q, db)
        }
        (ReferentQuery::Phrase(np), Referent::Person(db)) => {
            let q = PersonRecord {
                designation: Some(np.text.clone()),
                ..Default::default()
            };
            decide_person(&q, db)
        }
        (ReferentQuery::Phrase(np), Referent::Entity(db)) => {
            let mut q = EntityRecord::new(db.kind);
            q.designation = Some(np.text.clone());
            decide_entity(&q, db)
        }
        _ => Ok(Decision::of("cross-type", false)),
    }
}

/// Slot comparison with wildcard semantics: an absent query slot always passes, a present
/// query slot against an absent database slot never does.
pub fn decide_slot(
    query: Option<SubQuery<'_>>,
    db: Option<&Code>,
    fb: &FactBase,
) -> Result<Option<Decision>, IdentityError> {
    let Some(query) = query else { return Ok(None) };
    let Some(code) = db else {
        return Ok(Some(Decision::of("slot:absent-in-fact", false)));
    };
    let dangling = || IdentityError::DanglingReference(code.clone());
    let decision = match query {
        SubQuery::Referent(q) => decide_referent(q, code, fb)?,
        SubQuery::Place(q) => decide_place(q, fb.place(code.as_str()).ok_or_else(dangling)?)?,
        SubQuery::Time(q) => decide_time(q, fb.time(code.as_str()).ok_or_else(dangling)?)?,
    };
    Ok(Some(decision))
}

pub fn identify_slot(query: Option<SubQuery<'_>>, db: Option<&Code>, fb: &FactBase) -> Result<bool, IdentityError> {
    Ok(decide_slot(query, db, fb)?.is_none_or(|d| d.is_identical()))
}

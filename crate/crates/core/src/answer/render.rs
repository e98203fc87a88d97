use crate::model::{EntityRecord, PersonRecord, PlaceRecord, TimeRecord};
use crate::question::{IndirectQuery, Pattern, QueryPredicate, QuestionTarget, ReferentQuery};
use crate::store::{FactBase, Referent};

use super::{Slot, SlotValue};

fn join(parts: &[Option<String>]) -> String {
    parts.iter().flatten().cloned().collect::<Vec<_>>().join(" ")
}

fn person_text(p: &PersonRecord) -> String {
    match &p.designation {
        Some(d) => d.clone(),
        None => join(&[p.first_name.clone(), p.last_name.clone()]),
    }
}

fn entity_text(e: &EntityRecord) -> String {
    e.designation.clone().or_else(|| e.name.clone()).unwrap_or_default()
}

fn place_text(p: &PlaceRecord) -> String {
    join(&[
        p.country.clone(),
        p.region_name.clone(),
        p.territorial_name.clone(),
        p.location_name.clone(),
        p.construction_kind.clone(),
        p.construction_name.clone(),
        p.construction_detail.clone(),
        p.final_location.clone(),
        p.room.clone(),
    ])
}

fn time_text(t: &TimeRecord) -> String {
    join(&[
        t.year.map(|y| y.to_string()),
        t.season.map(|s| s.to_string()),
        t.month.map(|m| m.to_string()),
        t.day_in_month.map(|d| d.to_string()),
        t.day_of_week.map(|d| d.to_string()),
        t.holiday.clone(),
        t.part_of_day.map(|p| p.to_string()),
        t.hours.map(|h| format!("{h} hours")),
    ])
}

/// Surface text of an extracted slot value. Records with nothing printable render as their code.
pub fn render_answer(value: &SlotValue, fb: &FactBase) -> String {
    let text = match value {
        SlotValue::Text(t) => return t.clone(),
        SlotValue::Referent(code) => match fb.referent(code.as_str()) {
            Some(Referent::Person(p)) => person_text(p),
            Some(Referent::Entity(e)) => entity_text(e),
            None => String::new(),
        },
        SlotValue::Place(code) => fb.place(code.as_str()).map(place_text).unwrap_or_default(),
        SlotValue::Time(code) => fb.time(code.as_str()).map(time_text).unwrap_or_default(),
    };
    if text.is_empty() {
        match value {
            SlotValue::Referent(c) | SlotValue::Place(c) | SlotValue::Time(c) => c.to_string(),
            SlotValue::Text(_) => unreachable!(),
        }
    } else {
        text
    }
}

/// A query sub-predicate built from a database value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Projection {
    Referent(ReferentQuery),
    Place(PlaceRecord),
    Time(TimeRecord),
    Text(String),
}

fn project_person(p: &PersonRecord) -> Option<PersonRecord> {
    if p.designation.is_some() {
        return Some(PersonRecord {
            designation: p.designation.clone(),
            ..Default::default()
        });
    }
    (p.first_name.is_some() || p.last_name.is_some()).then(|| PersonRecord {
        first_name: p.first_name.clone(),
        last_name: p.last_name.clone(),
        ..Default::default()
    })
}

fn project_entity(e: &EntityRecord) -> Option<EntityRecord> {
    let mut q = EntityRecord::new(e.kind);
    q.designation = e.designation.clone();
    q.name = e.name.clone();
    (q.designation.is_some() || q.name.is_some()).then_some(q)
}

fn project_place(p: &PlaceRecord) -> Option<PlaceRecord> {
    let mut q = PlaceRecord {
        territorial_name: Some(p.territorial_name.clone()?),
        ..Default::default()
    };
    let Some(street) = &p.location_name else { return Some(q) };
    q.location_name = Some(street.clone());
    let Some(house) = &p.construction_name else {
        return Some(q);
    };
    q.construction_name = Some(house.clone());
    if p.final_location.is_some() {
        q.final_location = p.final_location.clone();
    } else {
        q.construction_detail = p.construction_detail.clone();
    }
    Some(q)
}

fn project_time(t: &TimeRecord) -> Option<TimeRecord> {
    let mut q = TimeRecord {
        year: Some(t.year?),
        ..Default::default()
    };
    if t.month.is_some() && t.day_in_month.is_some() {
        q.month = t.month;
        q.day_in_month = t.day_in_month;
        q.hours = t.hours;
        q.part_of_day = t.part_of_day;
    } else {
        q.month = t.month;
        q.season = t.season;
    }
    Some(q)
}

/// Projects a database value onto the most specific query the identification ladders decide.
pub fn project(value: &SlotValue, fb: &FactBase) -> Option<Projection> {
    Some(match value {
        SlotValue::Text(t) => Projection::Text(t.clone()),
        SlotValue::Referent(code) => Projection::Referent(match fb.referent(code.as_str())? {
            Referent::Person(p) => ReferentQuery::Person(project_person(p)?),
            Referent::Entity(e) => ReferentQuery::Entity(project_entity(e)?),
        }),
        SlotValue::Place(code) => Projection::Place(project_place(fb.place(code.as_str())?)?),
        SlotValue::Time(code) => Projection::Time(project_time(fb.time(code.as_str())?)?),
    })
}

/// Fills `slot` of a special query with a projected value, giving a general query.
/// `None` when the value has no decidable projection or the slot does not fit.
pub fn substitute(query: &QueryPredicate, slot: Slot, value: &SlotValue, fb: &FactBase) -> Option<QueryPredicate> {
    let projection = project(value, fb)?;
    let mut out = query.clone();
    out.questioned_slot = QuestionTarget::YesNo;
    out.slot = None;
    out.restriction = None;
    out.retry = None;
    let referent = |p: &Projection| match p {
        Projection::Referent(r) => Some(r.clone()),
        Projection::Text(t) => Some(ReferentQuery::phrase(t.clone())),
        _ => None,
    };
    let text = |p: &Projection| match p {
        Projection::Text(t) => Some(t.clone()),
        _ => None,
    };
    let place = |p: &Projection| match p {
        Projection::Place(r) => Some(r.clone()),
        _ => None,
    };
    let time = |p: &Projection| match p {
        Projection::Time(r) => Some(r.clone()),
        _ => None,
    };
    match &mut out.pattern {
        Pattern::Action(a) => match slot {
            Slot::Verb => a.verb = text(&projection)?,
            Slot::Subject => a.subject = Some(referent(&projection)?),
            Slot::DirectObject => a.direct_object = Some(referent(&projection)?),
            Slot::IndirectObject => {
                a.indirect_object = Some(IndirectQuery {
                    target: referent(&projection)?,
                    preposition: None,
                })
            }
            Slot::Complement => a.complement = Some(text(&projection)?),
            Slot::Place => a.place = Some(place(&projection)?),
            Slot::Time => a.time = Some(time(&projection)?),
            Slot::Purpose => a.purpose = Some(text(&projection)?),
            Slot::Way => a.way = Some(text(&projection)?),
            Slot::Addressee | Slot::Content => return None,
        },
        Pattern::Event(e) => match slot {
            Slot::Verb => e.verb = text(&projection)?,
            Slot::Subject => e.subject = Some(referent(&projection)?),
            Slot::Place => e.place = Some(place(&projection)?),
            Slot::Time => e.time = Some(time(&projection)?),
            _ => return None,
        },
        Pattern::Comm(c) => match slot {
            Slot::Verb => c.verb = text(&projection)?,
            Slot::Subject => c.subject = Some(referent(&projection)?),
            Slot::Addressee => c.addressee = Some(referent(&projection)?),
            Slot::Content => c.content = Some(text(&projection)?),
            Slot::Place => c.place = Some(place(&projection)?),
            Slot::Time => c.time = Some(time(&projection)?),
            _ => return None,
        },
    }
    Some(out)
}

//! Reader and writer for the block-structured fact file.
//!
//! ```text
//! # comment
//! person p1 { last_name="Brown" sex=male }
//! action a1 { code=BE verb="be" subject=p1 complement="mate" tense=past }
//! ```

use std::fmt::Write as _;
use std::str::FromStr;

use super::{FactBase, FactBaseBuilder, ItemLocated, Location, StoreError};
use crate::model::{
    ActionFact, Code, CommFact, DirectObject, EntityKind, EntityRecord, EventFact, IndirectObject, PersonRecord,
    PlaceRecord, PredicateKind, SemanticCode, Tense, TenseType, TimeRecord,
};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Bare(String),
    Str(String),
    Open,
    Close,
    Eq,
    LBracket,
    RBracket,
    Comma,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.char_indices().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn here(&self) -> Location {
        Location {
            line: self.line,
            column: self.column,
        }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, Location)>, StoreError> {
        let mut out = Vec::new();
        while let Some(&(_, c)) = self.chars.peek() {
            let loc = self.here();
            match c {
                c if c.is_whitespace() => {
                    self.bump();
                }
                '#' => {
                    while let Some(&(_, c)) = self.chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                '{' | '}' | '=' | '[' | ']' | ',' => {
                    self.bump();
                    out.push((
                        match c {
                            '{' => Tok::Open,
                            '}' => Tok::Close,
                            '=' => Tok::Eq,
                            '[' => Tok::LBracket,
                            ']' => Tok::RBracket,
                            _ => Tok::Comma,
                        },
                        loc,
                    ));
                }
                '"' => {
                    self.bump();
                    let mut s = String::new();
                    loop {
                        match self.bump() {
                            None => {
                                return Err(StoreError::Parse {
                                    location: loc,
                                    message: "unterminated string".into(),
                                })
                            }
                            Some('"') => break,
                            Some('\\') => match self.bump() {
                                Some('n') => s.push('\n'),
                                Some('t') => s.push('\t'),
                                Some(c @ ('"' | '\\')) => s.push(c),
                                _ => {
                                    return Err(StoreError::Parse {
                                        location: self.here(),
                                        message: "bad escape in string".into(),
                                    })
                                }
                            },
                            Some(c) => s.push(c),
                        }
                    }
                    out.push((Tok::Str(s), loc));
                }
                c if is_bare(c) => {
                    let mut s = String::new();
                    while let Some(&(_, c)) = self.chars.peek() {
                        if !is_bare(c) {
                            break;
                        }
                        s.push(c);
                        self.bump();
                    }
                    out.push((Tok::Bare(s), loc));
                }
                other => {
                    return Err(StoreError::Parse {
                        location: loc,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        }
        Ok(out)
    }
}

fn is_bare(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.' | ':')
}

#[derive(Debug)]
enum Value {
    Bare(String),
    Str(String),
    List(Vec<String>),
}

struct Field {
    name: String,
    value: Value,
    location: Location,
}

impl Field {
    fn err(&self, message: impl Into<String>) -> StoreError {
        StoreError::Parse {
            location: self.location,
            message: format!("field `{}`: {}", self.name, message.into()),
        }
    }

    fn text(&self) -> Result<String, StoreError> {
        match &self.value {
            Value::Str(s) => Ok(s.clone()),
            _ => Err(self.err("expected a quoted string")),
        }
    }

    fn code(&self) -> Result<Code, StoreError> {
        match &self.value {
            Value::Bare(s) => Ok(Code::new(s.clone())),
            _ => Err(self.err("expected a bare code reference")),
        }
    }

    fn token<T: FromStr>(&self) -> Result<T, StoreError>
    where
        T::Err: std::fmt::Display,
    {
        match &self.value {
            Value::Bare(s) => s.parse().map_err(|e: T::Err| self.err(e.to_string())),
            _ => Err(self.err("expected a bare token")),
        }
    }

    fn boolean(&self) -> Result<bool, StoreError> {
        match &self.value {
            Value::Bare(s) if s == "true" => Ok(true),
            Value::Bare(s) if s == "false" => Ok(false),
            _ => Err(self.err("expected true or false")),
        }
    }

    fn list(&self) -> Result<Vec<String>, StoreError> {
        match &self.value {
            Value::List(items) => Ok(items.clone()),
            _ => Err(self.err("expected a list of strings")),
        }
    }
}

struct Block {
    kind: String,
    code: Code,
    location: Location,
    fields: Vec<Field>,
}

impl Block {
    fn unknown(&self, field: &Field) -> StoreError {
        StoreError::Parse {
            location: field.location,
            message: format!("unknown field `{}` for {}", field.name, self.kind),
        }
    }

    fn missing(&self, name: &str) -> StoreError {
        StoreError::Parse {
            location: self.location,
            message: format!("{} `{}` is missing required field `{name}`", self.kind, self.code),
        }
    }
}

fn parse_blocks(text: &str) -> Result<Vec<Block>, StoreError> {
    let tokens = Lexer::new(text).tokens()?;
    let end = Location {
        line: text.lines().count().max(1),
        column: 1,
    };
    let mut it = tokens.into_iter().peekable();
    let mut blocks = Vec::new();
    let expected = |what: &str, got: Option<(Tok, Location)>| -> StoreError {
        match got {
            Some((tok, location)) => StoreError::Parse {
                location,
                message: format!("expected {what}, found {}", describe(&tok)),
            },
            None => StoreError::Parse {
                location: end,
                message: format!("expected {what}, found end of file"),
            },
        }
    };
    while let Some((tok, location)) = it.next() {
        let Tok::Bare(kind) = tok else {
            return Err(expected("a record type", Some((tok, location))));
        };
        let code = match it.next() {
            Some((Tok::Bare(c), _)) => Code::new(c),
            other => return Err(expected("a record code", other)),
        };
        match it.next() {
            Some((Tok::Open, _)) => {}
            other => return Err(expected("`{`", other)),
        }
        let mut fields = Vec::new();
        loop {
            match it.next() {
                Some((Tok::Close, _)) => break,
                Some((Tok::Bare(name), floc)) => {
                    match it.next() {
                        Some((Tok::Eq, _)) => {}
                        other => return Err(expected("`=`", other)),
                    }
                    let value = match it.next() {
                        Some((Tok::Bare(v), _)) => Value::Bare(v),
                        Some((Tok::Str(v), _)) => Value::Str(v),
                        Some((Tok::LBracket, _)) => {
                            let mut items = Vec::new();
                            loop {
                                match it.next() {
                                    Some((Tok::RBracket, _)) => break,
                                    Some((Tok::Str(s), _)) => {
                                        items.push(s);
                                        match it.next() {
                                            Some((Tok::Comma, _)) => {}
                                            Some((Tok::RBracket, _)) => break,
                                            other => return Err(expected("`,` or `]`", other)),
                                        }
                                    }
                                    other => return Err(expected("a quoted string", other)),
                                }
                            }
                            Value::List(items)
                        }
                        other => return Err(expected("a value", other)),
                    };
                    fields.push(Field {
                        name,
                        value,
                        location: floc,
                    });
                }
                other => return Err(expected("a field name or `}`", other)),
            }
        }
        blocks.push(Block {
            kind,
            code,
            location,
            fields,
        });
    }
    Ok(blocks)
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Bare(s) => format!("`{s}`"),
        Tok::Str(s) => format!("\"{s}\""),
        Tok::Open => "`{`".into(),
        Tok::Close => "`}`".into(),
        Tok::Eq => "`=`".into(),
        Tok::LBracket => "`[`".into(),
        Tok::RBracket => "`]`".into(),
        Tok::Comma => "`,`".into(),
    }
}

/// Parses and validates a fact file.
pub fn parse_facts(text: &str) -> Result<FactBase, StoreError> {
    let mut builder = FactBaseBuilder::default();
    for block in parse_blocks(text)? {
        let loc = block.location;
        let item = match block.kind.as_str() {
            "person" => ItemLocated::person(person(&block)?, loc),
            "place" => ItemLocated::place(place(&block)?, loc),
            "time" => ItemLocated::time(time(&block)?, loc),
            "organization" => ItemLocated::entity(entity(&block, EntityKind::Organization)?, loc),
            "thing" => ItemLocated::entity(entity(&block, EntityKind::Thing)?, loc),
            "machine" => ItemLocated::entity(entity(&block, EntityKind::Machine)?, loc),
            "action" => ItemLocated::action(action(&block)?, loc),
            "event" => ItemLocated::event(event(&block)?, loc),
            "job" => ItemLocated::comm(comm(&block, PredicateKind::Job)?, loc),
            "message" => ItemLocated::comm(comm(&block, PredicateKind::Message)?, loc),
            "intelligence" => ItemLocated::comm(comm(&block, PredicateKind::Intelligence)?, loc),
            other => {
                return Err(StoreError::Parse {
                    location: loc,
                    message: format!("unknown record type `{other}`"),
                })
            }
        };
        builder.push_located(item);
    }
    builder.build()
}

fn person(b: &Block) -> Result<PersonRecord, StoreError> {
    let mut r = PersonRecord {
        code: Some(b.code.clone()),
        ..Default::default()
    };
    for f in &b.fields {
        match f.name.as_str() {
            "designation" => r.designation = Some(f.text()?),
            "sex" => r.sex = Some(f.token()?),
            "first_name" => r.first_name = Some(f.text()?),
            "last_name" => r.last_name = Some(f.text()?),
            "additional_data" => r.additional_data = Some(f.text()?),
            "birth_place" => r.birth_place = Some(f.code()?),
            "nationality" => r.nationality = Some(f.text()?),
            "mother_tongue" => r.mother_tongue = Some(f.text()?),
            "other_tongues" => r.other_tongues = Some(f.list()?),
            "residence" => r.residence = Some(f.code()?),
            "face" => r.face = Some(f.text()?),
            "nose" => r.nose = Some(f.text()?),
            "constitution" => r.constitution = Some(f.text()?),
            "eyes" => r.eyes = Some(f.text()?),
            "hair" => r.hair = Some(f.text()?),
            "birth_date" => r.birth_date = Some(f.code()?),
            "stature" => r.stature = Some(f.text()?),
            "temperament" => r.temperament = Some(f.text()?),
            "psychological_type" => r.psychological_type = Some(f.text()?),
            "profession" => r.profession = Some(f.text()?),
            _ => return Err(b.unknown(f)),
        }
    }
    Ok(r)
}

fn place(b: &Block) -> Result<PlaceRecord, StoreError> {
    let mut r = PlaceRecord {
        code: Some(b.code.clone()),
        ..Default::default()
    };
    for f in &b.fields {
        let slot = match f.name.as_str() {
            "country" => &mut r.country,
            "region_type" => &mut r.region_type,
            "region_name" => &mut r.region_name,
            "territorial_entity" => &mut r.territorial_entity,
            "territorial_name" | "town" => &mut r.territorial_name,
            "location_kind" => &mut r.location_kind,
            "location_name" | "street" => &mut r.location_name,
            "construction_kind" => &mut r.construction_kind,
            "construction_name" | "house" => &mut r.construction_name,
            "construction_detail" => &mut r.construction_detail,
            "final_location" | "apartment" => &mut r.final_location,
            "room" => &mut r.room,
            _ => return Err(b.unknown(f)),
        };
        *slot = Some(f.text()?);
    }
    Ok(r)
}

fn time(b: &Block) -> Result<TimeRecord, StoreError> {
    let mut r = TimeRecord {
        code: Some(b.code.clone()),
        ..Default::default()
    };
    for f in &b.fields {
        match f.name.as_str() {
            "year" => r.year = Some(f.token()?),
            "season" => r.season = Some(f.token()?),
            "month" => r.month = Some(f.token()?),
            "day_in_month" | "day" => r.day_in_month = Some(f.token()?),
            "day_of_week" => r.day_of_week = Some(f.token()?),
            "holiday" => r.holiday = Some(f.text()?),
            "part_of_day" => r.part_of_day = Some(f.token()?),
            "hours" => r.hours = Some(f.token()?),
            _ => return Err(b.unknown(f)),
        }
    }
    Ok(r)
}

fn entity(b: &Block, kind: EntityKind) -> Result<EntityRecord, StoreError> {
    let mut r = EntityRecord::new(kind);
    r.code = Some(b.code.clone());
    for f in &b.fields {
        match f.name.as_str() {
            "designation" => r.designation = Some(f.text()?),
            "name" => r.name = Some(f.text()?),
            "quantity" => r.quantity = Some(f.token()?),
            "owner" => r.owner = Some(f.code()?),
            "location" => r.location = Some(f.code()?),
            name => match name.strip_prefix("property.") {
                Some(attr) if !attr.is_empty() => r.properties.push((attr.to_string(), f.text()?)),
                _ => return Err(b.unknown(f)),
            },
        }
    }
    Ok(r)
}

fn action(b: &Block) -> Result<ActionFact, StoreError> {
    let mut semantic_type: Option<SemanticCode> = None;
    let mut verb = None;
    let mut negation = false;
    let mut tense: Option<Tense> = None;
    let mut tense_type = TenseType::Indefinite;
    let mut subject = None;
    let mut direct_object = None;
    let mut indirect = None;
    let mut preposition = None;
    let mut complement = None;
    let mut place = None;
    let mut time = None;
    let mut purpose = None;
    let mut way = None;
    for f in &b.fields {
        match f.name.as_str() {
            "code" => semantic_type = Some(f.token()?),
            "verb" => verb = Some(f.text()?),
            "negation" => negation = f.boolean()?,
            "tense" => tense = Some(f.token()?),
            "tense_type" => tense_type = f.token()?,
            "subject" => subject = Some(f.code()?),
            "direct_object" => {
                direct_object = Some(match &f.value {
                    Value::Bare(c) => DirectObject::Ref(Code::new(c.clone())),
                    Value::Str(s) => DirectObject::Literal(s.clone()),
                    Value::List(_) => return Err(f.err("expected a code or a quoted phrase")),
                })
            }
            "indirect_object" => indirect = Some(f.code()?),
            "preposition" => preposition = Some(f.text()?),
            "complement" => complement = Some(f.text()?),
            "place" => place = Some(f.code()?),
            "time" => time = Some(f.code()?),
            "purpose" => purpose = Some(f.text()?),
            "way" => way = Some(f.text()?),
            _ => return Err(b.unknown(f)),
        }
    }
    if preposition.is_some() && indirect.is_none() {
        return Err(b.missing("indirect_object"));
    }
    Ok(ActionFact {
        code: b.code.clone(),
        semantic_type: semantic_type.ok_or_else(|| b.missing("code"))?,
        verb: verb.ok_or_else(|| b.missing("verb"))?,
        negation,
        tense: tense.ok_or_else(|| b.missing("tense"))?,
        tense_type,
        subject: subject.ok_or_else(|| b.missing("subject"))?,
        direct_object,
        indirect_object: indirect.map(|target| IndirectObject { target, preposition }),
        complement,
        place,
        time,
        purpose,
        way,
    })
}

fn event(b: &Block) -> Result<EventFact, StoreError> {
    let mut verb = None;
    let mut scale = None;
    let mut subject = None;
    let mut negation = false;
    let mut tense: Option<Tense> = None;
    let mut tense_type = TenseType::Indefinite;
    let mut place = None;
    let mut time = None;
    for f in &b.fields {
        match f.name.as_str() {
            "verb" => verb = Some(f.text()?),
            "scale" => scale = Some(f.text()?),
            "subject" => subject = Some(f.code()?),
            "negation" => negation = f.boolean()?,
            "tense" => tense = Some(f.token()?),
            "tense_type" => tense_type = f.token()?,
            "place" => place = Some(f.code()?),
            "time" => time = Some(f.code()?),
            _ => return Err(b.unknown(f)),
        }
    }
    Ok(EventFact {
        code: b.code.clone(),
        verb: verb.ok_or_else(|| b.missing("verb"))?,
        scale,
        subject: subject.ok_or_else(|| b.missing("subject"))?,
        negation,
        tense: tense.ok_or_else(|| b.missing("tense"))?,
        tense_type,
        place,
        time,
    })
}

fn comm(b: &Block, kind: PredicateKind) -> Result<CommFact, StoreError> {
    let mut verb = None;
    let mut subject = None;
    let mut addressee = None;
    let mut content = None;
    let mut negation = false;
    let mut tense: Option<Tense> = None;
    let mut tense_type = TenseType::Indefinite;
    let mut place = None;
    let mut time = None;
    for f in &b.fields {
        match f.name.as_str() {
            "verb" => verb = Some(f.text()?),
            "subject" => subject = Some(f.code()?),
            "addressee" => addressee = Some(f.code()?),
            "content" => content = Some(f.text()?),
            "negation" => negation = f.boolean()?,
            "tense" => tense = Some(f.token()?),
            "tense_type" => tense_type = f.token()?,
            "place" => place = Some(f.code()?),
            "time" => time = Some(f.code()?),
            _ => return Err(b.unknown(f)),
        }
    }
    Ok(CommFact {
        code: b.code.clone(),
        kind,
        verb: verb.ok_or_else(|| b.missing("verb"))?,
        subject: subject.ok_or_else(|| b.missing("subject"))?,
        addressee,
        content,
        negation,
        tense: tense.ok_or_else(|| b.missing("tense"))?,
        tense_type,
        place,
        time,
    })
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

struct BlockWriter {
    out: String,
}

impl BlockWriter {
    fn text(&mut self, name: &str, v: &Option<String>) {
        if let Some(v) = v {
            let _ = write!(self.out, " {name}={}", quote(v));
        }
    }

    fn bare(&mut self, name: &str, v: Option<impl std::fmt::Display>) {
        if let Some(v) = v {
            let _ = write!(self.out, " {name}={v}");
        }
    }
}

/// Serializes a fact base: records first (persons, places, times, entities), then facts in file order.
pub fn write_facts(fb: &FactBase) -> String {
    let mut w = BlockWriter { out: String::new() };
    let code = |c: &Option<Code>| c.as_ref().map(|c| c.to_string()).unwrap_or_default();
    for p in fb.persons() {
        let _ = write!(w.out, "person {} {{", code(&p.code));
        w.text("designation", &p.designation);
        w.bare("sex", p.sex);
        w.text("first_name", &p.first_name);
        w.text("last_name", &p.last_name);
        w.text("additional_data", &p.additional_data);
        w.bare("birth_place", p.birth_place.as_ref());
        w.text("nationality", &p.nationality);
        w.text("mother_tongue", &p.mother_tongue);
        if let Some(list) = &p.other_tongues {
            let items: Vec<String> = list.iter().map(|s| quote(s)).collect();
            let _ = write!(w.out, " other_tongues=[{}]", items.join(", "));
        }
        w.bare("residence", p.residence.as_ref());
        w.text("face", &p.face);
        w.text("nose", &p.nose);
        w.text("constitution", &p.constitution);
        w.text("eyes", &p.eyes);
        w.text("hair", &p.hair);
        w.bare("birth_date", p.birth_date.as_ref());
        w.text("stature", &p.stature);
        w.text("temperament", &p.temperament);
        w.text("psychological_type", &p.psychological_type);
        w.text("profession", &p.profession);
        w.out.push_str(" }\n");
    }
    for p in fb.places() {
        let _ = write!(w.out, "place {} {{", code(&p.code));
        w.text("country", &p.country);
        w.text("region_type", &p.region_type);
        w.text("region_name", &p.region_name);
        w.text("territorial_entity", &p.territorial_entity);
        w.text("territorial_name", &p.territorial_name);
        w.text("location_kind", &p.location_kind);
        w.text("location_name", &p.location_name);
        w.text("construction_kind", &p.construction_kind);
        w.text("construction_name", &p.construction_name);
        w.text("construction_detail", &p.construction_detail);
        w.text("final_location", &p.final_location);
        w.text("room", &p.room);
        w.out.push_str(" }\n");
    }
    for t in fb.times() {
        let _ = write!(w.out, "time {} {{", code(&t.code));
        w.bare("year", t.year);
        w.bare("season", t.season);
        w.bare("month", t.month);
        w.bare("day_in_month", t.day_in_month);
        w.bare("day_of_week", t.day_of_week);
        w.text("holiday", &t.holiday);
        w.bare("part_of_day", t.part_of_day);
        w.bare("hours", t.hours);
        w.out.push_str(" }\n");
    }
    for e in fb.entities() {
        let _ = write!(w.out, "{} {} {{", e.kind, code(&e.code));
        w.text("designation", &e.designation);
        w.text("name", &e.name);
        w.bare("quantity", e.quantity);
        w.bare("owner", e.owner.as_ref());
        w.bare("location", e.location.as_ref());
        for (attr, value) in &e.properties {
            let _ = write!(w.out, " property.{attr}={}", quote(value));
        }
        w.out.push_str(" }\n");
    }
    for fact in fb.facts() {
        match fact {
            crate::model::FactRef::Action(a) => {
                let _ = write!(
                    w.out,
                    "action {} {{ code={} verb={}",
                    a.code,
                    a.semantic_type,
                    quote(&a.verb)
                );
                write_common(&mut w, a.negation, a.tense, a.tense_type);
                w.bare("subject", Some(&a.subject));
                match &a.direct_object {
                    Some(DirectObject::Ref(c)) => w.bare("direct_object", Some(c)),
                    Some(DirectObject::Literal(s)) => w.text("direct_object", &Some(s.clone())),
                    None => {}
                }
                if let Some(io) = &a.indirect_object {
                    w.bare("indirect_object", Some(&io.target));
                    w.text("preposition", &io.preposition);
                }
                w.text("complement", &a.complement);
                w.bare("place", a.place.as_ref());
                w.bare("time", a.time.as_ref());
                w.text("purpose", &a.purpose);
                w.text("way", &a.way);
            }
            crate::model::FactRef::Event(e) => {
                let _ = write!(w.out, "event {} {{ verb={}", e.code, quote(&e.verb));
                w.text("scale", &e.scale);
                write_common(&mut w, e.negation, e.tense, e.tense_type);
                w.bare("subject", Some(&e.subject));
                w.bare("place", e.place.as_ref());
                w.bare("time", e.time.as_ref());
            }
            crate::model::FactRef::Comm(c) => {
                let kind = match c.kind {
                    PredicateKind::Job => "job",
                    PredicateKind::Message => "message",
                    _ => "intelligence",
                };
                let _ = write!(w.out, "{kind} {} {{ verb={}", c.code, quote(&c.verb));
                write_common(&mut w, c.negation, c.tense, c.tense_type);
                w.bare("subject", Some(&c.subject));
                w.bare("addressee", c.addressee.as_ref());
                w.text("content", &c.content);
                w.bare("place", c.place.as_ref());
                w.bare("time", c.time.as_ref());
            }
        }
        w.out.push_str(" }\n");
    }
    w.out
}

fn write_common(w: &mut BlockWriter, negation: bool, tense: Tense, tense_type: TenseType) {
    let _ = write!(w.out, " negation={negation} tense={tense} tense_type={tense_type}");
}

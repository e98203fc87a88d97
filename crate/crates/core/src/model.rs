//! Predicate records, fact predicates and the semantic verb classification.

use std::fmt;
use std::str::FromStr;

/// Identifier of a record or fact. Compared byte-exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Code(String);

impl Code {
    pub fn new(code: impl Into<String>) -> Self {
        Code(code.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Code {
    fn from(s: &str) -> Self {
        Code(s.to_string())
    }
}

impl std::borrow::Borrow<str> for Code {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// Returned when a bare token does not name a member of a closed vocabulary.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown {what} `{token}`")]
pub struct UnknownToken {
    pub what: &'static str,
    pub token: String,
}

macro_rules! token_enum {
    (
        $(#[$meta:meta])*
        $name:ident, $what:literal { $($variant:ident => $tok:literal),+ $(,)? }
    ) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $tok),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = UnknownToken;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($tok => Ok($name::$variant),)+
                    _ => Err(UnknownToken { what: $what, token: s.to_string() }),
                }
            }
        }
    };
}

token_enum! {
    /// The fourteen verb classes.
    SemanticCode, "semantic code" {
        Job => "JOB",
        Propel => "PROPEL",
        Move => "MOVE",
        Ingest => "INGEST",
        Expel => "EXPEL",
        Grasp => "GRASP",
        Go => "GO",
        Transfer => "TRANSFER",
        Feel => "FEEL",
        Message => "MESSAGE",
        Be => "BE",
        Change => "CHANGE",
        Create => "CREATE",
        Do => "DO",
    }
}

token_enum! {
    /// The fact predicate a verb forms.
    PredicateKind, "predicate kind" {
        Action => "ACTION",
        Job => "JOB",
        Message => "MESSAGE",
        Intelligence => "INTELLIGENCE",
        Event => "EVENT",
    }
}

impl SemanticCode {
    /// Physical effect or change of general relation.
    pub fn is_physical(self) -> bool {
        matches!(
            self,
            SemanticCode::Propel
                | SemanticCode::Move
                | SemanticCode::Ingest
                | SemanticCode::Expel
                | SemanticCode::Grasp
                | SemanticCode::Go
                | SemanticCode::Transfer
        )
    }
}

/// Total mapping from verb class to the predicate it forms.
pub fn classify_code(code: SemanticCode) -> PredicateKind {
    use SemanticCode::*;
    match code {
        Propel | Move | Ingest | Expel | Grasp | Go | Transfer | Be | Do => PredicateKind::Action,
        Job => PredicateKind::Job,
        Message => PredicateKind::Message,
        Feel | Create => PredicateKind::Intelligence,
        Change => PredicateKind::Event,
    }
}

impl PredicateKind {
    pub fn is_comm(self) -> bool {
        matches!(
            self,
            PredicateKind::Job | PredicateKind::Message | PredicateKind::Intelligence
        )
    }
}

token_enum! {
    Sex, "sex" { Male => "male", Female => "female", Unknown => "unknown" }
}

token_enum! {
    Season, "season" {
        Spring => "spring", Summer => "summer", Autumn => "autumn", Winter => "winter",
    }
}

token_enum! {
    Month, "month" {
        January => "january", February => "february", March => "march", April => "april",
        May => "may", June => "june", July => "july", August => "august",
        September => "september", October => "october", November => "november",
        December => "december",
    }
}

token_enum! {
    DayOfWeek, "day of week" {
        Monday => "monday", Tuesday => "tuesday", Wednesday => "wednesday",
        Thursday => "thursday", Friday => "friday", Saturday => "saturday", Sunday => "sunday",
    }
}

token_enum! {
    PartOfDay, "part of day" {
        Morning => "morning", Afternoon => "afternoon", Evening => "evening", Night => "night",
    }
}

token_enum! {
    Tense, "tense" { Present => "present", Past => "past", Future => "future" }
}

token_enum! {
    TenseType, "tense type" {
        Indefinite => "indefinite",
        Continuous => "continuous",
        Perfect => "perfect",
        PerfectContinuous => "perfect_continuous",
    }
}

token_enum! {
    EntityKind, "entity kind" {
        Organization => "organization", Thing => "thing", Machine => "machine",
    }
}

/// A person. Every field except `code` is optional; in a question, `code` is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PersonRecord {
    pub code: Option<Code>,
    pub designation: Option<String>,
    pub sex: Option<Sex>,
    pub first_name: Option<String>,
    pub last_name: Option<String>,
    /// Other names, honorary title and degree.
    pub additional_data: Option<String>,
    pub birth_place: Option<Code>,
    pub nationality: Option<String>,
    pub mother_tongue: Option<String>,
    pub other_tongues: Option<Vec<String>>,
    pub residence: Option<Code>,
    pub face: Option<String>,
    pub nose: Option<String>,
    pub constitution: Option<String>,
    pub eyes: Option<String>,
    pub hair: Option<String>,
    pub birth_date: Option<Code>,
    pub stature: Option<String>,
    pub temperament: Option<String>,
    pub psychological_type: Option<String>,
    pub profession: Option<String>,
}

/// A place. Field names follow the coarse-to-fine order of the record.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PlaceRecord {
    pub code: Option<Code>,
    pub country: Option<String>,
    /// state, province
    pub region_type: Option<String>,
    pub region_name: Option<String>,
    /// town, village
    pub territorial_entity: Option<String>,
    /// The town.
    pub territorial_name: Option<String>,
    /// street, square, park, line
    pub location_kind: Option<String>,
    /// The street.
    pub location_name: Option<String>,
    /// house, theatre, station
    pub construction_kind: Option<String>,
    /// House number or construction name.
    pub construction_name: Option<String>,
    /// stairs, roof, garret, floor
    pub construction_detail: Option<String>,
    /// Apartment number, hall, office.
    pub final_location: Option<String>,
    pub room: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TimeRecord {
    pub code: Option<Code>,
    pub year: Option<i32>,
    pub season: Option<Season>,
    pub month: Option<Month>,
    /// 1..=31
    pub day_in_month: Option<u8>,
    pub day_of_week: Option<DayOfWeek>,
    pub holiday: Option<String>,
    pub part_of_day: Option<PartOfDay>,
    /// 0..=23
    pub hours: Option<u8>,
}

/// Organization, thing or machine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntityRecord {
    pub code: Option<Code>,
    pub kind: EntityKind,
    pub designation: Option<String>,
    pub name: Option<String>,
    pub quantity: Option<i64>,
    pub owner: Option<Code>,
    pub location: Option<Code>,
    pub properties: Vec<(String, String)>,
}

impl EntityRecord {
    pub fn new(kind: EntityKind) -> Self {
        EntityRecord {
            code: None,
            kind,
            designation: None,
            name: None,
            quantity: None,
            owner: None,
            location: None,
            properties: Vec::new(),
        }
    }
}

/// Direct object of an action: a record or a literal phrase such as "his eyes".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectObject {
    Ref(Code),
    Literal(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndirectObject {
    pub target: Code,
    pub preposition: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionFact {
    pub code: Code,
    pub semantic_type: SemanticCode,
    pub verb: String,
    pub negation: bool,
    pub tense: Tense,
    pub tense_type: TenseType,
    pub subject: Code,
    pub direct_object: Option<DirectObject>,
    pub indirect_object: Option<IndirectObject>,
    /// Nominal part of a BE predicate ("mate").
    pub complement: Option<String>,
    pub place: Option<Code>,
    pub time: Option<Code>,
    pub purpose: Option<String>,
    pub way: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventFact {
    pub code: Code,
    pub verb: String,
    pub scale: Option<String>,
    pub subject: Code,
    pub negation: bool,
    pub tense: Tense,
    pub tense_type: TenseType,
    pub place: Option<Code>,
    pub time: Option<Code>,
}

/// Job, message or intelligence predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommFact {
    pub code: Code,
    pub kind: PredicateKind,
    pub verb: String,
    pub subject: Code,
    pub addressee: Option<Code>,
    /// Reported clause, stored as surface text.
    pub content: Option<String>,
    pub negation: bool,
    pub tense: Tense,
    pub tense_type: TenseType,
    pub place: Option<Code>,
    pub time: Option<Code>,
}

/// Borrowed view of any fact predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactRef<'a> {
    Action(&'a ActionFact),
    Event(&'a EventFact),
    Comm(&'a CommFact),
}

impl<'a> FactRef<'a> {
    pub fn code(&self) -> &'a Code {
        match self {
            FactRef::Action(a) => &a.code,
            FactRef::Event(e) => &e.code,
            FactRef::Comm(c) => &c.code,
        }
    }

    pub fn kind(&self) -> PredicateKind {
        match self {
            FactRef::Action(_) => PredicateKind::Action,
            FactRef::Event(_) => PredicateKind::Event,
            FactRef::Comm(c) => c.kind,
        }
    }

    pub fn subject(&self) -> &'a Code {
        match self {
            FactRef::Action(a) => &a.subject,
            FactRef::Event(e) => &e.subject,
            FactRef::Comm(c) => &c.subject,
        }
    }

    pub fn place(&self) -> Option<&'a Code> {
        match self {
            FactRef::Action(a) => a.place.as_ref(),
            FactRef::Event(e) => e.place.as_ref(),
            FactRef::Comm(c) => c.place.as_ref(),
        }
    }

    pub fn time(&self) -> Option<&'a Code> {
        match self {
            FactRef::Action(a) => a.time.as_ref(),
            FactRef::Event(e) => e.time.as_ref(),
            FactRef::Comm(c) => c.time.as_ref(),
        }
    }
}

//! Question tokenizing, parsing and semantic analysis.
//!
//! [`tokenize`] and [`parse_question`] produce a [`QuestionForm`]; [`build_query`] turns it
//! into a [`QueryPredicate`] whose questioned slot is left open.

mod parser;
mod semantics;
mod tokenize;

use std::fmt;

use crate::answer::Slot;
use crate::model::{
    EntityRecord, PersonRecord, PlaceRecord, PredicateKind, SemanticCode, Tense, TenseType, TimeRecord,
};

pub use parser::{parse_question, resolve_target};
pub use semantics::build_query;
pub use tokenize::tokenize;

/// What a question asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuestionTarget {
    YesNo,
    Subject,
    SubjectProperty(PropertyHint),
    DirectObject,
    IndirectObject,
    Time,
    Place,
    Way,
    Purpose,
}

/// Which property of the subject a property question asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PropertyHint {
    /// which, what
    Identity,
    /// whose
    Owner,
    /// how many, how much
    Quantity,
}

impl fmt::Display for QuestionTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuestionTarget::YesNo => f.write_str("YES_NO"),
            QuestionTarget::Subject => f.write_str("SUBJECT"),
            QuestionTarget::SubjectProperty(h) => write!(f, "SUBJECT_PROPERTY({h:?})"),
            QuestionTarget::DirectObject => f.write_str("DIRECT_OBJECT"),
            QuestionTarget::IndirectObject => f.write_str("INDIRECT_OBJECT"),
            QuestionTarget::Time => f.write_str("TIME"),
            QuestionTarget::Place => f.write_str("PLACE"),
            QuestionTarget::Way => f.write_str("WAY"),
            QuestionTarget::Purpose => f.write_str("PURPOSE"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuestionKind {
    General,
    Special,
}

/// The grammar production a question was parsed with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Production {
    /// verb, subject group, rest of predicate
    General,
    /// [preposition] interrogative [noun group] verb subject-group ...
    SpecialMain,
    /// who/what predicate objects adverbials
    SpecialSubject,
    /// which/what/whose/how many/how much noun-group predicate ...
    SpecialSubjectProperty,
    /// who/what + be + basic noun phrase
    SpecialNominal,
}

impl Production {
    pub const ALL: [Production; 5] = [
        Production::General,
        Production::SpecialMain,
        Production::SpecialSubject,
        Production::SpecialSubjectProperty,
        Production::SpecialNominal,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// Lower-cased text.
    pub text: String,
    /// Whether the raw word began with an upper-case letter.
    pub capitalized: bool,
}

impl Token {
    pub fn new(text: &str, capitalized: bool) -> Self {
        Token {
            text: text.to_string(),
            capitalized,
        }
    }
}

/// Half-open range of token indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end <= self.start
    }

    pub fn tokens<'a>(&self, tokens: &'a [Token]) -> &'a [Token] {
        &tokens[self.start..self.end]
    }

    /// Surface text of the span with possessive markers glued back on.
    pub fn text(&self, tokens: &[Token]) -> String {
        join_tokens(self.tokens(tokens))
    }
}

pub(crate) fn join_tokens(tokens: &[Token]) -> String {
    let mut out = String::new();
    for t in tokens {
        if !out.is_empty() && t.text != "'s" {
            out.push(' ');
        }
        out.push_str(&t.text);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObjectPhrase {
    Noun(Span),
    /// `to` + base verb and its tail, including `to`.
    Infinitive(Span),
    /// Reported clause after that/if/whether, excluding the introducer.
    Clause {
        introducer: String,
        span: Span,
    },
}

/// Prepositional phrase (preposition + noun group) or bare adverb (no preposition).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adverbial {
    pub preposition: Option<String>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbInfo {
    pub lemma: String,
    pub tense: Tense,
    pub tense_type: TenseType,
    pub passive: bool,
    /// `be` used as the main verb.
    pub copula: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuestionForm {
    pub tokens: Vec<Token>,
    pub kind: QuestionKind,
    pub production: Production,
    pub target: QuestionTarget,
    pub interrogative: Option<String>,
    pub leading_preposition: Option<String>,
    /// A preposition left at the end: "Whom did he speak to?"
    pub stranded_preposition: Option<String>,
    /// Group of noun after a property interrogative.
    pub noun_group: Option<Span>,
    /// Lemma of the fronted auxiliary or modal; absent when the finite verb follows the interrogative.
    pub auxiliary: Option<String>,
    pub negated: bool,
    pub subject_phrase: Option<Span>,
    pub verb_phrase: Span,
    pub verb: VerbInfo,
    pub object_phrases: Vec<ObjectPhrase>,
    pub adverbial_phrases: Vec<Adverbial>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuestionError {
    #[error("empty question")]
    EmptyInput,
    /// `position` is the 1-based index of the offending token.
    #[error("syntax error at token {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    #[error("unknown verb `{0}`")]
    UnknownVerb(String),
    #[error("unsupported construction: {0}")]
    UnsupportedConstruction(String),
    #[error("unknown interrogative `{0}`")]
    UnknownInterrogative(String),
}

/// A common noun group whose record type is only known once it meets a database record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NounPhraseQuery {
    pub text: String,
}

/// Query sub-predicate for a subject or object slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReferentQuery {
    Phrase(NounPhraseQuery),
    Person(PersonRecord),
    Entity(EntityRecord),
}

impl ReferentQuery {
    pub fn phrase(text: impl Into<String>) -> Self {
        ReferentQuery::Phrase(NounPhraseQuery { text: text.into() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndirectQuery {
    pub target: ReferentQuery,
    pub preposition: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionPattern {
    pub semantic_type: SemanticCode,
    pub verb: String,
    pub negation: bool,
    pub tense: Tense,
    pub tense_type: TenseType,
    pub subject: Option<ReferentQuery>,
    pub direct_object: Option<ReferentQuery>,
    pub indirect_object: Option<IndirectQuery>,
    pub complement: Option<String>,
    pub place: Option<PlaceRecord>,
    pub time: Option<TimeRecord>,
    pub purpose: Option<String>,
    pub way: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventPattern {
    pub verb: String,
    pub scale: Option<String>,
    pub subject: Option<ReferentQuery>,
    pub negation: bool,
    pub tense: Tense,
    pub tense_type: TenseType,
    pub place: Option<PlaceRecord>,
    pub time: Option<TimeRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommPattern {
    pub kind: PredicateKind,
    pub verb: String,
    pub subject: Option<ReferentQuery>,
    pub addressee: Option<ReferentQuery>,
    pub content: Option<String>,
    pub negation: bool,
    pub tense: Tense,
    pub tense_type: TenseType,
    pub place: Option<PlaceRecord>,
    pub time: Option<TimeRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pattern {
    Action(ActionPattern),
    Event(EventPattern),
    Comm(CommPattern),
}

impl Pattern {
    pub fn verb(&self) -> &str {
        match self {
            Pattern::Action(a) => &a.verb,
            Pattern::Event(e) => &e.verb,
            Pattern::Comm(c) => &c.verb,
        }
    }

    pub fn negation(&self) -> bool {
        match self {
            Pattern::Action(a) => a.negation,
            Pattern::Event(e) => e.negation,
            Pattern::Comm(c) => c.negation,
        }
    }

    pub fn subject(&self) -> Option<&ReferentQuery> {
        match self {
            Pattern::Action(a) => a.subject.as_ref(),
            Pattern::Event(e) => e.subject.as_ref(),
            Pattern::Comm(c) => c.subject.as_ref(),
        }
    }
}

/// Semantic-analysis product: a partially specified fact with one open slot for special questions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryPredicate {
    pub kind: PredicateKind,
    pub pattern: Pattern,
    pub questioned_slot: QuestionTarget,
    /// Fact slot the target maps to; `None` for general questions.
    pub slot: Option<Slot>,
    /// Noun group restricting an object filler: "which boat".
    pub restriction: Option<ReferentQuery>,
    /// Slot to try when the first one yields nothing ("whom").
    pub retry: Option<Slot>,
}

impl QueryPredicate {
    pub fn is_general(&self) -> bool {
        self.questioned_slot == QuestionTarget::YesNo
    }

    pub fn property_hint(&self) -> Option<PropertyHint> {
        match self.questioned_slot {
            QuestionTarget::SubjectProperty(h) => Some(h),
            _ => None,
        }
    }
}

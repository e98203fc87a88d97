//! Rule-based question answering over a base of typed natural-language facts.
//!
//! Facts are stored as action, event and communication predicates over person, place, time
//! and entity records. English questions are parsed into query predicates and answered by
//! selecting candidate facts and identifying their slots against the query.
//!
//! ```
//! use qa_core::{Engine, FactBase, Lexicon};
//!
//! let fb = qa_core::store::parse_facts(r#"
//!     person p1 { last_name = "Brown" }
//!     action a1 { code = BE  verb = "be"  tense = past  subject = p1  complement = "mate" }
//! "#).unwrap();
//! let engine = Engine::new(fb, Lexicon::english());
//! assert_eq!(engine.ask("Was Brown a mate?").unwrap().text(), "Yes");
//! assert_eq!(engine.ask("Who was a mate?").unwrap().text(), "Brown");
//! ```

pub mod answer;
pub mod identity;
pub mod lexicon;
pub mod model;
pub mod question;
pub mod store;
pub mod text;

pub use answer::{Answer, AnswerKind, CannotReason, Engine, FillerPolicy, Slot, SlotMask, SlotValue};
pub use identity::{Decision, IdVerdict, IdentityError};
pub use lexicon::{Lexicon, LexiconError};
pub use model::{Code, PredicateKind, SemanticCode};
pub use question::{QueryPredicate, QuestionError, QuestionForm};
pub use store::{FactBase, StoreError};

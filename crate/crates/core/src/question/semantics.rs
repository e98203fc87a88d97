//! Semantic analysis: from a parsed question to a query predicate.

use super::{
    join_tokens, ActionPattern, CommPattern, EventPattern, IndirectQuery, ObjectPhrase, Pattern, Production,
    PropertyHint, QueryPredicate, QuestionError, QuestionForm, QuestionTarget, ReferentQuery, Span, Token,
};
use crate::answer::Slot;
use crate::lexicon::Lexicon;
use crate::model::{
    classify_code, DayOfWeek, Month, PartOfDay, PersonRecord, PlaceRecord, PredicateKind, Season, SemanticCode,
    TimeRecord,
};

fn unsupported(message: impl Into<String>) -> QuestionError {
    QuestionError::UnsupportedConstruction(message.into())
}

pub fn build_query(form: &QuestionForm, lexicon: &Lexicon) -> Result<QueryPredicate, QuestionError> {
    let verb = &form.verb;
    if verb.passive {
        return Err(unsupported("passive voice"));
    }
    let code = lexicon
        .classify_verb(&verb.lemma)
        .map_err(|_| QuestionError::UnknownVerb(verb.lemma.clone()))?;
    let kind = classify_code(code);
    let toks = &form.tokens;
    let interrogative = form.interrogative.as_deref();

    let subject = form
        .subject_phrase
        .map(|span| referent(toks, span, lexicon))
        .transpose()?;

    let mut time = None;
    let mut place = None;
    let mut way = None;
    let mut prepositional = Vec::new();
    for adv in &form.adverbial_phrases {
        let words = adv.span.tokens(toks);
        match &adv.preposition {
            None => set_once(&mut way, join_tokens(words), "two adverbs of manner")?,
            Some(prep) => {
                if let Some(t) = time_expression(words, Some(prep), lexicon) {
                    set_once(&mut time, t, "two time adverbials")?;
                } else if lexicon.is_place_preposition(prep) {
                    set_once(
                        &mut place,
                        place_record(words, adv.span.start, lexicon),
                        "two place adverbials",
                    )?;
                } else {
                    prepositional.push((prep.clone(), adv.span));
                }
            }
        }
    }

    let mut nouns = Vec::new();
    let mut content_phrases = Vec::new();
    let mut clauses = Vec::new();
    for obj in &form.object_phrases {
        match obj {
            ObjectPhrase::Noun(span) => match time_expression(span.tokens(toks), None, lexicon) {
                Some(t) => set_once(&mut time, t, "two time adverbials")?,
                None => nouns.push(*span),
            },
            ObjectPhrase::Infinitive(span) => content_phrases.push(span.text(toks)),
            ObjectPhrase::Clause { span, .. } => clauses.push(span.text(toks)),
        }
    }

    let target = form.target;
    let slot = target_slot(kind, code, target, interrogative)?;

    let restriction = match (form.production, form.noun_group) {
        (Production::SpecialMain, Some(span)) => {
            let base = interrogative.and_then(|i| lexicon.interrogative_target(i).ok());
            if matches!(
                base,
                Some(QuestionTarget::SubjectProperty(
                    PropertyHint::Owner | PropertyHint::Quantity
                ))
            ) {
                return Err(unsupported("property question about an object"));
            }
            Some(referent(toks, span, lexicon)?)
        }
        _ => None,
    };

    let negation = form.negated;
    let (tense, tense_type) = (verb.tense, verb.tense_type);
    let pattern = match kind {
        PredicateKind::Action => {
            let mut p = ActionPattern {
                semantic_type: code,
                verb: verb.lemma.clone(),
                negation,
                tense,
                tense_type,
                subject,
                direct_object: None,
                indirect_object: None,
                complement: None,
                place,
                time,
                purpose: None,
                way,
            };
            if code == SemanticCode::Be {
                match nouns[..] {
                    [] => {}
                    [span] => p.complement = Some(span.text(toks)),
                    _ => return Err(unsupported("more than one nominal complement")),
                }
            } else {
                let questioned_object = slot == Some(Slot::DirectObject);
                match (&nouns[..], questioned_object) {
                    ([], _) => {}
                    ([only], true) => {
                        p.indirect_object = Some(IndirectQuery {
                            target: referent(toks, *only, lexicon)?,
                            preposition: None,
                        })
                    }
                    ([only], false) => p.direct_object = Some(referent(toks, *only, lexicon)?),
                    ([first, second], false) => {
                        p.indirect_object = Some(IndirectQuery {
                            target: referent(toks, *first, lexicon)?,
                            preposition: None,
                        });
                        p.direct_object = Some(referent(toks, *second, lexicon)?);
                    }
                    _ => return Err(unsupported("too many objects")),
                }
            }
            for (prep, span) in &prepositional {
                if p.indirect_object.is_some() {
                    return Err(unsupported("more than one indirect object"));
                }
                p.indirect_object = Some(IndirectQuery {
                    target: referent(toks, *span, lexicon)?,
                    preposition: Some(prep.clone()),
                });
            }
            if !clauses.is_empty() {
                return Err(unsupported("reported clause after a verb that does not report"));
            }
            match &content_phrases[..] {
                [] => {}
                [purpose] => p.purpose = Some(purpose.clone()),
                _ => return Err(unsupported("more than one purpose")),
            }
            Pattern::Action(p)
        }
        PredicateKind::Event => {
            if !nouns.is_empty() || !prepositional.is_empty() || !content_phrases.is_empty() || !clauses.is_empty() {
                return Err(unsupported("objects on an event predicate"));
            }
            if way.is_some() {
                return Err(unsupported("manner adverb on an event predicate"));
            }
            Pattern::Event(EventPattern {
                verb: verb.lemma.clone(),
                scale: lexicon.event_scale(&verb.lemma).map(str::to_string),
                subject,
                negation,
                tense,
                tense_type,
                place,
                time,
            })
        }
        PredicateKind::Job | PredicateKind::Message | PredicateKind::Intelligence => {
            if way.is_some() {
                return Err(unsupported("manner adverb on a communication predicate"));
            }
            let mut p = CommPattern {
                kind,
                verb: verb.lemma.clone(),
                subject,
                addressee: None,
                content: None,
                negation,
                tense,
                tense_type,
                place,
                time,
            };
            let perception = kind == PredicateKind::Intelligence;
            let mut contents: Vec<String> = Vec::new();
            match nouns[..] {
                [] => {}
                [span] if perception => contents.push(span.text(toks)),
                [span] => p.addressee = Some(referent(toks, span, lexicon)?),
                _ => return Err(unsupported("too many objects")),
            }
            for (prep, span) in &prepositional {
                if prep == "to" && !perception && p.addressee.is_none() {
                    p.addressee = Some(referent(toks, *span, lexicon)?);
                } else if perception {
                    contents.push(format!("{prep} {}", span.text(toks)));
                } else {
                    return Err(unsupported(format!("`{prep}` phrase on a communication predicate")));
                }
            }
            contents.extend(content_phrases);
            contents.extend(clauses);
            match &contents[..] {
                [] => {}
                [c] => p.content = Some(c.clone()),
                _ => return Err(unsupported("more than one reported content")),
            }
            Pattern::Comm(p)
        }
    };

    if let Some(slot) = slot {
        if !matches!(target, QuestionTarget::SubjectProperty(_)) && slot_filled(&pattern, slot) {
            return Err(unsupported(format!("the questioned {slot} is also given")));
        }
    }

    let retry = match (interrogative, target, &pattern) {
        (Some("whom" | "who"), QuestionTarget::DirectObject, Pattern::Action(a))
            if a.semantic_type != SemanticCode::Be
                && form.leading_preposition.is_none()
                && form.stranded_preposition.is_none()
                && a.indirect_object.is_none() =>
        {
            Some(Slot::IndirectObject)
        }
        _ => None,
    };

    Ok(QueryPredicate {
        kind,
        pattern,
        questioned_slot: target,
        slot,
        restriction,
        retry,
    })
}

fn set_once<T>(field: &mut Option<T>, value: T, what: &str) -> Result<(), QuestionError> {
    if field.is_some() {
        return Err(unsupported(what));
    }
    *field = Some(value);
    Ok(())
}

/// Fact slot a question target maps to for a predicate kind.
fn target_slot(
    kind: PredicateKind,
    code: SemanticCode,
    target: QuestionTarget,
    interrogative: Option<&str>,
) -> Result<Option<Slot>, QuestionError> {
    use QuestionTarget as T;
    let slot = match (kind, target) {
        (_, T::YesNo) => return Ok(None),
        (_, T::Subject | T::SubjectProperty(_)) => Slot::Subject,
        (_, T::Time) => Slot::Time,
        (_, T::Place) => Slot::Place,
        (PredicateKind::Action, T::DirectObject) if code == SemanticCode::Be => Slot::Complement,
        (PredicateKind::Action, T::DirectObject) => Slot::DirectObject,
        (PredicateKind::Action, T::IndirectObject) => Slot::IndirectObject,
        (PredicateKind::Action, T::Way) => Slot::Way,
        (PredicateKind::Action, T::Purpose) => Slot::Purpose,
        (PredicateKind::Event, _) => {
            return Err(unsupported(format!("{target} question about an event")));
        }
        (_, T::DirectObject) if matches!(interrogative, Some("who" | "whom")) => Slot::Addressee,
        (_, T::DirectObject) => Slot::Content,
        (_, T::IndirectObject) => Slot::Addressee,
        (_, T::Way | T::Purpose) => {
            return Err(unsupported(format!("{target} question about a {kind} predicate")));
        }
    };
    Ok(Some(slot))
}

fn slot_filled(pattern: &Pattern, slot: Slot) -> bool {
    match pattern {
        Pattern::Action(a) => match slot {
            Slot::Subject => a.subject.is_some(),
            Slot::DirectObject => a.direct_object.is_some(),
            Slot::IndirectObject => a.indirect_object.is_some(),
            Slot::Complement => a.complement.is_some(),
            Slot::Place => a.place.is_some(),
            Slot::Time => a.time.is_some(),
            Slot::Purpose => a.purpose.is_some(),
            Slot::Way => a.way.is_some(),
            _ => false,
        },
        Pattern::Event(e) => match slot {
            Slot::Subject => e.subject.is_some(),
            Slot::Place => e.place.is_some(),
            Slot::Time => e.time.is_some(),
            _ => false,
        },
        Pattern::Comm(c) => match slot {
            Slot::Subject => c.subject.is_some(),
            Slot::Addressee => c.addressee.is_some(),
            Slot::Content => c.content.is_some(),
            Slot::Place => c.place.is_some(),
            Slot::Time => c.time.is_some(),
            _ => false,
        },
    }
}

/// Subject or object noun group as a query sub-predicate.
fn referent(tokens: &[Token], span: Span, lexicon: &Lexicon) -> Result<ReferentQuery, QuestionError> {
    let words = span.tokens(tokens);
    let Some(first) = words.first() else {
        return Err(unsupported("empty noun group"));
    };
    if lexicon.is_pronoun(&first.text) {
        return Err(unsupported(format!("pronoun `{}`", first.text)));
    }
    let proper = first.capitalized && span.start > 0;
    if !(proper || lexicon.is_honorific(&first.text)) {
        return Ok(ReferentQuery::phrase(span.text(tokens)));
    }
    let honorifics: Vec<&str> = words
        .iter()
        .take_while(|t| lexicon.is_honorific(&t.text))
        .map(|t| t.text.as_str())
        .collect();
    let names: Vec<&str> = words[honorifics.len()..].iter().map(|t| t.text.as_str()).collect();
    let mut extra: Vec<&str> = honorifics.clone();
    let mut person = PersonRecord::default();
    match names[..] {
        [] => {}
        [last] => person.last_name = Some(last.to_string()),
        [first, ref middle @ .., last] => {
            person.first_name = Some(first.to_string());
            person.last_name = Some(last.to_string());
            extra.extend(middle);
        }
    }
    if !extra.is_empty() {
        person.additional_data = Some(extra.join(" "));
    }
    Ok(ReferentQuery::Person(person))
}

fn place_record(words: &[Token], start: usize, lexicon: &Lexicon) -> PlaceRecord {
    let skip = words.iter().take_while(|t| lexicon.is_determiner(&t.text)).count();
    let rest = &words[skip..];
    let mut place = PlaceRecord::default();
    let proper = rest.first().is_some_and(|t| t.capitalized) && start + skip > 0;
    if proper {
        place.territorial_name = Some(join_tokens(rest));
    } else {
        place.construction_kind = Some(join_tokens(rest));
    }
    place
}

/// Reads a noun group as a time when every word is a time word: "in may 1990", "at night".
fn time_expression(words: &[Token], preposition: Option<&str>, lexicon: &Lexicon) -> Option<TimeRecord> {
    let mut t = TimeRecord::default();
    let mut any = false;
    let content: Vec<&str> = words
        .iter()
        .map(|w| w.text.as_str())
        .filter(|w| !lexicon.is_determiner(w) && !matches!(*w, "one" | "of"))
        .collect();
    for (i, w) in content.iter().enumerate() {
        let next = content.get(i + 1).copied();
        if let Ok(m) = w.parse::<Month>() {
            t.month = Some(m);
        } else if let Ok(s) = w.parse::<Season>() {
            t.season = Some(s);
        } else if let Ok(d) = w.parse::<DayOfWeek>() {
            t.day_of_week = Some(d);
        } else if let Ok(p) = w.parse::<PartOfDay>() {
            t.part_of_day = Some(p);
        } else if matches!(*w, "hours" | "o'clock") {
            continue;
        } else if let Ok(n) = w.parse::<u32>() {
            let hour_word = matches!(next, Some("hours" | "o'clock"));
            if n >= 100 {
                t.year = Some(n as i32);
            } else if hour_word || (preposition == Some("at") && n <= 23 && content.len() == 1) {
                t.hours = Some(n as u8);
            } else if (1..=31).contains(&n) {
                t.day_in_month = Some(n as u8);
            } else {
                return None;
            }
        } else {
            return None;
        }
        any = true;
    }
    any.then_some(t)
}

//! Recursive-descent parser over the token list.
//!
//! ```text
//! question         ::= general | special
//! general          ::= aux [not] subject-group [not] rest-of-predicate tail
//! special          ::= [prep] interrogative [noun-group] aux [not] subject-group [not] rest-of-predicate tail
//!                    | who|what predicate tail
//!                    | which|what|whose|how many|how much noun-group predicate tail
//!                    | who|what be basic-noun-phrase tail
//! tail             ::= { object | infinitive | clause | prep noun-group | adverb } [prep] "?"
//! ```

use super::{
    Adverbial, ObjectPhrase, Production, QuestionError, QuestionForm, QuestionKind, QuestionTarget, Span, Token,
    VerbInfo,
};
use crate::lexicon::{AuxKind, Auxiliary, Lexicon, VerbForm};
use crate::model::{classify_code, Month, TenseType};

/// Longest interrogative phrase the lexicon may hold.
const LOOKAHEAD: usize = 3;

pub fn parse_question(tokens: &[Token], lexicon: &Lexicon) -> Result<QuestionForm, QuestionError> {
    if !tokens.iter().any(|t| t.text != "?") {
        return Err(QuestionError::EmptyInput);
    }
    let p = Parser {
        toks: tokens,
        lex: lexicon,
    };
    if let Some((len, _)) = p.interrogative_at(0) {
        return p.special(None, 0, len);
    }
    if lexicon.is_preposition(p.word(0)) {
        if let Some((len, _)) = p.interrogative_at(1) {
            return p.special(Some(p.word(0).to_string()), 1, len);
        }
    }
    if let Some(aux) = lexicon.auxiliary(p.word(0)) {
        return p.general(aux);
    }
    Err(syntax(0, "an auxiliary verb or an interrogative word"))
}

/// Maps an interrogative to the slot it asks for, given where it stands in the parsed question.
pub fn resolve_target(
    interrogative: &str,
    form: &QuestionForm,
    lexicon: &Lexicon,
) -> Result<QuestionTarget, QuestionError> {
    let base = lexicon
        .interrogative_target(interrogative)
        .map_err(|_| QuestionError::UnknownInterrogative(interrogative.to_string()))?;
    Ok(match form.production {
        Production::General => QuestionTarget::YesNo,
        Production::SpecialSubject | Production::SpecialNominal => QuestionTarget::Subject,
        Production::SpecialSubjectProperty => match base {
            QuestionTarget::SubjectProperty(h) => QuestionTarget::SubjectProperty(h),
            _ => QuestionTarget::SubjectProperty(super::PropertyHint::Identity),
        },
        Production::SpecialMain => {
            if form.noun_group.is_some() {
                return Ok(QuestionTarget::DirectObject);
            }
            let prep = form.leading_preposition.is_some() || form.stranded_preposition.is_some();
            match interrogative {
                "who" | "whom" if prep => QuestionTarget::IndirectObject,
                "who" => QuestionTarget::DirectObject,
                "what" if form.stranded_preposition.as_deref() == Some("for") => QuestionTarget::Purpose,
                "what" if prep => QuestionTarget::IndirectObject,
                _ => base,
            }
        }
    })
}

fn syntax(index: usize, expected: &str) -> QuestionError {
    QuestionError::Syntax {
        position: index + 1,
        expected: expected.to_string(),
    }
}

struct Parser<'a> {
    toks: &'a [Token],
    lex: &'a Lexicon,
}

struct Tail {
    objects: Vec<ObjectPhrase>,
    adverbials: Vec<Adverbial>,
    stranded: Option<String>,
}

impl<'a> Parser<'a> {
    fn word(&self, i: usize) -> &'a str {
        self.toks.get(i).map(|t| t.text.as_str()).unwrap_or("?")
    }

    fn is_end(&self, i: usize) -> bool {
        self.word(i) == "?"
    }

    fn is_month(&self, i: usize) -> bool {
        self.word(i).parse::<Month>().is_ok()
    }

    fn is_aux(&self, i: usize) -> bool {
        self.lex.auxiliary(self.word(i)).is_some() && !self.is_month(i)
    }

    fn is_verb_form(&self, i: usize) -> bool {
        self.lex.is_verb_form(self.word(i))
    }

    fn is_interrogative_word(&self, i: usize) -> bool {
        matches!(self.lex.match_interrogative(&[self.word(i)]), Some((1, _)))
    }

    fn is_proper(&self, i: usize) -> bool {
        i > 0 && self.toks.get(i).is_some_and(|t| t.capitalized)
    }

    fn is_function_word(&self, i: usize) -> bool {
        let w = self.word(i);
        self.is_end(i)
            || matches!(w, "not" | "to" | "if" | "whether" | "'s")
            || self.lex.is_preposition(w)
            || self.lex.is_adverb(w)
            || self.is_aux(i)
            || self.is_interrogative_word(i)
    }

    /// A word that can continue a noun group.
    fn is_content(&self, i: usize) -> bool {
        !self.is_function_word(i)
            && !self.lex.is_determiner(self.word(i))
            && !self.lex.is_pronoun(self.word(i))
            && self.word(i) != "that"
    }

    fn starts_noun_group(&self, i: usize) -> bool {
        !self.is_function_word(i)
    }

    fn interrogative_at(&self, i: usize) -> Option<(usize, QuestionTarget)> {
        let end = (i + LOOKAHEAD).min(self.toks.len());
        let words: Vec<&str> = (i..end).map(|j| self.word(j)).collect();
        self.lex.match_interrogative(&words)
    }

    /// End of the noun group starting at `i`; equal to `i` when none starts there.
    fn noun_group(&self, i: usize, stop_at_verbs: bool) -> usize {
        if !self.starts_noun_group(i) {
            return i;
        }
        let w = self.word(i);
        let mut j = i;
        if self.lex.is_pronoun(w) {
            j += 1;
            while self.is_content(j) && !self.is_verb_form(j) {
                j += 1;
            }
            return j;
        }
        if self.lex.is_honorific(w) || self.is_proper(i) {
            while self.lex.is_honorific(self.word(j)) {
                j += 1;
            }
            // "mister brown" typed in lower case
            if j > i && self.is_content(j) && !self.is_proper(j) {
                return j + 1;
            }
            while self.is_content(j)
                && (self.is_proper(j) || self.word(j).chars().all(|c| c.is_ascii_digit()))
                && !(stop_at_verbs && j > i && self.is_verb_form(j))
            {
                j += 1;
            }
            return j;
        }
        if self.lex.is_determiner(w) || w == "that" {
            j += 1;
        }
        // the head (or first modifier) is taken even when it doubles as a verb form
        if self.is_content(j) {
            j += 1;
        } else {
            return j;
        }
        loop {
            if self.word(j) == "'s" && self.is_content(j + 1) {
                j += 2;
            } else if self.is_content(j) && !(stop_at_verbs && self.is_verb_form(j)) {
                j += 1;
            } else if self.word(j) == "of" && self.noun_group(j + 1, stop_at_verbs) > j + 1 {
                // "one of the men"
                j = self.noun_group(j + 1, stop_at_verbs);
            } else {
                break;
            }
        }
        j
    }

    /// A noun group at `i` that has a head word, or a syntax error naming it.
    fn required_noun_group(&self, i: usize, stop_at_verbs: bool, what: &str) -> Result<usize, QuestionError> {
        let end = self.noun_group(i, stop_at_verbs);
        if end == i {
            return Err(syntax(i, what));
        }
        let only_determiner = end == i + 1 && (self.lex.is_determiner(self.word(i)) || self.word(i) == "that");
        if only_determiner {
            return Err(syntax(end, "a noun"));
        }
        Ok(end)
    }

    fn general(&self, aux: &Auxiliary) -> Result<QuestionForm, QuestionError> {
        let (negated, subject, verb, verb_span, next) = self.main_clause(aux, 0)?;
        let tail = self.tail(next, &verb, false)?;
        let mut form = QuestionForm {
            tokens: self.toks.to_vec(),
            kind: QuestionKind::General,
            production: Production::General,
            target: QuestionTarget::YesNo,
            interrogative: None,
            leading_preposition: None,
            stranded_preposition: None,
            noun_group: None,
            auxiliary: Some(aux.lemma.clone()),
            negated,
            subject_phrase: Some(subject),
            verb_phrase: verb_span,
            verb,
            object_phrases: tail.objects,
            adverbial_phrases: tail.adverbials,
        };
        split_adjective_complement(&mut form, self);
        Ok(form)
    }

    /// `aux [not] subject-group [not] rest-of-predicate`, with the auxiliary at `at`.
    fn main_clause(&self, aux: &Auxiliary, at: usize) -> Result<(bool, Span, VerbInfo, Span, usize), QuestionError> {
        let mut i = at + 1;
        let mut negated = false;
        if self.word(i) == "not" {
            negated = true;
            i += 1;
        }
        let end = self.required_noun_group(i, true, "a group of subject")?;
        let subject = Span::new(i, end);
        i = end;
        if self.word(i) == "not" {
            if negated {
                return Err(syntax(i, "a verb"));
            }
            negated = true;
            i += 1;
        }
        let (verb, span, next) = self.rest_of_predicate(Some((aux, at)), i, false)?;
        Ok((negated, subject, verb, span, next))
    }

    fn special(&self, leading: Option<String>, at: usize, len: usize) -> Result<QuestionForm, QuestionError> {
        let phrase: Vec<&str> = (at..at + len).map(|j| self.word(j)).collect();
        let phrase = phrase.join(" ");
        let base = self
            .lex
            .interrogative_target(&phrase)
            .map_err(|_| QuestionError::UnknownInterrogative(phrase.clone()))?;
        let mut k = at + len;
        let is_property = matches!(base, QuestionTarget::SubjectProperty(_));
        let who_or_what = phrase == "who" || phrase == "what";

        let mut noun_group = None;
        let what_with_noun =
            phrase == "what" && self.is_content(k) && !self.is_verb_form(k) && !self.lex.is_pronoun(self.word(k));
        if is_property || what_with_noun {
            let end = self.required_noun_group(k, true, "a group of noun")?;
            noun_group = Some(Span::new(k, end));
            k = end;
        }

        let subject_form = if leading.is_some() || !(who_or_what || noun_group.is_some()) {
            false
        } else {
            self.subject_form_follows(k)
        };

        let mut form = if subject_form {
            self.subject_form(k, noun_group)?
        } else {
            let Some(aux) = self.lex.auxiliary(self.word(k)).filter(|_| self.is_aux(k)) else {
                return Err(syntax(k, "an auxiliary verb"));
            };
            let (negated, subject, verb, verb_span, next) = self.main_clause(aux, k)?;
            let tail = self.tail(next, &verb, true)?;
            QuestionForm {
                tokens: self.toks.to_vec(),
                kind: QuestionKind::Special,
                production: Production::SpecialMain,
                target: QuestionTarget::YesNo,
                interrogative: None,
                leading_preposition: None,
                stranded_preposition: tail.stranded,
                noun_group,
                auxiliary: Some(aux.lemma.clone()),
                negated,
                subject_phrase: Some(subject),
                verb_phrase: verb_span,
                verb,
                object_phrases: tail.objects,
                adverbial_phrases: tail.adverbials,
            }
        };
        form.interrogative = Some(phrase.clone());
        form.leading_preposition = leading;
        form.target = resolve_target(&phrase, &form, self.lex)?;
        Ok(form)
    }

    /// Decides whether a who/what/property question addresses the subject.
    fn subject_form_follows(&self, k: usize) -> bool {
        if !self.is_aux(k) {
            return true;
        }
        let aux = self.lex.auxiliary(self.word(k)).expect("checked auxiliary");
        let mut j = k + 1;
        if self.word(j) == "not" {
            j += 1;
        }
        if self.is_verb_form(j) || !self.starts_noun_group(j) {
            return true;
        }
        let mut e = self.noun_group(j, true);
        if e == j {
            return true;
        }
        if self.word(e) == "not" {
            e += 1;
        }
        if self.is_verb_form(e) {
            return false;
        }
        match aux.kind {
            // "What was Brown?" asks for the complement; "Who was a mate?" for the subject
            AuxKind::Be | AuxKind::Have => {
                !(self.is_proper(j) || self.lex.is_honorific(self.word(j)) || self.lex.is_pronoun(self.word(j)))
            }
            AuxKind::Do | AuxKind::Modal => true,
        }
    }

    fn subject_form(&self, k: usize, noun_group: Option<Span>) -> Result<QuestionForm, QuestionError> {
        let (aux, mut i) = match self.lex.auxiliary(self.word(k)).filter(|_| self.is_aux(k)) {
            Some(aux) => (Some((aux, k)), k + 1),
            None => (None, k),
        };
        let mut negated = false;
        if aux.is_some() && self.word(i) == "not" {
            negated = true;
            i += 1;
        }
        let (verb, verb_span, next) = self.rest_of_predicate(aux, i, true)?;
        let tail = self.tail(next, &verb, false)?;
        let production = if noun_group.is_some() {
            Production::SpecialSubjectProperty
        } else if verb.copula && tail.objects.iter().any(|o| matches!(o, ObjectPhrase::Noun(_))) {
            Production::SpecialNominal
        } else {
            Production::SpecialSubject
        };
        Ok(QuestionForm {
            tokens: self.toks.to_vec(),
            kind: QuestionKind::Special,
            production,
            target: QuestionTarget::YesNo,
            interrogative: None,
            leading_preposition: None,
            stranded_preposition: None,
            noun_group,
            auxiliary: aux.map(|(a, _)| a.lemma.clone()),
            negated,
            subject_phrase: noun_group,
            verb_phrase: verb_span,
            verb,
            object_phrases: tail.objects,
            adverbial_phrases: tail.adverbials,
        })
    }

    /// Picks a reading of the word at `i` in one of `allowed` forms, in preference order.
    fn form_at(&self, i: usize, allowed: &[VerbForm]) -> Option<String> {
        let forms = self.lex.verb_forms(self.word(i));
        allowed
            .iter()
            .find_map(|want| forms.iter().find(|(_, f)| f == want).map(|(head, _)| head.clone()))
    }

    /// Completes a lemma head with a particle when the lexicon lists the pair ("cry out").
    fn lemma_at(&self, head: &str, i: usize) -> Result<(String, usize), QuestionError> {
        let two = format!("{head} {}", self.word(i + 1));
        if self.lex.is_verb(&two) {
            Ok((two, i + 2))
        } else if self.lex.is_verb(head) {
            Ok((head.to_string(), i + 1))
        } else {
            Err(QuestionError::UnknownVerb(head.to_string()))
        }
    }

    fn missing_verb(&self, i: usize, expected: &str) -> QuestionError {
        let w = self.word(i);
        let plain = self.is_content(i) && !self.is_proper(i) && !self.is_verb_form(i);
        if plain && w.chars().all(char::is_alphabetic) {
            QuestionError::UnknownVerb(w.to_string())
        } else {
            syntax(i, expected)
        }
    }

    /// Main verb with tense and aspect. `aux` is the fronted auxiliary and its index.
    fn rest_of_predicate(
        &self,
        aux: Option<(&Auxiliary, usize)>,
        i: usize,
        subject_form: bool,
    ) -> Result<(VerbInfo, Span, usize), QuestionError> {
        let verb = |lemma: String, tense, tense_type, passive: bool| VerbInfo {
            copula: lemma == "be" && !passive,
            lemma,
            tense,
            tense_type,
            passive,
        };
        let Some((aux, at)) = aux else {
            // finite verb right after the interrogative
            if let Some(head) = self.form_at(i, &[VerbForm::Past]) {
                let (lemma, next) = self.lemma_at(&head, i)?;
                return Ok((
                    verb(lemma, crate::model::Tense::Past, TenseType::Indefinite, false),
                    Span::new(i, next),
                    next,
                ));
            }
            if let Some(head) = self.form_at(i, &[VerbForm::Present3, VerbForm::Base]) {
                let (lemma, next) = self.lemma_at(&head, i)?;
                return Ok((
                    verb(lemma, crate::model::Tense::Present, TenseType::Indefinite, false),
                    Span::new(i, next),
                    next,
                ));
            }
            return Err(self.missing_verb(i, "a verb"));
        };
        let tense = aux.tense;
        let own = Span::new(at, at + 1);
        match aux.kind {
            AuxKind::Do => {
                if let Some(head) = self.form_at(i, &[VerbForm::Base]) {
                    let (lemma, next) = self.lemma_at(&head, i)?;
                    Ok((
                        verb(lemma, tense, TenseType::Indefinite, false),
                        Span::new(i, next),
                        next,
                    ))
                } else if subject_form && !self.is_verb_form(i) {
                    Ok((verb("do".into(), tense, TenseType::Indefinite, false), own, i))
                } else if self.is_verb_form(i) {
                    Err(syntax(i, "a base-form verb"))
                } else {
                    Err(self.missing_verb(i, "a verb"))
                }
            }
            AuxKind::Be => {
                if let Some(head) = self.form_at(i, &[VerbForm::Ing]) {
                    let (lemma, next) = self.lemma_at(&head, i)?;
                    Ok((
                        verb(lemma, tense, TenseType::Continuous, false),
                        Span::new(i, next),
                        next,
                    ))
                } else if let Some(head) = self.form_at(i, &[VerbForm::Participle]) {
                    let (lemma, next) = self.lemma_at(&head, i)?;
                    Ok((
                        verb(lemma, tense, TenseType::Indefinite, true),
                        Span::new(i, next),
                        next,
                    ))
                } else {
                    Ok((verb("be".into(), tense, TenseType::Indefinite, false), own, i))
                }
            }
            AuxKind::Have => self.perfect(i, tense, &verb),
            AuxKind::Modal => match self.word(i) {
                "be" => {
                    if let Some(head) = self.form_at(i + 1, &[VerbForm::Ing]) {
                        let (lemma, next) = self.lemma_at(&head, i + 1)?;
                        Ok((
                            verb(lemma, tense, TenseType::Continuous, false),
                            Span::new(i, next),
                            next,
                        ))
                    } else if let Some(head) = self.form_at(i + 1, &[VerbForm::Participle]) {
                        let (lemma, next) = self.lemma_at(&head, i + 1)?;
                        Ok((
                            verb(lemma, tense, TenseType::Indefinite, true),
                            Span::new(i, next),
                            next,
                        ))
                    } else {
                        Ok((
                            verb("be".into(), tense, TenseType::Indefinite, false),
                            Span::new(i, i + 1),
                            i + 1,
                        ))
                    }
                }
                "have" => self.perfect(i + 1, tense, &verb),
                _ => {
                    if let Some(head) = self.form_at(i, &[VerbForm::Base]) {
                        let (lemma, next) = self.lemma_at(&head, i)?;
                        Ok((
                            verb(lemma, tense, TenseType::Indefinite, false),
                            Span::new(i, next),
                            next,
                        ))
                    } else if self.is_verb_form(i) {
                        Err(syntax(i, "a base-form verb"))
                    } else {
                        Err(self.missing_verb(i, "a verb"))
                    }
                }
            },
        }
    }

    /// After have: `been` + ing, `been` alone, or a participle.
    fn perfect(
        &self,
        i: usize,
        tense: crate::model::Tense,
        verb: &dyn Fn(String, crate::model::Tense, TenseType, bool) -> VerbInfo,
    ) -> Result<(VerbInfo, Span, usize), QuestionError> {
        if self.word(i) == "been" {
            if let Some(head) = self.form_at(i + 1, &[VerbForm::Ing]) {
                let (lemma, next) = self.lemma_at(&head, i + 1)?;
                return Ok((
                    verb(lemma, tense, TenseType::PerfectContinuous, false),
                    Span::new(i, next),
                    next,
                ));
            }
            return Ok((
                verb("be".into(), tense, TenseType::Perfect, false),
                Span::new(i, i + 1),
                i + 1,
            ));
        }
        if let Some(head) = self.form_at(i, &[VerbForm::Participle]) {
            let (lemma, next) = self.lemma_at(&head, i)?;
            return Ok((verb(lemma, tense, TenseType::Perfect, false), Span::new(i, next), next));
        }
        Err(syntax(i, "a past participle"))
    }

    fn tail(&self, mut i: usize, verb: &VerbInfo, allow_stranded: bool) -> Result<Tail, QuestionError> {
        let mut tail = Tail {
            objects: Vec::new(),
            adverbials: Vec::new(),
            stranded: None,
        };
        let comm_verb = self
            .lex
            .classify_verb(&verb.lemma)
            .map(|c| classify_code(c).is_comm())
            .unwrap_or(false);
        let n = self.toks.len();
        loop {
            let w = self.word(i);
            if w == "?" {
                if i + 1 < n {
                    return Err(syntax(i + 1, "the end of the question"));
                }
                return Ok(tail);
            }
            let next_end = (i..n).find(|&j| self.is_end(j)).unwrap_or(n);
            if (w == "that" && comm_verb) || w == "if" || w == "whether" {
                if next_end == i + 1 {
                    return Err(syntax(i + 1, "a clause"));
                }
                tail.objects.push(ObjectPhrase::Clause {
                    introducer: w.to_string(),
                    span: Span::new(i + 1, next_end),
                });
                i = next_end;
                continue;
            }
            if w == "to" && self.form_at(i + 1, &[VerbForm::Base]).is_some() {
                tail.objects.push(ObjectPhrase::Infinitive(Span::new(i, next_end)));
                i = next_end;
                continue;
            }
            if self.lex.is_preposition(w) {
                if self.is_end(i + 1) {
                    if !allow_stranded || tail.stranded.is_some() {
                        return Err(syntax(i + 1, "a group of noun"));
                    }
                    tail.stranded = Some(w.to_string());
                    i += 1;
                    continue;
                }
                let end = self.required_noun_group(i + 1, false, "a group of noun")?;
                tail.adverbials.push(Adverbial {
                    preposition: Some(w.to_string()),
                    span: Span::new(i + 1, end),
                });
                i = end;
                continue;
            }
            if self.lex.is_adverb(w) {
                tail.adverbials.push(Adverbial {
                    preposition: None,
                    span: Span::new(i, i + 1),
                });
                i += 1;
                continue;
            }
            let end = self.noun_group(i, false);
            if end == i {
                return Err(syntax(i, "an object, an adverbial modifier or `?`"));
            }
            let end = self.required_noun_group(i, false, "an object")?;
            tail.objects.push(ObjectPhrase::Noun(Span::new(i, end)));
            i = end;
        }
    }
}

/// "Is the man asleep?": with a copula and nothing after the subject group, a trailing
/// common word of the subject group is the complement.
fn split_adjective_complement(form: &mut QuestionForm, p: &Parser<'_>) {
    if !form.verb.copula || !form.object_phrases.is_empty() {
        return;
    }
    let Some(subject) = form.subject_phrase else { return };
    let first = subject.start;
    if p.is_proper(first) || p.lex.is_honorific(p.word(first)) || p.lex.is_pronoun(p.word(first)) {
        return;
    }
    let head_start = if p.lex.is_determiner(p.word(first)) {
        first + 1
    } else {
        first
    };
    if subject.end >= head_start + 2 && p.word(subject.end - 2) != "'s" {
        form.subject_phrase = Some(Span::new(subject.start, subject.end - 1));
        form.object_phrases
            .push(ObjectPhrase::Noun(Span::new(subject.end - 1, subject.end)));
    }
}

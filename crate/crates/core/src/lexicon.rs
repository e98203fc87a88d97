//! Verb taxonomy, synonymy, interrogatives and closed word classes, loaded from a lexicon file.
//!
//! Line formats (`#` comments, blank lines ignored):
//!
//! ```text
//! verb <lemma> <CODE> [scale=<scale>]      multi-word lemmas use `_`: cry_out
//! synonyms <lemma>,<lemma>,...
//! interrogative "<phrase>" <TARGET>[:<hint>]
//! form <surface> <lemma> <base|present3|past|participle|ing>
//! auxiliary <surface> <lemma> <present|past|future>
//! preposition <word> [place]
//! adverb <word>
//! determiner <word>
//! pronoun <word>
//! honorific <word>
//! ```

use std::collections::{BTreeSet, HashMap, HashSet};
use std::path::Path;

use crate::model::{classify_code, PredicateKind, SemanticCode, Tense};
use crate::question::{PropertyHint, QuestionTarget};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LexiconError {
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown verb `{0}`")]
    UnknownVerb(String),
    #[error("unknown interrogative `{0}`")]
    UnknownInterrogative(String),
    #[error("cannot read lexicon: {0}")]
    Io(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerbForm {
    Base,
    Present3,
    Past,
    Participle,
    Ing,
}

impl VerbForm {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "base" => VerbForm::Base,
            "present3" => VerbForm::Present3,
            "past" => VerbForm::Past,
            "participle" => VerbForm::Participle,
            "ing" => VerbForm::Ing,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuxKind {
    Be,
    Do,
    Have,
    Modal,
}

/// A fronted auxiliary or modal verb.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Auxiliary {
    pub lemma: String,
    pub kind: AuxKind,
    pub tense: Tense,
}

#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    verb_codes: HashMap<String, SemanticCode>,
    event_scales: HashMap<String, String>,
    synonym_groups: Vec<BTreeSet<String>>,
    group_of: HashMap<String, usize>,
    interrogatives: Vec<(Vec<String>, QuestionTarget)>,
    auxiliaries: HashMap<String, Auxiliary>,
    /// surface form -> (lemma head, form)
    forms: HashMap<String, Vec<(String, VerbForm)>>,
    prepositions: HashSet<String>,
    place_prepositions: HashSet<String>,
    adverbs: HashSet<String>,
    determiners: HashSet<String>,
    pronouns: HashSet<String>,
    honorifics: HashSet<String>,
}

const ENGLISH: &str = include_str!("../data/english.lex");

impl Lexicon {
    /// The shipped English lexicon.
    pub fn english() -> Self {
        Self::parse(ENGLISH).expect("shipped lexicon is valid")
    }

    pub fn load(path: &Path) -> Result<Self, LexiconError> {
        let text = std::fs::read_to_string(path).map_err(|e| LexiconError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut lex = Lexicon::default();
        let mut pending_synonyms = Vec::new();
        let mut irregular = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = strip_comment(raw);
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let column = line.len() - line.trim_start().len() + 1;
            let err = |message: String| LexiconError::Parse {
                line: line_no,
                column,
                message,
            };
            let (keyword, rest) = match trimmed.split_once(char::is_whitespace) {
                Some((k, r)) => (k, r.trim()),
                None => (trimmed, ""),
            };
            let words: Vec<&str> = rest.split_whitespace().collect();
            match keyword {
                "verb" => {
                    if words.len() < 2 || words.len() > 3 {
                        return Err(err("expected `verb <lemma> <CODE> [scale=<scale>]`".into()));
                    }
                    let lemma = lemma_from_file(words[0]);
                    let code: SemanticCode = words[1].parse().map_err(|e| err(format!("{e}")))?;
                    if lex.verb_codes.insert(lemma.clone(), code).is_some() {
                        return Err(err(format!("verb `{lemma}` declared twice")));
                    }
                    if let Some(extra) = words.get(2) {
                        let scale = extra
                            .strip_prefix("scale=")
                            .ok_or_else(|| err(format!("unexpected `{extra}`")))?;
                        if classify_code(code) != PredicateKind::Event {
                            return Err(err("scale is only meaningful for CHANGE verbs".into()));
                        }
                        lex.event_scales.insert(lemma, scale.to_string());
                    }
                }
                "synonyms" => {
                    let group: BTreeSet<String> = rest
                        .split(',')
                        .map(|w| lemma_from_file(w.trim()))
                        .filter(|w| !w.is_empty())
                        .collect();
                    if group.len() < 2 {
                        return Err(err("a synonym group needs at least two lemmas".into()));
                    }
                    pending_synonyms.push((line_no, column, group));
                }
                "interrogative" => {
                    let (phrase, tail) =
                        quoted(rest).ok_or_else(|| err("expected `interrogative \"<phrase>\" <TARGET>`".into()))?;
                    let target = parse_target(tail.trim()).map_err(err)?;
                    let phrase: Vec<String> = phrase.split_whitespace().map(|w| w.to_lowercase()).collect();
                    if phrase.is_empty() {
                        return Err(err("empty interrogative phrase".into()));
                    }
                    lex.interrogatives.push((phrase, target));
                }
                "form" => {
                    let [surface, lemma, form] = words[..] else {
                        return Err(err("expected `form <surface> <lemma> <form>`".into()));
                    };
                    let form = VerbForm::parse(form).ok_or_else(|| err(format!("unknown verb form `{form}`")))?;
                    irregular.push((line_no, column, surface.to_lowercase(), lemma.to_lowercase(), form));
                }
                "auxiliary" => {
                    let [surface, lemma, tense] = words[..] else {
                        return Err(err("expected `auxiliary <surface> <lemma> <tense>`".into()));
                    };
                    let tense: Tense = tense.parse().map_err(|e| err(format!("{e}")))?;
                    let kind = match lemma {
                        "be" => AuxKind::Be,
                        "do" => AuxKind::Do,
                        "have" => AuxKind::Have,
                        _ => AuxKind::Modal,
                    };
                    lex.auxiliaries.insert(
                        surface.to_lowercase(),
                        Auxiliary {
                            lemma: lemma.to_lowercase(),
                            kind,
                            tense,
                        },
                    );
                }
                "preposition" => match words[..] {
                    [word] => {
                        lex.prepositions.insert(word.to_lowercase());
                    }
                    [word, "place"] => {
                        lex.prepositions.insert(word.to_lowercase());
                        lex.place_prepositions.insert(word.to_lowercase());
                    }
                    _ => return Err(err("expected `preposition <word> [place]`".into())),
                },
                "adverb" | "determiner" | "pronoun" | "honorific" => {
                    let [word] = words[..] else {
                        return Err(err(format!("expected `{keyword} <word>`")));
                    };
                    let set = match keyword {
                        "adverb" => &mut lex.adverbs,
                        "determiner" => &mut lex.determiners,
                        "pronoun" => &mut lex.pronouns,
                        _ => &mut lex.honorifics,
                    };
                    set.insert(word.to_lowercase());
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
        }

        for (line, column, group) in pending_synonyms {
            let err = |message: String| LexiconError::Parse { line, column, message };
            let mut code = None;
            for lemma in &group {
                let c = *lex
                    .verb_codes
                    .get(lemma)
                    .ok_or_else(|| err(format!("synonym `{lemma}` is not a declared verb")))?;
                if *code.get_or_insert(c) != c {
                    return Err(err(format!("synonym group mixes semantic codes at `{lemma}`")));
                }
                if lex.group_of.contains_key(lemma) {
                    return Err(err(format!("`{lemma}` belongs to two synonym groups")));
                }
                lex.group_of.insert(lemma.clone(), lex.synonym_groups.len());
            }
            lex.synonym_groups.push(group);
        }

        let heads: HashSet<String> = lex
            .verb_codes
            .keys()
            .map(|l| l.split(' ').next().unwrap_or(l).to_string())
            .collect();
        for head in &heads {
            for (surface, form) in regular_forms(head) {
                lex.add_form(surface, head, form);
            }
        }
        for (line, column, surface, lemma, form) in irregular {
            if !heads.contains(&lemma) {
                return Err(LexiconError::Parse {
                    line,
                    column,
                    message: format!("form of undeclared verb `{lemma}`"),
                });
            }
            lex.add_form(surface, &lemma, form);
        }
        // longest interrogative phrases first
        lex.interrogatives.sort_by_key(|i| std::cmp::Reverse(i.0.len()));
        Ok(lex)
    }

    fn add_form(&mut self, surface: String, head: &str, form: VerbForm) {
        let entry = self.forms.entry(surface).or_default();
        let item = (head.to_string(), form);
        if !entry.contains(&item) {
            entry.push(item);
        }
    }

    pub fn classify_verb(&self, lemma: &str) -> Result<SemanticCode, LexiconError> {
        self.verb_codes
            .get(&lemma_from_file(lemma))
            .copied()
            .ok_or_else(|| LexiconError::UnknownVerb(lemma.to_string()))
    }

    pub fn verbs_synonymous(&self, a: &str, b: &str) -> Result<bool, LexiconError> {
        self.classify_verb(a)?;
        self.classify_verb(b)?;
        let (a, b) = (&lemma_from_file(a), &lemma_from_file(b));
        if a == b {
            return Ok(true);
        }
        Ok(match (self.group_of.get(a), self.group_of.get(b)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        })
    }

    pub fn event_scale(&self, lemma: &str) -> Option<&str> {
        self.event_scales.get(&lemma_from_file(lemma)).map(String::as_str)
    }

    pub fn verbs(&self) -> impl Iterator<Item = (&str, SemanticCode)> {
        self.verb_codes.iter().map(|(l, c)| (l.as_str(), *c))
    }

    pub fn synonym_groups(&self) -> &[BTreeSet<String>] {
        &self.synonym_groups
    }

    pub fn is_verb(&self, lemma: &str) -> bool {
        self.verb_codes.contains_key(lemma)
    }

    /// Lemma heads and forms a surface word can realize.
    pub fn verb_forms(&self, surface: &str) -> &[(String, VerbForm)] {
        self.forms.get(surface).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_verb_form(&self, surface: &str) -> bool {
        self.forms.contains_key(surface)
    }

    pub fn auxiliary(&self, surface: &str) -> Option<&Auxiliary> {
        self.auxiliaries.get(surface)
    }

    /// Longest interrogative phrase starting at `words[0]`, with its length in words.
    pub fn match_interrogative(&self, words: &[&str]) -> Option<(usize, QuestionTarget)> {
        self.interrogatives
            .iter()
            .find(|(phrase, _)| phrase.len() <= words.len() && phrase.iter().zip(words).all(|(p, w)| p == w))
            .map(|(phrase, target)| (phrase.len(), *target))
    }

    pub fn interrogative_target(&self, phrase: &str) -> Result<QuestionTarget, LexiconError> {
        let words: Vec<&str> = phrase.split_whitespace().collect();
        self.interrogatives
            .iter()
            .find(|(p, _)| p.len() == words.len() && p.iter().zip(&words).all(|(a, b)| a == b))
            .map(|(_, t)| *t)
            .ok_or_else(|| LexiconError::UnknownInterrogative(phrase.to_string()))
    }

    pub fn is_preposition(&self, word: &str) -> bool {
        self.prepositions.contains(word)
    }

    pub fn is_place_preposition(&self, word: &str) -> bool {
        self.place_prepositions.contains(word)
    }

    pub fn is_adverb(&self, word: &str) -> bool {
        self.adverbs.contains(word) || (word.len() > 4 && word.ends_with("ly") && !self.is_verb_form(word))
    }

    pub fn is_determiner(&self, word: &str) -> bool {
        self.determiners.contains(word)
    }

    pub fn is_pronoun(&self, word: &str) -> bool {
        self.pronouns.contains(word)
    }

    pub fn is_honorific(&self, word: &str) -> bool {
        self.honorifics.contains(word)
    }
}

fn strip_comment(line: &str) -> &str {
    let mut in_quotes = false;
    for (i, c) in line.char_indices() {
        match c {
            '"' => in_quotes = !in_quotes,
            '#' if !in_quotes => return &line[..i],
            _ => {}
        }
    }
    line
}

fn lemma_from_file(word: &str) -> String {
    word.to_lowercase().replace('_', " ")
}

fn quoted(s: &str) -> Option<(&str, &str)> {
    let s = s.strip_prefix('"')?;
    let end = s.find('"')?;
    Some((&s[..end], &s[end + 1..]))
}

fn parse_target(s: &str) -> Result<QuestionTarget, String> {
    let (name, hint) = match s.split_once(':') {
        Some((n, h)) => (n, Some(h)),
        None => (s, None),
    };
    let target = match (name, hint) {
        ("SUBJECT", None) => QuestionTarget::Subject,
        ("SUBJECT_PROPERTY", h) => QuestionTarget::SubjectProperty(match h.unwrap_or("identity") {
            "identity" => PropertyHint::Identity,
            "owner" => PropertyHint::Owner,
            "quantity" => PropertyHint::Quantity,
            other => return Err(format!("unknown property hint `{other}`")),
        }),
        ("DIRECT_OBJECT", None) => QuestionTarget::DirectObject,
        ("INDIRECT_OBJECT", None) => QuestionTarget::IndirectObject,
        ("TIME", None) => QuestionTarget::Time,
        ("PLACE", None) => QuestionTarget::Place,
        ("WAY", None) => QuestionTarget::Way,
        ("PURPOSE", None) => QuestionTarget::Purpose,
        _ => return Err(format!("unknown question target `{s}`")),
    };
    Ok(target)
}

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

/// Regular inflections of a verb head. Irregular forms come from `form` lines.
fn regular_forms(head: &str) -> Vec<(String, VerbForm)> {
    let chars: Vec<char> = head.chars().collect();
    let last = chars.last().copied().unwrap_or(' ');
    let before_last = if chars.len() >= 2 { chars[chars.len() - 2] } else { ' ' };
    let consonant_y = last == 'y' && !is_vowel(before_last);
    let stem_y = &head[..head.len().saturating_sub(1)];

    let present3 = if consonant_y {
        format!("{stem_y}ies")
    } else if ["s", "x", "z", "ch", "sh", "o"].iter().any(|e| head.ends_with(e)) {
        format!("{head}es")
    } else {
        format!("{head}s")
    };
    let past = if consonant_y {
        format!("{stem_y}ied")
    } else if last == 'e' {
        format!("{head}d")
    } else {
        format!("{head}ed")
    };
    let ing = if last == 'e' && before_last != 'e' && chars.len() > 2 {
        format!("{}ing", &head[..head.len() - 1])
    } else {
        format!("{head}ing")
    };
    vec![
        (head.to_string(), VerbForm::Base),
        (present3, VerbForm::Present3),
        (past.clone(), VerbForm::Past),
        (past, VerbForm::Participle),
        (ing, VerbForm::Ing),
    ]
}

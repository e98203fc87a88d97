use std::fmt;

use crate::lexicon::Lexicon;
use crate::question::{build_query, parse_question, tokenize, QueryPredicate, QuestionError, QuestionForm};
use crate::store::FactBase;

use super::{answer_general_traced, answer_special_with, Answer, FillerPolicy, Trace};

/// A loaded fact base and lexicon that answers question text.
#[derive(Debug, Clone)]
pub struct Engine {
    fb: FactBase,
    lexicon: Lexicon,
    policy: FillerPolicy,
}

impl Engine {
    pub fn new(fb: FactBase, lexicon: Lexicon) -> Self {
        Engine {
            fb,
            lexicon,
            policy: FillerPolicy::default(),
        }
    }

    pub fn with_policy(mut self, policy: FillerPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn fact_base(&self) -> &FactBase {
        &self.fb
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    pub fn parse(&self, question: &str) -> Result<(QuestionForm, QueryPredicate), QuestionError> {
        let tokens = tokenize(question)?;
        let form = parse_question(&tokens, &self.lexicon)?;
        let query = build_query(&form, &self.lexicon)?;
        Ok((form, query))
    }

    pub fn answer_query(&self, query: &QueryPredicate, trace: Option<&mut Trace>) -> Answer {
        if query.is_general() {
            answer_general_traced(query, &self.fb, &self.lexicon, trace)
        } else {
            answer_special_with(query, &self.fb, &self.lexicon, self.policy, trace)
        }
    }

    pub fn ask(&self, question: &str) -> Result<Answer, QuestionError> {
        let (_, query) = self.parse(question)?;
        Ok(self.answer_query(&query, None))
    }

    /// Answers a question and records every stage on the way.
    pub fn explain(&self, question: &str) -> Explanation {
        let mut out = Explanation {
            question: question.to_string(),
            form: None,
            query: None,
            trace: Trace::default(),
            result: Err(QuestionError::EmptyInput),
        };
        let parsed = tokenize(question).and_then(|tokens| {
            let form = parse_question(&tokens, &self.lexicon)?;
            out.form = Some(form.clone());
            build_query(&form, &self.lexicon)
        });
        out.result = parsed.map(|query| {
            let answer = self.answer_query(&query, Some(&mut out.trace));
            out.query = Some(query);
            answer
        });
        out
    }
}

/// Report of a traced question.
#[derive(Debug, Clone)]
pub struct Explanation {
    pub question: String,
    pub form: Option<QuestionForm>,
    pub query: Option<QueryPredicate>,
    pub trace: Trace,
    pub result: Result<Answer, QuestionError>,
}

impl fmt::Display for Explanation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "question: {}", self.question)?;
        if let Some(form) = &self.form {
            writeln!(
                f,
                "form: {:?} production, target {}, verb `{}` ({} {}{})",
                form.kind,
                form.target,
                form.verb.lemma,
                form.verb.tense,
                form.verb.tense_type,
                if form.negated { ", negated" } else { "" }
            )?;
            writeln!(f, "  {form:?}")?;
        }
        if let Some(query) = &self.query {
            writeln!(f, "query: {:?}, questioned slot {}", query.kind, query.questioned_slot)?;
            writeln!(f, "  {:?}", query.pattern)?;
            if let Some(r) = &query.restriction {
                writeln!(f, "  restriction: {r:?}")?;
            }
        }
        for step in &self.trace.steps {
            writeln!(f, "step: {step}")?;
        }
        for c in &self.trace.candidates {
            write!(f, "candidate {}: {}", c.code, if c.hit { "HIT" } else { "miss" })?;
            for v in &c.verdicts {
                write!(f, " {}={}", v.slot, if v.passed { "ok" } else { "FAIL" })?;
                if let Some(b) = v.branch {
                    write!(f, "[{b}]")?;
                }
            }
            if let Some(filler) = &c.filler {
                write!(f, " -> {filler}")?;
            }
            writeln!(f)?;
        }
        match &self.result {
            Ok(a) => writeln!(f, "answer: {}", a.machine_line()),
            Err(e) => writeln!(f, "error: {e}"),
        }
    }
}

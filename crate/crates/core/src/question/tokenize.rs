use super::{QuestionError, Token};

/// Splits a question into lower-cased word tokens ending with a single `?`.
///
/// Commas and other sentence punctuation are dropped, `'s` becomes its own token and
/// `n't` contractions expand to `not`.
pub fn tokenize(text: &str) -> Result<Vec<Token>, QuestionError> {
    let mut tokens = Vec::new();
    for raw in text.split_whitespace() {
        let mut word: &str = raw;
        let mut trailing_question = false;
        loop {
            let trimmed = word.trim_end_matches(['?', '.', '!', ',', ';', ':', '"']);
            if trimmed.len() == word.len() {
                break;
            }
            if word[trimmed.len()..].contains('?') {
                trailing_question = true;
            }
            word = trimmed;
        }
        let word = word.trim_start_matches(['"', '(', '\'']);
        if !word.is_empty() {
            push_word(&mut tokens, word);
        }
        if trailing_question {
            tokens.push(Token::new("?", false));
        }
    }
    if !tokens.iter().any(|t| t.text != "?") {
        return Err(QuestionError::EmptyInput);
    }
    // a single terminal `?`; interior ones stay and are rejected by the parser
    while tokens.last().is_some_and(|t| t.text == "?") {
        tokens.pop();
    }
    tokens.push(Token::new("?", false));
    Ok(tokens)
}

fn push_word(tokens: &mut Vec<Token>, word: &str) {
    let capitalized = word.chars().next().is_some_and(char::is_uppercase);
    let lower = word.to_lowercase().replace('\u{2019}', "'");
    if let Some(stem) = lower.strip_suffix("n't") {
        let aux = match stem {
            "wo" => "will",
            "ca" => "can",
            "sha" => "shall",
            other => other,
        };
        tokens.push(Token::new(aux, capitalized));
        tokens.push(Token::new("not", false));
        return;
    }
    if let Some(stem) = lower.strip_suffix("'s") {
        if !stem.is_empty() {
            tokens.push(Token::new(stem, capitalized));
            tokens.push(Token::new("'s", false));
            return;
        }
    }
    tokens.push(Token::new(&lower, capitalized));
}

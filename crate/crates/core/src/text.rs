//! Text normalization shared by identification and slot matching.

/// Determiners dropped from the front of a phrase before comparison.
const LEADING_DETERMINERS: &[&str] = &[
    "a", "an", "the", "his", "her", "its", "their", "my", "your", "our", "this", "that", "these", "those",
];

/// Case-folds and collapses internal whitespace.
pub fn fold(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for word in text.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.extend(word.chars().flat_map(char::to_lowercase));
    }
    out
}

/// Like [`fold`], then strips one leading determiner ("the man" and "man" compare equal).
pub fn fold_phrase(text: &str) -> String {
    let folded = fold(text);
    if let Some((head, rest)) = folded.split_once(' ') {
        if LEADING_DETERMINERS.contains(&head) {
            return rest.to_string();
        }
    }
    folded
}

/// Case-insensitive equality.
pub fn same_text(a: &str, b: &str) -> bool {
    fold(a) == fold(b)
}

/// Case-insensitive equality that ignores a leading determiner.
pub fn same_phrase(a: &str, b: &str) -> bool {
    fold_phrase(a) == fold_phrase(b)
}

/// House and apartment numbers: leading zeros of a numeric string are insignificant.
pub fn same_number_text(a: &str, b: &str) -> bool {
    fn strip(s: &str) -> String {
        let folded = fold(s);
        if !folded.is_empty() && folded.chars().all(|c| c.is_ascii_digit()) {
            let trimmed = folded.trim_start_matches('0');
            if trimmed.is_empty() {
                "0".to_string()
            } else {
                trimmed.to_string()
            }
        } else {
            folded
        }
    }
    strip(a) == strip(b)
}

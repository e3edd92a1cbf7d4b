//! Total parser for tagged responses.

use super::vocab::{TokenId, ANSWER_CLOSE, ANSWER_OPEN, CLASS_FAKE, CLASS_REAL, THINK_CLOSE, THINK_OPEN};

/// Parsed answer token; malformation is a value, never an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Real,
    Fake,
    Unparsable,
}

impl Answer {
    pub fn matches(self, label: super::vocab::Label) -> bool {
        matches!(
            (self, label),
            (Answer::Real, super::vocab::Label::Real) | (Answer::Fake, super::vocab::Label::Fake)
        )
    }
}

/// Extract the think span and the answer from a token sequence.
///
/// The think span is everything strictly between the first `<think>` and the
/// first `</think>` after it (first-open/first-close, no nesting). The answer
/// is valid only when exactly one class token sits between the first
/// `<answer>` and the first `</answer>` after it.
pub fn parse_tagged_response(tokens: &[TokenId]) -> (Vec<TokenId>, Answer) {
    let think = match find(tokens, THINK_OPEN, 0) {
        Some(open) => match find(tokens, THINK_CLOSE, open + 1) {
            Some(close) => tokens[open + 1..close].to_vec(),
            None => Vec::new(),
        },
        None => Vec::new(),
    };

    let answer = match find(tokens, ANSWER_OPEN, 0) {
        Some(open) => match find(tokens, ANSWER_CLOSE, open + 1) {
            Some(close) if close == open + 2 => match tokens[open + 1] {
                CLASS_REAL => Answer::Real,
                CLASS_FAKE => Answer::Fake,
                _ => Answer::Unparsable,
            },
            _ => Answer::Unparsable,
        },
        None => Answer::Unparsable,
    };

    (think, answer)
}

fn find(tokens: &[TokenId], needle: TokenId, from: usize) -> Option<usize> {
    tokens[from..].iter().position(|t| *t == needle).map(|p| p + from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::vocab::{ANSWER_CLOSE as AC, ANSWER_OPEN as AO, CLASS_FAKE as F, CLASS_REAL as R, THINK_CLOSE as TC, THINK_OPEN as TO};

    #[test]
    fn well_formed_response() {
        let (think, answer) = parse_tagged_response(&[TO, 30, 31, TC, AO, F, AC]);
        assert_eq!(think, vec![30, 31]);
        assert_eq!(answer, Answer::Fake);
    }

    #[test]
    fn missing_close_tag_is_unparsable() {
        let (think, answer) = parse_tagged_response(&[TO, 30]);
        assert!(think.is_empty());
        assert_eq!(answer, Answer::Unparsable);
    }

    #[test]
    fn nested_think_uses_first_open_first_close() {
        let (think, answer) = parse_tagged_response(&[TO, TO, 30, TC, TC, AO, R, AC]);
        assert_eq!(think, vec![TO, 30]);
        assert_eq!(answer, Answer::Real);
    }

    #[test]
    fn answer_must_be_a_single_class_token() {
        let (_, answer) = parse_tagged_response(&[TO, TC, AO, R, F, AC]);
        assert_eq!(answer, Answer::Unparsable);
        let (_, answer) = parse_tagged_response(&[TO, TC, AO, AC]);
        assert_eq!(answer, Answer::Unparsable);
        let (_, answer) = parse_tagged_response(&[TO, TC, AO, 30, AC]);
        assert_eq!(answer, Answer::Unparsable);
    }

    #[test]
    fn empty_input_is_total() {
        let (think, answer) = parse_tagged_response(&[]);
        assert!(think.is_empty());
        assert_eq!(answer, Answer::Unparsable);
    }
}

//! Weight tables: one `LABEL NUMBER` pair per line.
//!
//! ```text
//! # edge weights
//! 1 3
//! 2 4.5
//! "a b" 1
//! * 10        # default for labels not listed
//! ```
//!
//! Labels follow the expression syntax (bare words or quoted strings).
//! Blank lines and `#` comments are ignored.

use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("WeightError: line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("WeightError: no weight for label {0:?} and no default")]
    Missing(String),
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct WeightTable {
    pub weights: BTreeMap<String, f64>,
    pub default: Option<f64>,
}

impl WeightTable {
    pub fn parse(text: &str) -> Result<Self, WeightError> {
        let mut table = WeightTable::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let bad = |message: String| WeightError::Malformed { line, message };
            let content = strip_comment(raw).trim();
            if content.is_empty() {
                continue;
            }
            let (key, rest) = split_key(content).map_err(bad)?;
            let value = rest.trim();
            let weight: f64 = value
                .parse()
                .map_err(|_| bad(format!("{value:?} is not a number")))?;
            if weight.is_nan() {
                return Err(bad("NaN is not a weight".into()));
            }
            match key {
                Key::Default => {
                    if table.default.replace(weight).is_some() {
                        return Err(bad("default declared twice".into()));
                    }
                }
                Key::Label(label) => {
                    if table.weights.insert(label.clone(), weight).is_some() {
                        return Err(bad(format!("label {label:?} listed twice")));
                    }
                }
            }
        }
        Ok(table)
    }

    pub fn get(&self, label: &str) -> Result<f64, WeightError> {
        self.weights
            .get(label)
            .copied()
            .or(self.default)
            .ok_or_else(|| WeightError::Missing(label.to_string()))
    }
}

enum Key {
    Default,
    Label(String),
}

fn strip_comment(line: &str) -> &str {
    // a '#' inside a quoted label is not a comment
    let mut quoted = false;
    let mut escaped = false;
    for (i, c) in line.char_indices() {
        match c {
            _ if escaped => escaped = false,
            '\\' if quoted => escaped = true,
            '"' => quoted = !quoted,
            '#' if !quoted => return &line[..i],
            _ => {}
        }
    }
    line
}

fn split_key(content: &str) -> Result<(Key, &str), String> {
    if let Some(body) = content.strip_prefix('"') {
        let mut label = String::new();
        let mut chars = body.char_indices();
        while let Some((i, c)) = chars.next() {
            match c {
                '"' => {
                    if label.is_empty() {
                        return Err("empty label".into());
                    }
                    return Ok((Key::Label(label), &body[i + 1..]));
                }
                '\\' => match chars.next() {
                    Some((_, e @ ('"' | '\\'))) => label.push(e),
                    _ => return Err("bad escape in quoted label".into()),
                },
                c => label.push(c),
            }
        }
        return Err("unterminated quoted label".into());
    }
    let end = content.find(char::is_whitespace).unwrap_or(content.len());
    let word = &content[..end];
    if word == "*" {
        return Ok((Key::Default, &content[end..]));
    }
    if !word.chars().all(|c| c.is_alphanumeric() || c == '_') {
        return Err(format!("{word:?} is not a label"));
    }
    Ok((Key::Label(word.to_string()), &content[end..]))
}

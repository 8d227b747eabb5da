use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Longest accepted name label.
pub const MAX_NAME_LEN: usize = 32;

/// An element of a finite ground set.
///
/// Integers sort before names, names before fresh labels. Fresh labels
/// (`*k`) are the adjoined symbols used by the Steinmann arrows and the
/// exponential series; they serialize as the string `"*k"`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Int(u32),
    Name(Arc<str>),
    Fresh(u32),
}

impl Label {
    pub fn name(s: &str) -> Result<Label> {
        if s.is_empty() || s.chars().count() > MAX_NAME_LEN {
            return Err(Error::Parse(format!("label name {s:?} has bad length")));
        }
        if s.starts_with('*') || s.chars().any(|c| c.is_whitespace() || c.is_control()) {
            return Err(Error::Parse(format!("label name {s:?} is not allowed")));
        }
        Ok(Label::Name(Arc::from(s)))
    }

    pub fn is_fresh(&self) -> bool {
        matches!(self, Label::Fresh(_))
    }

    fn is_single_char(&self) -> bool {
        match self {
            Label::Int(v) => *v < 10,
            Label::Name(s) => s.chars().count() == 1 && !s.starts_with(|c: char| c.is_ascii_digit()),
            Label::Fresh(_) => true,
        }
    }

    pub(crate) fn compact(labels: &[Label]) -> bool {
        labels.iter().all(Label::is_single_char)
    }
}

impl From<u32> for Label {
    fn from(v: u32) -> Self {
        Label::Int(v)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(v) => write!(f, "{v}"),
            Label::Name(s) => write!(f, "{s}"),
            Label::Fresh(k) => write!(f, "*{k}"),
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses one label token: digits are integers, `*k` is fresh, anything else
/// a name.
impl FromStr for Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Label> {
        if let Some(rest) = s.strip_prefix('*') {
            return rest
                .parse::<u32>()
                .map(Label::Fresh)
                .map_err(|_| Error::Parse(format!("bad fresh label {s:?}")));
        }
        if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) {
            return s
                .parse::<u32>()
                .map(Label::Int)
                .map_err(|_| Error::Parse(format!("integer label {s:?} out of range")));
        }
        Label::name(s)
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Label::Int(v) => s.serialize_u32(*v),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Label, D::Error> {
        struct LabelVisitor;
        impl Visitor<'_> for LabelVisitor {
            type Value = Label;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a nonnegative integer or a short string label")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Label, E> {
                u32::try_from(v)
                    .map(Label::Int)
                    .map_err(|_| E::custom("integer label out of range"))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Label, E> {
                u32::try_from(v)
                    .map(Label::Int)
                    .map_err(|_| E::custom("integer label out of range"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Label, E> {
                if let Some(rest) = v.strip_prefix('*') {
                    return rest
                        .parse::<u32>()
                        .map(Label::Fresh)
                        .map_err(|_| E::custom("bad fresh label"));
                }
                Label::name(v).map_err(E::custom)
            }
        }
        d.deserialize_any(LabelVisitor)
    }
}

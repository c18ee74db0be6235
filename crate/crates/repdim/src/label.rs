//! Summand labels and their textual grammar:
//! `U[i] | X | A[i,j] | DA[i,j] | P | Lambda` (P is an alias for A[n,0]).

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// Label of a named indecomposable summand. The derived order (A < DA < U <
/// X < Lambda, then indices) is the canonical listing order everywhere.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Label {
    A(u32, u32),
    DA(u32, u32),
    U(u32),
    X,
    /// The regular module of Λ_n (only used in the self-injective runs).
    Lambda,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::A(i, j) => write!(f, "A[{i},{j}]"),
            Label::DA(i, j) => write!(f, "DA[{i},{j}]"),
            Label::U(i) => write!(f, "U[{i}]"),
            Label::X => write!(f, "X"),
            Label::Lambda => write!(f, "Lambda"),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A parsed label expression; `P` needs the ambient n to resolve.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LabelExpr {
    Concrete(Label),
    Projective,
}

impl LabelExpr {
    pub fn parse(s: &str) -> Result<LabelExpr, Error> {
        let s = s.trim();
        let fail = || Error::LabelParse(s.to_string());
        if s == "X" {
            return Ok(LabelExpr::Concrete(Label::X));
        }
        if s == "P" {
            return Ok(LabelExpr::Projective);
        }
        if s == "Lambda" {
            return Ok(LabelExpr::Concrete(Label::Lambda));
        }
        let (head, rest) = match s.find('[') {
            Some(p) => (&s[..p], &s[p..]),
            None => return Err(fail()),
        };
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(fail)?;
        let parse_u32 = |t: &str| t.trim().parse::<u32>().map_err(|_| fail());
        match head {
            "U" => Ok(LabelExpr::Concrete(Label::U(parse_u32(inner)?))),
            "A" | "DA" => {
                let mut parts = inner.splitn(2, ',');
                let i = parse_u32(parts.next().ok_or_else(fail)?)?;
                let j = parse_u32(parts.next().ok_or_else(fail)?)?;
                if head == "A" {
                    Ok(LabelExpr::Concrete(Label::A(i, j)))
                } else {
                    Ok(LabelExpr::Concrete(Label::DA(i, j)))
                }
            }
            _ => Err(fail()),
        }
    }

    pub fn resolve(&self, n: u32) -> Label {
        match self {
            LabelExpr::Concrete(l) => *l,
            LabelExpr::Projective => Label::A(n, 0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_render_roundtrip() {
        for s in ["U[3]", "X", "A[1,2]", "DA[0,4]", "Lambda"] {
            let e = LabelExpr::parse(s).unwrap();
            let l = e.resolve(7);
            assert_eq!(l.to_string(), s);
        }
        assert_eq!(LabelExpr::parse("P").unwrap().resolve(3), Label::A(3, 0));
        assert_eq!(
            LabelExpr::parse(" DA[1, 2] ").unwrap().resolve(0),
            Label::DA(1, 2)
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["B[1]", "U", "A[1]", "DA[1,2,3]", "U[x]", "", "A[1,2] extra"] {
            assert!(LabelExpr::parse(s).is_err(), "should reject {s:?}");
        }
    }

    #[test]
    fn canonical_order() {
        let mut labels = vec![
            Label::X,
            Label::U(0),
            Label::DA(0, 0),
            Label::A(0, 0),
            Label::U(1),
        ];
        labels.sort();
        assert_eq!(
            labels,
            vec![
                Label::A(0, 0),
                Label::DA(0, 0),
                Label::U(0),
                Label::U(1),
                Label::X
            ]
        );
    }
}

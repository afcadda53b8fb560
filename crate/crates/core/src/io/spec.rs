use std::fmt;
use std::path::PathBuf;

use super::{cycles::group_from_text, LoadError, ParseError};
use crate::group::{direct_product_with, make_family_with, ClosureConfig, Family, Group};

/// A construction plan for a group.
///
/// Grammar (whitespace between tokens is ignored):
///
/// ```text
/// spec   := term ('x' spec)?
/// term   := 'S' n | 'A' n | 'C' n | 'D' n | 'Dic' n | 'T' | '@' path | '(' spec ')'
/// ```
///
/// `D<n>` is dihedral of order `n`, `Dic<n>` dicyclic of order `4n`, `T`
/// is `Dic3`. A path runs to the end of the input or to the next `)`.
/// Products associate to the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Family(Family),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    File(PathBuf),
}

impl GroupSpec {
    pub fn product(a: GroupSpec, b: GroupSpec) -> GroupSpec {
        GroupSpec::Product(Box::new(a), Box::new(b))
    }

    /// The order, when it is known without reading files.
    pub fn order_hint(&self) -> Option<usize> {
        match self {
            GroupSpec::Family(f) => f.order(),
            GroupSpec::Product(a, b) => a.order_hint()?.checked_mul(b.order_hint()?),
            GroupSpec::File(_) => None,
        }
    }

    pub fn build(&self) -> Result<Group, LoadError> {
        self.build_with(&ClosureConfig::from_env())
    }

    pub fn build_with(&self, config: &ClosureConfig) -> Result<Group, LoadError> {
        match self {
            GroupSpec::Family(f) => Ok(make_family_with(f, config)?),
            GroupSpec::Product(a, b) => {
                let (ga, gb) = (a.build_with(config)?, b.build_with(config)?);
                let name = match **a {
                    GroupSpec::Product(..) => format!("({})x{}", ga.name(), gb.name()),
                    _ => format!("{}x{}", ga.name(), gb.name()),
                };
                Ok(direct_product_with(&ga, &gb, config)?.with_name(name))
            }
            GroupSpec::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
                    path: path.clone(),
                    source,
                })?;
                group_from_text(&text, path, config)
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Family(fam) => write!(f, "{fam}"),
            GroupSpec::File(path) => write!(f, "@{}", path.display()),
            GroupSpec::Product(a, b) => {
                match **a {
                    GroupSpec::Family(_) => write!(f, "{a}")?,
                    _ => write!(f, "({a})")?,
                }
                write!(f, "x{b}")
            }
        }
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_group_spec(s)
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn spec(&mut self) -> Result<GroupSpec, ParseError> {
        let left = self.term()?;
        self.skip_ws();
        if self.peek() == Some(b'x') {
            self.pos += 1;
            let right = self.spec()?;
            return Ok(GroupSpec::product(left, right));
        }
        Ok(left)
    }

    fn number(&mut self) -> Result<(usize, usize), ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::new(start, "expected a number"));
        }
        let n = self.text[start..self.pos]
            .parse()
            .map_err(|_| ParseError::new(start, "number out of range"))?;
        Ok((start, n))
    }

    fn family(&mut self, make: fn(usize) -> Family) -> Result<GroupSpec, ParseError> {
        let (start, n) = self.number()?;
        let family = make(n);
        family
            .validate()
            .map_err(|e| ParseError::new(start, e.to_string()))?;
        Ok(GroupSpec::Family(family))
    }

    fn term(&mut self) -> Result<GroupSpec, ParseError> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        if rest.starts_with("Dic") {
            self.pos += 3;
            return self.family(Family::Dicyclic);
        }
        let Some(c) = self.peek() else {
            return Err(ParseError::new(
                self.pos,
                "expected a group (S, A, C, D, Dic, T, @path or '(')",
            ));
        };
        match c {
            b'S' | b'A' | b'C' | b'D' => {
                self.pos += 1;
                self.family(match c {
                    b'S' => Family::Symmetric,
                    b'A' => Family::Alternating,
                    b'C' => Family::Cyclic,
                    _ => Family::Dihedral,
                })
            }
            b'T' => {
                self.pos += 1;
                Ok(GroupSpec::Family(Family::Dicyclic(3)))
            }
            b'@' => {
                self.pos += 1;
                let start = self.pos;
                let end = rest.find(')').map_or(self.text.len(), |k| start - 1 + k);
                if end == start {
                    return Err(ParseError::new(start, "expected a path"));
                }
                self.pos = end;
                Ok(GroupSpec::File(PathBuf::from(&self.text[start..end])))
            }
            b'(' => {
                self.pos += 1;
                let inner = self.spec()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(ParseError::new(self.pos, "expected ')' or 'x'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(ParseError::new(
                self.pos,
                "expected a group (S, A, C, D, Dic, T, @path or '(')",
            )),
        }
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut p = Parser { text, pos: 0 };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(ParseError::new(p.pos, "expected 'x' or end of input"));
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(f: Family) -> GroupSpec {
        GroupSpec::Family(f)
    }

    #[test]
    fn families() {
        assert_eq!(parse_group_spec("D12").unwrap(), fam(Family::Dihedral(12)));
        assert_eq!(parse_group_spec("T").unwrap(), fam(Family::Dicyclic(3)));
        assert_eq!(parse_group_spec("Dic5").unwrap(), fam(Family::Dicyclic(5)));
        assert_eq!(
            parse_group_spec(" A4 ").unwrap(),
            fam(Family::Alternating(4))
        );
        assert_eq!(parse_group_spec("T").unwrap().order_hint(), Some(12));
    }

    #[test]
    fn products() {
        let s = parse_group_spec("S3xC2").unwrap();
        assert_eq!(
            s,
            GroupSpec::product(fam(Family::Symmetric(3)), fam(Family::Cyclic(2)))
        );
        assert_eq!(s.order_hint(), Some(12));
        assert_eq!(s.build_with(&ClosureConfig::default()).unwrap().order(), 12);
        let nested = parse_group_spec("(S3xC2)xC3").unwrap();
        assert_eq!(nested.to_string(), "(S3xC2)xC3");
        assert_eq!(
            nested.build_with(&ClosureConfig::default()).unwrap().name(),
            "(S3xC2)xC3"
        );
        assert_eq!(
            parse_group_spec("S3xC2xC3").unwrap().to_string(),
            "S3xC2xC3"
        );
    }

    #[test]
    fn files() {
        let s = parse_group_spec("(@dir/g x.txt)xC2").unwrap();
        assert_eq!(
            s,
            GroupSpec::product(
                GroupSpec::File("dir/g x.txt".into()),
                fam(Family::Cyclic(2))
            )
        );
        assert_eq!(parse_group_spec(&s.to_string()).unwrap(), s);
        assert_eq!(
            parse_group_spec("C2x@a.txt").unwrap().to_string(),
            "C2x@a.txt"
        );
        assert_eq!(s.order_hint(), None);
    }

    #[test]
    fn errors() {
        for (text, pos) in [
            ("", 0),
            ("D7", 1),
            ("Q8", 0),
            ("S", 1),
            ("S3x", 3),
            ("(S3", 3),
            ("S3)", 2),
            ("@", 1),
            ("Dic1", 3),
            ("S3 C2", 3),
        ] {
            let e = parse_group_spec(text).unwrap_err();
            assert_eq!(e.position, pos, "{text}: {e}");
        }
    }
}

use std::path::{Path, PathBuf};

use super::{LoadError, ParseError};
use crate::group::{ClosureConfig, Group};
use crate::perm::Permutation;

/// Parses disjoint-cycle notation such as `(1,2,3)(4,5)`. `()` is the
/// identity; whitespace between tokens is ignored.
pub fn parse_cycles(line: &str) -> Result<Permutation, ParseError> {
    let bytes = line.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(ParseError::new(pos, "expected '('"));
    }
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(ParseError::new(pos, "expected '('"));
        }
        pos += 1;
        skip_ws(&mut pos);
        let mut cycle = Vec::new();
        if pos < bytes.len() && bytes[pos] == b')' {
            pos += 1;
        } else {
            loop {
                skip_ws(&mut pos);
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(ParseError::new(pos, "expected a point"));
                }
                let point: usize = line[start..pos]
                    .parse()
                    .map_err(|_| ParseError::new(start, "point out of range"))?;
                if point == 0 {
                    return Err(ParseError::new(start, "points are numbered from 1"));
                }
                if !seen.insert(point) {
                    return Err(ParseError::new(start, format!("point {point} repeated")));
                }
                cycle.push(point);
                skip_ws(&mut pos);
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b')') => {
                        pos += 1;
                        break;
                    }
                    _ => return Err(ParseError::new(pos, "expected ',' or ')'")),
                }
            }
        }
        cycles.push(cycle);
        skip_ws(&mut pos);
    }
    Ok(Permutation::from_cycles(&cycles).expect("cycles are disjoint and 1-based"))
}

/// Parsed contents of a generator file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFile {
    /// From a `# name: ...` comment, if present.
    pub name: Option<String>,
    pub generators: Vec<Permutation>,
}

/// One permutation per line in cycle notation; `#` starts a comment and
/// blank lines are skipped. Errors carry the 1-based line number.
pub fn parse_generator_text(text: &str) -> Result<GeneratorFile, (usize, ParseError)> {
    let mut name = None;
    let mut generators = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let (body, comment) = match raw.find('#') {
            Some(k) => (&raw[..k], Some(&raw[k + 1..])),
            None => (raw, None),
        };
        if let Some(rest) = comment.and_then(|c| c.trim().strip_prefix("name:")) {
            name.get_or_insert_with(|| rest.trim().to_string());
        }
        if body.trim().is_empty() {
            continue;
        }
        generators.push(parse_cycles(body).map_err(|e| (i + 1, e))?);
    }
    Ok(GeneratorFile { name, generators })
}

/// Reads a generator file and builds the group. The group is named by the
/// file's `# name:` comment, else by the file stem.
pub fn read_generator_file(path: &Path, config: &ClosureConfig) -> Result<Group, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    group_from_text(&text, path, config)
}

pub(crate) fn group_from_text(
    text: &str,
    path: &Path,
    config: &ClosureConfig,
) -> Result<Group, LoadError> {
    let file = parse_generator_text(text).map_err(|(line, error)| LoadError::GeneratorLine {
        path: PathBuf::from(path),
        line,
        error,
    })?;
    let name = file.name.unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "file".into())
    });
    let mut gens = file.generators;
    if gens.is_empty() {
        // an all-comment file describes the trivial group
        gens.push(Permutation::identity());
    }
    Ok(Group::closure_with(&gens, name, config)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation() {
        let p = parse_cycles("(1,2,3)(4,5)").unwrap();
        assert_eq!([1, 2, 3, 4, 5].map(|i| p.image(i)), [2, 3, 1, 5, 4]);
        assert!(parse_cycles("()").unwrap().is_identity());
        assert!(parse_cycles(" ( 1 , 2 ) ").is_ok());
        assert_eq!(parse_cycles("(1)(2)").unwrap(), Permutation::identity());
    }

    #[test]
    fn cycle_errors() {
        let e = parse_cycles("(1,2)(2,3)").unwrap_err();
        assert_eq!(e.position, 6);
        assert!(e.message.contains("point 2 repeated"));
        assert_eq!(parse_cycles("(1,1)").unwrap_err().position, 3);
        assert!(parse_cycles("").is_err());
        assert!(parse_cycles("(1,2").is_err());
        assert!(parse_cycles("(1,,2)").is_err());
        assert!(parse_cycles("(0,1)").is_err());
        assert!(parse_cycles("1,2)").is_err());
        assert!(parse_cycles("(1,2)x").is_err());
    }

    #[test]
    fn generator_text() {
        let text = "# name: C7:C3\n(1,2,3,4,5,6,7)\n\n(2,3,5)(4,7,6)  # order 3\n";
        let f = parse_generator_text(text).unwrap();
        assert_eq!(f.name.as_deref(), Some("C7:C3"));
        assert_eq!(f.generators.len(), 2);
        let (line, _) = parse_generator_text("(1,2)\n(1,2\n").unwrap_err();
        assert_eq!(line, 2);
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s3.txt");
        std::fs::write(&path, "(1,2)\n(1,2,3)\n").unwrap();
        let g = read_generator_file(&path, &ClosureConfig::default()).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.name(), "s3");
        assert!(matches!(
            read_generator_file(&dir.path().join("missing"), &ClosureConfig::default()),
            Err(LoadError::Io { .. })
        ));
    }
}

//! Line-based group spec format.
//!
//! ```text
//! group zn 2
//! weights: 0 1; 1 0
//! threshold: (0,1) closed
//! window: -5..5 x -5..5
//! ```
//!
//! `group lexprod <k>` and `group odot F=(..) [closed|open] alpha=(..)`
//! take the spec on the following lines as their second factor.

use super::spec::{FinalSegmentSpec, GroupOrderSpec, Window};
use super::weight::WeightOrderSpec;
use super::GroupError;

#[derive(Debug, Clone)]
pub struct ParsedGroup {
    pub spec: GroupOrderSpec,
    pub window: Option<Window>,
}

fn err(line: usize, msg: impl Into<String>) -> GroupError {
    GroupError::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_tuple(s: &str, line: usize) -> Result<Vec<i64>, GroupError> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s);
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| err(line, format!("bad integer `{}`", t.trim())))
        })
        .collect()
}

fn parse_closed(word: Option<&str>, line: usize) -> Result<bool, GroupError> {
    match word {
        None | Some("closed") => Ok(true),
        Some("open") => Ok(false),
        Some(w) => Err(err(line, format!("expected closed or open, got `{w}`"))),
    }
}

pub fn parse_window(s: &str, line: usize) -> Result<Window, GroupError> {
    let bounds = s
        .split('x')
        .map(|part| {
            let (lo, hi) = part
                .trim()
                .split_once("..")
                .ok_or_else(|| err(line, format!("bad range `{}`", part.trim())))?;
            let lo = lo
                .trim()
                .parse::<i64>()
                .map_err(|_| err(line, "bad range bound"))?;
            let hi = hi
                .trim()
                .parse::<i64>()
                .map_err(|_| err(line, "bad range bound"))?;
            Ok((lo, hi))
        })
        .collect::<Result<Vec<_>, GroupError>>()?;
    Window::new(bounds).map_err(|e| err(line, e.to_string()))
}

struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Option<(usize, &'a str)> {
        let r = self.items.get(self.pos).copied();
        self.pos += 1;
        r
    }

    fn peek_key(&self, key: &str) -> Option<(usize, &'a str)> {
        let (no, l) = *self.items.get(self.pos)?;
        l.strip_prefix(key).map(|rest| (no, rest.trim()))
    }
}

pub fn parse_group(text: &str) -> Result<ParsedGroup, GroupError> {
    let items: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut lines = Lines { items, pos: 0 };
    let spec = parse_spec(&mut lines)?;
    let mut window = None;
    if let Some((no, rest)) = lines.peek_key("window:") {
        lines.pos += 1;
        let w = parse_window(rest, no)?;
        spec.check_window(&w).map_err(|e| err(no, e.to_string()))?;
        window = Some(w);
    }
    if let Some((no, l)) = lines.next() {
        return Err(err(no, format!("unexpected line `{l}`")));
    }
    Ok(ParsedGroup { spec, window })
}

fn parse_spec(lines: &mut Lines) -> Result<GroupOrderSpec, GroupError> {
    let (no, head) = lines.next().ok_or_else(|| err(0, "empty group spec"))?;
    let words: Vec<&str> = head.split_whitespace().collect();
    match words.as_slice() {
        ["group", "zn", n] => {
            let n: usize = n.parse().map_err(|_| err(no, "bad dimension"))?;
            let rows = match lines.peek_key("weights:") {
                Some((wno, rest)) => {
                    lines.pos += 1;
                    rest.split(';')
                        .map(|r| {
                            r.split_whitespace()
                                .map(|t| {
                                    t.parse::<i64>()
                                        .map_err(|_| err(wno, format!("bad weight `{t}`")))
                                })
                                .collect::<Result<Vec<_>, _>>()
                        })
                        .collect::<Result<Vec<_>, _>>()?
                }
                None => WeightOrderSpec::natural(n).rows().to_vec(),
            };
            if rows.len() != n {
                return Err(err(
                    no,
                    format!("expected {n} weight rows, got {}", rows.len()),
                ));
            }
            let (tno, rest) = lines
                .peek_key("threshold:")
                .ok_or_else(|| err(no + 1, "missing `threshold:` line"))?;
            lines.pos += 1;
            let (tuple, mode) = match rest.rfind(')') {
                Some(i) => (&rest[..=i], rest[i + 1..].trim()),
                None => {
                    let mut it = rest.splitn(2, char::is_whitespace);
                    (it.next().unwrap_or(""), it.next().unwrap_or("").trim())
                }
            };
            let theta = parse_tuple(tuple, tno)?;
            let closed = parse_closed((!mode.is_empty()).then_some(mode), tno)?;
            GroupOrderSpec::zn(rows, FinalSegmentSpec { theta, closed })
                .map_err(|e| err(tno, e.to_string()))
        }
        ["group", "lexprod", k] => {
            let k: u32 = k.parse().map_err(|_| err(no, "bad factor size"))?;
            if k == 0 {
                return Err(err(no, "factor size must be positive"));
            }
            let outer = parse_spec(lines)?;
            Ok(GroupOrderSpec::lex(GroupOrderSpec::cyclic(k), outer))
        }
        ["group", "odot", rest @ ..] => {
            let mut f = None;
            let mut alpha = None;
            let mut closed = true;
            for w in rest {
                if let Some(v) = w.strip_prefix("F=") {
                    f = Some(parse_tuple(v, no)?);
                } else if let Some(v) = w.strip_prefix("alpha=") {
                    alpha = Some(parse_tuple(v, no)?);
                } else {
                    closed = parse_closed(Some(w), no)?;
                }
            }
            let f = f.ok_or_else(|| err(no, "missing F=(..)"))?;
            let alpha = alpha.ok_or_else(|| err(no, "missing alpha=(..)"))?;
            let g = parse_spec(lines)?;
            let spec = GroupOrderSpec::odot(
                WeightOrderSpec::natural(f.len()),
                FinalSegmentSpec { theta: f, closed },
                g,
            )
            .map_err(|e| err(no, e.to_string()))?;
            if spec.alpha() != Some(alpha.as_slice()) {
                return Err(err(
                    no,
                    "alpha must equal the attained threshold of the second factor",
                ));
            }
            Ok(spec)
        }
        _ => Err(err(
            no,
            format!("expected `group zn|lexprod|odot ...`, got `{head}`"),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_plane_text() {
        let t = "# grid\ngroup zn 2\nweights: 0 1; 1 0\nthreshold: (0,1) closed\nwindow: -5..5 x -5..5\n";
        let g = parse_group(t).unwrap();
        assert!(g.spec.positive(&[-5, 2]));
        assert!(!g.spec.positive(&[-5, 1]));
        assert_eq!(g.window.unwrap().size(), 121);
    }

    #[test]
    fn nested_specs() {
        let t = "group lexprod 2\ngroup zn 1\nthreshold: (2)\nwindow: 0..1 x -4..4";
        let g = parse_group(t).unwrap();
        assert_eq!(g.spec.dim(), 2);
        let t = "group odot F=(1) closed alpha=(1)\ngroup zn 1\nthreshold: (1) closed\n";
        let g = parse_group(t).unwrap();
        assert!(g.spec.positive(&[1, 1]) && !g.spec.positive(&[0, 1]));
    }

    #[test]
    fn errors_carry_lines() {
        let t = "group zn 2\nweights: 1 2; 2 4\nthreshold: (1,0)";
        assert!(matches!(
            parse_group(t),
            Err(GroupError::Parse { line: 3, .. })
        ));
        let t = "group zn 1\nthreshold: (1)\nwindow: 1..3";
        assert!(matches!(
            parse_group(t),
            Err(GroupError::Parse { line: 3, .. })
        ));
        let t = "group odot F=(1) alpha=(2)\ngroup zn 1\nthreshold: (1)";
        assert!(matches!(
            parse_group(t),
            Err(GroupError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_group("group foo"),
            Err(GroupError::Parse { line: 1, .. })
        ));
        let t = "group lexprod 2\ngroup zn 1\nthreshold: (1)\nwindow: -1..1 x 0..0";
        assert!(matches!(
            parse_group(t),
            Err(GroupError::Parse { line: 4, .. })
        ));
    }
}

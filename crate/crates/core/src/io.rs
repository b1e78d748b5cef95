//! Text formats for every object class.
//!
//! | class | example |
//! |---|---|
//! | permutation | `1 1 2 2` |
//! | (k+1)-ary tree | `(1 (2 _ _ _) _ _)`, empty tree `_` |
//! | PORT | `(1 (2) (3))` |
//! | (k+1)-ary path diagram | `a2:1 a1:2 b b c:3 b ; 0,0,3,0,1,1` |
//! | PORT path diagram | `a2 c b b ; 0,0,2,1` |
//!
//! Every `format_*` output parses back to the same object, and parse errors
//! carry a 1-based line and column.

use std::collections::BTreeMap;
use std::fmt;

use crate::bijections::{
    DiagramLetter, KaryLetter, KaryPathDiagram, PathDiagram, PortLetter, PortPathDiagram,
};
use crate::enumerate::{CombinatorialObject, ObjectClass};
use crate::error::{Error, Result};
use crate::perm::KStirlingPermutation;
use crate::tree::{KaryIncreasingTree, PortTree};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

impl Pos {
    fn error(self, message: impl Into<String>) -> Error {
        Error::Parse(ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        })
    }
}

/// Whitespace-separated tokens with their start positions.
fn words(text: &str) -> Vec<(Pos, &str)> {
    let mut out = Vec::new();
    for (l, line) in text.lines().enumerate() {
        let mut start: Option<usize> = None;
        for (b, c) in line.char_indices() {
            if c.is_whitespace() {
                if let Some(s) = start.take() {
                    out.push((column_of(line, s, l), &line[s..b]));
                }
            } else if start.is_none() {
                start = Some(b);
            }
        }
        if let Some(s) = start {
            out.push((column_of(line, s, l), &line[s..]));
        }
    }
    out
}

fn column_of(line: &str, byte: usize, line_idx: usize) -> Pos {
    Pos {
        line: line_idx + 1,
        column: line[..byte].chars().count() + 1,
    }
}

fn end_of(text: &str) -> Pos {
    let line = text.lines().count().max(1);
    let last = text.lines().last().unwrap_or("");
    Pos {
        line,
        column: last.chars().count() + 1,
    }
}

pub fn parse_permutation(text: &str, k: usize) -> Result<KStirlingPermutation> {
    let mut word = Vec::new();
    for (pos, tok) in words(text) {
        let x = tok
            .parse::<u32>()
            .map_err(|_| pos.error(format!("expected a positive integer, found `{tok}`")))?;
        word.push(x);
    }
    KStirlingPermutation::new(word, k)
}

pub fn format_permutation(sigma: &KStirlingPermutation) -> String {
    sigma.to_string()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TreeToken {
    Open,
    Close,
    Vacant,
    Label(u32),
}

fn tree_tokens(text: &str) -> Result<Vec<(Pos, TreeToken)>> {
    let mut out = Vec::new();
    for (l, line) in text.lines().enumerate() {
        let mut chars = line.chars().enumerate().peekable();
        while let Some((c, ch)) = chars.next() {
            let pos = Pos {
                line: l + 1,
                column: c + 1,
            };
            match ch {
                '(' => out.push((pos, TreeToken::Open)),
                ')' => out.push((pos, TreeToken::Close)),
                '_' => out.push((pos, TreeToken::Vacant)),
                d if d.is_ascii_digit() => {
                    let mut s = String::from(d);
                    while let Some(&(_, d)) = chars.peek() {
                        if !d.is_ascii_digit() {
                            break;
                        }
                        s.push(d);
                        chars.next();
                    }
                    let v = s
                        .parse::<u32>()
                        .map_err(|_| pos.error(format!("label `{s}` is too large")))?;
                    out.push((pos, TreeToken::Label(v)));
                }
                w if w.is_whitespace() => {}
                other => return Err(pos.error(format!("unexpected character `{other}`"))),
            }
        }
    }
    Ok(out)
}

/// Parses `(label child …)` nestings. `arity` fixes the child count and
/// allows `_`; `None` means any child count and no vacancies. Returns the
/// children of every label, or `None` for a bare `_`.
fn parse_nested(
    text: &str,
    arity: Option<usize>,
) -> Result<Option<BTreeMap<u32, Vec<Option<u32>>>>> {
    let tokens = tree_tokens(text)?;
    let end = end_of(text);
    let Some(&(first_pos, first)) = tokens.first() else {
        return Err(end.error("empty input"));
    };
    if first == TreeToken::Vacant && arity.is_some() {
        if let Some(&(pos, _)) = tokens.get(1) {
            return Err(pos.error("trailing input after empty tree"));
        }
        return Ok(None);
    }

    let mut nodes: BTreeMap<u32, Vec<Option<u32>>> = BTreeMap::new();
    // open frames: (label, position of its `(`, children so far)
    let mut stack: Vec<(u32, Pos, Vec<Option<u32>>)> = Vec::new();
    let mut done = false;
    let mut i = 0;
    while i < tokens.len() {
        let (pos, tok) = tokens[i];
        if done {
            return Err(pos.error("trailing input after tree"));
        }
        match tok {
            TreeToken::Open => {
                let Some(&(lpos, TreeToken::Label(v))) = tokens.get(i + 1) else {
                    return Err(tokens
                        .get(i + 1)
                        .map_or(end, |t| t.0)
                        .error("expected a label after `(`"));
                };
                if nodes.contains_key(&v) || stack.iter().any(|f| f.0 == v) {
                    return Err(lpos.error(format!("label {v} appears twice")));
                }
                if stack.is_empty() && i != 0 {
                    return Err(pos.error("trailing input after tree"));
                }
                stack.push((v, pos, Vec::new()));
                i += 2;
                continue;
            }
            TreeToken::Vacant => {
                if arity.is_none() {
                    return Err(pos.error("`_` is not allowed in a PORT"));
                }
                let Some(top) = stack.last_mut() else {
                    return Err(pos.error("`_` outside of a node"));
                };
                top.2.push(None);
            }
            TreeToken::Label(_) => return Err(pos.error("label must follow `(`")),
            TreeToken::Close => {
                let Some((v, open, children)) = stack.pop() else {
                    return Err(pos.error("unmatched `)`"));
                };
                if let Some(a) = arity {
                    if children.len() != a {
                        return Err(open.error(format!(
                            "node {v} has {} children, expected {a}",
                            children.len()
                        )));
                    }
                }
                nodes.insert(v, children);
                match stack.last_mut() {
                    Some(parent) => parent.2.push(Some(v)),
                    None => done = true,
                }
            }
        }
        i += 1;
    }
    if let Some((_, open, _)) = stack.last() {
        return Err(open.error("unclosed `(`"));
    }
    let n = nodes.len() as u32;
    if let Some(&v) = nodes
        .keys()
        .zip(1..)
        .find(|&(&v, i)| v != i)
        .map(|(v, _)| v)
    {
        return Err(first_pos.error(format!("labels must be exactly 1..={n}; found {v}")));
    }
    Ok(Some(nodes))
}

pub fn parse_kary_tree(text: &str, k: usize) -> Result<KaryIncreasingTree> {
    if k == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    match parse_nested(text, Some(k + 1))? {
        None => KaryIncreasingTree::empty(k),
        Some(nodes) => KaryIncreasingTree::from_slots(k, nodes.into_values().collect()),
    }
}

pub fn parse_port(text: &str) -> Result<PortTree> {
    let nodes = parse_nested(text, None)?.expect("PORT parse never yields an empty tree");
    PortTree::from_children(
        nodes
            .into_values()
            .map(|row| row.into_iter().flatten().collect())
            .collect(),
    )
}

pub fn format_kary_tree(tree: &KaryIncreasingTree) -> String {
    if tree.is_empty() {
        return "_".into();
    }
    nested_string(1, |v| tree.slots(v).to_vec())
}

pub fn format_port(tree: &PortTree) -> String {
    nested_string(1, |v| tree.children(v).iter().map(|&c| Some(c)).collect())
}

fn nested_string(root: u32, children: impl Fn(u32) -> Vec<Option<u32>>) -> String {
    enum Item {
        Node(u32),
        Vacant,
        Close,
    }
    let mut out = String::new();
    let mut stack = vec![Item::Node(root)];
    while let Some(item) = stack.pop() {
        match item {
            Item::Node(v) => {
                out.push('(');
                out.push_str(&v.to_string());
                stack.push(Item::Close);
                for c in children(v).into_iter().rev() {
                    stack.push(c.map_or(Item::Vacant, Item::Node));
                }
            }
            Item::Vacant => out.push_str(" _"),
            Item::Close => out.push(')'),
        }
        // a space before every child
        if let Some(Item::Node(_)) = stack.last() {
            if !out.is_empty() && !out.ends_with(' ') {
                out.push(' ');
            }
        }
    }
    out
}

/// Splits `word ; choices` and parses the comma-separated choices.
type Token<'a> = (Pos, &'a str);

fn split_diagram(text: &str) -> Result<(Vec<Token<'_>>, Vec<u32>)> {
    let toks = words(text);
    let Some(semi) = toks.iter().position(|(_, t)| t.starts_with(';')) else {
        return Err(end_of(text).error("expected `;` between word and possibility sequence"));
    };
    let (semi_pos, semi_tok) = toks[semi];
    let mut rest: Vec<(Pos, &str)> = Vec::new();
    if semi_tok.len() > 1 {
        rest.push((
            Pos {
                column: semi_pos.column + 1,
                ..semi_pos
            },
            &semi_tok[1..],
        ));
    }
    rest.extend_from_slice(&toks[semi + 1..]);
    let mut choices = Vec::new();
    for (pos, tok) in rest {
        let mut col = pos.column;
        for part in tok.split(',') {
            if !part.is_empty() {
                let s = part.parse::<u32>().map_err(|_| {
                    Pos { column: col, ..pos }
                        .error(format!("expected a nonnegative integer, found `{part}`"))
                })?;
                choices.push(s);
            }
            col += part.chars().count() + 1;
        }
    }
    Ok((toks[..semi].to_vec(), choices))
}

fn parse_u32(pos: Pos, s: &str, what: &str) -> Result<u32> {
    s.parse::<u32>()
        .map_err(|_| pos.error(format!("expected {what}, found `{s}`")))
}

pub fn parse_kary_diagram(text: &str) -> Result<KaryPathDiagram> {
    let (word_toks, choices) = split_diagram(text)?;
    let mut word = Vec::with_capacity(word_toks.len());
    for (pos, tok) in word_toks {
        let letter = if tok == "b" {
            KaryLetter::Fall
        } else if let Some(v) = tok.strip_prefix("c:") {
            KaryLetter::Level {
                variant: parse_u32(pos, v, "a variant index")?,
            }
        } else if let Some((up, v)) = tok.strip_prefix('a').and_then(|r| r.split_once(':')) {
            KaryLetter::Rise {
                up: parse_u32(pos, up, "a rise height")?,
                variant: parse_u32(pos, v, "a variant index")?,
            }
        } else {
            return Err(pos.error(format!(
                "unknown letter `{tok}`; expected a<l>:<i>, c:<i> or b"
            )));
        };
        if matches!(
            letter,
            KaryLetter::Level { variant: 0 } | KaryLetter::Rise { variant: 0, .. }
        ) {
            return Err(pos.error("variant indices start at 1"));
        }
        word.push(letter);
    }
    PathDiagram::new(word, choices)
}

pub fn parse_port_diagram(text: &str) -> Result<PortPathDiagram> {
    let (word_toks, choices) = split_diagram(text)?;
    let mut word = Vec::with_capacity(word_toks.len());
    for (pos, tok) in word_toks {
        word.push(match tok {
            "b" => PortLetter::Fall,
            "c" => PortLetter::Level,
            _ => match tok.strip_prefix('a') {
                Some(up) => PortLetter::Rise(parse_u32(pos, up, "a rise height")?),
                None => {
                    return Err(pos.error(format!("unknown letter `{tok}`; expected a<l>, c or b")))
                }
            },
        });
    }
    PathDiagram::new(word, choices)
}

impl fmt::Display for KaryLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KaryLetter::Rise { up, variant } => write!(f, "a{up}:{variant}"),
            KaryLetter::Fall => f.write_str("b"),
            KaryLetter::Level { variant } => write!(f, "c:{variant}"),
        }
    }
}

impl fmt::Display for PortLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PortLetter::Rise(up) => write!(f, "a{up}"),
            PortLetter::Fall => f.write_str("b"),
            PortLetter::Level => f.write_str("c"),
        }
    }
}

impl<L: DiagramLetter + fmt::Display> fmt::Display for PathDiagram<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.word() {
            write!(f, "{l} ")?;
        }
        f.write_str(";")?;
        for (i, s) in self.choices().iter().enumerate() {
            write!(f, "{}{s}", if i == 0 { " " } else { "," })?;
        }
        Ok(())
    }
}

impl fmt::Display for KaryIncreasingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_kary_tree(self))
    }
}

impl fmt::Display for PortTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_port(self))
    }
}

/// Parses one object of `class`. `k` is ignored for PORTs.
pub fn parse_object(class: ObjectClass, text: &str, k: usize) -> Result<CombinatorialObject> {
    Ok(match class {
        ObjectClass::Stirling => CombinatorialObject::Stirling(parse_permutation(text, k)?),
        ObjectClass::Kary => CombinatorialObject::Kary(parse_kary_tree(text, k)?),
        ObjectClass::Port => CombinatorialObject::Port(parse_port(text)?),
    })
}

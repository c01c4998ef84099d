//! Line-oriented bracket-table format:
//!
//! ```text
//! # comment
//! algebra n5_4 dim 5
//! [e5,e4] = e3
//! [e5,e3] = e2
//! [e4,e3] = e1
//! ```
//!
//! Only `[e_i, e_j]` with `i > j` may appear; antisymmetry supplies the rest.
//! A term is `e_k` or `q*e_k` with `q = p` or `p/r`. The first term may carry
//! a leading `-`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::lie::{BracketSpec, LieAlgebra};
use crate::linalg::{parse_rational, Rational};

/// 1-based line and column (in characters).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax { expected: String, found: String },
    Semantic(String),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub span: Span,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.span.line, self.span.col)?;
        match &self.kind {
            ParseErrorKind::Syntax { expected, found } => write!(f, "expected {expected}, found {found}"),
            ParseErrorKind::Semantic(msg) => write!(f, "{msg}"),
        }
    }
}

/// `[e_i, e_j] = Σ coeff·e_k`, terms sorted by `k` with nonzero coefficients.
#[derive(Clone, Debug, Eq)]
pub struct BracketLine {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(Rational, usize)>,
    pub span: Span,
}

impl PartialEq for BracketLine {
    fn eq(&self, other: &Self) -> bool {
        (self.i, self.j, &self.terms) == (other.i, other.j, &other.terms)
    }
}

/// Parsed document in canonical form: lines sorted by `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub brackets: Vec<BracketLine>,
}

impl AlgebraDocument {
    pub fn from_algebra(l: &LieAlgebra) -> Self {
        let brackets = l
            .bracket_table()
            .into_iter()
            .map(|b| BracketLine { i: b.i, j: b.j, terms: b.terms, span: Span::default() })
            .collect();
        AlgebraDocument { name: sanitize_name(l.name().unwrap_or("g")), dim: l.dim(), brackets }
    }

    /// Builds the algebra, checking Jacobi and nilpotency.
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let specs: Vec<BracketSpec> = self
            .brackets
            .iter()
            .map(|b| BracketSpec { i: b.i, j: b.j, terms: b.terms.clone() })
            .collect();
        Ok(LieAlgebra::new(self.dim, &specs)?.with_name(self.name.clone()))
    }
}

/// Turns a catalog name such as `a_1 × n3` into an identifier (`a_1_x_n3`).
pub fn sanitize_name(name: &str) -> String {
    let replaced = name.replace('×', "x");
    let mut out: String = replaced
        .split_whitespace()
        .collect::<Vec<_>>()
        .join("_")
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '_' { c } else { '_' })
        .collect();
    if out.is_empty() || out.starts_with(|c: char| c.is_ascii_digit()) {
        out.insert(0, '_');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Int(String),
    LBracket,
    RBracket,
    Comma,
    Eq,
    Plus,
    Minus,
    Star,
    Slash,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "{w:?}"),
            Tok::Int(i) => write!(f, "{i}"),
            Tok::LBracket => write!(f, "'['"),
            Tok::RBracket => write!(f, "']'"),
            Tok::Comma => write!(f, "','"),
            Tok::Eq => write!(f, "'='"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::End => write!(f, "end of line"),
        }
    }
}

fn lex(line: &str, lineno: usize) -> Result<Vec<(Tok, Span)>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < chars.len() {
        let c = chars[pos];
        let span = Span { line: lineno, col: pos + 1 };
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            pos += 1;
            continue;
        }
        let single = match c {
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            '=' => Some(Tok::Eq),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, span));
            pos += 1;
            continue;
        }
        let start = pos;
        if c.is_ascii_digit() {
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            out.push((Tok::Int(chars[start..pos].iter().collect()), span));
        } else if c.is_ascii_alphabetic() || c == '_' {
            while pos < chars.len() && (chars[pos].is_ascii_alphanumeric() || chars[pos] == '_') {
                pos += 1;
            }
            out.push((Tok::Word(chars[start..pos].iter().collect()), span));
        } else {
            return Err(ParseError {
                span,
                kind: ParseErrorKind::Syntax { expected: "a token".into(), found: format!("{c:?}") },
            });
        }
    }
    out.push((Tok::End, Span { line: lineno, col: chars.len() + 1 }));
    Ok(out)
}

struct Cursor {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Cursor {
    fn peek(&self) -> &(Tok, Span) {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T, ParseError> {
        let (tok, span) = self.peek();
        Err(ParseError {
            span: *span,
            kind: ParseErrorKind::Syntax { expected: expected.into(), found: tok.to_string() },
        })
    }

    fn expect(&mut self, want: Tok, expected: &str) -> Result<Span, ParseError> {
        if self.peek().0 == want {
            Ok(self.next().1)
        } else {
            self.fail(expected)
        }
    }

    fn expect_word(&mut self, word: &str) -> Result<Span, ParseError> {
        match &self.peek().0 {
            Tok::Word(w) if w == word => Ok(self.next().1),
            _ => self.fail(&format!("{word:?}")),
        }
    }

    fn basis(&mut self) -> Result<(usize, Span), ParseError> {
        if let Tok::Word(w) = &self.peek().0 {
            if let Some(digits) = w.strip_prefix('e') {
                if !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit()) {
                    let span = self.peek().1;
                    let k = digits.parse().map_err(|_| semantic(span, "basis index too large"))?;
                    self.next();
                    return Ok((k, span));
                }
            }
        }
        self.fail("basis vector e<k>")
    }

    fn int(&mut self) -> Result<(String, Span), ParseError> {
        match self.peek().clone() {
            (Tok::Int(s), span) => {
                self.next();
                Ok((s, span))
            }
            _ => self.fail("integer"),
        }
    }
}

fn semantic(span: Span, msg: impl Into<String>) -> ParseError {
    ParseError { span, kind: ParseErrorKind::Semantic(msg.into()) }
}

fn parse_header(c: &mut Cursor) -> Result<(String, usize), ParseError> {
    c.expect_word("algebra")?;
    let name = match c.peek().clone() {
        (Tok::Word(w), _) => {
            c.next();
            w
        }
        _ => return c.fail("algebra name"),
    };
    c.expect_word("dim")?;
    let (digits, span) = c.int()?;
    let dim: usize = digits.parse().map_err(|_| semantic(span, "dimension too large"))?;
    if dim == 0 {
        return Err(semantic(span, "dimension must be at least 1"));
    }
    c.expect(Tok::End, "end of line")?;
    Ok((name, dim))
}

/// One term after its sign: `e_k` or `p[/q]*e_k`.
fn parse_term(c: &mut Cursor, dim: usize) -> Result<(Rational, usize), ParseError> {
    let coeff = if matches!(c.peek().0, Tok::Int(_)) {
        let (num, span) = c.int()?;
        let text = if c.peek().0 == Tok::Slash {
            c.next();
            let (den, dspan) = c.int()?;
            if den.bytes().all(|b| b == b'0') {
                return Err(semantic(dspan, "zero denominator"));
            }
            format!("{num}/{den}")
        } else {
            num
        };
        let q = parse_rational(&text).map_err(|e| semantic(span, e.to_string()))?;
        c.expect(Tok::Star, "'*'")?;
        q
    } else {
        Rational::one()
    };
    let (k, span) = c.basis()?;
    if k == 0 || k > dim {
        return Err(semantic(span, format!("index e{k} outside 1..={dim}")));
    }
    Ok((coeff, k))
}

fn parse_bracket_line(c: &mut Cursor, dim: usize) -> Result<BracketLine, ParseError> {
    let span = c.expect(Tok::LBracket, "'[' or end of input")?;
    let (i, ispan) = c.basis()?;
    c.expect(Tok::Comma, "','")?;
    let (j, jspan) = c.basis()?;
    c.expect(Tok::RBracket, "']'")?;
    c.expect(Tok::Eq, "'='")?;
    for (k, s) in [(i, ispan), (j, jspan)] {
        if k == 0 || k > dim {
            return Err(semantic(s, format!("index e{k} outside 1..={dim}")));
        }
    }
    if i <= j {
        return Err(semantic(ispan, format!("bracket [e{i},e{j}] must have i > j")));
    }
    let mut sums: BTreeMap<usize, Rational> = BTreeMap::new();
    let mut sign = Rational::one();
    if c.peek().0 == Tok::Minus {
        c.next();
        sign = -sign;
    }
    loop {
        let (q, k) = parse_term(c, dim)?;
        *sums.entry(k).or_insert_with(Rational::zero) += sign * q;
        match c.peek().0 {
            Tok::Plus => sign = Rational::one(),
            Tok::Minus => sign = -Rational::one(),
            Tok::End => break,
            _ => return c.fail("'+', '-' or end of line"),
        }
        c.next();
    }
    let terms = sums.into_iter().filter(|(_, q)| !q.is_zero()).map(|(k, q)| (q, k)).collect();
    Ok(BracketLine { i, j, terms, span })
}

/// Parses a document. Accepts LF or CRLF line endings.
pub fn parse(text: &str) -> Result<AlgebraDocument, ParseError> {
    let mut header: Option<(String, usize)> = None;
    let mut lines: Vec<BracketLine> = Vec::new();
    let mut last_line = 0;
    for (n, raw) in text.split('\n').enumerate() {
        let lineno = n + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let toks = lex(line, lineno)?;
        if toks.len() == 1 {
            continue;
        }
        last_line = lineno;
        let mut c = Cursor { toks, pos: 0 };
        match &header {
            None => header = Some(parse_header(&mut c)?),
            Some((_, dim)) => {
                let b = parse_bracket_line(&mut c, *dim)?;
                if let Some(prev) = lines.iter().find(|p| (p.i, p.j) == (b.i, b.j)) {
                    return Err(semantic(
                        b.span,
                        format!("duplicate bracket [e{},e{}] (first on line {})", b.i, b.j, prev.span.line),
                    ));
                }
                lines.push(b);
            }
        }
    }
    let Some((name, dim)) = header else {
        return Err(ParseError {
            span: Span { line: last_line.max(1), col: 1 },
            kind: ParseErrorKind::Syntax { expected: "header \"algebra NAME dim N\"".into(), found: "end of input".into() },
        });
    };
    lines.retain(|b| !b.terms.is_empty());
    lines.sort_by_key(|b| (b.i, b.j));
    Ok(AlgebraDocument { name, dim, brackets: lines })
}

fn fmt_coeff(q: &Rational) -> String {
    if q.is_one() {
        String::new()
    } else {
        format!("{q}*")
    }
}

/// Canonical text: lines sorted by `(i, j)`, terms by `k`, single spaces, LF endings.
pub fn emit(doc: &AlgebraDocument) -> String {
    let mut out = format!("algebra {} dim {}\n", doc.name, doc.dim);
    for b in &doc.brackets {
        out.push_str(&format!("[e{},e{}] =", b.i, b.j));
        for (n, (q, k)) in b.terms.iter().enumerate() {
            let neg = q.is_negative();
            let abs = q.abs();
            let op = match (n, neg) {
                (0, false) => " ",
                (0, true) => " -",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            out.push_str(&format!("{op}{}e{k}", fmt_coeff(&abs)));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};

    #[test]
    fn parses_n3() {
        let d = parse("algebra n3 dim 3\n[e3,e2] = e1\n").unwrap();
        assert_eq!(d.name, "n3");
        assert_eq!(d.dim, 3);
        assert_eq!(d.brackets.len(), 1);
        assert_eq!((d.brackets[0].i, d.brackets[0].j), (3, 2));
        assert_eq!(d.brackets[0].terms, vec![(rat(1), 1)]);
        assert_eq!(d.brackets[0].span, Span { line: 2, col: 1 });
    }

    #[test]
    fn abelian_document() {
        let d = parse("algebra z dim 2\n").unwrap();
        assert!(d.brackets.is_empty());
        assert!(d.to_algebra().unwrap().is_abelian());
    }

    #[test]
    fn comments_crlf_and_coefficients() {
        let text = "# header follows\r\nalgebra g dim 4 # trailing\r\n\r\n[e4,e3] = -e2 + 3/6*e1 - 2*e2\r\n";
        let d = parse(text).unwrap();
        assert_eq!(d.brackets[0].terms, vec![(ratio(1, 2), 1), (rat(-3), 2)]);
        assert_eq!(emit(&d), "algebra g dim 4\n[e4,e3] = 1/2*e1 - 3*e2\n");
    }

    #[test]
    fn canonical_sorting_and_cancellation() {
        let d = parse("algebra g dim 3\n[e3,e2] = e1\n[e2,e1] = e3 - e3\n[e3,e1] = -e2\n").unwrap();
        assert_eq!(emit(&d), "algebra g dim 3\n[e3,e1] = -e2\n[e3,e2] = e1\n");
        assert_eq!(parse(&emit(&d)).unwrap(), d);
    }

    fn err_at(text: &str) -> ParseError {
        parse(text).unwrap_err()
    }

    #[test]
    fn semantic_errors() {
        let e = err_at("algebra n3 dim 3\n[e2,e3] = e1\n");
        assert!(matches!(e.kind, ParseErrorKind::Semantic(_)));
        assert_eq!(e.span, Span { line: 2, col: 2 });

        let e = err_at("algebra n3 dim 3\n[e4,e2] = e1\n");
        assert!(matches!(e.kind, ParseErrorKind::Semantic(_)));

        let e = err_at("algebra n3 dim 3\n[e3,e2] = e1\n[e3,e2] = e1\n");
        assert_eq!(e.span.line, 3);
        assert!(e.to_string().contains("duplicate"));

        let e = err_at("algebra n3 dim 3\n[e3,e2] = 1/0*e1\n");
        assert_eq!(e.span, Span { line: 2, col: 13 });

        let e = err_at("algebra n3 dim 0\n");
        assert!(matches!(e.kind, ParseErrorKind::Semantic(_)));
    }

    #[test]
    fn syntax_errors_are_positioned() {
        let e = err_at("algebra n3 dim 3\n[e3 e2] = e1\n");
        assert_eq!(e.span, Span { line: 2, col: 5 });
        assert!(matches!(e.kind, ParseErrorKind::Syntax { .. }));

        let e = err_at("algebra n3 dim 3\n[e3,e2] = e1 +\n");
        assert_eq!(e.span, Span { line: 2, col: 15 });

        let e = err_at("algebra n3\n");
        assert_eq!(e.to_string(), "1:11: expected \"dim\", found end of line");

        let e = err_at("# only a comment\n");
        assert!(e.to_string().contains("header"));

        let e = err_at("algebra n3 dim 3\n[e3,e2] = e1 $\n");
        assert_eq!(e.span, Span { line: 2, col: 14 });
    }

    #[test]
    fn names_are_sanitized() {
        assert_eq!(sanitize_name("a_1 × n3"), "a_1_x_n3");
        assert_eq!(sanitize_name("n5_4"), "n5_4");
        assert_eq!(sanitize_name("3d"), "_3d");
    }
}

//! Declaration-level scanner for Java source.
//!
//! This is not a parser. Comments and literals are blanked out, annotations
//! dropped, and the remaining tokens are grouped into member-level statements
//! by brace depth. Only declarations directly inside a type body are
//! reported; method bodies, initializer blocks and anonymous classes are
//! skipped wholesale.

use super::{is_identifier, NodeKind, SourceNode};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JavaExtraction {
    /// Nodes with file-local ids (`0..nodes.len()`).
    pub nodes: Vec<SourceNode>,
    /// Constructs that looked like declarations but could not be read.
    pub skipped: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    Sym(u8),
    /// A literal; its content is irrelevant.
    Lit,
}

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    tok: Tok<'a>,
    line: u32,
}

const MODIFIERS: &[&str] = &[
    "public",
    "protected",
    "private",
    "static",
    "final",
    "abstract",
    "synchronized",
    "native",
    "transient",
    "volatile",
    "strictfp",
    "default",
    "sealed",
    "non",
];

const PRIMITIVES: &[&str] = &[
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void", "var",
];

const RESERVED: &[&str] = &[
    "abstract",
    "assert",
    "boolean",
    "break",
    "byte",
    "case",
    "catch",
    "char",
    "class",
    "const",
    "continue",
    "default",
    "do",
    "double",
    "else",
    "enum",
    "extends",
    "false",
    "final",
    "finally",
    "float",
    "for",
    "goto",
    "if",
    "implements",
    "import",
    "instanceof",
    "int",
    "interface",
    "long",
    "native",
    "new",
    "null",
    "package",
    "private",
    "protected",
    "public",
    "return",
    "short",
    "static",
    "strictfp",
    "super",
    "switch",
    "synchronized",
    "this",
    "throw",
    "throws",
    "transient",
    "true",
    "try",
    "void",
    "volatile",
    "while",
];

fn is_modifier(word: &str) -> bool {
    MODIFIERS.contains(&word)
}

fn is_reserved(word: &str) -> bool {
    RESERVED.contains(&word)
}

/// A token that can end a type: `String`, `int`, `]` of `int[]`, `>` of `List<T>`.
fn is_type_end(tok: Tok<'_>) -> bool {
    match tok {
        Tok::Ident(w) => PRIMITIVES.contains(&w) || (!is_reserved(w) && !is_modifier(w)),
        Tok::Sym(b']') | Tok::Sym(b'>') => true,
        _ => false,
    }
}

fn is_ident_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_' || b == b'$' || b >= 0x80
}

fn lex(text: &str) -> Vec<Token<'_>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut line = 1u32;
    let mut i = 0;
    // Index after the closing quote; unterminated literals stop at the line end.
    let skip_quoted = |mut i: usize, quote: u8| -> usize {
        while i < bytes.len() {
            match bytes[i] {
                b'\\' if bytes.get(i + 1) != Some(&b'\n') => i += 2,
                b'\n' => return i,
                b if b == quote => return i + 1,
                _ => i += 1,
            }
        }
        i
    };
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b'\n' => {
                line += 1;
                i += 1;
            }
            _ if b.is_ascii_whitespace() => i += 1,
            b'/' if bytes.get(i + 1) == Some(&b'/') => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'/' if bytes.get(i + 1) == Some(&b'*') => {
                i += 2;
                while i < bytes.len() && !(bytes[i] == b'*' && bytes.get(i + 1) == Some(&b'/')) {
                    if bytes[i] == b'\n' {
                        line += 1;
                    }
                    i += 1;
                }
                i = (i + 2).min(bytes.len());
            }
            b'"' if bytes[i..].starts_with(b"\"\"\"") => {
                let start_line = line;
                i += 3;
                while i < bytes.len() && !bytes[i..].starts_with(b"\"\"\"") {
                    if bytes[i] == b'\\' && bytes.get(i + 1).is_some_and(|&c| c != b'\n') {
                        i += 1;
                    } else if bytes[i] == b'\n' {
                        line += 1;
                    }
                    i += 1;
                }
                i = (i + 3).min(bytes.len());
                out.push(Token {
                    tok: Tok::Lit,
                    line: start_line,
                });
            }
            b'"' | b'\'' => {
                out.push(Token {
                    tok: Tok::Lit,
                    line,
                });
                i = skip_quoted(i + 1, b);
            }
            _ if b.is_ascii_digit() => {
                let hex = bytes[i..].starts_with(b"0x") || bytes[i..].starts_with(b"0X");
                i += 1;
                while i < bytes.len() {
                    let c = bytes[i];
                    let exponent_sign = (c == b'+' || c == b'-')
                        && matches!(bytes[i - 1], b'e' | b'E' | b'p' | b'P')
                        && (!hex || matches!(bytes[i - 1], b'p' | b'P'));
                    if c.is_ascii_alphanumeric() || c == b'_' || c == b'.' || exponent_sign {
                        i += 1;
                    } else {
                        break;
                    }
                }
                out.push(Token {
                    tok: Tok::Lit,
                    line,
                });
            }
            _ if is_ident_byte(b) => {
                let start = i;
                while i < bytes.len() && is_ident_byte(bytes[i]) {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(&text[start..i]),
                    line,
                });
            }
            _ => {
                out.push(Token {
                    tok: Tok::Sym(b),
                    line,
                });
                i += 1;
            }
        }
    }
    out
}

/// Drops annotations (`@Name`, `@a.b.Name(...)`), keeping `@interface` as `interface`.
fn strip_annotations(tokens: Vec<Token<'_>>) -> Vec<Token<'_>> {
    let mut out = Vec::with_capacity(tokens.len());
    let mut i = 0;
    while i < tokens.len() {
        if tokens[i].tok != Tok::Sym(b'@') {
            out.push(tokens[i]);
            i += 1;
            continue;
        }
        i += 1;
        match tokens.get(i).map(|t| t.tok) {
            Some(Tok::Ident("interface")) => continue,
            Some(Tok::Ident(_)) => i += 1,
            _ => continue,
        }
        while tokens.get(i).map(|t| t.tok) == Some(Tok::Sym(b'.'))
            && matches!(tokens.get(i + 1).map(|t| t.tok), Some(Tok::Ident(_)))
        {
            i += 2;
        }
        if tokens.get(i).map(|t| t.tok) == Some(Tok::Sym(b'(')) {
            let mut depth = 0usize;
            while i < tokens.len() {
                match tokens[i].tok {
                    Tok::Sym(b'(') => depth += 1,
                    Tok::Sym(b')') => {
                        depth -= 1;
                        if depth == 0 {
                            i += 1;
                            break;
                        }
                    }
                    _ => {}
                }
                i += 1;
            }
        }
    }
    out
}

#[derive(Debug)]
enum Frame {
    /// A type body; `node` is `None` when the type's own name was unusable.
    Type {
        node: Option<usize>,
        enum_constants: bool,
    },
    /// Braces whose content is ignored.
    Skip,
    /// Braces inside a statement that continues after the closing brace
    /// (field initializers, enum constant bodies).
    Inline,
}

struct Scanner<'a> {
    file: &'a str,
    nodes: Vec<SourceNode>,
    skipped: usize,
}

/// Index of the parenthesis/bracket closing the one opened at `open`.
fn matching(tokens: &[Token<'_>], open: usize) -> Option<usize> {
    let (o, c) = match tokens[open].tok {
        Tok::Sym(b'(') => (b'(', b')'),
        Tok::Sym(b'<') => (b'<', b'>'),
        Tok::Sym(b'[') => (b'[', b']'),
        _ => return None,
    };
    let mut depth = 0usize;
    for (i, t) in tokens.iter().enumerate().skip(open) {
        if t.tok == Tok::Sym(o) {
            depth += 1;
        } else if t.tok == Tok::Sym(c) {
            depth -= 1;
            if depth == 0 {
                return Some(i);
            }
        }
    }
    None
}

/// Position of the first `(` or `=` outside parentheses, whichever comes first.
fn first_open_or_assign(stmt: &[Token<'_>]) -> Option<usize> {
    stmt.iter()
        .position(|t| matches!(t.tok, Tok::Sym(b'(') | Tok::Sym(b'=')))
}

/// Splits `tokens` at commas outside `()`, `[]` and `<>`.
fn split_top_level<'t, 'a>(tokens: &'t [Token<'a>]) -> Vec<&'t [Token<'a>]> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, t) in tokens.iter().enumerate() {
        match t.tok {
            Tok::Sym(b'(' | b'[' | b'<') => depth += 1,
            Tok::Sym(b')' | b']' | b'>') => depth = (depth - 1).max(0),
            Tok::Sym(b',') if depth == 0 => {
                parts.push(&tokens[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&tokens[start..]);
    parts
}

/// The declared name of `type name[]`-shaped token runs: the last identifier,
/// ignoring trailing array brackets.
fn declared_name<'a>(part: &[Token<'a>]) -> Option<(usize, &'a str, u32)> {
    let mut end = part.len();
    while end > 0 && matches!(part[end - 1].tok, Tok::Sym(b'[') | Tok::Sym(b']')) {
        end -= 1;
    }
    if end == 0 {
        return None;
    }
    match part[end - 1].tok {
        Tok::Ident(name) => Some((end - 1, name, part[end - 1].line)),
        _ => None,
    }
}

impl<'a> Scanner<'a> {
    fn emit(
        &mut self,
        kind: NodeKind,
        name: &str,
        line: u32,
        parent: Option<usize>,
    ) -> Option<usize> {
        if !is_identifier(name) || is_reserved(name) {
            self.skipped += 1;
            return None;
        }
        let id = self.nodes.len();
        self.nodes.push(SourceNode {
            id,
            kind,
            name: name.to_string(),
            file: self.file.to_string(),
            line,
            parent,
        });
        Some(id)
    }

    /// `class|interface|enum|record Name` before any `(` or `=`.
    fn type_declaration(stmt: &[Token<'a>]) -> Option<(usize, &'a str, bool)> {
        let limit = first_open_or_assign(stmt).unwrap_or(stmt.len());
        for i in 0..limit {
            let Tok::Ident(word) = stmt[i].tok else {
                continue;
            };
            if i > 0 && stmt[i - 1].tok == Tok::Sym(b'.') {
                continue;
            }
            let Some(Tok::Ident(name)) = stmt.get(i + 1).map(|t| t.tok) else {
                continue;
            };
            match word {
                "class" | "interface" | "enum" => return Some((i + 1, name, word == "enum")),
                "record"
                    if matches!(
                        stmt.get(i + 2).map(|t| t.tok),
                        Some(Tok::Sym(b'(')) | Some(Tok::Sym(b'<'))
                    ) =>
                {
                    return Some((i + 1, name, false))
                }
                _ => {}
            }
        }
        None
    }

    /// Recognizes `... Type name(params)` and returns the name position and
    /// the parameter token range.
    fn method_declaration(stmt: &[Token<'a>]) -> Option<(usize, usize, usize)> {
        let open = first_open_or_assign(stmt)?;
        if stmt[open].tok != Tok::Sym(b'(') || open == 0 {
            return None;
        }
        let name_at = open - 1;
        let Tok::Ident(name) = stmt[name_at].tok else {
            return None;
        };
        if is_reserved(name) || name_at == 0 {
            return None;
        }
        let before = stmt[name_at - 1].tok;
        if !is_type_end(before) {
            return None;
        }
        if before == Tok::Sym(b'>') {
            // `<T> Name(` is a generic constructor, `List<T> name(` a method.
            let mut depth = 0usize;
            let mut j = name_at - 1;
            loop {
                match stmt[j].tok {
                    Tok::Sym(b'>') => depth += 1,
                    Tok::Sym(b'<') => {
                        depth -= 1;
                        if depth == 0 {
                            break;
                        }
                    }
                    _ => {}
                }
                if j == 0 {
                    return None;
                }
                j -= 1;
            }
            let type_name = j.checked_sub(1).map(|k| stmt[k].tok);
            match type_name {
                Some(Tok::Ident(w)) if !is_modifier(w) && !is_reserved(w) => {}
                Some(Tok::Sym(b'.')) => {}
                _ => return None,
            }
        }
        let close = matching(stmt, open)?;
        Some((name_at, open + 1, close))
    }

    fn parameters(&mut self, params: &[Token<'a>], method: Option<usize>, kind: NodeKind) {
        if params.is_empty() {
            return;
        }
        for part in split_top_level(params) {
            match declared_name(part) {
                Some((at, "this", _)) if at > 0 => {}
                Some((at, name, line)) if at > 0 => {
                    if method.is_some() {
                        self.emit(kind, name, line, method);
                    }
                }
                _ => self.skipped += 1,
            }
        }
    }

    fn method(&mut self, stmt: &[Token<'a>], decl: (usize, usize, usize), owner: Option<usize>) {
        let (name_at, params_start, params_end) = decl;
        let Tok::Ident(name) = stmt[name_at].tok else {
            return;
        };
        let method =
            owner.and_then(|o| self.emit(NodeKind::Method, name, stmt[name_at].line, Some(o)));
        if method.is_some() {
            self.parameters(&stmt[params_start..params_end], method, NodeKind::Parameter);
        }
    }

    fn fields(&mut self, stmt: &[Token<'a>], owner: Option<usize>) {
        let mut declarators: Vec<&[Token<'a>]> = Vec::new();
        let mut depth = 0i32;
        let mut angle = 0i32;
        let mut in_init = false;
        let mut start = 0;
        let mut i = 0;
        while i < stmt.len() {
            let tok = stmt[i].tok;
            match tok {
                Tok::Sym(b'(' | b'[') => depth += 1,
                Tok::Sym(b')' | b']') => depth = (depth - 1).max(0),
                Tok::Sym(b'<') if !in_init => angle += 1,
                Tok::Sym(b'>') if !in_init => angle = (angle - 1).max(0),
                Tok::Sym(b'<') => {
                    // Type arguments inside an initializer: `new HashMap<K, V>()`, `X.<T>f()`.
                    let after_type = i >= 2
                        && matches!(stmt[i - 1].tok, Tok::Ident(_))
                        && stmt[..i - 1]
                            .iter()
                            .rev()
                            .take_while(|t| matches!(t.tok, Tok::Ident(_) | Tok::Sym(b'.')))
                            .chain(std::iter::once(&stmt[i - 1]))
                            .any(|t| t.tok == Tok::Ident("new"));
                    let explicit = stmt[i - 1].tok == Tok::Sym(b'.');
                    if after_type || explicit {
                        if let Some(close) = matching(stmt, i) {
                            i = close + 1;
                            continue;
                        }
                    }
                }
                Tok::Sym(b'=') if depth == 0 && angle == 0 && !in_init => {
                    declarators.push(&stmt[start..i]);
                    in_init = true;
                }
                Tok::Sym(b',') if depth == 0 && angle == 0 => {
                    if !in_init {
                        declarators.push(&stmt[start..i]);
                    }
                    in_init = false;
                    start = i + 1;
                }
                _ => {}
            }
            i += 1;
        }
        if !in_init {
            declarators.push(&stmt[start..]);
        }

        for (n, decl) in declarators.into_iter().enumerate() {
            let named = declared_name(decl);
            let valid = match named {
                // The first declarator carries the type: `int[] a`, `Map<K, V> m`.
                Some((at, _, _)) if n == 0 => at > 0 && is_type_end(decl[at - 1].tok),
                Some((at, _, _)) => at == 0,
                None => false,
            };
            match named {
                Some((_, name, line)) if valid => {
                    if let Some(owner) = owner {
                        self.emit(NodeKind::Field, name, line, Some(owner));
                    }
                }
                _ => self.skipped += 1,
            }
        }
    }

    fn enum_constants(&mut self, stmt: &[Token<'a>], owner: Option<usize>) {
        for part in split_top_level(stmt) {
            match part.first().map(|t| t.tok) {
                None => {}
                Some(Tok::Ident(name)) => {
                    if let Some(owner) = owner {
                        self.emit(NodeKind::Field, name, part[0].line, Some(owner));
                    }
                }
                Some(_) => self.skipped += 1,
            }
        }
    }

    /// A statement at member level ended with `;`.
    fn statement(&mut self, stmt: &[Token<'a>], owner: Option<usize>, in_type: bool) {
        if stmt.is_empty() || !in_type {
            return;
        }
        if let Some(decl) = Self::method_declaration(stmt) {
            self.method(stmt, decl, owner);
        } else if stmt
            .iter()
            .all(|t| matches!(t.tok, Tok::Ident(w) if is_modifier(w)))
        {
            self.skipped += 1;
        } else {
            self.fields(stmt, owner);
        }
    }
}

/// Extracts class, method, parameter and field declarations from one file.
pub fn extract_java(text: &str, file: &str) -> JavaExtraction {
    let tokens = strip_annotations(lex(text));
    let mut scanner = Scanner {
        file,
        nodes: Vec::new(),
        skipped: 0,
    };
    let mut frames: Vec<Frame> = Vec::new();
    let mut stmt: Vec<Token<'_>> = Vec::new();
    let mut parens = 0usize;

    for token in tokens {
        match frames.last_mut() {
            Some(Frame::Skip) | Some(Frame::Inline) => {
                match token.tok {
                    Tok::Sym(b'{') => frames.push(Frame::Skip),
                    Tok::Sym(b'}') => {
                        if let Some(Frame::Inline) = frames.pop() {
                            stmt.push(Token {
                                tok: Tok::Lit,
                                line: token.line,
                            });
                        }
                    }
                    _ => {}
                }
                continue;
            }
            _ => {}
        }

        let (owner, in_type, enum_constants) = match frames.last() {
            Some(Frame::Type {
                node,
                enum_constants,
            }) => (*node, true, *enum_constants),
            _ => (None, false, false),
        };

        match token.tok {
            Tok::Sym(b'(') => {
                parens += 1;
                stmt.push(token);
            }
            Tok::Sym(b')') => {
                parens = parens.saturating_sub(1);
                stmt.push(token);
            }
            Tok::Sym(b'{') if parens > 0 || enum_constants => frames.push(Frame::Inline),
            Tok::Sym(b'{') => {
                if let Some((name_at, name, is_enum)) = Scanner::type_declaration(&stmt) {
                    let node = if in_type && owner.is_none() {
                        None
                    } else {
                        scanner.emit(NodeKind::Class, name, stmt[name_at].line, owner)
                    };
                    // Record components are the record's fields.
                    if stmt.get(name_at + 1).map(|t| t.tok) == Some(Tok::Sym(b'(')) {
                        if let Some(close) = matching(&stmt, name_at + 1) {
                            scanner.parameters(&stmt[name_at + 2..close], node, NodeKind::Field);
                        }
                    } else if stmt.get(name_at + 1).map(|t| t.tok) == Some(Tok::Sym(b'<')) {
                        if let Some(gt) = matching(&stmt, name_at + 1) {
                            if stmt.get(gt + 1).map(|t| t.tok) == Some(Tok::Sym(b'(')) {
                                if let Some(close) = matching(&stmt, gt + 1) {
                                    scanner.parameters(&stmt[gt + 2..close], node, NodeKind::Field);
                                }
                            }
                        }
                    }
                    frames.push(Frame::Type {
                        node,
                        enum_constants: is_enum,
                    });
                    stmt.clear();
                } else if !in_type {
                    frames.push(Frame::Skip);
                    if !stmt.is_empty() {
                        scanner.skipped += 1;
                    }
                    stmt.clear();
                } else if let Some(decl) = Scanner::method_declaration(&stmt) {
                    scanner.method(&stmt, decl, owner);
                    frames.push(Frame::Skip);
                    stmt.clear();
                } else if stmt.iter().any(|t| t.tok == Tok::Sym(b'=')) {
                    frames.push(Frame::Inline);
                } else {
                    // Constructors, compact constructors and initializer blocks.
                    frames.push(Frame::Skip);
                    stmt.clear();
                }
            }
            Tok::Sym(b';') if parens == 0 => {
                if enum_constants {
                    scanner.enum_constants(&stmt, owner);
                    if let Some(Frame::Type { enum_constants, .. }) = frames.last_mut() {
                        *enum_constants = false;
                    }
                } else {
                    scanner.statement(&stmt, owner, in_type);
                }
                stmt.clear();
            }
            Tok::Sym(b'}') => {
                if enum_constants {
                    scanner.enum_constants(&stmt, owner);
                } else if !stmt.is_empty() {
                    scanner.skipped += 1;
                }
                stmt.clear();
                parens = 0;
                if frames.pop().is_none() {
                    scanner.skipped += 1;
                }
            }
            _ => stmt.push(token),
        }
    }

    JavaExtraction {
        nodes: scanner.nodes,
        skipped: scanner.skipped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(src: &str) -> Vec<(NodeKind, String, Option<usize>)> {
        extract_java(src, "T.java")
            .nodes
            .into_iter()
            .map(|n| (n.kind, n.name, n.parent))
            .collect()
    }

    fn kinds_names(src: &str) -> Vec<(NodeKind, String)> {
        shape(src).into_iter().map(|(k, n, _)| (k, n)).collect()
    }

    use NodeKind::*;

    fn v(items: &[(NodeKind, &str)]) -> Vec<(NodeKind, String)> {
        items.iter().map(|(k, n)| (*k, n.to_string())).collect()
    }

    #[test]
    fn car_example() {
        let src = "class Car { int wheelCount; void setValue(int newValue){} }";
        assert_eq!(
            shape(src),
            vec![
                (Class, "Car".into(), None),
                (Field, "wheelCount".into(), Some(0)),
                (Method, "setValue".into(), Some(0)),
                (Parameter, "newValue".into(), Some(2)),
            ]
        );
    }

    #[test]
    fn empty_input() {
        assert!(extract_java("", "x.java").nodes.is_empty());
    }

    #[test]
    fn get_type_method() {
        let src = "public class WordClassifier {\n  public String getType(String word) {\n    return null;\n  }\n}\n";
        let out = extract_java(src, "W.java");
        let names: Vec<_> = out
            .nodes
            .iter()
            .map(|n| (n.kind, n.name.as_str(), n.line))
            .collect();
        assert_eq!(
            names,
            vec![
                (Class, "WordClassifier", 1),
                (Method, "getType", 2),
                (Parameter, "word", 2)
            ]
        );
    }

    #[test]
    fn comments_and_literals_are_ignored() {
        let src = r#"
            // class Fake { int no; }
            /* class Fake2 { int no; } */
            class Real {
                String s = "class Fake3 { int no; }";
                char c = '{';
                String block = """
                    class Fake4 { }
                    """;
                int after;
            }"#;
        assert_eq!(
            kinds_names(src),
            v(&[
                (Class, "Real"),
                (Field, "s"),
                (Field, "c"),
                (Field, "block"),
                (Field, "after")
            ])
        );
        let out = extract_java(src, "R.java");
        assert_eq!(out.nodes.last().unwrap().line, 10);
    }

    #[test]
    fn generics_arrays_and_annotations() {
        let src = r#"
            @Entity(name = "x", tags = {"a", "b"})
            public final class Repo<T extends Comparable<T>> extends Base implements Api<T> {
                @Inject private Map<String, List<Integer>> index = new HashMap<String, List<Integer>>(), spare;
                protected int[] counts, totals[];
                @Override
                public <R> List<R> mapAll(final Function<? super T, ? extends R> fn, int... limits) throws IOException {
                    return null;
                }
                abstract String[] names(@Nullable String prefix);
            }"#;
        assert_eq!(
            kinds_names(src),
            v(&[
                (Class, "Repo"),
                (Field, "index"),
                (Field, "spare"),
                (Field, "counts"),
                (Field, "totals"),
                (Method, "mapAll"),
                (Parameter, "fn"),
                (Parameter, "limits"),
                (Method, "names"),
                (Parameter, "prefix"),
            ])
        );
    }

    #[test]
    fn constructors_and_initializers_are_skipped() {
        let src = r#"
            class Box {
                static { LOG = 1; }
                { counter++; }
                public Box(int size) { this.size = size; }
                public <T> Box(T seed) { }
                int size;
            }"#;
        assert_eq!(kinds_names(src), v(&[(Class, "Box"), (Field, "size")]));
    }

    #[test]
    fn method_bodies_hide_locals_and_anonymous_classes() {
        let src = r#"
            class Outer {
                void run() {
                    int local = 0;
                    class LocalType { int hidden; }
                    Runnable r = new Runnable() { public void run() { } };
                }
                Runnable field = new Runnable() {
                    public void run() { int deep; }
                };
                Runnable lambda = () -> { int deeper; };
                Comparator<String> cmp = (a, b) -> a.compareTo(b);
            }"#;
        assert_eq!(
            kinds_names(src),
            v(&[
                (Class, "Outer"),
                (Method, "run"),
                (Field, "field"),
                (Field, "lambda"),
                (Field, "cmp"),
            ])
        );
    }

    #[test]
    fn nested_types_and_interfaces() {
        let src = r#"
            package a.b;
            import java.util.List;
            public interface Shape {
                double area();
                int SIDES = 0;
                enum Kind { ROUND, SQUARE("sq") { int x() { return 1; } }, OTHER; private String label; Kind() {} Kind(String l) { label = l; } }
                record Point(int x, int y) { Point { } double norm() { return 0; } }
                @interface Marker { String value() default "v"; }
            }"#;
        assert_eq!(
            shape(src),
            vec![
                (Class, "Shape".into(), None),
                (Method, "area".into(), Some(0)),
                (Field, "SIDES".into(), Some(0)),
                (Class, "Kind".into(), Some(0)),
                (Field, "ROUND".into(), Some(3)),
                (Field, "SQUARE".into(), Some(3)),
                (Field, "OTHER".into(), Some(3)),
                (Field, "label".into(), Some(3)),
                (Class, "Point".into(), Some(0)),
                (Field, "x".into(), Some(8)),
                (Field, "y".into(), Some(8)),
                (Method, "norm".into(), Some(8)),
                (Class, "Marker".into(), Some(0)),
                (Method, "value".into(), Some(12)),
            ]
        );
    }

    #[test]
    fn class_literals_are_not_declarations() {
        let src = "class A { Class<?> type = String.class; Object lock = A.class; }";
        assert_eq!(
            kinds_names(src),
            v(&[(Class, "A"), (Field, "type"), (Field, "lock")])
        );
    }

    #[test]
    fn non_ascii_names_are_skipped() {
        let out = extract_java("class Café { int größe; int ok; }", "x.java");
        let names: Vec<_> = out.nodes.iter().map(|n| n.name.as_str()).collect();
        assert!(names.is_empty(), "{names:?}");
        assert!(out.skipped >= 1);
        let out = extract_java("class Cafe { int größe; int ok; }", "x.java");
        let names: Vec<_> = out.nodes.iter().map(|n| n.name.as_str()).collect();
        assert_eq!(names, ["Cafe", "ok"]);
    }

    #[test]
    fn unbalanced_input_does_not_panic() {
        for src in [
            "class A {",
            "}}}",
            "class { int",
            "void f(int a",
            "class A { int x = ; }",
            "@",
            "\"unterminated",
        ] {
            let _ = extract_java(src, "x.java");
        }
    }

    #[test]
    fn numbers_do_not_split_statements() {
        let src = "class N { double a = 1.5e-3, b = 0x1F; long c = 1_000L; }";
        assert_eq!(
            kinds_names(src),
            v(&[(Class, "N"), (Field, "a"), (Field, "b"), (Field, "c")])
        );
    }
}

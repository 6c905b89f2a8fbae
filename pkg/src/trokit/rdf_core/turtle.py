"""A deterministic Turtle subset: parser and writer.

Supported syntax: @prefix / PREFIX directives, IRIs in angle brackets,
prefixed names, the ``a`` keyword, labelled blank nodes, short and long
double-quoted strings, integer and decimal shorthand, ``^^`` datatypes,
language tags, comma and semicolon grouping, and ``#`` comments.

Deliberately out of scope (rejected with an error naming the
construct): collections, anonymous blank node property lists ``[]``,
base directives and relative IRIs, boolean and double shorthand,
single-quoted strings.

The writer emits one fixed shape for a given graph: prefixes sorted,
subjects sorted, ``rdf:type`` first as ``a``, remaining predicates and
all objects sorted. Parsing its output yields the original graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import Graph
from .model import (
    RDF_TYPE,
    XSD_DECIMAL,
    XSD_INTEGER,
    XSD_STRING,
    BlankNode,
    Iri,
    Literal,
    Term,
    Triple,
    escape_literal,
)


class ParseError(ValueError):
    """A syntax error at a 1-based line and column."""

    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str
    value: object
    line: int
    col: int


_PN_PREFIX_RE = re.compile(r"[A-Za-z][A-Za-z0-9_\-]*")
_LANG_RUN_RE = re.compile(r"[A-Za-z0-9\-]*")
_LANG_TAG_RE = re.compile(r"^[A-Za-z]+(-[A-Za-z0-9]+)*$")
_HEX = set("0123456789abcdefABCDEF")

_SHORT_ESCAPES = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}


def _is_local_char(ch: str) -> bool:
    # tuple membership: "" (EOF) must not count as a match
    return ch.isascii() and (ch.isalnum() or ch in ("_", "-"))


class _Lexer:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1
        self.last_kind = ""

    def _peek(self, ahead: int = 0) -> str:
        i = self.pos + ahead
        return self.text[i] if i < len(self.text) else ""

    def _advance(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def _error(self, message: str, line: int | None = None, col: int | None = None) -> ParseError:
        return ParseError(message, self.line if line is None else line, self.col if col is None else col)

    def tokens(self) -> list[_Token]:
        out: list[_Token] = []
        while True:
            tok = self._next_token()
            out.append(tok)
            self.last_kind = tok.kind
            if tok.kind == "eof":
                return out

    def _next_token(self) -> _Token:
        self._skip_trivia()
        line, col = self.line, self.col
        ch = self._peek()
        if ch == "":
            return _Token("eof", None, line, col)
        if ch == "<":
            return _Token("iriref", self._scan_iriref(), line, col)
        if ch == '"':
            return _Token("string", self._scan_string(), line, col)
        if ch == "'":
            raise self._error("single-quoted strings are not supported")
        if ch == "@":
            return self._scan_at(line, col)
        if ch == "(" or ch == ")":
            raise self._error("collections are not supported")
        if ch == "[" or ch == "]":
            raise self._error("anonymous blank node property lists are not supported")
        if ch == ";":
            self._advance()
            return _Token("semicolon", ";", line, col)
        if ch == ",":
            self._advance()
            return _Token("comma", ",", line, col)
        if ch == "^":
            self._advance()
            if self._peek() != "^":
                raise self._error("unexpected '^'", line, col)
            self._advance()
            return _Token("datatype", "^^", line, col)
        if ch == "_" and self._peek(1) == ":":
            return _Token("blank", self._scan_blank_label(), line, col)
        if ch == "." and not self._peek(1).isdigit():
            self._advance()
            return _Token("dot", ".", line, col)
        if ch.isdigit() or ch in ("+", "-", "."):
            return _Token(*self._scan_number(), line, col)
        if (ch.isascii() and ch.isalpha()) or ch == ":":
            return self._scan_name(line, col)
        raise self._error(f"unexpected character {ch!r}")

    def _skip_trivia(self) -> None:
        while True:
            ch = self._peek()
            if ch in (" ", "\t", "\r", "\n"):
                self._advance()
            elif ch == "#":
                while self._peek() not in ("", "\n"):
                    self._advance()
            else:
                return

    def _scan_iriref(self) -> Iri:
        line, col = self.line, self.col
        self._advance()
        buf: list[str] = []
        while True:
            ch = self._peek()
            if ch in ("", "\n"):
                raise self._error("unterminated IRI reference", line, col)
            if ch == ">":
                self._advance()
                break
            if ch == "\\":
                buf.append(self._scan_uchar(iri=True))
                continue
            buf.append(self._advance())
        try:
            return Iri("".join(buf))
        except ValueError as exc:
            raise ParseError(str(exc), line, col) from None

    def _scan_uchar(self, iri: bool = False) -> str:
        line, col = self.line, self.col
        self._advance()
        kind = self._peek()
        if kind in ("u", "U"):
            self._advance()
            width = 4 if kind == "u" else 8
            digits = ""
            for _ in range(width):
                if self._peek() not in _HEX:
                    raise self._error("malformed \\%s escape" % kind, line, col)
                digits += self._advance()
            return chr(int(digits, 16))
        if not iri and kind in _SHORT_ESCAPES:
            self._advance()
            return _SHORT_ESCAPES[kind]
        where = " in IRI" if iri else ""
        raise self._error(f"invalid escape sequence '\\{kind}'{where}", line, col)

    def _scan_string(self) -> str:
        line, col = self.line, self.col
        self._advance()
        if self._peek() == '"' and self._peek(1) == '"':
            self._advance()
            self._advance()
            return self._scan_long_string(line, col)
        buf: list[str] = []
        while True:
            ch = self._peek()
            if ch in ("", "\n", "\r"):
                raise self._error("unterminated string literal", line, col)
            if ch == '"':
                self._advance()
                return "".join(buf)
            if ch == "\\":
                buf.append(self._scan_uchar())
                continue
            buf.append(self._advance())

    def _scan_long_string(self, line: int, col: int) -> str:
        buf: list[str] = []
        while True:
            ch = self._peek()
            if ch == "":
                raise self._error("unterminated string literal", line, col)
            if ch == '"':
                run = 0
                while self._peek() == '"':
                    self._advance()
                    run += 1
                if run >= 3:
                    # a longer quote run keeps its leading quotes as content
                    buf.append('"' * (run - 3))
                    return "".join(buf)
                buf.append('"' * run)
                continue
            if ch == "\\":
                buf.append(self._scan_uchar())
                continue
            buf.append(self._advance())

    def _scan_blank_label(self) -> BlankNode:
        line, col = self.line, self.col
        self._advance()
        self._advance()
        buf: list[str] = []
        while True:
            ch = self._peek()
            if ch.isascii() and (ch.isalnum() or ch == "_"):
                buf.append(self._advance())
            else:
                break
        if not buf:
            raise self._error("missing blank node label", line, col)
        return BlankNode("".join(buf))

    def _scan_number(self) -> tuple[str, str]:
        line, col = self.line, self.col
        buf: list[str] = []
        if self._peek() in ("+", "-"):
            buf.append(self._advance())
        while self._peek().isdigit():
            buf.append(self._advance())
        decimal = False
        if self._peek() == "." and self._peek(1).isdigit():
            decimal = True
            buf.append(self._advance())
            while self._peek().isdigit():
                buf.append(self._advance())
        nxt = self._peek()
        if nxt in ("e", "E"):
            after = self._peek(1)
            if after.isdigit() or (after in ("+", "-") and self._peek(2).isdigit()):
                raise self._error("double literals are not supported", line, col)
        if not any(c.isdigit() for c in buf):
            raise self._error("malformed numeric literal", line, col)
        return ("decimal" if decimal else "integer", "".join(buf))

    def _scan_at(self, line: int, col: int) -> _Token:
        self._advance()
        if self.last_kind == "string":
            run = _LANG_RUN_RE.match(self.text, self.pos).group(0)
            if not _LANG_TAG_RE.match(run):
                raise self._error(f"malformed language tag '@{run}'", line, col)
            for _ in run:
                self._advance()
            return _Token("langtag", run, line, col)
        m = _PN_PREFIX_RE.match(self.text, self.pos)
        word = m.group(0) if m else ""
        if word == "prefix":
            for _ in word:
                self._advance()
            return _Token("prefix", "@prefix", line, col)
        if word == "base":
            raise self._error("base directives are not supported", line, col)
        raise self._error(f"unknown directive '@{word}'", line, col)

    def _scan_name(self, line: int, col: int) -> _Token:
        prefix = ""
        if self._peek() != ":":
            m = _PN_PREFIX_RE.match(self.text, self.pos)
            prefix = m.group(0)
            for _ in prefix:
                self._advance()
        if self._peek() != ":":
            if prefix == "a":
                return _Token("a", "a", line, col)
            if prefix in ("true", "false"):
                raise self._error("boolean literals are not supported", line, col)
            if prefix.upper() == "PREFIX":
                return _Token("prefix", "PREFIX", line, col)
            if prefix.upper() == "BASE":
                raise self._error("base directives are not supported", line, col)
            raise self._error(f"unexpected bare word '{prefix}'", line, col)
        self._advance()
        local = self._scan_local()
        return _Token("pname", (prefix, local), line, col)

    def _scan_local(self) -> str:
        buf: list[str] = []
        while True:
            ch = self._peek()
            if _is_local_char(ch) and (buf or ch != "-"):
                buf.append(self._advance())
            elif ch == "%" and self._peek(1) in _HEX and self._peek(2) in _HEX:
                buf.append(self._advance())
                buf.append(self._advance())
                buf.append(self._advance())
            elif ch == "." and buf and (_is_local_char(self._peek(1)) or self._peek(1) == "%"):
                # medial dots only: a trailing dot terminates the statement
                buf.append(self._advance())
            else:
                return "".join(buf)


_DESCRIBE = {
    "iriref": "IRI",
    "pname": "prefixed name",
    "blank": "blank node",
    "string": "string literal",
    "langtag": "language tag",
    "integer": "integer literal",
    "decimal": "decimal literal",
    "dot": "'.'",
    "semicolon": "';'",
    "comma": "','",
    "datatype": "'^^'",
    "a": "'a'",
    "prefix": "prefix directive",
    "eof": "end of input",
}


class _Parser:
    def __init__(self, text: str) -> None:
        self._toks = _Lexer(text).tokens()
        self._i = 0

    def _peek(self) -> _Token:
        return self._toks[self._i]

    def _next(self) -> _Token:
        tok = self._toks[self._i]
        if tok.kind != "eof":
            self._i += 1
        return tok

    @staticmethod
    def _error(message: str, tok: _Token) -> ParseError:
        return ParseError(message, tok.line, tok.col)

    def _expect(self, kind: str, what: str) -> _Token:
        tok = self._peek()
        if tok.kind != kind:
            raise self._error(f"expected {what}, found {_DESCRIBE[tok.kind]}", tok)
        return self._next()

    def parse(self) -> Graph:
        graph = Graph()
        while self._peek().kind != "eof":
            if self._peek().kind == "prefix":
                self._directive(graph)
            else:
                self._triples(graph)
        return graph

    def _directive(self, graph: Graph) -> None:
        form = self._next().value
        name = self._expect("pname", "prefix declaration")
        prefix, local = name.value
        if local:
            raise self._error("expected prefix declaration like 'p:'", name)
        ns = self._expect("iriref", "namespace IRI").value
        if form == "@prefix":
            self._expect("dot", "'.' after @prefix directive")
        graph.prefixes[prefix] = ns

    def _triples(self, graph: Graph) -> None:
        subject = self._subject(graph)
        while True:
            verb = self._verb(graph)
            self._object_list(graph, subject, verb)
            if self._peek().kind != "semicolon":
                break
            while self._peek().kind == "semicolon":
                self._next()
            if self._peek().kind in ("dot", "eof"):
                break
        self._expect("dot", "'.' at end of statement")

    def _object_list(self, graph: Graph, subject: Iri | BlankNode, verb: Iri) -> None:
        while True:
            graph.insert(Triple(subject, verb, self._object(graph)))
            if self._peek().kind != "comma":
                return
            self._next()

    def _resolve(self, graph: Graph, tok: _Token) -> Iri:
        prefix, local = tok.value
        ns = graph.prefixes.get(prefix)
        if ns is None:
            raise self._error(f"undeclared prefix '{prefix}:'", tok)
        try:
            return Iri(ns.value + local)
        except ValueError as exc:
            raise self._error(str(exc), tok) from None

    def _subject(self, graph: Graph) -> Iri | BlankNode:
        tok = self._next()
        if tok.kind == "iriref":
            return tok.value
        if tok.kind == "pname":
            return self._resolve(graph, tok)
        if tok.kind == "blank":
            return tok.value
        raise self._error(f"expected subject (IRI or blank node), found {_DESCRIBE[tok.kind]}", tok)

    def _verb(self, graph: Graph) -> Iri:
        tok = self._next()
        if tok.kind == "a":
            return RDF_TYPE
        if tok.kind == "iriref":
            return tok.value
        if tok.kind == "pname":
            return self._resolve(graph, tok)
        raise self._error(f"expected predicate IRI, found {_DESCRIBE[tok.kind]}", tok)

    def _object(self, graph: Graph) -> Term:
        tok = self._next()
        if tok.kind == "iriref":
            return tok.value
        if tok.kind == "pname":
            return self._resolve(graph, tok)
        if tok.kind == "blank":
            return tok.value
        if tok.kind == "integer":
            return Literal(tok.value, XSD_INTEGER)
        if tok.kind == "decimal":
            return Literal(tok.value, XSD_DECIMAL)
        if tok.kind == "string":
            return self._literal_tail(graph, tok)
        raise self._error(f"expected object (IRI, blank node or literal), found {_DESCRIBE[tok.kind]}", tok)

    def _literal_tail(self, graph: Graph, tok: _Token) -> Literal:
        nxt = self._peek()
        if nxt.kind == "datatype":
            self._next()
            dt_tok = self._next()
            if dt_tok.kind == "iriref":
                dt = dt_tok.value
            elif dt_tok.kind == "pname":
                dt = self._resolve(graph, dt_tok)
            else:
                raise self._error(f"expected datatype IRI, found {_DESCRIBE[dt_tok.kind]}", dt_tok)
            try:
                return Literal(tok.value, dt)
            except ValueError as exc:
                raise self._error(str(exc), dt_tok) from None
        if nxt.kind == "langtag":
            self._next()
            try:
                return Literal(tok.value, language=nxt.value)
            except ValueError as exc:
                raise self._error(str(exc), nxt) from None
        return Literal(tok.value)


def parse_turtle(text: str) -> Graph:
    """Parse the Turtle subset; raise ParseError with line and column."""
    return _Parser(text).parse()


_INTEGER_RE = re.compile(r"^[+-]?[0-9]+$")
_DECIMAL_RE = re.compile(r"^[+-]?[0-9]*\.[0-9]+$")
_SAFE_LOCAL_RE = re.compile(
    r"^(?:(?:[A-Za-z0-9_]|%[0-9A-Fa-f]{2})(?:[A-Za-z0-9_\-]|%[0-9A-Fa-f]{2}|\.(?=[A-Za-z0-9_\-%]))*)?$"
)


def _prefix_table(graph: Graph) -> list[tuple[str, str]]:
    # longest namespace first so the most specific prefix wins
    table = [(ns.value, prefix) for prefix, ns in graph.prefixes.items()]
    table.sort(key=lambda item: (-len(item[0]), item[1]))
    return table


def _render_iri(iri: Iri, table: list[tuple[str, str]]) -> str:
    for ns, prefix in table:
        if iri.value.startswith(ns):
            local = iri.value[len(ns):]
            if _SAFE_LOCAL_RE.match(local):
                return f"{prefix}:{local}"
    return iri.n3()


def _render_term(term: Term, table: list[tuple[str, str]]) -> str:
    if isinstance(term, Iri):
        return _render_iri(term, table)
    if isinstance(term, Literal):
        if term.language is not None:
            return f'"{escape_literal(term.lexical)}"@{term.language}'
        if term.datatype == XSD_INTEGER and _INTEGER_RE.match(term.lexical):
            return term.lexical
        if term.datatype == XSD_DECIMAL and _DECIMAL_RE.match(term.lexical):
            return term.lexical
        if term.datatype == XSD_STRING:
            return f'"{escape_literal(term.lexical)}"'
        return f'"{escape_literal(term.lexical)}"^^{_render_iri(term.datatype, table)}'
    return term.n3()


def serialize_turtle(graph: Graph) -> str:
    """Write the graph in the subset's single deterministic shape."""
    table = _prefix_table(graph)
    chunks: list[str] = []
    prefix_lines = [
        f"@prefix {prefix}: {graph.prefixes[prefix].n3()} ."
        for prefix in sorted(graph.prefixes)
    ]
    if prefix_lines:
        chunks.append("\n".join(prefix_lines))

    by_subject: dict[Iri | BlankNode, dict[Iri, set[Term]]] = {}
    for triple in graph.triples():
        by_subject.setdefault(triple.subject, {}).setdefault(triple.predicate, set()).add(triple.object)

    for subject in sorted(by_subject, key=lambda t: t.n3()):
        po = by_subject[subject]
        preds = sorted(po, key=lambda p: (p != RDF_TYPE, p.n3()))
        segments = []
        for pred in preds:
            verb = "a" if pred == RDF_TYPE else _render_iri(pred, table)
            objs = ", ".join(_render_term(o, table) for o in sorted(po[pred], key=lambda t: t.n3()))
            segments.append(f"{verb} {objs}")
        body = " ;\n    ".join(segments)
        chunks.append(f"{_render_term(subject, table)} {body} .")

    if not chunks:
        return ""
    return "\n\n".join(chunks) + "\n"

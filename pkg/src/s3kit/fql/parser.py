"""FQL parser: a strict recursive-descent grammar plus a lenient recovery
mode for the paren-unbalanced queries that LLMs (and humans) emit.

Strict grammar:

    query   = check | "MAX" "(" check { "," check } ")"
                    | "LIST" "(" check { "," check } ")" ;
    check   = "CHECK" "(" pattern ")" "WHERE" "(" filespec ")"
              [ "AS" "(" tag ")" ] ;
    pattern = term { "||" term } ;   terms may contain balanced parens
    filespec = "*" | glob { "," glob } ;
    tag     = any chars except ")" ;

Keywords are case-sensitive uppercase.
"""

from __future__ import annotations

import re

from .ast import (
    CheckQuery,
    EmptyPattern,
    FileFilter,
    FqlError,
    FqlQuery,
    Pattern,
    normalize_version,
)


class FqlSyntaxError(FqlError):
    def __init__(self, message: str, offset: int, expected: set[str] | None = None):
        self.offset = offset
        self.expected = set(expected or ())
        detail = f"at offset {offset}: {message}"
        if self.expected:
            detail += " (expected one of: " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(detail)


class _Strict:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _expect(self, lit: str):
        self._ws()
        if not self.text.startswith(lit, self.pos):
            raise FqlSyntaxError(f"expected {lit!r}", self.pos, {lit})
        self.pos += len(lit)

    def _peek_keyword(self, kw: str) -> bool:
        self._ws()
        end = self.pos + len(kw)
        if not self.text.startswith(kw, self.pos):
            return False
        # keyword must not run into an identifier character
        return end >= len(self.text) or not (self.text[end].isalnum() or self.text[end] == "_")

    def parse_query(self) -> FqlQuery:
        self._ws()
        if self._peek_keyword("MAX"):
            return self._compound("MAX", "max")
        if self._peek_keyword("LIST"):
            return self._compound("LIST", "list")
        if self._peek_keyword("CHECK"):
            q = FqlQuery("check", (self.parse_check(),))
            self._trailing()
            return q
        raise FqlSyntaxError("expected a query keyword", self.pos, {"CHECK", "MAX", "LIST"})

    def _trailing(self):
        self._ws()
        if self.pos != len(self.text):
            raise FqlSyntaxError("unexpected trailing input", self.pos)

    def _compound(self, kw: str, kind: str) -> FqlQuery:
        self._expect(kw)
        self._expect("(")
        checks = [self.parse_check()]
        while True:
            self._ws()
            if self.text.startswith(",", self.pos):
                self.pos += 1
                checks.append(self.parse_check())
            else:
                break
        self._expect(")")
        q = FqlQuery(kind, tuple(checks))
        self._trailing()
        return q

    def parse_check(self) -> CheckQuery:
        self._expect("CHECK")
        self._expect("(")
        terms = self._pattern_body()
        self._expect("WHERE")
        self._expect("(")
        filt = self._filespec()
        tag = None
        if self._peek_keyword("AS"):
            self._expect("AS")
            self._expect("(")
            tag = self._until_rparen().strip()
            if not tag:
                raise FqlSyntaxError("empty tag", self.pos, {"tag"})
        return CheckQuery(Pattern(tuple(terms)), filt, tag)

    def _pattern_body(self) -> list[str]:
        """Scan pattern content up to the balancing ')', splitting on
        top-level '||'."""
        terms: list[str] = []
        buf: list[str] = []
        depth = 0
        while True:
            if self.pos >= len(self.text):
                raise FqlSyntaxError("unterminated pattern", self.pos, {")"})
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0:
                    self.pos += 1
                    break
                depth -= 1
            elif depth == 0 and self.text.startswith("||", self.pos):
                terms.append("".join(buf))
                buf = []
                self.pos += 2
                continue
            buf.append(ch)
            self.pos += 1
        terms.append("".join(buf))
        out = [t.strip() for t in terms]
        if any(not t for t in out):
            raise EmptyPattern("pattern term is empty")
        return out

    def _until_rparen(self) -> str:
        end = self.text.find(")", self.pos)
        if end < 0:
            raise FqlSyntaxError("unterminated parenthesis", self.pos, {")"})
        out = self.text[self.pos : end]
        self.pos = end + 1
        return out

    def _filespec(self) -> FileFilter:
        body = self._until_rparen().strip()
        if body == "*":
            return FileFilter.wildcard()
        globs = tuple(g.strip() for g in body.split(","))
        if not body or any(not g for g in globs):
            raise FqlSyntaxError("empty filespec entry", self.pos, {"glob", "*"})
        return FileFilter(globs)


_CHECK_SPLIT = re.compile(r"\bCHECK\b")
_WHERE_RE = re.compile(r"\bWHERE\b")
_AS_RE = re.compile(r"\bAS\b\s*\(\s*([^)]*)\)")
_FILESPEC_RE = re.compile(r"\(\s*([^)]*)\)")


def _trim_balance(s: str) -> str:
    """Drop leading/trailing parens that have no partner inside s."""
    s = s.strip()
    while s.endswith(")") and s.count(")") > s.count("("):
        s = s[:-1].rstrip().rstrip(",").rstrip()
    while s.startswith("(") and s.count("(") > s.count(")"):
        s = s[1:].lstrip()
    return s


def _split_top_level_alts(s: str) -> list[str]:
    terms, buf, depth = [], [], 0
    i = 0
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth = max(0, depth - 1)
        if depth == 0 and s.startswith("||", i):
            terms.append("".join(buf))
            buf = []
            i += 2
            continue
        buf.append(ch)
        i += 1
    terms.append("".join(buf))
    return terms


def _lenient_check(fragment: str) -> CheckQuery:
    """Recover one CHECK from a possibly unbalanced fragment by splitting
    on the WHERE keyword."""
    m = _WHERE_RE.search(fragment)
    if not m:
        raise FqlSyntaxError("CHECK without WHERE", 0, {"WHERE"})
    pat_text = fragment[: m.start()].strip()
    if pat_text.startswith("("):
        pat_text = pat_text[1:]
    pat_text = _trim_balance(pat_text.rstrip().rstrip(",").rstrip())
    terms = tuple(t.strip() for t in _split_top_level_alts(pat_text))
    if not terms or any(not t for t in terms):
        raise EmptyPattern("pattern term is empty")

    rest = fragment[m.end() :]
    fm = _FILESPEC_RE.search(rest)
    if not fm:
        raise FqlSyntaxError("WHERE without filespec", m.end(), {"("})
    body = fm.group(1).strip()
    if body == "*":
        filt = FileFilter.wildcard()
    else:
        globs = tuple(g.strip() for g in body.split(",") if g.strip())
        if not globs:
            raise FqlSyntaxError("empty filespec", m.end(), {"glob", "*"})
        filt = FileFilter(globs)

    tag = None
    am = _AS_RE.search(rest, fm.end())
    if am:
        tag = am.group(1).strip() or None
    return CheckQuery(Pattern(terms), filt, tag)


def _lenient(text: str) -> FqlQuery:
    stripped = text.strip()
    head = re.match(r"\s*(MAX|LIST|CHECK)\b", stripped)
    if not head:
        raise FqlSyntaxError("expected a query keyword", 0, {"CHECK", "MAX", "LIST"})
    kw = head.group(1)
    pieces = _CHECK_SPLIT.split(stripped)
    fragments = [p for p in pieces[1:]]  # text following each CHECK keyword
    if not fragments:
        raise FqlSyntaxError("no CHECK clause found", 0, {"CHECK"})
    checks = tuple(_lenient_check(f) for f in fragments)
    if kw == "CHECK":
        if len(checks) != 1:
            raise FqlSyntaxError("multiple CHECKs outside MAX/LIST", 0)
        return FqlQuery("check", checks)
    return FqlQuery("max" if kw == "MAX" else "list", checks)


def parse_fql(text: str, mode: str = "strict") -> FqlQuery:
    """Parse FQL text into an AST.

    Strict mode follows the grammar exactly; lenient mode additionally
    recovers queries whose parentheses do not balance.
    """
    if mode not in ("strict", "lenient"):
        raise ValueError(f"unknown parse mode {mode!r}")
    if not text or not text.strip():
        raise FqlSyntaxError("empty query text", 0, {"CHECK", "MAX", "LIST"})
    try:
        return _Strict(text).parse_query()
    except (FqlSyntaxError, EmptyPattern):
        if mode == "strict":
            raise
    return _lenient(text)

"""Parser and queries for the minimal DOT call graphs that static
analysis tools emit: one digraph, bare `module::function -> ...` edges,
no subgraphs or node statements."""

from __future__ import annotations

import re
from dataclasses import dataclass


class DotError(Exception):
    pass


class NotADigraph(DotError):
    pass


class MalformedEdge(DotError):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


class UnknownFunction(DotError):
    pass


@dataclass(frozen=True, order=True)
class QualifiedName:
    module: str
    function: str

    @classmethod
    def parse(cls, token: str) -> "QualifiedName":
        if "::" in token:
            module, function = token.split("::", 1)
            return cls(module, function)
        # bare tokens carry no module prefix
        return cls(token, token)

    def __str__(self):
        if self.module == self.function:
            return self.function
        return f"{self.module}::{self.function}"


@dataclass(frozen=True)
class CallGraph:
    name: str
    nodes: frozenset[QualifiedName]
    edges: tuple[tuple[QualifiedName, QualifiedName], ...]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "nodes": sorted(str(n) for n in self.nodes),
            "edges": [[str(a), str(b)] for a, b in self.edges],
        }


_DIGRAPH_RE = re.compile(r"^\s*digraph\s+(\w+)\s*\{", re.S)
_UNSUPPORTED = ("subgraph", "graph [", "node [", "edge [")


def parse_dot(text: str) -> CallGraph:
    """Parse a single bare-edge digraph block into a call graph."""
    m = _DIGRAPH_RE.match(text)
    if not m:
        raise NotADigraph("input does not start with 'digraph <name> {'")
    name = m.group(1)
    close = text.rfind("}")
    if close < 0:
        raise NotADigraph("digraph block is not closed")
    body = text[m.end() : close]
    body_start_line = text[: m.end()].count("\n") + 1

    edges: list[tuple[QualifiedName, QualifiedName]] = []
    nodes: set[QualifiedName] = set()
    for offset, raw in enumerate(body.split("\n")):
        lineno = body_start_line + offset
        line = raw.strip().rstrip(";").strip()
        # attribute/comment brackets are ignored
        line = re.sub(r"\[[^\]]*\]", "", line).strip()
        if not line or line.startswith("//") or line.startswith("#"):
            continue
        for construct in _UNSUPPORTED:
            if line.startswith(construct):
                raise DotError(f"unsupported DOT construct at line {lineno}: {construct!r}")
        if "->" not in line:
            raise MalformedEdge(f"not an edge statement: {line!r}", lineno)
        parts = [p.strip().strip('"') for p in line.split("->")]
        if len(parts) != 2 or not all(parts):
            raise MalformedEdge(f"cannot parse edge: {line!r}", lineno)
        caller, callee = (QualifiedName.parse(p) for p in parts)
        nodes.add(caller)
        nodes.add(callee)
        edges.append((caller, callee))
    return CallGraph(name=name, nodes=frozenset(nodes), edges=tuple(edges))


def unique_modules(graph: CallGraph) -> list[str]:
    """Sorted, deduplicated module names over both edge endpoints."""
    return sorted({n.module for n in graph.nodes})


def _resolve(graph: CallGraph, function: QualifiedName | str) -> QualifiedName:
    qn = QualifiedName.parse(function) if isinstance(function, str) else function
    if qn not in graph.nodes:
        raise UnknownFunction(f"function not in graph: {qn}")
    return qn


def callees(graph: CallGraph, function: QualifiedName | str) -> list[QualifiedName]:
    qn = _resolve(graph, function)
    out: list[QualifiedName] = []
    for caller, callee in graph.edges:
        if caller == qn and callee not in out:
            out.append(callee)
    return out


def callers(graph: CallGraph, function: QualifiedName | str) -> list[QualifiedName]:
    qn = _resolve(graph, function)
    out: list[QualifiedName] = []
    for caller, callee in graph.edges:
        if callee == qn and caller not in out:
            out.append(caller)
    return out

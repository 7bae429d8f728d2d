"""In-memory string tables loaded from headered CSV, with a nested-loop
join/filter/project engine and SQL text emission.

The CSV dialect is deliberately tiny: comma is the only delimiter and
there is no quoting, matching the machine-generated files we consume.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


class TableError(Exception):
    pass


class RaggedRow(TableError):
    def __init__(self, message: str, row: int):
        self.row = row
        super().__init__(f"row {row}: {message}")


class DuplicateKey(TableError):
    pass


class UnknownTable(TableError):
    pass


class UnknownColumn(TableError):
    pass


@dataclass(frozen=True)
class Table:
    name: str
    columns: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    primary_key: str | None = None

    def column_index(self, column: str) -> int:
        try:
            return self.columns.index(column)
        except ValueError:
            raise UnknownColumn(f"table {self.name!r} has no column {column!r}") from None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "columns": list(self.columns),
            "rows": [list(r) for r in self.rows],
            "primary_key": self.primary_key,
        }


def load_csv(name: str, text: str, primary_key: str | None = None) -> Table:
    """Load a headered, quoting-free CSV into a Table."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise TableError("CSV text has no header line")
    columns = tuple(c.strip() for c in lines[0].split(","))
    rows: list[tuple[str, ...]] = []
    for i, line in enumerate(lines[1:], start=2):
        cells = tuple(c.strip() for c in line.split(","))
        if len(cells) != len(columns):
            raise RaggedRow(f"expected {len(columns)} cells, got {len(cells)}", i)
        rows.append(cells)
    table = Table(name, columns, tuple(rows), primary_key)
    if primary_key is not None:
        ki = table.column_index(primary_key)
        seen: set[str] = set()
        for r in rows:
            if r[ki] in seen:
                raise DuplicateKey(f"duplicate {primary_key!r} value: {r[ki]!r}")
            seen.add(r[ki])
    return table


@dataclass(frozen=True)
class QueryPlan:
    """Inner join of one or two tables, conjunctive equality filters,
    then column projection."""

    select: tuple[str, ...]  # ("*",) selects every column
    frm: tuple[str, ...]  # one or two table names
    join_on: tuple[str, str] | None = None  # (left column, right column)
    where: tuple[tuple[str, str], ...] = field(default=())  # (column, value) equalities
    view_name: str | None = None

    def to_dict(self) -> dict:
        return {
            "select": list(self.select),
            "from": list(self.frm),
            "join_on": list(self.join_on) if self.join_on else None,
            "where": [list(w) for w in self.where],
            "view_name": self.view_name,
        }


def _joined(plan: QueryPlan, tables: dict[str, Table]) -> tuple[tuple[str, ...], list[tuple[str, ...]]]:
    for name in plan.frm:
        if name not in tables:
            raise UnknownTable(f"no table named {name!r}")
    left = tables[plan.frm[0]]
    if len(plan.frm) == 1:
        return left.columns, list(left.rows)
    if plan.join_on is None:
        raise TableError("two-table plan requires join_on")
    right = tables[plan.frm[1]]
    li = left.column_index(plan.join_on[0])
    ri = right.column_index(plan.join_on[1])
    # joined row keeps the right join column out (it duplicates the left one)
    cols = left.columns + tuple(c for j, c in enumerate(right.columns) if j != ri)
    out: list[tuple[str, ...]] = []
    for lrow in left.rows:
        for rrow in right.rows:
            if lrow[li] == rrow[ri]:
                out.append(lrow + tuple(c for j, c in enumerate(rrow) if j != ri))
    return cols, out


def query_tables(plan: QueryPlan, tables: dict[str, Table]) -> Table:
    """Evaluate a plan: inner join, equality filters, projection.
    Row order follows the left table."""
    cols, rows = _joined(plan, tables)

    def idx(col: str) -> int:
        try:
            return cols.index(col)
        except ValueError:
            raise UnknownColumn(f"no column {col!r} in joined view") from None

    for col, value in plan.where:
        i = idx(col)
        rows = [r for r in rows if r[i] == value]
    if plan.select == ("*",):
        out_cols, out_rows = cols, rows
    else:
        indices = [idx(c) for c in plan.select]
        out_cols = tuple(plan.select)
        out_rows = [tuple(r[i] for i in indices) for r in rows]
    return Table(plan.view_name or "result", out_cols, tuple(out_rows))


_IDENT_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _quote_ident(name: str) -> str:
    return name if _IDENT_RE.match(name) else '"' + name.replace('"', '""') + '"'


def _quote_value(value: str) -> str:
    return "'" + value.replace("'", "''") + "'"


def render_sql(obj: Table | QueryPlan, tables: dict[str, Table] | None = None) -> str:
    """Emit SQL text: CREATE TABLE + INSERTs for a Table, or a
    SELECT/JOIN (optionally CREATE VIEW) statement for a QueryPlan."""
    if isinstance(obj, Table):
        return _render_table_sql(obj)
    return _render_plan_sql(obj)


def _render_table_sql(table: Table) -> str:
    col_defs = []
    for c in table.columns:
        d = f"{_quote_ident(c)} VARCHAR(255)"
        if c == table.primary_key:
            d += " PRIMARY KEY"
        col_defs.append(d)
    lines = [f"CREATE TABLE {_quote_ident(table.name)} ("]
    lines.append(",\n".join("  " + d for d in col_defs))
    lines.append(");")
    if table.rows:
        cols = ", ".join(_quote_ident(c) for c in table.columns)
        lines.append("")
        lines.append(f"INSERT INTO {_quote_ident(table.name)} ({cols}) VALUES")
        tuples = [f"({', '.join(_quote_value(c) for c in row)})" for row in table.rows]
        lines.append(",\n".join(tuples) + ";")
    return "\n".join(lines)


def _render_plan_sql(plan: QueryPlan) -> str:
    select = ", ".join(_quote_ident(c) if c != "*" else c for c in plan.select)
    sql = f"SELECT {select}\nFROM {_quote_ident(plan.frm[0])}"
    if len(plan.frm) == 2 and plan.join_on:
        t1, t2 = (_quote_ident(t) for t in plan.frm)
        lcol, rcol = (_quote_ident(c) for c in plan.join_on)
        sql += f"\nJOIN {t2} ON {t1}.{lcol} = {t2}.{rcol}"
    if plan.where:
        conds = " AND ".join(f"{_quote_ident(c)} = {_quote_value(v)}" for c, v in plan.where)
        sql += f"\nWHERE {conds}"
    sql += ";"
    if plan.view_name:
        sql = f"CREATE VIEW {_quote_ident(plan.view_name)} AS\n{sql}"
    return sql


_SELECT_RE = re.compile(
    r"(?:CREATE\s+VIEW\s+(?P<view>\w+)\s+AS\s+)?"
    r"SELECT\s+(?P<select>.+?)\s+FROM\s+(?P<from>\w+)(?:\s+(?P<lalias>(?!JOIN|WHERE)\w+))?"
    r"(?:\s+JOIN\s+(?P<join>\w+)(?:\s+(?P<ralias>(?!ON)\w+))?"
    r"\s+ON\s+(?P<on_l>[\w.]+)\s*=\s*(?P<on_r>[\w.]+))?"
    r"(?:\s+WHERE\s+(?P<where>.+?))?\s*;?\s*$",
    re.I | re.S,
)


class UnparseablePlan(TableError):
    pass


def parse_select(sql: str) -> QueryPlan:
    """Parse the SELECT/JOIN/WHERE subset (as emitted by chat models)
    into a QueryPlan. Table aliases and `t.col` prefixes are accepted and
    stripped; only equality WHERE conditions joined by AND are allowed."""
    text = sql.strip()
    m = _SELECT_RE.match(text)
    if not m:
        raise UnparseablePlan(f"cannot parse SQL: {sql!r}")

    def strip_prefix(col: str) -> str:
        return col.split(".")[-1]

    select = tuple(strip_prefix(c.strip()) for c in m.group("select").split(","))
    frm = [m.group("from")]
    join_on = None
    if m.group("join"):
        frm.append(m.group("join"))
        join_on = (strip_prefix(m.group("on_l")), strip_prefix(m.group("on_r")))
    where: list[tuple[str, str]] = []
    if m.group("where"):
        for cond in re.split(r"\s+AND\s+", m.group("where"), flags=re.I):
            cm = re.match(r"^\s*([\w.]+)\s*=\s*['\"`]?([^'\"`;]*)['\"`]?\s*$", cond)
            if not cm:
                raise UnparseablePlan(f"cannot parse WHERE condition: {cond!r}")
            where.append((strip_prefix(cm.group(1)), cm.group(2)))
    return QueryPlan(
        select=select,
        frm=tuple(frm),
        join_on=join_on,
        where=tuple(where),
        view_name=m.group("view"),
    )

from .dot import (
    CallGraph,
    DotError,
    MalformedEdge,
    NotADigraph,
    QualifiedName,
    UnknownFunction,
    callees,
    callers,
    parse_dot,
    unique_modules,
)
from .spel import (
    AccessRole,
    IndexOutOfRange,
    LoopMatrix,
    RaggedMatrix,
    Section,
    SpelError,
    UnknownRole,
    loop_usage,
    parse_loop_matrix,
)
from .tables import (
    DuplicateKey,
    QueryPlan,
    RaggedRow,
    Table,
    TableError,
    UnknownColumn,
    UnknownTable,
    UnparseablePlan,
    load_csv,
    parse_select,
    query_tables,
    render_sql,
)

__all__ = [
    "AccessRole",
    "CallGraph",
    "DotError",
    "DuplicateKey",
    "IndexOutOfRange",
    "LoopMatrix",
    "MalformedEdge",
    "NotADigraph",
    "QualifiedName",
    "QueryPlan",
    "RaggedMatrix",
    "RaggedRow",
    "Section",
    "SpelError",
    "Table",
    "TableError",
    "UnknownColumn",
    "UnknownFunction",
    "UnknownRole",
    "UnknownTable",
    "UnparseablePlan",
    "callees",
    "callers",
    "load_csv",
    "loop_usage",
    "parse_dot",
    "parse_select",
    "query_tables",
    "render_sql",
    "unique_modules",
]

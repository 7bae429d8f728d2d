from .ast import (
    BadVersionTag,
    CheckQuery,
    EmptyPattern,
    FileFilter,
    FqlError,
    FqlQuery,
    Pattern,
    VersionTag,
    normalize_version,
    render_fql,
)
from .executor import (
    CheckReport,
    FeatureReport,
    Hit,
    ListEntry,
    ListReport,
    MatchOptions,
    MaxReport,
    MaxWinner,
    execute,
)
from .parser import FqlSyntaxError, parse_fql

__all__ = [
    "BadVersionTag",
    "CheckQuery",
    "CheckReport",
    "EmptyPattern",
    "FeatureReport",
    "FileFilter",
    "FqlError",
    "FqlQuery",
    "FqlSyntaxError",
    "Hit",
    "ListEntry",
    "ListReport",
    "MatchOptions",
    "MaxReport",
    "MaxWinner",
    "Pattern",
    "VersionTag",
    "execute",
    "normalize_version",
    "parse_fql",
    "render_fql",
]

from .backends import (
    CHARS_PER_TOKEN,
    BackendError,
    Capabilities,
    CompletionParams,
    GenericHttpBackend,
    MockBackend,
    estimate_tokens,
    prompt_fingerprint,
)
from .docs import DocAnswer, answer_with_context
from .lexicon import (
    DuplicateTerm,
    Lexicon,
    LexiconEntry,
    LexiconError,
    load_lexicon,
    parse_lexicon,
)
from .session import Session, SessionError, Turn
from .translate import (
    NoLexiconMatch,
    TranslationError,
    TranslationResult,
    UnknownColumnInPlan,
    build_fql_example_index,
    extract_fql,
    synthesize_fql,
    translate_to_fql,
    translate_to_table_query,
)

__all__ = [
    "BackendError",
    "CHARS_PER_TOKEN",
    "Capabilities",
    "CompletionParams",
    "DocAnswer",
    "DuplicateTerm",
    "GenericHttpBackend",
    "Lexicon",
    "LexiconEntry",
    "LexiconError",
    "MockBackend",
    "NoLexiconMatch",
    "Session",
    "SessionError",
    "TranslationError",
    "TranslationResult",
    "Turn",
    "UnknownColumnInPlan",
    "answer_with_context",
    "build_fql_example_index",
    "estimate_tokens",
    "extract_fql",
    "load_lexicon",
    "parse_lexicon",
    "prompt_fingerprint",
    "synthesize_fql",
    "translate_to_fql",
    "translate_to_table_query",
]

"""Type unification over a strongly-typed ontology.

    >>> g = Grammar.from_files("data/paper.ont", "data/paper.lex")
    >>> g.interpret("Sheba is a thief")["readings"]
    ['(E! v1 :: human)(THIEF(v1))']
"""

from ._ontic import (
    RECORD_VERSION,
    Grammar,
    LexiconError,
    Ontology,
    OntologyError,
    ParseError,
    TranslationError,
    UnknownType,
    parse_structured,
)

__all__ = [
    "RECORD_VERSION",
    "Grammar",
    "LexiconError",
    "Ontology",
    "OntologyError",
    "ParseError",
    "TranslationError",
    "UnknownType",
    "parse_structured",
]

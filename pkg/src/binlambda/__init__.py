"""Counting, ranking, sampling and typing terms of the binary lambda calculus."""
from binlambda.counting import count, count_all
from binlambda.errors import (
    AttemptsExhausted,
    DomainError,
    EmptyClass,
    FreeBoundExceeded,
    MalformedCode,
    NoTypableTerm,
    RankOutOfRange,
    TermSyntaxError,
    TrailingBits,
)
from binlambda.term import Abs, App, Index, Term, decode, encode, free_bound, is_closed, parse_term, render_term, size
from binlambda.unrank import enumerate_terms, rank, sample_uniform, sample_uniform_typable, unrank

__all__ = [
    "Abs", "App", "Index", "Term",
    "size", "encode", "decode", "free_bound", "is_closed", "parse_term", "render_term",
    "count", "count_all",
    "unrank", "rank", "enumerate_terms", "sample_uniform", "sample_uniform_typable",
    "AttemptsExhausted", "DomainError", "EmptyClass", "FreeBoundExceeded", "MalformedCode",
    "NoTypableTerm", "RankOutOfRange", "TermSyntaxError", "TrailingBits",
]

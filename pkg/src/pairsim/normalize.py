"""Text canonicalization applied before string matching.

A text is lowercased, split into tokens, each token mapped to a lemma, and
the lemmas rejoined in sorted order.  Word order and simple inflection then
no longer depress a character-level similarity score: "To buy stocks
what's the minimum" and "what is the minimum amount to buy a stock" end up
sharing most of their canonical form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .errors import ConfigError, LemmaTableError

__all__ = [
    "NormalizationConfig",
    "CanonicalText",
    "DEFAULT_CONFIG",
    "load_lemma_table",
    "tokenize",
    "lemmatize_token",
    "token_sort_normalize",
]

LEMMATIZERS = ("identity", "rule", "table")

# Strips punctuation (and any other non-word characters) from token edges
# only; internal apostrophes survive, so "what's" stays one token.
_EDGE_PUNCT = re.compile(r"^[\W_]+|[\W_]+$")


@dataclass(frozen=True)
class NormalizationConfig:
    """Knobs for :func:`token_sort_normalize`.

    ``lemmatizer`` is one of ``identity`` (tokens pass through), ``rule``
    (built-in suffix rules with an exception table), or ``table`` (lookup
    in ``lemma_table``, identity fallback).  ``token_pattern`` optionally
    replaces the default tokenizer with ``re.findall`` over the given
    regex; it must produce whitespace-free tokens or normalization stops
    being idempotent.
    """

    lowercase: bool = True
    lemmatizer: str = "rule"
    lemma_table: Mapping[str, str] | None = None
    token_pattern: str | None = None

    def __post_init__(self) -> None:
        if self.lemmatizer not in LEMMATIZERS:
            raise ConfigError(
                f"unknown lemmatizer {self.lemmatizer!r}; expected one of {LEMMATIZERS}"
            )
        if self.lemmatizer == "table" and self.lemma_table is None:
            raise ConfigError("lemmatizer 'table' requires a lemma_table")


DEFAULT_CONFIG = NormalizationConfig()


@dataclass(frozen=True)
class CanonicalText:
    """A normalized text: sorted lemma tokens and their space-joined form."""

    text: str
    tokens: tuple[str, ...]


def load_lemma_table(path: str) -> dict[str, str]:
    """Parse an external lemma table: one ``token<TAB>lemma`` per line.

    ``#`` comment lines and blank lines are skipped.  Malformed lines
    raise :class:`LemmaTableError` naming the line, so configuration
    problems surface at load time rather than per token.
    """
    table: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise LemmaTableError(str(path), line_no, "expected token<TAB>lemma")
            table[parts[0]] = parts[1]
    return table


def tokenize(text: str, config: NormalizationConfig = DEFAULT_CONFIG) -> list[str]:
    """Split on whitespace and strip edge punctuation; drops empty tokens."""
    if config.token_pattern is not None:
        return re.findall(config.token_pattern, text)
    tokens = []
    for raw in text.split():
        token = _EDGE_PUNCT.sub("", raw)
        if token:
            tokens.append(token)
    return tokens


# Irregular forms checked before the suffix rules.  Every value must be a
# fixed point of the rules (and not itself a key), otherwise normalization
# would not be idempotent.
_EXCEPTIONS = {
    "men": "man",
    "women": "woman",
    "children": "child",
    "feet": "foot",
    "teeth": "tooth",
    "mice": "mouse",
    "geese": "goose",
    "people": "person",
}

_ES_SUFFIXES = ("xes", "ches", "shes", "sses", "zes", "oes")
_UNDOUBLE = frozenset("bdfglmnprt")
_TRAILING_PUNCT = re.compile(r"[\W_]+$")


def _undouble(stem: str) -> str:
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] in _UNDOUBLE:
        return stem[:-1]
    return stem


def _strip_suffix_once(token: str) -> str:
    """Apply the highest-priority matching suffix rule, or return unchanged."""
    # Suffix stripping can expose internal punctuation at the token edge
    # ("hyq''s" -> "hyq'"); cleaning it here keeps outputs valid tokens.
    bare = _TRAILING_PUNCT.sub("", token)
    if bare != token and bare:
        return bare
    if token.endswith("'s") and len(token) > 2:
        return token[:-2]
    if token.endswith("ies") and len(token) >= 5:
        return token[:-3] + "y"
    if token.endswith(_ES_SUFFIXES):
        return token[:-2]
    if token.endswith("s") and len(token) >= 4 and not token.endswith(("ss", "us", "is")):
        return token[:-1]
    if token.endswith("ing") and len(token) >= 6:
        return _undouble(token[:-3])
    if token.endswith("ied") and len(token) >= 5:
        return token[:-3] + "y"
    if token.endswith("ed") and len(token) >= 5:
        return _undouble(token[:-2])
    return token


def _rule_lemma(token: str) -> str:
    # Iterate to a fixed point so the output of one pass never lemmatizes
    # differently on a second pass ("buildings" -> "building" -> "build").
    current = token
    while True:
        if current in _EXCEPTIONS:
            return _EXCEPTIONS[current]
        stripped = _strip_suffix_once(current)
        if stripped == current:
            return current
        current = stripped


def lemmatize_token(token: str, config: NormalizationConfig = DEFAULT_CONFIG) -> str:
    """Map one token to its lemma under the configured strategy."""
    if not token:
        raise ValueError("token must be non-empty")
    if config.lemmatizer == "identity":
        return token
    if config.lemmatizer == "rule":
        return _rule_lemma(token)
    assert config.lemma_table is not None
    return config.lemma_table.get(token, token)


def token_sort_normalize(
    text: str, config: NormalizationConfig = DEFAULT_CONFIG
) -> CanonicalText:
    """Lowercase, tokenize, lemmatize, sort and rejoin.

    The result is idempotent and invariant under any permutation of the
    input's whitespace-separated tokens.  Sorting is plain code-point
    order; no locale collation.
    """
    if config.lowercase:
        text = text.lower()
    lemmas = sorted(
        lemma
        for lemma in (lemmatize_token(token, config) for token in tokenize(text, config))
        if lemma
    )
    return CanonicalText(" ".join(lemmas), tuple(lemmas))

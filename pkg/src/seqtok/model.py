"""Core data types shared by every layer of the tokenizer.

Offsets are byte offsets into the UTF-8 encoding of the source text, never
character indices.  A token's ``text`` is the exact decoded source slice at
its span; nothing is case-folded or normalized anywhere in the pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Mapping, Optional, Tuple


class TokenKind(Enum):
    """Token categories.  WORD is the default; the rest are atomic sequences."""

    WORD = "word"
    IP = "ip"
    EMAIL = "email"
    URL = "url"
    DATE = "date"


#: The four sequence kinds that have dedicated recognizers, in a fixed order
#: used for deterministic iteration and reporting.
SPECIAL_KINDS: Tuple[TokenKind, ...] = (
    TokenKind.IP,
    TokenKind.EMAIL,
    TokenKind.URL,
    TokenKind.DATE,
)


class Action(Enum):
    """What to do with a recognized sequence."""

    PRESERVE = "preserve"
    REMOVE = "remove"


@dataclass(frozen=True, slots=True)
class Span:
    """Half-open byte range [start, end) into the UTF-8 source."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start < 0:
            raise ValueError(f"span start must be >= 0, got {self.start}")
        if self.end <= self.start:
            raise ValueError(f"span must be non-empty, got [{self.start}, {self.end})")

    def __len__(self) -> int:
        return self.end - self.start


@dataclass(frozen=True, slots=True)
class Token:
    """One output token: its kind, byte span, and exact source text."""

    kind: TokenKind
    span: Span
    text: str

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("token text must be non-empty")


@dataclass(frozen=True, slots=True)
class SequenceRule:
    """Per-kind switch: whether a sequence kind is scanned and what happens
    to its matches."""

    kind: TokenKind
    enabled: bool = True
    action: Action = Action.PRESERVE

    def __post_init__(self) -> None:
        if self.kind is TokenKind.WORD:
            raise ValueError("WORD tokens are not rule-controlled")


def _default_rules() -> Mapping[TokenKind, SequenceRule]:
    return MappingProxyType({kind: SequenceRule(kind) for kind in SPECIAL_KINDS})


@dataclass(frozen=True)
class Config:
    """Full tokenizer configuration.

    ``rules`` must contain exactly one rule per special kind.  Flags default
    to the plain preserve-everything behaviour; ``stats_enabled`` is on by
    default so a bare run reports counts.
    """

    rules: Mapping[TokenKind, SequenceRule] = field(default_factory=_default_rules)
    keep_punctuation: bool = False
    tag_output: bool = False
    output_path: Optional[str] = None
    stats_enabled: bool = True

    def __post_init__(self) -> None:
        if set(self.rules) != set(SPECIAL_KINDS):
            raise ValueError("config must hold one rule per special kind")
        for kind, rule in self.rules.items():
            if rule.kind is not kind:
                raise ValueError(f"rule filed under {kind} has kind {rule.kind}")
        # freeze the mapping so a shared Config cannot be mutated through it
        object.__setattr__(self, "rules", MappingProxyType(dict(self.rules)))

    def enabled_kinds(self) -> frozenset[TokenKind]:
        return frozenset(k for k, r in self.rules.items() if r.enabled)

    def removed_kinds(self) -> frozenset[TokenKind]:
        return frozenset(
            k for k, r in self.rules.items()
            if r.enabled and r.action is Action.REMOVE
        )


@dataclass(frozen=True, slots=True)
class StatsReport:
    """Aggregate counts over one token stream.

    ``top_terms`` holds at most ten (term, count) pairs, counts non-increasing
    and ties broken by ascending term.  Terms are case-sensitive.
    """

    total_tokens: int
    word_tokens: int
    per_kind: Mapping[TokenKind, int]
    unique_tokens: int
    top_terms: Tuple[Tuple[str, int], ...]

    def __post_init__(self) -> None:
        if set(self.per_kind) != set(SPECIAL_KINDS):
            raise ValueError("per_kind must cover exactly the special kinds")
        counts = [self.total_tokens, self.word_tokens, self.unique_tokens,
                  *self.per_kind.values()]
        if any(c < 0 for c in counts):
            raise ValueError("counts must be non-negative")
        if self.total_tokens != self.word_tokens + sum(self.per_kind.values()):
            raise ValueError("total_tokens must equal word_tokens plus sequence counts")
        if len(self.top_terms) > 10:
            raise ValueError("top_terms holds at most 10 entries")
        for (term, count), (_, nxt) in zip(self.top_terms, self.top_terms[1:]):
            if nxt > count:
                raise ValueError("top_terms counts must be non-increasing")
        for (term_a, count_a), (term_b, count_b) in zip(self.top_terms, self.top_terms[1:]):
            if count_a == count_b and term_b < term_a:
                raise ValueError("tied top_terms must be in ascending term order")
        object.__setattr__(self, "per_kind", MappingProxyType(dict(self.per_kind)))
        object.__setattr__(self, "top_terms", tuple(tuple(t) for t in self.top_terms))

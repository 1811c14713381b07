"""Token-stream statistics and their text/JSON renderings."""

from __future__ import annotations

import json
from collections import Counter
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

from .model import SPECIAL_KINDS, StatsReport, Token, TokenKind
from .recognizers import TextLike, as_bytes


class StatsFormat(Enum):
    TEXT = "text"
    JSON = "json"


def _assemble(
    counts: Counter, word_tokens: int, per_kind: Dict[TokenKind, int]
) -> StatsReport:
    top = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:10]
    total = word_tokens + sum(per_kind.values())
    return StatsReport(
        total_tokens=total,
        word_tokens=word_tokens,
        per_kind=per_kind,
        unique_tokens=len(counts),
        top_terms=tuple(top),
    )


def compute_stats(tokens: List[Token], text: Optional[TextLike] = None) -> StatsReport:
    """Summarize a token stream produced by tokenize.

    When the source text is supplied, token spans are checked to be ascending,
    disjoint and in bounds; the counts themselves use only the tokens.
    """
    if text is not None:
        n = len(as_bytes(text))
        last_end = 0
        for token in tokens:
            if token.span.start < last_end or token.span.end > n:
                raise ValueError(f"token span {token.span} out of order or bounds")
            last_end = token.span.end
    counts: Counter = Counter()
    word_tokens = 0
    per_kind = {kind: 0 for kind in SPECIAL_KINDS}
    for token in tokens:
        counts[token.text] += 1
        if token.kind is TokenKind.WORD:
            word_tokens += 1
        else:
            per_kind[token.kind] += 1
    return _assemble(counts, word_tokens, per_kind)


_KEY_WIDTH = 13  # len("unique_tokens"), the longest field name


def render_stats(report: StatsReport, format: StatsFormat = StatsFormat.TEXT) -> str:
    if format is StatsFormat.JSON:
        obj = {
            "total_tokens": report.total_tokens,
            "word_tokens": report.word_tokens,
            "ip": report.per_kind[TokenKind.IP],
            "email": report.per_kind[TokenKind.EMAIL],
            "url": report.per_kind[TokenKind.URL],
            "date": report.per_kind[TokenKind.DATE],
            "unique_tokens": report.unique_tokens,
            "top_terms": [
                {"term": term, "count": count} for term, count in report.top_terms
            ],
        }
        return json.dumps(obj, separators=(",", ":")) + "\n"
    rows: List[Tuple[str, int]] = [
        ("total_tokens", report.total_tokens),
        ("word_tokens", report.word_tokens),
        ("ip", report.per_kind[TokenKind.IP]),
        ("email", report.per_kind[TokenKind.EMAIL]),
        ("url", report.per_kind[TokenKind.URL]),
        ("date", report.per_kind[TokenKind.DATE]),
        ("unique_tokens", report.unique_tokens),
    ]
    lines = [f"{name:<{_KEY_WIDTH}} {value}" for name, value in rows]
    lines.append("top_terms:")
    for term, count in report.top_terms:
        lines.append(f"  {term} {count}")
    return "\n".join(lines) + "\n"

"""Scanning engine: special-sequence extraction, word splitting, filtering.

Two scan strategies are provided and must agree exactly.  Direct sweeps the
text left to right, consulting the recognizers at start boundaries and
jumping past each match.  Anchored first locates anchor substrings with the
fingerprint matcher, expands each anchor leftward to a candidate match, and
resolves overlaps.  Resolution order is fixed: leftmost first, then longest,
then kind priority URL > email > IP > date.
"""

from __future__ import annotations

import re
from enum import Enum
from typing import Iterable, List, Optional, Tuple

from .model import SPECIAL_KINDS, Action, Config, Span, Token, TokenKind
from .rabin_karp import AnchorMatcher
from .recognizers import (
    _BLOCKER,
    _DATE_RE,
    _EMAIL_RE,
    _IP_RE,
    _PRIORITY_RANK,
    _RECOGNIZE,
    _URL_SCHEME_RE,
    _URL_WWW_RE,
    WALK_BODY,
    TextLike,
    _char_ending_at,
    _is_word_char,
    as_bytes,
    best_match,
    is_start_boundary,
)


class ScanStrategy(Enum):
    DIRECT = "direct"
    ANCHORED = "anchored"


# Candidate prefilter for the direct scan.  The lookbehind rejects positions
# preceded by a word character or joiner, which is the ASCII part of the
# start-boundary test; the alternation is the union of the four grammars (the
# date branch is relaxed to a prefix because its backreference cannot be
# embedded).  Hits are only candidates: the boundary is re-checked for
# non-ASCII neighbours and best_match re-derives the actual span, so the
# prefilter may overshoot but never skips a real match.
_UNION_RE = re.compile(
    rb"(?<![0-9A-Za-z.@\-_%+])(?:"
    + _URL_SCHEME_RE.pattern
    + rb"|" + _URL_WWW_RE.pattern
    + rb"|" + _EMAIL_RE.pattern
    + rb"|" + _IP_RE.pattern
    + rb"|" + rb"[0-9][0-9]?[/.-][0-9]"
    + rb")"
)

#: Longest leftward expansion attempted from an anchor.
MAX_WALK = 512


def _scan_direct(
    data: bytes, enabled: frozenset
) -> List[Tuple[TokenKind, Span]]:
    out: List[Tuple[TokenKind, Span]] = []
    search = _UNION_RE.search
    pos = 0
    n = len(data)
    while pos < n:
        m = search(data, pos)
        if m is None:
            break
        p = m.start()
        if is_start_boundary(data, p):
            hit = best_match(data, p, enabled)
            if hit is not None:
                out.append(hit)
                pos = hit[1].end
                continue
        pos = p + 1
    return out


def _resolve(
    candidates: List[Tuple[TokenKind, Span]]
) -> List[Tuple[TokenKind, Span]]:
    candidates.sort(
        key=lambda c: (c[1].start, -c[1].end, _PRIORITY_RANK[c[0]])
    )
    out: List[Tuple[TokenKind, Span]] = []
    last_end = 0
    for kind, span in candidates:
        if span.start >= last_end:
            out.append((kind, span))
            last_end = span.end
    return out


def _scan_anchored(
    data: bytes, enabled: frozenset, matcher: AnchorMatcher
) -> List[Tuple[TokenKind, Span]]:
    offsets = matcher.offsets_by_kind(data, enabled)
    candidates: List[Tuple[TokenKind, Span]] = []
    for kind in SPECIAL_KINDS:
        offs = offsets.get(kind)
        if not offs:
            continue
        body = WALK_BODY[kind]
        recognize = _RECOGNIZE[kind]
        seen = set()
        for a in offs:
            # Walk left over the kind's body bytes to the nearest start
            # boundary; give up if none appears within MAX_WALK bytes.
            p = a
            ok = False
            while True:
                if p == 0:
                    ok = True
                    break
                prev = data[p - 1]
                if prev < 0x80:
                    if not _BLOCKER[prev]:
                        ok = True
                        break
                elif not _is_word_char(_char_ending_at(data, p - 1)):
                    ok = True
                    break
                if a - p >= MAX_WALK or not body[prev]:
                    break
                p -= 1
            if not ok or p in seen:
                continue
            seen.add(p)
            span = recognize(data, p)
            if span is not None:
                candidates.append((kind, span))
    return _resolve(candidates)


_DEFAULT_MATCHER = AnchorMatcher()


def scan_special(
    text: TextLike,
    enabled: Iterable[TokenKind] = SPECIAL_KINDS,
    strategy: ScanStrategy = ScanStrategy.DIRECT,
    *,
    matcher: Optional[AnchorMatcher] = None,
) -> List[Tuple[TokenKind, Span]]:
    """Non-overlapping special-sequence spans in ascending order."""
    data = as_bytes(text)
    enabled_set = frozenset(enabled)
    if not data or not enabled_set:
        return []
    if strategy is ScanStrategy.DIRECT:
        return _scan_direct(data, enabled_set)
    return _scan_anchored(data, enabled_set, matcher or _DEFAULT_MATCHER)


# --- word splitting -----------------------------------------------------------

# In pure-ASCII stretches a word is a run of [0-9A-Za-z] and punctuation is a
# run of anything else that is not whitespace.
_WORD_PUNCT_RE = re.compile(rb"([0-9A-Za-z]+)|([^\s0-9A-Za-z]+)")


def _append_words(
    data: bytes,
    start: int,
    end: int,
    keep_punctuation: bool,
    all_ascii: bool,
    out: List[Token],
) -> None:
    if start >= end:
        return
    if all_ascii or data[start:end].isascii():
        for m in _WORD_PUNCT_RE.finditer(data, start, end):
            if m.group(1) is None and not keep_punctuation:
                continue
            out.append(
                Token(TokenKind.WORD, Span(m.start(), m.end()),
                      m.group().decode("ascii"))
            )
        return
    # Mixed bytes: classify character by character, tracking byte offsets.
    chunk = data[start:end].decode("utf-8")
    run_start = start
    run_class = ""  # "w" word, "p" punctuation, "s" whitespace
    pos = start
    for ch in chunk:
        if _is_word_char(ch):
            cls = "w"
        elif ch.isspace():
            cls = "s"
        else:
            cls = "p"
        if cls != run_class:
            if run_class == "w" or (run_class == "p" and keep_punctuation):
                out.append(
                    Token(TokenKind.WORD, Span(run_start, pos),
                          data[run_start:pos].decode("utf-8"))
                )
            run_class = cls
            run_start = pos
        pos += len(ch.encode("utf-8"))
    if run_class == "w" or (run_class == "p" and keep_punctuation):
        out.append(
            Token(TokenKind.WORD, Span(run_start, pos),
                  data[run_start:pos].decode("utf-8"))
        )


def tokenize(
    text: TextLike,
    config: Optional[Config] = None,
    strategy: ScanStrategy = ScanStrategy.DIRECT,
    *,
    matcher: Optional[AnchorMatcher] = None,
) -> List[Token]:
    """Full token stream: preserved special tokens plus word tokens.

    Special matches whose rule says Remove are dropped from the stream but
    still shield their span from word splitting.
    """
    if config is None:
        config = Config()
    data = as_bytes(text)
    specials = scan_special(data, config.enabled_kinds(), strategy,
                            matcher=matcher)
    all_ascii = data.isascii()
    keep_punct = config.keep_punctuation
    tokens: List[Token] = []
    prev = 0
    for kind, span in specials:
        _append_words(data, prev, span.start, keep_punct, all_ascii, tokens)
        if config.rules[kind].action is Action.PRESERVE:
            tokens.append(
                Token(kind, span, data[span.start:span.end].decode("ascii"))
            )
        prev = span.end
    _append_words(data, prev, len(data), keep_punct, all_ascii, tokens)
    return tokens


# --- remove-mode filtering ------------------------------------------------------

_WS = frozenset(b" \t\n\r\f\v")


def filter_text(
    text: TextLike,
    config: Optional[Config] = None,
    strategy: ScanStrategy = ScanStrategy.DIRECT,
) -> TextLike:
    """Excise every Remove-action sequence; output type matches input type.

    Whitespace around an excision collapses to one space; an excision with no
    whitespace on either side leaves one space behind so that the cut can
    never splice its neighbours into a new special sequence.
    """
    if config is None:
        config = Config()
    data = as_bytes(text)
    removed = config.removed_kinds()
    if not removed:
        return text
    spans = [
        span
        for kind, span in scan_special(data, config.enabled_kinds(), strategy)
        if kind in removed
    ]
    if not spans:
        return text
    # Remove-spans separated only by whitespace act as one region, so the
    # shared gap does not survive as stray spaces.
    regions: List[List[int]] = [[spans[0].start, spans[0].end]]
    for span in spans[1:]:
        gap = data[regions[-1][1]:span.start]
        if not gap or all(b in _WS for b in gap):
            regions[-1][1] = span.end
        else:
            regions.append([span.start, span.end])
    parts: List[bytes] = []
    pos = 0
    n = len(data)
    for s, e in regions:
        lws = s
        while lws > 0 and data[lws - 1] in _WS:
            lws -= 1
        rws = e
        while rws < n and data[rws] in _WS:
            rws += 1
        if lws < s and rws > e:
            cut_start, cut_end, repl = lws, rws, b" "
        elif lws == s and rws == e:
            cut_start, cut_end, repl = s, e, b" "
        else:
            cut_start, cut_end, repl = s, e, b""
        parts.append(data[pos:cut_start])
        parts.append(repl)
        pos = cut_end
    parts.append(data[pos:])
    result = b"".join(parts)
    if isinstance(text, bytes):
        return result
    return result.decode("utf-8")


# --- rendering ------------------------------------------------------------------

_TAGS = {
    TokenKind.IP: "<IP> ",
    TokenKind.EMAIL: "<EMAIL> ",
    TokenKind.URL: "<URL> ",
    TokenKind.DATE: "<DATE> ",
}


def render_tokens(tokens: Iterable[Token], tag_output: bool = False) -> str:
    """One token per line; special tokens get a kind tag when requested."""
    lines = []
    for token in tokens:
        if tag_output and token.kind is not TokenKind.WORD:
            lines.append(_TAGS[token.kind] + token.text)
        else:
            lines.append(token.text)
    if not lines:
        return ""
    return "\n".join(lines) + "\n"

"""Rolling-fingerprint substring search and the anchor scan built on it.

Fingerprints are polynomial hashes over bytes: base 256, modulus 2^61 - 1.
The Mersenne modulus keeps intermediate products inside 128-bit integers in
any language; here it also lets the vectorized path reduce products with
61-bit rotations, because multiplying by a power of two modulo 2^61 - 1 is a
bit rotation.  Every fingerprint hit is verified byte-for-byte before it is
reported, so hash collisions can cost time but never correctness.

Texts at least ``_VECTOR_MIN`` bytes long go through a numpy path that
evaluates the same fingerprints with the same parameters; the scalar rolling
loop below is the reference and handles everything smaller.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

import numpy as np

from .model import SPECIAL_KINDS, TokenKind
from .recognizers import TextLike, as_bytes

_M61 = (1 << 61) - 1

# Texts shorter than this use the scalar loops; numpy setup costs more than
# it saves on small inputs.
_VECTOR_MIN = 1 << 15


@lru_cache(maxsize=None)
def _lead_power(base: int, modulus: int, window_len: int) -> int:
    return pow(base, window_len - 1, modulus)


@dataclass(frozen=True, slots=True)
class FingerprintParams:
    """Base and modulus of the fingerprint polynomial."""

    base: int = 256
    modulus: int = _M61

    def __post_init__(self) -> None:
        if self.base < 2 or self.modulus < 2:
            raise ValueError("base and modulus must be at least 2")

    def lead_power(self, window_len: int) -> int:
        """base ** (window_len - 1) mod modulus, cached per length."""
        return _lead_power(self.base, self.modulus, window_len)


DEFAULT_PARAMS = FingerprintParams()


def fingerprint(data: TextLike, params: FingerprintParams = DEFAULT_PARAMS) -> int:
    """Polynomial fingerprint of ``data``; empty input is a caller error."""
    raw = as_bytes(data)
    if not raw:
        raise ValueError("cannot fingerprint empty input")
    h = 0
    base, mod = params.base, params.modulus
    for b in raw:
        h = (h * base + b) % mod
    return h


def roll(
    prev: int,
    outgoing: int,
    incoming: int,
    window_len: int,
    params: FingerprintParams = DEFAULT_PARAMS,
) -> int:
    """Slide a window of ``window_len`` bytes one position to the right."""
    lead = params.lead_power(window_len)
    return ((prev - outgoing * lead) * params.base + incoming) % params.modulus


def find_all(
    pattern: TextLike, text: TextLike, params: FingerprintParams = DEFAULT_PARAMS
) -> List[int]:
    """Ascending start offsets of every occurrence, overlaps included."""
    pat = as_bytes(pattern)
    if not pat:
        raise ValueError("empty pattern")
    data = as_bytes(text)
    m, n = len(pat), len(data)
    if m > n:
        return []
    target = fingerprint(pat, params)
    base, mod = params.base, params.modulus
    lead = params.lead_power(m)
    h = fingerprint(data[:m], params)
    out = []
    if h == target and data[:m] == pat:
        out.append(0)
    for i in range(1, n - m + 1):
        h = ((h - data[i - 1] * lead) * base + data[i + m - 1]) % mod
        if h == target and data[i:i + m] == pat:
            out.append(i)
    return out


# --- vectorized fingerprint evaluation ---------------------------------------
#
# base is 2^8, so every coefficient of the polynomial is a power of two and
# multiplying by it modulo 2^61 - 1 is a rotation within 61 bits.  The sums
# are reduced lazily; operands stay well under 2^64.

_U64_M61 = np.uint64(_M61)


def _rot61(x: np.ndarray, k: int) -> np.ndarray:
    k %= 61
    if k == 0:
        return x
    low_mask = np.uint64((1 << (61 - k)) - 1)
    return ((x & low_mask) << np.uint64(k)) | (x >> np.uint64(61 - k))


def _canon61(x: np.ndarray) -> np.ndarray:
    x = (x & _U64_M61) + (x >> np.uint64(61))
    x = (x & _U64_M61) + (x >> np.uint64(61))
    return np.where(x >= _U64_M61, x - _U64_M61, x)


def _fingerprints_at(arr: np.ndarray, starts: np.ndarray, length: int) -> np.ndarray:
    """Fingerprints of the ``length``-byte windows beginning at ``starts``.

    Equivalent to calling :func:`fingerprint` on each window with the default
    params; only valid for base 256 and modulus 2^61 - 1.
    """
    acc = np.zeros(len(starts), dtype=np.uint64)
    for j in range(length):
        term = _rot61(arr[starts + j].astype(np.uint64), 8 * (length - 1 - j))
        acc += term
        acc = (acc & _U64_M61) + (acc >> np.uint64(61))
    return _canon61(acc)


# --- anchors ------------------------------------------------------------------


def _default_anchor_patterns() -> Mapping[TokenKind, FrozenSet[bytes]]:
    return MappingProxyType({
        TokenKind.IP: frozenset({b"."}),
        TokenKind.EMAIL: frozenset({b"@"}),
        TokenKind.URL: frozenset({b"http://", b"https://", b"ftp://", b"www."}),
        TokenKind.DATE: frozenset({b"/", b"-", b"."}),
    })


@dataclass(frozen=True)
class AnchorSet:
    """Literal trigger substrings per sequence kind.

    Every grammar-valid match of a kind contains at least one of its anchors,
    which is what lets the anchored scanner seed candidates from them.  URL
    anchors match ASCII-case-insensitively: schemes are case-insensitive in
    the URL grammar, so "HTTP://" must still trigger the URL recognizer.
    """

    patterns: Mapping[TokenKind, FrozenSet[bytes]] = field(
        default_factory=_default_anchor_patterns
    )

    def __post_init__(self) -> None:
        for kind, pats in self.patterns.items():
            if kind not in SPECIAL_KINDS:
                raise ValueError(f"{kind} takes no anchors")
            if not pats or any(not p for p in pats):
                raise ValueError("anchor patterns must be non-empty")
        object.__setattr__(
            self, "patterns",
            MappingProxyType({k: frozenset(v) for k, v in self.patterns.items()}),
        )


DEFAULT_ANCHORS = AnchorSet()

#: Kinds whose anchors are matched on a case-folded view of the text.
_FOLDED_KINDS = frozenset({TokenKind.URL})

_KIND_ORDER = {kind: i for i, kind in enumerate(SPECIAL_KINDS)}


class AnchorMatcher:
    """Multi-pattern searcher for one :class:`AnchorSet`.

    Patterns are grouped by byte length and each group is swept in a single
    fingerprint pass; one-byte anchors degenerate to plain byte scans, which
    is the same pass with a window of one.  Instances are immutable and safe
    to share across threads.
    """

    def __init__(
        self,
        anchors: AnchorSet = DEFAULT_ANCHORS,
        params: FingerprintParams = DEFAULT_PARAMS,
    ) -> None:
        self.anchors = anchors
        self.params = params
        # length -> fold? -> pattern -> (fingerprint, kinds)
        groups: Dict[int, Dict[bool, Dict[bytes, Tuple[int, Tuple[TokenKind, ...]]]]] = {}
        for kind, pats in anchors.patterns.items():
            fold = kind in _FOLDED_KINDS
            for pat in pats:
                per_fold = groups.setdefault(len(pat), {}).setdefault(fold, {})
                fp, kinds = per_fold.get(pat, (fingerprint(pat, params), ()))
                per_fold[pat] = (fp, kinds + (kind,))
        self._groups = groups

    # -- low-level passes --

    def _scan_byte(self, data: bytes, value: int, vector: bool) -> List[int]:
        if vector:
            arr = np.frombuffer(data, dtype=np.uint8)
            return np.nonzero(arr == value)[0].tolist()
        out = []
        i = data.find(value)
        while i >= 0:
            out.append(i)
            i = data.find(value, i + 1)
        return out

    def _scan_group_scalar(
        self, data: bytes, length: int,
        table: Dict[int, List[bytes]],
    ) -> Dict[bytes, List[int]]:
        hits: Dict[bytes, List[int]] = {pat: [] for pats in table.values() for pat in pats}
        n = len(data)
        if length > n:
            return hits
        base, mod = self.params.base, self.params.modulus
        lead = self.params.lead_power(length)
        h = fingerprint(data[:length], self.params)
        for i in range(n - length + 1):
            if i:
                h = ((h - data[i - 1] * lead) * base + data[i + length - 1]) % mod
            pats = table.get(h)
            if pats:
                window = data[i:i + length]
                for pat in pats:
                    if window == pat:
                        hits[pat].append(i)
        return hits

    def _scan_group_vector(
        self, data: bytes, length: int,
        table: Dict[int, List[bytes]],
    ) -> Dict[bytes, List[int]]:
        hits: Dict[bytes, List[int]] = {pat: [] for pats in table.values() for pat in pats}
        n = len(data)
        if length > n:
            return hits
        arr = np.frombuffer(data, dtype=np.uint8)
        leads = {pat[0] for pats in table.values() for pat in pats}
        window_starts = arr[: n - length + 1]
        mask = np.zeros(len(window_starts), dtype=bool)
        for b in leads:
            mask |= window_starts == b
        starts = np.nonzero(mask)[0]
        if len(starts) == 0:
            return hits
        fps = _fingerprints_at(arr, starts, length)
        for fp, pats in table.items():
            matched = starts[fps == np.uint64(fp)]
            for pat in pats:
                lst = hits[pat]
                for off in matched.tolist():
                    if data[off:off + length] == pat:
                        lst.append(off)
        return hits

    # -- public interface --

    def offsets_by_kind(
        self, text: TextLike, enabled: Iterable[TokenKind]
    ) -> Dict[TokenKind, List[int]]:
        """Ascending anchor offsets for each enabled kind."""
        data = as_bytes(text)
        enabled_set = frozenset(enabled)
        vector = len(data) >= _VECTOR_MIN
        folded: Optional[bytes] = None
        per_kind_parts: Dict[TokenKind, List[List[int]]] = {
            k: [] for k in enabled_set
        }
        for length in sorted(self._groups):
            for fold, pats in self._groups[length].items():
                live = {
                    pat: (fp, tuple(k for k in kinds if k in enabled_set))
                    for pat, (fp, kinds) in pats.items()
                }
                live = {p: v for p, v in live.items() if v[1]}
                if not live:
                    continue
                if fold:
                    if folded is None:
                        folded = data.lower()
                    buf = folded
                else:
                    buf = data
                if length == 1:
                    for pat, (_, kinds) in live.items():
                        offs = self._scan_byte(buf, pat[0], vector)
                        for kind in kinds:
                            per_kind_parts[kind].append(offs)
                else:
                    table: Dict[int, List[bytes]] = {}
                    for pat, (fp, _) in live.items():
                        table.setdefault(fp, []).append(pat)
                    scan = self._scan_group_vector if vector else self._scan_group_scalar
                    hits = scan(buf, length, table)
                    for pat, (_, kinds) in live.items():
                        for kind in kinds:
                            per_kind_parts[kind].append(hits[pat])
        out: Dict[TokenKind, List[int]] = {}
        for kind, parts in per_kind_parts.items():
            parts = [p for p in parts if p]
            if not parts:
                out[kind] = []
            elif len(parts) == 1:
                out[kind] = parts[0]
            else:
                out[kind] = list(heapq.merge(*parts))
        return out

    def find_anchors(
        self, text: TextLike, enabled: Iterable[TokenKind]
    ) -> List[Tuple[TokenKind, int]]:
        """All anchor occurrences of the enabled kinds, ascending by offset.

        Offset ties are ordered IP, EMAIL, URL, DATE for determinism.
        """
        by_kind = self.offsets_by_kind(text, enabled)
        flat = [
            (off, _KIND_ORDER[kind], kind)
            for kind, offs in by_kind.items()
            for off in offs
        ]
        flat.sort()
        return [(kind, off) for off, _, kind in flat]


_DEFAULT_MATCHER = AnchorMatcher()


def find_anchors(
    text: TextLike,
    enabled: Iterable[TokenKind] = SPECIAL_KINDS,
    anchors: AnchorSet = DEFAULT_ANCHORS,
    params: FingerprintParams = DEFAULT_PARAMS,
) -> List[Tuple[TokenKind, int]]:
    """Module-level convenience over :class:`AnchorMatcher`."""
    if anchors is DEFAULT_ANCHORS and params is DEFAULT_PARAMS:
        return _DEFAULT_MATCHER.find_anchors(text, enabled)
    return AnchorMatcher(anchors, params).find_anchors(text, enabled)

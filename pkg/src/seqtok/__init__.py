"""Tokenization pre-filter for IR pipelines.

Splits text into word tokens while recognizing IPv4 addresses, email
addresses, URLs and dates as single atomic tokens that can be preserved,
tagged, or removed before indexing.
"""

from .config_xml import (
    ConfigError,
    config_to_xml,
    default_config,
    load_config,
    parse_config,
)
from .model import (
    SPECIAL_KINDS,
    Action,
    Config,
    SequenceRule,
    Span,
    StatsReport,
    Token,
    TokenKind,
)
from .rabin_karp import (
    DEFAULT_ANCHORS,
    DEFAULT_PARAMS,
    AnchorMatcher,
    AnchorSet,
    FingerprintParams,
    find_all,
    find_anchors,
    fingerprint,
    roll,
)
from .recognizers import (
    best_match,
    is_start_boundary,
    recognize_date,
    recognize_email,
    recognize_ip,
    recognize_url,
)
from .stats import StatsFormat, compute_stats, render_stats
from .tokenizer import (
    ScanStrategy,
    filter_text,
    render_tokens,
    scan_special,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "Action",
    "AnchorMatcher",
    "AnchorSet",
    "Config",
    "ConfigError",
    "DEFAULT_ANCHORS",
    "DEFAULT_PARAMS",
    "FingerprintParams",
    "ScanStrategy",
    "SequenceRule",
    "Span",
    "SPECIAL_KINDS",
    "StatsFormat",
    "StatsReport",
    "Token",
    "TokenKind",
    "best_match",
    "compute_stats",
    "config_to_xml",
    "default_config",
    "filter_text",
    "find_all",
    "find_anchors",
    "fingerprint",
    "is_start_boundary",
    "load_config",
    "parse_config",
    "recognize_date",
    "recognize_email",
    "recognize_ip",
    "recognize_url",
    "render_stats",
    "render_tokens",
    "roll",
    "scan_special",
    "tokenize",
    "__version__",
]

"""XML configuration parsing.

The accepted dialect is deliberately tiny: elements, attributes and comments
only.  Namespaces are rejected, and any document carrying a DOCTYPE is
refused outright before it reaches the parser, which closes off external
entities and entity-expansion tricks.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import Dict, Optional, Union
from xml.sax.saxutils import quoteattr

from .model import SPECIAL_KINDS, Action, Config, SequenceRule, TokenKind


class ConfigError(ValueError):
    pass


_KIND_NAMES = {
    "ip": TokenKind.IP,
    "email": TokenKind.EMAIL,
    "url": TokenKind.URL,
    "date": TokenKind.DATE,
}
_ACTION_NAMES = {"preserve": Action.PRESERVE, "remove": Action.REMOVE}
_BOOL_NAMES = {"true": True, "false": False}


def default_config() -> Config:
    """All four kinds enabled and preserved; punctuation dropped; stats on."""
    return Config()


def _require_bool(value: str, where: str) -> bool:
    if value not in _BOOL_NAMES:
        raise ConfigError(f"{where} must be 'true' or 'false', got {value!r}")
    return _BOOL_NAMES[value]


def _reject_unknown_attrs(el: ET.Element, allowed: frozenset) -> None:
    for name in el.attrib:
        if name not in allowed:
            raise ConfigError(f"unknown attribute {name!r} on <{el.tag}>")


def _reject_text(el: ET.Element) -> None:
    if el.text is not None and el.text.strip():
        raise ConfigError(f"unexpected text content in <{el.tag}>")
    if el.tail is not None and el.tail.strip():
        raise ConfigError(f"unexpected text content after <{el.tag}>")


def parse_config(document: Union[str, bytes]) -> Config:
    """Parse a configuration document into a Config.

    Unspecified sequences keep the defaults (enabled, preserve).  Unknown
    elements, attributes, duplicate sequence types and non-schema text are
    all rejected.
    """
    probe = document if isinstance(document, bytes) else document.encode("utf-8")
    if b"<!doctype" in probe[:4096].lower():
        raise ConfigError("document type declarations are not allowed")
    try:
        root = ET.fromstring(document)
    except ET.ParseError as exc:
        line, column = exc.position
        raise ConfigError(
            f"malformed XML at line {line}, column {column + 1}: {exc}"
        ) from None

    for el in root.iter():
        if "{" in el.tag or any("{" in k for k in el.attrib):
            raise ConfigError("namespaces are not supported")
    if root.tag != "tokenizer-config":
        raise ConfigError(f"root element must be <tokenizer-config>, got <{root.tag}>")
    _reject_unknown_attrs(root, frozenset())
    _reject_text(root)

    rules: Dict[TokenKind, SequenceRule] = {
        kind: SequenceRule(kind) for kind in SPECIAL_KINDS
    }
    keep_punctuation = False
    tag_output = False
    stats_enabled = True
    output_path: Optional[str] = None

    seen = set()
    for child in root:
        if not isinstance(child.tag, str):
            continue  # comment
        if child.tag in seen:
            raise ConfigError(f"duplicate <{child.tag}> element")
        seen.add(child.tag)
        _reject_text(child)

        if child.tag == "sequences":
            _reject_unknown_attrs(child, frozenset())
            typed = set()
            for seq in child:
                if not isinstance(seq.tag, str):
                    continue
                if seq.tag != "sequence":
                    raise ConfigError(f"unknown element <{seq.tag}> in <sequences>")
                _reject_unknown_attrs(
                    seq, frozenset({"type", "enabled", "action"})
                )
                _reject_text(seq)
                if len(seq):
                    raise ConfigError("<sequence> takes no children")
                type_name = seq.get("type")
                if type_name is None:
                    raise ConfigError("<sequence> requires a type attribute")
                if type_name not in _KIND_NAMES:
                    raise ConfigError(f"unknown sequence type: {type_name!r}")
                if type_name in typed:
                    raise ConfigError(f"duplicate sequence type: {type_name!r}")
                typed.add(type_name)
                kind = _KIND_NAMES[type_name]
                enabled = _require_bool(
                    seq.get("enabled", "true"), f"sequence {type_name} enabled"
                )
                action_name = seq.get("action", "preserve")
                if action_name not in _ACTION_NAMES:
                    raise ConfigError(
                        f"sequence {type_name} action must be 'preserve' or "
                        f"'remove', got {action_name!r}"
                    )
                rules[kind] = SequenceRule(kind, enabled, _ACTION_NAMES[action_name])
        elif child.tag == "options":
            _reject_unknown_attrs(
                child, frozenset({"keep-punctuation", "tag-output", "stats"})
            )
            if len(child):
                raise ConfigError("<options> takes no children")
            if "keep-punctuation" in child.attrib:
                keep_punctuation = _require_bool(
                    child.attrib["keep-punctuation"], "keep-punctuation"
                )
            if "tag-output" in child.attrib:
                tag_output = _require_bool(child.attrib["tag-output"], "tag-output")
            if "stats" in child.attrib:
                stats_enabled = _require_bool(child.attrib["stats"], "stats")
        elif child.tag == "output":
            _reject_unknown_attrs(child, frozenset({"path"}))
            if len(child):
                raise ConfigError("<output> takes no children")
            output_path = child.get("path")
            if output_path is None:
                raise ConfigError("<output> requires a path attribute")
        else:
            raise ConfigError(f"unknown element <{child.tag}>")

    return Config(
        rules=rules,
        keep_punctuation=keep_punctuation,
        tag_output=tag_output,
        output_path=output_path,
        stats_enabled=stats_enabled,
    )


def load_config(path: str) -> Config:
    with open(path, "rb") as fh:
        return parse_config(fh.read())


def config_to_xml(config: Config) -> str:
    """Serialize a Config to the same schema parse_config accepts."""
    lines = ["<tokenizer-config>", "  <sequences>"]
    for kind in SPECIAL_KINDS:
        rule = config.rules[kind]
        enabled = "true" if rule.enabled else "false"
        action = rule.action.value
        lines.append(
            f'    <sequence type="{kind.value}" enabled="{enabled}" '
            f'action="{action}"/>'
        )
    lines.append("  </sequences>")
    kp = "true" if config.keep_punctuation else "false"
    tag = "true" if config.tag_output else "false"
    stats = "true" if config.stats_enabled else "false"
    lines.append(
        f'  <options keep-punctuation="{kp}" tag-output="{tag}" stats="{stats}"/>'
    )
    if config.output_path is not None:
        lines.append(f"  <output path={quoteattr(config.output_path)}/>")
    lines.append("</tokenizer-config>")
    return "\n".join(lines) + "\n"

"""Bit-exact JSON design files plus a human-oriented text rendering.

JSON is the canonical interchange: parse(emit(d)) reproduces the design
exactly, block order included.  The text format is for reading, not
parsing.
"""

from __future__ import annotations

import json

from .core import (
    Block,
    Complete,
    CompleteBipartite,
    Design,
    Explicit,
    Hexagon,
    Host,
    Kind,
    Prism,
)


class DesignFileError(ValueError):
    """A design file that does not conform to the format."""


def _host_to_obj(host: Host) -> dict:
    if isinstance(host, Complete):
        return {"type": "complete", "n": host.n}
    if isinstance(host, CompleteBipartite):
        return {
            "type": "bipartite",
            "left": sorted(host.left),
            "right": sorted(host.right),
        }
    return {"type": "explicit", "edges": [list(e) for e in host.edges]}


def _host_from_obj(obj) -> Host:
    if not isinstance(obj, dict) or "type" not in obj:
        raise DesignFileError("host must be an object with a 'type' field")
    kind = obj["type"]
    try:
        if kind == "complete":
            return Complete(int(obj["n"]))
        if kind == "bipartite":
            return CompleteBipartite(
                frozenset(int(v) for v in obj["left"]),
                frozenset(int(v) for v in obj["right"]),
            )
        if kind == "explicit":
            return Explicit(tuple((int(u), int(v)) for u, v in obj["edges"]))
    except DesignFileError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise DesignFileError(f"malformed {kind} host: {exc}") from exc
    raise DesignFileError(f"unknown host type {kind!r}")


def _block_to_obj(block: Block) -> dict:
    if isinstance(block, Hexagon):
        return {"type": "hexagon", "vertices": list(block.vertices)}
    return {"type": "prism", "triangles": [list(block.first), list(block.second)]}


def _block_from_obj(obj) -> Block:
    if not isinstance(obj, dict) or "type" not in obj:
        raise DesignFileError("block must be an object with a 'type' field")
    kind = obj["type"]
    try:
        if kind == "hexagon":
            return Hexagon(tuple(int(v) for v in obj["vertices"]))
        if kind == "prism":
            first, second = obj["triangles"]
            return Prism(
                tuple(int(v) for v in first), tuple(int(v) for v in second)
            )
    except DesignFileError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise DesignFileError(f"malformed {kind} block: {exc}") from exc
    raise DesignFileError(f"unknown block type {kind!r}")


def design_to_obj(design: Design) -> dict:
    return {
        "host": _host_to_obj(design.host),
        "kind": design.kind.value,
        "blocks": [_block_to_obj(b) for b in design.blocks],
        "leave": [list(e) for e in sorted(design.leave)],
        "padding": [list(e) for e in design.padding],
    }


def design_from_obj(obj) -> Design:
    if not isinstance(obj, dict):
        raise DesignFileError("design file must contain a JSON object")
    missing = {"host", "kind", "blocks"} - set(obj)
    if missing:
        raise DesignFileError(f"design object lacks fields: {sorted(missing)}")
    try:
        kind = Kind(obj["kind"])
    except ValueError as exc:
        raise DesignFileError(f"unknown kind {obj['kind']!r}") from exc
    host = _host_from_obj(obj["host"])
    blocks = tuple(_block_from_obj(b) for b in obj["blocks"])
    try:
        leave = frozenset(
            (int(u), int(v)) for u, v in obj.get("leave", [])
        )
        padding = tuple((int(u), int(v)) for u, v in obj.get("padding", []))
    except (TypeError, ValueError) as exc:
        raise DesignFileError(f"malformed leave or padding: {exc}") from exc
    try:
        return Design(host=host, kind=kind, blocks=blocks, leave=leave, padding=padding)
    except ValueError as exc:
        raise DesignFileError(str(exc)) from exc


def dumps_design(design: Design) -> str:
    return json.dumps(design_to_obj(design), indent=2) + "\n"


def loads_design(text: str) -> Design:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DesignFileError(f"not valid JSON: {exc}") from exc
    return design_from_obj(obj)


def save_design(design: Design, path) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        fp.write(dumps_design(design))


def load_design(path) -> Design:
    with open(path, encoding="utf-8") as fp:
        return loads_design(fp.read())


def _host_text(host: Host) -> str:
    if isinstance(host, Complete):
        return f"K_{host.n}"
    if isinstance(host, CompleteBipartite):
        return f"K_{{{len(host.left)},{len(host.right)}}}"
    return f"graph on {len(host.edges)} listed edges"


def render_text(design: Design) -> str:
    """Readable one-block-per-line rendering; not meant to be parsed back."""
    lines = [f"{design.kind.value} of {_host_text(design.host)}"]
    lines.append(
        f"blocks: {design.hexagon_count} hexagons, {design.prism_count} prisms"
    )
    for block in design.blocks:
        if isinstance(block, Hexagon):
            lines.append("  hexagon (" + ", ".join(map(str, block.vertices)) + ")")
        else:
            first = ", ".join(map(str, block.first))
            second = ", ".join(map(str, block.second))
            lines.append(f"  prism [{first}; {second}]")
    if design.leave:
        pairs = " ".join(f"{{{u},{v}}}" for u, v in sorted(design.leave))
        lines.append(f"leave ({len(design.leave)} edges): {pairs}")
    if design.padding:
        pairs = " ".join(f"{{{u},{v}}}" for u, v in design.padding)
        lines.append(f"padding ({len(design.padding)} edges): {pairs}")
    return "\n".join(lines) + "\n"

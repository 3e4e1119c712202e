"""Text and JSON formats for maps and generating sets, plus SVG graphs.

Plain format: whitespace separated ``x,y`` nodes, e.g.
``0,0 1/2,1/4 3/4,1/2 1,1``.  JSON: a map document is
``{"name": ..., "nodes": [["p/q", "p/q"], ...]}`` and a generating set is
an array of map documents.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from html import escape
from typing import Sequence

from .errors import ParseError
from .numeric import fmt_rat, rat
from .orbitals import GenSet
from .plmap import PLMap, make_map

_TOKEN = re.compile(r"\S+")


def parse_map(text: str) -> PLMap:
    nodes = []
    for lineno, line in enumerate(text.splitlines() or [""], start=1):
        line = line.split("#", 1)[0]
        for m in _TOKEN.finditer(line):
            tok = m.group()
            parts = tok.split(",")
            if len(parts) != 2:
                raise ParseError(f"expected x,y but got {tok!r}", lineno, m.start() + 1)
            try:
                nodes.append((rat(parts[0]), rat(parts[1])))
            except ParseError:
                raise ParseError(f"bad rational in {tok!r}", lineno, m.start() + 1) from None
    if not nodes:
        raise ParseError("no nodes", 1, 1)
    return make_map(nodes)


def serialize_map(f: PLMap) -> str:
    return " ".join(f"{fmt_rat(x)},{fmt_rat(y)}" for x, y in f.nodes)


@dataclass
class MapDocument:
    name: str
    nodes: list[tuple[str, str]]

    @classmethod
    def from_map(cls, name: str, f: PLMap) -> MapDocument:
        return cls(name, [(fmt_rat(x), fmt_rat(y)) for x, y in f.nodes])

    def to_map(self) -> PLMap:
        return make_map(self.nodes)

    def to_json(self) -> dict:
        return {"name": self.name, "nodes": [list(p) for p in self.nodes]}

    @classmethod
    def from_json(cls, obj) -> MapDocument:
        if not isinstance(obj, dict) or "nodes" not in obj:
            raise ParseError("map document needs a 'nodes' field")
        nodes = []
        for p in obj["nodes"]:
            if not (isinstance(p, list) and len(p) == 2):
                raise ParseError(f"node must be a pair, got {p!r}")
            nodes.append((str(p[0]), str(p[1])))
        return cls(str(obj.get("name", "")), nodes)


def genset_to_json(G: GenSet) -> list[dict]:
    return [MapDocument.from_map(lbl, f).to_json() for lbl, f in zip(G.labels, G.generators)]


def genset_from_json(obj, name: str = "G") -> GenSet:
    if isinstance(obj, dict):
        obj = [obj]
    if not isinstance(obj, list):
        raise ParseError("generating set must be a JSON array of map documents")
    docs = [MapDocument.from_json(o) for o in obj]
    labels = [d.name or f"g{i + 1}" for i, d in enumerate(docs)]
    return GenSet(name, [d.to_map() for d in docs], labels)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def load_genset(text: str, name: str = "G") -> GenSet:
    """Read either JSON or plain text (one map per non-empty line)."""
    stripped = text.lstrip()
    if stripped.startswith(("[", "{")):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        return genset_from_json(obj, name)
    maps = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        try:
            maps.append(parse_map(body))
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" (line", 1)[0], lineno, exc.column) from None
    if not maps:
        raise ParseError("no maps in input")
    return GenSet(name, maps)


# --- SVG ------------------------------------------------------------------

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]


@dataclass
class SvgOptions:
    size: int = 400
    margin: int = 30
    stroke_width: float = 2.0
    legend: bool = True
    title: str = ""
    colors: list[str] = field(default_factory=lambda: list(PALETTE))


def _px(v: Fraction) -> str:
    # fixed 3 decimals keeps output byte-stable
    return f"{float(v):.3f}"


def render_svg(maps: Sequence[tuple[str, PLMap]], options: SvgOptions | None = None) -> str:
    """Graphs of ``maps`` over the unit square, one polyline each.

    Exact node lists are kept in a ``data-nodes`` attribute so the picture
    can be traced back to the maps that produced it.
    """
    if not maps:
        raise ValueError("render_svg needs at least one map")
    opt = options or SvgOptions()
    s, m = opt.size, opt.margin
    legend_h = 18 * len(maps) + 10 if opt.legend else 0
    width, height = s + 2 * m, s + 2 * m + legend_h

    def X(x):
        return _px(m + s * Fraction(x))

    def Y(y):
        return _px(m + s - s * Fraction(y))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if opt.title:
        out.append(f"  <title>{escape(opt.title)}</title>")
    out.append(
        f'  <rect class="frame" x="{m}" y="{m}" width="{s}" height="{s}" fill="none" stroke="#000" stroke-width="1"/>'
    )
    out.append(
        f'  <line class="diagonal" x1="{X(0)}" y1="{Y(0)}" x2="{X(1)}" y2="{Y(1)}" '
        'stroke="#888" stroke-width="1" stroke-dasharray="4,4"/>'
    )
    for i, (name, f) in enumerate(maps):
        color = opt.colors[i % len(opt.colors)]
        pts = " ".join(f"{X(x)},{Y(y)}" for x, y in f.nodes)
        exact = " ".join(f"{x},{y}" for x, y in f.nodes)
        out.append(
            f'  <polyline class="graph" data-name="{escape(name)}" data-nodes="{exact}" points="{pts}" '
            f'fill="none" stroke="{color}" stroke-width="{opt.stroke_width}"/>'
        )
    if opt.legend:
        for i, (name, _) in enumerate(maps):
            color = opt.colors[i % len(opt.colors)]
            y = s + 2 * m + 18 * i + 4
            out.append(
                f'  <line class="legend-swatch" x1="{m}" y1="{y + 6}" x2="{m + 20}" y2="{y + 6}" '
                f'stroke="{color}" stroke-width="{opt.stroke_width}"/>'
            )
            out.append(
                f'  <text class="legend" x="{m + 28}" y="{y + 10}" font-family="sans-serif" '
                f'font-size="12">{escape(name)}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"

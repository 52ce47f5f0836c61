"""Classification graph (cover -> base, labelled by Z2-index) and its renderings."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from .catalog import IDS, entry
from .covers import CoverReport, double_cover
from .equivalence import partition_epimorphisms
from .fpgroup import Z2Char, z2_characters

FORMATS = ("table", "json", "dot")


@dataclass(frozen=True)
class Edge:
    cover: str
    base: str
    index: int
    phis: Tuple[Z2Char, ...]

    def key(self) -> Tuple[str, str, int]:
        return (self.cover, self.base, self.index)


@lru_cache(maxsize=None)
def all_reports() -> Tuple[CoverReport, ...]:
    return tuple(double_cover(mid, phi) for mid in IDS for phi in z2_characters(entry(mid).presentation))


@lru_cache(maxsize=None)
def full_classification() -> Tuple[Edge, ...]:
    """One edge per equivalence class of epimorphisms, per base manifold."""
    edges = []
    for base in IDS:
        for cls in partition_epimorphisms(base):
            r = double_cover(base, cls[0])
            edges.append(Edge(r.cover, base, r.index, tuple(cls)))
    return tuple(edges)


def edge_multiset(edges) -> Counter:
    return Counter(e.key() for e in edges)


def source_degrees(edges) -> Tuple[int, ...]:
    c = Counter(e.cover for e in edges)
    return tuple(c[m] for m in IDS)


def reference_number(mid: str, phi: Z2Char) -> int | None:
    refs = entry(mid).reference_epis
    return refs.index(tuple(phi)) + 1 if tuple(phi) in refs else None


def render_table(edges) -> str:
    by_cover: Dict[str, List[Edge]] = {m: [] for m in IDS}
    for e in edges:
        by_cover[e.cover].append(e)
    lines = []
    for part, mid in zip("ABCDEFGHIJ", IDS):
        es = sorted(by_cover[mid], key=lambda e: (IDS.index(e.base), e.index))
        if not es:
            lines.append(f"{part}) {mid}: no involution")
            continue
        word = "involution" if len(es) == 1 else "involutions"
        lines.append(f"{part}) {mid} admits {len(es)} free {word}")
        for k, e in enumerate(es, 1):
            refs = ",".join(str(k) for k in sorted(reference_number(e.base, p) for p in e.phis))
            lines.append(
                f"    tau_{k}: quotient {e.base:<3} Z2-index {e.index}   (phi_{{{refs}}} on {e.base})"
            )
    return "\n".join(lines)


def render_dot(edges) -> str:
    lines = ["digraph flat_seifert {", "  rankdir=LR;"]
    for mid in IDS:
        lines.append(f'  {mid} [label="{mid}"];')
    for e in edges:
        lines.append(f'  {e.cover} -> {e.base} [label="{e.index}"];')
    lines.append("}")
    return "\n".join(lines)


def render_json(edges) -> str:
    payload = {
        "edges": [
            {"cover": e.cover, "base": e.base, "index": e.index, "phis": [list(p) for p in e.phis]}
            for e in edges
        ],
        "covers": [r.to_json() for r in all_reports()],
    }
    return json.dumps(payload, indent=2)


def edges_from_json(text: str) -> List[Edge]:
    data = json.loads(text)
    return [
        Edge(d["cover"], d["base"], int(d["index"]), tuple(tuple(p) for p in d["phis"]))
        for d in data["edges"]
    ]


def emit(fmt: str) -> str:
    edges = full_classification()
    if fmt == "table":
        return render_table(edges)
    if fmt == "json":
        return render_json(edges)
    if fmt == "dot":
        return render_dot(edges)
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")

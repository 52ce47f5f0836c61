"""Command-line entry point."""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import List, Optional, Sequence

from .borsuk_ulam import OddMultiplicityWarning, decide
from .catalog import IDS, AmbiguousOrUnknown, catalog, entry, identify
from .corpus import run_checks
from .covers import double_cover
from .equivalence import partition_epimorphisms
from .fpgroup import Z2Char, abelianization, z2_characters
from .report import FORMATS, emit, reference_number
from .seifert import (
    SeifertInvariants,
    build_presentation,
    derived_invariants,
    euler_number,
    is_flat,
    orbifold_euler_characteristic,
)


def _fmt_char(phi: Sequence[int], names: Sequence[str]) -> str:
    return " ".join(f"{n}={x}" for n, x in zip(names, phi))


def _ref_label(mid: str, phi: Z2Char) -> str:
    k = reference_number(mid, phi)
    return f"phi_{k}" if k else "-"


def _epi(mid: str, k: int) -> Z2Char:
    chars = z2_characters(entry(mid).presentation)
    if not 1 <= k <= len(chars):
        raise SystemExit(f"error: {mid} has {len(chars)} epimorphisms; --epi must be in 1..{len(chars)}")
    return chars[k - 1]


def _manifold(mid: str) -> str:
    if mid not in IDS:
        raise SystemExit(f"error: unknown manifold {mid!r}; expected one of {', '.join(IDS)}")
    return mid


def cmd_catalog(args) -> int:
    if args.json:
        print(json.dumps([e.to_json() for e in catalog()], indent=2))
        return 0
    for e in catalog():
        kind = "orientable" if e.orientable else "non-orientable"
        forms = "  =  ".join(str(f) for f in e.forms)
        print(f"{e.id:<3} {kind:<15} H1 = {str(e.h1):<16} {forms}")
    return 0


def cmd_epis(args) -> int:
    mid = _manifold(args.id)
    p = entry(mid).presentation
    print(f"{mid}: {p.format()}")
    for k, phi in enumerate(z2_characters(p), 1):
        print(f"  {k}: {_fmt_char(phi, p.generator_names):<30} ref {_ref_label(mid, phi)}")
    return 0


def cmd_cover(args) -> int:
    mid = _manifold(args.id)
    phi = _epi(mid, args.epi)
    r = double_cover(mid, phi)
    names = entry(mid).presentation.generator_names
    print(f"base      {mid}   phi = {_fmt_char(phi, names)}  (ref {_ref_label(mid, phi)})")
    print(f"kernel    {r.cover_presentation.format()}")
    print(f"H1        {r.cover_h1}")
    print(f"orientable {r.cover_orientable}")
    print(f"cover     {r.cover}")
    return 0


def cmd_index(args) -> int:
    mid = _manifold(args.id)
    phi = _epi(mid, args.epi)
    d = decide(mid, phi)
    names = entry(mid).presentation.generator_names
    print(f"{mid}  phi = {_fmt_char(phi, names)}  (ref {_ref_label(mid, phi)})")
    if d.lift is not None:
        print(f"index 1: integral lift psi = {_fmt_char(d.lift, names)}")
    else:
        print(f"index {d.index}: no integral lift, cup-cube = {d.cube}")
    return 0


def cmd_classes(args) -> int:
    mid = _manifold(args.id)
    chars = z2_characters(entry(mid).presentation)
    for cls in partition_epimorphisms(mid):
        r = double_cover(mid, cls[0])
        ks = ", ".join(str(chars.index(c) + 1) for c in cls)
        refs = ", ".join(_ref_label(mid, c) for c in cls)
        print(f"{{{ks}}}  ({refs})  cover {r.cover}  index {r.index}")
    return 0


def cmd_graph(args) -> int:
    print(emit(args.format))
    return 0


def analyze(si: SeifertInvariants) -> dict:
    p = build_presentation(si)
    inv = derived_invariants(si)
    flat = is_flat(si)
    out = {
        "input": si.to_json(),
        "symbol": str(si),
        "presentation": p.format(),
        "h1": str(abelianization(p)),
        "orientable": si.orientable,
        "derived": {"a": inv.a, "c": inv.c, "d": inv.d},
        "orbifold_euler_characteristic": str(orbifold_euler_characteristic(si)),
        "flat": flat,
        "epimorphisms": [],
    }
    if si.orientable:
        out["euler_number"] = str(euler_number(si))
    if flat:
        try:
            out["identified_as"] = identify(abelianization(p), si.orientable)
        except AmbiguousOrUnknown:
            out["identified_as"] = None
    for k, phi in enumerate(z2_characters(p), 1):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", OddMultiplicityWarning)
            d = decide(si, phi)
        rec = {
            "k": k,
            "phi": list(phi),
            "cup_cube": d.cube,
            "index": d.index,
            "lift": list(d.lift) if d.lift is not None else None,
        }
        if caught:
            rec["warnings"] = [str(w.message) for w in caught]
        if flat:
            r = double_cover(si, phi, strict=False)
            rec["cover"] = r.cover
            rec["cover_h1"] = str(r.cover_h1)
            rec["cover_orientable"] = r.cover_orientable
        out["epimorphisms"].append(rec)
    return out


def cmd_analyze(args) -> int:
    with open(args.input) as fh:
        data = json.load(fh)
    items = data if isinstance(data, list) else [data]
    try:
        results = [analyze(SeifertInvariants.from_json(d)) for d in items]
    except (ValueError, TypeError, KeyError) as exc:
        raise SystemExit(f"error: invalid Seifert invariants: {exc}")
    print(json.dumps(results if isinstance(data, list) else results[0], indent=2))
    return 0


def cmd_check(args) -> int:
    results = run_checks()
    for r in results:
        if r.passed and args.quiet:
            continue
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed} passed, {failed} failed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="flatseifert", description="Free involutions on flat Seifert 3-manifolds.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("catalog", help="list the ten flat Seifert manifolds")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("epis", help="epimorphisms onto Z2 in lexicographic order")
    s.add_argument("id")
    s.set_defaults(func=cmd_epis)

    for name, func, text in (
        ("cover", cmd_cover, "double cover defined by the k-th epimorphism"),
        ("index", cmd_index, "Z2-index of the k-th epimorphism"),
    ):
        s = sub.add_parser(name, help=text)
        s.add_argument("id")
        s.add_argument("--epi", type=int, required=True, metavar="K", help="1-based, as listed by `epis`")
        s.set_defaults(func=func)

    s = sub.add_parser("classes", help="equivalence classes of epimorphisms")
    s.add_argument("id")
    s.set_defaults(func=cmd_classes)

    s = sub.add_parser("graph", help="full classification graph")
    s.add_argument("--format", choices=FORMATS, default="table")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("analyze", help="analyze Seifert invariants read from JSON")
    s.add_argument("--input", required=True, metavar="FILE")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("check", help="run the acceptance corpus; nonzero exit on any mismatch")
    s.add_argument("-q", "--quiet", action="store_true", help="print failures only")
    s.set_defaults(func=cmd_check)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

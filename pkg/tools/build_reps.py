"""Search for affine representations of the ten flat manifold groups.

For every generator we try a few finite-order linear parts (in lattice
coordinates, h is always the unit translation along z), solve the relator
equations for the translation parts, and keep the first solution whose image
has rank-3 translations.  The output is pasted into catalog.py as frozen data.

    python tools/build_reps.py
"""

from __future__ import annotations

import itertools
import json
import random
import sys

import sympy as sp

sys.path.insert(0, "src")

from flatseifert.affine import AffineIsometry, eval_word, holonomy_group, translation_rank  # noqa: E402
from flatseifert.catalog import PRIMARY_FORMS  # noqa: E402
from flatseifert.seifert import build_presentation  # noqa: E402


def ext(m2, z=1):
    return [[m2[0][0], m2[0][1], 0], [m2[1][0], m2[1][1], 0], [0, 0, z]]


NEG = [[-1, 0], [0, -1]]
SQ4 = [[0, -1], [1, 0]]
HEX6 = [[0, -1], [1, 1]]


def mpow(m, k):
    out = sp.eye(2)
    for _ in range(k):
        out = out * sp.Matrix(m)
    return out.tolist()


def rotation_candidates(a, hexagonal):
    if a == 2:
        return [ext(NEG)]
    if hexagonal:
        base = HEX6
        step = {3: 2, 6: 1}[a]
        return [ext(mpow(base, step)), ext(mpow(base, 6 - step))]
    return [ext(SQ4), ext(mpow(SQ4, 3))]


# Base-reversing parts first; the identity is only right for an orientable base.
FIBRE_KEEP = [[[1, 0, 0], [0, -1, 0], [0, 0, 1]], [[-1, 0, 0], [0, 1, 0], [0, 0, 1]],
              [[-1, 0, 0], [0, -1, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]]]
IDENTITY = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
FIBRE_FLIP = [[[1, 0, 0], [0, -1, 0], [0, 0, -1]], [[-1, 0, 0], [0, 1, 0], [0, 0, -1]],
              [[1, 0, 0], [0, 1, 0], [0, 0, -1]], [[-1, 0, 0], [0, -1, 0], [0, 0, -1]]]


def sym_eval(lins, trans, word):
    L = sp.eye(3)
    t = sp.zeros(3, 1)
    for g, e in word.letters:
        Lg, tg = sp.Matrix(lins[g]), trans[g]
        if e < 0:
            Lg, tg = Lg.inv(), -Lg.inv() * tg
        for _ in range(abs(e)):
            # apply current, then g
            L, t = Lg * L, Lg * t + tg
    return L, t


def search(name, si, seed=0):
    rng = random.Random(seed)
    pres = build_presentation(si)
    n, m = si.n, si.n_base_gens
    hexagonal = any(a in (3, 6) for a, _ in si.pairs)
    cands = [rotation_candidates(a, hexagonal) for a, _ in si.pairs]
    for e in si.fibre_signs():
        if si.base_orientable and e == 1:
            cands.append([IDENTITY])
        else:
            cands.append(FIBRE_KEEP if e == 1 else FIBRE_FLIP)
    cands.append([IDENTITY])
    for lins in itertools.product(*cands):
        syms = []
        trans = []
        for g in range(pres.ngens):
            if g == n + m:
                trans.append(sp.Matrix([0, 0, 1]))
                continue
            xs = sp.symbols(f"t{g}_0:3")
            syms.extend(xs)
            trans.append(sp.Matrix(xs))
        eqs = []
        ok = True
        for r in pres.relators:
            L, t = sym_eval(lins, trans, r)
            if L != sp.eye(3):
                ok = False
                break
            eqs.extend(list(t))
        if not ok:
            continue
        sol = sp.linsolve(eqs, syms)
        if not sol:
            continue
        (gen,) = sol
        free = sorted(set().union(*[x.free_symbols for x in gen]), key=str)
        for attempt in range(40):
            if attempt == 0:
                vals = {f: 0 for f in free}
            else:
                vals = {f: sp.Rational(rng.randint(-2, 2), rng.choice([1, 2, 4])) for f in free}
            concrete = [x.subs(vals) for x in gen]
            rep = []
            it = iter(concrete)
            for g in range(pres.ngens):
                if g == n + m:
                    rep.append(AffineIsometry.translation_by([0, 0, 1]))
                else:
                    rep.append(AffineIsometry.make(lins[g], [str(next(it)) for _ in range(3)]))
            assert all(eval_word(rep, r).is_identity() for r in pres.relators)
            holonomy_group(rep)
            if translation_rank(rep) == 3:
                return rep
    raise RuntimeError(f"no representation found for {name}")


def main():
    out = {}
    for name, si in PRIMARY_FORMS.items():
        rep = search(name, si)
        out[name] = [(r.to_json()["linear"], r.to_json()["translation"]) for r in rep]
        print(name, file=sys.stderr)
    print(json.dumps(out, indent=None))


if __name__ == "__main__":
    main()

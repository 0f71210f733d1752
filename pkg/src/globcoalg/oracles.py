"""Brute-force reference computations, kept independent of the main code.

Nothing here imports the chain, μ or closure machinery: simplices are
tuples, chains are plain dicts, μ-elements are nested tuples, and the
closure is a naive all-pairs saturation run in rounds.  The acceptance
suite compares the library against these.
"""
from __future__ import annotations

from itertools import combinations, product


# -- simplicial chains as dicts ---------------------------------------------------

def simplex_boundary(sigma: tuple) -> dict:
    """Alternating sum of faces: ∂[v₀…vₙ] = Σ (−1)^j [v₀…v̂ⱼ…vₙ]."""
    if len(sigma) <= 1:
        return {}
    return {sigma[:j] + sigma[j + 1:]: (-1) ** j for j in range(len(sigma))}


def _add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
        if out[k] == 0:
            del out[k]
    return out


def _boundary_of(chain: dict) -> dict:
    out: dict = {}
    for sigma, v in chain.items():
        for tau, w in simplex_boundary(sigma).items():
            out[tau] = out.get(tau, 0) + v * w
    return {k: v for k, v in out.items() if v}


def _freeze(chain: dict) -> frozenset:
    return frozenset((k, v) for k, v in chain.items() if v)


# -- μ-elements as nested tuples --------------------------------------------------
# An element is a tuple of (minus, plus) pairs of frozensets of (cell, coeff),
# trailing zero pairs dropped.

def _trim(pairs: list) -> tuple:
    while pairs and not pairs[-1][0] and not pairs[-1][1]:
        pairs.pop()
    return tuple(pairs)


def _entry(x: tuple, k: int, side: int) -> frozenset:
    return x[k][side] if k < len(x) else frozenset()


def _src(x: tuple, m: int) -> tuple:
    if m >= len(x) - 1:
        return x
    return _trim([x[k] for k in range(m)] + [(x[m][0], x[m][0])])


def _tgt(x: tuple, m: int) -> tuple:
    if m >= len(x) - 1:
        return x
    return _trim([x[k] for k in range(m)] + [(x[m][1], x[m][1])])


def _lin(x: tuple, y: tuple, z: tuple) -> tuple:
    """x + y − z entrywise."""
    n = max(len(x), len(y), len(z))
    pairs = []
    for k in range(n):
        pair = []
        for side in (0, 1):
            acc = _add(dict(_entry(x, k, side)), dict(_entry(y, k, side)))
            acc = _add(acc, dict(_entry(z, k, side)), -1)
            pair.append(_freeze(acc))
        pairs.append(tuple(pair))
    return _trim(pairs)


def steiner_atom_oracle(sigma: tuple) -> tuple:
    """Atom of a simplex by the ± recursion, on raw dicts."""
    n = len(sigma) - 1
    plus = {n: {sigma: 1}}
    minus = {n: {sigma: 1}}
    for i in range(n - 1, -1, -1):
        dp = _boundary_of(plus[i + 1])
        dm = _boundary_of(minus[i + 1])
        plus[i] = {k: v for k, v in dp.items() if v > 0}
        minus[i] = {k: -v for k, v in dm.items() if v < 0}
    return _trim([(_freeze(minus[i]), _freeze(plus[i])) for i in range(n + 1)])


def closure_oracle(generators, limit: int = 10_000) -> set:
    """Saturate under s_m, t_m and ∘_m by repeated all-pairs rounds."""
    cells = set(generators)
    while True:
        fresh = set()
        current = list(cells)
        for x in current:
            for m in range(len(x) - 1):
                fresh.add(_src(x, m))
                fresh.add(_tgt(x, m))
        for x in current:
            for y in current:
                for m in range(max(len(x), len(y)) - 1):
                    s = _src(x, m)
                    if s == _tgt(y, m):
                        fresh.add(_lin(x, y, s))
        fresh -= cells
        if not fresh:
            return cells
        cells |= fresh
        if len(cells) > limit:
            raise RuntimeError(f"closure oracle exceeded {limit} elements")


def oriental_count_oracle(n: int) -> int:
    vertices = tuple(range(n + 1))
    simplices = [c for r in range(1, n + 2) for c in combinations(vertices, r)]
    return len(closure_oracle(steiner_atom_oracle(s) for s in simplices))


def as_oracle_element(m) -> tuple:
    """Convert a library MuElement to the oracle's representation."""
    return tuple(
        (_freeze(dict(cm.items())), _freeze(dict(cp.items()))) for cm, cp in m.pairs()
    )


# -- 𝔽₂ cohomology of a small simplicial complex by exhaustion ----------------------

def _closure(maximal) -> list:
    faces = set()
    for s in maximal:
        s = tuple(sorted(s))
        for r in range(1, len(s) + 1):
            faces.update(combinations(s, r))
    return sorted(faces, key=lambda f: (len(f), f))


def _cochain_coboundary(alpha: dict, higher: list) -> frozenset:
    """δα on the simplices of ``higher``; α is {simplex: 1}, result its support."""
    return frozenset(
        tau for tau in higher
        if sum(alpha.get(tau[:j] + tau[j + 1:], 0) for j in range(len(tau))) % 2
    )


def front_back_cup(alpha: frozenset, beta: frozenset, p: int, top: list) -> frozenset:
    """(α⌣β)(σ) = α(σ[0..p]) β(σ[p..]) over 𝔽₂, the textbook front/back formula."""
    return frozenset(s for s in top if s[:p + 1] in alpha and s[p:] in beta)


def square_of_degree_one_generator(maximal) -> dict:
    """Exhaustive reference for Sq¹ on H¹ of a complex with H¹ = 𝔽₂.

    Enumerates every 1-cochain, keeps the cocycles, quotients by every
    coboundary, squares each non-trivial class with the front/back cup
    product (Sq¹ = cup square in degree one) and tests the result against
    every 2-coboundary.
    """
    faces = _closure(maximal)
    verts = [f for f in faces if len(f) == 1]
    edges = [f for f in faces if len(f) == 2]
    tris = [f for f in faces if len(f) == 3]
    tets = [f for f in faces if len(f) == 4]
    cocycles = []
    for bits in product((0, 1), repeat=len(edges)):
        alpha = {e: 1 for e, b in zip(edges, bits) if b}
        if not _cochain_coboundary(alpha, tris):
            cocycles.append(frozenset(alpha))
    cob1 = set()
    for bits in product((0, 1), repeat=len(verts)):
        beta = {v: 1 for v, b in zip(verts, bits) if b}
        cob1.add(_cochain_coboundary(beta, edges))
    cob2 = set()
    for bits in product((0, 1), repeat=len(edges)):
        beta = {e: 1 for e, b in zip(edges, bits) if b}
        cob2.add(_cochain_coboundary(beta, tris))
    nontrivial = [a for a in cocycles if a not in cob1]
    squares = {front_back_cup(a, a, 1, tris) for a in nontrivial}
    cocycles2 = set()
    for bits in product((0, 1), repeat=len(tris)):
        gamma = {t: 1 for t, b in zip(tris, bits) if b}
        if not _cochain_coboundary(gamma, tets):
            cocycles2.add(frozenset(gamma))
    h1 = len(cocycles).bit_length() - 1 - (len(cob1).bit_length() - 1)
    h2 = len(cocycles2).bit_length() - 1 - (len(cob2).bit_length() - 1)
    return {
        "h1": h1,
        "h2": h2,
        "square_nonzero": all(s not in cob2 for s in squares),
        "squares_cohomologous": all(
            frozenset(a ^ b) in cob2 for a in squares for b in squares
        ),
        "witness": sorted(min(squares, key=lambda s: (len(s), sorted(s)))) if squares else [],
    }

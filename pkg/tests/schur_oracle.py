"""Independent Schur-calculus oracle for cross-checking the product engine.

Schur polynomials are produced by brute-force enumeration of semistandard
tableaux, multiplied as ordinary polynomials, and expanded back in the
Schur basis by peeling the lexicographically leading monomial.  Nothing
here touches the package's Littlewood-Richardson code.
"""

from __future__ import annotations

from functools import lru_cache

Poly = dict[tuple[int, ...], int]


def _fillings(shape: tuple[int, ...], nvars: int):
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    grid = [[0] * row for row in shape]

    def rec(k: int):
        if k == len(cells):
            yield [row[:] for row in grid]
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, nvars + 1):
            grid[i][j] = v
            yield from rec(k + 1)

    yield from rec(0)


@lru_cache(maxsize=None)
def schur_poly(shape: tuple[int, ...], nvars: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    shape = tuple(x for x in shape if x)
    if len(shape) > nvars:
        return ()
    acc: Poly = {}
    for filling in _fillings(shape, nvars):
        expo = [0] * nvars
        for row in filling:
            for v in row:
                expo[v - 1] += 1
        key = tuple(expo)
        acc[key] = acc.get(key, 0) + 1
    return tuple(sorted(acc.items()))


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            out[key] = out.get(key, 0) + c1 * c2
    return out


def schur_expand(poly: Poly, nvars: int) -> dict[tuple[int, ...], int]:
    """Expand a symmetric polynomial in the Schur basis by leading-monomial peel."""
    work = {e: c for e, c in poly.items() if c}
    out: dict[tuple[int, ...], int] = {}
    while work:
        lead = max(work)
        assert all(a >= b for a, b in zip(lead, lead[1:])), f"not symmetric at {lead}"
        coeff = work[lead]
        shape = tuple(x for x in lead if x)
        out[shape] = coeff
        for e, c in schur_poly(shape, nvars):
            work[e] = work.get(e, 0) - coeff * c
            if work[e] == 0:
                del work[e]
    return out


def oracle_product(lam: tuple[int, ...], mu: tuple[int, ...], rect: tuple[int, int]
                   ) -> dict[tuple[int, ...], int]:
    """Schur expansion of s_lam * s_mu truncated to the rectangle."""
    k, m = rect
    prod = poly_mul(dict(schur_poly(tuple(lam), k)), dict(schur_poly(tuple(mu), k)))
    full = schur_expand(prod, k)
    return {shape: c for shape, c in full.items() if not shape or shape[0] <= m}


def rect_partitions(rect: tuple[int, int]) -> list[tuple[int, ...]]:
    k, m = rect
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], hi: int):
        out.append(prefix)
        if len(prefix) == k:
            return
        for part in range(1, hi + 1):
            rec(prefix + (part,), part)

    rec((), m)
    return sorted(set(out))

"""Dimension and degree of an ideal via the staircase of its initial ideal.

Dimension is computed from maximal independent variable sets of the leading
monomial supports; degree from the Hilbert-series numerator of the monomial
initial ideal (pivot-splitting recursion), divided down to the dimension.
The convention matches the usual CAS one (degree of the top-dimensional part;
for non-homogeneous ideals the grevlex initial ideal plays the role of the
degree filtration).
"""

from functools import lru_cache

from .groebner import Budget, Ideal
from .ring import UsageError


def _minimalize(gens):
    """Minimal generating set of a monomial ideal (exponent tuples)."""
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    out = []
    for g in gens:
        if not any(all(x <= y for x, y in zip(h, g)) for h in out):
            out.append(g)
    return tuple(out)


def _colon(gens, m):
    return _minimalize(tuple(tuple(max(x - y, 0) for x, y in zip(g, m)) for g in gens))


def _plus(gens, m):
    return _minimalize(gens + (m,))


def hilbert_numerator(gens, nvars):
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of k[x]/I for
    the monomial ideal I; returned as a coefficient dict {degree: int}."""
    gens = _minimalize(tuple(tuple(g) for g in gens))

    @lru_cache(maxsize=None)
    def rec(gs):
        if not gs:
            return ((0, 1),)
        if any(sum(g) == 0 for g in gs):
            return ()
        # pairwise-coprime base case: product of (1 - t^deg)
        supports = [frozenset(i for i, e in enumerate(g) if e) for g in gs]
        coprime = True
        for i in range(len(gs)):
            for j in range(i + 1, len(gs)):
                if supports[i] & supports[j]:
                    coprime = False
                    break
            if not coprime:
                break
        if coprime:
            acc = {0: 1}
            for g in gs:
                d = sum(g)
                nxt = dict(acc)
                for k, c in acc.items():
                    nxt[k + d] = nxt.get(k + d, 0) - c
                acc = {k: c for k, c in nxt.items() if c}
            return tuple(sorted(acc.items()))
        # pivot: most frequent variable
        counts = {}
        for s in supports:
            for v in s:
                counts[v] = counts.get(v, 0) + 1
        piv_var = max(counts, key=lambda v: (counts[v], -v))
        piv = tuple(1 if i == piv_var else 0 for i in range(nvars))
        # N(I) = N(I + <x>) + t * N(I : x)
        a = dict(rec(_plus(gs, piv)))
        b = rec(_colon(gs, piv))
        for k, c in b:
            a[k + 1] = a.get(k + 1, 0) + c
        return tuple(sorted((k, c) for k, c in a.items() if c))

    return dict(rec(gens))


def staircase_dimension(gens, nvars):
    """Krull dimension of k[x]/I for a monomial ideal I: the largest variable
    set meeting no generator support, via minimum hitting set."""
    if any(sum(g) == 0 for g in gens):
        return -1  # unit ideal
    supports = sorted({frozenset(i for i, e in enumerate(g) if e) for g in gens})
    # prune supersets
    supports = [s for s in supports if not any(t < s for t in supports)]
    best = [nvars + 1]

    def hit(remaining, chosen, excluded):
        if not remaining:
            best[0] = min(best[0], len(chosen))
            return
        if len(chosen) + 1 >= best[0]:
            return  # one more pick cannot beat the incumbent
        s = min(remaining, key=len)
        for v in sorted(s):
            if v in excluded:
                continue
            rest = [t for t in remaining if v not in t]
            if len(chosen) + 1 < best[0]:
                hit(rest, chosen | {v}, excluded)
            excluded = excluded | {v}

    if not supports:
        return nvars
    hit(supports, frozenset(), frozenset())
    return nvars - best[0]


def dimension_and_degree(ideal: Ideal, budget: Budget | None = None):
    """(Krull dimension of the affine quotient, degree) from the initial ideal.

    Raises UsageError on the unit ideal.
    """
    ring = ideal.ring
    basis = ideal.basis(budget=budget)
    if not basis:
        return ring.nvars, 1
    if any(g.degree() == 0 for g in basis):
        raise UsageError("dimension of the unit ideal is undefined")
    lts = [ring.unpack(g.lm()) for g in basis]
    dim = staircase_dimension(lts, ring.nvars)
    num = hilbert_numerator(lts, ring.nvars)
    # divide N(t) by (1-t)^(nvars - dim), then evaluate at 1
    coeffs = [0] * (max(num) + 1 if num else 1)
    for k, c in num.items():
        coeffs[k] = c
    for _ in range(ring.nvars - dim):
        # q = N / (1-t): q_k = N_k + q_{k-1}; remainder must vanish
        q = []
        carry = 0
        for c in coeffs:
            carry = c + carry
            q.append(carry)
        if q and q[-1] != 0:
            raise ArithmeticError("Hilbert numerator not divisible by (1-t)^codim")
        coeffs = q[:-1] if len(q) > 1 else [0]
    degree = sum(coeffs)
    return dim, degree

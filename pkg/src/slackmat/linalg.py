"""Exact matrix helpers: symbolic determinants with shared-minor memoization,
Bareiss elimination, rank over a field."""

from .ring import Poly, UsageError


def sym_det(rows, memo=None):
    """Determinant of a square matrix of Poly, by cofactor expansion with
    memoization on (row subset, column subset): all minors of one matrix
    share their sub-minors, so generating many minors reuses the table."""
    n = len(rows)
    if n == 0:
        raise UsageError("empty matrix")
    for r in rows:
        if len(r) != n:
            raise UsageError("matrix is not square")
    ring = rows[0][0].ring
    if memo is None:
        memo = {}
    return _minor(rows, tuple(range(n)), tuple(range(n)), ring, memo)


def _minor(rows, ri, ci, ring, memo):
    if len(ri) == 1:
        return rows[ri[0]][ci[0]]
    key = (ri, ci)
    got = memo.get(key)
    if got is not None:
        return got
    # expand along the first row of the subset; skip zero entries
    r0 = ri[0]
    rest = ri[1:]
    acc = ring.zero()
    for pos, c in enumerate(ci):
        e = rows[r0][c]
        if not e:
            continue
        sub = _minor(rows, rest, ci[:pos] + ci[pos + 1:], ring, memo)
        if not sub:
            continue
        term = e * sub
        acc = acc + term if pos % 2 == 0 else acc - term
    memo[key] = acc
    return acc


def poly_divexact(a: Poly, b: Poly) -> Poly:
    """Exact division a/b in the polynomial ring; raises if not exact."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    ring = a.ring
    q = ring.zero()
    r = a
    field = ring.field
    while r:
        if not ring.mono_divides(b.lm(), r.lm()):
            raise UsageError("polynomial division is not exact")
        m = ring.mono_div(r.lm(), b.lm())
        c = field.div(r.lc(), b.lc())
        t = Poly(ring, ((m, c),))
        q = q + t
        r = r - b.mul_term(m, c)
    return q


def det_bareiss(rows) -> Poly:
    """Fraction-free Bareiss determinant over a polynomial ring (or field
    elements wrapped as constants).  Agrees with sym_det."""
    n = len(rows)
    ring = rows[0][0].ring
    a = [list(r) for r in rows]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = poly_divexact(num, prev)
            a[i][k] = ring.zero()
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def all_minors(rows, k, ring=None, memo=None):
    """Yield ((row_idx, col_idx), det) for every k x k minor, sharing the
    cofactor memo across minors.  Zero minors are included (callers filter)."""
    from itertools import combinations

    if ring is None:
        ring = rows[0][0].ring
    if memo is None:
        memo = {}
    nr, nc = len(rows), len(rows[0])
    for ri in combinations(range(nr), k):
        for ci in combinations(range(nc), k):
            yield (ri, ci), _minor(rows, ri, ci, ring, memo)


def field_matrix_rank(entries, field) -> int:
    """Rank of a matrix of field elements, by Gaussian elimination."""
    m = [list(map(field.coerce, row)) for row in entries]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    for c in range(cols):
        piv = None
        for r in range(rank, rows):
            if m[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = field.inv(m[rank][c])
        m[rank] = [field.mul(x, inv) for x in m[rank]]
        for r in range(rows):
            if r != rank and m[r][c] != 0:
                f = m[r][c]
                m[r] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def field_det(entries, field):
    """Determinant of a square matrix of field elements."""
    m = [list(map(field.coerce, row)) for row in entries]
    n = len(m)
    det = field.one
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r][c] != 0:
                piv = r
                break
        if piv is None:
            return field.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = field.neg(det)
        det = field.mul(det, m[c][c])
        inv = field.inv(m[c][c])
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = field.mul(m[r][c], inv)
                m[r] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[r], m[c])]
    return det

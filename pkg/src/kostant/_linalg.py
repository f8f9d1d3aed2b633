"""Small dense exact linear algebra over Z and Q.

Matrices are lists of row lists holding ints or Fractions. Everything here
is sized for weight-space blocks (tens of rows), so the implementations
favor clarity and exactness over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction


def zeros(nrows, ncols):
    return [[0] * ncols for _ in range(nrows)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = zeros(n, m)
    for i in range(n):
        row = a[i]
        acc = out[i]
        for t in range(k):
            v = row[t]
            if v:
                brow = b[t]
                for j in range(m):
                    if brow[j]:
                        acc[j] += v * brow[j]
    return out

def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def is_zero_matrix(a):
    return all(x == 0 for row in a for x in row)


def bareiss_pivots(rows):
    """Fraction-free row echelon over Z; returns (rank, pivot column list).

    Entries after each step are minors of the original matrix, so the
    division by the previous pivot is exact (verified by divmod).
    """
    a = [list(r) for r in rows]
    if not a or not a[0]:
        return 0, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    prev = 1
    for c in range(ncols):
        piv_row = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv_row is None:
            continue
        a[r], a[piv_row] = a[piv_row], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            ric = a[i][c]
            arow, rrow = a[i], a[r]
            if prev == 1:
                if ric == 0:
                    if piv != 1:
                        for j in range(c + 1, ncols):
                            arow[j] = piv * arow[j]
                elif piv == 1:
                    for j in range(c + 1, ncols):
                        arow[j] -= ric * rrow[j]
                else:
                    for j in range(c + 1, ncols):
                        arow[j] = piv * arow[j] - ric * rrow[j]
            else:
                for j in range(c + 1, ncols):
                    num = piv * arow[j] - ric * rrow[j]
                    q, rem = divmod(num, prev)
                    assert rem == 0, "Bareiss exact division failed"
                    arow[j] = q
            arow[c] = 0
        pivots.append(c)
        prev = piv
        r += 1
        if r == nrows:
            break
    return len(pivots), pivots


def int_rank(rows):
    return bareiss_pivots(rows)[0]


def sparse_int_rank(rows):
    """Rank over Q of a sparse integer matrix given as dicts {col: value}.

    Eliminates with a shortest-row / smallest-pivot heuristic; each combined
    row is an integer combination (v/g) row - (w/g) pivot_row, which spans the
    same rowspace over Q, and is gcd-reduced to keep entries small.
    """
    work = [dict(r) for r in rows if any(v for v in r.values())]
    rank = 0
    while work:
        best = min(range(len(work)), key=lambda i: len(work[i]))
        prow = work.pop(best)
        c, v = min(prow.items(), key=lambda kv: (abs(kv[1]), kv[0]))
        rank += 1
        nxt = []
        for row in work:
            w = row.get(c)
            if w:
                g = _gcd(abs(v), abs(w))
                a, b = v // g, w // g
                merged = {k: a * val for k, val in row.items() if k != c}
                for k, val in prow.items():
                    if k == c:
                        continue
                    nv = merged.get(k, 0) - b * val
                    if nv:
                        merged[k] = nv
                    else:
                        merged.pop(k, None)
                if merged:
                    g = 0
                    for val in merged.values():
                        g = _gcd(g, abs(val))
                        if g == 1:
                            break
                    if g > 1:
                        merged = {k: val // g for k, val in merged.items()}
                    nxt.append(merged)
            else:
                nxt.append(row)
        work = nxt
    return rank



def rank_of_rational_rows(rows):
    """Rank of a matrix with Fraction entries, via row-wise denominator clearing."""
    cleared = []
    for row in rows:
        lcm = 1
        for x in row:
            if isinstance(x, Fraction):
                d = x.denominator
                if d != 1:
                    g = _gcd(lcm, d)
                    lcm = lcm // g * d
        cleared.append([int(x * lcm) for x in row])
    return int_rank(cleared)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def invert_rational(mat):
    """Inverse of a nonsingular matrix as Fractions (Gauss-Jordan)."""
    n = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]

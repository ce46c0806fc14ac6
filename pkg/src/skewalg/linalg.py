"""Tiny exact linear algebra over GF(p) for nucleus and rank computations."""


def rref(rows, p):
    """Row-reduce a list of row vectors (lists of ints mod p) in place-ish.

    Returns (reduced rows without zero rows, pivot column list).
    """
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows, p):
    return len(rref(rows, p)[0])


def nullspace(rows, p):
    """Basis of the right nullspace of the matrix given by `rows`."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in zip(red, pivots):
            v[pc] = (-r[fc]) % p
        basis.append(v)
    return basis


def solve_is_invertible(rows, p):
    n = len(rows)
    return rank(rows, p) == n

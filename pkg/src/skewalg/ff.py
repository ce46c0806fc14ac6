"""Exact arithmetic in small finite fields GF(p^deg).

Elements are stored as an index into the field: the base-p digits of the index
are the coefficients of the reduced polynomial representative modulo a fixed
monic irreducible.  All fields used by this package are tiny (|K| <= 16 for the
tower scans, GF(8)/GF(9) for the power-formula grid), so full addition and
multiplication tables are precomputed at construction time and every operation
is a table lookup.  Equality is representation equality by construction.
"""

from functools import lru_cache


def is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod_p(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_divmod_p(a, b, p):
    # b monic-leading is not assumed; leading coeff inverted mod p
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = pow(b[-1], p - 2, p) if b[-1] != 1 else 1
    while len(a) >= len(b) and _poly_trim(a):
        a = _poly_trim(a)
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        coef = (a[-1] * inv_lead) % p
        q[shift] = coef
        for i, bi in enumerate(b):
            a[i + shift] = (a[i + shift] - coef * bi) % p
        a = a[:-1]
    return _poly_trim(q), _poly_trim(a)


def _is_irreducible_p(f, p):
    """Trial division by all monic polynomials of degree <= deg(f)/2."""
    deg = len(f) - 1
    if deg <= 1:
        return deg == 1
    for d in range(1, deg // 2 + 1):
        for idx in range(p ** d):
            g = []
            k = idx
            for _ in range(d):
                g.append(k % p)
                k //= p
            g.append(1)  # monic of degree d
            _, r = _poly_divmod_p(f, g, p)
            if not r:
                return False
    return True


def _find_irreducible(p, deg):
    """Lexicographically first monic irreducible of given degree over GF(p)."""
    if deg == 1:
        return [0, 1]
    for idx in range(p ** deg):
        f = []
        k = idx
        for _ in range(deg):
            f.append(k % p)
            k //= p
        f.append(1)
        if _is_irreducible_p(f, p):
            return f
    raise RuntimeError("no irreducible polynomial found (internal error)")


class FFElem:
    __slots__ = ("field", "idx")

    def __init__(self, field, idx):
        self.field = field
        self.idx = idx

    def __add__(self, other):
        return FFElem(self.field, self.field.add_table[self.idx][other.idx])

    def __sub__(self, other):
        f = self.field
        return FFElem(f, f.add_table[self.idx][f.neg_table[other.idx]])

    def __neg__(self):
        return FFElem(self.field, self.field.neg_table[self.idx])

    def __mul__(self, other):
        return FFElem(self.field, self.field.mul_table[self.idx][other.idx])

    def __truediv__(self, other):
        f = self.field
        return FFElem(f, f.mul_table[self.idx][f.inv_table[other.idx]])

    def inverse(self):
        return FFElem(self.field, self.field.inv_table[self.idx])

    def __pow__(self, e):
        f = self.field
        if self.idx == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no negative powers")
            return f.one() if e == 0 else self
        # unit group is cyclic of order |K|-1
        e %= f.order - 1
        acc = f.one()
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        return isinstance(other, FFElem) and self.field is other.field and self.idx == other.idx

    def __hash__(self):
        return hash((id(self.field), self.idx))

    def __bool__(self):
        return self.idx != 0

    @property
    def coeffs(self):
        """Prime-field coefficient vector of the reduced representative."""
        f, k = self.field, self.idx
        out = []
        for _ in range(f.deg):
            out.append(k % f.p)
            k //= f.p
        return out

    def __repr__(self):
        f = self.field
        if f.deg == 1:
            return str(self.idx)
        g = f.gen()
        if self.idx < f.p:
            return str(self.idx)
        # express as power of the chosen generator for readability
        for e in range(f.order - 1):
            if g ** e == self:
                return "g^%d" % e if e != 1 else "g"
        return "ff(%d)" % self.idx  # pragma: no cover


class FiniteField:
    """GF(p^deg) with table-based arithmetic and canonical representatives."""

    def __init__(self, p, deg):
        if not is_prime(p):
            raise ValueError("p must be prime, got %r" % (p,))
        if deg < 1:
            raise ValueError("degree must be positive")
        self.p = p
        self.deg = deg
        self.order = p ** deg
        self.modulus = _find_irreducible(p, deg)
        self._build_tables()
        self._gen_idx = self._find_generator()
        self._frob_tables = {}

    def _idx_to_poly(self, idx):
        out = []
        for _ in range(self.deg):
            out.append(idx % self.p)
            idx //= self.p
        return _poly_trim(out)

    def _poly_to_idx(self, poly):
        idx = 0
        for c in reversed(poly):
            idx = idx * self.p + c
        return idx

    def _build_tables(self):
        p, s = self.p, self.order
        polys = [self._idx_to_poly(i) for i in range(s)]
        add = [[0] * s for _ in range(s)]
        mul = [[0] * s for _ in range(s)]
        neg = [0] * s
        for i in range(s):
            a = polys[i]
            npoly = [(-c) % p for c in a]
            neg[i] = self._poly_to_idx(_poly_trim(npoly))
            for j in range(i, s):
                b = polys[j]
                m = max(len(a), len(b))
                ssum = [((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0)) % p
                        for k in range(m)]
                add[i][j] = add[j][i] = self._poly_to_idx(_poly_trim(ssum))
                prod = _poly_mulmod_p(a, b, p)
                _, prod = _poly_divmod_p(prod, self.modulus, p)
                mul[i][j] = mul[j][i] = self._poly_to_idx(prod)
        inv = [0] * s
        for i in range(1, s):
            for j in range(1, s):
                if mul[i][j] == 1:
                    inv[i] = j
                    break
        self.add_table, self.mul_table, self.neg_table, self.inv_table = add, mul, neg, inv

    def _find_generator(self):
        target = self.order - 1
        for i in range(2, self.order):
            e = FFElem(self, i)
            seen = e
            ordr = 1
            while seen != self.one():
                seen = seen * e
                ordr += 1
            if ordr == target:
                return i
        return 1  # GF(2): the unit group is trivial

    # --- element constructors -------------------------------------------------
    def zero(self):
        return FFElem(self, 0)

    def one(self):
        return FFElem(self, 1 % self.order)

    def gen(self):
        """A fixed generator of the multiplicative group."""
        return FFElem(self, self._gen_idx)

    def from_int(self, n):
        return FFElem(self, n % self.p)

    def from_idx(self, idx):
        return FFElem(self, idx % self.order)

    def from_coeffs(self, coeffs):
        poly = [c % self.p for c in coeffs]
        _, poly = _poly_divmod_p(_poly_trim(poly), self.modulus, self.p)
        return FFElem(self, self._poly_to_idx(poly))

    def elements(self):
        return [FFElem(self, i) for i in range(self.order)]

    def units(self):
        return [FFElem(self, i) for i in range(1, self.order)]

    def frobenius_table(self, e):
        """Permutation table of x -> x^(p^e)."""
        e %= self.deg
        if e not in self._frob_tables:
            q = self.p ** e
            tab = [0] * self.order
            for i in range(self.order):
                tab[i] = (FFElem(self, i) ** q).idx if i else 0
            self._frob_tables[e] = tab
        return self._frob_tables[e]

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.deg) if self.deg > 1 else "GF(%d)" % self.p


@lru_cache(maxsize=None)
def finite_field(p, deg):
    """Shared (cached) field instances so element contexts compare by identity."""
    return FiniteField(p, deg)

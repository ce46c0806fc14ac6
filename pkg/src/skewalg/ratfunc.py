"""The rational function field GF(q)(x) with canonical fraction representatives.

Fractions are kept normalized at all times: gcd(num, den) = 1 and den monic.
Equality is therefore representation equality, which the exhaustive test
harness relies on.  Polynomials are coefficient lists of GF(q) elements,
index = x-degree, no trailing zeros.
"""


def ptrim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return c


def padd(a, b, field):
    m = max(len(a), len(b))
    z = field.zero()
    return ptrim([(a[i] if i < len(a) else z) + (b[i] if i < len(b) else z)
                  for i in range(m)])


def pneg(a):
    return [-c for c in a]


def psub(a, b, field):
    return padd(a, pneg(b), field)


def pmul(a, b, field):
    if not a or not b:
        return []
    z = field.zero()
    out = [z] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
    return ptrim(out)


def pdivmod(a, b, field):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    z = field.zero()
    q = [z] * max(0, len(a) - len(b) + 1)
    inv_lead = b[-1].inverse()
    while True:
        a = ptrim(a)
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        coef = a[-1] * inv_lead
        q[shift] = coef
        for i, bi in enumerate(b):
            a[i + shift] = a[i + shift] - coef * bi
    return ptrim(q), a


def pgcd(a, b, field):
    a, b = ptrim(a), ptrim(b)
    while b:
        _, a = pdivmod(a, b, field)
        a, b = b, a
    return pmonic(a, field)


def pmonic(a, field):
    if not a:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]


def pconst(c):
    return [c] if c else []


def px(field):
    return [field.zero(), field.one()]


class RFElem:
    """An element of GF(q)(x), normalized coprime fraction with monic denominator."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den, _normalize=True):
        self.field = field
        if _normalize:
            num, den = ptrim(num), ptrim(den)
            if not den:
                raise ZeroDivisionError("zero denominator")
            if not num:
                den = [field.cfield.one()]
            else:
                g = pgcd(num, den, field.cfield)
                if len(g) > 1 or g[0] != field.cfield.one():
                    num, _ = pdivmod(num, g, field.cfield)
                    den, _ = pdivmod(den, g, field.cfield)
                lead_inv = den[-1].inverse()
                num = [c * lead_inv for c in num]
                den = [c * lead_inv for c in den]
        self.num = tuple(num)
        self.den = tuple(den)

    def __add__(self, other):
        f = self.field.cfield
        num = padd(pmul(self.num, other.den, f), pmul(other.num, self.den, f), f)
        return RFElem(self.field, num, pmul(self.den, other.den, f))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RFElem(self.field, pneg(self.num), list(self.den), _normalize=False)

    def __mul__(self, other):
        f = self.field.cfield
        return RFElem(self.field, pmul(self.num, other.num, f),
                      pmul(self.den, other.den, f))

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError
        f = self.field.cfield
        return RFElem(self.field, pmul(self.num, other.den, f),
                      pmul(self.den, other.num, f))

    def inverse(self):
        return self.field.one() / self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        acc, base = self.field.one(), self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        return (isinstance(other, RFElem) and self.field is other.field
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((id(self.field), self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        def fmt(poly):
            if not poly:
                return "0"
            parts = []
            for i, c in enumerate(poly):
                if not c:
                    continue
                cs = repr(c)
                if i == 0:
                    parts.append(cs)
                else:
                    xs = "x" if i == 1 else "x^%d" % i
                    parts.append(xs if cs == "1" else "%s*%s" % (cs, xs))
            return " + ".join(parts)

        if self.den == (self.field.cfield.one(),):
            return fmt(self.num)
        return "(%s)/(%s)" % (fmt(self.num), fmt(self.den))


class RationalFunctionField:
    """GF(q)(x) for a given constant field GF(q)."""

    def __init__(self, cfield):
        self.cfield = cfield

    def zero(self):
        return RFElem(self, [], [self.cfield.one()], _normalize=False)

    def one(self):
        return RFElem(self, [self.cfield.one()], [self.cfield.one()], _normalize=False)

    def x(self):
        return RFElem(self, px(self.cfield), [self.cfield.one()], _normalize=False)

    def from_const(self, c):
        return RFElem(self, pconst(c), [self.cfield.one()], _normalize=False)

    def from_polys(self, num, den):
        return RFElem(self, num, den)

    def monomial(self, c, j):
        """c * x^j for integer j (negative allowed)."""
        out = self.from_const(c)
        return out * (self.x() ** j) if j else out

    def __repr__(self):
        return "%r(x)" % (self.cfield,)

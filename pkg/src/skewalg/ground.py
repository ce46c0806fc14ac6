"""Cyclic Galois extension contexts K/F with distinguished generator sigma.

Two backends:
  * finite field tower  K = GF(p^(d n)) over F = GF(p^d), sigma(z) = z^(p^d);
  * rational functions  K = GF(q)(x) with sigma(x) = zeta*x, F = GF(q)(x^n).

The tower backend can iterate all elements; the function field backend cannot,
so search operations over it must use ansatz strategies (see morphism module).
"""

from math import gcd

from .ff import FFElem, finite_field, is_prime
from .ratfunc import RationalFunctionField, RFElem


class NotCompatible(Exception):
    """tau sigma tau^{-1} does not land in the cyclic group generated by sigma."""


class CapExceeded(Exception):
    """A configured resource cap was exceeded."""


DEFAULT_CAP = 2 ** 16


class AutMap:
    """A ring automorphism of K, given by backend-specific data.

    Finite field: exponent e with tau(z) = z^(p^e).
    Function field: an action on x from {x -> c*x, x -> c/x} combined with a
    Frobenius exponent applied to the constant coefficients.
    """

    def __init__(self, backend, field, exp=0, action="scale", c=None):
        self.backend = backend
        self.field = field
        if backend == "ff":
            self.exp = exp % field.deg
        else:
            self.exp = exp % field.cfield.deg
            self.action = action
            self.c = c if c is not None else field.cfield.one()
            if not self.c:
                raise ValueError("x-action constant must be nonzero")

    # --- application ---------------------------------------------------------
    def __call__(self, elem):
        if self.backend == "ff":
            tab = self.field.frobenius_table(self.exp)
            return FFElem(self.field, tab[elem.idx])
        return self._apply_rf(elem)

    def _apply_coeff(self, c):
        tab = self.field.cfield.frobenius_table(self.exp)
        return FFElem(self.field.cfield, tab[c.idx])

    def _apply_poly(self, poly):
        """Image of a polynomial in x as an RFElem."""
        K = self.field
        out = K.zero()
        if self.action == "scale":
            cp = K.cfield.one()
            for i, a in enumerate(poly):
                if a:
                    out = out + K.monomial(self._apply_coeff(a) * cp, i)
                cp = cp * self.c
        else:  # x -> c/x
            cp = K.cfield.one()
            for i, a in enumerate(poly):
                if a:
                    out = out + K.monomial(self._apply_coeff(a) * cp, -i)
                cp = cp * self.c
        return out

    def _apply_rf(self, elem):
        num = self._apply_poly(elem.num)
        den = self._apply_poly(elem.den)
        return num / den

    # --- structure -----------------------------------------------------------
    def is_identity(self):
        if self.backend == "ff":
            return self.exp == 0
        return (self.exp == 0 and self.action == "scale"
                and self.c == self.field.cfield.one())

    def compose(self, other):
        """self after other (self ∘ other)."""
        if self.backend != other.backend or self.field is not other.field:
            raise ValueError("cannot compose automorphisms of different fields")
        if self.backend == "ff":
            return AutMap("ff", self.field, self.exp + other.exp)
        # self(other(x)): other(x) = c2*x or c2/x, then push through self
        phi_c2 = self._apply_coeff(other.c)
        if self.action == "scale" and other.action == "scale":
            action, c = "scale", phi_c2 * self.c
        elif self.action == "scale" and other.action == "invert":
            action, c = "invert", phi_c2 / self.c
        elif self.action == "invert" and other.action == "scale":
            action, c = "invert", phi_c2 * self.c
        else:
            action, c = "scale", phi_c2 / self.c
        return AutMap("rf", self.field, self.exp + other.exp, action, c)

    def order(self, bound=64):
        acc = self
        for ell in range(1, bound + 1):
            if acc.is_identity():
                return ell
            acc = self.compose(acc)
        raise CapExceeded("automorphism order exceeds bound %d" % bound)

    def inverse(self):
        return self.power(self.order() - 1)

    def power(self, e):
        if self.backend == "ff":
            return AutMap("ff", self.field, self.exp * e)
        e %= self.order()
        acc = AutMap("rf", self.field, 0)
        for _ in range(e):
            acc = self.compose(acc)
        return acc

    def __eq__(self, other):
        if not isinstance(other, AutMap) or self.backend != other.backend:
            return False
        if self.field is not other.field:
            return False
        if self.backend == "ff":
            return self.exp == other.exp
        return (self.exp == other.exp and self.action == other.action
                and self.c == other.c)

    def __hash__(self):
        if self.backend == "ff":
            return hash(("ff", id(self.field), self.exp))
        return hash(("rf", id(self.field), self.exp, self.action, self.c))

    def __repr__(self):
        if self.backend == "ff":
            return "frob^%d" % self.exp
        xs = "x->%r*x" % self.c if self.action == "scale" else "x->%r/x" % self.c
        return "(%s, frob^%d)" % (xs, self.exp)


class CyclicContext:
    """K/F with Gal(K/F) generated by sigma of order n, plus extra automorphisms."""

    def __init__(self, backend, field, sigma, n, **meta):
        self.backend = backend
        self.field = field
        self.sigma = sigma
        self.n = n
        self.meta = meta
        self.taus = {}
        self._sigma_pows = {0: AutMap(backend, field) if backend == "ff"
                            else AutMap("rf", field, 0)}

    # --- basic queries -------------------------------------------------------
    def zero(self):
        return self.field.zero()

    def one(self):
        return self.field.one()

    def sigma_pow(self, i):
        i %= self.n
        if i not in self._sigma_pows:
            self._sigma_pows[i] = self.sigma.compose(self.sigma_pow(i - 1))
        return self._sigma_pows[i]

    def in_F(self, elem):
        return self.sigma(elem) == elem

    @property
    def iterable(self):
        return self.backend == "ff"

    def elements(self):
        if not self.iterable:
            raise CapExceeded("backend does not support element iteration")
        return self.field.elements()

    def units(self):
        if not self.iterable:
            raise CapExceeded("backend does not support element iteration")
        return self.field.units()

    def spanning_set(self):
        """Generators on which ring-map equality may be decided."""
        if self.backend == "ff":
            return [self.field.gen()]
        return [self.field.x(), self.field.from_const(self.field.cfield.gen())]

    def automorphisms(self):
        """All automorphisms of K available to classification runs."""
        if self.backend == "ff":
            return [AutMap("ff", self.field, e) for e in range(self.field.deg)]
        out = [AutMap("rf", self.field, 0)]
        out.extend(t for t in self.taus.values() if t not in out)
        return out

    def register_tau(self, name, tau):
        _verify_automorphism(self, tau)
        self.taus[name] = tau
        return tau

    def describe(self):
        if self.backend == "ff":
            return {"backend": "ff", "p": self.meta["p"], "d": self.meta["d"],
                    "n": self.n}
        return {"backend": "rf", "q": self.meta["q"],
                "zeta": [c for c in self.meta["zeta"].coeffs], "n": self.n}

    def __repr__(self):
        if self.backend == "ff":
            return "GF(%d^%d)/GF(%d^%d) sigma-order %d" % (
                self.meta["p"], self.meta["d"] * self.n,
                self.meta["p"], self.meta["d"], self.n)
        return "%r / fixed field of x->zeta*x, n=%d" % (self.field, self.n)


def _verify_automorphism(ctx, tau):
    """Check tau is a ring automorphism on a spanning set (and bijective there)."""
    K = ctx.field
    if ctx.backend == "ff":
        g = K.gen()
        ims = set()
        for a in K.elements():
            ims.add(tau(a).idx)
        if len(ims) != K.order:
            raise ValueError("not bijective")
        for a in [g, g * g, K.one()]:
            for b in [g, K.one() + g]:
                if tau(a * b) != tau(a) * tau(b) or tau(a + b) != tau(a) + tau(b):
                    raise ValueError("not a ring map")
        if tau(K.one()) != K.one():
            raise ValueError("not unital")
        return
    x = K.x()
    c = K.from_const(K.cfield.gen())
    for a in [x, c, x + c]:
        for b in [x, c]:
            if tau(a * b) != tau(a) * tau(b) or tau(a + b) != tau(a) + tau(b):
                raise ValueError("not a ring map")
    if tau(K.one()) != K.one():
        raise ValueError("not unital")
    tau.order()  # finite order doubles as bijectivity certificate here


# --- public constructors ------------------------------------------------------

def frobenius_context(p, d, n, cap=DEFAULT_CAP):
    """K = GF(p^(d n)), F = GF(p^d), sigma(z) = z^(p^d)."""
    if not is_prime(p):
        raise ValueError("p must be prime")
    if p ** (d * n) > cap:
        raise CapExceeded("field size %d exceeds cap %d" % (p ** (d * n), cap))
    K = finite_field(p, d * n)
    sigma = AutMap("ff", K, d)
    # sigma must have order exactly n on K
    g = K.gen()
    acc = g
    for i in range(1, n):
        acc = sigma(acc)
        if acc == g:
            raise ValueError("sigma has order < n")
    if sigma(acc) != g:
        raise ValueError("sigma does not have order n")
    return CyclicContext("ff", K, sigma, n, p=p, d=d)


def function_field_context(q, zeta, n):
    """K = GF(q)(x), sigma(x) = zeta*x fixing constants, F = GF(q)(x^n)."""
    # q a prime power
    p = 2
    while q % p:
        p += 1
    e = 0
    qq = q
    while qq > 1:
        if qq % p:
            raise ValueError("q must be a prime power")
        qq //= p
        e += 1
    cfield = finite_field(p, e)
    if isinstance(zeta, int):
        zeta = FFElem(cfield, zeta % q)
    if not zeta:
        raise ValueError("zeta must be a unit")
    acc = zeta
    order = 1
    while acc != cfield.one():
        acc = acc * zeta
        order += 1
    if order != n:
        raise ValueError("zeta has multiplicative order %d, expected %d" % (order, n))
    K = RationalFunctionField(cfield)
    sigma = AutMap("rf", K, 0, "scale", zeta)
    return CyclicContext("rf", K, sigma, n, q=q, zeta=zeta)


# --- norms and conjugation ----------------------------------------------------

def partial_norm(ctx, phi, alpha, i):
    """N_i^phi(alpha) = phi^{i-1}(alpha) ... phi(alpha) alpha."""
    acc = ctx.one()
    for _ in range(i):
        acc = phi(acc) * alpha
    return acc


def full_norm(ctx, alpha):
    """The Galois norm K -> F, as the n-fold sigma-twisted product."""
    out = partial_norm(ctx, ctx.sigma, alpha, ctx.n)
    if ctx.sigma(out) != out:
        raise RuntimeError("norm not sigma-fixed: broken context")  # pragma: no cover
    return out


def conjugation_exponent(ctx, tau):
    """The unique k with gcd(k, n) = 1 and tau sigma tau^{-1} = sigma^k.

    Returns None when tau does not normalize the cyclic group generated by
    sigma (so no such k exists).
    """
    span = ctx.spanning_set()
    left = [tau(ctx.sigma(a)) for a in span]
    for k in range(1, ctx.n + 1):
        if gcd(k, ctx.n) != 1:
            continue
        sk = ctx.sigma_pow(k)
        if all(sk(tau(a)) == im for a, im in zip(span, left)):
            return k
    return None

"""Twisted Laurent polynomials K[t, t^{-1}; sigma] and their order-reversing
monomial maps.

The ring is the finite-support stand-in for twisted Laurent series: exponents
range over the integers and t^i a = sigma^i(a) t^i for every i.  Writing
x = t^n, the ring is the cyclic quotient with coefficients in K[x, x^{-1}]
and constant x, and the monomial map determined by tau and alpha = alpha1 x
sends sum c_{i,j} x^j t^i (0 <= i < n) to sum tau(c_{i,j}) x^j (alpha T^k)^i
in the presentation whose generator T satisfies T^n = x^{-1}.  Validity is
multiplicativity into that presentation; as a self-map of the Laurent ring the
same data acts by t^(nj+i) -> tau-coefficients times t^(n(j+i)+ik), which is
what the order iteration uses.
"""

import random

from .ground import CapExceeded, conjugation_exponent, full_norm, partial_norm
from .morphism import Certificate, Condition, _finish


class TwistedLaurentPoly:
    """Finite map exponent -> nonzero coefficient."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = {e: c for e, c in terms.items() if c}

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, self.ctx.zero()) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return TwistedLaurentPoly(self.ctx, out)

    def __neg__(self):
        return TwistedLaurentPoly(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return lmul(self, other, self.ctx)

    def __eq__(self, other):
        return (isinstance(other, TwistedLaurentPoly)
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def min_deg(self):
        if not self.terms:
            raise ValueError("the zero element has no minimal degree")
        return min(self.terms)

    def support(self):
        return sorted(self.terms)

    def coeff_map(self):
        """sigma applied to every coefficient, exponents untouched."""
        return TwistedLaurentPoly(self.ctx,
                                  {e: self.ctx.sigma(c) for e, c in self.terms.items()})

    def to_json(self):
        return {str(e): repr(c) for e, c in sorted(self.terms.items())}

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            ts = "" if e == 0 else ("t" if e == 1 else "t^%d" % e)
            cs = repr(c)
            parts.append(cs if not ts else (ts if cs == "1" else "%s %s" % (cs, ts)))
        return " + ".join(parts)


def lconst(c, ctx):
    return TwistedLaurentPoly(ctx, {0: c})

def lmono(c, e, ctx):
    return TwistedLaurentPoly(ctx, {e: c})

def lone(ctx):
    return lconst(ctx.one(), ctx)


def lmul(f, g, ctx):
    """Product with t^i a = sigma^i(a) t^i; negative i uses sigma^(n-1) = sigma^{-1}."""
    out = {}
    for i, a in f.terms.items():
        si = ctx.sigma_pow(i % ctx.n)
        for j, b in g.terms.items():
            s = out.get(i + j, ctx.zero()) + a * si(b)
            if s:
                out[i + j] = s
            else:
                out.pop(i + j, None)
    return TwistedLaurentPoly(ctx, out)


def hilbert90_alpha1(ctx, probes=None):
    """Norm-one elements: exhaustive on finite fields, the family
    sigma(beta)/beta otherwise."""
    if ctx.backend == "ff":
        one = ctx.one()
        return [u for u in ctx.units() if full_norm(ctx, u) == one]
    K = ctx.field
    if probes is None:
        x = K.x()
        g = K.from_const(K.cfield.gen())
        probes = [x, x * x, x + g, x * x + g * x, x + K.one()]
    out, seen = [], set()
    for beta in probes:
        if not beta:
            continue
        v = ctx.sigma(beta) / beta
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def laurent_norm(alpha, ctx):
    """Product of sigma^i(alpha) for i < n, sigma extended fixing t.

    alpha must be supported on multiples of n; the result then has sigma-fixed
    coefficients and support in n*Z.
    """
    n = ctx.n
    if any(e % n for e in alpha.terms):
        raise ValueError("support must lie in %d*Z" % n)
    out = lone(ctx)
    cur = alpha
    for _ in range(n):
        out = lmul(out, cur, ctx)
        cur = cur.coeff_map()
    for e, c in out.terms.items():
        if e % n or ctx.sigma(c) != c:  # pragma: no cover - structural identity
            raise RuntimeError("norm left the fixed ring")
    return out


# --- the order-reversing monomial map -----------------------------------------

class LaurentAntiHandle:
    """tau on coefficients, t -> alpha1 t^n * t^k with k = n - 1.

    apply_pair gives the image in the codomain presentation (generator T with
    T^n = x^{-1}, coefficients in K[x, x^{-1}]) as a dict (T-exp, x-exp) ->
    coefficient; apply_flat gives the induced self-map of the Laurent ring.
    """

    def __init__(self, ctx, tau, alpha1, k):
        self.ctx = ctx
        self.tau = tau
        self.alpha1 = alpha1
        self.k = k
        self.norm_ok = (ctx.backend != "ff"
                        or full_norm(ctx, alpha1) == ctx.one())

    def _twisted(self, i):
        """N_i of alpha1 under sigma^k."""
        return partial_norm(self.ctx, self.ctx.sigma_pow(self.k), self.alpha1, i)

    def apply_pair(self, f):
        n = self.ctx.n
        out = {}
        for e, c in f.terms.items():
            j, i = divmod(e, n)
            q, r = divmod(i * self.k, n)
            key = (r, j + i - q)
            v = out.get(key, self.ctx.zero()) + self.tau(c) * self._twisted(i)
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return out

    def apply_flat(self, f):
        n = self.ctx.n
        out = TwistedLaurentPoly(self.ctx, {})
        for e, c in f.terms.items():
            j, i = divmod(e, n)
            out = out + lmono(self.tau(c) * self._twisted(i),
                              n * (j + i) + i * self.k, self.ctx)
        return out

    def describe(self):
        return {"tau": repr(self.tau), "alpha1": repr(self.alpha1),
                "k": self.k, "n": self.ctx.n}


def pair_mul(u, v, ctx):
    """Product in the codomain presentation: T c = sigma(c) T, T^n = x^{-1}."""
    n = ctx.n
    out = {}
    for (i, j), a in u.items():
        si = ctx.sigma_pow(i % n)
        for (i2, j2), b in v.items():
            q, r = divmod(i + i2, n)
            key = (r, j + j2 - q)
            s = out.get(key, ctx.zero()) + a * si(b)
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def build_laurent_anti(tau, alpha1, ctx, require_norm=True):
    """The map extending tau with t -> (alpha1 t^n) t^(n-1).

    tau must conjugate sigma to sigma^(n-1); with a scalar alpha1 no other
    degree can carry an order-reversing bijection, and commuting tau is only
    admissible for n = 2.
    """
    if not alpha1:
        raise ValueError("alpha1 must be a unit")
    k = conjugation_exponent(ctx, tau)
    if k is None or k % ctx.n != (ctx.n - 1) % ctx.n:
        raise ValueError(
            "tau conjugates sigma to sigma^%r, need sigma^%d" % (k, ctx.n - 1))
    handle = LaurentAntiHandle(ctx, tau, alpha1, (ctx.n - 1) % ctx.n or 1)
    if require_norm and ctx.backend == "ff" and not handle.norm_ok:
        raise ValueError("alpha1 must have norm one")
    return handle


def verify_laurent_anti(handle, samples=100, seed=0xC0FFEE, window=None):
    """Brute-force verdict: multiplicativity into the codomain presentation.

    Scans all monomial pairs c t^j with c in a spanning set and |j| <= window
    (default 2n), then `samples` random pairs of bounded-support elements.
    """
    ctx = handle.ctx
    n = ctx.n
    if window is None:
        window = 2 * n
    H = handle.apply_pair
    conds = [Condition("unit", "image of 1 is 1",
                       H(lone(ctx)) == {(0, 0): ctx.one()})]
    if ctx.backend == "ff":
        span = ctx.field.units()
    else:
        span = [ctx.field.one(), ctx.field.x(),
                ctx.field.from_const(ctx.field.cfield.gen())]
    probes = [lmono(c, e, ctx) for c in span for e in range(-window, window + 1)]
    ok, witness = True, None
    for f in probes:
        hf = H(f)
        for g in probes:
            if pair_mul(hf, H(g), ctx) != H(lmul(f, g, ctx)):
                ok, witness = False, (f, g)
                break
        if not ok:
            break
    conds.append(Condition("multiplicative-monomials",
                           "H(f g) == H(f) H(g) on monomial pairs", ok,
                           witness=witness))
    rng = random.Random(seed)
    sok, switness = True, None
    if ok:
        for _ in range(samples):
            f = _random_laurent(ctx, rng, window)
            g = _random_laurent(ctx, rng, window)
            if pair_mul(H(f), H(g), ctx) != H(lmul(f, g, ctx)):
                sok, switness = False, (f, g)  # pragma: no cover
                break
    conds.append(Condition("multiplicative-sampled",
                           "H(f g) == H(f) H(g) on sampled pairs", sok,
                           witness=switness))
    return _finish(conds, mode="sampled", seed=seed, count=samples)


def _random_laurent(ctx, rng, window):
    terms = {}
    for _ in range(3):
        e = rng.randrange(-window, window + 1)
        if ctx.backend == "ff":
            c = ctx.field.from_idx(rng.randrange(ctx.field.order))
        else:
            cf = ctx.field.cfield
            c = ctx.field.monomial(cf.from_idx(rng.randrange(cf.order)),
                                   rng.randrange(0, 3))
        if c:
            terms[e] = terms.get(e, ctx.zero()) + c
    return TwistedLaurentPoly(ctx, {e: c for e, c in terms.items() if c})


def infinite_order_witness(handle, bound=6):
    """Strictly increasing minimal degrees of the iterated images of t.

    Only meaningful for n > 2 (for n = 2 the maps can have finite order).
    Returns the degree list; raises if monotonicity ever fails, since that
    would refute the unbounded-order claim at this scale.
    """
    ctx = handle.ctx
    if ctx.n <= 2:
        raise ValueError("finite order is possible when n <= 2")
    degs = []
    cur = lmono(ctx.one(), 1, ctx)
    prev = 1
    for _ in range(bound):
        cur = handle.apply_flat(cur)
        d = cur.min_deg()
        if d <= prev:
            raise RuntimeError("degree growth stalled at %d" % d)
        degs.append(d)
        prev = d
    return degs

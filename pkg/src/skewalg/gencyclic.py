"""Generalized cyclic algebras: skew polynomial quotients with coefficients in
an associative algebra D over C instead of the field itself.

D is given by structure constants over C.  The quotient (D, sigma, d) =
D[t;sigma]/D[t;sigma](t^m - d) multiplies like the field case, with the
coefficient automorphism sigma_D applied per power of t and one right
reduction by t^m - d.  Anti-endomorphism candidates combine an
anti-automorphism tau of D with t -> alpha t^k (alpha central) and are
verified as multiplicative maps into the opposite presentation
(D^op, sigma, d^{-1}).
"""

import random
from dataclasses import dataclass
from math import gcd

from .ground import CapExceeded, conjugation_exponent, partial_norm
from .morphism import Certificate, Condition, _finish

DEFAULT_DIM_CAP = 4


class StructureConstantAlgebra:
    """Finite-dimensional associative algebra over a field C.

    constants[i][j] is the coordinate vector of e_i e_j; vectors are tuples of
    C elements.  Associativity, the unit law, and centrality of C (center ==
    C * unit) are all checked at construction.
    """

    def __init__(self, cfield, dim, constants, unit, names=None, check_center=True):
        self.cfield = cfield
        self.dim = dim
        self.constants = [[tuple(constants[i][j]) for j in range(dim)]
                          for i in range(dim)]
        self.unit = tuple(unit)
        self.names = names or ["e%d" % i for i in range(dim)]
        self._validate(check_center)
        self._inv_cache = {}

    # --- vectors -------------------------------------------------------------
    def zero_vec(self):
        return tuple(self.cfield.zero() for _ in range(self.dim))

    def basis_vec(self, i):
        return tuple(self.cfield.one() if j == i else self.cfield.zero()
                     for j in range(self.dim))

    def scale(self, c, v):
        return tuple(c * x for x in v)

    def add(self, u, v):
        return tuple(a + b for a, b in zip(u, v))

    def neg(self, v):
        return tuple(-a for a in v)

    def mul(self, u, v):
        out = list(self.zero_vec())
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                f = ui * vj
                for k, ck in enumerate(self.constants[i][j]):
                    if ck:
                        out[k] = out[k] + f * ck
        return tuple(out)

    def from_scalar(self, c):
        return self.scale(c, self.unit)

    def elements(self, cap=2 ** 16):
        if self.cfield.order ** self.dim > cap:
            raise CapExceeded("coefficient algebra too large to enumerate")
        from itertools import product
        return [tuple(v) for v in product(self.cfield.elements(), repeat=self.dim)]

    def is_unit(self, v):
        try:
            self.inverse(v)
            return True
        except ValueError:
            return False

    def inverse(self, v):
        """Two-sided inverse by exhaustive scan (the algebras here are tiny)."""
        if v in self._inv_cache:
            return self._inv_cache[v]
        one = self.unit
        for w in self.elements():
            if self.mul(v, w) == one and self.mul(w, v) == one:
                self._inv_cache[v] = w
                return w
        raise ValueError("element is not invertible: %r" % (v,))

    def central_part(self, v):
        """The scalar c with v == c * unit, or None."""
        for c in self.cfield.elements():
            if self.from_scalar(c) == v:
                return c
        return None

    def opposite(self):
        consts = [[self.constants[j][i] for j in range(self.dim)]
                  for i in range(self.dim)]
        return StructureConstantAlgebra(self.cfield, self.dim, consts,
                                        self.unit, names=self.names)

    def _validate(self, check_center):
        dim = self.dim
        e = [self.basis_vec(i) for i in range(dim)]
        for i in range(dim):
            if self.mul(self.unit, e[i]) != e[i] or self.mul(e[i], self.unit) != e[i]:
                raise ValueError("unit law fails on basis element %d" % i)
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    lhs = self.mul(self.mul(e[i], e[j]), e[k])
                    rhs = self.mul(e[i], self.mul(e[j], e[k]))
                    if lhs != rhs:
                        raise ValueError(
                            "structure constants not associative at (%d,%d,%d)"
                            % (i, j, k))
        if check_center:
            center = [v for v in self.elements()
                      if all(self.mul(v, b) == self.mul(b, v) for b in e)]
            scalars = {self.from_scalar(c) for c in self.cfield.elements()}
            if set(center) != scalars:
                raise ValueError("center is larger than C * unit")

    def __repr__(self):
        return "SCA(dim=%d over %r)" % (self.dim, self.cfield)


def build_csa(descriptor):
    """Build a StructureConstantAlgebra from a descriptor dict, or a builtin.

    Builtins: {"builtin": "m2", "cfield": field} for 2x2 matrices over C, and
    {"builtin": "base", "cfield": field} for C itself.
    """
    cfield = descriptor["cfield"]
    kind = descriptor.get("builtin")
    if kind == "m2":
        return m2_algebra(cfield)
    if kind == "base":
        return base_algebra(cfield)
    dim = descriptor["dim"]
    if dim > DEFAULT_DIM_CAP:
        raise CapExceeded("dimension %d exceeds cap %d" % (dim, DEFAULT_DIM_CAP))
    return StructureConstantAlgebra(cfield, dim, descriptor["constants"],
                                    descriptor["unit"],
                                    names=descriptor.get("names"))


def m2_algebra(cfield):
    """2x2 matrices over C with the elementary-matrix basis E11,E12,E21,E22."""
    z, o = cfield.zero(), cfield.one()
    dim = 4

    def emul(i, j):  # E_ab E_cd = delta_bc E_ad with index = 2a+b
        a, b = divmod(i, 2)
        c, d = divmod(j, 2)
        vec = [z] * 4
        if b == c:
            vec[2 * a + d] = o
        return vec

    consts = [[emul(i, j) for j in range(dim)] for i in range(dim)]
    unit = [o, z, z, o]
    names = ["E11", "E12", "E21", "E22"]
    return StructureConstantAlgebra(cfield, dim, consts, unit, names=names)


def base_algebra(cfield):
    """C itself as a dimension-1 algebra over C."""
    o = cfield.one()
    return StructureConstantAlgebra(cfield, 1, [[[o]]], [o], names=["1"])


class DAutMap:
    """A (semi)linear map of D: coefficient automorphism phi of C plus images
    of the basis, tagged 'auto' (multiplicative) or 'anti' (order-reversing).
    The tag is verified on all basis pairs at construction."""

    def __init__(self, D, phi, images, kind):
        if kind not in ("auto", "anti"):
            raise ValueError("kind must be 'auto' or 'anti'")
        self.D = D
        self.phi = phi
        self.images = [tuple(v) for v in images]
        self.kind = kind
        self._verify()

    def __call__(self, v):
        out = list(self.D.zero_vec())
        for i, c in enumerate(v):
            if c:
                img = self.images[i]
                pc = self.phi(c)
                for j, x in enumerate(img):
                    if x:
                        out[j] = out[j] + pc * x
        return tuple(out)

    def restriction_scalar(self):
        """The field automorphism of C obtained by restricting to C * unit."""
        return self.phi

    def compose_inner(self, P):
        """This map followed by conjugation v -> P^{-1} v P."""
        Pinv = self.D.inverse(P)
        imgs = [self.D.mul(self.D.mul(Pinv, im), P) for im in self.images]
        return DAutMap(self.D, self.phi, imgs, self.kind)

    def _verify(self):
        D = self.D
        e = [D.basis_vec(i) for i in range(D.dim)]
        if self(D.unit) != D.unit:
            raise ValueError("map is not unital")
        for i in range(D.dim):
            for j in range(D.dim):
                lhs = self(D.mul(e[i], e[j]))
                if self.kind == "auto":
                    rhs = D.mul(self(e[i]), self(e[j]))
                else:
                    rhs = D.mul(self(e[j]), self(e[i]))
                if lhs != rhs:
                    raise ValueError("map fails the %s law on basis pair (%d,%d)"
                                     % (self.kind, i, j))
        # semilinearity over C must match phi: tau(c v) = phi(c) tau(v) holds
        # by construction of __call__.

    def __repr__(self):
        return "DAutMap(%s, phi=%r)" % (self.kind, self.phi)


def entrywise_map(D, phi, kind="auto"):
    """phi applied to every coordinate (basis fixed)."""
    return DAutMap(D, phi, [D.basis_vec(i) for i in range(D.dim)], kind)


def transpose_map(D, phi):
    """Matrix transpose (for the m2 builtin) composed with entrywise phi."""
    if D.dim != 4:
        raise ValueError("transpose_map expects the 2x2 matrix builtin")
    perm = [0, 2, 1, 3]
    return DAutMap(D, phi, [D.basis_vec(perm[i]) for i in range(4)], "anti")


class GenElem:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = tuple(coeffs)

    def __add__(self, other):
        self.algebra._check_parent(self, other)
        D = self.algebra.D
        return GenElem(self.algebra,
                       [D.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        return self.algebra.gmul(self, other)

    def __eq__(self, other):
        return (isinstance(other, GenElem) and self.algebra is other.algebra
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(any(c for c in v) for v in self.coeffs)

    def __repr__(self):
        D = self.algebra.D
        parts = []
        for i, v in enumerate(self.coeffs):
            terms = ["%r*%s" % (c, D.names[j]) for j, c in enumerate(v) if c]
            if not terms:
                continue
            s = " + ".join(terms)
            if i:
                s = "(%s) t^%d" % (s, i) if i > 1 else "(%s) t" % s
            parts.append(s)
        return " + ".join(parts) if parts else "0"


class GenCyclicAlgebra:
    """(D, sigma, d) = D[t;sigma]/D[t;sigma](t^m - d) with d invertible."""

    def __init__(self, ctx, D, sigma_D, m, d):
        if ctx.n != m:
            raise ValueError("sigma must restrict to C with order m")
        if sigma_D.kind != "auto":
            raise ValueError("sigma_D must be an automorphism")
        if sigma_D.phi != ctx.sigma:
            raise ValueError("sigma_D must restrict to the context generator on C")
        self.ctx = ctx
        self.D = D
        self.sigma_D = sigma_D
        self.m = m
        self.d = tuple(d)
        self.d_inv = D.inverse(self.d)  # raises for non-invertible d
        self._sigma_pows = {0: None}

    # --- elements ------------------------------------------------------------
    def elem(self, coeffs):
        coeffs = [tuple(v) for v in coeffs]
        while len(coeffs) < self.m:
            coeffs.append(self.D.zero_vec())
        if len(coeffs) > self.m:
            raise ValueError("coefficient list longer than m")
        return GenElem(self, coeffs)

    def zero(self):
        return self.elem([])

    def one(self):
        return self.elem([self.D.unit])

    def t(self):
        if self.m == 1:
            return self.elem([self.d])
        return self.monomial(self.D.unit, 1)

    def monomial(self, v, i):
        coeffs = [self.D.zero_vec()] * self.m
        if i < self.m:
            coeffs[i] = tuple(v)
        else:
            raise ValueError("monomial degree out of range")
        return GenElem(self, coeffs)

    def basis_monomials(self):
        """Prime-field basis of the carrier: g^l e_j t^i monomials."""
        C = self.ctx.field
        out = []
        for i in range(self.m):
            for j in range(self.D.dim):
                c = C.one()
                for _ in range(C.deg):
                    out.append(self.monomial(self.D.scale(c, self.D.basis_vec(j)), i))
                    c = c * C.gen()
        return out

    def size(self):
        return self.ctx.field.order ** (self.D.dim * self.m)

    def _check_parent(self, x, y):
        if x.algebra is not self or y.algebra is not self:
            raise ValueError("elements belong to different algebras")

    def sigma_pow_apply(self, i, v):
        i %= self.m
        for _ in range(i):
            v = self.sigma_D(v)
        return v

    # --- multiplication ------------------------------------------------------
    def gmul(self, x, y):
        self._check_parent(x, y)
        D = self.D
        out = [D.zero_vec() for _ in range(2 * self.m - 1)]
        for i, u in enumerate(x.coeffs):
            if not any(u):
                continue
            for j, v in enumerate(y.coeffs):
                if not any(v):
                    continue
                out[i + j] = D.add(out[i + j], D.mul(u, self.sigma_pow_apply(i, v)))
        # right reduction: c t^s == c sigma^(s-m)(d) t^(s-m) for s >= m
        for s in range(2 * self.m - 2, self.m - 1, -1):
            c = out[s]
            if any(c):
                red = D.mul(c, self.sigma_pow_apply(s - self.m, self.d))
                out[s - self.m] = D.add(out[s - self.m], red)
        return GenElem(self, out[:self.m])

    def opposite(self):
        Dop = self.D.opposite()
        sig_op = DAutMap(Dop, self.sigma_D.phi, self.sigma_D.images, "auto")
        return GenCyclicAlgebra(self.ctx, Dop, sig_op, self.m, self.d_inv)

    def to_vector(self, x):
        vec = []
        for v in x.coeffs:
            for c in v:
                vec.extend(c.coeffs)
        return vec

    def describe(self):
        return {"dim_D": self.D.dim, "m": self.m,
                "d": [repr(c) for c in self.d],
                "context": self.ctx.describe()}

    def __repr__(self):
        return "GenCyclic(dim_D=%d, m=%d, d=%r)" % (self.D.dim, self.m, self.d)


# --- the monomial map and its two verdicts ------------------------------------

def gen_apply(tau, alpha, k, A, B, x):
    """Image of x under coefficients tau, t -> alpha t^k, landing in B."""
    tpow = B.one()
    for _ in range(k):
        tpow = B.gmul(tpow, B.t())
    base = B.gmul(B.elem([B.D.from_scalar(alpha)]), tpow)
    out = B.zero()
    power = B.one()
    for i, v in enumerate(x.coeffs):
        if any(v):
            out = out + B.gmul(B.elem([tau(v)]), power)
        if i + 1 < len(x.coeffs):
            power = B.gmul(power, base)
    return out


def check_gen_anti_conditions(tau, alpha, k, A):
    """Norm criterion for (tau, alpha, k) as an anti-endomorphism of A."""
    ctx = A.ctx
    conds = [Condition("alpha-unit", "alpha in C^x", bool(alpha)),
             Condition("tau-order-reversing", "tau reverses products on D",
                       tau.kind == "anti")]
    e = [A.D.basis_vec(i) for i in range(A.D.dim)]
    comm_witness = None
    if k == 1:
        for b in e:
            if tau(A.sigma_D(b)) != A.sigma_D(tau(b)):
                comm_witness = b
                break
        conds.append(Condition("commutation", "tau sigma == sigma tau on D",
                               comm_witness is None, witness=comm_witness))
    else:
        ck = conjugation_exponent(ctx, tau.restriction_scalar())
        conds.append(Condition("conjugation-degree",
                               "tau sigma tau^-1 == sigma^k on C", ck == k,
                               witness=ck))
        conds.append(Condition("gcd", "gcd(k, m) == 1", gcd(k, A.m) == 1))
        dc = A.D.central_part(A.d)
        conds.append(Condition("constant-central",
                               "d central and fixed by sigma",
                               dc is not None and ctx.in_F(dc)))
    td_d = A.D.mul(tau(A.d), A.d) if k == 1 else None
    if k >= 2:
        dk = A.d
        for _ in range(k - 1):
            dk = A.D.mul(dk, A.d)
        td_d = A.D.mul(tau(A.d), dk)
    central = A.D.central_part(td_d)
    conds.append(Condition("constant-product-central",
                           "tau(d) d^k lies in C", central is not None,
                           witness=td_d if central is None else None))
    if not all(c.ok for c in conds):
        return _finish(conds)
    lhs = partial_norm(ctx, ctx.sigma, alpha, A.m)
    conds.append(Condition("norm-equation", "N(alpha) == tau(d) d^k",
                           lhs == central, witness=(lhs, central)))
    return _finish(conds)


def verify_gen_map(tau, alpha, k, A, mode="basis", count=200,
                   seed=0xC0FFEE):
    """Brute-force verdict: multiplicativity into (D^op, sigma, d^{-1}).

    Basis mode scans all pairs of prime-field basis monomials, which decides
    general multiplicativity exactly since both sides are biadditive.  Sampled
    mode draws random full elements as a spot check.
    """
    B = A.opposite()

    def H(x):
        return gen_apply(tau, alpha, k, A, B, x)

    conds = [Condition("unit", "image of 1 is 1", H(A.one()) == B.one())]
    if mode == "basis":
        probes = A.basis_monomials()
    else:
        rng = random.Random(seed)
        C = A.ctx.field
        probes = []
        for _ in range(count):
            coeffs = [tuple(C.from_idx(rng.randrange(C.order))
                            for _ in range(A.D.dim)) for _ in range(A.m)]
            probes.append(A.elem(coeffs))
    images = [H(x) for x in probes]
    ok, witness = True, None
    for x, hx in zip(probes, images):
        for y, hy in zip(probes, images):
            if H(A.gmul(x, y)) != B.gmul(hx, hy):
                ok, witness = False, (x, y)
                break
        if not ok:
            break
    conds.append(Condition("multiplicative", "H(x y) == H(x) H(y) in codomain",
                           ok, witness=witness))
    if mode == "basis":
        from .linalg import rank
        rows = [B.to_vector(h) for h in images]
        bij = rank(rows, A.ctx.field.p) == len(probes)
    else:
        bij = bool(alpha) and gcd(k, A.m) == 1
    conds.append(Condition("bijective", "images of a basis span", bij))
    return _finish(conds, mode="exhaustive" if mode == "basis" else "sampled",
                   seed=seed if mode != "basis" else None)

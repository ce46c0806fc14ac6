"""Quotient algebras K[t;sigma]/K[t;sigma](t^m - a) as explicit algebras.

Multiplication is right-remainder reduction: x o y = xy mod_r (t^m - a).
For m = n this is the (possibly nonassociative) cyclic algebra; it fails to be
associative exactly when a lies outside the fixed field F.
"""

from itertools import product

from .ground import CapExceeded
from .linalg import nullspace, rank
from . import skewpoly as sp


class PetitAlgebra:
    def __init__(self, ctx, m, a):
        if not a:
            raise ValueError("the constant a must be nonzero")
        if m < 1:
            raise ValueError("m must be positive")
        self.ctx = ctx
        self.m = m
        self.a = a
        self._flags = {}

    # --- elements ------------------------------------------------------------
    def elem(self, coeffs):
        c = sp.sp_trim(coeffs)
        if len(c) > self.m:
            c = sp.mod_r(c, self.m, self.a, self.ctx)
        return AlgElem(self, c)

    def zero(self):
        return AlgElem(self, sp.sp_zero())

    def one(self):
        return AlgElem(self, sp.sp_const(self.ctx.one()))

    def t(self):
        if self.m == 1:
            return self.elem([self.a])
        return AlgElem(self, sp.sp_monomial(self.ctx.one(), 1, self.ctx))

    def monomial(self, c, i):
        return self.elem([self.ctx.zero()] * i + [c])

    def basis(self):
        """Prime-field basis: (power basis of K) x (t-monomials)."""
        K = self.ctx.field
        if self.ctx.backend != "ff":
            raise CapExceeded("basis enumeration needs the finite backend")
        out = []
        for i in range(self.m):
            b = K.one()
            for _ in range(K.deg):
                out.append(self.monomial(b, i))
                b = b * K.gen()
        return out

    def k_basis(self):
        """The K-basis 1, t, ..., t^(m-1)."""
        return [self.monomial(self.ctx.one(), i) for i in range(self.m)]

    def elements(self):
        if not self.ctx.iterable:
            raise CapExceeded("backend does not support element iteration")
        for coeffs in product(self.ctx.elements(), repeat=self.m):
            yield AlgElem(self, sp.sp_trim(coeffs))

    def size(self):
        return self.ctx.field.order ** self.m

    # --- structure -----------------------------------------------------------
    def pmul(self, x, y):
        self._check_parent(x, y)
        return AlgElem(self, sp.mod_r(sp.sp_mul(x.coeffs, y.coeffs, self.ctx),
                                      self.m, self.a, self.ctx))

    def op_mul(self, x, y):
        """Multiplication of the opposite algebra on the same carrier."""
        return self.pmul(y, x)

    def associator(self, x, y, z):
        self._check_parent(x, y)
        self._check_parent(y, z)
        return self.pmul(self.pmul(x, y), z) - self.pmul(x, self.pmul(y, z))

    def _check_parent(self, x, y):
        if x.algebra is not self or y.algebra is not self:
            raise ValueError("elements belong to different algebras")

    def is_two_sided(self):
        if "two_sided" not in self._flags:
            self._flags["two_sided"] = sp.is_two_sided(self.m, self.a, self.ctx)
        return self._flags["two_sided"]

    def is_associative(self):
        """For m = n this must match the predicate a in F; both are computed."""
        if "associative" in self._flags:
            return self._flags["associative"]
        if self.ctx.backend == "ff":
            basis = self.basis()
            ans = all(not self.associator(x, y, z)
                      for x in basis for y in basis for z in basis)
        else:
            probes = [self.one(), self.t()] + [
                self.monomial(c, i) for i in range(self.m)
                for c in (self.ctx.field.x(),)]
            ans = all(not self.associator(x, y, z)
                      for x in probes for y in probes for z in probes)
        if self.m == self.ctx.n:
            field_side = self.ctx.in_F(self.a)
            if field_side != ans:  # pragma: no cover
                raise RuntimeError("associativity criterion mismatch (internal)")
        self._flags["associative"] = ans
        return ans

    def is_semifield(self, cap=2 ** 16):
        if "semifield" not in self._flags:
            self._flags["semifield"] = (not self.is_associative()
                                        and sp.is_irreducible(self.m, self.a,
                                                              self.ctx, cap))
        return self._flags["semifield"]

    def opposite(self):
        """The algebra with constant a^{-1} (the opposite presentation)."""
        return PetitAlgebra(self.ctx, self.m, self.a.inverse())

    # --- nuclei --------------------------------------------------------------
    def to_vector(self, x):
        K = self.ctx.field
        vec = []
        for i in range(self.m):
            c = x.coeffs[i] if i < len(x.coeffs) else K.zero()
            vec.extend(c.coeffs)
        return vec

    def from_vector(self, vec):
        K = self.ctx.field
        coeffs = []
        for i in range(self.m):
            chunk = vec[i * K.deg:(i + 1) * K.deg]
            coeffs.append(K.from_coeffs(list(chunk)))
        return self.elem(coeffs)

    def nucleus_dims(self, cap=16):
        """(left, middle, right, center) dimensions over the prime field."""
        if self.ctx.backend != "ff":
            raise CapExceeded("nucleus computation needs the finite backend")
        K = self.ctx.field
        dim = self.m * K.deg
        if dim > cap:
            raise CapExceeded("dimension %d exceeds cap %d" % (dim, cap))
        basis = self.basis()
        p = K.p

        def solution_dim(rows):
            return dim - rank(rows, p) if rows else dim

        def slot_rows(slot):
            rows = []
            for y in basis:
                for z in basis:
                    # constraint rows: linear map x -> associator with x in slot
                    cols = []
                    for e in basis:
                        if slot == 0:
                            v = self.associator(e, y, z)
                        elif slot == 1:
                            v = self.associator(y, e, z)
                        else:
                            v = self.associator(y, z, e)
                        cols.append(self.to_vector(v))
                    for r_i in range(dim):
                        row = [cols[c_i][r_i] for c_i in range(dim)]
                        if any(row):
                            rows.append(row)
            return rows

        left_rows = slot_rows(0)
        mid_rows = slot_rows(1)
        right_rows = slot_rows(2)
        left = solution_dim(left_rows)
        middle = solution_dim(mid_rows)
        right = solution_dim(right_rows)
        comm_rows = []
        for y in basis:
            cols = [self.to_vector(self.pmul(e, y) - self.pmul(y, e)) for e in basis]
            for r_i in range(dim):
                row = [cols[c_i][r_i] for c_i in range(dim)]
                if any(row):
                    comm_rows.append(row)
        center = solution_dim(left_rows + mid_rows + right_rows + comm_rows)
        return left, middle, right, center

    def nucleus_basis(self, slot):
        """Element basis of the left (0), middle (1) or right (2) nucleus."""
        K = self.ctx.field
        dim = self.m * K.deg
        basis = self.basis()
        rows = []
        for y in basis:
            for z in basis:
                cols = []
                for e in basis:
                    if slot == 0:
                        v = self.associator(e, y, z)
                    elif slot == 1:
                        v = self.associator(y, e, z)
                    else:
                        v = self.associator(y, z, e)
                    cols.append(self.to_vector(v))
                for r_i in range(dim):
                    row = [cols[c_i][r_i] for c_i in range(dim)]
                    if any(row):
                        rows.append(row)
        if not rows:
            return [self.from_vector(v) for v in
                    ([1 if i == j else 0 for i in range(dim)] for j in range(dim))]
        vecs = nullspace(rows, K.p)
        out = []
        for v in vecs:
            combo = self.zero()
            for c, e in zip(v, basis):
                if c:
                    combo = combo + self.monomial(self.ctx.field.from_int(c), 0) * e
            out.append(combo)
        return out

    def describe(self):
        return {"context": self.ctx.describe(), "m": self.m,
                "a": _elem_json(self.a)}

    def __repr__(self):
        return "Petit(%r, m=%d, a=%r)" % (self.ctx, self.m, self.a)


class AlgElem:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = coeffs

    def __add__(self, other):
        self.algebra._check_parent(self, other)
        return AlgElem(self.algebra,
                       sp.sp_add(self.coeffs, other.coeffs, self.algebra.ctx))

    def __sub__(self, other):
        self.algebra._check_parent(self, other)
        return AlgElem(self.algebra,
                       sp.sp_sub(self.coeffs, other.coeffs, self.algebra.ctx))

    def __neg__(self):
        return AlgElem(self.algebra, sp.sp_neg(self.coeffs))

    def __mul__(self, other):
        return self.algebra.pmul(self, other)

    def __eq__(self, other):
        return (isinstance(other, AlgElem) and self.algebra is other.algebra
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            ts = "" if i == 0 else ("t" if i == 1 else "t^%d" % i)
            cs = repr(c)
            parts.append(cs if not ts else (ts if cs == "1" else "%s %s" % (cs, ts)))
        return " + ".join(parts)


def _elem_json(e):
    from .ff import FFElem
    if isinstance(e, FFElem):
        return e.coeffs
    return {"num": [c.coeffs for c in e.num], "den": [c.coeffs for c in e.den]}

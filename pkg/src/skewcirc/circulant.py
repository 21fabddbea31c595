"""Dense exact matrices over a finite field and the twisted circulants.

A circulant here is the n x n matrix whose i-th row holds the coordinates of
x^i * [f] in the quotient module; its row space is the submodule generated by
[f].  Besides construction and recognition, this module verifies the product
formula, the transpose identities and the annihilation products for
factorizations of x^n - a.

Matrices store packed field values row-major and run schoolbook O(n^3)
elimination; lengths are small by design.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldElement, FieldMismatchError, fmt_element
from .quotient import Coset, gamma
from .report import Report
from .skewpoly import fmt_poly, rho_l, rho_r, right_divides, theta_poly


class Matrix:
    """Immutable matrix over one field, entries packed as integers."""

    __slots__ = ("field", "nrows", "ncols", "_r")

    def __init__(self, field, rows, ncols=None):
        packed = []
        for row in rows:
            vals = []
            for e in row:
                if isinstance(e, FieldElement):
                    if e.field is not field:
                        raise FieldMismatchError("entry from a different field")
                    vals.append(e.val)
                else:
                    vals.append(int(e))
            packed.append(tuple(vals))
        if packed:
            ncols = len(packed[0])
            if any(len(r) != ncols for r in packed):
                raise ValueError("ragged rows")
        elif ncols is None:
            raise ValueError("empty matrix needs an explicit column count")
        self.field = field
        self.nrows = len(packed)
        self.ncols = ncols
        self._r = tuple(packed)

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def entry(self, i, j):
        return FieldElement(self.field, self._r[i][j])

    def row(self, i):
        return tuple(FieldElement(self.field, v) for v in self._r[i])

    def rows(self):
        return tuple(self.row(i) for i in range(self.nrows))

    def packed_rows(self):
        return self._r

    def _check(self, other):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.field is not self.field:
            raise FieldMismatchError("matrices over different fields")
        return other

    def __add__(self, other):
        self._check(other)
        if (other.nrows, other.ncols) != (self.nrows, self.ncols):
            raise ValueError("shape mismatch in addition")
        add = self.field.add_val
        return Matrix(self.field,
                      [[add(a, b) for a, b in zip(ra, rb)]
                       for ra, rb in zip(self._r, other._r)], self.ncols)

    def __sub__(self, other):
        self._check(other)
        neg = self.field.neg_val
        return self + Matrix(self.field, [[neg(v) for v in r] for r in other._r],
                             other.ncols)

    def __mul__(self, other):
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(
                f"shape mismatch: {self.nrows}x{self.ncols} * {other.nrows}x{other.ncols}")
        add, mul = self.field.add_val, self.field.mul_val
        cols = other.ncols
        out = []
        for ra in self._r:
            acc = [0] * cols
            for t, v in enumerate(ra):
                if v == 0:
                    continue
                rb = other._r[t]
                for j in range(cols):
                    w = rb[j]
                    if w:
                        acc[j] = add(acc[j], mul(v, w))
            out.append(acc)
        return Matrix(self.field, out, cols)

    def scale(self, c):
        if isinstance(c, FieldElement):
            c = c.val
        mul = self.field.mul_val
        return Matrix(self.field, [[mul(c, v) for v in r] for r in self._r], self.ncols)

    def transpose(self):
        return Matrix(self.field,
                      [[self._r[i][j] for i in range(self.nrows)]
                       for j in range(self.ncols)], self.nrows)

    def _eliminate(self, augment=None):
        """Leftmost-pivot, first-nonzero-row reduction to canonical RREF.

        Returns (rref rows, pivot columns, augmented rows)."""
        field = self.field
        rows = [list(r) for r in self._r]
        aug = [list(r) for r in augment] if augment is not None else None
        pivots = []
        pr = 0
        for pc in range(self.ncols):
            sel = next((i for i in range(pr, len(rows)) if rows[i][pc]), None)
            if sel is None:
                continue
            rows[pr], rows[sel] = rows[sel], rows[pr]
            if aug is not None:
                aug[pr], aug[sel] = aug[sel], aug[pr]
            inv = field.inv_val(rows[pr][pc])
            rows[pr] = [field.mul_val(inv, v) for v in rows[pr]]
            if aug is not None:
                aug[pr] = [field.mul_val(inv, v) for v in aug[pr]]
            for i in range(len(rows)):
                if i != pr and rows[i][pc]:
                    f = rows[i][pc]
                    rows[i] = [field.sub_val(v, field.mul_val(f, w))
                               for v, w in zip(rows[i], rows[pr])]
                    if aug is not None:
                        aug[i] = [field.sub_val(v, field.mul_val(f, w))
                                  for v, w in zip(aug[i], aug[pr])]
            pivots.append(pc)
            pr += 1
            if pr == len(rows):
                break
        return rows, pivots, aug

    def rref(self):
        rows, pivots, _ = self._eliminate()
        return Matrix(self.field, rows, self.ncols)

    def rank(self):
        _, pivots, _ = self._eliminate()
        return len(pivots)

    def inverse(self):
        if self.nrows != self.ncols:
            raise ValueError("only square matrices invert")
        rows, pivots, aug = self._eliminate(
            augment=Matrix.identity(self.field, self.nrows)._r)
        if len(pivots) != self.nrows:
            raise ValueError("matrix is singular")
        return Matrix(self.field, aug, self.ncols)

    def right_kernel(self):
        """Rows spanning {v : A v^T = 0}."""
        rows, pivots, _ = self._eliminate()
        free = [j for j in range(self.ncols) if j not in pivots]
        neg = self.field.neg_val
        basis = []
        for f in free:
            v = [0] * self.ncols
            v[f] = 1
            for i, pc in enumerate(pivots):
                v[pc] = neg(rows[i][f])
            basis.append(v)
        return Matrix(self.field, basis, self.ncols)

    def row_space_equal(self, other):
        self._check(other)
        if other.ncols != self.ncols:
            return False
        mine, p1, _ = self._eliminate()
        theirs, p2, _ = other._eliminate()
        return (p1 == p2
                and [r for r in mine if any(r)] == [r for r in theirs if any(r)])

    def row_space_contains(self, other):
        """Whether every row of ``other`` lies in this row space."""
        self._check(other)
        if other.ncols != self.ncols:
            return False
        stacked = Matrix(self.field, list(self._r) + list(other._r), self.ncols)
        return stacked.rank() == self.rank()

    @property
    def is_zero(self):
        return all(not any(r) for r in self._r)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and other.field is self.field
                and other.ncols == self.ncols and other._r == self._r)

    def __hash__(self):
        return hash((id(self.field), self.ncols, self._r))

    def pretty(self, additive=False):
        cells = [[fmt_element(self.entry(i, j), additive=additive)
                  for j in range(self.ncols)] for i in range(self.nrows)]
        if not cells:
            return f"(empty 0x{self.ncols})"
        widths = [max(len(cells[i][j]) for i in range(self.nrows))
                  for j in range(self.ncols)]
        return "\n".join(
            "[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]"
            for row in cells)

    def to_json(self, additive=False):
        return [[fmt_element(self.entry(i, j), additive=additive)
                 for j in range(self.ncols)] for i in range(self.nrows)]

    def __repr__(self):
        return f"<{self.nrows}x{self.ncols} matrix over {self.field}>"


def _shift_vals(mod, vals):
    """One twisted shift of a packed length-n row."""
    field, theta = mod.field, mod.theta
    return (field.mul_val(mod.a.val, theta.raw(vals[-1], 1)),
            *(theta.raw(v, 1) for v in vals[:-1]))


@dataclass(frozen=True)
class Circulant:
    matrix: Matrix
    source: Coset
    modulus: object

    def __repr__(self):
        return (f"<circulant of [{fmt_poly(self.source.rep)}] "
                f"mod {fmt_poly(self.modulus.modulus)}>")


def circulant_of(coset):
    """Stack the coordinate rows of x^i * [f] for i = 0..n-1."""
    mod = coset.mod
    n = mod.n
    rep = coset.rep._c
    row = tuple(rep[i] if i < len(rep) else 0 for i in range(n))
    rows = [row]
    for _ in range(n - 1):
        row = _shift_vals(mod, row)
        rows.append(row)
    mat = Matrix(mod.field, rows, n)
    if __debug__:
        assert mat == _circulant_closed_form(coset)
    return Circulant(mat, coset, mod)


def _circulant_closed_form(coset):
    """Entrywise construction from the twist pattern; debug cross-check."""
    mod = coset.mod
    n, field, theta = mod.n, mod.field, mod.theta
    f = coset.rep._c
    fv = tuple(f[i] if i < len(f) else 0 for i in range(n))
    aval = mod.a.val
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i <= j:
                row.append(theta.raw(fv[j - i], i))
            else:
                row.append(field.mul_val(theta.raw(aval, j),
                                         theta.raw(fv[n + j - i], i)))
        rows.append(row)
    return Matrix(field, rows, n)


@dataclass(frozen=True)
class RecognizedCirculant:
    """Result of circulant recognition: the base constant (None when every
    base validates), the first-row coset, and the ambiguity flag."""

    b: object
    coset: Coset
    ambiguous: bool


def recognize_circulant(A, mod):
    """Decide whether A equals a twisted circulant over SOME nonzero base.

    Row 0 forces the coset; any strictly-lower entry with a nonzero source
    coefficient forces the base, which is then validated entrywise.  Returns
    None when no base works."""
    n, field, theta = mod.n, mod.field, mod.theta
    if A.nrows != n or A.ncols != n:
        raise ValueError(f"expected a {n}x{n} matrix")
    if A.field is not field:
        raise FieldMismatchError("matrix over a different field")
    s = A._r[0]
    coset = mod.pa(tuple(FieldElement(field, v) for v in s))
    bval = None
    for i in range(1, n):
        for j in range(i):
            src = s[n + j - i]
            if src:
                if A._r[i][j] == 0:
                    return None
                cand = theta.raw(
                    field.div_val(A._r[i][j], theta.raw(src, i)), -j)
                bval = cand
                break
        if bval is not None:
            break
    ambiguous = bval is None
    check = 1 if ambiguous else bval
    for i in range(1, n):
        for j in range(n):
            if i <= j:
                want = theta.raw(s[j - i], i)
            else:
                want = field.mul_val(theta.raw(check, j), theta.raw(s[n + j - i], i))
            if A._r[i][j] != want:
                return None
    return RecognizedCirculant(None if ambiguous else FieldElement(field, bval),
                               coset, ambiguous)


def prod_formula_check(f, g, mod):
    """Check M_a([f g]) = M_c([f]) M_a([g]) for a right divisor g of x^n - a."""
    rep = Report("circulant-product-formula")
    if not right_divides(g, mod.modulus):
        rep.add("right-divisor", False,
                f"{fmt_poly(g)} does not right-divide {fmt_poly(mod.modulus)}")
        return rep
    rep.add("right-divisor", True)
    c = gamma(mod.a, g, mod)
    mod_c = mod.with_a(c)
    lhs = circulant_of(mod.reduce(f * g)).matrix
    rhs = circulant_of(mod_c.reduce(f)).matrix * circulant_of(mod.reduce(g)).matrix
    rep.add("product-formula", lhs == rhs,
            f"f={fmt_poly(f)}, g={fmt_poly(g)}")
    return rep


def central_mul_check(f, g, mod):
    """Central case: the circulant map is multiplicative on all cosets."""
    rep = Report("central-multiplicativity")
    if not mod.is_central:
        rep.skipped = "modulus is not central"
        return rep
    lhs = circulant_of(mod.reduce(f * g)).matrix
    rhs = circulant_of(mod.reduce(f)).matrix * circulant_of(mod.reduce(g)).matrix
    rep.add("multiplicative", lhs == rhs, f"f={fmt_poly(f)}, g={fmt_poly(g)}")
    return rep


def _hat_polys(h, g, mod):
    n = mod.n
    return (rho_l(theta_poly(h, -n)), rho_r(theta_poly(g, n)))


def transpose_theorems(h, g, mod):
    """Verify that transposing the circulant of a right divisor lands on
    circulants again, in all three published shapes, plus the inverse rule
    for monomial circulants."""
    n, a, theta = mod.n, mod.a, mod.theta
    ring = mod.ring
    if h * g != mod.modulus:
        raise ValueError("not a factorization of the modulus")
    k = h.deg
    c = gamma(a, g, mod)
    cinv = c.inverse()
    hhat, ghat = _hat_polys(h, g, mod)
    rep = Report("circulant-transposes")

    mg = circulant_of(mod.reduce(g)).matrix
    mod_cinv = mod.with_a(cinv)
    g_sharp = (ring.const(a) * ghat * ring.x_pow(k)
               - ring.const(c * g.constant) * ring.xn_minus(n, cinv))
    rep.add("transpose-is-circulant",
            mg.transpose() == circulant_of(mod_cinv.reduce(g_sharp)).matrix)

    lhs2 = circulant_of(mod.with_a(c).reduce(ring.x_pow(k))).matrix * mg
    rhs2 = circulant_of(
        mod.with_a(theta(cinv, k)).reduce(ring.const(a) * ghat)).matrix.transpose()
    rep.add("shifted-transpose", lhs2 == rhs2)

    lhs3 = (circulant_of(mod.with_a(theta(cinv, k - n)).reduce(ring.x_pow(n - k))).matrix
            * circulant_of(mod.with_a(a.inverse()).reduce(hhat)).matrix)
    rhs3 = circulant_of(
        mod.with_a(c).reduce(ring.const(a.inverse()) * h)).matrix.transpose()
    rep.add("cofactor-transpose", lhs3 == rhs3)

    ident = Matrix.identity(mod.field, n)
    ok = True
    for b in mod.field.units():
        mb = mod.with_a(b)
        mbinv = mod.with_a(b.inverse())
        for i in range(n):
            xi = ring.x_pow(i)
            prod = (circulant_of(mb.reduce(xi)).matrix.transpose()
                    * circulant_of(mbinv.reduce(xi)).matrix)
            if prod != ident:
                ok = False
                rep.add("monomial-transpose-inverse", False,
                        f"b={fmt_element(b)}, i={i}")
                break
        if not ok:
            break
    if ok:
        rep.add("monomial-transpose-inverse", True)
    return rep


def annihilation_check(h, g, mod):
    """The two vanishing products attached to a factorization, plus the
    two-sided pair in the central case."""
    a = mod.a
    ring = mod.ring
    if h * g != mod.modulus:
        raise ValueError("not a factorization of the modulus")
    c = gamma(a, g, mod)
    hhat, _ = _hat_polys(h, g, mod)
    rep = Report("annihilation")
    mg = circulant_of(mod.reduce(g)).matrix
    prod1 = mg * circulant_of(mod.with_a(c).reduce(ring.const(a.inverse()) * h)).matrix
    rep.add("cofactor-product-zero", prod1.is_zero)
    prod2 = mg * circulant_of(mod.with_a(a.inverse()).reduce(hhat)).matrix.transpose()
    rep.add("dual-product-zero", prod2.is_zero)
    if mod.is_central:
        mh = circulant_of(mod.reduce(h)).matrix
        rep.add("central-two-sided-zero",
                (mg * mh).is_zero and (mh * mg).is_zero)
    return rep

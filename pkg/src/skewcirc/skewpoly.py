"""Skew polynomials over a finite field with a twisted variable.

The ring collects polynomials ``f = sum f_i x^i`` (coefficients kept on the
left) where the variable does not commute with constants: ``x*c = theta(c)*x``
for a fixed field automorphism ``theta``.  Left and right division both work
and are the computational primitives everything else builds on: gcrd/lclm via
the right Euclidean algorithm with Bezout bookkeeping, coefficient-reversal
maps, and centrality tests.

Coefficients are stored ascending as packed field values; the zero polynomial
is the empty tuple and its degree is ``NEG_INF``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .gf import FieldElement, FieldMismatchError, fmt_element, parse_element

NEG_INF = float("-inf")


class RingMismatchError(FieldMismatchError):
    """Operands come from different skew-polynomial rings."""


class SkewRing:
    """The ring of twisted polynomials for one (field, automorphism) pair."""

    def __init__(self, field, theta):
        if theta.field is not field:
            raise FieldMismatchError("automorphism acts on a different field")
        self.field = field
        self.theta = theta

    def __eq__(self, other):
        return (isinstance(other, SkewRing)
                and other.field is self.field and other.theta.s == self.theta.s)

    def __hash__(self):
        return hash((id(self.field), self.theta.s))

    def __repr__(self):
        return f"{self.field}[x;frob^{self.theta.s}]"

    # -- construction ---------------------------------------------------------

    def poly(self, coeffs):
        """Build from field elements or packed values, ascending order."""
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field is not self.field:
                    raise RingMismatchError("coefficient from a different field")
                vals.append(c.val)
            else:
                v = int(c)
                if not 0 <= v < self.field.q:
                    raise ValueError(f"packed coefficient {v} out of range")
                vals.append(v)
        while vals and vals[-1] == 0:
            vals.pop()
        return SkewPoly(self, tuple(vals))

    def _make(self, vals):
        return SkewPoly(self, vals)

    @property
    def zero(self):
        return SkewPoly(self, ())

    @property
    def one(self):
        return SkewPoly(self, (1,))

    @property
    def x(self):
        return SkewPoly(self, (0, 1))

    def x_pow(self, k):
        if k < 0:
            raise ValueError("negative power of x")
        return SkewPoly(self, (0,) * k + (1,))

    def const(self, c):
        if isinstance(c, int):
            c = self.field.from_int(c)
        if c.field is not self.field:
            raise RingMismatchError("constant from a different field")
        return SkewPoly(self, (c.val,) if c.val else ())

    def xn_minus(self, n, a):
        """The binomial x^n - a."""
        if isinstance(a, int):
            a = self.field.from_int(a)
        return SkewPoly(self, (self.field.neg_val(a.val),) + (0,) * (n - 1) + (1,))

    def parse(self, text):
        return parse_poly(self, text)

    # -- raw kernels on packed coefficient tuples ------------------------------

    def _mul(self, fc, gc):
        if not fc or not gc:
            return ()
        field, theta = self.field, self.theta
        out = [0] * (len(fc) + len(gc) - 1)
        for i, fi in enumerate(fc):
            if fi == 0:
                continue
            for j, gj in enumerate(gc):
                if gj:
                    out[i + j] = field.add_val(out[i + j],
                                               field.mul_val(fi, theta.raw(gj, i)))
        return tuple(out)

    def _add(self, fc, gc):
        field = self.field
        if len(fc) < len(gc):
            fc, gc = gc, fc
        out = list(fc)
        for i, c in enumerate(gc):
            out[i] = field.add_val(out[i], c)
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def _neg(self, fc):
        neg = self.field.neg_val
        return tuple(neg(c) for c in fc)

    def _rdivmod(self, fc, gc):
        """Quotient/remainder with the divisor acting on the right: f = s*g + r."""
        if not gc:
            raise ZeroDivisionError("division by the zero polynomial")
        field, theta = self.field, self.theta
        dg = len(gc) - 1
        if len(fc) <= dg:
            return (), fc
        r = list(fc)
        q = [0] * (len(fc) - dg)
        glc_inv = field.inv_val(gc[-1])
        for d in range(len(r) - 1, dg - 1, -1):
            c = r[d]
            if c == 0:
                continue
            shift = d - dg
            t = field.mul_val(c, theta.raw(glc_inv, shift))
            q[shift] = t
            for j in range(dg + 1):
                gj = gc[j]
                if gj:
                    r[shift + j] = field.sub_val(
                        r[shift + j], field.mul_val(t, theta.raw(gj, shift)))
        del r[dg:]
        while r and r[-1] == 0:
            r.pop()
        return tuple(q), tuple(r)

    def _ldivmod(self, fc, gc):
        """Quotient/remainder with the divisor acting on the left: f = g*s + r."""
        if not gc:
            raise ZeroDivisionError("division by the zero polynomial")
        field, theta = self.field, self.theta
        dg = len(gc) - 1
        if len(fc) <= dg:
            return (), fc
        r = list(fc)
        q = [0] * (len(fc) - dg)
        for d in range(len(r) - 1, dg - 1, -1):
            c = r[d]
            if c == 0:
                continue
            shift = d - dg
            t = theta.raw(field.div_val(c, gc[-1]), -dg)
            q[shift] = t
            for j in range(dg + 1):
                gj = gc[j]
                if gj:
                    r[shift + j] = field.sub_val(
                        r[shift + j], field.mul_val(gj, theta.raw(t, j)))
        del r[dg:]
        while r and r[-1] == 0:
            r.pop()
        return tuple(q), tuple(r)

    def _scale_left(self, c, fc):
        if c == 0:
            return ()
        mul = self.field.mul_val
        return tuple(mul(c, v) for v in fc)

    def _theta(self, fc, power):
        raw = self.theta.raw
        return tuple(raw(c, power) for c in fc)


class SkewPoly:
    """One twisted polynomial; immutable, usable as a dict key."""

    __slots__ = ("ring", "_c")

    def __init__(self, ring, c):
        self.ring = ring
        self._c = c

    def _same(self, other):
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError("polynomials from different rings")
        return other

    # -- structure -------------------------------------------------------------

    @property
    def deg(self):
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def is_zero(self):
        return not self._c

    @property
    def is_monic(self):
        return bool(self._c) and self._c[-1] == 1

    def coeff(self, i):
        v = self._c[i] if 0 <= i < len(self._c) else 0
        return FieldElement(self.ring.field, v)

    @property
    def coeffs(self):
        """Ascending coefficients up to the degree, as field elements."""
        return tuple(FieldElement(self.ring.field, v) for v in self._c)

    def lc(self):
        if not self._c:
            raise ValueError("the zero polynomial has no leading coefficient")
        return FieldElement(self.ring.field, self._c[-1])

    @property
    def constant(self):
        return self.coeff(0)

    def monic(self):
        if not self._c:
            raise ValueError("cannot normalize the zero polynomial")
        if self._c[-1] == 1:
            return self
        inv = self.ring.field.inv_val(self._c[-1])
        return self.ring._make(self.ring._scale_left(inv, self._c))

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other):
        return self.ring._make(self.ring._add(self._c, self._same(other)._c))

    def __sub__(self, other):
        return self.ring._make(
            self.ring._add(self._c, self.ring._neg(self._same(other)._c)))

    def __neg__(self):
        return self.ring._make(self.ring._neg(self._c))

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            other = self.ring.const(other)
        return self.ring._make(self.ring._mul(self._c, self._same(other)._c))

    def __rmul__(self, other):
        if isinstance(other, FieldElement):
            return self.ring.const(other) * self
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative polynomial power")
        out = self.ring.one
        for _ in range(k):
            out = out * self
        return out

    def map_theta(self, power=1):
        return self.ring._make(self.ring._theta(self._c, power))

    def __eq__(self, other):
        return (isinstance(other, SkewPoly)
                and other.ring == self.ring and other._c == self._c)

    def __hash__(self):
        return hash((self.ring, self._c))

    def __repr__(self):
        return f"<{fmt_poly(self)} over {self.ring}>"

    def __str__(self):
        return fmt_poly(self)


@dataclass(frozen=True)
class GcrdResult:
    """Monic gcrd ``d`` with cofactors satisfying ``d = u*f1 + v*f2``."""

    d: SkewPoly
    u: SkewPoly
    v: SkewPoly


def skew_mul(f, g):
    return f * g


def right_divmod(f, g):
    """Unique (s, r) with f = s*g + r and deg(r) < deg(g)."""
    q, r = f.ring._rdivmod(f._c, f._same(g)._c)
    return f.ring._make(q), f.ring._make(r)


def left_divmod(f, g):
    """Unique (s, r) with f = g*s + r and deg(r) < deg(g)."""
    q, r = f.ring._ldivmod(f._c, f._same(g)._c)
    return f.ring._make(q), f.ring._make(r)


def right_divides(g, f):
    if g.is_zero:
        return f.is_zero
    return not f.ring._rdivmod(f._c, g._c)[1]


def left_divides(g, f):
    if g.is_zero:
        return f.is_zero
    return not f.ring._ldivmod(f._c, g._c)[1]


def _euclid_rows(f1, f2):
    """Right-division Euclid on (f1, f2), tracking rows r = u*f1 + v*f2.

    Returns the last nonzero row and the terminating zero row, each as a
    coefficient triple (r, u, v).
    """
    ring = f1.ring
    row0 = (f1._c, (1,), ())
    row1 = (f2._c, (), (1,))
    while row1[0]:
        q, r = ring._rdivmod(row0[0], row1[0])
        nxt = (r,
               ring._add(row0[1], ring._neg(ring._mul(q, row1[1]))),
               ring._add(row0[2], ring._neg(ring._mul(q, row1[2]))))
        row0, row1 = row1, nxt
    return row0, row1


def gcrd(f1, f2):
    """Greatest common right divisor with a Bezout certificate."""
    f1._same(f2)
    ring = f1.ring
    if f1.is_zero and f2.is_zero:
        raise ValueError("gcrd(0, 0) is undefined")
    (rc, uc, vc), _ = _euclid_rows(f1, f2)
    inv = ring.field.inv_val(rc[-1])
    res = GcrdResult(ring._make(ring._scale_left(inv, rc)),
                     ring._make(ring._scale_left(inv, uc)),
                     ring._make(ring._scale_left(inv, vc)))
    assert res.u * f1 + res.v * f2 == res.d
    return res


def lclm(f1, f2):
    """Least common left multiple, from the terminating Euclid row."""
    f1._same(f2)
    if f1.is_zero or f2.is_zero:
        raise ValueError("lclm needs nonzero arguments")
    ring = f1.ring
    last, zero_row = _euclid_rows(f1, f2)
    ell = ring._make(ring._mul(zero_row[1], f1._c)).monic()
    # degree law: deg gcrd + deg lclm = deg f1 + deg f2
    assert (len(last[0]) - 1) + ell.deg == f1.deg + f2.deg
    assert right_divides(f2, ell)
    return ell


def theta_poly(f, power=1):
    """Apply the ring automorphism to every coefficient."""
    return f.map_theta(power)


def rho_l(f):
    """Left reciprocal: coefficient reversal with ascending twists."""
    if f.is_zero:
        return f
    t = f.deg
    raw = f.ring.theta.raw
    return f.ring._make(_strip(tuple(raw(f._c[t - i], i) for i in range(t + 1))))


def rho_r(f):
    """Right reciprocal: coefficient reversal with descending twists."""
    if f.is_zero:
        return f
    t = f.deg
    raw = f.ring.theta.raw
    return f.ring._make(_strip(tuple(raw(f._c[t - i], i - t) for i in range(t + 1))))


def _strip(vals):
    n = len(vals)
    while n and vals[n - 1] == 0:
        n -= 1
    return vals[:n]


def is_central(f):
    """Whether f commutes with the whole ring: coefficients fixed by theta,
    exponents multiples of the automorphism order."""
    order = f.ring.theta.order
    raw = f.ring.theta.raw
    for i, c in enumerate(f._c):
        if c and (i % order != 0 or raw(c, 1) != c):
            return False
    return True


def is_twosided(f):
    """Whether f equals (unit) * x^t * (central polynomial)."""
    if f.is_zero:
        return True
    val = 0
    while f._c[val] == 0:
        val += 1
    body = f._c[val:]
    inv = f.ring.field.inv_val(body[0])
    return is_central(f.ring._make(f.ring._scale_left(inv, body)))


def random_poly(ring, rng, deg, *, monic=False, nonzero_constant=False):
    """Uniform random polynomial of exact degree ``deg`` (deg < 0 gives 0)."""
    if deg < 0:
        return ring.zero
    q = ring.field.q
    vals = [rng.randrange(q) for _ in range(deg + 1)]
    vals[-1] = 1 if monic else rng.randrange(1, q)
    if nonzero_constant and deg > 0:
        vals[0] = rng.randrange(1, q)
    return ring._make(tuple(vals))


# -- parsing and formatting ----------------------------------------------------

_POLY_TERM_RE = re.compile(
    r"^(?:(\d+|a(?:\^\d+)?)\*?)?(?:(x)(?:\^(\d+))?)?$")


def parse_poly(ring, text):
    """Parse ``x^3+a^4*x^2+1`` style literals (``*`` optional, ``-`` allowed)."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty polynomial literal")
    sign = 1
    i = 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    term = ""
    chunks = []
    for ch in s[i:]:
        if ch in "+-":
            chunks.append((sign, term))
            sign = -1 if ch == "-" else 1
            term = ""
        else:
            term += ch
    chunks.append((sign, term))
    total = ring.zero
    for sgn, term in chunks:
        m = _POLY_TERM_RE.match(term)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse polynomial term {term!r} in {text!r}")
        coef = parse_element(ring.field, m.group(1)) if m.group(1) else ring.field.one
        k = 0
        if m.group(2):
            k = int(m.group(3)) if m.group(3) else 1
        mono = ring.const(coef) * ring.x_pow(k)
        total = total + (mono if sgn > 0 else -mono)
    return total


def fmt_poly(f, additive=False):
    """Render with descending powers, e.g. ``x^3+a^4*x^2+1``."""
    if f.is_zero:
        return "0"
    parts = []
    for i in range(f.deg, -1, -1):
        c = f._c[i]
        if c == 0:
            continue
        cs = fmt_element(FieldElement(f.ring.field, c), additive=additive)
        if i == 0:
            parts.append(cs)
        else:
            xs = "x" if i == 1 else f"x^{i}"
            parts.append(xs if cs == "1" else f"{cs}*{xs}")
    return "+".join(parts)


def poly_to_json(f, additive=False):
    """Ascending coefficient list of element strings (empty for zero)."""
    return [fmt_element(c, additive=additive) for c in f.coeffs]

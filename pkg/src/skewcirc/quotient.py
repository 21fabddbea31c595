"""The left module of twisted polynomials modulo x^n - a.

A :class:`ModulusSpec` fixes the field, the automorphism, the length ``n`` and
the nonzero constant ``a``.  Cosets keep their unique representative of degree
below ``n`` (obtained by right division).  This module also houses the
coordinate maps between length-n words and cosets, the twisted constant
attached to a right divisor, the factorization-rotation identity checks, and
canonical submodule generators.
"""

from __future__ import annotations

import itertools

from .gf import FieldElement
from .report import Report
from .skewpoly import (
    SkewPoly,
    fmt_poly,
    gcrd,
    right_divmod,
    rho_l,
    rho_r,
    theta_poly,
)


class ModulusSpec:
    """Quotient data (n, a) over a fixed skew ring."""

    def __init__(self, ring, n, a):
        if isinstance(a, int):
            a = ring.field.from_int(a)
        if a.field is not ring.field:
            raise ValueError("constant a from a different field")
        if a.is_zero:
            raise ValueError("a must be nonzero")
        if n < 1:
            raise ValueError(f"length must be >= 1, got {n}")
        self.ring = ring
        self.field = ring.field
        self.theta = ring.theta
        self.n = n
        self.a = a
        self.modulus = ring.xn_minus(n, a)

    def with_a(self, new_a):
        return ModulusSpec(self.ring, self.n, new_a)

    @property
    def is_central(self):
        """Whether x^n - a commutes with everything (makes the quotient a ring)."""
        return self.n % self.theta.order == 0 and self.theta(self.a) == self.a

    def __eq__(self, other):
        return (isinstance(other, ModulusSpec) and other.ring == self.ring
                and other.n == self.n and other.a == self.a)

    def __hash__(self):
        return hash((self.ring, self.n, self.a.val))

    def __repr__(self):
        return f"<{self.ring} mod {fmt_poly(self.modulus)}>"

    # -- coset machinery -------------------------------------------------------

    def reduce(self, f):
        if f.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        if f.deg < self.n:
            rep = f
        else:
            _, rep = right_divmod(f, self.modulus)
        if __debug__ and not f.is_zero and sum(1 for c in f._c if c) == 1:
            assert rep == self.monomial(f.deg, f.lc()).rep
        return Coset(self, rep)

    def monomial(self, e, coef=None):
        """Coset of x^e (optionally scaled) via the closed wrap-around product."""
        n = self.n
        t, j = divmod(e, n)
        d = self.field.one
        for l in range(t):
            d = d * self.theta(self.a, l * n + j)
        if coef is not None:
            d = coef * d
        return Coset(self, self.ring.const(d) * self.ring.x_pow(j))

    def pa(self, word):
        """Word -> coset, coordinate i riding on x^i."""
        word = tuple(word)
        if len(word) != self.n:
            raise ValueError(f"expected a word of length {self.n}")
        return Coset(self, self.ring.poly(word))

    def va(self, coset):
        """Coset -> word; inverse of :meth:`pa`."""
        if coset.mod != self:
            raise ValueError("coset from a different modulus")
        rep = coset.rep
        return tuple(rep.coeff(i) for i in range(self.n))

    def cosets(self):
        """All q^n cosets, in lexicographic packed order."""
        for vals in itertools.product(range(self.field.q), repeat=self.n):
            yield Coset(self, self.ring._make(_strip_vals(vals)))


def _strip_vals(vals):
    n = len(vals)
    while n and vals[n - 1] == 0:
        n -= 1
    return tuple(vals[:n])


class Coset:
    """A residue class with its reduced representative."""

    __slots__ = ("mod", "rep")

    def __init__(self, mod, rep):
        assert rep.deg < mod.n
        self.mod = mod
        self.rep = rep

    def _same(self, other):
        if not isinstance(other, Coset) or other.mod != self.mod:
            raise ValueError("cosets from different moduli")
        return other

    def __add__(self, other):
        return Coset(self.mod, self.rep + self._same(other).rep)

    def __sub__(self, other):
        return Coset(self.mod, self.rep - self._same(other).rep)

    def __neg__(self):
        return Coset(self.mod, -self.rep)

    def left_mul(self, t):
        """Module action t * [f] = [t f] for a ring element t."""
        if isinstance(t, FieldElement):
            t = self.mod.ring.const(t)
        return self.mod.reduce(t * self.rep)

    def __rmul__(self, t):
        if isinstance(t, (SkewPoly, FieldElement)):
            return self.left_mul(t)
        return NotImplemented

    @property
    def is_zero(self):
        return self.rep.is_zero

    def __eq__(self, other):
        return (isinstance(other, Coset) and other.mod == self.mod
                and other.rep == self.rep)

    def __hash__(self):
        return hash((self.mod, self.rep))

    def __repr__(self):
        return f"[{fmt_poly(self.rep)}] mod {fmt_poly(self.mod.modulus)}"


def reduce(f, mod):
    return mod.reduce(f)


def pa(word, mod):
    return mod.pa(word)


def va(coset):
    return coset.mod.va(coset)


def gamma(a, g, mod):
    """The twisted constant a * g_0^{-1} * theta^n(g_0) of a right divisor."""
    g0 = g.constant
    if g0.is_zero:
        raise ZeroDivisionError("g must have a nonzero constant term")
    return a * g0.inverse() * mod.theta(g0, mod.n)


def factor_equiv_suite(h, g, mod):
    """Check the three rotated factorizations of x^n - a and the constant-swap
    and coefficientwise identities they imply.  Failures carry witnesses; a
    failed product check skips the conditional identities."""
    n, a, theta = mod.n, mod.a, mod.theta
    ring = mod.ring
    rep = Report("factorization-rotations")
    if h.deg + g.deg != n:
        rep.add("degree-split", False, f"deg h + deg g = {h.deg}+{g.deg} != {n}")
        return rep
    if g.constant.is_zero:
        rep.add("unit-constant-term", False, "g has zero constant term")
        return rep
    c = gamma(a, g, mod)
    prod_ok = rep.add("product", h * g == mod.modulus,
                      f"h*g = {fmt_poly(h * g)}")
    if not prod_ok:
        return rep  # the remaining identities are conditional on the product
    rep.add("rotated-product",
            theta_poly(g, n) * h == ring.xn_minus(n, c))
    rep.add("counter-rotated-product",
            g * theta_poly(h, -n) == ring.xn_minus(n, theta(c, -n)))
    rep.add("left-constant-swap",
            theta_poly(g, n) * ring.const(a) == ring.const(c) * g)
    rep.add("right-constant-swap",
            ring.const(a) * theta_poly(h, -n) == h * ring.const(theta(c, -n)))
    coeff_ok = True
    for t in range(g.deg + 1):
        gt = g.coeff(t)
        if c * gt != theta(a, t) * theta(gt, n):
            coeff_ok = False
            rep.add("coefficients-g", False, f"t={t}")
            break
    for t in range(h.deg + 1):
        ht = h.coeff(t)
        if a * theta(ht, -n) != ht * theta(c, t - n):
            coeff_ok = False
            rep.add("coefficients-h", False, f"t={t}")
            break
    if coeff_ok:
        rep.add("coefficient-identities", True)
    return rep


def hats(h, g, mod):
    """Reversed-twist companions of a factorization x^n - a = h*g.

    Returns ``(hhat_l, ghat_r, report)`` where the report checks the three
    induced factorizations of x^n - c^{±...} and x^n - a^{-1}.
    """
    n, a, theta = mod.n, mod.a, mod.theta
    ring = mod.ring
    if h * g != mod.modulus:
        raise ValueError(
            f"not a factorization: h*g = {fmt_poly(h * g)} != {fmt_poly(mod.modulus)}")
    k = h.deg
    c = gamma(a, g, mod)
    cinv = c.inverse()
    hhat = rho_l(theta_poly(h, -n))
    ghat = rho_r(theta_poly(g, n))
    rep = Report("reversed-factorizations")
    rep.add("flip-a", g * ring.const(a.inverse()) * h
            == ring.const(cinv) * ring.xn_minus(n, c))
    unit_b = -(theta(cinv, k - n) * theta(cinv, k))
    rep.add("flip-b", ring.const(unit_b) * hhat * ring.const(a) * ghat
            == ring.xn_minus(n, theta(cinv, k)))
    rep.add("flip-c", -(ghat * ring.const(theta(cinv, k - n)) * hhat)
            == ring.xn_minus(n, a.inverse()))
    if g.is_monic and h.is_monic:
        rep.add("monic-constants", c == theta(a, n - k)
                and theta(cinv, k) == theta(a.inverse(), n))
    return hhat, ghat, rep


def canonical_generator(f, mod):
    """The unique monic right divisor of x^n - a spanning the same submodule
    as [f]; the zero polynomial maps to x^n - a itself (the zero submodule)."""
    if f.is_zero:
        return mod.modulus
    return gcrd(f, mod.modulus).d

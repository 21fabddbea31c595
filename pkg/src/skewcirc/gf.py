"""Exact arithmetic in small finite fields GF(p^m).

Elements live in a polynomial basis over GF(p) and are packed into a single
integer (base-p digits, constant digit first).  Each field precomputes
log/antilog tables with respect to a fixed primitive element, so that
multiplication, division and Frobenius powers are table lookups.  Fields are
meant to stay small (q <= 2^16); everything here is exact.
"""

from __future__ import annotations

import math
import re


class FieldError(ValueError):
    """Invalid field construction or element operation."""


class FieldMismatchError(FieldError):
    """Two operands belong to different fields."""


# Default moduli (ascending coefficients, monic) for common small sizes.
# The F8 modulus x^3+x+1 makes the generator satisfy a^3 = a+1.
_DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
}

_ADD_TABLE_MAX_Q = 1024


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- tiny GF(p)[y] helpers used only during field construction --------------

def _gfp_divmod(num, den, p):
    num = list(num)
    dd = len(den) - 1
    inv = pow(den[-1], p - 2, p)
    q = [0] * max(0, len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] * inv % p
        q[i - dd] = c
        if c:
            for j, d in enumerate(den):
                num[i - dd + j] = (num[i - dd + j] - c * d) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


def _gfp_is_irreducible(mod, p):
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = len(mod) - 1
    if m < 1 or mod[-1] != 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for packed in range(p ** d):
            cand = [(packed // p ** i) % p for i in range(d)] + [1]
            _, rem = _gfp_divmod(mod, cand, p)
            if rem == [0]:
                return False
    return True


class FieldElement:
    """A single element of a :class:`FieldCtx`, identified by its packed value."""

    __slots__ = ("field", "val")

    def __init__(self, field, val):
        self.field = field
        self.val = val

    def _same(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field is not self.field:
            raise FieldMismatchError(
                f"elements of {self.field} and {other.field} cannot be mixed")
        return other

    def __add__(self, other):
        return FieldElement(self.field, self.field.add_val(self.val, self._same(other).val))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub_val(self.val, self._same(other).val))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_val(self.val))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul_val(self.val, self._same(other).val))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div_val(self.val, self._same(other).val))

    def __pow__(self, k):
        return FieldElement(self.field, self.field.pow_val(self.val, k))

    def inverse(self):
        return FieldElement(self.field, self.field.inv_val(self.val))

    @property
    def is_zero(self):
        return self.val == 0

    @property
    def is_one(self):
        return self.val == 1

    def digits(self):
        """Coefficients over GF(p) in the polynomial basis, constant first."""
        f = self.field
        v = self.val
        out = []
        for _ in range(f.m):
            out.append(v % f.p)
            v //= f.p
        return tuple(out)

    @property
    def log(self):
        """Discrete log w.r.t. the field generator; raises on zero."""
        if self.val == 0:
            raise FieldError("zero has no discrete logarithm")
        return self.field._log[self.val]

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and other.field is self.field and other.val == self.val)

    def __hash__(self):
        return hash((id(self.field), self.val))

    def __repr__(self):
        return f"<{fmt_element(self)} in {self.field}>"

    def __str__(self):
        return fmt_element(self)


class FieldCtx:
    """A concrete GF(p^m) with modulus, primitive generator and lookup tables.

    Instances are immutable after construction; all element operations are
    pure, so a field can be shared freely.  Field identity is object identity:
    elements of two separately constructed fields never mix, even when the
    parameters agree.
    """

    def __init__(self, p, m, modulus=None):
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree must be >= 1, got {m}")
        q = p ** m
        if q > 1 << 16:
            raise FieldError(f"field size {q} exceeds the 2^16 limit")
        if modulus is None:
            if m == 1:
                modulus = (0, 1)
            else:
                try:
                    modulus = _DEFAULT_MODULI[(p, m)]
                except KeyError:
                    raise FieldError(
                        f"no built-in modulus for GF({p}^{m}); supply one") from None
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {m}")
        if not _gfp_is_irreducible(list(modulus), p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")

        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self._build_tables()

    # -- raw packed-value arithmetic ----------------------------------------

    def _mul_raw(self, x, y):
        """Schoolbook product in the polynomial basis; used to seed the tables."""
        p, m = self.p, self.m
        xd = [(x // p ** i) % p for i in range(m)]
        yd = [(y // p ** i) % p for i in range(m)]
        prod = [0] * (2 * m - 1)
        for i, xi in enumerate(xd):
            if xi:
                for j, yj in enumerate(yd):
                    prod[i + j] = (prod[i + j] + xi * yj) % p
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(m + 1):
                    prod[i - m + j] = (prod[i - m + j] - c * self.modulus[j]) % p
        out = 0
        for i in range(m - 1, -1, -1):
            out = out * p + prod[i]
        return out

    def _order_of(self, val):
        n, acc = 0, 1
        while True:
            acc = self._mul_raw(acc, val)
            n += 1
            if acc == 1:
                return n
            if n > self.q:
                raise FieldError("element order computation ran away")

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        if m == 1:
            gen = next(g for g in range(1, p) if self._order_of(g) == p - 1)
        else:
            gen = p  # the class of y; primitive for every built-in modulus
            if self._order_of(gen) != q - 1:
                gen = next(v for v in range(2, q)
                           if self._order_of(v) == q - 1)
        self._gen_val = gen
        exp = [0] * (q - 1)
        log = [0] * q
        acc = 1
        for k in range(q - 1):
            exp[k] = acc
            log[acc] = k
            acc = self._mul_raw(acc, gen)
        if acc != 1:
            raise FieldError("generator does not have full multiplicative order")
        self._exp = exp
        self._log = log
        if p == 2:
            self._add = None
        elif q <= _ADD_TABLE_MAX_Q:
            self._add = [[self._add_digitwise(x, y) for y in range(q)] for x in range(q)]
        else:
            self._add = None
        self._neg = [self.sub_val(0, v) for v in range(q)]

    def _add_digitwise(self, x, y):
        p = self.p
        out, mul = 0, 1
        while x or y:
            out += (x % p + y % p) % p * mul
            x //= p
            y //= p
            mul *= p
        return out

    def add_val(self, x, y):
        if self.p == 2:
            return x ^ y
        if self._add is not None:
            return self._add[x][y]
        return self._add_digitwise(x, y)

    def neg_val(self, x):
        if self.p == 2:
            return x
        p = self.p
        out, mul = 0, 1
        while x:
            d = x % p
            if d:
                out += (p - d) * mul
            x //= p
            mul *= p
        return out

    def sub_val(self, x, y):
        if self.p == 2:
            return x ^ y
        return self.add_val(x, self.neg_val(y))

    def mul_val(self, x, y):
        if x == 0 or y == 0:
            return 0
        return self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]

    def inv_val(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[-self._log[x] % (self.q - 1)]

    def div_val(self, x, y):
        if y == 0:
            raise ZeroDivisionError("division by zero")
        if x == 0:
            return 0
        return self._exp[(self._log[x] - self._log[y]) % (self.q - 1)]

    def pow_val(self, x, k):
        if x == 0:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0 if k else 1
        return self._exp[self._log[x] * k % (self.q - 1)]

    def frob_val(self, x, e):
        """x ** (p**e) for e reduced mod m; a Frobenius-power table lookup."""
        if x == 0:
            return 0
        return self._exp[self._log[x] * pow(self.p, e % self.m, self.q - 1) % (self.q - 1)]

    # -- element constructors ------------------------------------------------

    def element(self, val):
        if not 0 <= val < self.q:
            raise FieldError(f"packed value {val} out of range for {self}")
        return FieldElement(self, val)

    def from_digits(self, digits):
        if len(digits) > self.m:
            raise FieldError(f"too many digits for {self}")
        val, mul = 0, 1
        for d in digits:
            val += (int(d) % self.p) * mul
            mul *= self.p
        return FieldElement(self, val)

    def from_int(self, n):
        """Embed an integer into the prime subfield."""
        return FieldElement(self, n % self.p)

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def generator(self):
        return FieldElement(self, self._gen_val)

    def elements(self):
        for v in range(self.q):
            yield FieldElement(self, v)

    def units(self):
        """Nonzero elements in generator-power order: 1, a, a^2, ..."""
        for k in range(self.q - 1):
            yield FieldElement(self, self._exp[k])

    def sort_key(self, e):
        """Deterministic element ordering: zero first, then by discrete log."""
        return (0, 0) if e.val == 0 else (1, self._log[e.val])

    def automorphism(self, s):
        return Automorphism(self, s)

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return id(self)

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    def spec_string(self):
        mod = ",".join(str(c) for c in self.modulus)
        return f"gf({self.p}^{self.m};mod={mod})"


class Automorphism:
    """A power of the Frobenius map on a field: c -> c^(p^s)."""

    __slots__ = ("field", "s", "order")

    def __init__(self, field, s):
        self.field = field
        self.s = s % field.m
        self.order = field.m // math.gcd(field.m, self.s) if self.s else 1
        g = field.generator
        if self(g, self.order) != g:
            raise FieldError("automorphism order check failed")

    def __call__(self, x, power=1):
        if x.field is not self.field:
            raise FieldMismatchError("element from a different field")
        return FieldElement(self.field, self.field.frob_val(x.val, self.s * power))

    def raw(self, val, power=1):
        return self.field.frob_val(val, self.s * power)

    def __eq__(self, other):
        return (isinstance(other, Automorphism)
                and other.field is self.field and other.s == self.s)

    def __hash__(self):
        return hash((id(self.field), self.s))

    def __repr__(self):
        return f"frob^{self.s} on {self.field}"


def make_field(p, m, modulus=None):
    return FieldCtx(p, m, modulus)


def apply_aut(theta, x, power=1):
    return theta(x, power)


def fixed_field(theta, power=1):
    """All elements fixed by theta^power; a subfield of size p^gcd(m, s*power)."""
    return [x for x in theta.field.elements() if theta(x, power) == x]


def vartheta_image(theta, n):
    """Image and coset partition of F* under b -> b * theta^n(1/b).

    Returns ``(image, cosets)`` where ``image`` is the sorted image subgroup
    and ``cosets`` partitions the nonzero elements into its cosets.
    """
    field = theta.field
    key = field.sort_key
    image = sorted({b * theta(b.inverse(), n) for b in field.units()}, key=key)
    seen = set()
    cosets = []
    for rep in field.units():
        if rep.val in seen:
            continue
        coset = sorted({rep * t for t in image}, key=key)
        seen.update(e.val for e in coset)
        cosets.append(coset)
    return image, cosets


# -- parsing and formatting --------------------------------------------------

_FIELD_SPEC_RE = re.compile(
    r"^\s*gf\(\s*(\d+)\s*(?:\^\s*(\d+))?\s*(?:;\s*mod\s*=\s*([\d,\s]+))?\)\s*$",
    re.IGNORECASE,
)


def parse_field_spec(spec):
    """Parse ``gf(<q>)`` or ``gf(<p>^<m>;mod=<c0,c1,...,cm>)`` into a field."""
    match = _FIELD_SPEC_RE.match(spec)
    if not match:
        raise FieldError(f"cannot parse field spec {spec!r}")
    base = int(match.group(1))
    if match.group(2) is not None:
        p, m = base, int(match.group(2))
    else:
        if base < 2:
            raise FieldError(f"field size must be >= 2, got {base}")
        p = min(f for f in range(2, base + 1) if base % f == 0 and _is_prime(f))
        m = 0
        n = base
        while n % p == 0 and n > 1:
            n //= p
            m += 1
        if n != 1:
            raise FieldError(f"{base} is not a prime power")
    modulus = None
    if match.group(3) is not None:
        modulus = tuple(int(c) for c in match.group(3).replace(" ", "").split(","))
    return make_field(p, m, modulus)


_TERM_RE = re.compile(r"^(?:(\d+)\*?)?(a)(?:\^(\d+))?$|^(\d+)$")


def parse_element(field, text):
    """Parse ``a^k``, integers, or additive forms like ``1+2*a+a^2``."""
    s = text.strip().replace(" ", "")
    if not s:
        raise FieldError("empty element literal")
    total = field.zero
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
    for sgn, term in chunks:
        m = _TERM_RE.match(term)
        if not m:
            raise FieldError(f"cannot parse element term {term!r} in {text!r}")
        if m.group(4) is not None:
            value = field.from_int(int(m.group(4)))
        else:
            coef = field.from_int(int(m.group(1))) if m.group(1) else field.one
            k = int(m.group(3)) if m.group(3) else 1
            value = coef * field.generator ** k
        total = total + (value if sgn > 0 else -value)
    return total


def fmt_element(e, additive=False):
    """Render an element as ``0``/``1``/``a^k`` (or in additive form)."""
    field = e.field
    if field.m == 1:
        return str(e.val)
    if e.val == 0:
        return "0"
    if additive:
        parts = []
        for i, d in enumerate(e.digits()):
            if d == 0:
                continue
            if i == 0:
                parts.append(str(d))
            else:
                x = "a" if i == 1 else f"a^{i}"
                parts.append(x if d == 1 else f"{d}*{x}")
        return "+".join(parts)
    k = e.log
    if k == 0:
        return "1"
    if k == 1:
        return "a"
    return f"a^{k}"

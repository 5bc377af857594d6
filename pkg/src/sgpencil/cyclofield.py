"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as rational coordinate vectors in the power basis
``1, z, ..., z^(phi(N)-1)`` where ``z = exp(2*pi*i/N)``, reduced modulo the
N-th cyclotomic polynomial, so equality is coefficient equality.

Signs of real elements are decided exactly: zero by canonical form, nonzero
values by outward-rounded interval evaluation whose precision doubles until
the interval excludes zero.
"""

from __future__ import annotations

import functools
import math
import re as _re
import threading
from fractions import Fraction
from numbers import Rational

import mpmath

from .errors import ConfigSyntaxError, InternalInconsistency

START_PRECISION = 64
MAX_PRECISION = 2 ** 16


# -- polynomial helpers (ascending integer coefficient tuples) -------------

def _poly_divexact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i] = q
        if q:
            for j, c in enumerate(den):
                num[i + j] -= q * c
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return tuple(out)


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Return the n-th cyclotomic polynomial as ascending integer coefficients.

    Computed by dividing ``x^n - 1`` by every ``Phi_d`` with ``d`` a proper
    divisor of ``n``.

    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = (-1,) + (0,) * (n - 1) + (1,)
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return poly


class _Field:
    """Cached reduction tables for one order N."""

    def __init__(self, n):
        self.n = n
        self.poly = cyclotomic_polynomial(n)
        self.phi = len(self.poly) - 1
        phi = self.phi
        # powers[k] = z^k reduced, for 0 <= k < n
        powers = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(n):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(phi):
                    cur[j] -= top * self.poly[j]
        self.powers = powers
        self.conj_images = [powers[(-j) % n] for j in range(phi)]
        self.has_i = n % 4 == 0


@functools.lru_cache(maxsize=None)
def _field(n):
    return _Field(n)


def _reduce(n, coeffs):
    """Reduce an arbitrary-length coefficient list (exponents taken mod n)."""
    f = _field(n)
    phi = f.phi
    out = [Fraction(0)] * phi
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k < phi:
            out[k] += c
        else:
            row = f.powers[k % n]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


def _as_fraction(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    raise TypeError(f"cannot use {type(v).__name__} as a rational coefficient")


class CycloElement:
    """An element of Q(zeta_N), immutable.

    Binary operations between elements of different orders lift both
    operands to the least common multiple of the orders. Python ints and
    ``Fraction`` values are accepted wherever an element is expected.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order, coeffs):
        f = _field(order)
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if len(coeffs) != f.phi:
            coeffs = _reduce(order, coeffs)
        self.order = order
        self.coeffs = coeffs
        self._hash = None

    # constructors

    @classmethod
    def rational(cls, q, order=4):
        phi = _field(order).phi
        return cls(order, (_as_fraction(q),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zeta(cls, order, power=1):
        """``zeta_order ** power`` (negative powers allowed)."""
        return cls(order, _field(order).powers[power % order])

    @classmethod
    def gaussian(cls, re, im=0, order=4):
        """``re + im*i`` with rational parts, in Q(zeta_order) (4 | order)."""
        if order % 4:
            raise ValueError("gaussian rationals need 4 | order")
        return cls.rational(re, order) + cls.rational(im, order) * cls.zeta(order, order // 4)

    # coercion

    def _coerce(self, other):
        if isinstance(other, CycloElement):
            if other.order == self.order:
                return self, other
            n = math.lcm(self.order, other.order)
            return self.embed(n), other.embed(n)
        if isinstance(other, (int, Rational)):
            return self, CycloElement.rational(other, self.order)
        return None

    def embed(self, m):
        """Image in Q(zeta_m) under ``zeta_order -> zeta_m^(m/order)``."""
        if m % self.order:
            raise ValueError(f"cannot embed order {self.order} into order {m}")
        if m == self.order:
            return self
        step = m // self.order
        coeffs = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for j, c in enumerate(self.coeffs):
            coeffs[j * step] = c
        return CycloElement(m, _reduce(m, coeffs))

    # arithmetic

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloElement(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloElement(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b - a

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            q = _as_fraction(other)
            return CycloElement(self.order, tuple(c * q for c in self.coeffs))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if b.is_rational():
            return a * b.coeffs[0]
        if a.is_rational():
            return b * a.coeffs[0]
        ac, bc = a.coeffs, b.coeffs
        prod = [Fraction(0)] * (len(ac) + len(bc) - 1)
        for i, x in enumerate(ac):
            if x:
                for j, y in enumerate(bc):
                    if y:
                        prod[i + j] += x * y
        return CycloElement(a.order, _reduce(a.order, prod))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.is_rational():
            return CycloElement.rational(1 / self.coeffs[0], self.order)
        f = _field(self.order)
        # invariant: s * self == r (mod Phi)
        r0, r1 = [Fraction(c) for c in f.poly], _trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if len(r1) != 1 or r1[0] == 0:
            raise InternalInconsistency("cyclotomic polynomial is not irreducible?")
        c = r1[0]
        return CycloElement(self.order, _reduce(self.order, [x / c for x in s1]))

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            q = _as_fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / q)
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloElement.rational(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # structure

    def conj(self):
        """Complex conjugation, the automorphism ``z -> z^(N-1)``."""
        f = _field(self.order)
        out = [Fraction(0)] * f.phi
        for j, c in enumerate(self.coeffs):
            if c:
                row = f.conj_images[j]
                for t in range(f.phi):
                    if row[t]:
                        out[t] += c * row[t]
        return CycloElement(self.order, tuple(out))

    def _imag_unit(self):
        if self.order % 4:
            raise ValueError(f"re/im need 4 | N (got N={self.order})")
        return CycloElement.zeta(self.order, self.order // 4)

    def re(self):
        """Real part as a (real) field element."""
        self._imag_unit()
        return (self + self.conj()) * Fraction(1, 2)

    def im(self):
        """Imaginary part as a (real) field element."""
        i = self._imag_unit()
        # (a - conj a) / (2i) = -i (a - conj a) / 2
        return (self - self.conj()) * (-i) * Fraction(1, 2)

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def is_real(self):
        return self.is_rational() or self == self.conj()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def __hash__(self):
        # rational elements hash like the Fraction so that mixed orders agree
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.order, self.coeffs))
        return self._hash

    def __complex__(self):
        n = self.order
        return complex(sum(float(c) * complex(math.cos(2 * math.pi * j / n), math.sin(2 * math.pi * j / n))
                           for j, c in enumerate(self.coeffs) if c))

    def __float__(self):
        return complex(self).real

    def __repr__(self):
        return f"CycloElement({self.order}, {format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bc in enumerate(b):
                a[i + j] -= c * bc
    rem = _trim(a[: len(b) - 1] or [Fraction(0)])
    return _trim(q), rem


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


# -- free-function spellings -----------------------------------------------

def add(a, b):
    return a + b


def sub(a, b):
    return a - b


def mul(a, b):
    return a * b


def inv(a):
    return a.inverse()


def conj(a):
    return a.conj()


def re(a):
    return a.re()


def im(a):
    return a.im()


def embed(a, m):
    return a.embed(m)


# -- certified sign --------------------------------------------------------

_iv_lock = threading.Lock()


@functools.lru_cache(maxsize=None)
def _cos_intervals(n, prec):
    # caller holds _iv_lock with mpmath.iv.prec == prec
    iv = mpmath.iv
    return tuple(iv.cos(2 * iv.pi * j / n) for j in range(_field(n).phi))


def sign_real(a, max_precision=MAX_PRECISION):
    """Exact sign (-1, 0, +1) of a real field element.

    A non-real argument is replaced by its real part. Zero is detected by
    canonical form; otherwise the value ``sum c_j cos(2 pi j / N)`` is
    enclosed in an interval at 64, 128, ... bits until the enclosure
    excludes zero.
    """
    if not isinstance(a, CycloElement):
        q = _as_fraction(a)
        return (q > 0) - (q < 0)
    if not a.is_real():
        a = a.re()
    if a.is_zero():
        return 0
    if a.is_rational():
        c = a.coeffs[0]
        return 1 if c > 0 else -1
    iv = mpmath.iv
    prec = START_PRECISION
    with _iv_lock:
        saved = iv.prec
        try:
            while prec <= max_precision:
                iv.prec = prec
                cosines = _cos_intervals(a.order, prec)
                total = iv.mpf(0)
                for c, cs in zip(a.coeffs, cosines):
                    if c:
                        total += iv.mpf(c.numerator) / c.denominator * cs
                if total.a > 0:
                    return 1
                if total.b < 0:
                    return -1
                prec *= 2
        finally:
            iv.prec = saved
    raise InternalInconsistency(
        f"sign of nonzero element {format_element(a)} undecided at {max_precision} bits")


def compare_real(a, b):
    """Sign of ``re(a) - re(b)``."""
    d = a - b
    if isinstance(d, CycloElement):
        return sign_real(d.re()) if d.order % 4 == 0 else sign_real(d)
    return sign_real(d)


# -- text form -------------------------------------------------------------

def _fmt_rational(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_element(a):
    """Canonical text: ascending powers, zero terms omitted, ``0`` for zero.

    >>> format_element(CycloElement.zeta(12, 4))
    '-1 + z^2'
    """
    terms = []
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = _fmt_rational(mag)
        else:
            mono = "z" if k == 1 else f"z^{k}"
            body = mono if mag == 1 else f"{_fmt_rational(mag)}*{mono}"
        terms.append((neg, body))
    if not terms:
        return "0"
    neg, body = terms[0]
    out = ("-" if neg else "") + body
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


_TOKEN = _re.compile(r"\s*(?:(?P<num>\d+)|(?P<op>[-+*/^])|(?P<z>z))")


def _tokenize(text, line=None, col0=1):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ConfigSyntaxError(f"unexpected character {text[bad]!r}", line, col0 + bad)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), col0 + start))
        pos = m.end()
    tokens.append(("end", "", col0 + len(text)))
    return tokens


def parse_element(text, order, line=None, col0=1):
    """Parse a coordinate expression into Q(zeta_order).

    Grammar: ``term (('+'|'-') term)*`` with ``term := rational | rational
    '*' monomial | monomial``, ``monomial := 'z' | 'z^' integer``; a sign
    may lead the first term and exponents may be negative.
    """
    tokens = _tokenize(text, line, col0)
    pos = 0

    def peek():
        return tokens[pos]

    def take(kind, value=None):
        nonlocal pos
        tok = tokens[pos]
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] or "end of expression"
            raise ConfigSyntaxError(f"expected {want!r}, found {got!r}", line, tok[2])
        pos += 1
        return tok

    def integer():
        return int(take("num")[1])

    def monomial():
        take("z")
        if peek()[0] == "op" and peek()[1] == "^":
            take("op", "^")
            sign = 1
            if peek()[0] == "op" and peek()[1] == "-":
                take("op", "-")
                sign = -1
            return sign * integer()
        return 1

    def term():
        if peek()[0] == "z":
            return Fraction(1), monomial()
        num = integer()
        q = Fraction(num)
        if peek()[0] == "op" and peek()[1] == "/":
            take("op", "/")
            tok = peek()
            den = integer()
            if den == 0:
                raise ConfigSyntaxError("zero denominator", line, tok[2])
            q = Fraction(num, den)
        if peek()[0] == "op" and peek()[1] == "*":
            take("op", "*")
            return q, monomial()
        return q, 0

    if peek()[0] == "end":
        raise ConfigSyntaxError("empty expression", line, peek()[2])
    coeffs = [Fraction(0)] * order
    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if take("op")[1] == "-" else 1
    while True:
        c, e = term()
        coeffs[e % order] += sign * c
        tok = peek()
        if tok[0] == "end":
            break
        if tok[0] == "op" and tok[1] in "+-":
            take("op")
            sign = -1 if tok[1] == "-" else 1
            continue
        raise ConfigSyntaxError(f"unexpected {tok[1]!r}", line, tok[2])
    return CycloElement(order, _reduce(order, coeffs))

"""Exact arithmetic in q: dense polynomials, reduced rational functions,
q-analogs, and the principal evaluation of forgotten symmetric functions.

The bivariate (q, t) layer is sympy's rational function field; see
``QT`` at the bottom of the module.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cache, reduce
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

from sympy import ZZ
from sympy.polys.fields import field

from .combinatorics import Partition, multiplicities, rearrangements


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class QPoly:
    """Dense polynomial in q, lowest degree first, trailing zeros stripped."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_norm(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    # constructors -------------------------------------------------------
    @classmethod
    def const(cls, a) -> "QPoly":
        return cls((a,))

    @classmethod
    def monomial(cls, k: int, a=1) -> "QPoly":
        return cls((0,) * k + (a,))

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> "QPoly":
        """Sum of q^e over the given exponents (with repetition)."""
        c: list[int] = []
        for e in exps:
            if e >= len(c):
                c.extend([0] * (e + 1 - len(c)))
            c[e] += 1
        return cls(c)

    # basic protocol ---------------------------------------------------------
    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.c) - 1

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.c == other.c
        if isinstance(other, Rational):
            return self.c == QPoly.const(other).c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"QPoly({list(self.c)})"

    def __str__(self):
        if not self.c:
            return "0"
        terms = []
        for k in range(len(self.c) - 1, -1, -1):
            a = self.c[k]
            if a == 0:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and abs(a) == 1:
                body = mono
            else:
                body = f"{abs(a)}{'*' + mono if mono else ''}"
            terms.append(("-" if a < 0 else "+", body))
        s = " ".join(f"{sign} {b}" for sign, b in terms)
        return s[2:] if s.startswith("+") else "-" + s[2:]

    def __getitem__(self, k):
        return self.c[k] if 0 <= k < len(self.c) else 0

    def lead(self):
        return self.c[-1] if self.c else 0

    # ring operations ----------------------------------------------------
    @staticmethod
    def _coerce(x) -> "QPoly":
        if isinstance(x, QPoly):
            return x
        if isinstance(x, Rational):
            return QPoly.const(x)
        raise TypeError(f"cannot use {type(x).__name__} as a polynomial")

    def __add__(self, other):
        o = self._coerce(other)
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        return QPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-x for x in self.c])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, QRat):
            return NotImplemented
        o = self._coerce(other)
        if not self.c or not o.c:
            return QPoly()
        out = [0] * (len(self.c) + len(o.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(o.c):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out, base = QPoly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "QPoly":
        """Multiply by q^k."""
        return QPoly((0,) * k + self.c) if self.c else self

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Division over the rationals; quotient is integral when possible."""
        o = self._coerce(other)
        if not o.c:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        dq = len(r) - len(o.c)
        if dq < 0:
            return QPoly(), self
        quo = [0] * (dq + 1)
        lc = o.c[-1]
        for k in range(dq, -1, -1):
            top = r[k + len(o.c) - 1]
            if top == 0:
                continue
            f = top // lc if isinstance(top, int) and isinstance(lc, int) and top % lc == 0 else Fraction(top) / lc
            quo[k] = f
            for j, y in enumerate(o.c):
                r[k + j] -= f * y
        return QPoly(quo), QPoly(r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __truediv__(self, other):
        return QRat(self, other)

    def __rtruediv__(self, other):
        return QRat(other, self)

    # evaluation ------------------------------------------------------------
    def __call__(self, x):
        out = 0
        for a in reversed(self.c):
            out = out * x + a
        return out

    def taylor_shift(self) -> "QPoly":
        """p(1+u) as a polynomial in u."""
        c = list(self.c)
        n = len(c)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                c[j] += c[j + 1]
        return QPoly(c)

    def content(self) -> int:
        """Nonnegative gcd of the (integer) coefficients."""
        return reduce(gcd, self.c, 0)

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for x in self.c)

    def nonnegative(self) -> bool:
        return all(x >= 0 for x in self.c)

    # serialization ---------------------------------------------------------
    def to_json(self) -> list:
        return [[k, str(a)] for k, a in enumerate(self.c) if a]

    @classmethod
    def from_json(cls, data: Sequence) -> "QPoly":
        out: dict[int, object] = {}
        for k, a in data:
            out[int(k)] = Fraction(a) if "/" in str(a) else int(a)
        return cls([out.get(k, 0) for k in range(max(out, default=-1) + 1)])


ZERO = QPoly()
ONE = QPoly.const(1)
Q = QPoly.monomial(1)


def _primitive(p: QPoly) -> QPoly:
    """Integer primitive part; clears denominators of rational input."""
    if not p:
        return p
    if not p.is_integral():
        den = reduce(lambda a, b: a * b // gcd(a, b), (Fraction(x).denominator for x in p.c), 1)
        p = QPoly([int(Fraction(x) * den) for x in p.c])
    g = p.content()
    if p.lead() < 0:
        g = -g
    return QPoly([x // g for x in p.c])


def _pseudo_rem(a: QPoly, b: QPoly) -> QPoly:
    r = list(a.c)
    lb, db = b.c[-1], len(b.c) - 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j, y in enumerate(b.c):
            r[shift + j] -= lr * y
        while r and r[-1] == 0:
            r.pop()
    return QPoly(r)


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Primitive gcd over the integers, positive leading coefficient."""
    a, b = _primitive(a), _primitive(b)
    if not a:
        return b if b else ONE
    if not b:
        return a
    if a.degree < b.degree:
        a, b = b, a
    while b:
        if b.degree == 0:
            return ONE
        a, b = b, _primitive(_pseudo_rem(a, b))
    return a


class NonPolynomial(ArithmeticError):
    """A rational function expected to be a polynomial was not."""

    def __init__(self, value: "QRat", remainder: QPoly):
        super().__init__(f"not a polynomial: {value} (remainder {remainder})")
        self.value = value
        self.remainder = remainder


class QRat:
    """Reduced rational function num/den in q.

    Canonical form: integer coefficients, gcd(num, den) = 1 including the
    integer content, positive leading coefficient in den.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, _reduced=False):
        num, den = QPoly._coerce(num), QPoly._coerce(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = self._reduce(num, den)
        self.num, self.den = num, den

    @staticmethod
    def _reduce(num: QPoly, den: QPoly) -> tuple[QPoly, QPoly]:
        if not num:
            return ZERO, ONE
        if not (num.is_integral() and den.is_integral()):
            scale = 1
            for x in num.c + den.c:
                d = Fraction(x).denominator
                scale = scale * d // gcd(scale, d)
            num = QPoly([int(Fraction(x) * scale) for x in num.c])
            den = QPoly([int(Fraction(x) * scale) for x in den.c])
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.divmod(g)[0], den.divmod(g)[0]
        c = gcd(num.content(), den.content())
        if den.lead() < 0:
            c = -c
        if c != 1:
            num = QPoly([x // c for x in num.c])
            den = QPoly([x // c for x in den.c])
        return num, den

    @staticmethod
    def _coerce(x) -> "QRat":
        if isinstance(x, QRat):
            return x
        return QRat(x)

    def __repr__(self):
        return f"QRat({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __eq__(self, other):
        if isinstance(other, (QPoly, Rational)):
            other = QRat(other)
        if isinstance(other, QRat):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return QRat(self.num + o.num, self.den)
        return QRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return QRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return QRat(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return QRat(self.den, self.num) ** (-k)
        return QRat(self.num ** k, self.den ** k)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __call__(self, x):
        d = self.den(x)
        return Fraction(self.num(x)) / d if isinstance(d, int) else self.num(x) / d

    def series(self, N: int) -> list:
        """Power-series coefficients of q^0..q^N (den must not vanish at 0)."""
        d0 = self.den[0]
        if d0 == 0:
            raise ValueError("denominator vanishes at q=0")
        out = []
        for k in range(N + 1):
            s = self.num[k] - sum(self.den[j] * out[k - j] for j in range(1, min(k, self.den.degree) + 1))
            out.append(_norm(Fraction(s) / d0) if s % d0 else s // d0)
        return out


def assert_polynomial(r: QRat | QPoly) -> QPoly:
    """Return r as a polynomial, or raise NonPolynomial with the remainder."""
    if isinstance(r, QPoly):
        return r
    quo, rem = r.num.divmod(r.den)
    if rem:
        raise NonPolynomial(r, rem)
    return quo


# --------------------------------------------------------------------------
# q-analogs
# --------------------------------------------------------------------------

@cache
def q_int(n: int) -> QPoly:
    if n < 0:
        raise ValueError("negative n")
    return QPoly([1] * n)


@cache
def one_minus_q_pow(k: int) -> QPoly:
    """1 - q^k."""
    return ONE - QPoly.monomial(k)


@cache
def q_pochhammer(n: int) -> QPoly:
    """(q;q)_n = (1-q)(1-q^2)...(1-q^n)."""
    if n < 0:
        raise ValueError("negative n")
    out = ONE
    for k in range(1, n + 1):
        out = out * one_minus_q_pow(k)
    return out


def q_pochhammer_partition(mu: Sequence[int]) -> QPoly:
    """(q;q)_mu = product of (q;q)_{mu_i}."""
    out = ONE
    for m in mu:
        out = out * q_pochhammer(m)
    return out


def q_multinomial(counts: Sequence[int]) -> QPoly:
    top = q_pochhammer(sum(counts))
    bottom = q_pochhammer_partition(counts)
    quo, rem = top.divmod(bottom)
    if rem:  # would mean a bug in the pochhammer products
        raise NonPolynomial(QRat(top, bottom), rem)
    return quo


class QAnalogs(dict):
    """Plain dict with attribute access; keys q_int, q_pochhammer, q_multinomial."""

    __getattr__ = dict.__getitem__


def q_analogs(n: int, mu: Partition) -> QAnalogs:
    """[n]_q, (q;q)_n and the q-multinomial of ℓ(mu) over the multiplicities of mu."""
    if n < 0:
        raise ValueError("negative n")
    m = [x for x in multiplicities(mu) if x]
    return QAnalogs(q_int=q_int(n), q_pochhammer=q_pochhammer(n), q_multinomial=q_multinomial(m))


@cache
def forgotten_principal(mu: Partition) -> QRat:
    """f_mu[1/(1-q)] as a reduced rational function.

    Sum over rearrangements alpha of prod_k 1/(1 - q^(alpha_k + ... + alpha_l)),
    with sign (-1)^(|mu| - l(mu)).
    """
    mu = tuple(mu)
    if not mu:
        return QRat(1)
    n = sum(mu)
    # common denominator (q;q)_n: every suffix-sum set is a set of distinct
    # integers in 1..n, so each term is a polynomial over (q;q)_n
    num = ZERO
    for alpha in rearrangements(mu):
        sums, s = set(), 0
        for a in reversed(alpha):
            s += a
            sums.add(s)
        term = ONE
        for k in range(1, n + 1):
            if k not in sums:
                term = term * one_minus_q_pow(k)
        num = num + term
    if (n - len(mu)) % 2:
        num = -num
    return QRat(num, q_pochhammer(n))


def substitute_q(p: QPoly, image="1+u"):
    """Apply q -> image. ``"1+u"`` gives a QPoly in u; a number evaluates."""
    if isinstance(image, str):
        if image.replace(" ", "") != "1+u":
            raise ValueError(f"unsupported substitution {image!r}")
        return p.taylor_shift()
    return p(image)


# --------------------------------------------------------------------------
# (q, t) layer
# --------------------------------------------------------------------------

QT, q_sym, t_sym = field("q,t", ZZ)


def qt_from_qpoly(p: QPoly):
    return sum((QT(a) * q_sym ** k for k, a in enumerate(p.c) if a), QT(0))


def qt_is_polynomial(x) -> bool:
    return x.denom.is_ground


def qt_polynomial_terms(x) -> dict[tuple[int, int], int]:
    """{(q-exp, t-exp): coeff}; raises NonPolynomial-like ArithmeticError."""
    if not qt_is_polynomial(x):
        raise ArithmeticError(f"not a polynomial in q,t: {x}")
    d = int(x.denom.LC)
    out = {}
    for monom, coeff in x.numer.terms():
        c = int(coeff)
        if c % d:
            raise ArithmeticError(f"non-integral coefficient in {x}")
        out[monom] = c // d
    return out


def qt_at_t1(x) -> QRat:
    """Specialize t = 1 in a (q, t) rational function."""
    def collapse(p):
        c: dict[int, int] = {}
        for (a, _), v in p.terms():
            c[a] = c.get(a, 0) + int(v)
        return QPoly([c.get(k, 0) for k in range(max(c, default=-1) + 1)])

    den = collapse(x.denom)
    if not den:
        raise ZeroDivisionError("denominator vanishes at t=1")
    return QRat(collapse(x.numer), den)

"""Exact arithmetic in cyclotomic fields Q(zeta_M).

Elements are stored in the power basis 1, z, ..., z^(phi(M)-1) of
Q(zeta_M), reduced modulo the M-th cyclotomic polynomial, with
arbitrary-precision rational coordinates.  The reduced form is unique,
so equality is coefficient-wise and elements hash.  No floating point
is used anywhere.

Also provides the q-symbols (n)_q, (n)_q!, binom(n,m)_q and the
balanced brackets [n]_q, [n]_q! built on top of the field arithmetic.
"""

from math import gcd

try:
    from gmpy2 import mpq
except ImportError:  # pragma: no cover
    from fractions import Fraction as mpq

__all__ = [
    "CycloNum",
    "ConductorError",
    "QSymbolTable",
    "root_of_unity",
    "order_of",
    "embed_to_conductor",
    "q_int",
    "q_factorial",
    "q_binom",
    "bracket_int",
    "bracket_factorial",
    "euler_phi",
    "divisors",
    "lcm",
]

_ZERO = mpq(0)
_ONE = mpq(1)


class ConductorError(ValueError):
    """Mixing conductors without an explicit embedding."""


def euler_phi(m):
    assert m >= 1
    result = m
    n, p = m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def divisors(m):
    assert m >= 1
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def lcm(a, b):
    return a * b // gcd(a, b)


def _poly_divmod(num, den):
    # exact division of integer polynomials, coefficient lists low->high
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact polynomial division")
        c //= den[-1]
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert all(c == 0 for c in num[: len(den) - 1])
    return q


_cyclo_poly_cache = {}


def cyclotomic_polynomial(m):
    """Integer coefficients of Phi_m, low degree first, monic."""
    if m in _cyclo_poly_cache:
        return _cyclo_poly_cache[m]
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in divisors(m):
        if d < m:
            poly = _poly_divmod(poly, cyclotomic_polynomial(d))
    _cyclo_poly_cache[m] = poly
    return poly


class _Context:
    """Per-conductor reduction data, built once and cached."""

    __slots__ = ("m", "phi", "reduction", "zero", "one", "zeta_cache")

    def __init__(self, m):
        self.m = m
        poly = cyclotomic_polynomial(m)
        phi = len(poly) - 1
        self.phi = phi
        # reduction[k] = coordinates of z^(phi+k) in the power basis
        top = max(2 * phi - 2, m - 1)
        rows = []
        row = tuple(mpq(-c) for c in poly[:phi])
        rows.append(row)
        for _ in range(phi, top):
            shifted = (_ZERO,) + row[: phi - 1]
            head = row[phi - 1]
            if head:
                shifted = tuple(s + head * r for s, r in zip(shifted, rows[0]))
            rows.append(shifted)
            row = shifted
        self.reduction = rows
        self.zero = (_ZERO,) * phi
        one = [_ZERO] * phi
        one[0] = _ONE
        self.one = tuple(one)
        self.zeta_cache = {}

    def reduce(self, coeffs):
        # coeffs: list of mpq, any length; returns tuple of length phi
        phi = self.phi
        out = list(coeffs[:phi]) + [_ZERO] * (phi - min(phi, len(coeffs)))
        for k in range(len(coeffs) - 1, phi - 1, -1):
            c = coeffs[k]
            if c:
                row = self.reduction[k - phi]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return tuple(out)

    def zeta_power(self, k):
        k %= self.m
        cached = self.zeta_cache.get(k)
        if cached is None:
            if k < self.phi:
                coeffs = [_ZERO] * self.phi
                coeffs[k] = _ONE
                cached = tuple(coeffs)
            else:
                cached = self.reduction[k - self.phi]
            self.zeta_cache[k] = cached
        return cached


_context_cache = {}


def _context(m):
    ctx = _context_cache.get(m)
    if ctx is None:
        ctx = _Context(m)
        _context_cache[m] = ctx
    return ctx


class CycloNum:
    """An element of Q(zeta_M) in reduced power-basis form."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor, coeffs):
        self.conductor = conductor
        self.coeffs = coeffs  # tuple of mpq, length phi(conductor)
        self._hash = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(m=1):
        return CycloNum(m, _context(m).zero)

    @staticmethod
    def one(m=1):
        return CycloNum(m, _context(m).one)

    @staticmethod
    def rational(value, m=1):
        ctx = _context(m)
        coeffs = [_ZERO] * ctx.phi
        coeffs[0] = mpq(value)
        return CycloNum(m, tuple(coeffs))

    @staticmethod
    def root(m, k=1):
        return CycloNum(m, _context(m).zeta_power(k))

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.conductor != self.conductor:
                raise ConductorError(
                    "conductor mismatch: %d vs %d (embed explicitly)"
                    % (self.conductor, other.conductor)
                )
            return other
        if isinstance(other, int) or type(other) is type(_ONE):
            return CycloNum.rational(other, self.conductor)
        return NotImplemented

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloNum(
            self.conductor, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloNum(
            self.conductor, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycloNum(self.conductor, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        ctx = _context(self.conductor)
        phi = ctx.phi
        prod = [_ZERO] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycloNum(self.conductor, ctx.reduce(prod))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.conductor)
        # extended Euclid against Phi_M over the rationals
        phi_poly = [mpq(c) for c in cyclotomic_polynomial(self.conductor)]
        r0, r1 = phi_poly, list(self.coeffs)
        s0, s1 = [_ZERO], [_ONE]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv = [c / r1[0] for c in s1]
                return CycloNum(self.conductor, _context(self.conductor).reduce(inv))
            q, rem = _rat_poly_divmod(r0, r1)
            s_next = _rat_poly_sub(s0, _rat_poly_mul(q, s1))
            r0, r1 = r1, rem
            s0, s1 = s1, s_next

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycloNum.one(self.conductor)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- predicates and comparisons ------------------------------------

    def is_zero(self):
        return not any(self.coeffs)

    def is_one(self):
        return self.coeffs == _context(self.conductor).one

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self):
        assert self.is_rational()
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.conductor == other.conductor and self.coeffs == other.coeffs
        if isinstance(other, int) or type(other) is type(_ONE):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.conductor, self.coeffs))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append("z%d^%d" % (self.conductor, i) if i > 1 else "z%d" % self.conductor)
            else:
                var = "z%d^%d" % (self.conductor, i) if i > 1 else "z%d" % self.conductor
                parts.append("%s*%s" % (c, var))
        return " + ".join(parts).replace("+ -", "- ")

    # -- serialization -------------------------------------------------

    def to_json(self):
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(data):
        m = data["conductor"]
        coeffs = tuple(mpq(c) for c in data["coeffs"])
        if len(coeffs) != _context(m).phi:
            raise ValueError("coeffs length %d != phi(%d)" % (len(coeffs), m))
        return CycloNum(m, coeffs)


def _rat_poly_divmod(num, den):
    num = list(num)
    while den and not den[-1]:
        den = den[:-1]
    q = [_ZERO] * max(1, len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, num[: len(den) - 1]


def _rat_poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _rat_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    b = list(b) + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


# -- module-level operations -------------------------------------------


def root_of_unity(m, k=1):
    """zeta_M^k in reduced form; the order of the result is M/gcd(M, k)."""
    assert m >= 1
    return CycloNum.root(m, k)


def order_of(z):
    """Multiplicative order of z, or None if z is not a root of unity."""
    if z.is_zero():
        return None
    m = z.conductor
    bound = lcm(2, m)
    if z ** bound != 1:
        return None
    for d in divisors(bound):
        if z ** d == 1:
            return d
    return None  # pragma: no cover


def embed_to_conductor(z, m_new):
    """Rewrite z in Q(zeta_M') for M | M'."""
    m = z.conductor
    if m_new % m != 0:
        raise ConductorError("cannot embed conductor %d into %d" % (m, m_new))
    step = m_new // m
    ctx = _context(m_new)
    out = [_ZERO] * ctx.phi
    for k, c in enumerate(z.coeffs):
        if c:
            pw = ctx.zeta_power(k * step)
            for i in range(ctx.phi):
                if pw[i]:
                    out[i] += c * pw[i]
    return CycloNum(m_new, tuple(out))


class QSymbolTable:
    """Cached q-integers, q-factorials, q-binomials and brackets.

    All values are keyed by (integer arguments, the exact root q), so a
    cache hit is always identical to recomputation.
    """

    def __init__(self):
        self._int = {}
        self._fact = {}
        self._binom = {}
        self._bracket = {}
        self._bracket_fact = {}

    def q_int(self, n, q):
        # (n)_q = 1 + q + ... + q^(n-1)
        assert n >= 0
        key = (n, q)
        val = self._int.get(key)
        if val is None:
            val = CycloNum.zero(q.conductor)
            power = CycloNum.one(q.conductor)
            for _ in range(n):
                val = val + power
                power = power * q
            self._int[key] = val
        return val

    def q_factorial(self, n, q):
        # (n)_q! with (0)_q! = 1
        assert n >= 0
        key = (n, q)
        val = self._fact.get(key)
        if val is None:
            val = CycloNum.one(q.conductor)
            for i in range(1, n + 1):
                val = val * self.q_int(i, q)
            self._fact[key] = val
        return val

    def q_binom(self, n, m, q):
        # Pascal recurrence binom(n,m) = binom(n-1,m-1) + q^m binom(n-1,m);
        # total even at roots of unity where the factorial quotient fails.
        assert 0 <= m <= n
        key = (n, m, q)
        val = self._binom.get(key)
        if val is None:
            if m == 0 or m == n:
                val = CycloNum.one(q.conductor)
            else:
                val = self.q_binom(n - 1, m - 1, q) + (q ** m) * self.q_binom(n - 1, m, q)
            self._binom[key] = val
        return val

    def bracket_int(self, n, q):
        # [n]_q = (q^n - q^-n)/(q - q^-1), any integer n
        key = (n, q)
        val = self._bracket.get(key)
        if val is None:
            if q ** 2 == 1:
                raise ZeroDivisionError("[n]_q needs q != +-1")
            qinv = q.inverse()
            val = (q ** n - qinv ** n) / (q - qinv)
            self._bracket[key] = val
        return val

    def bracket_factorial(self, m, q):
        assert m >= 0
        key = (m, q)
        val = self._bracket_fact.get(key)
        if val is None:
            val = CycloNum.one(q.conductor)
            for i in range(1, m + 1):
                val = val * self.bracket_int(i, q)
            self._bracket_fact[key] = val
        return val


_DEFAULT_TABLE = QSymbolTable()


def q_int(n, q):
    return _DEFAULT_TABLE.q_int(n, q)


def q_factorial(n, q):
    return _DEFAULT_TABLE.q_factorial(n, q)


def q_binom(n, m, q):
    return _DEFAULT_TABLE.q_binom(n, m, q)


def bracket_int(n, q):
    return _DEFAULT_TABLE.bracket_int(n, q)


def bracket_factorial(m, q):
    return _DEFAULT_TABLE.bracket_factorial(m, q)

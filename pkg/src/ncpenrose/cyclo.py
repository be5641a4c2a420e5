"""Exact arithmetic in Q(zeta), zeta = exp(i pi / 5), and plane predicates.

Elements are rational coordinates in the basis 1, zeta, zeta^2, zeta^3, using
zeta^4 = zeta^3 - zeta^2 + zeta - 1.  Real numbers in the field have the form
p + q tau with tau = zeta + conj(zeta) the golden ratio; their signs are decided
exactly via Z[tau] arithmetic from k0ring.
"""
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .k0ring import ZAlpha, sign as _zsign, to_decimal


class BoundaryPoint(ValueError):
    """A point lies on a tile edge where the code is undefined."""


def _reduce(poly):
    """Reduce coefficients of zeta^0..zeta^k to the 4-dim basis."""
    c = list(poly) + [Fraction(0)] * max(0, 4 - len(poly))
    # zeta^5 = -1
    for k in range(len(c) - 1, 4, -1):
        v = c[k]
        if v:
            c[k] = Fraction(0)
            c[k - 5] -= v
    # zeta^4 = zeta^3 - zeta^2 + zeta - 1
    v = c[4] if len(c) > 4 else 0
    if v:
        c[3] += v
        c[2] -= v
        c[1] += v
        c[0] -= v
    return tuple(c[:4])


class CycloNum:
    __slots__ = ("c", "_h")

    def __init__(self, coords=(0, 0, 0, 0)):
        c = tuple(Fraction(x) for x in coords)
        if len(c) != 4:
            c = _reduce(c)
        self.c = c
        self._h = None

    @classmethod
    def rational(cls, x):
        return cls((x, 0, 0, 0))

    def __add__(self, o):
        o = _coerce(o)
        return CycloNum(tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(tuple(-a for a in self.c))

    def __sub__(self, o):
        return self + (-_coerce(o))

    def __rsub__(self, o):
        return _coerce(o) - self

    def __mul__(self, o):
        o = _coerce(o)
        prod = [Fraction(0)] * 7
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        return CycloNum(_reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = CycloNum.rational(1)
        for _ in range(n):
            out = out * self
        return out

    def conj(self):
        a, b, c, d = self.c
        # conj(zeta^k) = zeta^{-k} = -zeta^{5-k}
        return CycloNum(_reduce([a, 0, -d, -c, -b]))

    def norm_real(self):
        """z * conj(z), a nonnegative real element."""
        return self * self.conj()

    def inverse(self):
        # z^{-1} = conj(z) / |z|^2, and 1/(p + q tau) for the real denominator
        n = self.norm_real()
        p, q = real_parts(n)
        # (p + q tau)(p + q - q tau) = p^2 + p q - q^2
        den = p * p + p * q - q * q
        if den == 0:
            raise ZeroDivisionError("zero has no inverse")
        inv_n = from_real((p + q) / den, -q / den)
        return self.conj() * inv_n

    def __truediv__(self, o):
        return self * _coerce(o).inverse()

    def is_real(self):
        return self == self.conj()

    def is_zero(self):
        return not any(self.c)

    def __eq__(self, o):
        if not isinstance(o, CycloNum):
            if isinstance(o, (int, Fraction)):
                o = CycloNum.rational(o)
            else:
                return NotImplemented
        return self.c == o.c

    def __hash__(self):
        if self._h is None:
            self._h = hash(self.c)
        return self._h

    def __repr__(self):
        return "CycloNum(" + ", ".join(str(x) for x in self.c) + ")"

    def to_json(self):
        return [f"{x.numerator}/{x.denominator}" for x in self.c]

    @classmethod
    def from_json(cls, d):
        return cls(tuple(Fraction(x) for x in d))


def _coerce(o):
    if isinstance(o, CycloNum):
        return o
    return CycloNum.rational(o)


ZETA = CycloNum((0, 1, 0, 0))
ONE = CycloNum.rational(1)
ZERO = CycloNum.rational(0)
TAU = ZETA + ZETA.conj()          # 1 + zeta^2 - zeta^3
TAU_INV = TAU - 1


def zeta_power(k):
    k %= 10
    return ZETA ** k


def from_real(p, q):
    """The real element p + q tau."""
    p, q = Fraction(p), Fraction(q)
    return CycloNum((p + q, 0, q, -q))


def real_parts(z):
    """(p, q) with z = p + q tau; z must be real."""
    if not z.is_real():
        raise ValueError("not a real element")
    c0, _, c2, _ = z.c
    return c0 - c2, c2


def real_sign(z):
    p, q = real_parts(z)
    d = lcm(p.denominator, q.denominator)
    return _zsign(ZAlpha((int(p * d), int(q * d)), 1))


def imag_scaled(z):
    """Real element (z - conj z)(conj zeta - zeta): a positive multiple of Im z."""
    return (z - z.conj()) * (ZETA.conj() - ZETA)


def imag_sign(z):
    return real_sign(imag_scaled(z))


def orient(a, b, c):
    """Sign of the cross product (b - a) x (c - a); +1 counterclockwise."""
    return imag_sign((b - a).conj() * (c - a))


def scaled_area(a, b, c):
    """Signed area times 8 sin(36 deg), as a real element; linear under subdivision."""
    return imag_scaled((b - a).conj() * (c - a))


def cayley_menger(a, b, c):
    """16 * area^2 from squared side lengths, as a real element."""
    x = (b - a).norm_real()
    y = (c - b).norm_real()
    z = (a - c).norm_real()
    return 2 * (x * y + y * z + z * x) - (x * x + y * y + z * z)


def area_consistent(a, b, c):
    """scaled_area^2 == (3 - tau) * cayley_menger, since 64 sin^2(36 deg) = 16 (3 - tau)."""
    k = scaled_area(a, b, c)
    return k * k == (3 - TAU) * cayley_menger(a, b, c)


def locate(p, tri):
    """'inside', 'boundary' or 'outside' for a point and a triangle (exact)."""
    a, b, c = tri
    o = orient(a, b, c)
    s = [orient(a, b, p), orient(b, c, p), orient(c, a, p)]
    if any(v == -o for v in s):
        return "outside"
    if any(v == 0 for v in s):
        return "boundary"
    return "inside"


def on_open_segment(p, a, b):
    """p strictly between a and b on the segment."""
    d = b - a
    e = p - a
    if not ((d.conj() * e) - (d.conj() * e).conj()).is_zero():
        return False
    t = d.conj() * e            # real, = |d| |e| cos
    return real_sign(t) > 0 and real_sign(d.norm_real() - t) > 0


def direction_index(v):
    """k in 0..9 with v a positive real multiple of zeta^k, else None."""
    for k in range(10):
        w = v * zeta_power(-k)
        if w.is_real() and real_sign(w) > 0:
            return k
    return None


@lru_cache(maxsize=None)
def _tau_decimal(digits):
    return to_decimal(ZAlpha.alpha(1), digits)


def _real_decimal(z, digits):
    p, q = real_parts(z)
    with localcontext() as ctx:
        ctx.prec = digits + 5
        return Decimal(p.numerator) / p.denominator + Decimal(q.numerator) / q.denominator * _tau_decimal(digits + 10)


def to_complex_decimal(z, digits=20):
    """(Re z, Im z) as Decimals, for output only."""
    re = (z + z.conj()) * Fraction(1, 2)
    with localcontext() as ctx:
        ctx.prec = digits + 5
        sin36 = ((3 - _tau_decimal(digits + 10)) / 4).sqrt()
        k = _real_decimal(imag_scaled(z), digits + 5)
        im = k / (4 * sin36)
        return +_real_decimal(re, digits + 5), +im

"""Exact arithmetic in Z[alpha], alpha the Pisot root of t^{r+1} - t^r - ... - 1.

Elements are integer coordinate vectors in the basis 1, alpha, ..., alpha^r.
Signs are decided by bisecting a dyadic interval around alpha.
"""
import threading
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

from .wordalg import b as _b

DEFAULT_DEPTH = 256


class DepthExceeded(RuntimeError):
    pass


class NegativeInput(ValueError):
    pass


def minpoly(r):
    """Coefficients (constant first) of t^{r+1} - t^r - ... - t - 1."""
    return [-1] * (r + 1) + [1]


def _eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


class _Interval:
    """Memoized bracket (lo, hi) of alpha; only ever shrinks."""

    def __init__(self, r):
        self.r = r
        self.lock = threading.Lock()
        lo, hi = Fraction(3, 2), Fraction(2)
        m = minpoly(r)
        if not (_eval(m, lo) < 0 < _eval(m, hi)):
            lo, hi = Fraction(1), Fraction(2)
        self.lo, self.hi = lo, hi

    def get(self):
        with self.lock:
            return self.lo, self.hi

    def refine(self, width):
        """Bisect until hi - lo <= width; returns the bracket."""
        m = minpoly(self.r)
        with self.lock:
            lo, hi = self.lo, self.hi
            while hi - lo > width:
                mid = (lo + hi) / 2
                if _eval(m, mid) < 0:
                    lo = mid
                else:
                    hi = mid
            self.lo, self.hi = lo, hi
            return lo, hi


_intervals = {}
_intervals_lock = threading.Lock()


def alpha_interval(r):
    with _intervals_lock:
        if r not in _intervals:
            _intervals[r] = _Interval(r)
        return _intervals[r]


def _bounds(coeffs, lo, hi):
    """Range of sum c_i x^i over x in [lo, hi] with x > 0, termwise."""
    low = high = Fraction(0)
    for i, c in enumerate(coeffs):
        a, bb = c * lo ** i, c * hi ** i
        low += min(a, bb)
        high += max(a, bb)
    return low, high


@dataclass(frozen=True)
class ZAlpha:
    coords: tuple
    r: int

    def __post_init__(self):
        c = tuple(int(v) for v in self.coords)
        if len(c) != self.r + 1:
            raise ValueError(f"need {self.r + 1} coordinates")
        object.__setattr__(self, "coords", c)

    @classmethod
    def from_int(cls, n, r):
        return cls((n,) + (0,) * r, r)

    @classmethod
    def zero(cls, r):
        return cls.from_int(0, r)

    @classmethod
    def one(cls, r):
        return cls.from_int(1, r)

    @classmethod
    def alpha(cls, r):
        return cls((0, 1) + (0,) * (r - 1), r)

    def _same(self, o):
        if isinstance(o, int):
            return ZAlpha.from_int(o, self.r)
        if o.r != self.r:
            raise ValueError("different r")
        return o

    def __add__(self, o):
        o = self._same(o)
        return ZAlpha(tuple(a + c for a, c in zip(self.coords, o.coords)), self.r)

    __radd__ = __add__

    def __neg__(self):
        return ZAlpha(tuple(-a for a in self.coords), self.r)

    def __sub__(self, o):
        return self + (-self._same(o))

    def __rsub__(self, o):
        return self._same(o) - self

    def mul_by_alpha(self):
        c = self.coords
        top = c[-1]
        # alpha^{r+1} = 1 + alpha + ... + alpha^r
        return ZAlpha(tuple(top + (c[i - 1] if i else 0) for i in range(self.r + 1)), self.r)

    def mul_by_alpha_inv(self):
        c = self.coords
        c0 = c[0]
        # alpha^{-1} = alpha^r - alpha^{r-1} - ... - 1
        out = [c[i + 1] - c0 for i in range(self.r)] + [c0]
        return ZAlpha(tuple(out), self.r)

    def __mul__(self, o):
        o = self._same(o)
        acc = ZAlpha.zero(self.r)
        p = self
        for c in o.coords:
            if c:
                acc = acc + ZAlpha(tuple(c * a for a in p.coords), self.r)
            p = p.mul_by_alpha()
        return acc

    __rmul__ = __mul__

    def __pow__(self, n):
        out = ZAlpha.one(self.r)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self):
        return not any(self.coords)

    def sign(self):
        return sign(self)

    def __lt__(self, o):
        return sign(self._same(o) - self) > 0

    def __le__(self, o):
        return sign(self._same(o) - self) >= 0

    def __gt__(self, o):
        return sign(self - self._same(o)) > 0

    def __ge__(self, o):
        return sign(self - self._same(o)) >= 0

    def decimal(self, digits=30):
        return to_decimal(self, digits)

    def to_json(self):
        return {"coords": list(self.coords), "r": self.r}

    @classmethod
    def from_json(cls, d):
        return cls(tuple(d["coords"]), d["r"])

    def __str__(self):
        out = ""
        for i, c in enumerate(self.coords):
            if not c:
                continue
            mon = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            mag = abs(c)
            body = str(mag) if not mon else (mon if mag == 1 else f"{mag}*{mon}")
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out or "0"


def alpha_power(r, n):
    """alpha^n for any integer n."""
    x = ZAlpha.one(r)
    step = ZAlpha.mul_by_alpha if n >= 0 else ZAlpha.mul_by_alpha_inv
    for _ in range(abs(n)):
        x = step(x)
    return x


def omega(r):
    return alpha_power(r, -1)


def sign(x):
    """Exact sign of a ZAlpha value."""
    if x.is_zero():
        return 0
    iv = alpha_interval(x.r)
    lo, hi = iv.get()
    width = hi - lo
    while True:
        low, high = _bounds(x.coords, lo, hi)
        if low > 0:
            return 1
        if high < 0:
            return -1
        width = width / 4
        lo, hi = iv.refine(width)


def enclose(x, width):
    """Rational interval [low, high] containing the value of x, of width <= roughly ``width``."""
    iv = alpha_interval(x.r)
    w = Fraction(1, 2)
    while True:
        lo, hi = iv.refine(w)
        low, high = _bounds(x.coords, lo, hi)
        if high - low <= width:
            return low, high
        w /= 16


def to_decimal(x, digits=30):
    """Approximate decimal value (for display only)."""
    low, high = enclose(x, Fraction(1, 10 ** (digits + 5)))
    with localcontext() as ctx:
        ctx.prec = digits + 10
        mid = (Decimal(low.numerator) / Decimal(low.denominator)
               + Decimal(high.numerator) / Decimal(high.denominator)) / 2
        ctx.prec = digits
        return +mid


# Classes of twists and Laurent polynomials

class LaurentPoly:
    """Integer Laurent polynomial in t; stored as exponent -> coefficient."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        self.c = {int(e): int(v) for e, v in (coeffs or {}).items() if v}

    @classmethod
    def monomial(cls, e, v=1):
        return cls({e: v})

    @classmethod
    def from_list(cls, coeffs, shift=0):
        return cls({i + shift: v for i, v in enumerate(coeffs)})

    def __add__(self, o):
        out = dict(self.c)
        for e, v in o.c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self.c.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, int):
            return LaurentPoly({e: v * o for e, v in self.c.items()})
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in o.c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, LaurentPoly) and self.c == o.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def is_zero(self):
        return not self.c

    def low(self):
        return min(self.c) if self.c else 0

    def high(self):
        return max(self.c) if self.c else 0

    def divmod(self, d):
        """Quotient and remainder by d, whose lowest and highest coefficients are +-1.

        The remainder has exponents in [0, deg d) after normalizing d to start at t^0.
        """
        if d.is_zero():
            raise ZeroDivisionError
        dl, dh = d.low(), d.high()
        lead = d.c[dh]
        if lead not in (1, -1):
            raise ValueError("divisor must have a unit leading coefficient")
        rem = LaurentPoly(self.c)
        q = LaurentPoly()
        # clear exponents below dl with the low end, then reduce from the top
        while not rem.is_zero() and rem.low() < dl:
            e = rem.low()
            k = LaurentPoly.monomial(e - dl, rem.c[e] * d.c[dl])
            q = q + k
            rem = rem - k * d
        while not rem.is_zero() and rem.high() >= dh:
            e = rem.high()
            k = LaurentPoly.monomial(e - dh, rem.c[e] * lead)
            q = q + k
            rem = rem - k * d
        return q, rem

    def congruent(self, o, d):
        return (self - o).divmod(d)[1].is_zero()

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c):
            v = self.c[e]
            mon = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mon:
                coef = "" if v == 1 else "-" if v == -1 else f"{v}*"
                parts.append(f"{coef}{mon}")
            else:
                parts.append(str(v))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return {str(e): v for e, v in sorted(self.c.items())}


def relation(r):
    """1 - t - ... - t^{r+1}."""
    return LaurentPoly.from_list([1] + [-1] * (r + 1))


def class_of_shift(r, n, flip=False):
    """[O(n)] -> alpha^n (alpha^{-n} with flip)."""
    return alpha_power(r, -n if flip else n)


def eval_laurent(r, p, flip=False):
    """Substitute t -> alpha^{-1} (t -> alpha with flip)."""
    acc = ZAlpha.zero(r)
    for e, v in p.c.items():
        acc = acc + ZAlpha.from_int(v, r) * class_of_shift(r, -e, flip)
    return acc


def fibonacci(n):
    """f_0 = f_1 = 1."""
    a, c = 1, 1
    for _ in range(n):
        a, c = c, a + c
    return a


# Transition matrix and the direct-limit embedding

def transition_matrix(r):
    M = [[0] * (r + 1) for _ in range(r + 1)]
    M[0] = [1] * (r + 1)
    for i in range(1, r + 1):
        M[i][i - 1] = 1
    return M


def eigvec_v(r):
    """v_0 = alpha^{r+1}, v_i = alpha^r + ... + alpha^i for 1 <= i <= r."""
    v = [alpha_power(r, r + 1)]
    for i in range(1, r + 1):
        acc = ZAlpha.zero(r)
        for k in range(i, r + 1):
            acc = acc + alpha_power(r, k)
        v.append(acc)
    return v


def vM_equals_alpha_v(r):
    M = transition_matrix(r)
    v = eigvec_v(r)
    a = ZAlpha.alpha(r)
    for j in range(r + 1):
        s = ZAlpha.zero(r)
        for i in range(r + 1):
            s = s + ZAlpha.from_int(M[i][j], r) * v[i]
        if s != a * v[j]:
            return False
    return True


def mat_vec(M, x):
    return [sum(M[i][j] * x[j] for j in range(len(x))) for i in range(len(M))]


def limit_embed(r, n, x):
    """alpha^{-n} (v . x)."""
    v = eigvec_v(r)
    acc = ZAlpha.zero(r)
    for vi, xi in zip(v, x):
        acc = acc + ZAlpha.from_int(xi, r) * vi
    return acc * alpha_power(r, -n)


# Digit expansions and realizations

def digit_expand(g, max_depth=DEFAULT_DEPTH):
    """Greedy base-alpha expansion; returns sorted [(exponent, 1), ...], largest first."""
    s = sign(g)
    if s < 0:
        raise NegativeInput("digit expansion needs a nonnegative value")
    if s == 0:
        return []
    r = g.r
    N = 0
    if alpha_power(r, 0) <= g:
        while alpha_power(r, N + 1) <= g:
            N += 1
    else:
        while alpha_power(r, N) > g:
            N -= 1
    rem = g
    out = []
    i = N
    p = alpha_power(r, N)
    steps = 0
    while not rem.is_zero():
        if steps >= max_depth:
            raise DepthExceeded(f"no termination within depth {max_depth}")
        if p <= rem:
            out.append((i, 1))
            rem = rem - p
        i -= 1
        p = p.mul_by_alpha_inv()
        steps += 1
    return out


def admissible(digits, r):
    """No r+1 ones at consecutive exponents."""
    exps = sorted(e for e, d in digits if d)
    run = 1
    for a, c in zip(exps, exps[1:]):
        run = run + 1 if c == a + 1 else 1
        if run > r:
            return False
    return True


def resum(r, digits):
    acc = ZAlpha.zero(r)
    for e, d in digits:
        acc = acc + ZAlpha.from_int(d, r) * alpha_power(r, e)
    return acc


def realize_class(g, max_depth=DEFAULT_DEPTH):
    """ShiftMultiset {n: a_n} with sum a_n [O(n)] = g."""
    return {e: d for e, d in digit_expand(g, max_depth)}


def class_of(r, multiset, flip=False):
    acc = ZAlpha.zero(r)
    for n, a in multiset.items():
        acc = acc + ZAlpha.from_int(a, r) * class_of_shift(r, n, flip)
    return acc


def cancellation_compare(r, pM, pN, max_depth=DEFAULT_DEPTH):
    """'Less' / 'Equal' / 'Greater' for [M] vs [N], with a complement F when [M] <= [N]."""
    gm, gn = eval_laurent(r, pM), eval_laurent(r, pN)
    s = sign(gn - gm)
    if s < 0:
        return "Greater", None
    F = realize_class(gn - gm, max_depth)
    return ("Equal" if s == 0 else "Less"), F


def growth_constant(r):
    """(numerator, denominator) of alpha^{r+2} / sum_{i=0}^{r} (i+1) alpha^{r-i}."""
    den = ZAlpha.zero(r)
    for i in range(r + 1):
        den = den + ZAlpha.from_int(i + 1, r) * alpha_power(r, r - i)
    return alpha_power(r, r + 2), den


def growth_limit_check(r, n=60, tol=Fraction(1, 10 ** 6)):
    """|b_n alpha^{-n} - L| < tol, decided exactly."""
    tol = Fraction(tol)
    num, den = growth_constant(r)
    # b_n alpha^{-n} - num/den = X/den with den > 0
    X = ZAlpha.from_int(_b(r, n), r) * alpha_power(r, -n) * den - num
    p, q = tol.numerator, tol.denominator
    qX = ZAlpha.from_int(q, r) * X
    pD = ZAlpha.from_int(p, r) * den
    return sign(qX - pD) < 0 and sign(-qX - pD) < 0


def growth_ratio(r, n):
    """b_n alpha^{-n} as a ZAlpha."""
    return ZAlpha.from_int(_b(r, n), r) * alpha_power(r, -n)


@lru_cache(maxsize=None)
def growth_constant_decimal(r, digits=30):
    num, den = growth_constant(r)
    lo_n, hi_n = enclose(num, Fraction(1, 10 ** (digits + 8)))
    lo_d, hi_d = enclose(den, Fraction(1, 10 ** (digits + 8)))
    with localcontext() as ctx:
        ctx.prec = digits + 10
        val = (Decimal(lo_n.numerator) / Decimal(lo_n.denominator)) / (
            Decimal(lo_d.numerator) / Decimal(lo_d.denominator))
        ctx.prec = digits
        return +val


def parse_poly(text, var):
    """Parse an integer Laurent polynomial such as '3*a^2 - a + 1' or 't^-1 + 2'.

    Returns a dict exponent -> coefficient.
    """
    import re
    s = text.replace(" ", "")
    if var == "a":
        s = s.replace("alpha", "a")
    if not s:
        raise ValueError("empty expression")
    terms = re.split(r"(?<!\^)(?=[+-])", s)
    pat = re.compile(r"([+-]?)(\d+)?\*?(" + var + r"(?:\^(-?\d+))?)?")
    out = {}
    for body in terms:
        if not body:
            continue
        m = pat.fullmatch(body)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse term {body!r} in {text!r}")
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(1) == "-":
            coef = -coef
        e = 0
        if m.group(3):
            e = int(m.group(4)) if m.group(4) else 1
        out[e] = out.get(e, 0) + coef
    return out


def parse_zalpha(text, r):
    """ZAlpha from a polynomial in ``a`` (alpha); negative powers allowed."""
    acc = ZAlpha.zero(r)
    for e, v in parse_poly(text, "a").items():
        acc = acc + ZAlpha.from_int(v, r) * alpha_power(r, e)
    return acc


def parse_laurent(text):
    return LaurentPoly(parse_poly(text, "t"))

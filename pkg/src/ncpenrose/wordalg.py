"""The graded algebra B = k<x,y>/(y^{r+1}) on its word basis.

Words are plain strings over ``x``/``y``; ``Element`` holds a sparse linear
combination of valid words over a field from :mod:`linalg`.
"""
from functools import lru_cache

from .kernels import avoiding_masks
from .linalg import QQ, Echelon, ResourceLimit, get_field

DEFAULT_MAX_DIM = 5000


def is_valid_word(w, r):
    return set(w) <= {"x", "y"} and "y" * (r + 1) not in w


class Element:
    """Finite linear combination of words in B."""

    __slots__ = ("r", "field", "terms")

    def __init__(self, r, terms=None, field=QQ):
        self.r = r
        self.field = get_field(field)
        f = self.field
        out = {}
        for w, c in (terms or {}).items():
            c = f.coerce(c)
            if c == f.zero or not is_valid_word(w, r):
                continue
            out[w] = f.add(out.get(w, f.zero), c)
            if out[w] == f.zero:
                del out[w]
        self.terms = out

    @classmethod
    def word(cls, w, r, field=QQ):
        return cls(r, {w: 1}, field)

    def _same(self, other):
        if self.r != other.r or self.field is not other.field:
            raise ValueError("elements live in different algebras")

    def __add__(self, other):
        self._same(other)
        f = self.field
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = f.add(t.get(w, f.zero), c)
        return Element(self.r, t, f)

    def __neg__(self):
        f = self.field
        return Element(self.r, {w: f.neg(c) for w, c in self.terms.items()}, f)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a):
        f = self.field
        a = f.coerce(a)
        return Element(self.r, {w: f.mul(a, c) for w, c in self.terms.items()}, f)

    def __mul__(self, other):
        return multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, Element) and self.r == other.r and self.terms == other.terms

    def __hash__(self):
        return hash((self.r, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return {len(w) for w in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{w or '1'}" for w, c in sorted(self.terms.items()))

    def to_json(self):
        return {w: self.field.fmt(c) for w, c in sorted(self.terms.items())}


def multiply(e1, e2):
    """Concatenate words; words containing y^{r+1} vanish."""
    e1._same(e2)
    f = e1.field
    bad = "y" * (e1.r + 1)
    out = {}
    for w1, c1 in e1.terms.items():
        for w2, c2 in e2.terms.items():
            w = w1 + w2
            if bad in w:
                continue
            out[w] = f.add(out.get(w, f.zero), f.mul(c1, c2))
    return Element(e1.r, out, f)


@lru_cache(maxsize=None)
def _basis(r, n):
    if n == 0:
        return ("",)
    trans = str.maketrans("01", "xy")
    return tuple(format(m, f"0{n}b").translate(trans) for m in avoiding_masks(n, r))


def basis(r, n):
    """All valid words of length n, lexicographic with x < y."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return list(_basis(r, n))


@lru_cache(maxsize=None)
def _b_table(r, n):
    vals = []
    for i in range(n + 1):
        vals.append(2 ** i if i <= r else sum(vals[-r - 1:]))
    return tuple(vals)


def b(r, n):
    """dim B_n; 0 for negative n."""
    if n < 0:
        return 0
    return _b_table(r, n)[n]


def u(r, j, field=QQ):
    """u_j = sum_{i=1}^{j} y^{i-1} x y^{j-i}."""
    if not 1 <= j <= r + 1:
        raise ValueError(f"u_j needs 1 <= j <= {r + 1}, got {j}")
    return Element(r, {"y" * (i - 1) + "x" + "y" * (j - i): 1 for i in range(1, j + 1)}, field)


def key_relation(r, j, field=QQ):
    """u_j - u_{j-1} y == y^{j-1} x."""
    lhs = u(r, j, field) - u(r, j - 1, field) * Element.word("y", r, field)
    return lhs == Element.word("y" * (j - 1) + "x", r, field)


def series_inverse(poly, N):
    """First N+1 coefficients of 1/poly for integer poly with poly[0] = +-1."""
    if poly[0] not in (1, -1):
        raise ValueError("constant term must be a unit")
    out = []
    for n in range(N + 1):
        s = (1 if n == 0 else 0) - sum(poly[k] * out[n - k] for k in range(1, min(n, len(poly) - 1) + 1))
        out.append(s * poly[0])
    return out


def poly_mul_trunc(p, q, N):
    out = [0] * (N + 1)
    for i, a in enumerate(p[:N + 1]):
        if a:
            for j, bb in enumerate(q[:N + 1 - i]):
                out[i + j] += a * bb
    return out


def denominator(r):
    """Coefficients of 1 - t - ... - t^{r+1}."""
    return [1] + [-1] * (r + 1)


def predicted_a(r, N):
    return series_inverse(denominator(r), N)


def u_monomials(r, n, field=QQ, max_count=None):
    """All products u_{j1} ... u_{jk} of total degree n (the empty product at n=0)."""
    table = [[Element.word("", r, field)]]
    for m in range(1, n + 1):
        row = []
        for j in range(1, min(r + 1, m) + 1):
            uj = u(r, j, field)
            for p in table[m - j]:
                row.append(multiply(uj, p))
        if max_count is not None and len(row) > max_count:
            raise ResourceLimit(f"{len(row)} products in degree {m} exceed {max_count}")
        table.append(row)
    return table


def subalgebra_dims(r, N, field=QQ, max_dim=DEFAULT_MAX_DIM):
    """n -> (dim A_n by row reduction, coefficient of 1/(1 - t - ... - t^{r+1}))."""
    mons = u_monomials(r, N, field, max_dim)
    pred = predicted_a(r, N)
    out = {}
    for n in range(N + 1):
        e = Echelon(field, max_dim).extend(m.terms for m in mons[n])
        out[n] = (e.rank, pred[n])
    return out


def freeness_shadow(r, N, field=QQ, max_dim=DEFAULT_MAX_DIM):
    """dim (A + Ay + ... + Ay^r)_n == sum a_{n-i} == b_n for all n <= N."""
    mons = u_monomials(r, N, field, max_dim)
    pred = predicted_a(r, N)
    for n in range(N + 1):
        e = Echelon(field, max_dim)
        for i in range(0, min(r, n) + 1):
            yi = Element.word("y" * i, r, field)
            e.extend(multiply(m, yi).terms for m in mons[n - i])
        expect = sum(pred[n - i] for i in range(0, min(r, n) + 1))
        if not e.rank == expect == b(r, n):
            return False
    return True


def left_ideal_dims(r, N, field=QQ, max_dim=DEFAULT_MAX_DIM):
    """n -> (dim (BxB)_n, dim (B A_{>=1})_n), each computed as an actual span."""
    mons = u_monomials(r, N, field, max_dim)
    xe = Element.word("x", r, field)
    out = {}
    for n in range(N + 1):
        bxb = Echelon(field, max_dim)
        for k in range(n):
            for w1 in basis(r, k):
                left = multiply(Element.word(w1, r, field), xe)
                for w2 in basis(r, n - 1 - k):
                    bxb.add(multiply(left, Element.word(w2, r, field)).terms)
        ba = Echelon(field, max_dim)
        for m in range(1, n + 1):
            for w in basis(r, n - m):
                we = Element.word(w, r, field)
                for p in mons[m]:
                    ba.add(multiply(we, p).terms)
        out[n] = (bxb.rank, ba.rank)
    return out


def left_ideal_identities(r, N, table=None):
    """Both dims equal b_n - [n <= r] and sum_{i=1}^{r+1} b_{n-i}."""
    table = table or left_ideal_dims(r, N)
    for n, (d1, d2) in table.items():
        codim = 1 if n <= r else 0
        if not d1 == d2 == b(r, n) - codim == sum(b(r, n - i) for i in range(1, r + 2)):
            return False
    return True


def hilbert_identity(r, N):
    """(1 - t - ... - t^{r+1}) * sum b_n t^n == 1 + ... + t^r mod t^{N+1}."""
    lhs = poly_mul_trunc(denominator(r), [b(r, n) for n in range(N + 1)], N)
    rhs = [1 if n <= r else 0 for n in range(N + 1)]
    return lhs == rhs


def block_decompose(r, n, w):
    """Index i with w in y^i x B_{n-i-1}; only defined for n >= r+1."""
    if n <= r:
        raise ValueError(f"block decomposition needs n >= r+1 = {r + 1}, got n={n}")
    if len(w) != n or not is_valid_word(w, r):
        raise ValueError(f"{w!r} is not a basis word of B_{n}")
    return len(w) - len(w.lstrip("y"))

"""Field-generic sparse row reduction.

Vectors are dicts mapping an orderable column key to a nonzero field element.
The pivot of a row is its smallest key, so the echelon form is canonical for a
fixed column order.
"""
from fractions import Fraction


class ResourceLimit(RuntimeError):
    """A computation would exceed its configured size bound."""


class _Rationals:
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, str):
            return Fraction(x)
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return 1 / a

    def neg(self, a):
        return -a

    def fmt(self, a):
        return f"{a.numerator}/{a.denominator}"


class _GF2:
    name = "F2"
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator % 2 == 0:
                raise ZeroDivisionError("denominator is even")
            return x.numerator % 2
        return int(x) % 2

    def add(self, a, b):
        return (a + b) & 1

    sub = add

    def mul(self, a, b):
        return a & b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("0 has no inverse")
        return 1

    def neg(self, a):
        return a

    def fmt(self, a):
        return f"{a}/1"


QQ = _Rationals()
GF2 = _GF2()
FIELDS = {"QQ": QQ, "F2": GF2}


def get_field(field):
    if isinstance(field, str):
        try:
            return FIELDS[field]
        except KeyError:
            raise ValueError(f"unknown field {field!r}") from None
    return field


def axpy(field, y, a, x):
    """Return y + a*x as a new sparse vector."""
    out = dict(y)
    for k, v in x.items():
        s = field.add(out.get(k, field.zero), field.mul(a, v))
        if s == field.zero:
            out.pop(k, None)
        else:
            out[k] = s
    return out


class Echelon:
    """Incremental echelon basis of a subspace of a sparse vector space."""

    def __init__(self, field=QQ, max_rank=None):
        self.field = get_field(field)
        self.rows = {}
        self.max_rank = max_rank

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Remainder of ``vec`` after elimination against the stored rows."""
        f = self.field
        vec = {k: v for k, v in vec.items() if v != f.zero}
        while vec:
            p = min(vec)
            row = self.rows.get(p)
            if row is None:
                return vec
            vec = axpy(f, vec, f.neg(vec[p]), row)
        return vec

    def add(self, vec):
        """Insert ``vec``; return True when it enlarged the span."""
        rem = self.reduce(vec)
        if not rem:
            return False
        if self.max_rank is not None and len(self.rows) >= self.max_rank:
            raise ResourceLimit(f"subspace rank exceeds {self.max_rank}")
        f = self.field
        p = min(rem)
        c = f.inv(rem[p])
        self.rows[p] = {k: f.mul(c, v) for k, v in rem.items()}
        return True

    def extend(self, vecs):
        for v in vecs:
            self.add(v)
        return self

    def contains(self, vec):
        return not self.reduce(vec)

    def pivots(self):
        return sorted(self.rows)

    def canonical(self):
        """Fully reduced rows, sorted by pivot."""
        f = self.field
        keys = sorted(self.rows)
        out = {}
        for p in reversed(keys):
            row = self.rows[p]
            for q in keys:
                if q > p and q in row and q in out:
                    row = axpy(f, row, f.neg(row[q]), out[q])
            out[p] = row
        return [out[p] for p in keys]


def span_dim(vecs, field=QQ, max_rank=None):
    return Echelon(field, max_rank).extend(vecs).rank

"""(0,1)-sequences with no run of r+1 ones.

Finite levels X(n) are strings of length n+1; infinite points are represented
by eventually periodic data (preperiod, cycle).
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .kernels import avoiding_masks


def _check_r(r):
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")


def max_run(digits, ch="1"):
    best = cur = 0
    for d in digits:
        cur = cur + 1 if d == ch else 0
        best = max(best, cur)
    return best


def is_valid(digits, r):
    return set(digits) <= {"0", "1"} and max_run(digits) <= r


@dataclass(frozen=True)
class FiniteSeq:
    digits: str
    r: int = 1

    def __post_init__(self):
        _check_r(self.r)
        if not is_valid(self.digits, self.r):
            raise ValueError(f"{self.digits!r} is not a 0/1 string without {self.r + 1} consecutive 1s")

    def __len__(self):
        return len(self.digits)

    def __str__(self):
        return self.digits


def normalize_eventual(pre, cyc):
    """Minimal period and minimal preperiod for eventually periodic tuples/strings."""
    if len(cyc) == 0:
        raise ValueError("cycle must be nonempty")
    n = len(cyc)
    for d in range(1, n + 1):
        if n % d == 0 and cyc[:d] * (n // d) == cyc:
            cyc = cyc[:d]
            break
    while len(pre) and pre[-1] == cyc[-1]:
        pre = pre[:-1]
        cyc = cyc[-1:] + cyc[:-1]
    return pre, cyc


@dataclass(frozen=True)
class EventualSeq:
    """The infinite sequence pre + cyc + cyc + ...; stored in canonical form."""
    pre: str
    cyc: str
    r: int = 1

    def __post_init__(self):
        _check_r(self.r)
        if not self.cyc:
            raise ValueError("cycle must be nonempty")
        if not set(self.pre + self.cyc) <= {"0", "1"}:
            raise ValueError("digits must be 0 or 1")
        # a run of ones inside the periodic part is seen within two periods,
        # unless the cycle is all ones
        if "0" not in self.cyc or max_run(self.pre + self.cyc + self.cyc) > self.r:
            raise ValueError(f"sequence has a run of {self.r + 1} ones")
        pre, cyc = normalize_eventual(self.pre, self.cyc)
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "cyc", cyc)

    def digit(self, i):
        if i < len(self.pre):
            return int(self.pre[i])
        return int(self.cyc[(i - len(self.pre)) % len(self.cyc)])

    def prefix(self, n):
        return "".join(str(self.digit(i)) for i in range(n))

    def to_json(self):
        return {"pre": self.pre, "cyc": self.cyc, "r": self.r}

    @classmethod
    def from_json(cls, d):
        return cls(d["pre"], d["cyc"], d.get("r", 1))

    def __str__(self):
        return f"{self.pre}({self.cyc})"


def zeros(r=1):
    return EventualSeq("", "0", r)


def enumerate_Xn(r, n):
    """X(n): all valid strings of length n+1 in lexicographic order."""
    _check_r(r)
    if n < -1:
        raise ValueError("n must be >= -1")
    length = n + 1
    if length == 0:
        return [FiniteSeq("", r)]
    return [FiniteSeq(format(m, f"0{length}b"), r) for m in avoiding_masks(length, r)]


def block_index(seq):
    """Number of trailing ones; the all-ones string of length n+1 gets n+1."""
    d = seq.digits if isinstance(seq, FiniteSeq) else seq
    if not d:
        raise ValueError("block_index needs a nonempty sequence")
    return len(d) - len(d.rstrip("1"))


def truncate(seq):
    """Drop the last digit."""
    if len(seq.digits) == 0:
        raise ValueError("cannot truncate the empty sequence")
    return FiniteSeq(seq.digits[:-1], seq.r)


@lru_cache(maxsize=None)
def _c_table(r, n):
    vals = [1]  # c_{-1}
    for _ in range(n + 1):
        vals.append(sum(vals[-r - 1:]))
    return tuple(vals)


def c(r, n):
    """c_n: 0 for n <= -2, c_{-1} = 1, c_n = c_{n-1} + ... + c_{n-r-1}."""
    _check_r(r)
    if n <= -2:
        return 0
    return _c_table(r, n)[n + 1]


def shift(z):
    """Drop the first digit."""
    if z.pre:
        return EventualSeq(z.pre[1:], z.cyc, z.r)
    return EventualSeq("", z.cyc[1:] + z.cyc[:1], z.r)


def tail_equal(z, w):
    if z.r != w.r:
        raise ValueError("sequences have different r")
    if z == w:
        return True
    start = max(len(z.pre), len(w.pre))
    period = lcm(len(z.cyc), len(w.cyc))
    return all(z.digit(i) == w.digit(i) for i in range(start, start + period))


def metric_partial(z, w, N):
    """Partial sum of sum 2^-n |z_n - w_n| through n = N, and a tail bound."""
    if N < 0:
        raise ValueError("N must be >= 0")
    val = sum(Fraction(1, 2 ** n) for n in range(N + 1) if z.digit(n) != w.digit(n))
    return Fraction(val), Fraction(2, 2 ** N)


def is_cartwheel_class(z):
    """Eventually all zeros, the only shift-invariant tail class."""
    return z.cyc == "0"


def eventual_seqs(r, max_total):
    """All canonical EventualSeq with len(pre) + len(cyc) <= max_total, deduplicated."""
    seen = {}
    for total in range(1, max_total + 1):
        for lc in range(1, total + 1):
            lp = total - lc
            for m in range(1 << total):
                s = format(m, f"0{total}b")
                try:
                    z = EventualSeq(s[:lp], s[lp:], r)
                except ValueError:
                    continue
                seen.setdefault((z.pre, z.cyc), z)
    return list(seen.values())

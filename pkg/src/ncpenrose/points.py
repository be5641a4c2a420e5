"""Point modules over B: x.e_i = xi_i e_{i+1}, y.e_i = eta_i e_{i+1}.

Action data are eventually periodic sequences of pairs (xi_i, eta_i).
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .linalg import get_field
from .seqspace import EventualSeq, FiniteSeq, enumerate_Xn, normalize_eventual, tail_equal

INF = "inf"


def _pairs(seq, f):
    return tuple((f.coerce(a), f.coerce(c)) for a, c in seq)


@dataclass(frozen=True)
class PointModule:
    r: int
    field: str
    pre: tuple
    cyc: tuple

    def __post_init__(self):
        f = get_field(self.field)
        pre, cyc = _pairs(self.pre, f), _pairs(self.cyc, f)
        if not cyc:
            raise ValueError("cycle must be nonempty")
        for a, c in pre + cyc:
            if a == f.zero and c == f.zero:
                raise ValueError("(xi, eta) = (0, 0) is not allowed")
        etas = [c != f.zero for _, c in pre + cyc + cyc]
        run = best = 0
        for e in etas:
            run = run + 1 if e else 0
            best = max(best, run)
        if best > self.r or all(c != f.zero for _, c in cyc):
            raise ValueError(f"y^{self.r + 1} would act nonzero")
        pre, cyc = normalize_eventual(pre, cyc)
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "cyc", cyc)

    def pair(self, i):
        if i < len(self.pre):
            return self.pre[i]
        return self.cyc[(i - len(self.pre)) % len(self.cyc)]

    def pairs(self, n):
        return [self.pair(i) for i in range(n)]

    def to_json(self):
        fmt = (lambda v: str(v)) if self.field == "QQ" else int
        return {"r": self.r, "field": self.field,
                "pre": [[fmt(a), fmt(c)] for a, c in self.pre],
                "cyc": [[fmt(a), fmt(c)] for a, c in self.cyc]}

    @classmethod
    def from_json(cls, d):
        conv = Fraction if d["field"] == "QQ" else int
        return cls(d["r"], d["field"], tuple((conv(a), conv(c)) for a, c in d["pre"]),
                   tuple((conv(a), conv(c)) for a, c in d["cyc"]))


def from_seq(z, field="QQ"):
    """M_z: xi_i = 1 - z_i, eta_i = z_i."""
    conv = lambda s: tuple((1 - int(ch), int(ch)) for ch in s)
    return PointModule(z.r, field, conv(z.pre), conv(z.cyc))


def lambda_module(lam, r=1):
    """x.e_i = e_{i+1} always; y.e_i = lam e_{i+1} on even i, 0 on odd i."""
    return PointModule(r, "QQ", (), ((1, Fraction(lam)), (1, 0)))


def twist_truncate(M):
    """M(1)_{>=0}: the module with e'_i = e_{i+1}."""
    if M.pre:
        return PointModule(M.r, M.field, M.pre[1:], M.cyc)
    return PointModule(M.r, M.field, (), M.cyc[1:] + M.cyc[:1])


def truncated_action_matrices(M, N):
    """N x N matrices of x and y on e_0..e_{N-1}; e_{N-1} maps outside the window."""
    f = get_field(M.field)
    X = np.full((N, N), f.zero, dtype=object)
    Y = np.full((N, N), f.zero, dtype=object)
    for i in range(N - 1):
        a, c = M.pair(i)
        X[i + 1, i] = a
        Y[i + 1, i] = c
    return X, Y


def mat_power_is_zero(A, k):
    P = A
    for _ in range(k - 1):
        P = P.dot(A)
    return all(v == 0 for v in P.flat)


def y_nilpotent(M, N):
    """y^{r+1} = 0 on the truncation."""
    _, Y = truncated_action_matrices(M, N)
    return mat_power_is_zero(Y, M.r + 1)


def _proj_equal(p, q, f):
    return f.mul(p[0], q[1]) == f.mul(p[1], q[0])


def qgr_iso(M, N):
    """Tails agree index by index as projective points (xi : eta).

    Graded isomorphisms of point modules rescale each e_i, so truncations
    M_{>=n}, N_{>=n} are isomorphic iff (xi_i : eta_i) match for i >= n.
    """
    if (M.r, M.field) != (N.r, N.field):
        raise ValueError("modules over different algebras")
    f = get_field(M.field)
    start = max(len(M.pre), len(N.pre))
    period = lcm(len(M.cyc), len(N.cyc))
    return all(_proj_equal(M.pair(i), N.pair(i), f) for i in range(start, start + period))


@dataclass(frozen=True)
class SphereSeq:
    """Entries in k or INF, eventually periodic."""
    pre: tuple
    cyc: tuple

    def __post_init__(self):
        pre, cyc = normalize_eventual(tuple(self.pre), tuple(self.cyc))
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "cyc", cyc)
        vals = pre + cyc + cyc
        for a, c in zip(vals, vals[1:]):
            if a != INF and c != INF:
                raise ValueError("a finite entry must be followed by inf")

    def entry(self, i):
        if i < len(self.pre):
            return self.pre[i]
        return self.cyc[(i - len(self.pre)) % len(self.cyc)]


def to_sphere_seq(M):
    if M.r != 1:
        raise ValueError("sphere sequences are defined for r = 1 only")
    f = get_field(M.field)
    conv = lambda ps: tuple(INF if c == f.zero else f.mul(a, f.inv(c)) for a, c in ps)
    return SphereSeq(conv(M.pre), conv(M.cyc))


# arrows of the two-vertex graph: (label, source, target)
LOOP = (INF, 0, 0)
ARROW_C = ("C", 0, 1)
ARROW_BACK = (INF, 1, 0)


@dataclass(frozen=True)
class GraphPath:
    pre: tuple
    cyc: tuple

    def arrow(self, i):
        if i < len(self.pre):
            return self.pre[i]
        return self.cyc[(i - len(self.pre)) % len(self.cyc)]

    def labels(self, n):
        return [self.arrow(i)[0] for i in range(n)]


def _arrow(prev_finite, cur):
    if cur != INF:
        if prev_finite:
            raise ValueError("inconsistent sequence")
        return ARROW_C
    return ARROW_BACK if prev_finite else LOOP


def psi_path(s):
    """Path from vertex 0: C for a finite entry, otherwise the unique inf arrow."""
    n = len(s.pre) + 1 + len(s.cyc)
    arrows = []
    for i in range(n):
        prev_finite = i > 0 and s.entry(i - 1) != INF
        arrows.append(_arrow(prev_finite, s.entry(i)))
    k = len(s.pre) + 1
    pre, cyc = normalize_eventual(tuple(arrows[:k]), tuple(arrows[k:]))
    return GraphPath(pre, cyc)


def enumerate_f2(N, r=1):
    """All length-N action strings over F2 and their y-digit classes.

    A position with (xi, eta) = (1, 1) is flagged: the module's class is the
    y-digit string z, but no rescaling over F2 identifies it with M_z there.
    """
    if N > 20:
        raise ValueError("N must be <= 20")
    choices = [(1, 0), (0, 1), (1, 1)]
    strings = [()]
    for _ in range(N):
        nxt = []
        for s in strings:
            for p in choices:
                t = s + (p,)
                run = 0
                for _, c in reversed(t):
                    if not c:
                        break
                    run += 1
                if run <= r:
                    nxt.append(t)
        strings = nxt
    classes = {}
    for s in strings:
        z = "".join(str(c) for _, c in s)
        FiniteSeq(z, r)  # the y-digits never contain r+1 ones
        entry = classes.setdefault(z, {"count": 0, "pure": 0, "unresolved": 0})
        entry["count"] += 1
        if all(a == 1 - c for a, c in s):
            entry["pure"] += 1
        else:
            entry["unresolved"] += 1
    return {
        "N": N, "r": r, "total": len(strings),
        "pure": sum(v["pure"] for v in classes.values()),
        "unresolved": sum(v["unresolved"] for v in classes.values()),
        "unresolved_note": "positions with (xi, eta) = (1, 1) have no rescaling to (1, 0) or (0, 1) over F2",
        "classes": dict(sorted(classes.items())),
    }


def pure_count_expected(N, r=1):
    return len(enumerate_Xn(r, N - 1))


def shift_identity(z, N=12):
    """M_z(1)_{>=0} == M_{sigma z} as action data and on N x N truncations."""
    from .seqspace import shift
    A = twist_truncate(from_seq(z))
    Bm = from_seq(shift(z))
    if A != Bm:
        return False
    X1, Y1 = truncated_action_matrices(A, N)
    X2, Y2 = truncated_action_matrices(Bm, N)
    return np.array_equal(X1, X2) and np.array_equal(Y1, Y2)


def tail_agreement(z, w):
    """qgr_iso of the sequence modules vs tail equality of the sequences."""
    return qgr_iso(from_seq(z), from_seq(w)) == tail_equal(z, w)

"""Check suite behind ``ncpenrose verify``.

Each check returns a Report; reports are ordered by check id so output does
not depend on execution order.
"""
import random
import time
from dataclasses import dataclass, field

from . import endo, k0ring, multimatrix, points, quivermap, seqspace, tiling, wordalg
from .k0ring import ZAlpha, alpha_power

LEVELS = ("quick", "full")

# A(0)..A(5) block sizes of the published diagrams (r = 1, 2, 3), as printed.
# The r = 1 row A(5) reads "8 4"; the edge structure forces 8 5 (= 3 + 2).
PRINTED_DIAGRAMS = {
    1: [[1, 0], [1, 1], [2, 1], [3, 2], [5, 3], [8, 4]],
    2: [[1, 0, 0], [1, 1, 0], [2, 1, 1], [4, 2, 1], [7, 4, 2], [13, 7, 4]],
    3: [[1, 0, 0, 0], [1, 1, 0, 0], [2, 1, 1, 0], [4, 2, 1, 1], [8, 4, 2, 1], [15, 8, 4, 2]],
}


@dataclass
class Report:
    check: str
    r: int
    N: object
    passed: bool
    witnesses: list = field(default_factory=list)
    seconds: float = 0.0

    def to_json(self, timing=False):
        d = {"check": self.check, "r": self.r, "N": self.N, "pass": self.passed,
             "witnesses": self.witnesses}
        if timing:
            d["seconds"] = round(self.seconds, 3)
        return d


def _dims(r, level):
    N = 16 if level == "full" else 12
    bad = []
    for n in range(N + 1):
        if len(wordalg.basis(r, n)) != wordalg.b(r, n):
            bad.append(n)
    return N, bad


def _hilbert(r, level):
    return 40, [] if wordalg.hilbert_identity(r, 40) else ["identity fails"]


def _free(r, level):
    N = 10 if level == "full" else 7
    bad = []
    for n, (got, want) in wordalg.subalgebra_dims(r, N).items():
        if got != want:
            bad.append(["dim A_n", n, got, want])
    if not wordalg.freeness_shadow(r, N):
        bad.append("A + Ay + ... + Ay^r has the wrong dimension")
    if not wordalg.left_ideal_identities(r, N):
        bad.append("left ideal dimensions")
    return N, bad


def _tower(r, level):
    top = 6 if level == "full" else 5
    # absorption reaches level n + r; stay within the matrix size guard
    while top > r + 1 and wordalg.b(r, top + r) > endo.DEFAULT_MAX_DIM:
        top -= 1
    bad = []
    for n in range(r + 1, top + 1):
        if not endo.check_Tn_units(r, n):
            bad.append(["T_n membership", n])
        msg = endo.check_psi_units(r, n)
        if msg:
            bad.append(["psi", n, msg])
        if endo.check_commute_units(r, n) is not None:
            bad.append(["square", n])
        if endo.check_absorption_units(r, n) is not None:
            bad.append(["absorption", n])
    return top, bad


def _tower_maps(r, level):
    N = 8 if level == "full" else 6
    bad = []
    for n, m in enumerate(multimatrix.penrose_tower(r, N + 1)):
        if not multimatrix.check_condition(m):
            bad.append(["condition", n])
        elif not multimatrix.verify_homomorphism(m):
            bad.append(["homomorphism", n])
    tau, sigma, comp = multimatrix.non_functoriality_example()
    if not (multimatrix.check_condition(tau) and multimatrix.check_condition(sigma)):
        bad.append("factors of the composite fail")
    if multimatrix.check_condition(comp):
        bad.append("composite passes")
    return N, bad


def _diagrams(r, level):
    d = multimatrix.tower_diagram(r, 8)
    bad = []
    ref = PRINTED_DIAGRAMS.get(r)
    if ref is not None:
        for n, (got, want) in enumerate(zip(d.levels, ref)):
            if got != want:
                bad.append(["A(n) differs from printed diagram", n, got, want])
    shape = multimatrix.stationary_edges(r)
    for k, es in enumerate(d.edges):
        up, low = d.levels[k], d.levels[k + 1]
        want = {(i, j) for (i, j) in shape if up[j] and low[i]}
        if es != want:
            bad.append(["edges", k])
    for n in range(41):
        if seqspace.c(r, n) != wordalg.b(r, n):
            bad.append(["c_n != b_n", n])
    for n in range(-1, 13):
        if len(seqspace.enumerate_Xn(r, n)) != seqspace.c(r, n + 1):
            bad.append(["|X(n)|", n])
    return 8, bad


def _simplicity(window_shift):
    def run(r, level):
        d = multimatrix.tower_diagram(r, 2 * r + 5)
        w = r + window_shift
        return w, [] if multimatrix.simplicity_check(d, w) else [f"not connected within {w} levels"]
    return run


def _k0(r, level):
    bad = []
    if not k0ring.vM_equals_alpha_v(r):
        bad.append("vM != alpha v")
    om = k0ring.omega(r)
    if sum((om ** i for i in range(1, r + 2)), ZAlpha.zero(r)) != ZAlpha.one(r):
        bad.append("sum omega^i != 1")
    if r == 1:
        for n in range(1, 11):
            p = k0ring.LaurentPoly({n: k0ring.fibonacci(n), n + 1: k0ring.fibonacci(n - 1)})
            if k0ring.eval_laurent(1, p) != ZAlpha.one(1):
                bad.append(["Van den Bergh", n])
    M = k0ring.transition_matrix(r)
    rng = random.Random(r)
    for trial in range(5):
        x = [rng.randint(-20, 20) for _ in range(r + 1)]
        n = r
        for _ in range(10):
            y = k0ring.mat_vec(M, x)
            if k0ring.limit_embed(r, n + 1, y) != k0ring.limit_embed(r, n, x):
                bad.append(["limit_embed", trial, n])
            x, n = y, n + 1
    return 10, bad


def random_nonnegative(r, rng, s=5, bound=3):
    g = ZAlpha.zero(r)
    for e in range(-s, s + 1):
        g = g + ZAlpha.from_int(rng.randint(0, bound), r) * alpha_power(r, e)
    return g


def _digits(r, level):
    count = 500 if level == "full" else 100
    rng = random.Random(1000 + r)
    bad = []
    for k in range(count):
        g = random_nonnegative(r, rng)
        try:
            d = k0ring.digit_expand(g, 256)
        except k0ring.DepthExceeded:
            bad.append(["depth", list(g.coords)])
            continue
        if k0ring.resum(r, d) != g or not k0ring.admissible(d, r) or any(v not in (0, 1) for _, v in d):
            bad.append(["expansion", list(g.coords)])
        if k0ring.class_of(r, k0ring.realize_class(g)) != g:
            bad.append(["realize", list(g.coords)])
    return count, bad


def _growth(r, level):
    return 60, [] if k0ring.growth_limit_check(r, 60) else ["outside tolerance"]


def _quiver(r, level):
    Ni = 10 if level == "full" else 8
    Nd = 8 if level == "full" else 6
    w = []
    ok = (quivermap.injectivity_check(r, Ni, w) and quivermap.ideal_check(r, Nd, w)
          and quivermap.coker_check(r, w) and quivermap.k0_check(r))
    return Ni, ([] if ok else [str(x) for x in w] or ["k0 presentation"])


def _points(r, level):
    size = 8 if level == "full" else 6
    zs = seqspace.eventual_seqs(r, size)
    mods = [points.from_seq(z) for z in zs]
    bad = []
    for z, m in zip(zs, mods):
        for w, m2 in zip(zs, mods):
            if points.qgr_iso(m, m2) != seqspace.tail_equal(z, w):
                bad.append(["iso vs tail", str(z), str(w)])
        if not points.shift_identity(z, 12):
            bad.append(["shift", str(z)])
        if not points.y_nilpotent(m, 12):
            bad.append(["nilpotent", str(z)])
    if r == 1:
        lam = points.lambda_module(2)
        if any(points.qgr_iso(lam, m) for m in mods):
            bad.append("lambda module isomorphic to a sequence module")
    return size, bad


def _tiling(r, level):
    L = 8 if level == "full" else 6
    bad = []
    for n in range(L):
        for z in seqspace.enumerate_Xn(1, n):
            P = tiling.patch_from_prefix(z)
            if tiling.code_point(P, P.point).digits != z.digits:
                bad.append(["code", z.digits])
            if not tiling.verify_matching(P.triangles)[0]:
                bad.append(["matching", z.digits])
    top = 2 * ((L + 1) // 2)
    for kind in ("A", "a"):
        t = tiling.seed(kind, top)
        tiles = [t]
        counts = [1, 0] if kind == "A" else [0, 1]
        for level_ in range(top, 0, -1):
            for s in tiles:
                if not tiling.check_decomposition(s):
                    bad.append(["decomposition", s.kind, s.level])
            tiles = tiling.decompose_all(tiles)
            counts = k0ring.mat_vec(k0ring.transition_matrix(1), counts)
            if list(tiling.kind_counts(tiles, level_ - 1)) != counts:
                bad.append(["counts", kind, level_ - 1])
    return L, bad


CHECKS = [
    ("01-dimensions", _dims, None),
    ("02-hilbert", _hilbert, None),
    ("03-free-basis", _free, None),
    ("04-tower-algebra", _tower, None),
    ("05a-tower-maps", _tower_maps, None),
    ("05b-diagrams", _diagrams, None),
    ("05c-simplicity-window-r", _simplicity(0), None),
    ("05d-simplicity-window-r+1", _simplicity(1), None),
    ("06-k0-exactness", _k0, None),
    ("07-digit-expansion", _digits, None),
    ("08-growth-limit", _growth, None),
    ("09-quiver", _quiver, None),
    ("10-point-modules", _points, 1),
    ("11-tiling", _tiling, 1),
]


def run_checks(r, level="quick", only=None):
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    out = []
    for cid, fn, need_r in CHECKS:
        if need_r is not None and r != need_r:
            continue
        if only and not any(cid.startswith(o) for o in only):
            continue
        t0 = time.perf_counter()
        try:
            N, bad = fn(r, level)
            passed = not bad
        except Exception as exc:  # reported, not raised
            N, bad, passed = None, [f"{type(exc).__name__}: {exc}"], False
        out.append(Report(cid, r, N, passed, bad[:10], time.perf_counter() - t0))
    out.sort(key=lambda rep: rep.check)
    return out

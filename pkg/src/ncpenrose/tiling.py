"""Penrose half-tile substitution over exact cyclotomic coordinates (r = 1).

Levels alternate between kinds A/a (even levels) and B/b (odd levels).  The
large kind at a level codes digit 0, the small kind digit 1.  Golden triangles
(36-72-72) carry vertex roles (P, Q, R) with apex P; gnomons (108-36-36) carry
(V, U, W) with obtuse apex V.

One decomposition step maps level L to level L - 1:
  B -> a + A      (the base UW is cut at distance tau^{-2}|UW| from W)
  b -> A          (same triangle)
  A -> B + b      (the leg PQ is cut at distance tau^{-1}|PQ| from P)
  a -> B          (same triangle)
"""
import json
from fractions import Fraction
from dataclasses import dataclass
from decimal import Decimal

from .cyclo import (ONE, TAU, TAU_INV, ZERO, ZETA, BoundaryPoint, CycloNum, area_consistent,
                    direction_index, locate, orient, real_sign, scaled_area, to_complex_decimal)
from .linalg import ResourceLimit
from .seqspace import FiniteSeq

BLACK, WHITE = "black", "white"
GOLDEN = {"A", "b"}
GNOMON = {"a", "B"}
DEFAULT_MAX_TILES = 20000


def shape(kind):
    return "golden" if kind in GOLDEN else "gnomon"


def large_kind(level):
    return "A" if level % 2 == 0 else "B"


def small_kind(level):
    return "a" if level % 2 == 0 else "b"


def digit_of(kind):
    return 0 if kind in ("A", "B") else 1


def kind_for(level, digit):
    return large_kind(level) if digit == 0 else small_kind(level)


def _flip(shape_, level):
    m, odd = divmod(level, 2)
    if shape_ == "golden" or not odd:
        return m % 2 == 1
    return (m + 1) % 2 == 1


def colors_for(kind, level):
    """Vertex colors in role order; the base pattern is complemented on some levels."""
    if shape(kind) == "golden":
        base = (BLACK, BLACK, WHITE)
    else:
        base = (WHITE, WHITE, BLACK)
    if _flip(shape(kind), level):
        return tuple(WHITE if c == BLACK else BLACK for c in base)
    return base


def scale(kind, level):
    """Short-side length: tau^{floor(L/2)} for golden, tau^{ceil(L/2)} for gnomon."""
    e = level // 2 if shape(kind) == "golden" else (level + 1) // 2
    return TAU ** e


@dataclass(frozen=True)
class Triangle:
    kind: str
    level: int
    verts: tuple      # role order: (P, Q, R) or (V, U, W)

    @property
    def colors(self):
        return colors_for(self.kind, self.level)

    @property
    def chirality(self):
        return "right" if orient(*self.verts) > 0 else "left"

    @property
    def digit(self):
        return digit_of(self.kind)

    def barycenter(self):
        a, b, c = self.verts
        return (a + b + c) * Fraction(1, 3)

    def to_json(self):
        return {"kind": self.kind, "level": self.level, "chirality": self.chirality,
                "vertices": [v.to_json() for v in self.verts], "colors": list(self.colors)}


def seed(kind, level):
    """Canonical pose: base edge on the real axis starting at the origin."""
    s = scale(kind, level)
    if shape(kind) == "golden":
        return Triangle(kind, level, (s * TAU * ZETA ** 2, ZERO, s))
    return Triangle(kind, level, (s * ZETA, ZERO, s * TAU))


def decompose(t):
    if t.level < 1:
        raise ValueError("level-0 tiles do not decompose")
    L = t.level - 1
    if t.kind == "B":
        V, U, W = t.verts
        T = W + (U - W) * (2 - TAU)
        return [Triangle("A", L, (U, V, T)), Triangle("a", L, (T, W, V))]
    if t.kind == "b":
        return [Triangle("A", L, t.verts)]
    if t.kind == "A":
        P, Q, R = t.verts
        S = P + (Q - P) * TAU_INV
        return [Triangle("B", L, (S, R, P)), Triangle("b", L, (R, S, Q))]
    if t.kind == "a":
        return [Triangle("B", L, t.verts)]
    raise ValueError(f"unknown kind {t.kind!r}")


def compose(children):
    """Inverse of decompose on a set of sibling tiles."""
    kinds = sorted(c.kind for c in children)
    L = children[0].level + 1
    if kinds == ["A"]:
        parent = Triangle("b", L, children[0].verts)
    elif kinds == ["B"]:
        parent = Triangle("a", L, children[0].verts)
    elif kinds == ["A", "a"]:
        A = next(c for c in children if c.kind == "A")
        a = next(c for c in children if c.kind == "a")
        parent = Triangle("B", L, (A.verts[1], A.verts[0], a.verts[1]))
    elif kinds == ["B", "b"]:
        B = next(c for c in children if c.kind == "B")
        bb = next(c for c in children if c.kind == "b")
        parent = Triangle("A", L, (B.verts[2], bb.verts[2], B.verts[1]))
    else:
        raise ValueError(f"cannot compose kinds {kinds}")
    if sorted(decompose(parent), key=_tkey) != sorted(children, key=_tkey):
        raise ValueError("tiles are not the children of a single parent")
    return parent


def _tkey(t):
    return (t.kind, t.level, tuple(v.c for v in t.verts))


def interiors_disjoint(s, t):
    """Separating-edge test for two triangles (exact)."""
    for tri, other in ((s, t), (t, s)):
        a, b, c = tri.verts
        o = orient(a, b, c)
        for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
            if all(orient(p, q, x) != o for x in other.verts):
                return True
    return False


def contained(child, parent):
    return all(locate(v, parent.verts) != "outside" for v in child.verts)


def signed_area(t):
    return scaled_area(*t.verts)


def check_decomposition(t):
    """Children cover t exactly: containment, disjointness, additive and CM-consistent areas."""
    kids = decompose(t)
    if not all(contained(k, t) for k in kids):
        return False
    for i in range(len(kids)):
        for j in range(i + 1, len(kids)):
            if not interiors_disjoint(kids[i], kids[j]):
                return False
    total = ZERO
    for k in kids:
        total = total + (signed_area(k) if orient(*k.verts) > 0 else -signed_area(k))
    par = signed_area(t) if orient(*t.verts) > 0 else -signed_area(t)
    if total != par:
        return False
    return all(area_consistent(*x.verts) for x in kids + [t])


def edge_length_set(level):
    """Allowed squared side lengths at a level, as real field elements."""
    m = level // 2
    base = [ONE, TAU ** 2] if level % 2 == 0 else [ONE, TAU ** 2, TAU ** 4]
    f = TAU ** (2 * m)
    return {x * f for x in base}


def edge_lengths_ok(t):
    a, b, c = t.verts
    allowed = edge_length_set(t.level)
    for p, q in ((a, b), (b, c), (c, a)):
        d2 = (p - q).norm_real()
        if not d2.is_real() or d2 not in allowed:
            return False
        if direction_index(q - p) is None:
            return False
    return True


def chain_from_prefix(prefix):
    """Tiles from the top level down to level 0, following the digits."""
    digits = prefix.digits if isinstance(prefix, FiniteSeq) else prefix
    FiniteSeq(digits, 1)
    if not digits:
        raise ValueError("prefix must be nonempty")
    top = len(digits) - 1
    t = seed(kind_for(top, int(digits[top])), top)
    chain = [t]
    for level in range(top - 1, -1, -1):
        want = kind_for(level, int(digits[level]))
        kids = [k for k in decompose(t) if k.kind == want]
        if len(kids) != 1:
            raise ValueError(f"no unique {want} child at level {level}")
        t = kids[0]
        chain.append(t)
    return chain


@dataclass
class Patch:
    triangles: list
    level: int = 0
    hierarchy: dict = None        # level -> tiles
    chain: list = None
    point: CycloNum = None

    def to_json(self):
        out = {"level": self.level, "triangles": [t.to_json() for t in self.triangles]}
        if self.point is not None:
            out["point"] = self.point.to_json()
        if self.chain:
            out["chain"] = [t.kind for t in self.chain]
        return out


def decompose_all(tiles, max_tiles=DEFAULT_MAX_TILES):
    out = []
    for t in tiles:
        out.extend(decompose(t))
    if len(out) > max_tiles:
        raise ResourceLimit(f"{len(out)} tiles exceed {max_tiles}")
    return out


def patch_from_prefix(prefix, max_tiles=DEFAULT_MAX_TILES):
    chain = chain_from_prefix(prefix)
    top = chain[0].level
    hier = {top: [chain[0]]}
    for level in range(top - 1, -1, -1):
        hier[level] = decompose_all(hier[level + 1], max_tiles)
    base = chain[-1]
    return Patch(hier[0], 0, hier, chain, base.barycenter())


def kind_counts(tiles, level):
    big = sum(1 for t in tiles if t.kind == large_kind(level))
    return big, len(tiles) - big


def code_point(patch, p):
    """Digits z_0 z_1 ... from the kind of the tile containing p at each level."""
    digits = []
    for level in sorted(patch.hierarchy):
        found = None
        for t in patch.hierarchy[level]:
            where = locate(p, t.verts)
            if where == "boundary":
                raise BoundaryPoint(f"point on a tile edge at level {level}")
            if where == "inside":
                found = t
                break
        if found is None:
            raise ValueError(f"point outside the patch at level {level}")
        digits.append(str(found.digit))
    return FiniteSeq("".join(digits), 1)


# Kites and darts

@dataclass(frozen=True)
class Quad:
    kind: str         # "kite" or "dart"
    verts: tuple      # cyclic order
    colors: tuple

    def angles(self):
        """Interior angles in units of 36 degrees."""
        vs = list(self.verts)
        area = ZERO
        for i in range(4):
            area = area + scaled_area(ZERO, vs[i], vs[(i + 1) % 4])
        ccw = real_sign(area) > 0
        out = []
        for i in range(4):
            prev, cur, nxt = vs[i - 1], vs[i], vs[(i + 1) % 4]
            k_in = direction_index(prev - cur)
            k_out = direction_index(nxt - cur)
            out.append((k_in - k_out) % 10 if ccw else (k_out - k_in) % 10)
        return tuple(out)

    def to_json(self):
        return {"kind": self.kind, "vertices": [v.to_json() for v in self.verts],
                "colors": list(self.colors)}


def merge_to_kites_darts(tiles):
    """Pair mirror A-tiles along P-Q into kites and mirror a-tiles along V-U into darts."""
    groups = {}
    unpaired = []
    for t in tiles:
        if t.level % 2:
            raise ValueError("merging needs an even level")
        groups.setdefault((t.kind, t.verts[0], t.verts[1]), []).append(t)
    quads = []
    for (kind, v0, v1), ts in groups.items():
        if len(ts) == 2 and ts[0].chirality != ts[1].chirality:
            s, t = ts
            name = "kite" if kind == "A" else "dart"
            quads.append(Quad(name, (v0, s.verts[2], v1, t.verts[2]),
                              (s.colors[0], s.colors[2], s.colors[1], t.colors[2])))
        else:
            unpaired.extend(ts)
    quads.sort(key=lambda q: (q.kind, tuple(v.c for v in q.verts)))
    return {"quads": quads, "unpaired": unpaired}


def verify_matching(items):
    """Coincident vertices must carry one color; returns (ok, violations)."""
    seen = {}
    for it in items:
        for v, c in zip(it.verts, it.colors):
            seen.setdefault(v, set()).add(c)
    bad = [(v, sorted(cs)) for v, cs in seen.items() if len(cs) > 1]
    return (not bad), bad


def edge_to_edge_violations(tiles):
    """Vertices of one tile lying strictly inside an edge of another."""
    from .cyclo import on_open_segment
    verts = {v for t in tiles for v in t.verts}
    bad = []
    for t in tiles:
        a, b, c = t.verts
        for p, q in ((a, b), (b, c), (c, a)):
            for v in verts:
                if on_open_segment(v, p, q):
                    bad.append((t, v))
    return bad


# Rendering

FILLS = {"A": "#e9b44c", "a": "#50808e", "B": "#9b2915", "b": "#69a297",
         "kite": "#e9b44c", "dart": "#50808e"}


def _fmt(d):
    s = format(d, ".12g")
    return "0" if s in ("-0", "0E-12") else s


def render_svg(items, path=None, dots=False, stroke="#222222"):
    """Deterministic SVG for triangles or quads; coordinates via exact-to-decimal conversion."""
    cache = {}

    def xy(v):
        if v not in cache:
            re, im = to_complex_decimal(v, 20)
            cache[v] = (re, -im)
        return cache[v]

    pts = [xy(v) for it in items for v in it.verts]
    if pts:
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        pad = Decimal("0.1")
        x0, y0 = min(xs) - pad, min(ys) - pad
        w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    else:
        x0 = y0 = Decimal(0)
        w = h = Decimal(1)
    lines = ['<?xml version="1.0" encoding="UTF-8"?>',
             f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">']
    sw = _fmt(w / 400)
    for it in items:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (xy(v) for v in it.verts))
        lines.append(f'  <polygon points="{coords}" fill="{FILLS.get(it.kind, "#cccccc")}" '
                     f'stroke="{stroke}" stroke-width="{sw}"/>')
    if dots:
        done = {}
        for it in items:
            for v, c in zip(it.verts, it.colors):
                done.setdefault(v, c)
        rad = _fmt(w / 150)
        for v in sorted(done, key=lambda v: v.c):
            x, y = xy(v)
            lines.append(f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{rad}" fill="{done[v]}" stroke="{stroke}" stroke-width="{sw}"/>')
    lines.append("</svg>")
    text = "\n".join(lines) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def patch_json(patch):
    return json.dumps(patch.to_json(), sort_keys=True)

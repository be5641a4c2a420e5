"""The quiver Q with vertices 1..r+1 and the embedding f: B -> kQ.

Arrows: x_1: 1 -> 1, x_i: i -> 1 (2 <= i <= r+1), y_i: i -> i+1 (1 <= i <= r).
A path is (start vertex, tuple of arrow names); ``pq`` means traverse p then q.
"""
from fractions import Fraction

from .k0ring import LaurentPoly, relation
from .linalg import QQ, Echelon, ResourceLimit
from .wordalg import Element, b, basis

DEFAULT_MAX_DEGREE = 12


class Quiver:
    def __init__(self, r):
        if r < 1:
            raise ValueError("r must be >= 1")
        self.r = r
        self.vertices = list(range(1, r + 2))
        self.arrows = {}
        for i in self.vertices:
            self.arrows[f"x{i}"] = (i, 1)
        for i in range(1, r + 1):
            self.arrows[f"y{i}"] = (i, i + 1)
        assert len(self.arrows) == 2 * r + 1

    def head_preimage(self, i):
        return sorted(a for a, (s, h) in self.arrows.items() if h == i)

    def source(self, a):
        return self.arrows[a][0]

    def head(self, path):
        start, arrows = path
        return self.arrows[arrows[-1]][1] if arrows else start

    def to_dot(self):
        lines = ["digraph quiver {"]
        for v in self.vertices:
            lines.append(f'  {v} [label="{v}"];')
        for a, (s, h) in sorted(self.arrows.items()):
            lines.append(f'  {s} -> {h} [label="{a}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def adjacency(self):
        n = len(self.vertices)
        A = [[0] * n for _ in range(n)]
        for s, h in self.arrows.values():
            A[s - 1][h - 1] += 1
        return A

    def paths(self, n, start=None):
        """All paths of length n, optionally from a fixed vertex."""
        starts = self.vertices if start is None else [start]
        out = []
        for s in starts:
            frontier = [(s, ())]
            for _ in range(n):
                nxt = []
                for p in frontier:
                    h = self.head(p)
                    for a in sorted(self.arrows):
                        if self.arrows[a][0] == h:
                            nxt.append((p[0], p[1] + (a,)))
                frontier = nxt
            out.extend(frontier)
        return out


class PathElement:
    """Finite linear combination of paths."""

    def __init__(self, quiver, terms=None):
        self.q = quiver
        self.terms = {p: Fraction(v) for p, v in (terms or {}).items() if v}

    @classmethod
    def trivial(cls, quiver, i):
        return cls(quiver, {(i, ()): 1})

    @classmethod
    def arrow(cls, quiver, a):
        return cls(quiver, {(quiver.source(a), (a,)): 1})

    def __mul__(self, other):
        out = {}
        for p, c in self.terms.items():
            h = self.q.head(p)
            for p2, c2 in other.terms.items():
                if p2[0] != h:
                    continue
                key = (p[0], p[1] + p2[1])
                out[key] = out.get(key, 0) + c * c2
        return PathElement(self.q, out)

    def __add__(self, other):
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return PathElement(self.q, out)

    def __eq__(self, other):
        return self.terms == other.terms

    def is_zero(self):
        return not self.terms


def identity(quiver):
    out = PathElement(quiver)
    for i in quiver.vertices:
        out = out + PathElement.trivial(quiver, i)
    return out


def f_letter(quiver, letter):
    """f(x) = x_1 + ... + x_{r+1}, f(y) = y_1 + ... + y_r."""
    out = PathElement(quiver)
    for a in quiver.arrows:
        if a[0] == letter:
            out = out + PathElement.arrow(quiver, a)
    return out


def f_image(e, left_unit=None, quiver=None):
    """f applied to a wordalg Element, optionally premultiplied by e_i."""
    q = quiver or Quiver(e.r)
    out = PathElement(q)
    fx, fy = f_letter(q, "x"), f_letter(q, "y")
    for w, c in e.terms.items():
        acc = identity(q) if left_unit is None else PathElement.trivial(q, left_unit)
        for ch in w:
            acc = acc * (fx if ch == "x" else fy)
        out = out + PathElement(q, {p: c * v for p, v in acc.terms.items()})
    return out


def psi_forget(path):
    """Drop the subscripts of a path from vertex 1."""
    start, arrows = path
    if start != 1:
        raise ValueError("path must start at vertex 1")
    return "".join(a[0] for a in arrows)


def injectivity_check(r, N=10, witnesses=None):
    """e_1 f(w) is one path with coefficient 1, psi_forget inverts it, all distinct,
    and there are exactly b_n paths of length n from vertex 1."""
    if N > DEFAULT_MAX_DEGREE + 4:
        raise ResourceLimit(f"degree {N} beyond bound")
    q = Quiver(r)
    for n in range(N + 1):
        seen = set()
        for w in basis(r, n):
            img = f_image(Element.word(w, r), left_unit=1, quiver=q)
            if len(img.terms) != 1 or list(img.terms.values())[0] != 1:
                _note(witnesses, ("not a single path", w))
                return False
            (p,) = img.terms
            if psi_forget(p) != w or p in seen:
                _note(witnesses, ("not inverted or repeated", w))
                return False
            seen.add(p)
        if len(q.paths(n, start=1)) != b(r, n):
            _note(witnesses, ("path count", n))
            return False
    return True


def _note(witnesses, item):
    if witnesses is not None:
        witnesses.append(item)


def ideal_check(r, N=8, witnesses=None):
    """span{e_i f(w) : w in W_n} equals all paths of degree n."""
    q = Quiver(r)
    for n in range(N + 1):
        e = Echelon(QQ)
        for i in q.vertices:
            for w in basis(r, n):
                e.add(f_image(Element.word(w, r), left_unit=i, quiver=q).terms)
        total = q.paths(n)
        if e.rank != len(total) or not all(e.contains({p: 1}) for p in total):
            _note(witnesses, ("dimension", n, e.rank, len(total)))
            return False
    return True


def coker_check(r, witnesses=None):
    """f(B_{r+1}) D_0 in f(B_{r+1}) and f(B_{r+1}) D_1 in f(B_{r+2})."""
    q = Quiver(r)
    n = r + 1
    imgs = [f_image(Element.word(w, r), quiver=q) for w in basis(r, n)]
    V = Echelon(QQ).extend(p.terms for p in imgs)
    W = Echelon(QQ).extend(f_image(Element.word(w, r), quiver=q).terms for w in basis(r, n + 1))
    for w, p in zip(basis(r, n), imgs):
        for i in q.vertices:
            if not V.contains((p * PathElement.trivial(q, i)).terms):
                _note(witnesses, ("D0", w, i))
                return False
        for a in q.arrows:
            if not W.contains((p * PathElement.arrow(q, a)).terms):
                _note(witnesses, ("D1", w, a))
                return False
    return True


def k0_presentation(r):
    """Eliminate p_i = t^{i-1} p_1 from v_i = p_i - t sum_{a: h(a)=i} p_{s(a)}.

    Returns (relation on p_1, expressions) where expressions maps 'p_i' and 'O'
    to Laurent polynomials multiplying p_1.
    """
    q = Quiver(r)
    t = LaurentPoly.monomial(1)
    rels = {}
    for i in q.vertices:
        vec = {i: LaurentPoly.monomial(0)}
        for a in q.head_preimage(i):
            s = q.source(a)
            vec[s] = vec.get(s, LaurentPoly()) - t
        rels[i] = vec
    sub = {1: LaurentPoly.monomial(0)}
    for i in q.vertices[1:]:
        vec = rels[i]
        others = [s for s in vec if s != i]
        # each non-loop vertex has exactly one incoming arrow
        assert len(others) == 1 and vec[i] == LaurentPoly.monomial(0)
        (s,) = others
        sub[i] = -(vec[s] * sub[s])
    rel = LaurentPoly()
    for s, coef in rels[1].items():
        rel = rel + coef * sub[s]
    O = LaurentPoly()
    for i in q.vertices:
        O = O + sub[i]
    exprs = {f"p{i}": sub[i] for i in q.vertices}
    exprs["O"] = O
    return rel, exprs


def k0_check(r):
    rel, ex = k0_presentation(r)
    return rel == relation(r) and ex["O"].congruent(LaurentPoly.monomial(-1), rel)

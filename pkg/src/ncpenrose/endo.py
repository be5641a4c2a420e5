"""Block lower-triangular endomorphisms of B_n and the maps psi, phi, alpha.

Matrices act on columns: column ``j`` holds the image of basis word ``j``.
Levels use the block basis order below, so that x.B_n inherits the order of
B_n and y.B_n^i lines up with B_{n+1}^{i+1}.
"""
from fractions import Fraction
from functools import lru_cache
from math import lcm

import numpy as np

from .kernels import check_unit_map
from .wordalg import Element, basis, b, multiply

DEFAULT_MAX_DIM = 200


def order_key(w):
    """Recursive key: leading-y count first, then the key of what follows the x."""
    i = len(w) - len(w.lstrip("y"))
    if i == len(w):
        return (i,)
    return (i, order_key(w[i + 1:]))


@lru_cache(maxsize=None)
def _block_basis(r, n):
    words = tuple(sorted(basis(r, n), key=order_key))
    return words, {w: k for k, w in enumerate(words)}


def block_basis(r, n):
    """Basis of B_n in block order (B_n^0 first, then B_n^1, ...)."""
    return list(_block_basis(r, n)[0])


def word_index(r, n):
    return _block_basis(r, n)[1]


def block_of(w):
    return len(w) - len(w.lstrip("y"))


def block_sizes(r, n):
    return [b(r, n - i - 1) for i in range(r + 1)]


def block_offsets(r, n):
    out = [0]
    for s in block_sizes(r, n):
        out.append(out[-1] + s)
    return out


def _check_level(r, n, max_dim=DEFAULT_MAX_DIM):
    if n < r + 1:
        raise ValueError(f"levels below r+1 = {r + 1} have no block decomposition")
    if b(r, n) > max_dim:
        raise ValueError(f"dim B_{n} = {b(r, n)} exceeds max_dim={max_dim}")


class BlockMap:
    """An endomorphism of B_n as a sparse exact matrix in the block basis."""

    __slots__ = ("r", "n", "entries")

    def __init__(self, r, n, entries=None, max_dim=DEFAULT_MAX_DIM):
        _check_level(r, n, max_dim)
        self.r = r
        self.n = n
        self.entries = {k: Fraction(v) for k, v in (entries or {}).items() if v != 0}

    @property
    def dim(self):
        return b(self.r, self.n)

    @classmethod
    def identity(cls, r, n):
        return cls(r, n, {(k, k): 1 for k in range(b(r, n))})

    @classmethod
    def unit(cls, r, n, a, c):
        return cls(r, n, {(a, c): 1})

    @classmethod
    def from_dense(cls, r, n, mat):
        mat = np.asarray(mat, dtype=object)
        return cls(r, n, {(i, j): mat[i, j] for i in range(mat.shape[0])
                          for j in range(mat.shape[1]) if mat[i, j] != 0})

    def dense(self):
        m = np.empty((self.dim, self.dim), dtype=object)
        m.fill(Fraction(0))
        for (i, j), v in self.entries.items():
            m[i, j] = v
        return m

    def __matmul__(self, other):
        if (self.r, self.n) != (other.r, other.n):
            raise ValueError("maps at different levels")
        by_row = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out = {}
        for (i, k), a in self.entries.items():
            for j, v in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + a * v
        return BlockMap(self.r, self.n, out)

    def __add__(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return BlockMap(self.r, self.n, out)

    def __eq__(self, other):
        return (isinstance(other, BlockMap) and (self.r, self.n) == (other.r, other.n)
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.r, self.n, frozenset(self.entries.items())))

    def column(self, j):
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def to_json(self):
        words = block_basis(self.r, self.n)
        m = self.dense()
        return {"r": self.r, "n": self.n, "basis": words,
                "rows": [[f"{v.numerator}/{v.denominator}" for v in row] for row in m]}


def block_pattern(r, n):
    """Block index of each position in the block basis."""
    return [block_of(w) for w in block_basis(r, n)]


def is_in_Tn(g):
    """No entry maps block j into a block i < j."""
    pat = block_pattern(g.r, g.n)
    return all(pat[i] >= pat[j] for (i, j) in g.entries)


def is_block_diagonal(g):
    pat = block_pattern(g.r, g.n)
    return all(pat[i] == pat[j] for (i, j) in g.entries)


def psi(g, check=True):
    """psi(g)(l w') = l . g(w') for l in {x, y}, via multiplication in B."""
    if check and not is_in_Tn(g):
        raise ValueError("psi needs an element of T_n")
    r, n = g.r, g.n
    src = block_basis(r, n)
    tgt = word_index(r, n + 1)
    cols = {}
    for (i, j), v in g.entries.items():
        cols.setdefault(j, {})[src[i]] = v
    out = {}
    for letter in "xy":
        le = Element.word(letter, r)
        for j, col in cols.items():
            lw = letter + src[j]
            if lw not in tgt:
                continue
            img = multiply(le, Element(r, col))
            jj = tgt[lw]
            for w, v in img.terms.items():
                out[(tgt[w], jj)] = v
    return BlockMap(r, n + 1, out)


def psi_dense(g):
    """Independent route: psi(g) = sum_l L_l g P_l with L_l left multiplication
    B_n -> B_{n+1} and P_l the projection B_{n+1} -> B_n, l w' -> w'."""
    r, n = g.r, g.n
    src = block_basis(r, n)
    tgt = word_index(r, n + 1)
    # clear denominators so the products run over Python ints
    den = lcm(*(v.denominator for v in g.entries.values())) if g.entries else 1
    gd = np.zeros((len(src), len(src)), dtype=object)
    for (i, j), v in g.entries.items():
        gd[i, j] = v.numerator * (den // v.denominator)
    out = np.zeros((len(tgt), len(tgt)), dtype=object)
    for letter in "xy":
        L = np.zeros((len(tgt), len(src)), dtype=object)
        for j, w in enumerate(src):
            if letter + w in tgt:
                L[tgt[letter + w], j] = 1
        out = out + L.dot(gd).dot(L.T)
    return BlockMap(r, n + 1, {(i, j): Fraction(int(out[i, j]), den)
                               for i, j in zip(*np.nonzero(out))})


class DiagTuple:
    """(g_0, ..., g_r) with g_i a square matrix on B_n^i."""

    def __init__(self, r, n, blocks):
        _check_level(r, n, 10 ** 9)
        sizes = block_sizes(r, n)
        blocks = [np.asarray(B, dtype=object).reshape(s, s) for B, s in zip(blocks, sizes)]
        if len(blocks) != r + 1:
            raise ValueError(f"need {r + 1} blocks")
        self.r, self.n, self.blocks = r, n, blocks

    @classmethod
    def zero(cls, r, n):
        return cls(r, n, [np.full((s, s), Fraction(0), dtype=object) for s in block_sizes(r, n)])

    @classmethod
    def identity(cls, r, n):
        return cls(r, n, [_eye(s) for s in block_sizes(r, n)])

    @classmethod
    def unit(cls, r, n, i, a, c):
        t = cls.zero(r, n)
        t.blocks[i][a, c] = Fraction(1)
        return t

    def __eq__(self, other):
        return ((self.r, self.n) == (other.r, other.n)
                and all(np.array_equal(a, c) for a, c in zip(self.blocks, other.blocks)))


def _eye(s):
    m = np.full((s, s), Fraction(0), dtype=object)
    for k in range(s):
        m[k, k] = Fraction(1)
    return m


def _blockdiag(blocks):
    size = sum(B.shape[0] for B in blocks)
    m = np.full((size, size), Fraction(0), dtype=object)
    o = 0
    for B in blocks:
        s = B.shape[0]
        m[o:o + s, o:o + s] = B
        o += s
    return m


def alpha_embed(t):
    return BlockMap.from_dense(t.r, t.n, _blockdiag(t.blocks))


def diag_part(g):
    """The DiagTuple of diagonal blocks of g."""
    d = g.dense()
    off = block_offsets(g.r, g.n)
    return DiagTuple(g.r, g.n, [d[off[i]:off[i + 1], off[i]:off[i + 1]] for i in range(g.r + 1)])


def phi_abstract(t):
    """(g_0, ..., g_r) -> (diag(g_0, ..., g_r), g_0, ..., g_{r-1})."""
    return DiagTuple(t.r, t.n + 1, [_blockdiag(t.blocks)] + list(t.blocks[:-1]))


def check_commute(n, t):
    return psi(alpha_embed(t)) == alpha_embed(phi_abstract(t))


def check_absorption(n, g):
    if not is_in_Tn(g):
        raise ValueError("absorption needs an element of T_n")
    h = g
    for _ in range(g.r):
        h = psi(h)
    return is_block_diagonal(h)


# Matrix-unit level checks.  A unit e_{a,c} sends basis word c to word a.

def tn_units(r, n):
    pat = block_pattern(r, n)
    d = len(pat)
    return [(a, c) for a in range(d) for c in range(d) if pat[a] >= pat[c]]


def psi_unit_image(r, n, a, c):
    """psi(e_{a,c}) as a list of target units, using the sparse psi formula."""
    return sorted(psi(BlockMap.unit(r, n, a, c), check=False).entries)


def check_Tn_units(r, n):
    """is_in_Tn on every matrix unit agrees with block(a) >= block(c)."""
    pat = block_pattern(r, n)
    d = len(pat)
    for a in range(d):
        for c in range(d):
            if is_in_Tn(BlockMap.unit(r, n, a, c)) != (pat[a] >= pat[c]):
                return False
    return True


def check_psi_units(r, n):
    """psi on T_n units: images in T_{n+1}, unital, injective, multiplicative.

    Returns None on success, else a description of the first failure.
    """
    units = tn_units(r, n)
    images = []
    for a, c in units:
        img = psi(BlockMap.unit(r, n, a, c))
        if not is_in_Tn(img):
            return f"psi(e[{a},{c}]) leaves T_{n + 1}"
        if any(v != 1 for v in img.entries.values()):
            return f"psi(e[{a},{c}]) has a coefficient other than 1"
        images.append(sorted(img.entries))
    # supports of distinct units are disjoint and nonempty, hence injective
    seen = set()
    for img in images:
        if not img or seen.intersection(img):
            return "psi is not injective on matrix units"
        seen.update(img)
    if psi(BlockMap.identity(r, n)) != BlockMap.identity(r, n + 1):
        return "psi is not unital"
    bad = check_unit_map(units, images, b(r, n), b(r, n + 1))
    if bad is not None:
        return f"psi(e e') != psi(e) psi(e') for e={bad[0]}, e'={bad[1]}"
    return None


def check_commute_units(r, n):
    """The square on every matrix unit of S_n; None or the failing unit."""
    for i, s in enumerate(block_sizes(r, n)):
        for a in range(s):
            for c in range(s):
                if not check_commute(n, DiagTuple.unit(r, n, i, a, c)):
                    return (i, a, c)
    return None


def check_absorption_units(r, n):
    """r applications of psi make every T_n unit block diagonal; None or the unit."""
    for a, c in tn_units(r, n):
        if not check_absorption(n, BlockMap.unit(r, n, a, c)):
            return (a, c)
    return None

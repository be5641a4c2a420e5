"""Multi-matrix algebras A(X) of partitioned sets and the maps they induce.

A map tau: X -> Y of partitioned sets such that every nonempty
X_i^j = X_i cap tau^{-1}(Y_j) maps bijectively onto Y_j gives a unital algebra
homomorphism theta: A(Y) -> A(X), theta(f)(x, x') = f(tau x, tau x') for x ~ x'.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from .kernels import check_unit_map
from .linalg import ResourceLimit
from .seqspace import block_index, enumerate_Xn, truncate

DEFAULT_MAX_UNITS = 500000


class PartitionedSet:
    def __init__(self, elements, block_of, blocks=None):
        self.elements = tuple(elements)
        self.block_of = dict(block_of)
        if set(self.block_of) != set(self.elements) or len(self.elements) != len(self.block_of):
            raise ValueError("every element needs exactly one block")
        if blocks is None:
            blocks = sorted(set(self.block_of.values()))
        self.blocks = tuple(blocks)
        used = set(self.block_of.values())
        if not used <= set(self.blocks):
            raise ValueError("element assigned to an undeclared block")
        self.members = {j: [x for x in self.elements if self.block_of[x] == j] for j in self.blocks}
        self.index = {x: k for k, x in enumerate(self.elements)}

    def nonempty_blocks(self):
        return [j for j in self.blocks if self.members[j]]

    def size(self, j):
        return len(self.members[j])

    @classmethod
    def single(cls, elements, label=0):
        return cls(elements, {x: label for x in elements}, [label])

    def units(self):
        """Matrix units e_{x,x'} of A(X), as index pairs."""
        out = []
        for j in self.blocks:
            idx = [self.index[x] for x in self.members[j]]
            out.extend((a, c) for a in idx for c in idx)
        return out


@dataclass(frozen=True)
class BlockFunction:
    host: PartitionedSet
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (x, y), v in self.values.items():
            if v == 0:
                continue
            if self.host.block_of[x] != self.host.block_of[y]:
                raise ValueError(f"({x}, {y}) crosses blocks")
            clean[(x, y)] = Fraction(v)
        object.__setattr__(self, "values", clean)

    @classmethod
    def identity(cls, host):
        return cls(host, {(x, x): 1 for x in host.elements})

    def __mul__(self, other):
        out = {}
        for (x, y), v in self.values.items():
            for (y2, z), w in other.values.items():
                if y == y2:
                    out[(x, z)] = out.get((x, z), 0) + v * w
        return BlockFunction(self.host, out)

    def __eq__(self, other):
        return self.host is other.host and self.values == other.values

    def __hash__(self):
        return hash(frozenset(self.values.items()))


@dataclass
class SetMap:
    source: PartitionedSet
    target: PartitionedSet
    map: dict

    def __post_init__(self):
        missing = [x for x in self.source.elements if x not in self.map]
        if missing:
            raise ValueError(f"map undefined on {missing[:3]}")

    def fiber(self, i, j):
        """X_i^j."""
        return [x for x in self.source.members[i] if self.target.block_of[self.map[x]] == j]


@dataclass
class Certificate:
    ok: bool
    i: object = None
    j: object = None
    reason: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.ok


def check_condition(m):
    """Every nonempty X_i^j maps bijectively onto Y_j; certificate on failure."""
    for i in m.source.blocks:
        for j in m.target.blocks:
            fib = m.fiber(i, j)
            if not fib:
                continue
            seen = {}
            for x in fib:
                y = m.map[x]
                if y in seen:
                    return Certificate(False, i, j, "not injective", (seen[y], x))
                seen[y] = x
            for y in m.target.members[j]:
                if y not in seen:
                    return Certificate(False, i, j, "not surjective", (y,))
    return Certificate(True)


def theta(m, f):
    if not check_condition(m):
        raise ValueError("map does not satisfy the bijectivity condition")
    src = m.source
    out = {}
    for i in src.blocks:
        mem = src.members[i]
        for x in mem:
            for x2 in mem:
                v = f.values.get((m.map[x], m.map[x2]))
                if v:
                    out[(x, x2)] = v
    return BlockFunction(src, out)


@dataclass
class BratteliDiagram:
    levels: list                          # block sizes per level
    edges: list = field(default_factory=list)   # edges[k]: (lower block, upper block) between levels k, k+1

    def __post_init__(self):
        for k, es in enumerate(self.edges):
            up, low = self.levels[k], self.levels[k + 1]
            for (i, j) in es:
                if not (0 <= i < len(low) and 0 <= j < len(up)):
                    raise ValueError(f"edge {(i, j)} out of range at level {k}")
            for i, s in enumerate(low):
                into = sum(up[j] for (ii, j) in es if ii == i)
                if into != s:
                    raise ValueError(f"size mismatch at level {k + 1}, block {i}: {s} != {into}")

    def to_dot(self):
        lines = ["graph bratteli {", "  rankdir=TB;"]
        for k, sizes in enumerate(self.levels):
            names = " ".join(f"v{k}_{i}" for i in range(len(sizes)))
            lines.append(f"  {{ rank=same; {names} }}")
            for i, s in enumerate(sizes):
                lines.append(f'  v{k}_{i} [label="{s}"];')
        for k, es in enumerate(self.edges):
            for (i, j) in sorted(es):
                lines.append(f"  v{k}_{j} -- v{k + 1}_{i};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self):
        return {"levels": self.levels, "edges": [sorted(list(e)) for e in self.edges]}


def bratteli_edges(m):
    """One level: sizes of Y blocks (upper), X blocks (lower), and the edges."""
    if not check_condition(m):
        raise ValueError("map does not satisfy the bijectivity condition")
    edges = {(a, c) for a, i in enumerate(m.source.blocks) for c, j in enumerate(m.target.blocks)
             if m.fiber(i, j)}
    up = [m.target.size(j) for j in m.target.blocks]
    low = [m.source.size(i) for i in m.source.blocks]
    return BratteliDiagram([up, low], [edges])


def _level_set(r, n):
    """X(n) partitioned by block index; blocks 0..r (zero-padded)."""
    seqs = [s.digits for s in enumerate_Xn(r, n)]
    blocks = {s: (block_index(s) if s else 0) for s in seqs}
    return PartitionedSet(seqs, blocks, list(range(r + 1)))


def penrose_tower(r, N, max_units=DEFAULT_MAX_UNITS):
    """Truncation maps X(n) -> X(n-1) for 0 <= n <= N-1, i.e. A(n) -> A(n+1) for n < N."""
    if sum(len(enumerate_Xn(r, n)) ** 2 for n in range(N)) > max_units:
        raise ResourceLimit("tower too large")
    sets = [_level_set(r, n) for n in range(-1, N)]
    maps = []
    for k in range(1, len(sets)):
        src, tgt = sets[k], sets[k - 1]
        maps.append(SetMap(src, tgt, {x: x[:-1] for x in src.elements}))
    return maps


def tower_diagram(r, N, max_elements=10 ** 6):
    """Bratteli diagram of A(0) -> ... -> A(N) with r+1 (possibly empty) blocks per level.

    Only the sets are built, so the bound is on the total number of elements.
    """
    if sum(len(enumerate_Xn(r, n)) for n in range(N)) > max_elements:
        raise ResourceLimit("tower too large")
    maps = penrose_tower(r, N, float("inf"))
    levels = [[maps[0].target.size(j) for j in maps[0].target.blocks]]
    edges = []
    for m in maps:
        lvl = bratteli_edges(m)
        levels.append(lvl.levels[1])
        edges.append(lvl.edges[0])
    return BratteliDiagram(levels, edges)


def stationary_edges(r):
    """Edges (lower, upper) of the repeating shape: 0 <- every block, i <- i-1."""
    return {(0, j) for j in range(r + 1)} | {(i, i - 1) for i in range(1, r + 1)}


def simplicity_check(d, window):
    """From every nonempty block at level k, every nonempty block at level k+window
    is reachable along edges.  Needs at least window+1 levels."""
    if len(d.levels) < window + 1:
        raise ValueError("diagram too short for this window")
    for k in range(len(d.levels) - window):
        for j, s in enumerate(d.levels[k]):
            if not s:
                continue
            reach = {j}
            for step in range(window):
                es = d.edges[k + step]
                reach = {i for (i, jj) in es if jj in reach}
            target = {i for i, s2 in enumerate(d.levels[k + window]) if s2}
            if not target <= reach:
                return False
    return True


def unit_images(m):
    """theta(e_{y,y'}) for every unit of A(Y), as lists of source units."""
    tgt_units = m.target.units()
    src, tgt = m.source, m.target
    pre = {}
    for x in src.elements:
        pre.setdefault(m.map[x], []).append(x)
    images = []
    for a, c in tgt_units:
        y, y2 = tgt.elements[a], tgt.elements[c]
        img = []
        for x in pre.get(y, ()):
            for x2 in pre.get(y2, ()):
                if src.block_of[x] == src.block_of[x2]:
                    img.append((src.index[x], src.index[x2]))
        images.append(img)
    return tgt_units, images


def verify_homomorphism(m, max_units=DEFAULT_MAX_UNITS):
    """theta(e e') == theta(e) theta(e') on all unit pairs, and theta(1) == 1."""
    if not check_condition(m):
        raise ValueError("map does not satisfy the bijectivity condition")
    units, images = unit_images(m)
    if len(units) > max_units:
        raise ResourceLimit(f"{len(units)} matrix units exceed {max_units}")
    if theta(m, BlockFunction.identity(m.target)) != BlockFunction.identity(m.source):
        return False
    return check_unit_map(units, images, len(m.target.elements), len(m.source.elements)) is None


def is_injective_on_units(m):
    _, images = unit_images(m)
    seen = set()
    for img in images:
        if not img or seen.intersection(img):
            return False
        seen.update(img)
    return True


def non_functoriality_example():
    """Returns (tau, sigma, sigma o tau); each drops the final digit."""
    X = PartitionedSet.single(["000", "100", "010", "110"], 1)
    Y = PartitionedSet(["00", "10", "01", "11"], {"00": 1, "10": 1, "01": 2, "11": 2}, [1, 2])
    Z = PartitionedSet.single(["0", "1"], 1)
    tau = SetMap(X, Y, {x: x[:-1] for x in X.elements})
    sigma = SetMap(Y, Z, {y: y[:-1] for y in Y.elements})
    comp = SetMap(X, Z, {x: x[:-2] for x in X.elements})
    return tau, sigma, comp


def block_matrix_of(m, f):
    """theta(f) per source block as a dense list-of-rows in member order."""
    g = theta(m, f)
    out = []
    for i in m.source.blocks:
        mem = m.source.members[i]
        out.append([[g.values.get((x, y), Fraction(0)) for y in mem] for x in mem])
    return out

import random
from fractions import Fraction

import numpy as np
import pytest

from ncpenrose import endo, multimatrix, seqspace, wordalg
from ncpenrose.multimatrix import BlockFunction, BratteliDiagram, PartitionedSet, SetMap
from ncpenrose.verify import PRINTED_DIAGRAMS


def tower_map(r, n):
    """Truncation X(n) -> X(n-1)."""
    return multimatrix.penrose_tower(r, n + 1)[n]


def test_check_condition_examples():
    assert multimatrix.check_condition(tower_map(1, 2))
    X = PartitionedSet(["a", "b", "c"], {"a": 0, "b": 0, "c": 1})
    assert multimatrix.check_condition(SetMap(X, X, {x: x for x in X.elements}))
    tau, sigma, comp = multimatrix.non_functoriality_example()
    assert multimatrix.check_condition(tau)
    assert multimatrix.check_condition(sigma)
    cert = multimatrix.check_condition(comp)
    assert not cert
    assert cert.reason == "not injective" and len(cert.witness) == 2
    assert comp.map[cert.witness[0]] == comp.map[cert.witness[1]]


def test_check_condition_surjectivity_certificate():
    X = PartitionedSet.single(["a"])
    Y = PartitionedSet.single(["p", "q"])
    cert = multimatrix.check_condition(SetMap(X, Y, {"a": "p"}))
    assert not cert and cert.reason == "not surjective" and cert.witness == ("q",)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_condition_on_tower(r):
    for m in multimatrix.penrose_tower(r, 9):
        assert multimatrix.check_condition(m)


def test_theta_identity_and_zero():
    m = tower_map(1, 3)
    assert multimatrix.theta(m, BlockFunction.identity(m.target)) == BlockFunction.identity(m.source)
    assert multimatrix.theta(m, BlockFunction(m.target)) == BlockFunction(m.source)


def test_theta_rejects_bad_map():
    _, _, comp = multimatrix.non_functoriality_example()
    with pytest.raises(ValueError):
        multimatrix.theta(comp, BlockFunction.identity(comp.target))


def test_block_function_rejects_cross_block():
    X = PartitionedSet(["a", "b"], {"a": 0, "b": 1})
    with pytest.raises(ValueError):
        BlockFunction(X, {("a", "b"): 1})


def test_theta_r1_formula():
    # (a, b) -> (diag(a, b), a) after ordering block 0 of X(n) by the block of the truncation
    m = tower_map(1, 2)
    tgt = m.target
    rng = random.Random(2)
    vals = {}
    for j in tgt.blocks:
        for x in tgt.members[j]:
            for y in tgt.members[j]:
                vals[(x, y)] = Fraction(rng.randint(-9, 9))
    f = BlockFunction(tgt, vals)
    g = multimatrix.theta(m, f)
    for x in m.source.elements:
        for y in m.source.elements:
            if m.source.block_of[x] == m.source.block_of[y]:
                want = vals.get((x[:-1], y[:-1]), 0)
                assert g.values.get((x, y), 0) == want


def test_bratteli_edge_examples():
    d = multimatrix.bratteli_edges(tower_map(1, 3))
    assert d.edges[0] == {(0, 0), (0, 1), (1, 0)}
    X = PartitionedSet(["a", "b", "c"], {"a": 0, "b": 0, "c": 1})
    d = multimatrix.bratteli_edges(SetMap(X, X, {x: x for x in X.elements}))
    assert d.edges[0] == {(0, 0), (1, 1)}
    d2 = multimatrix.bratteli_edges(tower_map(2, 4))
    assert d2.edges[0] == multimatrix.stationary_edges(2)
    into = lambda i: {j for (ii, j) in d2.edges[0] if ii == i}
    assert into(0) == {0, 1, 2} and into(1) == {0} and into(2) == {1}


@pytest.mark.parametrize("r", [2, 3])
def test_diagrams_match_printed(r):
    d = multimatrix.tower_diagram(r, 5)
    assert d.levels == PRINTED_DIAGRAMS[r]


def test_r1_diagram_against_printed():
    # every printed entry agrees except the small block at A(5): the edges into it
    # come from the large block of A(4) alone, so its size is 5, not the printed 4
    d = multimatrix.tower_diagram(1, 5)
    printed = PRINTED_DIAGRAMS[1]
    diffs = [(n, i) for n in range(6) for i in range(2) if d.levels[n][i] != printed[n][i]]
    assert diffs == [(5, 1)]
    assert d.levels[5][1] == d.levels[4][0] == 5


def test_diagram_named_rows():
    assert [lv[0] for lv in multimatrix.tower_diagram(1, 5).levels] == [1, 1, 2, 3, 5, 8]
    assert [sum(lv) for lv in multimatrix.tower_diagram(1, 5).levels] == [1, 2, 3, 5, 8, 13]
    assert multimatrix.tower_diagram(3, 5).levels[5] == [15, 8, 4, 2]
    assert multimatrix.tower_diagram(2, 4).levels[4] == [7, 4, 2]


@pytest.mark.parametrize("r", [1, 2, 3])
def test_stationary_shape(r):
    d = multimatrix.tower_diagram(r, 10)
    for n in range(r + 1, 11):
        assert d.levels[n] == [seqspace.c(r, n - 1 - i) for i in range(r + 1)]
    for k in range(r, 10):
        assert d.edges[k] == multimatrix.stationary_edges(r)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_sizes_cross_module(r):
    for n in range(0, 12):
        assert len(seqspace.enumerate_Xn(r, n)) == seqspace.c(r, n + 1)
    for n in range(41):
        assert seqspace.c(r, n) == wordalg.b(r, n)


def test_simplicity_examples():
    # stated examples: window r succeeds for r = 1 and r = 3
    assert multimatrix.simplicity_check(multimatrix.tower_diagram(1, 8), 1)
    assert multimatrix.simplicity_check(multimatrix.tower_diagram(3, 12), 3)


def reach_oracle(edges, start, steps):
    reach = {start}
    for _ in range(steps):
        reach = {i for (i, j) in edges if j in reach}
    return reach


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_stationary_reachability_oracle(r):
    es = multimatrix.stationary_edges(r)
    full = set(range(r + 1))
    # block r reaches only {0, ..., k-1} after k steps
    assert reach_oracle(es, r, r) == set(range(r))
    assert reach_oracle(es, r, r + 1) == full
    assert all(reach_oracle(es, j, r + 1) == full for j in range(r + 1))
    d = multimatrix.tower_diagram(r, 2 * r + 5)
    assert not multimatrix.simplicity_check(d, r)
    assert multimatrix.simplicity_check(d, r + 1)


def test_simplicity_disconnected():
    d = BratteliDiagram([[1, 1], [1, 1], [1, 1]], [{(0, 0), (1, 1)}, {(0, 0), (1, 1)}])
    assert not multimatrix.simplicity_check(d, 2)
    with pytest.raises(ValueError):
        multimatrix.simplicity_check(d, 3)


def test_diagram_validation():
    with pytest.raises(ValueError):
        BratteliDiagram([[1], [2]], [{(0, 0)}])
    with pytest.raises(ValueError):
        BratteliDiagram([[1], [1]], [{(1, 0)}])


def test_homomorphism_examples():
    assert multimatrix.verify_homomorphism(tower_map(1, 3))
    X = PartitionedSet(["a", "b", "c"], {"a": 0, "b": 0, "c": 1})
    assert multimatrix.verify_homomorphism(SetMap(X, X, {x: x for x in X.elements}))
    assert multimatrix.verify_homomorphism(tower_map(2, 3))


@pytest.mark.parametrize("r", [1, 2, 3])
def test_tower_homomorphism_and_injective(r):
    for m in multimatrix.penrose_tower(r, 9):
        assert multimatrix.verify_homomorphism(m)
        assert multimatrix.is_injective_on_units(m)


def test_homomorphism_oracle_products():
    # independent oracle: multiply BlockFunctions directly
    m = tower_map(2, 4)
    tgt = m.target
    rng = random.Random(4)
    def rand_f():
        return BlockFunction(tgt, {(x, y): rng.randint(-3, 3) for j in tgt.blocks
                                   for x in tgt.members[j] for y in tgt.members[j]})
    for _ in range(3):
        f, g = rand_f(), rand_f()
        assert multimatrix.theta(m, f * g) == multimatrix.theta(m, f) * multimatrix.theta(m, g)


def test_kernel_detects_non_homomorphism():
    # images of units that are not multiplicative must be caught
    X = PartitionedSet.single(["a", "b"])
    units = X.units()
    images = [[(0, 0)], [(0, 1)], [(1, 0)], [(0, 0)]]
    from ncpenrose.kernels import check_unit_map
    assert check_unit_map(units, images, 2, 2) is not None


def ordered_levels(r, top):
    """Member order of X(n) blocks compatible with the block basis of endo."""
    orders = {-1: {0: [""]}}
    for n in range(0, top):
        prev = orders[n - 1]
        cur = {0: [s + "0" for j in range(r + 1) for s in prev.get(j, [])]}
        for i in range(1, r + 1):
            cur[i] = [s + "1" for s in prev.get(i - 1, [])]
        orders[n] = cur
    return orders


@pytest.mark.parametrize("r", [1, 2])
def test_theta_equals_phi_abstract(r):
    orders = ordered_levels(r, 7)
    maps = multimatrix.penrose_tower(r, 7)
    for n in range(r + 1, 6):
        m = maps[n]  # X(n) -> X(n-1), i.e. A(n) -> A(n+1)
        src_ord, tgt_ord = orders[n], orders[n - 1]
        sizes = endo.block_sizes(r, n)
        assert [len(tgt_ord[i]) for i in range(r + 1)] == sizes
        for i, s in enumerate(sizes):
            for a in range(s):
                for c in range(s):
                    t = endo.DiagTuple.unit(r, n, i, a, c)
                    f = BlockFunction(m.target, {(tgt_ord[i][a], tgt_ord[i][c]): 1})
                    g = multimatrix.theta(m, f)
                    want = endo.phi_abstract(t)
                    for k in range(r + 1):
                        mem = src_ord[k]
                        got = np.array([[g.values.get((x, y), Fraction(0)) for y in mem] for x in mem],
                                       dtype=object).reshape(len(mem), len(mem))
                        assert np.array_equal(got, want.blocks[k])


def test_dot_and_json():
    d = multimatrix.tower_diagram(1, 2)
    dot = d.to_dot()
    assert dot.startswith("graph bratteli {") and 'v2_0 [label="2"];' in dot
    assert d.to_json()["levels"] == [[1, 0], [1, 1], [2, 1]]
    assert dot == multimatrix.tower_diagram(1, 2).to_dot()


def test_block_matrix_of():
    m = tower_map(1, 2)
    bm = multimatrix.block_matrix_of(m, BlockFunction.identity(m.target))
    assert [len(b) for b in bm] == [3, 2]
    assert all(row[k] == (1 if k == i else 0) for b in bm for i, row in enumerate(b) for k in range(len(row)))

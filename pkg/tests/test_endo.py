import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ncpenrose import endo, wordalg
from ncpenrose.endo import BlockMap, DiagTuple

LEVELS = [(r, n) for r in (1, 2) for n in range(r + 1, 7)]


def random_tn(r, n, rng, density=0.3):
    pat = endo.block_pattern(r, n)
    d = len(pat)
    ent = {}
    for a in range(d):
        for c in range(d):
            if pat[a] >= pat[c] and rng.random() < density:
                ent[(a, c)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return BlockMap(r, n, ent)


def by_words(g):
    words = endo.block_basis(g.r, g.n)
    return {(words[i], words[j]): v for (i, j), v in g.entries.items()}


def test_block_basis_order():
    assert endo.block_basis(1, 2) == ["xx", "xy", "yx"]
    assert endo.block_sizes(1, 2) == [2, 1]
    for r, n in LEVELS:
        pat = endo.block_pattern(r, n)
        assert pat == sorted(pat)
        assert sorted(endo.block_basis(r, n)) == sorted(wordalg.basis(r, n))
        counts = [pat.count(i) for i in range(r + 1)]
        assert counts == endo.block_sizes(r, n) == [wordalg.b(r, n - i - 1) for i in range(r + 1)]


def test_is_in_Tn_examples():
    assert endo.is_in_Tn(BlockMap.identity(1, 2))
    idx = endo.word_index(1, 2)
    g = BlockMap(1, 2, {(idx["xx"], idx["yx"]): 1})
    assert not endo.is_in_Tn(g)
    t = DiagTuple(2, 4, [np.ones((s, s), dtype=object) for s in endo.block_sizes(2, 4)])
    assert endo.is_in_Tn(endo.alpha_embed(t))


@pytest.mark.parametrize("r,n", LEVELS)
def test_Tn_unit_classification(r, n):
    assert endo.check_Tn_units(r, n)


def test_psi_identity_and_projection_example():
    for r, n in LEVELS[:-1]:
        assert endo.psi(BlockMap.identity(r, n)) == BlockMap.identity(r, n + 1)
    idx = endo.word_index(1, 2)
    g = BlockMap(1, 2, {(idx["xx"], idx["xx"]): 1, (idx["xy"], idx["xy"]): 1})
    h = by_words(endo.psi(g))
    assert h == {(w, w): 1 for w in ("xxx", "xxy", "yxx", "yxy")}


def test_psi_rejects_non_tn():
    idx = endo.word_index(1, 2)
    with pytest.raises(ValueError):
        endo.psi(BlockMap(1, 2, {(idx["xx"], idx["yx"]): 1}))


@pytest.mark.parametrize("r,n", LEVELS)
def test_psi_matches_dense_oracle(r, n):
    rng = random.Random(1000 * r + n)
    for _ in range(3):
        g = random_tn(r, n, rng)
        assert endo.psi(g) == endo.psi_dense(g)
    for a, c in endo.tn_units(r, n)[::7]:
        e = BlockMap.unit(r, n, a, c)
        assert endo.psi(e) == endo.psi_dense(e)


@pytest.mark.parametrize("r,n", LEVELS)
def test_psi_unit_checks(r, n):
    assert endo.check_psi_units(r, n) is None


@pytest.mark.parametrize("r,n", [(1, 2), (1, 4), (2, 3), (2, 4)])
def test_psi_multiplicative_random(r, n):
    rng = random.Random(7 * r + n)
    for _ in range(4):
        g, h = random_tn(r, n, rng), random_tn(r, n, rng)
        assert endo.psi(g @ h) == endo.psi(g) @ endo.psi(h)
        assert endo.is_in_Tn(endo.psi(g))


def test_phi_abstract_r1():
    a = np.array([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]], dtype=object)
    bb = np.array([[Fraction(5)]], dtype=object)
    out = endo.phi_abstract(DiagTuple(1, 2, [a, bb]))
    expect0 = np.array([[1, 2, 0], [3, 4, 0], [0, 0, 5]], dtype=object)
    assert np.array_equal(out.blocks[0], expect0)
    assert np.array_equal(out.blocks[1], a)
    assert endo.phi_abstract(DiagTuple.zero(2, 3)) == DiagTuple.zero(2, 4)
    assert endo.phi_abstract(DiagTuple.identity(2, 3)) == DiagTuple.identity(2, 4)
    assert endo.alpha_embed(DiagTuple.zero(1, 2)) == BlockMap(1, 2)
    assert endo.alpha_embed(DiagTuple.identity(1, 2)) == BlockMap.identity(1, 2)


def test_commute_examples():
    assert endo.check_commute(2, DiagTuple.identity(1, 2))
    for n in range(2, 6):
        assert endo.check_commute_units(1, n) is None
    rng = random.Random(5)
    for _ in range(4):
        blocks = [np.array([[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(s)]
                            for _ in range(s)], dtype=object).reshape(s, s)
                  for s in endo.block_sizes(2, 4)]
        assert endo.check_commute(4, DiagTuple(2, 4, blocks))


@pytest.mark.parametrize("r,n", LEVELS)
def test_commute_units(r, n):
    assert endo.check_commute_units(r, n) is None


def test_absorption_examples():
    assert endo.check_absorption(2, BlockMap.identity(1, 2))
    pat = endo.block_pattern(1, 2)
    rng = random.Random(3)
    for _ in range(5):
        ent = {(a, c): rng.randint(1, 9) for a in range(3) for c in range(3) if pat[a] > pat[c]}
        g = BlockMap(1, 2, ent)
        assert endo.is_block_diagonal(endo.psi(g))
    assert endo.check_absorption_units(2, 3) is None


@pytest.mark.parametrize("r,n", LEVELS)
def test_absorption_units(r, n):
    if wordalg.b(r, n + r) > endo.DEFAULT_MAX_DIM:
        pytest.skip("beyond the matrix size guard")
    assert endo.check_absorption_units(r, n) is None


def test_absorption_needs_r_steps():
    # one step is not enough for r = 2: some unit stays off-diagonal
    assert any(not endo.is_block_diagonal(endo.psi(BlockMap.unit(2, 3, a, c)))
               for a, c in endo.tn_units(2, 3))


def test_level_guards():
    with pytest.raises(ValueError):
        BlockMap(2, 2)
    with pytest.raises(ValueError):
        BlockMap(1, 12)


def test_to_json():
    j = BlockMap.identity(1, 2).to_json()
    assert j["basis"] == ["xx", "xy", "yx"]
    assert j["rows"][0] == ["1/1", "0/1", "0/1"]


@given(st.integers(0, 10 ** 6), st.sampled_from([(1, 3), (2, 3), (1, 5)]))
@settings(max_examples=25, deadline=None)
def test_psi_preserves_tn_and_is_homomorphic(seed, level):
    r, n = level
    rng = random.Random(seed)
    g, h = random_tn(r, n, rng, 0.2), random_tn(r, n, rng, 0.2)
    pg = endo.psi(g)
    assert endo.is_in_Tn(pg)
    assert endo.psi(g + h) == pg + endo.psi(h)
    assert endo.psi(g @ h) == pg @ endo.psi(h)
    if g.entries:
        assert pg.entries

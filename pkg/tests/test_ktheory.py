import math

import pytest

from qhowe.qring import Laurent, ONE, qbinom, qint
from qhowe.qmodule import GEN_E, GEN_F
from qhowe.howe import HoweSl2, HoweSpace
from qhowe import ktheory as kt
from qhowe import braidgrp as bg
from qhowe._linalg import SparseOp

q = Laurent.q


def test_grading_sign_calibration():
    assert kt.grading_sign() == -1
    # the opposite sign fails the (2, 2) anchor while +-1 both pass (1, 1)
    assert kt._rickard_matches_weyl(1, 1, 1)
    assert kt._rickard_matches_weyl(1, 1, -1)
    assert not kt._rickard_matches_weyl(2, 2, 1)
    assert kt._rickard_matches_weyl(2, 2, -1)


def test_shift_class():
    assert kt.shift_class(0, 0) == ONE
    assert kt.shift_class(1, 0) == -ONE
    assert kt.shift_class(0, -1) == q(1)  # class({-s}) = q^s
    assert kt.shift_class(-1, 1) == -q(-1)
    assert kt.shift_class(2, -3, eps=-1) == q(3)


def test_matrix_e_examples():
    op = kt.matrix_e(1, 1, 1, 1, 0)
    assert op.cols == {((1,), ()): {((), (1,)): ONE}}
    # two lowering steps then dividing by [2] gives a signed q-power
    op2 = kt.matrix_e(2, 2, 2, 2, 0)
    ((col, rows),) = op2.cols.items()
    assert col == ((1, 2), ())
    ((row, val),) = rows.items()
    assert row == ((), (1, 2))
    assert val.is_unit()


def test_boundary_vanishing():
    # f is zero on the k = m block (nowhere to go)
    assert kt.matrix_f(2, 2, 1, 2, 0).is_zero()
    assert kt.matrix_e(2, 2, 1, 0, 2).is_zero()
    # e^(r) is nonzero exactly when the target block is nonempty
    for m, N in [(2, 2), (3, 2), (3, 3)]:
        for k in range(min(m, N) + 1):
            l = N - k
            if l > m:
                continue
            for r in range(0, N + 1):
                op = kt.matrix_e(m, N, r, k, l)
                target_ok = 0 <= k - r and l + r <= m
                assert op.is_zero() == (not target_ok)


@pytest.mark.parametrize("m,N", [(1, 1), (2, 2), (3, 2), (2, 3), (3, 3)])
def test_commutator(m, N):
    assert all(r.ok for r in kt.verify_commutator(m, N))


@pytest.mark.parametrize("m,N", [(2, 2), (3, 3)])
def test_divided_products(m, N):
    assert all(r.ok for r in kt.verify_divided_products(m, N, 3))


def test_divided_product_examples():
    # f f = [2] f^(2) on the (0, 2) block
    f1 = kt.matrix_f(2, 2, 1, 0, 2)
    f1_next = kt.matrix_f(2, 2, 1, 1, 1)
    f2 = kt.matrix_f(2, 2, 2, 0, 2)
    assert f1_next @ f1 == f2.scale(qint(2))
    # r = 0 is the identity factor
    assert kt.matrix_f(2, 2, 0, 1, 1) == SparseOp.identity(HoweSpace(2, 2).block_basis(1, 1))


def test_deformed_pair_class_values():
    # ([0]{0}, [1]{-2}) -> 1 - q^2 under class({b}) = q^(-b)
    assert kt.deformed_pair_class(0) == ONE - q(2)
    # ([-1]{1}, [2]{-3}) -> -q^(-1) + q^3
    assert kt.deformed_pair_class(1) == -q(-1) + q(3)
    for r in range(5):
        assert kt.deformed_pair_class(r).at_one() == 0


@pytest.mark.parametrize("m,N", [(2, 2), (3, 3)])
def test_deformed_shadow(m, N):
    assert all(r.ok for r in kt.verify_ee_deformed_shadow(m, N))


def test_rickard_single_term_blocks():
    # one-term complex: just the lowering map
    op = kt.rickard_euler(1, 0, 1)
    assert op.cols == {((), (1,)): {((1,), ()): ONE}}
    op2 = kt.rickard_euler(2, 0, 1)
    assert len(op2.cols) == 2
    # two-term block: identity minus a q-multiple of fe
    sp = HoweSpace(2, 2)
    block = sp.block_basis(1, 1)
    f1 = kt.matrix_f(2, 2, 1, 0, 2)  # unused, shape check below matters
    e = kt.divided_op(2, 2, GEN_E, 1)
    f = kt.divided_op(2, 2, GEN_F, 1)
    expected = SparseOp.identity(block) + ((f @ e).restrict(block)).scale(kt.shift_class(-1, 1))
    assert kt.rickard_euler(2, 1, 1) == expected


@pytest.mark.parametrize("m,N", [(1, 1), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_rickard_equals_weyl(m, N):
    results = kt.verify_rickard_equals_t(m, N)
    assert results and all(r.ok for r in results)
    assert all(r.params["eps"] == -1 for r in results)


@pytest.mark.parametrize("m,N", [(2, 2), (3, 2)])
def test_rickard_invertible(m, N):
    assert all(r.ok for r in kt.verify_rickard_invertible(m, N))


def test_rickard_conjugation_mirrors_weyl_commutation():
    # t f = -(e k) t on the whole degree piece, the sl_2 shadow of the
    # Weyl-element commutation relations
    for m, N in [(2, 2), (3, 2)]:
        sp = HoweSpace(m, N)
        mod = HoweSl2(sp)
        t = bg.weyl_longest(mod)
        f = SparseOp({b: mod.act(GEN_F, 1, {b: ONE}) for b in mod.basis()})
        e = SparseOp({b: mod.act(GEN_E, 1, {b: ONE}) for b in mod.basis()})
        k = SparseOp({b: mod.act("K", 1, {b: ONE}) for b in mod.basis()})
        assert t @ f == -((e @ k) @ t)


def test_block_dims_match_weight_spaces():
    for m, N in [(2, 2), (3, 3)]:
        sp = HoweSpace(m, N)
        for k, l in kt.blocks(m, N):
            assert len(sp.block_basis(k, l)) == math.comb(m, k) * math.comb(m, l)

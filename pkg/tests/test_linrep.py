import numpy as np
import pytest

import semifd as sf

from oracles import gram_operator_norm


def test_shift_on_naturals(nat1):
    one = nat1.element_from_word((0,))
    lam = sf.lambda_op(nat1, one, 3)
    assert lam.codomain.dim == 5 and lam.domain.dim == 4
    dense = lam.to_dense()
    assert np.array_equal(dense, np.eye(5, 4, k=-1))


def test_free2_lambda_a_images(free2):
    a = free2.element_from_str("a")
    lam = sf.lambda_op(free2, a, 1)
    basis1, basis2 = lam.domain, lam.codomain
    for src, dst in [("e", "a"), ("a", "a.a"), ("b", "a.b")]:
        col = basis1.index_of(free2.element_from_str(src).index)
        row = basis2.index_of(free2.element_from_str(dst).index)
        assert lam.entries[(row, col)] == 1.0


def test_braid_lambda_injective_columns(braid3):
    a = braid3.element_from_str("s1")
    lam = sf.lambda_op(braid3, a, 2)
    cols = {}
    for (r, c), v in lam.entries.items():
        assert v == 1.0
        assert c not in cols
        cols[c] = r
    assert len(cols) == lam.domain.dim
    # one 1 per column, at most one per row
    assert len(set(cols.values())) == len(cols)
    ba = braid3.element_from_str("s2.s1")
    bb = braid3.element_from_str("s2.s2")
    tgt = {braid3.element_from_str("s1.s2.s1").index, braid3.element_from_str("s1.s2.s2").index}
    got = {
        lam.codomain.labels[cols[lam.domain.index_of(x.index)]] for x in (ba, bb)
    }
    assert got == tgt


def test_adjoint_on_naturals(nat1):
    one = nat1.element_from_word((0,))
    adj = sf.lambda_adjoint_op(nat1, one, 4)
    dense = adj.to_dense()
    assert np.array_equal(dense, np.eye(5, 5, k=1))  # e_0 -> 0, e_r -> e_{r-1}


def test_adjoint_free2_prefix_stripping(free2):
    a = free2.element_from_str("a")
    adj = sf.lambda_adjoint_op(free2, a, 3)
    basis = adj.domain
    ab = free2.element_from_str("a.b")
    b = free2.element_from_str("b")
    ba = free2.element_from_str("b.a")
    assert adj.entries[(basis.index_of(b.index), basis.index_of(ab.index))] == 1.0
    assert all(c != basis.index_of(ba.index) for (_, c) in adj.entries)


def test_adjoint_braid_class_membership(braid3):
    b = braid3.element_from_str("s2")
    adj = sf.lambda_adjoint_op(braid3, b, 3)
    basis = adj.domain
    aba = braid3.element_from_str("s1.s2.s1")
    ab = braid3.element_from_str("s1.s2")
    assert adj.entries[(basis.index_of(ab.index), basis.index_of(aba.index))] == 1.0


def test_isometry_exact(free2, braid3):
    for table in (free2, braid3):
        for g in range(2):
            p = table.element_from_word((g,))
            lam = sf.lambda_op(table, p, 3, L_cod=4)
            comp = sf.lambda_adjoint_op(table, p, 4) @ lam
            incl = sf.inclusion(lam.domain, sf.graded_basis(table, 4))
            assert comp == incl


def test_homomorphism_with_matched_grades(braid3):
    p = braid3.element_from_str("s1")
    q = braid3.element_from_str("s2.s1")
    lhs = sf.lambda_op(braid3, p, 3) @ sf.lambda_op(braid3, q, 1, L_cod=3)
    rhs = sf.lambda_op(braid3, braid3.multiply(p, q), 1, L_cod=4)
    assert lhs == rhs


def test_adjoint_consistency(free2):
    p = free2.element_from_str("a.b")
    lam = sf.lambda_op(free2, p, 2)
    adj_of_op = lam.adjoint()
    basis_dom, basis_cod = lam.domain, lam.codomain
    for x_lab in basis_dom.labels:
        x = sf.Vector.basis_vector(basis_dom, x_lab)
        for y_lab in basis_cod.labels:
            y = sf.Vector.basis_vector(basis_cod, y_lab)
            lhs = sf.Vector(basis_cod, lam.apply(x.coeffs)).inner(y)
            rhs = x.inner(sf.Vector(basis_dom, adj_of_op.apply(y.coeffs)))
            assert lhs == rhs


def test_compose_basis_mismatch(free2, braid3):
    a = sf.lambda_op(free2, free2.element_from_str("a"), 2)
    b = sf.lambda_op(braid3, braid3.element_from_str("s1"), 2)
    with pytest.raises(sf.BasisMismatchError):
        a @ b


def test_compose_with_identity(braid3):
    lam = sf.lambda_op(braid3, braid3.element_from_str("s1"), 2)
    assert lam @ sf.identity_operator(lam.domain) == lam
    assert sf.identity_operator(lam.codomain) @ lam == lam


def test_tensor_of_shifts(nat1):
    one = nat1.element_from_word((0,))
    lam = sf.lambda_op(nat1, one, 2)
    T = lam.tensor(lam)
    dom, cod = T.domain, T.codomain
    for j in range(3):
        for k in range(3):
            col = dom.index_of((nat1.by_length[j][0], nat1.by_length[k][0]))
            row = cod.index_of((nat1.by_length[j + 1][0], nat1.by_length[k + 1][0]))
            assert T.entries[(row, col)] == 1.0


def test_tensor_with_identity_is_block_diagonal(free2):
    lam = sf.lambda_op(free2, free2.element_from_str("a"), 1)
    ident = sf.identity_operator(sf.graded_basis(free2, 1))
    T = lam.tensor(ident)
    assert len(T.entries) == len(lam.entries) * 3
    assert sf.operator_norm(T) == pytest.approx(sf.operator_norm(lam), abs=1e-12)


def test_tensor_norm_multiplicative():
    rng = np.random.default_rng(7)
    b1 = sf.Basis(("r", 1), tuple(range(4)))
    b2 = sf.Basis(("r", 2), tuple(range(3)))
    A = sf.SparseOperator(
        b1, b1, {(i, j): complex(rng.normal(), rng.normal()) for i in range(4) for j in range(4)}
    )
    B = sf.SparseOperator(
        b2, b2, {(i, j): complex(rng.normal(), rng.normal()) for i in range(3) for j in range(3)}
    )
    # SVD oracle on the dense Kronecker product
    oracle = float(np.linalg.svd(np.kron(A.to_dense(), B.to_dense()), compute_uv=False)[0])
    assert sf.operator_norm(A.tensor(B)) == pytest.approx(oracle, rel=1e-12)
    assert sf.operator_norm(A) * sf.operator_norm(B) == pytest.approx(oracle, rel=1e-12)


def test_operator_norm_golden_ratio():
    b = sf.Basis(("t",), (0, 1))
    A = sf.SparseOperator(b, b, {(0, 0): 1, (0, 1): 1, (1, 1): 1})
    assert sf.operator_norm(A) == pytest.approx((1 + np.sqrt(5)) / 2, abs=1e-12)


def test_operator_norm_zero_and_shift(nat1):
    b = sf.Basis(("t",), (0, 1))
    assert sf.operator_norm(sf.zero_operator(b, b)) == 0.0
    one = nat1.element_from_word((0,))
    assert sf.operator_norm(sf.lambda_op(nat1, one, 5)) == pytest.approx(1.0, abs=1e-12)


def test_operator_norm_matches_gram_oracle():
    rng = np.random.default_rng(11)
    b = sf.Basis(("r", 20), tuple(range(20)))
    for _ in range(5):
        M = rng.normal(size=(20, 20)) + 1j * rng.normal(size=(20, 20))
        A = sf.SparseOperator(
            b, b, {(i, j): complex(M[i, j]) for i in range(20) for j in range(20)}
        )
        assert sf.operator_norm(A) == pytest.approx(gram_operator_norm(M), abs=1e-8)


def test_power_iteration_path():
    n = 2100
    b = sf.Basis(("big",), tuple(range(n)))
    A = sf.SparseOperator(b, b, {(i, i): (i + 1) / n for i in range(n)})
    assert sf.operator_norm(A) == pytest.approx(1.0, rel=1e-6)


def test_triplet_serialization_is_sorted(free2):
    lam = sf.lambda_op(free2, free2.element_from_str("a"), 2)
    trips = lam.triplets()
    assert trips == sorted(trips)
    assert all(im == 0.0 and re == 1.0 for (_, _, re, im) in trips)


def test_vector_shape_check(free2):
    basis = sf.graded_basis(free2, 1)
    with pytest.raises(sf.BasisMismatchError):
        sf.Vector(basis, np.zeros(5))

"""Tests for tensors, labelled contraction and exact linear algebra."""

from fractions import Fraction

import numpy as np
import pytest

from hopfkit.core import (
    LinearMap,
    Tensor,
    compose,
    contract,
    identity_map,
    image_basis,
    invert_map,
    kernel_basis,
    kron,
    quotient,
    rank,
    rref,
    same_span,
    split_idempotent,
    swap_map,
    tensor_contract,
)
from hopfkit.exceptions import FieldMismatchError, NotIdempotentError, ShapeMismatchError, SingularMapError
from hopfkit.field import QQ, PrimeField, Residue

pytestmark = pytest.mark.fast


def matrix(rows: list[list[int]]) -> LinearMap:
    return LinearMap.from_matrix(QQ, rows)


def test_tensor_is_read_only() -> None:
    t = Tensor.of(QQ, [1, 2, 3])
    with pytest.raises(ValueError):
        t.data[0] = Fraction(5)
    copy = t.data.copy()
    copy[0] = Fraction(5)
    assert Tensor(QQ, copy)[0] == 5 and t[0] == 1


def test_tensor_arithmetic_checks_field_and_shape() -> None:
    a = Tensor.of(QQ, [1, 2])
    assert (a + a).equals(a.scale(2))
    assert (a - a).is_zero()
    with pytest.raises(FieldMismatchError):
        a + Tensor.of(PrimeField(3), [1, 2])
    with pytest.raises(ShapeMismatchError):
        a + Tensor.of(QQ, [1, 2, 3])
    with pytest.raises(ShapeMismatchError):
        a.reshape((3,))


def test_mismatches_marks_differing_entries() -> None:
    a = Tensor.of(QQ, [[1, 2], [3, 4]])
    b = Tensor.of(QQ, [[1, 2], [3, 5]])
    assert np.argwhere(a.mismatches(b)).tolist() == [[1, 1]]
    assert not a.equals(b)


def test_tensor_contract_axis_pairs() -> None:
    identity = Tensor(QQ, QQ.identity(2))
    e0 = Tensor.of(QQ, [1, 0])
    assert tensor_contract(identity, e0, [(1, 0)]).equals(e0)
    A = Tensor.of(QQ, [[1, 2], [3, 4]])
    # uncontracted axes of a come first
    assert tensor_contract(A, identity, [(0, 0)]).equals(Tensor.of(QQ, [[1, 3], [2, 4]]))
    with pytest.raises(ShapeMismatchError):
        tensor_contract(A, e0, [(0, 0), (1, 0)])
    with pytest.raises(ShapeMismatchError):
        tensor_contract(A, Tensor.of(QQ, [1, 2, 3]), [(0, 0)])


def test_contract_matrix_product_and_trace() -> None:
    A = Tensor.of(QQ, [[1, 2], [3, 4]])
    B = Tensor.of(QQ, [[0, 1], [1, 0]])
    assert contract((A, "i j"), (B, "j k"), out="i k").equals(Tensor.of(QQ, [[2, 1], [4, 3]]))
    assert contract((A, "i j"), (B, "j k"), out="k i").equals(Tensor.of(QQ, [[2, 4], [1, 3]]))
    identity = Tensor(QQ, QQ.identity(2))
    trace = contract((A, "i j"), (identity, "j i"), out="")
    assert trace.data[()] == 5


def test_contract_three_terms() -> None:
    u = Tensor.of(QQ, [1, 1])
    A = Tensor.of(QQ, [[1, 2], [3, 4]])
    v = Tensor.of(QQ, [1, -1])
    assert contract((u, "i"), (A, "i j"), (v, "j"), out="").data[()] == -2


@pytest.mark.parametrize(
    "out",
    [
        "i",  # k is free but missing
        "i k x",  # x is unknown
        "i i k",  # repeated output
    ],
)
def test_contract_rejects_bad_outputs(out: str) -> None:
    A = Tensor.of(QQ, [[1, 2], [3, 4]])
    with pytest.raises(ShapeMismatchError):
        contract((A, "i j"), (A, "j k"), out=out)


def test_contract_rejects_inconsistent_labels() -> None:
    A = Tensor.of(QQ, [[1, 2], [3, 4]])
    v = Tensor.of(QQ, [1, 2, 3])
    with pytest.raises(ShapeMismatchError):
        contract((A, "i j"), (v, "j"), out="i")
    with pytest.raises(ShapeMismatchError):
        contract((A, "i"), out="i")
    with pytest.raises(ShapeMismatchError):
        contract((A, "i i"), out="")
    with pytest.raises(FieldMismatchError):
        contract((A, "i j"), (Tensor.of(PrimeField(5), [1, 2]), "j"), out="i")


def test_compose_and_kron() -> None:
    f = matrix([[1, 2], [3, 4]])
    g = matrix([[0, 1], [1, 0]])
    assert compose(f, g).equals(matrix([[2, 1], [4, 3]]))
    both = kron(f, identity_map(QQ, (2,)))
    assert both.dom == (2, 2) and both.cod == (2, 2)
    M = both.matrix
    # f⊗id sends e_a⊗e_b to f(e_a)⊗e_b, flat index a·2 + b
    assert [M[r, 0] for r in range(4)] == [1, 0, 3, 0]
    assert [M[r, 3] for r in range(4)] == [0, 2, 0, 4]
    with pytest.raises(ShapeMismatchError):
        compose(f, matrix([[1, 2, 3]]))


def test_swap_map() -> None:
    flip = swap_map(QQ, 2, 3)
    image = flip.apply(Tensor.basis(QQ, (2, 3), (1, 2)))
    assert image.equals(Tensor.basis(QQ, (3, 2), (2, 1)))
    assert compose(swap_map(QQ, 3, 2), flip).equals(identity_map(QQ, (2, 3)))


def test_invert_map() -> None:
    f = matrix([[2, 1], [1, 1]])
    assert invert_map(f).equals(matrix([[1, -1], [-1, 2]]))
    with pytest.raises(SingularMapError):
        invert_map(matrix([[1, 2], [2, 4]]))
    with pytest.raises(ShapeMismatchError):
        invert_map(matrix([[1, 2, 3]]))


def test_invert_map_over_prime_field() -> None:
    F = PrimeField(3)
    f = LinearMap.from_matrix(F, [[1, 1], [0, 2]])
    inverse = invert_map(f)
    assert compose(f, inverse).equals(identity_map(F, (2,)))
    assert inverse.matrix[1, 1] == Residue(2, 3)
    # singular mod 3 although invertible over the rationals
    with pytest.raises(SingularMapError):
        invert_map(LinearMap.from_matrix(F, [[1, 2], [2, 1]]))


def test_rref_rank_and_spans() -> None:
    m = QQ.array([[1, 2, 3], [2, 4, 7]])
    reduced, pivots = rref(QQ, m)
    assert pivots == [0, 2]
    assert [reduced[0, c] for c in range(3)] == [1, 2, 0]
    assert rank(QQ, m) == 2
    assert image_basis(QQ, m).shape == (2, 2)
    kernel = kernel_basis(QQ, m)
    assert [kernel[r, 0] for r in range(3)] == [-2, 1, 0]
    assert same_span(QQ, QQ.array([[1], [1]]), QQ.array([[3], [3]]))
    assert not same_span(QQ, QQ.array([[1], [0]]), QQ.array([[0], [1]]))


def test_split_idempotent() -> None:
    e = matrix([[1, 1], [0, 0]])
    splitting = split_idempotent(e)
    assert splitting.rank == 1
    assert compose(splitting.projection, splitting.inclusion).equals(identity_map(QQ, (1,)))
    assert compose(splitting.inclusion, splitting.projection).equals(e)


def test_split_zero_and_identity() -> None:
    assert split_idempotent(matrix([[0, 0], [0, 0]])).rank == 0
    assert split_idempotent(identity_map(QQ, (3,))).rank == 3


def test_split_idempotent_reports_witness() -> None:
    with pytest.raises(NotIdempotentError) as excinfo:
        split_idempotent(matrix([[1, 0], [0, 2]]))
    assert excinfo.value.witness == (1,)


def test_quotient() -> None:
    relations = QQ.array([[1], [-1], [0]])
    q = quotient(QQ, (3,), relations)
    assert q.dim == 2
    e0 = q.projection.apply(Tensor.basis(QQ, (3,), (0,)))
    e1 = q.projection.apply(Tensor.basis(QQ, (3,), (1,)))
    assert e0.equals(e1)
    assert compose(q.projection, q.section).equals(identity_map(QQ, (2,)))


def test_quotient_by_nothing_is_identity() -> None:
    q = quotient(QQ, (2,), QQ.zeros((2, 0)))
    assert q.dim == 2
    assert q.projection.equals(identity_map(QQ, (2,)))

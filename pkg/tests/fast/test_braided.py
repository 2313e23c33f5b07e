"""Tests for braided contexts and Hopf algebras, smash products and coinvariants inside them."""

from dataclasses import replace
from fractions import Fraction

import pytest

from hopfkit.algebra import verify_algebra
from hopfkit.braided import (
    BraidedContext,
    BraidedHopfAlgebraData,
    BraidedModuleAlgebraData,
    braided_round_trip,
    braided_smash,
    regular_braided_bicomodule,
    structure_theorem_braided,
    verify_braided_bicomodule_algebra,
    verify_braided_hopf,
    verify_braided_yd,
    verify_context,
    yd_braiding,
)
from hopfkit.catalog import (
    exterior_algebra,
    exterior_algebra_yd,
    graded_yd_algebra,
    group_algebra,
    super_yd_algebra,
    twisted_dual_group_algebra,
)
from hopfkit.core import LinearMap, Tensor, split_idempotent
from hopfkit.exceptions import ContextMismatchError, ExampleParameterError, PreconditionError
from hopfkit.field import QQ, PrimeField
from hopfkit.identities import Identity
from hopfkit.quasi_hopf import build_smash
from hopfkit.report import Verdict

try:
    from ..common.algebra_utils import bump
except ImportError:
    import sys
    from pathlib import Path

    sys.path.insert(0, str(Path(__file__).parent.parent))
    from common.algebra_utils import bump

pytestmark = pytest.mark.fast


def test_plain_context_hexagons() -> None:
    ctx = BraidedContext.plain(QQ)
    report = verify_context(ctx, [ctx.object(1), ctx.object(2)])
    assert report.passed
    assert report.verdict_of(Identity.HEXAGON_LEFT) is Verdict.PASS
    assert report.verdict_of(Identity.HEXAGON_RIGHT) is Verdict.PASS


def test_super_context_hexagons_and_sign() -> None:
    ctx = BraidedContext.supervector(QQ)
    odd = ctx.graded_object([1])
    report = verify_context(ctx, [ctx.graded_object([0, 1]), odd])
    assert report.passed, report.summary()
    # two odd vectors anticommute
    assert ctx.braiding(odd, odd).matrix[0, 0] == -1
    assert ctx.braiding_inverse(odd, odd).matrix[0, 0] == -1


def test_yd_context_hexagons() -> None:
    ctx, H = exterior_algebra_yd(QQ, 1)
    report = verify_context(ctx, [H.obj, ctx.unit_object()])
    assert report.passed, report.summary()


def test_objects_belong_to_their_context() -> None:
    plain, graded = BraidedContext.plain(QQ), BraidedContext.supervector(QQ)
    with pytest.raises(ContextMismatchError):
        graded.object(2)
    with pytest.raises(ContextMismatchError):
        plain.graded_object([0, 1])
    with pytest.raises(ContextMismatchError):
        plain.check_object(graded.graded_object([0]))
    with pytest.raises(ContextMismatchError):
        plain.yd_object(Tensor.zeros(QQ, (1, 2, 1)), Tensor.zeros(QQ, (2, 1, 1)))


def test_yd_context_needs_ordinary_hopf_algebra() -> None:
    with pytest.raises(PreconditionError):
        BraidedContext.yetter_drinfeld(twisted_dual_group_algebra(QQ))


def test_super_split_needs_homogeneous_image() -> None:
    ctx = BraidedContext.supervector(QQ)
    half = Fraction(1, 2)
    e = LinearMap.from_matrix(QQ, [[half, half], [half, half]])
    with pytest.raises(ContextMismatchError):
        ctx.split(ctx.graded_object([0, 1]), split_idempotent(e))
    even = ctx.split(ctx.graded_object([0, 0]), split_idempotent(e))
    assert even.dim == 1 and even.grading == (0,)


@pytest.mark.parametrize("generators", [1, 2])
def test_exterior_algebra_in_super_spaces(generators: int) -> None:
    ctx, H = exterior_algebra(QQ, generators)
    assert H.dim == 2**generators
    report = verify_braided_hopf(ctx, H)
    assert report.passed, report.summary()
    assert report.verdict_of(Identity.BIALGEBRA_COMPATIBILITY) is Verdict.PASS


def test_exterior_algebra_in_yd_modules() -> None:
    ctx, H = exterior_algebra_yd(PrimeField(3), 1)
    assert ctx.kind == "yd"
    assert verify_braided_hopf(ctx, H).passed


def test_exterior_algebra_needs_odd_characteristic() -> None:
    with pytest.raises(ExampleParameterError):
        exterior_algebra(PrimeField(2), 1)


def test_ordinary_hopf_algebra_in_plain_context() -> None:
    ctx = BraidedContext.plain(QQ)
    H = BraidedHopfAlgebraData.from_hopf(ctx, group_algebra(QQ, 3))
    assert verify_braided_hopf(ctx, H).passed


def test_broken_antipode_inverse_is_reported() -> None:
    ctx, H = exterior_algebra(QQ, 1)
    bad = replace(H, antipode_inv=bump(H.antipode_inv, (0, 1)))
    assert verify_braided_hopf(ctx, bad).verdict_of(Identity.ANTIPODE_INVERSE) is Verdict.FAIL


def test_create_needs_bijective_antipode() -> None:
    ctx, H = exterior_algebra(QQ, 1)
    with pytest.raises(PreconditionError):
        BraidedHopfAlgebraData.create(H.obj, H.algebra, H.delta, H.counit, Tensor.zeros(QQ, (2, 2)))


@pytest.mark.parametrize("derivation", [0, 1])
def test_super_yd_algebra(derivation: int) -> None:
    ctx, H, A = super_yd_algebra(QQ, derivation)
    report = verify_braided_yd(ctx, H, A)
    assert report.passed, report.summary()
    smash = braided_smash(ctx, H, A.module_algebra)
    assert smash.dim == 4
    assert verify_algebra(smash.algebra).passed


def test_trivial_coaction_braids_by_the_context() -> None:
    ctx, H, A = super_yd_algebra(QQ, 1)
    braiding = yd_braiding(ctx, H, A, A)
    assert braiding.report.passed
    assert braiding.braiding.equals(ctx.braiding(A.obj, A.obj))


def test_plain_smash_agrees_with_quasi_smash() -> None:
    Hq, A = graded_yd_algebra(QQ, "group-algebra")
    ctx = BraidedContext.plain(QQ)
    H = BraidedHopfAlgebraData.from_hopf(ctx, Hq)
    braided = braided_smash(ctx, H, BraidedModuleAlgebraData(ctx.object(A.dim), A.algebra, A.action))
    assert braided.algebra.mu.equals(build_smash(Hq, A.module_algebra).mu)


def test_structure_theorem_on_regular_bicomodule() -> None:
    ctx, H = exterior_algebra(QQ, 1)
    B = regular_braided_bicomodule(H)
    assert verify_braided_bicomodule_algebra(ctx, H, B).passed
    assert B.v is not None
    theorem = structure_theorem_braided(ctx, H, B, B.v)
    assert theorem.coinvariants.dim == 1
    assert theorem.omega.domain_dim == theorem.omega.codomain_dim == H.dim
    assert theorem.report.passed


def test_structure_theorem_needs_left_coaction() -> None:
    ctx, H = exterior_algebra(QQ, 1)
    B = regular_braided_bicomodule(H)
    assert B.v is not None
    with pytest.raises(PreconditionError):
        structure_theorem_braided(ctx, H, replace(B, left=None), B.v)


def test_round_trip_of_super_yd_module() -> None:
    ctx, H, A = super_yd_algebra(QQ, 1)
    decomposition, report = braided_round_trip(ctx, H, A)
    assert report.passed, report.summary()
    assert decomposition.module.dim == A.dim
    assert report.verdict_of(Identity.ROUND_TRIP_BIJECTIVE) is Verdict.PASS

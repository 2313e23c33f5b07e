"""Tests for weak Hopf algebras, their counital maps and weak Yetter-Drinfeld modules."""

import logging
from dataclasses import replace

import pytest

from hopfkit.algebra import AlgebraData
from hopfkit.catalog import group_algebra, groupoid_algebra, target_algebra
from hopfkit.core import Tensor, contract
from hopfkit.exceptions import PreconditionError
from hopfkit.field import QQ, Field, PrimeField
from hopfkit.identities import Identity
from hopfkit.quasi_hopf import LeftModuleAlgebraData
from hopfkit.report import Verdict
from hopfkit.weak_hopf import (
    WeakHopfAlgebraData,
    counital_maps,
    regular_weak_bicomodule,
    relative_smash,
    structure_theorem_weak,
    verify_weak_bicomodule_algebra,
    verify_weak_comodule_algebra,
    verify_weak_hopf,
    verify_weak_module_algebra,
    verify_weak_yd,
    weak_bimodule_from_bicomodule_algebra,
    weak_coinvariants,
)

try:
    from ..common.algebra_utils import bump, with_tensor
except ImportError:
    import sys
    from pathlib import Path

    sys.path.insert(0, str(Path(__file__).parent.parent))
    from common.algebra_utils import bump, with_tensor

pytestmark = pytest.mark.fast


@pytest.mark.parametrize(
    "objects, order, field",
    [(1, 1, QQ), (2, 1, QQ), (1, 3, QQ), (2, 2, QQ), (2, 1, PrimeField(2))],
)
def test_groupoid_algebras_verify(objects: int, order: int, field: Field) -> None:
    H = groupoid_algebra(field, objects, order)
    assert H.dim == objects * objects * order
    report = verify_weak_hopf(H)
    assert report.passed, report.summary()
    # derived identities are recorded under their own scope
    assert report.find(Identity.SOURCE_TARGET_COMMUTE, "derived")


def test_ordinary_hopf_algebra_is_weak_hopf() -> None:
    H = WeakHopfAlgebraData.from_hopf(group_algebra(QQ, 3))
    assert verify_weak_hopf(H).passed
    counital = counital_maps(H)
    assert counital.target_dim == counital.source_dim == 1


@pytest.mark.parametrize("objects", [1, 2, 3])
def test_counital_subalgebras_of_groupoid(objects: int) -> None:
    H = groupoid_algebra(QQ, objects, 1)
    counital = counital_maps(H)
    assert counital.target_dim == counital.source_dim == objects
    assert counital.report.passed
    assert counital.report.verdict_of(Identity.ANTIPODE_TARGET_TO_SOURCE) is Verdict.PASS
    # ε_t is idempotent and fixes the unit
    t = H.target
    assert contract((t, "o x"), (t, "x h"), out="o h").equals(t)
    assert contract((t, "o u"), (H.unit, "u"), out="o").equals(H.unit)


def test_target_map_of_pair_groupoid() -> None:
    H = groupoid_algebra(QQ, 2, 1)
    # the arrow 0 ← 1 (index 1) has target ε_t = 1_0 (index 0)
    image = contract((H.target, "o h"), (Tensor.basis(QQ, (4,), (1,)), "h"), out="o")
    assert image.equals(Tensor.basis(QQ, (4,), (0,)))


def test_weak_unit_coproduct_is_not_one_tensor_one() -> None:
    H = groupoid_algebra(QQ, 2, 1)
    one = H.unit_coproduct
    # Δ(1) = 1_0⊗1_0 + 1_1⊗1_1
    assert one[0, 0] == 1 and one[3, 3] == 1 and one[0, 3] == 0


def test_broken_antipode_inverse_is_reported(caplog: pytest.LogCaptureFixture) -> None:
    H = groupoid_algebra(QQ, 2, 1)
    bad = with_tensor(H, "antipode_inv", bump(H.antipode_inv, (0, 1)))
    with caplog.at_level(logging.INFO):
        report = verify_weak_hopf(bad)
    assert report.verdict_of(Identity.ANTIPODE_INVERSE) is Verdict.FAIL
    assert "fail" in caplog.text
    with pytest.raises(PreconditionError):
        counital_maps(bad)


def test_create_needs_bijective_antipode() -> None:
    H = groupoid_algebra(QQ, 1, 2)
    with pytest.raises(PreconditionError):
        WeakHopfAlgebraData.create(H.algebra, H.delta, H.counit, Tensor.zeros(QQ, (2, 2)))


def test_target_algebra_is_weak_yd() -> None:
    H, A = target_algebra(QQ, 2, 1)
    report = verify_weak_yd(H, A)
    assert report.passed, report.summary()
    assert report.verdict_of(Identity.WEAK_YD_FORMS_AGREE) is Verdict.PASS
    assert verify_weak_module_algebra(H, A.module_algebra).passed


def test_relative_smash_of_target_algebra() -> None:
    H, A = target_algebra(QQ, 2, 1)
    smash = relative_smash(H, A.module_algebra)
    # H_t⊗_{H_t}H is H again
    assert smash.dim == H.dim
    assert smash.quotient.relations.shape[0] == A.dim * H.dim


def test_relative_smash_needs_module_algebra() -> None:
    H, A = target_algebra(QQ, 2, 1)
    broken = LeftModuleAlgebraData(AlgebraData(A.algebra.mu, A.algebra.unit), Tensor.zeros(QQ, A.action.shape))
    with pytest.raises(PreconditionError):
        relative_smash(H, broken)


@pytest.mark.parametrize("objects", [1, 2])
def test_coinvariants_of_regular_bimodule(objects: int) -> None:
    H = groupoid_algebra(QQ, objects, 1)
    B = regular_weak_bicomodule(H)
    assert verify_weak_bicomodule_algebra(H, B).passed
    coinvariants = weak_coinvariants(H, weak_bimodule_from_bicomodule_algebra(H, B))
    # E(h) = h₁S(h₂) = ε_t(h), whose image is H_t
    assert coinvariants.splitting.rank == objects
    assert coinvariants.report.verdict_of(Identity.COINVARIANTS_AGREE) is Verdict.PASS


def test_unit_forms_fail_together() -> None:
    H, A = target_algebra(QQ, 2, 2)
    clean = verify_weak_comodule_algebra(H, A.algebra, A.coaction, "left")
    assert clean.passed, clean.summary()
    assert clean.verdict_of(Identity.LEFT_UNIT_FORMS_AGREE) is Verdict.PASS
    # λ(1_0) gains a term on the arrow 0←1, which lies outside H_s
    report = verify_weak_comodule_algebra(H, A.algebra, bump(A.coaction, (3, 0, 0)), "left")
    forms = (Identity.LEFT_UNIT_SOURCE, Identity.LEFT_UNIT_COPRODUCT, Identity.LEFT_UNIT_IN_SOURCE)
    assert [report.verdict_of(identity) for identity in forms] == [Verdict.FAIL] * 3
    assert report.verdict_of_tag("NV") is Verdict.FAIL
    (in_source,) = report.find(Identity.LEFT_UNIT_IN_SOURCE)
    assert in_source.witness is not None
    # the counit law fails as well, so agreement is not judged
    assert report.verdict_of(Identity.LEFT_COUNIT) is Verdict.FAIL
    assert report.verdict_of(Identity.LEFT_UNIT_FORMS_AGREE) is Verdict.NOT_APPLICABLE


def test_structure_theorem_needs_v() -> None:
    H = groupoid_algebra(QQ, 2, 1)
    B = replace(regular_weak_bicomodule(H), v=None)
    with pytest.raises(PreconditionError):
        structure_theorem_weak(H, B)

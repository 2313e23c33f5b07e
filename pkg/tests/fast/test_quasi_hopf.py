"""Tests for quasi-Hopf algebras, smash products, Yetter-Drinfeld modules and coinvariants."""

from fractions import Fraction

import pytest

from hopfkit.algebra import outer, verify_algebra
from hopfkit.catalog import (
    dual_group_algebra,
    graded_yd_algebra,
    group_algebra,
    sweedler,
    trivial_algebra,
    twisted_dual_group_algebra,
)
from hopfkit.core import Tensor
from hopfkit.exceptions import PreconditionError
from hopfkit.field import QQ, PrimeField
from hopfkit.identities import Identity
from hopfkit.quasi_hopf import (
    LeftModuleAlgebraData,
    QuasiHopfAlgebraData,
    YetterDrinfeldModuleData,
    bimodule_from_bicomodule_algebra,
    build_smash,
    coinvariants_projector,
    regular_bicomodule,
    schauenburg_round_trip,
    smash_coaction_criterion,
    structure_theorem_quasi,
    verify_bicomodule_algebra,
    verify_module_algebra,
    verify_quasi_hopf,
    verify_yd,
    verify_yd_algebra,
)
from hopfkit.report import Verdict

try:
    from ..common.algebra_utils import bump, with_tensor
except ImportError:
    import sys
    from pathlib import Path

    sys.path.insert(0, str(Path(__file__).parent.parent))
    from common.algebra_utils import bump, with_tensor

pytestmark = pytest.mark.fast


@pytest.mark.parametrize(
    "H",
    [
        group_algebra(QQ, 2),
        group_algebra(QQ, 3),
        dual_group_algebra(QQ, 3),
        sweedler(QQ),
        sweedler(PrimeField(3)),
        twisted_dual_group_algebra(QQ),
        twisted_dual_group_algebra(PrimeField(5)),
    ],
    ids=["kz2", "kz3", "dual-kz3", "sweedler", "sweedler-gf3", "twisted", "twisted-gf5"],
)
def test_catalog_algebras_verify(H: QuasiHopfAlgebraData) -> None:
    report = verify_quasi_hopf(H)
    assert report.passed, report.summary()
    for identity in (Identity.PENTAGON, Identity.QUASI_COASSOCIATIVITY, Identity.ASSOCIATOR_BETA_ALPHA):
        assert report.verdict_of(identity) is Verdict.PASS


def test_identity_ids_are_equation_tags() -> None:
    report = verify_quasi_hopf(twisted_dual_group_algebra(QQ))
    assert [entry["id"] for entry in report.identities()] == ["q1", "q2", "q3", "q4", "q5", "q6"]
    assert {entry["verdict"] for entry in report.identities()} == {"pass"}


def test_twisted_associator_is_nontrivial() -> None:
    H = twisted_dual_group_algebra(QQ)
    one = H.unit
    assert not H.phi.equals(outer(one, one, one))
    assert H.phi[1, 1, 1] == -1
    assert H.phi_inv.equals(H.phi)


def test_broken_associator_inverse_is_reported() -> None:
    H = twisted_dual_group_algebra(QQ)
    bad = with_tensor(H, "phi_inv", bump(H.phi_inv, (0, 1, 1)))
    report = verify_quasi_hopf(bad)
    assert not report.passed
    assert report.verdict_of(Identity.ASSOCIATOR_INVERSE) is Verdict.FAIL
    failure = report.find(Identity.ASSOCIATOR_INVERSE)[0]
    assert failure.verdict is Verdict.FAIL and failure.witness is not None


def test_broken_antipode_inverse_is_reported() -> None:
    H = sweedler(QQ)
    bad = with_tensor(H, "antipode_inv", bump(H.antipode_inv, (2, 2)))
    assert verify_quasi_hopf(bad).verdict_of(Identity.ANTIPODE_INVERSE) is Verdict.FAIL


def test_broken_coproduct_fails_counit() -> None:
    H = group_algebra(QQ, 3)
    bad = with_tensor(H, "delta", bump(H.delta, (0, 1, 2)))
    report = verify_quasi_hopf(bad)
    assert report.verdict_of(Identity.COUNIT_LEFT) is Verdict.FAIL
    assert report.verdict_of(Identity.COUNIT_RIGHT) is Verdict.FAIL


def test_associator_breaking_the_pentagon() -> None:
    H = group_algebra(QQ, 2)
    one, g = H.unit, Tensor.basis(QQ, (2,), (1,))
    # 1⊗g⊗1 is its own inverse but not a 3-cocycle
    phi = outer(one, g, one)
    bad = with_tensor(with_tensor(H, "phi", phi), "phi_inv", phi)
    report = verify_quasi_hopf(bad)
    assert report.verdict_of(Identity.ASSOCIATOR_INVERSE) is Verdict.PASS
    assert report.verdict_of_tag("q3") is Verdict.FAIL
    (pentagon,) = report.find(Identity.PENTAGON)
    # one side is 1⊗1⊗1⊗1, the other 1⊗g⊗g⊗1
    assert pentagon.witness == (0, 0, 0, 0)
    assert pentagon.lhs == [1] and pentagon.rhs == [0]
    entries = {entry["id"]: entry for entry in report.identities()}
    assert entries["q3"]["failure"]["witness"] == [0, 0, 0, 0]
    # S(X¹)αX²βS(X³) = g and (ε⊗id⊗id)(Φ) = g⊗1 as well
    assert entries["q4"]["verdict"] == entries["q6"]["verdict"] == "fail"
    assert entries["q1"]["verdict"] == entries["q2"]["verdict"] == "pass"


def test_left_multiplication_is_not_a_module_algebra() -> None:
    H = sweedler(QQ)
    report = verify_module_algebra(H, LeftModuleAlgebraData(H.algebra, H.mu))
    assert not report.passed
    (multiplicative,) = report.find(Identity.ACTION_MULTIPLICATIVE)
    # g·(1·1) = g but (g·1)(g·1) = 1
    assert multiplicative.witness == (1, 0, 0)
    assert multiplicative.lhs == [0, 1, 0, 0] and multiplicative.rhs == [1, 0, 0, 0]
    assert report.verdict_of(Identity.ACTION_UNIT) is Verdict.FAIL


def test_regular_action_and_coproduct_are_not_yetter_drinfeld() -> None:
    H = sweedler(QQ)
    report = verify_yd(H, YetterDrinfeldModuleData(H.mu, H.delta))
    assert report.verdict_of(Identity.YD_COASSOCIATIVITY) is Verdict.PASS
    assert report.verdict_of_tag("yd3") is Verdict.FAIL
    (compatibility,) = report.find(Identity.YD_COMPATIBILITY)
    # h = g, m = 1: g⊗g on the left, 1⊗g on the right
    assert compatibility.witness == (1, 0)


def test_create_normalizes_alpha() -> None:
    H = group_algebra(QQ, 2)
    one = H.unit
    rescaled = QuasiHopfAlgebraData.create(
        H.algebra, H.delta, H.counit, H.phi, H.antipode, one.scale(2), one.scale(Fraction(1, 2))
    )
    assert rescaled.alpha.equals(one)
    assert rescaled.beta.equals(one)
    assert verify_quasi_hopf(rescaled).passed


@pytest.mark.parametrize("over", ["group-algebra", "sweedler", "quasi-kz2-twisted"])
def test_graded_yd_algebra(over: str) -> None:
    H, A = graded_yd_algebra(QQ, over)
    assert verify_yd(H, A).passed
    report = verify_yd_algebra(H, A)
    assert report.passed, report.summary()


@pytest.mark.parametrize("over", ["group-algebra", "quasi-kz2-twisted"])
def test_smash_product_is_associative(over: str) -> None:
    H, A = graded_yd_algebra(QQ, over)
    smash = build_smash(H, A.module_algebra)
    assert smash.dim == 4
    assert verify_algebra(smash).passed
    # 1#1 is the unit, flattened as a·dim H + h
    assert smash.unit.equals(Tensor.basis(QQ, (4,), (0,)))


def test_smash_product_needs_module_algebra() -> None:
    H, A = graded_yd_algebra(QQ, "group-algebra")
    broken = LeftModuleAlgebraData(A.algebra, Tensor.zeros(QQ, A.action.shape))
    with pytest.raises(PreconditionError):
        build_smash(H, broken)


def test_smash_coaction_criterion() -> None:
    H, A = graded_yd_algebra(QQ, "group-algebra")
    report = smash_coaction_criterion(H, A)
    assert report.verdict_of(Identity.SMASH_COACTION_CRITERION) is Verdict.PASS


@pytest.mark.parametrize("H", [group_algebra(QQ, 2), sweedler(QQ), twisted_dual_group_algebra(QQ)])
def test_coinvariants_of_regular_bimodule_are_scalars(H: QuasiHopfAlgebraData) -> None:
    M = bimodule_from_bicomodule_algebra(H, regular_bicomodule(H))
    coinvariants = coinvariants_projector(H, M)
    assert coinvariants.splitting.rank == 1
    assert coinvariants.report.passed
    assert coinvariants.report.verdict_of(Identity.PROJECTOR_IDEMPOTENT) is Verdict.PASS


@pytest.mark.parametrize("H", [group_algebra(QQ, 2), twisted_dual_group_algebra(QQ)])
def test_round_trip_of_trivial_module(H: QuasiHopfAlgebraData) -> None:
    decomposition, report = schauenburg_round_trip(H, trivial_algebra(H))
    assert report.passed, report.summary()
    assert decomposition.module.dim == 1
    assert decomposition.nu.domain_dim == H.dim


@pytest.mark.parametrize("H", [group_algebra(QQ, 2), twisted_dual_group_algebra(QQ)])
def test_structure_theorem_on_regular_bicomodule(H: QuasiHopfAlgebraData) -> None:
    B = regular_bicomodule(H)
    assert verify_bicomodule_algebra(H, B).passed
    theorem = structure_theorem_quasi(H, B)
    assert theorem.coinvariants.dim == 1
    assert theorem.psi.domain_dim == theorem.psi.codomain_dim == H.dim
    assert theorem.report.passed


def test_structure_theorem_needs_v() -> None:
    H = group_algebra(QQ, 2)
    with pytest.raises(PreconditionError):
        structure_theorem_quasi(H, regular_bicomodule(H).without_v())

"""Single-entry perturbations of catalog algebras must be caught by verification."""

from pathlib import Path
from typing import Callable, List, Tuple

import pytest

from hopfkit.braided import BraidedHopfAlgebraData, verify_braided_hopf
from hopfkit.catalog import (
    build_example,
    group_algebra,
    groupoid_algebra,
    sweedler,
    target_algebra,
    twisted_dual_group_algebra,
)
from hopfkit.field import QQ
from hopfkit.identities import Identity
from hopfkit.quasi_hopf import YetterDrinfeldModuleData, verify_quasi_hopf
from hopfkit.report import Report, Verdict
from hopfkit.weak_hopf import (
    WeakHopfAlgebraData,
    regular_weak_bicomodule,
    verify_weak_comodule_algebra,
    verify_weak_hopf,
    verify_weak_yd,
)

try:
    from ..common.algebra_utils import (
        BRAIDED_TENSORS,
        QUASI_TENSORS,
        WEAK_TENSORS,
        HopfData,
        bump,
        single_entry_mutations,
        tensor_mutations,
        with_tensor,
    )
except ImportError:
    import sys

    sys.path.insert(0, str(Path(__file__).parent.parent))
    from common.algebra_utils import (
        BRAIDED_TENSORS,
        QUASI_TENSORS,
        WEAK_TENSORS,
        HopfData,
        bump,
        single_entry_mutations,
        tensor_mutations,
        with_tensor,
    )

pytestmark = pytest.mark.slow

# share of perturbed copies that must fail at least one identity
DETECTION_RATE = 0.95

Verifier = Callable[[HopfData], Report]

UNIT_FORMS = (Identity.LEFT_UNIT_SOURCE, Identity.LEFT_UNIT_COPRODUCT, Identity.LEFT_UNIT_IN_SOURCE)
YD_FORMS = (Identity.WEAK_YD_COMPATIBILITY, Identity.WEAK_YD_CONJUGATION)


def _verify(H: HopfData) -> Report:
    if isinstance(H, WeakHopfAlgebraData):
        return verify_weak_hopf(H)
    assert not isinstance(H, BraidedHopfAlgebraData)
    return verify_quasi_hopf(H)


def _plain(H: HopfData) -> Tuple[HopfData, Verifier]:
    return H, _verify


def _braided(name: str, generators: int) -> Tuple[HopfData, Verifier]:
    example = build_example(name, {"generators": generators})
    ctx = example.context
    assert ctx is not None

    def verify(H: HopfData) -> Report:
        assert isinstance(H, BraidedHopfAlgebraData)
        return verify_braided_hopf(ctx, H)

    return example.hopf, verify


@pytest.mark.parametrize(
    "build, names",
    [
        (lambda: _plain(group_algebra(QQ, 3)), QUASI_TENSORS),
        (lambda: _plain(sweedler(QQ)), QUASI_TENSORS),
        (lambda: _plain(twisted_dual_group_algebra(QQ)), QUASI_TENSORS),
        (lambda: _plain(groupoid_algebra(QQ, 1, 3)), WEAK_TENSORS),
        (lambda: _plain(groupoid_algebra(QQ, 2, 1)), WEAK_TENSORS),
        (lambda: _braided("exterior-algebra", 2), BRAIDED_TENSORS),
        (lambda: _braided("exterior-algebra-yd", 1), BRAIDED_TENSORS),
    ],
    ids=["kz3", "sweedler", "twisted", "groupoid-1-3", "groupoid-2-1", "exterior-super", "exterior-yd"],
)
def test_mutations_are_detected(build: Callable[[], Tuple[HopfData, Verifier]], names: Tuple[str, ...]) -> None:
    H, verify = build()
    assert verify(H).passed
    missed: List[str] = []
    total = 0
    for label, mutated in single_entry_mutations(H, names):
        total += 1
        if verify(mutated).passed:
            missed.append(label)
    assert total > 0
    assert len(missed) <= (1 - DETECTION_RATE) * total, f"undetected: {missed}"


def _forms_share_a_verdict(report: Report, forms: Tuple[Identity, ...], agree: Identity, label: str) -> None:
    verdicts = {report.verdict_of(identity) for identity in forms}
    assert len(verdicts) == 1, f"{label}: {report.summary()}"
    assert report.verdict_of(agree) is not Verdict.FAIL, f"{label}: {report.summary()}"


@pytest.mark.parametrize("objects, order", [(2, 1), (2, 2), (3, 1)])
def test_unit_forms_share_a_verdict(objects: int, order: int) -> None:
    H, A = target_algebra(QQ, objects, order)
    for index, coaction in tensor_mutations(A.coaction):
        report = verify_weak_comodule_algebra(H, A.algebra, coaction, "left")
        _forms_share_a_verdict(report, UNIT_FORMS, Identity.LEFT_UNIT_FORMS_AGREE, f"coaction{list(index)}")


def test_unit_forms_share_a_verdict_on_the_regular_coaction() -> None:
    H = groupoid_algebra(QQ, 2, 1)
    B = regular_weak_bicomodule(H)
    for index, coaction in tensor_mutations(B.left):
        report = verify_weak_comodule_algebra(H, B.algebra, coaction, "left")
        _forms_share_a_verdict(report, UNIT_FORMS, Identity.LEFT_UNIT_FORMS_AGREE, f"delta{list(index)}")


@pytest.mark.parametrize("objects, order", [(2, 1), (2, 2)])
def test_yd_forms_share_a_verdict(objects: int, order: int) -> None:
    H, A = target_algebra(QQ, objects, order)
    mutations = [(f"action{list(i)}", YetterDrinfeldModuleData(t, A.coaction)) for i, t in tensor_mutations(A.action)]
    mutations += [
        (f"coaction{list(i)}", YetterDrinfeldModuleData(A.action, t)) for i, t in tensor_mutations(A.coaction)
    ]
    for label, M in mutations:
        _forms_share_a_verdict(verify_weak_yd(H, M), YD_FORMS, Identity.WEAK_YD_FORMS_AGREE, label)


@pytest.mark.parametrize("index", [(0, 0), (1, 0), (2, 3), (3, 3)])
def test_every_antipode_inverse_entry_matters(index: Tuple[int, int]) -> None:
    H = sweedler(QQ)
    report = verify_quasi_hopf(with_tensor(H, "antipode_inv", bump(H.antipode_inv, index)))
    assert report.verdict_of(Identity.ANTIPODE_INVERSE) is Verdict.FAIL


@pytest.mark.parametrize("index", [(0, 0, 0), (1, 1, 1), (0, 1, 0)])
def test_every_associator_entry_matters(index: Tuple[int, int, int]) -> None:
    H = twisted_dual_group_algebra(QQ)
    report = verify_quasi_hopf(with_tensor(H, "phi", bump(H.phi, index)))
    assert not report.passed
    assert report.verdict_of(Identity.ASSOCIATOR_INVERSE) is Verdict.FAIL

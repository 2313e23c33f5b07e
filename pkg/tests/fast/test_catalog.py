"""Tests for the example catalog: listing, parameters and verification of every entry."""

import pytest

from hopfkit.braided import BraidedBicomoduleAlgebraData, BraidedModuleAlgebraData
from hopfkit.catalog import ENTRIES, HOPF_BASES, YD_ALGEBRAS, Params, build_example, list_examples, verify_example
from hopfkit.exceptions import ExampleParameterError, UnknownExampleError
from hopfkit.field import PrimeField
from hopfkit.identities import TAG_TABLES
from hopfkit.quasi_hopf import QuasiBicomoduleAlgebraData
from hopfkit.weak_hopf import WeakBicomoduleAlgebraData

try:
    from ..common.algebra_utils import EQUATION_TAGS
except ImportError:
    import sys
    from pathlib import Path

    sys.path.insert(0, str(Path(__file__).parent.parent))
    from common.algebra_utils import EQUATION_TAGS

pytestmark = pytest.mark.fast


def test_list_is_sorted_and_complete() -> None:
    names = [entry.name for entry in list_examples()]
    assert names == sorted(names)
    assert set(names) == set(ENTRIES)
    assert "sweedler" in HOPF_BASES and "groupoid" in HOPF_BASES
    assert "graded-yd-algebra" in YD_ALGEBRAS and "groupoid" not in YD_ALGEBRAS


@pytest.mark.parametrize("name", sorted(ENTRIES))
def test_every_entry_builds_and_verifies(name: str) -> None:
    example = build_example(name)
    assert example.kind == ENTRIES[name].kind
    assert (example.structure is None) == (example.kind in ("quasi-hopf", "weak-hopf", "braided-hopf"))
    assert (example.context is not None) == (example.variant == "braided")
    report = verify_example(example)
    assert report.passed, report.summary()
    ids = [entry["id"] for entry in report.identities()]
    assert ids, "no labelled identity was checked"
    assert set(ids) <= EQUATION_TAGS


@pytest.mark.parametrize("setting", sorted(TAG_TABLES))
def test_tag_tables_use_equation_labels(setting: str) -> None:
    table = TAG_TABLES[setting]
    assert table
    assert set(table.values()) <= EQUATION_TAGS


@pytest.mark.parametrize(
    "name, params, dim",
    [
        ("group-algebra", {"n": 5}, 5),
        ("group-algebra", {"n": "3"}, 3),
        ("dual-group-algebra", {"n": 4}, 4),
        ("groupoid", {"objects": 2, "order": 2}, 8),
        ("exterior-algebra", {"generators": 2}, 4),
        ("graded-yd-algebra", {"over": "sweedler"}, 2),
        ("graded-yd-algebra", {"over": "group-algebra", "n": 4}, 2),
        ("trivial-algebra", {"over": "sweedler"}, 1),
        ("target-algebra", {"objects": 3}, 3),
        ("smash-bicomodule", {}, 4),
        ("smash-bicomodule", {"algebra": "target-algebra"}, 4),
        ("regular-bicomodule", {"over": "groupoid", "objects": 1, "order": 3}, 3),
    ],
)
def test_parameters(name: str, params: Params, dim: int) -> None:
    assert build_example(name, params).dim == dim


@pytest.mark.parametrize(
    "over, structure",
    [
        ("group-algebra", QuasiBicomoduleAlgebraData),
        ("groupoid", WeakBicomoduleAlgebraData),
        ("exterior-algebra", BraidedBicomoduleAlgebraData),
    ],
)
def test_regular_bicomodule_follows_its_base(over: str, structure: type) -> None:
    example = build_example("regular-bicomodule", {"over": over})
    assert isinstance(example.structure, structure)
    assert example.dim == example.hopf.dim


def test_braided_module_algebra() -> None:
    example = build_example("module-algebra", {"algebra": "super-yd-algebra"})
    assert example.variant == "braided"
    assert isinstance(example.structure, BraidedModuleAlgebraData)


def test_prime_field() -> None:
    example = build_example("sweedler", field=PrimeField(3))
    assert example.field == PrimeField(3)
    assert verify_example(example).passed


def test_unknown_example() -> None:
    with pytest.raises(UnknownExampleError):
        build_example("taft-algebra")


@pytest.mark.parametrize(
    "name, params",
    [
        ("sweedler", {"n": 2}),
        ("group-algebra", {"n": "two"}),
        ("group-algebra", {"n": 0}),
        ("groupoid", {"objects": 0}),
        ("graded-yd-algebra", {"n": 3}),
        ("graded-yd-algebra", {"over": "groupoid"}),
        ("super-yd-algebra", {"derivation": 2}),
        ("regular-bicomodule", {"over": "trivial-algebra"}),
        ("module-algebra", {"algebra": "sweedler"}),
        ("smash-bicomodule", {"algebra": "groupoid"}),
        ("trivial-algebra", {"over": "groupoid"}),
    ],
)
def test_bad_parameters(name: str, params: Params) -> None:
    with pytest.raises(ExampleParameterError):
        build_example(name, params)


@pytest.mark.parametrize("name", ["sweedler", "quasi-kz2-twisted", "exterior-algebra"])
def test_characteristic_two_is_rejected(name: str) -> None:
    with pytest.raises(ExampleParameterError):
        build_example(name, field=PrimeField(2))

"""Tests for reading and writing algebra documents."""

import copy
import json
from pathlib import Path
from typing import Callable

import pytest

from hopfkit.catalog import build_example, verify_example
from hopfkit.core import identity_map
from hopfkit.exceptions import AlgebraFileError, DimensionLimitError
from hopfkit.field import QQ, PrimeField
from hopfkit.files import (
    Document,
    dumps,
    example_document,
    hopf_document,
    isomorphism_document,
    load_document,
    read_example,
    write_document,
)
from hopfkit.identities import Identity
from hopfkit.report import Verdict

pytestmark = pytest.mark.fast


@pytest.fixture
def sweedler_doc() -> Document:
    return example_document(build_example("sweedler"))


@pytest.mark.parametrize("name", ["sweedler", "smash-bicomodule", "exterior-algebra-yd", "target-algebra"])
def test_documents_reload_to_the_same_example(name: str) -> None:
    doc = example_document(build_example(name))
    loaded = load_document(json.loads(dumps(doc)))
    assert loaded.kind == doc["kind"]
    assert verify_example(loaded).passed
    # writing the loaded example reproduces the bytes
    assert dumps(example_document(loaded)) == dumps(doc)


def test_scalars_are_canonical_strings(sweedler_doc: Document) -> None:
    # S(x) = −gx: column x (index 2), row gx (index 3)
    assert sweedler_doc["tensors"]["antipode"][3][2] == "-1/1"
    assert sweedler_doc["tensors"]["counit"] == ["1/1", "1/1", "0/1", "0/1"]
    assert sweedler_doc["basis"] == ["e0", "e1", "e2", "e3"]
    assert sweedler_doc["field"] == {"kind": "rational"}


def test_prime_field_scalars_are_integers() -> None:
    doc = example_document(build_example("group-algebra", {"n": 3}, PrimeField(5)))
    assert doc["field"] == {"kind": "prime", "p": 5}
    assert doc["tensors"]["counit"] == [1, 1, 1]


def test_dependent_documents_embed_their_hopf_algebra() -> None:
    doc = example_document(build_example("graded-yd-algebra"))
    assert doc["kind"] == "yd-module" and doc["variant"] == "quasi"
    assert doc["hopf"]["kind"] == "quasi-hopf"
    assert set(doc["tensors"]) == {"action", "coaction", "mu", "unit"}


def test_braided_documents_carry_context_and_object() -> None:
    doc = example_document(build_example("exterior-algebra"))
    assert doc["context"] == {"kind": "super"}
    assert doc["object"] == {"grading": [0, 1]}
    yd = example_document(build_example("exterior-algebra-yd"))
    assert yd["context"]["base"]["kind"] == "quasi-hopf"


def test_braided_hopf_needs_context() -> None:
    example = build_example("exterior-algebra")
    with pytest.raises(AlgebraFileError):
        hopf_document(example.hopf)


def test_mutated_associator_inverse_loads_and_fails() -> None:
    doc = example_document(build_example("quasi-kz2-twisted"))
    doc["tensors"]["phi_inv"][0][1][1] = "2/1"
    loaded = load_document(doc)
    assert verify_example(loaded).verdict_of(Identity.ASSOCIATOR_INVERSE) is Verdict.FAIL


@pytest.mark.parametrize(
    "edit, message",
    [
        (lambda d: d.pop("tensors"), "$: missing key 'tensors'"),
        (lambda d: d.update(format=2), "$.format"),
        (lambda d: d.update(kind="hopf"), "$.kind"),
        (lambda d: d.update(field={"kind": "real"}), "$.field"),
        (lambda d: d["tensors"]["unit"].__setitem__(1, "0.5"), "$.tensors.unit[1]"),
        (lambda d: d["tensors"]["unit"].__setitem__(1, 0.5), "$.tensors.unit[1]"),
        (lambda d: d["tensors"].update(unit=["1/1"]), "$.tensors.unit"),
        (lambda d: d["tensors"].pop("phi"), "missing tensor 'phi'"),
        (lambda d: d.update(basis="e0 e1 e2 e3"), "$.basis"),
    ],
)
def test_malformed_documents(sweedler_doc: Document, edit: Callable[[Document], object], message: str) -> None:
    doc = copy.deepcopy(sweedler_doc)
    edit(doc)
    with pytest.raises(AlgebraFileError) as excinfo:
        load_document(doc)
    assert message in str(excinfo.value)


def test_dependent_document_checks_variant_and_field() -> None:
    doc = example_document(build_example("graded-yd-algebra"))
    wrong_variant = copy.deepcopy(doc)
    wrong_variant["variant"] = "weak"
    with pytest.raises(AlgebraFileError, match=r"\$\.hopf\.kind"):
        load_document(wrong_variant)
    wrong_field = copy.deepcopy(doc)
    wrong_field["hopf"]["field"] = {"kind": "prime", "p": 3}
    with pytest.raises(AlgebraFileError, match=r"\$\.hopf\.field"):
        load_document(wrong_field)


def test_dimension_limit(sweedler_doc: Document) -> None:
    assert load_document(sweedler_doc, max_dim=4).dim == 4
    with pytest.raises(DimensionLimitError):
        load_document(sweedler_doc, max_dim=3)


def test_read_and_write(tmp_path: Path, sweedler_doc: Document) -> None:
    path = tmp_path / "sweedler.json"
    write_document(path, sweedler_doc)
    text = path.read_text()
    assert text.endswith("}\n")
    assert text.index('"basis"') < text.index('"tensors"')
    assert read_example(path).dim == 4


def test_read_errors_name_the_file(tmp_path: Path) -> None:
    missing = tmp_path / "missing.json"
    with pytest.raises(AlgebraFileError, match="missing.json"):
        read_example(missing)
    broken = tmp_path / "broken.json"
    broken.write_text('{"format": 1,')
    with pytest.raises(AlgebraFileError, match="broken.json:1:"):
        read_example(broken)
    listed = tmp_path / "list.json"
    listed.write_text("[]")
    with pytest.raises(AlgebraFileError, match=r"list.json: \$: expected an object"):
        read_example(listed)


def test_isomorphism_document() -> None:
    iso = identity_map(QQ, (2,))
    doc = isomorphism_document(QQ, "quasi", (1, 2), iso, iso)
    assert doc["coinvariants"] == 1 and doc["hopf"] == 2
    assert doc["domain"] == doc["codomain"] == 2
    assert doc["matrix"] == [["1/1", "0/1"], ["0/1", "1/1"]]

"""
The on-disk algebra format.

An algebra file is a JSON object::

    {
      "format": 1,
      "field": {"kind": "rational"},
      "kind": "quasi-hopf",
      "name": "sweedler",
      "basis": ["e0", "e1", "e2", "e3"],
      "tensors": {"mu": [...], "unit": [...], ...}
    }

Scalars are canonical rational strings "p/q" (or integers mod p for a prime
field), so a file never holds a float. Dependent kinds (module-algebra,
yd-module, bicomodule-algebra) carry a ``variant`` and embed the full
document of their Hopf algebra under ``hopf``; braided documents carry a
``context`` block and an ``object`` block describing the carrier.

Tensor axes follow the library layouts: ``mu[out, left, right]``,
``delta[h1, h2, h]``, ``antipode[out, in]``, ``action[out, h, m]``,
``coaction[h, out, m]`` (left) and ``right[b_out, h, b]``.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union, cast

import numpy as np

from .algebra import AlgebraData
from .braided import (
    BraidedBicomoduleAlgebraData,
    BraidedContext,
    BraidedHopfAlgebraData,
    BraidedModuleAlgebraData,
    BraidedObject,
    BraidedYDData,
)
from .catalog import Example, HopfData, Kind, StructureData, Variant
from .core import LinearMap, Tensor
from .exceptions import AlgebraFileError, DimensionLimitError
from .field import Field, field_from_tag
from .quasi_hopf import (
    LeftModuleAlgebraData,
    QuasiBicomoduleAlgebraData,
    QuasiHopfAlgebraData,
    YetterDrinfeldAlgebraData,
    YetterDrinfeldModuleData,
)
from .weak_hopf import WeakBicomoduleAlgebraData, WeakHopfAlgebraData

FORMAT_VERSION = 1

Document = Dict[str, Any]

HOPF_KIND_OF_VARIANT: Dict[str, Kind] = {"quasi": "quasi-hopf", "weak": "weak-hopf", "braided": "braided-hopf"}
VARIANT_OF_HOPF_KIND: Dict[str, Variant] = {kind: variant for variant, kind in HOPF_KIND_OF_VARIANT.items()}
DEPENDENT_KINDS = ("module-algebra", "yd-module", "bicomodule-algebra")


# scalars and tensors


def encode_tensor(tensor: Tensor) -> Any:
    """Nested lists of serialized scalars."""
    return np.frompyfunc(tensor.field.format, 1, 1)(tensor.data).tolist()


def decode_tensor(field: Field, value: Any, shape: Sequence[int], path: str) -> Tensor:
    try:
        raw = np.array(value, dtype=object)
    except ValueError as e:
        raise AlgebraFileError(f"{path}: ragged array: {e}") from e
    if raw.shape != tuple(shape):
        raise AlgebraFileError(f"{path}: expected shape {tuple(shape)}, got {raw.shape}")
    data = field.zeros(tuple(shape))
    for index in np.ndindex(*raw.shape):
        try:
            data[index] = field.parse(raw[index])
        except AlgebraFileError as e:
            location = "".join(f"[{i}]" for i in index)
            raise AlgebraFileError(f"{path}{location}: {e}") from e
    return Tensor(field, data)


def encode_map(f: LinearMap) -> Any:
    return np.frompyfunc(f.field.format, 1, 1)(f.matrix).tolist()


# writing


def _basis(dim: int) -> List[str]:
    return [f"e{i}" for i in range(dim)]


def _header(field: Field, kind: str, name: str, dim: int) -> Document:
    return {"format": FORMAT_VERSION, "field": field.tag, "kind": kind, "name": name, "basis": _basis(dim)}


def _algebra_tensors(algebra: AlgebraData) -> Document:
    return {"mu": encode_tensor(algebra.mu), "unit": encode_tensor(algebra.unit)}


def _object_block(obj: BraidedObject) -> Document:
    block: Document = {}
    if obj.grading is not None:
        block["grading"] = list(obj.grading)
    if obj.action is not None:
        block["action"] = encode_tensor(obj.action)
    if obj.coaction is not None:
        block["coaction"] = encode_tensor(obj.coaction)
    return block


def _context_block(ctx: BraidedContext) -> Document:
    block: Document = {"kind": ctx.kind}
    if ctx.base is not None:
        block["base"] = hopf_document(ctx.base, name="base")
    return block


def hopf_document(H: HopfData, ctx: Optional[BraidedContext] = None, name: str = "hopf") -> Document:
    """The document of a quasi-, weak or braided Hopf algebra."""
    if isinstance(H, QuasiHopfAlgebraData):
        doc = _header(H.field, "quasi-hopf", name, H.dim)
        doc["tensors"] = {
            **_algebra_tensors(H.algebra),
            "delta": encode_tensor(H.delta),
            "counit": encode_tensor(H.counit),
            "phi": encode_tensor(H.phi),
            "phi_inv": encode_tensor(H.phi_inv),
            "antipode": encode_tensor(H.antipode),
            "antipode_inv": encode_tensor(H.antipode_inv),
            "alpha": encode_tensor(H.alpha),
            "beta": encode_tensor(H.beta),
        }
        return doc
    kind: Kind = "weak-hopf" if isinstance(H, WeakHopfAlgebraData) else "braided-hopf"
    doc = _header(H.field, kind, name, H.dim)
    doc["tensors"] = {
        **_algebra_tensors(H.algebra),
        "delta": encode_tensor(H.delta),
        "counit": encode_tensor(H.counit),
        "antipode": encode_tensor(H.antipode),
        "antipode_inv": encode_tensor(H.antipode_inv),
    }
    if isinstance(H, BraidedHopfAlgebraData):
        if ctx is None:
            raise AlgebraFileError(f"braided Hopf algebra {name!r} needs a context to be written")
        doc["context"] = _context_block(ctx)
        doc["object"] = _object_block(H.obj)
    return doc


def _structure_tensors(S: StructureData) -> Tuple[Document, Optional[BraidedObject], int]:
    tensors: Document = {}
    if isinstance(S, YetterDrinfeldModuleData):
        tensors = {"action": encode_tensor(S.action), "coaction": encode_tensor(S.coaction)}
        if isinstance(S, YetterDrinfeldAlgebraData):
            tensors.update(_algebra_tensors(S.algebra))
        return tensors, None, S.dim
    if isinstance(S, BraidedYDData):
        tensors = {"action": encode_tensor(S.action), "coaction": encode_tensor(S.coaction)}
        if S.algebra is not None:
            tensors.update(_algebra_tensors(S.algebra))
        return tensors, S.obj, S.dim
    if isinstance(S, (LeftModuleAlgebraData, BraidedModuleAlgebraData)):
        tensors = {**_algebra_tensors(S.algebra), "action": encode_tensor(S.action)}
        return tensors, S.obj if isinstance(S, BraidedModuleAlgebraData) else None, S.dim
    tensors = {**_algebra_tensors(S.algebra), "right": encode_tensor(S.right)}
    if S.left is not None:
        tensors["left"] = encode_tensor(S.left)
    if S.v is not None:
        tensors["v"] = encode_tensor(S.v)
    if isinstance(S, QuasiBicomoduleAlgebraData):
        tensors["phi_left"] = encode_tensor(S.phi_left)
        tensors["phi_right"] = encode_tensor(S.phi_right)
        tensors["phi_both"] = encode_tensor(S.phi_both)
    return tensors, S.obj if isinstance(S, BraidedBicomoduleAlgebraData) else None, S.dim


def example_document(example: Example) -> Document:
    """The document of a catalog or computed example; dependent kinds embed their Hopf algebra."""
    hopf = hopf_document(example.hopf, example.context, example.name if example.structure is None else "hopf")
    if example.structure is None:
        return hopf
    tensors, obj, dim = _structure_tensors(example.structure)
    doc = _header(example.field, example.kind, example.name, dim)
    doc["variant"] = example.variant
    doc["hopf"] = hopf
    doc["tensors"] = tensors
    if obj is not None:
        doc["object"] = _object_block(obj)
    return doc


def isomorphism_document(
    field: Field, variant: Variant, dims: Tuple[int, int], iso: LinearMap, inverse: LinearMap
) -> Document:
    """
    The certified isomorphism A#H → B with its inverse.

    The domain basis is (a, h) ↦ a·dim H + h for the quasi and braided
    smash products, and the quotient basis of A⊗_{H_t}H in the weak case.
    """
    return {
        "format": FORMAT_VERSION,
        "field": field.tag,
        "variant": variant,
        "coinvariants": dims[0],
        "hopf": dims[1],
        "domain": iso.domain_dim,
        "codomain": iso.codomain_dim,
        "matrix": encode_map(iso),
        "inverse": encode_map(inverse),
    }


def dumps(doc: Document) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def write_document(path: Union[str, Path], doc: Document) -> None:
    logger = logging.getLogger(__name__)
    Path(path).write_text(dumps(doc), encoding="utf-8")
    logger.info(f"wrote {path}")


# reading


class _Reader:
    """Walks one document, tracking the JSON path for error messages."""

    def __init__(self, doc: Any, path: str, field: Optional[Field], max_dim: Optional[int]):
        if not isinstance(doc, dict):
            raise AlgebraFileError(f"{path}: expected an object, got {type(doc).__name__}")
        self.doc: Document = doc  # type: ignore[assignment]
        self.path = path
        self.max_dim = max_dim
        version = self.get("format")
        if version != FORMAT_VERSION:
            raise AlgebraFileError(f"{path}.format: unsupported format version {version!r}")
        try:
            own = field_from_tag(self.get("field"))
        except AlgebraFileError as e:
            raise AlgebraFileError(f"{path}.field: {e}") from e
        if field is not None and own != field:
            raise AlgebraFileError(f"{path}.field: {own.tag} differs from the enclosing document's {field.tag}")
        self.field = own
        basis: List[Any] = self.get("basis") if isinstance(self.get("basis"), list) else [None]
        if not all(isinstance(label, str) for label in basis):
            raise AlgebraFileError(f"{path}.basis: expected a list of labels")
        self.dim = len(basis)
        self.check_dim(self.dim, f"{path}.basis")

    def get(self, key: str) -> Any:
        if key not in self.doc:
            raise AlgebraFileError(f"{self.path}: missing key {key!r}")
        return self.doc[key]

    def check_dim(self, dim: int, where: str) -> None:
        if self.max_dim is not None and dim > self.max_dim:
            raise DimensionLimitError(f"{where}: dimension {dim} exceeds the limit {self.max_dim} (HOPFKIT_MAX_DIM)")

    @property
    def kind(self) -> str:
        kind = self.get("kind")
        if not isinstance(kind, str):
            raise AlgebraFileError(f"{self.path}.kind: expected a string")
        return kind

    @property
    def name(self) -> str:
        return str(self.doc.get("name", "algebra"))

    def _tensors(self) -> Document:
        tensors = self.get("tensors")
        if not isinstance(tensors, dict):
            raise AlgebraFileError(f"{self.path}.tensors: expected an object")
        return tensors  # type: ignore[return-value]

    def has(self, name: str) -> bool:
        return name in self._tensors()

    def tensor(self, name: str, shape: Sequence[int]) -> Tensor:
        tensors = self._tensors()
        if name not in tensors:
            raise AlgebraFileError(f"{self.path}.tensors: missing tensor {name!r}")
        return decode_tensor(self.field, tensors[name], shape, f"{self.path}.tensors.{name}")

    def optional(self, name: str, shape: Sequence[int]) -> Optional[Tensor]:
        return self.tensor(name, shape) if self.has(name) else None

    def algebra(self) -> AlgebraData:
        n = self.dim
        return AlgebraData(self.tensor("mu", (n, n, n)), self.tensor("unit", (n,)))

    def child(self, key: str) -> "_Reader":
        return _Reader(self.get(key), f"{self.path}.{key}", self.field, self.max_dim)


def _read_context(reader: _Reader) -> BraidedContext:
    if not isinstance(reader.get("context"), dict):
        raise AlgebraFileError(f"{reader.path}.context: expected an object")
    block = cast(Document, reader.get("context"))
    kind = block.get("kind")
    if kind == "plain":
        return BraidedContext.plain(reader.field)
    if kind == "super":
        return BraidedContext.supervector(reader.field)
    if kind == "yd":
        base_reader = _Reader(block.get("base"), f"{reader.path}.context.base", reader.field, reader.max_dim)
        base = _read_hopf(base_reader)
        if not isinstance(base, QuasiHopfAlgebraData):
            raise AlgebraFileError(f"{base_reader.path}.kind: the base of a yd context must be quasi-hopf")
        return BraidedContext.yetter_drinfeld(base)
    raise AlgebraFileError(f"{reader.path}.context.kind: expected plain, super or yd, got {kind!r}")


def _read_object(reader: _Reader, ctx: BraidedContext, dim: int) -> BraidedObject:
    if ctx.kind == "plain":
        return ctx.object(dim)
    path = f"{reader.path}.object"
    if not isinstance(reader.get("object"), dict):
        raise AlgebraFileError(f"{path}: expected an object")
    block = cast(Document, reader.get("object"))
    if ctx.kind == "super":
        grading: List[Any] = block["grading"] if isinstance(block.get("grading"), list) else []
        if len(grading) != dim or not all(isinstance(g, int) for g in grading):
            raise AlgebraFileError(f"{path}.grading: expected {dim} integer parities")
        return ctx.graded_object(grading)
    assert ctx.base is not None
    d0 = ctx.base.dim
    for key in ("action", "coaction"):
        if key not in block:
            raise AlgebraFileError(f"{path}: missing {key!r}")
    action = decode_tensor(reader.field, block["action"], (dim, d0, dim), f"{path}.action")
    coaction = decode_tensor(reader.field, block["coaction"], (d0, dim, dim), f"{path}.coaction")
    return ctx.yd_object(action, coaction)


def _read_hopf(reader: _Reader) -> HopfData:
    d = reader.dim
    kind = reader.kind
    algebra = reader.algebra()
    delta, counit = reader.tensor("delta", (d, d, d)), reader.tensor("counit", (d,))
    antipode, antipode_inv = reader.tensor("antipode", (d, d)), reader.optional("antipode_inv", (d, d))
    if kind == "quasi-hopf":
        return QuasiHopfAlgebraData.create(
            algebra,
            delta,
            counit,
            reader.tensor("phi", (d, d, d)),
            antipode,
            reader.tensor("alpha", (d,)),
            reader.tensor("beta", (d,)),
            phi_inv=reader.optional("phi_inv", (d, d, d)),
            antipode_inv=antipode_inv,
        )
    if kind == "weak-hopf":
        return WeakHopfAlgebraData.create(algebra, delta, counit, antipode, antipode_inv)
    raise AlgebraFileError(f"{reader.path}.kind: expected a Hopf kind, got {kind!r}")


def _read_braided_hopf(reader: _Reader) -> Tuple[BraidedContext, BraidedHopfAlgebraData]:
    d = reader.dim
    ctx = _read_context(reader)
    obj = _read_object(reader, ctx, d)
    H = BraidedHopfAlgebraData.create(
        obj,
        reader.algebra(),
        reader.tensor("delta", (d, d, d)),
        reader.tensor("counit", (d,)),
        reader.tensor("antipode", (d, d)),
        reader.optional("antipode_inv", (d, d)),
    )
    return ctx, H


def _read_structure(reader: _Reader, kind: str, H: HopfData, ctx: Optional[BraidedContext]) -> StructureData:
    n, d = reader.dim, H.dim
    obj = _read_object(reader, ctx, n) if ctx is not None else None
    if kind == "module-algebra":
        action = reader.tensor("action", (n, d, n))
        if obj is not None:
            return BraidedModuleAlgebraData(obj, reader.algebra(), action)
        return LeftModuleAlgebraData(reader.algebra(), action)
    if kind == "yd-module":
        action, coaction = reader.tensor("action", (n, d, n)), reader.tensor("coaction", (d, n, n))
        algebra = reader.algebra() if reader.has("mu") else None
        if obj is not None:
            return BraidedYDData(obj, action, coaction, algebra)
        if algebra is not None:
            return YetterDrinfeldAlgebraData(action, coaction, algebra)
        return YetterDrinfeldModuleData(action, coaction)
    algebra = reader.algebra()
    right, v = reader.tensor("right", (n, d, n)), reader.optional("v", (n, d))
    if obj is not None:
        return BraidedBicomoduleAlgebraData(obj, algebra, reader.optional("left", (d, n, n)), right, v)
    left = reader.tensor("left", (d, n, n))
    if isinstance(H, WeakHopfAlgebraData):
        return WeakBicomoduleAlgebraData(algebra, left, right, v)
    assert isinstance(H, QuasiHopfAlgebraData)
    return QuasiBicomoduleAlgebraData.create(
        H,
        algebra,
        left,
        right,
        reader.tensor("phi_left", (d, d, n)),
        reader.tensor("phi_right", (n, d, d)),
        reader.tensor("phi_both", (d, n, d)),
        v,
    )


def load_document(doc: Any, max_dim: Optional[int] = None) -> Example:
    """
    Build an `Example` from a parsed document.

    Raises AlgebraFileError (with a JSON path) for malformed documents and
    DimensionLimitError for carriers larger than ``max_dim``. Construction
    failures that are mathematical (a singular associator, a base Hopf
    algebra failing its axioms) propagate as their own errors.
    """
    logger = logging.getLogger(__name__)
    reader = _Reader(doc, "$", None, max_dim)
    kind = reader.kind
    if kind in ("quasi-hopf", "weak-hopf"):
        example = Example(reader.name, cast(Kind, kind), VARIANT_OF_HOPF_KIND[kind], _read_hopf(reader))
    elif kind == "braided-hopf":
        ctx, B = _read_braided_hopf(reader)
        example = Example(reader.name, kind, "braided", B, ctx)
    elif kind in DEPENDENT_KINDS:
        variant = reader.get("variant")
        if variant not in HOPF_KIND_OF_VARIANT:
            raise AlgebraFileError(f"$.variant: expected quasi, weak or braided, got {variant!r}")
        hopf_reader = reader.child("hopf")
        if hopf_reader.kind != HOPF_KIND_OF_VARIANT[variant]:
            raise AlgebraFileError(f"$.hopf.kind: a {variant} {kind} needs a {HOPF_KIND_OF_VARIANT[variant]} algebra")
        ctx: Optional[BraidedContext] = None
        if variant == "braided":
            ctx, H = _read_braided_hopf(hopf_reader)
        else:
            H = _read_hopf(hopf_reader)
        structure = _read_structure(reader, kind, H, ctx)
        example = Example(reader.name, cast(Kind, kind), cast(Variant, variant), H, ctx, structure)
    else:
        raise AlgebraFileError(f"$.kind: unknown kind {kind!r}")
    logger.debug(f"loaded {example.name}: {example.kind} ({example.variant}) of dimension {example.dim}")
    return example


def read_example(path: Union[str, Path], max_dim: Optional[int] = None) -> Example:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise AlgebraFileError(f"{path}: {e.strerror}") from e
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise AlgebraFileError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from e
    try:
        return load_document(doc, max_dim)
    except AlgebraFileError as e:
        raise AlgebraFileError(f"{path}: {e}") from e

"""
Dense exact tensors, linear maps and the linear algebra built on them.

Conventions used everywhere in hopfkit:

- A structure map with outputs ``O1..Ok`` and inputs ``I1..Il`` is stored as
  a tensor of shape ``(O1, ..., Ok, I1, ..., Il)``: outputs first, like a
  matrix is stored codomain by domain.
- Tensor legs flatten row-major, so the pair of basis indices ``(i, j)`` of
  a product ``V⊗W`` is the flat index ``i·dim W + j``.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from math import prod
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import CertificationError, FieldMismatchError, NotIdempotentError, ShapeMismatchError, SingularMapError
from .field import Array, Field

Dims = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Tensor:
    """A dense multi-index array of exact scalars from one field."""

    field: Field
    data: Array

    def __post_init__(self) -> None:
        if not isinstance(self.data, np.ndarray) or self.data.dtype != object:
            object.__setattr__(self, "data", self.field.array(self.data))
        self.data.setflags(write=False)

    @classmethod
    def of(cls, field: Field, values: Any) -> "Tensor":
        return cls(field, field.array(values))

    @classmethod
    def zeros(cls, field: Field, shape: Sequence[int]) -> "Tensor":
        return cls(field, field.zeros(tuple(shape)))

    @classmethod
    def basis(cls, field: Field, shape: Sequence[int], index: Sequence[int]) -> "Tensor":
        data = field.zeros(tuple(shape))
        data[tuple(index)] = field.one
        return cls(field, data)

    @property
    def shape(self) -> Dims:
        return tuple(int(n) for n in self.data.shape)

    @property
    def ndim(self) -> int:
        return self.data.ndim

    def _check_same(self, other: "Tensor") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
        if other.shape != self.shape:
            raise ShapeMismatchError(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_same(other)
        return Tensor(self.field, self.data + other.data)

    def __sub__(self, other: "Tensor") -> "Tensor":
        self._check_same(other)
        return Tensor(self.field, self.data - other.data)

    def __neg__(self) -> "Tensor":
        return Tensor(self.field, -self.data)

    def scale(self, factor: Any) -> "Tensor":
        return Tensor(self.field, self.data * self.field.element(factor))

    def reshape(self, shape: Sequence[int]) -> "Tensor":
        shape = tuple(shape)
        if prod(shape) != prod(self.shape):
            raise ShapeMismatchError(f"cannot reshape {self.shape} to {shape}")
        return Tensor(self.field, self.data.reshape(shape))

    def transpose(self, axes: Sequence[int]) -> "Tensor":
        return Tensor(self.field, self.data.transpose(tuple(axes)))

    def mismatches(self, other: "Tensor") -> Array:
        """Boolean mask of entries where the tensors differ."""
        self._check_same(other)
        return np.not_equal(self.data, other.data).astype(bool)

    def equals(self, other: "Tensor") -> bool:
        return not bool(self.mismatches(other).any())

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.data.flat)

    def __getitem__(self, index: Any) -> Any:
        return self.data[index]

    def __repr__(self) -> str:
        return f"Tensor(shape={self.shape}, field={self.field.tag})"


def tensor_contract(a: Tensor, b: Tensor, pairs: Sequence[Tuple[int, int]]) -> Tensor:
    """
    Contract axis pairs of two tensors.

    The result keeps the uncontracted axes of ``a`` followed by those of ``b``,
    each in their original order.
    """
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")
    axes_a = [i for i, _ in pairs]
    axes_b = [j for _, j in pairs]
    for i, j in pairs:
        if not (0 <= i < a.ndim and 0 <= j < b.ndim):
            raise ShapeMismatchError(f"axis pair {(i, j)} out of range for shapes {a.shape}, {b.shape}")
        if a.shape[i] != b.shape[j]:
            raise ShapeMismatchError(f"axis {i} of {a.shape} does not match axis {j} of {b.shape}")
    if len(set(axes_a)) != len(axes_a) or len(set(axes_b)) != len(axes_b):
        raise ShapeMismatchError(f"repeated axis in {pairs}")
    kept = [a.shape[i] for i in range(a.ndim) if i not in axes_a] + [
        b.shape[j] for j in range(b.ndim) if j not in axes_b
    ]
    if any(a.shape[i] == 0 for i in axes_a):
        return Tensor.zeros(a.field, kept)
    data = np.tensordot(a.data, b.data, axes=(axes_a, axes_b))
    return Tensor(a.field, np.asarray(data, dtype=object).reshape(kept))


def contract(*terms: Tuple[Tensor, str], out: str = "") -> Tensor:
    """
    Evaluate a labelled tensor network.

    Each term is a tensor with a whitespace separated label per axis. A label
    shared by two terms is summed over; a label used once must appear in
    ``out``, which fixes the axis order of the result. Pairs are contracted
    greedily, smallest intermediate first.
    """
    logger = logging.getLogger(__name__)
    if not terms:
        raise ShapeMismatchError("empty contraction")
    field = terms[0][0].field
    items: List[Tuple[Tensor, List[str]]] = []
    dims: Dict[str, int] = {}
    for tensor, labels in terms:
        legs = labels.split()
        if len(legs) != tensor.ndim:
            raise ShapeMismatchError(f"labels {labels!r} do not match tensor of shape {tensor.shape}")
        if len(set(legs)) != len(legs):
            raise ShapeMismatchError(f"label repeated within one term: {labels!r}")
        if tensor.field != field:
            raise FieldMismatchError(f"{tensor.field!r} vs {field!r}")
        for leg, size in zip(legs, tensor.shape):
            if dims.setdefault(leg, size) != size:
                raise ShapeMismatchError(f"label {leg!r} has dimensions {dims[leg]} and {size}")
        items.append((tensor, legs))

    out_legs = out.split()
    counts = Counter(leg for _, legs in items for leg in legs)
    for leg, count in counts.items():
        if count > 2:
            raise ShapeMismatchError(f"label {leg!r} used {count} times")
        if (count == 1) != (leg in out_legs):
            raise ShapeMismatchError(f"label {leg!r} is {'free' if count == 1 else 'summed'} but out is {out!r}")
    if len(set(out_legs)) != len(out_legs) or any(leg not in counts for leg in out_legs):
        raise ShapeMismatchError(f"bad output labels {out!r}")

    def merged_size(x: List[str], y: List[str]) -> int:
        shared = set(x) & set(y)
        return prod(dims[leg] for leg in x + y if leg not in shared)

    while len(items) > 1:
        best: Optional[Tuple[int, int, int, bool]] = None
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                connected = bool(set(items[i][1]) & set(items[j][1]))
                size = merged_size(items[i][1], items[j][1])
                key = (not connected, size)
                if best is None or key < (not best[3], best[2]):
                    best = (i, j, size, connected)
        assert best is not None
        i, j, size, _ = best
        (ta, la), (tb, lb) = items[i], items[j]
        shared = [leg for leg in la if leg in lb]
        merged = tensor_contract(ta, tb, [(la.index(leg), lb.index(leg)) for leg in shared])
        legs = [leg for leg in la if leg not in shared] + [leg for leg in lb if leg not in shared]
        items = [item for k, item in enumerate(items) if k not in (i, j)] + [(merged, legs)]
        logger.debug(f"contracted {shared} into intermediate of size {size}")

    tensor, legs = items[0]
    return tensor.transpose([legs.index(leg) for leg in out_legs])


@dataclass(frozen=True, eq=False)
class LinearMap:
    """
    A linear map between tensor products of spaces.

    ``dom`` and ``cod`` list the leg dimensions; ``tensor`` has shape
    ``cod + dom``. The flat matrix view is codomain × domain.
    """

    tensor: Tensor
    dom: Dims
    cod: Dims

    def __post_init__(self) -> None:
        object.__setattr__(self, "dom", tuple(int(n) for n in self.dom))
        object.__setattr__(self, "cod", tuple(int(n) for n in self.cod))
        if self.tensor.shape != self.cod + self.dom:
            raise ShapeMismatchError(f"tensor shape {self.tensor.shape} is not cod {self.cod} + dom {self.dom}")

    @classmethod
    def from_matrix(
        cls, field: Field, matrix: Any, dom: Optional[Sequence[int]] = None, cod: Optional[Sequence[int]] = None
    ) -> "LinearMap":
        data = matrix if isinstance(matrix, np.ndarray) and matrix.dtype == object else field.array(matrix)
        if data.ndim != 2:
            raise ShapeMismatchError(f"expected a matrix, got shape {data.shape}")
        rows, cols = data.shape
        dom_t = tuple(dom) if dom is not None else (cols,)
        cod_t = tuple(cod) if cod is not None else (rows,)
        if prod(dom_t) != cols or prod(cod_t) != rows:
            raise ShapeMismatchError(f"matrix {data.shape} does not fit dom {dom_t}, cod {cod_t}")
        return cls(Tensor(field, data.reshape(cod_t + dom_t)), dom_t, cod_t)

    @classmethod
    def of(cls, tensor: Tensor, outputs: int) -> "LinearMap":
        """View a structure tensor whose first ``outputs`` axes are outputs as a map."""
        return cls(tensor, tensor.shape[outputs:], tensor.shape[:outputs])

    @property
    def field(self) -> Field:
        return self.tensor.field

    @property
    def domain_dim(self) -> int:
        return prod(self.dom)

    @property
    def codomain_dim(self) -> int:
        return prod(self.cod)

    @property
    def matrix(self) -> Array:
        return self.tensor.data.reshape(self.codomain_dim, self.domain_dim)

    def regroup(self, dom: Sequence[int], cod: Sequence[int]) -> "LinearMap":
        """The same map with its legs grouped differently."""
        return LinearMap.from_matrix(self.field, self.matrix, dom, cod)

    def flat(self) -> "LinearMap":
        return self.regroup((self.domain_dim,), (self.codomain_dim,))

    def apply(self, vector: Tensor) -> Tensor:
        flat = vector.reshape((self.domain_dim,))
        out = tensor_contract(Tensor(self.field, self.matrix), flat, [(1, 0)])
        return out.reshape(self.cod)

    def equals(self, other: "LinearMap") -> bool:
        if (self.domain_dim, self.codomain_dim) != (other.domain_dim, other.codomain_dim):
            return False
        return Tensor(self.field, self.matrix).equals(Tensor(other.field, other.matrix))

    def __repr__(self) -> str:
        return f"LinearMap(dom={self.dom}, cod={self.cod}, field={self.field.tag})"


def identity_map(field: Field, dims: Sequence[int]) -> LinearMap:
    n = prod(dims)
    return LinearMap.from_matrix(field, field.identity(n), dims, dims)


def swap_map(field: Field, m: int, n: int) -> LinearMap:
    """The flip M⊗N → N⊗M."""
    data = field.zeros((n, m, m, n))
    for a in range(m):
        for b in range(n):
            data[b, a, a, b] = field.one
    return LinearMap(Tensor(field, data), (m, n), (n, m))


def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """f∘g."""
    if f.domain_dim != g.codomain_dim:
        raise ShapeMismatchError(f"cannot compose {f!r} after {g!r}")
    if f.dom != g.cod:
        g = g.regroup(g.dom, f.dom)
    k = len(g.cod)
    result = tensor_contract(f.tensor, g.tensor, [(len(f.cod) + i, i) for i in range(k)])
    return LinearMap(result, g.dom, f.cod)


def kron(f: LinearMap, g: LinearMap) -> LinearMap:
    """f⊗g, acting on basis pairs with flat index i·dim₂ + j."""
    outer = tensor_contract(f.tensor, g.tensor, [])
    nfc, nfd, ngc = len(f.cod), len(f.dom), len(g.cod)
    fc = list(range(nfc))
    fd = list(range(nfc, nfc + nfd))
    gc = list(range(nfc + nfd, nfc + nfd + ngc))
    gd = list(range(nfc + nfd + ngc, outer.ndim))
    return LinearMap(outer.transpose(fc + gc + fd + gd), f.dom + g.dom, f.cod + g.cod)


def rref(field: Field, matrix: Array) -> Tuple[Array, List[int]]:
    """Reduced row echelon form and pivot columns, by exact Gauss-Jordan elimination."""
    m = field.coerce(np.asarray(matrix, dtype=object))
    rows, cols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((k for k in range(r, rows) if m[k, c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        m[r, :] = m[r, :] * (field.one / m[r, c])
        for k in range(rows):
            factor = m[k, c]
            if k != r and factor != 0:
                m[k, :] = m[k, :] - m[r, :] * factor
        pivots.append(c)
        r += 1
    return m, pivots


def rank(field: Field, matrix: Array) -> int:
    return len(rref(field, matrix)[1])


def image_basis(field: Field, matrix: Array) -> Array:
    """Pivot columns of ``matrix``: a deterministic basis of its column space."""
    _, pivots = rref(field, matrix)
    return np.asarray(matrix, dtype=object)[:, pivots]


def kernel_basis(field: Field, matrix: Array) -> Array:
    """Columns spanning the null space, one per free column of the RREF."""
    reduced, pivots = rref(field, matrix)
    cols = reduced.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = field.zeros((cols, len(free)))
    for k, f in enumerate(free):
        basis[f, k] = field.one
        for row, p in enumerate(pivots):
            basis[p, k] = -reduced[row, f]
    return basis


def same_span(field: Field, a: Array, b: Array) -> bool:
    ra, rb = rank(field, a), rank(field, b)
    return ra == rb == rank(field, np.concatenate([a, b], axis=1))


def invert_map(f: LinearMap) -> LinearMap:
    """Exact two-sided inverse via Gauss-Jordan elimination on [f | id]."""
    n = f.codomain_dim
    if n != f.domain_dim:
        raise ShapeMismatchError(f"cannot invert non-square {f!r}")
    field = f.field
    reduced, pivots = rref(field, np.concatenate([f.matrix, field.identity(n)], axis=1))
    if pivots[:n] != list(range(n)):
        raise SingularMapError(f"map of rank {len([p for p in pivots if p < n])} < {n} is not invertible")
    return LinearMap.from_matrix(field, reduced[:, n:], f.cod, f.dom)


@dataclass(frozen=True, eq=False)
class Splitting:
    """(i, p) with p∘i = id and i∘p = e for an idempotent e."""

    rank: int
    inclusion: LinearMap
    projection: LinearMap


def split_idempotent(e: LinearMap) -> Splitting:
    """
    Split an idempotent through its image.

    The columns of the inclusion are the pivot columns of e; the projection
    is formed by the nonzero rows of the reduced row echelon form of e.
    """
    logger = logging.getLogger(__name__)
    field = e.field
    if e.domain_dim != e.codomain_dim:
        raise ShapeMismatchError(f"idempotent must be square, got {e!r}")
    e = e.regroup(e.dom, e.dom)
    square = compose(e, e)
    bad = np.argwhere(Tensor(field, square.matrix).mismatches(Tensor(field, e.matrix)))
    if len(bad):
        column = int(min(bad[:, 1]))
        witness = tuple(int(i) for i in np.unravel_index(column, e.dom))
        raise NotIdempotentError(f"e∘e ≠ e on basis vector {witness}", witness)

    reduced, pivots = rref(field, e.matrix)
    r = len(pivots)
    inclusion = LinearMap.from_matrix(field, e.matrix[:, pivots], (r,), e.cod)
    projection = LinearMap.from_matrix(field, reduced[:r, :], e.dom, (r,))
    if not compose(projection, inclusion).equals(identity_map(field, (r,))) or not compose(
        inclusion, projection
    ).equals(e):
        raise CertificationError("splitting identities p∘i = id, i∘p = e failed")
    logger.debug(f"split idempotent of size {e.domain_dim} with rank {r}")
    return Splitting(r, inclusion, projection)


@dataclass(frozen=True, eq=False)
class Quotient:
    """A quotient V/W with a projection q and a section s (q∘s = id)."""

    projection: LinearMap
    section: LinearMap
    relations: Array

    @property
    def dim(self) -> int:
        return self.projection.codomain_dim


def quotient(field: Field, dims: Sequence[int], relations: Array) -> Quotient:
    """
    Quotient of the space with leg dimensions ``dims`` by the span of the
    columns of ``relations``. The section picks standard basis vectors
    completing an independent set of relations (RREF complement).
    """
    n = prod(dims)
    rel = np.asarray(relations, dtype=object).reshape(n, -1)
    spanning = image_basis(field, rel) if rel.shape[1] else field.zeros((n, 0))
    w = spanning.shape[1]
    _, pivots = rref(field, np.concatenate([spanning, field.identity(n)], axis=1))
    complement = [c - w for c in pivots if c >= w]
    chosen = field.identity(n)[:, complement]
    change = invert_map(LinearMap.from_matrix(field, np.concatenate([spanning, chosen], axis=1)))
    projection = LinearMap.from_matrix(field, change.matrix[w:, :], dims, (n - w,))
    section = LinearMap.from_matrix(field, chosen, (n - w,), dims)
    return Quotient(projection, section, rel)


"""
Associative algebras given by structure constants, and the small vocabulary
used to write identities as labelled contraction networks.

A network term is a tensor together with one label per axis (see
`hopfkit.core.contract`). `AlgebraData.chain` produces the terms of an
iterated product, so a Sweedler-style expression such as ``X¹ β S(X²)`` is
written as the chain ``["X1", "b", "sX2"]`` plus the terms defining each leg.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .core import LinearMap, Tensor, contract, invert_map
from .exceptions import FieldMismatchError, ShapeMismatchError
from .field import Field
from .identities import Identity
from .report import Report

Term = Tuple[Tensor, str]


def eye(field: Field, n: int) -> Tensor:
    return Tensor(field, field.identity(n))


def outer(*tensors: Tensor) -> Tensor:
    """Tensor product of tensors, axes concatenated in order."""
    data = tensors[0].data
    for t in tensors[1:]:
        data = np.multiply.outer(data, t.data)
    return Tensor(tensors[0].field, np.asarray(data, dtype=object))


@dataclass(frozen=True, eq=False)
class AlgebraData:
    """A finite-dimensional unital algebra: ``mu[out, left, right]`` and ``unit[out]``."""

    mu: Tensor
    unit: Tensor

    def __post_init__(self) -> None:
        d = self.mu.shape[0] if self.mu.ndim == 3 else -1
        if self.mu.shape != (d, d, d) or self.unit.shape != (d,):
            raise ShapeMismatchError(f"algebra needs mu (d,d,d) and unit (d,), got {self.mu.shape}, {self.unit.shape}")
        if self.unit.field != self.mu.field:
            raise FieldMismatchError("unit and multiplication live over different fields")

    @classmethod
    def trivial(cls, field: Field) -> "AlgebraData":
        """The base field as a one-dimensional algebra."""
        return cls(Tensor.of(field, [[[1]]]), Tensor.of(field, [1]))

    @property
    def field(self) -> Field:
        return self.mu.field

    @property
    def dim(self) -> int:
        return self.mu.shape[0]

    @property
    def eye(self) -> Tensor:
        return eye(self.field, self.dim)

    def chain(self, factors: Sequence[str], out: str) -> List[Term]:
        """Terms multiplying the legs ``factors`` from left to right into the leg ``out``."""
        if not factors:
            return [(self.unit, out)]
        if len(factors) == 1:
            return [(self.eye, f"{out} {factors[0]}")]
        terms: List[Term] = []
        current = factors[0]
        for k, factor in enumerate(factors[1:], 1):
            target = out if k == len(factors) - 1 else f"{out}.{k}"
            terms.append((self.mu, f"{target} {current} {factor}"))
            current = target
        return terms

    def product(self, x: Tensor, y: Tensor) -> Tensor:
        return contract((self.mu, "o a b"), (x, "a"), (y, "b"), out="o")


def check_algebra(report: Report, algebra: AlgebraData, scope: str = "") -> None:
    """Associativity and two-sided unit."""
    lhs = contract((algebra.mu, "o x c"), (algebra.mu, "x a b"), out="o a b c")
    rhs = contract((algebra.mu, "o a y"), (algebra.mu, "y b c"), out="o a b c")
    report.check_equal(Identity.ASSOCIATIVITY, lhs, rhs, 1, scope)
    check_unit(report, algebra, scope)


def check_unit(report: Report, algebra: AlgebraData, scope: str = "") -> None:
    left = contract((algebra.mu, "o u a"), (algebra.unit, "u"), out="o a")
    right = contract((algebra.mu, "o a u"), (algebra.unit, "u"), out="o a")
    report.check_equal(Identity.UNIT, left, algebra.eye, 1, scope, note="left")
    report.check_equal(Identity.UNIT, right, algebra.eye, 1, scope, note="right")


def verify_algebra(algebra: AlgebraData, subject: str = "algebra") -> Report:
    report = Report(subject)
    check_algebra(report, algebra)
    return report


def check_algebra_map(
    report: Report,
    f: Tensor,
    source: AlgebraData,
    target: AlgebraData,
    scope: str = "",
    multiplicative: Identity = Identity.MORPHISM_MULTIPLICATIVE,
    unital: Identity = Identity.MORPHISM_UNIT,
) -> None:
    """f(ab) = f(a)f(b) and f(1) = 1 for ``f[target, source]``."""
    lhs = contract((f, "o x"), (source.mu, "x a b"), out="o a b")
    rhs = contract((target.mu, "o fa fb"), (f, "fa a"), (f, "fb b"), out="o a b")
    report.check_equal(multiplicative, lhs, rhs, 1, scope)
    unit = contract((f, "o u"), (source.unit, "u"), out="o")
    report.check_equal(unital, unit, target.unit, 1, scope)


def tensor_product_algebra(first: AlgebraData, second: AlgebraData) -> AlgebraData:
    """A⊗B with legwise multiplication, flattened as (a, b) ↦ a·dim B + b."""
    mu = outer(first.mu, second.mu).transpose((0, 3, 1, 4, 2, 5))
    n = first.dim * second.dim
    return AlgebraData(mu.reshape((n, n, n)), outer(first.unit, second.unit).reshape((n,)))


def transported_algebra(algebra: AlgebraData, inclusion: Tensor, projection: Tensor) -> AlgebraData:
    """The multiplication p∘μ∘(i⊗i) and unit p(1) on the image of an idempotent split as (i, p)."""
    mu = contract(
        (projection, "o x"), (algebra.mu, "x ia ib"), (inclusion, "ia a"), (inclusion, "ib b"), out="o a b"
    )
    unit = contract((projection, "o x"), (algebra.unit, "x"), out="o")
    return AlgebraData(mu, unit)


def invert_element(algebras: Sequence[AlgebraData], x: Tensor) -> Tensor:
    """
    The inverse of ``x`` in the tensor product algebra A₁⊗...⊗Aₙ.

    Solves x·y = 1 through the matrix of left multiplication by x; in a
    finite-dimensional algebra a right inverse is two-sided.
    """
    n = len(algebras)
    terms: List[Term] = [(x, " ".join(f"a{k}" for k in range(n)))]
    terms += [(algebra.mu, f"o{k} a{k} b{k}") for k, algebra in enumerate(algebras)]
    out = " ".join([f"o{k}" for k in range(n)] + [f"b{k}" for k in range(n)])
    left = LinearMap(contract(*terms, out=out), x.shape, x.shape)
    return invert_map(left).apply(outer(*(algebra.unit for algebra in algebras)))


def multiply_elements(algebras: Sequence[AlgebraData], x: Tensor, y: Tensor) -> Tensor:
    """Legwise product of two elements of A₁⊗...⊗Aₙ."""
    n = len(algebras)
    terms: List[Term] = [
        (x, " ".join(f"a{k}" for k in range(n))),
        (y, " ".join(f"b{k}" for k in range(n))),
    ]
    terms += [(algebra.mu, f"o{k} a{k} b{k}") for k, algebra in enumerate(algebras)]
    return contract(*terms, out=" ".join(f"o{k}" for k in range(n)))


def check_left_module(report: Report, algebra: AlgebraData, action: Tensor, scope: str = "") -> None:
    """(hh')·m = h·(h'·m) and 1·m = m for ``action[out, h, m]``."""
    lhs = contract((action, "o x m"), (algebra.mu, "x h k"), out="o h k m")
    rhs = contract((action, "o h y"), (action, "y k m"), out="o h k m")
    report.check_equal(Identity.MODULE_ASSOCIATIVITY, lhs, rhs, 1, scope)
    unit = contract((action, "o u m"), (algebra.unit, "u"), out="o m")
    report.check_equal(Identity.MODULE_UNIT, unit, eye(algebra.field, action.shape[0]), 1, scope)


def check_right_module(report: Report, algebra: AlgebraData, action: Tensor, scope: str = "") -> None:
    """(m·h)·h' = m·(hh') and m·1 = m for ``action[out, m, h]``."""
    lhs = contract((action, "o x k"), (action, "x m h"), out="o m h k")
    rhs = contract((action, "o m y"), (algebra.mu, "y h k"), out="o m h k")
    report.check_equal(Identity.RIGHT_MODULE_ASSOCIATIVITY, lhs, rhs, 1, scope)
    unit = contract((action, "o m u"), (algebra.unit, "u"), out="o m")
    report.check_equal(Identity.RIGHT_MODULE_UNIT, unit, eye(algebra.field, action.shape[0]), 1, scope)


def check_bimodule(report: Report, algebra: AlgebraData, left: Tensor, right: Tensor, scope: str = "") -> None:
    check_left_module(report, algebra, left, scope)
    check_right_module(report, algebra, right, scope)
    lhs = contract((right, "o x k"), (left, "x h m"), out="o h m k")
    rhs = contract((left, "o h y"), (right, "y m k"), out="o h m k")
    report.check_equal(Identity.BIMODULE_COMPATIBILITY, lhs, rhs, 1, scope)

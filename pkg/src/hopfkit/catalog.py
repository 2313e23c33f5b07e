"""
Deterministic constructors for the concrete structures hopfkit ships.

Every entry is built from a presentation: a basis of normal-form monomials,
a rule multiplying two of them, and the values of the coalgebra maps on
generators, extended multiplicatively. `build_example` verifies the result
before returning it, so a catalog entry that fails its own checks raises
instead of leaking.

Parameters are passed as a flat mapping. Entries that live over another
entry (``trivial-algebra``, ``regular-bicomodule``, ...) take the name of
that entry under ``over`` (or ``algebra``) and forward the remaining
parameters to it.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from itertools import product
from typing import Callable, Dict, List, Literal, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .algebra import AlgebraData, eye, multiply_elements, outer
from .braided import (
    BraidedBicomoduleAlgebraData,
    BraidedContext,
    BraidedHopfAlgebraData,
    BraidedModuleAlgebraData,
    BraidedObject,
    BraidedYDData,
    braided_yd_smash_bicomodule,
    regular_braided_bicomodule,
    verify_braided_bicomodule_algebra,
    verify_braided_hopf,
    verify_braided_module_algebra,
    verify_braided_yd,
)
from .core import Tensor, contract
from .exceptions import ExampleParameterError, PreconditionError, UnknownExampleError
from .field import QQ, Array, Field
from .quasi_hopf import (
    LeftModuleAlgebraData,
    QuasiBicomoduleAlgebraData,
    QuasiHopfAlgebraData,
    YetterDrinfeldAlgebraData,
    YetterDrinfeldModuleData,
    regular_bicomodule,
    verify_bicomodule_algebra,
    verify_module_algebra,
    verify_quasi_hopf,
    verify_yd,
    verify_yd_algebra,
    yd_smash_bicomodule,
)
from .report import Report
from .weak_hopf import (
    WeakBicomoduleAlgebraData,
    WeakHopfAlgebraData,
    regular_weak_bicomodule,
    verify_weak_bicomodule_algebra,
    verify_weak_comodule_algebra,
    verify_weak_hopf,
    verify_weak_module_algebra,
    verify_weak_yd,
    weak_yd_smash_bicomodule,
)

Kind = Literal["quasi-hopf", "weak-hopf", "braided-hopf", "module-algebra", "yd-module", "bicomodule-algebra"]
Variant = Literal["quasi", "weak", "braided"]
Param = Union[int, str]
Params = Mapping[str, Param]

HopfData = Union[QuasiHopfAlgebraData, WeakHopfAlgebraData, BraidedHopfAlgebraData]
StructureData = Union[
    LeftModuleAlgebraData,
    YetterDrinfeldModuleData,
    QuasiBicomoduleAlgebraData,
    WeakBicomoduleAlgebraData,
    BraidedModuleAlgebraData,
    BraidedYDData,
    BraidedBicomoduleAlgebraData,
]

HOPF_KINDS: Tuple[Kind, ...] = ("quasi-hopf", "weak-hopf", "braided-hopf")


@dataclass(frozen=True, eq=False)
class Example:
    """
    A Hopf-type algebra, optionally with a structure over it.

    ``structure`` is None exactly for the Hopf kinds; ``context`` is set
    exactly for the braided variant.
    """

    name: str
    kind: Kind
    variant: Variant
    hopf: HopfData
    context: Optional[BraidedContext] = None
    structure: Optional[StructureData] = None

    @property
    def field(self) -> Field:
        return self.hopf.field

    @property
    def dim(self) -> int:
        if self.structure is None:
            return self.hopf.dim
        return self.structure.dim


@dataclass(frozen=True)
class ExampleCatalogEntry:
    name: str
    kind: Kind
    summary: str
    defaults: Dict[str, Param] = dataclass_field(default_factory=lambda: {})


# presentations


def _structure_constants(
    field: Field, size: int, multiply: Callable[[int, int], Sequence[Tuple[int, int]]]
) -> Tensor:
    """``mu[c, a, b]`` from a rule returning (coefficient, basis index) terms of the product of basis a and b."""
    data = field.zeros((size, size, size))
    for a, b in product(range(size), repeat=2):
        for coefficient, c in multiply(a, b):
            data[c, a, b] += field.element(coefficient)
    return Tensor(field, data)


def _vector(field: Field, size: int, entries: Mapping[int, int]) -> Tensor:
    data = field.zeros((size,))
    for index, value in entries.items():
        data[index] = field.element(value)
    return Tensor(field, data)


def _extend(
    words: Sequence[Sequence[int]], images: Sequence[Tensor], one: Tensor, multiply: Callable[[Tensor, Tensor], Tensor]
) -> Tensor:
    """Stack the images of the monomials ``words`` (generator indices), the basis index becoming the last axis."""
    columns: List[Array] = []
    for word in words:
        value = one
        for letter in word:
            value = multiply(value, images[letter])
        columns.append(value.data)
    return Tensor(one.field, np.stack(columns, axis=-1))


def _require_char(field: Field, name: str, forbidden: int) -> None:
    if field.characteristic == forbidden:
        raise ExampleParameterError(f"{name} needs characteristic different from {forbidden}")


# Hopf algebras


def group_algebra(field: Field = QQ, n: int = 2) -> QuasiHopfAlgebraData:
    """k[ℤ_n] with basis g⁰..gⁿ⁻¹, g grouplike."""
    if n < 1:
        raise ExampleParameterError(f"group order must be positive, got {n}")
    mu = _structure_constants(field, n, lambda a, b: [(1, (a + b) % n)])
    delta = field.zeros((n, n, n))
    antipode = field.zeros((n, n))
    for a in range(n):
        delta[a, a, a] = field.one
        antipode[(-a) % n, a] = field.one
    algebra = AlgebraData(mu, _vector(field, n, {0: 1}))
    counit = Tensor(field, field.array([1] * n))
    return QuasiHopfAlgebraData.ordinary(algebra, Tensor(field, delta), counit, Tensor(field, antipode))


def _dual_group_structure(field: Field, n: int) -> Tuple[AlgebraData, Tensor, Tensor, Tensor]:
    mu = _structure_constants(field, n, lambda a, b: [(1, a)] if a == b else [])
    delta = field.zeros((n, n, n))
    antipode = field.zeros((n, n))
    for b, c in product(range(n), repeat=2):
        delta[b, c, (b + c) % n] = field.one
    for a in range(n):
        antipode[(-a) % n, a] = field.one
    algebra = AlgebraData(mu, Tensor(field, field.array([1] * n)))
    return algebra, Tensor(field, delta), _vector(field, n, {0: 1}), Tensor(field, antipode)


def dual_group_algebra(field: Field = QQ, n: int = 2) -> QuasiHopfAlgebraData:
    """k^{ℤ_n}: orthogonal idempotents e_a with Δ(e_a) = Σ e_b⊗e_{a−b}."""
    if n < 1:
        raise ExampleParameterError(f"group order must be positive, got {n}")
    algebra, delta, counit, antipode = _dual_group_structure(field, n)
    return QuasiHopfAlgebraData.ordinary(algebra, delta, counit, antipode)


def twisted_dual_group_algebra(field: Field = QQ) -> QuasiHopfAlgebraData:
    """
    k^{ℤ₂} with the associator Σ ω(a,b,c) e_a⊗e_b⊗e_c for the 3-cocycle
    ω(a,b,c) = (−1)^{abc}; α = 1 and β = Σ ω(a,a,a)⁻¹ e_a.
    """
    _require_char(field, "quasi-kz2-twisted", 2)
    algebra, delta, counit, antipode = _dual_group_structure(field, 2)
    phi = field.zeros((2, 2, 2))
    for a, b, c in product(range(2), repeat=3):
        phi[a, b, c] = field.element((-1) ** (a * b * c))
    beta = Tensor(field, field.array([1, -1]))
    return QuasiHopfAlgebraData.create(algebra, delta, counit, Tensor(field, phi), antipode, algebra.unit, beta)


# Sweedler's algebra: g^a x^b at index a + 2b, so the basis reads 1, g, x, gx.


def _sweedler_product(i: int, j: int) -> List[Tuple[int, int]]:
    a, b = i % 2, i // 2
    c, d = j % 2, j // 2
    if b + d > 1:
        return []
    return [((-1) ** (b * c), (a + c) % 2 + 2 * (b + d))]


def sweedler(field: Field = QQ) -> QuasiHopfAlgebraData:
    """
    Sweedler's four-dimensional Hopf algebra: g² = 1, x² = 0, xg = −gx,
    Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, S(g) = g, S(x) = −gx.
    """
    _require_char(field, "sweedler", 2)
    algebra = AlgebraData(_structure_constants(field, 4, _sweedler_product), _vector(field, 4, {0: 1}))
    square = [algebra, algebra]
    g, x, one = (_vector(field, 4, {k: 1}) for k in (1, 2, 0))
    images = [outer(g, g), outer(x, one) + outer(g, x)]
    words = [[0] * (k % 2) + [1] * (k // 2) for k in range(4)]
    delta = _extend(words, images, outer(one, one), lambda u, w: multiply_elements(square, u, w))
    s_images = [g, _vector(field, 4, {3: -1})]
    reversed_words = [list(reversed(w)) for w in words]
    antipode = _extend(reversed_words, s_images, one, algebra.product)
    counit = Tensor(field, field.array([1, 1, 0, 0]))
    return QuasiHopfAlgebraData.ordinary(algebra, delta, counit, antipode)


def _arrow(n: int, m: int, i: int, j: int, g: int) -> int:
    return (i * n + j) * m + g


def groupoid_algebra(field: Field = QQ, objects: int = 2, order: int = 1) -> WeakHopfAlgebraData:
    """
    The algebra of the groupoid with ``objects`` objects, one arrow i ← j for
    every pair, and automorphism group ℤ_order at each object. Arrows are
    grouplike; S reverses them.
    """
    n, m = objects, order
    if n < 1 or m < 1:
        raise ExampleParameterError(f"groupoid needs positive objects and order, got {n}, {m}")
    size = n * n * m
    arrows = list(product(range(n), range(n), range(m)))

    def compose_arrows(s: int, t: int) -> List[Tuple[int, int]]:
        i, j, g = arrows[s]
        k, l, h = arrows[t]
        return [(1, _arrow(n, m, i, l, (g + h) % m))] if j == k else []

    mu = _structure_constants(field, size, compose_arrows)
    unit = _vector(field, size, {_arrow(n, m, i, i, 0): 1 for i in range(n)})
    delta = field.zeros((size, size, size))
    antipode = field.zeros((size, size))
    for s, (i, j, g) in enumerate(arrows):
        delta[s, s, s] = field.one
        antipode[_arrow(n, m, j, i, (-g) % m), s] = field.one
    counit = Tensor(field, field.array([1] * size))
    return WeakHopfAlgebraData.create(AlgebraData(mu, unit), Tensor(field, delta), counit, Tensor(field, antipode))


def _popcount(k: int) -> int:
    return bin(k).count("1")


def _wedge(s: int, t: int) -> List[Tuple[int, int]]:
    """x_S x_T for subsets given as bit masks, with the sign of sorting."""
    if s & t:
        return []
    swaps = sum(_popcount(t & ((1 << bit) - 1)) for bit in range(s.bit_length()) if s >> bit & 1)
    return [((-1) ** swaps, s | t)]


def _exterior_algebra(field: Field, k: int) -> AlgebraData:
    size = 1 << k
    return AlgebraData(_structure_constants(field, size, _wedge), _vector(field, size, {0: 1}))


def _braided_square(ctx: BraidedContext, obj: BraidedObject, algebra: AlgebraData) -> AlgebraData:
    """H⊗H with (a⊗b)(c⊗d) = a c'⊗b' d where φ(b⊗c) = c'⊗b'."""
    d = algebra.dim
    phi = ctx.braiding(obj, obj).tensor
    mu = contract(
        (phi, "cp bp b c"), (algebra.mu, "o1 a cp"), (algebra.mu, "o2 bp dd"), out="o1 o2 a b c dd"
    ).reshape((d * d, d * d, d * d))
    return AlgebraData(mu, outer(algebra.unit, algebra.unit).reshape((d * d,)))


def _exterior_hopf(ctx: BraidedContext, obj: BraidedObject, algebra: AlgebraData, k: int) -> BraidedHopfAlgebraData:
    """Primitive odd generators, Δ extended through the braided square and S the parity involution."""
    field, size = ctx.field, 1 << k
    square = _braided_square(ctx, obj, algebra)
    one = _vector(field, size, {0: 1})
    generators = [_vector(field, size, {1 << i: 1}) for i in range(k)]
    images = [(outer(x, one) + outer(one, x)).reshape((size * size,)) for x in generators]
    words = [[i for i in range(k) if s >> i & 1] for s in range(size)]
    delta = _extend(words, images, outer(one, one).reshape((size * size,)), square.product)
    data = field.zeros((size, size))
    for s in range(size):
        data[s, s] = field.element((-1) ** _popcount(s))
    counit = _vector(field, size, {0: 1})
    return BraidedHopfAlgebraData.create(obj, algebra, delta.reshape((size, size, size)), counit, Tensor(field, data))


def exterior_algebra(field: Field = QQ, generators: int = 1) -> Tuple[BraidedContext, BraidedHopfAlgebraData]:
    """Λ(x₁..x_k) with odd primitive generators, a Hopf algebra in super vector spaces."""
    _require_char(field, "exterior-algebra", 2)
    if generators < 1:
        raise ExampleParameterError(f"exterior algebra needs at least one generator, got {generators}")
    ctx = BraidedContext.supervector(field)
    obj = ctx.graded_object([_popcount(s) for s in range(1 << generators)])
    return ctx, _exterior_hopf(ctx, obj, _exterior_algebra(field, generators), generators)


def exterior_algebra_yd(field: Field = QQ, generators: int = 1) -> Tuple[BraidedContext, BraidedHopfAlgebraData]:
    """Λ(x₁..x_k) as a Yetter-Drinfeld module over k[ℤ₂]: g·x = −x and x ↦ g⊗x."""
    _require_char(field, "exterior-algebra-yd", 2)
    if generators < 1:
        raise ExampleParameterError(f"exterior algebra needs at least one generator, got {generators}")
    ctx = BraidedContext.yetter_drinfeld(group_algebra(field, 2))
    size = 1 << generators
    action, coaction = field.zeros((size, 2, size)), field.zeros((2, size, size))
    for s in range(size):
        parity = _popcount(s) % 2
        action[s, 0, s] = field.one
        action[s, 1, s] = field.element((-1) ** parity)
        coaction[parity, s, s] = field.one
    obj = ctx.yd_object(Tensor(field, action), Tensor(field, coaction))
    return ctx, _exterior_hopf(ctx, obj, _exterior_algebra(field, generators), generators)


# structures over a Hopf algebra


def _two_dim_algebra(field: Field) -> AlgebraData:
    """k[y]/(y² − 1) on the basis 1, y."""
    return AlgebraData(_structure_constants(field, 2, lambda a, b: [(1, a ^ b)]), _vector(field, 2, {0: 1}))


def graded_yd_algebra(field: Field, over: str, n: int = 2) -> Tuple[QuasiHopfAlgebraData, YetterDrinfeldAlgebraData]:
    """
    k[y]/(y² − 1) as a Yetter-Drinfeld algebra.

    Over k[ℤ_n] (n even) and Sweedler's algebra y is odd: g·y = −y, x·y = 0
    and y ↦ g^{n/2}⊗y (g⊗y for Sweedler). Over the twisted k^{ℤ₂} the
    algebra sits in degree zero with trivial coaction.
    """
    A = _two_dim_algebra(field)
    if over == "group-algebra":
        if n % 2:
            raise ExampleParameterError(f"graded-yd-algebra over group-algebra needs an even order, got {n}")
        H = group_algebra(field, n)
        action, coaction = field.zeros((2, n, 2)), field.zeros((n, 2, 2))
        for a in range(n):
            action[0, a, 0] = field.one
            action[1, a, 1] = field.element((-1) ** a)
        coaction[0, 0, 0] = field.one
        coaction[n // 2, 1, 1] = field.one
    elif over == "sweedler":
        H = sweedler(field)
        action, coaction = field.zeros((2, 4, 2)), field.zeros((4, 2, 2))
        for a in range(2):
            action[0, a, 0] = field.one
            action[1, a, 1] = field.element((-1) ** a)
        coaction[0, 0, 0] = field.one
        coaction[1, 1, 1] = field.one
    elif over == "quasi-kz2-twisted":
        H = twisted_dual_group_algebra(field)
        action, coaction = field.zeros((2, 2, 2)), field.zeros((2, 2, 2))
        for m in range(2):
            action[m, 0, m] = field.one
            for c in range(2):
                coaction[c, m, m] = field.one
    else:
        raise ExampleParameterError(f"graded-yd-algebra is not defined over {over!r}")
    return H, YetterDrinfeldAlgebraData(Tensor(field, action), Tensor(field, coaction), A)


def trivial_algebra(H: QuasiHopfAlgebraData) -> YetterDrinfeldAlgebraData:
    """The base field with h·1 = ε(h)1 and 1 ↦ 1⊗1."""
    field = H.field
    action = H.counit.reshape((1, H.dim, 1))
    coaction = H.unit.reshape((H.dim, 1, 1))
    return YetterDrinfeldAlgebraData(action, coaction, AlgebraData.trivial(field))


def target_algebra(
    field: Field = QQ, objects: int = 2, order: int = 1
) -> Tuple[WeakHopfAlgebraData, YetterDrinfeldAlgebraData]:
    """
    The target subalgebra of a groupoid algebra, spanned by the identity
    arrows 1_k, with (i←j)·1_k = δ_jk 1_i and 1_k ↦ 1_k⊗1_k.
    """
    H = groupoid_algebra(field, objects, order)
    n, m = objects, order
    algebra = AlgebraData(
        _structure_constants(field, n, lambda a, b: [(1, a)] if a == b else []), Tensor(field, field.array([1] * n))
    )
    action, coaction = field.zeros((n, H.dim, n)), field.zeros((H.dim, n, n))
    for i, j, g in product(range(n), range(n), range(m)):
        action[i, _arrow(n, m, i, j, g), j] = field.one
    for k in range(n):
        coaction[_arrow(n, m, k, k, 0), k, k] = field.one
    return H, YetterDrinfeldAlgebraData(Tensor(field, action), Tensor(field, coaction), algebra)


def super_yd_algebra(
    field: Field = QQ, derivation: int = 1
) -> Tuple[BraidedContext, BraidedHopfAlgebraData, BraidedYDData]:
    """
    Λ(y) over Λ(x) in super vector spaces: x acts by the odd derivation
    y ↦ ``derivation``·1, and the coaction is trivial.
    """
    if derivation not in (0, 1):
        raise ExampleParameterError(f"derivation must be 0 or 1, got {derivation}")
    ctx, H = exterior_algebra(field, 1)
    obj = ctx.graded_object([0, 1])
    action = field.zeros((2, 2, 2))
    for a in range(2):
        action[a, 0, a] = field.one
    action[0, 1, 1] = field.element(derivation)
    coaction = outer(H.unit, eye(field, 2))
    A = BraidedYDData(obj, Tensor(field, action), coaction, _exterior_algebra(field, 1))
    return ctx, H, A


# the catalog


_ENTRY_LIST = (
    ExampleCatalogEntry("group-algebra", "quasi-hopf", "group algebra k[Z_n]", {"n": 2}),
    ExampleCatalogEntry("dual-group-algebra", "quasi-hopf", "dual group algebra k^{Z_n}", {"n": 2}),
    ExampleCatalogEntry("sweedler", "quasi-hopf", "Sweedler's 4-dimensional Hopf algebra"),
    ExampleCatalogEntry("quasi-kz2-twisted", "quasi-hopf", "k^{Z_2} with the nontrivial 3-cocycle associator"),
    ExampleCatalogEntry("groupoid", "weak-hopf", "pair groupoid times Z_order", {"objects": 2, "order": 1}),
    ExampleCatalogEntry("exterior-algebra", "braided-hopf", "exterior algebra, super spaces", {"generators": 1}),
    ExampleCatalogEntry(
        "exterior-algebra-yd", "braided-hopf", "exterior algebra, YD modules over k[Z_2]", {"generators": 1}
    ),
    ExampleCatalogEntry("trivial-algebra", "yd-module", "the base field", {"over": "quasi-kz2-twisted"}),
    ExampleCatalogEntry("graded-yd-algebra", "yd-module", "k[y]/(y^2-1), y odd", {"over": "group-algebra"}),
    ExampleCatalogEntry("target-algebra", "yd-module", "target subalgebra of a groupoid", {"objects": 2, "order": 1}),
    ExampleCatalogEntry("super-yd-algebra", "yd-module", "Lambda(y) over Lambda(x)", {"derivation": 1}),
    ExampleCatalogEntry(
        "module-algebra", "module-algebra", "module algebra of a YD algebra", {"algebra": "graded-yd-algebra"}
    ),
    ExampleCatalogEntry("regular-bicomodule", "bicomodule-algebra", "H over itself, v = id", {"over": "group-algebra"}),
    ExampleCatalogEntry(
        "smash-bicomodule", "bicomodule-algebra", "A#H with v(h) = 1#h", {"algebra": "graded-yd-algebra"}
    ),
)

ENTRIES: Dict[str, ExampleCatalogEntry] = {entry.name: entry for entry in _ENTRY_LIST}

HOPF_BASES = tuple(entry.name for entry in _ENTRY_LIST if entry.kind in HOPF_KINDS)
YD_ALGEBRAS = tuple(entry.name for entry in _ENTRY_LIST if entry.kind == "yd-module")


def list_examples() -> List[ExampleCatalogEntry]:
    return [ENTRIES[name] for name in sorted(ENTRIES)]


def _int_param(params: Params, name: str) -> int:
    value = params[name]
    if isinstance(value, int):
        return value
    try:
        return int(value)
    except ValueError as e:
        raise ExampleParameterError(f"parameter {name!r} must be an integer, got {value!r}") from e


def _resolve(name: str, params: Params) -> Dict[str, Param]:
    if name not in ENTRIES:
        raise UnknownExampleError(f"unknown example {name!r}; known: {', '.join(sorted(ENTRIES))}")
    merged: Dict[str, Param] = dict(ENTRIES[name].defaults)
    merged.update(params)
    return merged


def _forward(params: Mapping[str, Param], base: str, own: Sequence[str]) -> Dict[str, Param]:
    """Parameters meant for the entry ``base``; anything unknown to it is an error."""
    rest = {k: v for k, v in params.items() if k not in own}
    allowed = set(ENTRIES[base].defaults) | {"over", "algebra"}
    nested = rest.get("over", ENTRIES[base].defaults.get("over"))
    if isinstance(nested, str) and nested in ENTRIES:
        allowed |= set(ENTRIES[nested].defaults)
    unknown = set(rest) - allowed
    if unknown:
        raise ExampleParameterError(f"unknown parameters for {base}: {', '.join(sorted(unknown))}")
    return rest


def _check_known(name: str, p: Params) -> None:
    unknown = set(p) - set(ENTRIES[name].defaults)
    if unknown:
        raise ExampleParameterError(f"unknown parameters for {name}: {', '.join(sorted(unknown))}")


def _build_hopf(field: Field, name: str, params: Params) -> Example:
    p = _resolve(name, params)
    _check_known(name, p)
    if name == "group-algebra":
        return Example(name, "quasi-hopf", "quasi", group_algebra(field, _int_param(p, "n")))
    if name == "dual-group-algebra":
        return Example(name, "quasi-hopf", "quasi", dual_group_algebra(field, _int_param(p, "n")))
    if name == "sweedler":
        return Example(name, "quasi-hopf", "quasi", sweedler(field))
    if name == "quasi-kz2-twisted":
        return Example(name, "quasi-hopf", "quasi", twisted_dual_group_algebra(field))
    if name == "groupoid":
        H = groupoid_algebra(field, _int_param(p, "objects"), _int_param(p, "order"))
        return Example(name, "weak-hopf", "weak", H)
    if name == "exterior-algebra":
        ctx, B = exterior_algebra(field, _int_param(p, "generators"))
        return Example(name, "braided-hopf", "braided", B, ctx)
    if name == "exterior-algebra-yd":
        ctx, B = exterior_algebra_yd(field, _int_param(p, "generators"))
        return Example(name, "braided-hopf", "braided", B, ctx)
    raise ExampleParameterError(f"{name} is not a Hopf algebra entry")


def _build_yd(field: Field, name: str, params: Params) -> Example:
    p = _resolve(name, params)
    if name == "trivial-algebra":
        over = str(p["over"])
        base = _build_hopf(field, over, _forward(p, over, ("over",)))
        if not isinstance(base.hopf, QuasiHopfAlgebraData):
            raise ExampleParameterError(f"trivial-algebra is built over quasi-Hopf entries, not {over!r}")
        return Example(name, "yd-module", "quasi", base.hopf, structure=trivial_algebra(base.hopf))
    if name == "graded-yd-algebra":
        over = str(p["over"])
        rest = _forward(p, over, ("over",)) if over in ENTRIES else {}
        n = _int_param(rest, "n") if "n" in rest else 2
        H, A = graded_yd_algebra(field, over, n)
        return Example(name, "yd-module", "quasi", H, structure=A)
    if name == "target-algebra":
        _check_known(name, p)
        Hw, A = target_algebra(field, _int_param(p, "objects"), _int_param(p, "order"))
        return Example(name, "yd-module", "weak", Hw, structure=A)
    if name == "super-yd-algebra":
        _check_known(name, p)
        ctx, Hb, Ab = super_yd_algebra(field, _int_param(p, "derivation"))
        return Example(name, "yd-module", "braided", Hb, ctx, Ab)
    raise ExampleParameterError(f"{name} is not a Yetter-Drinfeld algebra entry")


def _as_yd_algebra(example: Example) -> Tuple[Optional[BraidedContext], HopfData, StructureData]:
    if example.structure is None:
        raise ExampleParameterError(f"{example.name} carries no algebra over its Hopf algebra")
    return example.context, example.hopf, example.structure


def build_example(name: str, params: Optional[Params] = None, field: Field = QQ) -> Example:
    """
    Build and verify a catalog entry.

    Raises UnknownExampleError for an unknown name, ExampleParameterError
    for bad parameters, and PreconditionError if the built structure fails
    its verification.
    """
    logger = logging.getLogger(__name__)
    params = dict(params or {})
    p = _resolve(name, params)
    kind = ENTRIES[name].kind
    if kind in HOPF_KINDS:
        example = _build_hopf(field, name, params)
    elif kind == "yd-module":
        example = _build_yd(field, name, params)
    elif name == "module-algebra":
        inner = str(p["algebra"])
        if inner not in YD_ALGEBRAS:
            raise ExampleParameterError(f"module-algebra is built from {', '.join(YD_ALGEBRAS)}, not {inner!r}")
        source = _build_yd(field, inner, _forward(p, inner, ("algebra",)))
        example = Example(name, "module-algebra", source.variant, source.hopf, source.context, _module_part(source))
    elif name == "regular-bicomodule":
        over = str(p["over"])
        if over not in HOPF_BASES:
            raise ExampleParameterError(f"regular-bicomodule is built over {', '.join(HOPF_BASES)}, not {over!r}")
        base = _build_hopf(field, over, _forward(p, over, ("over",)))
        example = Example(name, "bicomodule-algebra", base.variant, base.hopf, base.context, _regular(base))
    else:
        inner = str(p["algebra"])
        if inner not in YD_ALGEBRAS:
            raise ExampleParameterError(f"smash-bicomodule is built from {', '.join(YD_ALGEBRAS)}, not {inner!r}")
        source = _build_yd(field, inner, _forward(p, inner, ("algebra",)))
        example = Example(name, "bicomodule-algebra", source.variant, source.hopf, source.context, _smash(source))
    report = verify_example(example)
    logger.info(f"built {name} ({example.kind}, {example.variant}) of dimension {example.dim}: {report.passed}")
    report.require(PreconditionError, f"catalog entry {name}")
    return example


def _module_part(source: Example) -> StructureData:
    A = source.structure
    if isinstance(A, YetterDrinfeldAlgebraData):
        return A.module_algebra
    if isinstance(A, BraidedYDData):
        return A.module_algebra
    raise ExampleParameterError(f"{source.name} has no module algebra")


def _regular(base: Example) -> StructureData:
    H = base.hopf
    if isinstance(H, QuasiHopfAlgebraData):
        return regular_bicomodule(H)
    if isinstance(H, WeakHopfAlgebraData):
        return regular_weak_bicomodule(H)
    return regular_braided_bicomodule(H)


def _smash(source: Example) -> StructureData:
    ctx, H, A = _as_yd_algebra(source)
    if isinstance(H, QuasiHopfAlgebraData) and isinstance(A, YetterDrinfeldAlgebraData):
        return yd_smash_bicomodule(H, A)
    if isinstance(H, WeakHopfAlgebraData) and isinstance(A, YetterDrinfeldAlgebraData):
        return weak_yd_smash_bicomodule(H, A).bicomodule
    if isinstance(H, BraidedHopfAlgebraData) and isinstance(A, BraidedYDData) and ctx is not None:
        return braided_yd_smash_bicomodule(ctx, H, A)
    raise ExampleParameterError(f"cannot form a smash product from {source.name}")


def verify_hopf(example: Example) -> Report:
    H = example.hopf
    if isinstance(H, QuasiHopfAlgebraData):
        return verify_quasi_hopf(H)
    if isinstance(H, WeakHopfAlgebraData):
        return verify_weak_hopf(H)
    if example.context is None:
        raise ExampleParameterError(f"{example.name}: a braided Hopf algebra needs a context")
    return verify_braided_hopf(example.context, H)


def verify_example(example: Example) -> Report:
    """Run the verification matching the kind and variant; dependent kinds include the Hopf algebra's checks."""
    report = Report(f"{example.name} ({example.kind})")
    hopf = verify_hopf(example)
    if example.structure is None:
        report.extend(hopf)
        return report
    report.extend(hopf, "hopf")
    H, S, ctx = example.hopf, example.structure, example.context
    if isinstance(H, QuasiHopfAlgebraData):
        if isinstance(S, YetterDrinfeldAlgebraData):
            report.extend(verify_yd_algebra(H, S))
        elif isinstance(S, YetterDrinfeldModuleData):
            report.extend(verify_yd(H, S))
        elif isinstance(S, LeftModuleAlgebraData):
            report.extend(verify_module_algebra(H, S))
        elif isinstance(S, QuasiBicomoduleAlgebraData):
            report.extend(verify_bicomodule_algebra(H, S))
        else:
            raise ExampleParameterError(f"{example.name}: {type(S).__name__} over a quasi-Hopf algebra")
    elif isinstance(H, WeakHopfAlgebraData):
        if isinstance(S, YetterDrinfeldModuleData):
            report.extend(verify_weak_yd(H, S))
            if isinstance(S, YetterDrinfeldAlgebraData):
                report.extend(verify_weak_module_algebra(H, S.module_algebra), "module algebra")
                report.extend(verify_weak_comodule_algebra(H, S.algebra, S.coaction, "left"), "comodule algebra")
        elif isinstance(S, LeftModuleAlgebraData):
            report.extend(verify_weak_module_algebra(H, S))
        elif isinstance(S, WeakBicomoduleAlgebraData):
            report.extend(verify_weak_bicomodule_algebra(H, S))
        else:
            raise ExampleParameterError(f"{example.name}: {type(S).__name__} over a weak Hopf algebra")
    else:
        if ctx is None:
            raise ExampleParameterError(f"{example.name}: a braided structure needs a context")
        if isinstance(S, BraidedYDData):
            report.extend(verify_braided_yd(ctx, H, S))
        elif isinstance(S, BraidedModuleAlgebraData):
            report.extend(verify_braided_module_algebra(ctx, H, S))
        elif isinstance(S, BraidedBicomoduleAlgebraData):
            report.extend(verify_braided_bicomodule_algebra(ctx, H, S))
        else:
            raise ExampleParameterError(f"{example.name}: {type(S).__name__} in a braided context")
    return report

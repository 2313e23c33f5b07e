"""
Hopf algebras and bicomodule algebras inside a braided monoidal category.

Three concrete categories are provided by `BraidedContext`:

- ``plain``: vector spaces with the flip
- ``super``: Z/2-graded spaces with the signed flip
- ``yd``: left-left Yetter-Drinfeld modules over an ordinary Hopf algebra H₀,
  braided by c(m⊗n) = m⁻¹·n⊗m⁰

Objects are `BraidedObject` descriptors; every structure map is a tensor on
the flattened carriers and is certified to be a morphism of the context.
A braiding φ_{M,N} is stored as ``[n_out, m_out, m, n]`` and its inverse
φ⁻¹_{M,N}: N⊗M → M⊗N as ``[m_out, n_out, n, m]``.
"""

import logging
from dataclasses import dataclass, replace
from itertools import product
from typing import List, Literal, Optional, Sequence, Tuple

import numpy as np

from .algebra import (
    AlgebraData,
    check_algebra,
    check_algebra_map,
    check_bimodule,
    check_left_module,
    eye,
    outer,
)
from .core import (
    LinearMap,
    Splitting,
    Tensor,
    compose,
    contract,
    identity_map,
    invert_map,
    kron,
    split_idempotent,
    swap_map,
)
from .exceptions import (
    CertificationError,
    ContextMismatchError,
    PreconditionError,
    ShapeMismatchError,
    SingularMapError,
)
from .field import Field
from .identities import (
    BRAIDED_COINVARIANT_TAGS,
    BRAIDED_COMODULE_ALGEBRA_TAGS,
    BRAIDED_HOPF_TAGS,
    BRAIDED_MODULE_ALGEBRA_TAGS,
    BRAIDED_STRUCTURE_TAGS,
    BRAIDED_YD_TAGS,
    Identity,
)
from .quasi_hopf import QuasiHopfAlgebraData, YetterDrinfeldModuleData, verify_quasi_hopf, verify_yd
from .report import Report

ContextKind = Literal["plain", "super", "yd"]
Side = Literal["left", "right"]


@dataclass(frozen=True, eq=False)
class BraidedObject:
    """
    A finite-dimensional carrier with the decoration its context needs: a
    parity per basis vector (super), or an H₀-action ``[m_out, g, m]`` and
    H₀-coaction ``[g, m_out, m]`` (yd).
    """

    dim: int
    grading: Optional[Tuple[int, ...]] = None
    action: Optional[Tensor] = None
    coaction: Optional[Tensor] = None


@dataclass(frozen=True, eq=False)
class BraidedContext:
    kind: ContextKind
    field: Field
    base: Optional[QuasiHopfAlgebraData] = None

    @classmethod
    def plain(cls, field: Field) -> "BraidedContext":
        return cls("plain", field)

    @classmethod
    def supervector(cls, field: Field) -> "BraidedContext":
        return cls("super", field)

    @classmethod
    def yetter_drinfeld(cls, base: QuasiHopfAlgebraData) -> "BraidedContext":
        """YD modules over an ordinary Hopf algebra, which is verified here."""
        report = verify_quasi_hopf(base)
        one = base.unit
        report.check_equal(Identity.ASSOCIATOR_INVERSE, base.phi, outer(one, one, one), 3, note="trivial associator")
        report.require(PreconditionError, "the base of a Yetter-Drinfeld context must be an ordinary Hopf algebra")
        return cls("yd", base.field, base)

    def _base(self) -> QuasiHopfAlgebraData:
        if self.base is None:
            raise ContextMismatchError(f"{self.kind} context has no base Hopf algebra")
        return self.base

    # objects

    def object(self, dim: int) -> BraidedObject:
        if self.kind != "plain":
            raise ContextMismatchError(f"a bare {dim}-dimensional space is not an object of the {self.kind} context")
        return BraidedObject(dim)

    def graded_object(self, grading: Sequence[int]) -> BraidedObject:
        if self.kind != "super":
            raise ContextMismatchError(f"graded objects belong to the super context, not {self.kind}")
        parities = tuple(int(g) % 2 for g in grading)
        return BraidedObject(len(parities), grading=parities)

    def yd_object(self, action: Tensor, coaction: Tensor) -> BraidedObject:
        """An H₀-module and comodule, verified to be Yetter-Drinfeld."""
        if self.kind != "yd":
            raise ContextMismatchError(f"Yetter-Drinfeld objects belong to the yd context, not {self.kind}")
        H0 = self._base()
        verify_yd(H0, YetterDrinfeldModuleData(action, coaction)).require(
            PreconditionError, "object of the Yetter-Drinfeld context"
        )
        return BraidedObject(action.shape[0], action=action, coaction=coaction)

    def unit_object(self) -> BraidedObject:
        if self.kind == "plain":
            return BraidedObject(1)
        if self.kind == "super":
            return BraidedObject(1, grading=(0,))
        H0 = self._base()
        action = H0.counit.reshape((1, H0.dim, 1))
        coaction = H0.unit.reshape((H0.dim, 1, 1))
        return BraidedObject(1, action=action, coaction=coaction)

    def check_object(self, M: BraidedObject) -> None:
        graded = M.grading is not None
        decorated = M.action is not None or M.coaction is not None
        if self.kind == "plain" and not graded and not decorated:
            return
        if self.kind == "super" and graded and not decorated:
            assert M.grading is not None
            if len(M.grading) != M.dim:
                raise ShapeMismatchError(f"grading of length {len(M.grading)} for dimension {M.dim}")
            return
        if self.kind == "yd" and M.action is not None and M.coaction is not None and not graded:
            g = self._base().dim
            if M.action.shape != (M.dim, g, M.dim) or M.coaction.shape != (g, M.dim, M.dim):
                raise ShapeMismatchError(f"decorations {M.action.shape}, {M.coaction.shape} for dimension {M.dim}")
            return
        raise ContextMismatchError(f"object of dimension {M.dim} does not belong to the {self.kind} context")

    def tensor(self, *objects: BraidedObject) -> BraidedObject:
        """Monoidal product, flattened row-major."""
        if not objects:
            return self.unit_object()
        result = objects[0]
        self.check_object(result)
        for M in objects[1:]:
            self.check_object(M)
            result = self._tensor_pair(result, M)
        return result

    def _tensor_pair(self, M: BraidedObject, N: BraidedObject) -> BraidedObject:
        dim = M.dim * N.dim
        if self.kind == "plain":
            return BraidedObject(dim)
        if self.kind == "super":
            assert M.grading is not None and N.grading is not None
            return BraidedObject(dim, grading=tuple((a + b) % 2 for a, b in product(M.grading, N.grading)))
        H0 = self._base()
        g = H0.dim
        action = contract(
            (H0.delta, "g1 g2 g"), (M.action, "mo g1 m"), (N.action, "no g2 n"), out="mo no g m n"
        ).reshape((dim, g, dim))
        coaction = contract(
            (M.coaction, "g1 mo m"), (N.coaction, "g2 no n"), (H0.mu, "g g1 g2"), out="g mo no m n"
        ).reshape((g, dim, dim))
        return BraidedObject(dim, action=action, coaction=coaction)

    def split(self, M: BraidedObject, splitting: Splitting) -> BraidedObject:
        """The image of an idempotent morphism of M as an object."""
        self.check_object(M)
        i, p = splitting.inclusion.tensor, splitting.projection.tensor
        r = splitting.rank
        if self.kind == "plain":
            return BraidedObject(r)
        if self.kind == "super":
            assert M.grading is not None
            parities: List[int] = []
            for k in range(r):
                seen = {M.grading[j] for j in range(M.dim) if i.data[j, k] != 0}
                if len(seen) != 1:
                    raise ContextMismatchError(f"image vector {k} is not homogeneous")
                parities.append(seen.pop())
            return BraidedObject(r, grading=tuple(parities))
        assert M.action is not None and M.coaction is not None
        action = contract((i, "x v"), (M.action, "y g x"), (p, "o y"), out="o g v")
        coaction = contract((i, "x v"), (M.coaction, "g y x"), (p, "o y"), out="g o v")
        return BraidedObject(r, action=action, coaction=coaction)

    # braiding

    def braiding(self, M: BraidedObject, N: BraidedObject) -> LinearMap:
        """φ_{M,N}: M⊗N → N⊗M."""
        self.check_object(M)
        self.check_object(N)
        if self.kind == "plain":
            return swap_map(self.field, M.dim, N.dim)
        if self.kind == "super":
            return self._signed(swap_map(self.field, M.dim, N.dim), M, N, inverse=False)
        assert M.coaction is not None and N.action is not None
        c = contract((M.coaction, "g mo m"), (N.action, "no g n"), out="no mo m n")
        return LinearMap(c, (M.dim, N.dim), (N.dim, M.dim))

    def braiding_inverse(self, M: BraidedObject, N: BraidedObject) -> LinearMap:
        """φ⁻¹_{M,N}: N⊗M → M⊗N."""
        self.check_object(M)
        self.check_object(N)
        if self.kind == "plain":
            return swap_map(self.field, N.dim, M.dim)
        if self.kind == "super":
            return self._signed(swap_map(self.field, N.dim, M.dim), M, N, inverse=True)
        H0 = self._base()
        assert M.coaction is not None and N.action is not None
        c = contract((M.coaction, "g mo m"), (H0.antipode_inv, "s g"), (N.action, "no s n"), out="mo no n m")
        return LinearMap(c, (N.dim, M.dim), (M.dim, N.dim))

    def _signed(self, flip: LinearMap, M: BraidedObject, N: BraidedObject, inverse: bool) -> LinearMap:
        assert M.grading is not None and N.grading is not None
        data = np.array(flip.tensor.data, dtype=object)
        minus = -self.field.one
        for a, b in product(range(M.dim), range(N.dim)):
            if M.grading[a] and N.grading[b]:
                if inverse:
                    data[a, b, b, a] = minus
                else:
                    data[b, a, a, b] = minus
        return LinearMap(Tensor(self.field, data), flip.dom, flip.cod)

    # morphisms

    def check_morphism(
        self,
        report: Report,
        f: Tensor,
        sources: Sequence[BraidedObject],
        targets: Sequence[BraidedObject],
        note: str,
    ) -> None:
        """Record whether ``f`` (targets first) is a morphism of the context."""
        source, target = self.tensor(*sources), self.tensor(*targets)
        F = f.reshape((target.dim, source.dim))
        if self.kind == "plain":
            return
        if self.kind == "super":
            assert source.grading is not None and target.grading is not None
            keep = np.array([[a == b for b in source.grading] for a in target.grading], dtype=bool).reshape(
                (target.dim, source.dim)
            )
            kept = Tensor(self.field, np.where(keep, F.data, self.field.zero))
            report.check_equal(Identity.CONTEXT_MORPHISM, F, kept, 1, note=f"{note}: parity")
            return
        assert source.action is not None and target.action is not None
        assert source.coaction is not None and target.coaction is not None
        lhs = contract((source.action, "x g i"), (F, "o x"), out="o g i")
        rhs = contract((F, "y i"), (target.action, "o g y"), out="o g i")
        report.check_equal(Identity.CONTEXT_MORPHISM, lhs, rhs, 1, note=f"{note}: linear")
        lhs = contract((F, "x i"), (target.coaction, "g o x"), out="g o i")
        rhs = contract((source.coaction, "g y i"), (F, "o y"), out="g o i")
        report.check_equal(Identity.CONTEXT_MORPHISM, lhs, rhs, 2, note=f"{note}: colinear")


def verify_context(ctx: BraidedContext, objects: Sequence[BraidedObject]) -> Report:
    """Braidings invertible on every pair and both hexagons on every triple of ``objects``."""
    report = Report(f"{ctx.kind} braided context")
    for M, N in product(objects, repeat=2):
        c, c_inv = ctx.braiding(M, N), ctx.braiding_inverse(M, N)
        ok = compose(c_inv, c).equals(identity_map(ctx.field, (M.dim, N.dim))) and compose(c, c_inv).equals(
            identity_map(ctx.field, (N.dim, M.dim))
        )
        report.record(Identity.BRAIDING_INVERSE, ok, note=f"dimensions {M.dim}, {N.dim}")
    for M, N, P in product(objects, repeat=3):
        # φ_{M,N⊗P} = (N⊗φ_{M,P})(φ_{M,N}⊗P)
        lhs = ctx.braiding(M, ctx.tensor(N, P)).regroup((M.dim, N.dim, P.dim), (N.dim, P.dim, M.dim))
        rhs = compose(
            kron(identity_map(ctx.field, (N.dim,)), ctx.braiding(M, P)),
            kron(ctx.braiding(M, N), identity_map(ctx.field, (P.dim,))),
        )
        report.check_equal(Identity.HEXAGON_LEFT, lhs.tensor, rhs.regroup(lhs.dom, lhs.cod).tensor, 3)
        # φ_{M⊗N,P} = (φ_{M,P}⊗N)(M⊗φ_{N,P})
        lhs = ctx.braiding(ctx.tensor(M, N), P).regroup((M.dim, N.dim, P.dim), (P.dim, M.dim, N.dim))
        rhs = compose(
            kron(ctx.braiding(M, P), identity_map(ctx.field, (N.dim,))),
            kron(identity_map(ctx.field, (M.dim,)), ctx.braiding(N, P)),
        )
        report.check_equal(Identity.HEXAGON_RIGHT, lhs.tensor, rhs.regroup(lhs.dom, lhs.cod).tensor, 3)
    return report


@dataclass(frozen=True, eq=False)
class BraidedHopfAlgebraData:
    """A Hopf algebra in a braided context, with bijective antipode."""

    obj: BraidedObject
    algebra: AlgebraData
    delta: Tensor
    counit: Tensor
    antipode: Tensor
    antipode_inv: Tensor

    def __post_init__(self) -> None:
        d = self.algebra.dim
        if self.obj.dim != d:
            raise ShapeMismatchError(f"carrier of dimension {self.obj.dim} for an algebra of dimension {d}")
        for name, shape in (("delta", (d, d, d)), ("counit", (d,)), ("antipode", (d, d)), ("antipode_inv", (d, d))):
            got = getattr(self, name).shape
            if got != shape:
                raise ShapeMismatchError(f"{name} has shape {got}, expected {shape}")

    @classmethod
    def create(
        cls,
        obj: BraidedObject,
        algebra: AlgebraData,
        delta: Tensor,
        counit: Tensor,
        antipode: Tensor,
        antipode_inv: Optional[Tensor] = None,
    ) -> "BraidedHopfAlgebraData":
        if antipode_inv is None:
            d = algebra.dim
            try:
                antipode_inv = invert_map(LinearMap(antipode, (d,), (d,))).tensor
            except SingularMapError as e:
                raise PreconditionError(f"the antipode must be bijective: {e}") from e
        return cls(obj, algebra, delta, counit, antipode, antipode_inv)

    @classmethod
    def from_hopf(cls, ctx: BraidedContext, H: QuasiHopfAlgebraData) -> "BraidedHopfAlgebraData":
        """An ordinary Hopf algebra as a Hopf algebra in the plain context."""
        return cls(ctx.object(H.dim), H.algebra, H.delta, H.counit, H.antipode, H.antipode_inv)

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def mu(self) -> Tensor:
        return self.algebra.mu

    @property
    def unit(self) -> Tensor:
        return self.algebra.unit


@dataclass(frozen=True, eq=False)
class BraidedAlgebraData:
    obj: BraidedObject
    algebra: AlgebraData

    @property
    def dim(self) -> int:
        return self.algebra.dim


@dataclass(frozen=True, eq=False)
class BraidedModuleAlgebraData:
    """An algebra in the category of left H-modules, ``action[a_out, h, a]``."""

    obj: BraidedObject
    algebra: AlgebraData
    action: Tensor

    @property
    def dim(self) -> int:
        return self.algebra.dim


@dataclass(frozen=True, eq=False)
class BraidedYDData:
    """A braided Yetter-Drinfeld module, and a Yetter-Drinfeld algebra when ``algebra`` is set."""

    obj: BraidedObject
    action: Tensor
    coaction: Tensor
    algebra: Optional[AlgebraData] = None

    @property
    def dim(self) -> int:
        return self.obj.dim

    @property
    def module_algebra(self) -> BraidedModuleAlgebraData:
        if self.algebra is None:
            raise PreconditionError("the Yetter-Drinfeld module carries no algebra structure")
        return BraidedModuleAlgebraData(self.obj, self.algebra, self.action)


@dataclass(frozen=True, eq=False)
class BraidedBicomoduleAlgebraData:
    """``left[h, b_out, b]`` (optional), ``right[b_out, h, b]`` and an optional ``v[b, h]``."""

    obj: BraidedObject
    algebra: AlgebraData
    left: Optional[Tensor]
    right: Tensor
    v: Optional[Tensor] = None

    @property
    def dim(self) -> int:
        return self.algebra.dim


@dataclass(frozen=True, eq=False)
class TwoFoldHopfModuleData:
    """
    An H-bimodule in right H-comodules; with a left coaction as well it is a
    Hopf bimodule.
    """

    obj: BraidedObject
    left_action: Tensor
    right_action: Tensor
    right_coaction: Tensor
    left_coaction: Optional[Tensor] = None

    @property
    def dim(self) -> int:
        return self.obj.dim


def _phi(ctx: BraidedContext, M: BraidedObject, N: BraidedObject) -> Tensor:
    return ctx.braiding(M, N).tensor


def verify_braided_hopf(ctx: BraidedContext, H: BraidedHopfAlgebraData) -> Report:
    """Algebra, coalgebra, the braided bialgebra law, the antipode, and morphism-hood of every structure map."""
    logger = logging.getLogger(__name__)
    report = Report(f"braided Hopf algebra ({ctx.kind})", tags=BRAIDED_HOPF_TAGS)
    A, obj = H.algebra, H.obj
    mu, unit, delta, eps, S = H.mu, H.unit, H.delta, H.counit, H.antipode
    phi = _phi(ctx, obj, obj)
    check_algebra(report, A)
    lhs = contract((delta, "a x h"), (delta, "b c x"), out="a b c h")
    rhs = contract((delta, "x c h"), (delta, "a b x"), out="a b c h")
    report.check_equal(Identity.COASSOCIATIVITY, lhs, rhs, 3)
    report.check_equal(Identity.COUNIT_RIGHT, contract((delta, "a b h"), (eps, "b"), out="a h"), A.eye, 1)
    report.check_equal(Identity.COUNIT_LEFT, contract((delta, "a b h"), (eps, "a"), out="b h"), A.eye, 1)

    lhs = contract((mu, "x a b"), (delta, "o1 o2 x"), out="o1 o2 a b")
    rhs = contract(
        (delta, "a1 a2 a"),
        (delta, "b1 b2 b"),
        (phi, "c1 c2 a2 b1"),
        (mu, "o1 a1 c1"),
        (mu, "o2 c2 b2"),
        out="o1 o2 a b",
    )
    report.check_equal(Identity.BIALGEBRA_COMPATIBILITY, lhs, rhs, 2)
    check_algebra_map(
        report,
        eps.reshape((1, H.dim)),
        A,
        AlgebraData.trivial(H.field),
        multiplicative=Identity.COUNIT_MULTIPLICATIVE,
        unital=Identity.COUNIT_UNIT,
    )
    lhs = contract((delta, "a b u"), (unit, "u"), out="a b")
    report.check_equal(Identity.COPRODUCT_UNIT, lhs, outer(unit, unit), 2)

    lhs = contract((delta, "h1 h2 h"), (S, "s h1"), (mu, "o s h2"), out="o h")
    report.check_equal(Identity.ANTIPODE_LEFT, lhs, outer(unit, eps), 1)
    lhs = contract((delta, "h1 h2 h"), (S, "s h2"), (mu, "o h1 s"), out="o h")
    report.check_equal(Identity.ANTIPODE_RIGHT, lhs, outer(unit, eps), 1)
    report.check_equal(Identity.ANTIPODE_INVERSE, contract((S, "o x"), (H.antipode_inv, "x h"), out="o h"), A.eye, 1)

    inverse = ctx.braiding_inverse(obj, obj).tensor
    back = contract((phi, "b1 a1 a b"), (inverse, "o1 o2 b1 a1"), out="o1 o2 a b")
    report.check_equal(Identity.BRAIDING_INVERSE, back, outer(A.eye, A.eye).transpose((0, 2, 1, 3)), 2)

    ctx.check_morphism(report, mu, [obj, obj], [obj], "multiplication")
    ctx.check_morphism(report, unit, [], [obj], "unit")
    ctx.check_morphism(report, delta, [obj], [obj, obj], "coproduct")
    ctx.check_morphism(report, eps, [obj], [], "counit")
    ctx.check_morphism(report, S, [obj], [obj], "antipode")
    ctx.check_morphism(report, H.antipode_inv, [obj], [obj], "inverse antipode")
    logger.info(f"braided Hopf algebra of dimension {H.dim} in the {ctx.kind} context: {report.passed}")
    return report


def verify_braided_module_algebra(
    ctx: BraidedContext, H: BraidedHopfAlgebraData, A: BraidedModuleAlgebraData
) -> Report:
    report = Report("braided module algebra", tags=BRAIDED_MODULE_ALGEBRA_TAGS)
    B, action = A.algebra, A.action
    phi = _phi(ctx, H.obj, A.obj)
    check_algebra(report, B)
    check_left_module(report, H.algebra, action)
    lhs = contract((action, "o h x"), (B.mu, "x a b"), out="o h a b")
    rhs = contract(
        (H.delta, "h1 h2 h"),
        (phi, "ap h2p h2 a"),
        (action, "p h1 ap"),
        (action, "q h2p b"),
        (B.mu, "o p q"),
        out="o h a b",
    )
    report.check_equal(Identity.ACTION_MULTIPLICATIVE, lhs, rhs, 1)
    unit = contract((action, "o h u"), (B.unit, "u"), out="o h")
    report.check_equal(Identity.ACTION_UNIT, unit, outer(B.unit, H.counit), 1)
    ctx.check_morphism(report, B.mu, [A.obj, A.obj], [A.obj], "multiplication")
    ctx.check_morphism(report, B.unit, [], [A.obj], "unit")
    ctx.check_morphism(report, action, [H.obj, A.obj], [A.obj], "action")
    return report


def braided_smash(ctx: BraidedContext, H: BraidedHopfAlgebraData, A: BraidedModuleAlgebraData) -> BraidedAlgebraData:
    """A#H on A⊗H with (a#h)(a'#h') = a(h₁·a'')#h₂''h', where φ(h₂⊗a') = a''⊗h₂''."""
    logger = logging.getLogger(__name__)
    verify_braided_module_algebra(ctx, H, A).require(PreconditionError, "smash product needs a braided module algebra")
    B = A.algebra
    n = A.dim * H.dim
    phi = _phi(ctx, H.obj, A.obj)
    mu = contract(
        (H.delta, "h1 h2 h"),
        (phi, "bp h2p h2 b"),
        (A.action, "x h1 bp"),
        (B.mu, "oa a x"),
        (H.mu, "oh h2p k"),
        out="oa oh a h b k",
    ).reshape((n, n, n))
    unit = outer(B.unit, H.unit).reshape((n,))
    smash = BraidedAlgebraData(ctx.tensor(A.obj, H.obj), AlgebraData(mu, unit))
    report = Report("braided smash product")
    check_algebra(report, smash.algebra)
    ctx.check_morphism(report, mu, [smash.obj, smash.obj], [smash.obj], "multiplication")
    report.require(CertificationError, "braided smash product")
    logger.info(f"built braided smash product of dimension {n}")
    return smash


def verify_braided_comodule_algebra(
    ctx: BraidedContext, H: BraidedHopfAlgebraData, A: BraidedAlgebraData, coaction: Tensor, side: Side
) -> Report:
    """A left (``coaction[h, a_out, a]``) or right (``coaction[a_out, h, a]``) comodule algebra."""
    report = Report(f"braided {side} comodule algebra", tags=BRAIDED_COMODULE_ALGEBRA_TAGS)
    B, obj = A.algebra, A.obj
    check_algebra(report, B)
    if side == "left":
        lam = coaction
        phi = _phi(ctx, obj, H.obj)
        report.check_equal(Identity.LEFT_COUNIT, contract((lam, "c o a"), (H.counit, "c"), out="o a"), B.eye, 1)
        lhs = contract((lam, "c1 x a"), (lam, "c2 o x"), out="c1 c2 o a")
        rhs = contract((lam, "c o a"), (H.delta, "c1 c2 c"), out="c1 c2 o a")
        report.check_equal(Identity.LEFT_COASSOCIATIVITY, lhs, rhs, 3)
        lhs = contract((B.mu, "x a b"), (lam, "c o x"), out="c o a b")
        rhs = contract(
            (lam, "e1 a0 a"),
            (lam, "e2 b0 b"),
            (phi, "e2p a0p a0 e2"),
            (H.mu, "c e1 e2p"),
            (B.mu, "o a0p b0"),
            out="c o a b",
        )
        report.check_equal(Identity.LEFT_COACTION_MULTIPLICATIVE, lhs, rhs, 2)
        unit = contract((lam, "c o u"), (B.unit, "u"), out="c o")
        report.check_equal(Identity.LEFT_COACTION_UNIT, unit, outer(H.unit, B.unit), 2)
        ctx.check_morphism(report, lam, [obj], [H.obj, obj], "left coaction")
        return report

    rho = coaction
    phi = _phi(ctx, H.obj, obj)
    report.check_equal(Identity.RIGHT_COUNIT, contract((rho, "o c a"), (H.counit, "c"), out="o a"), B.eye, 1)
    lhs = contract((rho, "x c2 a"), (rho, "o c1 x"), out="o c1 c2 a")
    rhs = contract((rho, "o c a"), (H.delta, "c1 c2 c"), out="o c1 c2 a")
    report.check_equal(Identity.RIGHT_COASSOCIATIVITY, lhs, rhs, 3)
    lhs = contract((B.mu, "x a b"), (rho, "o c x"), out="o c a b")
    rhs = contract(
        (rho, "a0 c1 a"),
        (rho, "b0 c2 b"),
        (phi, "b0p c1p c1 b0"),
        (B.mu, "o a0 b0p"),
        (H.mu, "c c1p c2"),
        out="o c a b",
    )
    report.check_equal(Identity.RIGHT_COACTION_MULTIPLICATIVE, lhs, rhs, 2)
    unit = contract((rho, "o c u"), (B.unit, "u"), out="o c")
    report.check_equal(Identity.RIGHT_COACTION_UNIT, unit, outer(B.unit, H.unit), 2)
    ctx.check_morphism(report, rho, [obj], [obj, H.obj], "right coaction")
    return report


def verify_braided_yd(ctx: BraidedContext, H: BraidedHopfAlgebraData, M: BraidedYDData) -> Report:
    """
    Module and comodule laws and the crossed compatibility

    (∇⊗μ⁻)(H⊗φ_{H,H}⊗M)(Δ⊗λ) = (∇⊗M)(H⊗φ_{M,H})(λ⊗H)(μ⁻⊗H)(H⊗φ_{H,M})(Δ⊗M).

    With an algebra attached the module and comodule algebra laws are checked as well.
    """
    report = Report("braided Yetter-Drinfeld module", tags=BRAIDED_YD_TAGS)
    act, lam, obj = M.action, M.coaction, M.obj
    check_left_module(report, H.algebra, act)
    report.check_equal(Identity.YD_COUNIT, contract((lam, "c o m"), (H.counit, "c"), out="o m"), eye(H.field, M.dim), 1)
    lhs = contract((lam, "c1 x m"), (lam, "c2 o x"), out="c1 c2 o m")
    rhs = contract((lam, "c o m"), (H.delta, "c1 c2 c"), out="c1 c2 o m")
    report.check_equal(Identity.YD_COASSOCIATIVITY, lhs, rhs, 3)

    phi_hh, phi_hm, phi_mh = _phi(ctx, H.obj, H.obj), _phi(ctx, H.obj, obj), _phi(ctx, obj, H.obj)
    lhs = contract(
        (H.delta, "h1 h2 h"),
        (lam, "c x m"),
        (phi_hh, "cp h2p h2 c"),
        (H.mu, "oc h1 cp"),
        (act, "om h2p x"),
        out="oc om h m",
    )
    rhs = contract(
        (H.delta, "h1 h2 h"),
        (phi_hm, "mp h2p h2 m"),
        (act, "y h1 mp"),
        (lam, "c y0 y"),
        (phi_mh, "h2pp om y0 h2p"),
        (H.mu, "oc c h2pp"),
        out="oc om h m",
    )
    report.check_equal(Identity.YD_COMPATIBILITY, lhs, rhs, 2)
    ctx.check_morphism(report, act, [H.obj, obj], [obj], "action")
    ctx.check_morphism(report, lam, [obj], [H.obj, obj], "coaction")
    if M.algebra is not None:
        report.extend(verify_braided_module_algebra(ctx, H, M.module_algebra), "module algebra")
        algebra = BraidedAlgebraData(obj, M.algebra)
        report.extend(verify_braided_comodule_algebra(ctx, H, algebra, lam, "left"), "comodule algebra")
    return report


@dataclass(frozen=True, eq=False)
class YDBraiding:
    braiding: LinearMap
    inverse: LinearMap
    report: Report


def yd_braiding(ctx: BraidedContext, H: BraidedHopfAlgebraData, M: BraidedYDData, N: BraidedYDData) -> YDBraiding:
    """
    c(m⊗n) = m⁻¹·n'⊗m⁰' with φ(m⁰⊗n) = n'⊗m⁰', and its inverse through S⁻¹
    and inverse braidings of the context, certified mutually inverse.
    """
    for X in (M, N):
        verify_braided_yd(ctx, H, X).require(PreconditionError, "braiding of Yetter-Drinfeld modules")
    c = contract(
        (M.coaction, "h x m"), (_phi(ctx, M.obj, N.obj), "np mo x n"), (N.action, "no h np"), out="no mo m n"
    )
    inv_mh = ctx.braiding_inverse(M.obj, H.obj).tensor
    inv_mn = ctx.braiding_inverse(M.obj, N.obj).tensor
    inv_hn = ctx.braiding_inverse(H.obj, N.obj).tensor
    c_inv = contract(
        (M.coaction, "h x m"),
        (inv_mh, "xp hp h x"),
        (inv_mn, "mo np n xp"),
        (H.antipode_inv, "s hp"),
        (inv_hn, "sp npp np s"),
        (N.action, "no sp npp"),
        out="mo no n m",
    )
    report = Report("Yetter-Drinfeld braiding")
    I_M, I_N = eye(H.field, M.dim), eye(H.field, N.dim)
    back = contract((c, "n1 m1 m n"), (c_inv, "mo no n1 m1"), out="mo no m n")
    report.check_equal(Identity.YD_BRAIDING_INVERSE, back, outer(I_M, I_N).transpose((0, 2, 1, 3)), 2)
    forth = contract((c_inv, "m1 n1 n m"), (c, "no mo m1 n1"), out="no mo n m")
    report.check_equal(Identity.YD_BRAIDING_INVERSE, forth, outer(I_N, I_M).transpose((0, 2, 1, 3)), 2)
    report.require(CertificationError, "Yetter-Drinfeld braiding")
    return YDBraiding(
        LinearMap(c, (M.dim, N.dim), (N.dim, M.dim)), LinearMap(c_inv, (N.dim, M.dim), (M.dim, N.dim)), report
    )


def regular_braided_bicomodule(H: BraidedHopfAlgebraData) -> BraidedBicomoduleAlgebraData:
    return BraidedBicomoduleAlgebraData(H.obj, H.algebra, H.delta, H.delta, v=H.algebra.eye)


def verify_braided_bicomodule_morphism(
    ctx: BraidedContext,
    H: BraidedHopfAlgebraData,
    f: Tensor,
    source: BraidedBicomoduleAlgebraData,
    target: BraidedBicomoduleAlgebraData,
) -> Report:
    report = Report("braided bicomodule algebra morphism")
    if f.shape != (target.dim, source.dim):
        raise ShapeMismatchError(f"morphism has shape {f.shape}, expected {(target.dim, source.dim)}")
    check_algebra_map(report, f, source.algebra, target.algebra)
    lhs = contract((target.right, "o c y"), (f, "y b"), out="o c b")
    rhs = contract((f, "o x"), (source.right, "x c b"), out="o c b")
    report.check_equal(Identity.MORPHISM_RIGHT_COLINEAR, lhs, rhs, 2)
    if source.left is not None and target.left is not None:
        lhs = contract((target.left, "c o y"), (f, "y b"), out="c o b")
        rhs = contract((f, "o x"), (source.left, "c x b"), out="c o b")
        report.check_equal(Identity.MORPHISM_LEFT_COLINEAR, lhs, rhs, 2)
    ctx.check_morphism(report, f, [source.obj], [target.obj], "morphism")
    return report


def verify_braided_bicomodule_algebra(
    ctx: BraidedContext, H: BraidedHopfAlgebraData, B: BraidedBicomoduleAlgebraData
) -> Report:
    report = Report("braided bicomodule algebra")
    algebra = BraidedAlgebraData(B.obj, B.algebra)
    report.extend(verify_braided_comodule_algebra(ctx, H, algebra, B.right, "right"), "right")
    if B.left is not None:
        report.extend(verify_braided_comodule_algebra(ctx, H, algebra, B.left, "left"), "left")
        lhs = contract((B.right, "x c b"), (B.left, "e o x"), out="e o c b")
        rhs = contract((B.left, "e x b"), (B.right, "o c x"), out="e o c b")
        report.check_equal(Identity.BICOMODULE_COMMUTATION, lhs, rhs, 3)
    if B.v is not None:
        if B.v.shape != (B.dim, H.dim):
            raise ShapeMismatchError(f"v has shape {B.v.shape}, expected {(B.dim, H.dim)}")
        report.extend(verify_braided_bicomodule_morphism(ctx, H, B.v, regular_braided_bicomodule(H), B), "v")
    return report


def braided_yd_smash_bicomodule(
    ctx: BraidedContext, H: BraidedHopfAlgebraData, A: BraidedYDData
) -> BraidedBicomoduleAlgebraData:
    """
    A#H for a Yetter-Drinfeld algebra A with ρ = A⊗Δ and
    λ(a#h) = a⁻¹h₁'⊗(a⁰'#h₂) where φ(a⁰⊗h₁) = h₁'⊗a⁰'. The embedding
    v = η_A⊗H is certified to be a bicomodule algebra morphism.
    """
    logger = logging.getLogger(__name__)
    verify_braided_yd(ctx, H, A).require(PreconditionError, "smash bicomodule needs a Yetter-Drinfeld algebra")
    smash = braided_smash(ctx, H, A.module_algebra)
    assert A.algebra is not None
    n = smash.dim
    lam = contract(
        (A.coaction, "e x a"),
        (H.delta, "h1 oh h"),
        (_phi(ctx, A.obj, H.obj), "h1p oa x h1"),
        (H.mu, "c e h1p"),
        out="c oa oh a h",
    ).reshape((H.dim, n, n))
    rho = contract((eye(H.field, A.dim), "oa a"), (H.delta, "oh c h"), out="oa oh c a h").reshape((n, H.dim, n))
    v = contract((A.algebra.unit, "oa"), (H.algebra.eye, "oh h"), out="oa oh h").reshape((n, H.dim))
    B = BraidedBicomoduleAlgebraData(smash.obj, smash.algebra, lam, rho, v)
    verify_braided_bicomodule_algebra(ctx, H, B).require(CertificationError, "braided smash bicomodule algebra")
    logger.info(f"built braided bicomodule algebra A#H of dimension {n}")
    return B


def verify_two_fold(ctx: BraidedContext, H: BraidedHopfAlgebraData, M: TwoFoldHopfModuleData) -> Report:
    """
    Bimodule, right comodule, both actions colinear; with a left coaction
    also the Hopf bimodule conditions.
    """
    report = Report("braided two-fold Hopf module")
    left, right, rho, lam = M.left_action, M.right_action, M.right_coaction, M.left_coaction
    obj, mu, delta = M.obj, H.mu, H.delta
    phi_hh, phi_hm = _phi(ctx, H.obj, H.obj), _phi(ctx, H.obj, obj)
    I = eye(H.field, M.dim)
    check_bimodule(report, H.algebra, left, right)
    report.check_equal(Identity.HOPF_BIMODULE_RIGHT_COUNIT, contract((rho, "o c m"), (H.counit, "c"), out="o m"), I, 1)
    lhs = contract((rho, "x c2 m"), (rho, "o c1 x"), out="o c1 c2 m")
    rhs = contract((rho, "o c m"), (delta, "c1 c2 c"), out="o c1 c2 m")
    report.check_equal(Identity.HOPF_BIMODULE_RIGHT_COASSOCIATIVITY, lhs, rhs, 3)

    lhs = contract((right, "y m h"), (rho, "o c y"), out="o c m h")
    rhs = contract(
        (rho, "x e m"), (delta, "h1 h2 h"), (phi_hh, "h1p ep e h1"), (right, "o x h1p"), (mu, "c ep h2"), out="o c m h"
    )
    report.check_equal(Identity.TWO_FOLD_RIGHT_COLINEAR, lhs, rhs, 2)
    lhs = contract((left, "y h m"), (rho, "o c y"), out="o c h m")
    rhs = contract(
        (delta, "h1 h2 h"), (rho, "x e m"), (phi_hm, "xp h2p h2 x"), (left, "o h1 xp"), (mu, "c h2p e"), out="o c h m"
    )
    report.check_equal(Identity.TWO_FOLD_LEFT_COLINEAR, lhs, rhs, 2)
    ctx.check_morphism(report, left, [H.obj, obj], [obj], "left action")
    ctx.check_morphism(report, right, [obj, H.obj], [obj], "right action")
    ctx.check_morphism(report, rho, [obj], [obj, H.obj], "right coaction")
    if lam is None:
        return report

    phi_mh = _phi(ctx, obj, H.obj)
    report.check_equal(Identity.HOPF_BIMODULE_LEFT_COUNIT, contract((lam, "c o m"), (H.counit, "c"), out="o m"), I, 1)
    lhs = contract((lam, "c1 x m"), (lam, "c2 o x"), out="c1 c2 o m")
    rhs = contract((lam, "c o m"), (delta, "c1 c2 c"), out="c1 c2 o m")
    report.check_equal(Identity.HOPF_BIMODULE_LEFT_COASSOCIATIVITY, lhs, rhs, 3)
    lhs = contract((left, "y h m"), (lam, "c o y"), out="c o h m")
    rhs = contract(
        (delta, "h1 h2 h"), (lam, "e x m"), (phi_hh, "ep h2p h2 e"), (mu, "c h1 ep"), (left, "o h2p x"), out="c o h m"
    )
    report.check_equal(Identity.LEFT_COACTION_BIMODULE_MAP, lhs, rhs, 2, note="left action")
    lhs = contract((right, "y m h"), (lam, "c o y"), out="c o m h")
    rhs = contract(
        (lam, "e x m"), (delta, "h1 h2 h"), (phi_mh, "h1p xp x h1"), (mu, "c e h1p"), (right, "o xp h2"), out="c o m h"
    )
    report.check_equal(Identity.LEFT_COACTION_BIMODULE_MAP, lhs, rhs, 2, note="right action")
    lhs = contract((rho, "x c m"), (lam, "e o x"), out="e o c m")
    rhs = contract((lam, "e x m"), (rho, "o c x"), out="e o c m")
    report.check_equal(Identity.HOPF_BIMODULE_BICOMODULE, lhs, rhs, 3)
    ctx.check_morphism(report, lam, [obj], [H.obj, obj], "left coaction")
    return report


def two_fold_from_bicomodule(
    ctx: BraidedContext, H: BraidedHopfAlgebraData, B: BraidedBicomoduleAlgebraData
) -> TwoFoldHopfModuleData:
    """B with h·b = v(h)b and b·h = bv(h), keeping its coactions."""
    if B.v is None:
        raise PreconditionError("the bicomodule algebra carries no morphism v: H → B")
    left = contract((B.v, "x h"), (B.algebra.mu, "o x b"), out="o h b")
    right = contract((B.v, "y h"), (B.algebra.mu, "o b y"), out="o b h")
    M = TwoFoldHopfModuleData(B.obj, left, right, B.right, B.left)
    verify_two_fold(ctx, H, M).require(CertificationError, "bicomodule algebra as a two-fold Hopf module")
    return M


@dataclass(frozen=True, eq=False)
class BraidedCoinvariants:
    """E = μ⁺(B⊗S)ρ split as (B₀, i, p), with the adjoint action on B and its restriction to B₀."""

    projector: LinearMap
    splitting: Splitting
    obj: BraidedObject
    adjoint: Tensor
    action: Tensor
    report: Report

    @property
    def inclusion(self) -> Tensor:
        return self.splitting.inclusion.tensor

    @property
    def projection(self) -> Tensor:
        return self.splitting.projection.tensor


def _adjoint(ctx: BraidedContext, H: BraidedHopfAlgebraData, M: TwoFoldHopfModuleData) -> Tensor:
    """ad(h⊗m) = (h₁·m')·S(h₂') where φ(h₂⊗m) = m'⊗h₂'."""
    return contract(
        (H.delta, "h1 h2 h"),
        (_phi(ctx, H.obj, M.obj), "mp h2p h2 m"),
        (M.left_action, "x h1 mp"),
        (H.antipode, "s h2p"),
        (M.right_action, "o x s"),
        out="o h m",
    )


def braided_coinvariants(
    ctx: BraidedContext, H: BraidedHopfAlgebraData, M: TwoFoldHopfModuleData
) -> BraidedCoinvariants:
    """
    Split E and certify that the image is the equalizer of ρ and B⊗η, that p
    coequalizes μ⁺ and B⊗ε, and the relations between E, p and the adjoint action.

    Raises NotIdempotentError (with a witness) when E∘E ≠ E.
    """
    logger = logging.getLogger(__name__)
    verify_two_fold(ctx, H, M).require(PreconditionError, "coinvariants need a two-fold Hopf module")
    report = Report("braided coinvariants", tags=BRAIDED_COINVARIANT_TAGS)
    rho, left, right = M.right_coaction, M.left_action, M.right_action
    E = contract((rho, "y c m"), (H.antipode, "s c"), (right, "o y s"), out="o m")
    report.check_equal(Identity.PROJECTOR_IDEMPOTENT, contract((E, "o x"), (E, "x m"), out="o m"), E, 1)
    ctx.check_morphism(report, E, [M.obj], [M.obj], "projector")
    splitting = split_idempotent(LinearMap(E, (M.dim,), (M.dim,)))
    report.require(CertificationError, "braided projector")
    i, p = splitting.inclusion.tensor, splitting.projection.tensor

    lhs = contract((i, "x v"), (rho, "o c x"), out="o c v")
    report.check_equal(Identity.COINVARIANTS_EQUALIZER, lhs, outer(i, H.unit).transpose((0, 2, 1)), 2)
    lhs = contract((right, "y m h"), (p, "o y"), out="o m h")
    report.check_equal(Identity.COINVARIANTS_COEQUALIZER, lhs, outer(p, H.counit), 1)

    ad = _adjoint(ctx, H, M)
    E_ad = contract((ad, "x h m"), (E, "o x"), out="o h m")
    report.check_equal(Identity.ADJOINT_PROJECTOR, E_ad, contract((left, "x h m"), (E, "o x"), out="o h m"), 1)
    report.check_equal(Identity.PROJECTOR_ACTION, E_ad, contract((E, "x m"), (ad, "o h x"), out="o h m"), 1)
    lhs = contract((ad, "x h m"), (p, "o x"), out="o h m")
    report.check_equal(Identity.ADJOINT_PROJECTION, lhs, contract((left, "x h m"), (p, "o x"), out="o h m"), 1)
    action = contract((i, "x v"), (ad, "y h x"), (p, "o y"), out="o h v")
    lhs = contract((action, "x h v"), (i, "o x"), out="o h v")
    report.check_equal(Identity.ADJOINT_RESTRICTION, lhs, contract((i, "x v"), (ad, "o h x"), out="o h v"), 1)
    check_left_module(report, H.algebra, action)
    obj = ctx.split(M.obj, splitting)
    ctx.check_morphism(report, action, [H.obj, obj], [obj], "restricted adjoint action")
    report.require(CertificationError, "braided coinvariants")
    logger.info(f"braided coinvariants of dimension {splitting.rank} in a {M.dim}-dimensional two-fold module")
    return BraidedCoinvariants(LinearMap(E, (M.dim,), (M.dim,)), splitting, obj, ad, action, report)


@dataclass(frozen=True, eq=False)
class BraidedRightStructure:
    """B ≅ B₀#H as right comodule algebras through ω(b₀#h) = i(b₀)v(h)."""

    module_algebra: BraidedModuleAlgebraData
    smash: BraidedAlgebraData
    omega: LinearMap
    omega_inv: LinearMap
    coinvariants: BraidedCoinvariants
    report: Report


def braided_right_structure(
    ctx: BraidedContext, H: BraidedHopfAlgebraData, B: BraidedBicomoduleAlgebraData, v: Tensor
) -> BraidedRightStructure:
    """
    For a right comodule algebra B with a colinear algebra map v: H → B, the
    coinvariants B₀ form a module algebra under the restricted adjoint action
    and ω = ∇(i⊗v) is inverse to ω⁻¹ = (p⊗H)ρ.
    """
    logger = logging.getLogger(__name__)
    if v.shape != (B.dim, H.dim):
        raise ShapeMismatchError(f"v has shape {v.shape}, expected {(B.dim, H.dim)}")
    pre = Report("braided right structure inputs")
    pre.extend(verify_braided_comodule_algebra(ctx, H, BraidedAlgebraData(B.obj, B.algebra), B.right, "right"))
    check_algebra_map(pre, v, H.algebra, B.algebra, "v")
    lhs = contract((v, "x h"), (B.right, "o c x"), out="o c h")
    rhs = contract((H.delta, "h1 c h"), (v, "o h1"), out="o c h")
    pre.check_equal(Identity.MORPHISM_RIGHT_COLINEAR, lhs, rhs, 2, "v")
    ctx.check_morphism(pre, v, [H.obj], [B.obj], "v")
    pre.require(PreconditionError, "structure theorem needs a right comodule algebra with a colinear algebra map")

    Bv = replace(B, left=None, v=v)
    M = two_fold_from_bicomodule(ctx, H, Bv)
    coinvariants = braided_coinvariants(ctx, H, M)
    report = Report("braided right structure", tags=BRAIDED_STRUCTURE_TAGS)
    report.extend(coinvariants.report, "coinvariants")
    i, p = coinvariants.inclusion, coinvariants.projection
    E, ad = coinvariants.projector.tensor, coinvariants.adjoint
    muB, unitB = B.algebra.mu, B.algebra.unit

    mu0 = contract((i, "x a"), (i, "y b"), (muB, "z x y"), (p, "o z"), out="o a b")
    unit0 = contract((unitB, "x"), (p, "o x"), out="o")
    lhs = contract((mu0, "x a b"), (i, "o x"), out="o a b")
    rhs = contract((i, "x a"), (i, "y b"), (muB, "o x y"), out="o a b")
    report.check_equal(Identity.MULTIPLICATION_RESTRICTION, lhs, rhs, 1)
    report.check_equal(Identity.UNIT_RESTRICTION, contract((unit0, "x"), (i, "o x"), out="o"), unitB, 1)
    lhs = contract((v, "x h"), (i, "y a"), (muB, "z x y"), (E, "o z"), out="o h a")
    report.check_equal(Identity.PROJECTOR_ADJOINT, lhs, contract((ad, "o h x"), (i, "x a"), out="o h a"), 1)
    lhs = contract((muB, "x a b"), (ad, "o h x"), out="o h a b")
    rhs = contract(
        (H.delta, "h1 h2 h"),
        (_phi(ctx, H.obj, B.obj), "ap h2p h2 a"),
        (ad, "x h1 ap"),
        (ad, "y h2p b"),
        (muB, "o x y"),
        out="o h a b",
    )
    report.check_equal(Identity.ADJOINT_MODULE_ALGEBRA, lhs, rhs, 1)
    report.require(CertificationError, "braided coinvariant algebra")

    A0 = BraidedModuleAlgebraData(coinvariants.obj, AlgebraData(mu0, unit0), coinvariants.action)
    report.extend(verify_braided_module_algebra(ctx, H, A0), "coinvariants")
    report.require(CertificationError, "braided coinvariant module algebra")
    smash = braided_smash(ctx, H, A0)
    n = smash.dim
    omega = contract((i, "x a"), (v, "y h"), (muB, "o x y"), out="o a h")
    omega_inv = contract((B.right, "y c b"), (p, "o y"), out="o c b")
    omega_flat, omega_inv_flat = omega.reshape((B.dim, n)), omega_inv.reshape((n, B.dim))
    forth = contract((omega_flat, "o x"), (omega_inv_flat, "x b"), out="o b")
    back = contract((omega_inv_flat, "o x"), (omega_flat, "x b"), out="o b")
    report.check_equal(Identity.MORPHISM_INVERSE, forth, eye(H.field, B.dim), 1)
    report.check_equal(Identity.MORPHISM_INVERSE, back, eye(H.field, n), 1)
    lhs = contract((omega, "y a h"), (B.right, "o c y"), out="o c a h")
    rhs = contract((H.delta, "h1 c h"), (omega, "o a h1"), out="o c a h")
    report.check_equal(Identity.MORPHISM_RIGHT_COLINEAR, lhs, rhs, 2, "omega", tag="omegarightcolinear")
    check_algebra_map(report, omega_flat, smash.algebra, B.algebra, "omega")
    ctx.check_morphism(report, omega_flat, [smash.obj], [B.obj], "omega")
    report.require(CertificationError, "braided right structure")
    logger.info(f"certified B ≅ B₀#H as right comodule algebras, B₀ of dimension {A0.dim}")
    return BraidedRightStructure(
        A0,
        smash,
        LinearMap(omega_flat, (n,), (B.dim,)),
        LinearMap(omega_inv_flat, (B.dim,), (n,)),
        coinvariants,
        report,
    )


@dataclass(frozen=True, eq=False)
class BraidedStructureTheorem:
    """B ≅ B₀#H as bicomodule algebras with B₀ a Yetter-Drinfeld algebra."""

    coinvariants: BraidedYDData
    smash: BraidedBicomoduleAlgebraData
    omega: LinearMap
    omega_inv: LinearMap
    splitting: Splitting
    report: Report


def structure_theorem_braided(
    ctx: BraidedContext, H: BraidedHopfAlgebraData, B: BraidedBicomoduleAlgebraData, v: Tensor
) -> BraidedStructureTheorem:
    logger = logging.getLogger(__name__)
    if B.left is None:
        raise PreconditionError("the structure theorem needs a left coaction on B")
    Bv = replace(B, v=v)
    verify_braided_bicomodule_algebra(ctx, H, Bv).require(
        PreconditionError, "structure theorem needs a bicomodule algebra with a bicolinear algebra map"
    )
    right = braided_right_structure(ctx, H, B, v)
    report = Report("braided structure theorem", tags=BRAIDED_STRUCTURE_TAGS)
    report.extend(right.report)
    coinvariants = right.coinvariants
    i, p = coinvariants.inclusion, coinvariants.projection
    coaction = contract((i, "x a"), (B.left, "c y x"), (p, "o y"), out="c o a")
    lhs = contract((coaction, "c y a"), (i, "o y"), out="c o a")
    report.check_equal(Identity.COACTION_RESTRICTION, lhs, contract((i, "x a"), (B.left, "c o x"), out="c o a"), 2)
    A = BraidedYDData(coinvariants.obj, coinvariants.action, coaction, right.module_algebra.algebra)
    report.extend(verify_braided_yd(ctx, H, A), "coinvariants")
    report.require(CertificationError, "braided coinvariant Yetter-Drinfeld algebra")

    smash = braided_yd_smash_bicomodule(ctx, H, A)
    report.extend(verify_braided_bicomodule_morphism(ctx, H, right.omega.tensor, smash, Bv), "omega")
    report.require(CertificationError, "braided structure theorem")
    logger.info(f"certified B ≅ B₀#H as bicomodule algebras in the {ctx.kind} context")
    return BraidedStructureTheorem(A, smash, right.omega, right.omega_inv, coinvariants.splitting, report)


def hopf_bimodule_from_yd(ctx: BraidedContext, H: BraidedHopfAlgebraData, V: BraidedYDData) -> TwoFoldHopfModuleData:
    """
    The Hopf bimodule V⊗H:

    h·(v⊗k) = h₁·v'⊗h₂'k with φ(h₂⊗v) = v'⊗h₂', (v⊗k)·h = v⊗kh,
    λ(v⊗k) = v⁻¹k₁'⊗(v⁰'⊗k₂) with φ(v⁰⊗k₁) = k₁'⊗v⁰', ρ = V⊗Δ.
    """
    verify_braided_yd(ctx, H, V).require(PreconditionError, "construction needs a braided Yetter-Drinfeld module")
    n, d = V.dim * H.dim, H.dim
    left = contract(
        (H.delta, "h1 h2 h"),
        (_phi(ctx, H.obj, V.obj), "vp h2p h2 v"),
        (V.action, "vo h1 vp"),
        (H.mu, "ho h2p k"),
        out="vo ho h v k",
    ).reshape((n, d, n))
    right = contract((eye(H.field, V.dim), "vo v"), (H.mu, "ho k h"), out="vo ho v k h").reshape((n, n, d))
    lam = contract(
        (V.coaction, "e x v"),
        (H.delta, "k1 ho k"),
        (_phi(ctx, V.obj, H.obj), "k1p vo x k1"),
        (H.mu, "c e k1p"),
        out="c vo ho v k",
    ).reshape((d, n, n))
    rho = contract((eye(H.field, V.dim), "vo v"), (H.delta, "ho c k"), out="vo ho c v k").reshape((n, d, n))
    M = TwoFoldHopfModuleData(ctx.tensor(V.obj, H.obj), left, right, rho, lam)
    verify_two_fold(ctx, H, M).require(CertificationError, "Hopf bimodule built on V⊗H")
    return M


@dataclass(frozen=True, eq=False)
class BraidedDecomposition:
    module: BraidedYDData
    coinvariants: BraidedCoinvariants
    report: Report


def yd_from_hopf_bimodule(
    ctx: BraidedContext, H: BraidedHopfAlgebraData, M: TwoFoldHopfModuleData
) -> BraidedDecomposition:
    """The coinvariants of a Hopf bimodule with the adjoint action and the inherited left coaction."""
    if M.left_coaction is None:
        raise PreconditionError("a Hopf bimodule needs a left coaction")
    coinvariants = braided_coinvariants(ctx, H, M)
    i, p = coinvariants.inclusion, coinvariants.projection
    report = Report("braided Yetter-Drinfeld module of coinvariants", tags=BRAIDED_STRUCTURE_TAGS)
    coaction = contract((i, "x a"), (M.left_coaction, "c y x"), (p, "o y"), out="c o a")
    lhs = contract((coaction, "c y a"), (i, "o y"), out="c o a")
    rhs = contract((i, "x a"), (M.left_coaction, "c o x"), out="c o a")
    report.check_equal(Identity.COACTION_RESTRICTION, lhs, rhs, 2)
    V = BraidedYDData(coinvariants.obj, coinvariants.action, coaction)
    report.extend(verify_braided_yd(ctx, H, V), "coinvariants")
    report.require(CertificationError, "coinvariants as a braided Yetter-Drinfeld module")
    return BraidedDecomposition(V, coinvariants, report)


def braided_round_trip(
    ctx: BraidedContext, H: BraidedHopfAlgebraData, V: BraidedYDData
) -> Tuple[BraidedDecomposition, Report]:
    """Decompose V⊗H again and compare with V through θ(v) = p(v⊗1)."""
    M = hopf_bimodule_from_yd(ctx, H, V)
    decomposition = yd_from_hopf_bimodule(ctx, H, M)
    W = decomposition.module
    report = Report("braided round trip")
    E = decomposition.coinvariants.projector.tensor
    j = contract((eye(H.field, V.dim), "a v"), (H.unit, "h"), out="a h v").reshape((M.dim, V.dim))
    report.check_equal(Identity.ROUND_TRIP_SECTION, contract((E, "o x"), (j, "x v"), out="o v"), j, 1)
    theta = contract((decomposition.coinvariants.projection, "o x"), (j, "x v"), out="o v")
    bijective = theta.shape[0] == theta.shape[1]
    if bijective:
        try:
            invert_map(LinearMap(theta, (V.dim,), (W.dim,)))
        except SingularMapError:
            bijective = False
    report.record(Identity.ROUND_TRIP_BIJECTIVE, bijective, note=f"dimensions {V.dim} and {W.dim}")
    lhs = contract((theta, "o x"), (V.action, "x h v"), out="o h v")
    rhs = contract((W.action, "o h y"), (theta, "y v"), out="o h v")
    report.check_equal(Identity.ROUND_TRIP_ACTION, lhs, rhs, 1)
    lhs = contract((theta, "o x"), (V.coaction, "c x v"), out="c o v")
    rhs = contract((W.coaction, "c o y"), (theta, "y v"), out="c o v")
    report.check_equal(Identity.ROUND_TRIP_COACTION, lhs, rhs, 2)
    return decomposition, report

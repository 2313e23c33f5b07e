"""
Exact computer algebra for finite-dimensional quasi-Hopf, weak Hopf and
braided Hopf algebras: axiom verification, smash products, coinvariants by
splitting idempotents, and certified structure theorems.
"""

from hopfkit.braided import (
    BraidedBicomoduleAlgebraData,
    BraidedContext,
    BraidedHopfAlgebraData,
    BraidedModuleAlgebraData,
    BraidedObject,
    BraidedYDData,
    braided_coinvariants,
    braided_round_trip,
    braided_smash,
    structure_theorem_braided,
    verify_braided_hopf,
    verify_braided_yd,
    verify_context,
    yd_braiding,
)
from hopfkit.catalog import Example, build_example, list_examples, verify_example
from hopfkit.core import (
    LinearMap,
    Splitting,
    Tensor,
    compose,
    contract,
    identity_map,
    image_basis,
    invert_map,
    kernel_basis,
    kron,
    quotient,
    rank,
    split_idempotent,
    swap_map,
)
from hopfkit.field import QQ, Field, PrimeField, RationalField
from hopfkit.files import example_document, load_document, read_example
from hopfkit.quasi_hopf import (
    LeftModuleAlgebraData,
    QuasiBicomoduleAlgebraData,
    QuasiHopfAlgebraData,
    YetterDrinfeldAlgebraData,
    YetterDrinfeldModuleData,
    build_smash,
    coinvariants_projector,
    schauenburg_construct,
    schauenburg_round_trip,
    structure_theorem_quasi,
    verify_quasi_hopf,
    verify_yd,
)
from hopfkit.report import Check, Report, Verdict
from hopfkit.weak_hopf import (
    WeakBicomoduleAlgebraData,
    WeakHopfAlgebraData,
    counital_maps,
    relative_smash,
    structure_theorem_weak,
    verify_weak_hopf,
    verify_weak_yd,
    weak_coinvariants,
)

__all__ = [
    "Field",
    "RationalField",
    "PrimeField",
    "QQ",
    "Tensor",
    "LinearMap",
    "Splitting",
    "contract",
    "compose",
    "kron",
    "identity_map",
    "swap_map",
    "invert_map",
    "rank",
    "image_basis",
    "kernel_basis",
    "quotient",
    "split_idempotent",
    "Report",
    "Check",
    "Verdict",
    "QuasiHopfAlgebraData",
    "LeftModuleAlgebraData",
    "YetterDrinfeldModuleData",
    "YetterDrinfeldAlgebraData",
    "QuasiBicomoduleAlgebraData",
    "verify_quasi_hopf",
    "verify_yd",
    "build_smash",
    "coinvariants_projector",
    "schauenburg_construct",
    "schauenburg_round_trip",
    "structure_theorem_quasi",
    "WeakHopfAlgebraData",
    "WeakBicomoduleAlgebraData",
    "verify_weak_hopf",
    "verify_weak_yd",
    "counital_maps",
    "relative_smash",
    "weak_coinvariants",
    "structure_theorem_weak",
    "BraidedContext",
    "BraidedObject",
    "BraidedHopfAlgebraData",
    "BraidedModuleAlgebraData",
    "BraidedYDData",
    "BraidedBicomoduleAlgebraData",
    "verify_context",
    "verify_braided_hopf",
    "verify_braided_yd",
    "braided_smash",
    "yd_braiding",
    "braided_coinvariants",
    "braided_round_trip",
    "structure_theorem_braided",
    "Example",
    "build_example",
    "list_examples",
    "verify_example",
    "example_document",
    "load_document",
    "read_example",
]

"""
Shared helpers for hopfkit tests: running the CLI in a subprocess and
perturbing structure tensors one entry at a time.
"""

import os
import subprocess
import sys
from dataclasses import replace
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, TypeVar, Union

from hopfkit.algebra import AlgebraData
from hopfkit.braided import BraidedHopfAlgebraData
from hopfkit.core import Tensor
from hopfkit.quasi_hopf import QuasiHopfAlgebraData
from hopfkit.weak_hopf import WeakHopfAlgebraData

src_path = Path(__file__).parent.parent.parent / "src"

T = TypeVar("T")

HopfData = Union[QuasiHopfAlgebraData, WeakHopfAlgebraData, BraidedHopfAlgebraData]

QUASI_TENSORS = ("mu", "unit", "delta", "counit", "phi", "phi_inv", "antipode", "antipode_inv", "alpha", "beta")
WEAK_TENSORS = ("mu", "unit", "delta", "counit", "antipode", "antipode_inv")
BRAIDED_TENSORS = WEAK_TENSORS

# every equation label a report may carry
EQUATION_TAGS = frozenset(
    """
    2.1a 2.1b 2.1c 2.2a 2.2b 2.31b 4colturi NSW NV YD act bca1 bca2 bca3 bca4 bistwofold calanen comutst
    consec converseYD cucu defe delta1 delta21 deltaz dudu eqantipodedef eqantipode eqbialgebra eqbmodalg
    eqbzero eqdiagonalaction eqdiagonalcoaction eqead eqiad eqinabla eqinherited eqip eqleftcomodulealgebra
    eqmodulealgebra eqrightcomodulealgebra eqvi eqyd est exyz iequalizer lala lca1 lca2 lca3 lca4 ma1 modalg1
    multi omegarightcolinear pcoequalizer proprightcomod propsmashbicomodule q1 q2 q3 q4 q5 q6 qb1 qb2 qb3
    qb4 qb5 rca1 rca2 rca3 rca4 sec1 sec2 secbraided struct4corners thmydccc titi tria unitate weakYD
    weakstruct4corners wyd1 wyd2 wyd3 yd1 yd2 yd3
    """.split()
)


def run_cli(*args: Union[str, Path], env: Optional[Dict[str, str]] = None) -> subprocess.CompletedProcess[str]:
    """Run ``python -m hopfkit.cli`` with src on the path."""
    merged = {**os.environ, **(env or {})}
    merged["PYTHONPATH"] = os.pathsep.join(filter(None, [str(src_path), merged.get("PYTHONPATH", "")]))
    cmd = [sys.executable, "-m", "hopfkit.cli", *(str(a) for a in args)]
    return subprocess.run(cmd, capture_output=True, text=True, env=merged)


def bump(tensor: Tensor, index: Tuple[int, ...]) -> Tensor:
    """The same tensor with one added at ``index``."""
    data = tensor.data.copy()
    data[index] = data[index] + tensor.field.one
    return Tensor(tensor.field, data)


def with_tensor(H: HopfData, name: str, tensor: Tensor) -> HopfData:
    """Replace one named structure tensor, leaving every other (cached inverses included) alone."""
    if name == "mu":
        return replace(H, algebra=AlgebraData(tensor, H.unit))
    if name == "unit":
        return replace(H, algebra=AlgebraData(H.mu, tensor))
    return replace(H, **{name: tensor})


def tensor_of(H: HopfData, name: str) -> Tensor:
    if name == "mu":
        return H.mu
    if name == "unit":
        return H.unit
    return getattr(H, name)


def single_entry_mutations(H: HopfData, names: Tuple[str, ...], limit: int = 100) -> Iterator[Tuple[str, HopfData]]:
    """
    Up to ``limit`` copies of H, each with one structure constant increased
    by one, spread evenly over every entry of the named tensors.
    """
    entries: List[Tuple[str, Tuple[int, ...]]] = []
    for name in names:
        shape = tensor_of(H, name).shape
        entries += [(name, index) for index in _indices(shape)]
    for name, index in _spread(entries, limit):
        yield f"{name}{list(index)}", with_tensor(H, name, bump(tensor_of(H, name), index))


def _indices(shape: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    if not shape:
        yield ()
        return
    for head in range(shape[0]):
        for rest in _indices(shape[1:]):
            yield (head,) + rest


def tensor_mutations(tensor: Tensor, limit: int = 100) -> Iterator[Tuple[Tuple[int, ...], Tensor]]:
    """Up to ``limit`` copies of one tensor with a single entry increased by one."""
    for index in _spread(list(_indices(tensor.shape)), limit):
        yield index, bump(tensor, index)


def _spread(entries: List[T], limit: int) -> List[T]:
    step = max(1, len(entries) // limit)
    return entries[::step][:limit]

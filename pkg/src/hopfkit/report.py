"""
Certification reports.

Every ``verify_*`` operation returns a `Report`: an ordered list of `Check`
entries, one per identity evaluated. A failing check carries a witness, the
lexicographically first input basis tuple on which the two sides of the
identity differ, together with both sides at that input.

Checks that evaluate a labelled equation also carry its equation tag
(``q3``, ``wyd2``, ``eqyd``, ...). A report attaches tags from the table it
was created with, and `Report.identities` groups the checks by tag.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Type

import numpy as np

from .core import Tensor
from .exceptions import ReportError
from .field import Scalar, format_scalar
from .identities import Identity


class Verdict(Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


@dataclass
class Check:
    """The outcome of one identity."""

    identity: Identity
    verdict: Verdict
    scope: str = ""
    witness: Optional[Tuple[int, ...]] = None
    lhs: Optional[List[Scalar]] = None
    rhs: Optional[List[Scalar]] = None
    note: str = ""
    tag: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.verdict is not Verdict.FAIL

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"identity": self.identity.value, "verdict": self.verdict.value}
        if self.tag is not None:
            out["tag"] = self.tag
        if self.scope:
            out["scope"] = self.scope
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.lhs is not None:
            out["lhs"] = [format_scalar(x) for x in self.lhs]
        if self.rhs is not None:
            out["rhs"] = [format_scalar(x) for x in self.rhs]
        if self.note:
            out["note"] = self.note
        return out

    def describe(self) -> str:
        where = f" [{self.scope}]" if self.scope else ""
        tag = f" ({self.tag})" if self.tag is not None else ""
        line = f"{self.verdict.value.upper():<14} {self.identity.value}{tag}{where}"
        if self.witness is not None:
            line += f" at {self.witness}"
        if self.lhs is not None and self.rhs is not None:
            lhs = ", ".join(str(format_scalar(x)) for x in self.lhs)
            rhs = ", ".join(str(format_scalar(x)) for x in self.rhs)
            line += f": lhs=[{lhs}] rhs=[{rhs}]"
        if self.note:
            line += f" ({self.note})"
        return line


def first_difference(lhs: Tensor, rhs: Tensor, outputs: int) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    Locate the first entry where two equally shaped tensors differ.

    The first ``outputs`` axes are outputs. Differences are ordered by input
    index first, then output index. Returns ``(inputs, outputs)`` or None.
    """
    bad = np.argwhere(lhs.mismatches(rhs))
    if not len(bad):
        return None
    keys = [(tuple(int(i) for i in row[outputs:]), tuple(int(i) for i in row[:outputs])) for row in bad]
    return min(keys)


def combined_verdict(checks: Sequence[Check]) -> Verdict:
    """Fail if any check failed, pass if any passed, otherwise not applicable."""
    if any(c.verdict is Verdict.FAIL for c in checks):
        return Verdict.FAIL
    if any(c.verdict is Verdict.PASS for c in checks):
        return Verdict.PASS
    return Verdict.NOT_APPLICABLE


@dataclass
class Report:
    """An ordered collection of checks about one subject."""

    subject: str
    checks: List[Check] = field(default_factory=lambda: [])
    elapsed: Optional[float] = None
    tags: Mapping[Identity, str] = field(default_factory=lambda: {})

    def add(self, check: Check) -> Check:
        logger = logging.getLogger(__name__)
        if check.tag is None:
            check.tag = self.tags.get(check.identity)
        logger.debug(f"{self.subject}: {check.describe()}")
        self.checks.append(check)
        return check

    def check_equal(
        self,
        identity: Identity,
        lhs: Tensor,
        rhs: Tensor,
        outputs: int,
        scope: str = "",
        note: str = "",
        tag: Optional[str] = None,
    ) -> Check:
        """Record whether two structure tensors agree, with a witness if they do not."""
        found = first_difference(lhs, rhs, outputs)
        if found is None:
            return self.add(Check(identity, Verdict.PASS, scope, note=note, tag=tag))
        inputs, outs = found
        if inputs or lhs.ndim > outputs:
            index = (Ellipsis,) + inputs
            left = [x for x in np.asarray(lhs.data[index], dtype=object).reshape(-1)]
            right = [x for x in np.asarray(rhs.data[index], dtype=object).reshape(-1)]
            witness = inputs
        else:
            left, right = [lhs.data[outs]], [rhs.data[outs]]
            witness = outs
        return self.add(Check(identity, Verdict.FAIL, scope, witness, left, right, note, tag))

    def record(
        self,
        identity: Identity,
        passed: bool,
        scope: str = "",
        witness: Optional[Sequence[int]] = None,
        note: str = "",
    ) -> Check:
        """Record a check decided outside of a tensor comparison (ranks, bijectivity)."""
        verdict = Verdict.PASS if passed else Verdict.FAIL
        wit = None if passed or witness is None else tuple(int(i) for i in witness)
        return self.add(Check(identity, verdict, scope, wit, note=note))

    def not_applicable(self, identity: Identity, scope: str = "", note: str = "") -> Check:
        return self.add(Check(identity, Verdict.NOT_APPLICABLE, scope, note=note))

    def extend(self, other: "Report", scope: Optional[str] = None) -> None:
        """Append another report's checks; their tags come along unchanged."""
        for check in other.checks:
            if scope:
                check = replace(check, scope=f"{scope}/{check.scope}" if check.scope else scope)
            self.checks.append(check)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [check for check in self.checks if not check.passed]

    def find(self, identity: Identity, scope: Optional[str] = None) -> List[Check]:
        return [c for c in self.checks if c.identity is identity and (scope is None or c.scope == scope)]

    def verdict_of(self, identity: Identity, scope: Optional[str] = None) -> Verdict:
        """Verdict of an identity: fail if any of its checks failed, pass if any passed."""
        found = self.find(identity, scope)
        if not found:
            raise KeyError(f"{identity.value} was not checked in {self.subject}")
        return combined_verdict(found)

    def verdict_of_tag(self, tag: str) -> Verdict:
        found = [c for c in self.checks if c.tag == tag]
        if not found:
            raise KeyError(f"({tag}) was not checked in {self.subject}")
        return combined_verdict(found)

    def identities(self) -> List[Dict[str, Any]]:
        """
        One entry per equation tag, in order of first appearance.

        An entry holds the tag as its ``id`` and the combined verdict. A
        failing entry also names the first failing check with its witness.
        """
        grouped: Dict[str, List[Check]] = {}
        for check in self.checks:
            if check.tag is not None:
                grouped.setdefault(check.tag, []).append(check)
        out: List[Dict[str, Any]] = []
        for tag, checks in grouped.items():
            entry: Dict[str, Any] = {"id": tag, "verdict": combined_verdict(checks).value}
            failed = next((c for c in checks if c.verdict is Verdict.FAIL), None)
            if failed is not None:
                entry["failure"] = failed.to_dict()
            out.append(entry)
        return out

    def require(self, error: Type[ReportError], message: str) -> None:
        """Raise ``error`` carrying this report when any check failed."""
        if self.passed:
            return
        logger = logging.getLogger(__name__)
        first = self.failures[0]
        logger.warning(f"{self.subject}: {first.describe()}")
        raise error(f"{message}: {first.describe()}", self)

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "subject": self.subject,
            "verdict": "pass" if self.passed else "fail",
            "identities": self.identities(),
            "checks": [check.to_dict() for check in self.checks],
        }
        if timing and self.elapsed is not None:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def summary(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'} ({len(self.checks)} checks)"]
        lines += [f"  {check.describe()}" for check in self.checks]
        return "\n".join(lines)

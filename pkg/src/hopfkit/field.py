"""
Exact scalar arithmetic for hopfkit.

Two fields are supported: the rationals, whose elements are
`fractions.Fraction`, and prime fields GF(p), whose elements are `Residue`.
Both kinds of element interoperate with plain Python integers, which keeps
numpy object arrays of them closed under the arithmetic numpy performs.
"""

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Union

import numpy as np
import numpy.typing as npt

from .exceptions import AlgebraFileError, FieldMismatchError

Array = npt.NDArray[Any]

RATIONAL_TOKEN = re.compile(r"[+-]?\d+(/\d+)?")


@dataclass(frozen=True)
class Residue:
    """An element of GF(p), stored in the canonical range [0, p)."""

    value: int
    p: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.p:
            object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other: object) -> Optional["Residue"]:
        # None lets numpy arrays and other operands take over via the reflected method
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatchError(f"cannot combine GF({self.p}) with GF({other.p})")
            return other
        if isinstance(other, int):
            return Residue(other % self.p, self.p)
        if isinstance(other, Fraction):
            return Residue(other.numerator % self.p, self.p) / Residue(other.denominator % self.p, self.p)
        return None

    def __add__(self, other: object) -> "Residue":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Residue((self.value + rhs.value) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Residue":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Residue((self.value - rhs.value) % self.p, self.p)

    def __rsub__(self, other: object) -> "Residue":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return Residue((lhs.value - self.value) % self.p, self.p)

    def __mul__(self, other: object) -> "Residue":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Residue((self.value * rhs.value) % self.p, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Residue":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: object) -> "Residue":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __neg__(self) -> "Residue":
        return Residue((-self.value) % self.p, self.p)

    def __pow__(self, exponent: int) -> "Residue":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Residue(pow(self.value, exponent, self.p), self.p)

    def inverse(self) -> "Residue":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Residue(pow(self.value, self.p - 2, self.p), self.p)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.p))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.p})"


Scalar = Union[Fraction, Residue]


class Field(ABC):
    """A base field; every tensor carries exactly one."""

    @property
    @abstractmethod
    def tag(self) -> Dict[str, Any]:
        """The JSON field tag, e.g. {"kind": "rational"}."""

    @abstractmethod
    def element(self, value: Any) -> Scalar:
        """Coerce an int, Fraction or element of this field into canonical form."""

    @abstractmethod
    def parse(self, token: Any) -> Scalar:
        """Parse a serialized scalar."""

    @abstractmethod
    def format(self, value: Scalar) -> Union[str, int]:
        """Serialize a scalar."""

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def zero(self) -> Scalar:
        return self.element(0)

    @property
    def one(self) -> Scalar:
        return self.element(1)

    def zeros(self, shape: "tuple[int, ...]") -> Array:
        out = np.empty(shape, dtype=object)
        out.fill(self.zero)
        return out

    def identity(self, n: int) -> Array:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def array(self, values: Any) -> Array:
        """Build an object array of canonical elements from nested lists or another array."""
        raw = np.array(values, dtype=object)
        return self.coerce(raw)

    def coerce(self, raw: Array) -> Array:
        out = np.empty(raw.shape, dtype=object)
        flat_in = raw.reshape(-1)
        flat_out = out.reshape(-1)
        convert: Callable[[Any], Scalar] = self.element
        for k in range(flat_in.size):
            flat_out[k] = convert(flat_in[k])
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and self.tag == other.tag

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.tag.items())))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.tag})"


class RationalField(Field):
    @property
    def tag(self) -> Dict[str, Any]:
        return {"kind": "rational"}

    def element(self, value: Any) -> Scalar:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (bool, np.bool_)):
            return Fraction(int(value))
        if isinstance(value, (int, np.integer)):
            return Fraction(int(value))
        if isinstance(value, Residue):
            raise FieldMismatchError(f"GF({value.p}) element {value!r} used in a rational tensor")
        raise FieldMismatchError(f"not an exact rational: {value!r}")

    def parse(self, token: Any) -> Scalar:
        if isinstance(token, bool):
            raise AlgebraFileError(f"expected a rational, got {token!r}")
        if isinstance(token, int):
            return Fraction(token)
        if isinstance(token, str):
            if not RATIONAL_TOKEN.fullmatch(token.strip()):
                raise AlgebraFileError(f"malformed rational {token!r}: expected p/q")
            try:
                return Fraction(token.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise AlgebraFileError(f"malformed rational {token!r}: {e}") from e
        raise AlgebraFileError(f"expected a rational string 'p/q', got {token!r}")

    def format(self, value: Scalar) -> str:
        fraction = Fraction(value)  # type: ignore[arg-type]
        return f"{fraction.numerator}/{fraction.denominator}"


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def tag(self) -> Dict[str, Any]:
        return {"kind": "prime", "p": self.p}

    @property
    def characteristic(self) -> int:
        return self.p

    def element(self, value: Any) -> Scalar:
        if isinstance(value, Residue):
            if value.p != self.p:
                raise FieldMismatchError(f"GF({value.p}) element used in a GF({self.p}) tensor")
            return value
        if isinstance(value, (bool, np.bool_)):
            return Residue(int(value), self.p)
        if isinstance(value, (int, np.integer)):
            return Residue(int(value) % self.p, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({self.p})")
            return Residue(value.numerator % self.p, self.p) / Residue(value.denominator % self.p, self.p)
        raise FieldMismatchError(f"not an element of GF({self.p}): {value!r}")

    def parse(self, token: Any) -> Scalar:
        if isinstance(token, bool):
            raise AlgebraFileError(f"expected an integer mod {self.p}, got {token!r}")
        if isinstance(token, int):
            return Residue(token % self.p, self.p)
        if isinstance(token, str):
            if not RATIONAL_TOKEN.fullmatch(token.strip()):
                raise AlgebraFileError(f"malformed scalar {token!r} for GF({self.p})")
            try:
                return self.element(Fraction(token.strip()))
            except (ValueError, ZeroDivisionError) as e:
                raise AlgebraFileError(f"malformed scalar {token!r} for GF({self.p}): {e}") from e
        raise AlgebraFileError(f"expected an integer mod {self.p}, got {token!r}")

    def format(self, value: Scalar) -> int:
        return self.element(value).value  # type: ignore[union-attr]


QQ = RationalField()


def format_scalar(value: Any) -> Union[str, int]:
    """Serialize a scalar of either field without knowing which one it came from."""
    if isinstance(value, Residue):
        return value.value
    return QQ.format(QQ.element(value))


def field_from_tag(tag: Any) -> Field:
    """Inverse of `Field.tag`."""
    if not isinstance(tag, dict):
        raise AlgebraFileError(f"field tag must be an object, got {tag!r}")
    kind = tag.get("kind")  # type: ignore[union-attr]
    if kind == "rational":
        return QQ
    if kind == "prime":
        p = tag.get("p")  # type: ignore[union-attr]
        if not isinstance(p, int):
            raise AlgebraFileError(f"prime field needs an integer 'p', got {p!r}")
        try:
            return PrimeField(p)
        except ValueError as e:
            raise AlgebraFileError(str(e)) from e
    raise AlgebraFileError(f"unknown field kind {kind!r}")


def parse_field_option(text: str) -> Field:
    """Parse the CLI spelling of a field: 'rational' or 'prime:P'."""
    if text == "rational":
        return QQ
    if text.startswith("prime:"):
        try:
            return PrimeField(int(text.split(":", 1)[1]))
        except ValueError as e:
            raise ValueError(f"bad field {text!r}: {e}") from e
    raise ValueError(f"bad field {text!r}: expected 'rational' or 'prime:P'")

"""Scalar fields: exact Gaussian rationals and tolerant complex doubles."""

from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from random import Random
from typing import Any, TypeAlias

import sympy
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.polyerrors import CoercionFailed

from ..config import get_settings
from ..errors import AlgebraFormatError, BadParameters

# GaussianRational elements in exact mode, complex in numeric mode.
Scalar: TypeAlias = Any


class FieldMode(str, Enum):
    """Arithmetic mode of a scalar field."""

    EXACT = "exact"
    NUMERIC = "numeric"


class ScalarField(ABC):
    """Common interface of the exact and the numeric scalar field."""

    mode: FieldMode

    @property
    @abstractmethod
    def zero(self) -> Scalar: ...

    @property
    @abstractmethod
    def one(self) -> Scalar: ...

    @abstractmethod
    def convert(self, value: Any) -> Scalar:
        """Convert ints, fractions, strings or sympy numbers into the field."""

    @abstractmethod
    def is_zero(self, a: Scalar) -> bool: ...

    @abstractmethod
    def magnitude(self, a: Scalar) -> float: ...

    @abstractmethod
    def to_string(self, a: Scalar) -> str: ...

    @abstractmethod
    def parse(self, text: str) -> Scalar: ...

    @abstractmethod
    def to_complex(self, a: Scalar) -> complex: ...

    @abstractmethod
    def to_sympy(self, a: Scalar) -> sympy.Expr: ...

    @abstractmethod
    def from_sympy(self, expr: sympy.Expr) -> Scalar: ...

    @property
    def is_exact(self) -> bool:
        return self.mode == FieldMode.EXACT

    def eq(self, a: Scalar, b: Scalar) -> bool:
        return self.is_zero(a - b)

    def pivot_threshold(self, max_magnitude: float) -> float:
        """Smallest magnitude treated as a nonzero pivot."""
        return 0.0

    def sort_key(self, a: Scalar) -> tuple:
        """Ordering by (real, imaginary) part."""
        c = self.to_complex(a)
        return (round(c.real, 8), round(c.imag, 8))

    def random_element(self, rng: Random, height: int = 3, gaussian: bool = False) -> Scalar:
        """Deterministic small element drawn from ``rng``."""
        re = rng.randint(-height, height)
        im = rng.randint(-height, height) if gaussian else 0
        return self.convert(complex(re, im)) if not self.is_exact else QQ_I(re, im)


class ExactField(ScalarField):
    """The Gaussian rationals Q(i), backed by sympy's ``QQ_I`` domain."""

    mode = FieldMode.EXACT
    domain = QQ_I

    @property
    def zero(self) -> Scalar:
        return QQ_I.zero

    @property
    def one(self) -> Scalar:
        return QQ_I.one

    def convert(self, value: Any) -> Scalar:
        if isinstance(value, QQ_I.dtype):
            return value
        if isinstance(value, bool):
            raise BadParameters(f"Not a scalar: {value!r}")
        if isinstance(value, int):
            return QQ_I(value, 0)
        if isinstance(value, Fraction):
            return QQ_I(QQ(value.numerator, value.denominator), 0)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, tuple) and len(value) == 2:
            re, im = (Fraction(part) for part in value)
            return QQ_I(QQ(re.numerator, re.denominator), QQ(im.numerator, im.denominator))
        if isinstance(value, sympy.Basic):
            return self.from_sympy(value)
        if isinstance(value, (float, complex)):
            raise BadParameters(
                f"Refusing to coerce floating value {value!r} into exact mode; use numeric mode"
            )
        try:
            return QQ_I.convert(value)
        except CoercionFailed as e:
            raise BadParameters(f"Not a Gaussian rational: {value!r}") from e

    def is_zero(self, a: Scalar) -> bool:
        return not a

    def magnitude(self, a: Scalar) -> float:
        return abs(self.to_complex(a))

    def to_string(self, a: Scalar) -> str:
        real = _format_rational(a.x)
        if not a.y:
            return real
        imag = _format_rational(a.y) + "i"
        if not a.x:
            return imag
        return real + ("+" if a.y > 0 else "") + imag

    def parse(self, text: str) -> Scalar:
        s = text.replace(" ", "")
        if not s:
            raise AlgebraFormatError("Empty scalar string")
        if s.endswith("i"):
            body = s[:-1]
            cut = max(body.rfind("+"), body.rfind("-"))
            real, imag = (body[:cut], body[cut:]) if cut > 0 else ("0", body)
            imag = {"": "1", "+": "1", "-": "-1"}.get(imag, imag)
        else:
            real, imag = s, "0"
        try:
            re, im = Fraction(real), Fraction(imag)
        except (ValueError, ZeroDivisionError) as e:
            raise AlgebraFormatError(f"Malformed exact scalar: {text!r}") from e
        return QQ_I(QQ(re.numerator, re.denominator), QQ(im.numerator, im.denominator))

    def to_complex(self, a: Scalar) -> complex:
        return complex(float(a.x), float(a.y))

    def to_sympy(self, a: Scalar) -> sympy.Expr:
        return QQ_I.to_sympy(a)

    def from_sympy(self, expr: sympy.Expr) -> Scalar:
        try:
            return QQ_I.from_sympy(sympy.expand(sympy.sympify(expr)))
        except CoercionFailed as e:
            raise BadParameters(f"Not a Gaussian rational: {expr}") from e

    def sort_key(self, a: Scalar) -> tuple:
        return (a.x, a.y)

    def is_real(self, a: Scalar) -> bool:
        return not a.y

    def real_part(self, a: Scalar) -> Scalar:
        return QQ_I(a.x, 0)

    def imag_part(self, a: Scalar) -> Scalar:
        return QQ_I(a.y, 0)

    def conjugate(self, a: Scalar) -> Scalar:
        return QQ_I(a.x, -a.y)


class NumericField(ScalarField):
    """Complex doubles compared with an absolute tolerance ``eps``."""

    mode = FieldMode.NUMERIC

    def __init__(self, eps: float = 1e-10):
        if eps <= 0:
            raise BadParameters("eps must be positive")
        self.eps = eps

    @property
    def zero(self) -> Scalar:
        return 0j

    @property
    def one(self) -> Scalar:
        return 1 + 0j

    def convert(self, value: Any) -> Scalar:
        if isinstance(value, complex):
            return value
        if isinstance(value, (int, float, Fraction)) and not isinstance(value, bool):
            return complex(value)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, sympy.Basic):
            return self.from_sympy(value)
        if isinstance(value, QQ_I.dtype):
            return EXACT.to_complex(value)
        raise BadParameters(f"Not a scalar: {value!r}")

    def is_zero(self, a: Scalar) -> bool:
        return abs(a) <= self.eps

    def magnitude(self, a: Scalar) -> float:
        return abs(a)

    def pivot_threshold(self, max_magnitude: float) -> float:
        return self.eps * max_magnitude

    def to_string(self, a: Scalar) -> str:
        return f"{a.real!r},{a.imag!r}"

    def parse(self, text: str) -> Scalar:
        s = text.replace(" ", "")
        if "," in s:
            try:
                re, im = s.split(",")
                return complex(float(re), float(im))
            except ValueError as e:
                raise AlgebraFormatError(f"Malformed numeric scalar: {text!r}") from e
        return EXACT.to_complex(EXACT.parse(s))

    def to_complex(self, a: Scalar) -> complex:
        return complex(a)

    def to_sympy(self, a: Scalar) -> sympy.Expr:
        return sympy.Float(a.real) + sympy.I * sympy.Float(a.imag)

    def from_sympy(self, expr: sympy.Expr) -> Scalar:
        return complex(sympy.N(expr))


def _format_rational(q: Any) -> str:
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


EXACT = ExactField()


def get_field(mode: FieldMode | str | None = None, eps: float | None = None) -> ScalarField:
    """Field for ``mode``, defaulting to the configured FIELD_MODE and NUMERIC_EPS."""
    settings = get_settings()
    mode = FieldMode(mode or settings.field_mode)
    if mode == FieldMode.EXACT:
        return EXACT
    return NumericField(eps if eps is not None else settings.numeric_eps)

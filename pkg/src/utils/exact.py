from fractions import Fraction
from typing import Any, Union

Number = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    numerator = getattr(value, 'numerator', None)
    denominator = getattr(value, 'denominator', None)
    if numerator is not None and denominator is not None:
        return Fraction(int(numerator), int(denominator))
    if hasattr(value, 'p') and hasattr(value, 'q'):
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"not an exact number: {value!r}")


def normalize(value) -> Number:
    value = to_fraction(value)
    if value.denominator == 1:
        return int(value.numerator)
    return value


def format_number(value) -> str:
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_json(value: Any) -> Any:
    """Exact numbers become JSON integers or "p/q" strings; containers recurse."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else format_number(value)
    if isinstance(value, dict):
        return {str(k): to_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    if hasattr(value, 'to_dict'):
        return to_json(value.to_dict())
    return format_number(value)


def parse_number(text: str) -> Fraction:
    text = text.strip()
    if '/' in text:
        num, den = text.split('/', 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))

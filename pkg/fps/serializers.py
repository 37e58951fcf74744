import json
from fractions import Fraction

from django.core.serializers.json import DjangoJSONEncoder

from .exceptions import SerializationError
from .series import TruncatedSeries


def format_rational(value):
    """Canonical "p/q" string, "p" when q == 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text):
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise SerializationError(f"not a rational: {text!r}") from exc


def series_to_dict(series):
    return {
        'order': series.order,
        'coeffs': [format_rational(c) for c in series],
    }


def series_from_dict(data):
    try:
        order = data['order']
        coeffs = data['coeffs']
    except (KeyError, TypeError) as exc:
        raise SerializationError("series JSON needs 'order' and 'coeffs'") from exc
    if not isinstance(order, int) or len(coeffs) != order + 1:
        raise SerializationError(
            f"series JSON has {len(coeffs)} coefficients for order {order!r}"
        )
    return TruncatedSeries([parse_rational(c) for c in coeffs], order)


class SeriesJSONEncoder(DjangoJSONEncoder):
    """Writes Fractions as "p/q" strings and series in the {"order", "coeffs"} form."""

    def default(self, o):
        if isinstance(o, Fraction):
            return format_rational(o)
        if isinstance(o, TruncatedSeries):
            return series_to_dict(o)
        return super().default(o)


def dumps(obj, **kwargs):
    kwargs.setdefault('indent', 2)
    return json.dumps(obj, cls=SeriesJSONEncoder, **kwargs)


def loads_series(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SerializationError(f"invalid JSON: {exc}") from exc
    return series_from_dict(data)

from fractions import Fraction
from math import factorial

from .exceptions import OrderMismatchError, SeriesError

Rational = Fraction


class TruncatedSeries:
    """Formal power series known exactly through degree ``order``.

    Index k holds the coefficient of x**k. Instances are immutable and
    every coefficient is a canonical ``Fraction``.
    """

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs, order=None):
        values = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(values) - 1
        if order < 0:
            raise SeriesError("a series needs at least the constant coefficient")
        if len(values) > order + 1:
            raise SeriesError(
                f"{len(values)} coefficients given for order {order}; truncate explicitly"
            )
        values.extend(Fraction(0) for _ in range(order + 1 - len(values)))
        self._coeffs = tuple(values)

    @classmethod
    def zero(cls, order):
        return cls((), order)

    @classmethod
    def constant(cls, value, order):
        return cls((value,), order)

    @classmethod
    def monomial(cls, degree, order, coefficient=1):
        if degree > order:
            return cls.zero(order)
        return cls([0] * degree + [coefficient], order)

    @classmethod
    def identity(cls, order):
        """The series x."""
        return cls.monomial(1, order)

    @property
    def order(self):
        return len(self._coeffs) - 1

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def valuation(self):
        """Index of the first nonzero coefficient, order + 1 for the zero series."""
        for k, c in enumerate(self._coeffs):
            if c:
                return k
        return self.order + 1

    def is_zero(self):
        return not any(self._coeffs)

    def truncate(self, order):
        if order > self.order:
            raise SeriesError(f"cannot truncate order {self.order} up to {order}")
        return TruncatedSeries(self._coeffs[:order + 1], order)

    def with_coefficient(self, degree, value):
        coeffs = list(self._coeffs)
        coeffs[degree] = value
        return TruncatedSeries(coeffs, self.order)

    def scale(self, alpha):
        alpha = Fraction(alpha)
        return TruncatedSeries([alpha * c for c in self._coeffs], self.order)

    def negate_argument(self):
        """S(-x)."""
        return TruncatedSeries(
            [-c if k % 2 else c for k, c in enumerate(self._coeffs)], self.order
        )

    def egf(self):
        """EGF coefficients k! * S[k]."""
        return tuple(factorial(k) * c for k, c in enumerate(self._coeffs))

    def __getitem__(self, degree):
        return self._coeffs[degree]

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return linear_combine(1, self, 1, other)
        return self.with_coefficient(0, self._coeffs[0] + Fraction(other))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return linear_combine(1, self, -1, other)
        return self.with_coefficient(0, self._coeffs[0] - Fraction(other))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self._coeffs]}, order={self.order})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"({c})*x")
            else:
                terms.append(f"({c})*x^{k}")
        return " + ".join(terms or ["0"]) + f" + O(x^{self.order + 1})"


def _check_orders(left, right):
    if left.order != right.order:
        raise OrderMismatchError(left.order, right.order)


def linear_combine(alpha, left, beta, right):
    """Coefficientwise alpha*left + beta*right."""
    _check_orders(left, right)
    alpha, beta = Fraction(alpha), Fraction(beta)
    return TruncatedSeries(
        [alpha * a + beta * b for a, b in zip(left.coeffs, right.coeffs)], left.order
    )


def multiply(left, right):
    """Cauchy product truncated at the common order."""
    _check_orders(left, right)
    a, b = left.coeffs, right.coeffs
    support = [i for i, c in enumerate(a) if c]
    product = []
    for k in range(left.order + 1):
        total = Fraction(0)
        for i in support:
            if i > k:
                break
            if b[k - i]:
                total += a[i] * b[k - i]
        product.append(total)
    return TruncatedSeries(product, left.order)

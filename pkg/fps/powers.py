from fractions import Fraction

from .exceptions import SeriesError


class PowerTable:
    """Coefficients of (x*u)**k for a series x*u that is still being solved for.

    ``u`` is supplied one coefficient at a time with :meth:`push`. Rows are
    extended lazily with the power recurrence

        m * u[0] * P[m] = sum_{j=1..m} ((k + 1) * j - m) * u[j] * P[m - j]

    so [x**n] (x*u)**k only ever reads u[0..n-k].
    """

    def __init__(self, lead):
        lead = Fraction(lead)
        if not lead:
            raise SeriesError("power table needs a nonzero linear coefficient")
        self._base = [lead]
        self._rows = {}

    @property
    def known(self):
        """Highest index of u pushed so far."""
        return len(self._base) - 1

    def push(self, coefficient):
        self._base.append(Fraction(coefficient))

    def coefficient(self, power, degree):
        """[x**degree] (x*u)**power."""
        m = degree - power
        if m < 0:
            return Fraction(0)
        if power == 0:
            return Fraction(1) if m == 0 else Fraction(0)
        if m > self.known:
            raise SeriesError(
                f"power {power} at degree {degree} needs u[{m}], only u[{self.known}] known"
            )
        row = self._rows.get(power)
        if row is None:
            row = self._rows[power] = [self._base[0] ** power]
        u = self._base
        while len(row) <= m:
            i = len(row)
            total = Fraction(0)
            for j in range(1, i + 1):
                if u[j]:
                    total += ((power + 1) * j - i) * u[j] * row[i - j]
            row.append(total / (i * u[0]))
        return row[m]

from dataclasses import dataclass
from typing import Optional

from django.db import models

from fps.operations import exp_series
from fps.series import TruncatedSeries

from .exceptions import EquationDomainError


class Kind(models.TextChoices):
    EXP_INVERSE = 'exp-inverse', "f' = exp(f^-1)"
    EXP_SELFCOMP = 'exp-selfcomp', "g' = exp(g o g)"
    AFFINE_SELFCOMP = 'affine-selfcomp', "g' = 1 + g o g"
    GENERAL_SELFCOMP = 'general-selfcomp', "g' = F(g o g)"


@dataclass(frozen=True)
class EquationKind:
    """One of the supported equations; ``rhs`` is F for the general self-composition kind."""
    tag: Kind
    rhs: Optional[TruncatedSeries] = None

    def __post_init__(self):
        object.__setattr__(self, 'tag', Kind(self.tag))
        if self.tag == Kind.GENERAL_SELFCOMP:
            if self.rhs is None:
                raise EquationDomainError("g' = F(g o g) needs F")
            if self.rhs[0] != 1:
                raise EquationDomainError(f"F(0) must be 1, got {self.rhs[0]}")
        elif self.rhs is not None:
            raise EquationDomainError(f"{self.tag.label} takes no right-hand side")

    @classmethod
    def exp_inverse(cls):
        return cls(Kind.EXP_INVERSE)

    @classmethod
    def exp_selfcomp(cls):
        return cls(Kind.EXP_SELFCOMP)

    @classmethod
    def affine_selfcomp(cls):
        return cls(Kind.AFFINE_SELFCOMP)

    @classmethod
    def general_selfcomp(cls, rhs):
        return cls(Kind.GENERAL_SELFCOMP, rhs)

    @classmethod
    def from_tag(cls, tag):
        """Kind from its CLI tag; the general kind cannot be named without F."""
        if tag == Kind.GENERAL_SELFCOMP:
            raise EquationDomainError("general-selfcomp is only available programmatically")
        try:
            return cls(Kind(tag))
        except ValueError as exc:
            raise EquationDomainError(f"unknown equation kind {tag!r}") from exc

    def outer_series(self, order):
        """F truncated at ``order`` for the self-composition kinds."""
        if self.tag == Kind.EXP_SELFCOMP:
            return exp_series(TruncatedSeries.identity(order))
        if self.tag == Kind.AFFINE_SELFCOMP:
            return TruncatedSeries([1, 1], order) if order else TruncatedSeries([1], 0)
        if self.tag == Kind.GENERAL_SELFCOMP:
            if self.rhs.order < order:
                raise EquationDomainError(
                    f"F is known through order {self.rhs.order}, order {order} requested"
                )
            return self.rhs.truncate(order)
        raise EquationDomainError(f"{self.tag.label} is not a self-composition equation")

    def __str__(self):
        return self.tag.label

"""Shared value types."""

from dataclasses import dataclass


@dataclass(frozen=True)
class ParameterSet:
    """The (a, b, c) parameter triple of a hypergeometric function."""

    a: complex
    b: complex
    c: complex

    def shifted(self, da: complex = 0, db: complex = 0, dc: complex = 0) -> "ParameterSet":
        return ParameterSet(self.a + da, self.b + db, self.c + dc)


@dataclass(frozen=True)
class SeriesResult:
    """Partial sum of the defining power series."""

    value: complex
    est_error: float  # relative, from the first neglected term
    terms_used: int

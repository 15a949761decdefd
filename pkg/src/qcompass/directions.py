"""Compass labels and ordered label pairs."""
import enum
from typing import NamedTuple


class Direction(str, enum.Enum):
    N = "N"
    S = "S"
    E = "E"
    W = "W"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            from .errors import InvalidArgumentError

            raise InvalidArgumentError(f"unknown direction {value!r}") from None


# Ordering used by Eq.-style sums: N, S, E, W.
DIRECTIONS = (Direction.N, Direction.S, Direction.E, Direction.W)


class DirectionPair(NamedTuple):
    """Ordered pair; the first member enters the Wigner integral conjugated."""

    first: Direction
    second: Direction

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            if len(value) != 2:
                from .errors import InvalidArgumentError

                raise InvalidArgumentError(f"pair must be two letters, got {value!r}")
            value = tuple(value)
        a, b = value
        return cls(Direction.parse(a), Direction.parse(b))

    @property
    def name(self):
        return self.first.value + self.second.value

    @property
    def explicit(self):
        return self.name in EXPLICIT_PAIRS

    def __str__(self):
        return self.name


EXPLICIT_PAIRS = ("NN", "NS", "NE", "NW", "SE", "SW", "EE", "EW")
DERIVED_PAIRS = ("SS", "SN", "EN", "WN", "ES", "WS", "WW", "WE")
ALL_PAIRS = tuple(DirectionPair(a, b) for a in DIRECTIONS for b in DIRECTIONS)

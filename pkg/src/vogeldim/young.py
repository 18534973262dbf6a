"""Young diagrams and the componentwise sums linking sl, so and sp members.

A diagram is stored as its weakly decreasing tuple of row lengths.  The two
sums are

* ``vertical_sum``: column heights add, i.e. the row multisets are merged;
* ``horizontal_sum``: row lengths add, i.e. the column multisets are merged.

They are exchanged by transposition::

    horizontal_sum(a, b) == vertical_sum(a.T, b.T).T
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest

from .errors import InvalidDiagram

__all__ = [
    "YoungDiagram",
    "transpose",
    "vertical_sum",
    "horizontal_sum",
    "area",
]


@dataclass(frozen=True, order=True)
class YoungDiagram:
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(self.rows)
        for r in rows:
            if not isinstance(r, int) or isinstance(r, bool) or r < 1:
                raise InvalidDiagram(f"row lengths must be positive integers, got {rows}")
        for a, b in zip(rows, rows[1:]):
            if a < b:
                raise InvalidDiagram(f"rows must be weakly decreasing, got {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def parse(cls, text: str) -> "YoungDiagram":
        """Parse the comma-separated encoding, e.g. ``"3,1"``; ``""`` is empty."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            rows = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise InvalidDiagram(f"cannot parse diagram {text!r}") from None
        return cls(rows)

    def __str__(self):
        return ",".join(str(r) for r in self.rows)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return self.rows[0] if self.rows else 0

    @property
    def area(self) -> int:
        return sum(self.rows)

    @property
    def columns(self) -> tuple[int, ...]:
        """Column heights, left to right."""
        return tuple(sum(1 for r in self.rows if r > j) for j in range(self.width))

    @property
    def T(self) -> "YoungDiagram":
        return YoungDiagram(self.columns)

    def is_empty(self) -> bool:
        return not self.rows


def transpose(d: YoungDiagram) -> YoungDiagram:
    return d.T


def area(d: YoungDiagram) -> int:
    return d.area


def vertical_sum(a: YoungDiagram, b: YoungDiagram) -> YoungDiagram:
    """Stack ``b`` under ``a`` and push its boxes up: row multisets merge."""
    return YoungDiagram(tuple(sorted(a.rows + b.rows, reverse=True)))


def horizontal_sum(a: YoungDiagram, b: YoungDiagram) -> YoungDiagram:
    """Place ``b`` right of ``a`` and push its boxes left: row lengths add."""
    return YoungDiagram(tuple(x + y for x, y in zip_longest(a.rows, b.rows, fillvalue=0)))

"""Point sets in [n]^d with membership, iteration, and serialization.

The on-disk JSON format is ``{"n": int, "d": int, "points": [[x, ...], ...]}``
with 1-based coordinates and points sorted lexicographically, so equal sets
serialize to identical bytes.  A CSV export (one point per row) is provided
for spreadsheets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Tuple

Point = Tuple[int, ...]


@dataclass(frozen=True)
class PointSet:
    """An immutable subset of the grid [n]^d."""

    n: int
    d: int
    points: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"grid side must be positive, got n={self.n}")
        if self.d < 1:
            raise ValueError(f"dimension must be positive, got d={self.d}")
        for p in self.points:
            if len(p) != self.d or any(not 1 <= x <= self.n for x in p):
                raise ValueError(f"point {p} outside [1,{self.n}]^{self.d}")

    @classmethod
    def of(cls, n: int, pts: Iterable[Point], d: int = 2) -> "PointSet":
        return cls(n=n, d=d, points=frozenset(tuple(p) for p in pts))

    @classmethod
    def full_grid(cls, n: int, d: int = 2) -> "PointSet":
        if d == 2:
            pts = frozenset((x, y) for x in range(1, n + 1) for y in range(1, n + 1))
        else:
            pts = frozenset(_product_points(n, d))
        return cls(n=n, d=d, points=pts)

    def __contains__(self, p: Point) -> bool:
        return tuple(p) in self.points

    def __iter__(self) -> Iterator[Point]:
        return iter(sorted(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def sorted_points(self) -> list:
        return sorted(self.points)

    # -- serialization --------------------------------------------------

    def to_json(self) -> str:
        obj = {"n": self.n, "d": self.d, "points": [list(p) for p in self.sorted_points()]}
        return json.dumps(obj, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "PointSet":
        obj = json.loads(text)
        if not isinstance(obj, dict) or not {"n", "d", "points"} <= set(obj):
            raise ValueError("point-set JSON must have keys n, d, points")
        return cls.of(int(obj["n"]), [tuple(map(int, p)) for p in obj["points"]], d=int(obj["d"]))

    def to_csv(self) -> str:
        header = ",".join(f"x{i+1}" for i in range(self.d))
        rows = [",".join(map(str, p)) for p in self.sorted_points()]
        return "\n".join([header] + rows) + "\n"


def _product_points(n: int, d: int):
    if d == 1:
        for x in range(1, n + 1):
            yield (x,)
        return
    for rest in _product_points(n, d - 1):
        for x in range(1, n + 1):
            yield (x,) + rest

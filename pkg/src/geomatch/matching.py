"""Matchings and matching families over point indices."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator

from .geometry import Edge


@dataclass(frozen=True)
class Matching:
    """A set of index pairs; ``stones`` flags same-side leftover edges."""

    edges: frozenset[Edge]
    stones: frozenset[Edge] = frozenset()

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], stones: Iterable[tuple[int, int]] = ()) -> "Matching":
        return cls(frozenset(Edge.of(u, v) for u, v in pairs), frozenset(Edge.of(u, v) for u, v in stones))

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e: object) -> bool:
        return e in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class MatchingFamily:
    matchings: tuple[Matching, ...]
    method: str = "unknown"
    params: dict[str, Any] = field(default_factory=dict)
    block_tree: tuple[dict[str, Any], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "matchings", tuple(self.matchings))
        object.__setattr__(self, "block_tree", tuple(self.block_tree))

    def __len__(self) -> int:
        return len(self.matchings)

    def __iter__(self) -> Iterator[Matching]:
        return iter(self.matchings)

    def __getitem__(self, i: int) -> Matching:
        return self.matchings[i]

    @property
    def stones(self) -> list[Edge]:
        return sorted(s for m in self.matchings for s in m.stones)

    def all_edges(self) -> list[Edge]:
        return [e for m in self.matchings for e in m.sorted_edges()]

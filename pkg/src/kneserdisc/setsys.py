"""Bit-indexed subsets, set systems, and their text formats.

Ground sets are 0-based, {0, ..., n-1}, throughout the library and in every
file format.  A subset of the ground set is carried as a Python int bitmask
with bit j standing for element j, wrapped in :class:`VertexSet` together
with its universe size.  The same carrier serves as a graph vertex, a
hypergraph edge, and the blue side of a 2-coloring.

Hypergraph text format::

    line 1:            the universe size n (decimal)
    following lines:   one edge each, space-separated 0-based vertex
                       indices, strictly increasing within the line
    lines starting with '#' are comments; blank lines are ignored

Files are UTF-8 with LF line endings.  Edge order in the file is
significant and preserved: it defines color identities downstream.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .errors import CapacityError, ParseError, UsageError

# Full k-subset sweeps are refused above this universe size; C(28,14) is
# around 4e7, the practical ceiling for pairwise verification.
DEFAULT_ENUMERATION_GUARD = 28


def enumeration_guard() -> int:
    """Current enumeration guard, overridable via KNESERDISC_GUARD."""
    raw = os.environ.get("KNESERDISC_GUARD")
    if raw is None:
        return DEFAULT_ENUMERATION_GUARD
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"KNESERDISC_GUARD must be an integer, got {raw!r}")


def check_enumeration_guard(n: int) -> None:
    guard = enumeration_guard()
    if n > guard:
        raise CapacityError(
            f"universe size {n} exceeds the enumeration guard {guard} "
            f"(set KNESERDISC_GUARD to override at your own risk)")


@dataclass(frozen=True, slots=True)
class VertexSet:
    """An immutable subset of {0, ..., universe_size - 1}.

    ``mask`` has bit j set iff element j is a member.
    """

    universe_size: int
    mask: int

    def __post_init__(self):
        if self.universe_size < 1:
            raise UsageError("universe_size must be positive")
        if not 0 <= self.mask < (1 << self.universe_size):
            raise UsageError(
                f"mask {self.mask:#x} has members outside the universe "
                f"of size {self.universe_size}")

    @classmethod
    def of(cls, universe_size: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for j in members:
            if not 0 <= j < universe_size:
                raise UsageError(
                    f"member {j} outside universe of size {universe_size}")
            mask |= 1 << j
        return cls(universe_size, mask)

    @classmethod
    def empty(cls, universe_size: int) -> "VertexSet":
        return cls(universe_size, 0)

    @classmethod
    def full(cls, universe_size: int) -> "VertexSet":
        return cls(universe_size, (1 << universe_size) - 1)

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, j: int) -> bool:
        return 0 <= j < self.universe_size and bool(self.mask >> j & 1)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_same_universe(other)
        return VertexSet(self.universe_size, self.mask & other.mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_same_universe(other)
        return VertexSet(self.universe_size, self.mask | other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.universe_size,
                         self.mask ^ ((1 << self.universe_size) - 1))

    def bitstring(self) -> str:
        """n-character 0/1 string, character j = membership of element j."""
        return "".join("1" if self.mask >> j & 1 else "0"
                       for j in range(self.universe_size))

    @classmethod
    def from_bitstring(cls, text: str) -> "VertexSet":
        if not text or any(c not in "01" for c in text):
            raise UsageError(f"not a 0/1 bitstring: {text!r}")
        mask = 0
        for j, c in enumerate(text):
            if c == "1":
                mask |= 1 << j
        return cls(len(text), mask)

    def _check_same_universe(self, other: "VertexSet") -> None:
        if self.universe_size != other.universe_size:
            raise UsageError(
                f"universe mismatch: {self.universe_size} vs "
                f"{other.universe_size}")

    def __repr__(self) -> str:
        return f"VertexSet({self.universe_size}, {{{', '.join(map(str, self))}}})"


def intersection_size(a: VertexSet, b: VertexSet) -> int:
    """|a intersect b| for two subsets of the same universe."""
    a._check_same_universe(b)
    return (a.mask & b.mask).bit_count()


@dataclass(frozen=True)
class Hypergraph:
    """A ground set {0,...,n-1} plus an ordered list of nonempty edges.

    Edge order is stable and meaningful: downstream colorings name their
    color classes by edge index.
    """

    universe_size: int
    edges: tuple[VertexSet, ...]

    def __post_init__(self):
        if self.universe_size < 1:
            raise UsageError("universe_size must be positive")
        object.__setattr__(self, "edges", tuple(self.edges))
        for i, e in enumerate(self.edges):
            if e.universe_size != self.universe_size:
                raise UsageError(
                    f"edge {i} lives in universe {e.universe_size}, "
                    f"hypergraph has {self.universe_size}")
            if e.mask == 0:
                raise UsageError(f"edge {i} is empty")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_masks(self) -> list[int]:
        return [e.mask for e in self.edges]

    def edge_sizes(self) -> list[int]:
        return [len(e) for e in self.edges]


@dataclass(frozen=True, slots=True)
class TwoColoring:
    """A 2-coloring of {0,...,n-1}: ``blue`` members are blue, the rest red."""

    universe_size: int
    blue: VertexSet

    def __post_init__(self):
        if self.blue.universe_size != self.universe_size:
            raise UsageError("blue set lives in a different universe")

    @property
    def red(self) -> VertexSet:
        return self.blue.complement()


def iter_k_sub_masks(n: int, k: int) -> Iterator[int]:
    """All k-subset bitmasks of an n-universe in colexicographic order.

    Colex order on sets coincides with increasing numeric order of the
    masks, so the successor is Gosper's hack.  No guard here; callers that
    expose full sweeps apply check_enumeration_guard first.
    """
    if k < 0 or k > n:
        raise UsageError(f"need 0 <= k <= n, got k={k}, n={n}")
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    for _ in range(comb(n, k)):
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = ripple | ((mask ^ ripple) >> (low.bit_length() + 1))


def enumerate_k_subsets(n: int, k: int) -> Iterator[VertexSet]:
    """Yield all C(n,k) k-subsets of {0,...,n-1} in colexicographic order."""
    check_enumeration_guard(n)
    for mask in iter_k_sub_masks(n, k):
        yield VertexSet(n, mask)


def subset_rank(n: int, k: int, mask: int) -> int:
    """Position of a k-subset mask in the colexicographic enumeration."""
    rank = 0
    i = 0
    while mask:
        low = mask & -mask
        rank += comb(low.bit_length() - 1, i + 1)
        i += 1
        mask ^= low
    if i != k:
        raise UsageError(f"mask has {i} members, expected {k}")
    return rank


def subset_mask_at_rank(n: int, k: int, rank: int) -> int:
    """Inverse of subset_rank: the k-subset mask at a colex position."""
    if not 0 <= rank < comb(n, k):
        raise UsageError(f"rank {rank} out of range for C({n},{k})")
    mask = 0
    rem = rank
    for i in range(k, 0, -1):
        c = i - 1
        while comb(c + 1, i) <= rem:
            c += 1
        rem -= comb(c, i)
        mask |= 1 << c
    return mask


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the hypergraph text format (see module docstring)."""
    n = None
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ParseError(line_no, f"expected universe size, got {line!r}")
            if n < 1:
                raise ParseError(line_no, f"universe size must be positive, got {n}")
            continue
        try:
            indices = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(line_no, f"non-integer vertex index in {line!r}")
        if not indices:
            raise ParseError(line_no, "empty edge")
        prev = -1
        mask = 0
        for j in indices:
            if j >= n:
                raise ParseError(line_no, f"vertex {j} >= universe size {n}")
            if j <= prev:
                raise ParseError(
                    line_no, f"vertex indices must be strictly increasing")
            prev = j
            mask |= 1 << j
        edges.append(VertexSet(n, mask))
    if n is None:
        raise ParseError(1, "missing universe size line")
    return Hypergraph(n, tuple(edges))


def serialize_hypergraph(h: Hypergraph) -> str:
    """Inverse of parse_hypergraph, bit-exact round trip, edge order kept."""
    lines = [str(h.universe_size)]
    for e in h.edges:
        lines.append(" ".join(str(j) for j in e))
    return "\n".join(lines) + "\n"

"""Partitions, Young diagrams, border strips and k-quotients.

Cells are 1-based ``(row, col)`` pairs in English notation.  The k-quotient is
read off the lower-right contour of the diagram: steps are labelled from 0
starting at the leftmost step of the lowest (padded) row, and component ``s``
collects the steps whose label is congruent to ``s`` mod ``k``.  Internally the
contour is handled through its set of north-step labels (the beta-set).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

NORTH = 0
EAST = 1


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; compares as a tuple."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """Length of row ``i`` (1-based); zero below the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def cells(self) -> Iterator[Cell]:
        for r, length in enumerate(self, start=1):
            for c in range(1, length + 1):
                yield Cell(r, c)

    def has_cell(self, row: int, col: int) -> bool:
        return row >= 1 and 1 <= col <= self.part(row)

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def contains_diagram(self, other: Partition) -> bool:
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def __repr__(self) -> str:
        return f"Partition({format_partition(self) or '∅'})"

    def __str__(self) -> str:
        return format_partition(self) or "∅"


class Cell(NamedTuple):
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


def content(cell: tuple[int, int]) -> int:
    return cell[1] - cell[0]


def hook(p: Partition, cell: tuple[int, int]) -> int:
    r, c = cell
    arm = p.part(r) - c
    leg = sum(1 for i in range(r + 1, len(p) + 1) if p[i - 1] >= c)
    return arm + leg + 1


def content_multiset(p: Partition) -> Counter:
    return Counter(x.content for x in p.cells())


def hook_multiset(p: Partition) -> Counter:
    conj = p.conjugate()
    return Counter((p[r - 1] - c) + (conj[c - 1] - r) + 1 for r, c in p.cells())


def parse_partition(text: str) -> Partition:
    """Parse ``"6,5,4,2,2,2"``; the empty string is the empty partition."""
    text = text.strip()
    if text in ("", "∅", "()", "[]"):
        return Partition()
    if text.startswith("[") or text.startswith("("):
        text = text[1:-1]
    return Partition(int(tok) for tok in text.split(",") if tok.strip())


def format_partition(p: Iterable[int]) -> str:
    return ",".join(str(x) for x in p)


def compact(p: Partition) -> str:
    """Concatenated shorthand (``654222``), falling back to commas for parts ≥ 10."""
    if not p:
        return "∅"
    if all(x < 10 for x in p):
        return "".join(str(x) for x in p)
    return format_partition(p)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest)


# -- contour / beta-sets -------------------------------------------------------

def padded_rows(p: Partition, k: int) -> int:
    """Smallest multiple of ``k`` that is at least the number of rows."""
    return -(-len(p) // k) * k


def beta_set(p: Partition, rows: int) -> list[int]:
    """North-step labels of the contour with ``rows`` rows, decreasing."""
    if rows < len(p):
        raise ValueError("fewer rows than parts")
    return [p.part(i) + rows - i for i in range(1, rows + 1)]


def from_beta_set(beta: Iterable[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    rows = len(beta)
    parts = [b - (rows - i) for i, b in enumerate(beta, start=1)]
    if parts and parts[-1] < 0:
        raise ValueError("beta-set contains negative positions")
    return Partition(parts)


@dataclass(frozen=True)
class EdgeSequence:
    """Binary contour word; ``word[i]`` is NORTH or EAST for the step labelled ``i``."""

    word: tuple[int, ...]

    @property
    def norths(self) -> tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.word) if w == NORTH)

    @property
    def easts(self) -> tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.word) if w == EAST)

    def decode(self) -> Partition:
        return decode_word(self.word)

    def __str__(self) -> str:
        return "".join("N" if w == NORTH else "E" for w in self.word)


def decode_word(word: Iterable[int]) -> Partition:
    """Each north step contributes a row whose length is the number of east steps before it."""
    rows = []
    easts = 0
    for w in word:
        if w == EAST:
            easts += 1
        else:
            rows.append(easts)
    return Partition(sorted(rows, reverse=True))


def edge_sequence(p: Partition, k: int = 1) -> EdgeSequence:
    if k < 1:
        raise ValueError("k must be positive")
    rows = padded_rows(p, k)
    norths = set(beta_set(p, rows))
    length = p.part(1) + rows
    return EdgeSequence(tuple(NORTH if i in norths else EAST for i in range(length)))


# -- k-core and k-quotient -------------------------------------------------------

class PartitionTuple(tuple):
    """A fixed-length tuple of partitions (the components of a k-quotient)."""

    __slots__ = ()

    def __new__(cls, components: Iterable[Iterable[int]]):
        return super().__new__(cls, (Partition(c) for c in components))

    @property
    def k(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(c.size for c in self)

    def __repr__(self) -> str:
        return "(" + ", ".join(compact(c) for c in self) + ")"

    __str__ = __repr__


def empty_tuple(k: int) -> PartitionTuple:
    return PartitionTuple(() for _ in range(k))


def k_quotient(p: Partition, k: int) -> PartitionTuple:
    word = edge_sequence(p, k).word
    return PartitionTuple(decode_word(word[s::k]) for s in range(k))


def from_quotient(quotient: Iterable[Iterable[int]], k: int | None = None) -> Partition:
    """The unique partition with empty k-core whose k-quotient is ``quotient``."""
    quotient = PartitionTuple(quotient)
    if k is None:
        k = quotient.k
    if quotient.k != k:
        raise ValueError(f"expected {k} components, got {quotient.k}")
    beads = max((len(c) for c in quotient), default=0)
    beta = [k * b + s for s, comp in enumerate(quotient) for b in beta_set(comp, beads)]
    return from_beta_set(beta)


def k_core(p: Partition, k: int) -> Partition:
    if k < 1:
        raise ValueError("k must be positive")
    rows = padded_rows(p, k)
    runner = Counter(b % k for b in beta_set(p, rows))
    return from_beta_set(k * j + s for s, count in runner.items() for j in range(count))


def has_empty_core(p: Partition, k: int) -> bool:
    return p.size % k == 0 and not k_core(p, k)


# -- border strips ---------------------------------------------------------------

@dataclass(frozen=True)
class BorderStrip:
    cells: frozenset
    tail: Cell
    height: int

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def tail_content(self) -> int:
        return self.tail.content


def is_border_strip(cells: Iterable[tuple[int, int]]) -> bool:
    """Connected (edge-adjacent) and free of 2x2 squares; the empty set is not a strip."""
    cells = set(cells)
    if not cells:
        return False
    for r, c in cells:
        if {(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cells:
            return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def skew_strip(outer: Partition, inner: Partition) -> BorderStrip:
    """The border strip ``outer/inner``; raises ValueError if it is not one."""
    if not outer.contains_diagram(inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    cells = frozenset(
        Cell(r, c) for r in range(1, len(outer) + 1) for c in range(inner.part(r) + 1, outer.part(r) + 1)
    )
    if not is_border_strip(cells):
        raise ValueError(f"{outer}/{inner} is not a border strip")
    tail = min(cells, key=lambda x: x.content)
    rows = {x.row for x in cells}
    return BorderStrip(cells, tail, len(rows) - 1)


def rim(p: Partition) -> list[Cell]:
    """Cells (r, c) with (r+1, c+1) outside the diagram, walked from the top-right corner down-left."""
    if not p:
        return []
    out = []
    r, c = 1, p[0]
    while c >= 1 and r <= len(p):
        out.append(Cell(r, c))
        if p.part(r + 1) >= c:
            r += 1
        else:
            c -= 1
    return out


def removable_strips(p: Partition, k: int) -> list[tuple[BorderStrip, Partition]]:
    """All ``(strip, nu)`` with ``p/nu`` a border strip of size ``k``, by decreasing tail content.

    A removable strip is a run of ``k`` consecutive rim cells whose top-right
    end finishes its row and whose bottom-left end has nothing below it.
    """
    if k < 1:
        raise ValueError("k must be positive")
    path = rim(p)
    out = []
    for a in range(len(path) - k + 1):
        head, tail = path[a], path[a + k - 1]
        if head.col != p.part(head.row) or p.part(tail.row + 1) >= tail.col:
            continue
        seg = path[a:a + k]
        rows = list(p)
        for x in seg:
            rows[x.row - 1] -= 1
        nu = Partition(rows)
        out.append((BorderStrip(frozenset(seg), tail, tail.row - head.row), nu))
    out.sort(key=lambda pair: -pair[0].tail_content)
    return out


# -- serialization ---------------------------------------------------------------

def partition_to_json(p: Partition) -> list[int]:
    return list(p)


def partition_tuple_to_json(t: PartitionTuple) -> list[list[int]]:
    return [list(c) for c in t]

"""Border strip tableaux, tableau tuples, descents and the Littlewood quotient map."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Iterator

from .cycpoly import BiPoly, IntPoly
from .partitions import (
    BorderStrip,
    Cell,
    Partition,
    PartitionTuple,
    from_quotient,
    k_core,
    k_quotient,
    removable_strips,
    skew_strip,
)


@dataclass(frozen=True)
class DescentData:
    descents: tuple[int, ...]
    idx1: int | None = None

    @property
    def maj(self) -> int:
        return sum(self.descents)

    def __len__(self) -> int:
        return len(self.descents)

    def __contains__(self, i) -> bool:
        return i in self.descents


# -- border strip tableaux -------------------------------------------------------

@dataclass(frozen=True)
class BorderStripTableau:
    """A flag ``() = nu_0 < nu_1 < ... < nu_{n/k} = shape`` of partitions with k-strip steps."""

    k: int
    flag: tuple[Partition, ...]

    def __post_init__(self):
        object.__setattr__(self, "flag", tuple(Partition(p) for p in self.flag))
        if not self.flag or self.flag[0]:
            raise ValueError("flag must start at the empty partition")
        for inner, outer in zip(self.flag, self.flag[1:]):
            strip = skew_strip(outer, inner)
            if strip.size != self.k:
                raise ValueError(f"{outer}/{inner} has size {strip.size}, expected {self.k}")

    @property
    def shape(self) -> Partition:
        return self.flag[-1]

    def __len__(self) -> int:
        return len(self.flag) - 1

    @cached_property
    def strips(self) -> tuple[BorderStrip, ...]:
        return tuple(skew_strip(outer, inner) for inner, outer in zip(self.flag, self.flag[1:]))

    @property
    def height(self) -> int:
        return sum(s.height for s in self.strips)

    @property
    def tails(self) -> tuple[Cell, ...]:
        return tuple(s.tail for s in self.strips)

    def labels(self) -> dict[Cell, int]:
        return {x: i for i, s in enumerate(self.strips, start=1) for x in s.cells}

    def render(self, tails_only: bool = True, blank: str = ".") -> str:
        """Rows of labels; by default only tail cells carry their label."""
        labels = self.labels()
        tails = set(self.tails)
        width = len(str(len(self)))
        lines = []
        for r, length in enumerate(self.shape, start=1):
            row = []
            for c in range(1, length + 1):
                x = Cell(r, c)
                shown = not tails_only or x in tails
                row.append(str(labels[x]).rjust(width) if shown else blank.rjust(width))
            lines.append(" ".join(row))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"k": self.k, "flag": [list(p) for p in self.flag]}

    @classmethod
    def from_json(cls, data: dict) -> BorderStripTableau:
        return cls(int(data["k"]), tuple(Partition(p) for p in data["flag"]))

    @classmethod
    def from_labels(cls, k: int, rows: Iterable[Iterable[int]]) -> BorderStripTableau:
        """Build from a full label grid (rows of integers)."""
        rows = [list(r) for r in rows]
        top = max((max(r) for r in rows if r), default=0)
        flag = [Partition(sum(1 for v in r if v <= i) for r in rows) for i in range(top + 1)]
        return cls(k, tuple(flag))


def enumerate_bst(p: Iterable[int], k: int) -> Iterator[BorderStripTableau]:
    """Every border strip tableau of shape ``p`` with strips of size ``k``.

    Strips are peeled from the outside in, following ``removable_strips``
    order at each level.  Empty when ``k`` does not divide ``|p|`` or the core
    is nonempty.
    """
    p = Partition(p)
    if k < 1:
        raise ValueError("k must be positive")
    if p.size % k or k_core(p, k):
        return

    def peel(shape: Partition, outer: tuple[Partition, ...]):
        if not shape:
            yield BorderStripTableau(k, (shape,) + outer)
            return
        for _, nu in removable_strips(shape, k):
            yield from peel(nu, (shape,) + outer)

    yield from peel(p, ())


@lru_cache(maxsize=None)
def count_bst(p: Partition, k: int) -> int:
    p = Partition(p)
    if not p:
        return 1
    if p.size % k:
        return 0
    return sum(count_bst(nu, k) for _, nu in removable_strips(p, k))


def enumerate_syt(p: Iterable[int]) -> Iterator[BorderStripTableau]:
    return enumerate_bst(p, 1)


def descents_bst(b: BorderStripTableau) -> DescentData:
    tails = b.tails
    des = tuple(i for i in range(1, len(tails)) if tails[i].row > tails[i - 1].row)
    return DescentData(des)


def stat(b: BorderStripTableau) -> int:
    if not len(b):
        return 0
    return b.k * len(descents_bst(b)) + b.strips[0].height


@lru_cache(maxsize=None)
def fake_degree(p: Partition) -> BiPoly:
    """``sum over SYT(p) of q^maj t^des``."""
    terms: dict[tuple[int, int], int] = {}
    for T in enumerate_syt(p):
        d = descents_bst(T)
        key = (d.maj, len(d))
        terms[key] = terms.get(key, 0) + 1
    return BiPoly(terms)


def stat_generating_function(p: Iterable[int], k: int) -> IntPoly:
    """``sum over BST(p, k) of t^stat``."""
    out: dict[int, int] = {}
    for B in enumerate_bst(p, k):
        s = stat(B)
        out[s] = out.get(s, 0) + 1
    return IntPoly.from_dict(out)


def sign_epsilon(p: Iterable[int], k: int) -> int:
    """``(-1)^height`` of the first border strip tableau of shape ``p``."""
    p = Partition(p)
    first = next(enumerate_bst(p, k), None)
    if first is None:
        raise ValueError(f"BST({p}, {k}) is empty: the {k}-core of {p} is not empty")
    return -1 if first.height % 2 else 1


# -- tableau tuples --------------------------------------------------------------

def _shape_of_rows(rows) -> Partition:
    return Partition(len(r) for r in rows)


@dataclass(frozen=True)
class StandardTableauTuple:
    """Bijective filling of a tuple of diagrams, increasing along rows and columns."""

    entries: tuple[tuple[tuple[int, ...], ...], ...]
    shapes: PartitionTuple = field(init=False)

    def __post_init__(self):
        entries = tuple(tuple(tuple(int(v) for v in row) for row in comp) for comp in self.entries)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "shapes", PartitionTuple(_shape_of_rows(c) for c in entries))
        values = sorted(v for comp in entries for row in comp for v in row)
        if values != list(range(1, len(values) + 1)):
            raise ValueError("entries must be exactly 1..N")
        if not _is_increasing(entries, strict_rows=True):
            raise ValueError("entries must increase along rows and columns")

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def size(self) -> int:
        return self.shapes.size

    @cached_property
    def positions(self) -> dict[int, tuple[int, Cell]]:
        """Entry -> (component index, cell)."""
        return {
            v: (s, Cell(r, c))
            for s, comp in enumerate(self.entries)
            for r, row in enumerate(comp, start=1)
            for c, v in enumerate(row, start=1)
        }

    def to_json(self) -> dict:
        return {"shapes": [list(p) for p in self.shapes], "entries": [[list(r) for r in c] for c in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> StandardTableauTuple:
        t = cls(tuple(tuple(tuple(r) for r in c) for c in data["entries"]))
        if "shapes" in data and [list(p) for p in t.shapes] != [list(Partition(p)) for p in data["shapes"]]:
            raise ValueError("shapes do not match entries")
        return t

    @classmethod
    def from_positions(cls, shapes: PartitionTuple, positions: dict[int, tuple[int, Cell]]) -> StandardTableauTuple:
        grid = [[[0] * length for length in comp] for comp in shapes]
        for v, (s, (r, c)) in positions.items():
            grid[s][r - 1][c - 1] = v
        return cls(tuple(tuple(tuple(row) for row in comp) for comp in grid))

    def render(self) -> str:
        return "  |  ".join(" / ".join(" ".join(map(str, row)) for row in comp) or "∅" for comp in self.entries)


@dataclass(frozen=True)
class SemistandardTableauTuple:
    entries: tuple[tuple[tuple[int, ...], ...], ...]
    shapes: PartitionTuple = field(init=False)

    def __post_init__(self):
        entries = tuple(tuple(tuple(int(v) for v in row) for row in comp) for comp in self.entries)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "shapes", PartitionTuple(_shape_of_rows(c) for c in entries))
        if any(v < 1 for comp in entries for row in comp for v in row):
            raise ValueError("entries must be positive")
        if not _is_increasing(entries, strict_rows=False):
            raise ValueError("rows must weakly increase and columns strictly increase")

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def max_entry(self) -> int:
        return max((v for comp in self.entries for row in comp for v in row), default=0)

    def contains_one(self) -> bool:
        return any(comp and comp[0][0] == 1 for comp in self.entries)

    @property
    def idx1(self) -> int:
        """``k - 1 - s`` for the leftmost component ``s`` containing a 1."""
        for s, comp in enumerate(self.entries):
            if comp and comp[0][0] == 1:
                return self.k - 1 - s
        raise ValueError("tuple contains no entry 1")

    def cells(self) -> Iterator[tuple[int, Cell, int]]:
        for s, comp in enumerate(self.entries):
            for r, row in enumerate(comp, start=1):
                for c, v in enumerate(row, start=1):
                    yield s, Cell(r, c), v

    def to_json(self) -> dict:
        return {"shapes": [list(p) for p in self.shapes], "entries": [[list(r) for r in c] for c in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> SemistandardTableauTuple:
        return cls(tuple(tuple(tuple(r) for r in c) for c in data["entries"]))


def _is_increasing(entries, strict_rows: bool) -> bool:
    for comp in entries:
        for r, row in enumerate(comp):
            if r and len(row) > len(comp[r - 1]):
                return False
            for c, v in enumerate(row):
                if c and (v <= row[c - 1] if strict_rows else v < row[c - 1]):
                    return False
                if r and v <= comp[r - 1][c]:
                    return False
    return True


def _corners(p: Partition) -> list[Cell]:
    return [Cell(r, p[r - 1]) for r in range(1, len(p) + 1) if p.part(r + 1) < p[r - 1]]


def _remove_cell(p: Partition, row: int) -> Partition:
    rows = list(p)
    rows[row - 1] -= 1
    return Partition(rows)


def enumerate_syt_tuples(shapes: Iterable[Iterable[int]]) -> Iterator[StandardTableauTuple]:
    """All standard fillings of ``shapes``; the largest entry is placed first."""
    shapes = PartitionTuple(shapes)

    def place(current: tuple[Partition, ...], positions: dict):
        n = sum(p.size for p in current)
        if n == 0:
            yield StandardTableauTuple.from_positions(shapes, positions)
            return
        for s, comp in enumerate(current):
            for corner in _corners(comp):
                positions[n] = (s, corner)
                rest = current[:s] + (_remove_cell(comp, corner.row),) + current[s + 1:]
                yield from place(rest, positions)
                del positions[n]

    yield from place(tuple(shapes), {})


def is_tuple_descent(s: int, c: int, t: int, c_next: int) -> bool:
    """Entry in component ``s`` with content ``c`` followed by one in ``t`` with content ``c_next``."""
    return c > c_next if s <= t else c >= c_next


def descents_tuple(T: StandardTableauTuple) -> DescentData:
    pos = T.positions
    des = []
    for i in range(1, T.size):
        s, x = pos[i]
        t, y = pos[i + 1]
        if is_tuple_descent(s, x.content, t, y.content):
            des.append(i)
    return DescentData(tuple(des), idx1(T) if T.size else None)


def descents_tuple_austrian(T: StandardTableauTuple) -> tuple[int, ...]:
    """Descents read off the tilted picture: diagrams side by side, height = content.

    ``i`` is a descent when ``i + 1`` sits in a diagram further left and weakly
    lower, or in the same or a further-right diagram and strictly lower.
    """
    pos = T.positions
    coords = {v: (s, x.col - x.row) for v, (s, x) in pos.items()}
    out = []
    for i in range(1, T.size):
        (xa, ya), (xb, yb) = coords[i], coords[i + 1]
        if (xb < xa and yb <= ya) or (xb >= xa and yb < ya):
            out.append(i)
    return tuple(out)


def idx1(T: StandardTableauTuple, k: int | None = None) -> int:
    if k is None:
        k = T.k
    if 1 not in T.positions:
        raise ValueError("tuple has no entry 1")
    return k - 1 - T.positions[1][0]


def littlewood_map(b: BorderStripTableau) -> StandardTableauTuple:
    """Label the cell by which consecutive k-quotients along the flag differ."""
    k = b.k
    quotients = [k_quotient(nu, k) for nu in b.flag]
    positions = {}
    for i in range(1, len(quotients)):
        before, after = quotients[i - 1], quotients[i]
        changed = [s for s in range(k) if before[s] != after[s]]
        if len(changed) != 1:
            raise AssertionError(f"step {i} changes components {changed}")
        s = changed[0]
        new = set(after[s].cells()) - set(before[s].cells())
        if len(new) != 1 or after[s].size != before[s].size + 1:
            raise AssertionError(f"step {i} does not add exactly one cell")
        positions[i] = (s, new.pop())
    return StandardTableauTuple.from_positions(quotients[-1], positions)


def littlewood_inverse(T: StandardTableauTuple, k: int | None = None) -> BorderStripTableau:
    if k is None:
        k = T.k
    if T.k != k:
        raise ValueError(f"tuple has {T.k} components, expected {k}")
    flag = []
    for i in range(T.size + 1):
        sub = PartitionTuple(
            Partition(sum(1 for v in row if v <= i) for row in comp) for comp in T.entries
        )
        flag.append(from_quotient(sub, k))
    return BorderStripTableau(k, tuple(flag))


# -- semistandard tuples ---------------------------------------------------------

def enumerate_ssyt(shape: Iterable[int], max_entry: int, min_entry: int = 1) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard fillings of ``shape`` with entries in ``[min_entry, max_entry]``, as rows."""
    shape = Partition(shape)
    cells = list(shape.cells())
    grid = [[0] * length for length in shape]

    def fill(idx: int):
        if idx == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[idx]
        lo = min_entry
        if c > 1:
            lo = max(lo, grid[r - 1][c - 2])
        if r > 1:
            lo = max(lo, grid[r - 2][c - 1] + 1)
        # leave room for the strictly increasing column below
        below = sum(1 for rr in range(r + 1, len(shape) + 1) if shape[rr - 1] >= c)
        for v in range(lo, max_entry - below + 1):
            grid[r - 1][c - 1] = v
            yield from fill(idx + 1)
        grid[r - 1][c - 1] = 0

    yield from fill(0)


def enumerate_ssyt_tuples(shapes: Iterable[Iterable[int]], max_entry: int) -> Iterator[SemistandardTableauTuple]:
    """Semistandard tuples with entries at most ``max_entry`` that contain at least one 1."""
    if max_entry < 1:
        raise ValueError("max_entry must be positive")
    shapes = PartitionTuple(shapes)
    per_component = [list(enumerate_ssyt(p, max_entry)) for p in shapes]
    for combo in product(*per_component):
        if any(comp and comp[0][0] == 1 for comp in combo):
            yield SemistandardTableauTuple(combo)


@lru_cache(maxsize=None)
def ssyt_count_branching(shape: Partition, m: int) -> int:
    """``#SSYT(shape)`` with entries ``<= m``, by stripping off the horizontal strip of m's."""
    shape = Partition(shape)
    if not shape:
        return 1
    if m <= 0 or len(shape) > m:
        return 0
    total = 0
    # mu interlaces shape: shape[i+1] <= mu[i] <= shape[i]
    ranges = [range(shape.part(i + 1), shape[i - 1] + 1) for i in range(1, len(shape) + 1)]
    for mu in product(*ranges):
        total += ssyt_count_branching(Partition(mu), m - 1)
    return total


def ssyt_tuple_series(shapes: Iterable[Iterable[int]], t_order: int) -> IntPoly:
    """``sum of t^{k(max - 1) + idx1}`` over semistandard tuples containing a 1, up to ``t^t_order``.

    Counts per (max, leftmost component holding a 1) come from the branching
    rule: components left of ``s`` avoid 1, component ``s`` must use it.
    """
    shapes = PartitionTuple(shapes)
    k = shapes.k

    def count(M: int, s: int) -> int:
        if M <= 0:
            return 0
        acc = 1
        for i, p in enumerate(shapes):
            if i < s:
                acc *= ssyt_count_branching(p, M - 1)
            elif i == s:
                acc *= ssyt_count_branching(p, M) - ssyt_count_branching(p, M - 1)
            else:
                acc *= ssyt_count_branching(p, M)
        return acc

    out: dict[int, int] = {}
    for M in range(1, t_order // k + 2):
        for s in range(k):
            e = k * (M - 1) + (k - 1 - s)
            if e > t_order:
                continue
            exact = count(M, s) - count(M - 1, s)
            if exact:
                out[e] = out.get(e, 0) + exact
    return IntPoly.from_dict(out)

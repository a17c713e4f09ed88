"""Limited-workspace execution model.

Input is a read-only point set, the only mutable store an algorithm may use is
a :class:`Workspace` of tagged cells with a fixed budget, and results leave
through an :class:`OutputStream` that cannot be read back.

Scan loops keep their loop variables in Python locals.  Those locals mirror
cells that the enclosing routine has reserved with :meth:`Workspace.frame`, so
the accounting (``live``/``peak``) is what a cell-level implementation would
use.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any, Callable, Iterator, Union


class BudgetExceeded(RuntimeError):
    """An algorithm tried to hold more cells than its declared bound."""


class DoubleFree(RuntimeError):
    pass


@dataclass(frozen=True, slots=True)
class BoundedInt:
    value: int


@dataclass(frozen=True, slots=True)
class InputRef:
    index: int


@dataclass(frozen=True, slots=True)
class AlgebraicPoint:
    """A point built from at most four input sites.

    Coordinates are homogeneous integers in the point set's scaled frame, so
    the real point is ``(x / w, y / w) / pointset.scale``.
    """

    x: int
    y: int
    w: int
    sites: tuple[int, ...] = ()

    def __post_init__(self):
        if self.w == 0:
            raise ValueError("homogeneous weight must be nonzero")
        if len(self.sites) > 4:
            raise ValueError("an algebraic point is defined by at most 4 sites")


Cell = Union[BoundedInt, InputRef, AlgebraicPoint]
_CELL_KINDS = (BoundedInt, InputRef, AlgebraicPoint)


class Workspace:
    """Budgeted store of tagged cells with live/peak accounting."""

    def __init__(self, budget: int):
        if budget < 1:
            raise ValueError("budget must be at least one cell")
        self.budget = int(budget)
        self._cells: dict[int, Cell | None] = {}
        self._next = 0
        self.live = 0
        self.peak = 0

    def alloc(self, cell: Cell | None = None) -> int:
        if cell is not None and not isinstance(cell, _CELL_KINDS):
            raise TypeError(f"not a workspace cell: {cell!r}")
        if self.live >= self.budget:
            raise BudgetExceeded(
                f"allocation would exceed the budget of {self.budget} cells"
            )
        handle = self._next
        self._next += 1
        self._cells[handle] = cell
        self.live += 1
        if self.live > self.peak:
            self.peak = self.live
        return handle

    def alloc_many(self, count: int) -> list[int]:
        if self.live + count > self.budget:
            raise BudgetExceeded(
                f"reserving {count} cells with {self.live} live would exceed "
                f"the budget of {self.budget} cells"
            )
        start = self._next
        handles = range(start, start + count)
        self._next = start + count
        self._cells.update(dict.fromkeys(handles))
        self.live += count
        if self.live > self.peak:
            self.peak = self.live
        return list(handles)

    def free(self, handle: int) -> None:
        if handle not in self._cells:
            raise DoubleFree(f"cell {handle} is not live")
        del self._cells[handle]
        self.live -= 1

    def free_many(self, handles) -> None:
        cells = self._cells
        for h in handles:
            if h not in cells:
                raise DoubleFree(f"cell {h} is not live")
            del cells[h]
        self.live -= len(handles)

    def reserve(self, count: int) -> int:
        """Charge ``count`` anonymous cells for a structure kept in Python objects.

        Returns ``count`` for the matching :meth:`unreserve`.
        """
        live = self.live + count
        if live > self.budget:
            raise BudgetExceeded(
                f"reserving {count} cells with {self.live} live would exceed "
                f"the budget of {self.budget} cells"
            )
        self.live = live
        if live > self.peak:
            self.peak = live
        return count

    def unreserve(self, count: int) -> None:
        if count > self.live - len(self._cells):
            raise DoubleFree(f"{count} anonymous cells were not reserved")
        self.live -= count

    def __getitem__(self, handle: int) -> Cell | None:
        return self._cells[handle]

    def __setitem__(self, handle: int, cell: Cell) -> None:
        if handle not in self._cells:
            raise KeyError(f"cell {handle} is not live")
        if not isinstance(cell, _CELL_KINDS):
            raise TypeError(f"not a workspace cell: {cell!r}")
        self._cells[handle] = cell

    @contextmanager
    def frame(self, count: int) -> Iterator[list[int]]:
        """Reserve ``count`` cells for the duration of a block."""
        handles = self.alloc_many(count)
        try:
            yield handles
        finally:
            self.free_many(handles)

    def __repr__(self):
        return f"Workspace(budget={self.budget}, live={self.live}, peak={self.peak})"


class OutputStream:
    """Write-only sink.  Records go to ``sink`` and are never handed back."""

    __slots__ = ("_sink", "emitted")

    def __init__(self, sink: Callable[[Any], None] | None = None):
        self._sink = sink
        self.emitted = 0

    def emit(self, record: Any) -> None:
        if self._sink is not None:
            self._sink(record)
        self.emitted += 1


class StepCounter:
    """Tally of unit operations (predicate evaluations, site reads, declared costs)."""

    __slots__ = ("steps",)

    def __init__(self):
        self.steps = 0

    def tick(self, amount: int = 1) -> None:
        if amount < 0:
            raise ValueError("step counts only grow")
        self.steps += amount


def collecting_stream() -> tuple[OutputStream, list]:
    """A stream plus the list it appends to; for callers outside the model."""
    out: list = []
    return OutputStream(out.append), out

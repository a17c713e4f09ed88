"""Estimator-style wrappers.

Each estimator runs one limited-workspace algorithm on ``fit(X)`` and keeps
the emitted records in ``edges_`` together with the accounting of the run:
``peak_cells_`` (largest number of live workspace cells) and ``steps_``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import numpy as np
from sklearn.base import BaseEstimator

from . import emst as _emst
from . import hull as _hull
from . import tradeoff as _tradeoff
from . import voronoi_cws as _cws
from .exact import PointSet
from .workspace import StepCounter, Workspace, collecting_stream


def _coordinate(value) -> Fraction:
    if isinstance(value, (Fraction, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    value = float(value)
    if not np.isfinite(value):
        raise ValueError("coordinates must be finite")
    # floats are taken at their exact binary value
    return Fraction(value)


def check_points(X, *, min_points: int = 1) -> PointSet:
    """Validate planar input and return it as a :class:`PointSet`.

    ``X`` may be a PointSet, an ``(n, 2)`` array, or a sequence of pairs of
    ints, Fractions, floats or rational strings.
    """
    if isinstance(X, PointSet):
        ps = X
    else:
        if isinstance(X, np.ndarray):
            if X.ndim != 2 or X.shape[1] != 2:
                raise ValueError(f"expected an array of shape (n, 2), got {X.shape}")
            rows = X.tolist()
        else:
            rows = list(X)
        pts = []
        for row in rows:
            row = list(row)
            if len(row) != 2:
                raise ValueError(f"expected planar points, got {row!r}")
            pts.append((_coordinate(row[0]), _coordinate(row[1])))
        ps = PointSet(pts)
    if len(ps) < min_points:
        raise ValueError(f"need at least {min_points} points, got {len(ps)}")
    ps.require_distinct()
    return ps


class _WorkspaceEstimator(BaseEstimator):
    _min_points = 2

    def _budget(self, n: int) -> int:
        return self.budget if self.budget is not None else self._default_budget(n)

    def _default_budget(self, n: int) -> int:
        return _cws.DEFAULT_BUDGET

    def _run(self, ps, stream, ws, counter):
        raise NotImplementedError

    def fit(self, X, y=None):
        ps = check_points(X, min_points=self._min_points)
        ws = Workspace(self._budget(len(ps)))
        counter = StepCounter()
        stream, out = collecting_stream()
        self._run(ps, stream, ws, counter)
        self.edges_ = out
        self.n_sites_ = len(ps)
        self.peak_cells_ = ws.peak
        self.steps_ = counter.steps
        return self

    def fit_transform(self, X, y=None):
        return self.fit(X).edges_


class VoronoiDiagram(_WorkspaceEstimator):
    """Voronoi edges of the sites.

    ``s=None`` uses the constant-workspace cell walks; an integer ``s`` uses
    the batched algorithm with ``SPACE_CONSTANT * s`` cells.
    """

    def __init__(self, s: int | None = None, budget: int | None = None):
        self.s = s
        self.budget = budget

    def _default_budget(self, n):
        if self.s is None:
            return _cws.DEFAULT_BUDGET
        return _tradeoff.budget_for(self.s)

    def _run(self, ps, stream, ws, counter):
        if self.s is None:
            _cws.enumerate_voronoi_edges(ps, stream, workspace=ws, counter=counter)
        else:
            _tradeoff.tradeoff_voronoi(ps, self.s, stream, workspace=ws, counter=counter)


class DelaunayTriangulation(_WorkspaceEstimator):
    def __init__(self, budget: int | None = None):
        self.budget = budget

    def _run(self, ps, stream, ws, counter):
        _cws.enumerate_delaunay_edges(ps, stream, workspace=ws, counter=counter)


class EuclideanMST(_WorkspaceEstimator):
    def __init__(self, budget: int | None = None):
        self.budget = budget

    def _run(self, ps, stream, ws, counter):
        _emst.enumerate_emst(ps, stream, workspace=ws, counter=counter)


class ConvexHull(_WorkspaceEstimator):
    """Directed hull edges, counterclockwise; ``vertices_`` lists the corners."""

    _min_points = 1

    def __init__(self, budget: int | None = None):
        self.budget = budget

    def _default_budget(self, n):
        return _hull.DEFAULT_BUDGET

    def _run(self, ps, stream, ws, counter):
        _hull.gift_wrap_hull(ps, stream, workspace=ws, counter=counter)

    def fit(self, X, y=None):
        super().fit(X, y)
        self.vertices_ = _hull.hull_vertices(self.edges_) or [0]
        return self

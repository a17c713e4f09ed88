"""Seeded random point sets in general position."""

from __future__ import annotations

import numpy as np

from .exact import PointSet, check_general_position

COORD_BITS = 20
# distinct squared lengths need a wider range: with 20-bit coordinates a few
# thousand sites already give equal lengths by the birthday bound
LENGTH_COORD_BITS = 28
MAX_ATTEMPTS = 64
# the cocircularity scan is cubic; above this size it is left to the
# algorithms, which detect every degeneracy that matters to them at run time
COCIRCULAR_CHECK_LIMIT = 128

GUARDS = ("none", "general", "lengths")


class GuardExhausted(RuntimeError):
    pass


def generate(n: int, seed: int = 0, guard: str = "general", *,
             bits: int | None = None, max_attempts: int = MAX_ATTEMPTS) -> PointSet:
    """``n`` sites with integer coordinates in ``[0, 2**bits)``.

    ``bits`` defaults to ``LENGTH_COORD_BITS`` for the ``"lengths"`` guard and
    to ``COORD_BITS`` otherwise.

    guard:
        ``"none"``: only distinct sites.
        ``"general"``: no three collinear, and no four cocircular when
        ``n <= COCIRCULAR_CHECK_LIMIT``.
        ``"lengths"``: as ``"general"``, plus distinct squared pairwise
        lengths (the EMST is then unique).

    Whole sets are redrawn from the same generator until the guard passes;
    after ``max_attempts`` draws :class:`GuardExhausted` is raised.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if guard not in GUARDS:
        raise ValueError(f"guard must be one of {GUARDS}, got {guard!r}")
    if bits is None:
        bits = LENGTH_COORD_BITS if guard == "lengths" else COORD_BITS
    rng = np.random.default_rng(seed)
    for _ in range(max_attempts):
        coords = rng.integers(0, 1 << bits, size=(n, 2), dtype=np.int64).tolist()
        ps = PointSet(coords)
        if guard == "none":
            if ps.duplicate_pair() is None:
                return ps
            continue
        violation = check_general_position(
            ps,
            distinct_lengths=guard == "lengths",
            cocircular=n <= COCIRCULAR_CHECK_LIMIT,
        )
        if violation is None:
            return ps
    raise GuardExhausted(f"no {guard!r} set of {n} sites after {max_attempts} draws")

"""Desk-scale exhaustive search for integer magic squares of squares.

The triple-center total fixes every opposite pair of cells to sum to twice
the squared center, and the center divisibility theory prunes center roots
outright; what remains is pair assembly plus outer-sum checks.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from math import gcd, isqrt

from .errors import BadRange
from .grid_ops import DIHEDRAL, permute
from .intgrid import IntGrid, is_magic, is_square_entried


@dataclass(frozen=True)
class SearchReport:
    e_range: tuple[int, int]
    primitive_only: bool
    near_miss_threshold: int
    pruned_centers: int
    candidates_tested: int
    hits: tuple[IntGrid, ...]
    near_misses: tuple[IntGrid, ...]


def pair_decompositions(e: int) -> list[tuple[int, int]]:
    """Unordered pairs of distinct squares, both != e^2, summing to 2e^2."""
    if e < 1:
        raise ValueError(f"center root must be positive, got {e}")
    target = 2 * e * e
    out = []
    for x in range(e):  # x < e < y keeps pairs unordered and excludes e^2
        y2 = target - x * x
        y = isqrt(y2)
        if y * y == y2:
            out.append((x * x, y2))
    return out


def center_has_inadmissible_factor(e: int) -> bool:
    """True when some prime = 3 (mod 4) divides e.

    Such a center root is impossible for a primitive hit; reducible hits
    reappear at the reduced center root, so pruning these e loses nothing.
    """
    while e % 2 == 0:
        e //= 2
    f = 3
    while f * f <= e:
        if e % f == 0:
            if f % 4 == 3:
                return True
            while e % f == 0:
                e //= f
        f += 2
    return e > 1 and e % 4 == 3


def _scan_center(task: tuple[int, bool, int]):
    """Assemble and test all candidate grids for one center root.

    Returns (e, pruned, candidates, hit_cells, near_cells); grids are stored
    as canonical (lexicographically smallest under the 8 symmetries) cell
    tuples so output does not depend on assembly order.
    """
    e, primitive_only, threshold = task
    if primitive_only and center_has_inadmissible_factor(e):
        return (e, True, 0, (), ())
    pairs = pair_decompositions(e)
    if len(pairs) < 4:
        return (e, False, 0, (), ())
    total = 3 * e * e
    c2 = e * e
    seen = set()
    hits = []
    nears = []
    for quad in combinations(pairs, 4):
        for diag, anti, row, col in permutations(quad):
            for orient in range(16):
                a, i = diag if orient & 1 == 0 else diag[::-1]
                c, g = anti if orient & 2 == 0 else anti[::-1]
                d, f = row if orient & 4 == 0 else row[::-1]
                b, h = col if orient & 8 == 0 else col[::-1]
                cells = (a, b, c, d, c2, f, g, h, i)
                canon = min(permute(cells, m) for m in DIHEDRAL)
                if canon in seen:
                    continue
                seen.add(canon)
                correct = 4 + (
                    (a + b + c == total)
                    + (g + h + i == total)
                    + (a + d + g == total)
                    + (c + f + i == total)
                )
                if correct < threshold:
                    continue
                if len(set(cells)) != 9:
                    continue
                if correct == 8:
                    grid = IntGrid(canon)
                    assert is_magic(grid) == total and is_square_entried(grid)
                    hits.append(canon)
                else:
                    nears.append(canon)
    return (e, False, len(seen), tuple(sorted(hits)), tuple(sorted(nears)))


def search_msos(
    e_min: int,
    e_max: int,
    primitive_only: bool = True,
    *,
    near_miss_threshold: int = 7,
    workers: int = 1,
) -> SearchReport:
    """Scan center roots e in [e_min, e_max] for magic squares of squares.

    Centers are independent work units; results are merged in ascending e
    order, so the report is identical for any worker count.
    """
    if e_min < 1 or e_min > e_max:
        raise BadRange(f"need 1 <= e_min <= e_max, got [{e_min}, {e_max}]")
    tasks = [(e, primitive_only, near_miss_threshold) for e in range(e_min, e_max + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_center, tasks, chunksize=8))
    else:
        results = [_scan_center(t) for t in tasks]
    return SearchReport(
        e_range=(e_min, e_max),
        primitive_only=primitive_only,
        near_miss_threshold=near_miss_threshold,
        pruned_centers=sum(1 for r in results if r[1]),
        candidates_tested=sum(r[2] for r in results),
        hits=tuple(IntGrid(c) for r in results for c in r[3]),
        near_misses=tuple(IntGrid(c) for r in results for c in r[4]),
    )


def naive_center_enumeration(e: int) -> set[IntGrid]:
    """Independent oracle: every magic grid of nine distinct squares with
    center e^2 and entries bounded by 3e^2, by direct enumeration.

    Three corner-ish cells range freely; the rest follow from the eight sum
    equations alone, with no structural shortcuts. Used to validate search
    completeness for small e.
    """
    if e < 1:
        raise ValueError(f"center root must be positive, got {e}")
    limit = 3 * e * e
    squares = [k * k for k in range(isqrt(limit) + 1)]
    in_range = set(squares)
    c2 = e * e
    out = set()
    for a in squares:
        for b in squares:
            for i in squares:
                t = a + c2 + i          # main diagonal fixes the total
                c = t - a - b           # top row
                if c < 0 or c not in in_range:
                    continue
                g = t - c - c2          # anti-diagonal
                if g < 0 or g not in in_range:
                    continue
                d = t - a - g           # left column
                if d < 0 or d not in in_range:
                    continue
                f = t - d - c2          # middle row
                if f < 0 or f not in in_range:
                    continue
                h = t - b - c2          # middle column
                if h < 0 or h not in in_range:
                    continue
                if g + h + i != t or c + f + i != t:
                    continue
                cells = (a, b, c, d, c2, f, g, h, i)
                if len(set(cells)) == 9:
                    out.add(IntGrid(cells))
    return out


def primitive_subset(grids) -> set[IntGrid]:
    """The grids whose cells have gcd 1."""
    out = set()
    for g in grids:
        d = 0
        for v in g.cells:
            d = gcd(d, v)
        if d == 1:
            out.add(g)
    return out

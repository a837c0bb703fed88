"""Fast Kostka numbers by memoized horizontal-strip peeling, plus whole matrices.

The count K(shape, content) is computed by peeling the largest-indexed nonzero
content entry: in any semistandard filling its cells form a horizontal strip along
the outer rim, so the count is the sum over removable strips of that size of the
count for the reduced shape and the content prefix. The recursion is purely
combinatorial on purpose; it must not shortcut through the dominance
characterization it is later used to verify.

The shared module cache is a plain dict; under CPython its per-key reads and
writes are atomic, which is all the recursion needs, and results never depend on
what the cache already holds. Pass a fresh dict to isolate a call.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from typing import Callable, MutableMapping, Sequence

from .partitions import (
    Parts,
    SizeMismatchError,
    composition,
    dominates,
    format_parts,
    partition,
    partitions_of,
)
from .reports import Report
from .tableaux import SkewShape

_CACHE: dict[tuple, int] = {}

# maximum number of memoized entries; None means unbounded (the default):
# past the cap, results are still computed exactly, just not stored
CACHE_MAX_ENTRIES: int | None = None


def clear_cache() -> None:
    _CACHE.clear()


def cache_size() -> int:
    return len(_CACHE)


def _as_shape(shape: SkewShape | Sequence[int]) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    return SkewShape(partition(shape))


def _strip_zeros(parts: tuple[int, ...]) -> tuple[int, ...]:
    k = len(parts)
    while k and parts[k - 1] == 0:
        k -= 1
    return parts[:k]


def _kostka(outer: Parts, inner: Parts, content: Parts, memo: MutableMapping[tuple, int]) -> int:
    content = _strip_zeros(content)
    if not content:
        return 1 if sum(outer) == sum(inner) else 0
    key = (outer, inner, content)
    hit = memo.get(key)
    if hit is not None:
        return hit
    budget = content[-1]
    rest = content[:-1]
    n_rows = len(outer)
    inner_padded = inner + (0,) * (n_rows - len(inner))
    # row r may shrink to max(inner_r, outer_{r+1}) without breaking the diagram
    # or stacking two strip cells in one column
    floors = [max(inner_padded[r], outer[r + 1] if r + 1 < n_rows else 0) for r in range(n_rows)]
    slack = [outer[r] - floors[r] for r in range(n_rows)]
    suffix = [0] * (n_rows + 1)
    for r in range(n_rows - 1, -1, -1):
        suffix[r] = suffix[r + 1] + slack[r]

    total = 0
    reduced = list(outer)

    def peel(r: int, left: int) -> None:
        nonlocal total
        if left == 0:
            total += _kostka(_strip_zeros(tuple(reduced)), inner, rest, memo)
            return
        if r == n_rows or left > suffix[r]:
            return
        keep = reduced[r]
        for d in range(min(slack[r], left), -1, -1):
            reduced[r] = keep - d
            peel(r + 1, left - d)
        reduced[r] = keep

    peel(0, budget)
    if CACHE_MAX_ENTRIES is None or len(memo) < CACHE_MAX_ENTRIES:
        memo[key] = total
    return total


def kostka_number(
    shape: SkewShape | Sequence[int],
    content: Sequence[int],
    cache: MutableMapping[tuple, int] | None = None,
) -> int:
    """Count the semistandard fillings of shape with the given content.

    shape may be a SkewShape or a bare partition (meaning a straight shape).
    content is a composition; trailing zeros are irrelevant and stripped. The
    total must equal the cell count. cache=None uses the shared module cache.
    """
    shape = _as_shape(shape)
    content = composition(content)
    if sum(content) != shape.size:
        raise SizeMismatchError(f"content total {sum(content)} does not fill {shape.size} cells")
    memo = _CACHE if cache is None else cache
    return _kostka(shape.outer, shape.inner, content, memo)


@dataclass(frozen=True)
class KostkaMatrix:
    """The full table K(lam, mu) over all partitions of n, reverse-lexicographic order."""

    n: int
    partitions: tuple[Parts, ...]
    values: tuple[tuple[int, ...], ...]
    _index: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    def __post_init__(self) -> None:
        self._index.update({p: k for k, p in enumerate(self.partitions)})

    def value(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        return self.values[self._index[partition(lam)]][self._index[partition(mu)]]

    def to_csv(self) -> str:
        """Header row and column hold the partitions in the comma grammar."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + [format_parts(p) for p in self.partitions])
        for p, row in zip(self.partitions, self.values):
            writer.writerow([format_parts(p)] + [str(v) for v in row])
        return buf.getvalue()

    def to_json(self) -> str:
        """Counts serialize as decimal strings so arbitrary precision survives parsers."""
        return json.dumps(self.to_json_dict(), indent=2)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "partitions": [format_parts(p) for p in self.partitions],
            "matrix": [[str(v) for v in row] for row in self.values],
        }


def kostka_matrix(n: int, cache: MutableMapping[tuple, int] | None = None) -> KostkaMatrix:
    """K(lam, mu) for all partition pairs of n; rows are shapes, columns contents."""
    parts = tuple(partitions_of(n))
    values = tuple(
        tuple(kostka_number(SkewShape(lam), mu, cache=cache) for mu in parts) for lam in parts
    )
    return KostkaMatrix(n=n, partitions=parts, values=values)


CountFn = Callable[[SkewShape, Sequence[int]], int]


def verify_positivity(max_n: int, count_fn: CountFn | None = None) -> Report:
    """Check K(lam, mu) > 0 exactly when lam dominates mu, all pairs of each m <= max_n."""
    fn = count_fn or kostka_number
    started = time.perf_counter()
    report = Report(name="positivity-iff-dominance")
    for m in range(max_n + 1):
        parts = partitions_of(m)
        for lam in parts:
            shape = SkewShape(lam)
            for mu in parts:
                report.checked += 1
                positive = fn(shape, mu) > 0
                if positive != dominates(lam, mu):
                    report.violations.append(
                        {
                            "m": m,
                            "lambda": format_parts(lam),
                            "mu": format_parts(mu),
                            "positive": positive,
                            "dominates": dominates(lam, mu),
                        }
                    )
    report.elapsed = time.perf_counter() - started
    return report


def canonical_box_skew_shapes(max_rows: int, max_cols: int, max_cells: int) -> list[SkewShape]:
    """Translation-canonical skew shapes in a max_rows x max_cols box with 1..max_cells cells.

    Canonical means the first row holds a cell and the inner partition is strictly
    shorter than the outer one (so the last row does too and the shape is flush
    left); shapes equal up to shifting the whole cell set are enumerated once.

    With max_cols >= max_cells the family is complete for counting purposes: any
    skew shape with at most max_rows rows and max_cells cells has the same filling
    counts as a member. Translations preserve counts, and when two row blocks
    share no column, sliding the upper block horizontally is a content-preserving
    bijection on fillings; sliding every gap to its minimum leaves each row
    starting at most one column past the previous row's end, so the whole shape
    spans at most max_cells columns.
    """
    shapes = []
    for outer_size in range(1, max_rows * max_cols + 1):
        for outer in partitions_of(outer_size, max_part=max_cols):
            if len(outer) > max_rows:
                continue
            for inner_size in range(max(0, outer_size - max_cells), outer_size):
                for inner in partitions_of(inner_size, max_part=outer[0] - 1):
                    if len(inner) >= len(outer):
                        continue
                    if any(inner[r] > outer[r] for r in range(len(inner))):
                        continue
                    shapes.append(SkewShape(outer, inner))
    return shapes


def verify_monotonicity(max_n: int, include_skew: bool = False, count_fn: CountFn | None = None) -> Report:
    """Check K(shape, mu) <= K(shape, nu) whenever mu dominates nu.

    Straight shapes run over all partitions of each m <= max_n. With include_skew,
    translation-canonical skew shapes with up to max_n cells fitting a 4-row by
    max_n-column box run as well, each on an isolated cache to keep the shared one
    lean.
    """
    started = time.perf_counter()
    report = Report(name="dominance-monotonicity")

    def check(shape: SkewShape, label: str, fn: CountFn) -> None:
        parts = partitions_of(shape.size)
        counts = {mu: fn(shape, mu) for mu in parts}
        for mu in parts:
            for nu in parts:
                if not dominates(mu, nu):
                    continue
                report.checked += 1
                if counts[mu] > counts[nu]:
                    report.violations.append(
                        {
                            "shape": label,
                            "mu": format_parts(mu),
                            "nu": format_parts(nu),
                            "count_mu": counts[mu],
                            "count_nu": counts[nu],
                        }
                    )

    for m in range(max_n + 1):
        for lam in partitions_of(m):
            check(SkewShape(lam), format_parts(lam), count_fn or kostka_number)
    if include_skew:
        for shape in canonical_box_skew_shapes(4, max_n, max_n):
            local: dict[tuple, int] = {}
            fn = count_fn or (lambda sh, mu: kostka_number(sh, mu, cache=local))
            label = f"{format_parts(shape.outer)}/{format_parts(shape.inner)}"
            check(shape, label, fn)
    report.elapsed = time.perf_counter() - started
    return report

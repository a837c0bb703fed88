"""Equivalence classes of semistandard tableaux that agree away from two adjacent entries.

Fix an index i. Two semistandard tableaux of one shape are in the same class when
they agree on every cell whose entry is neither i nor i+1. Within a class, the
cells holding i or i+1 sit in fixed positions: a column containing two of them is
forced to read i above i+1, and the remaining singleton columns of each row may be
filled freely with i's to the left of (i+1)'s. Class sizes therefore reduce to
counting bounded compositions, which is what makes the adjacent-transfer
inequality provable class by class.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Sequence

from .counting import count_bounded_compositions
from .partitions import Parts, SizeMismatchError, composition, part_at
from .tableaux import Cell, SkewShape, Tableau, enumerate_ssyt, is_semistandard


@dataclass(frozen=True)
class ClassSignature:
    """Everything a class keeps fixed, plus the derived per-row counts.

    skeleton: ((row, col), entry) for every cell whose entry is not i or i+1,
    sorted row-major. available: the remaining cells, row-major. paired_columns:
    how many columns hold two available cells (their filling is forced).
    row_counts[r-1]: how many columns have their only available cell in row r;
    those columns are consecutive within the row.
    """

    shape: SkewShape
    index: int
    skeleton: tuple[tuple[Cell, int], ...]
    available: tuple[Cell, ...]
    paired_columns: int
    row_counts: tuple[int, ...]

    def render_skeleton(self) -> str:
        """Rows of the shape with fixed entries shown, available cells as '*', gaps as '.'."""
        fixed = dict(self.skeleton)
        lines = []
        for r in range(1, self.shape.n_rows + 1):
            first, last = self.shape.row_span(r)
            tokens = ["."] * (first - 1)
            for c in range(first, last + 1):
                tokens.append(str(fixed[(r, c)]) if (r, c) in fixed else "*")
            lines.append(" ".join(tokens))
        return "\n".join(lines)


def signature_of(t: Tableau, index: int) -> ClassSignature:
    """The class signature of a semistandard tableau for the entry pair index, index+1.

    Raises ValueError for a non-semistandard filling or index < 1. Asserts the
    structural facts every class of a semistandard witness satisfies: at most two
    available cells per column, and consecutive singleton columns within a row.
    """
    if index < 1:
        raise ValueError(f"index must be at least 1, got {index}")
    if not is_semistandard(t):
        raise ValueError("signatures are defined for semistandard tableaux only")
    pair = (index, index + 1)
    skeleton = []
    available = []
    rows_by_column: dict[int, list[int]] = defaultdict(list)
    for r, c in t.shape.cells():
        e = t.entry(r, c)
        if e in pair:
            available.append((r, c))
            rows_by_column[c].append(r)
        else:
            skeleton.append(((r, c), e))
    paired = 0
    singles_by_row: dict[int, list[int]] = defaultdict(list)
    for c, rows in rows_by_column.items():
        assert len(rows) <= 2, "a column of a semistandard tableau holds at most two of i, i+1"
        if len(rows) == 2:
            paired += 1
        else:
            singles_by_row[rows[0]].append(c)
    row_counts = [0] * t.shape.n_rows
    for r, cols in singles_by_row.items():
        cols.sort()
        assert cols[-1] - cols[0] + 1 == len(cols), "singleton columns of one row must be consecutive"
        row_counts[r - 1] = len(cols)
    return ClassSignature(
        shape=t.shape,
        index=index,
        skeleton=tuple(sorted(skeleton)),
        available=tuple(sorted(available)),
        paired_columns=paired,
        row_counts=tuple(row_counts),
    )


def count_in_class(sig: ClassSignature, target: Sequence[int]) -> int:
    """How many tableaux of the class have the given content.

    Zero unless the target matches the skeleton multiplicities away from the index
    pair; otherwise the paired columns fix one i and one i+1 each, and the free
    choice is how many i's go into each row's singleton run.
    """
    target = composition(target)
    if sum(target) != sig.shape.size:
        raise SizeMismatchError(f"content total {sum(target)} does not fill {sig.shape.size} cells")
    i = sig.index
    skeleton_counts = Counter(e for _, e in sig.skeleton)
    values = set(skeleton_counts) | set(range(1, len(target) + 1))
    for v in values:
        if v in (i, i + 1):
            continue
        if skeleton_counts.get(v, 0) != part_at(target, v):
            return 0
    free_i = part_at(target, i) - sig.paired_columns
    # with matching skeletons the half-sum form of the same quantity is an identity
    assert 2 * free_i == part_at(target, i) - part_at(target, i + 1) + sum(sig.row_counts)
    return count_bounded_compositions(sig.row_counts, free_i)


def transfer_target(mu: Sequence[int], index: int) -> Parts:
    """The content after moving one unit from part index to part index+1.

    Requires index >= 1 and mu_index > mu_{index+1}, so the result differs from mu
    and keeps non-negative parts.
    """
    mu = composition(mu)
    if index < 1:
        raise ValueError(f"index must be at least 1, got {index}")
    if part_at(mu, index) <= part_at(mu, index + 1):
        raise ValueError(
            f"transfer needs part {index} to exceed part {index + 1}, "
            f"got {part_at(mu, index)} and {part_at(mu, index + 1)}"
        )
    moved = list(mu) + [0] * max(0, index + 1 - len(mu))
    moved[index - 1] -= 1
    moved[index] += 1
    return composition(moved)


def adjacent_transfer_counts(shape: SkewShape, mu: Sequence[int], index: int) -> tuple[int, int]:
    """Tableau counts before and after an adjacent transfer of the content at index.

    Both counts come from the enumeration oracle, not the DP engine; the transfer
    precondition is the one of transfer_target.
    """
    mu = composition(mu)
    nu = transfer_target(mu, index)
    return len(enumerate_ssyt(shape, mu)), len(enumerate_ssyt(shape, nu))


def signature_census(shape: SkewShape, tableaux: Sequence[Tableau], index: int) -> dict[ClassSignature, int]:
    """Group a batch of semistandard tableaux of one shape by class signature."""
    out: dict[ClassSignature, int] = defaultdict(int)
    for t in tableaux:
        out[signature_of(t, index)] += 1
    return dict(out)

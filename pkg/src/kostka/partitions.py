"""Integer partitions, compositions, and the dominance order.

Partitions are canonical tuples: weakly decreasing, positive parts, no zeros.
Compositions are tuples of non-negative parts; two compositions are the same
composition when they agree up to trailing zeros, so the constructor strips them.
Rows and part indices are 1-based in every public docstring and error message.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

Parts = tuple[int, ...]

ROW = "row"
COLUMN = "column"


class SizeMismatchError(ValueError):
    """Comparison or filling was asked across two different total sizes."""


class NotComparableError(ValueError):
    """A dominance chain was requested between incomparable partitions."""


def partition(parts: Iterable[int]) -> Parts:
    """Canonicalize to a partition tuple; trailing zeros are dropped.

    Raises ValueError unless the remaining parts are positive and weakly decreasing.
    """
    out = list(parts)
    while out and out[-1] == 0:
        out.pop()
    for k, p in enumerate(out):
        if not isinstance(p, int) or p <= 0:
            raise ValueError(f"partition parts must be positive integers, got {p!r} at position {k + 1}")
        if k and out[k - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing, got {out[k - 1]} before {p}")
    return tuple(out)


def composition(parts: Iterable[int]) -> Parts:
    """Canonicalize to a composition tuple: non-negative parts, trailing zeros dropped."""
    out = list(parts)
    for k, p in enumerate(out):
        if not isinstance(p, int) or p < 0:
            raise ValueError(f"composition parts must be non-negative integers, got {p!r} at position {k + 1}")
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def part_at(parts: Sequence[int], k: int) -> int:
    """The k-th part, 1-based, zero beyond the stored length."""
    return parts[k - 1] if 1 <= k <= len(parts) else 0


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff every prefix sum of a is >= the matching prefix sum of b.

    Both arguments may be partitions or compositions; they must have equal totals,
    otherwise the two live in different universes and SizeMismatchError is raised.
    """
    a = composition(a)
    b = composition(b)
    if sum(a) != sum(b):
        raise SizeMismatchError(f"dominance compares equal totals only, got {sum(a)} vs {sum(b)}")
    sa = sb = 0
    for k in range(max(len(a), len(b))):
        sa += a[k] if k < len(a) else 0
        sb += b[k] if k < len(b) else 0
        if sa < sb:
            return False
    return True


@lru_cache(maxsize=None)
def _partitions_of(n: int, max_part: int) -> tuple[Parts, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, max_part: int | None = None) -> list[Parts]:
    """All partitions of n in reverse-lexicographic order, largest part first.

    partitions_of(4) starts with (4,) and ends with (1, 1, 1, 1).
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative total {n}")
    bound = n if max_part is None else min(max_part, n)
    if n and bound <= 0:
        return []
    return list(_partitions_of(n, bound if n else 1))


def conjugate(p: Sequence[int]) -> Parts:
    """Transpose of the Young diagram: column lengths become row lengths."""
    p = partition(p)
    if not p:
        return ()
    return tuple(sum(1 for q in p if q > c) for c in range(p[0]))


@dataclass(frozen=True)
class CoverMove:
    """One box move realizing a dominance cover, with 1-based row indices.

    kind "row": one box drops from row i to row i+1 (j is always i+1).
    kind "column": the last box of row i drops to row j, landing one column left;
    every row strictly between holds exactly mu_i - 1 boxes.
    """

    kind: str
    i: int
    j: int

    def describe(self) -> str:
        if self.kind == ROW:
            return f"row-move i={self.i}"
        return f"column-move i={self.i}, j={self.j}"


def apply_move(mu: Sequence[int], move: CoverMove) -> Parts:
    """Apply a cover move to mu, validating its preconditions; returns a partition."""
    mu = partition(mu)
    i, j = move.i, move.j
    if move.kind == ROW:
        if j != i + 1:
            raise ValueError(f"row moves go to the next row, got i={i}, j={j}")
        if i < 1 or part_at(mu, i) < part_at(mu, i + 1) + 2:
            raise ValueError(f"row move needs part i at least part i+1 plus 2 at i={i} in {mu}")
    elif move.kind == COLUMN:
        if not 1 <= i < j:
            raise ValueError(f"column move needs 1 <= i < j, got i={i}, j={j}")
        top = part_at(mu, i)
        if top < 2 or part_at(mu, j) != top - 2:
            raise ValueError(f"column move needs part j equal to part i minus 2 at i={i}, j={j} in {mu}")
        if any(part_at(mu, k) != top - 1 for k in range(i + 1, j)):
            raise ValueError(f"column move needs parts strictly between {i} and {j} equal to {top - 1} in {mu}")
    else:
        raise ValueError(f"unknown move kind {move.kind!r}")
    out = list(mu) + [0] * max(0, j - len(mu))
    out[i - 1] -= 1
    out[j - 1] += 1
    return partition(out)


def covers(mu: Sequence[int]) -> list[tuple[CoverMove, Parts]]:
    """Partitions covered by mu in dominance order, each paired with its box move.

    Listed in reverse-lexicographic order of the target. A column move with
    j = i + 1 produces the same target as the row move at i; such duplicates are
    emitted once, annotated as the row move.
    """
    mu = partition(mu)
    found: dict[Parts, CoverMove] = {}
    for i in range(1, len(mu) + 1):
        if part_at(mu, i) >= part_at(mu, i + 1) + 2:
            move = CoverMove(ROW, i, i + 1)
            found.setdefault(apply_move(mu, move), move)
    for i in range(1, len(mu) + 1):
        top = part_at(mu, i)
        if top < 2:
            continue
        j = i + 1
        while part_at(mu, j) == top - 1:
            j += 1
        if part_at(mu, j) == top - 2:
            move = CoverMove(COLUMN, i, j)
            found.setdefault(apply_move(mu, move), move)
    return [(found[target], target) for target in sorted(found, reverse=True)]


def cover_chain(mu: Sequence[int], nu: Sequence[int]) -> list[Parts]:
    """A saturated chain mu = p0, p1, ..., pk = nu with each step a dominance cover.

    Greedy and deterministic: at every step the reverse-lexicographically first
    cover still dominating nu is taken, and each step is re-verified to dominate nu.
    Raises SizeMismatchError for different totals and NotComparableError when mu
    does not dominate nu.
    """
    mu = partition(mu)
    nu = partition(nu)
    if sum(mu) != sum(nu):
        raise SizeMismatchError(f"chain endpoints need equal totals, got {sum(mu)} vs {sum(nu)}")
    if not dominates(mu, nu):
        raise NotComparableError(f"{mu} does not dominate {nu}")
    chain = [mu]
    current = mu
    while current != nu:
        for _, target in covers(current):
            if dominates(target, nu):
                current = target
                chain.append(target)
                break
        else:
            raise RuntimeError(f"no cover of {current} dominates {nu}; dominance poset broken")
    return chain


def adjacent_transfer_chain(mu: Sequence[int], move: CoverMove) -> list[Parts]:
    """Intermediate compositions interpolating a column cover move.

    For a column move i -> j the k-th intermediate (k = i+1, ..., j-1) takes one
    unit from part i and gives it to part k. Results are padded to width j so the
    chain lines up; a row move has no intermediates and is rejected.
    """
    mu = partition(mu)
    if move.kind != COLUMN:
        raise ValueError("only column moves have intermediate transfer compositions")
    apply_move(mu, move)
    width = max(len(mu), move.j)
    base = mu + (0,) * (width - len(mu))
    out = []
    for k in range(move.i + 1, move.j):
        step = list(base)
        step[move.i - 1] -= 1
        step[k - 1] += 1
        out.append(tuple(step))
    return out


def full_transfer_chain(mu: Sequence[int], move: CoverMove) -> list[Parts]:
    """The whole chain mu, intermediates, target for a cover move, padded to equal width."""
    mu = partition(mu)
    nu = apply_move(mu, move)
    width = max(len(mu), move.j)
    pad = lambda t: t + (0,) * (width - len(t))
    middle = adjacent_transfer_chain(mu, move) if move.kind == COLUMN else []
    return [pad(mu), *middle, pad(nu)]


def adjacent_transfer_index(before: Sequence[int], after: Sequence[int]) -> int | None:
    """Row r if after equals before with one unit moved from part r to part r+1.

    Requires the source part to exceed the target part before the move; returns
    None when the pair is not such a transfer.
    """
    a = composition(before)
    b = composition(after)
    if sum(a) != sum(b):
        return None
    width = max(len(a), len(b))
    av = list(a) + [0] * (width - len(a))
    bv = list(b) + [0] * (width - len(b))
    diffs = [k for k in range(width) if av[k] != bv[k]]
    if len(diffs) != 2:
        return None
    r, s = diffs
    if s != r + 1 or bv[r] != av[r] - 1 or bv[s] != av[s] + 1:
        return None
    if av[r] <= av[s]:
        return None
    return r + 1


def parse_parts(text: str) -> Parts:
    """Parse the comma grammar INT ("," INT)*; empty string and "0" mean the empty sequence."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        return tuple(int(token) for token in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def format_parts(parts: Sequence[int]) -> str:
    """Inverse of parse_parts; the empty sequence prints as "0"."""
    return ",".join(str(p) for p in parts) if parts else "0"


def display_parts(parts: Sequence[int]) -> str:
    """Parenthesized human-readable form, e.g. (2,2); the empty sequence is ()."""
    return "(" + ",".join(str(p) for p in parts) + ")"

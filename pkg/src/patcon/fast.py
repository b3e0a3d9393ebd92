"""Specialized containment scans and the pattern-dispatching front door.

One scan per recognized pattern family:

* column of ones        -- per-column counting
* identity              -- suffix dynamic program over a (rows+1) x (cols+1) table
* tuple identity        -- the same program with per-column one-index buffers
* L-shape               -- per-column counters driven bottom-to-top
* cross                 -- left/right/up/down tallies around every 1-entry
* all-ones rectangle    -- counters over t-subsets of one axis, t = min(k, l)

Each ``contains_*`` operation has a ``max_*`` sibling that runs the identical
scan to completion and reports the extremal statistic (largest identity size,
tallest L-shape, ...). The contains form may stop as soon as its threshold is
reached; stopping early never changes the verdict because every tracked
quantity only grows during the scan. The max form never stops early, which
makes it the right subject for worst-case timing.

``dispatch`` classifies the pattern, optionally applies the ones-count
prefilter when the caller supplies a trusted extremal bound, routes to the
matching scan, and falls back to the brute-force oracle for general patterns.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .matrix import (
    AllOnes,
    BitMatrix,
    ColumnOnes,
    Cross,
    Identity,
    LShape,
    RowOnes,
    SparseEntries,
    TupleIdentity,
    classify_pattern,
    count_ones,
    transpose,
)
from .naive import contains_naive


# --- column of ones ----------------------------------------------------------


def max_column_ones(A: BitMatrix) -> int:
    """Largest number of ones in any single column of A."""
    return max(sum(A.column(c)) for c in range(1, A.cols + 1))


def contains_column_ones(A: BitMatrix, k: int) -> bool:
    """True iff some column of A has at least k ones; stops at the first such column."""
    if k < 1:
        raise ValueError("k must be positive")
    if k > A.rows:
        return False
    for c in range(1, A.cols + 1):
        if sum(A.column(c)) >= k:
            return True
    return False


# --- identity and tuple identity ----------------------------------------------


@dataclass(frozen=True)
class IdentityDP:
    """Completed suffix table of the identity dynamic program.

    ``table[r][c]`` (1-based, sentinel zeros at r = rows+1 and c = cols+1) is
    the widest j-tuple identity contained in the submatrix on rows r.. and
    columns c..; row/column 0 are unused padding.
    """

    rows: int
    cols: int
    j: int
    table: tuple


def identity_dp(A: BitMatrix, j: int = 1) -> IdentityDP:
    """Build the full suffix table; table[1][1] is the maximum width."""
    if j < 1:
        raise ValueError("j must be positive")
    R, C = A.rows, A.cols
    D = [[0] * (C + 2) for _ in range(R + 2)]
    for c in range(C, 0, -1):
        col = A.column(c)
        one_rows = []
        for r in range(R, 0, -1):
            v = D[r + 1][c]
            w = D[r][c + 1]
            if w > v:
                v = w
            if col[r - 1]:
                one_rows.append(r)
                if len(one_rows) >= j:
                    t = 1 + D[one_rows[-j] + 1][c + 1]
                    if t > v:
                        v = t
            D[r][c] = v
    return IdentityDP(R, C, j, tuple(tuple(row) for row in D))


def _tuple_scan(A: BitMatrix, j: int, stop_at) -> int:
    """Rolling two-column form of the suffix program; returns the maximum width.

    With stop_at set, returns as soon as any cell reaches that width.
    """
    R, C = A.rows, A.cols
    nxt = [0] * (R + 2)
    cur = [0] * (R + 2)
    for c in range(C, 0, -1):
        col = A.column(c)
        one_rows = []
        for r in range(R, 0, -1):
            v = cur[r + 1]
            w = nxt[r]
            if w > v:
                v = w
            if col[r - 1]:
                one_rows.append(r)
                if len(one_rows) >= j:
                    t = 1 + nxt[one_rows[-j] + 1]
                    if t > v:
                        v = t
            cur[r] = v
            if stop_at is not None and v >= stop_at:
                return v
        nxt, cur = cur, nxt
    return nxt[1]


def max_identity(A: BitMatrix) -> int:
    """Largest k such that A contains the k x k identity (0 for all-zero A)."""
    return _tuple_scan(A, 1, None)


def contains_identity(A: BitMatrix, k: int) -> bool:
    """True iff A contains the k x k identity."""
    if k < 1:
        raise ValueError("k must be positive")
    if k > A.rows or k > A.cols:
        return False
    return _tuple_scan(A, 1, k) >= k


def max_tuple_identity_width(A: BitMatrix, j: int) -> int:
    """Largest k such that A contains the jk x k tuple identity."""
    if j < 1:
        raise ValueError("j must be positive")
    return _tuple_scan(A, j, None)


def contains_tuple_identity(A: BitMatrix, j: int, k: int) -> bool:
    """True iff A contains the jk x k tuple identity."""
    if j < 1 or k < 1:
        raise ValueError("j and k must be positive")
    if j * k > A.rows or k > A.cols:
        return False
    return _tuple_scan(A, j, k) >= k


# --- L-shape ------------------------------------------------------------------


def lshape_counter_rows(A: BitMatrix, w: int):
    """Drive the per-column counters bottom-to-top, yielding them after each row.

    A counter at column x equals the tallest partial L of width w whose
    vertical arm sits in column x: it starts (unconditional increment) only on
    a row with w ones from x rightward, and grows (conditional increment) on
    any later one in column x.
    """
    if w < 1:
        raise ValueError("w must be positive")
    counters = [0] * A.cols
    for r in range(A.rows, 0, -1):
        rowb = A.row(r)
        xs = [i for i, v in enumerate(rowb) if v]
        q = len(xs)
        if q >= w:
            for x in xs[: q - w + 1]:
                counters[x] += 1
            for x in xs[q - w + 1 :]:
                if counters[x]:
                    counters[x] += 1
        else:
            for x in xs:
                if counters[x]:
                    counters[x] += 1
        yield counters


def max_lshape_height(A: BitMatrix, w: int) -> int:
    """Largest h such that A contains the h x w L-shape (0 if none)."""
    if w > A.cols:
        return 0
    counters = None
    for counters in lshape_counter_rows(A, w):
        pass
    return max(counters)


def contains_lshape(A: BitMatrix, h: int, w: int) -> bool:
    """True iff A contains the h x w pattern with ones in column 1 and row h."""
    if h < 1 or w < 1:
        raise ValueError("h and w must be positive")
    if h > A.rows or w > A.cols:
        return False
    for counters in lshape_counter_rows(A, w):
        if max(counters) >= h:
            return True
    return False


# --- cross --------------------------------------------------------------------


@dataclass(frozen=True)
class CrossCounts:
    """Per-entry tallies aligned with SparseEntries.entries.

    left/right count ones strictly left/right of the entry in its row;
    up/down count ones strictly above/below in its column.
    """

    left: tuple
    right: tuple
    up: tuple
    down: tuple


def cross_counts(E: SparseEntries) -> CrossCounts:
    """Left/right/up/down tallies for every 1-entry, in linear passes."""
    row_total = [0] * (E.source_rows + 1)
    col_total = [0] * (E.source_cols + 1)
    for r, c in E.entries:
        row_total[r] += 1
        col_total[c] += 1
    left = E.row_rank
    up = E.col_rank
    right = tuple(row_total[r] - 1 - lk for (r, _), lk in zip(E.entries, left))
    down = tuple(col_total[c] - 1 - uk for (_, c), uk in zip(E.entries, up))
    return CrossCounts(left, right, up, down)


def contains_cross(A: BitMatrix, a: int, b: int, c: int, d: int) -> bool:
    """True iff A contains the a x b pattern with ones in row c and column d.

    A 1-entry can act as the intersection cell exactly when its row holds
    d-1 ones to its left and b-d to its right, and its column c-1 above and
    a-c below. The scan streams the ranks row-major with per-column counters
    instead of materializing the coordinate list.
    """
    if not (1 <= c <= a and 1 <= d <= b):
        raise ValueError("cross center must satisfy 1 <= c <= a and 1 <= d <= b")
    row_totals = [0] * (A.rows + 1)
    for r in range(1, A.rows + 1):
        row_totals[r] = sum(A.row(r))
    col_totals = [0] * (A.cols + 1)
    for cc in range(1, A.cols + 1):
        col_totals[cc] = sum(A.column(cc))
    need_left = d - 1
    need_right = b - d
    need_up = c - 1
    need_down = a - c
    col_seen = [0] * (A.cols + 1)
    for r in range(1, A.rows + 1):
        rowb = A.row(r)
        seen_in_row = 0
        rt = row_totals[r]
        for i, v in enumerate(rowb):
            if not v:
                continue
            cc = i + 1
            up = col_seen[cc]
            if (
                seen_in_row >= need_left
                and rt - seen_in_row - 1 >= need_right
                and up >= need_up
                and col_totals[cc] - up - 1 >= need_down
            ):
                return True
            seen_in_row += 1
            col_seen[cc] += 1
    return False


# --- all-ones rectangle ---------------------------------------------------------


def _subset_counter_scan(A: BitMatrix, t: int, stop_at) -> int:
    """Scan rows, counting per t-subset of columns the rows covering that subset.

    Returns the largest counter reached; with stop_at set, returns as soon as
    any counter gets there. Counters are created lazily, so a row with q ones
    costs C(q, t) increments.
    """
    counters: dict = {}
    best = 0
    for r in range(1, A.rows + 1):
        rowb = A.row(r)
        xs = [i for i, v in enumerate(rowb) if v]
        if len(xs) < t:
            continue
        for sub in combinations(xs, t):
            v = counters.get(sub, 0) + 1
            counters[sub] = v
            if v > best:
                best = v
                if stop_at is not None and best >= stop_at:
                    return best
    return best


def max_allones_rows(A: BitMatrix, t: int) -> int:
    """Largest number of rows of A sharing ones in some common t columns."""
    if t < 1:
        raise ValueError("t must be positive")
    if t > A.cols:
        return 0
    return _subset_counter_scan(A, t, None)


def contains_allones(A: BitMatrix, k: int, l: int) -> bool:
    """True iff A contains the k x l all-ones rectangle.

    The scan runs over the orientation whose subsets have size min(k, l):
    row scan with l-subsets of columns when l <= k, otherwise the transposed
    equivalent with k-subsets of rows.
    """
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    if k > A.rows or l > A.cols:
        return False
    if l <= k:
        return _subset_counter_scan(A, l, k) >= k
    return _subset_counter_scan(transpose(A), k, l) >= l


# --- prefilter and dispatch ------------------------------------------------------


class PrefilterResult(Enum):
    CONTAINS = "contains"
    UNKNOWN = "unknown"


def ones_prefilter(A: BitMatrix, bound: int) -> PrefilterResult:
    """Certify containment from the ones count alone.

    The caller must guarantee that no matrix of A's size with more than
    ``bound`` ones avoids the pattern at hand (an exact extremal value or a
    proven upper bound); then more than ``bound`` ones forces containment.
    Anything else is UNKNOWN and needs a full scan.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if count_ones(A) > bound:
        return PrefilterResult.CONTAINS
    return PrefilterResult.UNKNOWN


def dispatch(A: BitMatrix, P: BitMatrix, bounds=None) -> bool:
    """Decide containment via the cheapest applicable scan.

    ``bounds`` optionally maps (n, pattern) to a trusted extremal bound for
    n x n matrices; when a bound for (A.rows, P) is present and A is square,
    the ones-count prefilter may settle the answer before any scan runs.
    Always agrees with contains_naive.
    """
    if bounds and A.rows == A.cols:
        bound = bounds.get((A.rows, P))
        if bound is not None and ones_prefilter(A, bound) is PrefilterResult.CONTAINS:
            return True
    cls = classify_pattern(P)
    match cls:
        case ColumnOnes(k=k):
            return contains_column_ones(A, k)
        case RowOnes(w=w):
            return contains_column_ones(transpose(A), w)
        case AllOnes(k=k, l=l):
            return contains_allones(A, k, l)
        case Identity(k=k):
            return contains_identity(A, k)
        case TupleIdentity(j=j, k=k):
            return contains_tuple_identity(A, j, k)
        case LShape(h=h, w=w):
            return contains_lshape(A, h, w)
        case Cross(a=a, b=b, c=c, d=d):
            return contains_cross(A, a, b, c, d)
        case _:
            return contains_naive(A, P)

"""Exact extremal values: the most ones an n x n matrix can carry while avoiding a pattern.

``ex_exact`` runs a depth-first branch and bound over the cells in row-major
order, placing a 1 before a 0 at every cell. A branch dies as soon as the
partial matrix (undecided cells read as 0) already contains the pattern --
adding more ones can only keep it contained -- or when the ones placed plus
the cells still undecided cannot beat the best avoider found so far. Trying
1 first makes the reported witness deterministic: among all maximum avoiders
it is the one preferring ones at the earliest row-major positions.

The search is exact but exponential; it is meant for desk-scale n. A node
budget turns runaway searches into a distinct error instead of a wrong value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import BitMatrix, count_ones, parse_matrix, serialize
from .naive import contains_naive
from .fast import dispatch

DEFAULT_NODE_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    """The branch-and-bound node budget ran out before the search finished."""

    def __init__(self, n: int, budget: int):
        super().__init__(f"node budget {budget} exceeded while searching n={n}")
        self.n = n
        self.budget = budget


@dataclass(frozen=True)
class ExtremalRecord:
    """Exact extremal value with a certifying avoider.

    ``witness`` is an n x n matrix with exactly ``value`` ones that avoids
    ``pattern``; no n x n matrix with more ones avoids it.
    """

    n: int
    pattern: BitMatrix
    value: int
    witness: BitMatrix


def ex_exact(n: int, P: BitMatrix, node_budget: int = DEFAULT_NODE_BUDGET) -> ExtremalRecord:
    """Maximum number of ones an n x n matrix can hold while avoiding P.

    Raises ValueError for an all-zero P (every matrix contains it, so no
    avoider exists) and SearchBudgetExceeded when the node budget runs out.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if count_ones(P) == 0:
        raise ValueError("pattern has no ones; every matrix contains it")

    total = n * n
    cells = bytearray(total)
    best_value = 0
    best_witness = bytes(total)  # all-zero avoids any pattern with a one
    nodes = 0

    def walk(idx: int, ones: int):
        nonlocal best_value, best_witness, nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetExceeded(n, node_budget)
        if idx == total:
            if ones > best_value:
                best_value = ones
                best_witness = bytes(cells)
            return
        if ones + (total - idx) <= best_value:
            return
        cells[idx] = 1
        if not dispatch(BitMatrix(n, n, bytes(cells)), P):
            walk(idx + 1, ones + 1)
        cells[idx] = 0
        walk(idx + 1, ones)

    walk(0, 0)
    return ExtremalRecord(n, P, best_value, BitMatrix(n, n, best_witness))


def verify_record(rec: ExtremalRecord) -> bool:
    """Check the witness side of a record: size, ones count, avoidance.

    Maximality is ex_exact's contract and is not re-verified here.
    """
    w = rec.witness
    if w.rows != rec.n or w.cols != rec.n:
        return False
    if count_ones(w) != rec.value:
        return False
    return not contains_naive(w, rec.pattern)


def ex_table(n_max: int, P: BitMatrix, node_budget: int = DEFAULT_NODE_BUDGET):
    """Records for n = 1 .. n_max."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    return [ex_exact(n, P, node_budget) for n in range(1, n_max + 1)]


# --- cache file --------------------------------------------------------------
#
# One block per record: a line "n value", then the witness in dense format;
# blocks are separated by blank lines. A cache file describes one pattern.


def save_cache(records, path):
    """Write records to the cache text format."""
    blocks = []
    for rec in records:
        blocks.append(f"{rec.n} {rec.value}\n{serialize(rec.witness)}")
    with open(path, "w") as fh:
        fh.write("\n".join(blocks))


def load_cache(path):
    """Read a cache file; returns a list of (n, value, witness) tuples."""
    with open(path) as fh:
        text = fh.read()
    blocks = [b for b in text.split("\n\n") if b.strip()]
    out = []
    for block in blocks:
        lines = block.strip().splitlines()
        head = lines[0].split()
        if len(head) != 2:
            raise ValueError(f"bad cache header line: {lines[0]!r}")
        n, value = int(head[0]), int(head[1])
        witness = parse_matrix("\n".join(lines[1:]))
        out.append((n, value, witness))
    return out


def bounds_from_cache(path, P: BitMatrix):
    """Build the (n, pattern) -> bound map dispatch expects from a cache file."""
    return {(n, P): value for n, value, _ in load_cache(path)}

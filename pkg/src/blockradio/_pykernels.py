"""Pure-Python search kernels; reference implementation of ``_kernels.pyx``.

Both modules expose the same two functions with identical results.
``dist`` is any 2-D integer array-like; it is converted to nested lists.
"""

from __future__ import annotations

from typing import Sequence


def greedy_labels(dist, order: Sequence[int], k: int) -> list[int]:
    """Smallest labels increasing along ``order`` satisfying the radio ``k`` condition."""
    rows = dist.tolist() if hasattr(dist, "tolist") else dist
    labels: list[int] = []
    for i, v in enumerate(order):
        lab = labels[-1] + 1 if labels else 0
        for j in range(i):
            t = labels[j] + k + 1 - rows[order[j]][v]
            if t > lab:
                lab = t
        labels.append(lab)
    return labels


def exact_search(dist, k: int, firsts: Sequence[int], best_init: int) -> tuple[int, list[int] | None]:
    """Depth-first search over orderings with incremental greedy labels.

    Returns the smallest span strictly below ``best_init`` together with the
    lexicographically first ordering achieving it, or ``(best_init, None)``.
    Candidates are tried in ascending vertex id; a partial ordering is
    abandoned once ``label + remaining >= best``.
    """
    rows = dist.tolist() if hasattr(dist, "tolist") else [list(r) for r in dist]
    p = len(rows)
    best = best_init
    best_order: list[int] | None = None
    order = [0] * p
    labels = [0] * p
    used = [False] * p
    kk = k + 1

    def extend(depth: int) -> None:
        nonlocal best, best_order
        prev = labels[depth - 1] + 1
        remaining = p - 1 - depth
        for v in range(p):
            if used[v]:
                continue
            lab = prev
            for j in range(depth):
                t = labels[j] + kk - rows[order[j]][v]
                if t > lab:
                    lab = t
            if lab + remaining >= best:
                continue
            order[depth] = v
            if remaining == 0:
                best = lab
                best_order = order[:]
                continue
            labels[depth] = lab
            used[v] = True
            extend(depth + 1)
            used[v] = False

    for v in firsts:
        if p - 1 >= best:
            break
        order[0] = v
        labels[0] = 0
        if p == 1:
            best, best_order = 0, [v]
            break
        used[v] = True
        extend(1)
        used[v] = False
    return best, best_order


def bfs_all(indptr: Sequence[int], indices: Sequence[int], p: int) -> list[list[int]]:
    """All-pairs BFS distances over a CSR adjacency; ``-1`` marks unreachable."""
    out = []
    for s in range(p):
        row = [-1] * p
        row[s] = 0
        frontier = [s]
        dist = 0
        while frontier:
            dist += 1
            nxt = []
            for x in frontier:
                for y in indices[indptr[x]:indptr[x + 1]]:
                    if row[y] < 0:
                        row[y] = dist
                        nxt.append(y)
            frontier = nxt
        out.append(row)
    return out

"""Radio labelings: validation, the lower bound, ordering-induced labelings and
the exact radio-number oracle."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .centers import CenterInfo, LevelStructure
from .errors import DiameterError, GraphFormatError, OrderingError, RadioError, SolverLimitError
from .graph import DistanceMatrix, Graph


@dataclass(frozen=True)
class RadioLabeling:
    labels: tuple[int, ...]

    @property
    def span(self) -> int:
        return max(self.labels) - min(self.labels)

    def canonical(self) -> "RadioLabeling":
        lo = min(self.labels)
        return RadioLabeling(tuple(x - lo for x in self.labels))

    def ordering(self) -> "VertexOrdering":
        """Vertices sorted by label (ties by id)."""
        return VertexOrdering(tuple(sorted(range(len(self.labels)), key=lambda v: (self.labels[v], v))))

    def to_dict(self) -> dict[str, int]:
        return {str(v): lab for v, lab in enumerate(self.labels)}


@dataclass(frozen=True)
class VertexOrdering:
    order: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.order) != list(range(len(self.order))):
            raise OrderingError("ordering is not a permutation of 0..p-1")

    @classmethod
    def of(cls, seq: Iterable[int], p: int | None = None) -> "VertexOrdering":
        o = cls(tuple(int(v) for v in seq))
        if p is not None and len(o.order) != p:
            raise OrderingError(f"ordering has {len(o.order)} vertices, graph has {p}")
        return o

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __getitem__(self, i: int) -> int:
        return self.order[i]

    def reversed(self) -> "VertexOrdering":
        return VertexOrdering(self.order[::-1])


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    required: int
    actual: int


def validate_radio(g: Graph, d: DistanceMatrix, f: RadioLabeling, k: int | None = None) -> Violation | None:
    """First pair (lowest ids) breaking ``|f(u)-f(v)| >= k+1-d(u,v)``, or ``None``."""
    k = d.diameter if k is None else k
    if k < 1:
        raise RadioError("k must be a positive integer")
    if len(f.labels) != g.p:
        raise RadioError(f"labeling has {len(f.labels)} entries, graph has {g.p} vertices")
    return first_violation(d.dist, np.asarray(f.labels, dtype=np.int64), k)


def first_violation(dist: np.ndarray, labels: np.ndarray, k: int, chunk: int = 256) -> Violation | None:
    """Vectorised pair scan in row chunks; pairs reported with ``u < v``."""
    p = len(labels)
    for lo in range(0, p, chunk):
        hi = min(p, lo + chunk)
        need = k + 1 - dist[lo:hi]
        gap = np.abs(labels[lo:hi, None] - labels[None, :])
        bad = gap < need
        bad &= np.arange(p)[None, :] > np.arange(lo, hi)[:, None]
        if bad.any():
            r, c = np.argwhere(bad)[0]
            return Violation(lo + int(r), int(c), int(need[r, c]), int(gap[r, c]))
    return None


def is_radio_labeling(g: Graph, d: DistanceMatrix, f: RadioLabeling, k: int | None = None) -> bool:
    return validate_radio(g, d, f, k) is None


def lower_bound(g: Graph, ci: CenterInfo, ls: LevelStructure) -> int:
    """``(p-1)(d+eps) - 2 L(G) + eps``."""
    diam = g.distances.diameter
    if diam < 2:
        raise DiameterError(f"diameter below 2 (d(G) = {diam})")
    eps = ci.epsilon
    return (g.p - 1) * (diam + eps) - 2 * ls.total_level + eps


def labeling_from_ordering(g: Graph, ci: CenterInfo, ls: LevelStructure, order: VertexOrdering) -> RadioLabeling:
    """Labels with ``f(u_{i+1}) = f(u_i) + d + eps - L(u_{i+1}) - L(u_i)``.

    The result is not validated.  A negative increment means the ordering
    cannot come from this construction.
    """
    if len(order) != g.p:
        raise OrderingError(f"ordering has {len(order)} vertices, graph has {g.p}")
    step = g.distances.diameter + ci.epsilon
    L = ls.level
    labels = [0] * g.p
    cur = 0
    for i in range(g.p - 1):
        a, b = order[i], order[i + 1]
        inc = step - L[a] - L[b]
        if inc < 0:
            raise OrderingError(f"negative increment {inc} at index {i} ({a} -> {b})")
        cur += inc
        labels[b] = cur
    return RadioLabeling(tuple(labels))


def greedy_min_labeling(g: Graph, d: DistanceMatrix, order: VertexOrdering, k: int | None = None) -> RadioLabeling:
    k = d.diameter if k is None else k
    if k < 1:
        raise RadioError("k must be a positive integer")
    seq = kernels.get_backend().greedy_labels(d.dist, list(order.order), k)
    labels = [0] * g.p
    for v, lab in zip(order.order, seq):
        labels[v] = lab
    return RadioLabeling(tuple(labels))


@dataclass(frozen=True)
class ExactResult:
    rn: int
    witness: RadioLabeling
    ordering: VertexOrdering


def exact_radio_number(
    g: Graph,
    d: DistanceMatrix,
    max_p: int = 10,
    k: int | None = None,
    threads: int = 1,
    backend: str | None = None,
) -> ExactResult:
    """Minimum over all orderings of the greedy labeling span.

    The witness is the lexicographically first optimal ordering, independent
    of ``threads``: each first-vertex subtree yields its own first optimum and
    the smallest first vertex among the global optima wins.
    """
    if g.p > max_p:
        raise SolverLimitError(f"instance too large for exact solver (p={g.p} > max_p={max_p})")
    k = d.diameter if k is None else k
    if k < 1:
        raise RadioError("k must be a positive integer")
    kern = kernels.get_backend(backend)
    ident = list(range(g.p))
    seed = kern.greedy_labels(d.dist, ident, k)[-1] + 1
    if threads <= 1 or g.p == 1:
        rn, order = kern.exact_search(d.dist, k, ident, seed)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda v: kern.exact_search(d.dist, k, [v], seed), ident))
        rn = min(r for r, o in parts if o is not None)
        order = next(o for r, o in parts if o is not None and r == rn)
    ordering = VertexOrdering(tuple(order))
    witness = greedy_min_labeling(g, d, ordering, k)
    return ExactResult(rn, witness, ordering)


# ---------------------------------------------------------------------------
# file formats


def _data_lines(text: str) -> list[str]:
    return [ln.split("#", 1)[0].strip() for ln in text.splitlines() if ln.split("#", 1)[0].strip()]


def parse_ordering(text: str, p: int | None = None) -> VertexOrdering:
    try:
        ids = [int(tok) for ln in _data_lines(text) for tok in ln.split()]
    except ValueError as exc:
        raise GraphFormatError(f"ordering file: {exc}") from None
    return VertexOrdering.of(ids, p)


def format_ordering(order: VertexOrdering) -> str:
    return " ".join(map(str, order.order)) + "\n"


def parse_labeling(text: str, p: int) -> RadioLabeling:
    labels: dict[int, int] = {}
    for ln in _data_lines(text):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"labeling file: expected 'vertex label', got {ln!r}")
        try:
            v, lab = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"labeling file: non-integer entry in {ln!r}") from None
        if v in labels:
            raise GraphFormatError(f"labeling file: vertex {v} labeled twice")
        labels[v] = lab
    if sorted(labels) != list(range(p)):
        raise GraphFormatError("labeling file must label every vertex exactly once")
    return RadioLabeling(tuple(labels[v] for v in range(p)))


def format_labeling(f: RadioLabeling) -> str:
    return "".join(f"{v} {lab}\n" for v, lab in enumerate(f.labels))


def labels_in_order(f: RadioLabeling, order: Sequence[int]) -> list[int]:
    return [f.labels[v] for v in order]

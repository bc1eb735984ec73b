"""Graph input, validation, and Perron-Frobenius spectral data.

A graph here is a simple biorientable graph: undirected, no loops, no
multiple edges, encoded by a symmetric 0/1 adjacency matrix.  Everything
downstream (path weights, creation operators, the Coxeter bound on
essential-path length) is driven by the largest adjacency eigenvalue
``beta`` and its positive eigenvector ``mu``.
"""

from __future__ import annotations

import json
import logging
import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, GraphError

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9

#: Convergence target for the power iteration (see `perron_frobenius`).
_PF_RESIDUAL = 1e-13
_PF_MAX_ITER = 10**6


@dataclass(frozen=True, eq=False)
class Graph:
    """A simple biorientable graph.

    Vertices are addressed by index into `vertices`; `adjacency` is the
    symmetric 0/1 matrix.  Instances are immutable and compare by identity.
    """

    name: str
    vertices: tuple[str, ...]
    adjacency: np.ndarray

    def __post_init__(self):
        adj = np.asarray(self.adjacency, dtype=int)
        object.__setattr__(self, "adjacency", adj)
        nbrs = tuple(
            tuple(int(w) for w in np.flatnonzero(row)) for row in adj
        )
        object.__setattr__(self, "neighbors", nbrs)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Largest adjacency eigenvalue and its eigenvector, min-normalized to 1."""

    beta: float
    mu: np.ndarray


@dataclass(frozen=True)
class CoxeterInfo:
    """Coxeter number N (beta = 2 cos(pi/N)) and the induced maximum
    essential-path length N - 2.  Only exists for beta < 2."""

    coxeter_number: int
    max_essential_length: int


@dataclass(frozen=True)
class ValidationReport:
    passed: bool
    failures: tuple[str, ...]


def parse_graph(text: str) -> Graph:
    """Parse the JSON graph format and return a validated `Graph`.

    Expected shape::

        {"name": "A3", "vertices": ["0", "1", "2"], "edges": [[0, 1], [1, 2]]}

    Edges are unordered pairs of vertex indices; the adjacency matrix is
    derived symmetric.  Raises `GraphError` on malformed input or when the
    resulting graph fails `validate`.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise GraphError("top-level JSON value must be an object")
    try:
        vertices = list(doc["vertices"])
        edges = list(doc["edges"])
    except KeyError as exc:
        raise GraphError(f"missing required key {exc}") from exc
    name = str(doc.get("name", ""))
    if not vertices:
        raise GraphError("vertex list is empty")
    labels = [str(v) for v in vertices]
    if len(set(labels)) != len(labels):
        raise GraphError("duplicate vertex labels")
    n = len(labels)
    adjacency = np.zeros((n, n), dtype=int)
    for edge in edges:
        try:
            i, j = (int(v) for v in edge)
        except (TypeError, ValueError) as exc:
            raise GraphError(f"edge {edge!r} is not a pair of indices") from exc
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge {edge!r} references a vertex out of range")
        adjacency[i, j] = 1
        adjacency[j, i] = 1
    graph = Graph(name=name, vertices=tuple(labels), adjacency=adjacency)
    report = validate(graph)
    if not report.passed:
        raise GraphError("; ".join(report.failures))
    return graph


def validate(graph: Graph) -> ValidationReport:
    """Check the simple-biorientable-graph invariants.

    Passes iff the adjacency matrix is square of the right size, symmetric,
    zero on the diagonal, 0/1-valued, and the graph is connected with at
    least one edge.  Failures are reported, not raised.
    """
    failures = []
    adj = graph.adjacency
    n = graph.num_vertices
    if adj.shape != (n, n):
        failures.append(f"adjacency shape {adj.shape} does not match {n} vertices")
        return ValidationReport(False, tuple(failures))
    if not np.array_equal(adj, adj.T):
        failures.append("adjacency is not symmetric")
    if np.any(np.diag(adj) != 0):
        failures.append("adjacency has nonzero diagonal entries (loops)")
    if not np.all((adj == 0) | (adj == 1)):
        failures.append("adjacency entries are not all 0 or 1")
    if adj.sum() == 0:
        failures.append("graph has no edges (degenerate)")
    elif not _connected(adj):
        failures.append("graph is not connected")
    return ValidationReport(not failures, tuple(failures))


def _connected(adj: np.ndarray) -> bool:
    # breadth-first reachability from vertex 0
    n = adj.shape[0]
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in np.flatnonzero(adj[v]):
            if not seen[w]:
                seen[w] = True
                queue.append(int(w))
    return all(seen)


def perron_frobenius(graph: Graph) -> Spectrum:
    """Largest adjacency eigenvalue and positive eigenvector of `graph`.

    Power iteration with the deterministic all-ones start vector.  The
    iteration runs on the shifted matrix M + (max degree + 1)·I: bipartite
    graphs have -beta in their spectrum, so the unshifted iteration would
    oscillate instead of converging.  The eigenvalue is read off as the
    Rayleigh quotient of M itself; iteration stops once the residual
    ``max|M mu - beta mu|`` of the min-normalized eigenvector is below
    1e-13 (cap 10**6 sweeps).
    """
    m = graph.adjacency.astype(float)
    n = graph.num_vertices
    shift = float(m.sum(axis=1).max()) + 1.0
    x = np.ones(n)
    x /= np.linalg.norm(x)
    beta = float(x @ (m @ x))
    for _ in range(_PF_MAX_ITER):
        y = m @ x + shift * x
        y /= np.linalg.norm(y)
        x = y
        beta = float(x @ (m @ x))
        low = x.min()
        if low <= 0.0:
            continue
        mu = x / low
        if np.max(np.abs(m @ mu - beta * mu)) < _PF_RESIDUAL:
            return Spectrum(beta=beta, mu=mu)
    raise ConvergenceError(
        f"power iteration did not converge in {_PF_MAX_ITER} iterations"
    )


def coxeter_info(spectrum: Spectrum, tol: float = DEFAULT_TOL) -> CoxeterInfo | None:
    """Coxeter data for `spectrum`, or None when beta >= 2.

    For beta < 2 the candidate Coxeter number is N = round(pi/arccos(beta/2)),
    accepted only if beta matches 2 cos(pi/N) to 1e-9; a beta < 2 that fits
    no integer N means the graph is not ADE and None is returned with a
    logged diagnostic.
    """
    beta = spectrum.beta
    if beta >= 2.0 - tol:
        return None
    number = round(math.pi / math.acos(beta / 2.0))
    if number < 2 or abs(beta - 2.0 * math.cos(math.pi / number)) >= 1e-9:
        logger.warning(
            "beta=%.12f is below 2 but matches no integer Coxeter number", beta
        )
        return None
    return CoxeterInfo(coxeter_number=number, max_essential_length=number - 2)

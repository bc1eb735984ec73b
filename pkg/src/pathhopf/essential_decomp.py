"""Essential paths and the orthogonal decomposition of path space.

A path vector is essential when every annihilation operator kills it.  The
degree-n slice splits as the orthogonal direct sum, over l, of spans of
creation words of length l applied to essential vectors of length n - 2l;
`decompose` computes the canonical term list realizing that splitting and
`project_component` reads off the orthogonal projections.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CutoffError, SingularSystemError
from .path_space import (
    OperatorWord,
    PathSpace,
    PathVector,
    inner_product,
    zero_vector,
)

PIVOT_TOL = 1e-9


class EssentialBasis:
    """Orthonormal basis of the essential subspace at one length.

    Vectors are grouped by (source, range) block; annihilation preserves
    endpoints, so the essential subspace splits over blocks and every basis
    vector has well-defined endpoints.  `index` maps flat position to
    (block, offset); blocks are ordered lexicographically.
    """

    def __init__(self, length, vectors, endpoints, blocks):
        self.length = length
        self.vectors = tuple(vectors)
        self.endpoints = tuple(endpoints)
        self.blocks = dict(blocks)

    def __len__(self):
        return len(self.vectors)

    def expand(self, x: PathVector) -> dict[int, complex]:
        """Coefficients of `x` against the basis: index -> (xi_a, x)."""
        out = {}
        for a, xi in enumerate(self.vectors):
            c = inner_product(xi, x)
            if abs(c) > 1e-14:
                out[a] = c
        return out


def essential_basis(space: PathSpace, n: int) -> EssentialBasis:
    """Orthonormal basis of the length-n essential subspace (cached).

    Per (source, range) block, the kernel of the stacked annihilation
    operators is computed on the lexicographically ordered elementary
    basis, then orthonormalized by modified Gram-Schmidt in that seed
    order, which makes the basis deterministic.
    """
    cache = space.cache.setdefault("essential_basis", {})
    if n not in cache:
        cache[n] = _build_basis(space, n)
    return cache[n]


def _build_basis(space: PathSpace, n: int) -> EssentialBasis:
    vectors: list[PathVector] = []
    endpoints: list[tuple[int, int]] = []
    blocks: dict[tuple[int, int], tuple[int, ...]] = {}
    nv = space.graph.num_vertices
    for s in range(nv):
        for r in range(nv):
            block_vectors = _block_kernel(space, n, s, r)
            if not block_vectors:
                continue
            first = len(vectors)
            vectors.extend(block_vectors)
            endpoints.extend([(s, r)] * len(block_vectors))
            blocks[(s, r)] = tuple(range(first, len(vectors)))
    return EssentialBasis(n, vectors, endpoints, blocks)


def _block_kernel(space, n, source, target) -> list[PathVector]:
    paths = space.enumerate_paths(n, source=source, target=target)
    if not paths:
        return []
    if n < 2:
        # no annihilation operator acts; elementary paths are the basis
        return [PathVector.unit(p) for p in paths]
    col = {p: j for j, p in enumerate(paths)}
    targets = space.enumerate_paths(n - 2, source=source, target=target)
    row = {p: k for k, p in enumerate(targets)}
    rows_per_op = len(targets)
    a = np.zeros(((n - 1) * rows_per_op, len(paths)))
    for j, p in enumerate(paths):
        for i in range(n - 1):
            image = space.annihilate(i, PathVector.unit(p))
            for q, c in image.coeffs.items():
                a[i * rows_per_op + row[q], j] = c.real
    kernel = _nullspace_columns(a)
    ortho = _gram_schmidt(kernel)
    out = []
    for column in ortho:
        coeffs = {paths[j]: column[j] for j in range(len(paths))}
        out.append(PathVector(n, coeffs))
    return out


def _nullspace_columns(a: np.ndarray) -> list[np.ndarray]:
    """Kernel seed vectors from row reduction, one per free column, in
    lexicographic column order."""
    m = a.copy().astype(float)
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = r + int(np.argmax(np.abs(m[r:, c])))
        if abs(m[piv, c]) < PIVOT_TOL:
            continue
        m[[r, piv]] = m[[piv, r]]
        m[r] = m[r] / m[r, c]
        for k in range(rows):
            if k != r and m[k, c] != 0.0:
                m[k] -= m[k, c] * m[r]
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    seeds = []
    for c in free:
        v = np.zeros(cols)
        v[c] = 1.0
        for k, pc in enumerate(pivots):
            v[pc] = -m[k, c]
        seeds.append(v)
    return seeds


def _gram_schmidt(vectors: list[np.ndarray]) -> list[np.ndarray]:
    out: list[np.ndarray] = []
    for v in vectors:
        w = v.copy()
        for u in out:
            w -= (u @ w) * u
        norm = np.linalg.norm(w)
        if norm > PIVOT_TOL:
            out.append(w / norm)
    return out


def is_essential(space: PathSpace, x: PathVector, tol: float = 1e-9) -> bool:
    """True iff every applicable annihilation image of `x` has norm < tol."""
    return all(
        space.annihilate(i, x).norm() < tol for i in range(x.length - 1)
    )


# -- tridiagonal splitting system -------------------------------------------


def tridiagonal_matrix(beta: float, size: int) -> np.ndarray:
    """The size x size matrix with beta on the diagonal, 1 off it."""
    t = np.eye(size) * beta
    idx = np.arange(size - 1)
    t[idx, idx + 1] = 1.0
    t[idx + 1, idx] = 1.0
    return t


def tridiagonal_det(beta: float, size: int) -> float:
    """Closed-form determinant of `tridiagonal_matrix(beta, size)`.

    Equals beta^k (l+^{k+1} - l-^{k+1}) / (l+ - l-) with
    l± = (1 ± sqrt(1 - 4/beta^2)) / 2; expanding in powers of
    s^2 = 1 - 4/beta^2 removes the branch point, so the same polynomial
    evaluates every beta (at beta = 2 it degenerates to size + 1).
    """
    if size == 0:
        return 1.0
    s2 = 1.0 - 4.0 / (beta * beta)
    total = 0.0
    power = 1.0
    binom = size + 1  # C(size+1, 1)
    for m in range(size // 2 + 1):
        total += binom * power
        power *= s2
        binom = binom * (size - 2 * m) * (size - 2 * m - 1) // ((2 * m + 2) * (2 * m + 3))
    return (beta / 2.0) ** size * total


def tridiagonal_solve(beta: float, size: int) -> np.ndarray:
    """Solve T alpha = (1, 0, ..., 0) for the tridiagonal T above.

    The determinant from direct elimination is cross-checked against the
    closed form; a near-zero determinant (|det| < 1e-9) means the input
    path was inconsistent with the graph's maximum essential length.
    """
    if size < 1:
        raise ValueError("system size must be >= 1")
    t = tridiagonal_matrix(beta, size)
    det = float(np.linalg.det(t))
    closed = tridiagonal_det(beta, size)
    if abs(det - closed) > 1e-9 * max(1.0, abs(closed)):
        raise SingularSystemError(
            f"determinant mismatch for beta={beta}, size={size}: {det} vs {closed}"
        )
    if abs(det) < 1e-9:
        raise SingularSystemError(
            f"tridiagonal system is near-singular (det={det:.3e}) for "
            f"beta={beta}, size={size}"
        )
    rhs = np.zeros(size)
    rhs[0] = 1.0
    return np.linalg.solve(t, rhs)


# -- decomposition -----------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    """Canonical term list (word, essential vector); the input is the sum of
    apply_word(word, vector) over terms."""

    length: int
    terms: tuple[tuple[OperatorWord, PathVector], ...]

    def component(self, l: int) -> tuple[tuple[OperatorWord, PathVector], ...]:
        return tuple(t for t in self.terms if len(t[0]) == l)


def decompose(space: PathSpace, x: PathVector) -> Decomposition:
    """Split `x` into normal-ordered creation words applied to essentials.

    Recursive splitting: take the largest index i with c_i x != 0, write
    x = sum_k alpha_k c†_k (c_i x) + residual with alpha from
    `tridiagonal_solve` (so the residual is killed by c_i, ..., c_{n-2}),
    then recurse on c_i x and on the residual.  Words are normal-ordered via
    the exchange rule and merged; recompose returns the input.
    """
    if x.length > space.cutoff:
        raise CutoffError(
            f"path length {x.length} exceeds the cutoff {space.cutoff}"
        )
    acc: dict[OperatorWord, PathVector] = {}
    _decompose_into(space, x, acc)
    terms = [
        (w, v) for w, v in acc.items() if not v.is_zero()
    ]
    terms.sort(key=lambda t: (len(t[0]), t[0].indices))
    return Decomposition(length=x.length, terms=tuple(terms))


def _decompose_into(space, x, acc):
    if x.is_zero():
        return
    n = x.length
    i = None
    ci_x = None
    for j in reversed(range(n - 1)):
        img = space.annihilate(j, x)
        if not img.is_zero():
            i, ci_x = j, img
            break
    if i is None:
        word = OperatorWord()
        acc[word] = acc.get(word, zero_vector(n)) + x
        return
    alpha = tridiagonal_solve(space.beta, n - 1 - i)
    sub: dict[OperatorWord, PathVector] = {}
    _decompose_into(space, ci_x, sub)
    residual = x
    for offset, a in enumerate(alpha):
        k = i + offset
        residual = residual - float(a) * space.create(k, ci_x)
        for w, v in sub.items():
            wk = w.then(k)
            acc[wk] = acc.get(wk, zero_vector(n)) + float(a) * v
    _decompose_into(space, residual, acc)


def recompose(space: PathSpace, d: Decomposition) -> PathVector:
    """Sum apply_word(word, vector) over the terms of `d`."""
    out = zero_vector(d.length)
    for word, xi in d.terms:
        out = out + space.apply_word(word, xi)
    return out


def project_component(space: PathSpace, x: PathVector, l: int) -> PathVector:
    """Orthogonal projection of `x` onto the span of length-l creation words
    applied to essentials; l = 0 projects onto essential paths."""
    d = decompose(space, x)
    out = zero_vector(x.length)
    for word, xi in d.component(l):
        out = out + space.apply_word(word, xi)
    return out

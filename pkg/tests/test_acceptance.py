"""Acceptance gate: the full worked-example and property criteria.

Each criterion is one test at its stated tolerance; the suite summary
prints a PASS/FAIL line per criterion (see conftest).
"""

import itertools
import math

import numpy as np
import pytest

import frozen_cases
from pathhopf import (
    PathSpace,
    counit,
    decompose,
    essential_basis,
    load_fixture,
    multiply,
    projector_P,
    recompose,
    star_alg,
    tridiagonal_det,
    tridiagonal_matrix,
    verify_axioms,
)
from pathhopf.weak_hopf import _random_element
from helpers import (
    assert_decomposition,
    assert_element_coords,
    operator_residual,
    sup_diff,
    unit,
)

ROOT2 = math.sqrt(2)
GOLDEN = (1 + math.sqrt(5)) / 2


@pytest.fixture(scope="module")
def spaces():
    return {
        "a3": PathSpace(load_fixture("a3")),
        "tri": PathSpace(load_fixture("a_aff_2")),
        "d4": PathSpace(load_fixture("d4")),
    }


def test_criterion_1_spectra(spaces):
    """Perron-Frobenius data of both fixture graphs, residual < 1e-12."""
    for name, beta, mu in (
        ("a3", ROOT2, (1.0, ROOT2, 1.0)),
        ("tri", 2.0, (1.0, 1.0, 1.0)),
    ):
        space = spaces[name]
        s = space.spectrum
        assert abs(s.beta - beta) < 1e-12
        assert max(abs(a - b) for a, b in zip(s.mu, mu)) < 1e-12
        residual = np.max(
            np.abs(space.graph.adjacency @ s.mu - s.beta * s.mu)
        )
        assert residual < 1e-12
        assert abs(min(s.mu) - 1.0) < 1e-15


def test_criterion_2_essential_counts(spaces):
    """Essential dimensions: chain (3,4,3|0), triangle (3,6,9) with an
    independent nullspace oracle for the length-2 triangle count."""
    a3, tri = spaces["a3"], spaces["tri"]
    assert [len(essential_basis(a3, n)) for n in range(4)] == [3, 4, 3, 0]
    assert sum(len(essential_basis(a3, n)) for n in range(3)) == 10
    assert [len(essential_basis(tri, n)) for n in range(3)] == [3, 6, 9]
    # oracle: stack the lone annihilation operator on degree 2 as a dense
    # matrix straight from its definition and rank it
    adjacency = tri.graph.adjacency
    paths = sorted(
        t
        for t in itertools.product(range(3), repeat=3)
        if adjacency[t[0], t[1]] and adjacency[t[1], t[2]]
    )
    mat = np.zeros((3, len(paths)))
    for j, p in enumerate(paths):
        if p[0] == p[2]:
            mat[p[0], j] = math.sqrt(tri.mu[p[1]] / tri.mu[p[0]])
    assert len(paths) - np.linalg.matrix_rank(mat, tol=1e-9) == 9


def test_criterion_3_decomposition_regressions(spaces):
    """Every worked decomposition display, plus exact round trips for all
    elementary paths of length <= 6 on all three graphs."""
    a3, tri = spaces["a3"], spaces["tri"]
    for build, expected in frozen_cases.CHAIN_DECOMPOSITIONS.values():
        assert_decomposition(a3, build(), expected, tol=1e-9)
    for build, expected in frozen_cases.TRIANGLE_DECOMPOSITIONS.values():
        assert_decomposition(tri, build(), expected, tol=1e-9)
    for space in spaces.values():
        for n in range(7):
            for p in space.enumerate_paths(n):
                x = unit(p)
                back = recompose(space, decompose(space, x))
                assert sup_diff(back, x) < 1e-9, (space.graph.name, p)


def test_criterion_4_projection_regressions(spaces):
    """The projector on (01210) (x) (21012) for both graphs, compared in
    elementary coordinates."""
    left, right = unit((0, 1, 2, 1, 0)), unit((2, 1, 0, 1, 2))
    assert_element_coords(
        projector_P(spaces["a3"], left, right),
        frozen_cases.CHAIN_PROJECTION_EXPECTED,
        tol=1e-9,
    )
    assert_element_coords(
        projector_P(spaces["tri"], left, right),
        frozen_cases.TRIANGLE_PROJECTION_EXPECTED,
        tol=1e-9,
    )


def test_criterion_5_product_regressions(spaces):
    """All five chain products and all five triangle products."""
    for space, cases in (
        (spaces["a3"], frozen_cases.CHAIN_PRODUCTS),
        (spaces["tri"], frozen_cases.TRIANGLE_PRODUCTS),
    ):
        for label, (left_build, right_build, expected) in cases.items():
            x = projector_P(space, *left_build())
            y = projector_P(space, *right_build())
            assert_element_coords(multiply(x, y), expected, tol=1e-9)


def test_criterion_6_operator_property_suite(spaces):
    """Ladder-operator identities as zero operators on full bases, n <= 4."""
    for space in spaces.values():
        beta = space.beta
        for n in range(5):
            # contraction: c_i c_i† = beta
            for i in range(n + 1):
                res = operator_residual(
                    space,
                    lambda x, i=i: space.annihilate(i, space.create(i, x)),
                    lambda x: x * beta,
                    n,
                )
                assert res < 1e-10
            # exchange: c_i† c_j† = c_{j+2}† c_i† for j >= i
            for i in range(n + 3):
                for j in range(i, n + 3):
                    res = operator_residual(
                        space,
                        lambda x, i=i, j=j: space.create(i, space.create(j, x)),
                        lambda x, i=i, j=j: space.create(j + 2, space.create(i, x)),
                        n,
                    )
                    assert res < 1e-10
            # mixed relations on degree n for i, j <= n - 2
            for i in range(max(0, n - 1)):
                for j in range(max(0, n - 1)):

                    def rhs(x, i=i, j=j):
                        scalar = beta * (i == j) + (i == j + 1) + (i == j - 1)
                        out = x * scalar
                        if j - i >= 2:
                            out = out + space.create(j - 2, space.annihilate(i, x))
                        if i - j >= 2:
                            out = out + space.create(j, space.annihilate(i - 2, x))
                        return out

                    res = operator_residual(
                        space,
                        lambda x, i=i, j=j: space.annihilate(i, space.create(j, x)),
                        rhs,
                        n,
                    )
                    assert res < 1e-10
            # Temperley-Lieb-Jones relations
            for i in range(max(0, n - 1)):
                res = operator_residual(
                    space,
                    lambda x, i=i: space.tlj(i, space.tlj(i, x)),
                    lambda x, i=i: space.tlj(i, x),
                    n,
                )
                assert res < 1e-10
                for j in range(max(0, n - 1)):
                    if abs(i - j) > 1:
                        res = operator_residual(
                            space,
                            lambda x, i=i, j=j: space.tlj(i, space.tlj(j, x)),
                            lambda x, i=i, j=j: space.tlj(j, space.tlj(i, x)),
                            n,
                        )
                        assert res < 1e-10
                    if abs(i - j) == 1:
                        res = operator_residual(
                            space,
                            lambda x, i=i, j=j: space.tlj(i, space.tlj(j, space.tlj(i, x))),
                            lambda x, i=i: space.tlj(i, x) * (1 / beta**2),
                            n,
                        )
                        assert res < 1e-10


def test_criterion_7_axiom_suite(spaces):
    """All weak-bialgebra and antipode axioms below 1e-8 on both graphs;
    the flattened endpoint factor breaks the cancellation axiom."""
    for name, max_length in (("a3", 2), ("tri", 2)):
        report = verify_axioms(spaces[name], max_length, samples=100, seed=0)
        for r in report.results:
            assert r.residual < 1e-8, (name, r.name, r.residual)
    control = verify_axioms(
        spaces["a3"], 2, samples=20, seed=0, weight_fn=lambda *a: 1.0
    )
    assert control.residual("antipode cancellation") > 0.1


def test_criterion_8_determinant_law():
    """Tridiagonal determinants match the closed form for sizes 1..8."""
    for beta in (1.0, ROOT2, GOLDEN, 2.0, 2.3):
        for size in range(1, 9):
            direct = np.linalg.det(tridiagonal_matrix(beta, size))
            assert abs(tridiagonal_det(beta, size) - direct) < 1e-9
    for size in range(1, 9):
        assert abs(tridiagonal_det(2.0, size) - (size + 1)) < 1e-9


def test_criterion_9_counit_positivity(spaces):
    """eps(a a*) >= -1e-9 over 100 seeded random elements per graph."""
    for name in ("a3", "tri"):
        space = spaces[name]
        pool = [
            (n, a, b)
            for n in range(3)
            for a in range(len(essential_basis(space, n)))
            for b in range(len(essential_basis(space, n)))
        ]
        rng = np.random.default_rng(2024)
        for _ in range(100):
            a = _random_element(space, pool, rng)
            value = counit(multiply(a, star_alg(a)))
            assert value.real >= -1e-9
            assert abs(value.imag) < 1e-9

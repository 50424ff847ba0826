"""Exact integer linear algebra for homology actions."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors


def as_int_matrix(M) -> np.ndarray:
    A = np.array(M, dtype=object)
    if A.ndim != 2:
        raise ValueError("expected a 2-dimensional matrix")
    return np.vectorize(int, otypes=[object])(A) if A.size else A


def identity(n) -> np.ndarray:
    I = np.zeros((n, n), dtype=object)
    for k in range(n):
        I[k, k] = 1
    return I


def det(M) -> int:
    A = as_int_matrix(M)
    return int(Matrix(A.tolist()).det())


def hermite_smith(M) -> dict:
    """Row Hermite form H = U M with U unimodular, plus the Smith elementary divisors."""
    A = as_int_matrix(M).copy()
    rows, cols = A.shape
    U = identity(rows)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        # euclid down the column until one nonzero entry remains at row r
        while True:
            nz = [k for k in range(r, rows) if A[k, c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda k: abs(A[k, c]))
            if piv != r:
                A[[r, piv]] = A[[piv, r]]
                U[[r, piv]] = U[[piv, r]]
            done = True
            for k in range(r + 1, rows):
                if A[k, c] != 0:
                    q = A[k, c] // A[r, c]
                    A[k] = A[k] - q * A[r]
                    U[k] = U[k] - q * U[r]
                    if A[k, c] != 0:
                        done = False
            if done:
                break
        if A[r, c] == 0:
            continue
        if A[r, c] < 0:
            A[r] = -A[r]
            U[r] = -U[r]
        for k in range(r):
            q = A[k, c] // A[r, c]
            if q:
                A[k] = A[k] - q * A[r]
                U[k] = U[k] - q * U[r]
        r += 1
    smith = [int(x) for x in invariant_factors(Matrix(as_int_matrix(M).tolist()), domain=ZZ)] if A.size else []
    return {"H": A, "U": U, "smith_diagonal": smith}


def is_row_hermite(H) -> bool:
    H = as_int_matrix(H)
    last = -1
    for row in H:
        nz = [j for j, x in enumerate(row) if x != 0]
        if not nz:
            last = H.shape[1]
            continue
        j = nz[0]
        if j <= last or row[j] < 0:
            return False
        last = j
    return True


@dataclass(frozen=True)
class Covector:
    coefficients: tuple
    basis_label: str = "standard"

    @property
    def primitive(self):
        g = 0
        for x in self.coefficients:
            g = gcd(g, int(x))
        return g == 1

    def __call__(self, v):
        return sum(int(a) * int(b) for a, b in zip(self.coefficients, v))


def left_kernel(A) -> list:
    """Z-basis of {x : x A = 0}; an integer kernel is automatically saturated."""
    A = as_int_matrix(A)
    hs = hermite_smith(A)
    H, U = hs["H"], hs["U"]
    basis = [U[k] for k in range(H.shape[0]) if all(x == 0 for x in H[k])]
    if not basis:
        return []
    # canonical representative: Hermite form of the kernel basis itself
    K = hermite_smith(np.array(basis, dtype=object))["H"]
    return [tuple(int(x) for x in row) for row in K if any(x != 0 for x in row)]


def fixed_primitive_cohomology(M, basis_label="standard") -> list:
    A = as_int_matrix(M)
    if A.shape[0] != A.shape[1]:
        raise ValueError("fixed covectors need a square matrix")
    return [Covector(v, basis_label) for v in left_kernel(A - identity(A.shape[0]))]


@dataclass(frozen=True)
class SymplecticSurfaceBasis:
    genus: int
    labels: tuple = field(default=())

    def __post_init__(self):
        if not self.labels:
            labels = []
            for k in range(1, self.genus + 1):
                labels += [f"alpha{k}", f"beta{k}"]
            object.__setattr__(self, "labels", tuple(labels))

    @property
    def J(self) -> np.ndarray:
        n = 2 * self.genus
        J = np.zeros((n, n), dtype=object)
        for k in range(self.genus):
            J[2 * k, 2 * k + 1] = 1
            J[2 * k + 1, 2 * k] = -1
        return J

    def pairing(self, x, y) -> int:
        return int(np.array(x, dtype=object) @ self.J @ np.array(y, dtype=object))


# Handedness of the twist relative to the transvection x -> x + <x, c> c.
# -1 makes the genus-2 example come out as printed.
TWIST_HANDEDNESS = -1


def transvection(gamma, basis: SymplecticSurfaceBasis, sign=1) -> np.ndarray:
    g = np.array(gamma, dtype=object).reshape(-1)
    if g.shape[0] != 2 * basis.genus:
        raise ValueError(f"class {tuple(gamma)} has wrong length for genus {basis.genus}")
    Jg = basis.J @ g
    # x -> x + sign <x, g> g with <x, g> = x^T J g
    return identity(len(g)) + sign * np.outer(g, Jg)


def twist_action_matrix(word, curve_classes, basis: SymplecticSurfaceBasis,
                        handedness=TWIST_HANDEDNESS) -> np.ndarray:
    """Product of twists in written order, so the rightmost twist acts first."""
    M = identity(2 * basis.genus)
    for label, sign in word:
        if label not in curve_classes:
            raise KeyError(f"no homology class for curve {label!r}")
        M = M @ transvection(curve_classes[label], basis, handedness * sign)
    return M


def is_symplectic(M, basis: SymplecticSurfaceBasis) -> bool:
    A = as_int_matrix(M)
    return bool(np.array_equal(A.T @ basis.J @ A, basis.J))


GENUS2_PRINTED = [[2, -1, 0, 0], [-1, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]]
GENUS2_WORD = [("a1", 1), ("a2", 1), ("a3", 1), ("b1", -1), ("b2", -1)]

# (alpha, beta, gamma) -> images as columns
WHITEHEAD_ACTION = [[1, 0, 0], [-1, 1, 0], [-1, 1, 1]]
TORUS_EVEN_ACTION = [[1, 0, 0], [1, 1, 0], [1, 0, 1]]


def permutation_matrix(images) -> np.ndarray:
    n = len(images)
    P = np.zeros((n, n), dtype=object)
    for k, im in enumerate(images):
        P[im - 1, k] = 1
    return P

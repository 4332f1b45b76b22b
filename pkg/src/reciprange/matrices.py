"""Reciprocal tridiagonal matrices and their xi-parameters.

A reciprocal matrix has zero main diagonal and paired off-diagonal entries with
a_{j,j+1} * a_{j+1,j} = 1.  The boundary generating curve of such a matrix
depends on the entries only through the nonnegative parameters

    xi_j = (|a_{j,j+1}| - |a_{j+1,j}|)^2 / 4,

so most of the package works with xi directly; ``matrix_from_xi`` provides the
canonical real-positive representative.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError

RECIPROCAL_TOL = 1e-14


@dataclass(frozen=True)
class XiParameters:
    """The vector (xi_1, ..., xi_{n-1}) of nonnegative off-diagonal asymmetries."""

    xi: tuple

    def __post_init__(self):
        if any(x < 0 for x in self.xi):
            bad = min(range(len(self.xi)), key=lambda i: self.xi[i])
            raise InvalidInputError(f"xi[{bad}] = {self.xi[bad]} is negative")

    @property
    def n(self):
        return len(self.xi) + 1

    def a_params(self):
        """A_j = (|a_{j,j+1}|^2 + |a_{j+1,j}|^2)/2 = 2 xi_j + 1."""
        return tuple(2 * x + 1 for x in self.xi)

    def reversed(self):
        return XiParameters(tuple(reversed(self.xi)))

    def __iter__(self):
        return iter(self.xi)

    def __len__(self):
        return len(self.xi)

    def __getitem__(self, i):
        return self.xi[i]


def as_xi(xi) -> XiParameters:
    if isinstance(xi, XiParameters):
        return xi
    if isinstance(xi, ReciprocalMatrix):
        return xi.xi()
    return XiParameters(tuple(float(x) for x in xi))


@dataclass(frozen=True)
class ReciprocalMatrix:
    """Tridiagonal matrix with zero diagonal and reciprocal off-diagonal pairs."""

    superdiag: tuple

    @property
    def n(self):
        return len(self.superdiag) + 1

    @property
    def subdiag(self):
        return tuple(1 / a for a in self.superdiag)

    def dense(self) -> np.ndarray:
        n = self.n
        A = np.zeros((n, n), dtype=complex)
        for j, a in enumerate(self.superdiag):
            A[j, j + 1] = a
            A[j + 1, j] = 1 / a
        return A

    def xi(self) -> XiParameters:
        out = []
        for a in self.superdiag:
            m = abs(a)
            out.append((m - 1 / m) ** 2 / 4)
        return XiParameters(tuple(out))

    def frobenius_norm_sq(self):
        return sum(abs(a) ** 2 + 1 / abs(a) ** 2 for a in self.superdiag)


def build_from_superdiagonal(entries) -> ReciprocalMatrix:
    """Construct from the superdiagonal; the subdiagonal is the entrywise reciprocal."""
    entries = tuple(complex(e) for e in entries)
    if len(entries) < 1:
        raise InvalidInputError("need at least one superdiagonal entry")
    for i, e in enumerate(entries):
        if e == 0:
            raise InvalidInputError(f"superdiagonal entry {i} is zero")
    return ReciprocalMatrix(entries)


def matrix_from_xi(xi) -> ReciprocalMatrix:
    """Canonical representative with real positive entries |a| = sqrt(xi) + sqrt(xi+1).

    This inverts xi exactly: (|a| - 1/|a|)^2/4 = xi since 1/|a| = sqrt(xi+1) - sqrt(xi).
    """
    xi = as_xi(xi)
    entries = tuple(math.sqrt(x) + math.sqrt(x + 1) for x in xi)
    return ReciprocalMatrix(entries)


def real_part_at(matrix: ReciprocalMatrix, theta: float) -> np.ndarray:
    """The Hermitian matrix Re(e^{i theta} A) = (e^{i theta} A + e^{-i theta} A*)/2."""
    A = matrix.dense()
    B = cmath.exp(1j * theta) * A
    return (B + B.conj().T) / 2


def imag_part(matrix: ReciprocalMatrix) -> np.ndarray:
    """Im A = (A - A*)/(2i)."""
    A = matrix.dense()
    return (A - A.conj().T) / 2j


def flip(matrix: ReciprocalMatrix) -> ReciprocalMatrix:
    """Reverse row/column order; unitary similarity sending xi_j to xi_{n-j}."""
    return ReciprocalMatrix(tuple(1 / a for a in reversed(matrix.superdiag)))


@dataclass(frozen=True)
class SpectrumDescriptor:
    """Eigenvalues 2 cos(j pi/(n+1)), j = 1..n, in decreasing order."""

    eigenvalues: tuple

    @property
    def n(self):
        return len(self.eigenvalues)

    def positive(self):
        return tuple(e for e in self.eigenvalues if e > 1e-15)


def exact_spectrum(n: int) -> SpectrumDescriptor:
    """Every reciprocal matrix of size n is similar to the Toeplitz tridiagonal
    with unit off-diagonals, so its spectrum is {2 cos(j pi/(n+1))}."""
    if n < 1:
        raise InvalidInputError(f"dimension must be positive, got {n}")
    return SpectrumDescriptor(tuple(2 * math.cos(j * math.pi / (n + 1)) for j in range(1, n + 1)))


def matrix_to_json_dict(matrix: ReciprocalMatrix) -> dict:
    return {
        "n": matrix.n,
        "superdiag": [[a.real, a.imag] for a in matrix.superdiag],
    }


def matrix_from_json_dict(obj) -> ReciprocalMatrix:
    """Accept {"n", "superdiag": [[re, im], ...]} or {"xi": [...]}; the forms are exclusive."""
    if not isinstance(obj, dict):
        raise InvalidInputError("matrix JSON must be an object")
    has_sd = "superdiag" in obj
    has_xi = "xi" in obj
    if has_sd == has_xi:
        raise InvalidInputError('matrix JSON needs exactly one of "superdiag" or "xi"')
    if has_xi:
        return matrix_from_xi([float(x) for x in obj["xi"]])
    entries = [complex(float(re), float(im)) for re, im in obj["superdiag"]]
    if "n" in obj and int(obj["n"]) != len(entries) + 1:
        raise InvalidInputError(f'"n"={obj["n"]} inconsistent with {len(entries)} superdiagonal entries')
    return build_from_superdiagonal(entries)

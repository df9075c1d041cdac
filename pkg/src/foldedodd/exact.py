"""Exact integer linear algebra: characteristic polynomials, ranks, integer spectra.

Everything here uses Python ints, never floats. Ranks come from
fraction-free (Bareiss) elimination, so every intermediate entry is a minor
of the input and every division is exact.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")

    @classmethod
    def of(cls, data) -> "IntMatrix":
        if isinstance(data, IntMatrix):
            return data
        if isinstance(data, np.ndarray):
            data = data.tolist()
        return cls(tuple(tuple(int(x) for x in row) for row in data))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def exchange(cls, n: int) -> "IntMatrix":
        """Ones on the anti-diagonal."""
        return cls(tuple(tuple(int(i + j == n - 1) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    @property
    def is_square(self) -> bool:
        r, c = self.shape
        return r == c

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows))
        return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows))

    def shifted(self, lam: int) -> "IntMatrix":
        """self - lam * I."""
        return IntMatrix(tuple(tuple(x - lam * (i == j) for j, x in enumerate(r)) for i, r in enumerate(self.rows)))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def is_symmetric(self) -> bool:
        return self.rows == tuple(zip(*self.rows))


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial, coefficients in ascending degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c) or (0,))

    @property
    def degree(self) -> int:
        return -1 if self.coeffs == (0,) else len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divide_linear(self, root: int) -> tuple["Polynomial", int]:
        """Synthetic division by (x - root): quotient and remainder."""
        out = []
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * root + c
            out.append(acc)
        rem = out.pop()
        return Polynomial(tuple(reversed(out)) or (0,)), rem

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self):
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else "+"
            else:
                coef = f"{'-' if c < 0 else '+'}{abs(c)}"
            terms.append(f"{coef}{mono}")
        s = " ".join(terms) or "0"
        return s[1:] if s.startswith("+") else s


@dataclass(frozen=True)
class Spectrum:
    """Integer eigenvalues with multiplicities, plus the unaccounted dimension."""

    pairs: tuple[tuple[int, int], ...]
    residual: int = 0

    def __post_init__(self):
        evs = [ev for ev, _ in self.pairs]
        if evs != sorted(set(evs)):
            raise ValueError("eigenvalues must be strictly increasing")
        if any(m <= 0 for _, m in self.pairs) or self.residual < 0:
            raise ValueError("multiplicities must be positive")

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.pairs) + self.residual

    @property
    def eigenvalues(self) -> tuple[int, ...]:
        return tuple(ev for ev, _ in self.pairs)

    @property
    def is_integral(self) -> bool:
        return self.residual == 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def to_json(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs], "residual": self.residual}


def char_poly(m) -> Polynomial:
    """det(x I - m) by Berkowitz's division-free algorithm."""
    m = IntMatrix.of(m)
    if not m.is_square:
        raise ValueError(f"characteristic polynomial needs a square matrix, got {m.shape}")
    a = m.rows
    n = len(a)
    # descending coefficients of the leading r x r principal minor's char poly
    p = [1]
    for r in range(n):
        row = a[r][:r]
        col = [a[i][r] for i in range(r)]
        t = [1, -a[r][r]]
        v = col
        for _ in range(r):
            t.append(-sum(x * y for x, y in zip(row, v)))
            v = [sum(a[i][j] * v[j] for j in range(r)) for i in range(r)]
        # Toeplitz (r+2) x (r+1) lower-triangular product
        p = [sum(t[i - j] * p[j] for j in range(min(i, r) + 1)) for i in range(r + 2)]
    return Polynomial(tuple(reversed(p)))


def integer_roots(p: Polynomial, bound: int) -> Spectrum:
    """Integer roots in [-bound, bound] with multiplicity.

    The residual is the degree of what is left after dividing them out.
    """
    if p.degree < 0:
        raise ValueError("the zero polynomial has every integer as a root")
    pairs = []
    for t in range(-bound, bound + 1):
        mult = 0
        while p.degree > 0 and p(t) == 0:
            p, rem = p.divide_linear(t)
            assert rem == 0
            mult += 1
        if mult:
            pairs.append((t, mult))
    return Spectrum(tuple(pairs), max(p.degree, 0))


def _as_object_array(m) -> np.ndarray:
    if isinstance(m, IntMatrix):
        rows = m.tolist()
    elif isinstance(m, np.ndarray):
        rows = m.tolist()
    else:
        rows = [list(r) for r in m]
    a = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, r in enumerate(rows):
        a[i, :] = [int(x) for x in r]
    return a


def fraction_free_rank(m) -> int:
    """Rank over the rationals by Bareiss elimination with exact integer division.

    Pivot is the first nonzero entry in the column, scanning rows downwards.
    Columns without a pivot are skipped, which keeps every division exact.
    """
    a = _as_object_array(m)
    rows, cols = a.shape
    rank = 0
    prev = 1
    for col in range(cols):
        if rank == rows:
            break
        nz = np.flatnonzero(a[rank:, col] != 0)
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        p = a[rank, col]
        if rank + 1 < rows and col + 1 < cols:
            below = a[rank + 1:, col]
            a[rank + 1:, col + 1:] = (a[rank + 1:, col + 1:] * p - np.outer(below, a[rank, col + 1:])) // prev
            a[rank + 1:, col] = 0
        prev = p
        rank += 1
    return rank


def bareiss_det(m) -> int:
    """Determinant by fraction-free elimination. Independent of ``char_poly``."""
    a = _as_object_array(m)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n):
        nz = np.flatnonzero(a[k:, k] != 0)
        if nz.size == 0:
            return 0
        piv = k + int(nz[0])
        if piv != k:
            a[[k, piv]] = a[[piv, k]]
            sign = -sign
        p = a[k, k]
        if k + 1 < n:
            a[k + 1:, k + 1:] = (a[k + 1:, k + 1:] * p - np.outer(a[k + 1:, k], a[k, k + 1:])) // prev
        prev = p
    return sign * int(a[n - 1, n - 1]) if n else 1


def nullity_at(m, lam: int) -> int:
    """dim ker(m - lam I) over the rationals."""
    m = IntMatrix.of(m)
    if not m.is_square:
        raise ValueError("nullity_at needs a square matrix")
    return m.shape[0] - fraction_free_rank(m.shifted(lam))


def _nullity_job(args):
    adj, lam = args
    return lam, nullity_at(adj, lam)


def integral_spectrum(g, jobs: int = 1) -> Spectrum:
    """Integer eigenvalues of a graph's adjacency matrix with exact multiplicities.

    Candidates are the integers in [-max degree, max degree]; anything not
    found there is reported as ``residual``. Residual 0 certifies integrality.
    """
    adj = IntMatrix.of(g.adjacency_matrix())
    n = g.n
    bound = g.max_degree()
    candidates = list(range(-bound, bound + 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            found = dict(pool.map(_nullity_job, [(adj, lam) for lam in candidates]))
    else:
        found = {}
        total = 0
        for lam in candidates:
            if total == n:
                break
            found[lam] = nullity_at(adj, lam)
            total += found[lam]
    pairs = tuple((lam, mult) for lam, mult in sorted(found.items()) if mult)
    return Spectrum(pairs, n - sum(mult for _, mult in pairs))


def is_integral(g) -> bool:
    return integral_spectrum(g).is_integral

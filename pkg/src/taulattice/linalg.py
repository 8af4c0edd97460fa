"""Exact matrix arithmetic over prime fields and the rationals.

Matrices are numpy arrays.  Over GF(p) they hold ``int64`` entries reduced
into ``[0, p)``; over Q they are ``object`` arrays of :class:`fractions.Fraction`.
Nothing in this module touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np
import sympy


def is_prime(p: int) -> bool:
    return p >= 2 and bool(sympy.isprime(p))


@dataclass(frozen=True)
class Field:
    """A prime field GF(p), or the rationals when ``p == 0``."""

    p: int = 2

    def __post_init__(self):
        if self.p != 0 and not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def __str__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    # -- scalars ---------------------------------------------------------
    def scalar(self, x):
        if self.p == 0:
            return Fraction(x)
        return int(x) % self.p

    def inv(self, x):
        if self.p == 0:
            return 1 / Fraction(x)
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, self.p - 2, self.p)

    def elements(self):
        """Iterate over the field's elements (finite fields only)."""
        if self.p == 0:
            raise ValueError("QQ is infinite")
        return range(self.p)

    # -- constructors ----------------------------------------------------
    def zeros(self, rows: int, cols: int) -> np.ndarray:
        if self.p == 0:
            out = np.empty((rows, cols), dtype=object)
            out.fill(Fraction(0))
            return out
        return np.zeros((rows, cols), dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = self.scalar(1)
        return out

    def array(self, data) -> np.ndarray:
        a = np.array(data, dtype=object)
        if a.ndim == 1:
            a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
        return self.reduce(a)

    def reduce(self, a: np.ndarray) -> np.ndarray:
        if self.p == 0:
            out = np.empty(a.shape, dtype=object)
            flat = out.reshape(-1)
            for i, x in enumerate(np.asarray(a, dtype=object).reshape(-1)):
                flat[i] = Fraction(x)
            return out
        return np.mod(np.asarray(a, dtype=object).astype(np.int64), self.p)

    # -- arithmetic ------------------------------------------------------
    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] != b.shape[0]:
            raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
        if self.p == 0:
            if a.size == 0 or b.size == 0:
                return self.zeros(a.shape[0], b.shape[1])
            return a.dot(b)
        return (a @ b) % self.p

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def scale(self, c, a):
        c = self.scalar(c)
        return a * c if self.p == 0 else (a * c) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def power(self, a: np.ndarray, k: int) -> np.ndarray:
        result = self.eye(a.shape[0])
        base = a
        while k:
            if k & 1:
                result = self.matmul(result, base)
            base = self.matmul(base, base)
            k >>= 1
        return result

    # -- elimination -----------------------------------------------------
    def rref(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and pivot columns."""
        m = a.copy()
        rows, cols = m.shape
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = [i for i in range(r, rows) if m[i, c] != 0]
            if not nz:
                continue
            i = nz[0]
            if i != r:
                m[[r, i]] = m[[i, r]]
            m[r] = self.scale(self.inv(m[r, c]), m[r])
            for i in range(rows):
                if i != r and m[i, c] != 0:
                    m[i] = self.sub(m[i], self.scale(m[i, c], m[r]))
            pivots.append(c)
            r += 1
        return m, pivots

    def rank(self, a: np.ndarray) -> int:
        if a.size == 0:
            return 0
        return len(self.rref(a)[1])

    def nullspace(self, a: np.ndarray) -> np.ndarray:
        """Columns form a basis of ``{x : a x = 0}``."""
        rows, cols = a.shape
        if rows == 0:
            return self.eye(cols)
        r, pivots = self.rref(a)
        free = [c for c in range(cols) if c not in pivots]
        out = self.zeros(cols, len(free))
        for k, f in enumerate(free):
            out[f, k] = self.scalar(1)
            for i, pc in enumerate(pivots):
                out[pc, k] = self.neg(r[i, f])
        return out

    def column_basis(self, a: np.ndarray) -> np.ndarray:
        """A maximal independent subset of the columns of ``a``."""
        if a.shape[1] == 0:
            return a
        _, pivots = self.rref(a)
        return a[:, pivots]

    def complement(self, basis: np.ndarray, dim: int) -> np.ndarray:
        """Standard basis vectors extending the columns of ``basis`` to a basis."""
        chosen = []
        current = basis
        eye = self.eye(dim)
        for i in range(dim):
            trial = np.concatenate([current, eye[:, i : i + 1]], axis=1)
            if self.rank(trial) == trial.shape[1]:
                current = trial
                chosen.append(i)
        return eye[:, chosen] if chosen else self.zeros(dim, 0)

    def solve(self, a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
        """Some ``x`` with ``a x = b``, or None if the system is inconsistent."""
        rows, cols = a.shape
        k = b.shape[1]
        aug = np.concatenate([a, b], axis=1)
        r, pivots = self.rref(aug)
        if any(pc >= cols for pc in pivots):
            return None
        x = self.zeros(cols, k)
        for i, pc in enumerate(pivots):
            x[pc] = r[i, cols:]
        return x

    def inverse(self, a: np.ndarray) -> np.ndarray:
        n = a.shape[0]
        x = self.solve(a, self.eye(n))
        if x is None or a.shape[1] != n or self.rank(a) != n:
            raise ZeroDivisionError("matrix is singular")
        return x

    def is_invertible(self, a: np.ndarray) -> bool:
        return a.shape[0] == a.shape[1] and self.rank(a) == a.shape[0]

    def is_nilpotent(self, a: np.ndarray) -> bool:
        n = a.shape[0]
        return n == 0 or not self.power(a, n).any()

    # -- polynomials -----------------------------------------------------
    def charpoly_factors(self, a: np.ndarray) -> list[tuple[list, int]]:
        """Irreducible factors of the characteristic polynomial.

        Each factor is returned as a coefficient list (highest degree first,
        monic) with its multiplicity.
        """
        n = a.shape[0]
        if n == 0:
            return []
        t = sympy.Symbol("t")
        mat = sympy.Matrix(n, n, lambda i, j: sympy.Rational(a[i, j].numerator, a[i, j].denominator)
                           if self.p == 0 else int(a[i, j]))
        cp = mat.charpoly(t).as_expr()
        if self.p == 0:
            _, factors = sympy.factor_list(cp, t)
            poly_of = lambda f: sympy.Poly(f, t)
        else:
            _, factors = sympy.Poly(cp, t, modulus=self.p).factor_list()
            poly_of = lambda f: f
        out = []
        for f, mult in factors:
            poly = poly_of(f)
            coeffs = [self.scalar(_to_fraction(c, self.p)) for c in poly.all_coeffs()]
            lead = self.inv(coeffs[0])
            out.append(([self.scalar(c * lead) for c in coeffs], mult))
        out.sort(key=lambda fm: (len(fm[0]), [str(c) for c in fm[0]]))
        return out

    def poly_eval(self, coeffs: Sequence, a: np.ndarray) -> np.ndarray:
        """Horner evaluation of a polynomial (highest degree first) at ``a``."""
        n = a.shape[0]
        out = self.zeros(n, n)
        eye = self.eye(n)
        for c in coeffs:
            out = self.add(self.matmul(out, a), self.scale(c, eye))
        return out


def _to_fraction(c, p):
    if p == 0:
        c = sympy.Rational(c)
        return Fraction(int(c.p), int(c.q))
    return int(c) % p


def stack_columns(field: Field, vectors: Iterable[np.ndarray], dim: int) -> np.ndarray:
    cols = [np.asarray(v).reshape(dim, 1) for v in vectors]
    if not cols:
        return field.zeros(dim, 0)
    return np.concatenate(cols, axis=1)

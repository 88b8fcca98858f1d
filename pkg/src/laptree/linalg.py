"""Exact integer matrices and polynomials.

Everything here runs on Python's native arbitrary-precision ints:
determinants use Bareiss fraction-free elimination and characteristic
polynomials use the Berkowitz division-free algorithm, so no rational
or floating-point value ever appears and results are exact at any
coefficient size.
"""

from collections.abc import Iterable, Sequence

__all__ = [
    "ExactDivisionError",
    "IntMatrix",
    "IntPolynomial",
]


class ExactDivisionError(ArithmeticError):
    """An integer division that should have been exact left a remainder."""


class IntPolynomial:
    """Univariate polynomial with integer coefficients.

    Coefficients are stored ascending by degree with trailing zeros
    stripped; the zero polynomial has an empty coefficient tuple and
    degree -1.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be ints, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def linear(cls, c: int, slope: int = -1) -> "IntPolynomial":
        """Degree-one polynomial c + slope*x; the default builds (c - x)."""
        if slope not in (1, -1):
            raise ValueError("slope must be +1 or -1")
        return cls((c, slope))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        """Coefficient of x**k (zero beyond the degree)."""
        if k < 0:
            raise ValueError("degree index must be nonnegative")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(other * c for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def text(self) -> str:
        """Space-separated coefficients in ascending degree, e.g. "0 -2 1"."""
        if not self.coeffs:
            return "0"
        return " ".join(str(c) for c in self.coeffs)

    def pretty(self) -> str:
        """Human form in ascending degree, e.g. "-2*x + x^2"."""
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


class IntMatrix:
    """Dense square matrix of Python ints.

    Row and column numbers in the public API are 1-based, matching the
    vertex numbering of the graphs these matrices come from; `rows`
    exposes the raw entries as a tuple of tuples.
    """

    __slots__ = ("rows",)

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        rs = tuple(tuple(r) for r in rows)
        if not rs:
            raise ValueError("matrix dimension must be at least 1")
        for r in rs:
            if len(r) != len(rs):
                raise ValueError("matrix must be square")
            for x in r:
                if not isinstance(x, int):
                    raise TypeError(f"entries must be ints, got {type(x).__name__}")
        self.rows = rs

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))

    @classmethod
    def zero(cls, n: int) -> "IntMatrix":
        return cls(((0,) * n,) * n)

    @classmethod
    def ones(cls, n: int) -> "IntMatrix":
        return cls(((1,) * n,) * n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return IntMatrix(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)
        )

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return IntMatrix(tuple(scalar * x for x in r) for r in self.rows)

    __rmul__ = __mul__

    def add_outer(self, u: Sequence[int], v: Sequence[int]) -> "IntMatrix":
        """New matrix with entry (i, j) increased by u[i] * v[j]."""
        u, v = tuple(u), tuple(v)
        if len(u) != self.n or len(v) != self.n:
            raise ValueError("vector length must match matrix dimension")
        return IntMatrix(
            tuple(x + ui * vj for x, vj in zip(r, v))
            for r, ui in zip(self.rows, u)
        )

    def minor(self, row: int, col: int) -> "IntMatrix":
        """Submatrix with 1-based `row` and `col` deleted."""
        n = self.n
        if n < 2:
            raise ValueError("a 1x1 matrix has no minors")
        if not (1 <= row <= n and 1 <= col <= n):
            raise IndexError(f"row/column ({row}, {col}) out of range for n={n}")
        i0, j0 = row - 1, col - 1
        return IntMatrix(
            r[:j0] + r[j0 + 1:] for k, r in enumerate(self.rows) if k != i0
        )

    def minor_det(self, row: int, col: int) -> int:
        """Determinant of the deletion minor (row, col), 1-based."""
        return self.minor(row, col).det()

    def det(self) -> int:
        """Exact determinant by Bareiss fraction-free elimination.

        Intermediate entries are minors of the input, so every division
        below is exact and everything stays integral.
        """
        n = self.n
        a = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            pivot = a[k][k]
            ak = a[k]
            for i in range(k + 1, n):
                ai = a[i]
                aik = ai[k]
                for j in range(k + 1, n):
                    ai[j] = (pivot * ai[j] - aik * ak[j]) // prev
            prev = pivot
        return sign * a[n - 1][n - 1]

    def char_poly(self) -> "IntPolynomial":
        """Characteristic polynomial det(self - x*I) via Berkowitz.

        Division-free: the coefficient vector of each trailing principal
        submatrix is pushed through a Toeplitz convolution, using ring
        operations only. The leading coefficient is (-1)**n.
        """
        n = self.n
        a = self.rows
        # vec: descending coefficients of det(x*I - S) for the trailing
        # principal submatrix S, growing from empty to the full matrix.
        vec = [1]
        for k in range(n - 1, -1, -1):
            s = n - k
            t = [1, -a[k][k]]
            if s > 1:
                rrow = a[k][k + 1:]
                sub = [a[i][k + 1:] for i in range(k + 1, n)]
                w = [a[i][k] for i in range(k + 1, n)]
                for step in range(s - 1):
                    t.append(-sum(x * y for x, y in zip(rrow, w)))
                    if step < s - 2:
                        w = [sum(x * y for x, y in zip(row, w)) for row in sub]
            new = [0] * (s + 1)
            for j, vj in enumerate(vec):
                if vj:
                    for m in range(min(len(t), s + 1 - j)):
                        new[j + m] += t[m] * vj
            vec = new
        sgn = -1 if n % 2 else 1
        return IntPolynomial(sgn * vec[n - d] for d in range(n + 1))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"

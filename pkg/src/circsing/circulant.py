"""
Circulant matrices through their representer polynomials.

A circulant of order n is fixed by its first row [a_0, ..., a_{n-1}]; every
later row is the previous one shifted one place to the right. Its
eigenvalues are gamma(zeta_n^k) for gamma(x) = a_0 + a_1 x + ... and
k = 0..n-1, so singularity and the determinant reduce to arithmetic with
cyclotomic factors of x^n - 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .cyclotomic import cyclotomic, divisors, phi_divides
from .polycore import IntPoly, eval_unit_circle, poly_fold, resultant


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    row: tuple[int, ...]

    def __post_init__(self):
        row = tuple(int(v) for v in self.row)
        object.__setattr__(self, "row", row)
        if self.n < 1:
            raise ValueError(f"order must be positive, got n={self.n}")
        if len(row) != self.n:
            raise ValueError(f"row has length {len(row)}, expected n={self.n}")

    @classmethod
    def from_row(cls, row) -> CirculantSpec:
        row = tuple(row)
        return cls(len(row), row)

    def matrix(self) -> list[list[int]]:
        n, row = self.n, self.row
        return [[row[(j - i) % n] for j in range(n)] for i in range(n)]

    def rotated(self, k: int) -> CirculantSpec:
        """First row of W_n^k A, i.e. the row cyclically shifted right by k."""
        k %= self.n
        return CirculantSpec(self.n, self.row[-k:] + self.row[:-k] if k else self.row)

    def __str__(self):
        return format_spec(self)


def parse_row(text: str, n: int | None = None) -> CirculantSpec:
    text = text.strip()
    if not text:
        raise ValueError("row: expected comma-separated integers, got an empty string")
    try:
        row = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"row: expected comma-separated integers, got {text!r}") from None
    if n is not None and len(row) != n:
        raise ValueError(f"row: length {len(row)} does not match n={n}")
    return CirculantSpec(len(row), row)


def parse_spec(text: str) -> CirculantSpec:
    """Parse ``"n=<int>;row=<comma-separated ints>"``."""
    parts = [p.strip() for p in text.strip().split(";")]
    if len(parts) != 2 or not parts[0].startswith("n=") or not parts[1].startswith("row="):
        raise ValueError(f"spec: expected 'n=<int>;row=<ints>', got {text!r}")
    try:
        n = int(parts[0][2:])
    except ValueError:
        raise ValueError(f"spec: n must be an integer, got {parts[0][2:]!r}") from None
    return parse_row(parts[1][4:], n)


def format_spec(spec: CirculantSpec) -> str:
    return f"n={spec.n};row={','.join(map(str, spec.row))}"


@dataclass(frozen=True)
class SingularityReport:
    singular: bool
    witness_divisors: tuple[int, ...]
    zero_exponents: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "singular": self.singular,
            "witness_divisors": list(self.witness_divisors),
            "zero_exponents": list(self.zero_exponents),
        }


@dataclass(frozen=True)
class DetReport:
    determinant: int
    factors: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "determinant": self.determinant,
            "factors": {str(d): v for d, v in self.factors.items()},
        }


def representer(spec: CirculantSpec) -> IntPoly:
    return IntPoly(spec.row)


def gamma_strip(p: IntPoly) -> tuple[int, IntPoly]:
    """Split p = x^k * reduced with reduced(0) != 0."""
    if p.is_zero():
        raise ValueError("gamma_strip: zero polynomial has no reduced form")
    k = next(i for i, c in enumerate(p.coeffs) if c)
    return k, IntPoly(p.coeffs[k:])


def singularity(spec: CirculantSpec) -> SingularityReport:
    """Exact singularity verdict.

    A divisor d > 1 of n is a witness when Phi_d divides the reduced
    representer; each witness zeroes exactly the eigenvalues at k with
    n / gcd(n, k) = d. The eigenvalue at k = 0 is the row sum and is checked
    directly, since d = 1 is never reported as a witness.
    """
    n = spec.n
    gamma = representer(spec)
    if gamma.is_zero():
        return SingularityReport(True, tuple(divisors(n)[1:]), tuple(range(n)))
    _, reduced = gamma_strip(gamma)
    witnesses = tuple(d for d in divisors(n)[1:] if phi_divides(reduced, d))
    hit = set(witnesses)
    if sum(spec.row) == 0:
        hit.add(1)
    zeros = tuple(k for k in range(n) if n // math.gcd(n, k) in hit) if hit else ()
    return SingularityReport(bool(zeros), witnesses, zeros)


def exact_determinant(spec: CirculantSpec) -> DetReport:
    """det A as the product of Res(Phi_d, gamma) over the divisors d of n."""
    n = spec.n
    gamma = representer(spec)
    factors = {}
    det = 1
    for d in divisors(n):
        # Res(Phi_d, gamma) only depends on gamma mod x^d - 1.
        f = resultant(cyclotomic(d), poly_fold(gamma, d))
        factors[d] = f
        det *= f
    return DetReport(det, factors)


def two_value_determinant(n: int, a: int, s: int, b: int) -> int:
    """Determinant of the circulant with first row [a]*s + [b]*(n - s).

    Equals (s*a + t*b) * (a - b)^(n-1) with t = n - s when gcd(s, n) = 1,
    and 0 otherwise.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 1 <= s <= n:
        raise ValueError(f"run length s must satisfy 1 <= s <= n, got s={s}, n={n}")
    if math.gcd(s, n) != 1:
        return 0
    t = n - s
    return (s * a + t * b) * (a - b) ** (n - 1)


def spectrum_numeric(spec: CirculantSpec) -> list[complex]:
    gamma = representer(spec)
    return [eval_unit_circle(gamma, spec.n, k) for k in range(spec.n)]


def complement_row(spec: CirculantSpec) -> CirculantSpec:
    """First row of J - A - I for a circulant graph."""
    row, n = spec.row, spec.n
    if any(v not in (0, 1) for v in row):
        raise ValueError("complement_row: entries must be 0 or 1")
    if row[0] != 0:
        raise ValueError("complement_row: a_0 must be 0 (no loops)")
    if any(row[i] != row[n - i] for i in range(1, n)):
        raise ValueError("complement_row: row is not symmetric, so it is not a graph")
    return CirculantSpec(n, (0,) + tuple(1 - v for v in row[1:]))

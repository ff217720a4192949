"""
Brute-force ground truth for the polynomial path.

``bareiss_det`` materializes the full circulant matrix and runs fraction-free
Gaussian elimination on it. Nothing here touches polynomial arithmetic, so
agreement with ``exact_determinant`` and the family rules is a check by an
independent method.
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field

from .circulant import CirculantSpec, exact_determinant, singularity
from .families import Family, build, enumerate_valid, format_family, predict


class InexactDivision(ArithmeticError):
    pass


def bareiss_determinant(matrix) -> int:
    """Exact determinant of a square integer matrix by Bareiss elimination.

    Every division by the previous pivot is checked to be exact.
    """
    a = [list(map(int, r)) for r in matrix]
    n = len(a)
    if n == 0:
        return 1
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][0] == 0:
            p = next((i for i in range(k + 1, n) if a[i][0]), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        pivot_row = a[k]
        pivot = pivot_row[0]
        tail = pivot_row[1:]
        for i in range(k + 1, n):
            row = a[i]
            f = row[0]
            if f:
                new = [pivot * x - f * y for x, y in zip(row[1:], tail)]
            else:
                new = [pivot * x for x in row[1:]]
            if prev != 1:
                out = []
                for v in new:
                    q, rem = divmod(v, prev)
                    if rem:
                        raise InexactDivision(f"Bareiss step {k}: {v} not divisible by {prev}")
                    out.append(q)
                new = out
            # rows shrink by one column per step; column 0 is always the pivot column
            a[i] = new
        prev = pivot
    return sign * a[n - 1][0]


@functools.lru_cache(maxsize=65536)
def _det_of_row(row: tuple[int, ...]) -> int:
    n = len(row)
    return bareiss_determinant([[row[(j - i) % n] for j in range(n)] for i in range(n)])


def bareiss_det(spec: CirculantSpec) -> int:
    return _det_of_row(spec.row)


@dataclass(frozen=True)
class SweepOutcome:
    family: Family | CirculantSpec
    kind: str
    predicted: bool
    oracle_det: int
    agree: bool

    def to_dict(self) -> dict:
        label = format_family(self.family) if isinstance(self.family, Family) else str(self.family)
        return {
            "family": label,
            "kind": self.kind,
            "predicted_singular": self.predicted,
            "oracle_det": self.oracle_det,
            "agree": self.agree,
        }


@dataclass
class SweepSummary:
    label: str
    total: int = 0
    outcomes: list[SweepOutcome] = field(default_factory=list)

    @property
    def disagreements(self) -> list[SweepOutcome]:
        return [o for o in self.outcomes if not o.agree]

    def to_dict(self) -> dict:
        return {
            "family": self.label,
            "total": self.total,
            "disagreements": len(self.disagreements),
            "disagreement_list": [o.to_dict() for o in self.disagreements],
        }


def agrees(kind: str, predicted: bool, det: int) -> bool:
    if kind == "exact":
        return predicted == (det == 0)
    return (not predicted) or det == 0


def check_family(fam: Family) -> SweepOutcome:
    pred = predict(fam)
    det = bareiss_det(build(fam))
    return SweepOutcome(fam, pred.kind, pred.singular, det, agrees(pred.kind, pred.singular, det))


def sweep_family(kind: str, n_max: int) -> SweepSummary:
    """Compare ``predict`` with the oracle on every valid member up to ``n_max``."""
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    summary = SweepSummary(kind)
    for fam in enumerate_valid(kind, n_max):
        summary.outcomes.append(check_family(fam))
    summary.total = len(summary.outcomes)
    return summary


def random_rows(n_max: int, samples: int, seed: int) -> list[CirculantSpec]:
    """Uniform {0,1} first rows with a_0 = 0 and n uniform in [2, n_max]."""
    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        n = rng.randint(2, n_max)
        out.append(CirculantSpec(n, (0,) + tuple(rng.randint(0, 1) for _ in range(n - 1))))
    return out


@dataclass
class RandomSweepSummary:
    seed: int
    n_max: int
    samples: int
    passes: int = 0
    failures: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "n_max": self.n_max,
            "samples": self.samples,
            "passes": self.passes,
            "fails": len(self.failures),
            "failure_list": self.failures,
        }


def sweep_random_rows(n_max: int, samples: int, seed: int) -> RandomSweepSummary:
    """Check exact_determinant and singularity against the oracle on random rows."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if samples < 1:
        raise ValueError("samples must be at least 1")
    summary = RandomSweepSummary(seed, n_max, samples)
    for spec in random_rows(n_max, samples, seed):
        oracle = bareiss_det(spec)
        det = exact_determinant(spec).determinant
        verdict = singularity(spec).singular
        if det == oracle and verdict == (oracle == 0):
            summary.passes += 1
        else:
            summary.failures.append(f"{spec}: exact={det} oracle={oracle} singular={verdict}")
    return summary

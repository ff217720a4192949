"""
Named circulant graph and digraph families and their singularity rules.

Every family is a frozen dataclass that validates its parameters on
construction. ``build`` turns an instance into its first row and ``predict``
evaluates the closed-form singularity rule for that family. All rules are
two-sided except the (r, s, t) digraph, whose conditions are only
sufficient for singularity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import ClassVar, Iterator

from .circulant import CirculantSpec, complement_row
from .cyclotomic import divisors


class InvalidFamily(ValueError):
    pass


def _require(ok: bool, family: str, constraint: str) -> None:
    if not ok:
        raise InvalidFamily(f"{family}: violates {constraint}")


def _v2(n: int) -> int:
    return (n & -n).bit_length() - 1


@dataclass(frozen=True)
class Family:
    kind: ClassVar[str]

    @property
    def order(self) -> int:
        return self.n

    def params(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def __str__(self):
        return format_family(self)


@dataclass(frozen=True)
class DistancePower(Family):
    """C_n^i: vertices adjacent when their distance on the n-cycle is exactly i."""

    kind: ClassVar[str] = "distance-power"
    n: int
    i: int

    def __post_init__(self):
        _require(self.n >= 3, self.kind, "n >= 3")
        _require(1 <= self.i <= self.n // 2, self.kind, "1 <= i <= floor(n/2)")


@dataclass(frozen=True)
class DistancePowerComplement(DistancePower):
    kind: ClassVar[str] = "distance-power-complement"


@dataclass(frozen=True)
class PowerCycle(Family):
    """C_n^(r): vertices adjacent when their distance on the n-cycle is at most r."""

    kind: ClassVar[str] = "power-cycle"
    n: int
    r: int

    def __post_init__(self):
        _require(self.n >= 3, self.kind, "n >= 3")
        _require(1 <= self.r < self.n // 2, self.kind, "1 <= r < floor(n/2)")


@dataclass(frozen=True)
class PowerCycleComplement(PowerCycle):
    kind: ClassVar[str] = "power-cycle-complement"


@dataclass(frozen=True)
class C2nr(Family):
    """C(2n, r): the r-th power of C_2n plus the antipodal matching. Order is 2n."""

    kind: ClassVar[str] = "c2nr"
    n: int
    r: int

    def __post_init__(self):
        _require(self.n >= 2, self.kind, "n >= 2")
        _require(1 <= self.r < self.n, self.kind, "1 <= r < n")

    @property
    def order(self) -> int:
        return 2 * self.n


@dataclass(frozen=True)
class C2nrComplement(C2nr):
    kind: ClassVar[str] = "c2nr-complement"


@dataclass(frozen=True)
class KElement(Family):
    """Digraph whose first row is k ones followed by zeros."""

    kind: ClassVar[str] = "k-element"
    n: int
    k: int

    def __post_init__(self):
        _require(1 <= self.k <= self.n, self.kind, "1 <= k <= n")


@dataclass(frozen=True)
class RstDigraph(Family):
    """Digraph with first row: r ones, t zeros, s ones, then zeros."""

    kind: ClassVar[str] = "rst"
    n: int
    r: int
    s: int
    t: int

    def __post_init__(self):
        _require(min(self.r, self.s, self.t) >= 0, self.kind, "r, s, t >= 0")
        _require(self.r + self.s + self.t <= self.n, self.kind, "r + s + t <= n")
        _require(self.r + self.s >= 1, self.kind, "r + s >= 1")


@dataclass(frozen=True)
class Ijkl(Family):
    """Digraph with representer sum_{a=0..k} sum_{b=i..i+l} x^(b + a*j)."""

    kind: ClassVar[str] = "ijkl"
    n: int
    i: int
    j: int
    k: int
    l: int  # noqa: E741

    def __post_init__(self):
        _require(self.i >= 0 and self.k >= 0 and self.l >= 0, self.kind, "i, k, l >= 0")
        _require(self.j >= 1, self.kind, "j >= 1")
        _require(self.j > self.l, self.kind, "j > l")
        _require(self.k * self.j + self.i + self.l < self.n, self.kind, "k*j + i + l < n")


FAMILIES: dict[str, type[Family]] = {
    cls.kind: cls
    for cls in (
        DistancePower,
        DistancePowerComplement,
        PowerCycle,
        PowerCycleComplement,
        C2nr,
        C2nrComplement,
        KElement,
        RstDigraph,
        Ijkl,
    )
}

EXACT_KINDS = tuple(k for k in FAMILIES if k != RstDigraph.kind)


def parse_family(text: str) -> Family:
    """Parse ``<kind>:<k=v>(,<k=v>)*``, e.g. ``power-cycle:n=8,r=3``."""
    kind, sep, rest = text.strip().partition(":")
    if not sep:
        raise ValueError(f"family: expected '<kind>:<k=v>,...', got {text!r}")
    cls = FAMILIES.get(kind)
    if cls is None:
        raise ValueError(f"family: unknown kind {kind!r}; expected one of {', '.join(FAMILIES)}")
    names = [f.name for f in fields(cls)]
    values: dict[str, int] = {}
    for item in filter(None, (p.strip() for p in rest.split(","))):
        key, eq, val = item.partition("=")
        if not eq:
            raise ValueError(f"family: parameter {item!r} is not of the form k=v")
        if key not in names:
            raise ValueError(f"family: {kind} has no parameter {key!r}; expected {', '.join(names)}")
        if key in values:
            raise ValueError(f"family: parameter {key!r} given twice")
        try:
            values[key] = int(val)
        except ValueError:
            raise ValueError(f"family: parameter {key} must be an integer, got {val!r}") from None
    missing = [n for n in names if n not in values]
    if missing:
        raise ValueError(f"family: {kind} is missing {', '.join(missing)}")
    return cls(**values)


def format_family(fam: Family) -> str:
    return f"{fam.kind}:" + ",".join(f"{k}={v}" for k, v in fam.params().items())


def _row_from_support(n: int, support) -> CirculantSpec:
    row = [0] * n
    for e in support:
        row[e % n] = 1
    return CirculantSpec(n, tuple(row))


def build(fam: Family) -> CirculantSpec:
    """First row of the family member's adjacency matrix."""
    if isinstance(fam, DistancePower):
        n, i = fam.n, fam.i
        base = _row_from_support(n, (i, n - i))
        return complement_row(base) if isinstance(fam, DistancePowerComplement) else base
    if isinstance(fam, PowerCycle):
        n, r = fam.n, fam.r
        base = _row_from_support(n, [*range(1, r + 1), *range(n - r, n)])
        return complement_row(base) if isinstance(fam, PowerCycleComplement) else base
    if isinstance(fam, C2nr):
        n, r = fam.n, fam.r
        base = _row_from_support(2 * n, [*range(1, r + 1), n, *range(2 * n - r, 2 * n)])
        return complement_row(base) if isinstance(fam, C2nrComplement) else base
    if isinstance(fam, KElement):
        return _row_from_support(fam.n, range(fam.k))
    if isinstance(fam, RstDigraph):
        r, s, t = fam.r, fam.s, fam.t
        return _row_from_support(fam.n, [*range(r), *range(r + t, r + t + s)])
    if isinstance(fam, Ijkl):
        return _row_from_support(
            fam.n,
            (b + a * fam.j for a in range(fam.k + 1) for b in range(fam.i, fam.i + fam.l + 1)),
        )
    raise TypeError(f"not a family instance: {fam!r}")


@dataclass(frozen=True)
class Prediction:
    kind: str  # "exact" or "sufficient-only"
    singular: bool
    rule: str
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "singular": self.singular, "rule": self.rule}
        if self.detail:
            out["detail"] = self.detail
        return out


def _exact(singular: bool, rule: str, detail: str = "") -> Prediction:
    return Prediction("exact", bool(singular), rule, detail)


def _rst_condition(n: int, r: int, s: int, t: int) -> str | None:
    """Name of the first sufficient condition that fires, or None.

    Both second-part conditions evaluate gamma at a primitive d-th root of
    unity, which is an eigenvalue only when d divides n; d is therefore
    searched over the divisors of n.
    """
    if math.gcd(math.gcd(n, s), r) > 1:
        return "gcd(n,s,r)>1"
    if math.gcd(n, s) != 1 or r == 0 or s % r:
        return None
    ell = s // r
    for d in divisors(n)[1:]:
        if t % d == 0 and (ell + 1) % d == 0:
            return f"d={d} divides t and s=l*r with l=-1 mod d"
        if d % 2 == 0 and n % 2 == 0:
            half = d // 2
            if (r + t) % half == 0 and ((r + t) // half) % 2 == 1 and (ell - 1) % d == 0:
                return f"d={d}, r+t odd multiple of d/2 and s=l*r with l=1 mod d"
    return None


def predict(fam: Family) -> Prediction:
    """Closed-form singularity rule for a family member."""
    if isinstance(fam, DistancePowerComplement):
        n, i = fam.n, fam.i
        if i == n // 2:
            return _exact(n % 2 == 0 or n % 6 == 3, "distance-power-complement-lemma", "i = floor(n/2)")
        return _exact(n % 3 == 0 and (n // 3) % math.gcd(i, n) == 0, "distance-power-complement-lemma")
    if isinstance(fam, DistancePower):
        n, i = fam.n, fam.i
        return _exact(n % 4 == 0 and (n // 4) % math.gcd(i, n // 2) == 0, "distance-power-lemma")
    if isinstance(fam, PowerCycleComplement):
        return _exact(math.gcd(fam.n, 2 * fam.r + 1) != 1, "power-cycle-complement-corollary")
    if isinstance(fam, PowerCycle):
        n, r = fam.n, fam.r
        singular = math.gcd(n, r) > 1 or (n % 2 == 0 and (n // 2) % math.gcd(r + 1, n) == 0)
        return _exact(singular, "Ruivivar-Theorem")
    if isinstance(fam, C2nrComplement):
        n, r = fam.n, fam.r
        nonsingular = (n - r) % 2 == 0 and math.gcd(n, r + 1) == 1 and _v2(n) < _v2(n - r)
        return _exact(not nonsingular, "C2nr-complement-lemma")
    if isinstance(fam, C2nr):
        return _exact(math.gcd(fam.n, 2 * fam.r + 1) >= 3, "C2nr-theorem")
    if isinstance(fam, KElement):
        return _exact(math.gcd(fam.n, fam.k) != 1, "k-element-lemma")
    if isinstance(fam, RstDigraph):
        n, r, s, t = fam.n, fam.r, fam.s, fam.t
        if r == 0 or s == 0:
            # One block of r + s consecutive ones, up to a rotation.
            return _exact(math.gcd(n, r + s) != 1, "k-element-lemma", "degenerate (r,s,t) digraph")
        fired = _rst_condition(n, r, s, t)
        return Prediction("sufficient-only", fired is not None, "rst-sufficient-conditions", fired or "")
    if isinstance(fam, Ijkl):
        n = fam.n
        singular = math.gcd(fam.l + 1, n) >= 2 or math.gcd(fam.k + 1, n // math.gcd(n, fam.j)) >= 2
        return _exact(singular, "ijkl-theorem")
    raise TypeError(f"not a family instance: {fam!r}")


def enumerate_valid(kind: str, n_max: int) -> Iterator[Family]:
    """Every valid member of ``kind`` with order <= n_max, lexicographic in its fields.

    For ``ijkl`` the step j is capped at n - 1: with k >= 1 the constraints
    already force j < n, and with k = 0 the row does not depend on j.
    """
    if kind not in FAMILIES:
        raise ValueError(f"unknown family kind {kind!r}")
    cls = FAMILIES[kind]
    if cls in (DistancePower, DistancePowerComplement):
        for n in range(3, n_max + 1):
            for i in range(1, n // 2 + 1):
                yield cls(n, i)
    elif cls in (PowerCycle, PowerCycleComplement):
        for n in range(3, n_max + 1):
            for r in range(1, n // 2):
                yield cls(n, r)
    elif cls in (C2nr, C2nrComplement):
        for n in range(2, n_max // 2 + 1):
            for r in range(1, n):
                yield cls(n, r)
    elif cls is KElement:
        for n in range(1, n_max + 1):
            for k in range(1, n + 1):
                yield KElement(n, k)
    elif cls is RstDigraph:
        for n in range(1, n_max + 1):
            for r in range(n + 1):
                for s in range(n - r + 1):
                    if r + s == 0:
                        continue
                    for t in range(n - r - s + 1):
                        yield RstDigraph(n, r, s, t)
    else:
        for n in range(1, n_max + 1):
            for i in range(n):
                for j in range(1, n):
                    for k in range(n):
                        if k * j + i >= n:
                            break
                        for l in range(min(j, n - k * j - i)):  # noqa: E741
                            yield Ijkl(n, i, j, k, l)

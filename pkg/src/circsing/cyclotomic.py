"""Cyclotomic polynomials, divisors and the totient."""
from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass

from .polycore import (
    IntPoly,
    poly_compose_power,
    poly_divides_monic,
    poly_divrem_monic,
    poly_fold,
    x_pow_minus_one,
)


def _check_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, as {prime: exponent}."""
    _check_positive(n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, a) if n == p**a with a >= 1, else None."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f) != 1:
        return None
    ((p, a),) = f.items()
    return p, a


def divisors(n: int) -> list[int]:
    _check_positive(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    _check_positive(n)
    out = n
    for p in factorize(n):
        out -= out // p
    return out


_cache: dict[int, IntPoly] = {1: IntPoly((-1, 1))}
_lock = threading.RLock()


def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, memoized per process.

    Prime powers use the closed form 1 + x^(p^(k-1)) + ... + x^((p-1)p^(k-1)).
    Other non-squarefree d reduce to the squarefree kernel through
    Phi_{pm}(x) = Phi_m(x^p) for p | m. Squarefree d is obtained by dividing
    x^d - 1 by Phi_e for every proper divisor e.
    """
    _check_positive(d, "d")
    poly = _cache.get(d)
    if poly is not None:
        return poly
    with _lock:
        poly = _cache.get(d)
        if poly is None:
            poly = _generate(d)
            _cache[d] = poly
        return poly


def _generate(d: int) -> IntPoly:
    pp = prime_power(d)
    if pp is not None:
        p, k = pp
        step = p ** (k - 1)
        coeffs = [0] * ((p - 1) * step + 1)
        for i in range(p):
            coeffs[i * step] = 1
        return IntPoly(tuple(coeffs))
    radical = math.prod(factorize(d))
    if radical != d:
        return poly_compose_power(cyclotomic(radical), d // radical)
    return cyclotomic_by_division(d)


def cyclotomic_by_division(d: int) -> IntPoly:
    """Phi_d from x^d - 1 by exact division; no closed forms, no cache writes."""
    _check_positive(d, "d")
    poly = x_pow_minus_one(d)
    for e in divisors(d)[:-1]:
        poly, rem = poly_divrem_monic(poly, cyclotomic(e))
        assert rem.is_zero(), (d, e)
    return poly


def phi_divides(p: IntPoly, d: int) -> bool:
    """True iff Phi_d divides p in Z[x]."""
    # Phi_d | x^d - 1, so folding p mod x^d - 1 first keeps the division short.
    return poly_divides_monic(poly_fold(p, d), cyclotomic(d))


@dataclass(frozen=True)
class OdlyzkoClass:
    """Which branch of the Kurshan-Odlyzko classification applies to Phi_m(zeta_n).

    ``predicted_modulus`` is |p|, |1 - zeta_{p^a}|, |1 - zeta_{p^(a+1)}|^(p-1)
    or 1, with zeta_q = exp(2*pi*i/q). ``predicted_norm`` is the absolute norm
    of the same element in Q(zeta_n); unlike the modulus it does not depend on
    the unit factor.
    """

    case: str
    predicted_modulus: float
    predicted_norm: int
    prime: int | None = None
    exponent: int | None = None


def _abs_one_minus_root(q: int) -> float:
    return abs(1 - cmath.exp(2j * math.pi / q))


def odlyzko_modulus_class(m: int, n: int) -> OdlyzkoClass:
    _check_positive(m, "m")
    _check_positive(n, "n")
    if m == n:
        raise ValueError("m and n must differ")
    deg = euler_phi(n)
    if m % n == 0 and (pp := prime_power(m // n)):
        p, a = pp
        return OdlyzkoClass("prime-power-up", float(p), p**deg, p, a)
    if n % m == 0 and (pp := prime_power(n // m)):
        p, a = pp
        if m % p:
            q = p**a
            return OdlyzkoClass(
                "prime-power-down-coprime", _abs_one_minus_root(q), p ** (deg // euler_phi(q)), p, a
            )
        q = p ** (a + 1)
        return OdlyzkoClass(
            "prime-power-down-dividing",
            _abs_one_minus_root(q) ** (p - 1),
            p ** ((p - 1) * deg // euler_phi(q)),
            p,
            a,
        )
    return OdlyzkoClass("unit", 1.0, 1)

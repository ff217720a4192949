"""
Dense polynomials over the integers.

A polynomial is stored as a tuple of Python ints in ascending order, so
``1 - 2x + x^3`` is ``(1, -2, 0, 1)``. Trailing zeros are stripped on
construction and the zero polynomial is the empty tuple.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

# Degree of the zero polynomial. Only ever compared, never added to.
NEG_INF = float("-inf")


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", c[:end])

    @classmethod
    def of(cls, *coeffs: int) -> IntPoly:
        """``IntPoly.of(0, 1, 0, 1)`` is x + x^3."""
        return cls(coeffs)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls((0,) * k + (c,))

    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPoly) -> IntPoly:
        return poly_add(self, other)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return poly_sub(self, other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        return poly_mul(self, other)

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"IntPoly({format_poly(self)!r})"


ZERO = IntPoly()
ONE = IntPoly((1,))


def x_pow_minus_one(n: int) -> IntPoly:
    """x^n - 1."""
    return IntPoly((-1,) + (0,) * (n - 1) + (1,))


def parse_poly(text: str) -> IntPoly:
    """Parse comma-separated ascending coefficients, e.g. ``"0,1,0,1"``."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text; write 0 for the zero polynomial")
    try:
        return IntPoly(tuple(int(tok) for tok in text.split(",")))
    except ValueError:
        raise ValueError(f"polynomial coefficients must be comma-separated integers: {text!r}") from None


def format_poly(p: IntPoly) -> str:
    return ",".join(str(c) for c in p.coeffs) if p.coeffs else "0"


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a.coeffs)
    for i, c in enumerate(b.coeffs):
        out[i] += c
    return IntPoly(tuple(out))


def poly_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return poly_add(a, -b)


def poly_scale(p: IntPoly, c: int) -> IntPoly:
    return IntPoly(tuple(c * v for v in p.coeffs))


def poly_shift(p: IntPoly, k: int) -> IntPoly:
    """Multiply by x^k."""
    return IntPoly((0,) * k + p.coeffs) if p.coeffs else ZERO


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if a.is_zero() or b.is_zero():
        return ZERO
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    ac = a.coeffs
    for j, bj in enumerate(b.coeffs):
        if bj:
            for i, ai in enumerate(ac):
                out[i + j] += ai * bj
    return IntPoly(tuple(out))


def poly_compose_power(p: IntPoly, k: int) -> IntPoly:
    """p(x^k)."""
    if p.is_zero():
        return ZERO
    out = [0] * ((len(p) - 1) * k + 1)
    for i, c in enumerate(p.coeffs):
        out[i * k] = c
    return IntPoly(tuple(out))


def poly_fold(p: IntPoly, d: int) -> IntPoly:
    """Reduce p modulo x^d - 1 by folding exponents mod d."""
    if len(p) <= d:
        return p
    out = [0] * d
    for i, c in enumerate(p.coeffs):
        out[i % d] += c
    return IntPoly(tuple(out))


def poly_divrem_monic(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Divide by a monic polynomial, returning (quotient, remainder).

    The division loop only touches the nonzero terms of ``den``, which keeps
    reduction by sparse divisors such as x^m + 1 linear in ``len(num)``.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if den.lc != 1:
        raise ValueError(f"divisor must be monic, leading coefficient is {den.lc}")
    m = len(den) - 1
    if len(num) <= m:
        return ZERO, num
    rem = list(num.coeffs)
    terms = [(i, c) for i, c in enumerate(den.coeffs[:-1]) if c]
    quot = [0] * (len(rem) - m)
    for top in range(len(rem) - 1, m - 1, -1):
        c = rem[top]
        if c:
            shift = top - m
            quot[shift] = c
            for i, dc in terms:
                rem[shift + i] -= c * dc
    return IntPoly(tuple(quot)), IntPoly(tuple(rem[:m]))


def poly_divides_monic(p: IntPoly, den: IntPoly) -> bool:
    return poly_divrem_monic(p, den)[1].is_zero()


def content(p: IntPoly) -> int:
    """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
    return math.gcd(*p.coeffs) if p.coeffs else 0


def primitive_part(p: IntPoly) -> IntPoly:
    """p divided by its content. The sign of the leading coefficient is kept."""
    g = content(p)
    if g in (0, 1):
        return p
    return IntPoly(tuple(c // g for c in p.coeffs))


def pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by the zero polynomial")
    m = len(b) - 1
    if len(a) <= m:
        return a
    lc = b.lc
    bl = b.coeffs[:-1]
    rem = list(a.coeffs)
    for top in range(len(rem) - 1, m - 1, -1):
        c = rem[top]
        shift = top - m
        if lc != 1:
            for i in range(top):
                rem[i] *= lc
        if c:
            for i, bc in enumerate(bl):
                if bc:
                    rem[shift + i] -= c * bc
        rem.pop()
    return IntPoly(tuple(rem))


def poly_gcd_primitive(a: IntPoly, b: IntPoly) -> IntPoly:
    """Gcd over Q, normalized to be primitive with a positive leading coefficient.

    Uses the primitive remainder sequence: each pseudo-remainder is divided
    by its content before the next step.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = primitive_part(a), primitive_part(b)
    if len(a) < len(b):
        a, b = b, a
    while not b.is_zero():
        a, b = b, primitive_part(pseudo_rem(a, b))
    return -a if a.lc < 0 else a


def subresultant_resultant(a: IntPoly, b: IntPoly) -> int:
    # Collins/Brown subresultant PRS; see e.g. Cohen, Alg. 3.3.7.
    if a.is_zero() or b.is_zero():
        return 0
    sign = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) * (len(b) - 1) % 2:
            sign = -1
    ca, cb = content(a), content(b)
    a, b = primitive_part(a), primitive_part(b)
    t = ca ** (len(b) - 1) * cb ** (len(a) - 1)
    if len(a) == 1:
        return sign * t
    g = h = 1
    while len(b) > 1:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = pseudo_rem(a, b)
        if r.is_zero():
            return 0
        div = g * h ** delta
        a = b
        b = IntPoly(tuple(c // div for c in r.coeffs))
        g = a.lc
        h = g ** delta // h ** (delta - 1) if delta else h
    da = len(a) - 1
    return sign * t * (b.lc ** da // h ** (da - 1))


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Res(a, b) for monic ``a``, i.e. the product of b over the roots of a.

    ``b`` is first reduced modulo ``a`` (legal because ``a`` is monic), and the
    remainder is handled by a subresultant remainder sequence.
    """
    if a.is_zero():
        raise ValueError("resultant: first argument is the zero polynomial")
    if a.lc != 1:
        raise ValueError(f"resultant: first argument must be monic, leading coefficient is {a.lc}")
    m = len(a) - 1
    if m == 0:
        return 1
    _, r = poly_divrem_monic(b, a)
    if r.is_zero():
        return 0
    if len(r) == 1:
        return r.coeffs[0] ** m
    return subresultant_resultant(a, r)


def sylvester_matrix(a: IntPoly, b: IntPoly) -> list[list[int]]:
    """Sylvester matrix with rows of a first; its determinant is Res(a, b)."""
    m, k = len(a) - 1, len(b) - 1
    size = m + k
    rows = []
    ad = a.coeffs[::-1]
    bd = b.coeffs[::-1]
    for i in range(k):
        rows.append([0] * i + list(ad) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(bd) + [0] * (size - k - 1 - i))
    return rows


def eval_unit_circle(p: IntPoly, n: int, k: int) -> complex:
    """p evaluated at exp(2*pi*i*k/n).

    Exponents are reduced mod n before taking the exponential, so every term
    uses an exactly-reduced angle instead of a long chain of products.
    """
    if n < 1:
        raise ValueError("n must be positive")
    acc = [0] * n
    for j, c in enumerate(p.coeffs):
        if c:
            acc[(j * k) % n] += c
    re = math.fsum(c * math.cos(2 * math.pi * e / n) for e, c in enumerate(acc) if c)
    im = math.fsum(c * math.sin(2 * math.pi * e / n) for e, c in enumerate(acc) if c)
    return complex(re, im)


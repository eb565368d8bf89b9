"""Families of test magmas.

The main family is the multiplicative groupoid of the Jordan algebra
obtained by symmetrizing the semigroup algebra F_p S of an m-element
left-zero semigroup S.  With |x| the coefficient sum of x, the product
works out to x*y = (|x| y + |y| x) / 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InvalidCharacteristic, ZeroWeight
from .magma import Magma


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class VectorEncoding:
    """Element index <-> coefficient vector over F_p, via base-p digits.

    index = sum(alpha_i * p**i), so alpha_0 is the least significant digit.
    """

    p: int
    m: int

    @property
    def size(self) -> int:
        return self.p ** self.m

    def to_vector(self, x: int) -> tuple[int, ...]:
        digits = []
        for _ in range(self.m):
            x, d = divmod(x, self.p)
            digits.append(d)
        return tuple(digits)

    def from_vector(self, v) -> int:
        if len(v) != self.m:
            raise InputError(f"vector must have {self.m} coordinates")
        return sum((c % self.p) * self.p ** i for i, c in enumerate(v))


def _check_params(p: int, m: int):
    if p == 2 or not is_prime(p):
        raise InvalidCharacteristic(p)
    if m < 1:
        raise InputError("m must be at least 1")


def jordan_left_zero(p: int, m: int) -> tuple[Magma, VectorEncoding]:
    _check_params(p, m)
    enc = VectorEncoding(p, m)
    half = (p + 1) // 2
    vectors = [enc.to_vector(x) for x in range(enc.size)]
    weights = [sum(v) % p for v in vectors]
    rows = []
    for x, vx in enumerate(vectors):
        wx = weights[x]
        rows.append(tuple(
            enc.from_vector([half * (wx * cy + weights[y] * cx) for cx, cy in zip(vx, vy)])
            for y, vy in enumerate(vectors)
        ))
    return Magma(enc.size, tuple(rows)), enc


def weight(enc: VectorEncoding, x: int) -> int:
    return sum(enc.to_vector(x)) % enc.p


def radical(enc: VectorEncoding) -> frozenset[int]:
    """Elements of weight zero."""
    return frozenset(x for x in range(enc.size) if weight(enc, x) == 0)


def witness_t(enc: VectorEncoding, x: int, y: int) -> int:
    """Return t with x*t = y, for x and y both of nonzero weight.

    t = (2|x| y - |y| x) / |x|^2.
    """
    p = enc.p
    wx, wy = weight(enc, x), weight(enc, y)
    if wx == 0:
        raise ZeroWeight(x)
    if wy == 0:
        raise ZeroWeight(y)
    scale = pow(wx * wx, -1, p)
    vx, vy = enc.to_vector(x), enc.to_vector(y)
    return enc.from_vector([scale * (2 * wx * cy - wy * cx) for cx, cy in zip(vx, vy)])


def chain_semilattice(k: int) -> Magma:
    """The chain 0 < 1 < ... < k-1 with product = min."""
    if k < 1:
        raise InputError("k must be at least 1")
    return Magma.from_rows([[min(i, j) for j in range(k)] for i in range(k)])


def zn_multiplicative(k: int) -> Magma:
    """Integers mod k under multiplication."""
    if k < 1:
        raise InputError("k must be at least 1")
    return Magma.from_rows([[(i * j) % k for j in range(k)] for i in range(k)])


def cyclic_group(k: int) -> Magma:
    """Integers mod k under addition."""
    if k < 1:
        raise InputError("k must be at least 1")
    return Magma.from_rows([[(i + j) % k for j in range(k)] for i in range(k)])

"""Permutations and signed permutations acting on polynomials.

Elements of B_n are pairs (one-line permutation, sign vector); D_n is the
even-sign subgroup, S_n the all-plus-signs subgroup.  The action on the
polynomial ring sends x_i to signs[i] * x_{perm[i]}.

Also provides the signed symmetrizations over a support set and over left
cosets that certify the cover-inclusion identities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .polynomials import Fraction, Monomial, Poly


def perm_sign(images: tuple[int, ...]) -> int:
    """Parity of inversions of a one-line permutation of 1..n."""
    inv = 0
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            if images[i] > images[j]:
                inv += 1
    return -1 if inv % 2 else 1


def compose_perms(g: tuple[int, ...], h: tuple[int, ...]) -> tuple[int, ...]:
    """(g h)(i) = g(h(i)): apply h first, then g."""
    return tuple(g[h[i] - 1] for i in range(len(g)))


@dataclass(frozen=True)
class SignedPermutation:
    """An element of B_n: x_i maps to signs[i-1] * x_{perm[i-1]}."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{n}")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"bad sign vector {self.signs}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def is_even_signed(self) -> bool:
        neg = sum(1 for s in self.signs if s < 0)
        return neg % 2 == 0

    def perm_sign(self) -> int:
        return perm_sign(self.perm)

    def compose(self, other: SignedPermutation) -> SignedPermutation:
        """self after other: act(a.compose(b), f) == act(a, act(b, f))."""
        perm = compose_perms(self.perm, other.perm)
        signs = tuple(
            other.signs[i] * self.signs[other.perm[i] - 1] for i in range(self.n)
        )
        return SignedPermutation(perm, signs)

    def __str__(self) -> str:
        one_line = " ".join(str(v) for v in self.perm)
        signs = "".join("+" if s > 0 else "-" for s in self.signs)
        return f"({one_line} | {signs})"


def identity_element(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)), (1,) * n)


def from_permutation(images: Iterable[int]) -> SignedPermutation:
    images = tuple(images)
    return SignedPermutation(images, (1,) * len(images))


def act(g: SignedPermutation, f: Poly) -> Poly:
    """Apply x_i -> signs[i] * x_{perm[i]} to every monomial of f."""
    if g.n != f.n:
        raise ValueError(f"size mismatch: group element on {g.n}, poly on {f.n}")
    out: dict[Monomial, Fraction] = {}
    for mono, coeff in f.terms.items():
        new = [0] * f.n
        sign = 1
        for i, e in enumerate(mono):
            if e:
                new[g.perm[i] - 1] = e
                if e % 2 and g.signs[i] < 0:
                    sign = -sign
        key = tuple(new)
        s = out.get(key, 0) + sign * coeff
        if s:
            out[key] = s
        elif key in out:
            del out[key]
    return Poly(f.n, out)


def act_point(g: SignedPermutation, point: tuple) -> tuple:
    """Companion action on points: coordinate i moves to slot perm[i] with its sign."""
    if g.n != len(point):
        raise ValueError("size mismatch")
    out = [None] * g.n
    for i, v in enumerate(point):
        out[g.perm[i] - 1] = g.signs[i] * v
    return tuple(out)


def enumerate_group(kind: str, n: int) -> Iterator[SignedPermutation]:
    """All elements of S_n / B_n / D_n, each exactly once, in a fixed order.

    Order is lexicographic in (sign vector, one-line permutation) with +1
    preceding -1, so the identity always comes first.
    """
    if n < 1:
        raise ValueError("group rank must be at least 1")
    if kind not in ("S", "B", "D"):
        raise ValueError(f"unknown group kind {kind!r}")
    sign_vectors: Iterable[tuple[int, ...]]
    if kind == "S":
        sign_vectors = [(1,) * n]
    else:
        sign_vectors = itertools.product((1, -1), repeat=n)
    for signs in sign_vectors:
        if kind == "D" and sum(1 for s in signs if s < 0) % 2:
            continue
        for images in itertools.permutations(range(1, n + 1)):
            yield SignedPermutation(images, signs)


def _support_permutations(f_n: int, support: tuple[int, ...]) -> Iterator[SignedPermutation]:
    """Signed permutations (all-plus signs) permuting `support`, fixing the rest."""
    base = list(range(1, f_n + 1))
    for images in itertools.permutations(support):
        perm = base[:]
        for slot, img in zip(support, images):
            perm[slot - 1] = img
        yield SignedPermutation(tuple(perm), (1,) * f_n)


def antisymmetrize(f: Poly, support: Iterable[int]) -> Poly:
    """Sum of sgn(sigma) * sigma(f) over all permutations of the support indices."""
    support = tuple(sorted(set(support)))
    if any(not 1 <= i <= f.n for i in support):
        raise ValueError(f"support {support} not within 1..{f.n}")
    total = Poly.zero(f.n)
    for g in _support_permutations(f.n, support):
        total = total + act(g, f) * g.perm_sign()
    return total


def coset_antisymmetrize(f: Poly, big: Iterable[int], small: Iterable[int]) -> Poly:
    """Signed sum of one representative per left coset of S_small in S_big.

    Representatives are the first element of each coset in enumeration
    order; the result is representative-independent whenever f is
    sign-equivariant under S_small (callers test that, we do not assert it).
    """
    big = tuple(sorted(set(big)))
    small = tuple(sorted(set(small)))
    if not set(small) <= set(big):
        raise ValueError("small support must be contained in the big support")
    if any(not 1 <= i <= f.n for i in big):
        raise ValueError(f"support {big} not within 1..{f.n}")
    outside = tuple(i for i in big if i not in small)
    total = Poly.zero(f.n)
    seen: set[tuple[int, ...]] = set()
    for g in _support_permutations(f.n, big):
        # left coset g*S_small is determined by g's values off the small block
        key = tuple(g.perm[i - 1] for i in outside)
        if key in seen:
            continue
        seen.add(key)
        total = total + act(g, f) * g.perm_sign()
    return total

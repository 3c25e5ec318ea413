"""Tableaux, Vandermonde products and the S/B/D Specht polynomial builders.

A tableau is a bijective filling of a partition diagram with 1..size; a
bitableau splits 1..n over two diagrams.  Specht polynomials:

  S:  product of the Vandermonde determinants of the columns
  B:  spe_T(x^2) * spe_S(x^2) * prod of the right-hand variables
  D:  the +/- combination of the two orientations of an equal-shape pair

Generator sets expand one base Specht polynomial through the symmetric
group orbit (deduplicated up to sign), mirroring how the ideals are
generated shape by shape.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from . import groups
from .ideals import GeneratorSet
from .partitions import (
    Dipartition,
    Partition,
    check_partition,
    conjugate,
    part,
)
from .polynomials import Poly


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = tuple(len(r) for r in self.rows)
        check_partition(shape)
        entries = sorted(e for r in self.rows for e in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("tableau entries must be exactly 1..size")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def columns(self) -> list[tuple[int, ...]]:
        """Column sequences read top to bottom."""
        return _columns(self.rows)


def _columns(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    if not rows:
        return []
    width = len(rows[0])
    return [
        tuple(row[c] for row in rows if len(row) > c) for c in range(width)
    ]


@dataclass(frozen=True)
class Bitableau:
    """A pair of fillings jointly exhausting 1..n (shapes may differ)."""

    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        check_partition(tuple(len(r) for r in self.left))
        check_partition(tuple(len(r) for r in self.right))
        entries = sorted(
            e for rows in (self.left, self.right) for r in rows for e in r
        )
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("bitableau entries must be exactly 1..n")

    @property
    def shape(self) -> tuple[Partition, Partition]:
        return (
            tuple(len(r) for r in self.left),
            tuple(len(r) for r in self.right),
        )

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.left) + sum(len(r) for r in self.right)

    def swapped(self) -> Bitableau:
        return Bitableau(self.right, self.left)


def rows_from_columns(shape: Partition, fill: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Place fill[0], fill[1], ... down successive columns of the diagram."""
    shape = check_partition(shape)
    cols = conjugate(shape)
    rows = [[0] * shape[i] for i in range(len(shape))]
    it = iter(fill)
    for c, height in enumerate(cols):
        for r in range(height):
            rows[r][c] = next(it)
    return tuple(tuple(r) for r in rows)


def base_tableau(shape: Partition) -> Tableau:
    """Canonical filling: 1, 2, 3, ... down successive columns."""
    size = sum(shape)
    return Tableau(rows_from_columns(shape, range(1, size + 1)))


def base_bitableau(lam: Partition, mu: Partition) -> Bitableau:
    """Column-wise filling of the left diagram with 1..|lam|, then the right."""
    k = sum(lam)
    n = k + sum(mu)
    left = rows_from_columns(lam, range(1, k + 1)) if lam else ()
    right = rows_from_columns(mu, range(k + 1, n + 1)) if mu else ()
    return Bitableau(left, right)


def vandermonde(n_vars: int, indices: Sequence[int]) -> Poly:
    """Product of (x_{k_i} - x_{k_j}) over i < j; empty product is 1."""
    indices = tuple(indices)
    if len(set(indices)) != len(indices):
        raise ValueError(f"repeated index in {indices}")
    out = Poly.const(n_vars, 1)
    for i in range(len(indices)):
        for j in range(i + 1, len(indices)):
            out = out * (
                Poly.var(n_vars, indices[i]) - Poly.var(n_vars, indices[j])
            )
    return out


def specht_s(tab: Tableau | Sequence[Sequence[int]], n_vars: int | None = None) -> Poly:
    """Product of the column Vandermonde determinants of the tableau."""
    rows = tab.rows if isinstance(tab, Tableau) else tuple(tuple(r) for r in tab)
    if n_vars is None:
        n_vars = sum(len(r) for r in rows)
    out = Poly.const(n_vars, 1)
    for col in _columns(rows):
        out = out * vandermonde(n_vars, col)
    return out


def specht_b(bt: Bitableau) -> Poly:
    """spe_T(x^2) * spe_S(x^2) * product of the right-hand variables."""
    n = bt.n
    f = specht_s(bt.left, n).substitute_squares()
    f = f * specht_s(bt.right, n).substitute_squares()
    for r in bt.right:
        for j in r:
            f = f * Poly.var(n, j)
    return f


def specht_d(bt: Bitableau, sign: int) -> Poly:
    """spe_B(T,S) + sign * spe_B(S,T) for an equal-shape bitableau."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    lam, mu = bt.shape
    if lam != mu:
        raise ValueError(f"equal shapes required, got {lam} vs {mu}")
    return specht_b(bt) + specht_d_partner(bt) * sign


def specht_d_partner(bt: Bitableau) -> Poly:
    return specht_b(bt.swapped())


def column_pair_count(lam: Partition) -> int:
    """Sum over columns of C(height, 2): the Vandermonde factor count."""
    return sum(math.comb(h, 2) for h in conjugate(lam))


def b_specht_degree(lam: Partition, mu: Partition) -> int:
    """Degree of any B-Specht polynomial of shape (lam, mu)."""
    return 2 * (column_pair_count(lam) + column_pair_count(mu)) + sum(mu)


def _orbit(base_polys: Sequence[Poly], n: int) -> tuple[Poly, ...]:
    """S_n-orbit of the base polynomials, deduplicated up to sign, sorted."""
    seen: dict = {}
    for g in groups.enumerate_group("S", n):
        for f in base_polys:
            h = groups.act(g, f).sign_normalized()
            if not h.is_zero():
                seen.setdefault(hash(h), []).append(h)
    dedup: list[Poly] = []
    for bucket in seen.values():
        for h in bucket:
            if h not in dedup[-len(bucket) :] and h not in dedup:
                dedup.append(h)
    dedup.sort(key=lambda p: sorted(p.terms, key=lambda m: m, reverse=True))
    return tuple(dedup)


def generator_set(kind: str, shape, n_vars: int | None = None) -> GeneratorSet:
    """Homogeneous generating family of the Specht ideal of the given shape.

    S: shape is a partition of n.  B: an ordered bipartition.  D: a
    Dipartition; pairs concatenate the orbits of both orientations, signed
    shapes take the orbit of one +/- combination.
    """
    if kind == "S":
        lam = check_partition(shape)
        n = sum(lam)
        if n_vars is not None and n_vars != n:
            raise ValueError("ambient size must equal the partition size")
        base = [specht_s(base_tableau(lam), n)] if n else [Poly.const(max(n, 1), 1)]
        label = "S:" + str(lam)
        return GeneratorSet(max(n, 1), "S", label, _orbit(base, max(n, 1)))
    if kind == "B":
        lam, mu = shape
        lam, mu = check_partition(lam), check_partition(mu)
        n = sum(lam) + sum(mu)
        if n_vars is not None and n_vars != n:
            raise ValueError("ambient size must equal the bipartition size")
        base = [specht_b(base_bitableau(lam, mu))]
        label = f"B:{lam}|{mu}"
        return GeneratorSet(n, "B", label, _orbit(base, n))
    if kind == "D":
        if not isinstance(shape, Dipartition):
            raise ValueError("D shapes must be Dipartition values")
        n = shape.n
        if n_vars is not None and n_vars != n:
            raise ValueError("ambient size must equal the dipartition size")
        if shape.is_signed:
            base = [specht_d(base_bitableau(shape.lam, shape.lam), shape.sign)]
        else:
            base = [
                specht_b(base_bitableau(shape.first, shape.second)),
                specht_b(base_bitableau(shape.second, shape.first)),
            ]
        return GeneratorSet(n, "D", "D:" + shape.label(), _orbit(base, n))
    raise ValueError(f"unknown kind {kind!r}")

"""Partitions, bipartitions, dipartitions and their three partial orders.

Partitions are tuples of weakly decreasing positive integers (no stored
zeros; reading past the end gives 0).  A bipartition is an ordered pair of
partitions.  A dipartition is an unordered pair of distinct partitions,
stored in a canonical order (size ascending, then lex), or a signed shape
{lam, +/-} with lam a partition of n/2.

The orders:
  dominance      mu <= lam    iff all prefix sums of mu are <= those of lam
  bidominance    (l,m)<=(w,t) iff prefix sums of l+m dominate AND
                              l_j + prefix_{j-1}(l+m) <= w_j + prefix_{j-1}(w+t)
  didominance    the disjunctive extension to unordered pairs, with
                 {lam,+} and {lam,-} incomparable
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

Partition = tuple[int, ...]
Bipartition = tuple[Partition, Partition]


def check_partition(lam: Sequence[int]) -> Partition:
    lam = tuple(lam)
    if any(p <= 0 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {lam}")
    return lam


def part(lam: Partition, j: int) -> int:
    """j-th part (0-based), reading 0 past the end."""
    return lam[j] if 0 <= j < len(lam) else 0


def partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lex order: (n) first, (1,...,1) last."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []

    def rec(rest: int, biggest: int, acc: list[int]) -> None:
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, biggest), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return out


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def fusion(a: Partition, b: Partition) -> Partition:
    """Sorted concatenation of the two part multisets."""
    return tuple(sorted(a + b, reverse=True))


def entrywise_sum(a: Partition, b: Partition) -> Partition:
    """(a_1+b_1, a_2+b_2, ...): the partition whose prefix sums add."""
    return tuple(
        part(a, i) + part(b, i) for i in range(max(len(a), len(b)))
    )


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    if sum(mu) != sum(lam):
        raise ValueError(f"sizes differ: {sum(mu)} vs {sum(lam)}")
    s_m = s_l = 0
    for j in range(max(len(mu), len(lam))):
        s_m += part(mu, j)
        s_l += part(lam, j)
        if s_m > s_l:
            return False
    return True


def bidominance_leq(p: Bipartition, q: Bipartition) -> bool:
    (lam, mu), (om, th) = p, q
    n = sum(lam) + sum(mu)
    if n != sum(om) + sum(th):
        raise ValueError("bipartition sizes differ")
    ps = qs = 0  # prefix sums of (lam+mu) resp. (om+th) through j-1
    for j in range(n):
        if part(lam, j) + ps > part(om, j) + qs:
            return False
        ps += part(lam, j) + part(mu, j)
        qs += part(om, j) + part(th, j)
        if ps > qs:
            return False
    return True


@dataclass(frozen=True)
class Dipartition:
    """Unordered pair of distinct partitions, or a signed half-size shape.

    parts is (a, b) in canonical order for a pair, (lam,) for a signed
    shape; sign is 0 for pairs and +1/-1 for signed shapes.
    """

    parts: tuple[Partition, ...]
    sign: int = 0

    @staticmethod
    def pair(a: Sequence[int], b: Sequence[int]) -> Dipartition:
        a, b = check_partition(a), check_partition(b)
        if a == b:
            raise ValueError("a pair dipartition needs distinct partitions")
        key = lambda t: (sum(t), t)
        if key(a) > key(b):
            a, b = b, a
        return Dipartition((a, b), 0)

    @staticmethod
    def signed(lam: Sequence[int], sign: int) -> Dipartition:
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return Dipartition((check_partition(lam),), sign)

    @property
    def is_signed(self) -> bool:
        return self.sign != 0

    @property
    def first(self) -> Partition:
        return self.parts[0]

    @property
    def second(self) -> Partition:
        if self.is_signed:
            raise ValueError("signed dipartition has no second partition")
        return self.parts[1]

    @property
    def lam(self) -> Partition:
        if not self.is_signed:
            raise ValueError("not a signed dipartition")
        return self.parts[0]

    @property
    def n(self) -> int:
        if self.is_signed:
            return 2 * sum(self.parts[0])
        return sum(self.parts[0]) + sum(self.parts[1])

    def label(self) -> str:
        if self.is_signed:
            return partition_label(self.lam) + ("|+" if self.sign > 0 else "|-")
        return partition_label(self.first) + "|" + partition_label(self.second)

    def __str__(self) -> str:
        return self.label()

    def sort_key(self):
        return (self.sign != 0, self.parts, self.sign)


def dipartitions(n: int) -> list[Dipartition]:
    """All dipartitions of n, deterministic order; n = 0 is rejected."""
    if n < 1:
        raise ValueError("dipartitions need n >= 1")
    out: list[Dipartition] = []
    seen: set[tuple] = set()
    for k in range(n // 2 + 1):
        for a in partitions(k):
            for b in partitions(n - k):
                if a == b:
                    out.append(Dipartition.signed(a, +1))
                    out.append(Dipartition.signed(a, -1))
                else:
                    d = Dipartition.pair(a, b)
                    if d.parts not in seen:
                        seen.add(d.parts)
                        out.append(d)
    return out


def _pre_leq(ab: Bipartition, cd: Bipartition) -> bool:
    """The auxiliary relation on multisets {a,b} vs {c,d} of partitions."""
    (a, b), (c, d) = ab, cd
    return (bidominance_leq((a, b), (c, d)) or bidominance_leq((a, b), (d, c))) and (
        bidominance_leq((b, a), (c, d)) or bidominance_leq((b, a), (d, c))
    )


def didominance_leq(A: Dipartition, B: Dipartition) -> bool:
    if A.n != B.n:
        raise ValueError(f"sizes differ: {A.n} vs {B.n}")
    if A == B:
        return True
    if A.is_signed and B.is_signed:
        if A.lam == B.lam:
            return False  # opposite signs are incomparable
        return _pre_leq((A.lam, A.lam), (B.lam, B.lam))
    if A.is_signed:
        return _pre_leq((A.lam, A.lam), (B.first, B.second))
    if B.is_signed:
        return _pre_leq((A.first, A.second), (B.lam, B.lam))
    return _pre_leq((A.first, A.second), (B.first, B.second))


def hasse(elements: Sequence, leq: Callable) -> list[tuple[int, int]]:
    """Cover edges (i, j) with elements[i] covered by elements[j].

    Plain O(m^3) transitive reduction over the strict relation matrix;
    poset sizes stay in the hundreds here.
    """
    m = len(elements)
    strict = [
        [i != j and leq(elements[i], elements[j]) for j in range(m)] for i in range(m)
    ]
    edges = []
    for i in range(m):
        row = strict[i]
        for j in range(m):
            if row[j] and not any(row[k] and strict[k][j] for k in range(m)):
                edges.append((i, j))
    return edges


def signed_covers(lam: Partition, n: int | None = None) -> list[Dipartition]:
    """The dipartitions covered by {lam,+/-}: one-box moves row p -> p+1.

    For every p with lam_p > lam_{p+1} the cover is {theta, omega} with
    theta = lam minus a box in row p and omega = lam plus a box in row p+1.
    """
    lam = check_partition(lam)
    if n is not None and n != 2 * sum(lam):
        raise ValueError("n must be twice the size of lam")
    out = []
    for p in range(len(lam)):
        if lam[p] > part(lam, p + 1):
            theta = tuple(v for v in lam[:p] + (lam[p] - 1,) + lam[p + 1 :] if v)
            omega = lam[: p + 1] + (part(lam, p + 1) + 1,) + lam[p + 2 :]
            out.append(Dipartition.pair(theta, omega))
    return out


def _lower_covers_dominance(rho: Partition) -> list[Partition]:
    els = partitions(sum(rho))
    below = [k for k in els if k != rho and dominance_leq(k, rho)]
    return [
        k
        for k in below
        if not any(k != m and m != rho and dominance_leq(k, m) and dominance_leq(m, rho) for m in below)
    ]


def fusion_cover_check(lam: Partition) -> bool:
    """Covers of the doubled partition match the signed covers entrywise.

    Every dominance cover of (2*lam_1, 2*lam_2, ...) must equal theta+omega
    (entrywise) for a signed cover {theta, omega}, and conversely.
    """
    lam = check_partition(lam)
    doubled = tuple(2 * v for v in lam)
    covers = set(_lower_covers_dominance(doubled))
    sums = {entrywise_sum(d.first, d.second) for d in signed_covers(lam)}
    return covers == sums


# -- labels, parsing and poset export --------------------------------------


def partition_label(lam: Partition) -> str:
    return "(" + ",".join(str(p) for p in lam) + ")"


def bipartition_label(bp: Bipartition) -> str:
    return partition_label(bp[0]) + "|" + partition_label(bp[1])


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"partition syntax is '(a,b,c)' or '()': {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    try:
        parts = tuple(int(tok) for tok in body.split(","))
    except ValueError:
        raise ValueError(f"bad partition {text!r}") from None
    return check_partition(parts)


def parse_shape(text: str, group: str):
    """Parse a shape flag: S partition, B ordered pair, D pair or signed.

    Accepts an optional enclosing pair of parentheses around the whole
    '<partition>|<partition>' form.
    """
    text = text.strip()
    if group == "S":
        return parse_partition(text)
    if text.startswith("(") and text.endswith(")") and "|" in text[1:-1]:
        depth = 0
        balanced = True
        for ch in text[1:-1]:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth < 0:
                    balanced = False
                    break
        if balanced and depth == 0:
            text = text[1:-1].strip()
    if "|" not in text:
        raise ValueError(f"shape {text!r} needs the form '<partition>|<partition>'")
    left, right = text.split("|", 1)
    left, right = left.strip(), right.strip()
    if group == "B":
        return (parse_partition(left), parse_partition(right))
    if group == "D":
        if right in ("+", "-"):
            return Dipartition.signed(parse_partition(left), 1 if right == "+" else -1)
        return Dipartition.pair(parse_partition(left), parse_partition(right))
    raise ValueError(f"unknown group {group!r}")


def poset_to_json(labels: Sequence[str], edges: Sequence[tuple[int, int]]) -> dict:
    return {"nodes": list(labels), "edges": [list(e) for e in edges]}


def poset_to_dot(labels: Sequence[str], edges: Sequence[tuple[int, int]]) -> str:
    lines = ["digraph poset {"]
    for i, lab in enumerate(labels):
        lines.append(f'  n{i} [label="{lab}"];')
    for i, j in edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines)

"""Integer partitions, Young tableaux and hook-length dimension counts.

Partitions are plain tuples of positive integers in non-increasing order;
the empty tuple is the empty partition.  Alphabets are strictly increasing
tuples of non-negative integers.  Everything in this module is exact
integer arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

Partition = tuple[int, ...]
Alphabet = tuple[int, ...]

#: Cell budget for the exhaustive standard-tableau counter (factorial search).
BRUTE_FORCE_LIMIT = 10


class PartitionSizeError(ValueError):
    """Raised when a combinatorial routine is asked to exceed its size guard."""


def validate_partition(lam: Partition) -> Partition:
    """Check non-increasing positive parts; return the tuple unchanged."""
    lam = tuple(lam)
    for part in lam:
        if not isinstance(part, int) or part <= 0:
            raise ValueError(f"partition parts must be positive integers, got {lam!r}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be non-increasing, got {lam!r}")
    return lam


def validate_alphabet(letters: Alphabet, length: int | None = None) -> Alphabet:
    """Check strictly increasing non-negative letters, optionally of fixed length."""
    letters = tuple(letters)
    if any(not isinstance(k, int) or k < 0 for k in letters):
        raise ValueError(f"alphabet letters must be non-negative integers, got {letters!r}")
    if any(letters[i] >= letters[i + 1] for i in range(len(letters) - 1)):
        raise ValueError(f"alphabet must be strictly increasing, got {letters!r}")
    if length is not None and len(letters) != length:
        raise ValueError(f"alphabet length {len(letters)} does not match partition length {length}")
    return letters


def weight(lam: Partition) -> int:
    return sum(lam)


def factorial_product(lam: Partition) -> int:
    """lambda! = product of the factorials of the parts."""
    out = 1
    for part in lam:
        out *= factorial(part)
    return out


def enumerate_partitions(n: int, max_len: int | None = None) -> list[Partition]:
    """All partitions of ``n`` (length <= ``max_len``) in reverse-lexicographic order.

    The order is deterministic: (n) first, (1,)*n last.  n = 0 yields the
    single empty partition.
    """
    if n < 0:
        raise ValueError("weight must be non-negative")
    out: list[Partition] = []

    def descend(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if max_len is not None and len(prefix) >= max_len:
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            descend(remaining - part, part, prefix)
            prefix.pop()

    descend(n, n if n else 1, [])
    return out


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence (oracle for enumeration)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        total += sign * (partition_count(n - g1) + partition_count(n - g2))
        k += 1
    return total


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram; an involution."""
    lam = validate_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def hook_lengths(lam: Partition) -> list[list[int]]:
    """Hook length arm + leg + 1 for every cell of the diagram."""
    lam = validate_partition(lam)
    lam_t = conjugate(lam)
    return [
        [lam[i] - (j + 1) + lam_t[j] - (i + 1) + 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


def hook_dimension(lam: Partition) -> int:
    """Number of standard tableaux of shape ``lam`` via the hook formula n!/prod(hooks)."""
    lam = validate_partition(lam)
    n = weight(lam)
    denom = 1
    for row in hook_lengths(lam):
        for h in row:
            denom *= h
    num = factorial(n)
    if num % denom != 0:
        raise ArithmeticError(
            f"hook product {denom} does not divide {n}! for shape {lam!r}; "
            "this indicates a bug in the hook computation"
        )
    return num // denom


def multinomial_dim(lam: Partition) -> int:
    """n!/lambda!, the number of words with letter multiplicities ``lam``."""
    lam = validate_partition(lam)
    return factorial(weight(lam)) // factorial_product(lam)


def count_standard_tableaux_bruteforce(lam: Partition) -> int:
    """Count standard tableaux by checking every filling of the diagram.

    Deliberately independent of the hook formula: place 1..n in row-major
    order through all permutations and keep the fillings that increase
    along rows and down columns.  Guarded at |lambda| <= BRUTE_FORCE_LIMIT.
    """
    lam = validate_partition(lam)
    n = weight(lam)
    if n > BRUTE_FORCE_LIMIT:
        raise PartitionSizeError(f"brute-force count limited to weight {BRUTE_FORCE_LIMIT}, got {n}")
    if n == 0:
        return 1
    starts = [0]
    for part in lam:
        starts.append(starts[-1] + part)
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        ok = True
        for i, part in enumerate(lam):
            base = starts[i]
            for j in range(part):
                val = perm[base + j]
                if j > 0 and perm[base + j - 1] >= val:
                    ok = False
                    break
                if i > 0 and lam[i - 1] >= j + 1 and perm[starts[i - 1] + j] >= val:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram, stored row by row."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            raise ValueError("tableau rows do not match the shape")

    def content(self, alphabet_size: int) -> tuple[int, ...]:
        """Multiplicity of each letter 1..alphabet_size in the filling."""
        counts = [0] * alphabet_size
        for row in self.rows:
            for entry in row:
                counts[entry - 1] += 1
        return tuple(counts)

    def is_semistandard(self) -> bool:
        for row in self.rows:
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                return False
        for i in range(1, len(self.rows)):
            upper, lower = self.rows[i - 1], self.rows[i]
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                return False
        return True


def semistandard_tableaux(lam: Partition, alphabet_size: int) -> list[Tableau]:
    """All semistandard fillings of ``lam`` with entries in 1..alphabet_size.

    Rows weakly increase, columns strictly increase.  Guarded at
    |lambda| <= 8 and alphabet_size <= 6 so enumeration stays instant.
    """
    lam = validate_partition(lam)
    if weight(lam) > 8 or alphabet_size > 6:
        raise PartitionSizeError("semistandard enumeration limited to weight 8, alphabet 6")
    if not lam:
        return [Tableau((), ())]
    if len(lam) > alphabet_size:
        return []  # first column cannot strictly increase
    results: list[Tableau] = []
    rows: list[tuple[int, ...]] = []

    def fill_row(i: int) -> None:
        if i == len(lam):
            results.append(Tableau(lam, tuple(rows)))
            return
        width = lam[i]
        row = [0] * width

        def fill_cell(j: int) -> None:
            if j == width:
                rows.append(tuple(row))
                fill_row(i + 1)
                rows.pop()
                return
            lo = row[j - 1] if j > 0 else 1
            if i > 0:
                lo = max(lo, rows[i - 1][j] + 1)
            for val in range(lo, alphabet_size + 1):
                row[j] = val
                fill_cell(j + 1)

        fill_cell(0)

    fill_row(0)
    return results

"""Citation vectors and the geometric indices computed from them.

A citation vector records per-publication citation counts as positive
integers sorted in descending order.  The empty tuple is a valid vector
(a researcher with no cited publications) and every index maps it to 0.
Everything in this module is a pure function over plain tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

Vector = tuple[int, ...]

#: Absolute tolerance for every floating-point comparison in the package.
TOLERANCE = 1e-9

INFLUENTIAL = "influential"
PROLIFIC = "prolific"
BALANCED = "balanced"
EMPTY = "empty"


def close(a: float, b: float, tol: float = TOLERANCE) -> bool:
    return abs(a - b) <= tol


def make_vector(raw: Iterable[int]) -> Vector:
    """Normalise raw citation counts into a citation vector.

    Zero entries are dropped (uncited publications carry no index weight)
    and the rest are sorted descending.  Negative counts are rejected with
    the offending position named.
    """
    values = list(raw)
    for pos, value in enumerate(values):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"citation count at position {pos} is not an integer: {value!r}")
        if value < 0:
            raise ValueError(f"negative citation count {value} at position {pos}")
    return tuple(sorted((v for v in values if v > 0), reverse=True))


def is_valid_vector(x: object) -> bool:
    """True for a tuple of positive integers in descending order."""
    if not isinstance(x, tuple):
        return False
    for v in x:
        if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
            return False
    return all(x[i] >= x[i + 1] for i in range(len(x) - 1))


def is_uniform(x: Vector) -> bool:
    """True when every publication has the same citation count.

    The empty vector is uniform vacuously.
    """
    return len(x) == 0 or x[0] == x[-1]


def citation_count(x: Vector) -> int:
    """Total number of citations (the L1 norm)."""
    return sum(x)


# ---------------------------------------------------------------------------
# rec and chi: the largest rectangle under the citation curve
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RecAnalysis:
    """Largest-rectangle analysis of a citation vector.

    ``value`` is the maximal area i * x_i over publication ranks i.  A
    maximizing rectangle is ``width`` publications wide (the smallest
    maximizer; ``maximizers`` holds all of them) and ``height = x_width``
    citations tall.  The classification compares the two dimensions:
    taller than wide is ``influential``, wider than tall is ``prolific``,
    square is ``balanced``.
    """

    value: int
    maximizers: tuple[int, ...]
    width: int | None
    height: int | None
    classification: str


def rec(x: Vector) -> int:
    """max over i of i * x_i, the area of the largest dominated rectangle."""
    best = 0
    for i, c in enumerate(x, 1):
        area = i * c
        if area > best:
            best = area
    return best


def rec_index(x: Vector) -> RecAnalysis:
    """Full rectangle analysis: value, maximizer set, and classification."""
    if not x:
        return RecAnalysis(0, (), None, None, EMPTY)
    areas = [i * c for i, c in enumerate(x, 1)]
    value = max(areas)
    maximizers = tuple(i for i, a in enumerate(areas, 1) if a == value)
    width = maximizers[0]
    height = x[width - 1]
    if height > width:
        classification = INFLUENTIAL
    elif height < width:
        classification = PROLIFIC
    else:
        classification = BALANCED
    return RecAnalysis(value, maximizers, width, height, classification)


def chi_index(x: Vector) -> float:
    """Square root of rec; geometrically the side of the equivalent square."""
    return math.sqrt(rec(x))


def h_index(x: Vector) -> int:
    """Largest h such that at least h publications have h citations each."""
    h = 0
    for i, c in enumerate(x, 1):
        if c < i:
            break
        h = i
    return h


@dataclass(frozen=True)
class AuxIndices:
    publication_count: int
    max_citation: int
    euclidean: float
    g_index: int
    w_index: int


def aux_indices(x: Vector) -> AuxIndices:
    """Companion indices: n, x_1, Euclidean length, g-index and w-index.

    g is the largest rank whose cumulative citations reach g^2 (no
    zero-padding beyond the actual publication list); w is the largest w
    such that the top w publications have at least w, w-1, ..., 1
    citations respectively.
    """
    n = len(x)
    total = 0
    g = 0
    for i, c in enumerate(x, 1):
        total += c
        if total >= i * i:
            g = i
        else:
            break
    w = 0
    for cand in range(n, 0, -1):
        if all(x[i - 1] >= cand - i + 1 for i in range(1, cand + 1)):
            w = cand
            break
    return AuxIndices(
        publication_count=n,
        max_citation=x[0] if x else 0,
        euclidean=math.sqrt(sum(c * c for c in x)),
        g_index=g,
        w_index=w,
    )


# ---------------------------------------------------------------------------
# conjugation and the two one-sided rec variants
# ---------------------------------------------------------------------------


def conjugate(x: Vector) -> Vector:
    """Reflect the citation diagram: entry i counts publications with >= i citations."""
    if not x:
        return ()
    counts = [0] * x[0]
    for c in x:
        for i in range(c):
            counts[i] += 1
    return tuple(counts)


@dataclass(frozen=True)
class RecVariants:
    """rec restricted to each side of the diagram's diagonal.

    ``influence`` maximises i * x_i over ranks with i <= x_i (rectangles at
    least as tall as wide); ``prolificity`` is the same quantity computed
    on the conjugate vector.
    """

    influence: int
    prolificity: int


def rec_variants(x: Vector) -> RecVariants:
    def one_sided(v: Vector) -> int:
        best = 0
        for i, c in enumerate(v, 1):
            if i <= c and i * c > best:
                best = i * c
        return best

    return RecVariants(one_sided(x), one_sided(conjugate(x)))


# ---------------------------------------------------------------------------
# order and growth operations
# ---------------------------------------------------------------------------


def dominates(x: Vector, y: Vector) -> bool:
    """True when x is dominated by y: y has at least as many publications
    and at least as many citations at every rank."""
    return len(x) <= len(y) and all(a <= b for a, b in zip(x, y))


def scale(x: Vector, factor: int) -> Vector:
    """Multiply every citation count by a positive integer factor."""
    if not isinstance(factor, int) or isinstance(factor, bool) or factor < 1:
        raise ValueError(f"scale factor must be a positive integer, got {factor!r}")
    return tuple(c * factor for c in x)


def valid_positions(x: Vector) -> list[int]:
    """1-based ranks where a single citation may be added.

    A citation can only go to the first publication of each equal-count
    run (keeping the vector sorted), or open a new publication at rank
    n + 1.
    """
    positions = []
    for k in range(1, len(x) + 1):
        if k == 1 or x[k - 1] != x[k - 2]:
            positions.append(k)
    positions.append(len(x) + 1)
    return positions


def add_citation_at(x: Vector, k: int) -> Vector:
    """Add one citation to the publication at rank k.

    ``k = n + 1`` records a new publication with a single citation.  The
    rank must be the first of its equal-count run so the result stays
    sorted; anything else is rejected.
    """
    n = len(x)
    if not isinstance(k, int) or isinstance(k, bool) or k < 1 or k > n + 1:
        raise ValueError(f"position {k} out of range 1..{n + 1}")
    if k == n + 1:
        return x + (1,)
    if k > 1 and x[k - 2] == x[k - 1]:
        first = x.index(x[k - 1]) + 1
        raise ValueError(
            f"cannot add a citation at position {k}: position {first} has the "
            f"same count {x[k - 1]} and must receive it first"
        )
    return x[: k - 1] + (x[k - 1] + 1,) + x[k:]


def add_one_to_all(x: Vector) -> Vector:
    """Give every existing publication one extra citation."""
    return tuple(c + 1 for c in x)


def max_uniform_dominated(x: Vector) -> Vector:
    """The heaviest uniform vector dominated by x (shortest on ties).

    For width j the best dominated uniform is x_j repeated j times, so the
    answer is the rectangle at the smallest rec maximizer.
    """
    if not x:
        return ()
    analysis = rec_index(x)
    assert analysis.width is not None and analysis.height is not None
    return (analysis.height,) * analysis.width

"""Executable property checkers for citation indices over finite domains.

Each axiom id names one checker.  A checker exhaustively scans a finite
domain and returns either a clean verdict or the first counterexample in
canonical enumeration order; every counterexample carries enough data to
be replayed independently of the scan that found it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from . import sequences
from .core import (
    TOLERANCE,
    Vector,
    add_citation_at,
    add_one_to_all,
    chi_index,
    citation_count,
    conjugate,
    dominates,
    h_index,
    is_uniform,
    make_vector,
    rec,
    scale,
    valid_positions,
)
from .enumeration import (
    DEFAULT_SAMPLE_SIZE,
    EXHAUSTIVE_BUDGET,
    DomainBudgetError,
    DomainSpec,
    count_vectors,
    enumerate_uniform_dominated,
    enumerate_vectors,
    sample_vectors,
)

SATISFIED = "satisfied-on-domain"
VIOLATED = "violated"

#: Search-effort cap used when the uniform-increment checker confirms an
#: absence through the sequence search.
UI_SEARCH_BUDGET = 1_000_000


class AxiomId(str, Enum):
    """Closed set of checkable properties."""

    MONOTONICITY = "M"
    STRICT_MONOTONICITY = "SM"
    SCALE_INVARIANCE = "SI"
    SELF_CONJUGACY = "SC"
    RECTANGLE_COMPLETION = "RC"
    UNIFORM_CITATION = "UC"
    UNIFORM_EQUIVALENCE = "UE"
    CITATION_INCREASE = "CI"
    UNIFORM_MONOTONICITY = "UM"
    UNIFORM_SINGLE_CITATION = "USC"
    UNIFORM_INCREMENT = "UI"
    RANK_INDEPENDENCE = "RANK_IND"
    RANK_SCALE_INVARIANCE = "RANK_SI"


DESCRIPTIONS = {
    AxiomId.MONOTONICITY: "f never decreases along domination",
    AxiomId.STRICT_MONOTONICITY: "f strictly increases along strict domination",
    AxiomId.SCALE_INVARIANCE: "scaling citations by C scales f by C",
    AxiomId.SELF_CONJUGACY: "f is unchanged by conjugation",
    AxiomId.RECTANGLE_COMPLETION: "f(x + citation at k) = max(f(x), k * (x_k + 1))",
    AxiomId.UNIFORM_CITATION: "on uniform vectors f equals the citation count",
    AxiomId.UNIFORM_EQUIVALENCE: "some dominated uniform vector has the same f",
    AxiomId.CITATION_INCREASE: "one citation to every publication raises f",
    AxiomId.UNIFORM_MONOTONICITY: "monotone when the dominated side is uniform",
    AxiomId.UNIFORM_SINGLE_CITATION: "f of n singly-cited publications is n",
    AxiomId.UNIFORM_INCREMENT: "an f-incremental constructive sequence exists",
    AxiomId.RANK_INDEPENDENCE: "adding the same new publication preserves ranking",
    AxiomId.RANK_SCALE_INVARIANCE: "scaling both records preserves ranking",
}


@dataclass(frozen=True)
class IndexUnderTest:
    name: str
    evaluate: Callable[[Vector], float]


def make_index(name: str, evaluate: Callable[[Vector], float]) -> IndexUnderTest:
    """Wrap an index function, enforcing the zero baseline on registration."""
    baseline = evaluate(())
    if abs(baseline) > TOLERANCE:
        raise ValueError(f"index {name!r} maps the empty vector to {baseline!r}, not 0")
    return IndexUnderTest(name, evaluate)


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of one (index, axiom, domain) check."""

    index: str
    axiom: str
    n_max: int
    c_max: int
    status: str
    counterexample: dict | None = None
    exhaustive: bool = True

    @property
    def ok(self) -> bool:
        return self.status == SATISFIED

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "axiom": self.axiom,
            "n_max": self.n_max,
            "c_max": self.c_max,
            "exhaustive": self.exhaustive,
            "status": self.status,
            "counterexample": _jsonable(self.counterexample),
        }


def _jsonable(obj):
    if isinstance(obj, tuple):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, list):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    return obj


# ---------------------------------------------------------------------------
# index registry
# ---------------------------------------------------------------------------


def _avg_rec_citation(x: Vector) -> float:
    return (rec(x) + citation_count(x)) / 2


def _h_squared(x: Vector) -> int:
    return h_index(x) ** 2


def _publication_count(x: Vector) -> int:
    return len(x)


def _max_citation(x: Vector) -> int:
    return x[0] if x else 0


def _max_n_x1(x: Vector) -> int:
    return max(len(x), x[0]) if x else 0


def _min_n_x1(x: Vector) -> int:
    return min(len(x), x[0]) if x else 0


def _n_times_min(x: Vector) -> int:
    return len(x) * x[-1] if x else 0


REC = make_index("rec", rec)
CHI = make_index("chi", chi_index)
H = make_index("h", h_index)
CITATION_COUNT = make_index("citation_count", citation_count)


def counterexample_registry() -> list[IndexUnderTest]:
    """The eight indices used to separate the core properties.

    Apart from rec itself, each is a plausible-looking index that fails
    some property the others keep, which is what makes the independence
    matrix informative.
    """
    return [
        make_index("avg_rec_citation", _avg_rec_citation),
        make_index("h_squared", _h_squared),
        make_index("publication_count", _publication_count),
        make_index("max_citation", _max_citation),
        make_index("max_n_x1", _max_n_x1),
        make_index("min_n_x1", _min_n_x1),
        make_index("n_times_min", _n_times_min),
        REC,
    ]


# ---------------------------------------------------------------------------
# checker plumbing
# ---------------------------------------------------------------------------


def _sign(a: float, b: float) -> int:
    if abs(a - b) <= TOLERANCE:
        return 0
    return 1 if a > b else -1


class _Eval:
    """Memoised evaluation of one index over many vectors."""

    def __init__(self, index: IndexUnderTest) -> None:
        self._fn = index.evaluate
        self._cache: dict[Vector, float] = {}

    def __call__(self, v: Vector) -> float:
        try:
            return self._cache[v]
        except KeyError:
            value = self._cache[v] = self._fn(v)
            return value


def _domain_vectors(spec: DomainSpec, sample_size: int) -> tuple[list[Vector], bool]:
    size = count_vectors(spec.n_max, spec.c_max)
    if size <= EXHAUSTIVE_BUDGET:
        return list(enumerate_vectors(spec)), True
    if spec.seed is None:
        raise DomainBudgetError(
            f"domain {spec.n_max}x{spec.c_max} holds {size} vectors, above the "
            f"exhaustive budget of {EXHAUSTIVE_BUDGET}; supply a seed for a "
            f"sampled (non-exhaustive) scan"
        )
    return sample_vectors(spec, sample_size), False


def _uniform_box_vectors(spec: DomainSpec) -> list[Vector]:
    uniforms = [()] + [(c,) * j for j in range(1, spec.n_max + 1) for c in range(1, spec.c_max + 1)]
    return sorted(uniforms, key=lambda v: (citation_count(v), len(v), v))


# --- individual checkers ----------------------------------------------------
# Each returns the first counterexample in scan order, or None.


def _check_m(ev, vectors, spec, exhaustive):
    if exhaustive:
        # Domination is generated by single-citation additions, so scanning
        # those edges decides the verdict; the pair scan only runs when a
        # witness must be reported.
        in_box = set(vectors)
        clean = True
        for v in vectors:
            fv = ev(v)
            for k in valid_positions(v):
                w = add_citation_at(v, k)
                if w in in_box and ev(w) < fv - TOLERANCE:
                    clean = False
                    break
            if not clean:
                break
        if clean:
            return None
    for x in vectors:
        fx = ev(x)
        for y in vectors:
            if dominates(x, y) and fx > ev(y) + TOLERANCE:
                return {"x": x, "y": y, "f_x": fx, "f_y": ev(y)}
    return None


def _check_sm(ev, vectors, spec, exhaustive):
    if exhaustive:
        in_box = set(vectors)
        clean = True
        for v in vectors:
            fv = ev(v)
            for k in valid_positions(v):
                w = add_citation_at(v, k)
                if w in in_box and ev(w) <= fv + TOLERANCE:
                    clean = False
                    break
            if not clean:
                break
        if clean:
            return None
    for x in vectors:
        fx = ev(x)
        for y in vectors:
            if x != y and dominates(x, y) and ev(y) <= fx + TOLERANCE:
                return {"x": x, "y": y, "f_x": fx, "f_y": ev(y)}
    return None


def _check_si(ev, vectors, spec, exhaustive):
    for x in vectors:
        fx = ev(x)
        for factor in range(1, spec.c_max + 1):
            scaled = ev(scale(x, factor))
            if abs(scaled - factor * fx) > TOLERANCE:
                return {"x": x, "factor": factor, "f_x": fx, "f_scaled": scaled}
    return None


def _check_sc(ev, vectors, spec, exhaustive):
    for x in vectors:
        p = conjugate(x)
        if abs(ev(x) - ev(p)) > TOLERANCE:
            return {"x": x, "conjugate": p, "f_x": ev(x), "f_conjugate": ev(p)}
    return None


def _check_rc(ev, vectors, spec, exhaustive):
    for x in vectors:
        fx = ev(x)
        for k in valid_positions(x):
            grown = add_citation_at(x, k)
            old = x[k - 1] if k <= len(x) else 0
            expected = max(fx, k * (old + 1))
            if abs(ev(grown) - expected) > TOLERANCE:
                return {
                    "x": x,
                    "position": k,
                    "extended": grown,
                    "f_extended": ev(grown),
                    "expected": expected,
                }
    return None


def _check_uc(ev, vectors, spec, exhaustive):
    for u in _uniform_box_vectors(spec):
        if abs(ev(u) - citation_count(u)) > TOLERANCE:
            return {"x": u, "f_x": ev(u), "citation_count": citation_count(u)}
    return None


def _check_ue(ev, vectors, spec, exhaustive):
    for x in vectors:
        fx = ev(x)
        candidates = list(enumerate_uniform_dominated(x))
        if not any(abs(ev(u) - fx) <= TOLERANCE for u in candidates):
            return {
                "x": x,
                "f_x": fx,
                "candidates": [[u, ev(u)] for u in candidates],
            }
    return None


def _check_ci(ev, vectors, spec, exhaustive):
    for x in vectors:
        if not x:
            continue  # no publications means nothing receives a citation
        grown = add_one_to_all(x)
        if ev(grown) <= ev(x) + TOLERANCE:
            return {"x": x, "incremented": grown, "f_x": ev(x), "f_incremented": ev(grown)}
    return None


def _check_um(ev, vectors, spec, exhaustive):
    for u in _uniform_box_vectors(spec):
        fu = ev(u)
        for y in vectors:
            if dominates(u, y) and fu > ev(y) + TOLERANCE:
                return {"x": u, "y": y, "f_x": fu, "f_y": ev(y)}
    return None


def _check_usc(ev, vectors, spec, exhaustive):
    for j in range(0, spec.n_max + 1):
        ones = (1,) * j
        if abs(ev(ones) - j) > TOLERANCE:
            return {"x": ones, "f_x": ev(ones), "citation_count": j}
    return None


def _check_ui(ev, vectors, spec, exhaustive):
    if not exhaustive:
        raise DomainBudgetError(
            "the uniform-increment check needs an exhaustive domain; "
            "sampled vectors are not closed under removing citations"
        )
    # Reachability under "strict increases must land uniform" does not
    # depend on the eventual target (every prefix of a constructive
    # sequence is dominated by its endpoint), so one bottom-up pass over
    # the domain decides all targets at once.
    reachable: dict[Vector, bool] = {(): True}
    for v in vectors:
        if not v:
            continue
        fv = ev(v)
        ok = False
        for i in range(len(v)):
            if i == len(v) - 1 or v[i] > v[i + 1]:
                p = v[:i] + (v[i] - 1,) + v[i + 1 :] if v[i] > 1 else v[:i] + v[i + 1 :]
                if reachable[p] and (fv <= ev(p) + TOLERANCE or is_uniform(v)):
                    ok = True
                    break
        reachable[v] = ok
    for v in vectors:
        if not reachable[v]:
            outcome = sequences.search_incremental(v, ev, budget=UI_SEARCH_BUDGET)
            if outcome.status != sequences.ABSENT:
                raise RuntimeError(f"reachability scan disagrees with search at {v}")
            return {"target": v, "note": "no f-incremental constructive sequence"}
    return None


def _order_preserved(ev, vectors, transformed) -> bool:
    # Sign preservation on every pair means the two weak orders coincide:
    # sorted by f, the transformed values must rise exactly where f does.
    ranked = sorted(vectors, key=lambda v: (ev(v), len(v), v))
    for a, b in zip(ranked, ranked[1:]):
        before = _sign(ev(a), ev(b))
        after = _sign(transformed[a], transformed[b])
        if before != after:
            return False
    return True


def _check_rank_ind(ev, vectors, spec, exhaustive):
    for extra in range(1, spec.c_max + 1):
        grown = {v: ev(make_vector(v + (extra,))) for v in vectors}
        if _order_preserved(ev, vectors, grown):
            continue
        for i, x in enumerate(vectors):
            for y in vectors[i + 1 :]:
                if _sign(ev(x), ev(y)) != _sign(grown[x], grown[y]):
                    return {
                        "x": x,
                        "y": y,
                        "added_citations": extra,
                        "before": [ev(x), ev(y)],
                        "after": [grown[x], grown[y]],
                    }
    return None


def _check_rank_si(ev, vectors, spec, exhaustive):
    for factor in range(2, spec.c_max + 1):
        scaled = {v: ev(scale(v, factor)) for v in vectors}
        if _order_preserved(ev, vectors, scaled):
            continue
        for i, x in enumerate(vectors):
            for y in vectors[i + 1 :]:
                if _sign(ev(x), ev(y)) != _sign(scaled[x], scaled[y]):
                    return {
                        "x": x,
                        "y": y,
                        "factor": factor,
                        "before": [ev(x), ev(y)],
                        "after": [scaled[x], scaled[y]],
                    }
    return None


_CHECKERS = {
    AxiomId.MONOTONICITY: _check_m,
    AxiomId.STRICT_MONOTONICITY: _check_sm,
    AxiomId.SCALE_INVARIANCE: _check_si,
    AxiomId.SELF_CONJUGACY: _check_sc,
    AxiomId.RECTANGLE_COMPLETION: _check_rc,
    AxiomId.UNIFORM_CITATION: _check_uc,
    AxiomId.UNIFORM_EQUIVALENCE: _check_ue,
    AxiomId.CITATION_INCREASE: _check_ci,
    AxiomId.UNIFORM_MONOTONICITY: _check_um,
    AxiomId.UNIFORM_SINGLE_CITATION: _check_usc,
    AxiomId.UNIFORM_INCREMENT: _check_ui,
    AxiomId.RANK_INDEPENDENCE: _check_rank_ind,
    AxiomId.RANK_SCALE_INVARIANCE: _check_rank_si,
}


def check_axiom(
    index: IndexUnderTest,
    axiom: AxiomId | str,
    domain: DomainSpec | tuple[int, int],
    sample_size: int = DEFAULT_SAMPLE_SIZE,
) -> AxiomVerdict:
    """Scan one axiom for one index over a finite domain.

    Returns a verdict whose counterexample, if any, is the first in
    canonical enumeration order and replays independently.
    """
    axiom = AxiomId(axiom)
    spec = domain if isinstance(domain, DomainSpec) else DomainSpec(*domain)
    vectors, exhaustive = _domain_vectors(spec, sample_size)
    ev = _Eval(index)
    counterexample = _CHECKERS[axiom](ev, vectors, spec, exhaustive)
    return AxiomVerdict(
        index=index.name,
        axiom=axiom.value,
        n_max=spec.n_max,
        c_max=spec.c_max,
        status=VIOLATED if counterexample is not None else SATISFIED,
        counterexample=counterexample,
        exhaustive=exhaustive,
    )


def replay_counterexample(verdict: AxiomVerdict, index: IndexUnderTest) -> bool:
    """Re-derive a stored counterexample from scratch.

    True when the stored data still exhibits a genuine violation of the
    axiom for the given index, independent of the scan that found it.
    """
    if verdict.counterexample is None:
        return False
    ce = {k: tuple(v) if isinstance(v, list) and k in ("x", "y", "conjugate", "extended", "incremented", "target") else v
          for k, v in verdict.counterexample.items()}
    f = index.evaluate
    axiom = AxiomId(verdict.axiom)
    if axiom == AxiomId.MONOTONICITY:
        return dominates(ce["x"], ce["y"]) and f(ce["x"]) > f(ce["y"]) + TOLERANCE
    if axiom == AxiomId.STRICT_MONOTONICITY:
        return (
            ce["x"] != ce["y"]
            and dominates(ce["x"], ce["y"])
            and f(ce["y"]) <= f(ce["x"]) + TOLERANCE
        )
    if axiom == AxiomId.SCALE_INVARIANCE:
        return abs(f(scale(ce["x"], ce["factor"])) - ce["factor"] * f(ce["x"])) > TOLERANCE
    if axiom == AxiomId.SELF_CONJUGACY:
        return abs(f(ce["x"]) - f(conjugate(ce["x"]))) > TOLERANCE
    if axiom == AxiomId.RECTANGLE_COMPLETION:
        x, k = ce["x"], ce["position"]
        old = x[k - 1] if k <= len(x) else 0
        return abs(f(add_citation_at(x, k)) - max(f(x), k * (old + 1))) > TOLERANCE
    if axiom in (AxiomId.UNIFORM_CITATION, AxiomId.UNIFORM_SINGLE_CITATION):
        return abs(f(ce["x"]) - citation_count(ce["x"])) > TOLERANCE
    if axiom == AxiomId.UNIFORM_EQUIVALENCE:
        fx = f(ce["x"])
        return not any(abs(f(u) - fx) <= TOLERANCE for u in enumerate_uniform_dominated(ce["x"]))
    if axiom == AxiomId.CITATION_INCREASE:
        return f(add_one_to_all(ce["x"])) <= f(ce["x"]) + TOLERANCE
    if axiom == AxiomId.UNIFORM_MONOTONICITY:
        return (
            is_uniform(ce["x"])
            and dominates(ce["x"], ce["y"])
            and f(ce["x"]) > f(ce["y"]) + TOLERANCE
        )
    if axiom == AxiomId.UNIFORM_INCREMENT:
        outcome = sequences.search_incremental(ce["target"], f, budget=UI_SEARCH_BUDGET)
        return outcome.status == sequences.ABSENT
    if axiom == AxiomId.RANK_INDEPENDENCE:
        x, y = ce["x"], ce["y"]
        extra = ce["added_citations"]
        gx, gy = f(make_vector(x + (extra,))), f(make_vector(y + (extra,)))
        return _sign(f(x), f(y)) != _sign(gx, gy)
    if axiom == AxiomId.RANK_SCALE_INVARIANCE:
        x, y = ce["x"], ce["y"]
        factor = ce["factor"]
        return _sign(f(x), f(y)) != _sign(f(scale(x, factor)), f(scale(y, factor)))
    raise ValueError(f"no replay rule for axiom {verdict.axiom!r}")


# ---------------------------------------------------------------------------
# independence matrix and the chi step bound
# ---------------------------------------------------------------------------

INDEPENDENCE_AXIOMS = (
    AxiomId.MONOTONICITY,
    AxiomId.UNIFORM_CITATION,
    AxiomId.UNIFORM_EQUIVALENCE,
)


def expected_independence_pattern() -> dict[str, dict[str, str]]:
    """The documented verdict pattern the independence matrix is compared to.

    Note: exhaustive checking refutes the min_n_x1 / UE cell recorded
    here (x = <2,1> has min(n, x_1) = 2 while every dominated uniform
    vector scores 1), so on any domain with bounds >= 2 the computed
    matrix reports one extra violation.  The claimed pattern is kept
    as-is so the discrepancy stays visible in the comparison.
    """
    rows = {
        "avg_rec_citation": {"M": SATISFIED, "UC": SATISFIED, "UE": VIOLATED},
        "h_squared": {"M": SATISFIED, "UC": VIOLATED, "UE": SATISFIED},
        "publication_count": {"M": SATISFIED, "UC": VIOLATED, "UE": SATISFIED},
        "max_citation": {"M": SATISFIED, "UC": VIOLATED, "UE": SATISFIED},
        "max_n_x1": {"M": SATISFIED, "UC": VIOLATED, "UE": SATISFIED},
        "min_n_x1": {"M": SATISFIED, "UC": VIOLATED, "UE": SATISFIED},
        "n_times_min": {"M": VIOLATED, "UC": SATISFIED, "UE": SATISFIED},
        "rec": {"M": SATISFIED, "UC": SATISFIED, "UE": SATISFIED},
    }
    return rows


def independence_matrix(
    domain: DomainSpec | tuple[int, int],
    sample_size: int = DEFAULT_SAMPLE_SIZE,
) -> dict[str, dict[str, AxiomVerdict]]:
    """Check M, UC and UE for every registry index over one domain."""
    matrix: dict[str, dict[str, AxiomVerdict]] = {}
    for index in counterexample_registry():
        matrix[index.name] = {
            axiom.value: check_axiom(index, axiom, domain, sample_size)
            for axiom in INDEPENDENCE_AXIOMS
        }
    return matrix


def pattern_mismatches(
    matrix: dict[str, dict[str, AxiomVerdict]],
) -> list[tuple[str, str, str, AxiomVerdict]]:
    """Cells where the computed matrix disagrees with the documented pattern."""
    expected = expected_independence_pattern()
    out = []
    for name, row in matrix.items():
        for axiom, verdict in row.items():
            want = expected[name][axiom]
            if verdict.status != want:
                out.append((name, axiom, want, verdict))
    return out


def chi_increment_bound(
    domain: DomainSpec | tuple[int, int],
    sample_size: int = DEFAULT_SAMPLE_SIZE,
) -> AxiomVerdict:
    """Verify chi grows by at most 1 under any single added citation."""
    spec = domain if isinstance(domain, DomainSpec) else DomainSpec(*domain)
    vectors, exhaustive = _domain_vectors(spec, sample_size)
    counterexample = None
    for x in vectors:
        before = chi_index(x)
        for k in valid_positions(x):
            after = chi_index(add_citation_at(x, k))
            if after > before + 1 + TOLERANCE:
                counterexample = {
                    "x": x,
                    "position": k,
                    "chi_before": before,
                    "chi_after": after,
                }
                break
        if counterexample:
            break
    return AxiomVerdict(
        index="chi",
        axiom="CHI_STEP_BOUND",
        n_max=spec.n_max,
        c_max=spec.c_max,
        status=VIOLATED if counterexample else SATISFIED,
        counterexample=counterexample,
        exhaustive=exhaustive,
    )

"""Predicted versus computed invariants for single n and for ranges of n."""

from __future__ import annotations

import enum
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .codes import Basis, LinearCode, PredictedCodeParams, code_from_incidence, predict_code_params
from .distance import (
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_MAX_DUAL_WEIGHT,
    DEFAULT_PARTIAL_BUDGET,
    DEFAULT_SEARCH_BUDGET,
    DistanceResult,
    Kind,
    distance_witness_bound,
    dual_min_distance_by_dependency,
    min_distance_exhaustive,
    min_distance_partial,
    partial_depth,
)
from .graph import (
    INFINITE,
    GraphInvariants,
    PredictedInvariants,
    Sentinel,
    Shape,
    UnitGraph,
    build_unit_graph,
    conjectured_diameter_bound,
    invariants,
    predict,
)
from .ring import Factorization, classify, euler_phi, factorize, is_prime


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"

    def __str__(self) -> str:
        return self.value


class CheckKind(str, enum.Enum):
    THEOREM = "THEOREM"
    CONJECTURE = "CONJECTURE"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Check:
    name: str
    kind: CheckKind
    status: Status
    detail: str = ""


@dataclass(frozen=True)
class Budgets:
    enumeration: int = DEFAULT_ENUMERATION_BUDGET
    partial: int = DEFAULT_PARTIAL_BUDGET
    max_dual_weight: int = DEFAULT_MAX_DUAL_WEIGHT
    search_nodes: int = DEFAULT_SEARCH_BUDGET
    diameter_max_n: int = 5000
    # partial enumeration only runs when it can rule out weights up to this
    partial_min_depth: int = 3


@dataclass(frozen=True)
class CodeSummary:
    length: int
    dimension: int
    distance: DistanceResult | None
    witness_bound: DistanceResult
    witness_vertex: int
    dual_dimension: int
    dual_distance: DistanceResult | None  # None when the dual code is zero


@dataclass(frozen=True)
class VerificationReport:
    n: int
    q: int
    shape: Shape
    predicted: PredictedInvariants
    predicted_code: PredictedCodeParams
    graph: GraphInvariants
    edge_count: int
    code: CodeSummary
    checks: tuple[Check, ...]
    elapsed_ms: float

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status is Status.FAIL]

    @property
    def conjecture_flags(self) -> list[str]:
        return [c.name for c in self.checks if c.kind is CheckKind.CONJECTURE]


def default_q(n: int) -> int:
    """2 when 2 is a unit mod n, else 3."""
    return 2 if n % 2 else 3


# -- checks -------------------------------------------------------------------


def _cmp(name: str, kind: CheckKind, predicted, computed) -> Check:
    if predicted == computed:
        return Check(name, kind, Status.PASS, f"{computed}")
    return Check(name, kind, Status.FAIL, f"predicted {predicted}, computed {computed}")


def _skip(name: str, reason: str, kind: CheckKind = CheckKind.THEOREM) -> Check:
    return Check(name, kind, Status.SKIPPED, reason)


def _bounded(name: str, kind: CheckKind, predicted: int, result: DistanceResult | None, what: str) -> Check:
    """Compare an exact prediction with a possibly inconclusive search."""
    if result is None or result.kind is Kind.BUDGET_EXCEEDED:
        return _skip(name, f"budget: {what} not computed", kind)
    if result.exact:
        return _cmp(name, kind, predicted, result.value)
    lo = result.lower
    if lo is not None and lo > predicted:
        return Check(name, kind, Status.FAIL, f"predicted {predicted}, but no codeword of weight < {lo}")
    hi = result.upper
    if hi is not None and hi < predicted:
        return Check(name, kind, Status.FAIL, f"predicted {predicted}, found codeword of weight {hi}")
    bounds = f"{lo if lo is not None else '?'} <= d <= {hi if hi is not None else '?'}"
    return _skip(name, f"budget: {what} inexact ({bounds})", kind)


def _no_code_prediction(f: Factorization, q: int) -> str:
    parity = "odd" if f.two_is_unit else "even"
    return f"no prediction for q={q} with n {parity}"


def _graph_checks(f: Factorization, q: int, pred: PredictedInvariants, g: UnitGraph, inv: GraphInvariants, budgets: Budgets) -> list[Check]:
    n = f.n
    general = pred.shape is Shape.GENERAL
    graph_kind = CheckKind.CONJECTURE if general else CheckKind.THEOREM
    checks = [_cmp("graph.edges", CheckKind.THEOREM, pred.edge_count, g.edge_count)]

    phi = euler_phi(f)
    units = classify(n).units
    expected = np.array(
        [phi - 1 if (f.two_is_unit and x in units) else phi for x in range(n)], dtype=np.int64
    )
    bad = np.flatnonzero(expected != g.degrees)
    if bad.size:
        v = int(bad[0])
        checks.append(Check("graph.degree_law", CheckKind.THEOREM, Status.FAIL,
                            f"vertex {v}: predicted {expected[v]}, computed {g.degrees[v]}"))
    else:
        checks.append(Check("graph.degree_law", CheckKind.THEOREM, Status.PASS, f"{phi - 1 if f.two_is_unit else phi}..{phi}"))

    checks.append(_cmp("graph.connected", graph_kind, True, inv.connected))

    bound = conjectured_diameter_bound(f) if general else pred.diameter_bound
    if inv.diameter is None:
        checks.append(_skip("graph.diameter_bound", f"budget: n > {budgets.diameter_max_n}", graph_kind))
    elif inv.diameter is INFINITE or inv.diameter > bound:
        checks.append(Check("graph.diameter_bound", graph_kind, Status.FAIL,
                            f"predicted <= {bound}, computed {inv.diameter}"))
    else:
        checks.append(Check("graph.diameter_bound", graph_kind, Status.PASS, f"{inv.diameter} <= {bound}"))

    if general:
        checks.append(_skip("graph.edge_connectivity", "no prediction with four or more distinct primes"))
    else:
        checks.append(_cmp("graph.edge_connectivity", CheckKind.THEOREM, pred.edge_connectivity, inv.edge_connectivity))

    if pred.girth is not None:
        checks.append(_cmp("graph.girth", CheckKind.THEOREM, pred.girth, inv.girth))
    elif general:
        checks.append(_skip("graph.girth", "no prediction with four or more distinct primes"))
    else:
        checks.append(_skip("graph.girth", f"no girth prediction for n={n}: the graph is acyclic"))

    if f.two_is_unit:
        checks.append(_skip("graph.bipartite", "claimed only when 2 is a non-unit"))
    else:
        checks.append(_cmp("graph.bipartite", CheckKind.THEOREM, True, inv.bipartite))

    if pred.shape is Shape.POWER_OF_TWO:
        evens = frozenset(range(0, n, 2))
        odds = frozenset(range(1, n, 2))
        complete = (
            inv.bipartition is not None
            and set(inv.bipartition) == {evens, odds}
            and g.edge_count == len(evens) * len(odds)
        )
        checks.append(_cmp("graph.complete_bipartite", CheckKind.THEOREM, True, complete))
    else:
        checks.append(_skip("graph.complete_bipartite", "claimed only for powers of two"))
    return checks


def _code_checks(f: Factorization, q: int, pc: PredictedCodeParams, inv: GraphInvariants, code: CodeSummary, budgets: Budgets) -> list[Check]:
    n = f.n
    names = ("code.length", "code.dimension", "code.min_distance", "code.min_distance_witness",
             "dual.dimension", "dual.min_distance")
    checks: list[Check] = []
    if pc.basis is Basis.NONE:
        reason = _no_code_prediction(f, q)
        checks.extend(_skip(name, reason) for name in names)
    else:
        kind = CheckKind.CONJECTURE if pc.basis is Basis.CONJECTURE else CheckKind.THEOREM
        checks.append(_cmp("code.length", kind, pc.length, code.length))
        checks.append(_cmp("code.dimension", kind, pc.dimension, code.dimension))
        checks.append(_bounded("code.min_distance", kind, pc.min_distance, code.distance, "minimum distance"))
        upper = code.witness_bound.value
        if pc.min_distance <= upper:
            checks.append(Check("code.min_distance_witness", kind, Status.PASS,
                                f"predicted {pc.min_distance} <= weight {upper} of row {code.witness_vertex}"))
        else:
            checks.append(Check("code.min_distance_witness", kind, Status.FAIL,
                                f"predicted {pc.min_distance}, but row {code.witness_vertex} has weight {upper}"))
        checks.append(_cmp("dual.dimension", kind, pc.dual_dimension, code.dual_dimension))
        if pc.dual_min_distance is not None:
            checks.append(_bounded("dual.min_distance", kind, pc.dual_min_distance, code.dual_distance,
                                   "dual distance"))
        elif code.dual_dimension == 0:
            checks.append(_skip("dual.min_distance", f"dual code is zero for n={n}", kind))
        elif kind is CheckKind.CONJECTURE:
            checks.append(_skip("dual.min_distance", "no prediction with four or more distinct primes", kind))
        else:
            checks.append(_skip("dual.min_distance", f"no closed form for n={n}; see dual.girth", kind))

    # d(C^perp) = girth whenever q = 2 or the girth is even
    girth = inv.girth
    if girth is Sentinel.ACYCLIC:
        checks.append(_skip("dual.girth", "graph is acyclic"))
    elif q != 2 and girth % 2:
        checks.append(_skip("dual.girth", f"needs q=2 or even girth (q={q}, girth {girth})"))
    elif girth > budgets.max_dual_weight:
        checks.append(_skip("dual.girth", f"girth {girth} exceeds search weight {budgets.max_dual_weight}"))
    else:
        checks.append(_bounded("dual.girth", CheckKind.THEOREM, girth, code.dual_distance, "dual distance"))
    return checks


# -- single n -----------------------------------------------------------------


def _summarize_code(code: LinearCode, g: UnitGraph, budgets: Budgets) -> CodeSummary:
    k, q = code.dimension, code.q
    distance = min_distance_exhaustive(code, budgets.enumeration)
    if distance.kind is Kind.BUDGET_EXCEEDED and partial_depth(k, q, budgets.partial) >= budgets.partial_min_depth:
        distance = min_distance_partial(code, budgets.partial)
    bound = distance_witness_bound(code, g)
    dual = None
    if code.dual_dimension > 0:
        dual = dual_min_distance_by_dependency(code, budgets.max_dual_weight, budgets.search_nodes)
    return CodeSummary(
        length=code.length,
        dimension=k,
        distance=distance,
        witness_bound=bound,
        witness_vertex=int(np.argmin(g.degrees)),
        dual_dimension=code.dual_dimension,
        dual_distance=dual,
    )


def verify_one(n: int, q: int | None = None, budgets: Budgets = Budgets()) -> VerificationReport:
    if n < 2:
        raise ValueError("n must be >= 2")
    if q is None:
        q = default_q(n)
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    start = time.perf_counter()
    f = factorize(n)
    pred = predict(f)
    pc = predict_code_params(f, q)
    g = build_unit_graph(n)
    inv = invariants(g, budgets.diameter_max_n)
    code = _summarize_code(code_from_incidence(g, q), g, budgets)
    checks = _graph_checks(f, q, pred, g, inv, budgets) + _code_checks(f, q, pc, inv, code, budgets)
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerificationReport(n, q, pred.shape, pred, pc, inv, g.edge_count, code, tuple(checks), elapsed)


# -- serialization ------------------------------------------------------------


def _plain(x):
    if isinstance(x, enum.Enum):
        return x.value
    return x


def _distance_record(d: DistanceResult | None) -> dict:
    if d is None:
        return {"d": None, "dLower": None, "dUpper": None, "dMethod": None, "witness": None}
    return {
        "d": d.value if d.exact else None,
        "dLower": d.lower,
        "dUpper": d.upper,
        "dMethod": d.method.value,
        "witness": d.sparse_witness(),
    }


def to_record(r: VerificationReport, timing: bool = True) -> dict:
    """Plain-JSON form of a report; absent values are ``None``."""
    p, pc, inv, code = r.predicted, r.predicted_code, r.graph, r.code
    code_rec = {"length": code.length, "dim": code.dimension, **_distance_record(code.distance)}
    code_rec["witnessBound"] = code.witness_bound.value
    code_rec["witnessVertex"] = code.witness_vertex
    return {
        "n": r.n,
        "q": r.q,
        "shape": r.shape.value,
        "predicted": {
            "edges": p.edge_count,
            "lambda": p.edge_connectivity,
            "diamBound": p.diameter_bound,
            "girth": p.girth,
            "code": {
                "length": pc.length if pc.basis is not Basis.NONE else None,
                "dim": pc.dimension,
                "d": pc.min_distance,
                "basis": pc.basis.value,
            },
            "dual": {"dim": pc.dual_dimension, "d": pc.dual_min_distance},
        },
        "computed": {
            "edges": r.edge_count,
            "lambda": inv.edge_connectivity,
            "diameter": _plain(inv.diameter),
            "girth": _plain(inv.girth),
            "connected": inv.connected,
            "minDegree": inv.min_degree,
            "bipartite": inv.bipartite,
            "code": code_rec,
            "dual": {"dim": code.dual_dimension, **_distance_record(code.dual_distance)},
        },
        "checks": [
            {"name": c.name, "kind": c.kind.value, "status": c.status.value, "detail": c.detail}
            for c in r.checks
        ],
        "conjectureFlags": r.conjecture_flags,
        "elapsedMs": round(r.elapsed_ms, 3) if timing else None,
    }


def dump_record(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


def parse_record(line: str) -> dict:
    return json.loads(line)


# -- sweeps -------------------------------------------------------------------


@dataclass
class SweepSummary:
    reports: int = 0
    counts: dict[str, int] = field(default_factory=lambda: {s.value: 0 for s in Status})
    theorem_failures: int = 0
    conjecture_failures: int = 0
    failures: list[tuple[int, int, Check]] = field(default_factory=list)

    def add(self, r: VerificationReport) -> None:
        self.reports += 1
        for c in r.checks:
            self.counts[c.status.value] += 1
            if c.status is Status.FAIL:
                self.failures.append((r.n, r.q, c))
                if c.kind is CheckKind.CONJECTURE:
                    self.conjecture_failures += 1
                else:
                    self.theorem_failures += 1

    @property
    def fail_count(self) -> int:
        return self.counts[Status.FAIL.value]

    def lines(self) -> list[str]:
        out = [
            f"reports: {self.reports}",
            f"PASS: {self.counts['PASS']}",
            f"FAIL: {self.counts['FAIL']} (theorem {self.theorem_failures}, conjecture {self.conjecture_failures})",
            f"SKIPPED: {self.counts['SKIPPED']}",
        ]
        for n, q, c in self.failures:
            out.append(f"  FAIL n={n} q={q} {c.name} [{c.kind.value}]: {c.detail}")
        return out


def sweep_tasks(n_from: int, n_to: int, q_list: Sequence[int] | None = None) -> list[tuple[int, int]]:
    if n_from < 2 or n_from > n_to:
        raise ValueError(f"need 2 <= from <= to, got {n_from}..{n_to}")
    qs = sorted(set(q_list)) if q_list else None
    return [(n, q) for n in range(n_from, n_to + 1) for q in (qs or [default_q(n)])]


def _task(args: tuple[int, int, Budgets]) -> VerificationReport:
    n, q, budgets = args
    return verify_one(n, q, budgets)


def sweep(
    n_from: int,
    n_to: int,
    q_list: Sequence[int] | None = None,
    budgets: Budgets = Budgets(),
    workers: int = 1,
) -> Iterator[VerificationReport]:
    """Reports in ascending ``(n, q)`` order regardless of ``workers``."""
    tasks = [(n, q, budgets) for n, q in sweep_tasks(n_from, n_to, q_list)]
    if workers <= 1:
        for t in tasks:
            yield _task(t)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_task, tasks)


def summarize(reports: Iterable[VerificationReport]) -> SweepSummary:
    s = SweepSummary()
    for r in reports:
        s.add(r)
    return s

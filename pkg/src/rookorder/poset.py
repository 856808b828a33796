"""Hasse diagram, rank statistics, exports, and the verification campaign.

build_hasse assembles the graded order diagram of R_n from the covering
predicates.  verify cross-checks everything against everything: the two
order implementations pair by pair, the covering predicates against
brute-force covers extracted from the order relation itself, and the
combinatorial length against the exact linear-algebra oracle.  Every
disagreement lands in the returned report; an internal inconsistency
between the two ways of evaluating move reachability raises outright.
"""

import json
import random
import time
from dataclasses import dataclass

from .elements import OneLine, enumerate_elements, parse_one_line
from .length import length
from .oracle import oracle_length
from .order import covers_of, deodhar_leq, ppr_leq, ppr_raises

__all__ = [
    "HasseDiagram",
    "VerificationReport",
    "build_hasse",
    "rank_sizes",
    "interval",
    "export_dot",
    "export_json",
    "hasse_from_json",
    "verify",
]

HASSE_MAX_N = 5
EXHAUSTIVE_MAX_N = 4
SAMPLED_MAX_N = 6
_SPOT_CHECK_PAIRS = 200
_SAMPLED_ORACLE_ELEMENTS = 400


@dataclass(frozen=True)
class HasseDiagram:
    """Graded order diagram: nodes carry (id, element, length) and edges
    point from the lower element of each covering pair to the upper one.
    Ids are dense from 0 in lexicographic element order."""

    n: int
    nodes: tuple[tuple[int, OneLine, int], ...]
    edges: tuple[tuple[int, int], ...]


def build_hasse(n: int) -> HasseDiagram:
    """Diagram of all of R_n; bounded to n <= 5 to keep memory sane."""
    if not 1 <= n <= HASSE_MAX_N:
        raise ValueError(f"supported sizes are 1..{HASSE_MAX_N}")
    elements = list(enumerate_elements(n))
    index = {e.entries: i for i, e in enumerate(elements)}
    nodes = tuple((i, e, length(e)) for i, e in enumerate(elements))
    edges = sorted(
        (i, index[c.entries])
        for i, e in enumerate(elements)
        for c in covers_of(e)
    )
    return HasseDiagram(n, nodes, tuple(edges))


def rank_sizes(h: HasseDiagram) -> list[int]:
    """Node counts per length value, from 0 through n*n."""
    sizes = [0] * (h.n * h.n + 1)
    for _, _, ln in h.nodes:
        sizes[ln] += 1
    return sizes


def interval(h: HasseDiagram, x: OneLine, y: OneLine) -> HasseDiagram:
    """Induced sub-diagram on the elements between x and y, re-labelled
    densely from 0 in lexicographic order."""
    index = {e.entries: i for i, e, _ in h.nodes}
    if x.entries not in index or y.entries not in index:
        raise ValueError("endpoints must be nodes of the diagram")
    if not deodhar_leq(x, y):
        raise ValueError("endpoints are incomparable or reversed")
    up = _edge_reachable(h, index[x.entries], upward=True)
    down = _edge_reachable(h, index[y.entries], upward=False)
    keep = sorted(up & down)
    relabel = {old: new for new, old in enumerate(keep)}
    nodes = tuple((relabel[i], h.nodes[i][1], h.nodes[i][2]) for i in keep)
    edges = tuple(sorted(
        (relabel[lo], relabel[hi])
        for lo, hi in h.edges
        if lo in relabel and hi in relabel
    ))
    return HasseDiagram(h.n, nodes, edges)


def _edge_reachable(h: HasseDiagram, start: int, upward: bool) -> set[int]:
    adjacency: dict[int, list[int]] = {}
    for lo, hi in h.edges:
        if upward:
            adjacency.setdefault(lo, []).append(hi)
        else:
            adjacency.setdefault(hi, []).append(lo)
    seen = {start}
    stack = [start]
    while stack:
        for nxt in adjacency.get(stack.pop(), ()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def export_dot(h: HasseDiagram) -> str:
    """Graphviz text, deterministic: nodes by id, then edges sorted."""
    lines = [f"digraph rook_order_{h.n} {{", "  rankdir=BT;"]
    for i, e, ln in h.nodes:
        lines.append(f'  {i} [label="{e} ({ln})"];')
    for lo, hi in h.edges:
        lines.append(f"  {lo} -> {hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(h: HasseDiagram) -> str:
    doc = {
        "n": h.n,
        "nodes": [
            {"id": i, "oneline": str(e), "length": ln} for i, e, ln in h.nodes
        ],
        "edges": [[lo, hi] for lo, hi in h.edges],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def hasse_from_json(text: str) -> HasseDiagram:
    doc = json.loads(text)
    nodes = tuple(
        (node["id"], parse_one_line(node["oneline"]), node["length"])
        for node in doc["nodes"]
    )
    edges = tuple((lo, hi) for lo, hi in doc["edges"])
    return HasseDiagram(doc["n"], nodes, edges)


@dataclass
class VerificationReport:
    """Outcome of one cross-checking campaign over R_n.

    mismatches holds (x, y, containment verdict, move-closure verdict)
    for every ordered pair where the two order implementations differ;
    cover_mismatches holds (x, predicate covers, brute-force covers);
    oracle_mismatches holds (x, formula length, oracle length).  All
    elements are reported in canonical text form.
    """

    n: int
    mode: str
    pairs_checked: int
    mismatches: list[tuple[str, str, bool, bool]]
    cover_mismatches: list[tuple[str, list[str], list[str]]]
    oracle_mismatches: list[tuple[str, int, int]]
    elapsed: float
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return not (self.mismatches or self.cover_mismatches or self.oracle_mismatches)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "seed": self.seed,
            "pairs_checked": self.pairs_checked,
            "mismatches": [list(entry) for entry in self.mismatches],
            "cover_mismatches": [
                [x, list(predicate), list(brute)]
                for x, predicate, brute in self.cover_mismatches
            ],
            "oracle_mismatches": [list(entry) for entry in self.oracle_mismatches],
            "elapsed": self.elapsed,
            "passed": self.passed,
        }


def verify(
    n: int,
    mode: str = "exhaustive",
    sample_count: int = 100_000,
    seed: int = 0,
) -> VerificationReport:
    """Run the cross-checking campaign over R_n.

    Exhaustive mode (n <= 4) audits every ordered pair and every element.
    Sampled mode (n <= 6) audits sample_count seeded random pairs, spot
    checks the per-pair move search against the precomputed move closure,
    audits covers for every element while n <= 5, and audits the oracle
    on a seeded element sample.
    """
    start = time.perf_counter()
    if mode == "exhaustive":
        if not 1 <= n <= EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive mode supports n in 1..{EXHAUSTIVE_MAX_N}")
        report = _verify_exhaustive(n)
    elif mode == "sampled":
        if not 1 <= n <= SAMPLED_MAX_N:
            raise ValueError(f"sampled mode supports n in 1..{SAMPLED_MAX_N}")
        if sample_count < 1:
            raise ValueError("sample_count must be positive")
        report = _verify_sampled(n, sample_count, seed)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    report.elapsed = time.perf_counter() - start
    return report


def _verify_exhaustive(n: int) -> VerificationReport:
    elements = list(enumerate_elements(n))
    count = len(elements)
    lengths = [length(e) for e in elements]
    closure = _move_closure(elements, lengths)
    deodhar_rows = _deodhar_rows(elements)

    mismatches = []
    for i, x in enumerate(elements):
        row = deodhar_rows[i]
        closed = closure[i]
        for j, y in enumerate(elements):
            d = bool(row >> j & 1)
            p = ppr_leq(x, y)
            if p != bool(closed >> j & 1):
                raise RuntimeError(
                    f"move closure disagrees with per-pair search at {x}, {y}"
                )
            if d != p:
                mismatches.append((str(x), str(y), d, p))

    cover_mismatches = _audit_covers(elements, deodhar_rows)
    oracle_mismatches = _audit_oracle(elements, lengths, range(count))
    return VerificationReport(
        n, "exhaustive", count * count, mismatches, cover_mismatches,
        oracle_mismatches, 0.0,
    )


def _verify_sampled(n: int, sample_count: int, seed: int) -> VerificationReport:
    elements = list(enumerate_elements(n))
    count = len(elements)
    lengths = [length(e) for e in elements]
    closure = _move_closure(elements, lengths)
    rng = random.Random(seed)

    mismatches = []
    spot = min(sample_count, _SPOT_CHECK_PAIRS)
    for t in range(sample_count):
        i = rng.randrange(count)
        j = rng.randrange(count)
        d = deodhar_leq(elements[i], elements[j])
        p = bool(closure[i] >> j & 1)
        if t < spot and ppr_leq(elements[i], elements[j]) != p:
            raise RuntimeError(
                f"move closure disagrees with per-pair search at "
                f"{elements[i]}, {elements[j]}"
            )
        if d != p:
            mismatches.append((str(elements[i]), str(elements[j]), d, p))

    # Brute-force cover extraction needs the full relation; past n = 5 the
    # transpose gets heavy, so the cover audit stops there.
    cover_mismatches = []
    if n <= 5:
        cover_mismatches = _audit_covers(elements, closure)

    picks = sorted(rng.sample(range(count), min(count, _SAMPLED_ORACLE_ELEMENTS)))
    oracle_mismatches = _audit_oracle(elements, lengths, picks)
    return VerificationReport(
        n, "sampled", sample_count, mismatches, cover_mismatches,
        oracle_mismatches, 0.0, seed=seed,
    )


def _move_closure(elements: list[OneLine], lengths: list[int]) -> list[int]:
    """Reachability bitsets of the generator-move relation, one row per
    element: bit j of row i says element j is reachable from element i.
    Rows are filled in decreasing length order, so every successor row is
    ready when needed."""
    index = {e.entries: i for i, e in enumerate(elements)}
    successors = [
        [index[y.entries] for y in ppr_raises(e)] for e in elements
    ]
    closure = [0] * len(elements)
    for i in sorted(range(len(elements)), key=lambda k: -lengths[k]):
        bits = 1 << i
        for j in successors[i]:
            bits |= closure[j]
        closure[i] = bits
    return closure


def _deodhar_rows(elements: list[OneLine]) -> list[int]:
    rows = []
    for x in elements:
        bits = 0
        for j, y in enumerate(elements):
            if deodhar_leq(x, y):
                bits |= 1 << j
        rows.append(bits)
    return rows


def _audit_covers(
    elements: list[OneLine], leq_rows: list[int]
) -> list[tuple[str, list[str], list[str]]]:
    """Compare predicate covers with brute-force covers: y covers x when
    y is strictly above x and the open interval between them is empty."""
    count = len(elements)
    strict_up = [leq_rows[i] & ~(1 << i) for i in range(count)]
    strict_down = [0] * count
    for i in range(count):
        bits = strict_up[i]
        while bits:
            low = bits & -bits
            strict_down[low.bit_length() - 1] |= 1 << i
            bits ^= low
    out = []
    for i, x in enumerate(elements):
        predicate = sorted(y.entries for y in covers_of(x))
        brute = []
        bits = strict_up[i]
        while bits:
            low = bits & -bits
            j = low.bit_length() - 1
            bits ^= low
            if strict_up[i] & strict_down[j] == 0:
                brute.append(elements[j].entries)
        brute.sort()
        if predicate != brute:
            out.append((
                str(x),
                [",".join(map(str, e)) for e in predicate],
                [",".join(map(str, e)) for e in brute],
            ))
    return out


def _audit_oracle(elements, lengths, indices) -> list[tuple[str, int, int]]:
    out = []
    for i in indices:
        computed = oracle_length(elements[i])
        if computed != lengths[i]:
            out.append((str(elements[i]), lengths[i], computed))
    return out

"""
Theorem crosscheck harness.

Every check of the catalog runs over a corpus of graphs; the graphs are
cut into chunks that the configured executor runs as independent jobs,
and the chunk results are merged back in corpus order.
"""
import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..config import config
from ..errors import GuardError
from ..graph.core import Graph, build
from ..graph.structure import bipartition
from ..utils import get_logger
from .checks import Check, check_dict, fixture_graphs
from .enumerate import (enumerate_connected, enumerate_connected_bipartite,
                        sample_connected)
from .executor import BaseExecutor, executor_dict
from .graph6 import to_graph6

logger = get_logger(__name__)

# (label, vertex count, edge list); cheap to ship to worker processes
Item = Tuple[str, int, List[Tuple[int, int]]]


@dataclass
class CheckSummary:
    name: str
    exploratory: bool = False
    graphs_tested: int = 0
    agreements: int = 0
    skipped: int = 0
    disagreements: List[dict] = field(default_factory=list)
    observations: Dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.disagreements

    def to_dict(self):
        result = {
            "name": self.name,
            "exploratory": self.exploratory,
            "graphs_tested": self.graphs_tested,
            "agreements": self.agreements,
            "skipped": self.skipped,
            "disagreements": self.disagreements,
            "wall_time": round(self.wall_time, 3),
        }
        if self.exploratory:
            result["observations"] = dict(sorted(self.observations.items()))
        return result


@dataclass
class CrosscheckReport:
    corpus: dict
    checks: List[CheckSummary] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def disagreements(self) -> int:
        return sum(len(check.disagreements) for check in self.checks)

    def to_dict(self):
        return {
            "corpus": self.corpus,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }


def run_chunk(check: Check, items: List[Item]) -> List[dict]:
    outcomes = []
    for label, n, edges in items:
        result = check(build(n, edges))
        if result is None:
            outcomes.append({"label": label, "applicable": False})
        else:
            outcomes.append({"label": label, "applicable": True,
                             "agree": result.agree,
                             "detail": result.detail})
    return outcomes


def _items(graphs: Iterable[Tuple[str, Graph]]) -> List[Item]:
    return [(label, g.n, [list(e) for e in g.edges()]) for label, g in graphs]


def _labelled(n: int, graphs: Iterable[Graph]):
    return (("n%d#%d" % (n, i), g) for i, g in enumerate(graphs))


def build_corpus(source: str, max_n: int, sample: Optional[int] = None,
                 seed: int = 0, graphs: Optional[Sequence[Graph]] = None,
                 check: Optional[Check] = None) -> List[Item]:
    """Graphs a check of the given source runs over.

    Explicit `graphs` replace the generated corpus; `sample` draws that
    many random connected graphs on exactly max_n vertices instead of
    enumerating every n <= max_n.
    """
    if source == "fixtures":
        return _items(fixture_graphs(check))
    if graphs is not None:
        labelled = [("input#%d" % i, g) for i, g in enumerate(graphs)]
    elif sample is not None:
        labelled = list(_labelled(max_n, sample_connected(max_n, sample,
                                                          seed)))
    elif source == "bipartite":
        labelled = [pair for n in range(1, max_n + 1)
                    for pair in _labelled(n, enumerate_connected_bipartite(
                        n))]
    else:
        labelled = [pair for n in range(1, max_n + 1)
                    for pair in _labelled(n, enumerate_connected(n))]
    if source == "bipartite":
        labelled = [(label, g) for label, g in labelled
                    if bipartition(g) is not None]
    return _items(labelled)


def resolve_checks(names: Iterable[Union[str, Check]]) -> List[Check]:
    checks = []
    for name in names:
        if isinstance(name, Check):
            checks.append(name)
        elif name in check_dict:
            checks.append(check_dict[name])
        else:
            raise GuardError("unknown check %r; known checks: %s"
                             % (name, ", ".join(sorted(check_dict))))
    return checks


def _merge(summary: CheckSummary, item: Item, outcome: dict):
    if not outcome["applicable"]:
        summary.skipped += 1
        return
    summary.graphs_tested += 1
    detail = outcome["detail"]
    if summary.exploratory:
        summary.agreements += 1
        two_delta = detail.get("two_delta")
        for s, s_prime in detail.get("cop_wins", []):
            key = "(%s,%s)" % (s, s_prime)
            summary.observations[key] = max(
                summary.observations.get(key, 0), two_delta)
        return
    if outcome["agree"]:
        summary.agreements += 1
        return
    label, n, edges = item
    summary.disagreements.append({
        "graph": label,
        "n": n,
        "edges": edges,
        "graph6": to_graph6(build(n, edges)),
        "detail": detail,
    })
    logger.warning("Check %s disagrees on %s: %s", summary.name, label,
                   detail)


def crosscheck(max_n: int, checks: Iterable[Union[str, Check]],
               sample: Optional[int] = None, seed: int = 0,
               graphs: Optional[Sequence[Graph]] = None,
               executor: Optional[Union[str, BaseExecutor]] = None,
               workers: Optional[int] = None,
               chunk_size: int = 64) -> CrosscheckReport:
    checks = resolve_checks(checks)
    if executor is None or isinstance(executor, str):
        executor = executor_dict[executor or config["executor"]]()
    with executor:
        return _run_checks(executor, max_n, checks, sample, seed, graphs,
                           workers, chunk_size)


def _run_checks(executor: BaseExecutor, max_n: int, checks: List[Check],
                sample: Optional[int], seed: int,
                graphs: Optional[Sequence[Graph]], workers: Optional[int],
                chunk_size: int) -> CrosscheckReport:
    workers = workers or config["workers"]
    report = CrosscheckReport(corpus={
        "max_n": max_n, "sample": sample, "seed": seed,
        "input_graphs": None if graphs is None else len(graphs)})
    corpora: Dict[str, List[Item]] = {}
    for check in checks:
        key = check.source if check.source != "fixtures" else check.name
        if key not in corpora:
            corpora[key] = build_corpus(check.source, max_n, sample, seed,
                                        graphs, check)
        items = corpora[key]
        summary = CheckSummary(check.name, exploratory=check.exploratory)
        logger.info("Running check %s over %d graphs", check.name,
                    len(items))
        started = time.perf_counter()
        chunks = [items[i:i + chunk_size]
                  for i in range(0, len(items), chunk_size)]
        results = executor.map(run_chunk, [{"check": check, "items": chunk}
                                           for chunk in chunks], workers)
        for chunk, outcomes in zip(chunks, results):
            for item, outcome in zip(chunk, outcomes):
                _merge(summary, item, outcome)
        summary.wall_time = time.perf_counter() - started
        logger.info("Check %s: %d tested, %d disagreements", check.name,
                    summary.graphs_tested, len(summary.disagreements))
        report.checks.append(summary)
    return report

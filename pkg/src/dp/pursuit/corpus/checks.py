"""
Catalog of theorem checks run by the crosscheck harness.

A check maps one graph to a CheckResult, or to None when the graph is
outside the check's hypotheses. Checks marked exploratory only collect
data and never report disagreements.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

from ..decomposition import big_brother, big_two_brother
from ..dismantling import (bidismantle, bipartite_dismantle,
                           hyperbolic_order, mno_order, random_ss_dismantle,
                           ss_dismantle, ss_dismantle_local,
                           strong_bidismantle, verify_certificate)
from ..game import (GameSpec, Winner, make_solver, solve_capture,
                    solve_visible, solve_witness)
from ..game.policy import OptimalRobberPolicy
from ..graph.core import UNBOUNDED, Graph, format_radius
from ..graph.structure import bipartition
from ..hyperbolicity import check_hyperbolic_dismantling, hyperbolicity
from ..strategy import (bb_strategy, btb_witness_strategy, capture_strategy,
                        mark_procedure, mark_strategy, shadow_strategy,
                        simulate)
from .fixtures import FixtureId, fixture

THEOREM_ONE_SPEEDS = ((1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (4, 2),
                      (UNBOUNDED, 1))
LOCAL_SPEEDS = (1, 2, 3, UNBOUNDED)
CONFLUENCE_SPEEDS = ((1, 1), (2, 1), (3, 2))
CONFLUENCE_SEEDS = 20


@dataclass
class CheckResult:
    agree: bool
    detail: Dict[str, object] = field(default_factory=dict)


@dataclass(frozen=True)
class Check:
    name: str
    fn: Callable[[Graph], Optional[CheckResult]]
    # "connected", "bipartite" or "fixtures"
    source: str = "connected"
    fixtures: Tuple[str, ...] = ()
    exploratory: bool = False

    def __call__(self, g: Graph) -> Optional[CheckResult]:
        # one vertex is a cop win by convention for every game
        if g.n < 2:
            return None
        return self.fn(g)


check_dict: Dict[str, Check] = {}


def register(name, source="connected", fixtures=(), exploratory=False):
    def decorator(fn):
        check_dict[name] = Check(name, fn, source, tuple(fixtures),
                                 exploratory)
        return fn
    return decorator


def cop_wins(value) -> bool:
    return value.verdict == Winner.COP


def _speed(s):
    return format_radius(s)


@register("theorem-1")
def theorem_one(g):
    mismatched = []
    for s, s_prime in THEOREM_ONE_SPEEDS:
        dismantlable = ss_dismantle(g, s, s_prime) is not None
        if dismantlable != cop_wins(solve_visible(g, s, s_prime)):
            mismatched.append([_speed(s), _speed(s_prime)])
    return CheckResult(not mismatched, {"speeds": mismatched})


@register("dually-chordal")
def dually_chordal(g):
    verdicts = {
        "mno": mno_order(g) is not None,
        "ss(2,1)": ss_dismantle(g, 2, 1) is not None,
        "visible(2,1)": cop_wins(solve_visible(g, 2, 1)),
    }
    return CheckResult(len(set(verdicts.values())) == 1, verdicts)


@register("big-brother")
def big_brother_speeds(g):
    verdicts = {
        "big_brother": big_brother(g) is not None,
        "visible(3,1)": cop_wins(solve_visible(g, 3, 1)),
        "visible(4,1)": cop_wins(solve_visible(g, 4, 1)),
        "visible(inf,1)": cop_wins(solve_visible(g, UNBOUNDED, 1)),
    }
    return CheckResult(len(set(verdicts.values())) == 1, verdicts)


@register("fixtures", source="fixtures", fixtures=("sun3",))
def sun3_memberships(g):
    expected = {
        "ss(2,1)": False,
        "ss(1,1)": True,
        "witness(2)": True,
        "witness(3)": True,
        "witness(4)": True,
        "big_brother": False,
        "big_two_brother": True,
        "bi(2)": True,
    }
    observed = {
        "ss(2,1)": ss_dismantle(g, 2, 1) is not None,
        "ss(1,1)": ss_dismantle(g, 1, 1) is not None,
        "witness(2)": cop_wins(solve_witness(g, 2)),
        "witness(3)": cop_wins(solve_witness(g, 3)),
        "witness(4)": cop_wins(solve_witness(g, 4)),
        "big_brother": big_brother(g) is not None,
        "big_two_brother": big_two_brother(g) is not None,
        "bi(2)": bidismantle(g, 2) is not None,
    }
    wrong = sorted(key for key in expected if expected[key] != observed[key])
    # reported, not asserted
    observed["strong_bi"] = strong_bidismantle(g) is not None
    return CheckResult(not wrong, {"observed": observed, "wrong": wrong})


@register("separation", source="fixtures",
          fixtures=("gk(1)", "gk(2)", "gk(3)"))
def separation(g):
    # gk(k) has 2k + 4 vertices
    k = (g.n - 4) // 2
    inside = cop_wins(solve_witness(g, k))
    outside = cop_wins(solve_witness(g, k + 1))
    return CheckResult(inside and not outside,
                       {"k": k, "witness(k)": inside,
                        "witness(k+1)": outside})


@register("witness")
def witness_conditions(g):
    violations = []
    bi2 = bidismantle(g, 2) is not None
    win2 = cop_wins(solve_witness(g, 2))
    if win2 and not bi2:
        violations.append("witness(2) without bi(2)")
    if strong_bidismantle(g) is not None and not win2:
        violations.append("strong_bi without witness(2)")
    for k in (3, 5):
        if bidismantle(g, k) is not None and \
                not cop_wins(solve_witness(g, k)):
            violations.append("bi(%d) without witness(%d)" % (k, k))
    return CheckResult(not violations, {"violations": violations})


@register("big-two-brother")
def big_two_brother_witness(g):
    violations = []
    if big_two_brother(g) is not None:
        for k in range(1, 6):
            if not cop_wins(solve_witness(g, k)):
                violations.append("witness(%d) lost" % k)
    elif g.n > 1 and bidismantle(g, g.n) is not None:
        violations.append("bi(n) without a decomposition")
    return CheckResult(not violations, {"violations": violations})


@register("cwfrw")
def cwfrw(g):
    verdicts = {
        "big_brother": big_brother(g) is not None,
        "witness(k=2,s=2)": cop_wins(solve_witness(g, 2, 2)),
        "witness(k=1,s=3)": cop_wins(solve_witness(g, 1, 3)),
    }
    return CheckResult(len(set(verdicts.values())) == 1, verdicts)


@register("bipartite", source="bipartite")
def bipartite_capture(g):
    if bipartition(g) is None:
        return None
    verdicts = {
        "bipartite_dismantle": bipartite_dismantle(g) is not None,
        "capture(1)": cop_wins(solve_capture(g, 1)),
    }
    return CheckResult(len(set(verdicts.values())) == 1, verdicts)


@register("diameter-2")
def diameter_two(g):
    if g.diameter() > 2:
        return None
    return CheckResult(cop_wins(solve_capture(g, 1)))


@register("hyperbolicity")
def hyperbolic_bounds(g):
    two_delta = hyperbolicity(g).two_delta
    violations = []
    if not check_hyperbolic_dismantling(g, max(1, two_delta)):
        violations.append("not (2r, r+2delta)-dismantlable")
    if not verify_certificate(g, hyperbolic_order(g, max(1, two_delta))):
        violations.append("BFS-tree order does not verify")
    for s, s_prime in ((2, 1), (4, 2)):
        if cop_wins(solve_visible(g, s, s_prime)) and \
                two_delta > 2 * (s - 1):
            violations.append("2delta above 2(s-1) at (%d,%d)"
                              % (s, s_prime))
    return CheckResult(not violations, {"two_delta": two_delta,
                                        "violations": violations})


@register("hyperbolic-converse", exploratory=True)
def hyperbolic_converse(g):
    two_delta = hyperbolicity(g).two_delta
    winning = [[s, s_prime] for s, s_prime in ((2, 1), (3, 1), (3, 2),
                                               (4, 2), (4, 3))
               if cop_wins(solve_visible(g, s, s_prime))]
    return CheckResult(True, {"two_delta": two_delta, "cop_wins": winning})


def _captures(g, spec, cop) -> bool:
    value = make_solver(g, spec, force=True).solve()
    robber = OptimalRobberPolicy(value, make_solver(g, spec, force=True))
    return simulate(g, spec, cop, robber).captured


@register("strategy")
def strategy_soundness(g):
    failures = []
    tried = []
    for s, s_prime in ((1, 1), (2, 1), (UNBOUNDED, 1)):
        cert = ss_dismantle(g, s, s_prime)
        if cert is not None:
            tried.append("shadow(%s)" % _speed(s))
            cop = shadow_strategy(g, cert)
            if not _captures(g, cop.spec, cop):
                failures.append(tried[-1])
    table = mark_procedure(g, range(g.n), 3)
    if table.complete:
        tried.append("mark(3)")
        cop = mark_strategy(g, table)
        if not _captures(g, cop.spec, cop):
            failures.append("mark(3)")
    d = big_brother(g)
    if d is not None:
        tried.append("bb")
        cop = bb_strategy(g, d)
        if not _captures(g, cop.spec, cop):
            failures.append("bb")
    d = big_two_brother(g)
    if d is not None:
        for k in (1, 2, 3):
            tried.append("btb(%d)" % k)
            cop = btb_witness_strategy(g, d, k)
            if not _captures(g, cop.spec, cop):
                failures.append(tried[-1])
    if bipartition(g) is not None:
        cert = bipartite_dismantle(g)
        if cert is not None:
            tried.append("capture")
            cop = capture_strategy(g, cert)
            if not _captures(g, GameSpec.capture(1), cop):
                failures.append("capture")
    if not tried:
        return None
    return CheckResult(not failures, {"tried": tried, "failures": failures})


@register("local")
def local_dismantling(g):
    mismatched = [_speed(s) for s in LOCAL_SPEEDS
                  if (ss_dismantle(g, s, 1) is None)
                  != (ss_dismantle_local(g, s) is None)]
    return CheckResult(not mismatched, {"s": mismatched})


@register("confluence")
def confluence(g):
    mismatched = []
    for s, s_prime in CONFLUENCE_SPEEDS:
        canonical = ss_dismantle(g, s, s_prime) is not None
        for seed in range(CONFLUENCE_SEEDS):
            if (random_ss_dismantle(g, s, s_prime, seed) is not None) \
                    != canonical:
                mismatched.append([s, s_prime, seed])
                break
    return CheckResult(not mismatched, {"runs": mismatched})


def fixture_graphs(check: Check):
    return [(str(FixtureId.parse(name)), fixture(name))
            for name in check.fixtures]

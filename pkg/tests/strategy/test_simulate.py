import pytest

from dp.pursuit.corpus import fixture
from dp.pursuit.dismantling import ss_dismantle
from dp.pursuit.errors import StrategyError
from dp.pursuit.game import GameSpec, make_solver, solve_visible
from dp.pursuit.graph import build
from dp.pursuit.strategy import (Outcome, RandomRobber, ScriptedRobber,
                                 StrategyTable, default_cap, make_robber,
                                 shadow_strategy, simulate)

P3 = fixture("path(3)")
P5 = fixture("path(5)")
C4 = fixture("cycle(4)")


def stay_put(g, spec, start=0):
    moves = {(c, r): (c,) * spec.steps_per_round
             for c in range(g.n) for r in range(g.n) if c != r}
    return StrategyTable(game=spec, start_vertex=start, moves=moves)


def test_scripted_robber_walks_into_the_cop():
    spec = GameSpec.visible()
    cop = shadow_strategy(P5, ss_dismantle(P5, 1, 1))
    robber = ScriptedRobber(make_solver(P5, spec), [0, 0, 0, 0])
    trace = simulate(P5, spec, cop, robber)
    assert trace.captured
    assert trace.robber_positions[-1] == trace.cop_positions[-1] or \
        P5.adjacent(trace.robber_positions[-1], trace.cop_positions[-1])
    assert len(trace.cop_positions) == trace.steps + 1


def test_survival_up_to_the_cap():
    spec = GameSpec.visible()
    robber = ScriptedRobber(make_solver(C4, spec), [2])
    trace = simulate(C4, spec, stay_put(C4, spec), robber, cap=7)
    assert trace.outcome == Outcome.SURVIVED
    assert trace.steps == 7
    assert trace.captured_at is None
    assert trace.to_dict()["outcome"] == "SURVIVED"


def test_default_cap():
    assert default_cap(C4, GameSpec.visible()) == 64
    assert default_cap(C4, GameSpec.witness(3)) == 192


def test_illegal_cop_move():
    spec = GameSpec.visible()
    moves = {(c, r): (2,) for c in range(4) for r in range(4) if c != r}
    cop = StrategyTable(game=spec, start_vertex=0, moves=moves)
    robber = ScriptedRobber(make_solver(C4, spec), [1])
    with pytest.raises(StrategyError):
        simulate(C4, spec, cop, robber)


def test_illegal_robber_move():
    spec = GameSpec.visible()
    robber = ScriptedRobber(make_solver(P5, spec), [4, 1])
    with pytest.raises(StrategyError):
        simulate(P5, spec, stay_put(P5, spec), robber)


def test_illegal_start():
    spec = GameSpec.visible()
    robber = ScriptedRobber(make_solver(P3, spec), [0])
    with pytest.raises(StrategyError):
        simulate(P3, spec, stay_put(P3, spec), robber)


def test_strategy_for_another_game():
    spec = GameSpec.visible(2, 1)
    robber = ScriptedRobber(make_solver(P3, spec), [2])
    with pytest.raises(StrategyError):
        simulate(P3, spec, stay_put(P3, GameSpec.visible()), robber)


def test_missing_configuration():
    spec = GameSpec.visible()
    cop = StrategyTable(game=spec, start_vertex=0, moves={})
    robber = ScriptedRobber(make_solver(P3, spec), [2])
    with pytest.raises(StrategyError):
        simulate(P3, spec, cop, robber)


def test_single_vertex_is_captured_at_once():
    g = build(1, [])
    spec = GameSpec.visible()
    trace = simulate(g, spec, stay_put(g, spec),
                     ScriptedRobber(make_solver(g, spec), [0]))
    assert trace.captured
    assert trace.steps == 0


def test_random_robber_is_reproducible():
    spec = GameSpec.witness(2)
    solver = make_solver(C4, spec)
    first = simulate(C4, spec, stay_put(C4, spec), RandomRobber(solver, 5),
                     cap=20)
    second = simulate(C4, spec, stay_put(C4, spec), RandomRobber(solver, 5),
                      cap=20)
    assert first == second


def test_make_robber():
    value = solve_visible(P3)
    solver = make_solver(P3, value.spec)
    assert make_robber("optimal", value, solver).start(1) in (0, 2)
    assert isinstance(make_robber("random:3", value, solver), RandomRobber)
    scripted = make_robber("script:0,1", value, solver)
    assert scripted.start(2) == 0
    with pytest.raises(StrategyError):
        make_robber("clever", value, solver)
    with pytest.raises(StrategyError):
        make_robber("script:", value, solver)

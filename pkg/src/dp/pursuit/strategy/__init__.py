from .brothers import bb_strategy, btb_witness_strategy
from .capture import capture_strategy
from .mark import MarkTable, mark_procedure, mark_strategy
from .robber import RandomRobber, ScriptedRobber, make_robber
from .shadow import shadow_strategy
from .simulate import default_cap, simulate
from .table import CopPolicy, Outcome, RobberPolicy, StrategyTable, Trace

__all__ = [
    "CopPolicy",
    "MarkTable",
    "Outcome",
    "RandomRobber",
    "RobberPolicy",
    "ScriptedRobber",
    "StrategyTable",
    "Trace",
    "bb_strategy",
    "btb_witness_strategy",
    "capture_strategy",
    "default_cap",
    "make_robber",
    "mark_procedure",
    "mark_strategy",
    "shadow_strategy",
    "simulate",
]

from .big_brother import big_brother
from .big_two_brother import big_two_brother
from .types import Decomposition, Kind
from .verify import verify_decomposition

__all__ = [
    "Decomposition",
    "Kind",
    "big_brother",
    "big_two_brother",
    "verify_decomposition",
]

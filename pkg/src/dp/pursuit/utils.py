import logging

from .config import config


def get_logger(name, level=None,
               format="%(asctime)s - %(levelname)s - %(message)s"):
    level = level or config["log_level"]
    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, level.upper()))
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setLevel(getattr(logging, level.upper()))
        handler.setFormatter(logging.Formatter(format))
        logger.addHandler(handler)
    return logger


def iter_bits(mask: int):
    """Yield the vertex identifiers of a bitmask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_tuple(mask: int) -> tuple:
    return tuple(iter_bits(mask))


def tuple_to_bits(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask

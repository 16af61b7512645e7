from .bidismantle import bidismantle, strong_bidismantle
from .bipartite import bipartite_dismantle
from .certificate import EliminationCertificate, Family
from .speed import (hyperbolic_order, mno_order, random_ss_dismantle,
                    ss_dismantle, ss_dismantle_local)
from .verify import verify_certificate

# keyed by Family value; every recognizer takes (g, **params)
recognizer_dict = {
    "ss": lambda g, s=1, s_prime=1, **kwargs: ss_dismantle(g, s, s_prime),
    "mno": lambda g, **kwargs: mno_order(g),
    "bipartite": lambda g, force=False, **kwargs: bipartite_dismantle(
        g, force=force),
    "bi": lambda g, k=2, force=False, **kwargs: bidismantle(
        g, k, force=force),
    "strongbi": lambda g, force=False, **kwargs: strong_bidismantle(
        g, force=force),
}

__all__ = [
    "EliminationCertificate",
    "Family",
    "bidismantle",
    "bipartite_dismantle",
    "hyperbolic_order",
    "mno_order",
    "random_ss_dismantle",
    "recognizer_dict",
    "ss_dismantle",
    "ss_dismantle_local",
    "strong_bidismantle",
    "verify_certificate",
]

from ..errors import CertificateError
from ..graph.core import Graph
from ..graph.structure import bipartition
from ..utils import get_logger
from .bidismantle import bi_condition, strong_condition
from .bipartite import bipartite_condition, final_edge
from .certificate import EliminationCertificate, Family
from .speed import mno_condition, ss_condition

logger = get_logger(__name__)


def _check_shape(g: Graph, cert: EliminationCertificate):
    if not isinstance(cert, EliminationCertificate):
        raise CertificateError("not an elimination certificate")
    if sorted(cert.order) != list(range(g.n)):
        raise CertificateError("order is not a permutation of 0..%d"
                               % (g.n - 1))
    kept = 2 if cert.family == Family.BIPARTITE else 1
    expected = max(g.n - kept, 0)
    if len(cert.eliminators) != expected:
        raise CertificateError("expected %d eliminators, got %d"
                               % (expected, len(cert.eliminators)))
    for e in cert.eliminators:
        members = e if cert.family.paired else (e,)
        if cert.family.paired and not (isinstance(e, tuple) and len(e) == 2):
            raise CertificateError("%s eliminators are (x, y) pairs"
                                   % cert.family.value)
        if not all(isinstance(u, int) and 0 <= u < g.n for u in members):
            raise CertificateError("eliminator %r out of range" % (e,))
    if cert.family == Family.SS_DISMANTLE and \
            not {"s", "s_prime"} <= set(cert.params):
        raise CertificateError("ss certificates carry s and s_prime")
    if cert.family.paired and "k" not in cert.params:
        raise CertificateError("bidismantling certificates carry k")


def verify_certificate(g: Graph, cert: EliminationCertificate) -> bool:
    """Re-check every elimination step of `cert` on g.

    Raises CertificateError for data that is not a certificate of g;
    returns False when a step fails its family's condition.
    """
    _check_shape(g, cert)
    family = cert.family
    if family == Family.SS_DISMANTLE:
        condition = ss_condition(cert.params["s"], cert.params["s_prime"])
    if family == Family.BIPARTITE:
        if bipartition(g) is None:
            return False
        if not final_edge(g, sum(1 << v for v in cert.order[-2:])):
            return False
    remaining = g.full_mask
    for v, e in zip(cert.order, cert.eliminators):
        members = e if family.paired else (e,)
        if any(u == v or not remaining >> u & 1 for u in members):
            logger.debug("Eliminator %r of %d is not later in the order",
                         e, v)
            return False
        if family == Family.SS_DISMANTLE:
            ok = condition(g, remaining, v, e)
        elif family == Family.MNO:
            ok = mno_condition(g, remaining, v, e)
        elif family == Family.BIPARTITE:
            ok = bipartite_condition(g, remaining, v, e)
        elif family == Family.BIDISMANTLE:
            ok = bi_condition(g, remaining, v, e[0], e[1], cert.params["k"])
        else:
            ok = strong_condition(g, remaining, v, e[0], e[1])
        if not ok:
            logger.debug("Elimination of %d by %r fails", v, e)
            return False
        remaining &= ~(1 << v)
    return True

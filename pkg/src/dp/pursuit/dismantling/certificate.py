from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Tuple, Union

from ..errors import CertificateError
from ..graph.core import format_radius, parse_radius


class Family(str, Enum):
    SS_DISMANTLE = "ss"
    MNO = "mno"
    BIPARTITE = "bipartite"
    BIDISMANTLE = "bi"
    STRONG_BIDISMANTLE = "strongbi"

    @property
    def paired(self) -> bool:
        return self in (Family.BIDISMANTLE, Family.STRONG_BIDISMANTLE)


Eliminator = Union[int, Tuple[int, int]]


@dataclass
class EliminationCertificate:
    """An elimination order with the vertex (or pair) eliminating each
    vertex.

    ``eliminators[i]`` belongs to ``order[i]``; the trailing vertices of the
    order that are never eliminated have no entry (one vertex for most
    families, the final edge for BIPARTITE).
    """
    family: Family
    order: Tuple[int, ...]
    eliminators: Tuple[Eliminator, ...]
    params: Dict[str, object] = field(default_factory=dict)

    def eliminator_of(self, v: int) -> Eliminator:
        return self.eliminators[self.order.index(v)]

    def to_dict(self):
        params = {key: format_radius(value) if key in ("s", "s_prime")
                  else value for key, value in self.params.items()}
        return {
            "family": self.family.value,
            "order": list(self.order),
            "eliminators": [list(e) if isinstance(e, tuple) else e
                            for e in self.eliminators],
            "params": params,
        }

    @classmethod
    def from_dict(cls, data) -> "EliminationCertificate":
        try:
            family = Family(data["family"])
            order = tuple(int(v) for v in data["order"])
            eliminators = tuple(
                (int(e[0]), int(e[1])) if family.paired else int(e)
                for e in data["eliminators"])
            params = {key: parse_radius(value) if key in ("s", "s_prime")
                      else value
                      for key, value in data.get("params", {}).items()}
        except (KeyError, TypeError, ValueError, IndexError) as e:
            raise CertificateError("malformed certificate: %s" % e)
        return cls(family=family, order=order, eliminators=eliminators,
                   params=params)

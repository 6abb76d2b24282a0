"""Size budgets shared by the exhaustive and exponential routines.

Every limit can be overridden per call; these are only the defaults.
"""

from dataclasses import dataclass

from .errors import ResourceLimit


@dataclass(frozen=True)
class Budgets:
    max_perm_len: int = 64        # bitmask width used by the subset DPs
    exhaustive_n: int = 10        # sweeps over all of S_n
    hamiltonian_n: int = 24       # subset DP over G_{k,n}
    overlap_m: int = 9            # full overlap graph P_m
    node_transfer_k: int = 4      # node-based transfer graph on (2k-1)-perms
    arc_transfer_k: int = 5       # arc-labeled transfer graph on (2k-2)-perms
    prohibition_k: int = 5
    poset_n: int = 20             # downset DP for linear extensions


DEFAULT = Budgets()


def check(what: str, value: int, limit: int) -> None:
    if value > limit:
        raise ResourceLimit(what, value, limit)

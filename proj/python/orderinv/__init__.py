"""Order statistics of finite groups: element-order profiles, the R and T
functionals, cyclic-subgroup counts and divisibility matchings."""

import json

from ._core import (
    FiniteGroup,
    OrderinvError,
    __version__,
    alternating,
    claims,
    cyclic,
    cyclic_subgroup_count,
    dihedral,
    direct_product,
    divisibility_matching,
    divisors,
    elementary_abelian,
    frobenius_table,
    from_cayley_table,
    from_permutations,
    g_coefficient,
    group,
    is_cyclic,
    is_nilpotent,
    is_solvable,
    moebius,
    order_profile,
    product_of_orders,
    quaternion,
    r_functional,
    semidirect,
    subgroups,
    symmetric,
    t_functional,
    totient,
)
from ._core import verify_json as _verify_json


def verify(catalog="default", claims=(), grid="default", workers=1):
    """Run the checks over a catalog and return the report as a dict."""
    return json.loads(_verify_json(catalog, list(claims), grid, workers))

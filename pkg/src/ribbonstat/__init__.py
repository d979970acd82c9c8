"""Border strip tableaux, a descent statistic on them, and fake degrees at roots of unity."""

from .bijections import phi, phi_inverse, lemma52_check
from .cycpoly import BiPoly, CycElem, CycPolyT, IntPoly, as_integer_poly, cyclotomic_poly, eval_at_root, pochhammer
from .partitions import (
    BorderStrip,
    Cell,
    EdgeSequence,
    Partition,
    PartitionTuple,
    content_multiset,
    edge_sequence,
    from_quotient,
    hook_multiset,
    k_core,
    k_quotient,
    parse_partition,
    partitions_of,
    removable_strips,
)
from .symfunc import (
    lemma46_rhs,
    mn_character,
    schur_at_root,
    schur_principal,
    ssyt_count,
    stanley_series,
    theorem_rhs,
)
from .tableaux import (
    BorderStripTableau,
    DescentData,
    SemistandardTableauTuple,
    StandardTableauTuple,
    descents_bst,
    descents_tuple,
    enumerate_bst,
    enumerate_ssyt_tuples,
    enumerate_syt,
    enumerate_syt_tuples,
    fake_degree,
    idx1,
    littlewood_inverse,
    littlewood_map,
    sign_epsilon,
    stat,
)

__version__ = "0.1.0"

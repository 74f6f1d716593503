"""Unitarizability of rank <= 3 representations over one cuspidal line.

The package is organized bottom-up: exact arithmetic (arith), segment and
multisegment combinatorics (segments), the general-linear Grothendieck ring
with its comultiplications (glring), classical-group labels (classical), the
catalogued case tables (_tables), twisted Jacquet restriction with the
multiplicity engine (jacquet), the classification layer (classifier), the
brute-force verification oracle (oracle), and the command line (cli).
"""

from .arith import HalfInt, RangeExceeded, Rational, ZeroDenominator, half, rat
from .segments import (
    EMPTY,
    GLIrrLabel,
    Multisegment,
    Segment,
    gl_is_unitarizable,
    langlands,
    make_segment,
    ms,
    mw_involution,
    zelevinsky,
)
from .glring import GLElement, GLTensor, chain_count, comult, m_star, product_key
from .classical import (
    ClassicalLabel,
    LineConfig,
    NoFormulaAvailable,
    ass_dual,
    bounds_check,
    classical,
    jord_rho,
    lt_reducibility,
    parse_classical,
    segment_constituents,
    tempered_class,
)
from ._tables import NotACataloguedCase, all_cases, case_for
from .jacquet import (
    Bounds,
    JacquetTerm,
    expand,
    mu_star,
    mu_star_induced,
    multiplicity,
    nonunit_certificate,
)
from .classifier import (
    ClassificationReport,
    ExponentQuery,
    QueryLine,
    RankExceeded,
    classify_region,
    enumerate_case,
    jantzen_classify,
    weakly_real_check,
)
from .oracle import CuspidalChain, chain_multiplicity, verify_suite

__version__ = "1.0.0"

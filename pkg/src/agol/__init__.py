"""Agol cycles of pseudo-Anosov 3-braids with exact quadratic-surd arithmetic."""

__version__ = "0.1.0"

from .braid3 import (
    BraidWord,
    Classification,
    PsaForm,
    classify,
    conjugate_in_b3,
    conjugate_mod_center,
    murasugi_form,
    parse_braid,
    rho_image,
)
from .farey import (
    L,
    R,
    FareyInterval,
    LRWord,
    Mat2,
    eigen_data,
    halve,
    lr_cycle_of_matrix,
    mat_of_word,
    word_of_interval,
)
from .garside import GarsideNF, canonical_length, left_normal_form, sss_canonical_length
from .surd import CFExpansion, Quad, cf_of_quad, cf_of_rational, quad_arith, quad_floor, quad_sign
from .traintrack import (
    AgolCycle,
    MeasuredTrack,
    agol_cycle,
    agol_cycle_of_matrix,
    base_track,
    max_split_run,
    rational_collapse,
    split,
    verify_cycle,
)

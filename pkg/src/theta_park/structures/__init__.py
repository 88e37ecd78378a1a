"""Combinatorial objects: CCTs and the involution, path pairs, the maps
phi and iota, the extended-Delta map, and drawings."""
from .cct import (
    CCT,
    CannotJoin,
    CannotSplit,
    LabeledCCT,
    LCSeq,
    NotAFixedPoint,
    can_join,
    cct_enumerate,
    fixed_points,
    is_fixed_point,
    join,
    lc_enumerate,
    lc_type,
    lc_weight_sign,
    phi,
    phi_inverse,
    psi,
    split,
)
from .extended_delta import (
    ColoredParking,
    DecoratedDyck,
    InvalidColoring,
    check_extended_delta,
    colored_parking_functions,
    decorated_dyck_paths,
    extended_delta_map,
)
from .paths import (
    ASC,
    DES,
    PICKERS,
    LatticePathPair,
    SubsetPicker,
    area_gf,
    ascent_polyominoes,
    combinatorial_expansion,
    e_composition,
    e_composition_area,
    enumerate_pf,
    gamma_dyck_paths,
    iota,
    iota_inverse,
    polyomino_expansion,
    polyominoes,
)
from .render import render, svg_pair, tikz_decorated, tikz_pair

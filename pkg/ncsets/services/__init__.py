from .bimorphism import (
    AMBIENT_ORDERS, Bimorphism, count_completions, is_bimorphism, pullback, star_complete,
)
from .checker import NCSetChecker, check_isomorphisms, check_ncset_laws
from .isomorphism import from_pair, to_pair
from .ncset_map import (
    GFMap, NCSetMap, block_symmetry, compose_maps, enumerate_gf, enumerate_ncset, forget,
    gf_compose, label_act, ncset_compose, ncset_hom_count, random_ncset,
)
from .spans import SpanClass, leg_orders, pullback_span_compose

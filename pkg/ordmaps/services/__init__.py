from .generators import GeneratorWord, Letter, decompose, layer_map, letters, recompose
from .ordered_map import (
    ID, MULT, MULT_MAP, SYMBOL_ARITY, UNIT, UNIT_MAP, OrderedMap,
    compose_mono, enumerate_mono, epi_mono, from_fiber_sizes, identity_map,
    parse_ordered_map, tensor_all, tensor_mono,
)

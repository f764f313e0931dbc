# ordmaps/services/generators.py
"""
Generator words for monotone maps.

Every monotone map factors as degeneracy layers (built from mult) followed by
one face layer (built from unit). Within a block the multiplications bracket
to the left, ((x1 x2) x3)..., so the word is unique.
"""
from dataclasses import dataclass

from utils.validators import ArityError, InvalidDataError

from .ordered_map import (
    ID, MULT, MULT_MAP, SYMBOL_ARITY, UNIT, UNIT_MAP,
    compose_mono, epi_mono, identity_map, tensor_all, tensor_mono,
)

_SYMBOL_MAP = {ID: identity_map(1), MULT: MULT_MAP, UNIT: UNIT_MAP}


def layer_arity(layer):
    inputs = sum(SYMBOL_ARITY[s][0] for s in layer)
    outputs = sum(SYMBOL_ARITY[s][1] for s in layer)
    return inputs, outputs


def layer_map(layer):
    return tensor_all(_SYMBOL_MAP[s] for s in layer)


@dataclass(frozen=True)
class GeneratorWord:
    domain: int
    layers: tuple

    def __post_init__(self):
        layers = tuple(tuple(layer) for layer in self.layers)
        width = self.domain
        for k, layer in enumerate(layers):
            if any(s not in SYMBOL_ARITY for s in layer):
                raise InvalidDataError(f"unknown symbol in layer {k}: {layer}")
            inputs, outputs = layer_arity(layer)
            if inputs != width:
                raise ArityError(f"layer {k} expects {inputs} wires but receives {width}")
            width = outputs
        object.__setattr__(self, 'layers', layers)
        object.__setattr__(self, '_codomain', width)

    @property
    def codomain(self):
        return self._codomain

    def __str__(self):
        if not self.layers:
            return f"id({self.domain})"
        return ' ; '.join(
            ' + '.join({ID: 'id(1)', MULT: 'm', UNIT: 'u'}[s] for s in layer)
            for layer in self.layers
        )


@dataclass(frozen=True)
class Letter:
    """A single generator whose output is wire `offset` of its layer"""
    symbol: str
    offset: int
    map: object


def decompose(f):
    """The canonical generator word of a monotone map"""
    surjection, injection = epi_mono(f)
    layers = []
    sizes = list(surjection.fiber_sizes())
    while any(size > 1 for size in sizes):
        layer = []
        for size in sizes:
            if size > 1:
                layer.append(MULT)
                layer.extend([ID] * (size - 2))
            else:
                layer.append(ID)
        layers.append(tuple(layer))
        sizes = [size - 1 if size > 1 else size for size in sizes]
    if not injection.is_identity():
        hit = set(injection.values)
        layers.append(tuple(ID if j in hit else UNIT for j in range(f.codomain)))
    return GeneratorWord(f.domain, tuple(layers))


def recompose(word):
    result = identity_map(word.domain)
    for layer in word.layers:
        result = compose_mono(layer_map(layer), result)
    return result


def letters(word):
    """
    Split a word into single-generator maps, first-applied first.

    Symbols of one layer are applied left to right, so a symbol sees the
    outputs of the symbols before it and the inputs of those after it.
    """
    result = []
    for layer in word.layers:
        for k, symbol in enumerate(layer):
            if symbol == ID:
                continue
            before = sum(SYMBOL_ARITY[s][1] for s in layer[:k])
            after = sum(SYMBOL_ARITY[s][0] for s in layer[k + 1:])
            letter_map = tensor_mono(
                tensor_mono(identity_map(before), _SYMBOL_MAP[symbol]),
                identity_map(after),
            )
            result.append(Letter(symbol, before, letter_map))
    return result

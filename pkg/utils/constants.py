# utils/constants.py

# Crossed families of middle elements
SYMMETRIC = 'symmetric'
HYPEROCTAHEDRAL = 'hyperoctahedral'
BRAID = 'braid'
RIBBON = 'ribbon'

FAMILIES = (SYMMETRIC, HYPEROCTAHEDRAL, BRAID, RIBBON)

# Families whose middle groups are finite and can be enumerated
FINITE_FAMILIES = (SYMMETRIC, HYPEROCTAHEDRAL)

# Span PROP variants: covariant leg first, contravariant leg second.
# A = ordered labelled fibers (GF(as)), V = unordered labelled fibers (GF).
SPAN_VARIANTS = ('AA', 'VA', 'AV', 'VV')

# Double categories matched to each span variant
AMBIENT_FOR_VARIANT = {
    'AA': 'GFas2',
    'VA': 'V',
    'AV': 'H',
    'VV': 'GF2',
}

AMBIENTS = ('GFas2', 'GF2', 'V', 'H')

# Braiding kinds of a matrix model
FLIP = 'flip'
SIGN = 'sign'
NO_BRAIDING = 'none'
BRAIDINGS = (FLIP, SIGN, NO_BRAIDING)

# Flags of the hyperoctahedral family, stored as 0 (+) and 1 (-)
FLAG_PLUS = 0
FLAG_MINUS = 1

DEFAULT_PRIME = 5

# semantics/services/linalg.py
"""
Exact matrix arithmetic over ℤ/p with numpy int64 arrays.

A morphism n→m over a d-dimensional carrier is a d^m × d^n matrix. Basis
vectors of V^⊗n are indexed row-major: strand 0 is the most significant
digit, so kron(A, B) puts A on the first strands.
"""
import itertools

import numpy as np

from utils.helpers import setting
from utils.validators import ArityError, EvaluationSizeError, InvalidDataError

# entries stay below p, so p² times the largest inner dimension fits in int64
MAX_PRIME = 1 << 20


def is_prime(p):
    return p >= 2 and all(p % k for k in range(2, int(p ** 0.5) + 1))


def require_prime(p):
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p) or p >= MAX_PRIME:
        raise InvalidDataError(f"modulus {p!r} must be a prime below {MAX_PRIME}")
    return p


def require_size(rows, cols):
    limit = setting('MAX_TENSOR_ENTRIES')
    if rows * cols > limit:
        raise EvaluationSizeError(f"a {rows}x{cols} matrix exceeds the {limit} entry limit")


def as_matrix(p, values, shape, what='matrix'):
    """Reduce a nested list (or array) mod p and check its shape"""
    try:
        matrix = np.asarray(values, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise InvalidDataError(f"{what} is not an integer matrix: {e}") from None
    if matrix.shape != tuple(shape):
        raise ArityError(f"{what} has shape {matrix.shape}, expected {tuple(shape)}")
    return np.mod(matrix, p)


def identity(d, n=1):
    size = d ** n
    require_size(size, size)
    return np.eye(size, dtype=np.int64)


def matmul(p, *matrices):
    """Product of matrices listed left to right, reduced mod p after every step"""
    result = matrices[0]
    for matrix in matrices[1:]:
        if result.shape[1] != matrix.shape[0]:
            raise ArityError(f"cannot multiply {result.shape} by {matrix.shape}")
        require_size(result.shape[0], matrix.shape[1])
        result = np.mod(result @ matrix, p)
    return result


def kron_all(p, matrices):
    result = np.ones((1, 1), dtype=np.int64)
    for matrix in matrices:
        require_size(result.shape[0] * matrix.shape[0], result.shape[1] * matrix.shape[1])
        result = np.mod(np.kron(result, matrix), p)
    return result


def power(p, matrix, exponent, inverse=None):
    """matrix**exponent; negative exponents use `inverse`"""
    if exponent < 0:
        matrix, exponent = inverse, -exponent
    result = np.eye(matrix.shape[0], dtype=np.int64)
    for _ in range(exponent):
        result = np.mod(result @ matrix, p)
    return result


def inverse_mod(p, matrix):
    """Gauss-Jordan inverse over ℤ/p"""
    n = matrix.shape[0]
    if matrix.shape != (n, n):
        raise ArityError(f"only square matrices have inverses, got {matrix.shape}")
    work = np.concatenate([np.mod(matrix, p), np.eye(n, dtype=np.int64)], axis=1)
    for col in range(n):
        pivots = np.nonzero(work[col:, col])[0]
        if not len(pivots):
            raise InvalidDataError(f"matrix is singular mod {p}")
        row = col + pivots[0]
        work[[col, row]] = work[[row, col]]
        work[col] = np.mod(work[col] * pow(int(work[col, col]), -1, p), p)
        for other in range(n):
            if other != col and work[other, col]:
                work[other] = np.mod(work[other] - work[other, col] * work[col], p)
    return work[:, n:]


# ============= STRAND STATES =============
# A state is a (d^k, C) array: k strands of the carrier times C input columns.

def require_state(size):
    limit = setting('MAX_TENSOR_ENTRIES')
    if size > limit:
        raise EvaluationSizeError(f"a state of {size} entries exceeds the {limit} entry limit")


def koszul_signs(d, perm, parity):
    """±1 per basis tensor: one sign for every crossing of two odd factors"""
    n = len(perm)
    odd = np.asarray(parity, dtype=np.int64)
    signs = np.ones((d,) * n, dtype=np.int64)
    for k, l in itertools.combinations(range(n), 2):
        if perm[k] > perm[l]:
            shape_k, shape_l = [1] * n, [1] * n
            shape_k[k], shape_l[l] = d, d
            signs = signs * np.where(odd.reshape(shape_k) & odd.reshape(shape_l), -1, 1)
    return signs


def permute_strands(p, d, state, perm, parity=None):
    """Move strand k of the state to position perm[k]"""
    n = len(perm)
    if n == 0:
        return state
    cols = state.shape[1]
    tensor = state.reshape((d,) * n + (cols,))
    if parity is not None and any(parity):
        tensor = tensor * koszul_signs(d, perm, parity)[..., None]
    back = [0] * n
    for k, target in enumerate(perm):
        back[target] = k
    tensor = np.transpose(tensor, tuple(back) + (n,))
    return np.mod(tensor, p).reshape(d ** n, cols)


def act_on_strands(p, d, state, matrices):
    """Apply matrices[j] (d×d, or None for the identity) to strand j"""
    n = len(matrices)
    cols = state.shape[1]
    tensor = state.reshape((d,) * n + (cols,))
    for j, matrix in enumerate(matrices):
        if matrix is None:
            continue
        tensor = np.moveaxis(np.tensordot(matrix, tensor, axes=([1], [j])), 0, j)
    return np.mod(tensor, p).reshape(d ** n, cols)


def apply_blocks(p, d, state, blocks):
    """
    Apply block maps left to right across the strands.

    Each block is (width, matrix) with matrix of shape (d^out, d^width);
    the blocks must consume every strand of the state.
    """
    cols = state.shape[1]
    current = state.reshape(1, state.shape[0], cols)
    for width, matrix in blocks:
        done, rest = current.shape[0], current.shape[1]
        consumed = d ** width
        if rest % consumed:
            raise ArityError(f"a block of width {width} does not fit the remaining strands")
        remaining = rest // consumed
        require_state(done * matrix.shape[0] * remaining * cols)
        view = current.reshape(done, consumed, remaining, cols)
        current = np.mod(np.einsum('ok,bkrc->borc', matrix, view), p)
        current = current.reshape(done * matrix.shape[0], remaining, cols)
    if current.shape[1] != 1:
        raise ArityError("blocks left strands unconsumed")
    return current.reshape(current.shape[0], cols)


def permutation_matrix(p, d, perm, parity=None):
    """
    The strand permutation sending strand k to position perm[k].

    With a parity vector every crossing of two odd basis vectors
    contributes a sign, which is the Koszul sign of the permutation.
    """
    return permute_strands(p, d, identity(d, len(perm)), perm, parity)


def swap_matrix(p, d, parity=None):
    return permutation_matrix(p, d, (1, 0), parity)


def equal_mod(p, a, b):
    return a.shape == b.shape and bool(np.all(np.mod(a - b, p) == 0))


def diff_weight(p, a, b):
    """Number of entries where a and b differ mod p; the failure size reported by checkers"""
    if a.shape != b.shape:
        return -1
    return int(np.count_nonzero(np.mod(a - b, p)))

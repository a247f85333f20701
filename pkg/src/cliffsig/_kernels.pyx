# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled blade kernels.

Mirrors cliffsig._kernels_py exactly; see that module for the semantics.
Masks fit in an unsigned int (the dimension cap is far below 32 bits).
"""


cdef inline int _popcount(unsigned int x) nogil:
    x = x - ((x >> 1) & 0x55555555u)
    x = (x & 0x33333333u) + ((x >> 2) & 0x33333333u)
    x = (x + (x >> 4)) & 0x0F0F0F0Fu
    return <int>((x * 0x01010101u) >> 24)


cdef inline int _reorder_sign(unsigned int a, unsigned int b) nogil:
    cdef int swaps = 0
    a >>= 1
    while a:
        swaps += _popcount(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


def grade(unsigned int mask):
    """Number of basis vectors in the blade."""
    return _popcount(mask)


def reorder_sign(unsigned int a, unsigned int b):
    """Parity sign of the permutation merging two increasing index lists."""
    return _reorder_sign(a, b)


def blade_metric_sign(unsigned int mask, unsigned int neg_mask):
    """Product of the generator squares over the blade's index set."""
    return -1 if _popcount(mask & neg_mask) & 1 else 1


def blade_mul(unsigned int a, unsigned int b, unsigned int neg_mask):
    """Geometric product of two blades: (sign, result mask)."""
    cdef int sign = _reorder_sign(a, b)
    if _popcount(a & b & neg_mask) & 1:
        sign = -sign
    return sign, a ^ b


def blade_wedge(unsigned int a, unsigned int b):
    """Exterior product of two blades: (sign, mask), sign 0 on overlap."""
    if a & b:
        return 0, 0
    return _reorder_sign(a, b), a | b


def blade_left_contract(unsigned int a, unsigned int b, unsigned int neg_mask):
    """a left-contracted onto b: nonzero only when a's indices lie in b's."""
    if a & ~b:
        return 0, 0
    return blade_mul(a, b, neg_mask)


def blade_right_contract(unsigned int a, unsigned int b, unsigned int neg_mask):
    """a right-contracted by b: nonzero only when b's indices lie in a's."""
    if b & ~a:
        return 0, 0
    return blade_mul(a, b, neg_mask)

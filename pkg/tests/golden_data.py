"""Hand-transcribed golden data shared by test modules.

The 31 triangle-set signatures of the five-line isomorphism classes, for
angle-ordered subscripts: one cyclically symmetric set, then six families
of five cyclic translates each (i -> i+1 mod 5).
"""


def _t(*codes):
    return frozenset(tuple(int(c) for c in str(k)) for k in codes)


FIVE_LINE_CLASS_SIGNATURES = frozenset([
    _t(124, 245, 235, 135, 134),

    _t(123, 235, 245, 145), _t(234, 134, 135, 125), _t(345, 245, 124, 123),
    _t(145, 135, 235, 234), _t(125, 124, 134, 345),

    _t(135, 125, 124), _t(124, 123, 235), _t(235, 234, 134),
    _t(134, 345, 245), _t(245, 145, 135),

    _t(123, 125, 145), _t(234, 123, 125), _t(345, 234, 123),
    _t(145, 345, 234), _t(125, 145, 345),

    _t(134, 235, 245), _t(245, 134, 135), _t(135, 245, 124),
    _t(124, 135, 235), _t(235, 124, 134),

    _t(345, 123, 245), _t(145, 234, 135), _t(125, 345, 124),
    _t(123, 145, 235), _t(234, 125, 134),

    _t(235, 234, 145), _t(134, 345, 125), _t(245, 145, 123),
    _t(135, 125, 234), _t(124, 123, 345),
])

assert len(FIVE_LINE_CLASS_SIGNATURES) == 31

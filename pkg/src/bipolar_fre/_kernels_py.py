"""Pure-Python subset sweeps over row-coverage bitmasks.

Column ``j`` is bit ``j``. For each row ``i`` the caller supplies two masks:
the columns through which the row can be met on the ``x̄`` side and on the
``ȳ`` side. ``eq`` marks the columns with ``x̄_j + ȳ_j == 1``, the only ones
allowed on both sides at once.

Must stay result-for-result identical to ``_ckernels.pyx``.
"""


def sweep_family(own, other, m, eq):
    """All ``J`` in ``[0, 2^m)`` such that ``(J, (~J) | eq)`` covers every row.

    Coverage only grows with the partner set, and ``(~J) | eq`` is the largest
    partner compatible with ``J``, so this is exact membership in the family.
    Returned in increasing order.
    """
    full = (1 << m) - 1
    rows = list(zip(own, other))
    out = []
    for J in range(1 << m):
        partner = (full & ~J) | eq
        for o, t in rows:
            if not (o & J or t & partner):
                break
        else:
            out.append(J)
    return out


def find_assignment(plus, minus, m, eq):
    """First ``J+`` (as a mask) of some feasible pair, or -1.

    Columns in ``eq`` sit on both sides; the rest are split between ``J+``
    and ``J-`` in every possible way, in increasing submask order.
    """
    full = (1 << m) - 1
    free = full & ~eq
    rows = list(zip(plus, minus))
    sub = 0
    while True:
        jp = sub | eq
        jm = (free & ~sub) | eq
        for p, q in rows:
            if not (p & jp or q & jm):
                break
        else:
            return jp
        sub = (sub - free) & free
        if sub == 0:
            return -1


def maximal_masks(masks):
    """Inclusion-maximal members of ``masks``, largest popcount first."""
    order = sorted(set(masks), key=lambda s: (-s.bit_count(), s))
    maxima = []
    for s in order:
        for t in maxima:
            if s & t == s:
                break
        else:
            maxima.append(s)
    return maxima

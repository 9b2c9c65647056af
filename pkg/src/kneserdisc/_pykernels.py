"""Pure-Python reference implementations of the hot kernels.

kneserdisc.kernels selects the compiled twin (_ckernels) when it is
importable and falls back to this module otherwise.  Both expose the same
four functions with identical semantics, and the test suite cross-checks
them on random instances whenever the compiled module is present.

All masks are plain ints with bit j = element j.  Scores are carried
doubled (score2 = 2 * score) so half-integer shifts stay exact.
"""

from array import array
from math import comb

BACKEND = "pure"


def exhaustive_min_max(n, edge_masks, r, w2, start, stop):
    """Scan colorings with Gray-code index in [start, stop).

    For each blue-set mask the score is max over edges of
    |2*r*blue(e) - 2*|e| + w2|.  Returns (best_score2, best_mask),
    minimizing the score and breaking ties toward the numerically
    smallest mask.
    """
    num_edges = len(edge_masks)
    if num_edges == 0:
        return 0, 0
    # Edges incident to each vertex, for the single-flip updates.
    incident = [[] for _ in range(n)]
    for ei, em in enumerate(edge_masks):
        m = em
        while m:
            low = m & -m
            incident[low.bit_length() - 1].append(ei)
            m ^= low
    step = 2 * r

    mask = (start >> 1) ^ start
    d2 = [step * (mask & em).bit_count() - 2 * em.bit_count() + w2
          for em in edge_masks]

    best2 = None
    best_mask = 0
    i = start
    while True:
        hi = 0
        for x in d2:
            a = x if x >= 0 else -x
            if a > hi:
                hi = a
        if best2 is None or hi < best2 or (hi == best2 and mask < best_mask):
            best2 = hi
            best_mask = mask
        i += 1
        if i >= stop:
            break
        flip = (i & -i).bit_length() - 1
        bit = 1 << flip
        mask ^= bit
        delta = step if mask & bit else -step
        for ei in incident[flip]:
            d2[ei] += delta
    return best2, best_mask


def assign_labels(n, k, masks, thrs, c):
    """First-match labels for all k-subsets of an n-universe.

    Subsets are visited in colexicographic order.  Subset A gets code j for
    the first j with c * |A & masks[j]| > thrs[j], or -1 if none matches.
    Returns an array('l') of codes aligned with the enumeration.
    """
    total = comb(n, k)
    codes = array("l", bytes(array("l").itemsize * total))
    pairs = list(zip(masks, thrs))
    mask = (1 << k) - 1 if k else 0
    for idx in range(total):
        code = -1
        for j, (m, t) in enumerate(pairs):
            if c * (mask & m).bit_count() > t:
                code = j
                break
        codes[idx] = code
        low = mask & -mask
        ripple = mask + low
        mask = ripple | ((mask ^ ripple) >> (low.bit_length() + 1))
    return codes


def low_intersection_pairs(masks, s, max_pairs):
    """Index pairs (i, j), i < j, with |masks[i] & masks[j]| < s.

    Scans in row-major order and stops after max_pairs hits.
    """
    out = []
    count = len(masks)
    for i in range(count):
        mi = masks[i]
        for j in range(i + 1, count):
            if (mi & masks[j]).bit_count() < s:
                out.append((i, j))
                if len(out) >= max_pairs:
                    return out
    return out


def signed_low_pairs(plus, minus, threshold, max_pairs):
    """Pairs of signed vectors with scalar product below threshold.

    The scalar product of (p1, m1) and (p2, m2) is
    |p1&p2| + |m1&m2| - |p1&m2| - |m1&p2|.
    """
    out = []
    count = len(plus)
    for i in range(count):
        pi = plus[i]
        mi = minus[i]
        for j in range(i + 1, count):
            sp = ((pi & plus[j]).bit_count() + (mi & minus[j]).bit_count()
                  - (pi & minus[j]).bit_count() - (mi & plus[j]).bit_count())
            if sp < threshold:
                out.append((i, j))
                if len(out) >= max_pairs:
                    return out
    return out

"""Pure-Python versions of the hot kernels.

Letters are small ints: generator ``i`` is ``2*i``, its inverse ``2*i + 1``,
so ``l ^ 1`` inverts and integer order is the canonical letter order.
The compiled module ``_speedups`` exposes the same functions with the same
results; this module is the fallback and the reference for the tests.
"""

from collections import defaultdict


def free_reduce(letters):
    out = []
    for l in letters:
        if out and out[-1] == l ^ 1:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def least_rotation(s):
    """Booth's algorithm: start index of the lexicographically least rotation."""
    n = len(s)
    if n == 0:
        return 0
    d = list(s) + list(s)
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = d[j]
        i = f[j - k - 1]
        while i != -1 and sj != d[k + i + 1]:
            if sj < d[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != d[k + i + 1]:
            if sj < d[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


def canonical(letters):
    """Freely and cyclically reduce, then rotate to the least rotation."""
    t = free_reduce(letters)
    i, j = 0, len(t) - 1
    while i < j and t[i] == t[j] ^ 1:
        i += 1
        j -= 1
    t = t[i:j + 1]
    k = least_rotation(t)
    return t[k:] + t[:k]


def smallest_period(t):
    """Smallest p dividing len(t) with t equal to its rotation by p."""
    n = len(t)
    for p in range(1, n + 1):
        if n % p == 0 and t[p:] + t[:p] == t:
            return p
    return n


def parallel_relation(x, y):
    """+1 if x, y are powers of one primitive class, -1 if of mutually
    inverse classes, 0 otherwise.  Inputs must be canonical."""
    rx = x[:smallest_period(x)]
    ry = y[:smallest_period(y)]
    if rx == ry:
        return 1
    if rx == canonical([l ^ 1 for l in reversed(ry)]):
        return -1
    return 0


def outward_offsets(pos, w, t, bound):
    """Offset sequence of passage ``t`` of ``w`` read outward from the
    positive arc of its band.

    Entry k is the ccw distance from the arc the strand has just entered
    to the dart it leaves by, so two ends compare lexicographically exactly
    as their itineraries do at the first divergence.
    """
    nd = len(pos)
    L = len(w)
    forward = not (w[t] & 1)
    prev = w[t] if forward else w[t] ^ 1
    out = []
    for k in range(1, bound + 1):
        cur = w[(t + k) % L] if forward else w[(t - k) % L] ^ 1
        out.append((pos[cur] - pos[prev ^ 1]) % nd)
        prev = cur
    return tuple(out)


def strand_slots(pos, x, y, rel):
    """Assign every passage of x and y to a slot on both arcs of its band.

    Returns ``(slots, counts)``: ``slots[c][t] = (departure_slot,
    arrival_slot)`` for passage ``t`` of curve ``c``; ``counts[g]`` is the
    number of passages through band ``g``.
    """
    words = (x, y)
    bound = len(x) + len(y)
    bands = defaultdict(list)
    for c, w in enumerate(words):
        for t, l in enumerate(w):
            forward = not (l & 1)
            if c == 0:
                bundle = 0 if forward else 1
            else:
                # direction of the curve-0 end parallel to this one, if any
                x_forward = forward if rel >= 0 else not forward
                bundle = 1 if x_forward else 0
            key = (outward_offsets(pos, w, t, bound), bundle, t if forward else -t)
            bands[l >> 1].append((key, c, t))
    slots = ([None] * len(x), [None] * len(y))
    counts = {}
    for g, ends in bands.items():
        ends.sort()
        m = len(ends)
        counts[g] = m
        for r, (_, c, t) in enumerate(ends):
            if words[c][t] & 1:
                slots[c][t] = (m - 1 - r, r)
            else:
                slots[c][t] = (r, m - 1 - r)
    return slots, counts


def crossings(pos, x, y, rel):
    """Signed crossings ``(i, j, sign)`` between junction chords of x and y."""
    slots, counts = strand_slots(pos, x, y, rel)
    nd = len(pos)
    order = [0] * nd
    for d in range(nd):
        order[pos[d]] = d
    base = [0] * nd
    acc = 0
    for q in range(nd):
        base[order[q]] = acc
        acc += counts.get(order[q] >> 1, 0)
    total = acc

    def chords(w, sl):
        L = len(w)
        res = []
        for i in range(L):
            a = w[i - 1] ^ 1
            res.append((base[a] + sl[i - 1][1], base[w[i]] + sl[i][0]))
        return res

    cx = chords(x, slots[0])
    cy = chords(y, slots[1])
    out = []
    for i, (xi, xo) in enumerate(cx):
        ro = (xo - xi) % total
        for j, (yi, yo) in enumerate(cy):
            ryi = (yi - xi) % total
            ryo = (yo - xi) % total
            if (ryi < ro) != (ryo < ro):
                out.append((i, j, 1 if ryi < ro else -1))
    return out

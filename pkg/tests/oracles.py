"""Independent reference computations used only by the tests.

None of these share code paths with the strand-sorting bracket: they use
brute force over rotations, the homology intersection form, or a bracket
drawn with randomly ordered bands.
"""

from collections import Counter


def brute_canonical(letters):
    """Reduce by repeated pair deletion, strip conjugators, min over rotations."""
    t = list(letters)
    changed = True
    while changed:
        changed = False
        for k in range(len(t) - 1):
            if t[k] == t[k + 1] ^ 1:
                del t[k:k + 2]
                changed = True
                break
    while len(t) >= 2 and t[0] == t[-1] ^ 1:
        t = t[1:-1]
    if not t:
        return ()
    return min(tuple(t[k:] + t[:k]) for k in range(len(t)))


def intersection_form(surface):
    """Algebraic intersection of the single-letter loops, same sign rule."""
    n = surface.rank
    pos = surface.pos
    nd = 2 * n
    J = [[0] * n for _ in range(n)]
    for g in range(n):
        for h in range(n):
            if g == h:
                continue
            xi, xo = pos[2 * g + 1], pos[2 * g]
            yi, yo = pos[2 * h + 1], pos[2 * h]
            ro, ryi, ryo = (xo - xi) % nd, (yi - xi) % nd, (yo - xi) % nd
            if (ryi < ro) != (ryo < ro):
                J[g][h] = 1 if ryi < ro else -1
    return J


def homology(letters, rank):
    v = [0] * rank
    for l in letters:
        v[l >> 1] += -1 if l & 1 else 1
    return v


def homological_intersection(surface, x, y):
    J = intersection_form(surface)
    vx, vy = homology(x, surface.rank), homology(y, surface.rank)
    return sum(vx[g] * J[g][h] * vy[h] for g in range(surface.rank) for h in range(surface.rank))


def random_drawing_bracket(surface, x, y, rng):
    """Bracket from a random band-consistent drawing of x and y.

    Any parallel arrangement inside bands gives transversal representatives,
    so the signed sum of loop products must not depend on the choice.
    Returns a dict canonical-letters -> coefficient.
    """
    words = (tuple(x), tuple(y))
    bands = {}
    for c, w in enumerate(words):
        for t, l in enumerate(w):
            bands.setdefault(l >> 1, []).append((c, t))
    slot = {}
    counts = {}
    for g, passages in bands.items():
        rng.shuffle(passages)
        m = len(passages)
        counts[g] = m
        for r, (c, t) in enumerate(passages):
            # (departure slot, arrival slot)
            slot[c, t] = (m - 1 - r, r) if words[c][t] & 1 else (r, m - 1 - r)
    circle = []
    for d in surface.dart_order:
        for s in range(counts.get(d >> 1, 0)):
            circle.append((d, s))
    where = {e: k for k, e in enumerate(circle)}

    def chords(c):
        w = words[c]
        return [(where[w[i - 1] ^ 1, slot[c, (i - 1) % len(w)][1]], where[w[i], slot[c, i][0]])
                for i in range(len(w))]

    total = len(circle)
    acc = Counter()
    for i, (xi, xo) in enumerate(chords(0)):
        for j, (yi, yo) in enumerate(chords(1)):
            ro, ryi, ryo = (xo - xi) % total, (yi - xi) % total, (yo - xi) % total
            if (ryi < ro) != (ryo < ro):
                sign = 1 if ryi < ro else -1
                acc[brute_canonical(words[0][i:] + words[0][:i] + words[1][j:] + words[1][:j])] += sign
    return {k: v for k, v in acc.items() if v}

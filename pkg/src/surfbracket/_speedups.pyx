# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the functions in ``_pykernels``.

Same signatures, same results; see that module for the letter encoding and
the meaning of each routine.
"""

from libc.stdlib cimport malloc, free


cdef int _reduce_into(tuple letters, int *buf):
    cdef Py_ssize_t i, n = len(letters)
    cdef int top = 0, l
    for i in range(n):
        l = letters[i]
        if top > 0 and buf[top - 1] == (l ^ 1):
            top -= 1
        else:
            buf[top] = l
            top += 1
    return top


cdef int _booth(int *s, int n, int *f):
    # f needs 2n ints
    cdef int j, i, k = 0, sj
    if n == 0:
        return 0
    for j in range(2 * n):
        f[j] = -1
    for j in range(1, 2 * n):
        sj = s[j % n]
        i = f[j - k - 1]
        while i != -1 and sj != s[(k + i + 1) % n]:
            if sj < s[(k + i + 1) % n]:
                k = j - i - 1
            i = f[i]
        if sj != s[(k + i + 1) % n]:
            if sj < s[k % n]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


def free_reduce(tuple letters):
    cdef int n = len(letters), top, i
    cdef int *buf = <int *> malloc((n + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    try:
        top = _reduce_into(letters, buf)
        return tuple([buf[i] for i in range(top)])
    finally:
        free(buf)


def least_rotation(s):
    cdef tuple t = tuple(s)
    cdef int n = len(t), i, k
    cdef int *buf = <int *> malloc((n + 1) * sizeof(int))
    cdef int *f = <int *> malloc((2 * n + 1) * sizeof(int))
    if buf == NULL or f == NULL:
        free(buf)
        free(f)
        raise MemoryError()
    try:
        for i in range(n):
            buf[i] = t[i]
        k = _booth(buf, n, f)
        return k
    finally:
        free(buf)
        free(f)


def canonical(tuple letters):
    cdef int n = len(letters), top, lo, hi, m, k, i
    cdef int *buf = <int *> malloc((n + 1) * sizeof(int))
    cdef int *f = <int *> malloc((2 * n + 1) * sizeof(int))
    if buf == NULL or f == NULL:
        free(buf)
        free(f)
        raise MemoryError()
    try:
        top = _reduce_into(letters, buf)
        lo = 0
        hi = top - 1
        while lo < hi and buf[lo] == (buf[hi] ^ 1):
            lo += 1
            hi -= 1
        m = hi - lo + 1
        k = _booth(buf + lo, m, f)
        return tuple([buf[lo + (k + i) % m] for i in range(m)])
    finally:
        free(buf)
        free(f)


def smallest_period(tuple t):
    cdef int n = len(t), p, i
    cdef bint ok
    for p in range(1, n + 1):
        if n % p:
            continue
        ok = True
        for i in range(n - p):
            if t[i] != t[i + p]:
                ok = False
                break
        if ok:
            return p
    return n


def parallel_relation(tuple x, tuple y):
    rx = x[:smallest_period(x)]
    ry = y[:smallest_period(y)]
    if rx == ry:
        return 1
    if rx == canonical(tuple([l ^ 1 for l in reversed(ry)])):
        return -1
    return 0


cdef int _cmp_ends(int a, int b, int *offs, int B, int *bundle, int *within):
    cdef int k, oa, ob
    for k in range(B):
        oa = offs[a * B + k]
        ob = offs[b * B + k]
        if oa != ob:
            return -1 if oa < ob else 1
    if bundle[a] != bundle[b]:
        return -1 if bundle[a] < bundle[b] else 1
    if within[a] != within[b]:
        return -1 if within[a] < within[b] else 1
    return 0


def crossings(pos, tuple x, tuple y, int rel):
    cdef int nd = len(pos), L = len(x), M = len(y)
    cdef int P = L + M, B = L + M
    cdef int e, c, t, k, l, cur, prev, wl, g, r, m, q, acc, total, i, j, a, tmp
    cdef int xi, xo, yi, yo, ro, ryi, ryo
    cdef bint fwd
    cdef int *ipos = <int *> malloc(nd * sizeof(int))
    cdef int *word = <int *> malloc((P + 1) * sizeof(int))
    cdef int *start = <int *> malloc(2 * sizeof(int))
    cdef int *length = <int *> malloc(2 * sizeof(int))
    cdef int *offs = <int *> malloc((P * B + 1) * sizeof(int))
    cdef int *bundle = <int *> malloc((P + 1) * sizeof(int))
    cdef int *within = <int *> malloc((P + 1) * sizeof(int))
    cdef int *members = <int *> malloc((P + 1) * sizeof(int))
    cdef int *dep = <int *> malloc((P + 1) * sizeof(int))
    cdef int *arr = <int *> malloc((P + 1) * sizeof(int))
    cdef int *counts = <int *> malloc((nd // 2 + 1) * sizeof(int))
    cdef int *base = <int *> malloc((nd + 1) * sizeof(int))
    cdef int *order = <int *> malloc((nd + 1) * sizeof(int))
    cdef int *cin = <int *> malloc((P + 1) * sizeof(int))
    cdef int *cout = <int *> malloc((P + 1) * sizeof(int))
    cdef list out = []
    try:
        if (ipos == NULL or word == NULL or start == NULL or length == NULL
                or offs == NULL or bundle == NULL or within == NULL
                or members == NULL or dep == NULL or arr == NULL
                or counts == NULL or base == NULL or order == NULL
                or cin == NULL or cout == NULL):
            raise MemoryError()
        for q in range(nd):
            ipos[q] = pos[q]
        for t in range(L):
            word[t] = x[t]
        for t in range(M):
            word[L + t] = y[t]
        start[0] = 0
        start[1] = L
        length[0] = L
        length[1] = M

        # outward offset rows and parallel tie-break keys
        for e in range(P):
            c = 0 if e < L else 1
            t = e - start[c]
            wl = length[c]
            l = word[e]
            fwd = (l & 1) == 0
            prev = l if fwd else l ^ 1
            for k in range(1, B + 1):
                if fwd:
                    cur = word[start[c] + (t + k) % wl]
                else:
                    cur = word[start[c] + ((t - k) % wl + wl) % wl] ^ 1
                offs[e * B + k - 1] = ((ipos[cur] - ipos[prev ^ 1]) % nd + nd) % nd
                prev = cur
            if c == 0:
                bundle[e] = 0 if fwd else 1
            else:
                if rel >= 0:
                    bundle[e] = 1 if fwd else 0
                else:
                    bundle[e] = 0 if fwd else 1
            within[e] = t if fwd else -t

        # per band: insertion sort of the passages, then slots on both arcs
        for g in range(nd // 2):
            m = 0
            for e in range(P):
                if (word[e] >> 1) == g:
                    a = e
                    j = m
                    while j > 0 and _cmp_ends(members[j - 1], a, offs, B, bundle, within) > 0:
                        members[j] = members[j - 1]
                        j -= 1
                    members[j] = a
                    m += 1
            counts[g] = m
            for r in range(m):
                e = members[r]
                if word[e] & 1:
                    dep[e] = m - 1 - r
                    arr[e] = r
                else:
                    dep[e] = r
                    arr[e] = m - 1 - r

        for q in range(nd):
            order[ipos[q]] = q
        acc = 0
        for q in range(nd):
            base[order[q]] = acc
            acc += counts[order[q] >> 1]
        total = acc

        # chord endpoints: in = arrival end of the previous passage
        for c in range(2):
            wl = length[c]
            for t in range(wl):
                e = start[c] + t
                tmp = start[c] + (t - 1 + wl) % wl
                cin[e] = base[word[tmp] ^ 1] + arr[tmp]
                cout[e] = base[word[e]] + dep[e]

        for i in range(L):
            xi = cin[i]
            xo = cout[i]
            ro = (xo - xi + total) % total
            for j in range(M):
                yi = cin[L + j]
                yo = cout[L + j]
                ryi = (yi - xi + total) % total
                ryo = (yo - xi + total) % total
                if (ryi < ro) != (ryo < ro):
                    out.append((i, j, 1 if ryi < ro else -1))
        return out
    finally:
        free(ipos)
        free(word)
        free(start)
        free(length)
        free(offs)
        free(bundle)
        free(within)
        free(members)
        free(dep)
        free(arr)
        free(counts)
        free(base)
        free(order)
        free(cin)
        free(cout)

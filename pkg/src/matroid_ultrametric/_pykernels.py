"""Pure-Python bitmask kernels.

Reference twin of ``_ckernels.pyx``; both modules expose the same functions
with the same signatures and must return identical results.

Subsets of an ``n``-element ground set are ints whose bit ``i`` marks
position ``i``. Weighted kernels take integer *keys*: any order-preserving
relabelling of the weights. Every weighted quantity computed here is a
min/max of input weights, so it commutes with such a relabelling.
"""

BACKEND = "python"


def rank_table(n, bases):
    """Rank of every subset, as a ``bytearray`` indexed by mask."""
    size = 1 << n
    indep = bytearray(size)
    for b in bases:
        indep[b] = 1
    for s in range(size - 1, 0, -1):
        if indep[s]:
            t = s
            while t:
                low = t & -t
                indep[s ^ low] = 1
                t ^= low
    rank = bytearray(size)
    for s in range(1, size):
        if indep[s]:
            rank[s] = bin(s).count("1")
        else:
            best = 0
            t = s
            while t:
                low = t & -t
                r = rank[s ^ low]
                if r > best:
                    best = r
                t ^= low
            rank[s] = best
    return rank


def minimal_dependent_sets(n, rank):
    """Masks of all circuits, in increasing mask order."""
    out = []
    for s in range(1, 1 << n):
        k = bin(s).count("1")
        if rank[s] != k - 1:
            continue
        t = s
        ok = True
        while t:
            low = t & -t
            if rank[s ^ low] != k - 1:
                ok = False
                break
            t ^= low
        if ok:
            out.append(s)
    return out


def closed_sets(n, rank):
    """Masks of all flats, in increasing mask order."""
    full = (1 << n) - 1
    out = []
    for s in range(1 << n):
        r = rank[s]
        t = full ^ s
        ok = True
        while t:
            low = t & -t
            if rank[s | low] == r:
                ok = False
                break
            t ^= low
        if ok:
            out.append(s)
    return out


def blue_keys(n, cocircuits, keys):
    """Per element: the largest cocircuit minimum over cocircuits containing it."""
    best = [-1] * n
    for c in cocircuits:
        m = None
        t = c
        while t:
            low = t & -t
            k = keys[low.bit_length() - 1]
            if m is None or k < m:
                m = k
            t ^= low
        t = c
        while t:
            low = t & -t
            i = low.bit_length() - 1
            if m > best[i]:
                best[i] = m
            t ^= low
    return [keys[i] if best[i] < 0 else best[i] for i in range(n)]


def red_keys(n, circuits, keys):
    """Per element: min of its own key and every ``max(C - e)`` over circuits ``C`` containing it."""
    out = list(keys)
    for c in circuits:
        if not c & (c - 1):
            # loop: C - e is empty
            continue
        top = second = -1
        count = 0
        t = c
        while t:
            low = t & -t
            k = keys[low.bit_length() - 1]
            if k > top:
                second = top
                top = k
                count = 1
            elif k == top:
                count += 1
            elif k > second:
                second = k
            t ^= low
        t = c
        while t:
            low = t & -t
            i = low.bit_length() - 1
            if keys[i] == top and count == 1:
                v = second
            else:
                v = top
            if v < out[i]:
                out[i] = v
            t ^= low
    return out


def first_unique_max(circuits, keys):
    """Index of the first circuit whose maximum key is attained once, else -1."""
    for idx, c in enumerate(circuits):
        top = -1
        count = 0
        t = c
        while t:
            low = t & -t
            k = keys[low.bit_length() - 1]
            if k > top:
                top = k
                count = 1
            elif k == top:
                count += 1
            t ^= low
        if count == 1:
            return idx
    return -1

"""Pure-Python antichain pruning kernel.

Fallback for the compiled extension in ``_kernels``; both expose the same
``minimal_indices`` contract and must return identical results.
"""


def minimal_indices(vecs):
    """Indices of the divisibility-minimal vectors among ``vecs``.

    ``vecs`` is a duplicate-free sequence of equal-length tuples of
    nonnegative integers.  A vector is dropped iff some other vector is
    componentwise <= it.  Returns the surviving indices, ascending.
    """
    k = len(vecs)
    degs = [sum(v) for v in vecs]
    order = sorted(range(k), key=lambda i: (degs[i], vecs[i]))
    kept = []
    for i in order:
        v = vecs[i]
        d = degs[i]
        dominated = False
        for j in kept:
            # kept is in nondecreasing degree order; a strict divisor of v
            # has strictly smaller degree (equal degree would force equality,
            # excluded by the duplicate-free precondition).
            if degs[j] >= d:
                break
            w = vecs[j]
            if all(w[p] <= v[p] for p in range(len(v))):
                dominated = True
                break
        if not dominated:
            kept.append(i)
    return sorted(kept)

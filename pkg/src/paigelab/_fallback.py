"""Pure numpy implementations of the kernels in ``_kernels.pyx``.

Same signatures and same outputs, element for element; used when the
compiled extension is unavailable or ``PAIGELAB_BACKEND=python`` is set.
"""

import numpy as np

_CHUNK = 1 << 19


def _decode(keys, q):
    keys = np.asarray(keys, dtype=np.int64)
    out = np.empty((keys.shape[0], 8), dtype=np.int64)
    k = keys.copy()
    for i in range(7, -1, -1):
        out[:, i] = k % q
        k //= q
    return out


def _canon(r, q, neg):
    k = np.zeros(r.shape[0], dtype=np.int64)
    kn = np.zeros(r.shape[0], dtype=np.int64)
    nr = neg[r]
    for i in range(8):
        k = k * q + r[:, i]
        kn = kn * q + nr[:, i]
    return np.minimum(k, kn)


def _mul_coords(X, Y, q, add, mul, neg):
    A = add.ravel()
    M = mul.ravel()

    def fa(u, v):
        return A[u * q + v]

    def fm(u, v):
        return M[u * q + v]

    a, al1, al2, al3, be1, be2, be3, b = (X[:, i] for i in range(8))
    c, ga1, ga2, ga3, de1, de2, de3, d = (Y[:, i] for i in range(8))
    r = np.empty_like(X)
    r[:, 0] = fa(fa(fm(a, c), fm(al1, de1)), fa(fm(al2, de2), fm(al3, de3)))
    r[:, 1] = fa(fa(fm(a, ga1), fm(d, al1)), fa(neg[fm(be2, de3)], fm(be3, de2)))
    r[:, 2] = fa(fa(fm(a, ga2), fm(d, al2)), fa(neg[fm(be3, de1)], fm(be1, de3)))
    r[:, 3] = fa(fa(fm(a, ga3), fm(d, al3)), fa(neg[fm(be1, de2)], fm(be2, de1)))
    r[:, 4] = fa(fa(fm(c, be1), fm(b, de1)), fa(fm(al2, ga3), neg[fm(al3, ga2)]))
    r[:, 5] = fa(fa(fm(c, be2), fm(b, de2)), fa(fm(al3, ga1), neg[fm(al1, ga3)]))
    r[:, 6] = fa(fa(fm(c, be3), fm(b, de3)), fa(fm(al1, ga2), neg[fm(al2, ga1)]))
    r[:, 7] = fa(fa(fm(be1, ga1), fm(be2, ga2)), fa(fm(be3, ga3), fm(b, d)))
    return _canon(r, q, neg)


def _inv_coords(X, q, neg):
    r = np.empty_like(X)
    r[:, 0] = X[:, 7]
    r[:, 1:7] = neg[X[:, 1:7]]
    r[:, 7] = X[:, 0]
    return _canon(r, q, neg)


def zorn_mul_keys(xs, ys, q, add, mul, neg):
    add, mul, neg = (np.asarray(t, dtype=np.int64) for t in (add, mul, neg))
    return _mul_coords(_decode(xs, q), _decode(ys, q), q, add, mul, neg)


def loop_closure(seeds, q, add, mul, neg, cap):
    add, mul, neg = (np.asarray(t, dtype=np.int64) for t in (add, mul, neg))
    elems = np.unique(np.asarray(seeds, dtype=np.int64))
    if elems.shape[0] > cap:
        return elems, False
    coords = _decode(elems, q)
    seen = np.sort(elems)
    start = 0
    while start < elems.shape[0]:
        stop = elems.shape[0]
        found = [_inv_coords(coords[start:stop], q, neg)]
        n_found = 0
        overflow = False
        rows = max(1, _CHUNK // stop)
        for i in range(start, stop, rows):
            F = coords[i:min(i + rows, stop)]
            Fi = np.repeat(F, stop, axis=0)
            S = np.tile(coords[:stop], (F.shape[0], 1))
            found.append(_mul_coords(Fi, S, q, add, mul, neg))
            found.append(_mul_coords(S, Fi, q, add, mul, neg))
            cand = np.unique(np.concatenate(found))
            found = [cand[~_isin_sorted(cand, seen)]]
            n_found = found[0].shape[0]
            if stop + n_found > cap:
                overflow = True
                break
        fresh = found[0]
        elems = np.concatenate([elems, fresh])
        coords = np.concatenate([coords, _decode(fresh, q)])
        seen = np.sort(elems)
        if overflow:
            return elems, False
        start = stop
    return elems, True


def _isin_sorted(values, sorted_ref):
    pos = np.searchsorted(sorted_ref, values)
    pos[pos == sorted_ref.shape[0]] = 0
    return sorted_ref[pos] == values


def group_closure(table, gens, identity):
    table = np.asarray(table)
    gens = np.asarray(gens, dtype=np.int64)
    mask = np.zeros(table.shape[0], dtype=bool)
    mask[identity] = True
    frontier = np.array([identity])
    while frontier.size and gens.size:
        nxt = np.unique(table[np.ix_(frontier, gens)].ravel())
        nxt = nxt[~mask[nxt]]
        mask[nxt] = True
        frontier = nxt
    return mask


def moufang_table(table):
    T = np.asarray(table, dtype=np.int64)
    n = T.shape[0]
    count = 0
    witness = None
    for x in range(n):
        left = T[T[x, :][:, None], T[:, x][None, :]]
        right = T[T[x, T], x]
        bad = left != right
        c = int(bad.sum())
        if c and witness is None:
            y, z = np.unravel_index(np.argmax(bad), bad.shape)
            witness = (x, int(y), int(z))
        count += c
    return count, witness

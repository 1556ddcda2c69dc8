# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled kernels: Paige loop products on integer keys, loop closure,
Cayley-table group closure and exhaustive Moufang checks.

Must stay output-identical to ``_fallback``; the test suite compares them.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t, int32_t
from libcpp.vector cimport vector
from libcpp.algorithm cimport sort

cnp.import_array()


cdef struct Field:
    int q
    bint prime
    const int32_t* add
    const int32_t* mul
    const int32_t* neg


cdef inline int fa(const Field* f, int x, int y) noexcept nogil:
    return f.add[x * f.q + y]


cdef inline int fm(const Field* f, int x, int y) noexcept nogil:
    return f.mul[x * f.q + y]


cdef inline int fn(const Field* f, int x) noexcept nogil:
    return f.neg[x]


cdef inline void decode(int64_t key, int q, int* out) noexcept nogil:
    cdef int i
    for i in range(7, -1, -1):
        out[i] = <int>(key % q)
        key //= q


cdef inline int64_t canon(const int* r, const Field* f) noexcept nogil:
    cdef int64_t k = 0, kn = 0
    cdef int i
    for i in range(8):
        k = k * f.q + r[i]
        kn = kn * f.q + f.neg[r[i]]
    return k if k <= kn else kn


cdef inline int64_t zmul(const int* x, const int* y, const Field* f) noexcept nogil:
    # x = (a, al1..3, be1..3, b), y = (c, ga1..3, de1..3, d)
    cdef int r[8]
    cdef int a = x[0], b = x[7], c = y[0], d = y[7]
    cdef int al1 = x[1], al2 = x[2], al3 = x[3]
    cdef int be1 = x[4], be2 = x[5], be3 = x[6]
    cdef int ga1 = y[1], ga2 = y[2], ga3 = y[3]
    cdef int de1 = y[4], de2 = y[5], de3 = y[6]
    # ac + alpha.delta
    r[0] = fa(f, fa(f, fm(f, a, c), fm(f, al1, de1)), fa(f, fm(f, al2, de2), fm(f, al3, de3)))
    # a gamma + d alpha - beta x delta
    r[1] = fa(f, fa(f, fm(f, a, ga1), fm(f, d, al1)), fa(f, fn(f, fm(f, be2, de3)), fm(f, be3, de2)))
    r[2] = fa(f, fa(f, fm(f, a, ga2), fm(f, d, al2)), fa(f, fn(f, fm(f, be3, de1)), fm(f, be1, de3)))
    r[3] = fa(f, fa(f, fm(f, a, ga3), fm(f, d, al3)), fa(f, fn(f, fm(f, be1, de2)), fm(f, be2, de1)))
    # c beta + b delta + alpha x gamma
    r[4] = fa(f, fa(f, fm(f, c, be1), fm(f, b, de1)), fa(f, fm(f, al2, ga3), fn(f, fm(f, al3, ga2))))
    r[5] = fa(f, fa(f, fm(f, c, be2), fm(f, b, de2)), fa(f, fm(f, al3, ga1), fn(f, fm(f, al1, ga3))))
    r[6] = fa(f, fa(f, fm(f, c, be3), fm(f, b, de3)), fa(f, fm(f, al1, ga2), fn(f, fm(f, al2, ga1))))
    # beta.gamma + bd
    r[7] = fa(f, fa(f, fm(f, be1, ga1), fm(f, be2, ga2)), fa(f, fm(f, be3, ga3), fm(f, b, d)))
    return canon(r, f)


cdef inline int64_t zmul_prime(const int* x, const int* y, const Field* f) noexcept nogil:
    # same formula as zmul with plain integer arithmetic, reduced once per entry
    cdef int r[8]
    cdef int q = f.q
    cdef int a = x[0], b = x[7], c = y[0], d = y[7]
    cdef int al1 = x[1], al2 = x[2], al3 = x[3]
    cdef int be1 = x[4], be2 = x[5], be3 = x[6]
    cdef int ga1 = y[1], ga2 = y[2], ga3 = y[3]
    cdef int de1 = y[4], de2 = y[5], de3 = y[6]
    cdef int qq = 2 * q * q
    r[0] = (a * c + al1 * de1 + al2 * de2 + al3 * de3) % q
    r[1] = (a * ga1 + d * al1 - be2 * de3 + be3 * de2 + qq) % q
    r[2] = (a * ga2 + d * al2 - be3 * de1 + be1 * de3 + qq) % q
    r[3] = (a * ga3 + d * al3 - be1 * de2 + be2 * de1 + qq) % q
    r[4] = (c * be1 + b * de1 + al2 * ga3 - al3 * ga2 + qq) % q
    r[5] = (c * be2 + b * de2 + al3 * ga1 - al1 * ga3 + qq) % q
    r[6] = (c * be3 + b * de3 + al1 * ga2 - al2 * ga1 + qq) % q
    r[7] = (be1 * ga1 + be2 * ga2 + be3 * ga3 + b * d) % q
    return canon(r, f)


cdef inline int64_t product(const int* x, const int* y, const Field* f) noexcept nogil:
    if f.prime:
        return zmul_prime(x, y, f)
    return zmul(x, y, f)


cdef inline int64_t zinv(const int* x, const Field* f) noexcept nogil:
    cdef int r[8]
    r[0] = x[7]
    r[1] = f.neg[x[1]]
    r[2] = f.neg[x[2]]
    r[3] = f.neg[x[3]]
    r[4] = f.neg[x[4]]
    r[5] = f.neg[x[5]]
    r[6] = f.neg[x[6]]
    r[7] = x[0]
    return canon(r, f)


cdef inline uint64_t mix(uint64_t z) noexcept nogil:
    z = (z ^ (z >> 30)) * <uint64_t>0xbf58476d1ce4e5b9
    z = (z ^ (z >> 27)) * <uint64_t>0x94d049bb133111eb
    return z ^ (z >> 31)


cdef class KeySet:
    """Open-addressing set of non-negative int64 keys."""

    cdef vector[int64_t] slots
    cdef uint64_t mask
    cdef Py_ssize_t size

    def __cinit__(self, Py_ssize_t capacity=1024):
        cdef Py_ssize_t n = 16
        while n < 2 * capacity:
            n *= 2
        self.slots.assign(n, -1)
        self.mask = n - 1
        self.size = 0

    cdef void _grow(self) noexcept nogil:
        cdef vector[int64_t] old = self.slots
        cdef Py_ssize_t i
        self.slots.assign(2 * old.size(), -1)
        self.mask = self.slots.size() - 1
        self.size = 0
        for i in range(<Py_ssize_t>old.size()):
            if old[i] >= 0:
                self.add(old[i])

    cdef bint add(self, int64_t key) noexcept nogil:
        """Insert; returns True if the key was new."""
        cdef uint64_t h
        if 2 * (self.size + 1) > <Py_ssize_t>self.slots.size():
            self._grow()
        h = mix(<uint64_t>key) & self.mask
        while self.slots[h] >= 0:
            if self.slots[h] == key:
                return False
            h = (h + 1) & self.mask
        self.slots[h] = key
        self.size += 1
        return True


cdef Field make_field(int q, const int32_t[:, ::1] add, const int32_t[:, ::1] mul,
                      const int32_t[::1] neg):
    cdef Field f
    cdef int i, j
    f.q = q
    f.prime = True
    for i in range(q):
        for j in range(q):
            if add[i, j] != (i + j) % q or mul[i, j] != (i * j) % q:
                f.prime = False
    f.add = &add[0, 0]
    f.mul = &mul[0, 0]
    f.neg = &neg[0]
    return f


def zorn_mul_keys(const int64_t[::1] xs, const int64_t[::1] ys, int q,
                  const int32_t[:, ::1] add, const int32_t[:, ::1] mul,
                  const int32_t[::1] neg):
    """Canonical keys of the products xs[i] * ys[i]."""
    cdef Field f = make_field(q, add, mul, neg)
    cdef Py_ssize_t n = xs.shape[0], i
    out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] o = out
    cdef int x[8]
    cdef int y[8]
    with nogil:
        for i in range(n):
            decode(xs[i], q, x)
            decode(ys[i], q, y)
            o[i] = product(x, y, &f)
    return out


def loop_closure(const int64_t[::1] seeds, int q, const int32_t[:, ::1] add,
                 const int32_t[:, ::1] mul, const int32_t[::1] neg, Py_ssize_t cap):
    """Breadth-first closure under product and inverse.

    Returns (keys, complete).  Each round multiplies the frontier with every
    element known at the start of the round, on both sides, and adds
    inverses; newly found keys are sorted before being appended.
    """
    cdef Field f = make_field(q, add, mul, neg)
    cdef KeySet seen = KeySet(1024)
    cdef vector[int64_t] elems
    cdef vector[int] coords
    cdef vector[int64_t] fresh
    cdef Py_ssize_t i, j, k, start, stop, n
    cdef int64_t key
    cdef int buf[8]
    cdef bint overflow = False

    for key in sorted(set(np.asarray(seeds).tolist())):
        seen.add(key)
        elems.push_back(key)
        decode(key, q, buf)
        for k in range(8):
            coords.push_back(buf[k])
    if <Py_ssize_t>elems.size() > cap:
        return np.array([elems[i] for i in range(<Py_ssize_t>elems.size())], dtype=np.int64), False

    start = 0
    with nogil:
        while start < <Py_ssize_t>elems.size():
            stop = elems.size()
            fresh.clear()
            for i in range(start, stop):
                key = zinv(&coords[8 * i], &f)
                if seen.add(key):
                    fresh.push_back(key)
                for j in range(stop):
                    key = product(&coords[8 * i], &coords[8 * j], &f)
                    if seen.add(key):
                        fresh.push_back(key)
                    key = product(&coords[8 * j], &coords[8 * i], &f)
                    if seen.add(key):
                        fresh.push_back(key)
                if stop + <Py_ssize_t>fresh.size() > cap:
                    overflow = True
                    break
            sort(fresh.begin(), fresh.end())
            for i in range(<Py_ssize_t>fresh.size()):
                elems.push_back(fresh[i])
                decode(fresh[i], q, buf)
                for k in range(8):
                    coords.push_back(buf[k])
            if overflow:
                break
            start = stop
    n = elems.size()
    out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] o = out
    for i in range(n):
        o[i] = elems[i]
    return out, not overflow


def group_closure(const int32_t[:, ::1] table, const int64_t[::1] gens, Py_ssize_t identity):
    """Membership mask of the subgroup generated by ``gens`` in a Cayley table."""
    cdef Py_ssize_t n = table.shape[0], m = gens.shape[0], head = 0, i, g, j
    mask = np.zeros(n, dtype=np.bool_)
    cdef cnp.npy_bool[::1] mk = mask
    cdef vector[Py_ssize_t] queue
    mk[identity] = 1
    queue.push_back(identity)
    with nogil:
        while head < <Py_ssize_t>queue.size():
            i = queue[head]
            head += 1
            for g in range(m):
                j = table[i, gens[g]]
                if not mk[j]:
                    mk[j] = 1
                    queue.push_back(j)
    return mask


def moufang_table(const int32_t[:, ::1] table):
    """Count triples violating (xy)(zx) = (x(yz))x; also return the first."""
    cdef Py_ssize_t n = table.shape[0], x, y, z
    cdef Py_ssize_t count = 0, wx = -1, wy = -1, wz = -1
    cdef int xy, zx
    with nogil:
        for x in range(n):
            for y in range(n):
                xy = table[x, y]
                for z in range(n):
                    zx = table[z, x]
                    if table[xy, zx] != table[table[x, table[y, z]], x]:
                        if count == 0:
                            wx, wy, wz = x, y, z
                        count += 1
    witness = None if count == 0 else (wx, wy, wz)
    return count, witness

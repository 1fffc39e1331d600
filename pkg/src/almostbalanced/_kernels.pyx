# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the loops in ``_kernels_py``; same signatures and results."""
from libc.stdlib cimport malloc, calloc, free


cpdef list cumulative(weights):
    cdef list cum = [0]
    cdef object acc = 0
    cdef Py_ssize_t j
    cdef Py_ssize_t q = len(weights)
    for j in range(q - 1):
        acc = acc + weights[j]
        cum.append(acc)
    return cum


def map_interval(positions, weights, total):
    cdef list cum = cumulative(weights)
    cdef list w = list(weights)
    cdef object lo = 0
    cdef object width = 1
    cdef object t = total
    cdef Py_ssize_t j
    for j in positions:
        lo = lo * t + cum[j] * width
        width = width * w[j]
    return lo, width


def shortest_digits(lo, hi, den, base):
    cdef Py_ssize_t k = 0
    cdef object scale = 1
    cdef object m
    while True:
        m = -((-lo * scale) // den)
        if m * den < hi * scale:
            return m, k
        k += 1
        scale = scale * base


def walk(num, den, weights, total, Py_ssize_t steps):
    cdef list cum = cumulative(weights)
    cdef list w = list(weights)
    cdef Py_ssize_t q = len(w)
    cdef list out = []
    cdef Py_ssize_t s, j
    cdef object x, t
    for s in range(steps):
        x = num * total
        t = x // den
        # linear scan: q is tiny
        j = q - 1
        while j > 0 and cum[j] > t:
            j -= 1
        num = x - cum[j] * den
        den = den * w[j]
        out.append(j)
    return out


def count_vectors(int n, int q):
    cdef Py_ssize_t slots = 1
    cdef int i
    for i in range(q):
        slots *= n + 1
    cdef long long *mult = <long long *> calloc(slots, sizeof(long long))
    cdef long long *first = <long long *> malloc(slots * sizeof(long long))
    cdef int *digits = <int *> calloc(n if n > 0 else 1, sizeof(int))
    cdef int *counts = <int *> calloc(q, sizeof(int))
    cdef long long *stride = <long long *> malloc(q * sizeof(long long))
    if not mult or not first or not digits or not counts or not stride:
        free(mult); free(first); free(digits); free(counts); free(stride)
        raise MemoryError()
    cdef long long total = 1
    cdef long long index = 0
    cdef long long key = 0
    cdef int pos, d
    cdef Py_ssize_t s
    try:
        for i in range(n):
            total *= q
        stride[0] = 1
        for i in range(1, q):
            stride[i] = stride[i - 1] * (n + 1)
        for s in range(slots):
            first[s] = -1
        counts[0] = n
        key = n  # counts[0] * stride[0]
        while index < total:
            if mult[key] == 0:
                first[key] = index
            mult[key] += 1
            index += 1
            pos = n - 1
            while pos >= 0:
                d = digits[pos]
                counts[d] -= 1
                key -= stride[d]
                if d + 1 < q:
                    digits[pos] = d + 1
                    counts[d + 1] += 1
                    key += stride[d + 1]
                    break
                digits[pos] = 0
                counts[0] += 1
                key += stride[0]
                pos -= 1
        out = {}
        for s in range(slots):
            if mult[s]:
                vec = []
                key = s
                for i in range(q):
                    vec.append(<int>(key % (n + 1)))
                    key //= n + 1
                out[tuple(vec)] = (mult[s], first[s])
        return out
    finally:
        free(mult); free(first); free(digits); free(counts); free(stride)

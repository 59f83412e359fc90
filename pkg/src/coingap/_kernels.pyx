# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled reachability kernels; drop-in twin of coingap._kernels_py.

Semantics are documented on the pure-Python module. Buffers are bytearrays
so allocation failures surface as ordinary MemoryError before any unsigned
arithmetic can wrap.
"""

from libc.string cimport memmove

import array

BACKEND = "compiled"

ctypedef unsigned long long u64


def window_sweep(coins, u64 threshold, u64 bound, bint collect_gaps=False, bint literal_shift=False):
    pybuf = bytearray(coins[len(coins) - 1] + 1)  # wraparound is off: no [-1]
    carr = array.array("Q", coins)
    cdef unsigned char[::1] buf = pybuf
    cdef u64[::1] cv = carr
    cdef Py_ssize_t n = cv.shape[0]
    cdef Py_ssize_t j
    cdef u64 width = <u64> len(pybuf)
    cdef u64 i = 0, run = 0, last_zero = 0, c
    cdef int x
    gaps = [] if collect_gaps else None

    if literal_shift:
        buf[width - 1] = 1
        while True:
            if bound:
                if i >= bound:
                    break
            elif run >= threshold:
                break
            i += 1
            x = 0
            for j in range(n):
                c = cv[j]
                if c > i:
                    break
                if buf[width - c]:
                    x = 1
                    break
            memmove(&buf[0], &buf[1], <size_t> (width - 1))
            buf[width - 1] = <unsigned char> x
            if x:
                run += 1
            else:
                last_zero = i
                run = 0
                if collect_gaps:
                    gaps.append(i)
    else:
        buf[0] = 1
        while True:
            if bound:
                if i >= bound:
                    break
            elif run >= threshold:
                break
            i += 1
            x = 0
            for j in range(n):
                c = cv[j]
                if c > i:  # i - c < 0 contributes nothing; also keeps i - c unsigned-safe
                    break
                if buf[(i - c) % width]:
                    x = 1
                    break
            buf[i % width] = x
            if x:
                run += 1
            else:
                last_zero = i
                run = 0
                if collect_gaps:
                    gaps.append(i)
    return last_zero, i, bound > 0, gaps, len(pybuf)


def full_sweep(coins, bound, bint collect_gaps=False):
    pybuf = bytearray(bound + 1)  # Python arithmetic: huge bounds fail here, cleanly
    carr = array.array("Q", coins)
    cdef unsigned char[::1] buf = pybuf
    cdef u64[::1] cv = carr
    cdef Py_ssize_t n = cv.shape[0]
    cdef Py_ssize_t j
    cdef u64 nsteps = <u64> bound
    cdef u64 i, c, last_zero = 0
    cdef int x
    gaps = [] if collect_gaps else None

    buf[0] = 1
    for i in range(1, nsteps + 1):
        x = 0
        for j in range(n):
            c = cv[j]
            if c > i:
                break
            if buf[i - c]:
                x = 1
                break
        buf[i] = x
        if x == 0:
            last_zero = i
            if collect_gaps:
                gaps.append(i)
    return last_zero, bound, True, gaps, bound + 1


def reachability_bytes(coins, limit):
    pybuf = bytearray(limit + 1)
    carr = array.array("Q", coins)
    cdef unsigned char[::1] buf = pybuf
    cdef u64[::1] cv = carr
    cdef Py_ssize_t n = cv.shape[0]
    cdef Py_ssize_t j
    cdef u64 nsteps = <u64> limit
    cdef u64 i, c

    buf[0] = 1
    for i in range(1, nsteps + 1):
        for j in range(n):
            c = cv[j]
            if c > i:
                break
            if buf[i - c]:
                buf[i] = 1
                break
    return pybuf


def window_contains(coins, u64 x, u64 threshold):
    if x == 0:
        return True
    if x < coins[0]:
        return False
    pybuf = bytearray(coins[len(coins) - 1] + 1)  # wraparound is off: no [-1]
    carr = array.array("Q", coins)
    cdef unsigned char[::1] buf = pybuf
    cdef u64[::1] cv = carr
    cdef Py_ssize_t n = cv.shape[0]
    cdef Py_ssize_t j
    cdef u64 width = <u64> len(pybuf)
    cdef u64 i, c, run = 0
    cdef int v = 0

    buf[0] = 1
    for i in range(1, x + 1):
        v = 0
        for j in range(n):
            c = cv[j]
            if c > i:
                break
            if buf[(i - c) % width]:
                v = 1
                break
        buf[i % width] = v
        if v:
            run += 1
            if run >= threshold:
                return True
        else:
            run = 0
    return v != 0

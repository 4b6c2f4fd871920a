# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled crystal kernel; same interface and semantics as ``_kernel_py.Kernel``."""

from libc.stdlib cimport malloc, free


cdef class Kernel:
    cdef long *mat
    cdef long *per
    cdef long *nxt
    cdef public int n
    cdef public int plen
    cdef public object matrix
    cdef public object period

    def __cinit__(self, matrix, period):
        self.mat = NULL
        self.per = NULL
        self.nxt = NULL

    def __init__(self, matrix, period):
        cdef int i, j, p, q
        self.matrix = [list(map(int, row)) for row in matrix]
        self.period = [int(c) for c in period]
        self.n = len(self.matrix)
        self.plen = len(self.period)
        self.mat = <long *> malloc(self.n * self.n * sizeof(long))
        self.per = <long *> malloc(self.plen * sizeof(long))
        self.nxt = <long *> malloc(self.n * self.plen * sizeof(long))
        if not self.mat or not self.per or not self.nxt:
            raise MemoryError()
        for i in range(self.n):
            for j in range(self.n):
                self.mat[i * self.n + j] = self.matrix[i][j]
        for p in range(self.plen):
            self.per[p] = self.period[p]
        for i in range(self.n):
            for p in range(self.plen):
                q = p
                while self.per[q % self.plen] != i:
                    q += 1
                    if q > p + self.plen:
                        raise ValueError("period misses a colour")
                self.nxt[i * self.plen + p] = q - p

    def __dealloc__(self):
        free(self.mat)
        free(self.per)
        free(self.nxt)

    def __reduce__(self):
        return (Kernel, (self.matrix, self.period))

    cdef void _sig(self, tuple x, int i, long *out):
        cdef Py_ssize_t length = len(x)
        cdef Py_ssize_t p
        cdef long c, xp, s
        cdef long best = 0, t = 0
        cdef long ke = -1
        cdef long kf = length + self.nxt[i * self.plen + length % self.plen]
        cdef long *row = self.mat + i * self.n
        for p in range(length - 1, -1, -1):
            c = self.per[p % self.plen]
            xp = <long> x[p]
            if c == i:
                s = xp + t
                if s > best:
                    best = s
                    ke = p
                    kf = p
                elif s == best:
                    kf = p
            t += row[c] * xp
        out[0] = best
        out[1] = best - t
        out[2] = kf
        out[3] = ke

    cdef tuple _bump(self, tuple x, long k, long delta):
        cdef Py_ssize_t length = len(x)
        cdef Py_ssize_t p, end
        cdef list y
        if k >= length:
            y = list(x)
            y.extend([0] * (k - length))
            y.append(1)
            return tuple(y)
        y = list(x)
        y[k] = <long> y[k] + delta
        end = length
        while end > 0 and y[end - 1] == 0:
            end -= 1
        if end < length:
            del y[end:]
        return tuple(y)

    def signature(self, tuple x, int i):
        cdef long out[4]
        self._sig(x, i, out)
        return out[0], out[1], out[2], out[3]

    def eps(self, tuple x, int i):
        cdef long out[4]
        self._sig(x, i, out)
        return out[0]

    def phi(self, tuple x, int i):
        cdef long out[4]
        self._sig(x, i, out)
        return out[1]

    def f(self, tuple x, int i):
        cdef long out[4]
        self._sig(x, i, out)
        return self._bump(x, out[2], 1)

    def e(self, tuple x, int i):
        cdef long out[4]
        self._sig(x, i, out)
        if out[3] < 0:
            return None
        return self._bump(x, out[3], -1)

    def replay(self, fstring, tuple x=()):
        cdef long out[4]
        cdef int i
        for i in reversed(list(fstring)):
            self._sig(x, i, out)
            x = self._bump(x, out[2], 1)
        return x

    def extract_fstring(self, tuple x):
        cdef long out[4]
        cdef int i
        cdef list res = []
        cdef bint moved
        while len(x):
            moved = False
            for i in range(self.n):
                self._sig(x, i, out)
                if out[3] >= 0:
                    res.append(i)
                    x = self._bump(x, out[3], -1)
                    moved = True
                    break
            if not moved:
                break
        return res

    def string_extract(self, tuple x, word):
        cdef long out[4]
        cdef int i
        cdef long k
        cdef list a = []
        for i in word:
            k = 0
            while True:
                self._sig(x, i, out)
                if out[3] < 0:
                    break
                x = self._bump(x, out[3], -1)
                k += 1
            a.append(k)
        return a, x

    def eps_star(self, fstring, int i):
        cdef long out[4]
        cdef tuple u = ()
        cdef long m = 0
        cdef int j
        cdef list applied = []
        for j in reversed(list(fstring)):
            if j != i:
                self._sig(u, j, out)
                u = self._bump(u, out[2], 1)
                applied.append(j)
            else:
                self._sig(u, i, out)
                if out[1] > m:
                    u = self._bump(u, out[2], 1)
                    applied.append(j)
                else:
                    m += 1
        applied.reverse()
        return m, u, applied

    def demazure_step(self, elements, int i, long lam_i):
        cdef long out[4]
        cdef set seen = set()
        cdef list res = []
        cdef tuple x
        for x in elements:
            while True:
                if x not in seen:
                    seen.add(x)
                    res.append(x)
                self._sig(x, i, out)
                if out[1] + lam_i <= 0:
                    break
                x = self._bump(x, out[2], 1)
        return res

    def depth_step(self, elements, int i, long budget):
        cdef long out[4]
        cdef set seen = set()
        cdef list res = []
        cdef tuple x
        cdef long d
        for x in elements:
            d = sum(x)
            while True:
                if x not in seen:
                    seen.add(x)
                    res.append(x)
                if d >= budget:
                    break
                self._sig(x, i, out)
                x = self._bump(x, out[2], 1)
                d += 1
        return res

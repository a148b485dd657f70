# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled incremental row echelon kernels (same interface as _echelon_py)."""
from array import array
from math import gcd

BACKEND = "cython"

ctypedef long long i64


cdef inline i64 _modinv(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef class ModEchelon:
    cdef public int ncols
    cdef public long long p
    cdef public list rows
    cdef public list pivots
    cdef dict _where

    def __init__(self, int ncols, long long p):
        self.ncols = ncols
        self.p = p
        self.rows = []
        self.pivots = []
        self._where = {}

    @property
    def rank(self):
        return len(self.rows)

    cdef object _reduce(self, vec):
        cdef i64 p = self.p
        cdef int n = self.ncols
        cdef object buf = array("q", [0]) * n
        cdef i64[::1] v = buf
        cdef i64[::1] row
        cdef i64 a, b, x
        cdef int c, k
        cdef object where = self._where
        for k in range(n):
            x = vec[k] % p
            v[k] = x
        for c in range(n):
            a = v[c]
            if a != 0:
                r = where.get(c)
                if r is None:
                    continue
                row = self.rows[r]
                for k in range(c, n):
                    b = row[k]
                    if b != 0:
                        x = (v[k] - a * b) % p
                        if x < 0:
                            x += p
                        v[k] = x
        return buf

    def reduce(self, vec):
        return list(self._reduce(vec))

    def insert(self, vec):
        cdef object buf = self._reduce(vec)
        cdef i64[::1] v = buf
        cdef int n = self.ncols
        cdef int c, k
        cdef i64 inv, p = self.p
        for c in range(n):
            if v[c] != 0:
                inv = _modinv(v[c], p)
                if inv != 1:
                    for k in range(c, n):
                        v[k] = (v[k] * inv) % p
                self._where[c] = len(self.rows)
                self.rows.append(buf)
                self.pivots.append(c)
                return True
        return False

    def contains(self, vec):
        cdef object buf = self._reduce(vec)
        cdef i64[::1] v = buf
        cdef int k
        for k in range(self.ncols):
            if v[k] != 0:
                return False
        return True

    def rref(self):
        cdef i64 p = self.p
        cdef int n = self.ncols
        cdef int c2, k
        cdef i64 a, x
        cdef i64[::1] r
        cdef i64[::1] r2
        order = sorted(range(len(self.rows)), key=lambda i: self.pivots[i])
        out = []
        for idx in reversed(order):
            c = self.pivots[idx]
            buf = array("q", self.rows[idx])
            r = buf
            for c2py, buf2 in out:
                c2 = c2py
                a = r[c2]
                if a != 0:
                    r2 = buf2
                    for k in range(c2, n):
                        if r2[k] != 0:
                            x = (r[k] - a * r2[k]) % p
                            if x < 0:
                                x += p
                            r[k] = x
            out.append((c, buf))
        out.reverse()
        return [(c, list(b)) for c, b in out]


cdef list _primitive(list v):
    cdef object g = 0
    cdef object lead = 0
    for x in v:
        if x:
            if lead == 0:
                lead = x
            g = gcd(g, x)
            if g == 1 and lead > 0:
                return v
    if lead == 0:
        return v
    if lead < 0:
        g = -g
    if g == 1:
        return v
    return [x // g for x in v]


cdef class IntEchelon:
    cdef public int ncols
    cdef public list rows
    cdef public list pivots
    cdef dict _where

    def __init__(self, int ncols):
        self.ncols = ncols
        self.rows = []
        self.pivots = []
        self._where = {}

    @property
    def rank(self):
        return len(self.rows)

    cdef list _reduce(self, vec):
        cdef list v = list(vec)
        cdef int n = self.ncols
        cdef int c, k
        cdef list row
        for c in range(n):
            a = v[c]
            if a:
                r = self._where.get(c)
                if r is None:
                    continue
                row = self.rows[r]
                b = row[c]
                g = gcd(a, b)
                ma = b // g
                mb = a // g
                for k in range(n):
                    v[k] = v[k] * ma - row[k] * mb
                v = _primitive(v)
        return v

    def reduce(self, vec):
        return self._reduce(vec)

    def insert(self, vec):
        cdef list v = self._reduce(vec)
        cdef int c
        for c in range(self.ncols):
            if v[c]:
                v = _primitive(v)
                self._where[c] = len(self.rows)
                self.rows.append(v)
                self.pivots.append(c)
                return True
        return False

    def contains(self, vec):
        cdef list v = self._reduce(vec)
        for x in v:
            if x:
                return False
        return True

    def rref(self):
        cdef int n = self.ncols
        cdef int k
        order = sorted(range(len(self.rows)), key=lambda i: self.pivots[i])
        out = []
        for idx in reversed(order):
            c = self.pivots[idx]
            r = list(self.rows[idx])
            for c2, r2 in out:
                a = r[c2]
                if a:
                    b = r2[c2]
                    g = gcd(a, b)
                    ma = b // g
                    mb = a // g
                    r = [r[k] * ma - r2[k] * mb for k in range(n)]
            out.append((c, _primitive(r)))
        out.reverse()
        return out

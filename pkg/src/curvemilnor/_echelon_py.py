"""Pure-Python incremental row echelon kernels.

``ModEchelon`` works over F_p with rows normalized to pivot 1.
``IntEchelon`` works fraction-free over the integers (hence over Q after
clearing denominators) and keeps every row primitive.

Both keep rows in echelon form with respect to the column order 0..n-1; the
pivot of a row is its first nonzero column.  Inserting a vector reduces it
fully against the stored rows.
"""
from math import gcd

BACKEND = "python"


class ModEchelon:
    def __init__(self, ncols, p):
        self.ncols = ncols
        self.p = p
        self.rows = []
        self.pivots = []
        self._where = {}

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        p = self.p
        v = [x % p for x in vec]
        where = self._where
        rows = self.rows
        n = self.ncols
        for c in range(n):
            a = v[c]
            if a and c in where:
                row = rows[where[c]]
                for k in range(c, n):
                    b = row[k]
                    if b:
                        v[k] = (v[k] - a * b) % p
        return v

    def insert(self, vec):
        v = self.reduce(vec)
        for c in range(self.ncols):
            if v[c]:
                inv = pow(v[c], -1, self.p)
                if inv != 1:
                    v = [(x * inv) % self.p for x in v]
                self._where[c] = len(self.rows)
                self.rows.append(v)
                self.pivots.append(c)
                return True
        return False

    def contains(self, vec):
        return not any(self.reduce(vec))

    def rref(self):
        """Fully reduced rows as a list of (pivot, row) sorted by pivot."""
        p = self.p
        order = sorted(range(len(self.rows)), key=lambda i: self.pivots[i])
        out = []
        for idx in reversed(order):
            c = self.pivots[idx]
            r = list(self.rows[idx])
            for c2, r2 in out:
                a = r[c2]
                if a:
                    for k in range(c2, self.ncols):
                        if r2[k]:
                            r[k] = (r[k] - a * r2[k]) % p
            out.append((c, r))
        out.reverse()
        return out


def _primitive(v):
    g = 0
    for x in v:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    lead = next((x for x in v if x), 0)
    if g > 1 or lead < 0:
        if lead < 0:
            g = -g
        v = [x // g for x in v]
    return v


class IntEchelon:
    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []
        self.pivots = []
        self._where = {}

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        v = list(vec)
        where = self._where
        rows = self.rows
        n = self.ncols
        for c in range(n):
            a = v[c]
            if a and c in where:
                row = rows[where[c]]
                b = row[c]
                g = gcd(a, b)
                ma, mb = b // g, a // g
                v = _primitive([v[k] * ma - row[k] * mb for k in range(n)])
        return v

    def insert(self, vec):
        v = self.reduce(vec)
        for c in range(self.ncols):
            if v[c]:
                v = _primitive(v)
                self._where[c] = len(self.rows)
                self.rows.append(v)
                self.pivots.append(c)
                return True
        return False

    def contains(self, vec):
        return not any(self.reduce(vec))

    def rref(self):
        order = sorted(range(len(self.rows)), key=lambda i: self.pivots[i])
        out = []
        n = self.ncols
        for idx in reversed(order):
            c = self.pivots[idx]
            r = list(self.rows[idx])
            for c2, r2 in out:
                a = r[c2]
                if a:
                    b = r2[c2]
                    g = gcd(a, b)
                    ma, mb = b // g, a // g
                    r = [r[k] * ma - r2[k] * mb for k in range(n)]
            out.append((c, _primitive(r)))
        out.reverse()
        return out

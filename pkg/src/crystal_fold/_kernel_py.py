"""Pure-Python crystal kernel.

Elements of B(infinity) are trimmed coordinate tuples ``x`` over the periodic
sequence ``iota``: position ``p`` (0-based, rightmost tensor factor first)
carries colour ``period[p % len(period)]``.  Colours are 0-based matrix
indices.  ``_ckernel.pyx`` mirrors this class line for line.
"""

from __future__ import annotations


class Kernel:
    def __init__(self, matrix, period):
        self.matrix = [list(map(int, row)) for row in matrix]
        self.period = [int(c) for c in period]
        self.n = len(self.matrix)
        self.plen = len(self.period)
        # first position >= p carrying colour i
        self._next = [
            [next(q for q in range(p, p + self.plen) if self.period[q % self.plen] == i)
             - p for p in range(self.plen)]
            for i in range(self.n)
        ]

    def signature(self, x, i):
        """``(eps, phi, kf, ke)``: statistics and the positions ``f``/``e`` act on.

        ``ke`` is ``-1`` when ``eps == 0``.
        """
        row = self.matrix[i]
        period, plen = self.period, self.plen
        length = len(x)
        kf = length + self._next[i][length % plen]
        ke = -1
        best = 0
        t = 0
        for p in range(length - 1, -1, -1):
            c = period[p % plen]
            xp = x[p]
            if c == i:
                s = xp + t
                if s > best:
                    best = s
                    ke = p
                    kf = p
                elif s == best:
                    kf = p
            t += row[c] * xp
        return best, best - t, kf, ke

    def eps(self, x, i):
        return self.signature(x, i)[0]

    def phi(self, x, i):
        return self.signature(x, i)[1]

    def f(self, x, i):
        k = self.signature(x, i)[2]
        if k >= len(x):
            return x + (0,) * (k - len(x)) + (1,)
        return x[:k] + (x[k] + 1,) + x[k + 1:]

    def e(self, x, i):
        k = self.signature(x, i)[3]
        if k < 0:
            return None
        y = x[:k] + (x[k] - 1,) + x[k + 1:]
        end = len(y)
        while end and y[end - 1] == 0:
            end -= 1
        return y[:end]

    def replay(self, fstring, x=()):
        for i in reversed(fstring):
            x = self.f(x, i)
        return x

    def extract_fstring(self, x):
        """Canonical fstring: repeatedly strip the smallest colour with ``eps > 0``."""
        out = []
        while x:
            for i in range(self.n):
                y = self.e(x, i)
                if y is not None:
                    out.append(i)
                    x = y
                    break
            else:
                break  # not in B(infinity); caller detects via replay
        return out

    def string_extract(self, x, word):
        """Iterated maximal ``e``-strings along ``word``; returns ``(a, residue)``."""
        a = []
        for i in word:
            k = 0
            while True:
                y = self.e(x, i)
                if y is None:
                    break
                x = y
                k += 1
            a.append(k)
        return a, x

    def eps_star(self, fstring, i):
        """Transport ``fstring`` onto ``(b_inf, b_i(0))``.

        Returns ``(m, residue coords, residue fstring)`` with ``m = eps_i^*(b)``.
        """
        u = ()
        m = 0
        applied = []
        for j in reversed(fstring):
            if j != i or self.signature(u, i)[1] > m:
                u = self.f(u, j)
                applied.append(j)
            else:
                m += 1
        applied.reverse()
        return m, u, applied

    def demazure_step(self, elements, i, lam_i):
        """All ``f_i^a b`` with ``0 <= a <= phi_i(b) + lam_i``, deduplicated, ordered."""
        seen = set()
        out = []
        for x in elements:
            while True:
                if x not in seen:
                    seen.add(x)
                    out.append(x)
                eps, phi, kf, ke = self.signature(x, i)
                if phi + lam_i <= 0:
                    break
                if kf >= len(x):
                    x = x + (0,) * (kf - len(x)) + (1,)
                else:
                    x = x[:kf] + (x[kf] + 1,) + x[kf + 1:]
        return out

    def depth_step(self, elements, i, budget):
        """All ``f_i^a b`` with ``depth(f_i^a b) <= budget``."""
        seen = set()
        out = []
        for x in elements:
            d = sum(x)
            while True:
                if x not in seen:
                    seen.add(x)
                    out.append(x)
                if d >= budget:
                    break
                x = self.f(x, i)
                d += 1
        return out

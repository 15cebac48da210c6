# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels; same results as :mod:`exact3._kernels_py`.

Graphs larger than ``MAXN`` vertices are delegated to the Python twin.
"""

from libc.stdlib cimport malloc, free, realloc
from libc.string cimport memcpy

from . import _kernels_py as _py

BACKEND = "compiled"

cdef enum:
    MAXN = 64
    MAXE = 2016


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------


cdef int _refine(const int* adj, int n, int* lab, int* start, int ncells) noexcept nogil:
    cdef int newlab[MAXN]
    cdef int newstart[MAXN + 1]
    cdef int vals[MAXN]
    cdef int idx[MAXN]
    cdef int i = 0, j, s, e, t, q, x, v, ws, we, nn, pos, split, equal, a, b, k, ln
    while i < ncells:
        ws = start[i]
        we = start[i + 1]
        split = 0
        nn = 0
        pos = 0
        for j in range(ncells):
            s = start[j]
            e = start[j + 1]
            ln = e - s
            if ln == 1:
                newstart[nn] = pos
                newlab[pos] = lab[s]
                pos += 1
                nn += 1
                continue
            for t in range(ln):
                x = lab[s + t] * n
                v = 0
                for q in range(ws, we):
                    v += adj[x + lab[q]]
                vals[t] = v
            equal = 1
            for t in range(1, ln):
                if vals[t] != vals[0]:
                    equal = 0
                    break
            if equal:
                newstart[nn] = pos
                nn += 1
                for t in range(ln):
                    newlab[pos] = lab[s + t]
                    pos += 1
                continue
            split = 1
            # stable insertion sort of positions by value
            for t in range(ln):
                idx[t] = t
            for a in range(1, ln):
                k = idx[a]
                b = a - 1
                while b >= 0 and vals[idx[b]] > vals[k]:
                    idx[b + 1] = idx[b]
                    b -= 1
                idx[b + 1] = k
            for t in range(ln):
                if t == 0 or vals[idx[t]] != vals[idx[t - 1]]:
                    newstart[nn] = pos
                    nn += 1
                newlab[pos] = lab[s + idx[t]]
                pos += 1
        if split:
            memcpy(lab, newlab, n * sizeof(int))
            memcpy(start, newstart, nn * sizeof(int))
            ncells = nn
            start[ncells] = n
            i = 0
        else:
            i += 1
    return ncells


cdef class _Search:
    cdef int n
    cdef int* adj
    cdef int keylen
    cdef int* first_key
    cdef int* best_key
    cdef int* cur_key
    cdef int first_lab[MAXN]
    cdef int best_lab[MAXN]
    cdef int first_path[MAXN]
    cdef int first_depth
    cdef int have_first
    cdef int path[MAXN]
    cdef int* gens
    cdef int ngens
    cdef int cap
    cdef list pygens

    def __cinit__(self, int n):
        self.n = n
        self.keylen = n * (n - 1) // 2
        cdef int m = self.keylen if self.keylen > 0 else 1
        self.adj = <int*> malloc(n * n * sizeof(int))
        self.first_key = <int*> malloc(m * sizeof(int))
        self.best_key = <int*> malloc(m * sizeof(int))
        self.cur_key = <int*> malloc(m * sizeof(int))
        self.cap = 8
        self.gens = <int*> malloc(self.cap * n * sizeof(int))
        self.ngens = 0
        self.have_first = 0
        self.pygens = []
        if not (self.adj and self.first_key and self.best_key and self.cur_key and self.gens):
            raise MemoryError()

    def __dealloc__(self):
        free(self.adj)
        free(self.first_key)
        free(self.best_key)
        free(self.cur_key)
        free(self.gens)

    cdef void _add_gen(self, const int* from_lab, const int* to_lab):
        cdef int n = self.n, i
        if self.ngens == self.cap:
            self.cap *= 2
            self.gens = <int*> realloc(self.gens, self.cap * n * sizeof(int))
        cdef int* g = self.gens + self.ngens * n
        for i in range(n):
            g[from_lab[i]] = to_lab[i]
        self.ngens += 1
        self.pygens.append([g[i] for i in range(n)])

    cdef int _cmp_key(self, const int* a, const int* b) noexcept:
        cdef int i
        for i in range(self.keylen):
            if a[i] != b[i]:
                return -1 if a[i] < b[i] else 1
        return 0

    cdef int _leaf(self, const int* lab, int depth):
        cdef int n = self.n, i, j, k = 0, c, level
        for i in range(n):
            for j in range(i + 1, n):
                self.cur_key[k] = self.adj[lab[i] * n + lab[j]]
                k += 1
        if not self.have_first:
            self.have_first = 1
            memcpy(self.first_key, self.cur_key, self.keylen * sizeof(int))
            memcpy(self.best_key, self.cur_key, self.keylen * sizeof(int))
            memcpy(self.first_lab, lab, n * sizeof(int))
            memcpy(self.best_lab, lab, n * sizeof(int))
            memcpy(self.first_path, self.path, depth * sizeof(int))
            self.first_depth = depth
            return -1
        if self._cmp_key(self.cur_key, self.first_key) == 0:
            self._add_gen(self.first_lab, lab)
            level = 0
            while level < depth and level < self.first_depth and self.path[level] == self.first_path[level]:
                level += 1
            return level
        c = self._cmp_key(self.cur_key, self.best_key)
        if c == 0:
            self._add_gen(self.best_lab, lab)
        elif c < 0:
            memcpy(self.best_key, self.cur_key, self.keylen * sizeof(int))
            memcpy(self.best_lab, lab, n * sizeof(int))
        return -1

    cdef int _find(self, int* parent, int x) noexcept:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cdef int _search(self, int* lab_in, int* start_in, int ncells, int depth):
        cdef int n = self.n
        cdef int lab[MAXN]
        cdef int start[MAXN + 1]
        cdef int child_lab[MAXN]
        cdef int child_start[MAXN + 1]
        cdef int members[MAXN]
        cdef int tried[MAXN]
        cdef int parent[MAXN]
        cdef int ntried = 0, t, best_len, s, e, ln, i, j, k, v, jump, ok, gi, rv, p
        cdef int* g
        memcpy(lab, lab_in, n * sizeof(int))
        memcpy(start, start_in, (ncells + 1) * sizeof(int))
        ncells = _refine(self.adj, n, lab, start, ncells)
        if ncells == n:
            return self._leaf(lab, depth)
        t = -1
        best_len = n + 1
        for i in range(ncells):
            ln = start[i + 1] - start[i]
            if ln > 1 and ln < best_len:
                best_len = ln
                t = i
        s = start[t]
        e = start[t + 1]
        ln = e - s
        # members sorted by vertex id
        for i in range(ln):
            members[i] = lab[s + i]
        for i in range(1, ln):
            v = members[i]
            j = i - 1
            while j >= 0 and members[j] > v:
                members[j + 1] = members[j]
                j -= 1
            members[j + 1] = v
        for i in range(ln):
            v = members[i]
            if ntried:
                for j in range(n):
                    parent[j] = j
                for gi in range(self.ngens):
                    g = self.gens + gi * n
                    ok = 1
                    for p in range(depth):
                        if g[self.path[p]] != self.path[p]:
                            ok = 0
                            break
                    if not ok:
                        continue
                    for j in range(n):
                        k = self._find(parent, j)
                        rv = self._find(parent, g[j])
                        if k != rv:
                            if k < rv:
                                parent[rv] = k
                            else:
                                parent[k] = rv
                rv = self._find(parent, v)
                ok = 1
                for j in range(ntried):
                    if self._find(parent, tried[j]) == rv:
                        ok = 0
                        break
                if not ok:
                    continue
            tried[ntried] = v
            ntried += 1
            # child partition: cells[:t] + [v] + rest + cells[t+1:]
            memcpy(child_lab, lab, n * sizeof(int))
            child_lab[s] = v
            k = s + 1
            for j in range(s, e):
                if lab[j] != v:
                    child_lab[k] = lab[j]
                    k += 1
            for j in range(t + 1):
                child_start[j] = start[j]
            child_start[t + 1] = s + 1
            for j in range(t + 1, ncells + 1):
                child_start[j + 1] = start[j]
            self.path[depth] = v
            jump = self._search(child_lab, child_start, ncells + 1, depth + 1)
            if jump >= 0 and jump < depth:
                return jump
        return -1


def canon(int n, adj, colors=None):
    """Canonical labeling; see :func:`exact3._kernels_py.canon`."""
    if n == 0:
        return [], []
    if n > MAXN:
        return _py.canon(n, adj, colors)
    cdef _Search S = _Search(n)
    cdef int i
    for i in range(n * n):
        S.adj[i] = adj[i]
    cdef int lab[MAXN]
    cdef int start[MAXN + 1]
    cdef int ncells, pos
    if colors is None:
        for i in range(n):
            lab[i] = i
        start[0] = 0
        start[1] = n
        ncells = 1
    else:
        groups = {}
        for i in range(n):
            groups.setdefault(colors[i], []).append(i)
        pos = 0
        ncells = 0
        for c in sorted(groups):
            start[ncells] = pos
            ncells += 1
            for x in groups[c]:
                lab[pos] = x
                pos += 1
        start[ncells] = n
    S._search(lab, start, ncells, 0)
    return [S.best_lab[i] for i in range(n)], S.pygens


# ---------------------------------------------------------------------------
# flows
# ---------------------------------------------------------------------------


cdef int _max_flow(int n, const int* cap, const int* nb, const int* deg, int s, int t,
                   int limit, int* res, int* side) noexcept nogil:
    cdef int prev[MAXN]
    cdef int queue[MAXN]
    cdef int flow = 0, head, tail, x, y, i, b, c, row
    for i in range(n * n):
        res[i] = cap[i]
    while limit < 0 or flow < limit:
        for i in range(n):
            prev[i] = -1
        prev[s] = s
        head = 0
        tail = 0
        queue[tail] = s
        tail += 1
        while head < tail and prev[t] < 0:
            x = queue[head]
            head += 1
            row = x * n
            for i in range(deg[x]):
                y = nb[row + i]
                if prev[y] < 0 and res[row + y] > 0:
                    prev[y] = x
                    queue[tail] = y
                    tail += 1
        if prev[t] < 0:
            break
        b = 1 << 30
        y = t
        while y != s:
            x = prev[y]
            c = res[x * n + y]
            if c < b:
                b = c
            y = x
        if limit >= 0 and flow + b > limit:
            b = limit - flow
        y = t
        while y != s:
            x = prev[y]
            res[x * n + y] -= b
            res[y * n + x] += b
            y = x
        flow += b
    for i in range(n):
        side[i] = 0
    side[s] = 1
    head = 0
    tail = 0
    queue[tail] = s
    tail += 1
    while head < tail:
        x = queue[head]
        head += 1
        row = x * n
        for i in range(deg[x]):
            y = nb[row + i]
            if not side[y] and res[row + y] > 0:
                side[y] = 1
                queue[tail] = y
                tail += 1
    return flow


cdef class _Flow:
    cdef int n
    cdef int* cap
    cdef int* nb
    cdef int* deg
    cdef int* res
    cdef int side[MAXN]

    def __cinit__(self, int n, capm):
        self.n = n
        self.cap = <int*> malloc(n * n * sizeof(int))
        self.nb = <int*> malloc(n * n * sizeof(int))
        self.deg = <int*> malloc(n * sizeof(int))
        self.res = <int*> malloc(n * n * sizeof(int))
        if not (self.cap and self.nb and self.deg and self.res):
            raise MemoryError()
        cdef int i, j, c
        for i in range(n * n):
            c = capm[i]
            if c > (1 << 28):
                raise OverflowError("capacity too large for the compiled kernel")
            self.cap[i] = c
        for i in range(n):
            self.deg[i] = 0
            for j in range(n):
                if self.cap[i * n + j] > 0:
                    self.nb[i * n + self.deg[i]] = j
                    self.deg[i] += 1

    def __dealloc__(self):
        free(self.cap)
        free(self.nb)
        free(self.deg)
        free(self.res)

    cdef int run(self, int s, int t, int limit):
        return _max_flow(self.n, self.cap, self.nb, self.deg, s, t, limit, self.res, self.side)


def max_flow(int n, cap, int s, int t, int limit=-1, nbrs=None):
    """Edmonds-Karp; see :func:`exact3._kernels_py.max_flow`."""
    if n > MAXN:
        return _py.max_flow(n, cap, s, t, limit, nbrs)
    cdef _Flow F = _Flow(n, cap)
    cdef int value = F.run(s, t, limit)
    return value, [F.side[i] for i in range(n)]


def flow_tree(int n, cap, int limit=-1):
    """Gusfield equivalent flow tree; see :func:`exact3._kernels_py.flow_tree`."""
    if n > MAXN:
        return _py.flow_tree(n, cap, limit)
    parent = [0] * n
    weight = [0] * n
    if n == 0:
        return parent, weight
    cdef int par[MAXN]
    cdef int s, t, i, f
    cdef _Flow F = _Flow(n, cap)
    for i in range(n):
        par[i] = 0
    par[0] = -1
    for s in range(1, n):
        t = par[s]
        f = F.run(s, t, limit)
        weight[s] = f
        for i in range(n):
            if i != s and F.side[i] and par[i] == t:
                par[i] = s
    for i in range(n):
        parent[i] = par[i]
    return parent, weight


def min_cut_masks(int n, cap):
    """All minimum cuts by exhaustive scan; see :func:`exact3._kernels_py.min_cut_masks`."""
    if n > 31:
        return _py.min_cut_masks(n, cap)
    cdef int ne = 0, u, v, c, best = -1, val, e
    cdef unsigned long long mask, rest, both, inter, total
    cdef unsigned long long eb[MAXE]
    cdef int ec[MAXE]
    for u in range(n):
        for v in range(u + 1, n):
            c = cap[u * n + v]
            if c:
                eb[ne] = (1ULL << u) | (1ULL << v)
                ec[ne] = c
                ne += 1
    masks = []
    total = (1ULL << (n - 1)) - 1 if n >= 1 else 0
    rest = 0
    while rest < total:
        mask = 1ULL | (rest << 1)
        val = 0
        for e in range(ne):
            inter = mask & eb[e]
            if inter and inter != eb[e]:
                val += ec[e]
        if best < 0 or val < best:
            best = val
            masks = [mask]
        elif val == best:
            masks.append(mask)
        rest += 1
    return best, [int(m) for m in masks]

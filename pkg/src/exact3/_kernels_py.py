"""Pure-Python hot kernels.

Same API as the compiled ``_kernels`` extension; :mod:`exact3._backend`
picks one at import.  Graphs arrive as ``n`` plus a flat row-major
multiplicity (capacity) matrix ``adj`` of length ``n * n``.
"""

from __future__ import annotations

from collections import deque

BACKEND = "python"


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------


def _refine(adj, n, cells):
    """Equitable refinement of an ordered partition (list of lists)."""
    i = 0
    while i < len(cells):
        W = cells[i]
        split = False
        new = []
        if len(W) == 1:
            base = W[0] * n
            for X in cells:
                if len(X) == 1:
                    new.append(X)
                    continue
                vals = [adj[base + x] for x in X]
                first = vals[0]
                if all(v == first for v in vals):
                    new.append(X)
                    continue
                split = True
                groups: dict[int, list[int]] = {}
                for x, v in zip(X, vals):
                    groups.setdefault(v, []).append(x)
                for v in sorted(groups):
                    new.append(groups[v])
        else:
            for X in cells:
                if len(X) == 1:
                    new.append(X)
                    continue
                vals = []
                for x in X:
                    row = x * n
                    s = 0
                    for w in W:
                        s += adj[row + w]
                    vals.append(s)
                first = vals[0]
                if all(v == first for v in vals):
                    new.append(X)
                    continue
                split = True
                groups = {}
                for x, v in zip(X, vals):
                    groups.setdefault(v, []).append(x)
                for v in sorted(groups):
                    new.append(groups[v])
        if split:
            cells = new
            i = 0
        else:
            i += 1
    return cells


def _orbit_reps(gens, path, cell, n):
    """Representatives of ``cell`` under generators fixing ``path`` pointwise."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if all(g[p] == p for p in path):
            for x in range(n):
                a, b = find(x), find(g[x])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return find


def canon(n, adj, colors=None):
    """Canonical labeling of a vertex-colored multigraph.

    Returns ``(lab, gens)``: ``lab[i]`` is the vertex placed at canonical
    position ``i``; ``gens`` are automorphisms found during the search, as
    permutation lists.  The canonical form is the lexicographically
    smallest upper-triangle key over all leaves of the refinement tree.
    """
    if n == 0:
        return [], []
    if colors is None:
        cells = [list(range(n))]
    else:
        groups: dict[int, list[int]] = {}
        for v in range(n):
            groups.setdefault(colors[v], []).append(v)
        cells = [groups[c] for c in sorted(groups)]

    state = {
        "first_lab": None,
        "first_key": None,
        "first_path": None,
        "best_lab": None,
        "best_key": None,
    }
    gens: list[list[int]] = []

    def leaf_key(lab):
        key = []
        for i in range(n):
            row = lab[i] * n
            for j in range(i + 1, n):
                key.append(adj[row + lab[j]])
        return key

    def search(cells, path):
        cells = _refine(adj, n, cells)
        if len(cells) == n:
            lab = [c[0] for c in cells]
            key = leaf_key(lab)
            if state["first_key"] is None:
                state["first_lab"] = state["best_lab"] = lab
                state["first_key"] = state["best_key"] = key
                state["first_path"] = list(path)
                return None
            if key == state["first_key"]:
                gamma = [0] * n
                for a, b in zip(state["first_lab"], lab):
                    gamma[a] = b
                gens.append(gamma)
                fp = state["first_path"]
                level = 0
                while level < len(path) and level < len(fp) and path[level] == fp[level]:
                    level += 1
                return level
            if key == state["best_key"]:
                gamma = [0] * n
                for a, b in zip(state["best_lab"], lab):
                    gamma[a] = b
                gens.append(gamma)
            elif key < state["best_key"]:
                state["best_key"] = key
                state["best_lab"] = lab
            return None

        t = min(
            (k for k in range(len(cells)) if len(cells[k]) > 1),
            key=lambda k: (len(cells[k]), k),
        )
        target = cells[t]
        depth = len(path)
        tried: list[int] = []
        for v in sorted(target):
            if tried:
                find = _orbit_reps(gens, path, target, n)
                rv = find(v)
                if any(find(u) == rv for u in tried):
                    continue
            tried.append(v)
            rest = [x for x in target if x != v]
            child = cells[:t] + [[v], rest] + cells[t + 1:]
            path.append(v)
            jump = search(child, path)
            path.pop()
            if jump is not None and jump < depth:
                return jump
        return None

    search(cells, [])
    return state["best_lab"], gens


# ---------------------------------------------------------------------------
# flows
# ---------------------------------------------------------------------------


def _neighbors(n, cap):
    nbrs = []
    for u in range(n):
        row = u * n
        nbrs.append([v for v in range(n) if cap[row + v] > 0])
    return nbrs


def max_flow(n, cap, s, t, limit=-1, nbrs=None):
    """Edmonds-Karp on a symmetric capacity matrix.

    Stops early once the flow reaches ``limit`` (when ``limit >= 0``).
    Returns ``(value, source_side)`` where ``source_side`` is a 0/1 list
    marking vertices reachable from ``s`` in the final residual graph.
    """
    if nbrs is None:
        nbrs = _neighbors(n, cap)
    res = list(cap)
    flow = 0
    while limit < 0 or flow < limit:
        prev = [-1] * n
        prev[s] = s
        q = deque([s])
        while q and prev[t] < 0:
            x = q.popleft()
            row = x * n
            for y in nbrs[x]:
                if prev[y] < 0 and res[row + y] > 0:
                    prev[y] = x
                    q.append(y)
        if prev[t] < 0:
            break
        b = 1 << 60
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
    side = [0] * n
    side[s] = 1
    q = deque([s])
    while q:
        x = q.popleft()
        row = x * n
        for y in nbrs[x]:
            if not side[y] and res[row + y] > 0:
                side[y] = 1
                q.append(y)
    return flow, side


def flow_tree(n, cap, limit=-1):
    """Gusfield equivalent flow tree: ``(parent, weight)`` lists.

    ``weight[s]`` is the s-parent[s] max-flow (capped at ``limit``); the
    root 0 has parent -1.  lambda(u, v) is the minimum weight on the tree
    path when no cap is applied.
    """
    parent = [0] * n
    weight = [0] * n
    if n == 0:
        return parent, weight
    parent[0] = -1
    nbrs = _neighbors(n, cap)
    for s in range(1, n):
        t = parent[s]
        f, side = max_flow(n, cap, s, t, limit, nbrs)
        weight[s] = f
        for i in range(n):
            if i != s and side[i] and parent[i] == t:
                parent[i] = s
    return parent, weight


def min_cut_masks(n, cap):
    """All minimum edge cuts by exhaustive bipartition scan.

    Returns ``(value, masks)``: each mask is a bitset of the side holding
    vertex 0, excluding the full set.
    """
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            c = cap[u * n + v]
            if c:
                edges.append(((1 << u) | (1 << v), 1 << u, c))
    best = -1
    masks: list[int] = []
    for rest in range((1 << (n - 1)) - 1):
        mask = 1 | (rest << 1)
        val = 0
        for both, bu, c in edges:
            inter = mask & both
            if inter and inter != both:
                val += c
        if best < 0 or val < best:
            best = val
            masks = [mask]
        elif val == best:
            masks.append(mask)
    return best, masks

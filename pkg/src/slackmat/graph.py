"""Bipartite element/hyperplane non-incidence graph: spanning forests,
fundamental cycles, bounded simple-cycle enumeration.

Vertices 0..n-1 are ground-set elements, n..n+h-1 are hyperplanes.  Edges are
exactly the support positions of the symbolic slack matrix, in row-major
order, so edge index == slack variable index.
"""


class CycleCapExceeded(RuntimeError):
    """Raised when simple-cycle enumeration exceeds the configured cap; use
    fundamental cycles (a cycle-space generating set) instead."""


class NonIncidenceGraph:
    def __init__(self, matroid, hyperplanes=None):
        self.matroid = matroid
        self.hyperplanes = list(hyperplanes) if hyperplanes is not None else matroid.hyperplanes()
        n, h = matroid.n, len(self.hyperplanes)
        self.n_elements = n
        self.n_hyperplanes = h
        self.edges = []
        self.edge_index = {}
        for i in range(n):
            for j, H in enumerate(self.hyperplanes):
                if i not in H:
                    self.edge_index[(i, j)] = len(self.edges)
                    self.edges.append((i, j))
        self.adj = [[] for _ in range(n + h)]
        for i, j in self.edges:
            self.adj[i].append(n + j)
            self.adj[n + j].append(i)
        for lst in self.adj:
            lst.sort()

    @property
    def n_vertices(self):
        return self.n_elements + self.n_hyperplanes

    def vertex_name(self, v):
        if v < self.n_elements:
            return str(self.matroid.label_of(v))
        H = self.hyperplanes[v - self.n_elements]
        return "H" + str(v - self.n_elements + 1) + "=" + "".join(
            str(x) for x in self.matroid.set_labels(H))

    def edge_of(self, u, v):
        if u > v:
            u, v = v, u
        return self.edge_index[(u, v - self.n_elements)]

    def components(self):
        seen = [False] * self.n_vertices
        comps = []
        for s in range(self.n_vertices):
            if seen[s]:
                continue
            comp = []
            stack = [s]
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def spanning_forest(self):
        """Deterministic maximal spanning forest: BFS from the lowest-index
        unvisited vertex, neighbors in index order.  Returns edge indices."""
        from collections import deque

        seen = [False] * self.n_vertices
        forest = []
        for s in range(self.n_vertices):
            if seen[s] or not self.adj[s]:
                continue
            seen[s] = True
            q = deque([s])
            while q:
                v = q.popleft()
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        forest.append(self.edge_of(v, w))
                        q.append(w)
        return sorted(forest)

    def validate_forest(self, edge_indices):
        """Check a user-supplied forest: valid edges, acyclic, maximal."""
        edges = list(edge_indices)
        if len(set(edges)) != len(edges):
            raise ValueError("forest repeats an edge")
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in edges:
            if not 0 <= e < len(self.edges):
                raise ValueError(f"edge index {e} out of range")
            i, j = self.edges[e]
            a, b = find(i), find(self.n_elements + j)
            if a == b:
                raise ValueError("forest contains a cycle")
            parent[a] = b
        n_components = len(self.components())
        covered = {v for v in range(self.n_vertices) if self.adj[v]}
        isolated = self.n_vertices - len(covered)
        if len(edges) != self.n_vertices - isolated - (n_components - isolated):
            raise ValueError("forest is not maximal (not spanning)")
        return True

    def fundamental_cycles(self, forest=None):
        """One cycle per non-forest edge: the unique cycle it closes."""
        if forest is None:
            forest = self.spanning_forest()
        in_forest = set(forest)
        tree_adj = [[] for _ in range(self.n_vertices)]
        for e in forest:
            i, j = self.edges[e]
            tree_adj[i].append(self.n_elements + j)
            tree_adj[self.n_elements + j].append(i)
        # parent pointers per component
        parent = [-1] * self.n_vertices
        depth = [-1] * self.n_vertices
        for s in range(self.n_vertices):
            if depth[s] >= 0:
                continue
            depth[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in tree_adj[v]:
                    if depth[w] < 0:
                        depth[w] = depth[v] + 1
                        parent[w] = v
                        stack.append(w)
        cycles = []
        for e in range(len(self.edges)):
            if e in in_forest:
                continue
            i, j = self.edges[e]
            u, v = i, self.n_elements + j
            pu, pv = [u], [v]
            uu, vv = u, v
            while depth[uu] > depth[vv]:
                uu = parent[uu]
                pu.append(uu)
            while depth[vv] > depth[uu]:
                vv = parent[vv]
                pv.append(vv)
            while uu != vv:
                uu = parent[uu]
                vv = parent[vv]
                pu.append(uu)
                pv.append(vv)
            path = pu + pv[:-1][::-1]
            cycles.append(self._canonical_cycle(path))
        return cycles

    def simple_cycles(self, cap=100000):
        """All simple cycles as vertex lists (bipartite, so even length >= 4),
        each reported once in canonical orientation.  Raises CycleCapExceeded
        beyond `cap`."""
        cycles = []
        adj = self.adj
        for root in range(self.n_vertices):
            # paths from root through vertices > root only
            stack = [(root, [root], {root})]
            while stack:
                v, path, used = stack.pop()
                for w in adj[v]:
                    if w == root and len(path) >= 3:
                        if path[1] < path[-1]:
                            cycles.append(self._canonical_cycle(path))
                            if len(cycles) > cap:
                                raise CycleCapExceeded(
                                    f"more than {cap} simple cycles; use "
                                    "fundamental_cycles for a generating set")
                    elif w > root and w not in used:
                        stack.append((w, path + [w], used | {w}))
        return cycles

    def chordless_cycles(self, cap=100000):
        """All induced (chordless) cycles, canonically oriented.

        For a bipartite graph these index the standard binomial generating
        set of its toric ideal; the four-line example has 72, matching its
        published generator table.  DFS only ever extends induced paths, so
        this stays cheap even when the simple-cycle count explodes."""
        cycles = []
        adjset = [set(a) for a in self.adj]
        for root in range(self.n_vertices):
            radj = adjset[root]
            # invariant: path is an induced path and no vertex after path[1]
            # is adjacent to root (the closing vertex is handled separately)
            stack = [(root, (root,))]
            while stack:
                v, path = stack.pop()
                for w in adjset[v]:
                    if w <= root or w in path:
                        continue
                    if len(path) == 1:
                        stack.append((w, path + (w,)))
                        continue
                    if any(w in adjset[u] for u in path[1:-1]):
                        continue  # chord against an interior vertex
                    if w in radj:
                        if len(path) >= 3 and path[1] < w:
                            cycles.append(self._canonical_cycle(list(path) + [w]))
                            if len(cycles) > cap:
                                raise CycleCapExceeded(
                                    f"more than {cap} chordless cycles")
                    else:
                        stack.append((w, path + (w,)))
        return cycles

    def _canonical_cycle(self, path):
        """Rotate/orient a vertex cycle: smallest vertex first, smaller
        neighbor second."""
        k = path.index(min(path))
        path = path[k:] + path[:k]
        if path[-1] < path[1]:
            path = [path[0]] + path[1:][::-1]
        return tuple(path)

    def cycle_edges(self, cycle):
        """Edge indices along a vertex cycle, in traversal order."""
        out = []
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            out.append(self.edge_of(a, b))
        return out

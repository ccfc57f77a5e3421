"""Dinic max-flow on integer capacities.

Only what the density code needs: build, run, read the source side of a
minimum cut.  Capacities must be non-negative ints so cuts stay exact.
"""
from __future__ import annotations

from collections import deque


class FlowNetwork:
    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, c: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _bfs(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        to, cap = self.to, self.cap
        while q:
            u = q.popleft()
            for eid in self.head[u]:
                if cap[eid] > 0 and level[to[eid]] < 0:
                    level[to[eid]] = level[u] + 1
                    q.append(to[eid])
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        to, cap, head = self.to, self.cap, self.head
        while True:
            level = self._bfs(s, t)
            if level is None:
                return total
            it = [0] * self.n

            # iterative DFS for blocking flow
            while True:
                path: list[int] = []
                u = s
                while u != t:
                    advanced = False
                    while it[u] < len(head[u]):
                        eid = head[u][it[u]]
                        v = to[eid]
                        if cap[eid] > 0 and level[v] == level[u] + 1:
                            path.append(eid)
                            u = v
                            advanced = True
                            break
                        it[u] += 1
                    if not advanced:
                        if u == s:
                            break
                        # dead end: retreat
                        level[u] = -1
                        eid = path.pop()
                        u = to[eid ^ 1]
                        it[u] += 1
                if u != t:
                    break
                push = min(cap[eid] for eid in path)
                for eid in path:
                    cap[eid] -= push
                    cap[eid ^ 1] += push
                total += push

    def source_side(self, s: int) -> set[int]:
        """Vertices reachable from ``s`` in the residual graph (call after max_flow)."""
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for eid in self.head[u]:
                v = self.to[eid]
                if self.cap[eid] > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen

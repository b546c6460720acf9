"""
Labeled simple graphs on vertices 1..n

Neighbourhoods are int bitmasks (bit v set means v is a neighbour), so edge
toggles and neighbourhood symmetric differences are single XORs.
"""

from typing import Iterable, Iterator, List, Tuple


class GraphError(ValueError):
    """Invalid vertex or edge for a graph"""


def iter_bits(mask: int) -> Iterator[int]:
    """Vertices present in a bitmask, ascending"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Simple undirected graph; adj[0] is unused"""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: List[int] = None):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        self.n = n
        self.adj = list(adj) if adj is not None else [0] * (n + 1)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        g = cls(n)
        for a, b in edges:
            if g.has_edge(a, b):
                continue
            g.toggle_edge(a, b)
        return g

    def _check(self, v: int):
        if not 1 <= v <= self.n:
            raise GraphError(f"vertex {v} out of range 1..{self.n}")

    def copy(self) -> "Graph":
        return Graph(self.n, self.adj)

    def has_edge(self, a: int, b: int) -> bool:
        self._check(a)
        self._check(b)
        return bool(self.adj[a] >> b & 1)

    def neighbors(self, v: int) -> List[int]:
        self._check(v)
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self._check(v)
        return bin(self.adj[v]).count("1")

    def toggle_edge(self, a: int, b: int) -> "Graph":
        """Flip edge {a,b} in place"""
        self._check(a)
        self._check(b)
        if a == b:
            raise GraphError(f"self-loop on vertex {a}")
        self.adj[a] ^= 1 << b
        self.adj[b] ^= 1 << a
        return self

    def local_complement(self, v: int) -> "Graph":
        """Complement the subgraph induced on nbhd(v), in place"""
        self._check(v)
        nbhd = self.adj[v]
        for u in iter_bits(nbhd):
            self.adj[u] ^= nbhd & ~(1 << u)
        return self

    def apply_flips(self, flips: List[int]) -> "Graph":
        """XOR a symmetric per-vertex toggle mask into the adjacency"""
        for v in range(1, self.n + 1):
            if flips[v]:
                self.adj[v] ^= flips[v]
        return self

    def edges(self) -> List[Tuple[int, int]]:
        return [(a, b) for a in range(1, self.n + 1) for b in iter_bits(self.adj[a]) if a < b]

    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.adj) // 2

    def average_degree(self) -> float:
        if self.n == 0:
            return 0.0
        return 2.0 * self.edge_count() / self.n

    def is_symmetric(self) -> bool:
        for a in range(1, self.n + 1):
            if self.adj[a] >> a & 1:
                return False
            for b in iter_bits(self.adj[a]):
                if not self.adj[b] >> a & 1:
                    return False
        return not self.adj[0]

    def key(self) -> Tuple[int, ...]:
        return tuple(self.adj[1:])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def toggle_edge(g: Graph, a: int, b: int) -> Graph:
    return g.copy().toggle_edge(a, b)


def local_complement(g: Graph, v: int) -> Graph:
    return g.copy().local_complement(v)

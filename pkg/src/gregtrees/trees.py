"""Cayley and Greg trees: enumeration, statistics, restriction.

A Greg tree has n labeled vertices (ids 1..n) and u unlabeled vertices
(ids n+1..n+u, interchangeable), with every unlabeled vertex of degree at
least 3.  Root variants relax the degree rule at the root:

* ``rooted``    one root, an unlabeled root may have degree 2;
* ``relaxed``   one root, an unlabeled root may have degree 1 or 2;
* ``birooted``  an ordered pair of roots (coincidence allowed), each
                exempt from the degree rule.

Census polynomials by number of unlabeled vertices: H_n (unrooted),
G_n (rooted), (1+x) G_n (relaxed), (1+x)^3 F_n (bi-rooted).

Two Greg trees are equal when some relabeling of the unlabeled ids maps
one edge set (and root data) onto the other; ``GregTree.build`` stores a
canonical form, so dataclass equality is exactly this isomorphism.

Enumeration goes through Pruefer sequences generated under multiplicity
constraints (a vertex of degree d appears d-1 times in the sequence), so
only degree-feasible labeled trees are ever decoded.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .polys import Poly

VARIANTS = ("unrooted", "rooted", "relaxed", "birooted")


# ── data types ────────────────────────────────────────────────────────────

def _normalize_edges(edges) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(tuple(sorted((a, b))) for a, b in edges))


def _check_tree(ids: set[int], edges: tuple[tuple[int, int], ...]) -> None:
    if len(edges) != len(ids) - 1:
        raise ValueError(f"{len(ids)} vertices need {len(ids) - 1} edges, got {len(edges)}")
    if len(set(edges)) != len(edges):
        raise ValueError("duplicate edge")
    adj: dict[int, list[int]] = {v: [] for v in ids}
    for a, b in edges:
        if a == b or a not in ids or b not in ids:
            raise ValueError(f"bad edge ({a}, {b})")
        adj[a].append(b)
        adj[b].append(a)
    seen = {min(ids)}
    stack = [min(ids)]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if seen != ids:
        raise ValueError("edge set is not connected")


@dataclass(frozen=True)
class CayleyTree:
    """Labeled tree on 1..n, optionally rooted."""

    n: int
    edges: tuple[tuple[int, int], ...]
    root: int | None = None

    @classmethod
    def build(cls, n: int, edges, root: int | None = None) -> "CayleyTree":
        if n < 1:
            raise ValueError("need at least one vertex")
        es = _normalize_edges(edges)
        _check_tree(set(range(1, n + 1)), es)
        if root is not None and not 1 <= root <= n:
            raise ValueError(f"root {root} out of range 1..{n}")
        return cls(n=n, edges=es, root=root)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "u": 0, "root": self.root, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class GregTree:
    """Greg tree in canonical form; construct through ``build``."""

    n: int
    u: int
    edges: tuple[tuple[int, int], ...]
    root: int | None = None
    roots: tuple[int, int] | None = None

    @classmethod
    def build(cls, n: int, u: int, edges, root: int | None = None,
              roots: tuple[int, int] | None = None) -> "GregTree":
        if n < 1 or u < 0:
            raise ValueError("need n >= 1 labeled and u >= 0 unlabeled vertices")
        if root is not None and roots is not None:
            raise ValueError("a tree is rooted or bi-rooted, not both")
        ids = set(range(1, n + u + 1))
        es = _normalize_edges(edges)
        _check_tree(ids, es)
        for r in ([root] if root is not None else []) + (list(roots) if roots else []):
            if r not in ids:
                raise ValueError(f"root {r} is not a vertex")
        ces, croot, croots = _canonical_form(n, ids, es, root, roots)
        return cls(n=n, u=u, edges=ces, root=croot, roots=croots)

    def degrees(self) -> dict[int, int]:
        d = {v: 0 for v in range(1, self.n + self.u + 1)}
        for a, b in self.edges:
            d[a] += 1
            d[b] += 1
        return d

    def validate(self, variant: str) -> None:
        """Raise ValueError unless the degree rules of `variant` hold."""
        if variant not in VARIANTS:
            raise ValueError(f"unknown variant {variant!r}")
        deg = self.degrees()
        if variant == "unrooted":
            if self.root is not None or self.roots is not None:
                raise ValueError("unrooted tree carries root data")
            exempt: dict[int, int] = {}
        elif variant in ("rooted", "relaxed"):
            if self.root is None:
                raise ValueError(f"{variant} tree lacks a root")
            exempt = {self.root: 2 if variant == "rooted" else 1}
        else:
            if self.roots is None:
                raise ValueError("bi-rooted tree lacks its root pair")
            exempt = {self.roots[0]: 0, self.roots[1]: 0}
        for v in range(self.n + 1, self.n + self.u + 1):
            minimum = exempt.get(v, 3)
            if deg[v] < minimum:
                raise ValueError(f"unlabeled vertex {v} has degree {deg[v]} < {minimum}")

    def to_json_dict(self) -> dict:
        out: dict = {"n": self.n, "u": self.u}
        if self.roots is not None:
            out["roots"] = list(self.roots)
        else:
            out["root"] = self.root
        out["edges"] = [list(e) for e in self.edges]
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "GregTree":
        roots = tuple(data["roots"]) if "roots" in data and data["roots"] is not None else None
        return cls.build(data["n"], data["u"], data["edges"],
                         root=data.get("root"), roots=roots)

    def to_text(self) -> str:
        """Header line "n u root" followed by one "a b" line per edge."""
        if self.roots is not None:
            r = f"{self.roots[0]},{self.roots[1]}"
        elif self.root is not None:
            r = str(self.root)
        else:
            r = "-"
        lines = [f"{self.n} {self.u} {r}"]
        lines += [f"{a} {b}" for a, b in self.edges]
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "GregTree":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        n_s, u_s, r_s = lines[0].split()
        root = roots = None
        if "," in r_s:
            a, b = r_s.split(",")
            roots = (int(a), int(b))
        elif r_s != "-":
            root = int(r_s)
        edges = [tuple(map(int, ln.split())) for ln in lines[1:]]
        return cls.build(int(n_s), int(u_s), edges, root=root, roots=roots)


# ── canonical form ────────────────────────────────────────────────────────

def _canonical_form(n, ids, edges, root, roots):
    """Deterministic relabeling of the unlabeled ids, anchored at vertex 1.

    Vertices are colored (label for ids <= n, a shared color above) plus
    root marks, and each subtree hanging off the anchor is encoded as a
    nested tuple with children sorted by encoding.  Every subtree of a
    valid Greg tree contains a labeled or root-marked vertex (unlabeled
    non-root leaves are forbidden), so sibling encodings never tie and the
    traversal order is well defined.
    """
    adj: dict[int, list[int]] = {v: [] for v in ids}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    mark = {v: 0 for v in ids}
    if root is not None:
        mark[root] |= 1
    if roots is not None:
        mark[roots[0]] |= 1
        mark[roots[1]] |= 2

    enc: dict[int, tuple] = {}

    def encode(v: int, parent: int | None) -> tuple:
        subs = sorted(encode(w, v) for w in adj[v] if w != parent)
        color = (0, v, mark[v]) if v <= n else (1, 0, mark[v])
        enc[v] = (color, tuple(subs))
        return enc[v]

    encode(1, None)

    new_id: dict[int, int] = {}
    counter = [n]

    def assign(v: int, parent: int | None) -> None:
        if v <= n:
            new_id[v] = v
        else:
            counter[0] += 1
            new_id[v] = counter[0]
        for w in sorted((w for w in adj[v] if w != parent), key=lambda w: enc[w]):
            assign(w, v)

    assign(1, None)
    new_edges = _normalize_edges((new_id[a], new_id[b]) for a, b in edges)
    new_root = new_id[root] if root is not None else None
    new_roots = (new_id[roots[0]], new_id[roots[1]]) if roots is not None else None
    return new_edges, new_root, new_roots


# ── Pruefer machinery ─────────────────────────────────────────────────────

def prufer_decode(seq: Sequence[int], k: int) -> tuple[tuple[int, int], ...]:
    """Edges of the labeled tree on 1..k encoded by `seq` (length k-2)."""
    if k < 1:
        raise ValueError("need at least one vertex")
    if len(seq) != max(k - 2, 0):
        raise ValueError(f"sequence length {len(seq)} != {max(k - 2, 0)}")
    if k == 1:
        return ()
    degree = [1] * (k + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        for w in range(1, k + 1):
            if degree[w] == 1:
                edges.append((min(v, w), max(v, w)))
                degree[w] -= 1
                degree[v] -= 1
                break
    a, b = (w for w in range(1, k + 1) if degree[w] == 1)
    edges.append((a, b))
    return tuple(sorted(edges))


def _constrained_prufer(n: int, u: int, slack: int, floor: int) -> Iterator[tuple[int, ...]]:
    """Pruefer sequences for trees on n+u vertices, lexicographic order.

    Ids n+1..n+u must appear at least twice (degree >= 3), except that up
    to `slack` of them may appear fewer times but at least `floor` times.
    Labeled ids 1..n are unconstrained.
    """
    k = n + u
    length = k - 2
    if length < 0:
        return
    if length == 0:
        if u == 0 or (u <= slack and floor == 0):
            yield ()
        return
    counts = [0] * u
    seq = [0] * length
    forgivable = slack * (2 - floor)

    def final_ok() -> bool:
        short = [c for c in counts if c < 2]
        return len(short) <= slack and all(c >= floor for c in short)

    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == length:
            if final_ok():
                yield tuple(seq)
            return
        left = length - pos - 1
        for v in range(1, k + 1):
            if v > n:
                counts[v - n - 1] += 1
            need = sum(2 - c for c in counts if c < 2)
            if need - forgivable <= left:
                seq[pos] = v
                yield from rec(pos + 1)
            if v > n:
                counts[v - n - 1] -= 1

    yield from rec(0)


# ── enumeration ───────────────────────────────────────────────────────────

def enumerate_cayley(n: int, rooted: bool = False) -> Iterator[CayleyTree]:
    """All labeled trees on 1..n, lexicographic Pruefer order; rooted
    variants cycle roots in ascending order within each tree."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if n == 1:
        seqs: Iterator[tuple[int, ...]] = iter([()])
    else:
        seqs = _constrained_prufer(n, 0, 0, 0)
    for seq in seqs:
        edges = prufer_decode(seq, n)
        if rooted:
            for r in range(1, n + 1):
                yield CayleyTree(n=n, edges=edges, root=r)
        else:
            yield CayleyTree(n=n, edges=edges)


def u_bound(n: int, variant: str) -> int:
    """Largest u with any Greg tree of the variant (census degree)."""
    if variant == "unrooted":
        return max(n - 2, 0)
    if variant == "rooted":
        return n - 1
    if variant == "relaxed":
        return n
    if variant == "birooted":
        return n + 2
    raise ValueError(f"unknown variant {variant!r}")


def _build_canonical(n: int, u: int, edges, root=None, roots=None) -> GregTree:
    # for Pruefer-decoded candidates: skip the structural check, keep the
    # canonical relabeling
    ids = set(range(1, n + u + 1))
    ces, croot, croots = _canonical_form(n, ids, edges, root, roots)
    return GregTree(n=n, u=u, edges=ces, root=croot, roots=croots)


def _greg_candidates(n: int, u: int, variant: str) -> Iterator[GregTree]:
    """Degree-valid (tree, root data) configurations, before dedup."""
    k = n + u
    slack, floor = {"unrooted": (0, 2), "rooted": (1, 1),
                    "relaxed": (1, 0), "birooted": (2, 0)}[variant]
    if k == 1:
        if variant == "unrooted":
            yield GregTree.build(n, u, ())
        elif variant in ("rooted", "relaxed"):
            yield GregTree.build(n, u, (), root=1)
        else:
            yield GregTree.build(n, u, (), roots=(1, 1))
        return
    for seq in _constrained_prufer(n, u, slack, floor):
        edges = prufer_decode(seq, k)
        deg = {v: 0 for v in range(1, k + 1)}
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        # unlabeled vertices below degree 3 must be covered by root slots
        short = [v for v in range(n + 1, k + 1) if deg[v] < 3]
        if variant == "unrooted":
            if not short:
                yield _build_canonical(n, u, edges)
        elif variant in ("rooted", "relaxed"):
            root_min = 2 if variant == "rooted" else 1
            for r in range(1, k + 1):
                if all(v == r for v in short) and (r <= n or deg[r] >= root_min):
                    yield _build_canonical(n, u, edges, root=r)
        else:
            if len(short) > 2:
                continue
            for r1 in range(1, k + 1):
                for r2 in range(1, k + 1):
                    if all(v == r1 or v == r2 for v in short):
                        yield _build_canonical(n, u, edges, roots=(r1, r2))


def enumerate_greg(n: int, variant: str = "unrooted") -> Iterator[GregTree]:
    """All Greg trees of the variant, deduplicated to canonical forms.

    Order: u ascending, then lexicographic Pruefer, then root choices.
    """
    if n < 1:
        raise ValueError("need at least one labeled vertex")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    seen: set[GregTree] = set()
    for u in range(u_bound(n, variant) + 1):
        for t in _greg_candidates(n, u, variant):
            if t not in seen:
                seen.add(t)
                yield t


def degree_filtered_count(n: int, u: int, variant: str) -> int:
    """Number of degree-valid labeled configurations at (n, u), before the
    unlabeled ids are identified.  The relabeling action is free, so this
    equals u! times the number of canonical forms."""
    return sum(1 for _ in _greg_candidates(n, u, variant))


def unl_polynomial(n: int, variant: str = "unrooted") -> Poly:
    """Census polynomial: coefficient of x^u counts Greg trees with u
    unlabeled vertices."""
    counts = Counter(t.u for t in enumerate_greg(n, variant))
    size = max(counts) + 1 if counts else 0
    coeffs = [0] * size
    for u, c in counts.items():
        coeffs[u] = c
    return Poly(coeffs)


# ── improper edges ────────────────────────────────────────────────────────

def imp(t: CayleyTree) -> int:
    """Number of improper edges: parent -> child is improper when the
    parent's label exceeds the smallest label in the child's subtree."""
    if t.root is None:
        raise ValueError("imp needs a rooted tree")
    adj: dict[int, list[int]] = {v: [] for v in range(1, t.n + 1)}
    for a, b in t.edges:
        adj[a].append(b)
        adj[b].append(a)
    parent = {t.root: 0}
    order = [t.root]
    for v in order:
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    subtree_min = {v: v for v in order}
    for v in reversed(order):
        p = parent[v]
        if p:
            subtree_min[p] = min(subtree_min[p], subtree_min[v])
    return sum(1 for v in order if parent[v] and parent[v] > subtree_min[v])


def imp_polynomial(n: int, rooted: bool = True) -> Poly:
    """Improper-edge census: sum of x^imp over rooted Cayley trees, or over
    unrooted trees rooted at label 1.  Equals G_n(x-1) resp. H_n(x-1)."""
    counts: Counter[int] = Counter()
    if rooted:
        for t in enumerate_cayley(n, rooted=True):
            counts[imp(t)] += 1
    else:
        for t in enumerate_cayley(n):
            counts[imp(CayleyTree(n=n, edges=t.edges, root=1))] += 1
    coeffs = [0] * (max(counts) + 1)
    for j, c in counts.items():
        coeffs[j] = c
    return Poly(coeffs)


def imp_census(n: int, rooted: bool) -> tuple[int, ...]:
    """Counts by improper-edge value, index j = imp."""
    return tuple(imp_polynomial(n, rooted).coeffs)


# ── restriction ───────────────────────────────────────────────────────────

def restrict(x: CayleyTree, n: int) -> GregTree:
    """Unlabel the vertices above n, then iterate until stable: smooth
    unlabeled degree-2 vertices and prune unlabeled leaves.

    If x is rooted the root survives: an unlabeled degree-2 root is kept,
    and pruning an unlabeled degree-1 root hands the root to its
    neighbour.  The result is a Greg tree (rooted iff x is).
    """
    if not 1 <= n < x.n:
        raise ValueError(f"need 1 <= n < {x.n}")
    adj: dict[int, set[int]] = {v: set() for v in range(1, x.n + 1)}
    for a, b in x.edges:
        adj[a].add(b)
        adj[b].add(a)
    root = x.root
    while True:
        action = None
        for v in sorted(adj):
            if v <= n:
                continue
            d = len(adj[v])
            if v == root:
                if d == 1:
                    action = ("prune-root", v)
                    break
            elif d == 2:
                action = ("smooth", v)
                break
            elif d <= 1:
                action = ("prune", v)
                break
        if action is None:
            break
        kind, v = action
        if kind == "smooth":
            a, b = adj[v]
            adj[a].discard(v)
            adj[b].discard(v)
            adj[a].add(b)
            adj[b].add(a)
            del adj[v]
        else:
            if kind == "prune-root":
                (root,) = adj[v]
            for w in adj[v]:
                adj[w].discard(v)
            del adj[v]
    survivors = sorted(v for v in adj if v > n)
    rename = {v: v for v in adj if v <= n}
    rename.update({v: n + 1 + i for i, v in enumerate(survivors)})
    edges = {(rename[a], rename[b]) for a in adj for b in adj[a] if a < b}
    return GregTree.build(n, len(survivors), edges,
                          root=rename[root] if root is not None else None)


@lru_cache(maxsize=None)
def _restriction_fibers(m: int, n: int, rooted: bool):
    fibers: Counter[GregTree] = Counter()
    for x in enumerate_cayley(m, rooted=rooted):
        fibers[restrict(x, n)] += 1
    return fibers


def restriction_census(t: GregTree, m_max: int) -> list[int]:
    """Entry for each m = t.n..m_max: how many Cayley trees of size m
    (rooted iff t is) restrict to t.  The m = t.n entry uses the identity
    convention restrict(X, n) = X, so it is 1 exactly when t.u = 0."""
    if t.roots is not None:
        raise ValueError("restriction fibers are defined for unrooted and rooted trees")
    n = t.n
    rooted = t.root is not None
    out = []
    for m in range(n, m_max + 1):
        if m == n:
            out.append(1 if t.u == 0 else 0)
        else:
            out.append(_restriction_fibers(m, n, rooted).get(t, 0))
    return out

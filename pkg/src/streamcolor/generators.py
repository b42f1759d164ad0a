"""Reproducible edge streams: graph families and arrival-order policies.

Every stream is a deterministic function of (family, order, seed).  Families
never emit duplicate edges or self-loops; ``FromFile`` re-validates both.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from math import isqrt
from pathlib import Path
from typing import Union

from .core import Edge, StreamHeader, ValidationError, canonicalize, read_edge_list
from .rng import mix64


@dataclass(frozen=True)
class CompleteGraph:
    n: int


@dataclass(frozen=True)
class CompleteBipartite:
    a: int
    b: int


@dataclass(frozen=True)
class Star:
    t: int  # leaf count; centre is vertex 0


@dataclass(frozen=True)
class GnpRandom:
    n: int
    p: float


@dataclass(frozen=True)
class RandomRegular:
    n: int
    d: int


@dataclass(frozen=True)
class FromFile:
    path: str


GraphFamily = Union[CompleteGraph, CompleteBipartite, Star, GnpRandom, RandomRegular, FromFile]


@dataclass(frozen=True)
class AsGiven:
    pass


@dataclass(frozen=True)
class UniformRandomPermutation:
    seed: int | None = None  # falls back to the stream seed


@dataclass(frozen=True)
class AdversarialSorted:
    policy: str = "endpoint"  # "endpoint" or "star-batched"


ArrivalOrder = Union[AsGiven, UniformRandomPermutation, AdversarialSorted]


def _pair_from_index(idx: int, n: int) -> Edge:
    """Decode a rank in [0, C(n,2)) to the idx-th pair in lexicographic order."""
    total = n * (n - 1) // 2
    rev = total - 1 - idx
    a = n - 2 - (isqrt(8 * rev + 1) - 1) // 2
    b = idx - (a * n - a * (a + 1) // 2) + a + 1
    return Edge(a, b)


def _gnp_edges(n: int, p: float, rng: random.Random) -> list[Edge]:
    if p <= 0.0:
        return []
    total = n * (n - 1) // 2
    if p >= 1.0:
        return [_pair_from_index(i, n) for i in range(total)]
    # geometric skips over the ranked pair space: only ~p*C(n,2) draws
    edges = []
    log_q = math.log1p(-p)
    idx = -1
    while True:
        u = rng.random()
        skip = int(math.log(1.0 - u) / log_q) if u > 0.0 else 0
        idx += skip + 1
        if idx >= total:
            return edges
        edges.append(_pair_from_index(idx, n))


def _random_regular_edges(n: int, d: int, rng: random.Random) -> list[Edge]:
    # pairing model: shuffle d stubs per vertex, retry until the pairing is
    # simple; acceptance odds are good for the small d this package targets
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(10_000):
        rng.shuffle(stubs)
        edges = []
        seen = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            e = Edge(u, v) if u < v else Edge(v, u)
            if e in seen:
                ok = False
                break
            seen.add(e)
            edges.append(e)
        if ok:
            return edges
    raise ValidationError(
        f"could not realise a simple {d}-regular graph on {n} vertices; "
        "density too high for the pairing model"
    )


def _family_edges(family: GraphFamily, rng: random.Random) -> tuple[int, list[Edge]]:
    """Vertex count and edge list in the family's natural order."""
    if isinstance(family, CompleteGraph):
        if family.n < 1:
            raise ValidationError(f"complete graph needs n >= 1, got {family.n}")
        n = family.n
        return n, [Edge(u, v) for u in range(n) for v in range(u + 1, n)]
    if isinstance(family, CompleteBipartite):
        a, b = family.a, family.b
        if a < 1 or b < 1:
            raise ValidationError(f"bipartite sides must be >= 1, got {a},{b}")
        return a + b, [Edge(u, a + w) for u in range(a) for w in range(b)]
    if isinstance(family, Star):
        if family.t < 1:
            raise ValidationError(f"star needs >= 1 leaf, got {family.t}")
        return family.t + 1, [Edge(0, leaf) for leaf in range(1, family.t + 1)]
    if isinstance(family, GnpRandom):
        if family.n < 1:
            raise ValidationError(f"gnp needs n >= 1, got {family.n}")
        if not (0.0 <= family.p <= 1.0):
            raise ValidationError(f"gnp probability must be in [0,1], got {family.p}")
        return family.n, _gnp_edges(family.n, family.p, rng)
    if isinstance(family, RandomRegular):
        n, d = family.n, family.d
        if n < 1 or d < 0 or d >= n:
            raise ValidationError(f"regular graph needs 0 <= d < n, got n={n} d={d}")
        if (n * d) % 2 != 0:
            raise ValidationError(f"n*d must be even, got n={n} d={d}")
        return n, _random_regular_edges(n, d, rng)
    if isinstance(family, FromFile):
        header, raw = read_edge_list(family.path)
        edges = [canonicalize(e) for e in raw]
        if len(set(edges)) != len(edges):
            raise ValidationError(f"duplicate edges in {family.path}")
        for e in edges:
            if e.v >= header.n:
                raise ValidationError(f"edge {e} out of range for n={header.n}")
        return header.n, raw
    raise ValidationError(f"unknown family {family!r}")


def _star_batched(edges: list[Edge]) -> list[Edge]:
    """All of vertex 0's unemitted edges, then vertex 1's, and so on: the
    stream arrives as a sequence of stars."""
    by_vertex: dict[int, list[Edge]] = {}
    for e in sorted(canonicalize(e) for e in edges):
        by_vertex.setdefault(e.u, []).append(e)
    out: list[Edge] = []
    for v in sorted(by_vertex):
        out.extend(by_vertex[v])
    return out


def _apply_order(edges: list[Edge], order: ArrivalOrder, seed: int) -> list[Edge]:
    if isinstance(order, AsGiven):
        return list(edges)
    if isinstance(order, UniformRandomPermutation):
        if order.seed is not None:
            shuffle_seed = order.seed
        else:
            # decouple the permutation stream from the family-sampling stream
            shuffle_seed = mix64(seed ^ 0x5DEECE66D)
        out = list(edges)
        random.Random(shuffle_seed).shuffle(out)
        return out
    if isinstance(order, AdversarialSorted):
        if order.policy == "endpoint":
            return sorted(canonicalize(e) for e in edges)
        if order.policy == "star-batched":
            return _star_batched(edges)
        raise ValidationError(f"unknown adversarial policy {order.policy!r}")
    raise ValidationError(f"unknown arrival order {order!r}")


def generate(
    family: GraphFamily, order: ArrivalOrder, seed: int
) -> tuple[StreamHeader, list[Edge]]:
    """Produce one stream: each family edge exactly once, in the order the
    policy dictates, deterministic in ``seed``."""
    rng = random.Random(seed)
    n, edges = _family_edges(family, rng)
    ordered = _apply_order(edges, order, seed)
    return StreamHeader(n=n, m=len(ordered), seed=seed), ordered


_FAMILY_SPECS = {
    "complete": (CompleteGraph, (int,)),
    "bipartite": (CompleteBipartite, (int, int)),
    "star": (Star, (int,)),
    "gnp": (GnpRandom, (int, float)),
    "regular": (RandomRegular, (int, int)),
    "file": (FromFile, (str,)),
}


def parse_family(text: str) -> GraphFamily:
    """Parse CLI syntax like ``complete:50``, ``gnp:1000:0.01``, ``file:g.el``."""
    name, _, rest = text.partition(":")
    if name not in _FAMILY_SPECS:
        raise ValidationError(
            f"unknown family {name!r}; expected one of {sorted(_FAMILY_SPECS)}"
        )
    cls, arg_types = _FAMILY_SPECS[name]
    raw_args = rest.split(":") if rest else []
    if len(raw_args) != len(arg_types):
        raise ValidationError(f"family {name} takes {len(arg_types)} parameters")
    try:
        args = [t(a) for t, a in zip(arg_types, raw_args)]
    except ValueError:
        raise ValidationError(f"bad parameters for family {text!r}")
    return cls(*args)


def parse_order(text: str) -> ArrivalOrder:
    """Parse CLI syntax: ``as-given``, ``random``, ``random:SEED``,
    ``sorted``, ``star-batched``."""
    name, _, rest = text.partition(":")
    if name == "as-given":
        return AsGiven()
    if name == "random":
        return UniformRandomPermutation(int(rest)) if rest else UniformRandomPermutation()
    if name == "sorted":
        return AdversarialSorted("endpoint")
    if name == "star-batched":
        return AdversarialSorted("star-batched")
    raise ValidationError(f"unknown arrival order {text!r}")


def default_alpha(n: int) -> int:
    """Chunk scale parameter matching the random-order colourer's intended
    regime: ceil(log2 n), at least 1."""
    return max(1, math.ceil(math.log2(n))) if n > 1 else 1


def default_signature_bits(n: int) -> int:
    """Signature width for the adversarial-order colourer: ceil(36 ln n),
    at least 1."""
    return max(1, math.ceil(36 * math.log(n))) if n > 1 else 1


def graph_path(path: str | Path) -> FromFile:
    return FromFile(str(path))

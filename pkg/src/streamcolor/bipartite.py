"""Bit-signature streaming colourer for adversarial-order streams.

Every node draws s random bits at initialisation.  An edge (u, v) is routed
to the bipartite slice B_i for an index i drawn uniformly from the positions
where the two signatures differ; within B_i the node whose bit i is 0 is the
left endpoint.  The announced colour is (i, left counter, right counter) and
both counters then increment, so no counter value is ever reused at a node:
the transcript is proper for every arrival order.

If two signatures are identical there is no differing index; such edges get
globally unique overflow colours instead of crashing.  At the default
signature width (36 ln n bits) identical signatures essentially never occur.
"""

from __future__ import annotations

from .core import (
    ColourId,
    ConfigurationError,
    ContractViolation,
    Edge,
    OverflowColour,
    SpaceMeter,
    Transcript,
    TripleColour,
    ValidationError,
    canonicalize,
    validate_endpoints,
)
from .rng import MASK64, SplitMix64


def _select_bit(word: int, rank: int) -> int:
    """Position of the rank-th set bit of ``word`` (rank 0 = lowest)."""
    offset = 0
    while True:
        limb = word & MASK64
        pop = limb.bit_count()
        if rank < pop:
            for _ in range(rank):
                limb &= limb - 1
            return offset + (limb & -limb).bit_length() - 1
        rank -= pop
        word >>= 64
        offset += 64


class BipartiteColorer:
    """Sequential state machine; announcements are immediate, one per edge.

    ``strict_meter`` charges the worst-case n*s counter words up front, which
    is the accounting the space-bound analysis assumes; otherwise the meter
    follows the sparse reality of one word per touched (node, index) pair.

    ``expose_randomness`` grants readers (the worst-case stream construction)
    access to the signature table via :meth:`signature`.
    """

    def __init__(
        self,
        n: int,
        s: int,
        seed: int,
        strict_meter: bool = True,
        expose_randomness: bool = False,
    ):
        if n < 1:
            raise ValidationError(f"vertex count must be >= 1, got {n}")
        if s < 1:
            raise ValidationError(f"signature width must be >= 1, got {s}")
        self.n = n
        self.s = s
        self.seed = seed
        self.strict_meter = strict_meter
        self._exposed = expose_randomness
        self.meter = SpaceMeter()

        stream = SplitMix64(seed)
        self._signatures = [stream.bits(s) for _ in range(n)]
        self._choice = stream  # continues the same word sequence
        self._counters: dict[int, int] = {}  # key u*s + i
        self._overflow_serial = 0
        self.finished = False

        # one signature word per node, plus the overflow serial
        self.meter.charge(n + 1)
        if strict_meter:
            self.meter.charge(n * s)

    def signature(self, u: int) -> int:
        """Read node u's signature bits.  Requires expose_randomness."""
        if not self._exposed:
            raise ConfigurationError(
                "signature access requires expose_randomness=True"
            )
        if not (0 <= u < self.n):
            raise ValidationError(f"vertex {u} out of range for n={self.n}")
        return self._signatures[u]

    def differing_indices(self, u: int, v: int) -> list[int]:
        """All positions where u's and v's signatures differ.  Requires
        expose_randomness."""
        if not self._exposed:
            raise ConfigurationError(
                "signature access requires expose_randomness=True"
            )
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValidationError(f"vertex pair ({u},{v}) out of range for n={self.n}")
        diff = self._signatures[u] ^ self._signatures[v]
        return [i for i in range(self.s) if (diff >> i) & 1]

    def feed(self, edge: Edge) -> list[tuple[Edge, ColourId]]:
        if self.finished:
            raise ContractViolation("feed after finish")
        validate_endpoints(edge, self.n)
        u, v = edge
        if u == v:
            raise ValidationError(f"self-loop ({u},{v}) is not a valid edge")
        diff = self._signatures[u] ^ self._signatures[v]
        count = diff.bit_count()
        if count == 0:
            colour: ColourId = OverflowColour(self._overflow_serial)
            self._overflow_serial += 1
            return [(canonicalize(edge), colour)]
        i = _select_bit(diff, self._choice.below(count))
        if (self._signatures[u] >> i) & 1:
            u, v = v, u  # left endpoint carries bit i = 0
        ku = u * self.s + i
        kv = v * self.s + i
        cu = self._counters.get(ku, 0)
        cv = self._counters.get(kv, 0)
        if not self.strict_meter:
            self.meter.charge((1 if cu == 0 else 0) + (1 if cv == 0 else 0))
        self._counters[ku] = cu + 1
        self._counters[kv] = cv + 1
        return [(canonicalize(edge), TripleColour(i, cu, cv))]

    def finish(self) -> list[tuple[Edge, ColourId]]:
        if self.finished:
            raise ContractViolation("finish called twice")
        self.finished = True
        return []

    @property
    def overflow_count(self) -> int:
        return self._overflow_serial

    def counter(self, u: int, i: int) -> int:
        """Current counter value of node u in slice i (0 if untouched)."""
        if not (0 <= u < self.n):
            raise ValidationError(f"vertex {u} out of range for n={self.n}")
        if not (0 <= i < self.s):
            raise ValidationError(f"index {i} out of range for s={self.s}")
        return self._counters.get(u * self.s + i, 0)

    def bit(self, u: int, i: int) -> int:
        """Bit i of node u's signature; defines its side in slice i."""
        if not (0 <= u < self.n):
            raise ValidationError(f"vertex {u} out of range for n={self.n}")
        if not (0 <= i < self.s):
            raise ValidationError(f"index {i} out of range for s={self.s}")
        return (self._signatures[u] >> i) & 1

    def bipartite_subgraph(
        self, transcript: Transcript, i: int
    ) -> list[tuple[int, int]]:
        """Edges of slice B_i from a completed transcript, as (left, right)
        pairs oriented by bit i."""
        if not (0 <= i < self.s):
            raise ValidationError(f"index {i} out of range for s={self.s}")
        out = []
        for edge, colour in transcript.records:
            if isinstance(colour, TripleColour) and colour.index == i:
                u, v = edge
                if (self._signatures[u] >> i) & 1:
                    u, v = v, u
                out.append((u, v))
        return out

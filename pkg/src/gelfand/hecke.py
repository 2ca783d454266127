"""Double cosets and the exact double-coset algebra of a pair (G, K).

The pair is a Gelfand pair iff this algebra is commutative.  Everything that
feeds the verdict is integer arithmetic: structure constants are counted
exactly and commutativity is compared entry by entry, so the answer cannot be
corrupted by rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InternalConsistencyError, InvalidParameterError
from .groups import FiniteGroup, SubgroupEmbedding


@dataclass(frozen=True)
class DoubleCosetDecomposition:
    """K-double cosets of G, ordered by minimal element id (K itself first)."""

    blocks: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    block_of: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


@dataclass(frozen=True)
class HeckeStructureConstants:
    """Integer table c[i][j][k] = #{(x,y) in D_i x D_j : x*y = z_k}."""

    rank: int
    block_sizes: tuple[int, ...]
    subgroup_order: int
    table: np.ndarray  # shape (rank, rank, rank), int64

    def __post_init__(self):
        self.table.setflags(write=False)


@dataclass(frozen=True)
class BiInvariantFunction:
    """A function on G constant on each double coset, one value per block."""

    values: tuple[complex, ...]


def double_cosets(
    group: FiniteGroup, embedding: SubgroupEmbedding
) -> DoubleCosetDecomposition:
    """Expand each unvisited g to its full orbit {k g k'}.

    Scanning g in id order makes the block order ascending-minimal-id, which
    puts K (the block of the identity) first.
    """
    if embedding.parent is not group:
        raise InvalidParameterError("embedding does not target the given group")
    image = sorted(embedding.image)
    mul = group.mul
    block_of = [-1] * group.order
    blocks: list[tuple[int, ...]] = []
    reps: list[int] = []
    for g in range(group.order):
        if block_of[g] >= 0:
            continue
        left = {mul(k, g) for k in image}
        orbit = sorted({mul(x, k) for x in left for k in image})
        idx = len(blocks)
        for x in orbit:
            if block_of[x] >= 0:
                raise InternalConsistencyError("double cosets are not disjoint")
            block_of[x] = idx
        blocks.append(tuple(orbit))
        reps.append(g)
    dc = DoubleCosetDecomposition(tuple(blocks), tuple(reps), tuple(block_of))
    _check_decomposition(group, embedding, dc, image)
    return dc


def _check_decomposition(group, embedding, dc, image):
    ksize = embedding.subgroup.order
    if dc.blocks[dc.block_of[group.identity]] != tuple(image):
        raise InternalConsistencyError("block of the identity is not K itself")
    if dc.block_of[group.identity] != 0:
        raise InternalConsistencyError("block of the identity is not block 0")
    # |KgK| * |K ∩ g^-1 K g| = |K|^2 for every representative
    image_set = embedding.image
    for block, g in zip(dc.blocks, dc.representatives):
        ginv = group.inv(g)
        stab = sum(
            1 for k in image if group.mul(group.mul(g, k), ginv) in image_set
        )
        if len(block) * stab != ksize * ksize:
            raise InternalConsistencyError(
                f"|KgK|*|K ∩ g^-1Kg| = {len(block)}*{stab} != |K|^2 = {ksize * ksize} "
                f"at representative {g}"
            )


def structure_constants(
    group: FiniteGroup,
    embedding: SubgroupEmbedding,
    cosets: DoubleCosetDecomposition,
    verify: bool = True,
) -> HeckeStructureConstants:
    """Count c[i][j][k] by iterating D_i x D_j and bucketing products.

    No early exits: the full table feeds the convolution cross-check.  With
    verify=True every count is recomputed against a second representative of
    each block, and the per-block totals must equal c[i][j][k] * |D_k| (each
    element of a block is hit equally often).
    """
    mul = group.mul
    r = cosets.rank
    sizes = cosets.sizes
    reps = cosets.representatives
    # second representative per block, for the well-definedness recount
    second = tuple(
        block[1] if len(block) > 1 else block[0] for block in cosets.blocks
    )
    block_of = cosets.block_of
    table = np.zeros((r, r, r), dtype=np.int64)
    for i in range(r):
        di = cosets.blocks[i]
        for j in range(r):
            dj = cosets.blocks[j]
            hit_rep = [0] * r
            hit_second = [0] * r
            per_block = [0] * r
            for x in di:
                for y in dj:
                    p = mul(x, y)
                    k = block_of[p]
                    per_block[k] += 1
                    if p == reps[k]:
                        hit_rep[k] += 1
                    if p == second[k]:
                        hit_second[k] += 1
            for k in range(r):
                c = hit_rep[k]
                if per_block[k] != c * sizes[k]:
                    raise InternalConsistencyError(
                        f"products from D_{i} x D_{j} do not hit block {k} "
                        f"uniformly: {per_block[k]} != {c} * {sizes[k]}"
                    )
                if verify and hit_second[k] != c:
                    raise InternalConsistencyError(
                        f"structure constant c[{i}][{j}][{k}] depends on the "
                        f"representative: {c} vs {hit_second[k]}"
                    )
                table[i, j, k] = c
    return HeckeStructureConstants(
        rank=r,
        block_sizes=sizes,
        subgroup_order=embedding.subgroup.order,
        table=table,
    )


def is_commutative(constants: HeckeStructureConstants) -> bool:
    return bool(np.array_equal(constants.table, constants.table.swapaxes(0, 1)))


def noncommutative_witness(
    constants: HeckeStructureConstants,
) -> tuple[int, int, int] | None:
    """First (i, j, k) with c[i][j][k] != c[j][i][k], or None."""
    diff = np.argwhere(constants.table != constants.table.swapaxes(0, 1))
    if len(diff) == 0:
        return None
    i, j, k = diff[0]
    return int(i), int(j), int(k)


def convolve(
    f: BiInvariantFunction,
    g: BiInvariantFunction,
    group: FiniteGroup,
    cosets: DoubleCosetDecomposition,
) -> BiInvariantFunction:
    """(f*g)(x) = sum_y f(y) g(y^-1 x), evaluated once per block representative.

    Stays in exact integer arithmetic when both inputs are integral.
    """
    block_of = cosets.block_of
    inv = group.inv
    mul = group.mul
    fv = f.values
    gv = g.values
    out = []
    for z in cosets.representatives:
        acc = 0
        for y in range(group.order):
            acc += fv[block_of[y]] * gv[block_of[mul(inv(y), z)]]
        out.append(acc)
    return BiInvariantFunction(tuple(out))


def convolve_via_constants(
    f: BiInvariantFunction,
    g: BiInvariantFunction,
    constants: HeckeStructureConstants,
) -> BiInvariantFunction:
    """(f*g) on block k = sum_{i,j} f_i g_j c[i][j][k]; must agree with convolve."""
    r = constants.rank
    c = constants.table
    out = []
    for k in range(r):
        acc = 0
        for i in range(r):
            fi = f.values[i]
            if fi == 0:
                continue
            for j in range(r):
                cij = int(c[i, j, k])
                if cij:
                    acc += fi * g.values[j] * cij
        out.append(acc)
    return BiInvariantFunction(tuple(out))


def is_gelfand_hecke(
    group: FiniteGroup, embedding: SubgroupEmbedding
) -> tuple[bool, int]:
    """Commutativity verdict for the double-coset algebra, plus its rank."""
    dc = double_cosets(group, embedding)
    constants = structure_constants(group, embedding, dc)
    return is_commutative(constants), dc.rank

"""Complex character tables via the class-algebra eigenvector method.

The class sums span the center of the group algebra; their multiplication
coefficients a[i][j][k] are exact integer counts.  Simultaneous eigenvectors
of the class matrices (obtained from one random linear combination) are the
central characters, from which degrees and character values follow.  The
eigensolve is floating point, but every verdict downstream is re-validated
with integer identities, so rounding error cannot flip an answer silently:
anything that fails to round cleanly aborts instead of guessing.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import (
    InternalConsistencyError,
    NumericalQualityError,
    ResourceLimitError,
)
from .groups import ConjugacyClasses, FiniteGroup, SubgroupEmbedding, conjugacy_classes

DEFAULT_CLASS_LIMIT = 80
DEFAULT_ORDER_LIMIT = 2_000_000
_ORTHOGONALITY_TOL = 1e-8
_INTEGRALITY_TOL = 1e-6
_MAX_ATTEMPTS = 12

_CACHE_MAGIC = "gelfand-character-table"
_CACHE_VERSION = 1


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """One row per irreducible character, one column per conjugacy class.

    Row 0 is the trivial character; remaining rows are sorted by ascending
    degree, ties broken by the lexicographic order of their rounded values.
    """

    group_name: str
    group_order: int
    classes: ConjugacyClasses
    degrees: tuple[int, ...]
    values: np.ndarray  # shape (r, r), complex128

    def __post_init__(self):
        self.values.setflags(write=False)

    @property
    def num_classes(self) -> int:
        return self.classes.count


def class_coefficients(group: FiniteGroup, classes: ConjugacyClasses) -> np.ndarray:
    """a[i][j][k] = #{(x,y) in C_i x C_j : x*y = z_k} for the class reps z_k.

    Counted by factoring z_k = x * (x^-1 z_k) over all x, which is exact and
    costs one product per (element, class) pair.
    """
    r = classes.count
    class_of = classes.class_of
    inv = [group.inv(x) for x in range(group.order)]
    a = np.zeros((r, r, r), dtype=np.int64)
    for k, z in enumerate(classes.representatives):
        for x in range(group.order):
            a[class_of[x], class_of[group.mul(inv[x], z)], k] += 1
    # counting identity: sum_k a[i][j][k] |C_k| = |C_i| |C_j|
    sizes = np.array(classes.sizes, dtype=np.int64)
    totals = a @ sizes
    expected = np.outer(sizes, sizes)
    if not np.array_equal(totals, expected):
        raise InternalConsistencyError(
            f"class multiplication coefficients of {group.name} violate the "
            "counting identity"
        )
    return a


def validate_character_table(table: CharacterTable) -> None:
    """Enforce every table invariant; raises InternalConsistencyError."""
    r = table.classes.count
    v = table.values
    sizes = np.array(table.classes.sizes, dtype=np.float64)
    order = table.group_order
    if v.shape != (r, r) or len(table.degrees) != r:
        raise InternalConsistencyError(
            f"character table of {table.group_name} is not {r}x{r}"
        )
    if sum(d * d for d in table.degrees) != order:
        raise InternalConsistencyError(
            f"sum of squared degrees {table.degrees} != |{table.group_name}| = {order}"
        )
    if any(d < 1 for d in table.degrees):
        raise InternalConsistencyError("character degrees must be positive")
    if np.max(np.abs(v[:, 0] - np.array(table.degrees))) > _ORTHOGONALITY_TOL:
        raise InternalConsistencyError("character values at the identity != degrees")
    if np.max(np.abs(v[0] - 1.0)) > _ORTHOGONALITY_TOL:
        raise InternalConsistencyError("row 0 is not the trivial character")
    if list(table.degrees) != sorted(table.degrees):
        raise InternalConsistencyError("degrees are not sorted ascending")
    gram = (v * sizes) @ v.conj().T / order
    if np.max(np.abs(gram - np.eye(r))) > _ORTHOGONALITY_TOL:
        raise InternalConsistencyError(
            f"row orthogonality fails for {table.group_name} "
            f"(max deviation {np.max(np.abs(gram - np.eye(r))):.3e})"
        )
    col = v.conj().T @ v
    expected = np.diag(order / sizes)
    if np.max(np.abs(col - expected)) > _ORTHOGONALITY_TOL * order:
        raise InternalConsistencyError(
            f"column orthogonality fails for {table.group_name}"
        )


def _sort_key(row: np.ndarray) -> tuple:
    return tuple((round(z.real, 8) + 0.0, round(z.imag, 8) + 0.0) for z in row)


def _extract_rows(m, sizes, order):
    """Eigenvectors of one random class-matrix combination -> (degrees, rows)."""
    evals, evecs = np.linalg.eig(m)
    r = len(evals)
    if r > 1:
        gaps = np.abs(evals[:, None] - evals[None, :])
        np.fill_diagonal(gaps, np.inf)
        if gaps.min() < 1e-9 * (1.0 + np.abs(evals).max()):
            raise NumericalQualityError("eigenvalues of the random combination collide")
    degrees = []
    rows = []
    for idx in range(r):
        v = evecs[:, idx]
        if abs(v[0]) < 1e-12:
            raise NumericalQualityError("central character vanishes on the identity class")
        omega = v / v[0]
        norm = float(np.sum(np.abs(omega) ** 2 / sizes))
        d_float = math.sqrt(order / norm)
        d = round(d_float)
        if d < 1 or abs(d_float - d) > _INTEGRALITY_TOL * max(1.0, d):
            raise NumericalQualityError(
                f"character degree {d_float} does not round to an integer"
            )
        degrees.append(d)
        rows.append(d * omega / sizes)
    return degrees, rows


def character_table(
    group: FiniteGroup,
    classes: ConjugacyClasses | None = None,
    *,
    seed: int = 0,
    class_limit: int = DEFAULT_CLASS_LIMIT,
    order_limit: int = DEFAULT_ORDER_LIMIT,
) -> CharacterTable:
    """Compute and fully validate the character table of a finite group.

    Defective random combinations are retried with fresh coefficients (the
    random stream is seeded, so results are reproducible); persistent failure
    raises NumericalQualityError with the last diagnostic.
    """
    if group.order > order_limit:
        raise ResourceLimitError(
            f"|{group.name}| = {group.order} exceeds the character-table order "
            f"limit {order_limit}"
        )
    if classes is None:
        classes = conjugacy_classes(group)
    r = classes.count
    if r > class_limit:
        raise ResourceLimitError(
            f"{group.name} has {r} conjugacy classes, over the limit {class_limit}"
        )
    # class 0 must be the singleton class of the identity: row extraction
    # normalizes central characters there and column 0 carries the degrees
    if classes.classes[0] != (group.identity,):
        raise InternalConsistencyError(
            f"{group.name}: class 0 is {classes.classes[0]}, expected the "
            f"identity singleton ({group.identity},)"
        )
    coeffs = class_coefficients(group, classes)
    sizes = np.array(classes.sizes, dtype=np.float64)
    rng = np.random.default_rng(seed)
    last = "no attempt made"
    for _ in range(_MAX_ATTEMPTS):
        t = rng.standard_normal(r)
        m = np.tensordot(t, coeffs.astype(np.float64), axes=(0, 0))
        try:
            degrees, rows = _extract_rows(m, sizes, group.order)
            order_idx = sorted(
                range(r), key=lambda i: (degrees[i], _sort_key(rows[i]))
            )
            trivial = [
                i for i in order_idx if np.max(np.abs(rows[i] - 1.0)) <= _INTEGRALITY_TOL
            ]
            if len(trivial) != 1:
                raise NumericalQualityError("trivial character not uniquely identified")
            order_idx.remove(trivial[0])
            order_idx.insert(0, trivial[0])
            table = CharacterTable(
                group_name=group.name,
                group_order=group.order,
                classes=classes,
                degrees=tuple(degrees[i] for i in order_idx),
                values=np.array([rows[i] for i in order_idx]),
            )
            validate_character_table(table)
            return table
        except (NumericalQualityError, InternalConsistencyError) as exc:
            last = str(exc)
    raise NumericalQualityError(
        f"character table of {group.name} failed after {_MAX_ATTEMPTS} attempts: {last}"
    )


def irrep_dimensions(group: FiniteGroup, **kwargs) -> tuple[int, ...]:
    """Degrees of the irreducible characters, ascending (trivial first)."""
    return character_table(group, **kwargs).degrees


def permutation_character(
    group: FiniteGroup,
    embedding: SubgroupEmbedding,
    classes: ConjugacyClasses | None = None,
) -> tuple[int, ...]:
    """chi(g) = number of left cosets xK with gxK = xK, per class."""
    if classes is None:
        classes = conjugacy_classes(group)
    image = sorted(embedding.image)
    mul = group.mul
    coset_of = [-1] * group.order
    coset_reps = []
    for x in range(group.order):
        if coset_of[x] >= 0:
            continue
        idx = len(coset_reps)
        for k in image:
            coset_of[mul(x, k)] = idx
        coset_reps.append(x)
    if len(coset_reps) * embedding.subgroup.order != group.order:
        raise InternalConsistencyError("left cosets do not partition the group")
    values = []
    for z in classes.representatives:
        fixed = sum(1 for x in coset_reps if coset_of[mul(z, x)] == coset_of[x])
        values.append(fixed)
    return tuple(values)


def inner_product(f, h, classes: ConjugacyClasses) -> complex:
    """(1/|G|) sum_k |C_k| f(k) conj(h(k)) over the classes."""
    sizes = classes.sizes
    order = sum(sizes)
    acc = 0
    for size, fv, hv in zip(sizes, f, h):
        acc += size * fv * complex(hv).conjugate()
    return acc / order


def _round_multiplicity(value: complex, what: str) -> int:
    m = round(value.real)
    if m < 0 or abs(value - m) > _INTEGRALITY_TOL:
        raise NumericalQualityError(
            f"{what} = {value} does not round to a non-negative integer"
        )
    return m


@dataclass(frozen=True)
class InducedTrivialDecomposition:
    """Multiplicities of the induced trivial representation, one per irrep."""

    multiplicities: tuple[int, ...]

    @property
    def nonzero(self) -> tuple[int, ...]:
        return tuple(sorted(m for m in self.multiplicities if m))

    @property
    def sum_of_squares(self) -> int:
        return sum(m * m for m in self.multiplicities)


def decompose_induced_trivial(
    group: FiniteGroup,
    embedding: SubgroupEmbedding,
    table: CharacterTable | None = None,
    **kwargs,
) -> InducedTrivialDecomposition:
    """Multiplicities <perm char, chi_i>, validated against exact identities."""
    if table is None:
        table = character_table(group, **kwargs)
    perm = permutation_character(group, embedding, table.classes)
    ms = []
    for i in range(table.num_classes):
        val = inner_product(perm, table.values[i], table.classes)
        ms.append(_round_multiplicity(val, f"multiplicity of irrep {i}"))
    index = group.order // embedding.subgroup.order
    weighted = sum(m * d for m, d in zip(ms, table.degrees))
    if weighted != index:
        raise InternalConsistencyError(
            f"sum m_i * d_i = {weighted} != [G:K] = {index} for {group.name}"
        )
    if ms[0] != 1:
        raise InternalConsistencyError(
            f"trivial character has multiplicity {ms[0]} != 1 in the induced trivial"
        )
    return InducedTrivialDecomposition(tuple(ms))


def is_gelfand_character(
    group: FiniteGroup,
    embedding: SubgroupEmbedding,
    table: CharacterTable | None = None,
    **kwargs,
) -> bool:
    """True iff the induced trivial representation is multiplicity free."""
    decomp = decompose_induced_trivial(group, embedding, table, **kwargs)
    return all(m <= 1 for m in decomp.multiplicities)


# ---------------------------------------------------------------------------
# on-disk cache (plain text, versioned; reload must re-pass all validation)


def save_character_table(table: CharacterTable, path) -> None:
    lines = [
        f"{_CACHE_MAGIC} {_CACHE_VERSION}",
        f"group {table.group_name}",
        f"order {table.group_order}",
        f"classes {table.classes.count}",
        "sizes " + " ".join(str(s) for s in table.classes.sizes),
        "reps " + " ".join(str(x) for x in table.classes.representatives),
        "degrees " + " ".join(str(d) for d in table.degrees),
        "values",
    ]
    for row in table.values:
        lines.append(" ".join(f"{float(z.real)!r} {float(z.imag)!r}" for z in row))
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    os.replace(tmp, path)


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise InternalConsistencyError(f"character-table cache rejected: {message}")


def load_character_table(path, group: FiniteGroup) -> CharacterTable:
    """Load a cached table and re-run every validation invariant.

    Cache entries are never trusted blindly; any mismatch with the freshly
    recomputed conjugacy classes, or any failed invariant, raises.
    """
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh]
    _expect(len(lines) >= 8, "truncated file")
    _expect(lines[0] == f"{_CACHE_MAGIC} {_CACHE_VERSION}", f"bad header {lines[0]!r}")
    _expect(lines[1] == f"group {group.name}", "group spec mismatch")
    _expect(lines[2] == f"order {group.order}", "group order mismatch")
    classes = conjugacy_classes(group)
    r = classes.count
    _expect(lines[3] == f"classes {r}", "class count mismatch")
    _expect(
        lines[4] == "sizes " + " ".join(str(s) for s in classes.sizes),
        "class sizes mismatch",
    )
    _expect(
        lines[5] == "reps " + " ".join(str(x) for x in classes.representatives),
        "class representatives mismatch",
    )
    _expect(lines[6].startswith("degrees "), "missing degrees")
    degrees = tuple(int(tok) for tok in lines[6].split()[1:])
    _expect(lines[7] == "values" and len(lines) >= 8 + r, "missing value rows")
    values = np.zeros((r, r), dtype=np.complex128)
    for i in range(r):
        try:
            parts = [float(tok) for tok in lines[8 + i].split()]
        except ValueError:
            raise InternalConsistencyError(
                f"character-table cache rejected: row {i} is not numeric"
            ) from None
        _expect(len(parts) == 2 * r, f"row {i} has wrong width")
        values[i] = [complex(parts[2 * j], parts[2 * j + 1]) for j in range(r)]
    table = CharacterTable(
        group_name=group.name,
        group_order=group.order,
        classes=classes,
        degrees=degrees,
        values=values,
    )
    validate_character_table(table)
    return table


def cached_character_table(
    group: FiniteGroup,
    cache_dir,
    *,
    seed: int = 0,
    class_limit: int = DEFAULT_CLASS_LIMIT,
    order_limit: int = DEFAULT_ORDER_LIMIT,
) -> CharacterTable:
    """Load from cache_dir when valid, else compute and store.

    cache_dir=None disables caching entirely.
    """
    if cache_dir is None:
        return character_table(
            group, seed=seed, class_limit=class_limit, order_limit=order_limit
        )
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, f"{group.name}.chartab")
    if os.path.exists(path):
        try:
            return load_character_table(path, group)
        except (OSError, ValueError, InternalConsistencyError):
            pass  # stale or corrupt entry: recompute and overwrite
    table = character_table(
        group, seed=seed, class_limit=class_limit, order_limit=order_limit
    )
    save_character_table(table, path)
    return table

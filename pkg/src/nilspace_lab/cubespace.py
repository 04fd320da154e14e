"""Finite cubespaces: membership oracles, enumeration, and axiom checks.

A Cubespace is a set of points 0..size-1 plus a rule deciding, for each
dimension n, which labeled cubes (tuples of 2^n point ids in vertex-code
order) belong to C^n.  Enumeration never filters all size^(2^n) maps: it
extends assignments vertex by vertex and prunes on completed faces, in
numpy-vectorized chunks.

All spaces are immutable after construction; enumeration results are
cached on the space and returned in a canonical order (lexicographic on
the value tuple), so outputs are deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .cubes import (
    DIM_CAP,
    FaceDescriptor,
    all_faces,
    enumerate_cube_morphisms,
    faces,
    popcount,
    three_cube,
    top_vertex,
    vertices,
)

DEFAULT_NODE_BUDGET = 10**9
_CHUNK_ROWS = 1 << 19


class BudgetExceededError(RuntimeError):
    """Raised when an exhaustive operation runs out of search nodes."""


class Budget:
    """A shared counter of backtracking/sweep nodes.

    One budget governs all exhaustive work of an operation (or of a whole
    CLI run).  Exceeding it raises; callers translate that into an explicit
    INDETERMINATE status, never a silent pass.
    """

    def __init__(self, limit: int = DEFAULT_NODE_BUDGET):
        self.limit = limit
        self.used = 0

    def charge(self, nodes: int) -> None:
        self.used += nodes
        if self.used > self.limit:
            raise BudgetExceededError(
                f"node budget exhausted ({self.used} > {self.limit})"
            )

    def remaining(self) -> int:
        return max(0, self.limit - self.used)


def _ensure_budget(budget: Budget | None) -> Budget:
    return budget if budget is not None else Budget()


def dtype_for(size: int):
    if size <= 127:
        return np.int8
    if size <= 32767:
        return np.int16
    return np.int32


# ---------------------------------------------------------------------------
# Membership rules
# ---------------------------------------------------------------------------


class MembershipRule:
    """Backend deciding cube membership for one space.

    closed_under_faces means face restrictions of members are members by
    construction; only such rules may be used with face-pruned sweeps.
    """

    dim_cap: int = DIM_CAP
    closed_under_faces: bool = True

    def contains(self, n: int, values: Sequence[int]) -> bool:
        raise NotImplementedError

    def batch_contains(self, n: int, arr: np.ndarray) -> np.ndarray:
        return np.fromiter(
            (self.contains(n, row) for row in arr.tolist()),
            dtype=bool,
            count=len(arr),
        )

    def solve_top(self, n: int, corner_arr: np.ndarray) -> np.ndarray | None:
        """Optional fast path: candidate completions of the top vertex.

        Returns an (M, c) array whose columns jointly contain every possible
        completion of each corner row (extra candidates are fine; they get
        verified).  None means "try every point".
        """
        return None


class TableRule(MembershipRule):
    """Explicit cube tables per dimension, optionally extended by the
    k-step face characterization above the stored dimensions.

    The face characterization (membership at n > table_max iff all
    (k+1)-face restrictions touching the bottom of the last axis are
    members) is only valid for verified k-step nilspaces; the
    `uses_step_extension` flag records that the rule relies on it.
    """

    closed_under_faces = False

    def __init__(
        self,
        size: int,
        tables: dict[int, frozenset[tuple[int, ...]]],
        claimed_step: int | None = None,
        dim_cap: int = DIM_CAP,
    ):
        self.size = size
        self.tables = {n: frozenset(t) for n, t in tables.items()}
        self.table_max = max(self.tables) if self.tables else 0
        self.claimed_step = claimed_step
        self.dim_cap = dim_cap
        self.uses_step_extension = (
            claimed_step is not None and self.table_max >= claimed_step + 1
        )

    def contains(self, n: int, values: Sequence[int]) -> bool:
        if n == 0:
            return 0 <= values[0] < self.size
        if n in self.tables:
            return tuple(values) in self.tables[n]
        if not self.uses_step_extension or n <= self.table_max:
            raise ValueError(f"no cube table at dimension {n}")
        k = self.claimed_step
        assert k is not None
        for f in _step_char_faces(n, k):
            if not self.contains(k + 1, [values[v] for v in f]):
                return False
        return True


def _step_char_faces(n: int, k: int) -> list[tuple[int, ...]]:
    """Vertex-code tuples of the (k+1)-faces used by the k-step membership
    characterization: those with at least one vertex whose last coordinate
    is 0.  For n <= k+1 the full cube is the only face needed.
    """
    if n <= k + 1:
        return [tuple(vertices(n))]
    out = []
    for f in faces(n, n - (k + 1)):
        codes = f.vertex_codes()
        if any(not (v >> (n - 1)) & 1 for v in codes):
            out.append(codes)
    return out


class FunctionRule(MembershipRule):
    """Membership by a plain Python predicate; used for small derived spaces."""

    def __init__(self, size: int, fn: Callable[[int, Sequence[int]], bool],
                 dim_cap: int = DIM_CAP, closed_under_faces: bool = True):
        self.size = size
        self.fn = fn
        self.dim_cap = dim_cap
        self.closed_under_faces = closed_under_faces

    def contains(self, n: int, values: Sequence[int]) -> bool:
        return self.fn(n, values)


# ---------------------------------------------------------------------------
# The cubespace
# ---------------------------------------------------------------------------


@dataclass
class Cubespace:
    """A finite cubespace with a membership oracle.

    labels give a human-readable name per point id; claimed_step is the
    step the constructor believes (verify_axioms certifies it).
    """

    size: int
    rule: MembershipRule
    labels: tuple[str, ...] = ()
    name: str = "space"
    claimed_step: int | None = None
    _cube_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not self.labels:
            self.labels = tuple(str(i) for i in range(self.size))
        if len(self.labels) != self.size:
            raise ValueError("need one label per point")

    # -- membership -------------------------------------------------------

    @property
    def dim_cap(self) -> int:
        return self.rule.dim_cap

    def is_cube(self, n: int, values: Sequence[int]) -> bool:
        if n < 0 or n > self.dim_cap:
            raise ValueError(f"dimension {n} outside capability 0..{self.dim_cap}")
        if len(values) != (1 << n):
            raise ValueError(f"a {n}-cube needs {1 << n} values")
        if any(not (0 <= v < self.size) for v in values):
            raise ValueError("point id out of range")
        return self.rule.contains(n, values)

    def batch_is_cube(self, n: int, arr: np.ndarray) -> np.ndarray:
        if arr.ndim != 2 or arr.shape[1] != (1 << n):
            raise ValueError("batch shape mismatch")
        if len(arr) == 0:
            return np.zeros(0, dtype=bool)
        return self.rule.batch_contains(n, arr)

    # -- enumeration ------------------------------------------------------

    def cubes_array(self, n: int, budget: Budget | None = None) -> np.ndarray:
        """All n-cubes as a (M, 2^n) array, sorted lexicographically."""
        if n in self._cube_cache:
            return self._cube_cache[n]
        budget = _ensure_budget(budget)
        if n == 0:
            arr = np.arange(self.size, dtype=dtype_for(self.size)).reshape(-1, 1)
        elif isinstance(self.rule, TableRule) and n in self.rule.tables:
            rows = sorted(self.rule.tables[n])
            arr = np.array(rows, dtype=dtype_for(self.size)).reshape(len(rows), 1 << n)
        elif not self.rule.closed_under_faces:
            arr = self._enumerate_bruteforce(n, budget)
        else:
            arr = self._enumerate_sweep(n, budget)
        arr = _sort_rows(arr)
        arr.setflags(write=False)
        self._cube_cache[n] = arr
        return arr

    def cubes(self, n: int, budget: Budget | None = None) -> list[tuple[int, ...]]:
        arr = self.cubes_array(n, budget)
        if len(arr) > (1 << 21):
            raise ValueError("cube set too large for a tuple list; use cubes_array")
        return [tuple(int(x) for x in row) for row in arr]

    def cube_count(self, n: int, budget: Budget | None = None) -> int:
        return len(self.cubes_array(n, budget))

    def _enumerate_bruteforce(self, n: int, budget: Budget) -> np.ndarray:
        rows = []
        budget.charge(self.size ** (1 << n))
        for combo in itertools.product(range(self.size), repeat=1 << n):
            if self.rule.contains(n, combo):
                rows.append(combo)
        return np.array(rows, dtype=dtype_for(self.size)).reshape(len(rows), 1 << n)

    def _enumerate_sweep(self, n: int, budget: Budget) -> np.ndarray:
        corners = self.corners_array(n, budget, prune_all_faces=True)
        counts, filled = complete_corners_batch(self, n, corners, budget)
        del counts
        return filled

    def corners_array(
        self, n: int, budget: Budget | None = None, prune_all_faces: bool = False
    ) -> np.ndarray:
        """All corner assignments on the 2^n - 1 non-top vertices.

        By default a corner only has to satisfy the gluing precondition:
        restrictions to the (n-1)-faces through the zero vertex are cubes.
        prune_all_faces additionally requires every face not containing the
        top vertex (valid extra pruning only for face-closed rules; used
        when enumerating full cube sets).
        """
        budget = _ensure_budget(budget)
        num_slots = (1 << n) - 1
        if prune_all_faces and not self.rule.closed_under_faces:
            raise ValueError("all-face pruning needs a face-closed rule")
        checks: list[tuple[int, int, tuple[int, ...]]] = []
        if n >= 1:
            if prune_all_faces:
                face_list = [
                    f for f in all_faces(n, min_dim=1)
                    if top_vertex(n) not in f.vertex_codes()
                ]
            else:
                face_list = [
                    f for f in faces(n, 1)
                    if all(b == 0 for _, b in f.fixed)
                ] if n >= 2 else []
            for f in face_list:
                codes = f.vertex_codes()
                step = max(codes)
                checks.append((step, f.dim, codes))
        return sweep_assignments(
            target=self,
            num_slots=num_slots,
            slot_domain_size=self.size,
            checks=checks,
            budget=budget,
            dtype=dtype_for(self.size),
        )

    def __str__(self) -> str:
        return f"{self.name}({self.size} points)"


def _sort_rows(arr: np.ndarray) -> np.ndarray:
    if len(arr) <= 1:
        return arr
    order = np.lexsort(tuple(arr[:, j] for j in range(arr.shape[1] - 1, -1, -1)))
    return arr[order]


def encode_rows(arr: np.ndarray, size: int) -> np.ndarray:
    """Pack rows into uint64 keys preserving lexicographic order."""
    bits = max(1, int(size - 1).bit_length())
    w = arr.shape[1]
    if bits * w > 64:
        raise ValueError("rows too wide to encode in 64 bits")
    out = np.zeros(len(arr), dtype=np.uint64)
    for j in range(w):
        out = (out << np.uint64(bits)) | arr[:, j].astype(np.uint64)
    return out


# ---------------------------------------------------------------------------
# The vectorized assignment sweep
# ---------------------------------------------------------------------------


def sweep_assignments(
    target: Cubespace,
    num_slots: int,
    slot_domain_size: int,
    checks: Sequence[tuple[int, int, tuple[int, ...]]],
    budget: Budget,
    dtype,
    slot_values: Sequence[Sequence[int] | None] | None = None,
    check_space: Sequence[Cubespace] | None = None,
) -> np.ndarray:
    """Enumerate assignments slot by slot, filtering by membership checks.

    checks are triples (slot, dim, cols): once `slot` is assigned, the
    columns `cols` (all <= slot) must form a dim-cube of the target (or of
    check_space[i] when given, one space per check).  Rows are processed in
    chunks so peak memory stays bounded; every examined row costs one
    budget node.
    """
    by_slot: dict[int, list[tuple[int, int, tuple[int, ...]]]] = {}
    for i, (slot, dim, cols) in enumerate(checks):
        by_slot.setdefault(slot, []).append((i, dim, cols))

    def allowed(slot: int) -> np.ndarray:
        if slot_values is not None and slot_values[slot] is not None:
            return np.asarray(slot_values[slot], dtype=dtype)
        return np.arange(slot_domain_size, dtype=dtype)

    first = allowed(0)
    arr = first.reshape(-1, 1)
    budget.charge(len(arr))
    for i, dim, cols in by_slot.get(0, []):
        space = check_space[i] if check_space is not None else target
        arr = arr[space.batch_is_cube(dim, arr[:, list(cols)])]

    for slot in range(1, num_slots):
        vals = allowed(slot)
        pieces = []
        step_checks = by_slot.get(slot, [])
        for start in range(0, len(arr), _CHUNK_ROWS):
            chunk = arr[start : start + _CHUNK_ROWS]
            m = len(chunk)
            ext = np.empty((m * len(vals), slot + 1), dtype=dtype)
            ext[:, :slot] = np.repeat(chunk, len(vals), axis=0)
            ext[:, slot] = np.tile(vals, m)
            budget.charge(len(ext))
            for i, dim, cols in step_checks:
                space = check_space[i] if check_space is not None else target
                ext = ext[space.batch_is_cube(dim, ext[:, list(cols)])]
                if len(ext) == 0:
                    break
            if len(ext):
                pieces.append(ext)
        arr = np.concatenate(pieces) if pieces else np.empty((0, slot + 1), dtype=dtype)
    return arr


def complete_corners_batch(
    space: Cubespace, n: int, corners: np.ndarray, budget: Budget
) -> tuple[np.ndarray, np.ndarray]:
    """Completions of many corners at once.

    Returns (counts, filled) where counts[i] is the number of valid top
    values for corner i and filled stacks every completed cube (corner rows
    with multiple completions appear once per completion).
    """
    m = len(corners)
    width = 1 << n
    dtype = dtype_for(space.size)
    if m == 0:
        return np.zeros(0, dtype=np.int64), np.empty((0, width), dtype=dtype)
    counts = np.zeros(m, dtype=np.int64)
    pieces = []
    candidates = space.rule.solve_top(n, corners)
    if candidates is not None:
        budget.charge(m * candidates.shape[1])
        for j in range(candidates.shape[1]):
            filled = np.empty((m, width), dtype=dtype)
            filled[:, : width - 1] = corners
            filled[:, width - 1] = candidates[:, j]
            ok = space.batch_is_cube(n, filled)
            if j > 0:  # identical candidate columns must not double-count
                dup = np.zeros(m, dtype=bool)
                for jj in range(j):
                    dup |= candidates[:, jj] == candidates[:, j]
                ok &= ~dup
            counts += ok
            if ok.any():
                pieces.append(filled[ok])
    else:
        budget.charge(m * space.size)
        for x in range(space.size):
            filled = np.empty((m, width), dtype=dtype)
            filled[:, : width - 1] = corners
            filled[:, width - 1] = x
            ok = space.batch_is_cube(n, filled)
            counts += ok
            if ok.any():
                pieces.append(filled[ok])
    filled_all = np.concatenate(pieces) if pieces else np.empty((0, width), dtype=dtype)
    return counts, _sort_rows(filled_all)


def complete_corner(
    space: Cubespace, corner: Sequence[int], n: int, budget: Budget | None = None
) -> list[int]:
    """All points completing the corner (missing top vertex) to an n-cube.

    Raises if a face restriction of the corner required by the gluing
    precondition is not a cube.
    """
    if len(corner) != (1 << n) - 1:
        raise ValueError(f"a {n}-corner needs {(1 << n) - 1} values")
    budget = _ensure_budget(budget)
    if n >= 2:
        for f in faces(n, 1):
            if all(b == 0 for _, b in f.fixed):
                sub = [corner[v] for v in f.vertex_codes()]
                if not space.is_cube(n - 1, sub):
                    raise ValueError(
                        f"corner face {f.fixed} restriction is not a cube"
                    )
    arr = np.array([corner], dtype=dtype_for(space.size))
    counts, filled = complete_corners_batch(space, n, arr, budget)
    return sorted(int(row[-1]) for row in filled)


def concatenate(
    space: Cubespace, c1: Sequence[int], c2: Sequence[int]
) -> tuple[int, ...]:
    """Concatenation along the last axis of two adjacent cubes.

    c1, c2 must be n-cubes with c1 on top equal to c2 on the bottom; the
    result glues c1's bottom face to c2's top face and is again a cube.
    """
    if len(c1) != len(c2):
        raise ValueError("cubes must have equal dimension")
    width = len(c1)
    n = width.bit_length() - 1
    if 1 << n != width or n < 1:
        raise ValueError("values length must be 2^n, n >= 1")
    half = width // 2
    if not space.is_cube(n, c1) or not space.is_cube(n, c2):
        raise ValueError("inputs must be cubes")
    if tuple(c1[half:]) != tuple(c2[:half]):
        raise ValueError("cubes are not adjacent along the last axis")
    return tuple(c1[:half]) + tuple(c2[half:])


# ---------------------------------------------------------------------------
# Morphisms between cubespaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CubespaceMorphism:
    """A point map that sends cubes to cubes (verified up to a dimension)."""

    source: Cubespace
    target: Cubespace
    point_map: tuple[int, ...]

    def apply(self, x: int) -> int:
        return self.point_map[x]

    def apply_cube(self, values: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.point_map[v] for v in values)

    def verify(self, max_dim: int, budget: Budget | None = None) -> bool:
        budget = _ensure_budget(budget)
        pm = np.asarray(self.point_map, dtype=dtype_for(self.target.size))
        for n in range(0, max_dim + 1):
            arr = self.source.cubes_array(n, budget)
            budget.charge(len(arr))
            if not bool(self.target.batch_is_cube(n, pm[arr]).all()):
                return False
        return True


def is_morphism(
    source: Cubespace,
    target: Cubespace,
    point_map: Sequence[int],
    max_dim: int,
    budget: Budget | None = None,
) -> bool:
    return CubespaceMorphism(source, target, tuple(point_map)).verify(max_dim, budget)


# ---------------------------------------------------------------------------
# Restricted morphism sets (hom_set)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Pattern:
    """A finite cubespace presented by membership constraints.

    point_count points; each constraint (dim, idx_tuple) demands that the
    listed pattern points, read as a dim-cube, land on a cube of the
    target.  Checking all constraints characterizes morphisms out of the
    pattern.
    """

    point_count: int
    constraints: tuple[tuple[int, tuple[int, ...]], ...]
    name: str = "pattern"


def cube_pattern(n: int) -> Pattern:
    """{0,1}^n: a morphism out of it is exactly an n-cube."""
    return Pattern(1 << n, ((n, tuple(vertices(n))),), name=f"cube{n}")


def point_pattern() -> Pattern:
    return Pattern(1, ((0, (0,)),), name="point")


def three_cube_pattern(n: int) -> Pattern:
    """T_n, constrained by its 2^n corner-embedded unit cubes."""
    t = three_cube(n)
    cons = tuple((n, t.psi[v]) for v in vertices(n))
    return Pattern(t.point_count, cons, name=f"threecube{n}")


@dataclass(frozen=True)
class HomSet:
    """All morphisms pattern -> space matching the constraints, with the
    uniform counting measure (the finite Haar measure on the hom set)."""

    pattern: Pattern
    space: Cubespace
    morphisms: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.morphisms)

    @property
    def uniform_weight(self) -> float:
        if not self.morphisms:
            raise ValueError("empty hom set has no uniform measure")
        return 1.0 / len(self.morphisms)

    def as_array(self) -> np.ndarray:
        return np.array(self.morphisms, dtype=dtype_for(self.space.size)).reshape(
            len(self.morphisms), self.pattern.point_count
        )


def hom_set(
    pattern: Pattern,
    space: Cubespace,
    constraints: dict[int, int] | None = None,
    budget: Budget | None = None,
) -> HomSet:
    """Enumerate Hom(pattern, space), optionally pinning some points.

    Enumeration is a vectorized sweep over pattern points in an order that
    completes constraint cubes as early as possible.
    """
    budget = _ensure_budget(budget)
    pinned = dict(constraints or {})
    for p, x in pinned.items():
        if not (0 <= p < pattern.point_count) or not (0 <= x < space.size):
            raise ValueError("constraint out of range")

    order = _constraint_order(pattern)
    pos = {p: i for i, p in enumerate(order)}
    checks = []
    for dim, idxs in pattern.constraints:
        cols = tuple(pos[p] for p in idxs)
        checks.append((max(cols), dim, cols))
    slot_values: list[Sequence[int] | None] = [
        [pinned[p]] if p in pinned else None for p in order
    ]
    arr = sweep_assignments(
        target=space,
        num_slots=pattern.point_count,
        slot_domain_size=space.size,
        checks=checks,
        budget=budget,
        dtype=dtype_for(space.size),
        slot_values=slot_values,
    )
    # undo the assignment ordering
    inv = np.empty(pattern.point_count, dtype=np.int64)
    for i, p in enumerate(order):
        inv[p] = i
    arr = arr[:, inv]
    arr = _sort_rows(arr)
    morphs = tuple(tuple(int(x) for x in row) for row in arr)
    return HomSet(pattern, space, morphs)


def _constraint_order(pattern: Pattern) -> list[int]:
    """Assignment order that finishes constraint cubes early (greedy)."""
    remaining = set(range(pattern.point_count))
    order: list[int] = []
    cons = list(pattern.constraints)
    while remaining:
        best = None
        best_missing = None
        for dim, idxs in cons:
            missing = [p for p in idxs if p in remaining]
            if missing and (best_missing is None or len(missing) < len(best_missing)):
                best, best_missing = (dim, idxs), missing
        if best is None:
            order.extend(sorted(remaining))
            break
        for p in sorted(best_missing):
            order.append(p)
            remaining.discard(p)
    return order


# ---------------------------------------------------------------------------
# Axiom verification
# ---------------------------------------------------------------------------

PASS = "PASS"
FAIL = "FAIL"
INDETERMINATE = "INDETERMINATE"
SKIPPED = "SKIPPED"


@dataclass
class AxiomCheck:
    status: str
    detail: str = ""
    witness: object | None = None


@dataclass
class AxiomReport:
    space_name: str
    step: int
    composition: AxiomCheck
    ergodicity: AxiomCheck
    gluing: AxiomCheck
    unique_closing: AxiomCheck

    def all_pass(self) -> bool:
        return all(
            c.status == PASS
            for c in (self.composition, self.ergodicity, self.gluing, self.unique_closing)
        )

    def failures(self) -> list[str]:
        out = []
        for name, c in (
            ("composition", self.composition),
            ("ergodicity", self.ergodicity),
            ("gluing", self.gluing),
            ("unique_closing", self.unique_closing),
        ):
            if c.status != PASS:
                out.append(f"{name}: {c.status} {c.detail}")
        return out


def verify_axioms(
    space: Cubespace,
    step: int,
    max_dim: int | None = None,
    budget: Budget | None = None,
    composition_dims: tuple[int, int] | None = None,
) -> AxiomReport:
    """Exhaustively verify the cubespace axioms up to max_dim.

    Checks composition closure (every cube composed with every cube
    morphism is a cube), ergodicity (all pairs are 1-cubes), gluing
    (every corner assembled from cubes completes) for dimensions
    2..max_dim, and unique closing at dimension step+1.  Budget
    exhaustion yields INDETERMINATE for the affected check, with the
    other checks still reported.

    composition_dims = (max_source_dim, max_target_dim) bounds the
    composition check separately; by default both equal max_dim.
    """
    if max_dim is None:
        max_dim = max(step + 2, 3)
    max_dim = min(max_dim, space.dim_cap)
    budget = _ensure_budget(budget)

    ergodicity = _check_ergodicity(space, budget)
    comp_n, comp_m = composition_dims if composition_dims else (max_dim, max_dim)
    composition = _check_composition(space, comp_n, comp_m, budget)
    gluing, unique = _check_gluing(space, step, max_dim, budget)
    return AxiomReport(
        space_name=space.name,
        step=step,
        composition=composition,
        ergodicity=ergodicity,
        gluing=gluing,
        unique_closing=unique,
    )


def _check_ergodicity(space: Cubespace, budget: Budget) -> AxiomCheck:
    try:
        for x in range(space.size):
            if not space.is_cube(0, (x,)):
                return AxiomCheck(FAIL, "a point is not a 0-cube", (x,))
        pairs = np.stack(
            np.meshgrid(np.arange(space.size), np.arange(space.size), indexing="ij"),
            axis=-1,
        ).reshape(-1, 2).astype(dtype_for(space.size))
        budget.charge(len(pairs))
        ok = space.batch_is_cube(1, pairs)
        if not bool(ok.all()):
            bad = pairs[~ok][0]
            return AxiomCheck(FAIL, "a pair is not a 1-cube", tuple(int(v) for v in bad))
        return AxiomCheck(PASS, f"C^1 = N^2 over {space.size} points")
    except BudgetExceededError as e:
        return AxiomCheck(INDETERMINATE, str(e))


def _check_composition(
    space: Cubespace, max_n: int, max_m: int, budget: Budget
) -> AxiomCheck:
    try:
        checked = 0
        for m in range(0, max_m + 1):
            arr = space.cubes_array(m, budget)
            for n in range(0, max_n + 1):
                for phi in enumerate_cube_morphisms(n, m):
                    cols = list(phi.vertex_images())
                    sub = arr[:, cols]
                    budget.charge(len(sub))
                    ok = space.batch_is_cube(n, sub)
                    if not bool(ok.all()):
                        bad = arr[~ok][0]
                        return AxiomCheck(
                            FAIL,
                            f"composition fails at morphism {phi.symbols} on a {m}-cube",
                            (tuple(int(v) for v in bad), phi.symbols),
                        )
                    checked += len(sub)
        return AxiomCheck(
            PASS, f"closed under morphisms into dims <= {max_m} from dims <= {max_n}"
        )
    except BudgetExceededError as e:
        return AxiomCheck(INDETERMINATE, str(e))


def _check_gluing(
    space: Cubespace, step: int, max_dim: int, budget: Budget
) -> tuple[AxiomCheck, AxiomCheck]:
    gluing = AxiomCheck(PASS, f"all corners complete at dims 2..{max_dim}")
    unique = AxiomCheck(SKIPPED, "")
    closing_dim = step + 1
    dims = sorted(set(range(2, max_dim + 1)) | {closing_dim})
    try:
        for d in dims:
            if d > space.dim_cap:
                continue
            if d == 1:
                counts = None
                corners = np.arange(space.size, dtype=dtype_for(space.size)).reshape(-1, 1)
                counts, _ = complete_corners_batch(space, 1, corners, budget)
            else:
                corners = space.corners_array(d, budget)
                counts, _ = complete_corners_batch(space, d, corners, budget)
            if d <= max_dim and (counts == 0).any():
                idx = int(np.argmax(counts == 0))
                gluing = AxiomCheck(
                    FAIL,
                    f"corner at dimension {d} has no completion",
                    tuple(int(v) for v in corners[idx]),
                )
            if d == closing_dim:
                if (counts == 1).all():
                    unique = AxiomCheck(
                        PASS, f"every corner at dim {d} closes uniquely"
                    )
                else:
                    bad = int(np.argmax(counts != 1))
                    unique = AxiomCheck(
                        FAIL,
                        f"corner at dim {d} has {int(counts[bad])} completions",
                        tuple(int(v) for v in corners[bad]),
                    )
            if gluing.status == FAIL and unique.status in (PASS, FAIL):
                break
        return gluing, unique
    except BudgetExceededError as e:
        note = AxiomCheck(INDETERMINATE, str(e))
        if unique.status == SKIPPED:
            return (note, AxiomCheck(INDETERMINATE, str(e)))
        return note, unique


# ---------------------------------------------------------------------------
# Three-cube helpers at the space level
# ---------------------------------------------------------------------------


def three_cube_maps(n: int) -> dict:
    """The corner embeddings, outer-vertex embedding and membership rule of
    the three-cube of dimension n."""
    t = three_cube(n)
    return {
        "psi": t.psi,
        "omega": t.omega,
        "is_cube": t.is_cube,
        "point_count": t.point_count,
    }


def outer_cube_of(space: Cubespace, t_morphism: Sequence[int], n: int) -> tuple[int, ...]:
    """Compose a three-cube morphism with the outer-vertex embedding."""
    t = three_cube(n)
    return tuple(t_morphism[p] for p in t.omega)

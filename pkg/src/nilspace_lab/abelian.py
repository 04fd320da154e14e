"""Exact arithmetic for finite abelian groups and integer linear algebra.

Everything here works with plain Python integers (no overflow) and small
dense matrices stored as lists of lists.  Groups are direct products of
cyclic groups; elements are residue tuples.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_GROUP_ORDER = 2**31  # construction guard, keeps all index math in machine range


# ---------------------------------------------------------------------------
# Integer matrices
# ---------------------------------------------------------------------------


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for t in range(inner):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(cols):
                    oi[j] += x * bt[j]
    return out


def mat_vec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination (Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def smith_normal_form(
    matrix: Sequence[Sequence[int]],
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form of an integer matrix.

    Returns (U, S, V) with U * matrix * V = S, S diagonal with each
    diagonal entry dividing the next, and U, V unimodular.  Total: any
    rectangular matrix (including empty) is accepted.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    s = [list(r) for r in matrix]
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def row_op(i, j, q):  # row_i -= q * row_j   (applied to s and u)
        for t in range(cols):
            s[i][t] -= q * s[j][t]
        for t in range(rows):
            u[i][t] -= q * u[j][t]

    def col_op(i, j, q):  # col_i -= q * col_j
        for t in range(rows):
            s[t][i] -= q * s[t][j]
        for t in range(cols):
            v[t][i] -= q * v[t][j]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for t in range(rows):
            s[t][i], s[t][j] = s[t][j], s[t][i]
        for t in range(cols):
            v[t][i], v[t][j] = v[t][j], v[t][i]

    def negate_row(i):
        for t in range(cols):
            s[i][t] = -s[i][t]
        for t in range(rows):
            u[i][t] = -u[i][t]

    k = 0
    while k < rows and k < cols:
        # find a smallest nonzero pivot in the remaining block
        pivot = None
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                x = abs(s[i][j])
                if x and (best is None or x < best):
                    best = x
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != k:
            swap_rows(k, pi)
        if pj != k:
            swap_cols(k, pj)

        while True:
            # clear column k
            dirty = False
            for i in range(k + 1, rows):
                if s[i][k]:
                    q = s[i][k] // s[k][k]
                    row_op(i, k, q)
                    if s[i][k]:  # remainder became the new, smaller pivot
                        swap_rows(i, k)
                        dirty = True
            # clear row k
            for j in range(k + 1, cols):
                if s[k][j]:
                    q = s[k][j] // s[k][k]
                    col_op(j, k, q)
                    if s[k][j]:
                        swap_cols(j, k)
                        dirty = True
            if not dirty:
                break
        if s[k][k] < 0:
            negate_row(k)
        k += 1

    # enforce the divisibility chain d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for t in range(k - 1):
            a, b = s[t][t], s[t + 1][t + 1]
            if b % a != 0:
                changed = True
                # fold b into position (t, t): standard 2x2 gcd trick
                for r in range(rows):
                    s[r][t] += s[r][t + 1]
                for r in range(cols):
                    v[r][t] += v[r][t + 1]
                # re-eliminate the 2x2 block
                g = math.gcd(a, b)
                while s[t + 1][t]:
                    q = s[t][t] // s[t + 1][t] if s[t + 1][t] else 0
                    if abs(s[t + 1][t]) <= abs(s[t][t]):
                        q = s[t][t] // s[t + 1][t]
                        row_op(t, t + 1, q)
                        swap_rows(t, t + 1)
                    else:
                        row_op(t + 1, t, s[t + 1][t] // s[t][t])
                # clear the fill-in at (t, t+1)
                if s[t][t + 1]:
                    col_op(t + 1, t, s[t][t + 1] // s[t][t])
                if s[t][t] < 0:
                    negate_row(t)
                if s[t + 1][t + 1] < 0:
                    negate_row(t + 1)
                assert s[t + 1][t + 1] % s[t][t] == 0 or s[t][t] == g
    return u, s, v


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    _, s, _ = smith_normal_form(matrix)
    n = min(len(s), len(s[0]) if s else 0)
    return [s[i][i] for i in range(n)]


# ---------------------------------------------------------------------------
# Modular linear systems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntLinearSystem:
    """A system  matrix @ x = rhs  with a modulus per row.

    A modulus of 0 means the row is an equation over the integers.  The
    unknowns may additionally carry their own moduli (column_moduli), in
    which case solutions are reported as residue tuples.
    """

    matrix: tuple[tuple[int, ...], ...]
    row_moduli: tuple[int, ...]
    column_moduli: tuple[int, ...] | None = None

    def __post_init__(self):
        # with column moduli the unknowns are residues, so every equation must
        # be invariant under x_j -> x_j + n_j: require m_i | a_ij * n_j
        if self.column_moduli is not None:
            for row, m in zip(self.matrix, self.row_moduli):
                for a, n in zip(row, self.column_moduli):
                    bad = (a * n) if m == 0 else (a * n) % m
                    if bad != 0:
                        raise ValueError(
                            "equation is not well defined on residue unknowns: "
                            f"coefficient {a}, column modulus {n}, row modulus {m}"
                        )

    @property
    def num_rows(self) -> int:
        return len(self.matrix)

    @property
    def num_cols(self) -> int:
        return len(self.matrix[0]) if self.matrix else (
            len(self.column_moduli) if self.column_moduli else 0
        )


@dataclass(frozen=True)
class ModularSolution:
    """A coset description: particular solution plus kernel generators."""

    particular: tuple[int, ...]
    kernel: tuple[tuple[int, ...], ...]

    def enumerate(self, column_moduli: Sequence[int], limit: int = 1 << 20) -> set[tuple[int, ...]]:
        """All solutions, reduced mod column_moduli.  For testing."""
        sols = {tuple(p % m for p, m in zip(self.particular, column_moduli))}
        frontier = [self.particular]
        while frontier:
            base = frontier.pop()
            for g in self.kernel:
                cand = tuple((b + x) % m for b, x, m in zip(base, g, column_moduli))
                if cand not in sols:
                    if len(sols) >= limit:
                        raise RuntimeError("solution set too large to enumerate")
                    sols.add(cand)
                    frontier.append(cand)
        return sols


def solve_modular(system: IntLinearSystem, rhs: Sequence[int]) -> ModularSolution | None:
    """Exact solution set of a modular integer linear system.

    Rewrites row moduli as extra unknowns (matrix @ x + diag(moduli) @ y = rhs)
    and solves over Z via Smith normal form.  Returns None when inconsistent.
    Kernel generators include the column moduli directions so the returned
    coset is the full solution set of x viewed mod column_moduli.
    """
    if len(rhs) != system.num_rows:
        raise ValueError("rhs length does not match the number of rows")
    ncols = system.num_cols
    if system.num_rows == 0:
        gens: list[tuple[int, ...]] = []
        if system.column_moduli:
            for j in range(ncols):
                gens.append(tuple(1 if t == j else 0 for t in range(ncols)))
        return ModularSolution(tuple([0] * ncols), tuple(gens))

    # augmented unknowns: x (ncols) then one slack per row with modulus > 0
    slack_cols = [i for i, m in enumerate(system.row_moduli) if m != 0]
    total = ncols + len(slack_cols)
    a = []
    for i, row in enumerate(system.matrix):
        ext = list(row) + [0] * len(slack_cols)
        if system.row_moduli[i] != 0:
            ext[ncols + slack_cols.index(i)] = system.row_moduli[i]
        a.append(ext)

    u, s, v = smith_normal_form(a)
    b = mat_vec(u, list(rhs))
    rank = 0
    diag = []
    for i in range(min(len(a), total)):
        d = s[i][i]
        if d != 0:
            rank += 1
            diag.append(d)
    # consistency: d_i | b_i on the diagonal, b_i = 0 below the rank
    y = [0] * total
    for i in range(len(a)):
        if i < rank:
            if b[i] % diag[i] != 0:
                return None
            y[i] = b[i] // diag[i]
        elif b[i] != 0:
            return None
    x_full = mat_vec(v, y)
    particular = tuple(x_full[:ncols])

    kernel: list[tuple[int, ...]] = []
    for j in range(rank, total):
        col = tuple(v[t][j] for t in range(ncols))
        if any(col):
            kernel.append(col)
    if system.column_moduli:
        particular = tuple(p % m for p, m in zip(particular, system.column_moduli))
        kernel = [tuple(x % m for x, m in zip(g, system.column_moduli)) for g in kernel]
        for j in range(ncols):
            kernel.append(tuple(system.column_moduli[j] if t == j else 0 for t in range(ncols)))
        kernel = [g for g in set(kernel) if any(g)]
        kernel.sort()
    return ModularSolution(particular, tuple(kernel))


def kernel_mod(matrix: Sequence[Sequence[int]], moduli: Sequence[int]) -> list[tuple[int, ...]]:
    """Generators of {x : matrix @ x = 0 with unknown j living in Z_moduli[j]}.

    Every row is read as an exact equation in the target group generated by
    the unknowns, i.e. row i is an equation modulo gcd-compatible content;
    here rows are equations over Z composed with the column moduli.
    """
    ncols = len(moduli)
    sys = IntLinearSystem(
        tuple(tuple(r) for r in matrix),
        tuple(0 for _ in matrix),
        tuple(moduli),
    )
    # rows are equations over Z once the column moduli are folded in as
    # extra kernel directions; equivalently solve A x + diag(col moduli) z = 0
    aug = [list(r) for r in matrix]
    extra = []
    for j in range(ncols):
        e = [0] * ncols
        e[j] = moduli[j]
        extra.append(e)
    full = IntLinearSystem(
        tuple(tuple(r) for r in aug),
        tuple(0 for _ in aug),
        tuple(moduli),
    )
    sol = solve_modular(full, [0] * len(aug))
    assert sol is not None
    return [g for g in sol.kernel]


# ---------------------------------------------------------------------------
# Finite abelian groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FinAbelianGroup:
    """Direct product of cyclic groups Z_m1 x ... x Z_mr, elements are tuples."""

    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        if any(m < 1 for m in self.cyclic_orders):
            raise ValueError("cyclic orders must be >= 1")
        if self.order > MAX_GROUP_ORDER:
            raise ValueError("group order exceeds the 2^31 construction bound")

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def zero(self) -> tuple[int, ...]:
        return tuple(0 for _ in self.cyclic_orders)

    def check_element(self, x: Sequence[int]) -> tuple[int, ...]:
        if len(x) != self.rank:
            raise ValueError(f"element {x} has wrong length for {self}")
        if any(not (0 <= xi < mi) for xi, mi in zip(x, self.cyclic_orders)):
            raise ValueError(f"element {x} out of range for {self}")
        return tuple(x)

    def reduce(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple(xi % mi for xi, mi in zip(x, self.cyclic_orders))

    def add(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.cyclic_orders))

    def neg(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple((-a) % m for a, m in zip(x, self.cyclic_orders))

    def sub(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        return tuple((a - b) % m for a, b, m in zip(x, y, self.cyclic_orders))

    def scale(self, n: int, x: Sequence[int]) -> tuple[int, ...]:
        return tuple((n * a) % m for a, m in zip(x, self.cyclic_orders))

    def elements(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(range(m) for m in self.cyclic_orders))

    def element_order(self, x: Sequence[int]) -> int:
        return math.lcm(*(m // math.gcd(m, a) for a, m in zip(x, self.cyclic_orders))) if self.rank else 1

    # dense integer ids, mixed radix with the first coordinate fastest
    def index_of(self, x: Sequence[int]) -> int:
        idx = 0
        for a, m in zip(reversed(x), reversed(self.cyclic_orders)):
            idx = idx * m + a
        return idx

    def element_at(self, idx: int) -> tuple[int, ...]:
        out = []
        for m in self.cyclic_orders:
            out.append(idx % m)
            idx //= m
        return tuple(out)

    def invariant_factors(self) -> tuple[int, ...]:
        """Canonical invariant factor list d1 | d2 | ... (1s dropped)."""
        if not self.cyclic_orders:
            return ()
        diag = [[self.cyclic_orders[i] if i == j else 0 for j in range(self.rank)]
                for i in range(self.rank)]
        d = smith_diagonal(diag)
        return tuple(x for x in d if x > 1)

    def normalized(self) -> "FinAbelianGroup":
        inv = self.invariant_factors()
        return FinAbelianGroup(inv if inv else (1,))

    def isomorphic_to(self, other: "FinAbelianGroup") -> bool:
        return self.invariant_factors() == other.invariant_factors()

    def describe(self) -> str:
        inv = self.invariant_factors()
        if not inv:
            return "0"
        return " x ".join(f"Z{d}" for d in inv)

    def __str__(self) -> str:
        return "Z(" + ",".join(str(m) for m in self.cyclic_orders) + ")"


def cyclic(n: int) -> FinAbelianGroup:
    return FinAbelianGroup((n,))


def product_group(*groups: FinAbelianGroup) -> FinAbelianGroup:
    orders: tuple[int, ...] = ()
    for g in groups:
        orders = orders + g.cyclic_orders
    return FinAbelianGroup(orders)


@dataclass(frozen=True)
class AbHom:
    """Homomorphism between finite abelian groups, columns = generator images."""

    source: FinAbelianGroup
    target: FinAbelianGroup
    matrix: tuple[tuple[int, ...], ...]  # target.rank rows x source.rank cols

    def __post_init__(self):
        if len(self.matrix) != self.target.rank:
            raise ValueError("matrix row count must equal target rank")
        if self.matrix and any(len(r) != self.source.rank for r in self.matrix):
            raise ValueError("matrix column count must equal source rank")
        # well-defined: order(source gen j) * column j must vanish in the target
        for j, m in enumerate(self.source.cyclic_orders):
            for i, n in enumerate(self.target.cyclic_orders):
                if (m * self.matrix[i][j]) % n != 0:
                    raise ValueError(
                        f"not a homomorphism: generator {j} of order {m} maps to a "
                        f"column of infinite order in coordinate {i}"
                    )

    def apply(self, x: Sequence[int]) -> tuple[int, ...]:
        x = self.source.check_element(x)
        return tuple(
            sum(self.matrix[i][j] * x[j] for j in range(self.source.rank)) % n
            for i, n in enumerate(self.target.cyclic_orders)
        )

    def compose(self, inner: "AbHom") -> "AbHom":
        if inner.target != self.source:
            raise ValueError("composition mismatch")
        prod = mat_mul(self.matrix, inner.matrix)
        prod = [
            tuple(v % n for v in row) for row, n in zip(prod, self.target.cyclic_orders)
        ]
        return AbHom(inner.source, self.target, tuple(prod))

    def image_elements(self) -> set[tuple[int, ...]]:
        img = {self.target.zero}
        cols = [tuple(self.matrix[i][j] % self.target.cyclic_orders[i]
                      for i in range(self.target.rank))
                for j in range(self.source.rank)]
        frontier = [self.target.zero]
        while frontier:
            x = frontier.pop()
            for c in cols:
                y = self.target.add(x, c)
                if y not in img:
                    img.add(y)
                    frontier.append(y)
        return img

    def is_surjective(self) -> bool:
        return len(self.image_elements()) == self.target.order

    def kernel_elements(self) -> set[tuple[int, ...]]:
        return {x for x in self.source.elements() if self.apply(x) == self.target.zero}


def identity_hom(a: FinAbelianGroup) -> AbHom:
    return AbHom(a, a, tuple(tuple(1 if i == j else 0 for j in range(a.rank))
                             for i in range(a.rank)))


def subgroup_closure(a: FinAbelianGroup, gens: Iterable[Sequence[int]]) -> set[tuple[int, ...]]:
    """Smallest subgroup of a containing gens, by orbit closure."""
    elems = {a.zero}
    gen_list = [a.check_element(g) for g in gens]
    frontier = [a.zero]
    while frontier:
        x = frontier.pop()
        for g in gen_list:
            y = a.add(x, g)
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return elems


@dataclass(frozen=True)
class SubgroupQuotient:
    """Result of subgroup_and_quotient: B <= A with A/B and the projection data."""

    ambient: FinAbelianGroup
    subgroup_elements: frozenset[tuple[int, ...]]
    subgroup: FinAbelianGroup  # abstract iso type of B
    quotient: FinAbelianGroup
    projection: AbHom  # ambient -> quotient, kernel exactly B

    def project(self, x: Sequence[int]) -> tuple[int, ...]:
        return self.projection.apply(x)


def _quotient_presentation(a: FinAbelianGroup, sub_gens: list[tuple[int, ...]]):
    """Quotient of Z^r by <diag(orders), sub_gens> with an explicit projection.

    Returns (quotient group, projection matrix rows) so that projection(x)
    reduces x mod the subgroup generated by sub_gens inside a.
    """
    r = a.rank
    rel: list[list[int]] = [
        [a.cyclic_orders[i] if i == j else 0 for j in range(r)] for i in range(r)
    ]
    rel += [list(g) for g in sub_gens]
    u, s, v = smith_normal_form(rel)
    # Z^r / rowspan(rel): substitute x = (V^{-1})^T ... work with y = V^{-1} x?
    # rowspan(rel) * V has the diagonal of S as its row space generator set,
    # so in coordinates y where x = V y the lattice is spanned by diag(S).
    # The class of x is represented by y = V^{-1} x taken mod diag(S).
    det = determinant(v)
    assert det in (1, -1)
    v_inv = _unimodular_inverse(v)
    diag = []
    n = min(len(s), len(s[0]) if s else 0)
    for i in range(r):
        d = s[i][i] if i < n else 0
        diag.append(d if d != 0 else 0)
    # finite group: all diagonal entries positive here (full-rank relations)
    assert all(d > 0 for d in diag), "quotient of a finite group must be finite"
    keep = [i for i, d in enumerate(diag) if d > 1]
    orders = tuple(diag[i] for i in keep) if keep else (1,)
    q = FinAbelianGroup(orders)
    rows = [tuple(v_inv[i][j] for j in range(r)) for i in keep] or [tuple(0 for _ in range(r))]
    rows = tuple(tuple(val % q.cyclic_orders[t] for val in row) for t, row in enumerate(rows))
    proj = AbHom(a, q, rows)
    return q, proj


def _unimodular_inverse(v: Sequence[Sequence[int]]) -> list[list[int]]:
    """Inverse of a unimodular integer matrix via adjugate-free elimination."""
    n = len(v)
    a = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(v)]
    # integer Gauss-Jordan; pivots are +-1 achievable since det = +-1
    for col in range(n):
        piv = None
        for i in range(col, n):
            if abs(a[i][col]) == 1:
                piv = i
                break
        if piv is None:
            # create a unit pivot with gcd steps
            for i in range(col, n):
                if a[i][col]:
                    piv = i
                    break
            assert piv is not None
            for i in range(col, n):
                if i != piv and a[i][col]:
                    while a[i][col]:
                        q = a[piv][col] // a[i][col]
                        a[piv] = [x - q * y for x, y in zip(a[piv], a[i])]
                        a[piv], a[i] = a[i], a[piv]
            assert abs(a[piv][col]) == 1
        a[col], a[piv] = a[piv], a[col]
        if a[col][col] < 0:
            a[col] = [-x for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                q = a[i][col]
                a[i] = [x - q * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def subgroup_and_quotient(
    a: FinAbelianGroup, gens: Iterable[Sequence[int]]
) -> SubgroupQuotient:
    """Subgroup generated by gens, the quotient group, and the projection.

    The projection is a surjective AbHom whose kernel is exactly the subgroup.
    """
    gen_list = [a.check_element(g) for g in gens]
    sub_elems = subgroup_closure(a, gen_list)
    quotient, proj = _quotient_presentation(a, gen_list)
    sub_type = abelian_type_from_elements(a, sub_elems)
    return SubgroupQuotient(a, frozenset(sub_elems), sub_type, quotient, proj)


def abelian_type_from_elements(
    a: FinAbelianGroup, elems: set[tuple[int, ...]] | frozenset[tuple[int, ...]]
) -> FinAbelianGroup:
    """Isomorphism type of a subgroup given by its element set."""
    gens = sorted(elems)
    r = a.rank
    if not gens:
        return FinAbelianGroup((1,))
    # present the subgroup on all its elements: relations x_i + x_j = x_{i+j}
    index = {g: t for t, g in enumerate(gens)}
    rel = []
    for i, gi in enumerate(gens):
        oi = a.element_order(gi)
        row = [0] * len(gens)
        row[i] = oi
        rel.append(row)
    for i, gi in enumerate(gens):
        for j, gj in enumerate(gens):
            if j < i:
                continue
            row = [0] * len(gens)
            row[i] += 1
            row[j] += 1
            row[index[a.add(gi, gj)]] -= 1
            if any(row):
                rel.append(row)
    diag = smith_diagonal(rel)
    inv = [d for d in diag if d > 1]
    return FinAbelianGroup(tuple(inv) if inv else (1,))


def abelian_group_from_table(
    add_table: Sequence[Sequence[int]],
) -> tuple[FinAbelianGroup, list[tuple[int, ...]]]:
    """Recognize a finite abelian group given by an addition table on 0..m-1
    with identity 0.  Returns the invariant-factor group and per-element
    coordinates under an explicit isomorphism.
    """
    m = len(add_table)
    for i in range(m):
        if add_table[0][i] != i or add_table[i][0] != i:
            raise ValueError("index 0 must be the identity of the table")
        for j in range(m):
            if add_table[i][j] != add_table[j][i]:
                raise ValueError("table is not commutative")
    # present on all elements: e_i + e_j - e_{table} = 0
    rel = []
    for i in range(m):
        for j in range(i, m):
            row = [0] * m
            row[i] += 1
            row[j] += 1
            row[add_table[i][j]] -= 1
            if any(row):
                rel.append(row)
    u, s, v = smith_normal_form(rel)
    v_inv = _unimodular_inverse(v)
    n = min(len(s), len(s[0]) if s else 0)
    diag = [s[i][i] if i < n else 0 for i in range(m)]
    assert all(d > 0 for d in diag)
    keep = [i for i, d in enumerate(diag) if d > 1]
    orders = tuple(diag[i] for i in keep) if keep else (1,)
    group = FinAbelianGroup(orders)
    coords = []
    for e in range(m):
        # element e corresponds to basis vector e of Z^m
        vec = tuple(v_inv[i][e] % group.cyclic_orders[t] for t, i in enumerate(keep)) \
            if keep else (0,)
        coords.append(vec)
    # sanity: coordinates define an isomorphism onto the abstract group
    if len(set(coords)) != m or group.order != m:
        raise ValueError("table is not the table of an abelian group")
    for i in range(m):
        for j in range(m):
            if group.add(coords[i], coords[j]) != coords[add_table[i][j]]:
                raise ValueError("table is not associative/consistent")
    return group, coords

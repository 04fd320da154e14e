"""The category of discrete cubes {0,1}^n.

Vertices are encoded as integers: bit j of the code is coordinate j+1.
All enumeration here is pure combinatorics with no reference to any
particular point space.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

DIM_CAP = 6  # 2^6 vertices; everything verified in practice lives at n <= 5


def check_dim(n: int, cap: int = DIM_CAP) -> None:
    if not (0 <= n <= cap):
        raise ValueError(f"cube dimension {n} outside supported range 0..{cap}")


def popcount(v: int) -> int:
    return bin(v).count("1")


def vertices(n: int) -> range:
    return range(1 << n)


def top_vertex(n: int) -> int:
    return (1 << n) - 1


# ---------------------------------------------------------------------------
# Cube morphisms
# ---------------------------------------------------------------------------

# per-output-coordinate symbols: ("c", bit) constant, ("v", j) variable,
# ("nv", j) negated variable
Symbol = tuple[str, int]


@dataclass(frozen=True)
class CubeMorphism:
    """A map {0,1}^source_dim -> {0,1}^target_dim extending affinely.

    Each target coordinate is one of 0, 1, x_j, 1-x_j, so the affine
    extension property holds by construction.
    """

    source_dim: int
    target_dim: int
    symbols: tuple[Symbol, ...]

    def __post_init__(self):
        if len(self.symbols) != self.target_dim:
            raise ValueError("need one symbol per target coordinate")
        for kind, arg in self.symbols:
            if kind == "c":
                if arg not in (0, 1):
                    raise ValueError(f"bad constant {arg}")
            elif kind in ("v", "nv"):
                if not (0 <= arg < self.source_dim):
                    raise ValueError(f"variable index {arg} out of range")
            else:
                raise ValueError(f"bad symbol kind {kind}")

    def apply(self, v: int) -> int:
        out = 0
        for i, (kind, arg) in enumerate(self.symbols):
            if kind == "c":
                bit = arg
            else:
                bit = (v >> arg) & 1
                if kind == "nv":
                    bit ^= 1
            out |= bit << i
        return out

    def vertex_images(self) -> tuple[int, ...]:
        """Image vertex for each source vertex, in source-code order."""
        return tuple(self.apply(v) for v in vertices(self.source_dim))

    def compose(self, inner: "CubeMorphism") -> "CubeMorphism":
        """self o inner, a morphism inner.source_dim -> self.target_dim."""
        if inner.target_dim != self.source_dim:
            raise ValueError("composition dimension mismatch")
        syms = []
        for kind, arg in self.symbols:
            if kind == "c":
                syms.append((kind, arg))
                continue
            k2, a2 = inner.symbols[arg]
            if k2 == "c":
                bit = a2 if kind == "v" else 1 - a2
                syms.append(("c", bit))
            elif kind == "v":
                syms.append((k2, a2))
            else:  # negation flips v <-> nv
                syms.append(("nv" if k2 == "v" else "v", a2))
        return CubeMorphism(inner.source_dim, self.target_dim, tuple(syms))


def enumerate_cube_morphisms(n: int, m: int, cap: int = DIM_CAP) -> list[CubeMorphism]:
    """All cube morphisms {0,1}^n -> {0,1}^m; there are (2+2n)^m of them."""
    check_dim(n, cap)
    check_dim(m, cap)
    symbols: list[Symbol] = [("c", 0), ("c", 1)]
    for j in range(n):
        symbols.append(("v", j))
        symbols.append(("nv", j))
    return [CubeMorphism(n, m, combo) for combo in itertools.product(symbols, repeat=m)]


# ---------------------------------------------------------------------------
# Faces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FaceDescriptor:
    """A face of {0,1}^n: some coordinates fixed, the rest free.

    free_coords are listed ascending; the face is read as a cube of
    dimension len(free_coords) with free coordinate t as its bit t.
    """

    ambient_dim: int
    fixed: tuple[tuple[int, int], ...]  # (coordinate, bit), ascending
    free_coords: tuple[int, ...]

    def __post_init__(self):
        coords = sorted(c for c, _ in self.fixed) + sorted(self.free_coords)
        if sorted(coords) != list(range(self.ambient_dim)):
            raise ValueError("fixed and free coordinates must partition the axes")

    @property
    def dim(self) -> int:
        return len(self.free_coords)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def vertex_codes(self) -> tuple[int, ...]:
        """Ambient codes of the face vertices, in face-local vertex order."""
        base = 0
        for c, b in self.fixed:
            base |= b << c
        out = []
        for w in vertices(self.dim):
            v = base
            for t, c in enumerate(self.free_coords):
                v |= ((w >> t) & 1) << c
            out.append(v)
        return tuple(out)

    def contains(self, v: int) -> bool:
        return all(((v >> c) & 1) == b for c, b in self.fixed)

    def embedding(self) -> CubeMorphism:
        """The face as a cube morphism {0,1}^dim -> {0,1}^ambient_dim."""
        syms: list[Symbol] = [("c", 0)] * self.ambient_dim
        for c, b in self.fixed:
            syms[c] = ("c", b)
        for t, c in enumerate(self.free_coords):
            syms[c] = ("v", t)
        return CubeMorphism(self.dim, self.ambient_dim, tuple(syms))


def faces(n: int, codim: int) -> list[FaceDescriptor]:
    """All faces of {0,1}^n of the given codimension: C(n,codim) * 2^codim."""
    if not (0 <= codim <= n):
        raise ValueError(f"codimension {codim} out of range for dimension {n}")
    out = []
    for fixed_axes in itertools.combinations(range(n), codim):
        free = tuple(c for c in range(n) if c not in fixed_axes)
        for bits in itertools.product((0, 1), repeat=codim):
            out.append(FaceDescriptor(n, tuple(zip(fixed_axes, bits)), free))
    return out


def all_faces(n: int, min_dim: int = 0, max_dim: int | None = None) -> list[FaceDescriptor]:
    top = n if max_dim is None else max_dim
    out = []
    for d in range(min_dim, top + 1):
        out.extend(faces(n, n - d))
    return out


def opposite_faces(n: int, axis: int) -> tuple[FaceDescriptor, FaceDescriptor]:
    """The two codimension-1 faces fixing the given axis to 0 and to 1."""
    if not (0 <= axis < n):
        raise ValueError(f"axis {axis} out of range")
    free = tuple(c for c in range(n) if c != axis)
    return (
        FaceDescriptor(n, ((axis, 0),), free),
        FaceDescriptor(n, ((axis, 1),), free),
    )


# ---------------------------------------------------------------------------
# Automorphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CubeAutomorphism:
    """Coordinate permutation plus flips; output bit i is input bit perm[i],
    xored with flip bit i.  sign = (-1)^(ones in the image of the zero vertex).
    """

    perm: tuple[int, ...]
    flips: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.perm)

    @property
    def sign(self) -> int:
        return -1 if (sum(self.flips) % 2) else 1

    def apply(self, v: int) -> int:
        out = 0
        for i in range(self.dim):
            bit = ((v >> self.perm[i]) & 1) ^ self.flips[i]
            out |= bit << i
        return out

    def vertex_images(self) -> tuple[int, ...]:
        return tuple(self.apply(v) for v in vertices(self.dim))

    def compose(self, inner: "CubeAutomorphism") -> "CubeAutomorphism":
        """self o inner as vertex maps."""
        if inner.dim != self.dim:
            raise ValueError("dimension mismatch")
        # (self o inner)(v)_i = inner-output bit perm[i] xor flips[i]
        perm = tuple(inner.perm[self.perm[i]] for i in range(self.dim))
        flips = tuple(inner.flips[self.perm[i]] ^ self.flips[i] for i in range(self.dim))
        return CubeAutomorphism(perm, flips)

    def inverse(self) -> "CubeAutomorphism":
        inv_perm = [0] * self.dim
        inv_flip = [0] * self.dim
        for i, p in enumerate(self.perm):
            inv_perm[p] = i
            inv_flip[p] = self.flips[i]
        return CubeAutomorphism(tuple(inv_perm), tuple(inv_flip))

    def as_morphism(self) -> CubeMorphism:
        syms = tuple(
            ("nv" if self.flips[i] else "v", self.perm[i]) for i in range(self.dim)
        )
        return CubeMorphism(self.dim, self.dim, syms)


@lru_cache(maxsize=None)
def automorphisms(n: int, cap: int = DIM_CAP) -> tuple[CubeAutomorphism, ...]:
    """All 2^n * n! automorphisms of {0,1}^n."""
    check_dim(n, cap)
    out = []
    for perm in itertools.permutations(range(n)):
        for flips in itertools.product((0, 1), repeat=n):
            out.append(CubeAutomorphism(perm, flips))
    return tuple(out)


# ---------------------------------------------------------------------------
# Gray code ordering
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def gray_order(n: int) -> tuple[int, ...]:
    """Vertex codes of {0,1}^n in Gray order; entry i is the vertex at
    position i+1.  Recursion: keep the order on the bottom face, reverse
    it on the top face.
    """
    if n < 1:
        raise ValueError("gray_order needs n >= 1")
    if n == 1:
        return (0, 1)
    prev = gray_order(n - 1)
    top = 1 << (n - 1)
    return prev + tuple(v | top for v in reversed(prev))


def gray_position(n: int) -> dict[int, int]:
    """vertex code -> 1-based Gray position."""
    return {v: i + 1 for i, v in enumerate(gray_order(n))}


# ---------------------------------------------------------------------------
# Three-cubes
# ---------------------------------------------------------------------------


def ternary_index(coords: Sequence[int]) -> int:
    """Encode a point of {-1,0,1}^n as an integer (digit = coord + 1)."""
    idx = 0
    for c in reversed(coords):
        idx = idx * 3 + (c + 1)
    return idx


def ternary_coords(idx: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(idx % 3 - 1)
        idx //= 3
    return tuple(out)


def psi_map(n: int, v: int) -> tuple[int, ...]:
    """The corner embedding of {0,1}^n into the three-cube at corner v:
    coordinate j of the image of w is (1 - 2 v_j) * (1 - w_j).
    Returns ternary indices in vertex-code order of w.
    """
    out = []
    for w in vertices(n):
        coords = []
        for j in range(n):
            vj = (v >> j) & 1
            wj = (w >> j) & 1
            coords.append((1 - 2 * vj) * (1 - wj))
        out.append(ternary_index(coords))
    return tuple(out)


def omega_map(n: int) -> tuple[int, ...]:
    """Embedding of {0,1}^n onto the outer vertices {1,-1}^n of the
    three-cube: omega(v) = psi_v(0).
    """
    out = []
    for v in vertices(n):
        coords = [1 - 2 * ((v >> j) & 1) for j in range(n)]
        out.append(ternary_index(coords))
    return tuple(out)


@dataclass(frozen=True)
class ThreeCube:
    """The grid {-1,0,1}^n with its 2^n corner embeddings.

    point_count is 3^n; psi[v] lists, for corner v, the ternary indices of
    the embedded unit cube in vertex-code order; omega lists the outer
    vertices.  A map f: {0,1}^N -> T_n is a cube of T_n exactly when it
    factors through some psi[v] composed with a cube morphism.
    """

    dim: int
    point_count: int
    psi: tuple[tuple[int, ...], ...]
    omega: tuple[int, ...]

    def is_cube(self, m: int, values: Sequence[int]) -> bool:
        for v in vertices(self.dim):
            img = set(self.psi[v])
            if all(x in img for x in values):
                # candidate corner: check the map factors as psi_v o morphism
                pos = {p: w for w, p in enumerate(self.psi[v])}
                word = tuple(pos[x] for x in values)
                if _is_cube_morphism_image(m, self.dim, word):
                    return True
        return False


def _is_cube_morphism_image(n: int, m: int, images: Sequence[int]) -> bool:
    """Is v -> images[v] (as vertex codes) the vertex map of some cube
    morphism {0,1}^n -> {0,1}^m?  Checked coordinatewise.
    """
    for i in range(m):
        bits = [(images[v] >> i) & 1 for v in vertices(n)]
        if not _is_affine_bit(n, bits):
            return False
    return True


def _is_affine_bit(n: int, bits: Sequence[int]) -> bool:
    first = bits[0]
    if all(b == first for b in bits):
        return True
    for j in range(n):
        if all(bits[v] == ((v >> j) & 1) for v in vertices(n)):
            return True
        if all(bits[v] == 1 - ((v >> j) & 1) for v in vertices(n)):
            return True
    return False


@lru_cache(maxsize=None)
def three_cube(n: int, cap: int = DIM_CAP) -> ThreeCube:
    check_dim(n, cap)
    return ThreeCube(
        dim=n,
        point_count=3**n,
        psi=tuple(psi_map(n, v) for v in vertices(n)),
        omega=omega_map(n),
    )

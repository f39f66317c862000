"""Root systems A/B/C/D/BC in the e-basis, reflections and Weyl groups.

Roots are integer tuples.  A_{n-1} lives in n coordinates (sum-zero
sublattice); the other families of rank r live in r coordinates.  Weyl
group elements are signed permutations acting by e_i -> signs[i] e_{perm[i]}.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .errors import GroupTooLarge, NotARoot, UnsupportedFamily, UnsupportedRank

Root = tuple[int, ...]
FAMILIES = ("A", "B", "C", "D", "BC")
DEFAULT_CAP = 50_000


def e(i: int, dim: int, c: int = 1) -> Root:
    """c * e_i with 1-based index i."""
    v = [0] * dim
    v[i - 1] = c
    return tuple(v)


def vadd(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def vneg(a: Sequence[int]) -> Root:
    return tuple(-x for x in a)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def format_root(v: Sequence[int]) -> str:
    """Human form such as 'e1-e2', 'e3-e2', '2e3', '-e1-e4'."""
    out = []
    # positive terms first, as in 'e3-e2'
    terms = sorted(((i, c) for i, c in enumerate(v, start=1) if c), key=lambda t: t[1] < 0)
    for i, c in terms:
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        out.append(f"{sign}{mag}e{i}")
    s = "".join(out)
    return s[1:] if s.startswith("+") else s


def parse_root(text: str, dim: int) -> Root:
    """Inverse of format_root."""
    import re
    s = text.replace(" ", "").replace("−", "-")
    if not s:
        raise NotARoot("empty root")
    if s[0] not in "+-":
        s = "+" + s
    v = [0] * dim
    for sign, mag, idx in re.findall(r"([+-])(\d*)e_?\{?(\d+)\}?", s):
        i = int(idx)
        if not 1 <= i <= dim:
            raise NotARoot(f"index {i} out of range in {text!r}")
        v[i - 1] += (-1 if sign == "-" else 1) * int(mag or 1)
    return tuple(v)


def root_pattern(v: Sequence[int]) -> str:
    """Classify a vector as 'diff' (e_i - e_j), 'sum' (±(e_i + e_j)),
    'short' (±e_i) or 'long' (±2e_i); raises NotARoot otherwise."""
    nz = [(i, c) for i, c in enumerate(v) if c != 0]
    if len(nz) == 1 and abs(nz[0][1]) in (1, 2):
        return "short" if abs(nz[0][1]) == 1 else "long"
    if len(nz) == 2 and all(abs(c) == 1 for _, c in nz):
        return "diff" if nz[0][1] != nz[1][1] else "sum"
    raise NotARoot(f"{tuple(v)} matches no root pattern")


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    roots: frozenset
    dim: int

    def __post_init__(self):
        if any(vneg(r) not in self.roots for r in self.roots):
            raise ValueError("root set not closed under negation")

    def __contains__(self, v) -> bool:
        return tuple(v) in self.roots

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def label(self) -> str:
        return f"{self.family}_{self.rank}"

    def sorted_roots(self) -> list[Root]:
        return sorted(self.roots, reverse=True)


def family_root_count(family: str, rank: int) -> int:
    r = rank
    return {"A": r * (r + 1), "B": 2 * r * r, "C": 2 * r * r,
            "D": 2 * r * (r - 1), "BC": 2 * r * (r + 1)}[family]


def family_roots(family: str, rank: int, coords: Sequence[int], dim: int) -> set[Root]:
    """Roots of the given family placed on the listed (1-based) coordinates.

    For family A the number of coordinates is rank + 1; otherwise rank.
    Rank-0 and D_1 factors give the empty set.
    """
    out: set[Root] = set()
    cs = list(coords)
    for a in range(len(cs)):
        for b in range(len(cs)):
            if a == b:
                continue
            i, j = cs[a], cs[b]
            out.add(vadd(e(i, dim), e(j, dim, -1)))
            if family != "A" and a < b:
                out.add(vadd(e(i, dim), e(j, dim)))
                out.add(vadd(e(i, dim, -1), e(j, dim, -1)))
    if family in ("B", "BC"):
        for i in cs:
            out.update({e(i, dim), e(i, dim, -1)})
    if family in ("C", "BC"):
        for i in cs:
            out.update({e(i, dim, 2), e(i, dim, -2)})
    return out


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    if family not in FAMILIES:
        raise UnsupportedFamily(f"unknown family {family!r}")
    if rank < 1:
        raise UnsupportedRank(f"rank must be positive, got {rank}")
    if family == "D" and rank < 2:
        raise UnsupportedRank("D_1 is not a root system")
    dim = rank + 1 if family == "A" else rank
    roots = family_roots(family, rank, range(1, dim + 1), dim)
    return RootSystem(family, rank, frozenset(roots), dim)


def standard_simple_system(rs: RootSystem) -> list[Root]:
    """Psi: differences e_i - e_{i+1} followed by the family's last root."""
    dim = rs.dim
    psi = [vadd(e(i, dim), e(i + 1, dim, -1)) for i in range(1, dim)]
    r = rs.rank
    if rs.family in ("B", "BC"):
        psi.append(e(r, dim))
    elif rs.family == "C":
        psi.append(e(r, dim, 2))
    elif rs.family == "D":
        psi.append(vadd(e(r - 1, dim), e(r, dim)))
    return psi


def positive_roots(rs: RootSystem) -> list[Root]:
    """Roots whose first nonzero coordinate is positive (matches Psi)."""
    return sorted(r for r in rs.roots if next(c for c in r if c) > 0)


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation: e_i -> signs[i] * e_{perm[i]} (0-based storage)."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @classmethod
    def identity(cls, dim: int) -> "WeylElement":
        return cls(tuple(range(dim)), (1,) * dim)

    @property
    def dim(self) -> int:
        return len(self.perm)

    def __call__(self, v: Sequence[int]) -> Root:
        out = [0] * len(v)
        for i, c in enumerate(v):
            out[self.perm[i]] = self.signs[i] * c
        return tuple(out)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self * other)(v) = self(other(v))
        perm = tuple(self.perm[j] for j in other.perm)
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(len(self.perm)))
        return WeylElement(perm, signs)

    def inverse(self) -> "WeylElement":
        n = len(self.perm)
        perm = [0] * n
        signs = [1] * n
        for i, j in enumerate(self.perm):
            perm[j] = i
            signs[j] = self.signs[i]
        return WeylElement(tuple(perm), tuple(signs))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm))) and all(s == 1 for s in self.signs)

    def matrix(self) -> list[list[int]]:
        n = len(self.perm)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[self.perm[i]][i] = self.signs[i]
        return m

    def negated_count(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    def __repr__(self) -> str:
        body = ",".join(("-" if s < 0 else "") + str(p + 1) for p, s in zip(self.perm, self.signs))
        return f"W[{body}]"


def reflection(root: Sequence[int]) -> WeylElement:
    """The reflection s_root as a signed permutation."""
    v = tuple(root)
    kind = root_pattern(v)
    n = len(v)
    perm = list(range(n))
    signs = [1] * n
    nz = [i for i, c in enumerate(v) if c]
    if kind in ("short", "long"):
        signs[nz[0]] = -1
    else:
        i, j = nz
        perm[i], perm[j] = j, i
        if kind == "sum":
            signs[i] = signs[j] = -1
    return WeylElement(tuple(perm), tuple(signs))


def word_element(word: Iterable[int], psi: Sequence[Root]) -> WeylElement:
    """Product s_{a1} s_{a2} ... of simple reflections (1-based indices)."""
    w = WeylElement.identity(len(psi[0]))
    for a in word:
        w = w * reflection(psi[a - 1])
    return w


def weyl_order(family: str, rank: int) -> int:
    if rank <= 0:
        return 1
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C", "BC"):
        return 2 ** rank * factorial(rank)
    if family == "D":
        return 1 if rank == 1 else 2 ** (rank - 1) * factorial(rank)
    raise UnsupportedFamily(family)


def _signed_image(w: WeylElement) -> tuple[int, ...]:
    return tuple(s * (p + 1) for p, s in zip(w.perm, w.signs))


def _from_signed_image(img: Sequence[int]) -> WeylElement:
    return WeylElement(tuple(abs(x) - 1 for x in img), tuple(1 if x > 0 else -1 for x in img))


def generate_group(gens: Sequence[WeylElement], dim: int, cap: int = DEFAULT_CAP,
                   predicted: int | None = None) -> list[WeylElement]:
    """Breadth-first closure of the generators, in discovery order."""
    return [_from_signed_image(x) for x in closure_images(gens, dim, cap, predicted)]


def closure_images(gens: Sequence[WeylElement], dim: int, cap: int = DEFAULT_CAP,
                   predicted: int | None = None) -> list[tuple[int, ...]]:
    """Closure as signed images; cheaper when only the order is needed."""
    if predicted is not None and predicted > cap:
        raise GroupTooLarge(f"predicted order {predicted} exceeds cap {cap}")
    # elements as signed images: img[i] = +-(j+1) when e_i -> +-e_j
    gspecs = []
    for g in dict.fromkeys(gens):
        gspecs.append(tuple((abs(x) - 1, 1 if x > 0 else -1) for x in _signed_image(g)))
    ident = tuple(range(1, dim + 1))
    seen = {ident}
    order = [ident]
    queue = deque([ident])
    while queue:
        w = queue.popleft()
        for spec in gspecs:
            x = tuple(s * w[j] for j, s in spec)  # w * g
            if x not in seen:
                seen.add(x)
                if len(seen) > cap:
                    raise GroupTooLarge(f"group exceeds cap {cap}")
                order.append(x)
                queue.append(x)
    return order


def generate_weyl(psi: Sequence[Root] | RootSystem, cap: int = DEFAULT_CAP) -> list[WeylElement]:
    """W generated by the simple reflections; accepts Psi or a RootSystem."""
    if isinstance(psi, RootSystem):
        rs = psi
        psi = standard_simple_system(rs)
        predicted = weyl_order(rs.family, rs.rank)
    else:
        predicted = None
    psi = list(psi)
    if not psi:
        raise ValueError("empty simple system")
    return generate_group([reflection(a) for a in psi], len(psi[0]), cap, predicted)


def subgroup_elements(roots: Iterable[Root], dim: int, cap: int = DEFAULT_CAP) -> list[WeylElement]:
    """Group generated by the reflections of all given roots."""
    gens = {reflection(r) for r in roots}
    return generate_group(sorted(gens, key=lambda g: (g.perm, g.signs)), dim, cap)

"""Exact rigidity-matrix construction and rank computation.

All arithmetic is exact: coordinates are rationals, ranks are computed by
fraction-free elimination over the integers or by Gaussian elimination over
a large prime field.  No floating point is used anywhere.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm

from .graph import Graph

COORD_BOUND = 1 << 20
DEFAULT_PRIME = (1 << 61) - 1
EXACT_VERTEX_LIMIT = 30


@dataclass(frozen=True)
class CoincidenceSpec:
    """A set T of vertices forced to share one point, with reference t in T."""

    T: frozenset[int]
    ref: int

    def __post_init__(self):
        if not self.T:
            raise ValueError("T must be nonempty")
        if self.ref not in self.T:
            raise ValueError("reference vertex must belong to T")

    @classmethod
    def of(cls, T) -> "CoincidenceSpec":
        ts = frozenset(T)
        return cls(ts, min(ts))


@dataclass
class Realization:
    """Map vertex -> point with exact rational coordinates."""

    dim: int
    coords: dict[int, tuple[Fraction, ...]]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")
        for v, pt in self.coords.items():
            if len(pt) != self.dim:
                raise ValueError(f"vertex {v} has a point of wrong dimension")

    def point(self, v: int) -> tuple[Fraction, ...]:
        try:
            return self.coords[v]
        except KeyError:
            raise ValueError(f"no coordinates for vertex {v}") from None

    def to_json(self) -> str:
        return json.dumps({
            "d": self.dim,
            "coords": {str(v): [f"{c.numerator}/{c.denominator}" for c in pt]
                       for v, pt in sorted(self.coords.items())},
        })

    @classmethod
    def from_json(cls, text: str) -> "Realization":
        doc = json.loads(text)
        coords = {int(v): tuple(Fraction(s) for s in pt)
                  for v, pt in doc["coords"].items()}
        return cls(doc["d"], coords)


@dataclass
class RigidityMatrix:
    """|E| x d|V| matrix; row for uv holds p(u)-p(v) and p(v)-p(u)."""

    dim: int
    n: int
    rows: list[list[Fraction]]
    row_index: dict[tuple[int, int], int]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.dim * self.n)


@dataclass
class RankReport:
    """Rank verdict for one graph/realization family."""

    rank: int
    target: int
    rigid: bool
    independent: bool
    method: str  # "exact-rational" | "prime-field"
    trials: int
    seed: int
    note: str = ""

    def to_dict(self) -> dict:
        return {"rank": self.rank, "target": self.target, "rigid": self.rigid,
                "independent": self.independent, "method": self.method,
                "trials": self.trials, "seed": self.seed, "note": self.note}


def rigidity_target(n: int, d: int) -> int:
    """Rank of an infinitesimally rigid framework: d|V|-C(d+1,2), small-|V| cased."""
    if n >= d:
        return d * n - comb(d + 1, 2)
    return comb(n, 2)


def rigidity_matrix(g: Graph, p: Realization) -> RigidityMatrix:
    d = p.dim
    rows = []
    row_index = {}
    for k, (u, v) in enumerate(g.edge_list()):
        pu, pv = p.point(u), p.point(v)
        row = [Fraction(0)] * (d * g.n)
        for i in range(d):
            row[d * u + i] = pu[i] - pv[i]
            row[d * v + i] = pv[i] - pu[i]
        rows.append(row)
        row_index[(u, v)] = k
    return RigidityMatrix(d, g.n, rows, row_index)


# -- exact rank --------------------------------------------------------


def _integer_rows(rows) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank-preserving)."""
    out = []
    for row in rows:
        mul = 1
        for x in row:
            if isinstance(x, Fraction):
                mul = lcm(mul, x.denominator)
        if mul == 1:
            out.append([int(x) for x in row])
        else:
            out.append([int(x * mul) for x in row])
    return out


def int_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by Bareiss fraction-free elimination.

    The cross-multiplication update divided by the previous pivot stays
    integral, which keeps intermediate entries at minor-determinant size.
    """
    m = [r[:] for r in rows]
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            if mic:
                mr = m[r]
                mi = m[i]
                for j in range(c + 1, ncols):
                    mi[j] = (pivot * mi[j] - mic * mr[j]) // prev
                mi[c] = 0
            else:
                mi = m[i]
                for j in range(c + 1, ncols):
                    mi[j] = (pivot * mi[j]) // prev
        prev = pivot
        r += 1
        if r == nrows:
            break
    return r


def rank_exact(M: RigidityMatrix) -> int:
    """Exact rank over the rationals."""
    return int_rank(_integer_rows(M.rows))


def is_probable_prime(p: int) -> bool:
    """Deterministic Miller-Rabin for p < 3.3e24."""
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d = p - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def rank_modp(M: RigidityMatrix, prime: int = DEFAULT_PRIME) -> int:
    """Rank of the matrix reduced mod prime; never exceeds the exact rank."""
    if not is_probable_prime(prime):
        raise ValueError(f"{prime} is not prime")
    reduced = []
    for row in M.rows:
        out = []
        for x in row:
            num, den = x.numerator, x.denominator
            if den % prime == 0:
                raise ValueError("denominator divisible by the chosen prime")
            out.append(num * pow(den, -1, prime) % prime)
        reduced.append(out)
    return _rank_modp_rows(reduced, prime)


def _rank_modp_rows(m: list[list[int]], p: int) -> int:
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        for i in range(r + 1, nrows):
            if m[i][c]:
                f = m[i][c] * inv % p
                mi, mr = m[i], m[r]
                for j in range(c, ncols):
                    mi[j] = (mi[j] - f * mr[j]) % p
        r += 1
        if r == nrows:
            break
    return r


def is_infinitesimally_rigid(g: Graph, p: Realization) -> bool:
    return rank_exact(rigidity_matrix(g, p)) == rigidity_target(g.n, p.dim)


# -- sampling ----------------------------------------------------------


def sample_T_coincident(g: Graph, spec: CoincidenceSpec, d: int, seed: int) -> Realization:
    """Random integer realization with all of T at the reference point.

    Coordinates of V minus (T - ref) are independent uniform integers in
    [-2^20, 2^20]; the draw order is fixed by vertex id, so a seed fully
    determines the realization.
    """
    for v in spec.T:
        if not 0 <= v < g.n:
            raise ValueError(f"T contains invalid vertex {v}")
    rng = random.Random(seed)
    coords: dict[int, tuple[Fraction, ...]] = {}
    skip = spec.T - {spec.ref}
    for v in range(g.n):
        if v in skip:
            continue
        coords[v] = tuple(Fraction(rng.randint(-COORD_BOUND, COORD_BOUND))
                          for _ in range(d))
    for v in skip:
        coords[v] = coords[spec.ref]
    return Realization(d, coords)


def generic_realization(g: Graph, d: int, seed: int) -> Realization:
    """Random integer realization with no coincidence constraint."""
    if g.n == 0:
        return Realization(d, {})
    return sample_T_coincident(g, CoincidenceSpec(frozenset({0}), 0), d, seed)


def _trial_seed(seed: int, trial: int) -> int:
    return seed * 1_000_003 + trial


def generic_rank(g: Graph, spec: CoincidenceSpec, d: int, trials: int = 3,
                 seed: int = 0, use_modp: bool | None = None) -> RankReport:
    """Max rigidity-matrix rank over sampled generic T-coincident realizations.

    The result is a certified lower bound on the generic T-coincident rank;
    it equals that rank except with per-trial probability at most
    d*n / (2^21 + 1) by Schwartz-Zippel over the sampling range.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if use_modp is None:
        use_modp = g.n > EXACT_VERTEX_LIMIT
    best = 0
    for t in range(trials):
        p = sample_T_coincident(g, spec, d, _trial_seed(seed, t))
        M = rigidity_matrix(g, p)
        r = rank_modp(M) if use_modp else rank_exact(M)
        best = max(best, r)
    target = rigidity_target(g.n, d)
    bound = Fraction(min(d * g.n, len(g.edges)), 2 * COORD_BOUND + 1)
    return RankReport(
        rank=best,
        target=target,
        rigid=best == target,
        independent=best == len(g.edges),
        method="prime-field" if use_modp else "exact-rational",
        trials=trials,
        seed=seed,
        note=(f"rank is a lower bound on the generic T-coincident rank; "
              f"per-trial failure probability <= {bound} (Schwartz-Zippel)"),
    )


def lift_contracted_realization(g: Graph, T, p_T: Realization) -> Realization:
    """Lift a realization of g/T to a T-coincident realization of g.

    Vertices of T take the contracted vertex's point; everything else keeps
    its own point under the contraction's id map.
    """
    remap = g.contraction_map(T)
    return Realization(p_T.dim, {v: p_T.point(remap[v]) for v in range(g.n)})


def kernel_contains(M: RigidityMatrix, vec: list[Fraction]) -> bool:
    """Check R * vec = 0 by explicit multiplication."""
    for row in M.rows:
        if sum(a * b for a, b in zip(row, vec)):
            return False
    return True


def rigid_motion_basis(p: Realization, n: int) -> list[list[Fraction]]:
    """The d translations and C(d,2) infinitesimal rotations at p."""
    d = p.dim
    out = []
    for i in range(d):
        vec = [Fraction(0)] * (d * n)
        for v in range(n):
            vec[d * v + i] = Fraction(1)
        out.append(vec)
    for i in range(d):
        for j in range(i + 1, d):
            vec = [Fraction(0)] * (d * n)
            for v in range(n):
                pt = p.point(v)
                vec[d * v + i] = -pt[j]
                vec[d * v + j] = pt[i]
            out.append(vec)
    return out

"""Parameter sets of Seifert fibre spaces and their elementary invariants.

A Seifert fibre space is recorded in the bracket notation

    {b;(eps,g,(t,k));(h_1,...,h_{m+}|k_1,...,k_{m-});((p_1,q_1),...,(p_r,q_r))}

where

* ``b`` is the integer twist parameter (a regularly fibred filling of
  slope (1,b), absorbable whenever boundary or reflector data exists);
* ``eps`` encodes the orientability of the base surface together with the
  behaviour of the fibre orientation along its generators;
* ``g`` is the genus of the base surface;
* ``t`` counts the closed exceptional surfaces, ``k`` of which are Klein
  bottles (the remaining ``t - k`` are tori);
* ``h_i`` (resp. ``k_j``) counts the exceptional annuli attached along the
  i-th boundary component of the first kind (resp. j-th of the second
  kind, whose counterimage in the space is a Klein bottle);
* ``(p_j, q_j)`` are the isolated exceptional fibre types.

Raw parameter sets may carry (1,q) pairs, out-of-range q_j and arbitrary
b; the ``normal_form`` module reduces them to the unique canonical form.
Everything in this module is a direct read of the parameter set.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd


class Epsilon(str, Enum):
    """Bundle-type symbol of the space away from its exceptional surfaces.

    ``o``/``o1``/``o2`` have orientable base, the ``n`` symbols a
    non-orientable one.  The undecorated ``o`` and ``n`` are used exactly
    when some boundary curve of the base reverses the fibre orientation,
    i.e. when k + m- > 0.
    """

    O = "o"
    O1 = "o1"
    O2 = "o2"
    N = "n"
    N1 = "n1"
    N2 = "n2"
    N3 = "n3"
    N4 = "n4"

    @property
    def orientable_base(self) -> bool:
        return self in (Epsilon.O, Epsilon.O1, Epsilon.O2)

    @property
    def min_genus(self) -> int:
        return _MIN_GENUS[self]


_MIN_GENUS = {
    Epsilon.O: 0,
    Epsilon.O1: 0,
    Epsilon.O2: 1,
    Epsilon.N: 1,
    Epsilon.N1: 1,
    Epsilon.N2: 1,
    Epsilon.N3: 2,
    Epsilon.N4: 3,
}

# For these symbols the space minus its exceptional surfaces is
# orientable: no fibre-reversing curve is available short of a global
# orientation reversal.
ORIENTABLE_AWAY_FROM_SE = frozenset((Epsilon.O1, Epsilon.N2))


@dataclass(frozen=True, eq=False)
class SeifertParams:
    """A raw parameter set; not necessarily in canonical form.

    m+, m- and r are the lengths of ``hplus``, ``kminus`` and ``pairs``
    and are never stored separately.
    """

    b: int
    epsilon: Epsilon
    g: int
    t: int
    k: int
    hplus: tuple[int, ...] = ()
    kminus: tuple[int, ...] = ()
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "hplus", tuple(self.hplus))
        object.__setattr__(self, "kminus", tuple(self.kminus))
        object.__setattr__(self, "pairs", tuple(tuple(pq) for pq in self.pairs))

    @property
    def m_plus(self) -> int:
        return len(self.hplus)

    @property
    def m_minus(self) -> int:
        return len(self.kminus)

    @property
    def r(self) -> int:
        return len(self.pairs)

    def _key(self):
        return (self.b, self.epsilon, self.g, self.t, self.k,
                self.hplus, self.kminus, self.pairs)

    # Equality is by parameter values, so a normalized form compares
    # equal to a plain parameter set with the same entries.
    def __eq__(self, other):
        if not isinstance(other, SeifertParams):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


class NormalizedSeifertParams(SeifertParams):
    """A parameter set in canonical form.

    Only the normalizer constructs these; see ``normal_form.normalize``
    for the reduction and the exact range conditions the fields satisfy.
    """


@dataclass(frozen=True)
class FibredSolidTorusType:
    """Type (p, r) of a fibred solid torus: D x I glued by a 2*pi*r/p turn."""

    p: int
    r: int

    def __post_init__(self) -> None:
        if self.p <= 0:
            raise ValueError(f"p must be positive, got {self.p}")
        if gcd(self.p, self.r) != 1:
            raise ValueError(f"(p, r) = ({self.p}, {self.r}) must be coprime")


@dataclass(frozen=True)
class BoundaryProfile:
    """Census of the boundary components of the fibred space."""

    tori: int
    klein_regular: int
    klein_with_exceptional: int
    exceptional_annuli: int  # t'


@dataclass(frozen=True)
class OrbifoldSummary:
    """The base orbifold: underlying surface plus its singular locus."""

    genus: int
    orientable_base: bool
    cone_points: tuple[tuple[int, int], ...]
    reflector_circles: int
    reflector_arcs: int
    underlying_boundary_components: int
    minus_decorations: int


class CaseTag(str, Enum):
    """Which formula or recognition rule produced a complexity bound."""

    BORDERED_SPECIAL_ZERO = "BorderedSpecialZero"
    BORDERED_GENERAL = "BorderedGeneral"
    LENS_B1 = "Lens_b1"
    LENS_BPQ = "Lens_bpq"
    LENS_QP = "Lens_qp"
    RP2_X_S1 = "RP2xS1"
    S2_TWIST_S1 = "S2twistS1"
    S2_TWIST_S1_REFLECTOR = "S2twistS1_reflector"
    CLOSED_ORIENTABLE_GENERAL = "ClosedOrientableGeneral"
    CLOSED_NONORIENTABLE_GENERAL = "ClosedNonorientableGeneral"


@dataclass(frozen=True)
class ComplexityBound:
    """An upper bound for the complexity (true vertices of a minimal
    almost simple spine).  ``exact`` is set only where equality is
    guaranteed, never merely because a general formula evaluated to 0."""

    value: int
    case_tag: CaseTag
    exact: bool = False
    label: str | None = None


def cf_sum(p: int, q: int) -> int:
    """Sum of the continued fraction coefficients of p/q.

    Uses the canonical expansion with last coefficient >= 2, whose
    coefficients are exactly the quotients of the Euclidean algorithm on
    (p, q); in particular cf_sum(p, 1) = p.  Requires 0 < q < p coprime,
    or q = 1 <= p.
    """
    if q <= 0:
        raise ValueError(f"q must be positive, got q = {q}")
    if q > p or (q == p and p > 1):
        raise ValueError(f"need 0 < q < p or q = 1, got (p, q) = ({p}, {q})")
    if gcd(p, q) != 1:
        raise ValueError(f"(p, q) = ({p}, {q}) must be coprime")
    total = 0
    while q:
        total += p // q
        p, q = q, p % q
    return total


def validate(params: SeifertParams) -> list[str]:
    """All structural constraints violated by a raw parameter set.

    Returns the complete list (no fail-fast), empty when the set is
    admissible.  Out-of-range q_j and unreduced b are not violations:
    normalization takes care of them.
    """
    violations = []
    for name in ("g", "t", "k"):
        if getattr(params, name) < 0:
            violations.append(f"{name} must be non-negative")
    if any(h < 0 for h in params.hplus):
        violations.append("entries of the h-list must be non-negative")
    if any(kj < 0 for kj in params.kminus):
        violations.append("entries of the k-list must be non-negative")
    for p, q in params.pairs:
        if p <= 0:
            violations.append(f"pair ({p},{q}): p must be positive")
        elif gcd(p, q) != 1:
            violations.append(f"pair ({p},{q}) is not coprime")
    if params.k > params.t:
        violations.append(f"k = {params.k} exceeds t = {params.t}")
    if (params.k + params.m_minus) % 2 != 0:
        violations.append("k + m- is odd")
    eps = params.epsilon
    if (eps in (Epsilon.O, Epsilon.N)) != (params.k + params.m_minus > 0):
        violations.append("epsilon is o or n exactly when k + m- > 0")
    if 0 <= params.g < eps.min_genus:
        violations.append(f"{eps.value} requires g >= {eps.min_genus}")
    return violations


def euler_char_base(params: SeifertParams) -> int:
    """Euler characteristic of the capped-off base surface."""
    if params.epsilon.orientable_base:
        return 2 - 2 * params.g
    return 2 - params.g


def is_orientable(params: SeifertParams) -> bool:
    """The total space is orientable iff it has no exceptional surface at
    all (t = m- = 0 and every h_i = 0) and eps is o1 or n2."""
    return (params.t == 0 and params.m_minus == 0
            and all(h == 0 for h in params.hplus)
            and params.epsilon in ORIENTABLE_AWAY_FROM_SE)


def is_closed(params: SeifertParams) -> bool:
    return params.m_plus == 0 and params.m_minus == 0


def boundary_profile(params: SeifertParams) -> BoundaryProfile:
    """Count the boundary components by type.

    A boundary entry h_i = 0 (resp. k_j = 0) leaves a torus (resp. a
    regularly fibred Klein bottle); a positive entry splits its component
    into that many Klein bottles, each containing two exceptional fibres
    of one exceptional annulus.
    """
    annuli = sum(params.hplus) + sum(params.kminus)
    return BoundaryProfile(
        tori=sum(1 for h in params.hplus if h == 0),
        klein_regular=sum(1 for kj in params.kminus if kj == 0),
        klein_with_exceptional=annuli,
        exceptional_annuli=annuli,
    )


def orbifold_summary(params: SeifertParams) -> OrbifoldSummary:
    """Describe the base orbifold of the fibred space."""
    annuli = sum(params.hplus) + sum(params.kminus)
    # (1, q) pairs are regular fillings and contribute no cone point.
    cone_points = tuple(pq for pq in params.pairs if pq[0] > 1)
    return OrbifoldSummary(
        genus=params.g,
        orientable_base=params.epsilon.orientable_base,
        cone_points=cone_points,
        reflector_circles=params.t,
        reflector_arcs=annuli,
        underlying_boundary_components=params.m_plus + params.m_minus + params.t,
        minus_decorations=params.k + params.m_minus,
    )

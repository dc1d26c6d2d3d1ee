"""Reduction moves and the canonical form of a parameter set.

Two parameter sets describe fibre-preserving homeomorphic spaces exactly
when they are connected by the moves below:

* ``twist``: slide n fibre twists onto a pair, (p,q) -> (p, q - n*p) with
  b -> b + n.  Absorbing a (1,c) pair is the special case that adds c to b.
* ``reflect_pair``: reverse the fibre orientation around one filling
  curve, (p,q) -> (p, p-q) with b -> b + 1.  Needs a fibre-reversing loop
  in the base, so it is unavailable for eps in {o1, n2}.
* ``mirror``: reverse the orientation of the space (closed orientable
  case: b -> -b-r and every q -> p-q) or of its complement off the
  exceptional surfaces (all other eps in {o1, n2} cases: every q -> p-q,
  the leftover b shift being absorbable).

``normalize`` reduces any valid raw set to the unique representative of
its move class; ``equivalent`` compares two sets through it.
"""
from __future__ import annotations

from .core import (
    ORIENTABLE_AWAY_FROM_SE,
    FibredSolidTorusType,
    NormalizedSeifertParams,
    SeifertParams,
    is_closed,
    is_orientable,
    validate,
)


def _with(params: SeifertParams, *, b=None, pairs=None) -> SeifertParams:
    # Rebuild as a plain SeifertParams: a moved set is raw again even if
    # the input was normalized.
    return SeifertParams(
        b=params.b if b is None else b,
        epsilon=params.epsilon,
        g=params.g,
        t=params.t,
        k=params.k,
        hplus=params.hplus,
        kminus=params.kminus,
        pairs=params.pairs if pairs is None else tuple(pairs),
    )


def twist(params: SeifertParams, j: int, n: int) -> SeifertParams:
    """Replace pair j (1-based) by (p_j, q_j - n*p_j) and b by b + n."""
    if not 1 <= j <= params.r:
        raise IndexError(f"pair index {j} out of range 1..{params.r}")
    p, q = params.pairs[j - 1]
    pairs = params.pairs[:j - 1] + ((p, q - n * p),) + params.pairs[j:]
    return _with(params, b=params.b + n, pairs=pairs)


def reflect_pair(params: SeifertParams, j: int) -> SeifertParams:
    """Replace pair j (1-based) by (p_j, p_j - q_j) and b by b + 1."""
    if params.epsilon in ORIENTABLE_AWAY_FROM_SE:
        raise ValueError(
            f"no fibre-reversing curve for eps = {params.epsilon.value}; "
            "pairs can only be reflected through a global mirror")
    if not 1 <= j <= params.r:
        raise IndexError(f"pair index {j} out of range 1..{params.r}")
    p, q = params.pairs[j - 1]
    pairs = params.pairs[:j - 1] + ((p, p - q),) + params.pairs[j:]
    return _with(params, b=params.b + 1, pairs=pairs)


def absorb_unit_pairs(params: SeifertParams) -> SeifertParams:
    """Trade every (1, q) pair for q extra twists on b."""
    extra = sum(q for p, q in params.pairs if p == 1)
    pairs = tuple(pq for pq in params.pairs if pq[0] != 1)
    return _with(params, b=params.b + extra, pairs=pairs)


def insert_unit_pair(params: SeifertParams, q: int) -> SeifertParams:
    """Split q twists off b into an explicit (1, q) pair."""
    return _with(params, b=params.b - q, pairs=params.pairs + ((1, q),))


def mirror(params: SeifertParams) -> SeifertParams:
    """Orientation reversal, defined for eps in {o1, n2}.

    For a closed orientable space this is b -> -b - r together with
    q_j -> p_j - q_j.  Otherwise (boundary present, or closed with
    reflector circles) only the pairs flip: the b shift produced by the
    reversal is absorbable there, so keeping b gives an equivalent set.
    """
    if params.epsilon not in ORIENTABLE_AWAY_FROM_SE:
        raise ValueError(
            f"mirror needs eps in {{o1, n2}}, got {params.epsilon.value}")
    flipped = tuple((p, p - q) for p, q in params.pairs)
    if is_closed(params) and is_orientable(params):
        return _with(params, b=-params.b - params.r, pairs=flipped)
    return _with(params, pairs=flipped)


def _mirror_min(pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Lexicographically smaller of a sorted pair list and its mirror.

    Picking the smaller list realizes the leading-pair condition
    0 < q_l < p_l/2 (l the first index with p_l > 2) whenever that
    condition distinguishes the two lists, and breaks the tie
    deterministically when it does not (several pairs sharing the
    smallest p > 2 can leave both lists in range).
    """
    flipped = sorted((p, p - q) for p, q in pairs)
    return min(pairs, flipped)


def normalize(params: SeifertParams) -> NormalizedSeifertParams:
    """Reduce a valid parameter set to its unique canonical form.

    Steps: (1) absorb every (1, q) pair into b; (2) twist each q_j into
    0 < q_j < p_j; (3) for eps outside {o1, n2} reflect each pair down to
    q_j <= p_j/2; (4) reduce b: b = 0 whenever t + m+ + m- > 0, b mod 2
    for eps in {o2, n1, n3, n4} (and b = 0 if a p_j = 2 then allows one
    more reflection), and for eps in {o1, n2} mirror until b >= -r/2 in
    the closed orientable case or until the pair list is the canonical
    one of the two mirror images otherwise; (5) sort the boundary lists
    and the pairs.

    The result is a fixed point of normalize and is constant on move
    classes: composing the input with any finite word of twist,
    reflect_pair, mirror and (1, q) absorption/insertion moves does not
    change the output.
    """
    problems = validate(params)
    if problems:
        raise ValueError("invalid parameters: " + "; ".join(problems))

    b = params.b
    pairs = []
    for p, q in params.pairs:
        if p == 1:
            b += q
            continue
        b += q // p
        pairs.append((p, q % p))

    eps = params.epsilon
    mirror_only = eps in ORIENTABLE_AWAY_FROM_SE
    if not mirror_only:
        for i, (p, q) in enumerate(pairs):
            if 2 * q > p:
                pairs[i] = (p, p - q)
                b += 1
    pairs.sort()

    r = len(pairs)
    if params.t + params.m_plus + params.m_minus > 0:
        b = 0
        if mirror_only:
            pairs = _mirror_min(pairs)
    elif not mirror_only:
        b %= 2
        if b == 1 and any(p == 2 for p, _ in pairs):
            b = 0
    else:
        # Closed orientable: the mirror sends b to -b - r, so exactly one
        # of b > -r/2 and -b - r > -r/2 holds unless 2b = -r.
        if 2 * b < -r:
            b = -b - r
            pairs = sorted((p, p - q) for p, q in pairs)
        elif 2 * b == -r:
            pairs = _mirror_min(pairs)

    return NormalizedSeifertParams(
        b=b,
        epsilon=eps,
        g=params.g,
        t=params.t,
        k=params.k,
        hplus=tuple(sorted(params.hplus)),
        kminus=tuple(sorted(params.kminus)),
        pairs=tuple(pairs),
    )


def equivalent(a: SeifertParams, b: SeifertParams) -> bool:
    """Whether two valid sets describe fibre-preserving homeomorphic
    spaces.  Distinct fibrations of one underlying manifold compare as
    not equivalent."""
    return normalize(a) == normalize(b)


def reverse_orientation(params: SeifertParams) -> NormalizedSeifertParams:
    """Canonical form of the space with reversed orientation (eps in
    {o1, n2}).  The canonical form forgets orientation, so on normalized
    input this is the identity; it exists to make the convention explicit.
    """
    return normalize(mirror(params))


def solid_torus_equivalent(a: FibredSolidTorusType,
                           b: FibredSolidTorusType) -> bool:
    """Fibre-preserving homeomorphism of fibred solid tori: equal p and
    r congruent to +-r' mod p."""
    if a.p != b.p:
        return False
    return (a.r - b.r) % a.p == 0 or (a.r + b.r) % a.p == 0


def from_burton(params: SeifertParams) -> NormalizedSeifertParams:
    """Canonical form of a census-convention row.

    The census tables write some one-pair-reflected sets with b = 0 where
    the canonical form has b = 1: for eps in {o2, n1, n3, n4},

        {0; (eps,g,(0,0)); ( | ); (..., (p_r, p_r - q_r))}

    denotes the same space as {1; (eps,g,(0,0)); ( | ); (..., (p_r, q_r))}.
    Normalization performs exactly that conversion (and is the identity
    on rows already in canonical form).
    """
    return normalize(params)

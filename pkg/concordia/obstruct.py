import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import lcm
from typing import FrozenSet, List, Optional, Tuple

from sympy import isprime, primefactors

from concordia.algebra import FinAbGroup, GroupElement, Subgroup, generating_rank, primary_part
from concordia.dcalc import CoverDescription, SurgeryPiece, VSequence, d_sum, dbar_piece, dbar_sum
from concordia.exceptions import EmptyInputError, HypothesisNotMetError, InvalidArgumentError
from concordia.linkform import LinkingForm, compose_forms, enumerate_metabolizers, is_nonsingular, iter_metabolizers

logger = logging.getLogger(__name__)


def gz_lower_bound(cover: CoverDescription) -> int:
    """g_Z >= ceil(r(H_1) / 2), since the generating rank of H_1 of the cover is at most 2 g_Z."""
    return (generating_rank(cover.group) + 1) // 2


def _p_squared_rank(group: FinAbGroup, p: int) -> Optional[int]:
    """Return n if the p-primary part of the group is (Z/p^2)^2n with n >= 1, else None."""
    invariants = primary_part(group, p)[0].canonical_invariants
    if invariants and len(invariants) % 2 == 0 and all(d == p * p for d in invariants):
        return len(invariants) // 2
    return None


def meets_hypothesis(cover: CoverDescription, p: int) -> Optional[int]:
    """Return n if H_1(cover)_p is (Z/p^2)^2n for some n >= 1, else None."""
    return _p_squared_rank(cover.group, p)


def qualifying_primes(cover: CoverDescription) -> List[int]:
    """The primes dividing |H_1| at which the concordance Z-genus obstruction applies, in increasing order."""
    return [int(p) for p in primefactors(cover.group.order) if meets_hypothesis(cover, p) is not None]


def _require_prime(p: int):
    if not isprime(p):
        raise InvalidArgumentError(f"{p} is not a prime")


def _scaled_tables(cover: CoverDescription, p: int) -> Tuple[List[int], List[List[int]]]:
    """For every piece whose order is divisible by p, tabulate d-bar at the labels k * n / p for k = 0, ..., p - 1.

    The values are scaled by a common denominator so that sums can be compared to 0 with integer arithmetic.
    """
    coordinates, tables = [], []
    for idx, piece in enumerate(cover.pieces):
        if piece.n % p == 0:
            coordinates.append(idx)
            tables.append([dbar_piece(piece, k * (piece.n // p)) for k in range(p)])
    denominator = lcm(*(value.denominator for table in tables for value in table))
    return coordinates, [[int(value * denominator) for value in table] for table in tables]


def dbar_null_elements(cover: CoverDescription, p: int) -> FrozenSet[GroupElement]:
    """The elements z of order dividing p in H_1(cover) with d-bar(c * z) = 0 for every c.

    Elements are returned in the coordinates of H_1(cover), one per surgery piece; 0 is always included.
    """
    _require_prime(p)
    if primary_part(cover.group, p)[0].order == 1:
        raise EmptyInputError(f"H_1 of the cover has no {p}-torsion")

    coordinates, tables = _scaled_tables(cover, p)
    null = []
    for ks in product(range(p), repeat=len(coordinates)):
        if all(sum(table[c * k % p] for table, k in zip(tables, ks)) == 0 for c in range(1, p)):
            coords = [0] * len(cover.pieces)
            for idx, k in zip(coordinates, ks):
                coords[idx] = k * (cover.pieces[idx].n // p)
            null.append(tuple(coords))
    logger.debug("Found %d d-bar-null elements of order dividing %d among %d", len(null), p, p ** len(coordinates))
    return frozenset(null)


def _line_representative(group: FinAbGroup, x: GroupElement, p: int) -> GroupElement:
    return min(group.scale(c, x) for c in range(1, p))


def _max_null_rank(group: FinAbGroup, null: FrozenSet[GroupElement], p: int) -> int:
    """The largest rank of an elementary abelian p-subgroup all of whose elements lie in `null`."""
    lines = sorted({_line_representative(group, x, p) for x in null if x != group.zero})
    if not lines:
        return 0

    span = Subgroup.generated_by(group, lines)
    if span.members <= null:
        return span.elementary_rank(p)

    best = 0
    seen = {}
    stack = [(Subgroup.trivial(group), 0, 0)]
    while stack:
        subgroup, rank, start = stack.pop()
        best = max(best, rank)
        if rank + len(lines) - start <= best:
            continue
        for idx in range(start, len(lines)):
            x = lines[idx]
            if x in subgroup:
                continue
            child = subgroup.extend(x)
            # a subspace explored from an earlier start index already covers every extension from this one
            if seen.get(child.elements, len(lines) + 1) <= idx + 1 or not child.members <= null:
                continue
            seen[child.elements] = idx + 1
            stack.append((child, rank + 1, idx + 1))
    return best


@dataclass
class GzcBound:
    """A lower bound on the concordance Z-genus from the prime p.

    Fields:
        p: the prime; None if no prime meets the obstruction's hypothesis (then the bound is 0)
        bound: the lower bound n - null_rank, clamped at 0
        null_rank: the largest rank of an elementary abelian subgroup on which d-bar vanishes
    """

    p: Optional[int]
    bound: int
    null_rank: Optional[int] = None


def gzc_analysis(cover: CoverDescription, p: int) -> GzcBound:
    _require_prime(p)
    n = meets_hypothesis(cover, p)
    if n is None:
        invariants = list(primary_part(cover.group, p)[0].canonical_invariants)
        raise HypothesisNotMetError(
            f"The {p}-primary part of H_1 has invariants {invariants}, but (Z/{p * p})^2n with n >= 1 is required"
        )

    null_rank = _max_null_rank(cover.group, dbar_null_elements(cover, p), p)
    logger.debug("At p=%d: n=%d, null rank %d", p, n, null_rank)
    return GzcBound(p, max(n - null_rank, 0), null_rank)


def gzc_lower_bound(cover: CoverDescription, p: int) -> int:
    """Lower bound on the concordance Z-genus from the d-bar values on the elements of order p.

    If the concordance Z-genus were m, there would be a subgroup (Z/p)^(n-m) of the p-torsion on which d-bar vanishes;
    hence m >= n - r, where r is the largest rank of such a subgroup.
    """
    return gzc_analysis(cover, p).bound


def dbar_table(cover: CoverDescription, p: int) -> List[Tuple[GroupElement, Fraction]]:
    """d-bar at every element of order p of H_1(cover), in lexicographic order."""
    _require_prime(p)
    return [(z, dbar_sum(cover, z)) for z in cover.group.socle(p) if z != cover.group.zero]


@dataclass
class LemmaVerdict:
    passed: bool
    n: int
    m: int
    metabolizer_count: int
    counterexample: Optional[Subgroup] = None


def verify_lemma_key(f1: LinkingForm, f2: LinkingForm, p: int, bound: Optional[int] = None) -> LemmaVerdict:
    """Check by exhaustive enumeration that every metabolizer M of f1 + (-f2) meets the first summand in a subgroup
    containing (Z/p)^(n-m), where the p-part of f1's group is (Z/p^2)^2n and the p-part of f2's group has generating
    rank at most 2m < 2n.
    """
    _require_prime(p)
    for form in (f1, f2):
        if not is_nonsingular(form):
            raise HypothesisNotMetError(f"The linking form on {list(form.group.cyclic_orders)} is singular")
    n = _p_squared_rank(f1.group, p)
    if n is None:
        invariants = list(primary_part(f1.group, p)[0].canonical_invariants)
        raise HypothesisNotMetError(f"The {p}-primary part of the first group is {invariants}, not (Z/{p * p})^2n")
    m = (generating_rank(primary_part(f2.group, p)[0]) + 1) // 2
    if m >= n:
        raise HypothesisNotMetError(f"The {p}-primary part of the second group needs generating rank < {2 * n}")

    combined = compose_forms([(1, f1), (-1, f2)])
    combined.group.require_oracle_scale(bound)

    k1 = len(f1.group.cyclic_orders)
    count = 0
    for metabolizer in enumerate_metabolizers(combined, bound):
        count += 1
        intersection = Subgroup(f1.group, tuple(x[:k1] for x in metabolizer if not any(x[k1:])))
        if intersection.elementary_rank(p) < n - m:
            logger.debug("Counterexample metabolizer generated by %s", metabolizer.generators)
            return LemmaVerdict(False, n, m, count, metabolizer)
    logger.debug("All %d metabolizers meet the first summand in rank >= %d", count, n - m)
    return LemmaVerdict(True, n, m, count)


def concordance_metabolizer_test(cK: CoverDescription, cJ: CoverDescription, bound: Optional[int] = None) -> bool:
    """Whether some metabolizer M of H_1(cK # -cJ) has d = 0 at every element of M.

    False proves that the two knots are not concordant.
    """
    combined = cK + cJ.mirrored()
    metabolizers = iter_metabolizers(combined.form, admissible_element=lambda z: d_sum(combined, z) == 0, bound=bound)
    return next(metabolizers, None) is not None


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


@dataclass
class ObstructionReport:
    """All bounds computed for one knot.

    Fields:
        knot: the printed knot expression
        cover: the surgery pieces of the branched cover as (sign, n, vseq)
        homology_invariants: the invariant factors of H_1 of the cover
        gz_lower: the Z-genus bound from the generating rank
        gzc: the best concordance Z-genus bound over gzc_by_prime
        gzc_by_prime: the concordance Z-genus bound of every evaluated prime
        dbar_table: d-bar at the elements of order p, for the prime of gzc
        annotations: declared facts as {fact, source}
        gz_lower_combined: the best Z-genus bound, since g_Z >= g_Z^c
        topological_gap_lower: the concordance Z-genus bound if the knot is declared topologically slice, i.e. a lower
            bound on g_Z^c - g_4^top; None otherwise
    """

    knot: str
    cover: List[SurgeryPiece]
    homology_invariants: List[int]
    gz_lower: int
    gzc: GzcBound
    gzc_by_prime: List[GzcBound] = field(default_factory=list)
    dbar_table: List[Tuple[GroupElement, Fraction]] = field(default_factory=list)
    annotations: List[dict] = field(default_factory=list)
    gz_lower_combined: int = 0
    topological_gap_lower: Optional[int] = None

    def to_document(self) -> dict:
        return {
            "knot": self.knot,
            "cover": [{"sign": piece.sign, "n": piece.n, "vseq": list(piece.vseq.values)} for piece in self.cover],
            "homology_invariants": list(self.homology_invariants),
            "gz_lower": self.gz_lower,
            "gzc": _bound_document(self.gzc),
            "gzc_by_prime": [_bound_document(bound) for bound in self.gzc_by_prime],
            "dbar_table": [{"element": list(z), "value": format_fraction(value)} for z, value in self.dbar_table],
            "annotations": [dict(annotation) for annotation in self.annotations],
            "gz_lower_combined": self.gz_lower_combined,
            "topological_gap_lower": self.topological_gap_lower,
        }

    @classmethod
    def from_document(cls, document: dict) -> "ObstructionReport":
        return cls(
            knot=document["knot"],
            cover=[SurgeryPiece(piece["sign"], piece["n"], VSequence(tuple(piece["vseq"]))) for piece in document["cover"]],
            homology_invariants=list(document["homology_invariants"]),
            gz_lower=document["gz_lower"],
            gzc=GzcBound(**document["gzc"]),
            gzc_by_prime=[GzcBound(**bound) for bound in document.get("gzc_by_prime", [])],
            dbar_table=[(tuple(entry["element"]), Fraction(entry["value"])) for entry in document.get("dbar_table", [])],
            annotations=[dict(annotation) for annotation in document.get("annotations", [])],
            gz_lower_combined=document.get("gz_lower_combined", 0),
            topological_gap_lower=document.get("topological_gap_lower"),
        )


def _bound_document(bound: GzcBound) -> dict:
    return {"p": bound.p, "bound": bound.bound, "null_rank": bound.null_rank}

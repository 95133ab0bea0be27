"""
Symmetric and pseudo-symmetric C-semigroups.

Classification through the pseudo-Frobenius set, the exhaustive
characterisation checks, and the explicit covers: a symmetric T with T/2 = S
for odd f, a pseudo-symmetric T with T/2 = S for irreducible S, and their
composition, a pseudo-symmetric T' with T'/4 = S.

Every constructor checks its own result and raises CoverConstructionError
when a check fails; nothing unverified is returned.
"""
import logging
from enum import Enum
from typing import Sequence

from pydantic import BaseModel, ConfigDict, Field

from semicovers.core.points import Point, all_odd, box_points, divide, divisible, mod, scale, subtract
from semicovers.errors import CoverConstructionError, NotIrreducibleError, PreconditionError
from semicovers.quotient import quotient_gaps
from semicovers.semigroup.models import CSemigroup
from semicovers.semigroup.operations import equals, frobenius, pseudo_frobenius, validate

logger = logging.getLogger("semicovers.irreducible")


class Classification(str, Enum):
    SYMMETRIC = "symmetric"
    PSEUDO_SYMMETRIC = "pseudo-symmetric"
    NOT_IRREDUCIBLE = "not-irreducible"


class ClassificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    classification: Classification
    frobenius: tuple[int, ...] = Field(description="Largest gap under the order.")
    pseudo_frobenius: tuple[tuple[int, ...], ...] = Field(description="Pseudo-Frobenius set the decision was made on.")


class DichotomyReport(BaseModel):
    """How the half of a pseudo-symmetric semigroup classifies, with its Frobenius residues mod 4."""

    model_config = ConfigDict(frozen=True)

    classification: Classification = Field(description="Classification of T/2.")
    frobenius: tuple[int, ...] = Field(description="Fb(T).")
    half_frobenius: tuple[int, ...] = Field(description="Fb(T/2).")
    half_frobenius_mod4: tuple[int, ...] = Field(description="Fb(T/2) reduced mod 4 coordinatewise.")
    halves_frobenius: bool = Field(description="Whether Fb(T/2) = Fb(T)/2.")


def _require_gaps(s: CSemigroup) -> Point:
    fb = frobenius(s)
    if fb is None:
        raise PreconditionError("The semigroup is the whole cone and has no Frobenius element")
    return fb


def classify_report(s: CSemigroup) -> ClassificationReport:
    fb = _require_gaps(s)
    pf = pseudo_frobenius(s)
    if pf == [fb]:
        kind = Classification.SYMMETRIC
    elif len(pf) == 2 and divisible(fb, 2) and set(pf) == {fb, divide(fb, 2)}:
        kind = Classification.PSEUDO_SYMMETRIC
    else:
        kind = Classification.NOT_IRREDUCIBLE
    return ClassificationReport(classification=kind, frobenius=fb, pseudo_frobenius=tuple(pf))


def classify(s: CSemigroup) -> Classification:
    """Symmetric iff PF = {Fb}; pseudo-symmetric iff PF = {Fb, Fb/2}."""
    return classify_report(s).classification


def is_irreducible(s: CSemigroup) -> bool:
    return classify(s) != Classification.NOT_IRREDUCIBLE


def _mirror_holds(s: CSemigroup, fb: Point, skip: Point | None) -> bool:
    # x in S iff Fb - x not in S, over the cone points below Fb
    for x in s.cone.region_below(s.order, fb):
        if x == skip:
            continue
        rest = subtract(fb, x)
        if (x in s) == (rest is not None and rest in s):
            return False
    return True


def check_symmetric_characterization(s: CSemigroup) -> bool:
    fb = _require_gaps(s)
    return _mirror_holds(s, fb, None)


def check_pseudosymmetric_characterization(s: CSemigroup) -> bool:
    fb = _require_gaps(s)
    if not divisible(fb, 2):
        return False
    return _mirror_holds(s, fb, divide(fb, 2))


def _in_double(s: CSemigroup, x: Sequence[int]) -> bool:
    """x in 2S."""
    return divisible(x, 2) and divide(x, 2) in s


def _double_hypotheses(s: CSemigroup, f: Point, pf: list[Point]) -> tuple[Point, Point] | None:
    """First pair (f_i, f_j) of pseudo-Frobenius elements with f - f_i - f_j outside S."""
    for i, fi in enumerate(pf):
        for fj in pf[i:]:
            rest = subtract(f, fi)
            rest = subtract(rest, fj) if rest is not None else None
            if rest is None or rest not in s:
                return fi, fj
    return None


def _check_postconditions(t: CSemigroup, s: CSemigroup, kind: Classification, fb: Point, d: int) -> None:
    violation = validate(t.cone, t.gaps)
    if violation is not None:
        raise CoverConstructionError(
            f"Constructed set is not closed: {violation.gap} = {violation.summand} + {violation.complement}"
        )
    got = classify(t)
    if got != kind:
        raise CoverConstructionError(f"Constructed semigroup is {got.value}, expected {kind.value}")
    if frobenius(t) != fb:
        raise CoverConstructionError(f"Constructed semigroup has Frobenius element {frobenius(t)}, expected {fb}")
    if not equals(quotient_gaps(t, d), s):
        raise CoverConstructionError(f"Quotient of the constructed semigroup by {d} is not the input")


def symmetric_double(s: CSemigroup, f: Sequence[int]) -> CSemigroup:
    """
    Symmetric T with Frobenius element f and T/2 = S.

    T is the union of 2S, the cone points x with f - x outside the cone, the
    translates (f - 2 f_i) + 2S over PF(S), and the cone points that are
    neither even nor all-odd with x > f/2 and f - x in the cone.

    Raises:
        PreconditionError: if f is not an all-odd cone point or some f - f_i - f_j is not in S
        CoverConstructionError: if T is not symmetric with Frobenius f and T/2 = S
    """
    f = tuple(f)
    if len(f) != s.dim or not s.cone.contains(f):
        raise PreconditionError(f"{f} is not a point of the cone", f=list(f))
    if not all_odd(f):
        even = [i for i, c in enumerate(f) if c % 2 == 0]
        raise PreconditionError(f"{f} has even coordinates at {even}", f=list(f), even_coordinates=even)
    pf = pseudo_frobenius(s)
    failing = _double_hypotheses(s, f, pf)
    if failing is not None:
        fi, fj = failing
        raise PreconditionError(
            f"{f} - {fi} - {fj} is not in the semigroup",
            f=list(f),
            pair=[list(fi), list(fj)],
        )
    shifts = [subtract(f, scale(2, fi)) for fi in pf]

    def in_t(x: Point) -> bool:
        if _in_double(s, x):
            return True
        rest = subtract(f, x)
        if rest is None or not s.cone.contains(rest):
            return True
        for shift in shifts:
            z = subtract(x, shift)
            if z is not None and _in_double(s, z):
                return True
        # f - x is already known to be in the cone here
        return not divisible(x, 2) and not all_odd(x) and s.order.less(f, scale(2, x))

    gaps = [x for x in box_points(f) if s.cone.contains(x) and not in_t(x)]
    t = s.with_gaps(gaps)
    _check_postconditions(t, s, Classification.SYMMETRIC, f, 2)
    logger.info(f"Symmetric double of S with Frobenius {f}: genus {len(gaps)}")
    return t


def admissible_f_stream(s: CSemigroup, bound: Sequence[int]) -> list[Point]:
    """All-odd cone points f <= bound meeting the hypotheses of symmetric_double, ascending."""
    pf = pseudo_frobenius(s)
    return [
        f
        for f in s.cone.region_below(s.order, tuple(bound))
        if all_odd(f) and _double_hypotheses(s, f, pf) is None
    ]


def pseudo_symmetric_cover(s: CSemigroup) -> CSemigroup:
    """
    Pseudo-symmetric T with Frobenius element 2 Fb(S) and T/2 = S.

    T is 2S together with the non-even cone points x > Fb(S), the cone points
    x with 2 Fb(S) - x outside the cone, and everything above 2 Fb(S). The
    second family is closed under adding cone points, and its even members
    already lie in 2S because every gap h of an irreducible S has Fb(S) - h
    in the cone.

    Raises:
        NotIrreducibleError: if S is neither symmetric nor pseudo-symmetric
        CoverConstructionError: if T fails any of its three checks
    """
    if not is_irreducible(s):
        raise NotIrreducibleError("Pseudo-symmetric covers exist only for irreducible semigroups")
    fb = frobenius(s)
    top = scale(2, fb)

    def is_gap(x: Point) -> bool:
        if divisible(x, 2):
            return divide(x, 2) not in s
        mirror = subtract(top, x)
        return s.order.leq(x, fb) and mirror is not None and s.cone.contains(mirror)

    gaps = [x for x in s.cone.region_below(s.order, top) if is_gap(x)]
    t = s.with_gaps(gaps)
    _check_postconditions(t, s, Classification.PSEUDO_SYMMETRIC, top, 2)
    logger.info(f"Pseudo-symmetric cover with Frobenius {top}: genus {len(gaps)}")
    return t


def fourth_pseudo_symmetric(s: CSemigroup, f: Sequence[int]) -> CSemigroup:
    """Pseudo-symmetric T' with T'/4 = S, through the symmetric double at f."""
    t = pseudo_symmetric_cover(symmetric_double(s, f))
    if not equals(quotient_gaps(t, 4), s):
        raise CoverConstructionError("Quotient of the constructed semigroup by 4 is not the input", f=list(f))
    return t


def irreducible_iff_half_witness(s: CSemigroup) -> CSemigroup | None:
    """A pseudo-symmetric T with T/2 = S when S is irreducible, otherwise None."""
    _require_gaps(s)
    if not is_irreducible(s):
        return None
    return pseudo_symmetric_cover(s)


def half_dichotomy(t: CSemigroup) -> DichotomyReport:
    """
    Classify T/2 for a pseudo-symmetric T.

    Raises:
        PreconditionError: if T is not pseudo-symmetric
    """
    if classify(t) != Classification.PSEUDO_SYMMETRIC:
        raise PreconditionError("half_dichotomy expects a pseudo-symmetric semigroup")
    half = quotient_gaps(t, 2)
    fb_t = frobenius(t)
    fb_half = frobenius(half)
    kind = classify(half)
    if kind == Classification.NOT_IRREDUCIBLE:
        logger.warning(f"Half of a pseudo-symmetric semigroup with Frobenius {fb_t} is not irreducible")
    return DichotomyReport(
        classification=kind,
        frobenius=fb_t,
        half_frobenius=fb_half,
        half_frobenius_mod4=mod(fb_half, 4),
        halves_frobenius=divisible(fb_t, 2) and fb_half == divide(fb_t, 2),
    )


__all__ = [
    "Classification",
    "ClassificationReport",
    "DichotomyReport",
    "classify",
    "classify_report",
    "is_irreducible",
    "check_symmetric_characterization",
    "check_pseudosymmetric_characterization",
    "symmetric_double",
    "admissible_f_stream",
    "pseudo_symmetric_cover",
    "fourth_pseudo_symmetric",
    "irreducible_iff_half_witness",
    "half_dichotomy",
]

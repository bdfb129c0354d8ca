import logging
from collections import deque
from dataclasses import dataclass

from src.config import settings
from src.cra.checks import CopylessCheck, NormalFormCheck, check_copyless, check_linear, check_normal_form
from src.cra.compile import compile_expr_to_ccra
from src.cra.convert import ccra_to_expr
from src.errors import ClassError, CrossCheckError, NoConversionPath
from src.lrs.classify import PolyRatVerdict, classify_series, lrs_to_expr, series_to_expr
from src.lrs.recurrence import lrs_to_series, lrs_to_wa, series_to_lrs
from src.models.representation import Kind, Representation
from src.ratmath.ratfunc import RationalFunction
from src.seqexpr.fragments import fragment_of
from src.wa.ambiguity import AmbiguityReport, classify_ambiguity
from src.wa.constructions import compile_expr_to_wa
from src.wa.series import equiv, wa_series

logger = logging.getLogger(__name__)

# Direct conversions, in order of preference. Everything else goes through them.
EDGES: tuple[tuple[Kind, Kind], ...] = (
    (Kind.EXPR, Kind.WA),
    (Kind.EXPR, Kind.CCRA),
    (Kind.CCRA, Kind.EXPR),
    (Kind.WA, Kind.SERIES),
    (Kind.LRS, Kind.SERIES),
    (Kind.SERIES, Kind.LRS),
    (Kind.LRS, Kind.WA),
    (Kind.SERIES, Kind.EXPR),
    (Kind.LRS, Kind.EXPR),
)


@dataclass(frozen=True)
class ClassifyReport:
    """Everything `classify` can say about one input. Absent facts are None."""

    label: str
    kind: Kind
    fragments: tuple[str, ...] | None = None
    ambiguity: AmbiguityReport | None = None
    copyless: CopylessCheck | None = None
    linear: bool | None = None
    normal_form: NormalFormCheck | None = None
    series: RationalFunction | None = None
    verdict: PolyRatVerdict | None = None

    @property
    def bound_limited(self) -> bool:
        return self.verdict is not None and not self.verdict.is_polyrat


class Resolver:
    """Converts any representation into any other along the conversion graph.

    Every step is followed by a term-by-term agreement check, and when both ends of a
    conversion have a generating function the two are compared exactly.
    """

    def __init__(self, check_terms: int | None = None, max_ell: int | None = None):
        self.check_terms = check_terms if check_terms is not None else settings.check_terms
        self.max_ell = max_ell

    def path(self, source: Kind, target: Kind) -> list[Kind]:
        """Shortest chain of kinds from source to target (breadth-first, edges in preference order)."""
        previous: dict[Kind, Kind | None] = {source: None}
        queue = deque([source])
        while queue:
            kind = queue.popleft()
            if kind is target:
                break
            for a, b in EDGES:
                if a is kind and b not in previous:
                    previous[b] = kind
                    queue.append(b)
        if target not in previous:
            raise NoConversionPath(f"no conversion from {source.value} to {target.value}")
        chain = [target]
        while (before := previous[chain[-1]]) is not None:
            chain.append(before)
        return chain[::-1]

    def convert(self, rep: Representation, target: Kind) -> Representation:
        chain = self.path(rep.kind, target)
        logger.debug("conversion path: %s", " -> ".join(k.value for k in chain))
        current = rep
        for kind in chain[1:]:
            converted = Representation(kind, self._step(current, kind), rep.source)
            self.cross_check(current, converted)
            current = converted
        if current is not rep:
            self.compare_series(rep, current)
        return current

    def _step(self, rep: Representation, target: Kind):
        match rep.kind, target:
            case Kind.EXPR, Kind.WA:
                return compile_expr_to_wa(rep.value)
            case Kind.EXPR, Kind.CCRA:
                return compile_expr_to_ccra(rep.value)
            case Kind.CCRA, Kind.EXPR:
                return ccra_to_expr(rep.value)
            case Kind.WA, Kind.SERIES:
                return wa_series(rep.value)
            case Kind.LRS, Kind.SERIES:
                return lrs_to_series(rep.value)
            case Kind.SERIES, Kind.LRS:
                return series_to_lrs(rep.value)
            case Kind.LRS, Kind.WA:
                return lrs_to_wa(rep.value)
            case Kind.SERIES, Kind.EXPR:
                return series_to_expr(rep.value, self.max_ell)
            case Kind.LRS, Kind.EXPR:
                return lrs_to_expr(rep.value, self.max_ell)
        raise NoConversionPath(f"no direct conversion from {rep.kind.value} to {target.value}")

    def cross_check(self, source: Representation, target: Representation) -> None:
        n = self.check_terms
        expected, got = source.terms(n), target.terms(n)
        for i, (u, v) in enumerate(zip(expected, got)):
            if u != v:
                raise CrossCheckError(f"{source.kind.value} -> {target.kind.value}", i, u, got=v)
        logger.debug("%s -> %s agree on %d terms", source.kind.value, target.kind.value, n)

    def series_of(self, rep: Representation) -> RationalFunction | None:
        """Generating function when the representation carries one directly."""
        match rep.kind:
            case Kind.SERIES:
                return rep.value
            case Kind.LRS:
                return lrs_to_series(rep.value)
            case Kind.WA:
                return wa_series(rep.value)
        return None

    def compare_series(self, source: Representation, target: Representation) -> None:
        left, right = self.series_of(source), self.series_of(target)
        if left is None or right is None:
            return
        if not left.same_series(right):
            n = max(left.num.degree, left.den.degree, right.num.degree, right.den.degree) * 2 + 2
            a, b = left.expand(n), right.expand(n)
            index = next((i for i, (u, v) in enumerate(zip(a, b)) if u != v), n - 1)
            raise CrossCheckError(f"series of {source.kind.value} and {target.kind.value}", index, a[index], b[index])

    def equivalent(self, a: Representation, b: Representation) -> bool:
        return equiv(self.convert(a, Kind.WA).value, self.convert(b, Kind.WA).value)

    def _try_convert(self, rep: Representation, target: Kind) -> Representation | None:
        try:
            return self.convert(rep, target)
        except ClassError as e:
            logger.debug("%s has no %s form: %s", rep.label, target.value, e)
            return None

    def classify(self, rep: Representation) -> ClassifyReport:
        facts = {}
        if rep.kind is Kind.EXPR:
            facts["fragments"] = tuple(sorted(str(f) for f in fragment_of(rep.value)))
        if rep.kind is Kind.CCRA:
            facts["copyless"] = check_copyless(rep.value)
            facts["linear"] = check_linear(rep.value)
            facts["normal_form"] = check_normal_form(rep.value)
        if rep.kind in (Kind.EXPR, Kind.WA):
            automaton = self._try_convert(rep, Kind.WA)
            if automaton is not None:
                facts["ambiguity"] = classify_ambiguity(automaton.value)
        hub = self._try_convert(rep, Kind.SERIES)
        if hub is not None:
            facts["series"] = hub.value.reduced()
            facts["verdict"] = classify_series(hub.value, self.max_ell)
        return ClassifyReport(rep.label, rep.kind, **facts)

"""Command-line front end.

    python -m src eval --from expr 'geo(1,1)' -n 3
    python -m src convert --from lrs --to series fib.json
    python -m src classify --from wa a1.json a3.json
"""

import argparse
import asyncio
import logging
import sys

from src.config import settings
from src.errors import PolyRatError
from src.formats.codec import dumps, load, to_document
from src.models.representation import Kind, Representation
from src.ratmath.binomial import binomial_multiple_extend
from src.ratmath.pfrac import partial_fractions
from src.resolver import ClassifyReport, Resolver
from src.samples import SAMPLES, find_sample
from src.ui.render import (
    chained_loops_document,
    chained_loops_text,
    classify_document,
    classify_text,
    error_text,
    partial_fractions_document,
    partial_fractions_text,
    representation_text,
    terms_text,
)
from src.wa.chained import decompose_chained_loops

logger = logging.getLogger(__name__)

KINDS = [k.value for k in Kind]
EXIT_BOUND_LIMITED = 3
EXIT_USAGE = 64  # sysexits EX_USAGE; 2 belongs to class errors


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _add_common(p: argparse.ArgumentParser, source: str) -> None:
    # added per subcommand: a shared parent would share one --from action and its default
    p.add_argument("--from", dest="source", choices=KINDS, default=source, help=f"input representation (default {source})")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--check-terms", type=_positive, default=None, help="length of agreement checks")
    p.add_argument("--max-ell", type=_positive, default=None, help="exponent bound for binomial search")
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polyrat", description="Poly-rational sequence workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="print the first terms")
    _add_common(p, "expr")
    p.add_argument("input", help="file, '-' for standard input, or an expression")
    p.add_argument("-n", "--terms", type=_non_negative, default=10)
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("convert", help="convert to another representation")
    _add_common(p, "expr")
    p.add_argument("input")
    p.add_argument("--to", dest="target", choices=KINDS, required=True)
    p.set_defaults(handler=cmd_convert)

    p = sub.add_parser("classify", help="ambiguity, fragments and poly-rationality")
    _add_common(p, "expr")
    p.add_argument("inputs", nargs="+")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("equiv", help="decide whether two inputs denote the same sequence")
    _add_common(p, "expr")
    p.add_argument("input")
    p.add_argument("other")
    p.add_argument("--other-from", choices=KINDS, default=None, help="representation of the second input")
    p.set_defaults(handler=cmd_equiv)

    p = sub.add_parser("decompose", help="chained loops of an automaton")
    _add_common(p, "wa")
    p.add_argument("input")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("pfrac", help="partial fractions over binomial powers")
    _add_common(p, "series")
    p.add_argument("input")
    p.set_defaults(handler=cmd_pfrac)

    p = sub.add_parser("samples", help="list and evaluate the built-in examples")
    _add_common(p, "expr")
    p.add_argument("name", nargs="?")
    p.add_argument("-n", "--terms", type=_non_negative, default=10)
    p.set_defaults(handler=cmd_samples)
    return parser


def _resolver(args) -> Resolver:
    return Resolver(check_terms=args.check_terms, max_ell=args.max_ell)


def _emit(args, text: str, document) -> None:
    print(dumps(document) if args.format == "json" else text)


def cmd_eval(args) -> int:
    rep = load(args.input, Kind(args.source))
    terms = rep.terms(args.terms)
    _emit(args, terms_text(terms), {"terms": [str(t) for t in terms]})
    return 0


def cmd_convert(args) -> int:
    rep = load(args.input, Kind(args.source))
    converted = _resolver(args).convert(rep, Kind(args.target))
    logger.info("converted %s to %s", rep.label, converted.kind.value)
    _emit(args, representation_text(converted), to_document(converted))
    return 0


async def _classify_all(resolver: Resolver, reps: list[Representation]) -> list[ClassifyReport]:
    return await asyncio.gather(*(asyncio.to_thread(resolver.classify, rep) for rep in reps))


def cmd_classify(args) -> int:
    reps = [load(arg, Kind(args.source)) for arg in args.inputs]
    reports = asyncio.run(_classify_all(_resolver(args), reps))
    _emit(args, "\n".join(classify_text(r) for r in reports), [classify_document(r) for r in reports])
    return EXIT_BOUND_LIMITED if any(r.bound_limited for r in reports) else 0


def cmd_equiv(args) -> int:
    a = load(args.input, Kind(args.source))
    b = load(args.other, Kind(args.other_from or args.source))
    same = _resolver(args).equivalent(a, b)
    _emit(args, "equivalent" if same else "not equivalent", {"equivalent": same})
    return 0


def cmd_decompose(args) -> int:
    rep = _resolver(args).convert(load(args.input, Kind(args.source)), Kind.WA)
    loops = decompose_chained_loops(rep.value)
    _emit(args, chained_loops_text(loops), chained_loops_document(loops))
    return 0


def cmd_pfrac(args) -> int:
    rep = _resolver(args).convert(load(args.input, Kind(args.source)), Kind.SERIES)
    extended, cert = binomial_multiple_extend(rep.value.reduced(), args.max_ell or settings.max_ell)
    terms = partial_fractions(extended, cert)
    _emit(args, partial_fractions_text(terms), partial_fractions_document(terms))
    return 0


def cmd_samples(args) -> int:
    if args.name is not None:
        sample = find_sample(args.name)
        if sample is None:
            print(error_text(PolyRatError(f"unknown sample {args.name!r}")), file=sys.stderr)
            return 1
        rep = sample.build()
        terms = rep.terms(args.terms)
        text = f"{sample.name}: {sample.description}\n{representation_text(rep)}\nterms: {terms_text(terms)}"
        _emit(args, text, {"name": sample.name, "kind": rep.kind.value, "value": to_document(rep),
                           "terms": [str(t) for t in terms]})
        return 0
    rows = []
    for sample in SAMPLES:
        rep = sample.build()
        rows.append((sample, rep, rep.terms(args.terms)))
    width = max(len(s.name) for s, _, _ in rows)
    text = "\n".join(f"{s.name:<{width}}  {rep.kind.value:<6} {terms_text(t)}  ({s.description})" for s, rep, t in rows)
    _emit(args, text, [{"name": s.name, "kind": rep.kind.value, "terms": [str(x) for x in t]} for s, rep, t in rows])
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.log_level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.handler(args)
    except PolyRatError as e:
        print(error_text(e), file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point for starjoin."""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from .coloring.local import KstVerdict, kst_check, local_chromatic
from .coloring.solver import Colorability, ColoringStatus, SearchBudget, chromatic_number, is_k_colorable
from .config import settings
from .errors import InputError, ResourceError, StarjoinError
from .graph.constructions import TowerParams, graph_from_spec, star_join_direct, star_join_quotient, tower
from .graph.dimacs import canonical_hash, dimacs_text, write_dimacs
from .graph.graph import Graph
from .graph.labels import format_label
from .topology.complex_io import complex_text, read_complex, write_complex
from .topology.complexes import SimplicialComplex, estimate_face_count, f_vector, join_complex, neighborhood_complex
from .topology.fields import FieldSpec
from .topology.homology import is_homology_sphere, reduced_betti
from .verify.certificate import Certificate, Verdict, write_certificate
from .verify.pipelines import (
    verify_eq1_count,
    verify_eq2_adjacency,
    verify_kst_consistency,
    verify_lemma_join_homology,
    verify_lemma_locjoin,
    verify_remark_r0,
    verify_theorem2,
)
from .verify.suite import SuiteConfig, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3
EXIT_PREMISE_FAILS = 4

_VERDICT_EXIT = {Verdict.PASS: EXIT_OK, Verdict.FAIL: EXIT_NEGATIVE, Verdict.UNKNOWN: EXIT_UNKNOWN}


def configure_logging(level: str | None = None) -> None:
    """Log to stderr so stdout carries only command output."""
    logging.basicConfig(
        level=getattr(logging, level or settings.log_level, logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def _budget(args: argparse.Namespace) -> SearchBudget:
    return SearchBudget(
        max_nodes=args.max_nodes if args.max_nodes is not None else settings.max_nodes,
        max_seconds=args.max_seconds if args.max_seconds is not None else settings.max_seconds,
    )


def _emit_graph(graph: Graph, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(dimacs_text(graph))
    else:
        write_dimacs(graph, out)
    print(f"c vertices={graph.order} edges={graph.size} sha256={canonical_hash(graph)}", file=sys.stderr)


def _emit_complex(complex_: SimplicialComplex, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(complex_text(complex_))
    else:
        write_complex(complex_, out)


def _emit_certificate(cert: Certificate, out: Path | None) -> int:
    if out is not None:
        write_certificate(cert, out)
    sys.stdout.write(cert.to_json())
    return _VERDICT_EXIT[cert.verdict]


# Commands


def cmd_construct(args: argparse.Namespace) -> int:
    _emit_graph(tower(TowerParams.checked(args.n, args.c, args.r)), args.out)
    return EXIT_OK


def cmd_star_join(args: argparse.Namespace) -> int:
    g1, g2 = graph_from_spec(args.g1), graph_from_spec(args.g2)
    build = star_join_direct if args.direct else star_join_quotient
    _emit_graph(build(g1, g2, args.s), args.out)
    return EXIT_OK


def cmd_chi(args: argparse.Namespace) -> int:
    result = chromatic_number(graph_from_spec(args.graph), _budget(args))
    print(f"status: {result.status.value}")
    print(f"bounds: {result.lower} <= chi <= {result.upper}")
    print(f"nodes: {result.nodes_explored}")
    if result.witness is not None and args.witness:
        for v, c in result.witness.items():
            print(f"{format_label(v)}\t{c}")
    return EXIT_OK if result.status is ColoringStatus.EXACT else EXIT_UNKNOWN


def cmd_lchi(args: argparse.Namespace) -> int:
    result = local_chromatic(graph_from_spec(args.graph), args.r, _budget(args))
    print(f"status: {result.status.value}")
    print(f"bounds: {result.lower} <= lchi_{args.r} <= {result.upper}")
    print(f"balls: {result.distinct_balls} distinct, {result.solved_balls} solved")
    if result.worst_center is not None:
        print(f"worst center: {format_label(result.worst_center)}")
    return EXIT_OK if result.status is ColoringStatus.EXACT else EXIT_UNKNOWN


def cmd_kcolor(args: argparse.Namespace) -> int:
    result = is_k_colorable(graph_from_spec(args.graph), args.k, _budget(args))
    print(f"{args.k}-colorable: {result.status.value} ({result.nodes_explored} nodes)")
    if result.witness is not None and args.witness:
        for v, c in result.witness.items():
            print(f"{format_label(v)}\t{c}")
    return {Colorability.YES: EXIT_OK, Colorability.NO: EXIT_NEGATIVE, Colorability.UNKNOWN: EXIT_UNKNOWN}[result.status]


def cmd_kst(args: argparse.Namespace) -> int:
    report = kst_check(graph_from_spec(args.graph), args.r, args.n, args.c, _budget(args))
    print(f"verdict: {report.verdict.value}")
    print(f"reason: {report.reason}")
    print(f"|V| = {report.order}, size threshold = {report.size_threshold}, chi bound = {report.chromatic_bound}")
    return {
        KstVerdict.CONSISTENT: EXIT_OK,
        KstVerdict.VIOLATION: EXIT_NEGATIVE,
        KstVerdict.UNKNOWN: EXIT_UNKNOWN,
        KstVerdict.PREMISE_FAILS: EXIT_PREMISE_FAILS,
    }[report.verdict]


def cmd_ncomplex(args: argparse.Namespace) -> int:
    _emit_complex(neighborhood_complex(graph_from_spec(args.graph)), args.out)
    return EXIT_OK


def cmd_join_complex(args: argparse.Namespace) -> int:
    _emit_complex(join_complex(read_complex(args.first), read_complex(args.second)), args.out)
    return EXIT_OK


def cmd_fvector(args: argparse.Namespace) -> int:
    complex_ = read_complex(args.complex)
    print(f"estimate: {estimate_face_count(complex_)} faces", file=sys.stderr)
    fv = f_vector(complex_, args.face_cap)
    print(f"dim: {complex_.dimension}")
    print(f"f: {' '.join(map(str, fv.counts))}")
    print(f"euler: {fv.euler_characteristic}")
    return EXIT_OK


def cmd_homology(args: argparse.Namespace) -> int:
    complex_ = read_complex(args.complex)
    betti = reduced_betti(complex_, FieldSpec.parse(args.field), args.face_cap)
    print(f"field: {betti.field}")
    for k in range(-1, complex_.dimension + 1):
        print(f"{k:>4}  {betti[k]}")
    sphere = betti.sphere_dimension()
    print(f"verdict: homology sphere S^{sphere}" if sphere is not None else "verdict: not a homology sphere")
    return EXIT_OK


def cmd_sphere_check(args: argparse.Namespace) -> int:
    complex_ = read_complex(args.complex)
    fields = [FieldSpec.parse(f) for f in args.field] if args.field else [FieldSpec.gf2(), FieldSpec.gfp(), FieldSpec.rationals()]
    ok = is_homology_sphere(complex_, args.dim, fields, args.face_cap)
    names = ", ".join(f.label() for f in fields)
    print(f"homology evidence for S^{args.dim} over {names}: {'yes' if ok else 'no'}")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_verify_theorem2(args: argparse.Namespace) -> int:
    params = TowerParams.checked(args.n, args.c, args.r)
    return _emit_certificate(verify_theorem2(params, _budget(args), args.deep, args.face_cap), args.out)


def cmd_verify_locjoin(args: argparse.Namespace) -> int:
    cert = verify_lemma_locjoin(graph_from_spec(args.g1), graph_from_spec(args.g2), args.r, _budget(args))
    return _emit_certificate(cert, args.out)


def cmd_verify_joinhom(args: argparse.Namespace) -> int:
    cert = verify_lemma_join_homology(graph_from_spec(args.g1), graph_from_spec(args.g2), args.s, face_cap=args.face_cap)
    return _emit_certificate(cert, args.out)


def cmd_verify_remark(args: argparse.Namespace) -> int:
    return _emit_certificate(verify_remark_r0(args.n, args.m, args.face_cap), args.out)


def cmd_verify_kst(args: argparse.Namespace) -> int:
    cert = verify_kst_consistency(graph_from_spec(args.graph), args.r, args.n, args.c, _budget(args))
    return _emit_certificate(cert, args.out)


def cmd_verify_eq1(args: argparse.Namespace) -> int:
    return _emit_certificate(verify_eq1_count(TowerParams.checked(args.n, args.c, args.r)), args.out)


def cmd_verify_eq2(args: argparse.Namespace) -> int:
    cert = verify_eq2_adjacency(graph_from_spec(args.g1), graph_from_spec(args.g2), args.s)
    return _emit_certificate(cert, args.out)


def _read_certificate(path: Path) -> Certificate:
    try:
        return Certificate.from_json(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise InputError(f"Cannot read certificate {path}: {e}") from e
    except ValueError as e:
        raise InputError(f"{path} is not a certificate: {e}") from e


def cmd_verify_compare(args: argparse.Namespace) -> int:
    """Exit 0 when two certificates differ at most in their timings."""
    first, second = _read_certificate(args.first), _read_certificate(args.second)
    for path, cert in ((args.first, first), (args.second, second)):
        print(f"{path}: {cert.claim_id.value} {cert.verdict.value} {cert.content_hash()}")
    same = first.content_hash() == second.content_hash()
    print("same content" if same else "content differs")
    return EXIT_OK if same else EXIT_NEGATIVE


def cmd_verify_suite(args: argparse.Namespace) -> int:
    config = SuiteConfig.load(args.config) if args.config else SuiteConfig.default()
    certificates = run_suite(config, args.out_dir, args.workers)
    for cert in certificates:
        print(f"{cert.claim_id.value:<20} {cert.verdict.value}")
    verdicts = {c.verdict for c in certificates}
    if Verdict.FAIL in verdicts:
        return EXIT_NEGATIVE
    if Verdict.UNKNOWN in verdicts:
        return EXIT_UNKNOWN
    return EXIT_OK


# Parser


def _add_budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-nodes", type=int, default=None, help="search-node budget")
    parser.add_argument("--max-seconds", type=float, default=None, help="wall-clock budget")


def _add_cap(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--face-cap", type=int, default=None, help="face enumeration cap")


def _add_out(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, default=None, help="also write the certificate here")


def _add_command(
    subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]",
    name: str,
    handler: Callable[[argparse.Namespace], int],
    help_text: str,
) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(name, help=help_text)
    parser.set_defaults(handler=handler)
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starjoin",
        description="Star-join graphs, towers and checks of their coloring and homology claims.",
    )
    parser.add_argument("--log-level", default=None, help="override STARJOIN_LOG_LEVEL")
    commands = parser.add_subparsers(dest="command", required=True)

    p = _add_command(commands, "construct", cmd_construct, "build the tower G_n as DIMACS")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out", type=Path, default=None, help="DIMACS file (labels go to <out>.labels)")

    p = _add_command(commands, "star-join", cmd_star_join, "build G1 *_s G2 as DIMACS")
    p.add_argument("--g1", required=True, help="graph reference: K4, C5, P3, S3, tower:n,c,r or a DIMACS file")
    p.add_argument("--g2", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--direct", action="store_true", help="use the closed-form neighborhoods (s >= 2)")
    p.add_argument("--out", type=Path, default=None)

    p = _add_command(commands, "chi", cmd_chi, "exact chromatic number")
    p.add_argument("graph")
    p.add_argument("--witness", action="store_true", help="print the coloring")
    _add_budget(p)

    p = _add_command(commands, "lchi", cmd_lchi, "r-local chromatic number")
    p.add_argument("graph")
    p.add_argument("--r", type=int, required=True)
    _add_budget(p)

    p = _add_command(commands, "kcolor", cmd_kcolor, "decide k-colorability")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--witness", action="store_true", help="print the coloring")
    _add_budget(p)

    p = _add_command(commands, "kst", cmd_kst, "check the KST bound on a graph")
    p.add_argument("graph")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    _add_budget(p)

    p = _add_command(commands, "ncomplex", cmd_ncomplex, "neighborhood complex of a graph")
    p.add_argument("graph")
    p.add_argument("--out", type=Path, default=None)

    p = _add_command(commands, "join-complex", cmd_join_complex, "join of two complex files")
    p.add_argument("first", type=Path)
    p.add_argument("second", type=Path)
    p.add_argument("--out", type=Path, default=None)

    p = _add_command(commands, "fvector", cmd_fvector, "face counts and Euler characteristic")
    p.add_argument("complex", type=Path)
    _add_cap(p)

    p = _add_command(commands, "homology", cmd_homology, "reduced Betti numbers")
    p.add_argument("complex", type=Path)
    p.add_argument("--field", default="gf2", help="gf2, gfp, gfp:<p> or rat")
    _add_cap(p)

    p = _add_command(commands, "sphere-check", cmd_sphere_check, "homology-sphere evidence")
    p.add_argument("complex", type=Path)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--field", action="append", default=None, help="repeatable; default gf2, gfp and rat")
    _add_cap(p)

    verify = commands.add_parser("verify", help="certificate-producing checks")
    claims = verify.add_subparsers(dest="claim", required=True)

    p = _add_command(claims, "theorem2", cmd_verify_theorem2, "tower count, local bound, chi bound")
    for name in ("--n", "--c", "--r"):
        p.add_argument(name, type=int, required=True)
    p.add_argument("--deep", action="store_true", help="also check the homology of N(G_n)")
    _add_budget(p)
    _add_cap(p)
    _add_out(p)

    p = _add_command(claims, "locjoin", cmd_verify_locjoin, "local chromatic number of a star-join")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--r", type=int, required=True)
    _add_budget(p)
    _add_out(p)

    p = _add_command(claims, "joinhom", cmd_verify_joinhom, "homology of N(G1 *_s G2) against N(G1) * N(G2)")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--s", type=int, required=True)
    _add_cap(p)
    _add_out(p)

    p = _add_command(claims, "remark", cmd_verify_remark, "s = 0 negative control")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--m", type=int, default=2)
    _add_cap(p)
    _add_out(p)

    p = _add_command(claims, "kst", cmd_verify_kst, "KST consistency certificate")
    p.add_argument("--graph", required=True)
    for name in ("--r", "--n", "--c"):
        p.add_argument(name, type=int, required=True)
    _add_budget(p)
    _add_out(p)

    p = _add_command(claims, "eq1", cmd_verify_eq1, "tower vertex count")
    for name in ("--n", "--c", "--r"):
        p.add_argument(name, type=int, required=True)
    _add_out(p)

    p = _add_command(claims, "eq2", cmd_verify_eq2, "closed-form adjacency against the quotient")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--s", type=int, required=True)
    _add_out(p)

    p = _add_command(claims, "compare", cmd_verify_compare, "compare two certificates, ignoring timings")
    p.add_argument("first", type=Path)
    p.add_argument("second", type=Path)

    p = _add_command(claims, "suite", cmd_verify_suite, "run a suite config (default grid if omitted)")
    p.add_argument("config", type=Path, nargs="?", default=None)
    p.add_argument("--out-dir", type=Path, default=None)
    p.add_argument("--workers", type=int, default=None)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level.upper() if args.log_level else None)
    try:
        code: int = args.handler(args)
    except ResourceError as e:
        logger.error(f"Resource cap reached: {e}")
        return EXIT_UNKNOWN
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except StarjoinError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fileformats as ff
from . import verify
from .betti import (
    DEFAULT_VERTEX_LIMIT,
    b_poly,
    beta_poly,
    chi_poly,
    f_poly,
    h_poly,
    hochster_betti,
    koszul_betti,
    q_poly,
)
from .composition import compose, iterated_wedge
from .errors import DomainError, MalformedInputError, ResourceLimitError
from .homology import FieldSpec, is_generalized_homology_sphere, is_homology_sphere, is_spherical_nerve_complex, reduced_cohomology
from .polytope import compose_polytopes, from_h_representation, is_natural, nerve_complex, reduced_relations

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _lengths(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def _complex(path):
    return ff.read(path, ff.parse_complex)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_compose(args) -> int:
    K = _complex(args.complex)
    parts = [_complex(p) for p in args.parts]
    _emit(ff.format_complex(compose(K, parts)), args.output)
    return EXIT_OK


def cmd_wedge(args) -> int:
    K = _complex(args.complex)
    if len(args.lengths) != K.m:
        raise DomainError(f"--lengths needs {K.m} entries, got {len(args.lengths)}")
    _emit(ff.format_complex(iterated_wedge(K, args.lengths)), args.output)
    return EXIT_OK


def cmd_betti(args) -> int:
    K = _complex(args.complex)
    oracle = koszul_betti if args.oracle == "koszul" else hochster_betti
    T = oracle(K, args.field, jobs=args.jobs, limit=args.limit)
    if args.json:
        print(ff.to_json(table=T, m=K.m, n=K.dim + 1, field=args.field.name))
    else:
        for line in T.lines():
            print(line)
    return EXIT_OK


def cmd_poly(args) -> int:
    K = _complex(args.complex)
    kind = args.kind
    if kind == "f":
        p = f_poly(K)
    elif kind == "h":
        p = h_poly(K)
    elif kind == "q":
        p = q_poly(K)
    elif kind == "chi":
        p = chi_poly(K, args.field, jobs=args.jobs, limit=args.limit)
    else:
        T = hochster_betti(K, args.field, jobs=args.jobs, limit=args.limit)
        p = beta_poly(T) if kind == "beta" else b_poly(T)
    n = K.dim + 1
    if args.json:
        print(ff.to_json(poly=p, m=K.m, n=n, field=args.field.name))
    else:
        print(p.render())
        print(f"# m={K.m} n={n} field={args.field.name}")
    return EXIT_OK


def cmd_homology(args) -> int:
    K = _complex(args.complex)
    prof = reduced_cohomology(K, args.field)
    print(f"# field={args.field.name}")
    for degree, rank in sorted(prof.nonzero().items()):
        print(f"degree={degree} rank={rank}")
    return EXIT_OK


def cmd_sphere_check(args) -> int:
    K = _complex(args.complex)
    if args.gorenstein:
        ok = K.dim + 1 == args.rank and is_generalized_homology_sphere(K, args.field)
    else:
        ok = is_homology_sphere(K, args.field, args.rank)
    print(f"{'yes' if ok else 'no'} rank={args.rank} field={args.field.name}")
    return EXIT_OK


def cmd_nerve_check(args) -> int:
    K = _complex(args.complex)
    res = is_spherical_nerve_complex(K, args.field)
    if res:
        print(f"spherical rank={res.rank}")
    else:
        print(f"not spherical: condition ({res.condition}) {res.reason}")
    return EXIT_OK


def cmd_polytope(args) -> int:
    if args.action == "nerve":
        if len(args.files) != 1:
            raise DomainError("polytope nerve takes one polytope file")
        P = ff.read(args.files[0], ff.parse_polytope)
        _emit(ff.format_complex(nerve_complex(P, args.limit)), args.output)
        return EXIT_OK
    if args.action == "compose":
        if len(args.files) < 2:
            raise DomainError("polytope compose takes a polytope file and its parts")
        P, *parts = [ff.read(f, ff.parse_polytope) for f in args.files]
        Q = compose_polytopes(P, parts)
        if args.reduce:
            Q = reduced_relations(Q)
    else:
        if len(args.files) != 1:
            raise DomainError("polytope normalize takes one halfspace file")
        Q = from_h_representation(*ff.read(args.files[0], ff.parse_halfspaces))
    _emit(ff.format_polytope(Q), args.output)
    if args.check_natural:
        check = is_natural(Q)
        print(f"# natural={'yes' if check else 'no'} {check.reason}".rstrip(), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    ok, lines = verify.run(args.identity, args.seed, args.instances, args.max_vertices)
    for line in lines:
        print(line)
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polyjoin", description="Composition of simplicial complexes and polytopes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def field_opts(p):
        p.add_argument("--field", type=_field, default=FieldSpec.parse("q"), help="q, f2 or f<p> (default q)")

    def work_opts(p):
        p.add_argument("--jobs", type=int, default=-1, help="worker processes (default: all cores)")
        p.add_argument("--limit", type=int, default=DEFAULT_VERTEX_LIMIT, help="vertex cap")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("compose", help="K(K_1, ..., K_m)")
    p.add_argument("complex")
    p.add_argument("parts", nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("wedge", help="iterated simplicial wedge K(l_1, ..., l_m)")
    p.add_argument("complex")
    p.add_argument("--lengths", type=_lengths, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_wedge)

    p = sub.add_parser("betti", help="multigraded Betti numbers")
    p.add_argument("complex")
    p.add_argument("--oracle", choices=("hochster", "koszul"), default="hochster")
    field_opts(p)
    work_opts(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("poly", help="f, h, q, beta, b or chi polynomial")
    p.add_argument("complex")
    p.add_argument("--kind", choices=("f", "h", "q", "beta", "b", "chi"), required=True)
    field_opts(p)
    work_opts(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("homology", help="reduced cohomology ranks")
    p.add_argument("complex")
    field_opts(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("sphere-check", help="homology sphere test")
    p.add_argument("complex")
    p.add_argument("--rank", type=int, required=True, help="n, testing for the homology of S^(n-1)")
    p.add_argument("--gorenstein", action="store_true", help="also require every link to be a homology sphere")
    field_opts(p)
    p.set_defaults(func=cmd_sphere_check)

    p = sub.add_parser("nerve-check", help="spherical nerve-complex test")
    p.add_argument("complex")
    field_opts(p)
    p.set_defaults(func=cmd_nerve_check)

    p = sub.add_parser("polytope", help="stochastic polytope operations")
    p.add_argument("action", choices=("nerve", "compose", "normalize"))
    p.add_argument("files", nargs="+")
    p.add_argument("-o", "--output")
    p.add_argument("--limit", type=int, default=None, help="ambient dimension cap for nerve")
    p.add_argument("--reduce", action="store_true", help="drop dependent relations after compose")
    p.add_argument("--check-natural", action="store_true")
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("verify", help="check an identity on seeded random instances")
    p.add_argument("identity", choices=verify.IDENTITIES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=20)
    p.add_argument("--max-vertices", type=int, default=10)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (MalformedInputError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())

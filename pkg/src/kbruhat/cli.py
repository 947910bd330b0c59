"""
Command-line front end.

Exit codes: 0 success, 1 domain error (for example ``u`` not below ``w``, or a
resource cap hit), 2 usage error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import partial
from itertools import product
from typing import Sequence

from . import constants as C
from . import korder as K
from . import umonoid as U
from .errors import DomainError, InvariantError, NonTerminationError, ResourceLimitError
from .insertion import insert_trace
from .parallel import parallel_map, resolve_workers
from .perm import (all_permutations, conjugate, format_permutation, inverse, omega_conjugate,
                   parse_partition, parse_permutation, partitions, phi_star)
from .words import format_word, parse_word, word_to_json

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _perm(text: str):
    try:
        return parse_permutation(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _part(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


# -- command implementations ---------------------------------------------------

def _bool(b: bool) -> str:
    return "true" if b else "false"


def cmd_order_leq_k(a, out):
    out.append(_bool(K.leq_k(a.u, a.w, a.k)))


def cmd_chain(a, out):
    iv = K.interval(a.u, a.w, a.k)
    if a.dot:
        out.append(K.interval_dot(iv))
        return
    if a.kind == "all":
        chains = K.all_chains(iv, a.max_chains)
        if a.json:
            out.append(json.dumps([K.chain_to_json(c) for c in chains]))
        else:
            out.extend(format_word(c.word, a.order) for c in chains)
        return
    c = K.cm_chain(iv) if a.kind == "cm" else K.dcm_chain(iv)
    if a.json:
        out.append(json.dumps(K.chain_to_json(c)))
        return
    m = iv.m
    out.append(format_permutation(c.u, m))
    for p, g in zip(c.perms[1:], c.word):
        out.append(f"{format_permutation(p, m)}  {g}")
    out.append(f"word: {format_word(c.word, a.order)}")


def cmd_universal(a, out):
    z = a.z
    if a.what == "length":
        out.append(str(U.universal_length(z)))
    elif a.what == "interval":
        if a.dot:
            out.append(U.hasse_interval(z).to_dot())
        else:
            iv = U.standard_interval(z)
            m = iv.m
            out.append(f"u={format_permutation(iv.u, m)} w={format_permutation(iv.w, m)} k={iv.k}")
    elif a.what == "words":
        words = U.reduced_words(z, a.max_chains)
        if a.json:
            out.append(json.dumps([word_to_json(x) for x in words]))
        else:
            out.extend(format_word(x, a.order) for x in words)
    elif a.what == "mobius":
        out.append(str(U.mobius(z)))


def cmd_const(a, out):
    if a.what == "c":
        if a.route == "primal":
            out.append(str(C.c_constant(a.z, a.lam)))
        else:
            out.append(str(C.c_constant_dual(a.z, a.lam, a.route)))
    elif a.what == "table":
        rep = C.verify_identity(a.z, strict=False)
        if a.json:
            out.append(json.dumps(rep.to_json()))
        else:
            for lam, v in rep.entries.items():
                out.append(f"{','.join(map(str, lam)) or '()'}\t{v}")
            out.append(f"chains={rep.total_chains} weighted={rep.weighted_sum()} "
                       f"identity_ok={_bool(rep.identity_ok)}")
        if not rep.identity_ok:
            raise InvariantError(f"identity fails for {a.z}")
    elif a.what == "schubert":
        out.append(str(C.schubert_coeff(a.u, a.lam, a.k, a.w)))


def cmd_poly(a, out):
    coeffs = U.rank_polynomial(a.n, a.max_n, a.workers)
    out.append(json.dumps(coeffs) if a.json else U.format_polynomial(coeffs))


def cmd_insert(a, out):
    x = parse_word(a.x, a.order)
    result, trace = insert_trace(x)
    for step in trace:
        out.append(f"pos={step.pos} rule={step.rule} "
                   f"before={format_word(step.before, a.order)} "
                   f"after={format_word(step.after, a.order)}")
    out.append(f"result={format_word(result, a.order)}")


def _sym_one(n: int, z) -> str | None:
    zi, zo = inverse(z), omega_conjugate(z, n)
    for lam in partitions(U.universal_length(z)):
        c, lt = C.c_constant(z, lam), conjugate(lam)
        if c != C.c_constant(zi, lt):
            return f"SymA fails at {z}, {lam}"
        if c != C.c_constant(zo, lt):
            return f"SymB fails at {z}, {lam}"
        if c != C.c_constant_dual(z, lam):
            return f"dual routes fail at {z}, {lam}"
    base = C.all_constants(z)
    for pos in range(1, n + 2):
        if C.all_constants(phi_star(z, pos)) != base:
            return f"SymC fails at {z}, a={pos}"
    if not C.verify_identity(z, strict=False).identity_ok:
        return f"identity fails at {z}"
    return None


def _cyclic_one(n: int, z) -> str | None:
    return None if C.check_cyclic(z, n) else f"constants differ between {z} and its shift"


def _disjoint_one(pair) -> str | None:
    e, z = pair
    if not C.u_disjoint(e, z):
        return "skip"
    return None if C.check_disjoint(e, z) else f"identity fails for ({e}, {z})"


def _guard_n(a):
    if a.n > a.max_n:
        raise ResourceLimitError(f"n={a.n} exceeds --max-n {a.max_n}")


def _report(out, label: str, results: list[str | None], count_label: str):
    bad = [r for r in results if r not in (None, "skip")]
    done = sum(1 for r in results if r != "skip")
    if bad:
        out.extend(bad)
        raise InvariantError(f"{label}: {len(bad)} failures")
    out.append(f"{label}: ok ({done} {count_label})")


def cmd_check(a, out):
    if a.what == "symmetries":
        _guard_n(a)
        res = parallel_map(partial(_sym_one, a.n), list(all_permutations(a.n)), a.workers)
        _report(out, "symmetries", res, "permutations")
    elif a.what == "cyclic":
        _guard_n(a)
        res = parallel_map(partial(_cyclic_one, a.n), list(all_permutations(a.n)), a.workers)
        _report(out, "cyclic", res, "permutations")
    elif a.what == "disjoint":
        if a.e is not None or a.z is not None:
            if a.e is None or a.z is None:
                raise UsageError("check disjoint needs both -e and -z, or -n for a sweep")
            sides = C.disjoint_sides(a.e, a.z)
            for lam, (lhs, rhs) in sides.items():
                out.append(f"{','.join(map(str, lam))}\t{lhs}\t{rhs}")
            if any(l != r for l, r in sides.values()):
                raise InvariantError("disjoint-product identity fails")
            out.append("disjoint: ok")
            return
        if a.n is None:
            raise UsageError("check disjoint needs -e and -z, or -n for a sweep")
        _guard_n(a)
        small = [z for z in all_permutations(a.n) if 0 < U.universal_length(z) <= a.max_length]
        res = parallel_map(_disjoint_one, list(product(small, repeat=2)), a.workers)
        _report(out, "disjoint", res, "pairs")


def cmd_verify_paper(a, out):
    from .verify import run_all
    results = run_all(a.only)
    width = max(len(r.detail) for r in results) if results else 0
    out.append(f"{'#':>2}  {'status':6}  {'detail':{width}}")
    for r in results:
        out.append(f"{r.number:>2}  {'PASS' if r.ok else 'FAIL':6}  {r.detail}")
    passed = sum(r.ok for r in results)
    out.append(f"{passed}/{len(results)} criteria passed")
    if passed != len(results):
        raise InvariantError("some acceptance criteria failed")


# -- parser ---------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("resource limits")
    g.add_argument("--max-n", type=_positive, default=argparse.SUPPRESS,
                   help="largest n for exhaustive sweeps (default 9)")
    g.add_argument("--max-chains", type=_positive, default=argparse.SUPPRESS,
                   help="cap on enumerated chains (default 1000000)")
    g.add_argument("--threads", type=_positive, default=argparse.SUPPRESS,
                   help="worker processes for sweeps (default $BRUHAT_THREADS or 1)")
    return p


def _order_flag(p):
    p.add_argument("--order", choices=("paper", "application"), default="paper",
                   help="factor order for printed and parsed words (default paper)")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="kbruhat", description=__doc__.strip().splitlines()[0],
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    order = sub.add_parser("order", help="k-Bruhat comparisons")
    osub = order.add_subparsers(dest="what", required=True)
    p = osub.add_parser("leq-k", parents=[common], help="test u <=_k w")
    p.add_argument("-u", type=_perm, required=True)
    p.add_argument("-w", type=_perm, required=True)
    p.add_argument("-k", type=_nonneg, required=True)
    p.set_defaults(func=cmd_order_leq_k)

    p = sub.add_parser("chain", parents=[common], help="canonical or all maximal chains")
    p.add_argument("kind", choices=("cm", "dcm", "all"))
    p.add_argument("-u", type=_perm, required=True)
    p.add_argument("-w", type=_perm, required=True)
    p.add_argument("-k", type=_nonneg, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--dot", action="store_true", help="Hasse diagram of the interval")
    _order_flag(p)
    p.set_defaults(func=cmd_chain)

    uni = sub.add_parser("universal", help="the universal order and its monoid")
    usub = uni.add_subparsers(dest="what", required=True)
    for name, hlp in (("length", "universal length"), ("interval", "standard interval"),
                      ("words", "all u-reduced words"), ("mobius", "Moebius function mu(1, z)")):
        p = usub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("z", type=_perm)
        if name == "interval":
            p.add_argument("--dot", action="store_true", help="Hasse diagram of [1, z]")
        if name == "words":
            p.add_argument("--json", action="store_true")
            _order_flag(p)
        p.set_defaults(func=cmd_universal)

    const = sub.add_parser("const", help="structure constants")
    csub = const.add_subparsers(dest="what", required=True)
    p = csub.add_parser("c", parents=[common], help="c_lambda^z")
    p.add_argument("-z", type=_perm, required=True)
    p.add_argument("-l", dest="lam", type=_part, required=True)
    p.add_argument("--route", choices=("primal", "E", "E'", "both"), default="primal")
    p.set_defaults(func=cmd_const)
    p = csub.add_parser("table", parents=[common], help="every c_lambda^z with the chain identity")
    p.add_argument("-z", type=_perm, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_const)
    p = csub.add_parser("schubert", parents=[common], help="coefficient of S_w in S_u S_v(lambda,k)")
    p.add_argument("-u", type=_perm, required=True)
    p.add_argument("-l", dest="lam", type=_part, required=True)
    p.add_argument("-k", type=_nonneg, required=True)
    p.add_argument("-w", type=_perm, required=True)
    p.set_defaults(func=cmd_const)

    p = sub.add_parser("poly", parents=[common], help="rank generating polynomial P_n(t)")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--json", action="store_true", help="print the coefficient list")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("insert", parents=[common], help="insertion H_(1,n) -> H_(n,1) with trace")
    p.add_argument("-x", required=True, help="word, e.g. 'u[3,4] u[2,3] u[1,2]'")
    _order_flag(p)
    p.set_defaults(func=cmd_insert)

    chk = sub.add_parser("check", help="exhaustive identity checks")
    ksub = chk.add_subparsers(dest="what", required=True)
    for name in ("symmetries", "cyclic"):
        p = ksub.add_parser(name, parents=[common])
        p.add_argument("-n", type=_positive, required=True)
        p.set_defaults(func=cmd_check)
    p = ksub.add_parser("disjoint", parents=[common],
                        help="one pair with -e/-z, or a sweep over S_n with -n")
    p.add_argument("-e", type=_perm)
    p.add_argument("-z", type=_perm)
    p.add_argument("-n", type=_positive)
    p.add_argument("--max-length", type=_nonneg, default=3)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify-paper", parents=[common], help="run every acceptance criterion")
    p.add_argument("--only", type=lambda s: [int(x) for x in s.split(",")],
                   help="comma-separated criterion numbers")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.max_n = getattr(args, "max_n", U.DEFAULT_MAX_N)
    args.max_chains = getattr(args, "max_chains", K.DEFAULT_MAX_CHAINS)
    out: list[str] = []
    try:
        args.workers = resolve_workers(getattr(args, "threads", None))
        args.func(args, out)
        code = EXIT_OK
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        code = EXIT_USAGE
    except (DomainError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=stderr)
        code = EXIT_DOMAIN
    except (InvariantError, NonTerminationError) as exc:
        print(f"internal error: {exc}", file=stderr)
        code = EXIT_INVARIANT
    except ValueError as exc:
        print(f"usage error: {exc}", file=stderr)
        code = EXIT_USAGE
    if out:
        print("\n".join(out), file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line front end: ``lehmer-norm <command> ...``.

Exit codes: 0 success, 1 verification failures, 2 usage or guard errors.
"""

from __future__ import annotations

import csv
import io
import sys

import click

from . import distribution as dist
from . import lehmer, metric, perm, verify

DECOMPOSITIONS_MAX_M = 512


class GuardError(click.ClickException):
    exit_code = 2


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except ValueError as exc:
        raise GuardError(str(exc)) from None


class _Perm(click.ParamType):
    name = "permutation"

    def convert(self, value, param, ctx):
        if isinstance(value, perm.Permutation):
            return value
        try:
            return perm.parse_permutation(value)
        except perm.PermutationError as exc:
            raise GuardError(str(exc)) from None


PERM = _Perm()


def _emit(ctx: click.Context, text: str) -> None:
    path = ctx.obj["output"]
    if path is None:
        click.echo(text, nl=False)
    else:
        with open(path, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)


@click.group()
@click.option("--invariance", type=click.Choice(["left", "right"]), default="left",
              show_default=True, help="Metric construction used by `dist`.")
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None,
              help="Write to this file instead of stdout.")
@click.pass_context
def main(ctx: click.Context, invariance: str, output: str | None) -> None:
    """Lehmer factorial norm on permutation groups."""
    ctx.obj = {"invariance": invariance, "output": output}


@main.command()
@click.argument("permutation", type=PERM)
@click.pass_context
def code(ctx, permutation):
    """Lehmer code of PERMUTATION, e.g. `3,1,2`."""
    _emit(ctx, f"{lehmer.lehmer_code(permutation)}\n")


@main.command()
@click.argument("code_text", metavar="CODE")
@click.pass_context
def decode(ctx, code_text):
    """Permutation with the given Lehmer CODE, e.g. `[2,0,0]`."""
    c = _guard(lehmer.parse_code, code_text)
    _emit(ctx, f"{lehmer.decode(c)}\n")


@main.command(name="norm")
@click.argument("permutation", type=PERM, required=False)
@click.option("--rank", type=int, default=None, help="Lexicographic rank instead of a word.")
@click.option("--degree", type=int, default=None, help="Degree n used with --rank.")
@click.pass_context
def norm_cmd(ctx, permutation, rank, degree):
    """LF_2 of a permutation, or of the rank given by --rank/--degree."""
    if permutation is not None:
        if rank is not None or degree is not None:
            raise GuardError("give either a permutation or --rank/--degree, not both")
        value = metric.norm(permutation)
    else:
        if rank is None or degree is None:
            raise GuardError("need a permutation or both --rank and --degree")
        value = _guard(metric.norm_of_natural, rank, degree)
    _emit(ctx, f"{value}\n")


@main.command()
@click.argument("permutation", type=PERM)
@click.pass_context
def rank(ctx, permutation):
    """0-based lexicographic rank of PERMUTATION."""
    _emit(ctx, f"{lehmer.lex_rank(permutation)}\n")


@main.command()
@click.argument("rank_value", metavar="RANK", type=int)
@click.option("--degree", type=int, required=True)
@click.pass_context
def unrank(ctx, rank_value, degree):
    """Permutation of the given degree at lexicographic RANK."""
    _emit(ctx, f"{_guard(lehmer.lex_unrank, rank_value, degree)}\n")


@main.command(name="dist")
@click.argument("sigma", type=PERM)
@click.argument("tau", type=PERM)
@click.pass_context
def dist_cmd(ctx, sigma, tau):
    """Distance between SIGMA and TAU."""
    value = _guard(metric.distance, sigma, tau, ctx.obj["invariance"])
    _emit(ctx, f"{value}\n")


@main.command()
@click.argument("permutation", type=PERM)
@click.argument("s", type=int)
@click.pass_context
def delta(ctx, permutation, s):
    """Signed norm change from swapping positions S and S+1."""
    _emit(ctx, f"{_guard(metric.transposition_delta, permutation, s)}\n")


@main.command()
@click.option("--max", "max_m", type=int, required=True, help="Largest m.")
@click.option("--method", type=click.Choice(["recursion", "definition", "permutations"]),
              default="recursion", show_default=True)
@click.option("--csv", "as_csv", is_flag=True, help="Output is always CSV; the flag is accepted.")
@click.pass_context
def distribution(ctx, max_m, method, as_csv):
    """CSV `m,s,d` for m = 1..MAX."""
    rows = _guard(dist.distribution_counts, max_m, method)
    lines = ["m,s,d"] + [f"{m},{s},{d}" for m, s, d in rows]
    _emit(ctx, "\n".join(lines) + "\n")


def decomposition_rows(m: int) -> list[list[str]]:
    rows = []
    for dec in dist.enumerate_decompositions(m):
        sigma = dist.decomposition_to_permutation(dec)
        rows.append([str(m), dec.sum_expression(), str(lehmer.lehmer_code(sigma)),
                     str(dec), f"S_{dec.k}({m})"])
    return rows


@main.command()
@click.argument("m", type=int)
@click.option("--header/--no-header", default=True, show_default=True)
@click.pass_context
def decompositions(ctx, m, header):
    """Every decomposition of M with its Lehmer code and set label."""
    if not 1 <= m <= DECOMPOSITIONS_MAX_M:
        raise GuardError(f"m must be in [1, {DECOMPOSITIONS_MAX_M}], got {m}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if header:
        writer.writerow(["m", "decomposition", "code", "blocks", "set"])
    writer.writerows(decomposition_rows(m))
    _emit(ctx, buf.getvalue())


@main.command(name="verify")
@click.option("--suite", type=click.Choice(sorted(verify.SUITES)), required=True)
@click.option("--scope", type=int, required=True, help="Degree n (norm, lemmas) or M (distribution).")
@click.option("--json", "as_json", is_flag=True, help="Emit the structured report.")
@click.pass_context
def verify_cmd(ctx, suite, scope, as_json):
    """Run a verification suite; exit 1 if any property fails."""
    report = _guard(verify.run_suite, suite, scope)
    _emit(ctx, report.to_json() if as_json else report.to_text())
    ctx.exit(0 if report.passed else 1)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

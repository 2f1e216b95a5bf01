from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from typer.rich_utils import (
    ALIGN_ERRORS_PANEL,
    ERRORS_PANEL_TITLE,
    STYLE_ERRORS_PANEL_BORDER,
    _get_rich_console,
)
from typing_extensions import Annotated

from blockrb.audit import admissibility_matrix, run_all
from blockrb.config import SYMBOLIC, RunConfig, parse_config
from blockrb.derived import Product, structure_constants, structure_constants_to_json
from blockrb.formatting import admissibility_table, summary_table
from blockrb.kernel import window_sweep
from blockrb.printed import LINE_VARIANTS, SEARCH_VARIANTS, cross_check
from blockrb.report import ReportWriteError, emit_json, emit_report
from blockrb.search import SearchSpaceError, feq_solution_search
from blockrb.validators import ConfigError

logger = logging.getLogger("blockrb")

typer_app = typer.Typer(
    help="Exact checks of Rota-Baxter operators on Block-type Lie algebras.",
    no_args_is_help=True,
)

QOpt = Annotated[Optional[str], typer.Option("--q", help="Rational q such as 1/2, or 'symbolic'.")]
AlphaOpt = Annotated[Optional[str], typer.Option("--alpha", help="Offset alpha (defaults to q).")]
BetaOpt = Annotated[Optional[str], typer.Option("--beta", help="Offset beta (defaults to q).")]
KOpt = Annotated[Optional[int], typer.Option("--k", help="First degree component k.")]
KPrimeOpt = Annotated[Optional[int], typer.Option("--kprime", help="Second degree component k'.")]
WindowOpt = Annotated[Optional[int], typer.Option("--window", help="Window half-width N: m, i in [-N, N].")]
ProfileOpt = Annotated[
    Optional[str],
    typer.Option("--profile", help="Profile shorthand, e.g. constant:1 or '-1@exp:2|0@kronecker:0:1'."),
]
VariantOpt = Annotated[
    Optional[str], typer.Option("--variant", help="Comma separated equations: FEQ_NONRES, FEQ_PLUS, KERNEL.")
]
ClaimsOpt = Annotated[Optional[str], typer.Option("--claims", help="Comma separated claim ids, or 'all'.")]
ValuesOpt = Annotated[Optional[str], typer.Option("--values", help="Comma separated search values.")]
SearchWindowOpt = Annotated[
    Optional[int], typer.Option("--search-window", help="Search indices i in [-N, N], N <= 4.")
]
BoundaryOpt = Annotated[
    Optional[str], typer.Option("--feq-boundary", help="'skip' pairs leaving the window, or treat g as 'zero'.")
]
CapOpt = Annotated[Optional[int], typer.Option("--witness-cap", help="Witnesses kept per verdict.")]
SeedOpt = Annotated[Optional[int], typer.Option("--seed", help="Seed for randomized identity checks.")]
OutOpt = Annotated[Optional[Path], typer.Option("--out", help="Write JSON here instead of standard output.")]
ConfigOpt = Annotated[Optional[Path], typer.Option("--config", help="JSON file of configuration values.")]
VerboseOpt = Annotated[Optional[bool], typer.Option("--verbose/--quiet", help="Log progress to standard error.")]


def show_error(message: str, code: int) -> None:
    error = Panel(
        message,
        border_style=STYLE_ERRORS_PANEL_BORDER,
        title=ERRORS_PANEL_TITLE,
        title_align=ALIGN_ERRORS_PANEL,
    )
    console = _get_rich_console(stderr=True)
    console.print(error)
    raise typer.Exit(code=code)


def configure_logging(verbose: bool) -> None:
    handler = RichHandler(console=Console(stderr=True), show_path=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.handlers[:] = [handler]
    logger.setLevel(logging.INFO if verbose else logging.WARNING)
    logger.propagate = False


def load_config(config_file: Optional[Path], **options: Any) -> RunConfig:
    try:
        config = parse_config(options, config_file)
    except ConfigError as e:
        show_error(f"Invalid configuration: [bold]{e.field}[/bold]: {e.message}", code=2)
    configure_logging(config.verbose)
    logger.info("configuration: %s", config.to_json())
    return config


def table_console(out: Optional[Path]) -> Console:
    """Rich tables share standard output only when the JSON went to a file."""
    return Console() if out is not None else Console(stderr=True)


def run_and_emit(produce: Callable[[], Dict[str, Any]], out: Optional[Path]) -> None:
    try:
        emit_json(produce(), out)
    except ReportWriteError as e:
        show_error(str(e), code=3)


@typer_app.command()
def sweep(
    q: QOpt = None,
    alpha: AlphaOpt = None,
    beta: BetaOpt = None,
    k: KOpt = None,
    kprime: KPrimeOpt = None,
    window: WindowOpt = None,
    profile: ProfileOpt = None,
    witness_cap: CapOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
    verbose: VerboseOpt = None,
):
    """Evaluate the Rota-Baxter residual of an operator on every basis pair of a window."""
    cfg = load_config(
        config, q=q, alpha=alpha, beta=beta, k=k, kprime=kprime, window=window,
        profile=profile, witness_cap=witness_cap, out=out, verbose=verbose,
    )
    run_and_emit(
        lambda: window_sweep(cfg.params(), cfg.operator(), cfg.window_box(), cfg.witness_cap).to_json(),
        cfg.out,
    )


@typer_app.command()
def audit(
    q: QOpt = None,
    alpha: AlphaOpt = None,
    beta: BetaOpt = None,
    k: KOpt = None,
    kprime: KPrimeOpt = None,
    window: WindowOpt = None,
    profile: ProfileOpt = None,
    variant: VariantOpt = None,
    claims: ClaimsOpt = None,
    witness_cap: CapOpt = None,
    seed: SeedOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
    verbose: VerboseOpt = None,
):
    """Run the registered claim checkers and write an audit report."""
    cfg = load_config(
        config, q=q, alpha=alpha, beta=beta, k=k, kprime=kprime, window=window, profile=profile,
        variants=variant, claims=claims, witness_cap=witness_cap, seed=seed, out=out, verbose=verbose,
    )
    report = run_all(cfg.audit_settings(), cfg.claims, cfg.to_json())
    tables = table_console(cfg.out)
    try:
        emit_report(report, cfg.out, Console(), tables)
    except ReportWriteError as e:
        show_error(str(e), code=3)
    if report.verdicts:
        tables.print(summary_table(report.summary_frame()))


@typer_app.command()
def table(
    q: QOpt = None,
    k: KOpt = None,
    kprime: KPrimeOpt = None,
    window: WindowOpt = None,
    variant: VariantOpt = None,
    witness_cap: CapOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
    verbose: VerboseOpt = None,
):
    """Print the admissibility of the canonical profile families in both regimes."""
    cfg = load_config(
        config, q=q, k=k, kprime=kprime, window=window, variants=variant,
        witness_cap=witness_cap, out=out, verbose=verbose,
    )
    matrices = []
    for equation in cfg.variants:
        if equation not in LINE_VARIANTS:
            show_error(f"Invalid configuration: [bold]variants[/bold]: {equation.value} is not a table variant", code=2)
        matrices.append(
            admissibility_matrix(cfg.window_box(), cfg.q_scalar, cfg.k, cfg.kprime, equation, cfg.witness_cap)
        )
    payload = {
        matrix.variant.value: [verdict.to_json() for verdict in matrix.verdicts.values()] for matrix in matrices
    }
    run_and_emit(lambda: {"config": cfg.to_json(), "tables": payload}, cfg.out)
    tables = table_console(cfg.out)
    for matrix in matrices:
        tables.print(admissibility_table(matrix.frame, title=f"Admissibility ({matrix.variant.value})"))


@typer_app.command("solve-feq")
def solve_feq(
    q: QOpt = None,
    kprime: KPrimeOpt = None,
    variant: VariantOpt = None,
    values: ValuesOpt = None,
    search_window: SearchWindowOpt = None,
    feq_boundary: BoundaryOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
    verbose: VerboseOpt = None,
):
    """Brute-force every profile on a small window that solves the functional equation."""
    cfg = load_config(
        config, q=q, kprime=kprime, variants=variant, values=values,
        search_window=search_window, feq_boundary=feq_boundary, out=out, verbose=verbose,
    )
    if cfg.q == SYMBOLIC:
        show_error("Invalid configuration: [bold]q[/bold]: the search needs a rational q", code=2)
    equation = cfg.variants[0]
    if equation not in SEARCH_VARIANTS:
        show_error(f"Invalid configuration: [bold]variants[/bold]: cannot search {equation.value}", code=2)
    try:
        result = feq_solution_search(
            cfg.search_range(), cfg.values, cfg.q, cfg.kprime, equation, cfg.feq_boundary
        )
    except SearchSpaceError as e:
        show_error(f"Invalid configuration: [bold]values[/bold]: {e}", code=2)
    run_and_emit(result.to_json, cfg.out)


@typer_app.command("cross-check")
def cross_check_command(
    q: QOpt = None,
    k: KOpt = None,
    kprime: KPrimeOpt = None,
    window: WindowOpt = None,
    profile: ProfileOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
    verbose: VerboseOpt = None,
):
    """Compare the printed scalar equation with the kernel residual pair by pair."""
    cfg = load_config(
        config, q=q, k=k, kprime=kprime, window=window, profile=profile, out=out, verbose=verbose,
    )
    run_and_emit(lambda: cross_check(cfg.params(), cfg.operator(), cfg.window_box()).to_json(), cfg.out)


@typer_app.command()
def derived(
    product: Annotated[Product, typer.Argument(help="Which induced product to export.")] = Product.PRELIE,
    q: QOpt = None,
    k: KOpt = None,
    kprime: KPrimeOpt = None,
    window: WindowOpt = None,
    profile: ProfileOpt = None,
    out: OutOpt = None,
    config: ConfigOpt = None,
    verbose: VerboseOpt = None,
):
    """Export the structure constants of the pre-Lie product or the deformed bracket."""
    cfg = load_config(
        config, q=q, k=k, kprime=kprime, window=window, profile=profile, out=out, verbose=verbose,
    )

    def produce() -> Dict[str, Any]:
        frame = structure_constants(cfg.params(), cfg.operator(), cfg.window_box(), product)
        return {"config": cfg.to_json(), "product": product.value, "rows": structure_constants_to_json(frame)}

    run_and_emit(produce, cfg.out)


if __name__ == "__main__":
    typer_app()

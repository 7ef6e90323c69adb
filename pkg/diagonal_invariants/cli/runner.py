"""Run one subcommand: compute, write the reports and the metadata file, and turn the verdict into an exit status."""

import logging
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Any

import orjson
import pandas as pd
from tqdm import tqdm

from diagonal_invariants.base import get_settings
from diagonal_invariants.charlab import (
    EXPECTED_CYCLE_CLASSES,
    EXPECTED_TABLE1,
    EXPECTED_TABLE2,
    builtin_table,
    cycle_characters,
    describe_cycle_representation,
    frobenius_identity_rows,
    table1,
    table2,
    table3,
)
from diagonal_invariants.graphlab import SimpleGraph, enumerate_graphs, iso_classes
from diagonal_invariants.koszul import e1_dataframe, e1_page, expected_multitor_dims, multitor_formula, multitor_oracle
from diagonal_invariants.resolver import (
    ASSERTED,
    PARAMETERS,
    DegreeSummary,
    ExactnessReport,
    ExactnessRow,
    IdealComparison,
    MapComplex,
    atilde_kills_restrictions,
    atilde_matches_D,
    compare_degree,
    comparison_dataframe,
    degree_rows,
    exact_l211_sequence,
    prop211_complex,
    resolution_complex,
)
from diagonal_invariants.surfcalc import LineBundle, SurfaceNumerics, euler_report, regularity_bounds

from .config import RunConfig
from .reports import dumps, write_metadata, write_report

logger: logging.Logger = logging.getLogger(__name__)

Outcome = tuple[list[Path], bool | None]

DEFAULT_DEGREES: dict[tuple[str, int], int] = {
    ("resolution-check", 3): 10,
    ("resolution-check", 4): 6,
    ("invprod-check", 3): 8,
    ("invprod-check", 4): 6,
    ("invprod-check", 5): 6,
    ("inv2k-check", 2): 8,
    ("inv2k-check", 3): 8,
    ("haiman-check", 3): 8,
    ("multitor-check", 3): 4,
    ("multitor-check", 4): 4,
}

# Companion complexes of the three-point resolution are checked up to this degree.
COMPANION_DEGREE_CAP = 8

# Graphs with more edges make the Koszul oracle too large for a desk run.
MULTITOR_MAX_EDGES = 4


def run(config: RunConfig) -> int:
    """Exit 0 iff every asserted check passed, 1 on a failed check, 2 on an error."""
    logger.info(f"Running '{config.command}'")
    try:
        match config.command:
            case "graphs":
                files, verdict = _run_graphs(config)
            case "chartables":
                files, verdict = _run_chartables(config)
            case "table1":
                files, verdict = _run_table1(config)
            case "table2":
                files, verdict = _run_table2(config)
            case "table3":
                files, verdict = _run_table3(config)
            case "multitor-check":
                files, verdict = _run_multitor_check(config)
            case "resolution-check":
                files, verdict = _run_resolution_check(config)
            case "invprod-check" | "inv2k-check" | "haiman-check":
                files, verdict = _run_ideal_check(config)
            case "euler":
                files, verdict = _run_euler(config)
            case "regbound":
                files, verdict = _run_regbound(config)
        metadata = write_metadata(config, files, verdict)
    except Exception as error:
        logger.error(f"'{config.command}' failed: {type(error).__name__}: {error}")
        return 2

    logger.info(f"'{config.command}' finished with verdict {verdict}; metadata in {metadata}")
    return 1 if verdict is False else 0


def _map_jobs(function: Callable[..., Any], arguments: list[tuple], jobs: int, desc: str) -> list[Any]:
    """Apply `function` to every argument tuple, in a process pool when jobs > 1; results keep the argument order."""
    if jobs == 1:
        return [function(*args) for args in tqdm(arguments, desc=desc)]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        futures = [executor.submit(function, *args) for args in arguments]
        return [future.result() for future in tqdm(futures, desc=desc)]


def _degree_cap(config: RunConfig, n: int) -> int:
    if config.deg is not None:
        return config.deg
    return DEFAULT_DEGREES.get((config.command, n), 4)


def _run_graphs(config: RunConfig) -> Outcome:
    n = config.n or 4
    total = n * (n - 1) // 2
    sizes = [config.l] if config.l is not None else list(range(1, total + 1))
    counts: dict[int, dict[str, int]] = {}
    rows: list[dict[str, Any]] = []
    for size in tqdm(sizes, desc="graphs"):
        graphs = enumerate_graphs(n, size)
        classes = iso_classes(graphs)
        counts[size] = {"graphs": len(graphs), "classes": len(classes)}
        logger.info(f"n={n}, l={size}: {len(graphs)} graphs in {len(classes)} classes")
        for iso in classes:
            graph = iso.representative
            rows.append(
                {
                    "n": n,
                    "l": size,
                    "representative": str(graph),
                    "name": iso.name or "",
                    "size": iso.size,
                    "v": graph.v,
                    "k": graph.k,
                    "cycle_rank": graph.cycle_rank,
                }
            )
    payload = {"n": n, "counts": counts, "classes": rows}
    return write_report(config.out, "graphs", payload, pd.DataFrame(rows), config.format), None


def _named_classes(n: int) -> list[SimpleGraph]:
    graphs = [g for size in range(1, n * (n - 1) // 2 + 1) for g in enumerate_graphs(n, size)]
    return [iso.representative for iso in iso_classes(graphs) if iso.name is not None]


def _run_chartables(config: RunConfig) -> Outcome:
    n = config.n or 4
    tables: dict[str, Any] = {}
    frames: list[pd.DataFrame] = []
    complete = True
    for graph in tqdm(_named_classes(n), desc="chartables"):
        name = graph.name() or str(graph)
        table = builtin_table(graph, cycle_characters(graph).group)
        complete &= table.is_complete()
        tables[name] = table.to_dict() | {"complete": table.is_complete()}
        frames.append(table.to_dataframe().assign(graph=name))

    classifications = {name: describe_cycle_representation(SimpleGraph.named(name)) for name in EXPECTED_CYCLE_CLASSES}
    classified = classifications == EXPECTED_CYCLE_CLASSES
    frobenius = {m: [row.model_dump() for row in frobenius_identity_rows(m)] for m in range(2, 8)}
    identity = all(row["standard_plus_exterior"] == row["edge_trace"] == row["expected"] for rows in frobenius.values() for row in rows)
    if not classified:
        logger.warning(f"Cycle representations decompose as {classifications}, expected {EXPECTED_CYCLE_CLASSES}")

    payload = {
        "n": n,
        "tables": tables,
        "cycle_representations": classifications,
        "frobenius_identity": frobenius,
        "checks": {"complete": complete, "cycle_representations": classified, "frobenius_identity": identity},
    }
    table = pd.concat(frames, ignore_index=True) if frames else None
    return write_report(config.out, "chartables", payload, table, config.format), complete and classified and identity


def _run_table1(config: RunConfig) -> Outcome:
    table = table1(max_weight=config.deg or 6)
    verdict = table.matches_expected()
    if not verdict:
        logger.warning(f"Table of S^lambda invariants differs from the expected values: {table.rows}, unlisted {table.unlisted}")
    payload = table.model_dump() | {"expected": {name: list(values) for name, values in EXPECTED_TABLE1.items()}, "verdict": verdict}
    return write_report(config.out, "table1", payload, table.to_dataframe(), config.format), verdict


def _run_table2(config: RunConfig) -> Outcome:
    rows = table2(config.n or 4)
    mismatches = {row.graph: row.edge_sign for row in rows if row.graph in EXPECTED_TABLE2 and row.edge_sign != EXPECTED_TABLE2[row.graph]}
    verdict = not mismatches if config.n in (None, 4) else None
    if mismatches:
        logger.warning(f"Edge-sign labels differ from the expected ones for {sorted(mismatches)}: {mismatches}")
    payload = {"rows": rows, "expected": EXPECTED_TABLE2, "verdict": verdict}
    return write_report(config.out, "table2", payload, pd.DataFrame([row.model_dump() for row in rows]), config.format), verdict


def _run_table3(config: RunConfig) -> Outcome:
    n = config.n or 4
    max_q = config.deg or 6
    entries = table3(d=2, n=n, max_q=max_q)
    table = pd.DataFrame([{"graph": e.graph, "q": -e.q, "terms": e.describe()} for e in entries])
    files = write_report(config.out, "table3", {"n": n, "entries": entries}, table, config.format)

    # E1 terms at q = 0 also list the acyclic classes that contribute
    pages = {p: e1_page(n, p, 0) for p in range(1, n * (n - 1) // 2 + 1)}
    e1 = pd.concat([e1_dataframe(terms, p, 0) for p, terms in pages.items()], ignore_index=True)
    files += write_report(config.out, "e1-q0", {"n": n, "pages": pages}, e1, config.format)
    return files, None


def _multitor_job(n: int, edges: tuple[tuple[int, int], ...], q: int, degree_bound: int) -> dict[str, Any]:
    graph = SimpleGraph(n=n, edges=edges)
    oracle = multitor_oracle(graph, q, degree_bound)
    expected = expected_multitor_dims(graph, q, degree_bound)
    invariants = multitor_formula(graph, q).invariants if 1 <= graph.cycle_rank and q <= 2 * graph.cycle_rank else 0
    return {"graph": str(graph), "name": graph.name() or "", "q": q, "oracle": oracle, "expected": expected, "invariants": invariants}


def _run_multitor_check(config: RunConfig) -> Outcome:
    n = config.n or 3
    degree_bound = _degree_cap(config, n)
    sizes = range(1, min(n * (n - 1) // 2, MULTITOR_MAX_EDGES) + 1)
    graphs = [iso.representative for size in sizes for iso in iso_classes(enumerate_graphs(n, size))]
    arguments = [(n, graph.edges, q, degree_bound) for graph in graphs for q in range(2 * graph.l + 1)]
    results = _map_jobs(_multitor_job, arguments, config.jobs, "multitor")

    rows = [
        {
            "graph": r["graph"],
            "name": r["name"],
            "q": r["q"],
            "degree": t,
            "oracle": r["oracle"][t],
            "expected": r["expected"][t],
            "invariants": r["invariants"],
            "agree": r["oracle"][t] == r["expected"][t],
        }
        for r in results
        for t in range(degree_bound + 1)
    ]
    verdict = all(row["agree"] for row in rows)
    if not verdict:
        logger.warning(f"Multitor oracle disagrees with the closed form at {sum(not row['agree'] for row in rows)} points")
    payload = {"n": n, "degree_cap": degree_bound, "rows": rows, "verdict": verdict}
    return write_report(config.out, "multitor-report", payload, pd.DataFrame(rows), config.format), verdict


@lru_cache(maxsize=None)
def _complex(name: str, n: int) -> MapComplex:
    match name:
        case "resolution":
            return resolution_complex(n)
        case "prop211":
            return prop211_complex()
        case "exact-l211":
            return exact_l211_sequence()
    raise ValueError(f"Unknown complex: {name}")


def _exactness_job(name: str, n: int, degree: int) -> tuple[list[ExactnessRow], DegreeSummary]:
    """Rows of one degree, read from and written to the settings cache directory when one is set."""
    cache_dir = get_settings().cache_dir
    path = cache_dir / f"{name}-{n}-degree{degree}.json" if cache_dir is not None else None
    if path is not None and path.exists():
        cached = orjson.loads(path.read_bytes())
        logger.debug(f"Using cached rows from {path}")
        return [ExactnessRow.model_validate(row) for row in cached["rows"]], DegreeSummary.model_validate(cached["summary"])
    rows, summary = degree_rows(_complex(name, n), degree)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(dumps({"rows": rows, "summary": summary}))
    return rows, summary


def _exactness_report(name: str, n: int, degree_cap: int, jobs: int) -> ExactnessReport:
    complex_ = _complex(name, n)
    report = ExactnessReport(name=complex_.name, n=n, degree_cap=degree_cap, constants=complex_.constants)
    for rows, summary in _map_jobs(_exactness_job, [(name, n, t) for t in range(degree_cap + 1)], jobs, complex_.name):
        report.per_degree.extend(rows)
        report.summaries.append(summary)
    logger.info(f"{complex_.name}: {'exact' if report.verdict else 'NOT exact'} in degrees 0..{degree_cap}")
    return report


def _run_resolution_check(config: RunConfig) -> Outcome:
    n = config.n or 3
    degree_cap = _degree_cap(config, n)
    checks = [("resolution", degree_cap)]
    if n == 3:
        checks += [("prop211", min(degree_cap, COMPANION_DEGREE_CAP)), ("exact-l211", min(degree_cap, COMPANION_DEGREE_CAP))]

    files: list[Path] = []
    verdict = True
    for name, cap in checks:
        report = _exactness_report(name, n, cap, config.jobs)
        verdict &= report.verdict
        filename = "resolution-report" if name == "resolution" else f"{name}-report"
        files += write_report(config.out, filename, report.to_dict(), report.to_dataframe(), config.format)

    atilde_degree = min(degree_cap, 3)
    atilde = {"degree": atilde_degree, "seed": config.seed, "kills_restrictions": atilde_kills_restrictions(n, atilde_degree, config.seed)}
    if n == 3:
        atilde["matches_D"] = atilde_matches_D(atilde_degree, config.seed)
    if not all(value for key, value in atilde.items() if key in ("kills_restrictions", "matches_D")):
        logger.warning(f"Second differential on diagonal data fails its checks: {atilde}")
        verdict = False
    files += write_report(config.out, "atilde-report", atilde, None, config.format)
    return files, verdict


def _run_ideal_check(config: RunConfig) -> Outcome:
    kind = config.command.removesuffix("-check")
    sizes = [config.n] if config.n is not None else sorted(ASSERTED[kind])
    parameters = [config.k] if config.k is not None else sorted(PARAMETERS[kind])

    arguments = []
    for n, parameter in product(sizes, parameters):
        degree_cap = _degree_cap(config, n)
        arguments += [(kind, n, parameter, t, degree_cap) for t in range(degree_cap + 1)]
    rows: list[IdealComparison] = _map_jobs(compare_degree, arguments, config.jobs, kind)

    asserted = [row for row in rows if not row.experiment]
    experiment = len(asserted) < len(rows)
    if experiment:
        logger.info(f"{kind} rows for n outside {sorted(ASSERTED[kind])} are an EXPERIMENT and do not affect the verdict")
    verdict = all(row.agree for row in asserted) if asserted else None
    if verdict is False:
        logger.warning(f"{kind}: dimensions differ at {[(row.n, row.parameter, row.degree) for row in asserted if not row.agree]}")
    payload = {"check": kind, "experiment": experiment, "rows": [row.model_dump() | {"agree": row.agree} for row in rows], "verdict": verdict}
    return write_report(config.out, f"{kind}-report", payload, comparison_dataframe(rows), config.format), verdict


def _run_euler(config: RunConfig) -> Outcome:
    if config.surface is None:
        raise ValueError("'euler' requires --surface")
    surface = SurfaceNumerics.load(config.surface)
    L = surface.bundle("L")
    A = surface.bundle("A") if "A" in surface.bundles else LineBundle()
    reports = [euler_report(surface, L, A, n) for n in ([config.n] if config.n is not None else [3, 4])]
    table = pd.DataFrame([{"n": r.n, "term": name, "value": value} for r in reports for name, value in r.terms.items()])
    payload = {"surface": surface.name, "c2": surface.c2, "reports": reports}
    return write_report(config.out, "euler-report", payload, table, config.format), None


def _run_regbound(config: RunConfig) -> Outcome:
    report = regularity_bounds(config.n or 3, config.k or 1, mode=config.mode, w=config.w, r=config.r, m0=config.m0)
    payload = report.model_dump()
    return write_report(config.out, "regbound-report", payload, pd.DataFrame([payload]), config.format), None

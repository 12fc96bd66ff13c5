"""Command-line front end.

Three subcommands: ``effect`` (standardized group difference with all
conversion identities), ``fit`` (coefficient table of the underlying
regression) and ``hist`` (text histogram of the response column). Output is
plain text or a JSON document with fixed top-level keys
{config, data_summary, coefficients, effect, distributions}.

Exit codes: 0 success, 2 input/data errors, 3 numeric/model errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .dataio import histogram, load_column, load_csv
from .distributions import PValueResult, f_upper_p, t_two_sided_p
from .effects import d_from_beta, effect_report, f_squared_from_r2
from .errors import DataError, NumericError
from .regression import (
    build_design,
    coefficient_names,
    fit_fwl,
    fit_monolithic,
    group_summaries,
    standard_errors,
)

EXIT_OK = 0
EXIT_DATA = 2
EXIT_NUMERIC = 3


@dataclass(frozen=True)
class AnalysisConfig:
    input_path: str
    delimiter: str = ";"
    response_col: str = ""
    group_col: str = ""
    covariate_cols: tuple[str, ...] = ()
    reference_level: str | None = None
    output_format: str = "text"
    precision: int = 7


def _fmt(value: float, precision: int) -> str:
    return format(value, f".{precision}g")


def _precision_arg(text: str) -> int:
    value = int(text)
    if not 1 <= value <= 15:
        raise argparse.ArgumentTypeError("precision must be between 1 and 15")
    return value


def _covariates_arg(text: str) -> tuple[str, ...]:
    return tuple(c.strip() for c in text.split(",") if c.strip())


def _edges_arg(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(c) for c in text.split(",") if c.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse bin edges from {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupeffect",
        description="Covariate-adjusted effect sizes for two-group comparisons.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    io_parent = argparse.ArgumentParser(add_help=False)
    io_parent.add_argument("--data", required=True, help="input delimited text file")
    io_parent.add_argument("--delimiter", default=";", help="field separator (default ';')")
    io_parent.add_argument("--response", required=True, help="response column name")
    io_parent.add_argument("--format", choices=("text", "json"), default="text")
    io_parent.add_argument("--precision", type=_precision_arg, default=7,
                           help="significant digits in text output (1-15, default 7)")

    model_parent = argparse.ArgumentParser(add_help=False)
    model_parent.add_argument("--group", required=True, help="binary group column name")
    model_parent.add_argument("--covariates", type=_covariates_arg, default=(),
                              help="comma-separated covariate column names")
    model_parent.add_argument("--ref-level", default=None,
                              help="group label to treat as group 1 (reference)")

    sub.add_parser("effect", parents=[io_parent, model_parent],
                   help="standardized group mean difference with p-value and f^2")
    sub.add_parser("fit", parents=[io_parent, model_parent],
                   help="coefficient table of the underlying regression")
    hist = sub.add_parser("hist", parents=[io_parent],
                          help="histogram of the response column")
    hist.add_argument("--edges", type=_edges_arg, default=None,
                      help="comma-separated bin edges (default: unit-width bins)")
    return parser


def _config_from_args(args) -> AnalysisConfig:
    return AnalysisConfig(
        input_path=args.data,
        delimiter=args.delimiter,
        response_col=args.response,
        group_col=getattr(args, "group", ""),
        covariate_cols=tuple(getattr(args, "covariates", ())),
        reference_level=getattr(args, "ref_level", None),
        output_format=args.format,
        precision=args.precision,
    )


def _config_dict(config: AnalysisConfig) -> dict:
    return {
        "input_path": config.input_path,
        "delimiter": config.delimiter,
        "response": config.response_col,
        "group": config.group_col,
        "covariates": list(config.covariate_cols),
        "reference_level": config.reference_level,
        "output_format": config.output_format,
        "precision": config.precision,
    }


def _data_summary(ds, design) -> dict:
    g1, g2 = design.group_labels
    return {
        "source": ds.source,
        "rows_used": ds.n_rows,
        "dropped_rows": ds.dropped_rows,
        "group1": g1,
        "group2": g2,
        "n1": design.n1,
        "n2": design.n2,
        "dummy_mapping": {g1: 0, g2: 1},
        "reference_level": g1,
        "covariates": list(design.covariate_names),
    }


def _analyze(config: AnalysisConfig, fitter):
    ds = load_csv(
        config.input_path,
        response_col=config.response_col,
        group_col=config.group_col,
        covariate_cols=config.covariate_cols,
        delimiter=config.delimiter,
    )
    design = build_design(ds, reference_level=config.reference_level)
    fit = fitter(design)
    return ds, design, fit


def _report_json(config, ds, design, fit, report) -> dict:
    names = coefficient_names(design)
    estimates = np.concatenate([fit.delta1_hat, fit.delta2_hat])
    ses = standard_errors(design, fit)
    tvals = estimates / ses
    table = [
        {
            "name": name,
            "estimate": float(est),
            "std_error": float(se),
            "t_value": float(tv),
            "p_value": t_two_sided_p(float(tv), design.df),
        }
        for name, est, se, tv in zip(names, estimates, ses, tvals)
    ]
    g1, g2 = group_summaries(design, fit.y_star)
    sign = -1.0 if fit.beta1 > 0 else 1.0  # d has group1 - group2 in the numerator
    f2_from_r2 = f_squared_from_r2(fit.r_squared, fit.r0_squared)
    d_routes = {
        "from_group_summaries": report.d,
        "from_coefficient": sign * d_from_beta(fit.beta1, math.sqrt(fit.sigma2_hat)),
        "from_f_squared": sign * math.sqrt(f2_from_r2 * report.gamma * design.df),
    }
    p_results = [
        PValueResult(statistic=report.t, df1=report.df, df2=None,
                     p_two_sided=report.p_value),
        PValueResult(statistic=report.f_stat, df1=report.u, df2=report.v,
                     p_two_sided=f_upper_p(report.f_stat, report.u, report.v)),
    ]
    return {
        "config": _config_dict(config),
        "data_summary": _data_summary(ds, design),
        "coefficients": {
            "table": table,
            "sigma_hat": math.sqrt(fit.sigma2_hat),
            "r_squared": fit.r_squared,
            "r0_squared": fit.r0_squared,
            "df": fit.df,
        },
        "effect": {
            "d": report.d,
            "t": report.t,
            "p_value": report.p_value,
            "f_squared": report.f_squared,
            "f_stat": report.f_stat,
            "gamma": report.gamma,
            "df": report.df,
            "w": report.w,
            "u": report.u,
            "v": report.v,
            "magnitude_d": report.magnitude_d,
            "magnitude_f2": report.magnitude_f2,
            "d_routes": d_routes,
            "group_summaries": {
                label: {
                    "n": s.n_rows,
                    "mean_raw": s.mean_raw,
                    "ss_raw": s.ss_raw,
                    "mean_adjusted": s.mean_adj,
                    "ss_adjusted": s.ss_adj,
                }
                for label, s in zip(design.group_labels, (g1, g2))
            },
        },
        "distributions": [
            {
                "statistic": r.statistic,
                "df1": r.df1,
                "df2": r.df2,
                "p_two_sided": r.p_two_sided,
            }
            for r in p_results
        ],
    }


def _effect_text(config, ds, design, fit, report) -> str:
    p = config.precision
    g1_label, g2_label = design.group_labels
    g1, g2 = group_summaries(design, fit.y_star)
    kind = "classic" if design.w == 0 else "covariate-adjusted"
    lines = [
        f"data: {ds.source} ({ds.n_rows} rows used, {ds.dropped_rows} dropped)",
        f"groups: {g1_label} (n={design.n1}) vs {g2_label} (n={design.n2}); "
        f"dummy = 1 for {g2_label}",
        f"covariates: {', '.join(design.covariate_names) or '(none)'} (w={design.w})",
        "",
        f"{'':<16}{'group ' + g1_label:>14}{'group ' + g2_label:>14}",
        f"{'raw mean':<16}{_fmt(g1.mean_raw, p):>14}{_fmt(g2.mean_raw, p):>14}",
        f"{'adjusted mean':<16}{_fmt(g1.mean_adj, p):>14}{_fmt(g2.mean_adj, p):>14}",
        "",
        f"d ({kind}): {_fmt(report.d, p)}  [{report.magnitude_d}]",
        f"t: {_fmt(report.t, p)}  df: {report.df}  p: {_fmt(report.p_value, p)}",
        f"f^2: {_fmt(report.f_squared, p)}  [{report.magnitude_f2}]"
        f"  F: {_fmt(report.f_stat, p)}",
        f"gamma: {_fmt(report.gamma, p)}"
        f"  sigma: {_fmt(math.sqrt(fit.sigma2_hat), p)}",
    ]
    return "\n".join(lines)


def _fit_text(config, ds, design, fit) -> str:
    p = config.precision
    names = coefficient_names(design)
    estimates = np.concatenate([fit.delta1_hat, fit.delta2_hat])
    ses = standard_errors(design, fit)
    width = max(len(n) for n in names) + 2
    lines = [
        f"data: {ds.source} ({ds.n_rows} rows used, {ds.dropped_rows} dropped)",
        f"{'coefficient':<{width}}{'estimate':>14}{'std.error':>14}"
        f"{'t value':>12}{'p value':>14}",
    ]
    for name, est, se in zip(names, estimates, ses):
        tv = est / se
        pv = t_two_sided_p(float(tv), design.df)
        lines.append(
            f"{name:<{width}}{_fmt(est, p):>14}{_fmt(se, p):>14}"
            f"{_fmt(tv, max(p - 2, 1)):>12}{_fmt(pv, max(p - 4, 1)):>14}"
        )
    lines.append(
        f"R^2: {_fmt(fit.r_squared, p)}   R0^2: {_fmt(fit.r0_squared, p)}   "
        f"sigma: {_fmt(math.sqrt(fit.sigma2_hat), p)}   df: {fit.df}"
    )
    return "\n".join(lines)


def cmd_effect(config: AnalysisConfig) -> int:
    ds, design, fit = _analyze(config, fit_fwl)
    report = effect_report(design, fit)
    if config.output_format == "json":
        print(json.dumps(_report_json(config, ds, design, fit, report), indent=2))
    else:
        print(_effect_text(config, ds, design, fit, report))
    return EXIT_OK


def cmd_fit(config: AnalysisConfig) -> int:
    ds, design, fit = _analyze(config, fit_monolithic)
    if config.output_format == "json":
        report = effect_report(design, fit)
        print(json.dumps(_report_json(config, ds, design, fit, report), indent=2))
    else:
        print(_fit_text(config, ds, design, fit))
    return EXIT_OK


def cmd_hist(config: AnalysisConfig, edges=None) -> int:
    values, dropped = load_column(
        config.input_path, config.response_col, delimiter=config.delimiter
    )
    if edges is None:
        lo = math.floor(values.min())
        hi = math.floor(values.max())
        edges = [float(e) for e in range(lo, hi + 2)]
    counts = histogram(values, edges)
    if config.output_format == "json":
        doc = {
            "config": _config_dict(config),
            "data_summary": {
                "source": config.input_path,
                "rows_used": int(len(values)),
                "dropped_rows": dropped,
            },
            "histogram": {"edges": list(edges), "counts": counts},
        }
        print(json.dumps(doc, indent=2))
    else:
        p = config.precision
        lines = [
            f"{_fmt(lo, p)},{_fmt(hi, p)},{count}"
            for lo, hi, count in zip(edges[:-1], edges[1:], counts)
        ]
        print("\n".join(lines))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config_from_args(args)
    try:
        if args.command == "effect":
            return cmd_effect(config)
        if args.command == "fit":
            return cmd_fit(config)
        return cmd_hist(config, edges=args.edges)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except DataError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (NumericError, ValueError, FloatingPointError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())

"""Weight tables, the scheme feature summary, and datasets for the two plots
(alpha bound vs. author count, and weight vs. position for every scheme)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Sequence, Union

from credit_weights.corpus import common_denominator_cells, format_decimal, format_fraction
from credit_weights.schemes import (
    InfeasibleFloor,
    Scheme,
    WeightVector,
    classify_linearity,
    equal_weights,
    geometric_weights,
    harmonic_weights,
    max_alpha,
    type1_weights,
    type2_weights,
)

Cell = Union[Fraction, str, None]

DEFAULT_MU_VALUES = (Fraction(0), Fraction(1, 100), Fraction(1, 50), Fraction(1, 20), Fraction(1, 10))

SCHEME_LABELS = {
    Scheme.EQUAL: "Equal",
    Scheme.GEOMETRIC: "Geometric",
    Scheme.HARMONIC: "Harmonic",
    Scheme.TYPE1: "Arithmetic: Type-1",
    Scheme.TYPE2: "Arithmetic: Type-2",
}


@dataclass
class ReportConfig:
    max_k: int = 10
    fig1_k: range = range(2, 11)
    mu_values: tuple[Fraction, ...] = DEFAULT_MU_VALUES
    fig2_k: int = 5
    fig2_alpha: Fraction = Fraction(1, 20)
    # k used to classify linearity in the features table; needs k >= 3
    features_k: int = 5


@dataclass
class ReportTable:
    title: str
    column_labels: list[str]
    rows: list[tuple[str, list[Cell]]]

    def to_csv(self, common_denominator: bool = True) -> str:
        lines = [",".join(self.column_labels)]
        for label, cells in self.rows:
            lines.append(",".join([label, *_render(cells, common_denominator)]))
        return "\n".join(lines) + "\n"

    def to_markdown(self, common_denominator: bool = True) -> str:
        lines = [
            f"**{self.title}**",
            "",
            "| " + " | ".join(self.column_labels) + " |",
            "|" + "|".join("---" for _ in self.column_labels) + "|",
        ]
        for label, cells in self.rows:
            lines.append("| " + " | ".join([label, *_render(cells, common_denominator)]) + " |")
        return "\n".join(lines) + "\n"

    def row(self, label: str) -> list[Cell]:
        for row_label, cells in self.rows:
            if row_label == label:
                return cells
        raise KeyError(label)


def _render(cells: Sequence[Cell], common_denominator: bool) -> list[str]:
    populated = [c for c in cells if isinstance(c, Fraction)]
    if populated and len(populated) == len([c for c in cells if c is not None]):
        rendered = iter(
            common_denominator_cells(populated)
            if common_denominator
            else [format_fraction(c) for c in populated]
        )
        return ["" if c is None else next(rendered) for c in cells]
    return ["" if c is None else (format_fraction(c) if isinstance(c, Fraction) else c) for c in cells]


@dataclass
class CurveDataset:
    series_label: str
    points: list[tuple[Union[int, Fraction], Fraction]]
    gaps: list[Union[int, Fraction]] = field(default_factory=list)


def _weight_table(title: str, max_k: int, fn: Callable[[int], WeightVector]) -> ReportTable:
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    columns = ["authors"] + [f"w{j}" for j in range(1, max_k + 1)]
    rows = []
    for k in range(1, max_k + 1):
        cells: list[Cell] = list(fn(k).weights)
        rows.append((str(k), cells + [None] * (max_k - k)))
    return ReportTable(title, columns, rows)


def table_type1(max_k: int = 10) -> ReportTable:
    return _weight_table("Arithmetic: Type-1 weights of individual authors", max_k, type1_weights)


def table_geometric(max_k: int = 10) -> ReportTable:
    return _weight_table("Geometric weights of individual authors", max_k, geometric_weights)


def table_harmonic(max_k: int = 10) -> ReportTable:
    """Harmonic weights; cells are reduced, and ``to_csv`` by default prints
    each row over a common denominator (H_k scaled to an integer)."""
    return _weight_table("Harmonic weights of individual authors", max_k, harmonic_weights)


def features_table(config: ReportConfig | None = None) -> ReportTable:
    config = config or ReportConfig()
    k = config.features_k
    if k < 3:
        raise ValueError("features_k must be >= 3 to distinguish linear from nonlinear")
    samples = {
        Scheme.EQUAL: (equal_weights(k), "1", "Position independent", "Fixed"),
        Scheme.GEOMETRIC: (geometric_weights(k), "2^(k-1)", "Positional", "Fixed"),
        Scheme.HARMONIC: (harmonic_weights(k), "k", "Positional", "Fixed"),
        Scheme.TYPE1: (type1_weights(k), "k", "Positional", "Fixed"),
        Scheme.TYPE2: (type2_weights(k, config.fig2_alpha), "Variable", "Positional", "Variable"),
    }
    rows = []
    for scheme, (v, ratio, position, fixed) in samples.items():
        rows.append((SCHEME_LABELS[scheme], [ratio, classify_linearity(v).value, position, fixed]))
    return ReportTable(
        "Features of different weight assignment schemes",
        ["Scheme", "w1/wk", "Linearity", "Positionality", "Weights"],
        rows,
    )


def fig1_dataset(
    k_range: Iterable[int] = range(2, 11), mu_values: Iterable[Fraction] = DEFAULT_MU_VALUES
) -> list[CurveDataset]:
    """Max alpha against author count, one series per floor ``mu``.

    Points where ``mu > 1/k`` are infeasible; they are left out and listed in
    ``gaps``.
    """
    ks = list(k_range)
    if any(k < 2 for k in ks):
        raise ValueError("k_range must start at 2 or later")
    series = []
    for mu in mu_values:
        mu = Fraction(mu)
        ds = CurveDataset(f"mu={format_fraction(mu)}", [])
        for k in ks:
            try:
                ds.points.append((k, max_alpha(k, mu).max_alpha))
            except InfeasibleFloor:
                ds.gaps.append(k)
        series.append(ds)
    return series


def fig2_dataset(k: int = 5, alpha: Fraction = Fraction(1, 20)) -> list[CurveDataset]:
    vectors = {
        Scheme.EQUAL: equal_weights(k),
        Scheme.TYPE1: type1_weights(k),
        Scheme.TYPE2: type2_weights(k, alpha),
        Scheme.GEOMETRIC: geometric_weights(k),
        Scheme.HARMONIC: harmonic_weights(k),
    }
    return [
        CurveDataset(scheme.value, [(j, w) for j, w in enumerate(v.weights, start=1)])
        for scheme, v in vectors.items()
    ]


def curves_to_csv(series: Sequence[CurveDataset], x_label: str, y_label: str) -> str:
    lines = [f"series,{x_label},{y_label},decimal"]
    for ds in series:
        for x, y in ds.points:
            lines.append(f"{ds.series_label},{format_fraction(x)},{format_fraction(y)},{format_decimal(y)}")
    return "\n".join(lines) + "\n"


def fig1_csv(config: ReportConfig | None = None) -> str:
    config = config or ReportConfig()
    return curves_to_csv(fig1_dataset(config.fig1_k, config.mu_values), "k", "max_alpha")


def fig2_csv(config: ReportConfig | None = None) -> str:
    config = config or ReportConfig()
    return curves_to_csv(fig2_dataset(config.fig2_k, config.fig2_alpha), "position", "weight")


def render_artifacts(config: ReportConfig | None = None) -> dict[str, str]:
    """All report files keyed by file name."""
    config = config or ReportConfig()
    out = {}
    for name, table in (
        ("table2", table_type1(config.max_k)),
        ("table3", table_geometric(config.max_k)),
        ("table4", table_harmonic(config.max_k)),
    ):
        out[f"{name}.csv"] = table.to_csv()
        out[f"{name}.md"] = table.to_markdown()
    out["table5.md"] = features_table(config).to_markdown()
    out["fig1.csv"] = fig1_csv(config)
    out["fig2.csv"] = fig2_csv(config)
    return out


def write_artifacts(out_dir: str | Path, config: ReportConfig | None = None) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in render_artifacts(config).items():
        path = out_dir / name
        path.write_text(text, encoding="utf-8", newline="\n")
        written.append(path)
    return written


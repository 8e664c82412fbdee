from fractions import Fraction as F
from pathlib import Path

import pytest

from credit_weights.report import (
    ReportConfig,
    features_table,
    fig1_dataset,
    fig2_dataset,
    render_artifacts,
    table_geometric,
    table_harmonic,
    table_type1,
    write_artifacts,
)
from credit_weights.schemes import alpha_matching_type1

GOLDEN = Path(__file__).parent / "golden"


def fr(*xs):
    return [F(x) for x in xs]


def populated(cells):
    return [c for c in cells if c is not None]


def test_table_type1_rows():
    t = table_type1(10)
    assert populated(t.row("5")) == fr("5/15", "4/15", "3/15", "2/15", "1/15")
    assert populated(t.row("9")) == [F(9 - i, 45) for i in range(9)]
    assert table_type1(1).rows == [("1", [F(1)])]


def test_table_geometric_rows():
    t = table_geometric(10)
    assert populated(t.row("4")) == fr("8/15", "4/15", "2/15", "1/15")
    assert t.row("10")[0] == F(512, 1023)
    assert t.row("6")[5] == F(1, 63)


def test_table_harmonic_rows():
    t = table_harmonic(10)
    assert populated(t.row("5")) == fr("60/137", "30/137", "20/137", "15/137", "12/137")
    # Printed as 252/7379, which would make the row sum 7381/7379.
    assert t.row("10")[9] == F(252, 7381)
    assert populated(t.row("1")) == [1]
    reduced = t.to_csv(common_denominator=False).splitlines()
    assert reduced[6].startswith("6,20/49,10/49,20/147,5/49,4/49,10/147")


@pytest.mark.parametrize("table", [table_type1(10), table_geometric(10), table_harmonic(10)], ids=["t1", "geo", "harm"])
def test_rows_have_k_cells_and_sum_to_one(table):
    for label, cells in table.rows:
        assert len(populated(cells)) == int(label)
        assert sum(populated(cells)) == 1


@pytest.mark.parametrize("name, fn", [("table2", table_type1), ("table3", table_geometric), ("table4", table_harmonic)])
def test_csv_matches_golden(name, fn):
    assert fn(10).to_csv() == (GOLDEN / f"{name}.csv").read_text()


def test_markdown_layout():
    md = table_type1(3).to_markdown().splitlines()
    assert md[2] == "| authors | w1 | w2 | w3 |"
    assert md[5] == "| 2 | 2/3 | 1/3 |  |"


def test_features_table():
    t = features_table()
    assert t.row("Equal") == ["1", "Linear", "Position independent", "Fixed"]
    assert t.row("Geometric") == ["2^(k-1)", "Nonlinear", "Positional", "Fixed"]
    assert t.row("Harmonic") == ["k", "Nonlinear", "Positional", "Fixed"]
    assert t.row("Arithmetic: Type-1") == ["k", "Linear", "Positional", "Fixed"]
    assert t.row("Arithmetic: Type-2") == ["Variable", "Linear", "Positional", "Variable"]


def test_fig1_mu_zero():
    (ds,) = fig1_dataset(range(2, 11), [F(0)])
    assert ds.points == [(k, F(2, k * (k - 1))) for k in range(2, 11)]
    assert ds.points[:3] == [(2, F(1)), (3, F(1, 3)), (4, F(1, 6))]


def test_fig1_floor_cases():
    (ds,) = fig1_dataset([4], [F(1, 4)])
    assert ds.points == [(4, 0)]
    (ds,) = fig1_dataset([4], [F(1, 20)])
    assert ds.points == [(4, F(2, 15))]


def test_fig1_gaps_and_monotone():
    series = fig1_dataset(range(2, 21), [F(0), F(1, 100), F(1, 20), F(1, 10)])
    for ds in series:
        xs = [x for x, _ in ds.points]
        ys = [y for _, y in ds.points]
        assert xs == sorted(set(xs))
        assert all(a > b for a, b in zip(ys, ys[1:]))
    assert series[2].gaps == []  # 1/20 is feasible up to k=20
    assert series[3].gaps == list(range(11, 21))


def test_fig1_rejects_k_below_two():
    with pytest.raises(ValueError):
        fig1_dataset(range(1, 4), [F(0)])


def test_fig2_series():
    series = {ds.series_label: ds.points for ds in fig2_dataset(5, F(1, 20))}
    assert series["type2"] == [(1, F(3, 10)), (2, F(1, 4)), (3, F(1, 5)), (4, F(3, 20)), (5, F(1, 10))]
    assert series["equal"] == [(j, F(1, 5)) for j in range(1, 6)]
    assert series["geometric"] == [(j, F(2 ** (5 - j), 31)) for j in range(1, 6)]
    assert len(series) == 5


@pytest.mark.parametrize("k", [2, 5, 9])
def test_fig2_type1_type2_coincide(k):
    series = {ds.series_label: ds.points for ds in fig2_dataset(k, alpha_matching_type1(k))}
    assert series["type1"] == series["type2"]


def test_write_artifacts(tmp_path):
    paths = write_artifacts(tmp_path)
    names = sorted(p.name for p in paths)
    assert names == sorted(
        ["table2.csv", "table2.md", "table3.csv", "table3.md", "table4.csv", "table4.md", "table5.md", "fig1.csv", "fig2.csv"]
    )
    assert (tmp_path / "table2.csv").read_text() == (GOLDEN / "table2.csv").read_text()


def test_render_is_deterministic():
    cfg = ReportConfig(max_k=12)
    assert render_artifacts(cfg) == render_artifacts(cfg)


def test_table4_differs_from_print_only_in_row_ten_denominator():
    import printed_tables

    lines = table_harmonic(10).to_csv().splitlines()[1:]
    for k, line in enumerate(lines, start=1):
        got = [c for c in line.split(",")[1:] if c]
        printed = printed_tables.cells(printed_tables.HARMONIC, k)
        if k < 10:
            assert got == printed
        else:
            assert got == [c.replace("/7379", "/7381") for c in printed]
            assert sum(F(c) for c in printed) == F(7381, 7379)

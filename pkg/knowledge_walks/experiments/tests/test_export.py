import json
from pathlib import Path

import pandas as pd
import pytest

from knowledge_walks.experiments.enums import ResultFormat
from knowledge_walks.experiments.export import (
    FINAL_COLUMNS,
    GLOBAL_COLUMNS,
    REGION_COLUMNS,
    export_results,
    load_results,
    report_frames,
    result_payload,
)
from knowledge_walks.experiments.sweep import SweepResult, run_sweep
from knowledge_walks.experiments.tests.fixtures import sweep_config


@pytest.fixture
def single_point_result() -> SweepResult:
    return run_sweep(
        sweep_config(grid={"gamma": [0.5], "tau": [1.0], "d_eta": [0.1], "num_agents": [3]}, iterations=3)
    )


@pytest.fixture
def region_result() -> SweepResult:
    return run_sweep(sweep_config(regions={"measure": "lattice-chebyshev", "bins": 2, "t_cut": 6}))


# CSV Tests


def test_csv_has_row_per_iteration(single_point_result: SweepResult, tmp_path: Path) -> None:
    """Тест одна точка и три итерации дают три строки с колонками по порядку."""
    paths = export_results(single_point_result, ResultFormat.CSV, tmp_path / "out.csv")

    frame = pd.read_csv(paths[0])
    assert paths == [tmp_path / "out.csv"]
    assert list(frame.columns) == GLOBAL_COLUMNS
    assert frame["t"].tolist() == [1, 2, 3]
    assert frame["gamma"].unique().tolist() == [0.5]
    assert frame["mean_epsilon_T"].tolist() == single_point_result.points[0].mean.tolist()


def test_csv_writes_regions_table(region_result: SweepResult, tmp_path: Path) -> None:
    """Тест при анализе регионов рядом пишется таблица <stem>_regions.csv."""
    paths = export_results(region_result, ResultFormat.CSV, tmp_path / "run.csv")

    assert paths == [tmp_path / "run.csv", tmp_path / "run_regions.csv"]
    regions = pd.read_csv(paths[1])
    assert list(regions.columns) == REGION_COLUMNS
    assert len(regions) == len(region_result.points) * len(region_result.regions.bins)
    assert regions["bin_index"].tolist() == [0, 1] * len(region_result.points)


def test_csv_includes_varying_optional_axes(tmp_path: Path) -> None:
    """Тест меняющиеся необязательные оси добавляются колонками в конец таблицы."""
    result = run_sweep(
        sweep_config(grid={"gamma": [0.0], "tau": [1.0], "d_eta": [0.1], "num_agents": [2, 4]}, iterations=4)
    )

    frame = pd.read_csv(export_results(result, ResultFormat.CSV, tmp_path / "agents.csv")[0])

    assert list(frame.columns) == [*GLOBAL_COLUMNS, "num_agents"]
    assert sorted(frame["num_agents"].unique().tolist()) == [2, 4]


def test_export_to_unwritable_path_raises_os_error(single_point_result: SweepResult, tmp_path: Path) -> None:
    """Тест запись под файлом вместо каталога даёт ошибку ввода-вывода с путём."""
    blocker = tmp_path / "blocker"
    blocker.write_text("")

    with pytest.raises(OSError, match="cannot write results"):
        export_results(single_point_result, ResultFormat.CSV, blocker / "out.csv")


# JSON Tests


def test_json_document_carries_metadata_and_seeds(region_result: SweepResult, tmp_path: Path) -> None:
    """Тест JSON содержит метаданные, зёрна и статистику регионов каждой точки."""
    (path,) = export_results(region_result, ResultFormat.JSON, tmp_path / "run.json")

    payload = load_results(path)
    assert payload == json.loads(json.dumps(result_payload(region_result)))
    assert payload["metadata"]["config_hash"] == region_result.config.config_hash
    assert payload["metadata"]["regions"]["sizes"] == region_result.regions.sizes.tolist()
    first = payload["points"][0]
    assert len(first["seeds"]) == 2
    assert set(first["regions"]) == {"mean_count", "std_count", "mean_fraction"}


# Report Tests


def test_report_frames_label_rows_by_network(region_result: SweepResult, single_point_result: SweepResult) -> None:
    """Тест отчёт объединяет результаты нескольких сетей и помечает строки названием сети."""
    frames = report_frames(
        [("la", result_payload(region_result)), ("small", result_payload(single_point_result))]
    )

    assert set(frames) == {"global_curves", "final_performance", "region_curves"}
    final = frames["final_performance"]
    assert list(final.columns) == ["network", *FINAL_COLUMNS]
    assert final["network"].tolist() == ["la", "la", "small"]
    assert final.loc[final["network"] == "la", "t_cut"].unique().tolist() == [6]
    assert final.loc[final["network"] == "small", "t_cut"].tolist() == [3]
    assert set(frames["region_curves"]["network"]) == {"la"}
    assert len(frames["global_curves"]) == 2 * 12 + 3


def test_final_performance_reads_curve_at_t_cut(region_result: SweepResult) -> None:
    """Тест итоговая таблица берёт значения на последней итерации и на t_cut."""
    final = report_frames([("la", result_payload(region_result))])["final_performance"]

    for row, point in zip(final.itertuples(), region_result.points):
        assert row.mean_epsilon_T == point.mean[-1]
        assert row.mean_epsilon_T_cut == point.mean[5]
        assert row.t_final == 12

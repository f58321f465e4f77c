"""
Экспорт результатов серии и сводные таблицы для построения графиков.

JSON содержит полный документ результата; CSV строятся из того же документа, поэтому
отчёт по сохранённому JSON совпадает с CSV, выгруженными при запуске.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Iterable
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from knowledge_walks.experiments.enums import ResultFormat
from knowledge_walks.experiments.sweep import SweepResult
from knowledge_walks.utils.exceptions import ResultFileError

logger = logging.getLogger(__name__)

POINT_COLUMNS = ["gamma", "tau", "d_eta"]
GLOBAL_COLUMNS = [*POINT_COLUMNS, "t", "mean_epsilon_T", "std_epsilon_T"]
REGION_COLUMNS = [*POINT_COLUMNS, "bin_index", "bin_mean_value", "mean_count", "std_count", "mean_fraction"]
FINAL_COLUMNS = [
    *POINT_COLUMNS,
    "t_final",
    "mean_epsilon_T",
    "std_epsilon_T",
    "t_cut",
    "mean_epsilon_T_cut",
    "std_epsilon_T_cut",
]
REGIONS_SUFFIX = "_regions"
RESULT_KEYS = ("metadata", "points")
METADATA_KEYS = ("iterations",)
POINT_KEYS = ("params", "mean_epsilon_T", "std_epsilon_T", "regions")


def result_payload(result: SweepResult) -> dict[str, Any]:
    points = []
    for item in result.points:
        entry: dict[str, Any] = {
            "key": item.point.key,
            "params": item.point.as_dict(),
            "seeds": item.seeds,
            "mean_epsilon_T": item.mean.tolist(),
            "std_epsilon_T": item.std.tolist(),
            "regions": None,
        }
        if item.regions is not None:
            entry["regions"] = {
                "mean_count": item.regions.mean_count.tolist(),
                "std_count": item.regions.std_count.tolist(),
                "mean_fraction": item.regions.mean_fraction.tolist(),
            }
        points.append(entry)
    return {"metadata": result.metadata, "points": points}


def _point_columns(params: dict[str, Any], extra: list[str]) -> dict[str, Any]:
    return {column: params[column] for column in [*POINT_COLUMNS, *extra]}


def global_frame(payload: dict[str, Any]) -> pd.DataFrame:
    """Длинная таблица: строка на (точка сетки, итерация)."""
    extra = payload["metadata"].get("varying_axes", [])
    frames = []
    for entry in payload["points"]:
        mean = np.asarray(entry["mean_epsilon_T"], dtype=np.float64)
        frame = pd.DataFrame(
            {
                **_point_columns(entry["params"], []),
                "t": np.arange(1, len(mean) + 1),
                "mean_epsilon_T": mean,
                "std_epsilon_T": np.asarray(entry["std_epsilon_T"], dtype=np.float64),
            }
        )
        for column in extra:
            frame[column] = entry["params"][column]
        frames.append(frame)
    columns = [*GLOBAL_COLUMNS, *extra]
    return pd.concat(frames, ignore_index=True)[columns] if frames else pd.DataFrame(columns=columns)


def region_frame(payload: dict[str, Any]) -> pd.DataFrame:
    """Строка на (точка сетки, регион) со средними на t_cut."""
    extra = payload["metadata"].get("varying_axes", [])
    columns = [*REGION_COLUMNS, *extra]
    regions = payload["metadata"].get("regions")
    if not regions:
        return pd.DataFrame(columns=columns)
    rows = []
    for entry in payload["points"]:
        stats = entry["regions"]
        for index, bin_mean in enumerate(regions["bin_mean_value"]):
            rows.append(
                {
                    **_point_columns(entry["params"], extra),
                    "bin_index": index,
                    "bin_mean_value": bin_mean,
                    "mean_count": stats["mean_count"][index],
                    "std_count": stats["std_count"][index],
                    "mean_fraction": stats["mean_fraction"][index],
                }
            )
    return pd.DataFrame(rows, columns=columns)


def final_frame(payload: dict[str, Any]) -> pd.DataFrame:
    """Итоговая производительность: на последней итерации и на t_cut."""
    metadata = payload["metadata"]
    extra = metadata.get("varying_axes", [])
    columns = [*FINAL_COLUMNS, *extra]
    regions = metadata.get("regions") or {}
    t_cut = regions.get("t_cut", metadata["iterations"])
    rows = []
    for entry in payload["points"]:
        mean, std = entry["mean_epsilon_T"], entry["std_epsilon_T"]
        rows.append(
            {
                **_point_columns(entry["params"], extra),
                "t_final": len(mean),
                "mean_epsilon_T": mean[-1],
                "std_epsilon_T": std[-1],
                "t_cut": t_cut,
                "mean_epsilon_T_cut": mean[t_cut - 1] if t_cut > 0 else 0.0,
                "std_epsilon_T_cut": std[t_cut - 1] if t_cut > 0 else 0.0,
            }
        )
    return pd.DataFrame(rows, columns=columns)


def _write(path: Path, writer):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        writer(path)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write results: {exc.strerror}", str(path)) from exc
    logger.info("Wrote %s", path)
    return path


def export_results(result: SweepResult, result_format: str, path: str | Path) -> list[Path]:
    """
    Пишет результат в CSV или JSON.

    Для CSV рядом с основным файлом пишется ``<stem>_regions.csv``, если
    включён анализ регионов. Возвращает список записанных файлов.
    """
    path = Path(path)
    payload = result_payload(result)
    if result_format == ResultFormat.JSON:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
        return [_write(path, lambda target: target.write_text(text))]
    if result_format != ResultFormat.CSV:
        raise ValueError(f"unknown result format {result_format!r}")

    written = [_write(path, lambda target: global_frame(payload).to_csv(target, index=False))]
    if result.regions is not None:
        regions_path = path.with_name(f"{path.stem}{REGIONS_SUFFIX}.csv")
        written.append(_write(regions_path, lambda target: region_frame(payload).to_csv(target, index=False)))
    return written


def load_results(path: str | Path) -> dict[str, Any]:
    """
    Читает JSON-результат серии.

    Raises:
        ResultFileError: файл не JSON или в нём нет метаданных и точек сетки
    """
    try:
        with open(path, "rb") as handle:
            payload = json.load(handle)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ResultFileError(f"{path}: not a JSON document ({exc})") from None
    if not isinstance(payload, dict):
        raise ResultFileError(f"{path}: expected a JSON object")
    missing = [key for key in RESULT_KEYS if key not in payload]
    missing += [key for key in METADATA_KEYS if key not in payload.get("metadata", {})]
    for entry in payload.get("points", []):
        missing += [key for key in POINT_KEYS if key not in entry]
    if missing:
        names = ", ".join(sorted(set(missing)))
        raise ResultFileError(f"{path}: missing keys: {names}")
    return payload


def report_frames(results: Iterable[tuple[str, dict[str, Any]]]) -> dict[str, pd.DataFrame]:
    """
    Сводит несколько результатов (по одному на сеть) в таблицы отчёта,
    помечая строки названием сети.
    """
    tables: dict[str, list[pd.DataFrame]] = {"global_curves": [], "final_performance": [], "region_curves": []}
    builders = {"global_curves": global_frame, "final_performance": final_frame, "region_curves": region_frame}
    for label, payload in results:
        for name, builder in builders.items():
            frame = builder(payload)
            frame.insert(0, "network", label)
            tables[name].append(frame)
    return {
        name: pd.concat(frames, ignore_index=True) if frames else pd.DataFrame(columns=["network"])
        for name, frames in tables.items()
    }

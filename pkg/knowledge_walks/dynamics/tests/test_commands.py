import json
from io import StringIO
from pathlib import Path

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from knowledge_walks.utils.commands import EXIT_IO, EXIT_USAGE


def run(*args: str) -> str:
    out = StringIO()
    call_command(*args, stdout=out, stderr=StringIO())
    return out.getvalue()


def test_simulate_writes_record_json(tmp_path: Path) -> None:
    """Тест simulate пишет параметры, сводку сети и запись реализации."""
    out = tmp_path / "run.json"

    output = run(
        "simulate", "--model", "la", "--side", "5", "--agents", "4", "--iterations", "20",
        "--gamma", "0.5", "--seed", "3", "--out", str(out),
    )

    payload = json.loads(out.read_text())
    assert payload["params"]["gamma"] == 0.5
    assert payload["params"]["exclude_self"] is True
    assert payload["network"]["num_nodes"] == 25
    assert payload["network"]["spec"]["kind"] == "la"
    assert len(payload["record"]["epsilon"]) == 20
    assert len(payload["record"]["first_visit"]) == 25
    assert "epsilon_T(20)=" in output


def test_simulate_record_matches_golden_file(tmp_path: Path) -> None:
    """Тест запись реализации на решётке 5x5 с зерном 3 совпадает с эталоном побайтно."""
    golden = Path(__file__).parent / "golden" / "simulate_la5_seed3.json"
    out = tmp_path / "run.json"

    run(
        "simulate", "--model", "la", "--side", "5", "--agents", "4", "--iterations", "20",
        "--gamma", "0.5", "--seed", "3", "--out", str(out),
    )

    record = json.loads(out.read_text())["record"]
    assert json.dumps(record, indent=2, sort_keys=True) + "\n" == golden.read_text()


def test_simulate_same_seed_gives_identical_records(tmp_path: Path) -> None:
    """Тест два запуска с одним зерном дают одинаковые записи."""
    args = ("--model", "ba", "--n", "60", "--m", "2", "--agents", "5", "--iterations", "30", "--gamma", "0.3")
    first, second = tmp_path / "a.json", tmp_path / "b.json"

    run("simulate", *args, "--out", str(first))
    run("simulate", *args, "--out", str(second))

    assert json.loads(first.read_text())["record"] == json.loads(second.read_text())["record"]


def test_simulate_include_self_flag(tmp_path: Path) -> None:
    """Тест флаг --include-self отключает исключение собственного поля."""
    out = tmp_path / "run.json"

    run("simulate", "--model", "la", "--side", "3", "--iterations", "5", "--include-self", "--out", str(out))

    assert json.loads(out.read_text())["params"]["exclude_self"] is False


@pytest.mark.parametrize(
    "args",
    [
        ("--iterations", "0"),
        ("--gamma", "1.5"),
        ("--agents", "0"),
        ("--alpha", "-2"),
    ],
)
def test_simulate_invalid_dynamics_exit_with_one(tmp_path: Path, args: tuple[str, ...]) -> None:
    """Тест недопустимые параметры динамики завершаются кодом 1."""
    with pytest.raises(CommandError) as exc_info:
        run("simulate", "--model", "la", "--side", "3", *args, "--out", str(tmp_path / "x.json"))

    assert exc_info.value.returncode == EXIT_USAGE


def test_simulate_without_network_exits_with_one(tmp_path: Path) -> None:
    """Тест запуск без сети завершается кодом 1."""
    with pytest.raises(CommandError) as exc_info:
        run("simulate", "--out", str(tmp_path / "x.json"))

    assert exc_info.value.returncode == EXIT_USAGE


def test_simulate_unwritable_output_exits_with_two(tmp_path: Path) -> None:
    """Тест невозможность записать результат завершается кодом 2."""
    blocker = tmp_path / "file"
    blocker.write_text("")

    with pytest.raises(CommandError) as exc_info:
        run("simulate", "--model", "la", "--side", "3", "--iterations", "2", "--out", str(blocker / "run.json"))

    assert exc_info.value.returncode == EXIT_IO

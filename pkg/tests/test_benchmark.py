import importlib.util
from pathlib import Path


def test_benchmark_runs_and_backends_agree(capsys):
    path = Path(__file__).parents[1] / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--repeat", "1", "--skip-exact"]) == 0
    assert "MISMATCH" not in capsys.readouterr().out

"""Golden CLI invocations: (name, argv, expected exit code)."""
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden"
MU = str(GOLDEN / "ceil_mu.txt")
SMALL = ["--grid-range", "2", "--grid-denom", "6"]

CASES = [
    ("eval_shifted_floor", ["eval", "shifted_floor(1/2)", "7/10", "-3/4"], 0),
    ("eval_mu_file", ["eval", "mu_coperiodic", "-1/2", "0", "3/2", "--mu-file", MU], 0),
    ("check_decomposer_linear", ["check", "decomposer", "linear(1/2)"], 1),
    ("check_decomposer_floor", ["check", "decomposer", "floor"], 0),
    ("check_canceler_floor", ["check", "canceler", "floor", *SMALL], 1),
    ("check_associative_sampled", ["check", "associative", "bfrac(-3/2)", "--samples", "300", "--seed", "7"], 0),
    ("scan_floor_preset", ["scan", "--preset", "floor"], 0),
    ("scan_custom", ["scan", "shifted_floor(1/2)", "floor", "ceil", "--cond", "decomposer",
                     "--cond", "range(fstar)=interval[0,1)", "--cond", "meets(f)=lattice(0,1)", *SMALL], 0),
    ("dsum_finite_refuted", ["dsum", "finite{0,1}", "finite{0,1}"], 1),
    ("dsum_lattice_interval", ["dsum", "lattice(1/3,1)", "interval[0,1)"], 0),
    ("classify_unit", ["classify", "interval[0,1)"], 0),
    ("classify_open_closed", ["classify", "interval(1/3,7/2]"], 0),
    ("classify_closed", ["classify", "interval[0,1]"], 1),
    ("classify_ray", ["classify", "interval[0,inf)"], 1),
    ("gdiv_seven", ["gdiv", "7", "--b", "2"], 0),
    ("gdiv_negative_b", ["gdiv", "5/2", "--b", "-2"], 0),
    ("badd", ["badd", "1", "1", "--b", "3/2"], 0),
    ("binv", ["binv", "1/2", "--b", "3/2"], 0),
    ("binv_outside", ["binv", "2", "--b", "3/2"], 2),
    ("baxioms_sampled", ["baxioms", "--b", "-3/2", "--samples", "400", "--seed", "3"], 0),
    ("lemma34_unit", ["lemma34", "interval[0,1)", *SMALL], 0),
    ("lemma34_shifted", ["lemma34", "interval[1/2,3/2)", "--ns", "2,3"], 1),
    ("eisenberg_ceil", ["eisenberg", "ceil", *SMALL], 0),
    ("eisenberg_floor_plus", ["eisenberg", "floor_plus(1)", "--ks", "1", "--ns", "2"], 1),
]

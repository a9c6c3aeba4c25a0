"""The ten acceptance criteria, each with its tolerance and time limit.

Each test records one PASS/FAIL line, shown in the terminal summary.
"""
import time
from contextlib import contextmanager

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from dirac_kernels.geom import cross_check_branching, geometric_noncubic_kernel_torus
from dirac_kernels.kernelcalc import (
    check_related_inequality,
    kostant_kernel,
    noncubic_kernel_torus,
    property_star_kernel,
    related_pairs,
)
from dirac_kernels.oracle.verify import SQUARE_CASES, run_case
from dirac_kernels.repweights import HighestWeightModule, dominant_weights_up_to_dimension, standard_highest_weight
from dirac_kernels.rootsys import Weight, orbit_size, parse_root_system, weyl_group_order
from dirac_kernels.spinweights import SubalgebraDatum, dominant_spin_weights, spin_weights_bruteforce

H = 0.5


@contextmanager
def criterion(number, title, limit=None):
    start = time.perf_counter()
    status = {"ok": False, "note": ""}
    try:
        yield status
    finally:
        elapsed = time.perf_counter() - start
        ok = status["ok"] and (limit is None or elapsed < limit)
        budget = f" (limit {limit:g} s)" if limit else ""
        note = f" [{status['note']}]" if status["note"] else ""
        ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  {elapsed:.2f} s{budget}{note}")
    if limit is not None:
        assert elapsed < limit, f"took {elapsed:.1f} s, limit {limit} s"


def closed_form_noncubic(family, rank):
    if family == "A":
        n = rank + 1
        return n * 2 ** ((n - 1) * (n - 2) // 2)
    n = rank
    if family in "BC":
        return 2 * n * 2 ** ((n - 1) ** 2)
    return 2 * n * 2 ** ((n - 1) * (n - 2))


def test_criterion_01_standard_module_dimensions():
    with criterion(1, "standard-module kernel dimensions, ranks 2-5", limit=30) as st:
        bad = []
        for family in "ABCD":
            for rank in range(2, 6):
                rs = parse_root_system(f"{family}{rank}")
                module = HighestWeightModule(rs, standard_highest_weight(rs))
                want = closed_form_noncubic(family, rank)
                got = (kostant_kernel(module).total_dim, noncubic_kernel_torus(module).total_dim,
                       property_star_kernel(module).total_dim)
                if got != (weyl_group_order(rs), want, want):
                    bad.append((rs.code, got))
        st["ok"] = not bad
        assert not bad


def test_criterion_02_oracle_agreement():
    with criterion(2, "matrix nullities agree with combinatorics (A1, A2, A3, B2)", limit=60) as st:
        result = run_case("agreement")
        assert {d["root_system"] for d in result["details"]} == {"A1", "A2", "A3", "B2"}
        st["ok"] = result["pass"]
        assert result["pass"], result


@pytest.mark.xfail(strict=True, reason="row 3: ker D = 0 for the one-dimensional h, so containment is forced; "
                                      "see the decisions ledger")
def test_criterion_03_sl4_kernel_relations():
    with criterion(3, "cubic vs noncubic kernel relations for four subalgebras of sl(4)", limit=120) as st:
        result = run_case("table1")
        failing = [d["h"] for d in result["details"] if not d["pass"]]
        st["note"] = "failing rows: " + ", ".join(failing) if failing else ""
        st["ok"] = result["pass"]
    assert result["pass"], result["details"]


def test_criterion_04_cancelling_monomials():
    with criterion(4, "two monomials cancel under the noncubic operator") as st:
        result = run_case("nonpolyn")
        d = result["details"]
        st["ok"] = d["D_x1_nonzero"] and d["D_x2_nonzero"] and d["D_x1_plus_x2_zero"]
        assert st["ok"]


def test_criterion_05_t_family():
    with criterion(5, "ker D^t = ker D at t = 1/2, 3/2; ker D inside ker D^t at t = 0, 2") as st:
        result = run_case("t-family")
        assert {d["t"] for d in result["details"]} == {"1/2", "3/2", "0", "2"}
        st["ok"] = result["pass"]
        assert result["pass"], result


def test_criterion_06_square_identity():
    with criterion(6, "squared cubic operator residual is zero") as st:
        covered = {(c, w) for c, w, roots in SQUARE_CASES if not roots}
        assert covered >= {(c, w) for c in ("A1", "A2", "A3", "B2") for w in ("trivial", "standard", "adjoint")}
        assert any(roots for _, _, roots in SQUARE_CASES)
        result = run_case("square-identity")
        st["ok"] = result["pass"] and all(d["residual_nnz"] == 0 for d in result["details"])
        assert st["ok"], result


def test_criterion_07_b3_spin_weights():
    with criterion(7, "B3 dominant spin weights (1,2,2,4,8,14), orbit total 512", limit=5) as st:
        rs = parse_root_system("B3")
        torus = SubalgebraDatum.torus(rs)
        dom = dominant_spin_weights(torus)
        expected = [((2.5, 1.5, H), 1), ((2.5, H, H), 2), ((1.5, 1.5, 1.5), 2),
                    ((1.5, 1.5, H), 4), ((1.5, H, H), 8), ((H, H, H), 14)]
        got = [(tuple(float(c) for c in w), m) for w, m in dom]
        brute = spin_weights_bruteforce(torus)
        st["ok"] = (got == expected
                    and sum(orbit_size(w, rs) * m for w, m in dom) == 512
                    and all(brute[w] == m for w, m in dom))
        assert st["ok"], got


def test_criterion_08_related_inequality():
    with criterion(8, "norm inequality and equality criterion on all related pairs, dim <= 50") as st:
        count = 0
        bad = []
        for code in ("A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3"):
            rs = parse_root_system(code)
            torus = SubalgebraDatum.torus(rs)
            for lam in dominant_weights_up_to_dimension(rs, 50):
                module = HighestWeightModule(rs, lam)
                for mu, mu1 in related_pairs(module, torus):
                    pair = check_related_inequality(module, torus, mu, mu1)
                    count += 1
                    if pair.lhs < pair.rhs or pair.equality != (pair.lhs == pair.rhs):
                        bad.append((code, lam, mu, mu1))
        st["note"] = f"{count} pairs"
        st["ok"] = not bad and count > 0
        assert not bad, bad[:5]


def test_criterion_09_weyl_probe():
    with criterion(9, "Weyl eigenvalue inequalities within 1e-9", limit=10) as st:
        result = run_case("weyl-probe")
        st["note"] = f"{result['details']['random_pairs']} random + {result['details']['block_pairs']} operator blocks"
        st["ok"] = result["pass"]
        assert result["pass"], result


def test_criterion_10_geometric_consistency():
    with criterion(10, "geometric multiplicities match kernel branching, rank <= 2") as st:
        bad = []
        for code in ("A1", "A2", "B2", "C2", "G2"):
            rs = parse_root_system(code)
            grid = dominant_weights_up_to_dimension(rs, 400)[:10]
            assert len(grid) == 10
            for extra in grid:
                mu = rs.rho + extra
                for c in geometric_noncubic_kernel_torus(rs, mu).constituents:
                    if c.multiplicity != cross_check_branching(rs, mu, c.highest_weight):
                        bad.append((code, mu, c))
        st["ok"] = not bad
        assert not bad

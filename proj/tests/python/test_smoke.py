"""Smoke tests for the python bindings of the main operations."""

import json

try:
    import tanglekit as tk
except ImportError:  # in-tree build: the extension sits on PYTHONPATH bare
    import _tanglekit as tk


def test_eval_and_cf():
    assert tk.eval_expr("(6/1) o (1,0)") == "6/7"
    assert tk.eval_expr("(-1/1 + -1/5)") == "-6/5"
    assert tk.cf_to_fraction([2, 3]) == "7/2"
    assert tk.fraction_to_cf("7/2") == [2, 3]


def test_closure_and_classify():
    assert tk.closure("15/19") == "b(15,4) = 7_4"
    assert tk.closure("1/5") == "unknot"
    assert tk.classify("(-1/3 + -1/5 + -1)") == "b(23,4) = 9_5"
    assert tk.two_bridge_equal("11/2", "11/6")
    assert not tk.two_bridge_equal("11/2", "-11/2")


def test_invariants():
    jones_right = tk.jones("3/1")
    jones_left = tk.jones("3/2")
    assert jones_right != jones_left
    assert tk.signature("3/1") == -2
    assert tk.signature("6/1", lk=3) in (-5, 5)
    assert abs(tk.signature("6/1", lk=3)) == 5


def test_band_solver():
    result = json.loads(tk.band_solve(2, 2, -1, 3, -3))
    assert result["outcome"] == "solutions"
    assert result["solutions"][0]["U"] == "(-1/3 + -1/3) o (-1,2,0)"
    obstructed = json.loads(tk.band_solve(2, 2, -1, 3, 3))
    assert obstructed["outcome"] == "obstructed"


def test_xer_and_psi():
    families = json.loads(tk.xer_products(3))
    names = {f.get("product_name") for f in families}
    assert "7_2" in names and "7_4" in names
    assert json.loads(tk.psi_solve(3, "7_4")) == ["-1/3"]
    assert json.loads(tk.psi_solve(3, "7_2")) == []
    assert tk.solve_trefoil_hopf(-1) == "3"


def test_moves_gamma_pathway():
    assert tk.move_equiv_zero(9, 5, 9, 14) == -1
    assert tk.move_equiv_zero(2, 1, 3, 1) is None
    assert tk.move_to_zero_form("-1/3", "-4/3") == (9, 5)
    assert tk.gamma_unknot(1, -1, 5, 8)
    assert not tk.gamma_unknot(2, 2, 1, 2)
    steps = json.loads(tk.pathway(2))
    assert len(steps) == 4
    assert steps[1]["solution"] == "U = 3"
    assert tk.crossing_number_genus1(2, 2) == 7

import pytest

from srep import golden
from srep.liealg import parse
from srep.verify import check_triple_file, golden_items


def test_arith_implicit_products():
    env = {"n": 7, "p": 2, "k": 1, "ik": 3}
    assert golden.arith("2(n-p)", env) == 10
    assert golden.arith("n-i_k", env) == 4
    assert golden.arith("(n-1)//2", env) == 3
    with pytest.raises(ValueError):
        golden.arith("n**2", env)


def test_template_evaluation():
    t = "R^{k} + Σ sl(i_l-i_{l-1},R) + sp(n-i_k,R)"
    assert golden.evaluate_template(t, {"n": 5, "k": 2, "ik": 3}, [1, 2]) == parse("R^2 + sl(2,R) + sp(2,R)")
    assert golden.evaluate_template("Σ sl(i_l-i_{l-1},R)", {"k": 0, "ik": 0}, []) == parse("{0}")


def test_removal_data():
    assert golden.removal_data("A", 3, [2]) == ("diff", {"k": 1, "ik": 2}, [2, 2])
    assert golden.removal_data("C", 3, [1, 3]) == ("last", {"k": 2, "ik": 3}, [1, 2])
    assert golden.removal_data("D", 4, [3]) is None


def test_every_table_block_has_three_points():
    blocks = golden.htheta_blocks()
    assert len(blocks) == 55
    assert all(len(b["points"]) == 3 for b in blocks)


def test_golden_suite_passes():
    items = golden_items(max_rank=4)
    assert [i.name for i in items if not i.ok] == []
    assert len({i.name for i in items}) == len(items)


def test_triple_file_item():
    item = check_triple_file(golden.data_dir() / "satake" / "su2p2np-sppq_n7_p3.txt")
    assert item.ok and item.name == "hpis:su2p2np-sppq_n7_p3"

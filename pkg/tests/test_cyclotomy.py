import pytest

from charsum import cyclotomy as cy
from charsum.cycint import CycInt
from charsum.errors import IndexOutOfRange, ZeroArgument


def view2k(ctx):
    return ctx.subfield(2 * ctx.params.k)


def test_class_index_examples(ctx31):
    view = view2k(ctx31)
    assert cy.class_index(view, ctx31.one) == 0
    assert cy.class_index(view, -ctx31.one) == 0      # -1 = nu^4 lands in C_0
    assert cy.class_index(view, view.generator ** 5) == 1  # nu^(p^k+2)
    with pytest.raises(ZeroArgument):
        cy.class_index(view, ctx31.zero)


def test_single_entries(ctx31):
    view = view2k(ctx31)
    assert cy.cyclotomic_number(view, 0, 0) == 1   # p^k - 2
    assert cy.cyclotomic_number(view, 1, 2) == 1
    assert cy.cyclotomic_number(view, 0, 1) == 0
    with pytest.raises(IndexOutOfRange):
        cy.cyclotomic_number(view, 4, 0)


def test_entrywise_matches_full_table(ctx31, ctx51):
    for ctx in (ctx31, ctx51):
        view = view2k(ctx)
        table = cy.full_table(view)
        for i in range(table.order):
            for j in range(table.order):
                assert cy.cyclotomic_number(view, i, j) == table.table[i][j]


def test_full_table_31(ctx31):
    table = cy.full_table(view2k(ctx31))
    assert table.table == ((1, 0, 0, 0),
                           (0, 0, 1, 1),
                           (0, 1, 0, 1),
                           (0, 1, 1, 0))
    assert table.total == 7


def test_full_table_51(ctx51):
    table = cy.full_table(view2k(ctx51))
    assert table.table[0][0] == 3
    ones = sum(v == 1 for row in table.table for v in row)
    assert ones == 20  # i != j with both nonzero: 5 * 4 cells
    assert table.total == 23


def test_full_table_32(ctx32):
    table = cy.full_table(view2k(ctx32))
    assert table.table[0][0] == 7
    assert table.total == 79


@pytest.mark.parametrize("fixture", ["ctx31", "ctx51", "ctx71", "ctx32"])
def test_lemma1_all_sizes(fixture, request):
    ctx = request.getfixturevalue(fixture)
    report = cy.verify_lemma1(view2k(ctx))
    assert report.ok, report.mismatches
    assert report.total == ctx.p ** (2 * ctx.params.k) - 2


def test_row_sums(ctx31, ctx51):
    # row i sums to |C_i minus {-1}|, and -1 sits in C_0
    for ctx in (ctx31, ctx51):
        pk = ctx.p ** ctx.params.k
        table = cy.full_table(view2k(ctx))
        for i, row in enumerate(table.table):
            assert sum(row) == pk - 1 - (1 if i == 0 else 0)


def test_minus_one_symmetry(ctx31, ctx51):
    # counting x - 1 instead of x + 1 gives the same table
    for ctx in (ctx31, ctx51):
        view = view2k(ctx)
        table = cy.full_table(view)
        order = table.order
        recount = [[0] * order for _ in range(order)]
        one = ctx.one
        for e, x in enumerate(view.nonzero_elements()):
            y = x - one
            if not y.is_zero:
                recount[e % order][cy.class_index(view, y)] += 1
        assert tuple(tuple(r) for r in recount) == table.table


@pytest.mark.parametrize("fixture,special,value", [
    ("ctx31", 2, 2), ("ctx51", 3, 4), ("ctx32", 5, 8)])
def test_pt_values(fixture, special, value, request):
    ctx = request.getfixturevalue(fixture)
    pt = cy.pt_sums(view2k(ctx))
    for t, v in enumerate(pt.values):
        assert v == (value if t == special else -1)
        assert v.is_rational_integer


def test_pt_total_is_minus_one(ctx31, ctx51):
    # summing over every class = full character sum over GF(p^2k)* = -1
    for ctx in (ctx31, ctx51):
        pt = cy.pt_sums(view2k(ctx))
        total = CycInt.zero(ctx.p)
        for v in pt.values:
            total = total + v
        assert total == -1


def test_csv_emitter(ctx31):
    table = cy.full_table(view2k(ctx31))
    assert table.to_csv() == (
        "i\\j,0,1,2,3\n"
        "0,1,0,0,0\n"
        "1,0,0,1,1\n"
        "2,0,1,0,1\n"
        "3,0,1,1,0"
    )


def test_slow_path_table(ctx31):
    # the generic (no numpy) route computes the same table
    from charsum.field_core import FieldParams, build_context
    slow = build_context(FieldParams(3, 1), 4, use_tables=False)
    table = cy.full_table(slow.subfield(2))
    assert table.table == cy.full_table(view2k(ctx31)).table

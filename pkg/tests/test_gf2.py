import itertools

from hypothesis import given, strategies as st

from flatseifert import gf2

systems = st.integers(1, 6).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), max_size=6),
    )
)


def brute_solutions(rows, n):
    return sorted(
        v for v in itertools.product((0, 1), repeat=n)
        if all(sum(a * b for a, b in zip(r, v)) % 2 == 0 for r in rows)
    )


@given(systems)
def test_span_of_nullspace_is_solution_set(system):
    n, rows = system
    basis = gf2.nullspace(rows, n)
    assert gf2.span(basis, n) == brute_solutions(rows, n)
    assert len(basis) == n - gf2.rank(rows, n)


@given(systems, st.data())
def test_solve(system, data):
    n, cols = system
    if not cols:
        return
    target = data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    x = gf2.solve(cols, target)
    combos = [
        c for c in itertools.product((0, 1), repeat=len(cols))
        if all(sum(c[j] * cols[j][i] for j in range(len(cols))) % 2 == target[i] for i in range(n))
    ]
    if combos:
        assert x is not None
        assert all(sum(x[j] * cols[j][i] for j in range(len(cols))) % 2 == target[i] for i in range(n))
    else:
        assert x is None


def test_span_sorted_and_includes_zero():
    s = gf2.span([(1, 1, 0), (0, 1, 1)], 3)
    assert s == [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]

"""Point counting: closed forms, brute-force cross-checks, censuses."""

import itertools

import pytest

from wittzeta import (
    BudgetExceeded,
    NotPrime,
    affine_space,
    affine_variety,
    closed_point_census,
    count_points,
    elliptic_f5,
    field_params_from_q,
    make_field,
    moebius,
    multiplicative_group,
    point,
    point_counts,
    projective_space,
    projective_variety,
    resolve_field,
    sym_product_counts,
    variety_product,
)

# brute-force reference: evaluate every equation at every tuple using the
# scalar field ops, which are exhaustively tested on their own


def eval_at(field, eq, pt):
    total = 0
    for exps, coeff in eq:
        term = field.from_int(coeff)
        for x, e in zip(pt, exps):
            if e:
                term = field.mul(term, field.power(x, e))
        total = field.add(total, term)
    return total


def brute_affine(v, q):
    p, k = field_params_from_q(q)
    field = make_field(p, k)
    block = v.blocks[0]
    count = 0
    for pt in itertools.product(field.elements(), repeat=block.nvars):
        if all(eval_at(field, eq, pt) == 0 for eq in block.equations):
            count += 1
    return count


def brute_projective(v, q):
    # count the affine cone and remove the origin; homogeneous equations
    # of positive degree all vanish there
    p, k = field_params_from_q(q)
    field = make_field(p, k)
    block = v.blocks[0]
    cone = 0
    for pt in itertools.product(field.elements(), repeat=block.nvars):
        if all(eval_at(field, eq, pt) == 0 for eq in block.equations):
            cone += 1
    assert (cone - 1) % (q - 1) == 0
    return (cone - 1) // (q - 1)


# closed forms


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_point_has_one_point(q):
    p, k = field_params_from_q(q)
    assert count_points(point(), 1, p, k) == 1


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_affine_space_counts(q, n):
    p, k = field_params_from_q(q)
    assert count_points(affine_space(n), 1, p, k) == q**n


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_projective_space_counts(q, n):
    p, k = field_params_from_q(q)
    expected = sum(q**i for i in range(n + 1))
    assert count_points(projective_space(n), 1, p, k) == expected


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8])
def test_multiplicative_group_counts(q):
    p, k = field_params_from_q(q)
    assert count_points(multiplicative_group(), 1, p, k) == q - 1


# brute-force cross-checks on each counting strategy


def test_circle_odd_characteristic_solve_path():
    v = affine_variety(2, ("x^2 + y^2 - 1",))
    assert count_points(v, 1, 3) == 4
    assert count_points(v, 1, 7) == brute_affine(v, 7)
    assert count_points(v, 1, 3, 2) == brute_affine(v, 9)


def test_fermat_cubic_grid_path():
    v = affine_variety(2, ("x^3 + y^3 - 1",))
    for q in (4, 7):
        p, k = field_params_from_q(q)
        assert count_points(v, 1, p, k) == brute_affine(v, q)


def test_char_two_quadratic_without_linear_term():
    # squaring is a bijection, so y^2 = x^3 + 1 has exactly q points
    v = affine_variety(2, ("y^2 + x^3 + 1",))
    assert count_points(v, 1, 2, 2) == 4
    assert count_points(v, 1, 2, 2) == brute_affine(v, 4)


def test_char_two_quadratic_with_linear_term():
    v = affine_variety(2, ("y^2 + y + x^3",))
    for q in (2, 4, 8):
        p, k = field_params_from_q(q)
        assert count_points(v, 1, p, k) == brute_affine(v, q)


def test_projective_conic_with_no_points():
    v = projective_variety(1, ("x^2 + y^2",))
    assert count_points(v, 1, 3) == 0
    assert count_points(v, 1, 5) == 2
    assert count_points(v, 1, 5) == brute_projective(v, 5)


def test_elliptic_curve_counts_match_brute_force():
    v = elliptic_f5()
    assert count_points(v, 1) == brute_projective(v, 5)
    assert point_counts(v, 4) == (9, 27, 108, 675)


def test_extension_field_equals_higher_degree_count():
    v = elliptic_f5()
    assert count_points(v, 1, 5, 2) == count_points(v, 2) == 27


# degenerate equations


def test_zero_equation_is_no_constraint():
    assert count_points(affine_variety(1, ("0",)), 1, 3) == 3
    # a coefficient divisible by p vanishes in the field
    assert count_points(affine_variety(1, ("5",)), 1, 5) == 5


def test_unit_equation_empties_the_chart():
    assert count_points(affine_variety(2, ("1",)), 1, 3) == 0
    assert count_points(affine_variety(2, ("x*y - x*y + 2",)), 1, 3) == 0


# structural identities


@pytest.mark.parametrize("q", [2, 3, 5])
def test_line_splits_as_point_plus_torus(q):
    p, k = field_params_from_q(q)
    for m in (1, 2, 3):
        lhs = count_points(affine_space(1), m, p, k)
        rhs = count_points(point(), m, p, k) + count_points(
            multiplicative_group(), m, p, k
        )
        assert lhs == rhs


def test_product_counts_multiply():
    v = variety_product(projective_space(1), projective_space(1))
    assert point_counts(v, 3, 2) == (9, 25, 81)
    w = variety_product(multiplicative_group(), projective_space(2))
    assert count_points(w, 1, 2, 2) == 3 * 21


def test_point_counts_tuple_matches_scalar_calls():
    v = multiplicative_group()
    assert point_counts(v, 4, 3) == tuple(
        count_points(v, m, 3) for m in (1, 2, 3, 4)
    )


# field resolution


def test_resolve_field_prefers_explicit_parameters():
    v = elliptic_f5()
    assert resolve_field(v) == (5, 1)
    assert resolve_field(v, 5, 2) == (5, 2)
    assert resolve_field(v, 7) == (7, 1)


def test_resolve_field_requires_some_field():
    with pytest.raises(ValueError):
        resolve_field(point())


def test_field_params_from_q():
    assert field_params_from_q(2) == (2, 1)
    assert field_params_from_q(4) == (2, 2)
    assert field_params_from_q(27) == (3, 3)
    assert field_params_from_q(49) == (7, 2)
    assert field_params_from_q(7) == (7, 1)


@pytest.mark.parametrize("q", [0, 1, 6, 12, 100])
def test_field_params_rejects_non_prime_powers(q):
    with pytest.raises(NotPrime):
        field_params_from_q(q)


# moebius and the censuses


def test_moebius_values():
    expected = (1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0)
    assert tuple(moebius(n) for n in range(1, 13)) == expected


def test_census_of_the_line():
    # degree-d monic irreducibles over F_2: 2, 1, 2
    assert closed_point_census(affine_space(1), 3, 2) == (2, 1, 2)


def test_census_of_the_projective_line():
    assert closed_point_census(projective_space(1), 2, 2) == (3, 1)


def test_census_inverts_back_to_point_counts():
    v = elliptic_f5()
    ns = point_counts(v, 6)
    bs = closed_point_census(v, 6)
    for m in range(1, 7):
        total = sum(d * bs[d - 1] for d in range(1, m + 1) if m % d == 0)
        assert total == ns[m - 1]
    assert bs[0] == ns[0]
    assert all(b >= 0 for b in bs)


# symmetric product counts


def test_sym_counts_of_the_line_are_field_powers():
    assert sym_product_counts(affine_space(1), 5, 2) == (1, 2, 4, 8, 16, 32)


def test_sym_counts_of_the_projective_line():
    # Sym^n(P^1) = P^n, so these are projective space counts over F_3
    got = sym_product_counts(projective_space(1), 6, 3)
    assert got == (1, 4, 13, 40, 121, 364, 1093)


def test_sym_counts_of_a_point_and_the_torus():
    assert sym_product_counts(point(), 5, 7) == (1,) * 6
    assert sym_product_counts(multiplicative_group(), 4, 5) == (
        1,
        4,
        20,
        100,
        500,
    )


# budget and threading


def test_budget_rejects_large_grids_before_enumerating():
    eq = "+".join(f"{v}^3" for v in ("x", "y", "z", "w", "x4", "x5")) + "+1"
    v = affine_variety(6, (eq,))
    with pytest.raises(BudgetExceeded):
        count_points(v, 1, 23)  # 23^6 > 10^7


def test_budget_applies_to_the_solved_variable_path():
    eq = "x^2+" + "+".join(f"{v}^3" for v in ("y", "z", "w", "x4", "x5"))
    v = affine_variety(6, (eq,))
    with pytest.raises(BudgetExceeded):
        count_points(v, 1, 37)  # 37^5 > 10^7 remaining variables


def test_closed_forms_bypass_the_budget():
    assert count_points(affine_space(12), 1, 7) == 7**12


def test_thread_count_does_not_change_results():
    v = affine_variety(3, ("x^3 + y^3 + z^3 - 1",), p=37)
    assert count_points(v, 1, threads=4) == count_points(v, 1, threads=1)
    e = elliptic_f5()
    assert sym_product_counts(e, 6, threads=4) == sym_product_counts(e, 6)

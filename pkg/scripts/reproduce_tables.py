"""Print the McNugget statistics table and the error-analysis table."""
from fractions import Fraction

from weighted_lengths import (
    direction_data,
    empirical_stats,
    length_multiset,
    predicted_stats,
    validate,
    verify_bound,
)
from weighted_lengths.stats import round_half_even


def stats_table():
    ws = validate((4, 7, 2), (9, 20, 6))
    n = 10**5
    emp = empirical_stats(length_multiset(ws, n)).rounded(2)
    pred = predicted_stats(ws, n).rounded(2)
    print(f"m={ws.m} n={ws.n} element={n}")
    print(f"{'statistic':<10}{'actual':>12}{'predicted':>12}")
    for key in emp:
        print(f"{key:<10}{emp[key]!s:>12}{pred[key]!s:>12}")


def error_table():
    ws = validate((20, 9, 6), (1, 1, 1), theorem_mode=False)
    dd = direction_data(ws)
    print(f"\nm={ws.m} n={ws.n}")
    cols = ("n", "alpha", "beta", "mass", "integral", "error", "thm bound", "refined")
    print("".join(f"{c:>11}" for c in cols))
    for alpha, beta in ((8, 15), (7, Fraction("7.1"))):
        for n in (100, 1000, 10000):
            rep = verify_bound(ws, dd, n, alpha, beta)
            vals = [rep.scaled_mass, rep.integral, rep.error, rep.theorem_bound, rep.refined_bound]
            print(f"{n:>11}{float(alpha):>11}{float(beta):>11}"
                  + "".join(f"{round_half_even(v, 6)!s:>11}" for v in vals))


if __name__ == "__main__":
    stats_table()
    error_table()

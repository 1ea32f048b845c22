"""Smoke test for the `inveuler` extension module.

Build the module first (see README), then run:

    python python/smoke_test.py
"""

from itertools import permutations

import inveuler


def brute_f_row(n):
    """Signed rise counts over the involutions of S_n, straight from the definition."""
    row = [0] * max(n, 1)
    for p in permutations(range(1, n + 1)):
        if all(p[p[i] - 1] == i + 1 for i in range(n)):
            fixed = sum(p[i] == i + 1 for i in range(n))
            sign = (-1) ** ((n - fixed) // 2)
            rises = sum(p[i] < p[i + 1] for i in range(n - 1))
            row[rises] += sign
    return row


def main():
    assert inveuler.binomial(5, 2) == 10
    assert inveuler.binomial(-1, 0) == 1
    assert inveuler.factorial(25) == 15511210043330985984000000

    rows = inveuler.f_rows(7)
    for n in range(8):
        want = brute_f_row(n)
        assert rows[n] == want, (n, rows[n], want)
        assert [inveuler.f_signed(n, k) for k in range(len(want))] == want
        assert inveuler.brute_table(n, "f") == want

    assert inveuler.f_split(4, 1) == (1, 3)
    assert inveuler.a_hat(2, 2) == -2
    assert inveuler.a_total(2, 2) == 4
    assert inveuler.a_plus(2, 2) == 1
    assert inveuler.a_minus(2, 2) == 3
    assert inveuler.a_hat_bruteforce(5, 4) == inveuler.a_hat(5, 4)

    assert inveuler.f1_recurrence(5) == [1, 1, 0, -2, -2, 6]
    assert inveuler.egf_scaled(5) == inveuler.f1_recurrence(5)
    big = inveuler.f1_closed(300)
    assert big == inveuler.f1_recurrence(300)[300]
    assert big == 2 * inveuler.i_plus(300) - inveuler.involutions_count(300)
    assert inveuler.involutions_count(4) == 10

    p = inveuler.Permutation([2, 1, 4, 3])
    assert (p.rises(), p.descents(), p.fixed_points()) == (1, 2, 0)
    assert p.is_involution() and p.sign() == 1 == p.sign_involution()
    try:
        inveuler.Permutation([1, 1])
    except ValueError:
        pass
    else:
        raise AssertionError("duplicate entries accepted")

    g = inveuler.GeneralizedInvolution([1, 1], [1, 1], 1)
    assert (g.gfix(), g.sign()) == (0, -1)
    assert g.polarize() == inveuler.Permutation([2, 1])
    assert inveuler.GeneralizedInvolution.from_matrix([[0, 1], [1, 0]]).top == [1, 2]
    assert len(inveuler.enumerate_generalized(2, 2)) == 4
    assert inveuler.fibers(2, 2) == {(1, 2): 1, (2, 1): 3}

    assert inveuler.column_gf(2, 2) == [1, 2, -2]
    assert inveuler.verify_gf_identity(8, 8) == []
    assert inveuler.worpitzky_residual(2, 2) == 0
    assert inveuler.zeilberger_residual(10, 4) == 0

    report = inveuler.verify_identity("zeilberger", n_max=60)
    assert report["status"] == "ok" and report["n0"] <= 4, report
    report = inveuler.verify_identity("worpitzky")
    assert report["checked"] == 400 and report["status"] == "ok", report

    print("inveuler smoke test: ok")


if __name__ == "__main__":
    main()

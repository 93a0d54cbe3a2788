"""Smoke test for the hyperdet_schur extension module.

Build and install first:  pip install --no-build-isolation ./crates/python
"""

from fractions import Fraction

import hyperdet_schur as hs


def check_partitions():
    hook = hs.Partition([4, 1])
    assert [str(m) for m in hook.critical_set()] == ["(5)"]
    assert hs.Partition.parse("5").critical_set() == []
    assert hs.critical_set(hs.Partition([2, 2, 1])) == [hs.Partition([3, 1, 1])]
    assert hook.conjugate() == hs.Partition([2, 1, 1, 1])
    assert sum(lam.syt_count() ** 2 for lam in hs.all_partitions(5)) == 120


def check_algebra():
    sigma = hs.Permutation([2, 3, 1])
    tau = hs.Permutation([2, 1, 3])
    assert sigma.compose(tau).images == [3, 2, 1]
    assert (sigma * sigma.inverse()) == hs.Permutation.identity(3)
    c = hs.young_symmetrizer(hs.Partition([2, 1]))
    assert c * c == c.scale(3)
    assert hs.AlgebraElement.from_json(c.to_json(), 3) == c


def check_tensors():
    a = hs.Tensor.random(3, 3, seed=7)
    total = sum(hs.projector_rank(lam, 3) for lam in hs.all_partitions(3))
    assert total == 27
    col = hs.Partition([1, 1, 1])
    proj = hs.project_isotypic(col, a)
    assert hs.theorem_t2_check(col, proj)
    assert hs.diagonal_kernel_check(proj, [1, Fraction(1, 2), -3])
    assert hs.Tensor.from_json(a.to_json()) == a
    assert proj[0, 1, 2] == -proj[1, 0, 2]


def check_hyperdet():
    diag = hs.Tensor(3, 2, [1, 0, 0, 0, 0, 0, 0, 1])
    w = hs.Tensor(3, 2, [0, 1, 1, 0, 1, 0, 0, 0])
    assert hs.hyperdet_222(diag) == 1
    assert hs.hyperdet_222(w) == 0
    assert hs.hyperdet_222(hs.Tensor.rank_one([[1, 2], [3, -1], ["1/2", 5]])) == 0
    skew = [[0, 1, 2, 3], [-1, 0, 5, 7], [-2, -5, 0, 11], [-3, -7, -11, 0]]
    pf = hs.pfaffian(skew)
    assert isinstance(pf, Fraction) and pf == 1 * 11 - 2 * 7 + 3 * 5
    assert hs.determinant(skew) == pf ** 2


def check_suites():
    assert [hs.lemma1_det(mu) for mu in (1, 2, 3)] == [-1, 2, -3]
    reports = hs.main_theorem_suite(4, 3, trials=3, seed=7)
    assert [r["lambda"] for r in reports] == [[2, 2], [2, 1, 1]]
    assert all(r["verdict"] == "pass" for r in reports)
    doc = hs.report(p=2, n=2, trials=2)
    assert doc["verdict"] == "pass" and "pfaffian" in doc


def check_errors():
    for bad in (lambda: hs.Partition([1, 3]), lambda: hs.Tensor(3, 2, [0.5] * 8),
                lambda: hs.pfaffian([[1, 2], [2, 1]]), lambda: hs.report(p=6)):
        try:
            bad()
        except ValueError:
            continue
        raise AssertionError("expected ValueError")


if __name__ == "__main__":
    for check in (check_partitions, check_algebra, check_tensors, check_hyperdet, check_suites, check_errors):
        check()
        print(f"ok  {check.__name__}")
    print("smoke test passed")

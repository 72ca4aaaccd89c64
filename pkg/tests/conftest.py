import sys
import itertools
from fractions import Fraction

import pytest

from cubezero.exactalg import GF, QQ


@pytest.fixture(params=[2, 3, 5], ids=lambda p: f"GF{p}")
def small_field(request):
    return GF(request.param)


def cofactor_det(rows):
    """Laplace expansion along the first row; the independent determinant oracle."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def span_elements(F, vectors, n):
    """Every linear combination of ``vectors`` in ``F^n``, as a set of tuples."""
    out = set()
    for coeffs in itertools.product(F.elements(), repeat=len(vectors)):
        v = [F.zero] * n
        for c, b in zip(coeffs, vectors):
            v = [x + c * y for x, y in zip(v, b)]
        out.add(tuple(v))
    return out or {tuple([F.zero] * n)}


def hilbert_rows(n):
    return [[Fraction(1, i + j + 1) for j in range(n)] for i in range(n)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])

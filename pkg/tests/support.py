"""Shared helpers for the test suite."""

from brionatoms.clans import SymSpace


def all_spaces(max_n, cases=None):
    """Every valid symmetric space with rank at most max_n, optionally
    filtered to the given case names."""
    out = []
    for n in range(1, max_n + 1):
        out.append(SymSpace("AI", n))
        if n % 2:
            out.append(SymSpace("AII", n))
        for p in range(1, n + 1):
            out.append(SymSpace("AIII", n, p, n + 1 - p))
        for p in range(1, 2 * n + 1):
            out.append(SymSpace("BI", n, p, 2 * n + 1 - p))
        out.append(SymSpace("CI", n))
        for p in range(2, 2 * n, 2):
            out.append(SymSpace("CII", n, p, 2 * n - p))
        for p in range(1, 2 * n):
            case = "DI" if (p + n) % 2 == 0 else "DII"
            out.append(SymSpace(case, n, p, 2 * n - p))
        if n % 2 == 0:
            out.append(SymSpace("DIII", n))
        else:
            out.append(SymSpace("DIV", n))
    if cases is not None:
        out = [sp for sp in out if sp.case in cases]
    return out

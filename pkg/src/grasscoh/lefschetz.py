"""Hard Lefschetz instances and the linear system behind the induction step."""

from __future__ import annotations

from fractions import Fraction

from .exact_linalg import INCONSISTENT, UNDERDETERMINED, RationalMatrix, det, inverse, solve
from .partitions import complement_in_box, conjugate, dominates, enumerate_in_box
from .report import ConjectureReport, timed
from .schur_ring import BoxContext, e, e1_power, e_monomial, pieri_e, schur, top_coefficient


def lefschetz_matrix(k: int, l: int, i: int) -> RationalMatrix:
    """Multiplication by e_1^{kl-2i} from degree i to degree kl-i.

    Column t is the image of the t-th weight-i Schur class; rows follow the
    weight-(kl-i) classes.  Both bases are in canonical order.
    """
    if not 0 <= i <= k * l // 2:
        raise ValueError(f"need 0 <= i <= {k * l // 2}, got {i}")
    ctx = BoxContext(k, l)
    src = enumerate_in_box((k, l), i)
    dst = enumerate_in_box((k, l), k * l - i)
    cols = []
    for lam in src:
        img = e1_power(ctx, k * l - 2 * i, schur(ctx, lam)).terms
        cols.append([img.get(nu, 0) for nu in dst])
    return RationalMatrix([[cols[c][r] for c in range(len(src))] for r in range(len(dst))], len(src))


def check_hard_lefschetz(k: int, l: int) -> ConjectureReport:
    with timed() as clock:
        witness = None
        for i in range(k * l // 2 + 1):
            mat = lefschetz_matrix(k, l, i)
            if mat.rows != mat.cols or det(mat) == 0:
                witness = {"degree": i, "shape": list(mat.shape), "matrix": mat.to_json()}
                break
    return ConjectureReport.make("lefschetz", k, l, None, witness, clock)


def _section4_precondition(k, l, m):
    if not 1 <= m <= k:
        return "1 <= m <= k"
    if k * l < 2 * m:
        return "k*l >= 2m"
    return None


def section4_indices(k: int, l: int, m: int) -> list:
    return enumerate_in_box((k, l), m)


def _e_lambda_lift(ctx: BoxContext, lam, n: int):
    x = e_monomial(ctx, lam)
    return e1_power(ctx, n, x)


def section4_matrix(k: int, l: int, m: int) -> RationalMatrix:
    """A[lam][mu] = coefficient of s_{l^k} in s_mu * e_lam * e_1^{kl-2m}.

    Associates left to right: start from s_mu, add each part of lam by a
    vertical-strip step, then kl-2m single boxes.
    """
    bad = _section4_precondition(k, l, m)
    if bad:
        raise ValueError(f"precondition violated: {bad}")
    ctx = BoxContext(k, l)
    idx = section4_indices(k, l, m)
    n = k * l - 2 * m
    rows = []
    for lam in idx:
        row = []
        for mu in idx:
            x = schur(ctx, mu)
            for part in lam:
                x = pieri_e(x, part)
            row.append(top_coefficient(e1_power(ctx, n, x)))
        rows.append(row)
    return RationalMatrix(rows, len(idx))


def section4_matrix_dual(k: int, l: int, m: int) -> RationalMatrix:
    """Same matrix read off by Poincare duality: coefficient of s_{mu^c} in e_lam e_1^{kl-2m}."""
    ctx = BoxContext(k, l)
    idx = section4_indices(k, l, m)
    n = k * l - 2 * m
    rows = []
    for lam in idx:
        terms = _e_lambda_lift(ctx, lam, n).terms
        rows.append([terms.get(complement_in_box(mu, (k, l)), 0) for mu in idx])
    return RationalMatrix(rows, len(idx))


def section4_rhs(k: int, l: int, m: int) -> list:
    """b[lam] = coefficient of s_{l^k} in e_m e_lam e_1^{kl-2m}."""
    ctx = BoxContext(k, l)
    n = k * l - 2 * m
    return [
        top_coefficient(_e_lambda_lift(ctx, (m,) + tuple(lam), n))
        for lam in section4_indices(k, l, m)
    ]


def identity_solution(k: int, l: int, m: int) -> list:
    """Schur coordinates of e_m itself in degree m: the point fixed by the identity map.

    e_m is the column class s_{1^m}, so this is the indicator of 1^m.
    """
    terms = e(BoxContext(k, l), m).terms
    return [Fraction(terms.get(mu, 0)) for mu in section4_indices(k, l, m)]


def check_ax_equals_b(k: int, l: int, m: int) -> ConjectureReport:
    bad = _section4_precondition(k, l, m)
    if bad:
        return ConjectureReport.not_applicable("identity-check", k, l, m, bad)
    with timed() as clock:
        a = section4_matrix(k, l, m)
        b = section4_rhs(k, l, m)
        x = solve(a, b)
        expected = identity_solution(k, l, m)
        idx = section4_indices(k, l, m)
        witness = None
        if x in (INCONSISTENT, UNDERDETERMINED):
            witness = {"stage": "solve", "outcome": x, "matrix": a.to_json()}
        elif x != expected:
            witness = {
                "stage": "solution",
                "basis": [list(mu) for mu in idx],
                "solution": [str(v) for v in x],
                "expected": [str(v) for v in expected],
            }
        elif a.apply(expected) != [Fraction(v) for v in b]:
            witness = {"stage": "substitution", "rhs": [str(v) for v in b]}
    details = {
        "basis": [list(mu) for mu in idx],
        "solution": x,
        "rhs": b,
        "matrix": a,
    }
    report = ConjectureReport.make("identity-check", k, l, m, witness, clock, details)
    return report


def e_schur_transition(k: int, l: int, m: int):
    """Rows e_{nu'} for nu in the weight-m box partitions, columns s_mu; both canonical order."""
    ctx = BoxContext(k, l)
    idx = enumerate_in_box((k, l), m)
    rows = []
    for nu in idx:
        terms = e_monomial(ctx, conjugate(nu)).terms
        rows.append([terms.get(mu, 0) for mu in idx])
    return idx, RationalMatrix(rows, len(idx))


def check_e_schur_triangular(k: int, l: int, m: int) -> ConjectureReport:
    """e_{nu'} = s_nu + (terms strictly below nu in dominance), for every box partition nu of m.

    The order-independent half checks that every off-diagonal nonzero entry
    is dominated by its row index; the canonical order being a linear
    extension then makes the matrix lower unitriangular.
    """
    if not 0 <= m <= k * l:
        return ConjectureReport.not_applicable("identity-check", k, l, m, "0 <= m <= k*l")
    with timed() as clock:
        idx, t = e_schur_transition(k, l, m)
        witness = None
        for r, nu in enumerate(idx):
            if t[r, r] != 1:
                witness = {"row": list(nu), "diagonal": str(t[r, r])}
                break
            for c, mu in enumerate(idx):
                if c != r and t[r, c] != 0 and not dominates(nu, mu):
                    witness = {"row": list(nu), "column": list(mu), "entry": str(t[r, c])}
                    break
                if c > r and t[r, c] != 0:
                    witness = {"row": list(nu), "column": list(mu), "entry": str(t[r, c]),
                               "reason": "canonical order is not a linear extension here"}
                    break
            if witness:
                break
    return ConjectureReport.make("identity-check", k, l, m, witness, clock, {"matrix": t, "basis": idx})


def check_section4_invertible(k: int, l: int, m: int) -> ConjectureReport:
    bad = _section4_precondition(k, l, m)
    if bad:
        return ConjectureReport.not_applicable("identity-check", k, l, m, bad)
    with timed() as clock:
        a = section4_matrix(k, l, m)
        witness = None
        if a != section4_matrix_dual(k, l, m):
            witness = {"stage": "duality", "matrix": a.to_json()}
        elif inverse(a) is None:
            witness = {"stage": "inverse", "matrix": a.to_json()}
    return ConjectureReport.make("identity-check", k, l, m, witness, clock)

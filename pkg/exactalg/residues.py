from typing import Dict, List, Tuple

import mpmath

from config import RESIDUE_DPS, RESIDUE_THRESHOLD
from exactalg.integration import IntegrationObstruction
from exactalg.rational_function import GaussianRational, RationalFunction

MpRoots = List[Tuple[mpmath.mpc, int]]


def _mpc(c: GaussianRational) -> mpmath.mpc:
    return mpmath.mpc(
        mpmath.mpf(c.re.numerator) / c.re.denominator,
        mpmath.mpf(c.im.numerator) / c.im.denominator,
    )


def _poly_value(coeffs_desc: List[mpmath.mpc], point: mpmath.mpc) -> mpmath.mpc:
    return mpmath.polyval(coeffs_desc, point)


def denominator_roots(f: RationalFunction) -> MpRoots:
    """Distinct poles of f with multiplicities, located from the exact squarefree split"""
    roots: MpRoots = []
    _, factors = f.den.sqf_list()
    for factor, multiplicity in factors:
        if factor.degree() <= 0:
            continue
        coeffs = [_mpc(GaussianRational.from_expr(c)) for c in factor.all_coeffs()]
        if len(coeffs) == 2:
            located = [-coeffs[1] / coeffs[0]]
        else:
            located = mpmath.polyroots(coeffs, maxsteps=200, extraprec=4 * mpmath.mp.dps)
        roots.extend((root, multiplicity) for root in located)
    return roots


def residues(f: RationalFunction, dps: int = RESIDUE_DPS) -> List[Tuple[mpmath.mpc, mpmath.mpc]]:
    """(pole, residue) pairs at the given working precision"""
    with mpmath.workdps(dps):
        roots = denominator_roots(f)
        num = [_mpc(c) for c in reversed(f.num_coefficients())] or [mpmath.mpc(0)]

        result = []
        for index, (pole, multiplicity) in enumerate(roots):
            others = [r for j, r in enumerate(roots) if j != index]

            def regular_part(t, others=others):
                value = _poly_value(num, t)
                for other, m in others:
                    value /= (t - other) ** m
                return value

            if multiplicity == 1:
                residue = regular_part(pole)
            else:
                residue = mpmath.taylor(regular_part, pole, multiplicity - 1)[-1]
            result.append((pole, residue))
        return result


def has_nonzero_residue(
    f: RationalFunction,
    dps: int = RESIDUE_DPS,
    threshold: float = RESIDUE_THRESHOLD,
) -> bool:
    """Brute-force logarithm test, independent of Hermite reduction"""
    with mpmath.workdps(dps):
        total = mpmath.fsum(abs(res) for _, res in residues(f, dps))
        return total > threshold


def residue_report(obstruction: IntegrationObstruction, digits: int = 15) -> List[Dict[str, str]]:
    return [
        {"pole": mpmath.nstr(pole, digits), "residue": mpmath.nstr(residue, digits)}
        for pole, residue in residues(obstruction.remainder)
        if abs(residue) > RESIDUE_THRESHOLD
    ]

"""Symbolic principal part of the zeta function from Laurent data and scaling laws.

The unstable contribution ``I0(Phi_lambda)`` is a sum of terms
``c lambda^(-j)`` and ``c lambda^(-j) log(lambda)``.  Integrating against
``lambda^s d^x lambda`` over ``(0, 1]`` turns these into ``c / (s - j)`` and
``-c / (s - j)^2``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import sympy as sp

from .errors import MalformedLaurent

s = sp.Symbol("s")
lam = sp.Symbol("lambda", positive=True)

# Phi(0), Phi^(0), the volume constant
PHI0 = sp.Symbol("Phi0")
PHIHAT0 = sp.Symbol("PhiHat0")
VOL = sp.Symbol("Vol")
# Sigma_1(R_2 Phi, omega_1, 2) and its Fourier-side partner
SIG1 = sp.Symbol("Sigma1")
SIG1HAT = sp.Symbol("Sigma1Hat")
# Laurent coefficients (-1) and (0) at s = 1 of Sigma_{k1,1}(R_1 Phi, omega_2, s)
RES = sp.Symbol("SigmaRes")
CONST = sp.Symbol("SigmaConst")
RESHAT = sp.Symbol("SigmaResHat")
CONSTHAT = sp.Symbol("SigmaConstHat")

SYMBOLS = {str(x): x for x in (PHI0, PHIHAT0, VOL, SIG1, SIG1HAT, RES, CONST, RESHAT, CONSTHAT)}

# Phi <-> Phi^ relabeling used by the functional equation
SWAP = {
    PHI0: PHIHAT0,
    PHIHAT0: PHI0,
    SIG1: SIG1HAT,
    SIG1HAT: SIG1,
    RES: RESHAT,
    RESHAT: RES,
    CONST: CONSTHAT,
    CONSTHAT: CONST,
}

FE_CENTER = 8


@dataclass(frozen=True)
class Flags:
    sharp: bool = False
    one: bool = False
    two: bool = False

    @classmethod
    def parse(cls, text: str) -> Flags:
        names = {t.strip() for t in text.split(",") if t.strip()}
        unknown = names - {"d#", "d1", "d2"}
        if unknown:
            raise ValueError(f"unknown flags {sorted(unknown)}")
        return cls("d#" in names, "d1" in names, "d2" in names)


def laurent_scaling(c_m1, c_0, power_const, power_slope, s0=1, lam_=lam):
    """Laurent data at ``s0`` of ``lambda^(power_const + power_slope s) * Sigma(s)``.

    Returns the new ``(c_{-1}, c_0)``; the constant term picks up
    ``power_slope * log(lambda) * c_{-1}``.
    """
    factor = lam_ ** (power_const + power_slope * s0)
    return factor * c_m1, factor * (c_0 + power_slope * sp.log(lam_) * c_m1)


def scale_laws(lam_=lam) -> dict:
    """How each input distribution changes when ``Phi`` is replaced by ``x -> Phi(lambda x)``."""
    res, const = laurent_scaling(RES, CONST, -1, -3, lam_=lam_)
    res_hat, const_hat = laurent_scaling(RESHAT, CONSTHAT, -7, 3, lam_=lam_)
    return {
        PHI0: PHI0,
        PHIHAT0: lam_**-8 * PHIHAT0,
        VOL: VOL,
        SIG1: lam_**-2 * SIG1,
        SIG1HAT: lam_**-6 * SIG1HAT,
        RES: res,
        RESHAT: res_hat,
        CONST: const,
        CONSTHAT: const_hat,
    }


def unstable_distribution(flags: Flags):
    """``I0(Phi, omega)`` in terms of the input symbols."""
    return (
        int(flags.sharp) * VOL * (PHIHAT0 - PHI0)
        + int(flags.two) * (SIG1HAT - SIG1)
        + int(flags.one) * (CONSTHAT - CONST)
    )


@dataclass
class PrincipalPart:
    """Pole location -> {order: coefficient}."""

    terms: dict = field(default_factory=dict)

    def add(self, pole, order: int, coeff):
        pole = sp.nsimplify(pole)
        by_order = self.terms.setdefault(pole, {})
        by_order[order] = sp.expand(by_order.get(order, 0) + coeff)

    def cleaned(self) -> PrincipalPart:
        out = PrincipalPart()
        for pole, by_order in self.terms.items():
            for order, coeff in by_order.items():
                coeff = sp.simplify(coeff)
                if coeff != 0:
                    out.terms.setdefault(pole, {})[order] = coeff
        return out

    def as_expression(self, var=s):
        return sum(
            (c / (var - pole) ** order for pole, by in self.terms.items() for order, c in by.items()),
            sp.Integer(0),
        )

    def poles(self) -> list:
        return sorted(self.terms)

    def max_order(self, pole) -> int:
        return max(self.terms.get(sp.nsimplify(pole), {0: 0}))

    def coefficient(self, pole, order: int):
        return self.terms.get(sp.nsimplify(pole), {}).get(order, sp.Integer(0))

    def subs(self, mapping) -> PrincipalPart:
        out = PrincipalPart()
        for pole, by in self.terms.items():
            for order, c in by.items():
                out.add(pole, order, c.subs(mapping, simultaneous=True))
        return out.cleaned()

    def is_empty(self) -> bool:
        return not self.cleaned().terms

    def to_json(self) -> dict:
        return {
            str(pole): [{"order": order, "coefficient": str(c)} for order, c in sorted(by.items())]
            for pole, by in sorted(self.terms.items())
        }

    def __eq__(self, other):
        if not isinstance(other, PrincipalPart):
            return NotImplemented
        return sp.simplify(self.as_expression() - other.as_expression()) == 0


def assemble_principal_part(i0_lambda, lam_=lam) -> PrincipalPart:
    """Integrate ``lambda^s I0(Phi_lambda)`` over ``(0, 1]`` term by term."""
    pp = PrincipalPart()
    expr = sp.expand(i0_lambda)
    if expr == 0:
        return pp
    for term in sp.Add.make_args(expr):
        coeff, dep = term.as_independent(lam_, as_Add=False)
        powers = dep.as_powers_dict() if dep != 1 else {}
        exponent = sp.Integer(0)
        log_power = 0
        for base, e in powers.items():
            if base == lam_:
                exponent += e
            elif base == sp.log(lam_):
                log_power = int(e)
            else:
                raise MalformedLaurent(f"unexpected factor {base}**{e} in term {term}")
        if not exponent.is_number:
            raise MalformedLaurent(f"non-numeric lambda exponent in {term}")
        pole = -exponent
        if log_power == 0:
            pp.add(pole, 1, coeff)
        elif log_power == 1:
            pp.add(pole, 2, -coeff)
        else:
            raise MalformedLaurent(f"log(lambda)^{log_power} gives a pole of order > 2 in {term}")
    return pp.cleaned()


def log_moment(j, power: int = 1):
    """Closed form of ``int_0^1 lambda^(s-j) log(lambda)^power d lambda / lambda``."""
    return (-1) ** power * sp.factorial(power) / (s - j) ** (power + 1)


def residue_mapping(residue_identity: bool = False, vanishing_residues: bool = False) -> dict:
    mapping = {}
    if residue_identity:
        mapping[RESHAT] = RES
    if vanishing_residues:
        mapping[RES] = 0
        mapping[RESHAT] = 0
    return mapping


def principal_part(flags: Flags, residue_identity: bool = False, vanishing_residues: bool = False, values=None) -> PrincipalPart:
    """Full pipeline: unstable distribution -> scaling -> integration.

    ``residue_identity`` imposes ``SigmaResHat = SigmaRes``;
    ``vanishing_residues`` sets both residues to zero.
    """
    scaled = unstable_distribution(flags).subs(scale_laws(), simultaneous=True)
    pp = assemble_principal_part(scaled)
    mapping = residue_mapping(residue_identity, vanishing_residues)
    if values:
        mapping.update(values)
    return pp.subs(mapping) if mapping else pp


def fe_symmetry_check(pp: PrincipalPart, center=FE_CENTER, identify=None) -> bool:
    """True iff ``P(s) == swap(P)(center - s)``, the shape forced by the functional equation.

    ``identify`` is re-applied after the swap, for parts built under symbol identifications
    such as ``SigmaResHat = SigmaRes``.
    """
    expr = pp.as_expression()
    mirrored = expr.subs(SWAP, simultaneous=True).subs(s, center - s)
    if identify:
        mirrored = mirrored.subs(identify, simultaneous=True)
    return sp.simplify(expr - mirrored) == 0


def parse_inputs(raw: dict) -> dict:
    """Map input names to sympy values; unknown names are rejected."""
    out = {}
    for name, value in raw.items():
        if name not in SYMBOLS:
            raise ValueError(f"unknown input {name!r}; expected one of {sorted(SYMBOLS)}")
        out[SYMBOLS[name]] = sp.sympify(value)
    return out


def dumps(pp: PrincipalPart, flags: Flags) -> str:
    return json.dumps(
        {"flags": {"d#": flags.sharp, "d1": flags.one, "d2": flags.two}, "poles": pp.to_json()},
        indent=2,
        sort_keys=True,
    )

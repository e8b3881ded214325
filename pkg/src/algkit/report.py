"""Verification reports and the shared identity-checking driver."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .core import Space, Vector
from .expr import Context, Identity, first_mismatch


@dataclass(frozen=True)
class Counterexample:
    indices: tuple[int, ...]
    names: tuple[str, ...]
    lhs: Vector | None
    rhs: Vector | None
    power: int | None = None
    note: str = ""


@dataclass(frozen=True)
class IdentityResult:
    name: str
    holds: bool
    counterexample: Counterexample | None = None


@dataclass
class VerificationReport:
    subject: str
    results: list[IdentityResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.results)

    @property
    def status(self) -> str:
        return "holds" if self.holds else "fails"

    def result(self, name: str) -> IdentityResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def failures(self) -> list[IdentityResult]:
        return [r for r in self.results if not r.holds]

    def extend(self, other: "VerificationReport", prefix: str = "") -> "VerificationReport":
        for r in other.results:
            self.results.append(IdentityResult(prefix + r.name, r.holds, r.counterexample))
        for n in other.notes:
            if n not in self.notes:
                self.notes.append(n)
        return self

    def __bool__(self):
        return self.holds

    def summary(self) -> str:
        lines = [f"{self.subject}: {self.status}"]
        for r in self.results:
            mark = "ok" if r.holds else "FAIL"
            line = f"  [{mark}] {r.name}"
            ce = r.counterexample
            if ce is not None:
                at = ", ".join(ce.names)
                line += f" at ({at})"
                if ce.power is not None:
                    line += f", t^{ce.power}"
                if ce.lhs is not None:
                    line += f": lhs = {ce.lhs}, rhs = {ce.rhs}"
                if ce.note:
                    line += f" ({ce.note})"
            lines.append(line)
        return "\n".join(lines)


def _vector(space: Space, tensors, power: int, idx) -> Vector:
    t = tensors[power]
    return Vector(space, [t[idx + (k,)] for k in range(space.dim)])


def check_identities(subject: str, identities: Sequence[Identity], ctx: Context,
                     spaces: Mapping[str, Space], deformation: bool = False,
                     notes: Sequence[str] = ()) -> VerificationReport:
    report = VerificationReport(subject, notes=list(notes))
    for ident in identities:
        found = first_mismatch(ctx, ident)
        if found is None:
            report.results.append(IdentityResult(ident.name, True))
            continue
        power, idx, lhs, rhs = found
        names = tuple(spaces[ident.role(v)].names[i] for v, i in zip(ident.variables, idx))
        out = spaces[ident.out_role]
        ce = Counterexample(idx, names, _vector(out, lhs, power, idx), _vector(out, rhs, power, idx),
                            power if deformation else None)
        report.results.append(IdentityResult(ident.name, False, ce))
    return report


def fraction_str(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

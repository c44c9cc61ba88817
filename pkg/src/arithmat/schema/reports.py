"""
Report models written by the command line. Each one renders as
canonical text or as JSON, and the JSON parses back to an equal model.

Created: 18/10/2026
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Literal

from pydantic import BaseModel

from arithmat.schema.inputs import ExplicitInput, GroupSpec, RepresentationInput
from arithmat.tutte import BiPoly, UniPoly

if TYPE_CHECKING:
    from arithmat.activity import Lists, Matching, PairClass
    from arithmat.matroid import AxiomReport, GroundSet
    from arithmat.representation import DualIsoReport, Representation
    from arithmat.toric import AesReport, ComponentReport, PointRecord


def _braces(names: list[str]) -> str:
    return "{" + ",".join(names) + "}"


class Report(BaseModel):
    command: str

    def to_text(self) -> str:
        raise NotImplementedError

    def render(self, fmt: str) -> str:
        """
        The report as `fmt` ("text" or "json").
        """
        if fmt == "json":
            return self.model_dump_json(indent=2)
        return self.to_text()

    @property
    def checked(self) -> bool:
        """
        Whether the report carries a verification at all.
        """
        return False

    @property
    def mismatch(self) -> bool:
        """
        Whether a verification in the report failed.
        """
        return False


class PolyModel(BaseModel):
    text: str
    terms: list[tuple[int, int, str]]

    @classmethod
    def from_poly(cls, p: BiPoly) -> PolyModel:
        return cls(text=p.to_text(), terms=[(i, j, str(c)) for (i, j), c in p.terms()])

    def to_poly(self) -> BiPoly:
        return BiPoly({(i, j): int(c) for i, j, c in self.terms})


class UniPolyModel(BaseModel):
    text: str
    coeffs: list[str]

    @classmethod
    def from_poly(cls, p: UniPoly, var: str = "q") -> UniPolyModel:
        return cls(text=p.to_text(var), coeffs=[str(c) for c in p.coeffs])

    def to_poly(self) -> UniPoly:
        return UniPoly([int(c) for c in self.coeffs])


class TutteReport(Report):
    command: Literal["tutte"] = "tutte"
    method: Literal["subset", "delcon", "both"]
    polynomial: PolyModel
    subset: PolyModel | None = None
    delcon: PolyModel | None = None

    @property
    def checked(self) -> bool:
        return self.subset is not None and self.delcon is not None

    @property
    def mismatch(self) -> bool:
        return self.subset is not None and self.delcon is not None and self.subset.terms != self.delcon.terms

    def to_text(self) -> str:
        if self.subset is None or self.delcon is None or not self.mismatch:
            return self.polynomial.text
        return f"subset: {self.subset.text}\ndelcon: {self.delcon.text}"


class DualReport(Report):
    command: Literal["dual"] = "dual"
    matroid: ExplicitInput

    def to_text(self) -> str:
        m = self.matroid
        lines = []
        for mask in range(1 << m.size):
            names = [m.labels[i] if m.labels else str(i) for i in range(m.size) if mask >> i & 1]
            lines.append(f"{_braces(names)}: rank {m.rank[str(mask)]}, multiplicity {m.multiplicity[str(mask)]}")
        return "\n".join(lines)


class DiscrepancyModel(BaseModel):
    sublist: list[str]
    field: str
    expected: int
    actual: int


class GaleDualReport(Report):
    command: Literal["gale-dual"] = "gale-dual"
    representation: RepresentationInput
    verified: bool | None
    discrepancies: list[DiscrepancyModel] = []

    @classmethod
    def build(cls, dual: Representation, report: DualIsoReport | None, ground: GroundSet) -> GaleDualReport:
        return cls(
            representation=RepresentationInput(
                kind="representation",
                group=GroupSpec(free_rank=dual.group.free_rank, torsion=list(dual.group.torsion)),
                elements=[list(e.coords) for e in dual.elements],
                labels=list(dual.labels) if dual.labels else None,
            ),
            verified=None if report is None else report.passed,
            discrepancies=[
                DiscrepancyModel(sublist=ground.names(d.sublist), field=d.field, expected=d.expected, actual=d.actual)
                for d in (report.discrepancies if report is not None else [])
            ],
        )

    @property
    def checked(self) -> bool:
        return self.verified is not None

    @property
    def mismatch(self) -> bool:
        return self.verified is False

    def to_text(self) -> str:
        r = self.representation
        group = "Z^" + str(r.group.free_rank) + "".join(f" + Z/{d}" for d in r.group.torsion)
        lines = [f"group: {group}"]
        for i, element in enumerate(r.elements):
            name = r.labels[i] if r.labels else str(i)
            lines.append(f"{name}: ({', '.join(str(c) for c in element)})")
        if self.verified is not None:
            lines.append(f"dual isomorphism: {'ok' if self.verified else 'FAILED'}")
        lines.extend(
            f"  {_braces(d.sublist)} {d.field}: expected {d.expected}, got {d.actual}" for d in self.discrepancies
        )
        return "\n".join(lines)


class WitnessModel(BaseModel):
    a: list[str]
    b: list[str]
    f: list[str]
    t: list[str]


class AxiomEntry(BaseModel):
    axiom: str
    description: str
    passed: bool
    violations: int
    witnesses: list[WitnessModel]


class AxiomsReport(Report):
    command: Literal["check-axioms"] = "check-axioms"
    passed: bool
    axioms: list[AxiomEntry]

    @classmethod
    def build(cls, report: AxiomReport, ground: GroundSet) -> AxiomsReport:
        entries = [
            AxiomEntry(
                axiom=axiom.value,
                description=axiom.description,
                passed=result.passed,
                violations=result.violations,
                witnesses=[
                    WitnessModel(a=ground.names(w.a), b=ground.names(w.b), f=ground.names(w.f), t=ground.names(w.t))
                    for w in result.witnesses
                ],
            )
            for axiom, result in report.results.items()
        ]
        return cls(passed=report.passed, axioms=entries)

    @property
    def checked(self) -> bool:
        return True

    @property
    def mismatch(self) -> bool:
        return not self.passed

    def to_text(self) -> str:
        lines = []
        for entry in self.axioms:
            status = "ok" if entry.passed else f"FAILED ({entry.violations} violations)"
            lines.append(f"axiom {entry.axiom}: {status}")
            lines.extend(
                f"  A={_braces(w.a)} B={_braces(w.b)} F={_braces(w.f)} T={_braces(w.t)}" for w in entry.witnesses
            )
        return "\n".join(lines)


class WeightedModel(BaseModel):
    sublist: list[str]
    weight: int


class ClassModel(BaseModel):
    active: list[str]
    weight: int

    @classmethod
    def build(cls, pc: PairClass, ground: GroundSet) -> ClassModel:
        return cls(active=ground.names(pc.active), weight=pc.weight)


class EntryModel(BaseModel):
    primal: ClassModel
    dual: ClassModel
    count: int


class MatchingModel(BaseModel):
    basis: list[str]
    entries: list[EntryModel]
    summand: PolyModel


class ActivityReport(Report):
    command: Literal["activity"] = "activity"
    order: list[str]
    primal: list[WeightedModel]
    dual: list[WeightedModel]
    matchings: list[MatchingModel]
    mbar: PolyModel
    tutte: PolyModel

    @classmethod
    def build(
        cls,
        ground: GroundSet,
        order: list[int],
        lists: Lists,
        matchings: list[tuple[Matching, BiPoly]],
        mbar: BiPoly,
        tutte: BiPoly,
    ) -> ActivityReport:
        return cls(
            order=[ground.name(i) for i in order],
            primal=[WeightedModel(sublist=ground.names(w.sublist), weight=w.weight) for w in lists.primal],
            dual=[WeightedModel(sublist=ground.names(w.sublist), weight=w.weight) for w in lists.dual],
            matchings=[
                MatchingModel(
                    basis=ground.names(matching.basis),
                    entries=[
                        EntryModel(
                            primal=ClassModel.build(e.primal, ground),
                            dual=ClassModel.build(e.dual, ground),
                            count=e.count,
                        )
                        for e in matching.entries
                    ],
                    summand=PolyModel.from_poly(summand),
                )
                for matching, summand in matchings
            ],
            mbar=PolyModel.from_poly(mbar),
            tutte=PolyModel.from_poly(tutte),
        )

    @property
    def checked(self) -> bool:
        return True

    @property
    def mismatch(self) -> bool:
        return self.mbar.terms != self.tutte.terms

    def to_text(self) -> str:
        def weighted(items: list[WeightedModel]) -> str:
            return ", ".join(f"{_braces(w.sublist)}^{w.weight}" for w in items)

        lines = [f"order: {'<'.join(self.order)}", f"L_X: {weighted(self.primal)}", f"L_X*: {weighted(self.dual)}"]
        for matching in self.matchings:
            lines.append(f"basis {_braces(matching.basis)}: {matching.summand.text}")
            lines.extend(
                f"  {_braces(e.primal.active)}^{e.primal.weight} -> {_braces(e.dual.active)}^{e.dual.weight}:"
                f" {e.count}"
                for e in matching.entries
            )
        lines.append(f"mbar: {self.mbar.text}")
        if self.mismatch:
            lines.append(f"tutte: {self.tutte.text}")
        return "\n".join(lines)


class PointModel(BaseModel):
    values: list[str]
    x_p: list[str]


class CountModel(BaseModel):
    sublist: list[str]
    points: int
    multiplicity: int


class PointsReport(Report):
    command: Literal["points"] = "points"
    points: list[PointModel]
    components_ok: bool
    count_discrepancies: list[CountModel]
    aes_ok: bool
    aes_lhs: UniPolyModel
    aes_rhs: UniPolyModel

    @classmethod
    def build(
        cls,
        records: list[PointRecord],
        counts: ComponentReport,
        aes: AesReport,
        ground: GroundSet,
    ) -> PointsReport:
        return cls(
            points=[PointModel(values=r.point.to_strings(), x_p=ground.names(r.x_p)) for r in records],
            components_ok=counts.passed,
            count_discrepancies=[
                CountModel(sublist=ground.names(d.sublist), points=d.points, multiplicity=d.multiplicity)
                for d in counts.discrepancies
            ],
            aes_ok=aes.passed,
            aes_lhs=UniPolyModel.from_poly(aes.lhs, "y"),
            aes_rhs=UniPolyModel.from_poly(aes.rhs, "y"),
        )

    @property
    def checked(self) -> bool:
        return True

    @property
    def mismatch(self) -> bool:
        return not (self.components_ok and self.aes_ok)

    def to_text(self) -> str:
        lines = [f"({', '.join(p.values)}): {_braces(p.x_p)}" for p in self.points]
        lines.append(f"component counts: {'ok' if self.components_ok else 'FAILED'}")
        lines.extend(
            f"  {_braces(d.sublist)}: {d.points} points, m = {d.multiplicity}" for d in self.count_discrepancies
        )
        status = "ok" if self.aes_ok else "FAILED"
        lines.append(f"M(1,y) = sum of T_Xp(1,y): {status} ({self.aes_lhs.text} vs {self.aes_rhs.text})")
        return "\n".join(lines)


class SpecializeReport(Report):
    command: Literal["specialize"] = "specialize"
    at: str
    integer: int | None = None
    polynomial: UniPolyModel | None = None

    @classmethod
    def build(cls, at: str, value: int | UniPoly) -> SpecializeReport:
        if isinstance(value, UniPoly):
            return cls(at=at, polynomial=UniPolyModel.from_poly(value))
        return cls(at=at, integer=value)

    def to_text(self) -> str:
        return self.polynomial.text if self.polynomial is not None else str(self.integer)


class PropertyModel(BaseModel):
    name: str
    holds: bool
    detail: str | None = None


class PropsReport(Report):
    command: Literal["props"] = "props"
    properties: list[PropertyModel]

    def to_text(self) -> str:
        lines = []
        for prop in self.properties:
            line = f"{prop.name}: {'yes' if prop.holds else 'no'}"
            if prop.detail:
                line += f" ({prop.detail})"
            lines.append(line)
        return "\n".join(lines)

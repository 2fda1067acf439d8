"""Essential decomposition bookkeeping and the convex-block assembly.

The ambient surface is decomposed into essential subsurfaces (annuli and
curved surfaces); each non-trivial basic piece is assigned to one of them,
and only the homological shadow of a subsurface (a subspace basis) is kept.
A chain is summarized by its *marked support*: the set of subsurfaces it
visits plus left/right orientation marks at a repelling initial annulus and
an attracting final annulus.  Chains sharing a marked support pool into one
*block*: the convex hull of their rotation sets coned to the origin.  The
number of blocks is bounded by four per support and the per-genus budget of
supports, which is what the structural report verifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Mapping, Sequence

from .errors import ModelValidationError
from .exactgeom import (
    RationalPolytope,
    SubspaceBasis,
    Vector,
    contains_point,
    extreme_points,
    in_span,
    rank_of,
    zero_vector,
)
from .heteroclinic import (
    Chain,
    HeteroclinicPoset,
    chain_rotation_set,
    maximal_nontrivial_chains,
)
from .markov import ANNULAR, ATTRACTING, CURVED, REPELLING, TRIVIAL, BasicPieceModel

if TYPE_CHECKING:  # pragma: no cover
    from .model import ModelDocument

ANNULUS = "annulus"
CURVED_SURFACE = "curved_surface"
SUBSURFACE_KINDS = (ANNULUS, CURVED_SURFACE)

NO_MARK = "0"


@dataclass(frozen=True)
class Subsurface:
    id: str
    kind: str
    subspace: SubspaceBasis


@dataclass(frozen=True)
class DecompositionModel:
    subsurfaces: tuple[Subsurface, ...]
    assignment: Mapping[str, str]

    def subsurface(self, name: str) -> Subsurface:
        for sub in self.subsurfaces:
            if sub.id == name:
                return sub
        raise KeyError(name)


@dataclass(frozen=True)
class MarkedSupport:
    support: frozenset[str]
    initial_mark: str
    final_mark: str

    def sort_key(self) -> tuple:
        return (tuple(sorted(self.support)), self.initial_mark, self.final_mark)

    def label(self) -> str:
        return "+".join(sorted(self.support)) + f"|{self.initial_mark}|{self.final_mark}"


@dataclass(frozen=True)
class Block:
    """One convex block: coned chain rotation sets sharing a marked support."""

    key: MarkedSupport
    polytope: RationalPolytope
    chains: tuple[Chain, ...]


@dataclass(frozen=True)
class StructureCheck:
    name: str
    passed: bool
    details: tuple[str, ...] = ()


@dataclass(frozen=True)
class StructureReport:
    checks: tuple[StructureCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> StructureCheck:
        for entry in self.checks:
            if entry.name == name:
                return entry
        raise KeyError(name)


def block_budget(genus: int) -> int:
    """Upper bound on the number of blocks: four per admissible support."""
    return 4 * 2 ** (5 * genus - 5)


def validate_decomposition(model: "ModelDocument") -> list[str]:
    """Static invariants of the decomposition (no chain data needed)."""
    out: list[str] = []
    decomposition = model.decomposition
    genus = model.genus
    ids = [sub.id for sub in decomposition.subsurfaces]
    if len(set(ids)) != len(ids):
        out.append("duplicate subsurface ids")
        return out
    if len(ids) > 5 * genus - 5:
        out.append(
            f"{len(ids)} subsurfaces exceed the budget {5 * genus - 5} for genus {genus}"
        )
    annuli = [sub for sub in decomposition.subsurfaces if sub.kind == ANNULUS]
    if len(annuli) > 3 * genus - 3:
        out.append(
            f"{len(annuli)} annuli exceed the budget {3 * genus - 3} for genus {genus}"
        )
    for sub in decomposition.subsurfaces:
        if sub.kind not in SUBSURFACE_KINDS:
            out.append(f"subsurface {sub.id!r} has unknown kind {sub.kind!r}")
            continue
        for v in sub.subspace.basis:
            if len(v) != 2 * genus:
                out.append(
                    f"subsurface {sub.id!r} basis vector of length {len(v)}, expected {2 * genus}"
                )
        rank = rank_of(sub.subspace.basis)
        if rank != len(sub.subspace.basis):
            out.append(f"subsurface {sub.id!r} basis is linearly dependent")
        if sub.kind == ANNULUS and rank > 1:
            out.append(f"annulus {sub.id!r} has subspace rank {rank} > 1")

    table = model.pieces_by_id()
    known_subs = set(ids)
    assigned = dict(decomposition.assignment)
    for piece_id, sub_id in assigned.items():
        if piece_id not in table:
            out.append(f"assignment references unknown piece {piece_id!r}")
            continue
        if sub_id not in known_subs:
            out.append(f"assignment references unknown subsurface {sub_id!r}")
            continue
        piece = table[piece_id]
        kind = decomposition.subsurface(sub_id).kind
        if piece.classification == TRIVIAL:
            out.append(f"trivial piece {piece_id!r} appears in the assignment")
        elif piece.classification == ANNULAR and kind != ANNULUS:
            out.append(f"annular piece {piece_id!r} assigned to {kind} {sub_id!r}")
        elif piece.classification == CURVED and kind != CURVED_SURFACE:
            out.append(f"curved piece {piece_id!r} assigned to {kind} {sub_id!r}")
    for piece in model.pieces:
        if piece.classification != TRIVIAL and piece.id not in assigned:
            out.append(f"non-trivial piece {piece.id!r} has no subsurface assignment")

    # Pieces of one annular package live in one essential annulus, and the
    # annulus determines the package; their fill behaviors must agree.
    package_to_sub: dict[str, str] = {}
    package_fill: dict[str, str] = {}
    sub_to_package: dict[str, str] = {}
    for piece in model.pieces:
        if piece.classification != ANNULAR or piece.id not in assigned:
            continue
        sub_id = assigned[piece.id]
        package = piece.package or ""
        if package in package_to_sub and package_to_sub[package] != sub_id:
            out.append(
                f"package {package!r} split across subsurfaces "
                f"{package_to_sub[package]!r} and {sub_id!r}"
            )
        package_to_sub.setdefault(package, sub_id)
        if sub_id in sub_to_package and sub_to_package[sub_id] != package:
            out.append(
                f"subsurface {sub_id!r} shared by packages "
                f"{sub_to_package[sub_id]!r} and {package!r}"
            )
        sub_to_package.setdefault(sub_id, package)
        fill = piece.fill_behavior or ""
        if package in package_fill and package_fill[package] != fill:
            out.append(f"package {package!r} has conflicting fill behaviors")
        package_fill.setdefault(package, fill)
    return out


def chain_support(chain: Chain, model: "ModelDocument") -> frozenset[str]:
    assignment = model.decomposition.assignment
    return frozenset(assignment[piece_id] for piece_id in chain)


def _edge_or_fail(
    poset: HeteroclinicPoset, source: str, target: str, side: str
):
    edge = poset.edge_between(source, target)
    marks = None
    if edge is not None:
        marks = edge.source_marks if side == "source" else edge.target_marks
    if not marks:
        raise ModelValidationError(
            [
                f"annular piece with required mark missing: no {side} marks on "
                f"relation ({source!r}, {target!r})"
            ]
        )
    return sorted(marks)


def chain_marked_support(
    chain: Chain, model: "ModelDocument"
) -> list[MarkedSupport]:
    """All admissible (support, initial, final) markings of the chain.

    The initial mark is forced to "0" unless the chain starts at a piece of a
    repelling annulus and leaves that annulus, in which case it ranges over
    the orientation marks of the first relation edge; symmetrically the final
    mark needs an attracting annulus at the end.  Both sides can carry the
    two orientations at once, hence the product set.
    """
    table = model.pieces_by_id()
    support = chain_support(chain, model)

    initial_candidates = [NO_MARK]
    first = table[chain[0]]
    if (
        first.classification == ANNULAR
        and first.fill_behavior == REPELLING
        and len(support) >= 2
    ):
        initial_candidates = _edge_or_fail(
            model.heteroclinic, chain[0], chain[1], "source"
        )

    final_candidates = [NO_MARK]
    last = table[chain[-1]]
    if (
        last.classification == ANNULAR
        and last.fill_behavior == ATTRACTING
        and len(support) >= 2
    ):
        final_candidates = _edge_or_fail(
            model.heteroclinic, chain[-2], chain[-1], "target"
        )

    return [
        MarkedSupport(support=support, initial_mark=x, final_mark=y)
        for x in initial_candidates
        for y in final_candidates
    ]


def coned(polytope: RationalPolytope) -> RationalPolytope:
    """Hull of the polytope together with the origin."""
    return extreme_points(
        set(polytope.vertices) | {zero_vector(polytope.dim)}
    )


def enumerate_blocks(
    model: "ModelDocument",
    piece_sets: Mapping[str, RationalPolytope] | None = None,
    chains: Sequence[Chain] | None = None,
) -> list[Block]:
    """Group maximal non-trivial chains by marked support and cone each group."""
    table = model.pieces_by_id()
    if chains is None:
        chains = maximal_nontrivial_chains(model.heteroclinic, table)
    dim = 2 * model.genus
    groups: dict[MarkedSupport, list[Chain]] = {}
    polytopes: dict[Chain, RationalPolytope] = {}
    for chain in chains:
        polytopes[chain] = chain_rotation_set(chain, table, piece_sets=piece_sets)
        for key in chain_marked_support(chain, model):
            groups.setdefault(key, []).append(chain)
    blocks = []
    for key in sorted(groups, key=MarkedSupport.sort_key):
        members = groups[key]
        points: set[Vector] = {zero_vector(dim)}
        for chain in members:
            points.update(polytopes[chain].vertices)
        blocks.append(
            Block(key=key, polytope=extreme_points(points), chains=tuple(members))
        )
    return blocks


def support_span(key: MarkedSupport, model: "ModelDocument") -> SubspaceBasis:
    """Concatenated basis of the subsurface subspaces in the support."""
    vectors: list[Vector] = []
    for sub_id in sorted(key.support):
        vectors.extend(model.decomposition.subsurface(sub_id).subspace.basis)
    return SubspaceBasis(basis=tuple(vectors))


def verify_structure(
    model: "ModelDocument",
    blocks: Sequence[Block],
    piece_sets: Mapping[str, RationalPolytope] | None = None,
    convex_density: int = 4,
) -> StructureReport:
    """Pass/fail report for the structural claims about the block decomposition.

    Checks: (a) the block count bound, (b) marked-variant pattern per support,
    (c) containment of each block in the span of its support, (d) containment
    of every chain polytope in its blocks, (e) a convexity probe of each
    block's union of coned chain sets.
    """
    from .analysis import convexity_probe

    table = model.pieces_by_id()
    checks: list[StructureCheck] = []

    budget = block_budget(model.genus)
    detail = f"{len(blocks)} blocks against budget {budget}"
    checks.append(
        StructureCheck("block_count_bound", len(blocks) <= budget, (detail,))
    )

    by_support: dict[frozenset[str], list[Block]] = {}
    for block in blocks:
        by_support.setdefault(block.key.support, []).append(block)
    variant_issues: list[str] = []
    for support, members in sorted(by_support.items(), key=lambda kv: sorted(kv[0])):
        initials = {b.key.initial_mark for b in members}
        finals = {b.key.final_mark for b in members}
        label = "+".join(sorted(support))
        if NO_MARK in initials and len(initials) > 1:
            variant_issues.append(f"support {label}: mixed zero/oriented initial marks")
        if NO_MARK in finals and len(finals) > 1:
            variant_issues.append(f"support {label}: mixed zero/oriented final marks")
        if len(members) not in (1, 2, 4):
            variant_issues.append(
                f"support {label}: {len(members)} marked variants"
            )
    checks.append(
        StructureCheck(
            "support_variants", not variant_issues, tuple(variant_issues)
        )
    )

    span_issues: list[str] = []
    for block in blocks:
        span = support_span(block.key, model)
        if not in_span(span, block.polytope):
            for v in block.polytope.vertices:
                if rank_of(list(span.basis) + [v]) != rank_of(span.basis):
                    span_issues.append(
                        f"block {block.key.label()}: vertex "
                        f"{tuple(str(c) for c in v)} outside the support span"
                    )
                    break
    checks.append(
        StructureCheck("subspace_containment", not span_issues, tuple(span_issues))
    )

    containment_issues: list[str] = []
    chain_polytopes: dict[Chain, RationalPolytope] = {}
    for block in blocks:
        for chain in block.chains:
            if chain not in chain_polytopes:
                chain_polytopes[chain] = chain_rotation_set(
                    chain, table, piece_sets=piece_sets
                )
            polytope = chain_polytopes[chain]
            for v in polytope.vertices:
                if not contains_point(block.polytope, v):
                    containment_issues.append(
                        f"chain {'<'.join(chain)}: vertex "
                        f"{tuple(str(c) for c in v)} outside block {block.key.label()}"
                    )
    checks.append(
        StructureCheck(
            "chain_in_block", not containment_issues, tuple(containment_issues)
        )
    )

    convexity_issues: list[str] = []
    for block in blocks:
        members = [coned(chain_polytopes[chain]) for chain in block.chains]
        ok, witness = convexity_probe(members, density=convex_density)
        if not ok:
            convexity_issues.append(
                f"block {block.key.label()}: uncovered point "
                f"{tuple(str(c) for c in witness)}"  # type: ignore[union-attr]
            )
    checks.append(
        StructureCheck(
            "block_union_convexity", not convexity_issues, tuple(convexity_issues)
        )
    )

    return StructureReport(checks=tuple(checks))

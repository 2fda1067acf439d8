"""The aggregate model document and whole-model validation.

A model document bundles the genus, the basic pieces with their symbolic
graphs, the heteroclinic relation, and the essential decomposition.  The
validator runs every per-component invariant plus the cross-cutting ones
(vector lengths against the genus, assignment coverage, direct sums of
annulus subspaces that share a chain, the soft sanity checks on rotation
data) and returns violations and warnings as data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .conley import (
    ANNULUS,
    DecompositionModel,
    chain_support,
    validate_decomposition,
)
from .errors import ResourceCapError
from .exactgeom import contains_point, rank_of, zero_vector
from .heteroclinic import (
    HeteroclinicPoset,
    chain_rotation_set,
    maximal_nontrivial_chains,
    validate_poset,
)
from .markov import TRIVIAL, BasicPieceModel, rotation_sets, validate_piece


@dataclass(frozen=True)
class ModelDocument:
    genus: int
    pieces: tuple[BasicPieceModel, ...]
    heteroclinic: HeteroclinicPoset
    decomposition: DecompositionModel

    def pieces_by_id(self) -> dict[str, BasicPieceModel]:
        return {piece.id: piece for piece in self.pieces}

    @property
    def dim(self) -> int:
        return 2 * self.genus


def make_model(
    genus: int,
    pieces: Iterable[BasicPieceModel],
    heteroclinic: HeteroclinicPoset,
    decomposition: DecompositionModel,
) -> ModelDocument:
    return ModelDocument(
        genus=genus,
        pieces=tuple(pieces),
        heteroclinic=heteroclinic,
        decomposition=decomposition,
    )


def validate_model(model: ModelDocument) -> tuple[list[str], list[str]]:
    """All invariant violations and soft warnings of the document."""
    violations: list[str] = []
    warnings: list[str] = []

    if not isinstance(model.genus, int) or model.genus < 2:
        violations.append(f"/genus: must be an integer >= 2, got {model.genus!r}")
        return violations, warnings
    dim = model.dim

    seen_ids: set[str] = set()
    for index, piece in enumerate(model.pieces):
        location = f"/pieces/{index} ({piece.id})"
        if piece.id in seen_ids:
            violations.append(f"{location}: duplicate piece id")
        seen_ids.add(piece.id)
        for name, disp in piece.graph.nodes:
            if len(disp) != dim:
                violations.append(
                    f"{location}/graph/nodes/{name}/displacement: length "
                    f"{len(disp)}, expected {dim}"
                )
        for issue in validate_piece(piece):
            violations.append(f"{location}: {issue}")

    table = model.pieces_by_id()
    missing = [p for p in table if p not in model.heteroclinic.pieces]
    for name in missing:
        violations.append(f"/heteroclinic: piece {name!r} absent from the relation")
    extra = [p for p in model.heteroclinic.pieces if p not in table]
    for name in extra:
        violations.append(f"/heteroclinic: unknown piece {name!r} in the relation")
    poset_violations, poset_warnings = validate_poset(model.heteroclinic, table)
    violations.extend(f"/heteroclinic: {v}" for v in poset_violations)
    warnings.extend(f"/heteroclinic: {w}" for w in poset_warnings)

    violations.extend(
        f"/decomposition: {v}" for v in validate_decomposition(model)
    )

    if violations:
        return violations, warnings

    # Chain-dependent checks need rotation data; caps degrade to warnings.
    try:
        piece_sets = rotation_sets(table)
        chains = maximal_nontrivial_chains(model.heteroclinic, table)
        chain_sets = {
            chain: chain_rotation_set(chain, table, piece_sets=piece_sets)
            for chain in chains
        }
    except ResourceCapError as exc:
        warnings.append(f"skipped rotation-dependent validation: {exc}")
        return violations, warnings

    for chain in chains:
        annuli = [
            sub_id
            for sub_id in sorted(chain_support(chain, model))
            if model.decomposition.subsurface(sub_id).kind == ANNULUS
        ]
        bases = [
            model.decomposition.subsurface(sub_id).subspace.basis
            for sub_id in annuli
        ]
        total = sum(len(b) for b in bases)
        stacked = [v for basis in bases for v in basis]
        if rank_of(stacked) != total:
            violations.append(
                "/decomposition: annulus subspaces of "
                + "+".join(annuli)
                + f" (chain {'<'.join(chain)}) are not in direct sum"
            )

    for piece in model.pieces:
        if piece.classification != TRIVIAL:
            continue
        point = piece_sets[piece.id].vertices[0]
        if chain_sets and not any(
            contains_point(cs, point) for cs in chain_sets.values()
        ):
            warnings.append(
                f"trivial piece {piece.id!r} rotates outside every chain set"
            )

    zero = zero_vector(dim)
    if any(contains_point(ps, zero) for ps in piece_sets.values()):
        if chain_sets and not any(
            contains_point(cs, zero) for cs in chain_sets.values()
        ):  # pragma: no cover - implied by chain coverage of pieces
            warnings.append("origin lies in a piece but in no chain set")
    elif chain_sets and not any(
        contains_point(cs, zero) for cs in chain_sets.values()
    ):
        warnings.append(
            "origin missing from the global rotation union; a model of a "
            "genus>1 system should carry an irrotational piece"
        )

    return violations, warnings

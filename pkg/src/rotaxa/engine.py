"""Computation pipeline: validate, compute chains and blocks, run checks.

Everything downstream of the model document is deterministic, so one
:class:`Computation` value is the complete answer for a model: per-piece
rotation polytopes, maximal non-trivial chains with their polytopes and
marked supports, and the convex blocks.  Check outcomes are plain data so
the command line (or a test) can render them without recomputation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import analysis
from .conley import (
    Block,
    MarkedSupport,
    block_budget,
    chain_marked_support,
    enumerate_blocks,
    verify_structure,
)
from .errors import ModelValidationError
from .exactgeom import RationalPolytope, affine_dim, contains_point
from .heteroclinic import Chain, chain_rotation_set, maximal_nontrivial_chains
from .markov import rotation_sets
from .model import ModelDocument, validate_model
from .oracle import sample_chain_averages


@dataclass(frozen=True)
class ChainData:
    chain: Chain
    polytope: RationalPolytope
    marked_supports: tuple[MarkedSupport, ...]


@dataclass(frozen=True)
class Computation:
    model: ModelDocument
    piece_sets: dict[str, RationalPolytope]
    chains: tuple[ChainData, ...]
    blocks: tuple[Block, ...]
    warnings: tuple[str, ...]


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    details: tuple[str, ...] = ()
    info: dict = field(default_factory=dict)


def compute(model: ModelDocument) -> Computation:
    """Validate the model and compute its chains and blocks."""
    violations, warnings = validate_model(model)
    if violations:
        raise ModelValidationError(violations)
    table = model.pieces_by_id()
    piece_sets = rotation_sets(table)
    chains = maximal_nontrivial_chains(model.heteroclinic, table)
    chain_data = tuple(
        ChainData(
            chain=chain,
            polytope=chain_rotation_set(chain, table, piece_sets=piece_sets),
            marked_supports=tuple(chain_marked_support(chain, model)),
        )
        for chain in chains
    )
    blocks = tuple(
        enumerate_blocks(model, piece_sets=piece_sets, chains=chains)
    )
    return Computation(
        model=model,
        piece_sets=piece_sets,
        chains=chain_data,
        blocks=blocks,
        warnings=tuple(warnings),
    )


def run_checks(
    computation: Computation,
    star: bool = False,
    bound: bool = False,
    subspace: bool = False,
    convex_density: int | None = None,
    interior: bool = False,
    oracle_samples: int | None = None,
    seed: int = 1,
) -> list[CheckOutcome]:
    """Run the requested structural checks; default to the standard battery."""
    if not any([star, bound, subspace, convex_density, interior, oracle_samples]):
        star = bound = subspace = interior = True
        convex_density = analysis.DEFAULT_PROBE_DENSITY

    model = computation.model
    outcomes: list[CheckOutcome] = []
    structure = None
    if bound or subspace or convex_density:
        structure = verify_structure(
            model,
            computation.blocks,
            piece_sets=computation.piece_sets,
            convex_density=convex_density or analysis.DEFAULT_PROBE_DENSITY,
        )

    if star:
        chain_polytopes = [data.polytope for data in computation.chains]
        if chain_polytopes:
            ok, witness = analysis.star_shape_check(chain_polytopes)
            details = ()
            info = {}
            if witness is not None:
                details = (
                    f"segment to {tuple(str(c) for c in witness.point)} uncovered "
                    f"between parameters {witness.gap[0]} and {witness.gap[1]}",
                )
                info = {
                    "witness": [str(c) for c in witness.point],
                    "gap": [str(witness.gap[0]), str(witness.gap[1])],
                }
            outcomes.append(CheckOutcome("star_shape", ok, details, info))
        else:
            outcomes.append(
                CheckOutcome("star_shape", True, ("no non-trivial chains",))
            )

    if bound:
        for name in ("block_count_bound", "support_variants"):
            check = structure.check(name)
            outcomes.append(
                CheckOutcome(
                    name,
                    check.passed,
                    check.details,
                    {"blocks": len(computation.blocks),
                     "budget": block_budget(model.genus)},
                )
            )

    if subspace:
        for name in ("subspace_containment", "chain_in_block"):
            check = structure.check(name)
            outcomes.append(CheckOutcome(name, check.passed, check.details))

    if convex_density:
        check = structure.check("block_union_convexity")
        info: dict = {"density": convex_density}
        union = [block.polytope for block in computation.blocks]
        if union:
            ok, witness = analysis.convexity_probe(union, density=convex_density)
            info["global_union_convex"] = ok
            if witness is not None:
                info["global_witness"] = [str(c) for c in witness]
        outcomes.append(
            CheckOutcome("block_union_convexity", check.passed, check.details, info)
        )

    if interior:
        report = analysis.interior_check(computation.blocks, model.genus)
        details = ()
        if report.detail:
            details = (report.detail,)
        outcomes.append(
            CheckOutcome(
                "interior",
                report.status != analysis.VIOLATION,
                details,
                {"status": report.status, "container": report.container},
            )
        )

    if oracle_samples:
        outcomes.append(
            _sampling_check(computation, oracle_samples, seed)
        )

    return outcomes


def _sampling_check(
    computation: Computation, total_samples: int, seed: int
) -> CheckOutcome:
    """Seeded chain averages must land in their chain polytope and blocks."""
    model = computation.model
    table = model.pieces_by_id()
    chains = computation.chains
    if not chains:
        return CheckOutcome("chain_sampling", True, ("no chains to sample",))
    blocks_by_chain: dict[Chain, list[Block]] = {}
    for block in computation.blocks:
        for chain in block.chains:
            blocks_by_chain.setdefault(chain, []).append(block)
    share = max(1, total_samples // len(chains))
    counts = [share] * len(chains)
    for i in range(total_samples - share * len(chains)):
        counts[i % len(chains)] += 1
    failures: list[str] = []
    tested = 0
    for offset, (data, count) in enumerate(zip(chains, counts)):
        samples = sample_chain_averages(data.chain, table, count, seed + offset)
        for sample in samples:
            tested += 1
            if not contains_point(data.polytope, sample):
                failures.append(
                    f"sample {tuple(str(c) for c in sample)} outside chain "
                    f"{'<'.join(data.chain)}"
                )
                continue
            for block in blocks_by_chain.get(data.chain, ()):
                if not contains_point(block.polytope, sample):
                    failures.append(
                        f"sample {tuple(str(c) for c in sample)} outside block "
                        f"{block.key.label()}"
                    )
    return CheckOutcome(
        "chain_sampling",
        not failures,
        tuple(failures[:10]),
        {"samples": tested, "violations": len(failures)},
    )


def block_dimensions(computation: Computation) -> list[int]:
    return [affine_dim(block.polytope) for block in computation.blocks]


def outcomes_passed(outcomes: Sequence[CheckOutcome]) -> bool:
    return all(outcome.passed for outcome in outcomes)

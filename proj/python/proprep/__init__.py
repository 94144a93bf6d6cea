"""Proportionally representative committee selection and exact audits.

Selection rules (expanding approvals over rankings, truncated greedy capture
over known distances), generators for the structured lower-bound instance
families, and exact rational audits of fairness / core / representation
measures. Exact values cross the boundary as canonical ``p/q`` strings;
``fractions.Fraction`` accepts them directly.
"""

from ._core import (
    CoverageRecord,
    Instance,
    ProprepError,
    RankedProfile,
    cor_single_audit,
    core_beta,
    derive_rankings,
    distortion,
    ear_select,
    gen_diverging,
    gen_random,
    gen_refined,
    gen_separation,
    gen_two_cluster,
    hare_quota,
    no_augmentation_monitor,
    pf_gamma,
    pr_gamma,
    read_committee,
    read_coverage,
    read_election,
    single_winner,
    single_winner_via_ear,
    stability_rho,
    tgc_select,
    write_committee,
    write_coverage,
    write_election,
)

__all__ = [
    "CoverageRecord",
    "Instance",
    "ProprepError",
    "RankedProfile",
    "cor_single_audit",
    "core_beta",
    "derive_rankings",
    "distortion",
    "ear_select",
    "gen_diverging",
    "gen_random",
    "gen_refined",
    "gen_separation",
    "gen_two_cluster",
    "hare_quota",
    "no_augmentation_monitor",
    "pf_gamma",
    "pr_gamma",
    "read_committee",
    "read_coverage",
    "read_election",
    "single_winner",
    "single_winner_via_ear",
    "stability_rho",
    "tgc_select",
    "write_committee",
    "write_coverage",
    "write_election",
]

__version__ = "1.0.0"

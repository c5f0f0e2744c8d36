"""Exact-arithmetic toolkit for closed flat 4-manifolds given by Bieberbach
group presentations: holonomy, isotypic decompositions, Teichmueller
factorizations, normalizer matrix parts, congruence-subgroup geometry, and
symbolic moduli-space expressions."""

__version__ = "1.0.0"

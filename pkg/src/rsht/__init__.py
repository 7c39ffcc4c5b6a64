"""Random simple-homotopy (RSHT) simplification of simplicial complexes."""

from .complexes import Complex, Simplex, simplex
from .engine import (BallDescriptor, BatchReport, RshtConfig, RunReport,
                     collapse_until_stuck, enumerate_expansion_candidates,
                     is_pure_ball, pure_expansion_step, rsht_batch, rsht_run,
                     subdivision_step)
from .generators import (NamedComplex, abalone, admissible_edge_flips,
                         bing_house2, bing_house_k, boundary_of_simplex,
                         circle, connected_sum, cross_product, dunce_hat8,
                         full_simplex, genus_surface, path_interval,
                         random_flip_walk, torus7)
from .homology import HomologyProfile, boundary_matrix, homology
from .io import parse_facet_file, write_facet_file
from .presets import ExperimentPreset, builtin_presets, run_preset
from .estimator import RshtSimplifier
from .validate import (FlipDescriptor, bistellar_flip, collapsibility_search,
                       flip_from_ball, is_closed_manifold_low_dim,
                       verify_expansion_equals_flip)

__all__ = [
    "Complex", "Simplex", "simplex",
    "BallDescriptor", "BatchReport", "RshtConfig", "RunReport",
    "collapse_until_stuck", "enumerate_expansion_candidates", "is_pure_ball",
    "pure_expansion_step", "rsht_batch", "rsht_run", "subdivision_step",
    "NamedComplex", "abalone", "admissible_edge_flips", "bing_house2",
    "bing_house_k", "boundary_of_simplex", "circle", "connected_sum",
    "cross_product", "dunce_hat8", "full_simplex", "genus_surface",
    "path_interval", "random_flip_walk", "torus7",
    "HomologyProfile", "boundary_matrix", "homology",
    "parse_facet_file", "write_facet_file",
    "ExperimentPreset", "builtin_presets", "run_preset",
    "RshtSimplifier",
    "FlipDescriptor", "bistellar_flip", "collapsibility_search",
    "flip_from_ball", "is_closed_manifold_low_dim",
    "verify_expansion_equals_flip",
]

__version__ = "0.1.0"

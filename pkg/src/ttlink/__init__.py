"""Twisted torus links, their positive roots of the full twist, and
tetrahedron-count volume bounds."""

from __future__ import annotations

from .bounds import (V3, VolumeBound, best_bound, tetra_count_tlink, tetra_count_tlink0,
                     tetra_count_torus, tetra_count_twisted, theorem_units_tlink,
                     theorem_units_ttl, volume_bound_dual, volume_bound_tlink, volume_bound_ttl)
from .braid import (BraidWord, NormalForm, Permutation, delta, delta_bar, full_twist,
                    half_twist, left_normal_form, parse_word, permutation_of, words_equal)
from .diagram import (FaceCensus, ProjectionComplex, build_projection, census_violations,
                      face_census_bruteforce, face_census_closed)
from .errors import (InternalError, InvalidArgument, InvalidParams, NotApplicable,
                     NotARootCandidate, ReducibleToSatellite, TTLinkError, Unsupported, WrongCase)
from .reduction import ReducedModel, reconstruct, reduce
from .roots import (ChainDecomposition, PeripheralProfile, RootSubset, chain_decomposition,
                    conjugacy_witness, enumerate_roots, enumerate_subsets, is_positive_root,
                    parse_root, peripheral_profile, standard_bar_root, standard_root,
                    subset_to_word, word_to_subset)
from .tlink import (Stage, TLinkSpec, TwistedTorusParams, braid_index, component_count,
                    is_lorenz, is_satellite, lorenz_dual, parse_spec, sign_normalize,
                    spec_from_json, to_braid_word, validate, violations)

__version__ = "0.1.0"

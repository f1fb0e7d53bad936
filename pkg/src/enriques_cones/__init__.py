"""Exact lattice computations for cone comparison on the Enriques surface.

Modules: :mod:`lattice` (the lattices and the isometry Psi), :mod:`chamber`
(the normalized chamber and Weyl reduction), :mod:`invariants` (Phi,
capacities, radius and witnesses), :mod:`k3` (the covering K3 lattice) and
:mod:`taubes` (Gromov-Taubes and Seiberg-Witten classifiers).
"""

from .chamber import (
    EQUAL_POINT,
    ChamberPoint,
    Reduction,
    ReductionTrace,
    chamber_membership,
    chamber_vertices,
    compare_on_chamber,
    enumerate_vertices_oracle,
    reduce,
    vertices,
)
from .invariants import (
    CapacityResult,
    InfeasibleBoundError,
    PhiResult,
    SamplingError,
    WitnessReport,
    alg_capacity,
    invariant_report,
    isotropic_enumerate,
    kahler_bounds,
    non_kahler_witness,
    phi_bruteforce,
    phi_closed_form,
    phi_of_class,
    sample_region,
    summarize,
    symp_radius_squared,
)
from .k3 import (
    PeriodCandidate,
    anti_invariant_sublattice,
    invariant_sublattice,
    iota_star,
    k3_vector,
    period_point_check,
    pullback,
)
from .lattice import (
    LatticeVector,
    ReflectionDescriptor,
    forward_cone_membership,
    pairing,
    psi,
    psi_inv,
    reflect,
)
from .taubes import BlowupClass, classify, connected_rep_exists, gt_dimension, symplectic_cone_member

__version__ = "0.1.0"

"""Well-signed graph matrices, transversality (Strong Arnold) kernels, and
nullspace embedding geometry, with a corpus verifier for 4-connected flat
graphs."""

__version__ = "0.1.0"

from .errors import SapGraphError
from .graphs import (
    Graph,
    MinorModel,
    build_graph,
    generate_named,
    has_minor,
    is_connected,
    is_flat,
    petersen_family,
    random_4connected_planar_triangulation,
    validate_minor_model,
    vertex_connectivity,
)
from .spectra import SymMatrix, SpectralSummary, eigen_sym, inertia_exact
from .gmatrix import (
    WellSignedMatrix,
    k2t_witness,
    random_well_signed,
    shift_to_one_negative,
    validate_well_signed,
)
from .sap import (
    Prop1Report,
    QuadricReport,
    SapReport,
    check_prop1,
    classify_quadric,
    has_sap,
    quadric_kernel,
    sap_kernel,
    split_two_hyperplanes,
)
from .geometry import (
    CoverResult,
    HyperplaneSplit,
    NullspaceEmbedding,
    SpannedComplex,
    VdhReport,
    check_vdh_all,
    find_disjoint_planes,
    find_plane_configuration,
    hyperplane_split,
    nullspace_embedding,
    spanned_complex,
    two_hyperplane_cover,
)
from .constructions import (
    CircuitMatrix,
    InterpolationTrace,
    circuit_matrix,
    compose_plane_matrices,
    find_plane_circuit,
    interpolation_trace,
    regular_polygon_circuit,
)
from .kappa import KappaWitness, MuReport, kappa_lower_bound, mu_report
from .cli import dispatch, run_verify_corpus

__all__ = [name for name in dir() if not name.startswith("_")]

"""Zero-padding of directed acyclic graphs for graph Fourier analysis."""

from .census import (
    CensusRow,
    CensusUnion,
    census,
    census_union,
    enumerate_connected_dags,
    weighted_census,
)
from .enums import EdgeKind, FilterMode
from .exact import characteristic_polynomial, distinct_eigenvalues_exact, exact_determinant
from .filtering import (
    ImaginaryResidualWarning,
    ZeroPaddedDomain,
    apply_spectral,
    apply_vertex_domain,
    filter_via_zero_padding,
    padded_filter_output,
    transfer_function,
)
from .graph import (
    Dag,
    Digraph,
    Edge,
    adjacency_matrix,
    dag_from_edge_list,
    hamiltonian_path,
    is_connected_dag,
    nilpotency_index,
    path_dag,
    random_connected_dag,
    random_dag,
    renumber_by_hamiltonian,
    shift,
    sinks,
    sources,
    topological_order,
)
from .padding import (
    PaddedDag,
    close_cycle,
    connect_dag,
    cycle_graph,
    restrict_signal,
    zero_pad_connected,
    zero_pad_general,
    zero_pad_signal,
)
from .spectral import (
    EigenDecomposition,
    SpectrumReport,
    Tolerances,
    eigendecompose,
    gft,
    igft,
    spectrum_report,
)

# define the outward facing API of this package
__all__ = [
    CensusRow.__name__,
    CensusUnion.__name__,
    census.__name__,
    census_union.__name__,
    enumerate_connected_dags.__name__,
    weighted_census.__name__,
    EdgeKind.__name__,
    FilterMode.__name__,
    characteristic_polynomial.__name__,
    distinct_eigenvalues_exact.__name__,
    exact_determinant.__name__,
    ImaginaryResidualWarning.__name__,
    ZeroPaddedDomain.__name__,
    apply_spectral.__name__,
    apply_vertex_domain.__name__,
    filter_via_zero_padding.__name__,
    padded_filter_output.__name__,
    transfer_function.__name__,
    Dag.__name__,
    Digraph.__name__,
    Edge.__name__,
    adjacency_matrix.__name__,
    dag_from_edge_list.__name__,
    hamiltonian_path.__name__,
    is_connected_dag.__name__,
    nilpotency_index.__name__,
    path_dag.__name__,
    random_connected_dag.__name__,
    random_dag.__name__,
    renumber_by_hamiltonian.__name__,
    shift.__name__,
    sinks.__name__,
    sources.__name__,
    topological_order.__name__,
    PaddedDag.__name__,
    close_cycle.__name__,
    connect_dag.__name__,
    cycle_graph.__name__,
    restrict_signal.__name__,
    zero_pad_connected.__name__,
    zero_pad_general.__name__,
    zero_pad_signal.__name__,
    EigenDecomposition.__name__,
    SpectrumReport.__name__,
    Tolerances.__name__,
    eigendecompose.__name__,
    gft.__name__,
    igft.__name__,
    spectrum_report.__name__,
]  # pyright: ignore [reportUnsupportedDunderAll]

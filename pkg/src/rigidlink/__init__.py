"""Global rigidity, globally linked pairs and body-bar tree-connectivity."""

from .bodybar import (
    BodyBarGraph,
    ForestPacking,
    SuperbrickPartition,
    body_bar_construct,
    bodybar_k,
    is_globally_linked_bodybar,
    is_globally_rigid_bodybar,
    is_highly_k_tree_connected,
    is_k_tree_connected,
    is_rigid_bodybar,
    matroid_union_rank,
    mk_bridges,
    superbricks,
)
from .decomposition import (
    Block,
    ClusterCover,
    ThreeBlockTree,
    cleave,
    global_rigidity_failure,
    globally_linked_clusters,
    globally_linked_closure,
    is_globally_linked_1d,
    is_globally_linked_2d,
    is_globally_rigid_2d,
    is_shellable,
    linked_nonadjacent_pairs,
    linked_witness,
    shellable_ordering,
    three_blocks,
    uniquely_localizable,
)
from .errors import InvalidArgumentError, OracleDisagreement, ParseError, PreconditionError, RigidityError
from .graph import Graph, Multigraph, VertexPartition, crossing, is_k_connected, kappa, two_separators
from .io import GraphDocument, load, parse_document
from .numeric import (
    Framework,
    check_equivalent,
    exact_rank,
    numeric_rank,
    realize_random,
    reflect_refute,
    rigidity_matrix,
)
from .rigidity import (
    PebbleGame,
    R2Decomposition,
    fundamental_circuit,
    is_r2_connected,
    is_r2_independent,
    is_redundantly_rigid_2d,
    is_rigid_2d,
    r2_bridges,
    r2_components,
    r2_rank,
)

__version__ = "0.1.0"

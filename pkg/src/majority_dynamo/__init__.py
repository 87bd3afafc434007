"""Irreversible dynamic monopolies under majority-threshold coloring.

Quick tour::

    from majority_dynamo import generate, find_dynamo_undirected, is_dynamo, STRICT

    g = generate("complete", n=7)
    res = find_dynamo_undirected(g)
    assert is_dynamo(g, res.seeds, STRICT) and len(res.seeds) == 4
"""

from .coloring import (
    SIMPLE,
    STRICT,
    ColoringResult,
    ThresholdScenario,
    closure,
    is_dynamo,
    replay_trace,
    required_count,
)
from .directed import Partition, eta, find_dynamo_directed, refine_partition, refine_step
from .errors import (
    CertificateError,
    DynamoError,
    GraphFormatError,
    InvariantError,
    OracleLimitError,
    PreconditionError,
)
from .graph import (
    Diagnostics,
    Graph,
    bfs_distances,
    generate,
    induced_components,
    parse_graph,
    parse_vertex_set,
    serialize_graph,
    serialize_vertex_set,
    validate,
)
from .oracle import OracleResult, iter_dynamos, min_domset_bruteforce, min_dynamo_bruteforce
from .reduction import (
    GadgetMap,
    blocking_set,
    build_gadget,
    check_gadget_invariants,
    domset_to_dynamo,
    dynamo_to_domset,
    greedy_domset,
    is_dominating,
)
from .undirected import (
    BadComponentReport,
    Cut,
    bad_components,
    find_dynamo_undirected,
    is_proper,
    make_proper,
    psi,
    refine_cut,
)

__version__ = "0.1.0"

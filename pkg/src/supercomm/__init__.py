"""Super commuting graphs of finite groups, their clique-join structure, and Zagreb indices."""

from .errors import (
    ArityMismatch,
    BudgetExceeded,
    InvalidParams,
    NotCliqueJoin,
    NotInCatalog,
    OrderMismatch,
    PartitionMismatch,
    PresentationSyntaxError,
    UnknownGenerator,
)
from .graph import (
    Graph,
    commuting_graph,
    complete,
    disjoint_union,
    empty_graph,
    generalized_composition,
    induced_subgraph,
    join,
    parse_edge_list,
    super_commuting_graph,
    to_dot,
    to_edge_list,
)
from .group import (
    Group,
    Partition,
    center,
    check_group_axioms,
    conjugacy_partition,
    element_order,
    enumerate_group,
    equality_partition,
    order_partition,
)
from .presentation import Family, FamilySpec, Presentation, family_presentation, parse_presentation, sweep_specs
from .structure import (
    CONJUGACY,
    EQUALITY,
    ORDER,
    RELATIONS,
    CliqueJoinForm,
    build_form,
    forms_equal,
    normalize,
    parse_form,
    predicted_form,
    recognize_form,
    render_form,
)
from .verify import VerificationRecord, run_sweep, verify_spec
from .zagreb import (
    ZagrebReport,
    edge_count_form,
    hansen_check,
    lemma_closed_form,
    m1,
    m2,
    paper_polynomials,
    zagreb_closed_form,
)

__version__ = "0.1.0"

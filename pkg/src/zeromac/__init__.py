"""Nonstochastic information and zero-error codes for two-user multiple access channels."""

from .errors import BudgetExceeded, InternalAssertion, WorldTooLarge, ZeromacError
from .uv import (
    ConditionalRangeFamily,
    Range,
    World,
    build_world,
    conditional_family,
    conditional_range,
    is_conditionally_unrelated,
    is_markov,
    is_unrelated,
    is_unrelated_chained,
    marginal_range,
    restrict,
)
from .overlap import (
    CommonVariable,
    Info,
    NCCommonVariable,
    Partition,
    conditional_info,
    conditional_overlap_partition,
    factor_through,
    matching_cell,
    matching_labels,
    maximal_cv,
    nc_info,
    nc_maximal_cv,
    nc_partition,
    nonstochastic_info,
    overlap_partition,
    partition_join,
)
from .mac import (
    Channel,
    Code,
    CooperationStructure,
    MessageSpec,
    build_channel,
    build_coded_world,
    build_structure_world,
    check_structure_markov,
)
from .codec import (
    SynthesisResult,
    Verdict,
    decode,
    oracle_decodable,
    synthesize_code,
    verify_zero_error,
)
from .region import (
    Bounds,
    RateCuboid,
    RateRegion,
    capacity_region,
    confusability_independence_number,
    enumerate_structures,
    oracle_region,
    rate_cuboid,
    single_user_capacity,
)

__version__ = "0.1.0"

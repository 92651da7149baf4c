"""Small voter sets realizing majority tournaments.

Any strong preference pattern on n candidates (a tournament) is the
pairwise majority of some list of transitive voters.  This package builds
such voter sets explicitly, far below the classic two-per-arc count:
at most ``n - floor(log2 n)`` voters, or one more when the parities of n
and floor(log2 n) match.  It also ships the greedy transitive-chain
finder that seeds the construction, an exhaustive oracle certifying exact
minima at tiny n, and a CLI (``voterset``) around simple text formats.
"""

from .bench import BenchRecord, run_bench, trial_seed
from .construct import (
    ConstructionReport,
    SegmentPartition,
    extend_pair,
    mcgarvey_baseline,
    segment_partition,
    synthesize,
    voter_count_bound,
)
from .core import (
    BudgetExceededError,
    GenerationMismatchError,
    MalformedProfileError,
    MarginMatrix,
    OrientationError,
    ParityError,
    Profile,
    Ranking,
    SizeCapError,
    TieError,
    Tournament,
    Transitivity,
    is_transitive,
    majority_pattern,
    margins,
    mix64,
    random_tournament,
    restrict,
    restriction_labels,
    transitive_tournament,
)
from .fileio import (
    FileFormatError,
    parse_profile,
    parse_tournament,
    profile_text,
    read_profile,
    read_tournament,
    tournament_text,
    write_profile,
    write_tournament,
)
from .oracle import OracleResult, max_v_exact, min_voters_exact
from .transitive import (
    TransitiveChain,
    chain_floor,
    greedy_transitive_chain,
    max_transitive_exhaustive,
    verify_chain,
)

__version__ = "0.1.0"

from __future__ import absolute_import
# See http://docs.python-guide.org/en/latest/writing/structure/

import logging

from .ordinal import Ordinal, parse_ordinal
from .club import parse_club
from .csequence import build_maximal, build_order_minimal, build_stepped_up, \
    check_coherence
from .game import build_by_game
from .walks import walk, truncated_walk, pair_boundaries, classify_nodes
from .characteristics import rho2_n, resh_n, family_alternating_sum
from .analysis import verify_family_coherence, xi_star
from .lemmas import LemmaSuite, run_lemma_suite
from .logger import ReportLoggingSuite, CounterexampleLoggingSuite
from .behavior import FailureTriggerSuite, FailFastSuite

logging.getLogger("hiwalks").addHandler(logging.NullHandler())

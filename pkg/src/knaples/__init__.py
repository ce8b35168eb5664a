"""k-Naples parking functions: simulation, bijections, exact enumeration.

The parking rule lets each car check up to k spots behind its preference
(nearest first) before driving forward.  This package implements the
process itself, the lattice-path / binary-tree / polygon-dissection /
non-crossing-partition bijections for monotone k-Naples parking functions,
exact big-integer counting through recurrences, closed forms and truncated
power series, and a brute-force oracle that re-verifies every theorem at
desk scale.
"""

from .parking import (ParkingOutcome, is_k_naples, minimal_k, park,
                      park_filled, parse_preference, format_preference,
                      rearrangements_all_k_naples)
from .paths import (ascending_is_k_naples_path, ascending_pref_from_path,
                    descending_pref_from_path, embed, embedded_ascending_criterion,
                    heights, is_dyck_path, is_k_dyck_path, is_strictly_k,
                    iter_k_dyck_paths, max_deficit, path_from_ascending_pref,
                    path_from_descending_pref, reflect_after_first_return,
                    unembed)
from .trees import (assemble_strict_tree, check_traversal_heights,
                    descending_from_strict_tree, diagonal_depth,
                    dyck_from_full_tree, dyck_from_tree, format_full_tree,
                    format_tree, full_tree_from_dyck, graft,
                    is_strict_descending_tree, iter_trees, parse_full_tree,
                    parse_tree, prune, strict_tree_from_descending,
                    strict_tree_slots, traversal, tree_from_dyck, tree_size)
from .catalan_objects import (Dissection, RootedNonCrossingPartition,
                              dissection_from_strict, format_dissection,
                              format_ncp, is_noncrossing, ncp_from_strict,
                              parse_dissection, parse_ncp,
                              strict_from_dissection, strict_from_ncp)
from .series import (PowerSeries, catalan, catalan_convolution_term,
                     catalan_fine_convolution, fine)
from .counting import (count_ascending, count_ascending_starts_one,
                       count_descending_strict, count_descending_total,
                       verify_identities)
from .oracle import EnumerationSpec, brute_count, enumerate_preferences, iter_preferences
from .theorems import TheoremReport, check_all, check_theorem, theorem_ids

__version__ = "0.1.0"

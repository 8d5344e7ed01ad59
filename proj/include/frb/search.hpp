#pragma once

// Maximum cardinality set I' satisfying a ClauseSet.
//
// Membership of i only depends on the members of I' below i, so each
// candidate i carries a list of options (one per witness column and clause),
// each option being the set of smaller candidates it cannot coexist with.
// The family of feasible sets is downward closed; the search walks the
// candidates from the top, commits to an option when including one (its
// forbidden set becomes banned) and bounds with a greedy clique cover of the
// pairwise hard conflicts.

#include "frb/mu.hpp"

#include <climits>
#include <span>
#include <stdexcept>

namespace frb {

class SearchCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchOptions {
    long long node_limit = 200000; // <= 0: unlimited
    int stop_at = INT_MAX;         // return as soon as a set this large is found
    int universe_cap = 0;          // > 0: throw SearchCapExceeded above this size
};

struct SearchResult {
    IndexList set;         // sorted ascending
    bool optimal = false;  // search space exhausted
    long long nodes = 0;
    int universe = 0;
};

/// {i : some j and some clause with rho[i][j] == clause.hit}.
IndexList candidate_universe(const RhoTable& t, const ClauseSet& clauses);

/// Seeds that fail the predicate are ignored; the best valid seed is the
/// initial incumbent, so the result is never smaller than any valid seed.
SearchResult max_clause_set(const RhoTable& t, const ClauseSet& clauses, std::span<const IndexList> seeds = {},
                            const SearchOptions& opts = {});

} // namespace frb

#pragma once

// Predicates on a RhoTable: well-behaving classification of pairs and the
// mu-property family (plain, multi-target, with exception, relaxed).
//
// Every variant has the same shape: each i in I' needs a column j such that
// rho[i][j] hits a prescribed value and no smaller i' in I' lands on a
// forbidden value in column j. A Clause captures one such (hit, forbidden)
// rule; a ClauseSet is satisfied by (i, j) when any of its clauses is.

#include "frb/rho.hpp"

#include <span>
#include <vector>

namespace frb {

enum class PairStatus { None = 0, Owb = 1, Wwb = 2, Wb = 3 };

const char* to_string(PairStatus s);

/// Strongest label of (i, j), checked directly from the definitions.
PairStatus pair_status(const RhoTable& t, int i, int j);

/// Labels of all cells at once, via running maxima.
class StatusTable {
public:
    explicit StatusTable(const RhoTable& t);

    PairStatus operator()(int i, int j) const { return cells_[std::size_t(i - 1) * n_ + (j - 1)]; }
    int n() const { return n_; }

private:
    int n_;
    std::vector<PairStatus> cells_;
};

/// Requires i in iprime (throws std::invalid_argument otherwise).
bool owb_wrt(const RhoTable& t, int i, int j, std::span<const int> iprime);

struct Clause {
    int hit = 0;          // rho[i][j] must equal this
    int forbid_eq = 0;    // smaller i' may not land on this value (0: unused)
    int forbid_from = 0;  // ... nor on any value >= this

    bool forbids(int value) const { return value == forbid_eq || value >= forbid_from; }

    /// Plain mu-property w.r.t. l: OWB w.r.t. I' and rho = l.
    static Clause plain(int l) { return {l, 0, l}; }
    /// Conditions (1a)(1b): rho = l; smaller values must be < l or in l+1..l+g.
    static Clause exception(int l, int g) { return {l, l, l + g + 1}; }
    /// Conditions (2a)(2b)(2c): rho = pivot, OWB w.r.t. I', nobody smaller lands on l.
    static Clause pivot(int l, int pivot) { return {pivot, l, pivot}; }

    friend bool operator==(const Clause&, const Clause&) = default;
};

using ClauseSet = std::vector<Clause>;

ClauseSet mu_clauses(std::span<const int> targets);
ClauseSet exception_clauses(int l, int g);
/// Relaxed mu-property w.r.t. (l, pivot) with exception {l+1, ..., pivot-1}.
ClauseSet relaxed_clauses(int l, int pivot);

/// True iff every i in iprime has a witness column for some clause.
bool satisfies(const RhoTable& t, std::span<const int> iprime, const ClauseSet& clauses);

/// The witness column used for i (smallest j, clauses in order), or 0.
int witness(const RhoTable& t, int i, std::span<const int> iprime, const ClauseSet& clauses);

bool check_mu(const RhoTable& t, std::span<const int> iprime, std::span<const int> targets);
bool check_mu_exception(const RhoTable& t, std::span<const int> iprime, int l, int g);
bool check_relaxed_mu(const RhoTable& t, std::span<const int> iprime, int l, int pivot);

/// {i : some j has status >= min_status and rho[i][j] in targets}. Passes
/// check_mu for the same targets whenever min_status >= OWB.
IndexList harvest(const StatusTable& s, const RhoTable& t, std::span<const int> targets, PairStatus min_status);

} // namespace frb

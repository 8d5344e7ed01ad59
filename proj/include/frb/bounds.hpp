#pragma once

// Lower bounds on the (generalized) Hamming weights of dual codes:
// Feng-Rao with WB/WWB/OWB pairs, the advisory bound (largest set with the
// mu-property), and the further improved bound that splits into cases on
// the first nonzero syndrome after m(c). Also the codes C(s) and the
// improved codes whose parity checks are exactly the weak positions.

#include "frb/search.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace frb {

enum class Method { FrWb, FrWwb, FrOwb, Advisory, Fim };

const char* to_string(Method m);
/// Accepts wb, wwb, owb, adv, fim. Throws std::invalid_argument.
Method parse_method(const std::string& s);
std::vector<Method> all_methods();

enum class SearchMode { Heuristic, Exact };

/// How many indices after l are split into cases by the improved bound.
struct VPolicy {
    bool automatic = true;   // v(l) = #{x > l : weight[x] == weight[l]}
    int fixed = 0;           // used when !automatic
    std::map<int, int> overrides;

    static VPolicy automatic_policy() { return {}; }
    static VPolicy constant(int v) { return {false, v, {}}; }

    int v(const RhoTable& t, int l) const;
};

struct BoundOptions {
    SearchOptions search;          // node budget for heuristic searches
    int exact_cap = 24;            // universe cap for SearchMode::Exact
    long long case_cap = 4096;     // cap on the number of case tuples per target set
    VPolicy v;
    int threads = 1;
};

/// One maximization behind a bound: the predicate and the set found for it.
struct CaseResult {
    std::string label;
    ClauseSet clauses;
    IndexList witness;
    bool optimal = false;
};

struct BoundValue {
    int value = 0;
    IndexList targets;             // the m-values where the minimum is attained
    std::vector<CaseResult> cases; // value == min over cases of |witness|
    bool exhaustive = true;        // every relevant search ran to completion
};

struct MaxSetResult {
    int size = 0;
    IndexList witness;
    bool optimal = false;
};

/// #{(i, j) : rho[i][j] == l and status(i, j) >= flavor}.
int feng_rao(const RhoTable& t, const StatusTable& s, int l, PairStatus flavor);
int feng_rao(const RhoTable& t, int l, PairStatus flavor);

/// Largest set with the mu-property w.r.t. targets, seeded with the OWB
/// harvest. Exact mode throws SearchCapExceeded above opts.exact_cap.
MaxSetResult max_mu_set(const RhoTable& t, std::span<const int> targets, SearchMode mode,
                        const BoundOptions& opts = {});

BoundValue advisory_bound(const RhoTable& t, int l, const BoundOptions& opts = {});

/// Case clause sets for the improved bound at l: case 0 first, then one per
/// index of l+1..l+v that is not known to be zero.
std::vector<std::pair<std::string, ClauseSet>> fim_cases(int l, int v, std::span<const int> known_zeros);

/// Improved bound at l. known_zeros must lie in l+1..l+v; v = 0 gives the
/// advisory bound.
BoundValue fim_bound(const RhoTable& t, int l, std::span<const int> known_zeros, int v,
                     const BoundOptions& opts = {});

/// Minimum over t-subsets of mC of the method's bound for that target set.
/// Feng-Rao flavors use the distinct-i harvest of the targets.
BoundValue ghw_bound(const RhoTable& t, std::span<const int> mc, int tw, Method method,
                     const BoundOptions& opts = {});

/// Improved bound for the t-th generalized weight; `known_zero` lists the
/// indices whose syndrome is zero on every codeword (the parity set).
BoundValue fim_ghw_bound(const RhoTable& t, std::span<const int> mc, int tw, std::span<const int> known_zero,
                         const BoundOptions& opts = {});

/// Dual code {c : c . w_l = 0 for l in parity}.
struct CodeSpec {
    int n = 0;
    IndexList parity; // sorted

    int dimension() const { return n - int(parity.size()); }
    /// I \ parity: the possible values of m(c) over nonzero codewords.
    IndexList m_values() const;
};

CodeSpec make_code(int n, IndexList parity);
CodeSpec standard_code(int n, int s);

/// Bound on d_t of the code.
BoundValue code_bound(const RhoTable& t, const CodeSpec& code, Method method, int tw, const BoundOptions& opts = {});

/// The method's value at l with no parity information (v from opts.v).
BoundValue per_l_bound(const RhoTable& t, int l, Method method, const BoundOptions& opts = {});

/// per_l_bound for every l in 1..n.
std::vector<BoundValue> per_l_bounds(const RhoTable& t, Method method, const BoundOptions& opts = {});

/// Parity set = {l : bound at l < delta}. For Fim the known zeros come from
/// the parity set itself, iterated from the advisory set to a fixed point.
CodeSpec improved_code(const RhoTable& t, int delta, Method method, const BoundOptions& opts = {});

/// Re-checks every case witness against its predicate and the value
/// against the witnesses; Feng-Rao values are recounted.
bool verify_certificate(const RhoTable& t, const BoundValue& b, Method method);

} // namespace frb

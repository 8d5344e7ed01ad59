#pragma once

// Brute-force ground truth for tiny instances. Nothing here reuses the
// search or the predicates of the bound code; only RhoTable and the linear
// algebra are shared.

#include "frb/bounds.hpp"

#include <stdexcept>

namespace frb {

class OracleCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Row space of a full-rank matrix.
class Subspace {
public:
    /// Throws std::invalid_argument unless the rows are linearly independent.
    explicit Subspace(FieldMatrix basis);

    int dim() const { return basis_.rows(); }
    int length() const { return basis_.cols(); }
    const FieldMatrix& basis() const { return basis_; }

private:
    FieldMatrix basis_;
};

int support_size(const Subspace& d);

/// {m(c) : c in D \ 0} by enumerating all q^t - 1 nonzero combinations.
IndexList m_of_subspace(const BasisTriple& t, const Subspace& d, long long cap = 1000000);

/// Parity rows w_l, l in code.parity.
FieldMatrix parity_matrix(const BasisTriple& t, const CodeSpec& code);
/// Rows span the code.
FieldMatrix generator_matrix(const BasisTriple& t, const CodeSpec& code);

int true_min_distance(const BasisTriple& t, const CodeSpec& code, long long cap = 10000000);

/// Minimum support over all tw-dimensional subcodes, enumerated in reduced
/// echelon form over the message space.
int true_ghw(const BasisTriple& t, const CodeSpec& code, int tw, long long cap = 10000000);

/// Number of tw-dimensional subspaces of F_q^k, saturating at LLONG_MAX.
long long gaussian_binomial(int q, int k, int tw);

/// Largest subset of {i : some rho[i][j] in targets} with the mu-property.
int max_mu_exhaustive(const RhoTable& t, std::span<const int> targets, int universe_cap = 22);

} // namespace frb

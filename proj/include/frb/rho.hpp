#pragma once

// The rho-table: rho[i][j] is the position of u_i * v_j in the flag of spans
// of the ordered basis W. Every bound in the library is a function of this
// table alone, so it is built once (by linear algebra or by normal forms)
// and then shared read-only.

#include "frb/curve.hpp"
#include "frb/linalg.hpp"

#include <optional>
#include <span>
#include <vector>

namespace frb {

/// Indices are 1-based throughout the public interface: i in 1..n.
using IndexList = std::vector<int>;

struct BasisTriple {
    FieldMatrix u;
    FieldMatrix v;
    FieldMatrix w;

    int n() const { return w.rows(); }

    /// Throws FieldError unless all three are square, of equal size and invertible.
    void validate() const;

    /// U = V = W = (ev(M_1), ..., ev(M_n)).
    static BasisTriple from_curve(const Curve& curve);
};

/// Coordinates relative to W, with the inverse of W computed once.
class WCoordinates {
public:
    explicit WCoordinates(const FieldMatrix& w);

    int n() const { return inv_t_.rows(); }

    /// 0 for the zero vector, else the largest i with a nonzero W-coordinate.
    int rho(std::span<const Elem> c) const;

    std::vector<Elem> coordinates(std::span<const Elem> c) const;

private:
    FieldMatrix inv_t_; // row k = column k of W^{-1}
};

int rho_of_vector(const BasisTriple& t, std::span<const Elem> c);

/// Least l with c . w_l != 0. Throws on the zero vector.
int m_of_vector(const BasisTriple& t, std::span<const Elem> c);

class RhoTable {
public:
    RhoTable() = default;
    /// `values` is row-major, n*n entries in 1..n.
    RhoTable(int n, std::vector<int> values, std::vector<int> weights = {});

    int n() const { return n_; }
    int operator()(int i, int j) const { return values_[std::size_t(i - 1) * n_ + (j - 1)]; }

    bool has_weights() const { return !weights_.empty(); }
    /// Weight of index l (curve tables only).
    int weight(int l) const { return weights_.at(l - 1); }
    const std::vector<int>& weights() const { return weights_; }

    /// All j (ascending) with rho[i][j] == value.
    std::span<const int> columns_hitting(int i, int value) const;

    bool operator==(const RhoTable& o) const { return n_ == o.n_ && values_ == o.values_; }
    const std::vector<int>& values() const { return values_; }

private:
    int n_ = 0;
    std::vector<int> values_;
    std::vector<int> weights_;
    // CSR index keyed by (value, row) -> columns.
    std::vector<int> hit_offsets_;
    std::vector<int> hit_columns_;
};

/// rho[i][j] = rho_W(u_i * v_j). A zero star product is reported as a
/// FieldError naming the offending cell.
RhoTable rho_table_generic(const BasisTriple& t, int threads = 1);

/// rho[i][j] = footprint index of lm(normal_form(M_i M_j)); carries weights.
RhoTable rho_table_algebraic(const Curve& curve);

} // namespace frb

#pragma once

// Dense matrices over a FieldSpec and the Gaussian elimination routines the
// rest of the library needs (rank, inverse, echelon form, null space).

#include "frb/field.hpp"

#include <span>
#include <vector>

namespace frb {

class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(FieldPtr field, int rows, int cols);

    const FieldPtr& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elem operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
    Elem& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }

    std::span<const Elem> row(int r) const { return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)}; }
    std::span<Elem> row(int r) { return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)}; }

    static FieldMatrix identity(FieldPtr field, int n);
    static FieldMatrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows);

    FieldMatrix transpose() const;

    bool operator==(const FieldMatrix& other) const
    {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    FieldPtr field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Elem> data_;
};

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);

/// Row vector times matrix.
std::vector<Elem> vec_mul(const FieldSpec& f, std::span<const Elem> x, const FieldMatrix& m);

Elem dot(const FieldSpec& f, std::span<const Elem> a, std::span<const Elem> b);

std::vector<Elem> star(const FieldSpec& f, std::span<const Elem> a, std::span<const Elem> b);

int hamming_weight(std::span<const Elem> v);

struct Echelon {
    FieldMatrix reduced;      // reduced row echelon form, zero rows at the bottom
    std::vector<int> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(FieldMatrix m);

int rank(const FieldMatrix& m);

/// Throws FieldError when m is singular.
FieldMatrix inverse(const FieldMatrix& m);

/// Basis (as rows) of {x : m x^T = 0}.
FieldMatrix null_space(const FieldMatrix& m);

} // namespace frb

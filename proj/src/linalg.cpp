#include "frb/linalg.hpp"

namespace frb {

FieldMatrix::FieldMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0)
{
}

FieldMatrix FieldMatrix::identity(FieldPtr field, int n)
{
    FieldMatrix m(std::move(field), n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

FieldMatrix FieldMatrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows)
{
    const int cols = rows.empty() ? 0 : int(rows.front().size());
    FieldMatrix m(std::move(field), int(rows.size()), cols);
    for (int r = 0; r < m.rows(); ++r) {
        if (int(rows[r].size()) != cols)
            throw FieldError("ragged matrix rows");
        for (int c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

FieldMatrix FieldMatrix::transpose() const
{
    FieldMatrix t(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b)
{
    if (a.cols() != b.rows())
        throw FieldError("matrix dimension mismatch");
    const auto& f = *a.field();
    FieldMatrix out(a.field(), a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int k = 0; k < a.cols(); ++k) {
            const Elem x = a(r, k);
            if (x == 0)
                continue;
            for (int c = 0; c < b.cols(); ++c)
                out(r, c) = f.add(out(r, c), f.mul(x, b(k, c)));
        }
    return out;
}

std::vector<Elem> vec_mul(const FieldSpec& f, std::span<const Elem> x, const FieldMatrix& m)
{
    if (int(x.size()) != m.rows())
        throw FieldError("vector length mismatch");
    std::vector<Elem> out(m.cols(), 0);
    for (int k = 0; k < m.rows(); ++k) {
        if (x[k] == 0)
            continue;
        const auto row = m.row(k);
        for (int c = 0; c < m.cols(); ++c)
            out[c] = f.add(out[c], f.mul(x[k], row[c]));
    }
    return out;
}

Elem dot(const FieldSpec& f, std::span<const Elem> a, std::span<const Elem> b)
{
    if (a.size() != b.size())
        throw FieldError("vector length mismatch");
    Elem s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        s = f.add(s, f.mul(a[k], b[k]));
    return s;
}

std::vector<Elem> star(const FieldSpec& f, std::span<const Elem> a, std::span<const Elem> b)
{
    if (a.size() != b.size())
        throw FieldError("vector length mismatch");
    std::vector<Elem> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out[k] = f.mul(a[k], b[k]);
    return out;
}

int hamming_weight(std::span<const Elem> v)
{
    int w = 0;
    for (Elem x : v)
        w += x != 0;
    return w;
}

Echelon row_reduce(FieldMatrix m)
{
    const auto& f = *m.field();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int sel = -1;
        for (int k = r; k < m.rows(); ++k)
            if (m(k, c) != 0) {
                sel = k;
                break;
            }
        if (sel < 0)
            continue;
        if (sel != r)
            for (int k = 0; k < m.cols(); ++k)
                std::swap(m(sel, k), m(r, k));
        const Elem scale = f.inv(m(r, c));
        for (int k = 0; k < m.cols(); ++k)
            m(r, k) = f.mul(m(r, k), scale);
        for (int k = 0; k < m.rows(); ++k) {
            if (k == r || m(k, c) == 0)
                continue;
            const Elem factor = m(k, c);
            for (int x = 0; x < m.cols(); ++x)
                m(k, x) = f.sub(m(k, x), f.mul(factor, m(r, x)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

int rank(const FieldMatrix& m)
{
    return int(row_reduce(m).pivots.size());
}

FieldMatrix inverse(const FieldMatrix& m)
{
    if (m.rows() != m.cols())
        throw FieldError("inverse of a non-square matrix");
    const int n = m.rows();
    FieldMatrix aug(m.field(), n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto ech = row_reduce(std::move(aug));
    if (int(ech.pivots.size()) < n || ech.pivots[n - 1] != n - 1)
        throw FieldError("matrix is singular");
    FieldMatrix inv(m.field(), n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            inv(r, c) = ech.reduced(r, n + c);
    return inv;
}

FieldMatrix null_space(const FieldMatrix& m)
{
    const auto& f = *m.field();
    const auto ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : ech.pivots)
        is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);

    FieldMatrix basis(m.field(), int(free_cols.size()), m.cols());
    for (int b = 0; b < int(free_cols.size()); ++b) {
        const int fc = free_cols[b];
        basis(b, fc) = 1;
        for (int r = 0; r < int(ech.pivots.size()); ++r)
            basis(b, ech.pivots[r]) = f.neg(ech.reduced(r, fc));
    }
    return basis;
}

} // namespace frb

#include "frb/rho.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <thread>

namespace frb {

void BasisTriple::validate() const
{
    const int size = w.rows();
    for (const auto* m : {&u, &v, &w}) {
        if (m->rows() != size || m->cols() != size)
            throw FieldError("basis matrices must be n x n with equal n");
        if (rank(*m) != size)
            throw FieldError("basis matrix is not invertible");
    }
}

BasisTriple BasisTriple::from_curve(const Curve& curve)
{
    const int n = curve.n();
    FieldMatrix b(curve.field(), n, n);
    for (int i = 0; i < n; ++i) {
        const auto row = curve.evaluate(curve.footprint()[i]);
        std::copy(row.begin(), row.end(), b.row(i).begin());
    }
    return {b, b, b};
}

WCoordinates::WCoordinates(const FieldMatrix& w) : inv_t_(inverse(w).transpose())
{
}

std::vector<Elem> WCoordinates::coordinates(std::span<const Elem> c) const
{
    // c = a W  <=>  a = c W^{-1}; a_k = c . (column k of W^{-1}).
    if (int(c.size()) != n())
        throw FieldError("vector length mismatch");
    const auto& f = *inv_t_.field();
    std::vector<Elem> a(n());
    for (int k = 0; k < n(); ++k)
        a[k] = dot(f, c, inv_t_.row(k));
    return a;
}

int WCoordinates::rho(std::span<const Elem> c) const
{
    if (int(c.size()) != n())
        throw FieldError("vector length mismatch");
    const auto& f = *inv_t_.field();
    for (int k = n() - 1; k >= 0; --k)
        if (dot(f, c, inv_t_.row(k)) != 0)
            return k + 1;
    return 0;
}

int rho_of_vector(const BasisTriple& t, std::span<const Elem> c)
{
    return WCoordinates(t.w).rho(c);
}

int m_of_vector(const BasisTriple& t, std::span<const Elem> c)
{
    if (int(c.size()) != t.n())
        throw FieldError("vector length mismatch");
    const auto& f = *t.w.field();
    for (int l = 0; l < t.n(); ++l)
        if (dot(f, c, t.w.row(l)) != 0)
            return l + 1;
    throw FieldError("m(c) is undefined for the zero vector");
}

RhoTable::RhoTable(int n, std::vector<int> values, std::vector<int> weights)
    : n_(n), values_(std::move(values)), weights_(std::move(weights))
{
    if (n_ < 1 || values_.size() != std::size_t(n_) * n_)
        throw std::invalid_argument("rho table must have n*n entries");
    if (!weights_.empty() && int(weights_.size()) != n_)
        throw std::invalid_argument("weight list must have n entries");
    for (int v : values_)
        if (v < 1 || v > n_)
            throw std::invalid_argument("rho table entries must lie in 1..n");

    // Bucket (value, row) pairs; columns are appended in ascending order.
    const std::size_t keys = std::size_t(n_ + 1) * n_;
    hit_offsets_.assign(keys + 1, 0);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            ++hit_offsets_[std::size_t((*this)(i, j)) * n_ + (i - 1) + 1];
    for (std::size_t k = 0; k < keys; ++k)
        hit_offsets_[k + 1] += hit_offsets_[k];
    hit_columns_.resize(values_.size());
    std::vector<int> fill(hit_offsets_.begin(), hit_offsets_.end() - 1);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            hit_columns_[fill[std::size_t((*this)(i, j)) * n_ + (i - 1)]++] = j;
}

std::span<const int> RhoTable::columns_hitting(int i, int value) const
{
    if (value < 1 || value > n_ || i < 1 || i > n_)
        return {};
    const std::size_t key = std::size_t(value) * n_ + (i - 1);
    return {hit_columns_.data() + hit_offsets_[key], std::size_t(hit_offsets_[key + 1] - hit_offsets_[key])};
}

RhoTable rho_table_generic(const BasisTriple& t, int threads)
{
    t.validate();
    const int n = t.n();
    const WCoordinates coords(t.w);
    const auto& f = *t.w.field();
    std::vector<int> values(std::size_t(n) * n, 0);
    std::vector<std::string> errors(std::max(1, threads));

    auto work = [&](int worker, int workers) {
        std::vector<Elem> prod(n);
        for (int i = worker; i < n; i += workers)
            for (int j = 0; j < n; ++j) {
                const auto ui = t.u.row(i);
                const auto vj = t.v.row(j);
                for (int k = 0; k < n; ++k)
                    prod[k] = f.mul(ui[k], vj[k]);
                const int r = coords.rho(prod);
                if (r == 0 && errors[worker].empty())
                    errors[worker] = "zero star product at (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ")";
                values[std::size_t(i) * n + j] = r;
            }
    };

    const int workers = std::max(1, std::min(threads, n));
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work, w, workers);
        for (auto& th : pool)
            th.join();
    }
    for (const auto& e : errors)
        if (!e.empty())
            throw FieldError(e);
    return RhoTable(n, std::move(values));
}

RhoTable rho_table_algebraic(const Curve& curve)
{
    const int n = curve.n();
    std::map<Monomial, int> cache;
    auto reduce_index = [&](const Monomial& m) {
        if (int idx = curve.index_of(m))
            return idx;
        auto it = cache.find(m);
        if (it != cache.end())
            return it->second;
        const auto nf = curve.normal_form(m);
        if (nf.is_zero())
            throw FieldError("normal form of " + m.to_string() + " vanishes");
        const int idx = curve.index_of(nf.leading(curve.order()));
        cache.emplace(m, idx);
        return idx;
    };

    std::vector<int> values(std::size_t(n) * n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const int l = reduce_index(curve.monomial(i) * curve.monomial(j));
            values[std::size_t(i - 1) * n + (j - 1)] = l;
            values[std::size_t(j - 1) * n + (i - 1)] = l;
        }
    std::vector<int> weights(n);
    for (int l = 1; l <= n; ++l)
        weights[l - 1] = curve.weight(l);
    return RhoTable(n, std::move(values), std::move(weights));
}

} // namespace frb

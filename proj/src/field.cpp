#include "frb/field.hpp"

#include <algorithm>
#include <sstream>

namespace frb {

namespace {

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

int mod(long long v, int p)
{
    long long r = v % p;
    return int(r < 0 ? r + p : r);
}

int inv_mod(int a, int p)
{
    for (int x = 1; x < p; ++x)
        if ((a * x) % p == 1)
            return x;
    throw FieldError("no inverse modulo p");
}

void trim(std::vector<int>& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// Remainder of a modulo b over GF(p); b must have a nonzero leading coefficient.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p)
{
    trim(a);
    const int db = int(b.size()) - 1;
    const int lead_inv = inv_mod(b.back(), p);
    while (int(a.size()) - 1 >= db) {
        const int shift = int(a.size()) - 1 - db;
        const int factor = (a.back() * lead_inv) % p;
        for (int k = 0; k <= db; ++k)
            a[shift + k] = mod(a[shift + k] - factor * b[k], p);
        trim(a);
    }
    return a;
}

} // namespace

bool is_irreducible(int p, std::span<const int> poly)
{
    std::vector<int> f(poly.begin(), poly.end());
    for (auto& c : f)
        c = mod(c, p);
    trim(f);
    const int deg = int(f.size()) - 1;
    if (deg < 1)
        return false;
    // Every monic divisor of degree d, 1 <= d <= deg/2, is tried.
    for (int d = 1; d <= deg / 2; ++d) {
        long long count = 1;
        for (int k = 0; k < d; ++k)
            count *= p;
        for (long long code = 0; code < count; ++code) {
            std::vector<int> g(d + 1);
            long long rest = code;
            for (int k = 0; k < d; ++k) {
                g[k] = int(rest % p);
                rest /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty())
                return false;
        }
    }
    return true;
}

FieldSpec::FieldSpec(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus))
{
    for (int k = 0; k < m; ++k)
        q_ *= p;

    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        const auto ca = coeffs(Elem(a));
        std::vector<int> na(ca.size());
        for (std::size_t k = 0; k < ca.size(); ++k)
            na[k] = mod(-ca[k], p_);
        neg_[a] = pack(na);
        for (int b = 0; b < q_; ++b) {
            const auto cb = coeffs(Elem(b));
            add_[index(Elem(a), Elem(b))] = pack(poly_add(ca, cb));
            mul_[index(Elem(a), Elem(b))] = pack(poly_mulmod(ca, cb));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[index(Elem(a), Elem(b))] == 1) {
                inv_[a] = Elem(b);
                break;
            }
}

FieldPtr FieldSpec::make(int p, int m, std::vector<int> modulus)
{
    if (!is_prime(p))
        throw FieldError("characteristic must be prime");
    if (m < 1)
        throw FieldError("extension degree must be at least 1");
    long long q = 1;
    for (int k = 0; k < m; ++k)
        q *= p;
    if (q > 256)
        throw FieldError("field size above 256 is not supported");
    if (int(modulus.size()) != m + 1)
        throw FieldError("modulus must have exactly m+1 coefficients");
    for (int c : modulus)
        if (c < 0 || c >= p)
            throw FieldError("modulus coefficients must lie in 0..p-1");
    if (modulus.back() == 0)
        throw FieldError("modulus must have degree m");
    if (!is_irreducible(p, modulus))
        throw FieldError("modulus is reducible");
    return FieldPtr(new FieldSpec(p, m, std::move(modulus)));
}

FieldPtr FieldSpec::gf8()
{
    static const FieldPtr f = make(2, 3, {1, 1, 0, 1});
    return f;
}

FieldPtr FieldSpec::gf27()
{
    static const FieldPtr f = make(3, 3, {1, 2, 0, 1});
    return f;
}

Elem FieldSpec::inv(Elem a) const
{
    if (a == 0)
        throw FieldError("inversion of zero");
    return inv_[a];
}

Elem FieldSpec::pow(Elem a, unsigned long long e) const
{
    Elem result = 1;
    Elem base = a;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Elem FieldSpec::from_int(long long v) const
{
    return Elem(mod(v, p_));
}

std::vector<int> FieldSpec::coeffs(Elem a) const
{
    std::vector<int> c(m_);
    int rest = a;
    for (int k = 0; k < m_; ++k) {
        c[k] = rest % p_;
        rest /= p_;
    }
    return c;
}

Elem FieldSpec::pack(std::span<const int> coeffs) const
{
    if (int(coeffs.size()) > m_)
        throw FieldError("too many coefficients for this field");
    int code = 0;
    for (int k = int(coeffs.size()) - 1; k >= 0; --k)
        code = code * p_ + mod(coeffs[k], p_);
    return Elem(code);
}

std::string FieldSpec::to_string(Elem a) const
{
    if (a == 0)
        return "0";
    const auto c = coeffs(a);
    std::ostringstream out;
    bool first = true;
    for (int k = m_ - 1; k >= 0; --k) {
        if (c[k] == 0)
            continue;
        if (!first)
            out << '+';
        first = false;
        if (k == 0 || c[k] != 1)
            out << c[k];
        if (k >= 1)
            out << 't';
        if (k >= 2)
            out << '^' << k;
    }
    return out.str();
}

std::vector<int> FieldSpec::poly_add(const std::vector<int>& a, const std::vector<int>& b) const
{
    std::vector<int> r(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] = mod((k < a.size() ? a[k] : 0) + (k < b.size() ? b[k] : 0), p_);
    return r;
}

std::vector<int> FieldSpec::poly_mulmod(const std::vector<int>& a, const std::vector<int>& b) const
{
    std::vector<int> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod(r[i + j] + a[i] * b[j], p_);
    r = poly_rem(std::move(r), modulus_, p_);
    r.resize(m_, 0);
    return r;
}

FieldElement::FieldElement(FieldPtr field, Elem code) : field_(std::move(field)), code_(code)
{
    if (!field_)
        throw FieldError("element without field");
    if (code_ >= field_->size())
        throw FieldError("element code out of range");
}

const FieldSpec& FieldElement::same_field(const FieldElement& b) const
{
    if (field_ != b.field_ && !(*field_ == *b.field_))
        throw FieldError("operands belong to different fields");
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& b) const
{
    return {field_, same_field(b).add(code_, b.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& b) const
{
    return {field_, same_field(b).sub(code_, b.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& b) const
{
    return {field_, same_field(b).mul(code_, b.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& b) const
{
    const auto& f = same_field(b);
    return {field_, f.mul(code_, f.inv(b.code_))};
}

bool FieldElement::operator==(const FieldElement& b) const
{
    same_field(b);
    return code_ == b.code_;
}

FieldElement make_element(const FieldPtr& field, std::span<const int> coeffs)
{
    return {field, field->pack(coeffs)};
}

FieldElement inverse(const FieldElement& a)
{
    return {a.field(), a.field()->inv(a.code())};
}

FieldElement pow(const FieldElement& a, unsigned long long e)
{
    return {a.field(), a.field()->pow(a.code(), e)};
}

std::vector<FieldElement> enumerate(const FieldPtr& field)
{
    std::vector<FieldElement> all;
    all.reserve(field->size());
    for (int c = 0; c < field->size(); ++c)
        all.emplace_back(field, Elem(c));
    return all;
}

} // namespace frb

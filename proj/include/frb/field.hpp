#pragma once

// Small finite fields GF(p^m), q = p^m <= 256.
//
// An element is a polynomial over GF(p) of degree < m, reduced modulo the
// field's modulus. It is carried around packed into a single byte
// (code = c_0 + c_1 p + ... + c_{m-1} p^{m-1}); the packing is a bijection
// with the coefficient vector and defines the enumeration order.

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace frb {

using Elem = std::uint8_t;

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

class FieldSpec {
public:
    /// `modulus` lists the m+1 coefficients in ascending degree. It must be
    /// irreducible over GF(p); the leading coefficient need not be 1.
    static FieldPtr make(int p, int m, std::vector<int> modulus);

    static FieldPtr gf8();   // t^3 + t + 1
    static FieldPtr gf27();  // t^3 + 2t + 1

    int characteristic() const { return p_; }
    int degree() const { return m_; }
    int size() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const { return add_[index(a, b)]; }
    Elem sub(Elem a, Elem b) const { return add_[index(a, neg_[b])]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const { return mul_[index(a, b)]; }
    Elem inv(Elem a) const;
    Elem pow(Elem a, unsigned long long e) const;

    /// Embeds an integer of the prime field (taken mod p).
    Elem from_int(long long v) const;

    std::vector<int> coeffs(Elem a) const;
    Elem pack(std::span<const int> coeffs) const;
    std::string to_string(Elem a) const;

    bool operator==(const FieldSpec& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

private:
    FieldSpec(int p, int m, std::vector<int> modulus);

    std::size_t index(Elem a, Elem b) const { return std::size_t(a) * std::size_t(q_) + b; }

    // Coefficient-vector arithmetic; the tables below are filled from these.
    std::vector<int> poly_add(const std::vector<int>& a, const std::vector<int>& b) const;
    std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b) const;

    int p_;
    int m_;
    int q_;
    std::vector<int> modulus_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
};

/// True iff the polynomial (ascending coefficients over GF(p)) has no monic
/// factor of degree 1..deg/2.
bool is_irreducible(int p, std::span<const int> poly);

/// Value type tied to its field. Mixing elements of different fields throws.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem code);

    const FieldPtr& field() const { return field_; }
    Elem code() const { return code_; }
    std::vector<int> coeffs() const { return field_->coeffs(code_); }
    bool is_zero() const { return code_ == 0; }

    FieldElement operator+(const FieldElement& b) const;
    FieldElement operator-(const FieldElement& b) const;
    FieldElement operator*(const FieldElement& b) const;
    FieldElement operator/(const FieldElement& b) const;
    FieldElement operator-() const { return {field_, field_->neg(code_)}; }
    bool operator==(const FieldElement& b) const;

private:
    const FieldSpec& same_field(const FieldElement& b) const;

    FieldPtr field_;
    Elem code_;
};

/// Builds an element from at most m coefficients (ascending degree).
FieldElement make_element(const FieldPtr& field, std::span<const int> coeffs);
FieldElement inverse(const FieldElement& a);
FieldElement pow(const FieldElement& a, unsigned long long e);

/// All q elements, zero first, in lexicographic order of the coefficient
/// vectors (most significant = highest degree).
std::vector<FieldElement> enumerate(const FieldPtr& field);

} // namespace frb

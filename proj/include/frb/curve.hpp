#pragma once

// Plane curves G(X) - H(Y) over a small field, the weighted degree
// lexicographic order, normal forms modulo {F, X^q - X, Y^q - Y}, the
// footprint M_1 < ... < M_n and the evaluation map.

#include "frb/field.hpp"

#include <compare>
#include <istream>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace frb {

class CurveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Monomial {
    int x = 0; // exponent of X
    int y = 0; // exponent of Y

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    Monomial operator*(const Monomial& o) const { return {x + o.x, y + o.y}; }
    bool divides(const Monomial& o) const { return x <= o.x && y <= o.y; }
    std::string to_string() const;
};

/// w(X^a Y^b) = wx a + wy b; ties are broken by the X-exponent (smaller is
/// smaller).
struct MonomialOrder {
    int wx = 1;
    int wy = 1;

    int weight(const Monomial& m) const { return wx * m.x + wy * m.y; }
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const
    {
        if (auto c = weight(a) <=> weight(b); c != 0)
            return c;
        return a.x <=> b.x;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

/// Sparse bivariate polynomial; zero coefficients are never stored.
class Polynomial {
public:
    explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}

    static Polynomial monomial(FieldPtr field, Monomial m, Elem c = 1);
    static Polynomial univariate_x(FieldPtr field, const std::vector<int>& coeffs);
    static Polynomial univariate_y(FieldPtr field, const std::vector<int>& coeffs);

    const FieldPtr& field() const { return field_; }
    const std::map<Monomial, Elem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Elem coeff(const Monomial& m) const;

    void add_term(const Monomial& m, Elem c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    /// Throws on the zero polynomial.
    Monomial leading(const MonomialOrder& order) const;

    Elem evaluate(Elem x, Elem y) const;

    std::string to_string(const MonomialOrder& order) const;

private:
    FieldPtr field_;
    std::map<Monomial, Elem> terms_;
};

/// Curve description as read from a config file; coefficients are integers
/// of the prime field, ascending degree.
struct CurveConfig {
    int p = 2;
    int m = 1;
    std::vector<int> modulus;
    std::vector<int> g;
    std::vector<int> h;
    int wx = 1;
    int wy = 1;
    std::string name = "custom";
};

/// Throws CurveError on malformed input.
CurveConfig parse_curve_config(std::istream& in);
CurveConfig load_curve_config(const std::string& path);

CurveConfig preset_config(const std::string& name);

class Curve {
public:
    static Curve make(const CurveConfig& cfg);
    static Curve f8();
    static Curve f27();

    const std::string& name() const { return name_; }
    const FieldPtr& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }
    const Polynomial& equation() const { return equation_; }
    int n() const { return int(footprint_.size()); }

    /// M_1, ..., M_n (stored 0-based; footprint()[i-1] is M_i).
    const std::vector<Monomial>& footprint() const { return footprint_; }
    const Monomial& monomial(int index) const { return footprint_.at(index - 1); }

    /// 1-based footprint index, or 0 when m is not in the footprint.
    int index_of(const Monomial& m) const;

    /// Weight of M_index.
    int weight(int index) const { return order_.weight(monomial(index)); }

    const std::vector<std::pair<Elem, Elem>>& points() const { return points_; }

    bool in_footprint(const Monomial& m) const { return m.x < deg_g_ && m.y < field_->size(); }

    Polynomial normal_form(const Polynomial& p) const;
    Polynomial normal_form(const Monomial& m) const { return normal_form(Polynomial::monomial(field_, m)); }

    std::vector<Elem> evaluate(const Monomial& m) const;
    std::vector<Elem> evaluate(const Polynomial& p) const;

private:
    Curve() = default;

    std::string name_;
    FieldPtr field_;
    MonomialOrder order_;
    Polynomial equation_{nullptr};
    Polynomial y_field_eq_{nullptr};
    int deg_g_ = 0;
    std::vector<Monomial> footprint_;
    std::vector<std::pair<Elem, Elem>> points_;
};

} // namespace frb

#include "frb/curve.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace frb {

std::string Monomial::to_string() const
{
    if (x == 0 && y == 0)
        return "1";
    std::string s;
    if (x > 0)
        s += x == 1 ? "X" : "X^" + std::to_string(x);
    if (y > 0)
        s += y == 1 ? "Y" : "Y^" + std::to_string(y);
    return s;
}

Polynomial Polynomial::monomial(FieldPtr field, Monomial m, Elem c)
{
    Polynomial p(std::move(field));
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::univariate_x(FieldPtr field, const std::vector<int>& coeffs)
{
    Polynomial p(std::move(field));
    for (int k = 0; k < int(coeffs.size()); ++k)
        p.add_term({k, 0}, p.field_->from_int(coeffs[k]));
    return p;
}

Polynomial Polynomial::univariate_y(FieldPtr field, const std::vector<int>& coeffs)
{
    Polynomial p(std::move(field));
    for (int k = 0; k < int(coeffs.size()); ++k)
        p.add_term({0, k}, p.field_->from_int(coeffs[k]));
    return p;
}

Elem Polynomial::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Elem(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, Elem c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted)
        return;
    it->second = field_->add(it->second, c);
    if (it->second == 0)
        terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, field_->neg(c));
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    Polynomial r(field_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ma * mb, field_->mul(ca, cb));
    return r;
}

Monomial Polynomial::leading(const MonomialOrder& order) const
{
    if (terms_.empty())
        throw CurveError("leading monomial of the zero polynomial");
    Monomial best = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (order.less(best, m))
            best = m;
    return best;
}

Elem Polynomial::evaluate(Elem x, Elem y) const
{
    const auto& f = *field_;
    Elem s = 0;
    for (const auto& [m, c] : terms_)
        s = f.add(s, f.mul(c, f.mul(f.pow(x, m.x), f.pow(y, m.y))));
    return s;
}

std::string Polynomial::to_string(const MonomialOrder& order) const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Monomial, Elem>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
    std::string s;
    for (const auto& [m, c] : sorted) {
        if (!s.empty())
            s += " + ";
        if (c != 1)
            s += "(" + field_->to_string(c) + ")" + (m == Monomial{} ? "" : "*");
        if (c != 1 && m == Monomial{})
            continue;
        s += m.to_string();
    }
    return s;
}

namespace {

std::vector<int> int_array(const nlohmann::json& doc, const char* key)
{
    if (!doc.contains(key) || !doc[key].is_array())
        throw CurveError(std::string("curve config: '") + key + "' must be an integer array");
    std::vector<int> out;
    for (const auto& v : doc[key]) {
        if (!v.is_number_integer())
            throw CurveError(std::string("curve config: '") + key + "' must be an integer array");
        out.push_back(v.get<int>());
    }
    return out;
}

int positive_int(const nlohmann::json& doc, const char* key)
{
    if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<int>() < 1)
        throw CurveError(std::string("curve config: '") + key + "' must be a positive integer");
    return doc[key].get<int>();
}

int degree(const std::vector<int>& coeffs)
{
    for (int k = int(coeffs.size()) - 1; k >= 0; --k)
        if (coeffs[k] != 0)
            return k;
    return -1;
}

} // namespace

CurveConfig parse_curve_config(std::istream& in)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw CurveError(std::string("curve config: ") + e.what());
    }
    if (!doc.is_object())
        throw CurveError("curve config: expected a JSON object");

    CurveConfig cfg;
    cfg.p = positive_int(doc, "p");
    cfg.m = positive_int(doc, "m");
    cfg.modulus = int_array(doc, "modulus");
    cfg.g = int_array(doc, "G");
    cfg.h = int_array(doc, "H");
    const auto w = int_array(doc, "weights");
    if (w.size() != 2 || w[0] < 1 || w[1] < 1)
        throw CurveError("curve config: 'weights' must be [w_X, w_Y] with positive entries");
    cfg.wx = w[0];
    cfg.wy = w[1];
    if (doc.contains("name") && doc["name"].is_string())
        cfg.name = doc["name"].get<std::string>();
    for (const auto* arr : {&cfg.modulus, &cfg.g, &cfg.h})
        for (int c : *arr)
            if (c < 0 || c >= cfg.p)
                throw CurveError("curve config: coefficients must lie in 0..p-1");
    return cfg;
}

CurveConfig load_curve_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CurveError("cannot open curve config '" + path + "'");
    return parse_curve_config(in);
}

CurveConfig preset_config(const std::string& name)
{
    CurveConfig cfg;
    cfg.name = name;
    if (name == "f8") {
        cfg.p = 2;
        cfg.m = 3;
        cfg.modulus = {1, 1, 0, 1};
        cfg.g = {0, 1, 1, 0, 1};          // X^4 + X^2 + X
        cfg.h = {0, 0, 0, 1, 0, 1, 1};    // Y^6 + Y^5 + Y^3
        cfg.wx = 3;
        cfg.wy = 2;
    } else if (name == "f27") {
        cfg.p = 3;
        cfg.m = 3;
        cfg.modulus = {1, 2, 0, 1};
        cfg.g = std::vector<int>(10, 0);  // X^9 + X^3 + X
        cfg.g[1] = cfg.g[3] = cfg.g[9] = 1;
        cfg.h = std::vector<int>(13, 0);  // Y^12 + Y^10 + Y^4
        cfg.h[4] = cfg.h[10] = cfg.h[12] = 1;
        cfg.wx = 4;
        cfg.wy = 3;
    } else {
        throw CurveError("unknown curve preset '" + name + "'");
    }
    return cfg;
}

Curve Curve::make(const CurveConfig& cfg)
{
    Curve c;
    c.name_ = cfg.name;
    try {
        c.field_ = FieldSpec::make(cfg.p, cfg.m, cfg.modulus);
    } catch (const FieldError& e) {
        throw CurveError(std::string("curve field: ") + e.what());
    }
    c.order_ = {cfg.wx, cfg.wy};
    const int q = c.field_->size();

    const int dg = degree(cfg.g);
    const int dh = degree(cfg.h);
    if (dg < 1 || dh < 1)
        throw CurveError("G and H must be non-constant");
    if (dg >= q || dh >= q)
        throw CurveError("deg G and deg H must be below q");
    c.deg_g_ = dg;

    const auto G = Polynomial::univariate_x(c.field_, cfg.g);
    const auto H = Polynomial::univariate_y(c.field_, cfg.h);
    c.equation_ = G - H;
    if (c.equation_.leading(c.order_) != Monomial{dg, 0})
        throw CurveError("leading monomial of G(X) - H(Y) must be X^deg(G) under the chosen weights");
    c.y_field_eq_ = Polynomial::monomial(c.field_, {0, q}) - Polynomial::monomial(c.field_, {0, 1});

    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            if (c.equation_.evaluate(Elem(x), Elem(y)) == 0)
                c.points_.emplace_back(Elem(x), Elem(y));

    for (int a = 0; a < dg; ++a)
        for (int b = 0; b < q; ++b)
            c.footprint_.push_back({a, b});
    std::sort(c.footprint_.begin(), c.footprint_.end(),
              [&](const Monomial& a, const Monomial& b) { return c.order_.less(a, b); });

    // The quotient by the ideal of the points has dimension #points; when the
    // candidate footprint has the same size, {F, Y^q - Y} is a Groebner basis.
    if (c.footprint_.size() != c.points_.size())
        throw CurveError("footprint size " + std::to_string(c.footprint_.size()) + " differs from " +
                         std::to_string(c.points_.size()) + " points: not a Groebner basis");
    return c;
}

Curve Curve::f8()
{
    return make(preset_config("f8"));
}

Curve Curve::f27()
{
    return make(preset_config("f27"));
}

int Curve::index_of(const Monomial& m) const
{
    if (!in_footprint(m))
        return 0;
    auto it = std::lower_bound(footprint_.begin(), footprint_.end(), m,
                               [&](const Monomial& a, const Monomial& b) { return order_.less(a, b); });
    return (it != footprint_.end() && *it == m) ? int(it - footprint_.begin()) + 1 : 0;
}

Polynomial Curve::normal_form(const Polynomial& p) const
{
    if (p.field() != field_ && !(*p.field() == *field_))
        throw CurveError("polynomial over a different field");
    const auto& f = *field_;
    const Monomial lm_f{deg_g_, 0};
    const Elem lc_f_inv = f.inv(equation_.coeff(lm_f));
    const Monomial lm_y{0, f.size()};

    Polynomial r(field_);
    for (const auto& [m, c] : p.terms())
        r.add_term(m, c);

    for (;;) {
        bool found = false;
        Monomial top;
        for (const auto& [m, c] : r.terms())
            if (!in_footprint(m) && (!found || order_.less(top, m))) {
                top = m;
                found = true;
            }
        if (!found)
            break;
        const Elem c = r.coeff(top);
        if (lm_f.divides(top)) {
            const Monomial shift{top.x - lm_f.x, top.y};
            r = r - Polynomial::monomial(field_, shift, f.mul(c, lc_f_inv)) * equation_;
        } else {
            const Monomial shift{top.x, top.y - lm_y.y};
            r = r - Polynomial::monomial(field_, shift, c) * y_field_eq_;
        }
    }
    return r;
}

std::vector<Elem> Curve::evaluate(const Monomial& m) const
{
    const auto& f = *field_;
    std::vector<Elem> out;
    out.reserve(points_.size());
    for (const auto& [x, y] : points_)
        out.push_back(f.mul(f.pow(x, m.x), f.pow(y, m.y)));
    return out;
}

std::vector<Elem> Curve::evaluate(const Polynomial& p) const
{
    std::vector<Elem> out;
    out.reserve(points_.size());
    for (const auto& [x, y] : points_)
        out.push_back(p.evaluate(x, y));
    return out;
}

} // namespace frb

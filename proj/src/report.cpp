#include "frb/report.hpp"

#include <json.hpp>

#include <sstream>

namespace frb {

using ojson = nlohmann::ordered_json;

void BoundReport::add(std::string target, Method m, const BoundValue& b)
{
    ReportRow row{std::move(target), to_string(m), b.value, {}, {}};
    for (const auto& c : b.cases) {
        if (row.certificate.empty() && int(c.witness.size()) == b.value)
            row.certificate = c.witness;
        row.cases.push_back({c.label, c.witness});
    }
    rows.push_back(std::move(row));
}

std::string to_csv(const BoundReport& r)
{
    std::ostringstream out;
    for (const auto& [k, v] : r.meta)
        out << "# " << k << '=' << v << '\n';
    out << "target,method,value,certificate\n";
    for (const auto& row : r.rows) {
        out << row.target << ',' << row.method << ',' << row.value << ',';
        for (std::size_t k = 0; k < row.certificate.size(); ++k)
            out << (k ? " " : "") << row.certificate[k];
        out << '\n';
    }
    return out.str();
}

std::string to_json(const BoundReport& r)
{
    ojson meta = ojson::object();
    for (const auto& [k, v] : r.meta)
        meta[k] = v;
    ojson bounds = ojson::object();
    for (const auto& row : r.rows) {
        ojson cases = ojson::array();
        for (const auto& c : row.cases)
            cases.push_back({{"label", c.label}, {"witness", c.witness}});
        bounds[row.target][row.method] = {{"value", row.value}, {"certificate", row.certificate}, {"cases", cases}};
    }
    ojson doc = {{"meta", meta}, {"bounds", bounds}};
    return doc.dump(2) + "\n";
}

BoundReport report_from_json(const std::string& text)
{
    BoundReport r;
    try {
        const auto doc = ojson::parse(text);
        for (const auto& [k, v] : doc.at("meta").items())
            r.meta.emplace_back(k, v.get<std::string>());
        for (const auto& [target, methods] : doc.at("bounds").items())
            for (const auto& [method, entry] : methods.items()) {
                ReportRow row{target, method, entry.at("value").get<int>(),
                              entry.at("certificate").get<IndexList>(), {}};
                for (const auto& c : entry.at("cases"))
                    row.cases.push_back({c.at("label").get<std::string>(), c.at("witness").get<IndexList>()});
                r.rows.push_back(std::move(row));
            }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad report JSON: ") + e.what());
    }
    return r;
}

} // namespace frb

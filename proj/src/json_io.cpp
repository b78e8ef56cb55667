#include "k3strat/json_io.hpp"

#include <cctype>

namespace k3strat {

Json json_of(const Rational& r) { return to_string(r); }

Json json_of(const RationalPolynomial& q) {
    Json arr = Json::array();
    for (const Rational& c : q.coeffs()) arr.push_back(json_of(c));
    return arr;
}

Json json_of(const WeylElement& w) {
    Json j;
    j["family"] = family_name(w.family());
    j["m"] = w.rank();
    j["window"] = w.window();
    j["signed_window"] = w.signed_window();
    j["length"] = length(w);
    return j;
}

Json json_of(const StratumDescriptor& d) {
    Json j;
    j["n"] = d.n;
    j["kind"] = invariant_kind_name(d.kind);
    j["value"] = d.value;
    j["twisted"] = d.twisted;
    j["empty"] = d.empty;
    return j;
}

Json json_of(const ClassExpr& c) {
    Json j;
    j["stratum"] = json_of(c.stratum);
    j["coefficient"] = json_of(c.coefficient);
    j["lambda_power"] = c.lambda_power;
    j["factored"] = c.factored;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

Json json_of(const CoverDatum& c) {
    Json j;
    j["index"] = c.reflection_index;
    j["target_window"] = c.target.window();
    return j;
}

Json json_of(const CensusMap& census) {
    Json cells = Json::object();
    long long total = 0;
    for (const auto& [w, count] : census) {
        cells[window_string(w)] = count;
        total += count;
    }
    Json j;
    j["cells"] = std::move(cells);
    j["total"] = total;
    return j;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array())
        throw DomainError("flag file must hold a JSON array of rows");
    Matrix rows;
    for (const Json& jr : j) {
        if (!jr.is_array())
            throw DomainError("each flag row must be a JSON array of integers");
        Row r;
        for (const Json& je : jr) {
            if (!je.is_number_integer())
                throw DomainError("flag entries must be integers");
            r.push_back(je.get<int>());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<int> parse_window(const std::string& s) {
    std::vector<int> out;
    size_t i = 0;
    while (i < s.size()) {
        size_t j = i;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        size_t digits = j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == digits)
            throw DomainError("window must be a comma-separated integer list");
        out.push_back(std::stoi(s.substr(i, j - i)));
        if (j == s.size()) break;
        if (s[j] != ',')
            throw DomainError("window must be a comma-separated integer list");
        i = j + 1;
        if (i == s.size())
            throw DomainError("window must not end with a comma");
    }
    if (out.empty())
        throw DomainError("window must not be empty");
    return out;
}

}  // namespace k3strat

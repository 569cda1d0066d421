#include "wmds/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace wmds {

json to_json(const GaussElement& x) {
    json terms = json::array();
    for (const auto& t : x.terms()) {
        json g = json::object();
        for (int s = 1; s < x.n(); ++s)
            if (t.mono.g[s]) g[std::to_string(s)] = static_cast<int>(t.mono.g[s]);
        terms.push_back({{"coeff", t.coeff}, {"q", t.mono.q_exp}, {"g", g}});
    }
    return {{"n", x.n()}, {"terms", terms}};
}

GaussElement gauss_from_json(const json& j) {
    int n = j.at("n").get<int>();
    GaussElement out = GaussElement::zero(n);
    for (const auto& t : j.at("terms")) {
        std::map<int, int> g;
        for (const auto& [key, val] : t.at("g").items()) g[std::stoi(key)] = val.get<int>();
        out += GaussElement::monomial(n, t.at("coeff").get<std::int64_t>(), normalize(t.at("q").get<int>(), g, n));
    }
    return out;
}

json to_json(const CyclotomicInt& x) {
    json c = json::array();
    for (const auto& v : x.coeffs()) {
        if (v.fits_slong_p()) c.push_back(v.get_si());
        else c.push_back(v.get_str());
    }
    return {{"M", x.modulus()}, {"coeffs", c}};
}

json int_vector(const std::vector<int>& v) { return json(v); }

std::string join_ints(const std::vector<int>& v, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? std::string(1, sep) : "") << v[i];
    return os.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string table_to_json(const std::vector<TableRow>& rows, bool with_label) {
    json arr = json::array();
    for (const auto& r : rows) {
        json row = json::object();
        if (with_label) row["w"] = r.label;
        row["k"] = r.k;
        row["m"] = r.m;
        if (r.symbolic) row["value"] = to_json(r.value);
        if (r.numeric) row["numeric"] = to_json(*r.numeric);
        arr.push_back(row);
    }
    return arr.dump(2) + "\n";
}

std::string table_to_csv(const std::vector<TableRow>& rows, bool with_label, const std::string& label_name) {
    std::ostringstream os;
    if (with_label) os << label_name << ",";
    bool symbolic = rows.empty() || rows.front().symbolic;
    bool numeric = !rows.empty() && rows.front().numeric.has_value();
    os << "k,m";
    if (symbolic) os << ",value,json";
    if (numeric) os << ",numeric";
    os << "\n";
    for (const auto& r : rows) {
        if (with_label) os << csv_field(r.label) << ",";
        os << csv_field(join_ints(r.k)) << "," << csv_field(join_ints(r.m));
        if (symbolic) os << "," << csv_field(r.value.to_string()) << "," << csv_field(to_json(r.value).dump());
        if (numeric) os << "," << csv_field(r.numeric ? to_json(*r.numeric).dump() : std::string());
        os << "\n";
    }
    return os.str();
}

}  // namespace wmds

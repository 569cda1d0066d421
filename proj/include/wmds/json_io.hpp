#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wmds/cyclotomic.hpp"
#include "wmds/gauss.hpp"

namespace wmds {

using json = nlohmann::ordered_json;

// {"n": n, "terms": [{"coeff": c, "q": e, "g": {"t": exp, ...}}, ...]}, terms in canonical order.
json to_json(const GaussElement& x);
GaussElement gauss_from_json(const json& j);

// {"M": M, "coeffs": [...]}; coefficients that do not fit in 64 bits are written as decimal strings.
json to_json(const CyclotomicInt& x);

json int_vector(const std::vector<int>& v);

// One table row: a key, its coefficient, and optionally its value at a concrete field.
struct TableRow {
    std::vector<int> k, m;
    GaussElement value;
    std::string label;  // free-form leading column (the Weyl word for stable tables)
    bool symbolic = true;
    std::optional<CyclotomicInt> numeric;
};

std::string table_to_json(const std::vector<TableRow>& rows, bool with_label);
std::string table_to_csv(const std::vector<TableRow>& rows, bool with_label, const std::string& label_name = "w");

// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(const std::string& s);
std::string join_ints(const std::vector<int>& v, char sep = ' ');

}  // namespace wmds

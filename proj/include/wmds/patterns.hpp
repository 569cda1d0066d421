#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wmds/gauss.hpp"

namespace wmds {

// A short pattern (d_1, ..., d_{2r-1}); at(0) = at(2r) = 0.
struct ShortPattern {
    int r = 0;
    std::vector<int> d;

    ShortPattern() = default;
    ShortPattern(int rank, std::vector<int> entries);

    int at(int i) const { return (i <= 0 || i >= 2 * r) ? 0 : d[i - 1]; }
    int prime(int i) const;
    bool operator==(const ShortPattern& o) const { return r == o.r && d == o.d; }
    bool operator<(const ShortPattern& o) const { return r != o.r ? r < o.r : d < o.d; }
    std::string to_string() const;
};

enum class Resonance { TotallyResonant, ClassI, ClassII };

struct WeightVector {
    std::vector<int> k;  // k[0] = k_1
    bool strict = false;
    Resonance cls = Resonance::TotallyResonant;
    int i0 = 0;  // first index with d_i != d_{2r-i}, 0 if totally resonant
    int a = 0;   // |d_{i0} - d_{2r-i0}|
};

int eps(int i, int r);

std::vector<int> weight_k(const ShortPattern& t);
bool is_strict(const std::vector<int>& k, const std::vector<int>& mu);
WeightVector classify(const std::vector<int>& k, const std::vector<int>& mu);
WeightVector weight_of(const ShortPattern& t, const std::vector<int>& mu);

bool in_cq(const ShortPattern& t, const std::vector<int>& mu);
bool in_bzl(const ShortPattern& t, const std::vector<int>& mu);

// CQ_1(mu) enumerated from its defining inequalities, sorted.
std::vector<ShortPattern> enumerate_patterns(const std::vector<int>& mu);
// BZL_1(mu) enumerated from its own inequalities, sorted.
std::vector<ShortPattern> enumerate_bzl_short(const std::vector<int>& mu);
// Patterns of CQ_1(mu) grouped by weight vector.
std::map<std::vector<int>, std::vector<ShortPattern>> patterns_by_weight(const std::vector<int>& mu);
// Patterns of weight k in CQ_1(mu) (bzl = false) or BZL_1(mu) (bzl = true), sorted.
std::vector<ShortPattern> patterns_of_weight(const std::vector<int>& mu, const std::vector<int>& k, bool bzl);

enum class ArrayKind {
    Gamma,
    Delta,
    GammaIota,
    DeltaIota,
    GammaPrime,
    DeltaPrime,
    GammaPrimeIota,
    DeltaPrimeIota,
    GammaFlat,
    DeltaFlat,
    Psi  // one component block of the component-wise decoration
};

std::string kind_name(ArrayKind k);

struct ArrayEntry {
    long long value = 0;
    bool boxed = false;
    bool circled = false;
    bool long_root = false;  // boxed weight uses g_2
};

struct DecoratedArray {
    ArrayKind kind = ArrayKind::Gamma;
    int r = 0;
    std::vector<ArrayEntry> entries;
    int top_row = 0;  // number of entries in the first row, the rest form the second row
    int prefactor_qexp = 0;
    int N = 0;
    bool forced_nonstrict = false;

    bool strict() const;
    std::string dump() const;
};

// Entry values of the one-row arrays.
long long gamma_entry(const ShortPattern& t, int pos);
long long delta_entry(const ShortPattern& t, int pos);
// c_{1,1} + cbar_{1,1}; equal to k_1 for r >= 2 and to 2 d_1 for r = 1.
long long iota_base(const ShortPattern& t);
int default_iota_N(const ShortPattern& t, int n);

DecoratedArray build_array(const ShortPattern& t, const std::vector<int>& mu, ArrayKind kind,
                           std::optional<int> N = std::nullopt);

GaussElement entry_weight(const ArrayEntry& e, int n);
GaussElement array_weight(const DecoratedArray& arr, int n);

struct Split {
    ShortPattern t_star, t_sharp;
    std::vector<int> mu_star, mu_sharp;
};
Split classify_and_split(const ShortPattern& t, const std::vector<int>& mu);

struct StatementASums {
    GaussElement h_gamma, h_delta, h_gamma_iota, h_delta_iota;
    int N = 0;
};
// The four weighted sums over patterns of weight k; N = 0 selects the smallest admissible shift.
StatementASums statement_a_sums(const std::vector<int>& k, const std::vector<int>& mu, int n, int N = 0);

}  // namespace wmds

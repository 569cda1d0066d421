#pragma once

#include <string>
#include <vector>

#include "wmds/gauss.hpp"
#include "wmds/parallel.hpp"
#include "wmds/patterns.hpp"

namespace wmds {

enum class Description { Inductive, BZL, Daleth, Stable };

std::string description_name(Description d);
Description parse_description(const std::string& s);

// A coefficient key in k-indexing; the BZL side uses kappa_i = k_{r+1-i} and l_i = m_{r+1-i}.
struct CoeffKey {
    int n = 1;
    std::vector<int> k, m;

    int r() const { return static_cast<int>(k.size()); }
    std::vector<int> kappa() const { return {k.rbegin(), k.rend()}; }
    std::vector<int> ell() const { return {m.rbegin(), m.rend()}; }
    // mu_j = m_{r+1-j} + 1
    std::vector<int> mu() const;
    bool operator<(const CoeffKey& o) const;
    bool operator==(const CoeffKey& o) const { return n == o.n && k == o.k && m == o.m; }
};

// Memoized coefficient constructors for a fixed cover degree n; safe to share between threads.
class CoefficientEngine {
public:
    explicit CoefficientEngine(int n);
    int n() const { return n_; }

    // H(p^k; p^m) from the Eisenstein-series recursion with weights G_Delta over CQ_1.
    GaussElement h_inductive(const std::vector<int>& k, const std::vector<int>& m);
    // H_BZL(p^kappa; p^ell) from the crystal recursion with weights G_Gamma over BZL_1; odd n only.
    GaussElement h_bzl_inductive(const std::vector<int>& kappa, const std::vector<int>& ell);
    // The component-wise recursion with weights G_Psi over BZL_1; any n.
    GaussElement h_daleth(const std::vector<int>& k, const std::vector<int>& m);

    // Dispatch in k-indexing (the BZL description reverses internally).
    GaussElement coefficient(Description d, const std::vector<int>& k, const std::vector<int>& m);

    // Sum of G_Delta over CQ_1(mu) patterns of weight k.
    GaussElement delta_weight_sum(const std::vector<int>& mu, const std::vector<int>& k);

    void clear();

private:
    enum Tag : int { TagInductive, TagBzl, TagDaleth, TagDeltaSum, TagGammaSum, TagPsiSum };
    GaussElement recurse(Tag tag, const std::vector<int>& k, const std::vector<int>& m);
    GaussElement weight_sum(Tag tag, const std::vector<int>& mu, const std::vector<int>& k);
    int n_;
    ConcurrentMemo<std::vector<int>, GaussElement> memo_;
};

// Free functions that build a fresh engine; convenient for one-off calls.
GaussElement h_inductive(const CoeffKey& key);
GaussElement h_bzl_inductive(const CoeffKey& key);
GaussElement h_daleth(const CoeffKey& key);

// A full triangular BZL pattern; row i has rank r - i + 1 and lies in BZL_1(mu_rows[i]).
struct BZLPattern {
    int r = 0;
    std::vector<ShortPattern> rows;
    std::vector<std::vector<int>> mu_rows;
    std::vector<int> kappa;

    // Row entries (c_{i,i}, ..., c_{i,r}, cbar_{i,r-1}, ..., cbar_{i,i}), rows from the top.
    std::vector<std::vector<long long>> entries() const;
    std::string to_string() const;
};

// mu for the row below a row pattern t of bound vector mu.
std::vector<int> next_row_mu(const ShortPattern& t, const std::vector<int>& mu);

std::vector<BZLPattern> enumerate_bzl(const std::vector<int>& mu);
std::vector<BZLPattern> enumerate_bzl_of_weight(const std::vector<int>& mu, const std::vector<int>& kappa);

// G(Gamma) as the product of the row weights G_Gamma(t_i).
GaussElement bzl_weight(const BZLPattern& p, int n);
// G(Gamma) from the row entries decorated directly by the crystal rules.
std::vector<DecoratedArray> bzl_decorated_rows(const BZLPattern& p);
GaussElement bzl_weight_direct(const BZLPattern& p, int n);
// prod_i G_Psi(t_i).
GaussElement bzl_weight_psi(const BZLPattern& p, int n);

// Sum of G(Gamma) over all Gamma of weight kappa; direct = true uses bzl_weight_direct.
GaussElement h_bzl_direct(const std::vector<int>& kappa, const std::vector<int>& ell, int n, bool direct = true);

}  // namespace wmds

#pragma once

#include <string>
#include <vector>

#include "wmds/json_io.hpp"

namespace wmds {

struct SuiteReport {
    std::string suite;
    std::string params;
    long long checked = 0;
    long long failed = 0;
    // symbolically different but equal after instantiation at the default field
    long long symbolic_only = 0;
    std::string first_failure;
    std::vector<std::string> notes;

    bool passed() const { return failed == 0; }
    // Fixed-format report; contains no timing so that repeated runs compare byte for byte.
    std::string text() const;
    json to_json() const;
};

// All vectors in {lo..hi}^r in lexicographic order.
std::vector<std::vector<int>> int_grid(int r, int lo, int hi);

// CQ_1(mu) = BZL_1(mu) for mu in {1..mubound}^r, 1 <= r <= rmax.
SuiteReport verify_lemma73(int rmax, int mubound, int threads = 1);

// H_Gamma = H_Delta and H_Gamma_iota = H_Delta_iota for every strict weight of each mu.
SuiteReport verify_statement_a(int n, const std::vector<std::vector<int>>& mus, int threads = 1);
// The mu ranges {1,2}^r for r <= 4 and {1,2,3}^r for r <= 3, without repeats.
std::vector<std::vector<int>> statement_a_default_mus();

// h_inductive = h_bzl_inductive under index reversal, 1 <= r <= rmax; n odd.
SuiteReport verify_thm71(int n, int rmax, int kmax, int mmax, int threads = 1);

// h_daleth = h_inductive, 1 <= r <= rmax, with per-pattern and weight-sum diagnostics.
SuiteReport verify_thm82(int n, int rmax, int kmax, int mmax, int threads = 1);

// Support and values of h_inductive against the Weyl group closed form, and the stable BZL cross-check.
SuiteReport verify_stable(const std::vector<int>& ell, int n, int threads = 1);
// Every ell in {0..ellbound}^r for r in rs, at the least admissible degree of each parity.
SuiteReport verify_stable_sweep(const std::vector<int>& rs, int ellbound, int threads = 1);

// Twisted multiplicativity in both arguments via h_direct, r <= 2, total degree <= degbound.
SuiteReport verify_twisted(int n, int q, int degbound, int threads = 1);

// gs_prime_power against brute-force summation for t in 0..2n and k, l <= klmax.
SuiteReport verify_gauss_oracle(int n, int q, int klmax, int threads = 1);

// h_direct(p^k; p^m) = numeric_eval(h_inductive(k; m)) for p in {t, t+1}, r <= rmax and exponents <= expmax.
SuiteReport verify_ff_crystal(int n, int q, int rmax, int expmax, int threads = 1);

}  // namespace wmds

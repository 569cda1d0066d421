#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wmds/cyclotomic.hpp"

namespace wmds {

// Polynomial over the prime field F_q, coefficients low to high.
class FFPoly {
public:
    FFPoly() = default;
    FFPoly(int q, std::vector<int> coeffs);

    static FFPoly constant(int q, int c);
    static FFPoly monomial(int q, int c, int deg);
    static FFPoly t_power(int q, int deg) { return monomial(q, 1, deg); }

    int q() const { return q_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    int lead() const { return c_.empty() ? 0 : c_.back(); }
    int coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    const std::vector<int>& coeffs() const { return c_; }

    FFPoly operator+(const FFPoly& o) const;
    FFPoly operator-(const FFPoly& o) const;
    FFPoly operator*(const FFPoly& o) const;
    FFPoly scaled(int c) const;
    FFPoly monic() const;
    // Euclidean division; divisor must be nonzero.
    void divmod(const FFPoly& d, FFPoly& quo, FFPoly& rem) const;
    FFPoly operator/(const FFPoly& d) const;
    FFPoly operator%(const FFPoly& d) const;
    bool divides(const FFPoly& x) const;

    bool operator==(const FFPoly& o) const { return q_ == o.q_ && c_ == o.c_; }
    bool operator!=(const FFPoly& o) const { return !(*this == o); }
    bool operator<(const FFPoly& o) const;

    // |f| = q^deg f.
    long long norm() const;
    std::string to_string() const;

private:
    void trim();
    int q_ = 2;
    std::vector<int> c_;
};

int ff_inv(int a, int q);
int ff_pow(long long a, long long e, int q);
FFPoly poly_gcd(const FFPoly& a, const FFPoly& b);
// Inverse of a modulo m (m nonzero, gcd(a, m) = 1).
FFPoly poly_inverse_mod(const FFPoly& a, const FFPoly& m);
// All monic polynomials of the given degree, in a fixed order.
std::vector<FFPoly> monic_polys(int q, int deg);
// All residues modulo c, i.e. polynomials of degree < deg c.
std::vector<FFPoly> residues_mod(const FFPoly& c);
// Monic divisors of a nonzero polynomial, sorted.
std::vector<FFPoly> monic_divisors(const FFPoly& f);
bool is_irreducible(const FFPoly& f);

// The m-th power residue symbol (a/b)_m as an exponent of zeta_m, where zeta_m corresponds to
// g^{(q-1)/m} for the fixed primitive root g of F_q.
int residue_symbol(const FFPoly& a, const FFPoly& b, int m);
// The same symbol for irreducible b via a^{(|b|-1)/m} mod b.
int residue_symbol_euler(const FFPoly& a, const FFPoly& b, int m);

// Exponent e such that psi(num/den) = zeta_q^e.
int additive_char_index(const FFPoly& num, const FFPoly& den);
CyclotomicInt additive_char(const FFPoly& num, const FFPoly& den);

// Sum over d mod c, gcd(d, c) = 1, of (d/c)_n^tpow psi(m d / c), valued in Z[zeta_{nq}].
CyclotomicInt gauss_sum_ff(int tpow, const FFPoly& m, const FFPoly& c, int n);

// g_t(p^k, p^l) with p = t computed by summation over all residues mod t^l.
CyclotomicInt gauss_sum_prime_power_brute(int tpow, int k, int l, const CharacterData& cd);
// The same sums for every t in [0, n) and k in [0, kmax] from one pass over the residues; entry [t][k].
std::vector<std::vector<CyclotomicInt>> gauss_sum_prime_power_brute_table(int l, int kmax, const CharacterData& cd);

// The coefficient H(C; m) evaluated by its defining sums, r <= 2.
CyclotomicInt h_direct(const std::vector<FFPoly>& C, const std::vector<FFPoly>& m, int n);

// prod_i (m'_i / C_i)_n^{-eps_i} as an exponent of zeta_n.
int twist_factor_m(const std::vector<FFPoly>& C, const std::vector<FFPoly>& m_prime, int n);
// mu(C, C') as an exponent of zeta_n.
int twist_factor_mu(const std::vector<FFPoly>& C, const std::vector<FFPoly>& C_prime, int n);

}  // namespace wmds

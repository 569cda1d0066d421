#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wmds/gauss.hpp"

namespace wmds {

// Shared data for Z[zeta_M]: the cyclotomic polynomial and the reductions of x^e for 0 <= e < M.
struct CyclotomicContext {
    int M = 1;
    int phi = 1;
    std::vector<std::int64_t> poly;  // monic, degree phi, low to high
    std::vector<std::vector<std::int64_t>> power_basis;

    static std::shared_ptr<const CyclotomicContext> get(int M);
};

class CyclotomicInt {
public:
    CyclotomicInt() = default;
    explicit CyclotomicInt(int M);

    static CyclotomicInt from_integer(int M, const mpz_class& v);
    static CyclotomicInt root_of_unity(int M, long long e);
    // Sum of counts[e] * zeta_M^e, counts indexed by exponent mod M.
    static CyclotomicInt from_exponent_counts(int M, const std::vector<std::int64_t>& counts);

    int modulus() const { return ctx_ ? ctx_->M : 0; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_zero() const;

    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    CyclotomicInt& operator+=(const CyclotomicInt& o);
    CyclotomicInt& operator*=(const CyclotomicInt& o);
    CyclotomicInt scaled(const mpz_class& s) const;
    // The image under zeta_M -> zeta_M^{-1}.
    CyclotomicInt conjugate() const;

    bool operator==(const CyclotomicInt& o) const;
    bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void reduce_from(std::vector<mpz_class>& wide);
    std::shared_ptr<const CyclotomicContext> ctx_;
    std::vector<mpz_class> c_;
};

std::vector<std::int64_t> cyclotomic_polynomial(int M);
int euler_phi(int M);
bool is_prime(long long p);
int primitive_root(int p);

// Least prime q with q = 1 mod 4n.
int default_field_size(int n);

class CharacterData {
public:
    CharacterData(int n, int q);

    int n() const { return n_; }
    int q() const { return q_; }
    int M() const { return n_ * q_; }
    int generator() const { return gen_; }
    // chi(d) = zeta_n^{chi_index(d)} for d in 1..q-1.
    int chi_index(int d) const { return chi_[d]; }
    // psi(d) = zeta_q^{psi_index(d)}.
    int psi_index(int d) const { return ((d % q_) + q_) % q_; }
    // Discrete log of d with respect to the fixed generator.
    int dlog(int d) const { return log_[d]; }

    // The image of g_t(1, p), t taken mod n, t not divisible by n.
    const CyclotomicInt& gauss_value(int t) const;

private:
    int n_, q_, gen_;
    std::vector<int> chi_, log_;
    std::vector<CyclotomicInt> gauss_;
};

// Value of q^shift * x; every exponent of q in the shifted element must be non-negative.
CyclotomicInt numeric_eval(const GaussElement& x, const CharacterData& cd, int shift = 0);

// Equality of two Gauss elements after instantiation at the given field.
bool numeric_equal(const GaussElement& a, const GaussElement& b, const CharacterData& cd);

}  // namespace wmds

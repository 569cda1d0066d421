#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wmds {

constexpr int kMaxDegree = 64;

// A product q^q_exp * prod_t g_t^{g[t]} with the pair relation g_t g_{n-t} = q applied.
struct GaussMonomial {
    int q_exp = 0;
    std::array<std::uint8_t, kMaxDegree> g{};

    bool operator==(const GaussMonomial& o) const;
    bool operator!=(const GaussMonomial& o) const { return !(*this == o); }
};

// Orders by q exponent, then by the exponent vector (g_1, ..., g_{n-1}).
bool monomial_less(const GaussMonomial& a, const GaussMonomial& b, int n);

// Builds a canonical monomial from raw exponents. Keys of g_exps are taken mod n;
// a key congruent to 0 is rejected.
GaussMonomial normalize(int q_exp, const std::map<int, int>& g_exps, int n);
void normalize_in_place(GaussMonomial& m, int n);
bool is_canonical(const GaussMonomial& m, int n);

struct GaussTerm {
    GaussMonomial mono;
    std::int64_t coeff = 0;
};

class GaussElement {
public:
    GaussElement() = default;
    explicit GaussElement(int n);

    static GaussElement zero(int n);
    static GaussElement one(int n);
    static GaussElement constant(int n, std::int64_t c);
    static GaussElement q_power(int n, int e);
    static GaussElement gauss(int n, int t);
    static GaussElement monomial(int n, std::int64_t coeff, const GaussMonomial& m);

    int n() const { return n_; }
    const std::vector<GaussTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_q_exp() const;

    GaussElement operator+(const GaussElement& o) const;
    GaussElement operator-(const GaussElement& o) const;
    GaussElement operator*(const GaussElement& o) const;
    GaussElement operator-() const;
    GaussElement& operator+=(const GaussElement& o);
    GaussElement& operator*=(const GaussElement& o);
    GaussElement scaled(std::int64_t c) const;
    GaussElement shift_q(int e) const;

    bool operator==(const GaussElement& o) const;
    bool operator!=(const GaussElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void canonicalize(std::vector<GaussTerm>& raw);
    int n_ = 1;
    std::vector<GaussTerm> terms_;
};

// Evaluation of g_t(p^k, p^l) for an arbitrary integer t.
GaussElement gs_prime_power(int t, int k, int l, int n);

}  // namespace wmds

#include "wmds/cyclotomic.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wmds {

namespace {

// Exact division by a monic polynomial.
std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    std::vector<std::int64_t> q(da - db + 1, 0);
    for (int i = da - db; i >= 0; --i) {
        std::int64_t c = a[i + db];
        q[i] = c;
        for (int j = 0; j <= db; ++j) a[i + j] -= c * b[j];
    }
    for (auto v : a)
        if (v != 0) throw std::logic_error("inexact cyclotomic division");
    return q;
}

}  // namespace

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int euler_phi(int M) {
    int r = M, m = M;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            r -= r / p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

std::vector<std::int64_t> cyclotomic_polynomial(int M) {
    static std::mutex mu;
    static std::map<int, std::vector<std::int64_t>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(M);
        if (it != cache.end()) return it->second;
    }
    std::vector<std::int64_t> num(M + 1, 0);
    num[0] = -1;
    num[M] = 1;
    for (int d = 1; d < M; ++d)
        if (M % d == 0) num = poly_div_exact(num, cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(mu);
    cache[M] = num;
    return num;
}

std::shared_ptr<const CyclotomicContext> CyclotomicContext::get(int M) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CyclotomicContext>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(M);
        if (it != cache.end()) return it->second;
    }
    auto ctx = std::make_shared<CyclotomicContext>();
    ctx->M = M;
    ctx->poly = cyclotomic_polynomial(M);
    ctx->phi = static_cast<int>(ctx->poly.size()) - 1;
    int phi = ctx->phi;
    ctx->power_basis.assign(M, std::vector<std::int64_t>(phi, 0));
    std::vector<std::int64_t> cur(phi, 0);
    cur[0] = 1;
    if (phi == 0) cur.assign(0, 0);
    for (int e = 0; e < M; ++e) {
        ctx->power_basis[e] = cur;
        if (phi == 0) continue;
        // multiply by x and reduce
        std::int64_t top = cur[phi - 1];
        for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (int i = 0; i < phi; ++i) cur[i] -= top * ctx->poly[i];
    }
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
    cache[M] = ctx;
    return ctx;
}

CyclotomicInt::CyclotomicInt(int M) : ctx_(CyclotomicContext::get(M)), c_(ctx_->phi) {}

CyclotomicInt CyclotomicInt::from_integer(int M, const mpz_class& v) {
    CyclotomicInt x(M);
    if (!x.c_.empty()) x.c_[0] = v;
    return x;
}

CyclotomicInt CyclotomicInt::root_of_unity(int M, long long e) {
    CyclotomicInt x(M);
    long long r = ((e % M) + M) % M;
    const auto& b = x.ctx_->power_basis[r];
    for (int i = 0; i < x.ctx_->phi; ++i) x.c_[i] = static_cast<long>(b[i]);
    return x;
}

CyclotomicInt CyclotomicInt::from_exponent_counts(int M, const std::vector<std::int64_t>& counts) {
    CyclotomicInt x(M);
    int phi = x.ctx_->phi;
    std::vector<__int128> acc(phi, 0);
    for (int e = 0; e < M && e < static_cast<int>(counts.size()); ++e) {
        if (counts[e] == 0) continue;
        const auto& b = x.ctx_->power_basis[e];
        for (int i = 0; i < phi; ++i) acc[i] += static_cast<__int128>(counts[e]) * b[i];
    }
    for (int i = 0; i < phi; ++i) {
        __int128 v = acc[i];
        if (v >= INT64_MIN && v <= INT64_MAX) {
            x.c_[i] = static_cast<long>(v);
            continue;
        }
        bool neg = v < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        mpz_class hi(static_cast<unsigned long>(u >> 64));
        mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
        mpz_class z = hi * mpz_class("18446744073709551616") + lo;
        x.c_[i] = neg ? mpz_class(-z) : z;
    }
    return x;
}

bool CyclotomicInt::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    if (!ctx_) {
        *this = o;
        return *this;
    }
    if (!o.ctx_) return *this;
    if (ctx_->M != o.ctx_->M) throw std::invalid_argument("cyclotomic modulus mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
    CyclotomicInt r = *this;
    r += o;
    return r;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const { return *this + o.scaled(-1); }

CyclotomicInt CyclotomicInt::scaled(const mpz_class& s) const {
    CyclotomicInt r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

void CyclotomicInt::reduce_from(std::vector<mpz_class>& wide) {
    int phi = ctx_->phi;
    const auto& p = ctx_->poly;
    for (int i = static_cast<int>(wide.size()) - 1; i >= phi; --i) {
        if (wide[i] == 0) continue;
        mpz_class c = wide[i];
        for (int j = 0; j <= phi; ++j)
            if (p[j] != 0) wide[i - phi + j] -= c * static_cast<long>(p[j]);
    }
    c_.assign(wide.begin(), wide.begin() + phi);
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
    if (!ctx_ || !o.ctx_) throw std::invalid_argument("uninitialized cyclotomic integer");
    if (ctx_->M != o.ctx_->M) throw std::invalid_argument("cyclotomic modulus mismatch");
    int phi = ctx_->phi;
    CyclotomicInt r;
    r.ctx_ = ctx_;
    if (phi == 0) return r;
    std::vector<mpz_class> wide(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < phi; ++j)
            if (o.c_[j] != 0) wide[i + j] += c_[i] * o.c_[j];
    }
    r.reduce_from(wide);
    return r;
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& o) {
    *this = *this * o;
    return *this;
}

CyclotomicInt CyclotomicInt::conjugate() const {
    int M = ctx_->M, phi = ctx_->phi;
    CyclotomicInt r(M);
    for (int i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        const auto& b = ctx_->power_basis[(M - i) % M];
        for (int j = 0; j < phi; ++j)
            if (b[j] != 0) r.c_[j] += c_[i] * static_cast<long>(b[j]);
    }
    return r;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const {
    if (!ctx_ || !o.ctx_) return is_zero() && o.is_zero();
    return ctx_->M == o.ctx_->M && c_ == o.c_;
}

std::string CyclotomicInt::to_string() const {
    std::ostringstream os;
    os << "{\"M\":" << modulus() << ",\"coeffs\":[";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].get_str();
    os << "]}";
    return os.str();
}

int primitive_root(int p) {
    if (p == 2) return 1;
    int phi = p - 1;
    std::vector<int> primes;
    int m = phi;
    for (int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) primes.push_back(m);
    for (int g = 2; g < p; ++g) {
        bool ok = true;
        for (int f : primes) {
            long long e = phi / f, b = g, r = 1;
            while (e) {
                if (e & 1) r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

int default_field_size(int n) {
    for (int q = 4 * n + 1;; q += 4 * n)
        if (is_prime(q)) return q;
}

CharacterData::CharacterData(int n, int q) : n_(n), q_(q) {
    if (n < 1) throw std::invalid_argument("character order must be positive");
    if (!is_prime(q)) throw std::invalid_argument("field size must be prime");
    if ((q - 1) % n != 0) throw std::invalid_argument("n must divide q - 1");
    gen_ = primitive_root(q);
    chi_.assign(q, 0);
    log_.assign(q, 0);
    long long x = 1;
    for (int j = 0; j < q - 1; ++j) {
        log_[x] = j;
        chi_[x] = j % n;
        x = x * gen_ % q;
    }
    int M = n * q;
    gauss_.resize(n);
    for (int t = 1; t < n; ++t) {
        std::vector<std::int64_t> counts(M, 0);
        for (int d = 1; d < q; ++d) {
            long long e = static_cast<long long>(q) * ((static_cast<long long>(t) * chi_[d]) % n) +
                          static_cast<long long>(n) * d;
            counts[e % M] += 1;
        }
        gauss_[t] = CyclotomicInt::from_exponent_counts(M, counts);
    }
}

const CyclotomicInt& CharacterData::gauss_value(int t) const {
    int tt = ((t % n_) + n_) % n_;
    if (tt == 0) throw std::invalid_argument("Gauss sum index divisible by n");
    return gauss_[tt];
}

CyclotomicInt numeric_eval(const GaussElement& x, const CharacterData& cd, int shift) {
    if (!x.is_zero() && x.n() != cd.n()) throw std::invalid_argument("numeric_eval: degree mismatch");
    int M = cd.M(), n = cd.n();
    CyclotomicInt total(M);
    mpz_class q = cd.q();
    std::map<std::pair<int, int>, CyclotomicInt> powers;
    auto gpow = [&](int t, int e) -> const CyclotomicInt& {
        auto key = std::make_pair(t, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        CyclotomicInt v = CyclotomicInt::from_integer(M, 1);
        for (int i = 0; i < e; ++i) v *= cd.gauss_value(t);
        return powers.emplace(key, v).first->second;
    };
    for (const auto& term : x.terms()) {
        int qe = term.mono.q_exp + shift;
        if (qe < 0) throw std::invalid_argument("numeric_eval: negative power of q");
        mpz_class s;
        mpz_pow_ui(s.get_mpz_t(), q.get_mpz_t(), qe);
        s *= static_cast<long>(term.coeff);
        CyclotomicInt v = CyclotomicInt::from_integer(M, s);
        for (int t = 1; t < n; ++t)
            if (term.mono.g[t]) v *= gpow(t, term.mono.g[t]);
        total += v;
    }
    return total;
}

bool numeric_equal(const GaussElement& a, const GaussElement& b, const CharacterData& cd) {
    GaussElement d = a - b;
    if (d.is_zero()) return true;
    int shift = std::max(0, -d.min_q_exp());
    return numeric_eval(d, cd, shift).is_zero();
}

}  // namespace wmds

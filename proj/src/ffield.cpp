#include "wmds/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wmds {

namespace {

int modq(long long a, int q) {
    long long r = a % q;
    return static_cast<int>(r < 0 ? r + q : r);
}

struct LogTable {
    int gen = 1;
    std::vector<int> log;
};

const LogTable& log_table(int q) {
    static std::mutex mu;
    static std::map<int, LogTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    LogTable t;
    t.gen = primitive_root(q);
    t.log.assign(q, 0);
    long long x = 1;
    for (int j = 0; j < q - 1; ++j) {
        t.log[x] = j;
        x = x * t.gen % q;
    }
    return cache.emplace(q, std::move(t)).first->second;
}

// Index of the constant c^{(q-1)/m} relative to g^{(q-1)/m}.
int constant_symbol(int c, int m, int q) {
    return log_table(q).log[modq(c, q)] % m;
}

std::vector<std::pair<FFPoly, int>> factor(const FFPoly& f) {
    std::vector<std::pair<FFPoly, int>> out;
    FFPoly g = f.monic();
    int q = f.q();
    for (int d = 1; 2 * d <= g.degree(); ++d) {
        for (const auto& p : monic_polys(q, d)) {
            if (2 * d > g.degree()) break;
            if (!is_irreducible(p)) continue;
            int e = 0;
            while (g.degree() >= d && p.divides(g)) {
                g = g / p;
                ++e;
            }
            if (e) out.push_back({p, e});
        }
    }
    if (g.degree() > 0) {
        bool merged = false;
        for (auto& [p, e] : out)
            if (p == g) {
                ++e;
                merged = true;
            }
        if (!merged) out.push_back({g, 1});
    }
    return out;
}

}  // namespace

int ff_pow(long long a, long long e, int q) {
    long long r = 1, b = modq(a, q);
    while (e > 0) {
        if (e & 1) r = r * b % q;
        b = b * b % q;
        e >>= 1;
    }
    return static_cast<int>(r);
}

int ff_inv(int a, int q) {
    if (modq(a, q) == 0) throw std::domain_error("inverse of zero in F_q");
    return ff_pow(a, q - 2, q);
}

FFPoly::FFPoly(int q, std::vector<int> coeffs) : q_(q), c_(std::move(coeffs)) {
    for (auto& v : c_) v = modq(v, q_);
    trim();
}

void FFPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FFPoly FFPoly::constant(int q, int c) { return FFPoly(q, {c}); }

FFPoly FFPoly::monomial(int q, int c, int deg) {
    std::vector<int> v(deg + 1, 0);
    v[deg] = c;
    return FFPoly(q, v);
}

FFPoly FFPoly::operator+(const FFPoly& o) const {
    std::vector<int> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return FFPoly(q_, v);
}

FFPoly FFPoly::operator-(const FFPoly& o) const {
    std::vector<int> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return FFPoly(q_, v);
}

FFPoly FFPoly::operator*(const FFPoly& o) const {
    if (c_.empty() || o.c_.empty()) return FFPoly(q_, {});
    std::vector<long long> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += static_cast<long long>(c_[i]) * o.c_[j];
    std::vector<int> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = modq(v[i], q_);
    return FFPoly(q_, w);
}

FFPoly FFPoly::scaled(int c) const {
    std::vector<int> v = c_;
    for (auto& x : v) x = modq(static_cast<long long>(x) * c, q_);
    return FFPoly(q_, v);
}

FFPoly FFPoly::monic() const {
    if (c_.empty()) return *this;
    return scaled(ff_inv(c_.back(), q_));
}

void FFPoly::divmod(const FFPoly& d, FFPoly& quo, FFPoly& rem) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<int> r = c_;
    int dd = d.degree();
    int inv = ff_inv(d.lead(), q_);
    std::vector<int> qv(std::max(0, degree() - dd + 1), 0);
    for (int i = degree(); i >= dd; --i) {
        int c = r[i];
        if (c == 0) continue;
        int f = modq(static_cast<long long>(c) * inv, q_);
        qv[i - dd] = f;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] = modq(r[i - dd + j] - static_cast<long long>(f) * d.c_[j], q_);
    }
    quo = FFPoly(q_, qv);
    rem = FFPoly(q_, r);
}

FFPoly FFPoly::operator/(const FFPoly& d) const {
    FFPoly a, b;
    divmod(d, a, b);
    return a;
}

FFPoly FFPoly::operator%(const FFPoly& d) const {
    FFPoly a, b;
    divmod(d, a, b);
    return b;
}

bool FFPoly::divides(const FFPoly& x) const { return (x % *this).is_zero(); }

bool FFPoly::operator<(const FFPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

long long FFPoly::norm() const {
    if (c_.empty()) throw std::domain_error("norm of zero polynomial");
    long long r = 1;
    for (int i = 0; i < degree(); ++i) r *= q_;
    return r;
}

std::string FFPoly::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << "]";
    return os.str();
}

FFPoly poly_gcd(const FFPoly& a, const FFPoly& b) {
    FFPoly x = a, y = b;
    while (!y.is_zero()) {
        FFPoly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

FFPoly poly_inverse_mod(const FFPoly& a, const FFPoly& m) {
    int q = m.q();
    if (m.degree() == 0) return FFPoly(q, {});
    FFPoly r0 = m, r1 = a % m, s0(q, {}), s1(q, {1});
    while (!r1.is_zero()) {
        FFPoly quo, rem;
        r0.divmod(r1, quo, rem);
        FFPoly s2 = s0 - quo * s1;
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0.degree() != 0) throw std::domain_error("not coprime");
    return s0.scaled(ff_inv(r0.lead(), q)) % m;
}

std::vector<FFPoly> monic_polys(int q, int deg) {
    std::vector<FFPoly> out;
    long long count = 1;
    for (int i = 0; i < deg; ++i) count *= q;
    out.reserve(count);
    std::vector<int> c(deg + 1, 0);
    c[deg] = 1;
    for (long long idx = 0; idx < count; ++idx) {
        long long x = idx;
        for (int i = 0; i < deg; ++i) {
            c[i] = static_cast<int>(x % q);
            x /= q;
        }
        out.emplace_back(q, c);
    }
    return out;
}

std::vector<FFPoly> residues_mod(const FFPoly& c) {
    int q = c.q(), deg = c.degree();
    std::vector<FFPoly> out;
    long long count = 1;
    for (int i = 0; i < deg; ++i) count *= q;
    out.reserve(count);
    std::vector<int> v(std::max(deg, 0), 0);
    for (long long idx = 0; idx < count; ++idx) {
        long long x = idx;
        for (int i = 0; i < deg; ++i) {
            v[i] = static_cast<int>(x % q);
            x /= q;
        }
        out.emplace_back(q, v);
    }
    return out;
}

bool is_irreducible(const FFPoly& f) {
    int deg = f.degree();
    if (deg < 1) return false;
    for (int d = 1; 2 * d <= deg; ++d)
        for (const auto& p : monic_polys(f.q(), d))
            if (p.divides(f)) return false;
    return true;
}

std::vector<FFPoly> monic_divisors(const FFPoly& f) {
    if (f.is_zero()) throw std::domain_error("divisors of zero");
    std::vector<FFPoly> divs{FFPoly::constant(f.q(), 1)};
    for (const auto& [p, e] : factor(f)) {
        std::vector<FFPoly> next;
        for (const auto& d : divs) {
            FFPoly x = d;
            for (int i = 0; i <= e; ++i) {
                next.push_back(x);
                x = x * p;
            }
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

int residue_symbol(const FFPoly& a0, const FFPoly& b0, int m) {
    int q = b0.q();
    if (b0.is_zero()) throw std::domain_error("residue symbol modulo zero");
    if ((q - 1) % m != 0) throw std::invalid_argument("residue symbol order must divide q - 1");
    bool odd_ratio = ((q - 1) / m) % 2 == 1;
    FFPoly a = a0, b = b0.monic();
    long long idx = 0;
    while (true) {
        if (b.degree() == 0) return static_cast<int>(((idx % m) + m) % m);
        a = a % b;
        if (a.is_zero()) throw std::domain_error("not coprime");
        idx += static_cast<long long>(constant_symbol(a.lead(), m, q)) * b.degree();
        a = a.monic();
        if (odd_ratio) idx += static_cast<long long>(m / 2) * a.degree() * b.degree();
        std::swap(a, b);
    }
}

int residue_symbol_euler(const FFPoly& a, const FFPoly& b0, int m) {
    int q = b0.q();
    FFPoly b = b0.monic();
    if (b.degree() == 0) return 0;
    if (poly_gcd(a, b).degree() != 0) throw std::domain_error("not coprime");
    long long e = (b.norm() - 1) / m;
    FFPoly r = FFPoly::constant(q, 1), base = a % b;
    while (e > 0) {
        if (e & 1) r = (r * base) % b;
        base = (base * base) % b;
        e >>= 1;
    }
    if (r.degree() != 0) throw std::logic_error("power residue is not a constant");
    int L = log_table(q).log[r.lead()];
    int step = (q - 1) / m;
    if (L % step != 0) throw std::logic_error("power residue is not an m-th root of unity");
    return (L / step) % m;
}

int additive_char_index(const FFPoly& num, const FFPoly& den) {
    if (den.is_zero()) throw std::domain_error("additive character of a pole at zero");
    int deg = den.degree();
    if (deg == 0 || num.is_zero()) return 0;
    FFPoly r = num % den;
    int q = den.q();
    return modq(static_cast<long long>(r.coeff(deg - 1)) * ff_inv(den.lead(), q), q);
}

CyclotomicInt additive_char(const FFPoly& num, const FFPoly& den) {
    int q = den.q();
    return CyclotomicInt::root_of_unity(q, additive_char_index(num, den));
}

CyclotomicInt gauss_sum_ff(int tpow, const FFPoly& m, const FFPoly& c0, int n) {
    int q = c0.q();
    FFPoly c = c0.monic();
    int M = n * q;
    std::vector<std::int64_t> counts(M, 0);
    for (const auto& d : residues_mod(c)) {
        if (poly_gcd(d, c).degree() != 0 && c.degree() > 0) continue;
        long long chi = c.degree() == 0 ? 0 : residue_symbol(d, c, n);
        long long ex = static_cast<long long>(q) * (((tpow % n) * chi % n + n) % n) +
                       static_cast<long long>(n) * additive_char_index(m * d, c);
        counts[ex % M] += 1;
    }
    return CyclotomicInt::from_exponent_counts(M, counts);
}

std::vector<std::vector<CyclotomicInt>> gauss_sum_prime_power_brute_table(int l, int kmax, const CharacterData& cd) {
    int n = cd.n(), q = cd.q(), M = cd.M();
    std::vector<std::vector<CyclotomicInt>> out(n, std::vector<CyclotomicInt>(kmax + 1));
    if (l == 0) {
        for (auto& row : out)
            for (auto& v : row) v = CyclotomicInt::from_integer(M, 1);
        return out;
    }
    // hist[k][chi * q + psi]: residues d = sum d_i t^i with d_0 != 0, grouped by the character
    // index of d_0 and by the coefficient of t^{l-1} in t^k d
    std::vector<std::vector<std::int64_t>> hist(kmax + 1, std::vector<std::int64_t>(static_cast<std::size_t>(n) * q, 0));
    std::vector<int> digit(l, 0);
    long long total = 1;
    for (int i = 0; i < l; ++i) total *= q;
    for (long long idx = 0; idx < total; ++idx) {
        if (idx % q == 0) {
            long long x = idx;
            for (int i = 0; i < l; ++i) {
                digit[i] = static_cast<int>(x % q);
                x /= q;
            }
        } else {
            digit[0] = static_cast<int>(idx % q);
        }
        if (digit[0] == 0) continue;
        int chi = cd.chi_index(digit[0]);
        for (int k = 0; k <= kmax; ++k) {
            int psi = k >= l ? 0 : digit[l - 1 - k];
            ++hist[k][static_cast<std::size_t>(chi) * q + psi];
        }
    }
    for (int t = 0; t < n; ++t) {
        for (int k = 0; k <= kmax; ++k) {
            std::vector<std::int64_t> counts(M, 0);
            for (int chi = 0; chi < n; ++chi) {
                // (d / t^l)_n = (d(0) / t)_n^l
                long long c = (static_cast<long long>(t) * chi % n) * l % n;
                for (int psi = 0; psi < q; ++psi) {
                    std::int64_t h = hist[k][static_cast<std::size_t>(chi) * q + psi];
                    if (h) counts[(q * c + static_cast<long long>(n) * psi) % M] += h;
                }
            }
            out[t][k] = CyclotomicInt::from_exponent_counts(M, counts);
        }
    }
    return out;
}

CyclotomicInt gauss_sum_prime_power_brute(int tpow, int k, int l, const CharacterData& cd) {
    int n = cd.n();
    return gauss_sum_prime_power_brute_table(l, k, cd)[((tpow % n) + n) % n][k];
}

namespace {

struct ResidueInfo {
    FFPoly c, u;
    int chi;
};

std::vector<ResidueInfo> unit_residues(const FFPoly& d, int n) {
    std::vector<ResidueInfo> out;
    int q = d.q();
    if (d.degree() == 0) {
        out.push_back({FFPoly(q, {}), FFPoly(q, {}), 0});
        return out;
    }
    for (const auto& c : residues_mod(d)) {
        if (c.is_zero() || poly_gcd(c, d).degree() != 0) continue;
        out.push_back({c, poly_inverse_mod(c, d), residue_symbol(c, d, n)});
    }
    return out;
}

CyclotomicInt scale_by_norm(const CyclotomicInt& x, long long w) { return x.scaled(mpz_class(static_cast<long>(w))); }

}  // namespace

CyclotomicInt h_direct(const std::vector<FFPoly>& C, const std::vector<FFPoly>& m, int n) {
    int r = static_cast<int>(C.size());
    if (r < 1 || r > 2) throw std::invalid_argument("h_direct supports rank 1 and 2 only");
    if (static_cast<int>(m.size()) != r) throw std::invalid_argument("h_direct: m has wrong length");
    for (const auto& x : m)
        if (x.is_zero()) throw std::invalid_argument("h_direct: m_i must be nonzero");
    for (const auto& x : C)
        if (x.is_zero()) throw std::invalid_argument("h_direct: C_i must be nonzero");
    int q = C[0].q();
    int M = n * q;
    if (r == 1) return gauss_sum_ff(2, m[0], C[0], n);

    FFPoly C1 = C[0].monic(), C2 = C[1].monic();
    const FFPoly& m1 = m[0];
    const FFPoly& m2 = m[1];
    CyclotomicInt total(M);
    for (const auto& d1 : monic_divisors(C1)) {
        FFPoly rest = C1 / d1;
        for (const auto& d2 : monic_divisors(rest)) {
            FFPoly d2sq = d2 * d2;
            if (!d2sq.divides(rest)) continue;
            FFPoly d3 = rest / d2sq;
            FFPoly frak2 = d2 * d3;
            if (!frak2.divides(C2)) continue;
            FFPoly D2 = C2 / frak2;
            FFPoly md1 = m2 * d1;
            if (!d2.divides(md1) || !d3.divides(md1)) continue;
            FFPoly mnext = md1 / d3;

            auto R1 = unit_residues(d1, n);
            auto R2 = unit_residues(d2, n);
            auto R3 = unit_residues(d3, n);
            FFPoly d2d3 = d2 * d3;
            std::vector<std::int64_t> counts(M, 0);
            for (const auto& a : R1) {
                int e1 = additive_char_index(m1 * a.c, d1);
                for (const auto& b : R2) {
                    int e2 = additive_char_index(m2 * a.u * b.c, d2);
                    FFPoly pre = m2 * d1 * b.u;
                    for (const auto& c : R3) {
                        int e3 = additive_char_index(pre * c.c, d2d3);
                        long long chi = (a.chi + 2LL * b.chi + c.chi) % n;
                        long long psi = (static_cast<long long>(e1) + e2 + e3) % q;
                        counts[(q * chi + n * psi) % M] += 1;
                    }
                }
            }
            CyclotomicInt inner = CyclotomicInt::from_exponent_counts(M, counts);
            long long w = d2.norm() * d2.norm() * d3.norm();
            CyclotomicInt rec = gauss_sum_ff(2, mnext, D2, n);
            total += scale_by_norm(inner * rec, w);
        }
    }
    return total;
}

int twist_factor_m(const std::vector<FFPoly>& C, const std::vector<FFPoly>& m_prime, int n) {
    int r = static_cast<int>(C.size());
    if (static_cast<int>(m_prime.size()) != r) throw std::invalid_argument("twist_factor_m: length mismatch");
    int q = C[0].q();
    FFPoly pc = FFPoly::constant(q, 1), pm = FFPoly::constant(q, 1);
    for (int i = 0; i < r; ++i) {
        pc = pc * C[i];
        pm = pm * m_prime[i];
    }
    if (poly_gcd(pc, pm).degree() != 0) throw std::domain_error("twist_factor_m: not coprime");
    long long idx = 0;
    for (int i = 0; i < r; ++i) {
        int eps = i == r - 1 ? 2 : 1;
        idx -= static_cast<long long>(eps) * residue_symbol(m_prime[i], C[i], n);
    }
    return static_cast<int>(((idx % n) + n) % n);
}

int twist_factor_mu(const std::vector<FFPoly>& C, const std::vector<FFPoly>& Cp, int n) {
    int r = static_cast<int>(C.size());
    if (static_cast<int>(Cp.size()) != r) throw std::invalid_argument("twist_factor_mu: length mismatch");
    int q = C[0].q();
    FFPoly pc = FFPoly::constant(q, 1), pp = FFPoly::constant(q, 1);
    for (int i = 0; i < r; ++i) {
        pc = pc * C[i];
        pp = pp * Cp[i];
    }
    if (poly_gcd(pc, pp).degree() != 0) throw std::domain_error("twist_factor_mu: not coprime");
    long long idx = 0;
    for (int i = 0; i < r; ++i) {
        int eps = i == r - 1 ? 2 : 1;
        idx += static_cast<long long>(eps) * (residue_symbol(C[i], Cp[i], n) + residue_symbol(Cp[i], C[i], n));
        if (i > 0) {
            // 2<alpha_i, alpha_{i-1}> = -eps_i; all other pairs of simple roots are orthogonal
            idx -= static_cast<long long>(eps) * (residue_symbol(C[i], Cp[i - 1], n) + residue_symbol(Cp[i], C[i - 1], n));
        }
    }
    return static_cast<int>(((idx % n) + n) % n);
}

}  // namespace wmds

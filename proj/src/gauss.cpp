#include "wmds/gauss.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace wmds {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("GaussElement coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("GaussElement coefficient overflow");
    return r;
}

void check_degree(int n) {
    if (n < 1 || n > kMaxDegree) throw std::invalid_argument("cover degree out of range");
}

int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

bool GaussMonomial::operator==(const GaussMonomial& o) const {
    return q_exp == o.q_exp && g == o.g;
}

bool monomial_less(const GaussMonomial& a, const GaussMonomial& b, int n) {
    if (a.q_exp != b.q_exp) return a.q_exp < b.q_exp;
    for (int t = 1; t < n; ++t)
        if (a.g[t] != b.g[t]) return a.g[t] < b.g[t];
    return false;
}

void normalize_in_place(GaussMonomial& m, int n) {
    for (int t = 1; 2 * t < n; ++t) {
        int c = std::min(m.g[t], m.g[n - t]);
        m.g[t] -= c;
        m.g[n - t] -= c;
        m.q_exp += c;
    }
    if (n % 2 == 0) {
        int h = n / 2;
        m.q_exp += m.g[h] / 2;
        m.g[h] %= 2;
    }
}

bool is_canonical(const GaussMonomial& m, int n) {
    if (m.g[0] != 0) return false;
    for (int t = n; t < kMaxDegree; ++t)
        if (m.g[t] != 0) return false;
    for (int t = 1; 2 * t < n; ++t)
        if (m.g[t] != 0 && m.g[n - t] != 0) return false;
    if (n % 2 == 0 && m.g[n / 2] > 1) return false;
    return true;
}

GaussMonomial normalize(int q_exp, const std::map<int, int>& g_exps, int n) {
    check_degree(n);
    GaussMonomial m;
    m.q_exp = q_exp;
    for (auto [t, e] : g_exps) {
        if (e < 0) throw std::invalid_argument("negative Gauss sum exponent");
        int tt = mod(t, n);
        if (tt == 0) throw std::invalid_argument("Gauss sum index divisible by n");
        int v = m.g[tt] + e;
        if (v > 255) throw std::overflow_error("Gauss sum exponent overflow");
        m.g[tt] = static_cast<std::uint8_t>(v);
    }
    normalize_in_place(m, n);
    return m;
}

GaussElement::GaussElement(int n) : n_(n) { check_degree(n); }

GaussElement GaussElement::zero(int n) { return GaussElement(n); }

GaussElement GaussElement::one(int n) { return constant(n, 1); }

GaussElement GaussElement::constant(int n, std::int64_t c) {
    return monomial(n, c, GaussMonomial{});
}

GaussElement GaussElement::q_power(int n, int e) {
    GaussMonomial m;
    m.q_exp = e;
    return monomial(n, 1, m);
}

GaussElement GaussElement::gauss(int n, int t) {
    return monomial(n, 1, normalize(0, {{t, 1}}, n));
}

GaussElement GaussElement::monomial(int n, std::int64_t coeff, const GaussMonomial& m) {
    GaussElement x(n);
    if (coeff != 0) {
        GaussMonomial c = m;
        normalize_in_place(c, n);
        x.terms_.push_back({c, coeff});
    }
    return x;
}

int GaussElement::min_q_exp() const {
    int e = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.mono.q_exp < e) e = t.mono.q_exp;
        first = false;
    }
    return e;
}

void GaussElement::canonicalize(std::vector<GaussTerm>& raw) {
    int n = n_;
    std::sort(raw.begin(), raw.end(), [n](const GaussTerm& a, const GaussTerm& b) {
        return monomial_less(a.mono, b.mono, n);
    });
    terms_.clear();
    for (auto& t : raw) {
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coeff = checked_add(terms_.back().coeff, t.coeff);
        } else {
            if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
            terms_.push_back(t);
        }
    }
    if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
}

GaussElement GaussElement::operator+(const GaussElement& o) const {
    GaussElement r = *this;
    r += o;
    return r;
}

GaussElement& GaussElement::operator+=(const GaussElement& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        n_ = o.n_;
        terms_ = o.terms_;
        return *this;
    }
    if (n_ != o.n_) throw std::invalid_argument("GaussElement degree mismatch");
    std::vector<GaussTerm> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && monomial_less(terms_[i].mono, o.terms_[j].mono, n_))) {
            merged.push_back(terms_[i++]);
        } else if (i == terms_.size() || monomial_less(o.terms_[j].mono, terms_[i].mono, n_)) {
            merged.push_back(o.terms_[j++]);
        } else {
            std::int64_t c = checked_add(terms_[i].coeff, o.terms_[j].coeff);
            if (c != 0) merged.push_back({terms_[i].mono, c});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

GaussElement GaussElement::operator-() const { return scaled(-1); }

GaussElement GaussElement::operator-(const GaussElement& o) const { return *this + o.scaled(-1); }

GaussElement GaussElement::operator*(const GaussElement& o) const {
    if (terms_.empty() || o.terms_.empty()) {
        if (!terms_.empty() && !o.terms_.empty() && n_ != o.n_)
            throw std::invalid_argument("GaussElement degree mismatch");
        return GaussElement(terms_.empty() ? n_ : o.n_);
    }
    if (n_ != o.n_) throw std::invalid_argument("GaussElement degree mismatch");
    if (terms_.size() == 1 && terms_[0].mono == GaussMonomial{}) return o.scaled(terms_[0].coeff);
    if (o.terms_.size() == 1 && o.terms_[0].mono == GaussMonomial{}) return scaled(o.terms_[0].coeff);
    std::vector<GaussTerm> raw;
    raw.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            GaussTerm t;
            t.mono.q_exp = a.mono.q_exp + b.mono.q_exp;
            for (int s = 1; s < n_; ++s) {
                int v = a.mono.g[s] + b.mono.g[s];
                if (v > 255) throw std::overflow_error("Gauss sum exponent overflow");
                t.mono.g[s] = static_cast<std::uint8_t>(v);
            }
            normalize_in_place(t.mono, n_);
            t.coeff = checked_mul(a.coeff, b.coeff);
            raw.push_back(t);
        }
    }
    GaussElement r(n_);
    r.canonicalize(raw);
    return r;
}

GaussElement& GaussElement::operator*=(const GaussElement& o) {
    *this = *this * o;
    return *this;
}

GaussElement GaussElement::scaled(std::int64_t c) const {
    GaussElement r(n_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = checked_mul(t.coeff, c);
    return r;
}

GaussElement GaussElement::shift_q(int e) const {
    GaussElement r = *this;
    for (auto& t : r.terms_) t.mono.q_exp += e;
    return r;
}

bool GaussElement::operator==(const GaussElement& o) const {
    if (terms_.empty() || o.terms_.empty()) return terms_.empty() == o.terms_.empty();
    if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono) return false;
    return true;
}

std::string GaussElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::int64_t c = t.coeff;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        std::int64_t a = c < 0 ? -c : c;
        std::ostringstream body;
        bool any = false;
        if (t.mono.q_exp != 0) {
            body << "q";
            if (t.mono.q_exp != 1) body << "^" << t.mono.q_exp;
            any = true;
        }
        for (int s = 1; s < n_; ++s) {
            if (t.mono.g[s] == 0) continue;
            if (any) body << "*";
            body << "g" << s;
            if (t.mono.g[s] != 1) body << "^" << int(t.mono.g[s]);
            any = true;
        }
        if (!any) os << a;
        else if (a != 1) os << a << "*" << body.str();
        else os << body.str();
    }
    return os.str();
}

GaussElement gs_prime_power(int t, int k, int l, int n) {
    check_degree(n);
    if (k < 0 || l < 0) throw std::invalid_argument("negative exponent in Gauss sum");
    if (l == 0) return GaussElement::one(n);
    long long tl = static_cast<long long>(t) * l;
    bool divisible = tl % n == 0;
    if (l == k + 1) {
        if (!divisible) {
            GaussMonomial m = normalize(k, {{static_cast<int>(((tl % n) + n) % n), 1}}, n);
            return GaussElement::monomial(n, 1, m);
        }
        return GaussElement::q_power(n, k).scaled(-1);
    }
    if (l <= k && divisible) return GaussElement::q_power(n, l) - GaussElement::q_power(n, l - 1);
    return GaussElement::zero(n);
}

}  // namespace wmds

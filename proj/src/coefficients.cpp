#include "wmds/coefficients.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "wmds/daleth.hpp"

namespace wmds {

std::string description_name(Description d) {
    switch (d) {
        case Description::Inductive: return "inductive";
        case Description::BZL: return "bzl";
        case Description::Daleth: return "daleth";
        case Description::Stable: return "stable";
    }
    return "?";
}

Description parse_description(const std::string& s) {
    if (s == "inductive") return Description::Inductive;
    if (s == "bzl") return Description::BZL;
    if (s == "daleth") return Description::Daleth;
    if (s == "stable") return Description::Stable;
    throw std::invalid_argument("unknown description '" + s + "'");
}

std::vector<int> CoeffKey::mu() const {
    int r = this->r();
    std::vector<int> out(r);
    for (int j = 1; j <= r; ++j) out[j - 1] = m[r - j] + 1;
    return out;
}

bool CoeffKey::operator<(const CoeffKey& o) const {
    if (n != o.n) return n < o.n;
    if (k.size() != o.k.size()) return k.size() < o.k.size();
    if (k != o.k) return k < o.k;
    return m < o.m;
}

CoefficientEngine::CoefficientEngine(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("cover degree must be positive");
}

void CoefficientEngine::clear() { memo_.clear(); }

GaussElement CoefficientEngine::weight_sum(Tag tag, const std::vector<int>& mu, const std::vector<int>& k) {
    std::vector<int> key{static_cast<int>(tag)};
    key.insert(key.end(), mu.begin(), mu.end());
    key.insert(key.end(), k.begin(), k.end());
    if (auto hit = memo_.find(key)) return *hit;
    GaussElement s = GaussElement::zero(n_);
    bool bzl = tag != TagDeltaSum;
    for (const auto& t : patterns_of_weight(mu, k, bzl)) {
        switch (tag) {
            case TagDeltaSum: s += array_weight(build_array(t, mu, ArrayKind::Delta), n_); break;
            case TagGammaSum: s += array_weight(build_array(t, mu, ArrayKind::Gamma), n_); break;
            default: s += g_psi(t, mu, n_); break;
        }
    }
    return memo_.insert(key, std::move(s));
}

GaussElement CoefficientEngine::recurse(Tag tag, const std::vector<int>& k, const std::vector<int>& m) {
    int r = static_cast<int>(k.size());
    if (static_cast<int>(m.size()) != r) throw std::invalid_argument("k and m must have the same length");
    if (r == 0) return GaussElement::one(n_);
    for (int i = 0; i < r; ++i)
        if (k[i] < 0 || m[i] < 0) return GaussElement::zero(n_);
    if (tag == TagDaleth && r == 1) tag = TagInductive;

    std::vector<int> key{static_cast<int>(tag)};
    key.insert(key.end(), k.begin(), k.end());
    key.insert(key.end(), m.begin(), m.end());
    if (auto hit = memo_.find(key)) return *hit;

    GaussElement total = GaussElement::zero(n_);
    std::vector<int> mu(r);
    if (tag == TagBzl) {
        // kappa = kappa' + (kappa'', 0); row patterns have k_i(t) = kappa'_{r+1-i}; mu_s = l_s + 1
        for (int s = 0; s < r; ++s) mu[s] = m[s] + 1;
        std::vector<int> inner(r - 1, 0);
        std::function<void(int)> loop = [&](int j) {
            if (j < r - 1) {
                for (int v = 0; v <= k[j]; ++v) {
                    inner[j] = v;
                    loop(j + 1);
                }
                return;
            }
            std::vector<int> kp(k);
            for (int s = 0; s < r - 1; ++s) kp[s] -= inner[s];
            // l'_s = l_s + kappa'_{s+1} - 2 kappa'_s + c_s kappa'_{s-1}, c_1 = 0, c_2 = 2, c_s = 1 otherwise
            std::vector<int> lp(r - 1);
            for (int s = 1; s <= r - 1; ++s) {
                int c = s == 1 ? 0 : (s == 2 ? 2 : 1);
                lp[s - 1] = m[s - 1] + kp[s] - 2 * kp[s - 1] + (s >= 2 ? c * kp[s - 2] : 0);
                if (lp[s - 1] < 0) return;
            }
            std::vector<int> tk(kp.rbegin(), kp.rend());
            GaussElement w = weight_sum(TagGammaSum, mu, tk);
            if (w.is_zero()) return;
            total += w * recurse(TagBzl, inner, lp);
        };
        loop(0);
    } else {
        // k = k' + (0, k''); mu_j = m_{r+1-j} + 1
        for (int j = 1; j <= r; ++j) mu[j - 1] = m[r - j] + 1;
        Tag sum_tag = tag == TagInductive ? TagDeltaSum : TagPsiSum;
        std::vector<int> inner(r - 1, 0);
        std::function<void(int)> loop = [&](int j) {
            if (j < r - 1) {
                for (int v = 0; v <= k[j + 1]; ++v) {
                    inner[j] = v;
                    loop(j + 1);
                }
                return;
            }
            std::vector<int> kp(k);
            for (int s = 1; s < r; ++s) kp[s] -= inner[s - 1];
            // m'_j = m_{j+1} + k'_j - 2 k'_{j+1} + eps_{j+2} k'_{j+2}; a negative entry means k' is not strict
            std::vector<int> mp(r - 1);
            for (int j1 = 1; j1 <= r - 1; ++j1) {
                int v = m[j1] + kp[j1 - 1] - 2 * kp[j1];
                if (j1 + 2 <= r) v += eps(j1 + 2, r) * kp[j1 + 1];
                mp[j1 - 1] = v;
                if (v < 0) return;
            }
            GaussElement w = weight_sum(sum_tag, mu, kp);
            if (w.is_zero()) return;
            total += w * recurse(tag, inner, mp);
        };
        loop(0);
    }
    return memo_.insert(key, std::move(total));
}

GaussElement CoefficientEngine::h_inductive(const std::vector<int>& k, const std::vector<int>& m) {
    return recurse(TagInductive, k, m);
}

GaussElement CoefficientEngine::h_bzl_inductive(const std::vector<int>& kappa, const std::vector<int>& ell) {
    if (n_ % 2 == 0) throw std::invalid_argument("BZL description requires odd n; use h_daleth");
    return recurse(TagBzl, kappa, ell);
}

GaussElement CoefficientEngine::h_daleth(const std::vector<int>& k, const std::vector<int>& m) {
    return recurse(TagDaleth, k, m);
}

GaussElement CoefficientEngine::delta_weight_sum(const std::vector<int>& mu, const std::vector<int>& k) {
    return weight_sum(TagDeltaSum, mu, k);
}

GaussElement CoefficientEngine::coefficient(Description d, const std::vector<int>& k, const std::vector<int>& m) {
    switch (d) {
        case Description::Inductive: return h_inductive(k, m);
        case Description::BZL:
            return h_bzl_inductive(std::vector<int>(k.rbegin(), k.rend()), std::vector<int>(m.rbegin(), m.rend()));
        case Description::Daleth: return h_daleth(k, m);
        case Description::Stable: break;
    }
    throw std::invalid_argument("the stable description is not a per-key recursion");
}

GaussElement h_inductive(const CoeffKey& key) { return CoefficientEngine(key.n).h_inductive(key.k, key.m); }
GaussElement h_bzl_inductive(const CoeffKey& key) {
    return CoefficientEngine(key.n).h_bzl_inductive(key.kappa(), key.ell());
}
GaussElement h_daleth(const CoeffKey& key) { return CoefficientEngine(key.n).h_daleth(key.k, key.m); }

std::vector<std::vector<long long>> BZLPattern::entries() const {
    std::vector<std::vector<long long>> out;
    for (const auto& t : rows) {
        std::vector<long long> row;
        for (int p = 1; p <= 2 * t.r - 1; ++p) row.push_back(gamma_entry(t, p));
        out.push_back(row);
    }
    return out;
}

std::string BZLPattern::to_string() const {
    std::ostringstream os;
    auto e = entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        os << (i ? " / " : "");
        for (std::size_t j = 0; j < e[i].size(); ++j) os << (j ? "," : "") << e[i][j];
    }
    return os.str();
}

std::vector<int> next_row_mu(const ShortPattern& t, const std::vector<int>& mu) {
    int R = t.r;
    std::vector<int> k = weight_k(t);
    // kappa'_s = k_{R+1-s}(t); the row below has mu_s + kappa'_{s+1} - 2 kappa'_s + c_s kappa'_{s-1}
    auto kp = [&](int s) { return (s < 1 || s > R) ? 0 : k[R - s]; };
    std::vector<int> out(R - 1);
    for (int s = 1; s <= R - 1; ++s) {
        int c = s == 1 ? 0 : (s == 2 ? 2 : 1);
        out[s - 1] = mu[s - 1] + kp(s + 1) - 2 * kp(s) + c * kp(s - 1);
    }
    return out;
}

namespace {

void add_row_weight(std::vector<int>& kappa, const ShortPattern& t, int sign) {
    std::vector<int> k = weight_k(t);
    int R = t.r;
    for (int s = 1; s <= R; ++s) kappa[s - 1] += sign * k[R - s];
}

bool all_positive(const std::vector<int>& v) {
    for (int x : v)
        if (x < 1) return false;
    return true;
}

}  // namespace

std::vector<BZLPattern> enumerate_bzl(const std::vector<int>& mu) {
    int r = static_cast<int>(mu.size());
    std::vector<BZLPattern> out;
    BZLPattern cur;
    cur.r = r;
    cur.kappa.assign(r, 0);
    std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& m) {
        for (const auto& t : enumerate_bzl_short(m)) {
            cur.rows.push_back(t);
            cur.mu_rows.push_back(m);
            add_row_weight(cur.kappa, t, 1);
            if (t.r == 1) {
                out.push_back(cur);
            } else {
                std::vector<int> next = next_row_mu(t, m);
                if (all_positive(next)) rec(next);
            }
            add_row_weight(cur.kappa, t, -1);
            cur.rows.pop_back();
            cur.mu_rows.pop_back();
        }
    };
    if (r >= 1) rec(mu);
    return out;
}

std::vector<BZLPattern> enumerate_bzl_of_weight(const std::vector<int>& mu, const std::vector<int>& kappa) {
    int r = static_cast<int>(mu.size());
    if (static_cast<int>(kappa.size()) != r) throw std::invalid_argument("enumerate_bzl_of_weight: length mismatch");
    std::vector<BZLPattern> out;
    BZLPattern cur;
    cur.r = r;
    cur.kappa = kappa;
    std::function<void(const std::vector<int>&, const std::vector<int>&)> rec = [&](const std::vector<int>& m,
                                                                                   const std::vector<int>& left) {
        int R = static_cast<int>(m.size());
        // this row takes kappa'_R = left_R and any kappa'_s <= left_s for s < R
        std::vector<int> kp(R);
        kp[R - 1] = left[R - 1];
        std::function<void(int)> choose = [&](int s) {
            if (s < R - 1) {
                for (int v = 0; v <= left[s]; ++v) {
                    kp[s] = v;
                    choose(s + 1);
                }
                return;
            }
            std::vector<int> tk(kp.rbegin(), kp.rend());
            for (const auto& t : patterns_of_weight(m, tk, true)) {
                cur.rows.push_back(t);
                cur.mu_rows.push_back(m);
                if (R == 1) {
                    out.push_back(cur);
                } else {
                    std::vector<int> next = next_row_mu(t, m);
                    if (all_positive(next)) {
                        std::vector<int> rest(R - 1);
                        for (int i = 0; i < R - 1; ++i) rest[i] = left[i] - kp[i];
                        rec(next, rest);
                    }
                }
                cur.rows.pop_back();
                cur.mu_rows.pop_back();
            }
        };
        choose(0);
    };
    if (r >= 1) rec(mu, kappa);
    return out;
}

GaussElement bzl_weight(const BZLPattern& p, int n) {
    GaussElement g = GaussElement::one(n);
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        g *= array_weight(build_array(p.rows[i], p.mu_rows[i], ArrayKind::Gamma), n);
        if (g.is_zero()) break;
    }
    return g;
}

std::vector<DecoratedArray> bzl_decorated_rows(const BZLPattern& p) {
    std::vector<DecoratedArray> out;
    auto rows = p.entries();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& c = rows[i];
        const auto& mu = p.mu_rows[i];
        int R = static_cast<int>(mu.size());
        int len = 2 * R - 1;
        // c_j at position j, cbar_j at position 2R - j; cbar_R is the middle entry c_R
        auto cj = [&](int j) -> long long { return c[j - 1]; };
        auto cb = [&](int j) -> long long { return j == 0 ? 0 : c[2 * R - j - 1]; };
        DecoratedArray arr;
        arr.kind = ArrayKind::Gamma;
        arr.r = R;
        arr.entries.resize(len);
        for (int pos = 1; pos <= len; ++pos) {
            ArrayEntry& e = arr.entries[pos - 1];
            e.value = c[pos - 1];
            e.circled = pos < len ? c[pos - 1] == c[pos] : c[pos - 1] == 0;
            if (pos < R) {
                int j = pos;
                e.boxed = cj(j) == mu[R - j] + cb(j - 1) - 2 * cb(j) + cj(j + 1) + cb(j + 1);
            } else if (pos == R) {
                e.boxed = cj(R) == mu[0] + cb(R - 1);
                e.long_root = true;
            } else {
                int j = 2 * R - pos;
                e.boxed = cb(j) == mu[R - j] + cb(j - 1);
            }
        }
        out.push_back(std::move(arr));
    }
    return out;
}

GaussElement bzl_weight_direct(const BZLPattern& p, int n) {
    GaussElement g = GaussElement::one(n);
    for (const auto& arr : bzl_decorated_rows(p)) {
        g *= array_weight(arr, n);
        if (g.is_zero()) break;
    }
    return g;
}

GaussElement bzl_weight_psi(const BZLPattern& p, int n) {
    GaussElement g = GaussElement::one(n);
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        g *= g_psi(p.rows[i], p.mu_rows[i], n);
        if (g.is_zero()) break;
    }
    return g;
}

GaussElement h_bzl_direct(const std::vector<int>& kappa, const std::vector<int>& ell, int n, bool direct) {
    std::vector<int> mu(ell.size());
    for (std::size_t s = 0; s < ell.size(); ++s) mu[s] = ell[s] + 1;
    GaussElement total = GaussElement::zero(n);
    for (const auto& p : enumerate_bzl_of_weight(mu, kappa)) total += direct ? bzl_weight_direct(p, n) : bzl_weight(p, n);
    return total;
}

}  // namespace wmds

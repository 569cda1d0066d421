#include "wmds/daleth.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wmds/parallel.hpp"

namespace wmds {

namespace {

// eps_i k_i with k_0 = k_{r+1} = 0.
int ek(const std::vector<int>& k, int i) {
    int r = static_cast<int>(k.size());
    if (i < 1 || i > r) return 0;
    return eps(i, r) * k[i - 1];
}

int sgn(int x) { return (x > 0) - (x < 0); }

}  // namespace

ComponentDecomposition decompose(const std::vector<int>& k, const std::vector<int>& mu) {
    int r = static_cast<int>(k.size());
    if (static_cast<int>(mu.size()) != r) throw std::invalid_argument("decompose: length mismatch");
    ComponentDecomposition dec;
    int start = 1;
    for (int i = 1; i <= r; ++i) {
        if (i < r && ek(k, i) == ek(k, i + 1)) continue;
        Component c;
        c.l = start;
        c.r = i;
        if (c.l > 1) {
            c.a = std::abs(ek(k, c.l - 1) - ek(k, c.l));
            c.left_cmp = sgn(ek(k, c.l) - ek(k, c.l - 1));
        }
        if (c.r < r) {
            c.b = std::abs(ek(k, c.r) - ek(k, c.r + 1));
            c.right_cmp = sgn(ek(k, c.r) - ek(k, c.r + 1));
        }
        int L = c.length();
        c.mu.resize(L);
        for (int j = 1; j <= L; ++j) c.mu[j - 1] = mu[r - c.r + j - 1];
        // right boundary lowers the first entry, left boundary the last; both hit the single entry when L = 1
        if (c.right_cmp > 0) c.mu[0] -= c.b;
        if (c.left_cmp > 0) c.mu[L - 1] -= c.a;
        dec.components.push_back(std::move(c));
        start = i + 1;
    }
    return dec;
}

std::vector<ShortPattern> psi_split(const ShortPattern& t, const std::vector<int>& k) {
    if (weight_k(t) != k) throw std::invalid_argument("psi_split: weight does not match the pattern");
    int r = t.r;
    std::vector<int> ones(r, 1);
    ComponentDecomposition dec = decompose(k, ones);
    std::vector<ShortPattern> out;
    for (const auto& c : dec.components) {
        std::vector<int> d;
        for (int i = c.l; i < c.r; ++i) d.push_back(t.at(i));
        d.push_back(t.prime(c.r));
        for (int i = 2 * r - c.r + 1; i <= 2 * r - c.l; ++i) d.push_back(t.at(i));
        out.emplace_back(c.length(), d);
    }
    return out;
}

std::vector<std::vector<int>> xi_set(const std::vector<int>& k, const ComponentDecomposition& dec) {
    int r = static_cast<int>(k.size());
    int h = dec.h();
    int shift2 = 0;
    for (int i = 0; i + 1 < h; ++i) {
        const auto& c = dec.components[i];
        shift2 += c.b - ek(k, c.r) + ek(k, c.r + 1);
    }
    std::vector<std::vector<int>> out;
    if (shift2 % 2 != 0) return out;
    int total = k[r - 1] - shift2 / 2;
    if (total < 0) return out;
    std::vector<int> x(h, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == h - 1) {
            x[i] = left;
            out.push_back(x);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            x[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

std::vector<DecoratedArray> psi_arrays(const ShortPattern& t, const std::vector<int>& mu) {
    int r = t.r;
    std::vector<int> k = weight_k(t);
    ComponentDecomposition dec = decompose(k, mu);
    std::vector<ShortPattern> blocks = psi_split(t, k);
    std::vector<DecoratedArray> out;
    for (int ci = 0; ci < dec.h(); ++ci) {
        const Component& c = dec.components[ci];
        const ShortPattern& te = blocks[ci];
        DecoratedArray arr;
        arr.kind = ArrayKind::Psi;
        arr.r = c.length();
        auto entry = [&](int pos) {
            ArrayEntry e;
            e.value = gamma_entry(t, pos);
            return e;
        };
        bool override_case = c.r < r && mu[r - c.r] == ek(k, c.r) - ek(k, c.r + 1);
        if (override_case) {
            ArrayEntry top = entry(c.r), bottom = entry(2 * r - c.r);
            top.boxed = true;
            bottom.circled = true;
            arr.entries = {top, bottom};
            arr.top_row = 2;
            out.push_back(std::move(arr));
            continue;
        }
        int L = c.length();
        auto dE = [&](int i) { return te.at(i); };
        std::vector<ArrayEntry> left, right;
        for (int i = 1; i <= L - 1; ++i) {
            ArrayEntry ce = entry(c.l - 1 + i), cb = entry(2 * r - (c.l - 1 + i));
            ce.circled = dE(i + 1) == 0;
            cb.circled = dE(i) == 0;
            bool box = dE(i + 1) == c.mu[L - i - 1];
            ce.boxed = cb.boxed = box;
            left.push_back(ce);
            right.push_back(cb);
        }
        int mid_pos = c.r == r ? r : (c.right_cmp > 0 ? c.r : 2 * r - c.r);
        ArrayEntry mid = entry(mid_pos);
        mid.circled = dE(1) == 0;
        mid.boxed = dE(1) == c.mu[L - 1];
        mid.long_root = c.r == r;
        arr.entries = left;
        arr.entries.push_back(mid);
        for (auto it = right.rbegin(); it != right.rend(); ++it) arr.entries.push_back(*it);
        arr.top_row = L;
        if (c.r < r) {
            // the separator entry c_E: undecorated, so it contributes q^{c_E}(1 - q^{-1}) when n | c_E
            ArrayEntry sep = entry(c.right_cmp > 0 ? 2 * r - c.r : c.r);
            arr.entries.push_back(sep);
        }
        out.push_back(std::move(arr));
    }
    return out;
}

GaussElement g_psi(const ShortPattern& t, const std::vector<int>& mu, int n) {
    int r = t.r;
    std::vector<int> k = weight_k(t);
    if (!is_strict(k, mu)) return GaussElement::zero(n);
    ComponentDecomposition dec = decompose(k, mu);
    for (int ci = 0; ci + 1 < dec.h(); ++ci) {
        const Component& c = dec.components[ci];
        long long sep = gamma_entry(t, c.right_cmp > 0 ? 2 * r - c.r : c.r);
        if (sep % n != 0) return GaussElement::zero(n);
    }
    GaussElement g = GaussElement::one(n);
    for (const auto& arr : psi_arrays(t, mu)) {
        g *= array_weight(arr, n);
        if (g.is_zero()) break;
    }
    return g;
}

std::string RootSystemC::WeylElement::word() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? " " : "") << (sign[i] < 0 ? "-" : "") << perm[i] + 1;
    return os.str();
}

RootSystemC::RootSystemC(int r) : r_(r) {
    if (r < 1) throw std::invalid_argument("RootSystemC: rank must be positive");
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            Root a, b;
            a.v.assign(r, 0);
            a.v[i] = 1;
            a.v[j] = -1;
            b.v.assign(r, 0);
            b.v[i] = 1;
            b.v[j] = 1;
            pos_.push_back(a);
            pos_.push_back(b);
        }
        Root c;
        c.v.assign(r, 0);
        c.v[i] = 2;
        c.norm2 = 2;
        pos_.push_back(c);
    }
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int mask = 0; mask < (1 << r); ++mask) {
            WeylElement w;
            w.perm = perm;
            w.sign.assign(r, 1);
            for (int i = 0; i < r; ++i)
                if (mask >> (r - 1 - i) & 1) w.sign[i] = -1;
            weyl_.push_back(w);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<int> RootSystemC::apply(const WeylElement& w, const std::vector<int>& v) const {
    std::vector<int> out(r_, 0);
    for (int i = 0; i < r_; ++i) out[w.perm[i]] += w.sign[i] * v[i];
    return out;
}

bool RootSystemC::is_positive(const std::vector<int>& v) {
    for (int x : v)
        if (x != 0) return x > 0;
    return false;
}

std::vector<RootSystemC::Root> RootSystemC::inversion_set(const WeylElement& w) const {
    std::vector<Root> out;
    for (const auto& a : pos_)
        if (!is_positive(apply(w, a.v))) out.push_back(a);
    return out;
}

std::vector<int> weight_from_m(const std::vector<int>& m) {
    int r = static_cast<int>(m.size());
    // sum_i (m_i + 1) fw_i with fw_i = e_1 + ... + e_i
    std::vector<int> v(r, 0);
    for (int i = r - 1, acc = 0; i >= 0; --i) {
        acc += m[i] + 1;
        v[i] = acc;
    }
    return v;
}

int stability_bound(const std::vector<int>& mu, bool even) {
    int rest = 0;
    for (std::size_t i = 1; i < mu.size(); ++i) rest += mu[i];
    int bound = even ? 2 * mu[0] + 4 * rest : mu[0] + 2 * rest;
    if ((bound % 2 == 0) != even) ++bound;
    return bound;
}

bool is_stable_degree(const std::vector<int>& mu, int n) { return n >= stability_bound(mu, n % 2 == 0); }

std::vector<StableEntry> stable_support_and_values(const std::vector<int>& ell, int n, int threads) {
    int r = static_cast<int>(ell.size());
    if (r < 1) throw std::invalid_argument("stable_support_and_values: empty ell");
    std::vector<int> mu(r), m(r);
    for (int j = 0; j < r; ++j) {
        mu[j] = ell[j] + 1;
        m[j] = ell[r - 1 - j];
    }
    if (!is_stable_degree(mu, n)) {
        std::ostringstream os;
        os << "degree " << n << " violates the stability bound; the least admissible degree of this parity is "
           << stability_bound(mu, n % 2 == 0);
        throw std::invalid_argument(os.str());
    }
    RootSystemC rs(r);
    std::vector<int> wt = weight_from_m(m);
    const auto& W = rs.weyl_group();
    std::vector<StableEntry> out(W.size());
    parallel_for(W.size(), threads, [&](std::size_t idx) {
        const auto& w = W[idx];
        std::vector<int> ww = rs.apply(w, wt);
        // mu - w(mu) = sum k_i alpha_i: k_j = v_1 + ... + v_j for j < r and k_r = (v_1 + ... + v_r) / 2
        std::vector<int> k(r);
        int acc = 0;
        for (int j = 0; j < r; ++j) {
            acc += wt[j] - ww[j];
            k[j] = acc;
        }
        if (acc % 2 != 0) throw std::logic_error("stable support point is not integral");
        k[r - 1] = acc / 2;
        GaussElement g = GaussElement::one(n);
        for (const auto& a : rs.inversion_set(w)) {
            int ip = 0, aa = 0;
            for (int j = 0; j < r; ++j) {
                ip += wt[j] * a.v[j];
                aa += a.v[j] * a.v[j];
            }
            int d = 2 * ip / aa;
            g *= gs_prime_power(a.norm2, d - 1, d, n);
        }
        out[idx] = StableEntry{w, k, g};
    });
    return out;
}

}  // namespace wmds

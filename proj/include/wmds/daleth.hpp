#pragma once

#include <map>
#include <string>
#include <vector>

#include "wmds/gauss.hpp"
#include "wmds/patterns.hpp"

namespace wmds {

// A maximal run k_l, ..., k_r on which eps_i k_i is constant.
struct Component {
    int l = 0, r = 0;  // 1-based, inclusive
    int a = 0, b = 0;
    // sign of eps_l k_l - eps_{l-1} k_{l-1} (0 when l = 1), and of eps_r k_r - eps_{r+1} k_{r+1} (0 when r is last)
    int left_cmp = 0, right_cmp = 0;
    std::vector<int> mu;  // mu(E)
    int length() const { return r - l + 1; }
};

struct ComponentDecomposition {
    std::vector<Component> components;
    int h() const { return static_cast<int>(components.size()); }
};

ComponentDecomposition decompose(const std::vector<int>& k, const std::vector<int>& mu);

// The blocks t(E_1), ..., t(E_h).
std::vector<ShortPattern> psi_split(const ShortPattern& t, const std::vector<int>& k);

// All x in Z_{>=0}^h with sum x_i + sum_{i<h} (b_i - eps k_{r_i} + eps k_{r_i + 1}) / 2 = k_r.
std::vector<std::vector<int>> xi_set(const std::vector<int>& k, const ComponentDecomposition& dec);

// The decorated subsets Gamma_t(E) in order, one array per component.
std::vector<DecoratedArray> psi_arrays(const ShortPattern& t, const std::vector<int>& mu);

GaussElement g_psi(const ShortPattern& t, const std::vector<int>& mu, int n);

// Type C root data in the basis e_1, ..., e_r, with alpha_i = e_i - e_{i+1} and alpha_r = 2 e_r.
class RootSystemC {
public:
    struct Root {
        std::vector<int> v;
        int norm2 = 1;  // 1 for short roots, 2 for long roots
    };
    // w(e_i) = sign[i] e_{perm[i]}
    struct WeylElement {
        std::vector<int> perm, sign;
        std::string word() const;
    };

    explicit RootSystemC(int r);
    int rank() const { return r_; }
    const std::vector<Root>& positive_roots() const { return pos_; }
    // All 2^r r! signed permutations in lexicographic order.
    const std::vector<WeylElement>& weyl_group() const { return weyl_; }

    std::vector<int> apply(const WeylElement& w, const std::vector<int>& v) const;
    std::vector<Root> inversion_set(const WeylElement& w) const;
    static bool is_positive(const std::vector<int>& v);

private:
    int r_;
    std::vector<Root> pos_;
    std::vector<WeylElement> weyl_;
};

// lambda + rho in the basis e_i for the k-indexed m (m_i = l_{r+1-i}).
std::vector<int> weight_from_m(const std::vector<int>& m);
// Smallest n of the given parity satisfying the stability bound for mu.
int stability_bound(const std::vector<int>& mu, bool even);
bool is_stable_degree(const std::vector<int>& mu, int n);

struct StableEntry {
    RootSystemC::WeylElement w;
    std::vector<int> k;
    GaussElement value;
};

// One entry per Weyl element; throws if n violates the stability bound or a k is not integral.
std::vector<StableEntry> stable_support_and_values(const std::vector<int>& ell, int n, int threads = 1);

}  // namespace wmds

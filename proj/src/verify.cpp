#include "wmds/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wmds/coefficients.hpp"
#include "wmds/cyclotomic.hpp"
#include "wmds/daleth.hpp"
#include "wmds/ffield.hpp"
#include "wmds/parallel.hpp"
#include "wmds/patterns.hpp"

namespace wmds {

namespace {

std::string vec(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string polys(const std::vector<FFPoly>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string();
    os << ")";
    return os.str();
}

enum class Outcome { Equal, SymbolicOnly, Different };

Outcome compare(const GaussElement& a, const GaussElement& b, const CharacterData& cd) {
    if (a == b) return Outcome::Equal;
    return numeric_equal(a, b, cd) ? Outcome::SymbolicOnly : Outcome::Different;
}

struct CaseResult {
    long long checked = 0;
    long long failed = 0;
    long long symbolic_only = 0;
    std::string failure;

    void record(Outcome o, const std::string& what) {
        ++checked;
        if (o == Outcome::SymbolicOnly) ++symbolic_only;
        if (o == Outcome::Different) {
            ++failed;
            if (failure.empty()) failure = what;
        }
    }
    void record(bool ok, const std::string& what) { record(ok ? Outcome::Equal : Outcome::Different, what); }
};

// Folds per-case results in index order, so the report does not depend on the thread count.
void fold(SuiteReport& rep, const std::vector<CaseResult>& cases) {
    for (const auto& c : cases) {
        rep.checked += c.checked;
        rep.failed += c.failed;
        rep.symbolic_only += c.symbolic_only;
        if (rep.first_failure.empty() && !c.failure.empty()) rep.first_failure = c.failure;
    }
}

std::string pair_text(const GaussElement& a, const GaussElement& b) { return a.to_string() + " vs " + b.to_string(); }

}  // namespace

std::string SuiteReport::text() const {
    std::ostringstream os;
    os << "suite " << suite << " [" << params << "]: " << (passed() ? "PASS" : "FAIL") << ", " << checked << " checked, "
       << failed << " failed";
    if (symbolic_only) os << ", " << symbolic_only << " equal only after instantiation";
    os << "\n";
    if (!first_failure.empty()) os << "  first counterexample: " << first_failure << "\n";
    for (const auto& note : notes) os << "  " << note << "\n";
    return os.str();
}

json SuiteReport::to_json() const {
    return {{"suite", suite},
            {"params", params},
            {"pass", passed()},
            {"checked", checked},
            {"failed", failed},
            {"symbolic_only", symbolic_only},
            {"first_counterexample", first_failure},
            {"notes", notes}};
}

std::vector<std::vector<int>> int_grid(int r, int lo, int hi) {
    std::vector<std::vector<int>> out;
    if (r < 0 || hi < lo) return out;
    std::vector<int> v(r, lo);
    for (;;) {
        out.push_back(v);
        int i = r - 1;
        while (i >= 0 && v[i] == hi) v[i--] = lo;
        if (i < 0) break;
        ++v[i];
    }
    return out;
}

SuiteReport verify_lemma73(int rmax, int mubound, int threads) {
    SuiteReport rep;
    rep.suite = "lemma73";
    rep.params = "r<=" + std::to_string(rmax) + " mu<=" + std::to_string(mubound);
    std::vector<std::vector<int>> mus;
    for (int r = 1; r <= rmax; ++r)
        for (auto& mu : int_grid(r, 1, mubound)) mus.push_back(mu);
    std::vector<CaseResult> cases(mus.size());
    std::vector<long long> sizes(mus.size());
    parallel_for(mus.size(), threads, [&](std::size_t i) {
        auto cq = enumerate_patterns(mus[i]);
        auto bzl = enumerate_bzl_short(mus[i]);
        sizes[i] = static_cast<long long>(cq.size());
        std::ostringstream os;
        os << "mu=" << vec(mus[i]) << " |CQ1|=" << cq.size() << " |BZL1|=" << bzl.size();
        cases[i].record(cq == bzl, os.str());
    });
    fold(rep, cases);
    long long total = 0;
    for (auto s : sizes) total += s;
    rep.notes.push_back("patterns compared: " + std::to_string(total));
    return rep;
}

std::vector<std::vector<int>> statement_a_default_mus() {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    auto add = [&](int rmax, int hi) {
        for (int r = 1; r <= rmax; ++r)
            for (auto& mu : int_grid(r, 1, hi))
                if (seen.insert(mu).second) out.push_back(mu);
    };
    add(4, 2);
    add(3, 3);
    return out;
}

SuiteReport verify_statement_a(int n, const std::vector<std::vector<int>>& mus, int threads) {
    SuiteReport rep;
    rep.suite = "statement-a";
    rep.params = "n=" + std::to_string(n) + " mus=" + std::to_string(mus.size());
    CharacterData cd(n, default_field_size(n));
    std::vector<CaseResult> cases(mus.size());
    std::vector<std::array<long long, 3>> by_class(mus.size(), {0, 0, 0});
    parallel_for(mus.size(), threads, [&](std::size_t i) {
        const auto& mu = mus[i];
        for (const auto& [k, pats] : patterns_by_weight(mu)) {
            if (!is_strict(k, mu)) continue;
            auto w = classify(k, mu);
            by_class[i][static_cast<int>(w.cls)]++;
            StatementASums s = statement_a_sums(k, mu, n);
            std::string key = "mu=" + vec(mu) + " k=" + vec(k);
            cases[i].record(compare(s.h_gamma, s.h_delta, cd), key + " H_Gamma vs H_Delta: " + pair_text(s.h_gamma, s.h_delta));
            cases[i].record(compare(s.h_gamma_iota, s.h_delta_iota, cd),
                            key + " N=" + std::to_string(s.N) + " iota sums: " + pair_text(s.h_gamma_iota, s.h_delta_iota));
        }
    });
    fold(rep, cases);
    std::array<long long, 3> tot{0, 0, 0};
    for (const auto& c : by_class)
        for (int j = 0; j < 3; ++j) tot[j] += c[j];
    rep.notes.push_back("strict weights: totally resonant " + std::to_string(tot[static_cast<int>(Resonance::TotallyResonant)]) +
                        ", class I " + std::to_string(tot[static_cast<int>(Resonance::ClassI)]) + ", class II " +
                        std::to_string(tot[static_cast<int>(Resonance::ClassII)]));
    return rep;
}

namespace {

std::vector<std::pair<std::vector<int>, std::vector<int>>> coefficient_keys(int rmin, int rmax, int kmax, int mmax) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> keys;
    for (int r = rmin; r <= rmax; ++r)
        for (auto& k : int_grid(r, 0, kmax))
            for (auto& m : int_grid(r, 0, mmax)) keys.emplace_back(k, m);
    return keys;
}

std::string bounds(int n, int rmax, int kmax, int mmax) {
    return "n=" + std::to_string(n) + " r<=" + std::to_string(rmax) + " k<=" + std::to_string(kmax) + " m<=" + std::to_string(mmax);
}

}  // namespace

SuiteReport verify_thm71(int n, int rmax, int kmax, int mmax, int threads) {
    if (n % 2 == 0) throw std::invalid_argument("BZL description requires odd n; use h_daleth");
    SuiteReport rep;
    rep.suite = "thm71";
    rep.params = bounds(n, rmax, kmax, mmax);
    CharacterData cd(n, default_field_size(n));
    CoefficientEngine eng(n);
    auto keys = coefficient_keys(1, rmax, kmax, mmax);
    std::vector<CaseResult> cases(keys.size());
    std::vector<char> nonzero(keys.size(), 0);
    parallel_for(keys.size(), threads, [&](std::size_t i) {
        const auto& [k, m] = keys[i];
        GaussElement a = eng.coefficient(Description::Inductive, k, m);
        GaussElement b = eng.coefficient(Description::BZL, k, m);
        nonzero[i] = !a.is_zero();
        cases[i].record(compare(a, b, cd), "k=" + vec(k) + " m=" + vec(m) + ": " + pair_text(a, b));
    });
    fold(rep, cases);
    rep.notes.push_back("nonzero coefficients: " + std::to_string(std::count(nonzero.begin(), nonzero.end(), 1)));
    return rep;
}

SuiteReport verify_thm82(int n, int rmax, int kmax, int mmax, int threads) {
    SuiteReport rep;
    rep.suite = "thm82";
    rep.params = bounds(n, rmax, kmax, mmax);
    CharacterData cd(n, default_field_size(n));
    CoefficientEngine eng(n);
    auto keys = coefficient_keys(1, rmax, kmax, mmax);
    std::vector<CaseResult> cases(keys.size());
    parallel_for(keys.size(), threads, [&](std::size_t i) {
        const auto& [k, m] = keys[i];
        GaussElement a = eng.h_daleth(k, m);
        GaussElement b = eng.h_inductive(k, m);
        cases[i].record(compare(a, b, cd), "k=" + vec(k) + " m=" + vec(m) + ": H_daleth " + a.to_string() + " vs H " + b.to_string());
    });
    fold(rep, cases);

    // per-pattern and per-weight diagnostics over the mu reachable from the m range
    std::vector<std::vector<int>> mus;
    for (int r = 2; r <= rmax; ++r)
        for (auto& mu : int_grid(r, 1, mmax + 1)) mus.push_back(mu);
    struct Diag {
        long long patterns = 0, pattern_bad = 0, weights = 0, weight_bad = 0;
        std::map<int, long long> bad_by_h;
        std::string first;
    };
    std::vector<Diag> diag(mus.size());
    parallel_for(mus.size(), threads, [&](std::size_t i) {
        const auto& mu = mus[i];
        std::map<std::vector<int>, std::pair<GaussElement, GaussElement>> sums;
        for (const auto& t : enumerate_bzl_short(mu)) {
            auto k = weight_k(t);
            if (!is_strict(k, mu)) continue;
            GaussElement gp = g_psi(t, mu, n);
            GaussElement gd = array_weight(build_array(t, mu, ArrayKind::Delta), n);
            ++diag[i].patterns;
            if (compare(gp, gd, cd) == Outcome::Different) {
                ++diag[i].pattern_bad;
                ++diag[i].bad_by_h[decompose(k, mu).h()];
                if (diag[i].first.empty())
                    diag[i].first = "mu=" + vec(mu) + " t=" + t.to_string() + " G_Psi " + gp.to_string() + " vs G_Delta " + gd.to_string();
            }
            auto it = sums.try_emplace(k, GaussElement::zero(n), GaussElement::zero(n)).first;
            it->second.first += gp;
            it->second.second += gd;
        }
        for (const auto& [k, s] : sums) {
            ++diag[i].weights;
            if (compare(s.first, s.second, cd) == Outcome::Different) ++diag[i].weight_bad;
        }
    });
    Diag total;
    for (const auto& d : diag) {
        total.patterns += d.patterns;
        total.pattern_bad += d.pattern_bad;
        total.weights += d.weights;
        total.weight_bad += d.weight_bad;
        for (const auto& [h, c] : d.bad_by_h) total.bad_by_h[h] += c;
        if (total.first.empty()) total.first = d.first;
    }
    std::ostringstream os;
    os << "per-pattern G_Psi = G_Delta: " << total.pattern_bad << " of " << total.patterns << " strict patterns differ";
    for (const auto& [h, c] : total.bad_by_h) os << "; h=" << h << ": " << c;
    rep.notes.push_back(os.str());
    rep.notes.push_back("weight sums of G_Psi and G_Delta: " + std::to_string(total.weight_bad) + " of " +
                        std::to_string(total.weights) + " strict weights differ");
    if (!total.first.empty()) rep.notes.push_back("first pattern mismatch: " + total.first);
    return rep;
}

SuiteReport verify_stable(const std::vector<int>& ell, int n, int threads) {
    int r = static_cast<int>(ell.size());
    SuiteReport rep;
    rep.suite = "stable";
    rep.params = "ell=" + vec(ell) + " n=" + std::to_string(n);
    auto entries = stable_support_and_values(ell, n, threads);
    std::map<std::vector<int>, GaussElement> support;
    int kmax = 0;
    for (const auto& e : entries) {
        support.emplace(e.k, e.value);
        for (int x : e.k) kmax = std::max(kmax, x);
    }
    long long order = 1 << r;
    for (int i = 2; i <= r; ++i) order *= i;
    CaseResult head;
    head.record(static_cast<long long>(entries.size()) == order && static_cast<long long>(support.size()) == order,
                "|W| = " + std::to_string(order) + " but " + std::to_string(support.size()) + " distinct support points");
    rep.notes.push_back("support points: " + std::to_string(support.size()) + ", box [0," + std::to_string(kmax + 1) + "]^" +
                        std::to_string(r));

    std::vector<int> m(ell.rbegin(), ell.rend());
    CoefficientEngine eng(n);
    auto box = int_grid(r, 0, kmax + 1);
    std::vector<CaseResult> cases(box.size());
    parallel_for(box.size(), threads, [&](std::size_t i) {
        const auto& k = box[i];
        GaussElement h = eng.h_inductive(k, m);
        auto it = support.find(k);
        if (it == support.end()) {
            cases[i].record(h.is_zero(), "k=" + vec(k) + " outside the Weyl support but H = " + h.to_string());
        } else {
            cases[i].record(h == it->second, "k=" + vec(k) + ": H " + h.to_string() + " vs closed form " + it->second.to_string());
        }
    });
    std::vector<CaseResult> all{head};
    all.insert(all.end(), cases.begin(), cases.end());

    // stable BZL patterns: sum of G(Gamma) by weight, and the count of nonzero patterns
    std::vector<int> mu(r);
    for (int j = 0; j < r; ++j) mu[j] = ell[j] + 1;
    std::map<std::vector<int>, GaussElement> bzl;
    long long nonzero = 0, nonzero_psi = 0;
    for (const auto& p : enumerate_bzl(mu)) {
        GaussElement g = bzl_weight(p, n);
        if (!bzl_weight_psi(p, n).is_zero()) ++nonzero_psi;
        if (g.is_zero()) continue;
        ++nonzero;
        auto it = bzl.try_emplace(p.kappa, GaussElement::zero(n)).first;
        it->second += g;
    }
    CaseResult cross;
    cross.record(nonzero == order, "nonzero G(Gamma): " + std::to_string(nonzero) + ", expected " + std::to_string(order));
    for (const auto& [k, v] : support) {
        std::vector<int> kappa(k.rbegin(), k.rend());
        auto it = bzl.find(kappa);
        cross.record(it != bzl.end() && it->second == v, "kappa=" + vec(kappa) + " BZL sum " +
                                                             (it == bzl.end() ? std::string("0") : it->second.to_string()) +
                                                             " vs closed form " + v.to_string());
    }
    all.push_back(cross);
    fold(rep, all);
    rep.notes.push_back("nonzero G(Gamma) patterns: " + std::to_string(nonzero) + "; nonzero G_Psi(Gamma) patterns: " +
                        std::to_string(nonzero_psi));
    return rep;
}

SuiteReport verify_stable_sweep(const std::vector<int>& rs, int ellbound, int threads) {
    SuiteReport rep;
    rep.suite = "stable";
    std::ostringstream ps;
    ps << "r in {";
    for (std::size_t i = 0; i < rs.size(); ++i) ps << (i ? "," : "") << rs[i];
    ps << "} ell<=" << ellbound << " least admissible n of each parity";
    rep.params = ps.str();
    for (int r : rs) {
        for (auto& ell : int_grid(r, 0, ellbound)) {
            std::vector<int> mu(r);
            for (int j = 0; j < r; ++j) mu[j] = ell[j] + 1;
            for (bool even : {false, true}) {
                int n = stability_bound(mu, even);
                SuiteReport one = verify_stable(ell, n, threads);
                rep.checked += one.checked;
                rep.failed += one.failed;
                if (rep.first_failure.empty() && !one.first_failure.empty()) rep.first_failure = one.params + ": " + one.first_failure;
                rep.notes.push_back(one.params + ": " + (one.passed() ? "PASS" : "FAIL") + ", " + one.notes.back());
            }
        }
    }
    return rep;
}

namespace {

// Monic products of a small pool of irreducibles, grouped by degree 0..maxdeg.
std::vector<std::vector<FFPoly>> pool_products(int q, int maxdeg) {
    std::vector<FFPoly> pool;
    for (int a = 0; a < 3 && a < q; ++a) pool.push_back(FFPoly(q, {a, 1}));
    for (int c = 1; c < q && maxdeg >= 2; ++c) {
        FFPoly f(q, {c, 0, 1});
        if (is_irreducible(f)) {
            pool.push_back(f);
            break;
        }
    }
    std::set<FFPoly> seen{FFPoly::constant(q, 1)};
    std::vector<FFPoly> frontier{FFPoly::constant(q, 1)};
    while (!frontier.empty()) {
        std::vector<FFPoly> next;
        for (const auto& f : frontier)
            for (const auto& p : pool) {
                FFPoly g = f * p;
                if (g.degree() <= maxdeg && seen.insert(g).second) next.push_back(g);
            }
        frontier = std::move(next);
    }
    std::vector<std::vector<FFPoly>> by_deg(maxdeg + 1);
    for (const auto& f : seen) by_deg[f.degree()].push_back(f);
    return by_deg;
}

// Tuples of `slots` polynomials from by_deg with total degree <= budget, in a fixed order.
void tuples(const std::vector<std::vector<FFPoly>>& by_deg, int slots, int budget, std::vector<FFPoly>& cur,
            std::vector<std::vector<FFPoly>>& out) {
    if (static_cast<int>(cur.size()) == slots) {
        out.push_back(cur);
        return;
    }
    for (int d = 0; d <= budget && d < static_cast<int>(by_deg.size()); ++d)
        for (const auto& f : by_deg[d]) {
            cur.push_back(f);
            tuples(by_deg, slots, budget - d, cur, out);
            cur.pop_back();
        }
}

FFPoly product(const std::vector<FFPoly>& v, int q) {
    FFPoly p = FFPoly::constant(q, 1);
    for (const auto& f : v) p = p * f;
    return p;
}

bool all_one(const std::vector<FFPoly>& v) {
    for (const auto& f : v)
        if (!f.is_one()) return false;
    return true;
}

}  // namespace

SuiteReport verify_twisted(int n, int q, int degbound, int threads) {
    SuiteReport rep;
    rep.suite = "twisted";
    rep.params = "n=" + std::to_string(n) + " q=" + std::to_string(q) + " degree<=" + std::to_string(degbound) + " r<=2";
    if ((q - 1) % (4 * n) != 0) throw std::invalid_argument("twisted: q must be 1 mod 4n");
    auto by_deg = pool_products(q, degbound);
    int M = n * q;
    FFPoly two = FFPoly::constant(q, 2 % q);

    struct Case {
        int kind;  // 1: first argument, 2: second argument
        std::vector<FFPoly> a, b, c;
    };
    std::vector<Case> cases;
    for (int r = 1; r <= 2; ++r) {
        std::vector<std::vector<FFPoly>> all;
        std::vector<FFPoly> cur;
        tuples(by_deg, 3 * r, degbound, cur, all);
        for (const auto& t : all) {
            std::vector<FFPoly> x(t.begin(), t.begin() + r), y(t.begin() + r, t.begin() + 2 * r), z(t.begin() + 2 * r, t.end());
            // H(C; m m') against H(C; m): C = x, m = y, m' = z, optionally scaled by the unit 2
            if (!all_one(z) && poly_gcd(product(x, q), product(z, q)).degree() == 0) {
                cases.push_back({1, x, y, z});
                auto zz = z;
                zz[0] = zz[0] * two;
                cases.push_back({1, x, y, zz});
            }
            // H(C C'; m) against H(C; m) H(C'; m): C = x, C' = y, m = z
            if (!all_one(x) && !all_one(y) && poly_gcd(product(x, q), product(y, q)).degree() == 0) cases.push_back({2, x, y, z});
        }
    }
    std::vector<CaseResult> results(cases.size());
    std::vector<char> twisted(cases.size(), 0);
    parallel_for(cases.size(), threads, [&](std::size_t i) {
        const Case& c = cases[i];
        int r = static_cast<int>(c.a.size());
        if (c.kind == 1) {
            std::vector<FFPoly> mm(r, FFPoly::constant(q, 1));
            for (int j = 0; j < r; ++j) mm[j] = c.b[j] * c.c[j];
            CyclotomicInt lhs = h_direct(c.a, mm, n);
            int e = twist_factor_m(c.a, c.c, n);
            twisted[i] = e % n != 0;
            CyclotomicInt rhs = CyclotomicInt::root_of_unity(M, static_cast<long long>(q) * e) * h_direct(c.a, c.b, n);
            results[i].record(lhs == rhs, "H(C; m m') with C=" + polys(c.a) + " m=" + polys(c.b) + " m'=" + polys(c.c));
        } else {
            std::vector<FFPoly> cc(r, FFPoly::constant(q, 1));
            for (int j = 0; j < r; ++j) cc[j] = c.a[j] * c.b[j];
            CyclotomicInt lhs = h_direct(cc, c.c, n);
            int e = twist_factor_mu(c.a, c.b, n);
            twisted[i] = e % n != 0;
            CyclotomicInt rhs = CyclotomicInt::root_of_unity(M, static_cast<long long>(q) * e) * h_direct(c.a, c.c, n) *
                                h_direct(c.b, c.c, n);
            results[i].record(lhs == rhs, "H(C C'; m) with C=" + polys(c.a) + " C'=" + polys(c.b) + " m=" + polys(c.c));
        }
    });
    fold(rep, results);
    long long k1 = 0, k2 = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) (cases[i].kind == 1 ? k1 : k2)++;
    rep.notes.push_back("first-argument cases: " + std::to_string(k1) + ", second-argument cases: " + std::to_string(k2) +
                        ", with a nontrivial root of unity: " + std::to_string(std::count(twisted.begin(), twisted.end(), 1)));
    return rep;
}

SuiteReport verify_gauss_oracle(int n, int q, int klmax, int threads) {
    SuiteReport rep;
    rep.suite = "gauss-oracle";
    rep.params = "n=" + std::to_string(n) + " q=" + std::to_string(q) + " t<=" + std::to_string(2 * n) + " k,l<=" + std::to_string(klmax);
    CharacterData cd(n, q);
    std::vector<CaseResult> cases(klmax + 1);
    parallel_for(static_cast<std::size_t>(klmax + 1), threads, [&](std::size_t li) {
        int l = static_cast<int>(li);
        auto table = gauss_sum_prime_power_brute_table(l, klmax, cd);
        for (int t = 0; t <= 2 * n; ++t)
            for (int k = 0; k <= klmax; ++k) {
                GaussElement g = gs_prime_power(t, k, l, n);
                cases[li].record(numeric_eval(g, cd) == table[t % n][k], "t=" + std::to_string(t) + " k=" + std::to_string(k) +
                                                                             " l=" + std::to_string(l) + ": rule gives " + g.to_string());
            }
    });
    fold(rep, cases);
    return rep;
}

SuiteReport verify_ff_crystal(int n, int q, int rmax, int expmax, int threads) {
    SuiteReport rep;
    rep.suite = "ff-crystal";
    rep.params = "n=" + std::to_string(n) + " q=" + std::to_string(q) + " r<=" + std::to_string(rmax) + " exponents<=" +
                 std::to_string(expmax);
    CharacterData cd(n, q);
    CoefficientEngine eng(n);
    auto keys = coefficient_keys(1, rmax, expmax, expmax);
    std::vector<FFPoly> primes{FFPoly(q, {0, 1}), FFPoly(q, {1, 1})};
    std::size_t nk = keys.size();
    std::vector<CaseResult> cases(nk * primes.size());
    std::vector<char> nonzero(cases.size(), 0);
    parallel_for(cases.size(), threads, [&](std::size_t i) {
        const auto& [k, m] = keys[i % nk];
        const FFPoly& pi = primes[i / nk];
        auto power = [&](int e) {
            FFPoly p = FFPoly::constant(q, 1);
            for (int j = 0; j < e; ++j) p = p * pi;
            return p;
        };
        std::vector<FFPoly> C, mm;
        for (int x : k) C.push_back(power(x));
        for (int x : m) mm.push_back(power(x));
        CyclotomicInt direct = h_direct(C, mm, n);
        GaussElement h = eng.h_inductive(k, m);
        nonzero[i] = !direct.is_zero();
        cases[i].record(numeric_eval(h, cd) == direct,
                        "p=" + pi.to_string() + " k=" + vec(k) + " m=" + vec(m) + ": H = " + h.to_string());
    });
    fold(rep, cases);
    rep.notes.push_back("nonzero direct values: " + std::to_string(std::count(nonzero.begin(), nonzero.end(), 1)));
    return rep;
}

}  // namespace wmds

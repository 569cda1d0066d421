#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wmds/coefficients.hpp"
#include "wmds/cyclotomic.hpp"
#include "wmds/daleth.hpp"
#include "wmds/ffield.hpp"
#include "wmds/json_io.hpp"
#include "wmds/parallel.hpp"
#include "wmds/verify.hpp"

using namespace wmds;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string desc = "inductive";
    std::string desc_b = "daleth";
    int n = 3;
    int r = 1;
    int kmax = 2;
    int mmax = 2;
    int q = 0;
    std::vector<int> ell;
    std::string format = "json";
    std::string backend = "symbolic";
    int threads = 1;
};

int field_size(const RunConfig& cfg) {
    int q = cfg.q ? cfg.q : default_field_size(cfg.n);
    if (!is_prime(q) || (q - 1) % (4 * cfg.n) != 0)
        throw UsageError("--q must be a prime congruent to 1 mod 4n (got " + std::to_string(q) + ")");
    return q;
}

void check_basics(const RunConfig& cfg) {
    if (cfg.n < 1) throw UsageError("--n must be positive");
    if (cfg.n >= kMaxDegree) throw UsageError("--n must be below " + std::to_string(kMaxDegree));
    if (cfg.r < 1) throw UsageError("--r must be positive");
    if (cfg.kmax < 0 || cfg.mmax < 0) throw UsageError("bounds must be nonnegative");
    if (cfg.threads < 1) throw UsageError("--threads must be positive");
}

Description description(const std::string& name, int n) {
    Description d;
    try {
        d = parse_description(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (d == Description::BZL && n % 2 == 0)
        throw UsageError("the BZL description needs odd n; for even n use --desc daleth");
    return d;
}

void emit(const std::vector<TableRow>& rows, const RunConfig& cfg, bool with_label) {
    if (cfg.format == "csv") std::cout << table_to_csv(rows, with_label);
    else std::cout << table_to_json(rows, with_label);
}

void attach_backend(std::vector<TableRow>& rows, const RunConfig& cfg) {
    if (cfg.backend == "symbolic") return;
    CharacterData cd(cfg.n, field_size(cfg));
    for (auto& row : rows) {
        row.numeric = numeric_eval(row.value, cd);
        row.symbolic = cfg.backend == "both";
    }
}

std::vector<TableRow> stable_rows(const RunConfig& cfg) {
    if (cfg.ell.empty()) throw UsageError("--ell is required for the stable description");
    for (int x : cfg.ell)
        if (x < 0) throw UsageError("--ell entries must be nonnegative");
    std::vector<StableEntry> entries;
    try {
        entries = stable_support_and_values(cfg.ell, cfg.n, cfg.threads);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::vector<int> m(cfg.ell.rbegin(), cfg.ell.rend());
    std::vector<TableRow> rows;
    for (const auto& e : entries) {
        TableRow row;
        row.k = e.k;
        row.m = m;
        row.value = e.value;
        row.label = e.w.word();
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) { return a.k < b.k; });
    return rows;
}

std::vector<TableRow> key_rows(const RunConfig& cfg, Description d) {
    std::vector<TableRow> rows;
    for (auto& k : int_grid(cfg.r, 0, cfg.kmax))
        for (auto& m : int_grid(cfg.r, 0, cfg.mmax)) {
            TableRow row;
            row.k = k;
            row.m = m;
            rows.push_back(std::move(row));
        }
    CoefficientEngine eng(cfg.n);
    parallel_for(rows.size(), cfg.threads, [&](std::size_t i) { rows[i].value = eng.coefficient(d, rows[i].k, rows[i].m); });
    return rows;
}

int cmd_table(const RunConfig& cfg) {
    check_basics(cfg);
    Description d = description(cfg.desc, cfg.n);
    std::vector<TableRow> rows = d == Description::Stable ? stable_rows(cfg) : key_rows(cfg, d);
    attach_backend(rows, cfg);
    emit(rows, cfg, d == Description::Stable);
    return 0;
}

int cmd_stable(RunConfig cfg, const std::string& parity) {
    if (cfg.ell.empty()) throw UsageError("--ell is required");
    if (cfg.n == 0) {
        std::vector<int> mu;
        for (int x : cfg.ell) mu.push_back(x + 1);
        cfg.n = stability_bound(mu, parity == "even");
    }
    check_basics(cfg);
    std::vector<TableRow> rows = stable_rows(cfg);
    attach_backend(rows, cfg);
    emit(rows, cfg, true);
    return 0;
}

int cmd_compare(const RunConfig& cfg) {
    check_basics(cfg);
    Description a = description(cfg.desc, cfg.n), b = description(cfg.desc_b, cfg.n);
    if (a == Description::Stable || b == Description::Stable) throw UsageError("compare takes per-key descriptions");
    std::vector<TableRow> ra = key_rows(cfg, a), rb = key_rows(cfg, b);
    std::optional<CharacterData> cd;
    if (cfg.backend != "symbolic") cd.emplace(cfg.n, field_size(cfg));
    json diffs = json::array();
    long long symbolic_diff = 0, numeric_diff = 0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        bool sym = ra[i].value != rb[i].value;
        bool num = cd && sym && !numeric_equal(ra[i].value, rb[i].value, *cd);
        symbolic_diff += sym;
        numeric_diff += num;
        bool reported = cfg.backend == "symbolic" ? sym : num;
        if (reported)
            diffs.push_back({{"k", ra[i].k}, {"m", ra[i].m}, {cfg.desc, to_json(ra[i].value)}, {cfg.desc_b, to_json(rb[i].value)}});
    }
    json out = {{"a", cfg.desc}, {"b", cfg.desc_b}, {"n", cfg.n}, {"r", cfg.r}, {"kmax", cfg.kmax}, {"mmax", cfg.mmax},
                {"keys", ra.size()}, {"symbolic_differences", symbolic_diff}};
    if (cd) out["numeric_differences"] = numeric_diff;
    out["differences"] = diffs;
    std::cout << out.dump(2) << "\n";
    return diffs.empty() ? 0 : kExitFailure;
}

std::vector<FFPoly> parse_polys(const std::string& text, int q, const char* flag) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception&) {
        throw UsageError(std::string(flag) + " must be a JSON list of coefficient lists, e.g. [[3,0,1],[1]]");
    }
    if (!j.is_array()) throw UsageError(std::string(flag) + " must be a JSON list");
    std::vector<FFPoly> out;
    for (const auto& p : j) {
        if (!p.is_array() || p.empty()) throw UsageError(std::string(flag) + ": each polynomial is a nonempty list");
        std::vector<int> c;
        for (const auto& x : p) {
            if (!x.is_number_integer()) throw UsageError(std::string(flag) + ": coefficients must be integers");
            c.push_back(((x.get<int>() % q) + q) % q);
        }
        out.emplace_back(q, c);
    }
    return out;
}

int cmd_ff_eval(const RunConfig& cfg, const std::string& c_text, const std::string& m_text) {
    if (cfg.n < 1) throw UsageError("--n must be positive");
    int q = field_size(cfg);
    auto C = parse_polys(c_text, q, "--C");
    auto m = parse_polys(m_text, q, "--m");
    if (C.size() != m.size() || C.empty() || C.size() > 2) throw UsageError("--C and --m need the same length, 1 or 2");
    for (const auto& f : C)
        if (f.is_zero()) throw UsageError("--C entries must be nonzero");
    for (const auto& f : m)
        if (f.is_zero()) throw UsageError("--m entries must be nonzero");
    CyclotomicInt v = h_direct(C, m, cfg.n);
    json cj = json::array(), mj = json::array();
    for (const auto& f : C) cj.push_back(f.to_string());
    for (const auto& f : m) mj.push_back(f.to_string());
    json out = {{"n", cfg.n}, {"q", q}, {"C", cj}, {"m", mj}, {"value", to_json(v)}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct VerifyArgs {
    std::string suite;
    int bound = 3;
    int mbound = 2;
    int mubound = 3;
    int degbound = 3;
    int ellbound = 1;
    bool r_given = false;
    bool mubound_given = false;
};

int cmd_verify(const RunConfig& cfg, const VerifyArgs& va) {
    check_basics(cfg);
    SuiteReport rep;
    const std::string& s = va.suite;
    if (s == "lemma73") {
        rep = verify_lemma73(va.r_given ? cfg.r : 4, va.mubound, cfg.threads);
    } else if (s == "statement-a") {
        std::vector<std::vector<int>> mus;
        if (va.r_given || va.mubound_given) {
            for (int r = 1; r <= (va.r_given ? cfg.r : 3); ++r)
                for (auto& mu : int_grid(r, 1, va.mubound)) mus.push_back(mu);
        } else {
            mus = statement_a_default_mus();
        }
        rep = verify_statement_a(cfg.n, mus, cfg.threads);
    } else if (s == "thm71") {
        description("bzl", cfg.n);
        rep = verify_thm71(cfg.n, va.r_given ? cfg.r : 4, va.bound, va.mbound, cfg.threads);
    } else if (s == "thm82") {
        rep = verify_thm82(cfg.n, va.r_given ? cfg.r : 3, va.bound, va.mbound, cfg.threads);
    } else if (s == "stable") {
        if (!cfg.ell.empty()) {
            try {
                rep = verify_stable(cfg.ell, cfg.n, cfg.threads);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        } else {
            std::vector<int> rs = va.r_given ? std::vector<int>{cfg.r} : std::vector<int>{2, 3};
            rep = verify_stable_sweep(rs, va.ellbound, cfg.threads);
        }
    } else if (s == "twisted") {
        rep = verify_twisted(cfg.n, field_size(cfg), va.degbound, cfg.threads);
    } else if (s == "gauss-oracle") {
        rep = verify_gauss_oracle(cfg.n, field_size(cfg), va.bound, cfg.threads);
    } else if (s == "ff-crystal") {
        rep = verify_ff_crystal(cfg.n, field_size(cfg), va.r_given ? cfg.r : 2, va.bound, cfg.threads);
    } else {
        throw UsageError("unknown suite '" + s + "'");
    }
    if (cfg.format == "json") std::cout << rep.to_json().dump(2) << "\n";
    else std::cout << rep.text();
    return rep.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime-power coefficients of type C Weyl group multiple Dirichlet series"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "cover degree")->capture_default_str();
        sub->add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
        sub->add_option("--q", cfg.q, "field size; defaults to the least prime congruent to 1 mod 4n");
    };
    auto add_keys = [&](CLI::App* sub) {
        sub->add_option("--r", cfg.r, "rank")->capture_default_str();
        sub->add_option("--kmax", cfg.kmax, "largest k entry")->capture_default_str();
        sub->add_option("--mmax", cfg.mmax, "largest m entry")->capture_default_str();
        sub->add_option("--backend", cfg.backend, "symbolic, numeric or both")
            ->check(CLI::IsMember({"symbolic", "numeric", "both"}))
            ->capture_default_str();
    };

    auto* table = app.add_subcommand("table", "coefficient table for one description");
    add_common(table);
    add_keys(table);
    table->add_option("--desc", cfg.desc, "inductive, bzl, daleth or stable")->capture_default_str();
    table->add_option("--ell", cfg.ell, "comma separated ell for --desc stable")->delimiter(',');
    table->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    std::string parity = "odd";
    auto* stable = app.add_subcommand("stable", "stable support table with Weyl group words");
    stable->add_option("--ell", cfg.ell, "comma separated ell")->delimiter(',')->required();
    stable->add_option("--n", cfg.n, "cover degree; defaults to the least admissible degree of --parity");
    stable->add_option("--parity", parity, "odd or even, used when --n is absent")
        ->check(CLI::IsMember({"odd", "even"}))
        ->capture_default_str();
    stable->add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
    stable->add_option("--q", cfg.q, "field size for the numeric backend");
    stable->add_option("--backend", cfg.backend, "symbolic, numeric or both")
        ->check(CLI::IsMember({"symbolic", "numeric", "both"}))
        ->capture_default_str();
    stable->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    auto* compare = app.add_subcommand("compare", "pairwise difference of two descriptions");
    add_common(compare);
    add_keys(compare);
    compare->add_option("--a", cfg.desc, "first description")->capture_default_str();
    compare->add_option("--b", cfg.desc_b, "second description")->capture_default_str();

    std::string c_text, m_text;
    auto* ff = app.add_subcommand("ff-eval", "evaluate H(C; m) over F_q[t] by its defining sums");
    ff->add_option("--n", cfg.n, "cover degree")->capture_default_str();
    ff->add_option("--q", cfg.q, "field size; defaults to the least prime congruent to 1 mod 4n");
    ff->add_option("--C", c_text, "polynomials C_i as coefficient lists low to high, e.g. [[3,0,1],[1]]")->required();
    ff->add_option("--m", m_text, "polynomials m_i in the same format")->required();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify);
    verify->add_option("suite", va.suite, "lemma73, statement-a, thm71, thm82, stable, twisted, gauss-oracle or ff-crystal")
        ->required();
    auto* r_opt = verify->add_option("--r", cfg.r, "largest rank (fixed rank for stable)");
    verify->add_option("--bound", va.bound, "largest k entry, or largest k and l for gauss-oracle")->capture_default_str();
    verify->add_option("--mbound", va.mbound, "largest m entry")->capture_default_str();
    auto* mu_opt = verify->add_option("--mubound", va.mubound, "largest mu entry")->capture_default_str();
    verify->add_option("--degbound", va.degbound, "total degree bound for twisted")->capture_default_str();
    verify->add_option("--ellbound", va.ellbound, "largest ell entry for the stable sweep")->capture_default_str();
    verify->add_option("--ell", cfg.ell, "single ell for the stable suite")->delimiter(',');
    verify->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cfg.format = "json";

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*table) return cmd_table(cfg);
        if (*stable) {
            if (stable->count("--n") == 0) cfg.n = 0;
            return cmd_stable(cfg, parity);
        }
        if (*compare) return cmd_compare(cfg);
        if (*ff) return cmd_ff_eval(cfg, c_text, m_text);
        if (*verify) {
            va.r_given = r_opt->count() > 0;
            va.mubound_given = mu_opt->count() > 0;
            if (verify->count("--format") == 0) cfg.format = "text";
            return cmd_verify(cfg, va);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

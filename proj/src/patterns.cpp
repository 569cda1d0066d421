#include "wmds/patterns.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wmds {

ShortPattern::ShortPattern(int rank, std::vector<int> entries) : r(rank), d(std::move(entries)) {
    if (r < 1 || static_cast<int>(d.size()) != 2 * r - 1) throw std::invalid_argument("short pattern has wrong length");
}

int ShortPattern::prime(int i) const { return std::min(at(i), at(2 * r - i)); }

std::string ShortPattern::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

int eps(int i, int r) { return i == r ? 2 : 1; }

namespace {

int mu_at(const std::vector<int>& mu, int j) {
    if (j < 1 || j > static_cast<int>(mu.size())) throw std::out_of_range("mu index");
    return mu[j - 1];
}

// delta_i = d_i - d_{2r-i} expressed through the weight, 1 <= i <= r-1.
int resonance_gap(const std::vector<int>& k, int i) {
    int r = static_cast<int>(k.size());
    if (i < r - 1) return k[i - 1] - k[i];
    return k[r - 2] - 2 * k[r - 1];
}

}  // namespace

std::vector<int> weight_k(const ShortPattern& t) {
    int r = t.r;
    std::vector<int> k(r, 0);
    for (int j = 1; j <= r; ++j) k[r - 1] += t.at(2 * r - j);
    for (int i = 1; i < r; ++i) {
        int s = t.at(r);
        for (int j = i; j <= 2 * r - 1; ++j) s += t.at(j);
        for (int j = 1; j <= i - 1; ++j) s += t.at(2 * r - j);
        k[i - 1] = s;
    }
    return k;
}

bool is_strict(const std::vector<int>& k, const std::vector<int>& mu) {
    int r = static_cast<int>(k.size());
    if (r == 1) return true;
    for (int i = 1; i <= r - 2; ++i)
        if (!(resonance_gap(k, i + 1) < mu_at(mu, r - i) + resonance_gap(k, i))) return false;
    return 0 < mu_at(mu, 1) + resonance_gap(k, r - 1);
}

WeightVector classify(const std::vector<int>& k, const std::vector<int>& mu) {
    WeightVector w;
    w.k = k;
    w.strict = is_strict(k, mu);
    int r = static_cast<int>(k.size());
    for (int i = 1; i < r; ++i) {
        int g = resonance_gap(k, i);
        if (g != 0) {
            w.i0 = i;
            w.a = std::abs(g);
            w.cls = g > 0 ? Resonance::ClassI : Resonance::ClassII;
            break;
        }
    }
    return w;
}

WeightVector weight_of(const ShortPattern& t, const std::vector<int>& mu) { return classify(weight_k(t), mu); }

bool in_cq(const ShortPattern& t, const std::vector<int>& mu) {
    int r = t.r;
    for (int v : t.d)
        if (v < 0) return false;
    for (int j = 1; j <= r; ++j)
        if (t.at(j) > mu_at(mu, r + 1 - j)) return false;
    for (int j = 1; j <= r - 1; ++j)
        if (t.at(j + 1) + t.at(2 * r - j) > mu_at(mu, r - j) + t.at(j)) return false;
    return true;
}

bool in_bzl(const ShortPattern& t, const std::vector<int>& mu) {
    int r = t.r;
    for (int v : t.d)
        if (v < 0) return false;
    for (int j = 1; j <= r; ++j) {
        int rhs = mu_at(mu, r - j + 1) + t.prime(j - 1) - t.at(2 * r - j + 1);
        if (t.prime(j) > rhs) return false;
        if (j <= r - 1 && t.at(j) + t.prime(j) > rhs + t.at(2 * r - j)) return false;
    }
    return true;
}

std::vector<ShortPattern> enumerate_patterns(const std::vector<int>& mu) {
    int r = static_cast<int>(mu.size());
    std::vector<ShortPattern> out;
    std::vector<int> d(2 * r - 1, 0);
    // d_1..d_r are bounded by mu directly, then each d_{2r-j} by mu_{r-j} + d_j - d_{j+1}
    std::function<void(int)> tail = [&](int j) {
        if (j == r) {
            out.emplace_back(r, d);
            return;
        }
        int bound = mu_at(mu, r - j) + d[j - 1] - d[j];
        for (int v = 0; v <= bound; ++v) {
            d[2 * r - j - 1] = v;
            tail(j + 1);
        }
        d[2 * r - j - 1] = 0;
    };
    std::function<void(int)> head = [&](int j) {
        if (j > r) {
            tail(1);
            return;
        }
        for (int v = 0; v <= mu_at(mu, r + 1 - j); ++v) {
            d[j - 1] = v;
            head(j + 1);
        }
        d[j - 1] = 0;
    };
    head(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ShortPattern> enumerate_bzl_short(const std::vector<int>& mu) {
    int r = static_cast<int>(mu.size());
    std::vector<ShortPattern> out;
    std::vector<int> d(2 * r - 1, 0);
    auto at = [&](int i) { return (i <= 0 || i >= 2 * r) ? 0 : d[i - 1]; };
    auto pr = [&](int i) { return std::min(at(i), at(2 * r - i)); };
    // choose the pairs (d_j, d_{2r-j}) for j = 1..r in turn and test the j-th inequalities
    std::function<void(int)> rec = [&](int j) {
        if (j > r) {
            ShortPattern t(r, d);
            if (in_bzl(t, mu)) out.push_back(t);
            return;
        }
        int rhs = mu_at(mu, r - j + 1) + pr(j - 1) - at(2 * r - j + 1);
        // d_j <= mu_{r-j+1} + d'_{j-1} and d_{2r-j} <= mu_{r-j} + d'_j follow from the inequalities
        int bj = mu_at(mu, r - j + 1) + pr(j - 1);
        for (int a = 0; a <= bj; ++a) {
            d[j - 1] = a;
            if (j == r) {
                if (pr(j) <= rhs) rec(j + 1);
                continue;
            }
            int bb = mu_at(mu, r - j) + a;
            for (int b = 0; b <= bb; ++b) {
                d[2 * r - j - 1] = b;
                int p = std::min(a, b);
                if (p > rhs) continue;
                if (a + p > rhs + b) continue;
                rec(j + 1);
            }
            d[2 * r - j - 1] = 0;
        }
        d[j - 1] = 0;
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::map<std::vector<int>, std::vector<ShortPattern>> patterns_by_weight(const std::vector<int>& mu) {
    std::map<std::vector<int>, std::vector<ShortPattern>> out;
    for (auto& t : enumerate_patterns(mu)) out[weight_k(t)].push_back(t);
    return out;
}

std::vector<ShortPattern> patterns_of_weight(const std::vector<int>& mu, const std::vector<int>& k, bool bzl) {
    int r = static_cast<int>(mu.size());
    if (static_cast<int>(k.size()) != r) throw std::invalid_argument("patterns_of_weight: length mismatch");
    std::vector<ShortPattern> out;
    if (r == 0) return out;
    for (int v : k)
        if (v < 0) return out;
    int len = 2 * r - 1;
    std::vector<int> d(len, 0);
    // k_1 = d_r + sum of all entries (r >= 2), and k_1 = d_1 when r = 1
    std::function<void(int, int)> rec = [&](int idx, int budget) {
        if (idx == len) {
            ShortPattern t(r, d);
            if (weight_k(t) != k) return;
            if (bzl ? in_bzl(t, mu) : in_cq(t, mu)) out.push_back(t);
            return;
        }
        int cost = (r >= 2 && idx == r - 1) ? 2 : 1;
        for (int v = 0; v * cost <= budget; ++v) {
            d[idx] = v;
            rec(idx + 1, budget - v * cost);
        }
        d[idx] = 0;
    };
    rec(0, k[0]);
    std::sort(out.begin(), out.end());
    return out;
}

std::string kind_name(ArrayKind k) {
    switch (k) {
        case ArrayKind::Gamma: return "Gamma";
        case ArrayKind::Delta: return "Delta";
        case ArrayKind::GammaIota: return "GammaIota";
        case ArrayKind::DeltaIota: return "DeltaIota";
        case ArrayKind::GammaPrime: return "GammaPrime";
        case ArrayKind::DeltaPrime: return "DeltaPrime";
        case ArrayKind::GammaPrimeIota: return "GammaPrimeIota";
        case ArrayKind::DeltaPrimeIota: return "DeltaPrimeIota";
        case ArrayKind::GammaFlat: return "GammaFlat";
        case ArrayKind::DeltaFlat: return "DeltaFlat";
        case ArrayKind::Psi: return "Psi";
    }
    return "?";
}

bool DecoratedArray::strict() const {
    if (forced_nonstrict) return false;
    for (const auto& e : entries)
        if (e.boxed && e.circled) return false;
    return true;
}

std::string DecoratedArray::dump() const {
    std::ostringstream os;
    os << kind_name(kind) << " r=" << r << " prefactor=q^" << prefactor_qexp;
    if (N) os << " N=" << N;
    if (forced_nonstrict) os << " forced-nonstrict";
    os << "\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (top_row && static_cast<int>(i) == top_row) os << "--\n";
        const auto& e = entries[i];
        os << e.value << (e.boxed ? "[B]" : "") << (e.circled ? "[C]" : "") << "\n";
    }
    return os.str();
}

namespace {

long long cbar(const ShortPattern& t, int j) {
    int r = t.r;
    if (j <= 0) return 0;
    long long s = t.prime(j);
    for (int i = 1; i < j; ++i) s += t.at(2 * r - i);
    return s;
}

long long c_top(const ShortPattern& t, const std::vector<int>& k, int j) {
    int r = t.r;
    if (j == r) {
        long long s = 0;
        for (int i = 1; i <= r; ++i) s += t.at(2 * r - i);
        return s;
    }
    return k[j - 1] - cbar(t, j);
}

long long frak_bar(const ShortPattern& t, int j) {
    long long s = 0;
    for (int i = 1; i <= j; ++i) s += t.at(2 * t.r - i);
    return s;
}

long long frak(const ShortPattern& t, int j) {
    int r = t.r;
    long long s = frak_bar(t, r) + t.at(r);
    for (int i = j; i <= r - 1; ++i) s += t.at(i);
    return s;
}

}  // namespace

long long gamma_entry(const ShortPattern& t, int pos) {
    auto k = weight_k(t);
    return pos <= t.r ? c_top(t, k, pos) : cbar(t, 2 * t.r - pos);
}

long long delta_entry(const ShortPattern& t, int pos) {
    if (pos >= 2 * t.r) return 0;
    return pos <= t.r ? frak(t, pos) : frak_bar(t, 2 * t.r - pos);
}

long long iota_base(const ShortPattern& t) {
    auto k = weight_k(t);
    return c_top(t, k, 1) + cbar(t, 1);
}

int default_iota_N(const ShortPattern& t, int n) {
    long long k1 = iota_base(t);
    return static_cast<int>(n * (k1 / n + 1));
}

namespace {

DecoratedArray gamma_array(const ShortPattern& t, const std::vector<int>& mu) {
    int r = t.r;
    DecoratedArray arr;
    arr.kind = ArrayKind::Gamma;
    arr.r = r;
    arr.entries.resize(2 * r - 1);
    for (int p = 1; p <= 2 * r - 1; ++p) {
        ArrayEntry& e = arr.entries[p - 1];
        e.value = gamma_entry(t, p);
        e.long_root = p == r;
        if (p < r) {
            int j = p;
            e.boxed = t.at(j) + t.prime(j) ==
                      mu_at(mu, r + 1 - j) + t.prime(j - 1) - t.at(2 * r + 1 - j) + t.at(2 * r - j);
            e.circled = t.at(j) == t.prime(j) && t.prime(j + 1) == 0;
        } else {
            int j = 2 * r - p;
            e.boxed = t.prime(j) == mu_at(mu, r + 1 - j) + t.prime(j - 1) - t.at(2 * r + 1 - j);
            e.circled = t.prime(j) == 0 && t.at(2 * r + 1 - j) == t.prime(j - 1);
        }
    }
    return arr;
}

DecoratedArray delta_array(const ShortPattern& t, const std::vector<int>& mu) {
    int r = t.r;
    DecoratedArray arr;
    arr.kind = ArrayKind::Delta;
    arr.r = r;
    arr.entries.resize(2 * r - 1);
    for (int p = 1; p <= 2 * r - 1; ++p) {
        ArrayEntry& e = arr.entries[p - 1];
        e.value = delta_entry(t, p);
        if (p <= r) {
            e.boxed = t.at(p) == mu_at(mu, r + 1 - p);
        } else {
            int j = 2 * r - p;
            e.boxed = t.at(j + 1) == mu_at(mu, r - j) + t.at(j) - t.at(2 * r - j);
        }
        e.circled = (p > 1 && t.at(p - 1) == 0) || e.value == 0;
    }
    long long s = 0;
    for (int i = 1; i <= r; ++i) s += t.at(2 * r - i);
    arr.prefactor_qexp = static_cast<int>(-s);
    return arr;
}

DecoratedArray gamma_iota_array(const ShortPattern& t, const std::vector<int>& mu, int N) {
    int r = t.r;
    DecoratedArray arr = gamma_array(t, mu);
    arr.kind = ArrayKind::GammaIota;
    arr.N = N;
    long long shift = N - iota_base(t);
    for (int p = 1; p <= 2 * r - 1; ++p) {
        ArrayEntry& e = arr.entries[p - 1];
        e.value += shift;
        if (p <= r) {
            int j = p;
            e.circled = t.at(j - 1) == t.prime(j - 1) && t.prime(j) == 0;
        } else {
            int j = 2 * r - p;
            e.circled = t.prime(j + 1) == 0 && t.at(2 * r - j) == t.prime(j);
        }
    }
    return arr;
}

DecoratedArray delta_iota_array(const ShortPattern& t, const std::vector<int>& mu, int N) {
    int r = t.r;
    DecoratedArray arr;
    arr.kind = ArrayKind::DeltaIota;
    arr.r = r;
    arr.N = N;
    arr.entries.resize(2 * r - 1);
    long long shift = N - iota_base(t);
    for (int p = 1; p <= 2 * r - 1; ++p) {
        ArrayEntry& e = arr.entries[p - 1];
        e.value = shift + delta_entry(t, p + 1);
        if (p < r) {
            e.boxed = t.at(p + 1) == mu_at(mu, r - p);
        } else {
            int j = 2 * r - p;
            e.boxed = t.at(j) == mu_at(mu, r + 1 - j) + t.at(j - 1) - t.at(2 * r - j + 1);
        }
        e.circled = t.at(p) == 0;
    }
    long long s = 0;
    for (int i = 1; i <= r; ++i) s += t.at(i);
    arr.prefactor_qexp = static_cast<int>(s);
    return arr;
}

// Two-row layouts for totally resonant weights: top row cbar_{1,r..1}, bottom row c_{1,r-1..1}.
DecoratedArray gamma_prime_resonant(const ShortPattern& t, const std::vector<int>& mu, long long bottom_shift,
                                    bool long_root) {
    int r = t.r;
    auto k = weight_k(t);
    DecoratedArray arr;
    arr.r = r;
    arr.top_row = r;
    std::vector<bool> box(r + 1, false), circ(r + 2, false);
    for (int j = 1; j <= r; ++j) {
        long long diff = cbar(t, j) - cbar(t, j - 1);
        circ[j] = diff == 0;
        box[j] = diff == mu_at(mu, r - j + 1);
    }
    for (int j = r; j >= 1; --j) {
        ArrayEntry e;
        e.value = j == r ? c_top(t, k, r) : cbar(t, j);
        e.boxed = box[j];
        e.circled = circ[j];
        e.long_root = long_root && j == r;
        arr.entries.push_back(e);
    }
    for (int j = r - 1; j >= 1; --j) {
        ArrayEntry e;
        e.value = c_top(t, k, j) - bottom_shift;
        e.circled = circ[j + 1];
        e.boxed = box[j];
        arr.entries.push_back(e);
    }
    return arr;
}

// Top row frak_{1,r..1}, bottom row frakbar_{1,r-1..1}.
DecoratedArray delta_prime_resonant(const ShortPattern& t, const std::vector<int>& mu, long long top_shift) {
    int r = t.r;
    DecoratedArray arr;
    arr.r = r;
    arr.top_row = r;
    std::vector<bool> box(r + 2, false), circ(r + 2, false);
    for (int j = 1; j <= r; ++j) {
        long long next = j < r ? frak(t, j + 1) : frak_bar(t, r - 1);
        long long diff = frak(t, j) - next;
        circ[j] = diff == 0;
        box[j] = j < r ? diff == mu_at(mu, r - j + 1) : diff == 2LL * mu_at(mu, 1);
    }
    for (int j = r; j >= 1; --j) {
        ArrayEntry e;
        e.value = frak(t, j) - top_shift;
        e.boxed = box[j];
        e.circled = circ[j];
        arr.entries.push_back(e);
    }
    for (int j = r - 1; j >= 1; --j) {
        ArrayEntry e;
        e.value = frak_bar(t, j);
        e.circled = circ[j];
        e.boxed = box[j + 1];
        arr.entries.push_back(e);
    }
    return arr;
}

void clear(ArrayEntry& e) {
    e.boxed = false;
    e.circled = false;
}

}  // namespace

DecoratedArray build_array(const ShortPattern& t, const std::vector<int>& mu, ArrayKind kind, std::optional<int> N) {
    int r = t.r;
    if (static_cast<int>(mu.size()) != r) throw std::invalid_argument("mu has wrong length");
    bool iota = kind == ArrayKind::GammaIota || kind == ArrayKind::DeltaIota || kind == ArrayKind::GammaPrimeIota ||
                kind == ArrayKind::DeltaPrimeIota;
    if (iota && !N) throw std::invalid_argument("iota array requires N");
    if (iota && *N <= iota_base(t)) throw std::invalid_argument("iota shift N must exceed k_1");
    WeightVector w = weight_of(t, mu);

    switch (kind) {
        case ArrayKind::Gamma: return gamma_array(t, mu);
        case ArrayKind::Delta: return delta_array(t, mu);
        case ArrayKind::GammaIota: return gamma_iota_array(t, mu, *N);
        case ArrayKind::DeltaIota: return delta_iota_array(t, mu, *N);
        case ArrayKind::GammaFlat:
        case ArrayKind::DeltaFlat: {
            if (w.cls != Resonance::TotallyResonant) throw std::invalid_argument("flat arrays need a totally resonant weight");
            long long kr = w.k[r - 1];
            DecoratedArray arr = kind == ArrayKind::GammaFlat ? gamma_prime_resonant(t, mu, kr, false)
                                                              : delta_prime_resonant(t, mu, kr);
            arr.kind = kind;
            return arr;
        }
        case ArrayKind::Psi: throw std::invalid_argument("component blocks are built by psi_arrays");
        default: break;
    }

    bool equality_case = r >= 2 && resonance_gap(w.k, 1) == mu_at(mu, r);
    int i0 = w.i0;
    if (w.cls == Resonance::TotallyResonant) {
        if (kind == ArrayKind::GammaPrime) {
            DecoratedArray arr = gamma_prime_resonant(t, mu, 0, true);
            arr.kind = kind;
            return arr;
        }
        if (kind == ArrayKind::DeltaPrime) {
            DecoratedArray arr = delta_prime_resonant(t, mu, 0);
            arr.kind = kind;
            long long s = 0;
            for (int i = 1; i <= r; ++i) s += t.at(i);
            arr.prefactor_qexp = static_cast<int>(-s);
            return arr;
        }
        throw std::invalid_argument("primed iota arrays need a weight in Class I or II");
    }

    DecoratedArray arr;
    if (w.cls == Resonance::ClassI) {
        switch (kind) {
            case ArrayKind::GammaPrime: {
                arr = gamma_array(t, mu);
                if (!equality_case) {
                    clear(arr.entries[2 * r - i0 - 1]);
                    ArrayEntry& e = arr.entries[i0 - 1];
                    e.boxed = t.at(2 * r - i0) == mu_at(mu, r + 1 - i0) - w.a;
                    e.circled = t.at(2 * r - i0) == 0;
                }
                break;
            }
            case ArrayKind::GammaPrimeIota: {
                arr = gamma_iota_array(t, mu, *N);
                if (equality_case) {
                    arr.forced_nonstrict = true;
                } else {
                    clear(arr.entries[2 * r - i0 - 1]);
                    for (int j = i0 + 1; j < 2 * r - i0; ++j)
                        arr.entries[j - 1].circled = arr.entries[j - 1].value == arr.entries[j].value;
                }
                break;
            }
            case ArrayKind::DeltaPrime: {
                arr = delta_array(t, mu);
                if (!equality_case) {
                    clear(arr.entries[2 * r - i0 - 1]);
                    arr.entries[2 * r - i0 - 2].circled = t.at(2 * r - i0 - 1) == 0;
                }
                break;
            }
            case ArrayKind::DeltaPrimeIota: {
                arr = delta_iota_array(t, mu, *N);
                if (equality_case) {
                    arr.forced_nonstrict = true;
                } else {
                    clear(arr.entries[2 * r - i0 - 2]);
                    arr.entries[2 * r - i0 - 3].circled = t.at(2 * r - i0 - 1) == 0;
                }
                break;
            }
            default: throw std::invalid_argument("unsupported array kind");
        }
    } else {
        switch (kind) {
            case ArrayKind::GammaPrime: {
                arr = gamma_array(t, mu);
                arr.entries[i0 - 1].circled = false;
                for (int j = i0 + 1; j <= 2 * r - i0 - 1; ++j)
                    arr.entries[j - 1].circled = arr.entries[j - 1].value == arr.entries[j - 2].value;
                break;
            }
            case ArrayKind::GammaPrimeIota: {
                arr = gamma_iota_array(t, mu, *N);
                clear(arr.entries[i0 - 1]);
                ArrayEntry& e = arr.entries[2 * r - i0 - 1];
                e.boxed = t.at(i0) == mu_at(mu, r + 1 - i0);
                e.circled = t.at(i0) == 0;
                break;
            }
            case ArrayKind::DeltaPrime: {
                arr = delta_array(t, mu);
                clear(arr.entries[i0]);
                if (i0 > 1) {
                    ArrayEntry& e = arr.entries[2 * r - i0];
                    e.boxed = t.at(i0) == mu_at(mu, r + 1 - i0);
                    e.circled = t.at(i0) == 0;
                } else {
                    arr.entries[0].circled = t.at(1) == 0;
                }
                break;
            }
            case ArrayKind::DeltaPrimeIota: {
                arr = delta_iota_array(t, mu, *N);
                clear(arr.entries[i0 - 1]);
                ArrayEntry& e = arr.entries[2 * r - i0 - 1];
                e.boxed = t.at(i0) == mu_at(mu, r + 1 - i0);
                e.circled = t.at(i0) == 0;
                break;
            }
            default: throw std::invalid_argument("unsupported array kind");
        }
    }
    arr.kind = kind;
    return arr;
}

GaussElement entry_weight(const ArrayEntry& e, int n) {
    long long c = e.value;
    if (e.boxed && e.circled) return GaussElement::zero(n);
    if (e.circled) return GaussElement::q_power(n, static_cast<int>(c));
    if (e.boxed) {
        if (c == 0) return GaussElement::one(n);
        return gs_prime_power(e.long_root ? 2 : 1, static_cast<int>(c - 1), static_cast<int>(c), n);
    }
    // a long root sees the cover through n / gcd(n, 2)
    long long eff = e.long_root ? 2 * c : c;
    if (eff % n == 0) return GaussElement::q_power(n, static_cast<int>(c)) - GaussElement::q_power(n, static_cast<int>(c - 1));
    return GaussElement::zero(n);
}

GaussElement array_weight(const DecoratedArray& arr, int n) {
    if (arr.forced_nonstrict) return GaussElement::zero(n);
    GaussElement g = GaussElement::q_power(n, arr.prefactor_qexp);
    for (const auto& e : arr.entries) {
        g *= entry_weight(e, n);
        if (g.is_zero()) break;
    }
    return g;
}

Split classify_and_split(const ShortPattern& t, const std::vector<int>& mu) {
    WeightVector w = weight_of(t, mu);
    if (w.cls == Resonance::TotallyResonant) throw std::invalid_argument("split needs a weight in Class I or II");
    int r = t.r, i0 = w.i0;
    Split s;
    std::vector<int> star, sharp;
    for (int i = 1; i < i0; ++i) star.push_back(t.at(i));
    star.push_back(t.prime(i0));
    for (int i = 2 * r - i0 + 1; i <= 2 * r - 1; ++i) star.push_back(t.at(i));
    for (int i = i0 + 1; i <= 2 * r - i0 - 1; ++i) sharp.push_back(t.at(i));
    s.t_star = ShortPattern(i0, star);
    s.t_sharp = ShortPattern(r - i0, sharp);
    for (int j = r + 1 - i0; j <= r; ++j) s.mu_star.push_back(mu_at(mu, j));
    for (int j = 1; j <= r - i0; ++j) s.mu_sharp.push_back(mu_at(mu, j));
    if (w.cls == Resonance::ClassI) s.mu_star[0] -= w.a;
    else s.mu_sharp.back() -= w.a;
    return s;
}

StatementASums statement_a_sums(const std::vector<int>& k, const std::vector<int>& mu, int n, int N) {
    if (!is_strict(k, mu)) throw std::invalid_argument("statement_a_sums requires a strict weight");
    int r = static_cast<int>(mu.size());
    StatementASums s;
    s.h_gamma = s.h_delta = s.h_gamma_iota = s.h_delta_iota = GaussElement::zero(n);
    long long k1 = r == 1 ? 2LL * k[0] : k[0];
    s.N = N ? N : static_cast<int>(n * (k1 / n + 1));
    for (const auto& t : enumerate_patterns(mu)) {
        if (weight_k(t) != k) continue;
        s.h_gamma += array_weight(build_array(t, mu, ArrayKind::Gamma), n);
        s.h_delta += array_weight(build_array(t, mu, ArrayKind::Delta), n);
        s.h_gamma_iota += array_weight(build_array(t, mu, ArrayKind::GammaIota, s.N), n);
        s.h_delta_iota += array_weight(build_array(t, mu, ArrayKind::DeltaIota, s.N), n);
    }
    return s;
}

}  // namespace wmds

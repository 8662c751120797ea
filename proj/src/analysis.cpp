#include "lrc/analysis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace lrc::analysis {

using construction::CodeParams;
using gf::Elem;
using linalg::Echelon;

int d_opt(int n, int k, int r) {
    if (r < 1 || r > k || k > n) throw std::invalid_argument("d_opt: need 1 <= r <= k <= n");
    const int ceil_k = (k + r - 1) / r;
    return std::max(n - k - ceil_k + 2, 0);
}

const char* rule_name(PredictionRule rule) {
    switch (rule) {
        case PredictionRule::DivisibleExact: return "divisible-exact";
        case PredictionRule::FractionalExact: return "fractional-exact";
        case PredictionRule::GeneralRange: return "general-range";
        case PredictionRule::Infeasible: return "infeasible";
    }
    return "?";
}

namespace {

long long floor_div(long long a, long long b) {
    // b > 0
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

}  // namespace

int non_divisible_lower_bound(int n, int k, int r) {
    // n - k - floor(k/r - n/(r+1)) - floor(n/(r+1)), evaluated exactly:
    // k/r - n/(r+1) = (k(r+1) - nr) / (r(r+1))
    const long long num = 1ll * k * (r + 1) - 1ll * n * r;
    const long long den = 1ll * r * (r + 1);
    return static_cast<int>(n - k - floor_div(num, den) - n / (r + 1));
}

PredictionRange predicted_distance(int n, int k, int r) {
    const auto verdict = construction::feasibility(n, k, r);
    if (verdict.mode == Feasibility::Invalid)
        throw std::invalid_argument("predicted_distance: " + verdict.reason);
    const int dopt = d_opt(n, k, r);

    if (verdict.mode == Feasibility::Infeasible) {
        // D_q := 0 when the construction does not cover the parameters
        return {0, dopt, dopt == 0, PredictionRule::Infeasible};
    }
    if (n % (r + 1) == 0) return {dopt, dopt, true, PredictionRule::DivisibleExact};

    // {k/r} < {n/(r+1)}  <=>  (k mod r)(r+1) < (n mod (r+1)) r
    const bool frac_lt = (k % r) * (r + 1) < (n % (r + 1)) * r;
    if (frac_lt && k % r != 0)
        return {dopt, dopt, true, PredictionRule::FractionalExact};

    int lower = dopt - 1;
    if (n % (r + 1) >= 2) lower = std::max(lower, non_divisible_lower_bound(n, k, r));
    return {lower, dopt, false, PredictionRule::GeneralRange};
}

Budget Budget::scaled(double factor) const {
    auto scale = [factor](std::uint64_t v) {
        return static_cast<std::uint64_t>(static_cast<double>(v) * factor);
    };
    return Budget{scale(max_messages), scale(max_pair_ops), scale(max_search_nodes)};
}

namespace {

// min weight over nonzero messages; q-ary Gray order changes one message
// digit per step (its encoding steps +1 mod q), so each codeword is one
// scaled row-add away. In prime fields the step delta is always 1; in
// GF(2^m) it is sub(enc+1, enc) and genuinely varies.
int message_enum_distance(const LinearLrcCode& code, const Budget& budget) {
    const Matrix& g = code.generator;
    const auto& f = *g.field();
    const int n = g.cols(), k = g.rows();
    const std::uint64_t q = code.params.q;

    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        if (total > budget.max_messages / q)
            throw std::runtime_error("message enumeration exceeds budget (q^k too large)");
        total *= q;
    }
    if (total > budget.max_messages)
        throw std::runtime_error("message enumeration exceeds budget (q^k too large)");

    std::vector<Elem> word(n, 0);
    std::vector<Elem> odometer(k, 0);
    std::vector<Elem> digits(k, 0);  // current gray message, digit encodings
    int best = n + 1;
    while (true) {
        int i = 0;
        while (i < k && odometer[i] == q - 1) odometer[i++] = 0;
        if (i == k) break;
        ++odometer[i];
        const Elem old_digit = digits[i];
        const Elem new_digit = old_digit + 1 == q ? 0 : old_digit + 1;
        digits[i] = new_digit;
        const Elem delta = f.sub(new_digit, old_digit);
        const auto row = g.row(i);
        int weight = 0;
        if (delta == 1) {
            for (int j = 0; j < n; ++j) {
                word[j] = f.add(word[j], row[j]);
                weight += word[j] != 0;
            }
        } else {
            for (int j = 0; j < n; ++j) {
                word[j] = f.add(word[j], f.mul(delta, row[j]));
                weight += word[j] != 0;
            }
        }
        best = std::min(best, weight);
    }
    return best;
}

// d = size of the smallest linearly dependent column subset of H
int parity_check_distance(const LinearLrcCode& code, const Budget& budget) {
    const Matrix h = linalg::parity_check(code.generator);
    const int n = h.cols();
    std::uint64_t nodes = 0;

    // DFS over column subsets of fixed size carrying an echelon; absorb
    // failure at full depth exhibits a dependent subset of that size
    auto dfs = [&](auto&& self, int next, int depth, int size, const Echelon& ech) -> bool {
        for (int c = next; c <= n - (size - depth); ++c) {
            if (++nodes > budget.max_search_nodes)
                throw std::runtime_error("parity-check distance search exceeds budget");
            Echelon ext = ech;
            if (!ext.absorb(h.column(c))) {
                if (depth + 1 == size) return true;
                continue;  // dependent prefix: a smaller subset already covers it
            }
            if (depth + 1 < size && self(self, c + 1, depth + 1, size, ext)) return true;
        }
        return false;
    };
    for (int s = 1; s <= n; ++s) {
        if (dfs(dfs, 0, 0, s, Echelon(h.field(), h.rows()))) return s;
    }
    throw std::logic_error("parity_check_distance: no dependent subset found");
}

}  // namespace

int min_distance_bruteforce(const LinearLrcCode& code, const Budget& budget,
                            DistancePath path) {
    if (path == DistancePath::MessageEnum) return message_enum_distance(code, budget);
    if (path == DistancePath::ParityCheck) return parity_check_distance(code, budget);

    // estimated operation counts decide the path
    const int n = code.params.n, k = code.params.k;
    long double msg_cost = static_cast<long double>(n);
    for (int i = 0; i < k; ++i) msg_cost *= static_cast<long double>(code.params.q);
    long double h_cost = 0;
    for (int s = 1; s <= n - k + 1; ++s)
        h_cost += static_cast<long double>(construction::binomial(n, s)) * s * (n - k);
    return msg_cost <= h_cost ? message_enum_distance(code, budget)
                              : parity_check_distance(code, budget);
}

namespace {

// true iff some nontrivial union of m circuits has size < m + k
bool union_violation(const std::vector<linalg::Circuit>& circuits, int m, int k,
                     std::uint64_t max_nodes) {
    const int threshold = m + k;
    const int total = static_cast<int>(circuits.size());
    std::uint64_t nodes = 0;
    std::vector<int> chosen;

    auto nontrivial = [&](const std::vector<int>& sel) {
        for (std::size_t i = 0; i < sel.size(); ++i) {
            std::uint64_t others = 0;
            for (std::size_t j = 0; j < sel.size(); ++j)
                if (j != i) others |= circuits[sel[j]].mask;
            if ((circuits[sel[i]].mask & ~others) == 0) return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self, int next, std::uint64_t unn) -> bool {
        if (static_cast<int>(chosen.size()) == m)
            return std::popcount(unn) < threshold && nontrivial(chosen);
        for (int c = next; c < total; ++c) {
            if (++nodes > max_nodes)
                throw std::runtime_error("circuit union search exceeds budget");
            const std::uint64_t unn2 = unn | circuits[c].mask;
            if (std::popcount(unn2) >= threshold) continue;  // unions only grow
            if ((circuits[c].mask & ~unn) == 0) continue;    // contributes nothing: trivial
            chosen.push_back(c);
            if (self(self, c + 1, unn2)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return dfs(dfs, 0, 0);
}

}  // namespace

int min_distance_circuits(const LinearLrcCode& code, const Budget& budget) {
    const int n = code.params.n, k = code.params.k;
    const auto cs = linalg::circuits(code.generator, k + 1, budget.max_search_nodes);
    for (int m = 1;; ++m) {
        if (m > static_cast<int>(cs.size()) ||
            !union_violation(cs, m, k, budget.max_search_nodes))
            return n - k - m + 2;  // mu = m
    }
}

int locality_linear(const Matrix& g, int r_target) {
    const int n = g.cols();
    int worst = 0;
    std::vector<int> subset;
    for (int j = 0; j < n; ++j) {
        const auto v = g.column(j);
        std::vector<int> others;
        for (int c = 0; c < n; ++c)
            if (c != j) others.push_back(c);

        if (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; })) continue;

        int found = -1;
        for (int s = 1; s <= r_target && found < 0; ++s) {
            subset.clear();
            auto combos = [&](auto&& self, int from) -> bool {
                if (static_cast<int>(subset.size()) == s)
                    return linalg::in_span(g, v, subset);
                for (int t = from; t < static_cast<int>(others.size()); ++t) {
                    subset.push_back(others[t]);
                    if (self(self, t + 1)) return true;
                    subset.pop_back();
                }
                return false;
            };
            if (combos(combos, 0)) found = s;
        }
        if (found < 0) return r_target + 1;
        worst = std::max(worst, found);
    }
    return worst;
}

std::uint8_t packed_symbol(std::uint64_t word, int pos) {
    return static_cast<std::uint8_t>(word >> (2 * pos) & 3);
}

int packed_distance(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a ^ b;
    x = (x | (x >> 1)) & 0x5555555555555555ull;
    return std::popcount(x);
}

namespace {

int bucketed_pairwise(const std::vector<std::uint64_t>& book, int n,
                      const Budget& budget) {
    const auto size = book.size();
    for (int blocks = 4;; blocks *= 2) {
        const int nb = std::min(blocks, n);
        int best = n + 1;
        std::uint64_t ops = 0;
        for (int bi = 0; bi < nb; ++bi) {
            const int lo = bi * n / nb, hi = (bi + 1) * n / nb;
            std::uint64_t mask = 0;
            for (int t = lo; t < hi; ++t) mask |= 3ull << (2 * t);
            std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
            buckets.reserve(size / 4);
            for (std::uint32_t i = 0; i < size; ++i) buckets[book[i] & mask].push_back(i);
            for (const auto& entry : buckets) {
                const auto& members = entry.second;
                for (std::size_t x = 0; x < members.size(); ++x) {
                    for (std::size_t y = x + 1; y < members.size(); ++y) {
                        best = std::min(best,
                                        packed_distance(book[members[x]], book[members[y]]));
                    }
                    ops += members.size() - x;
                    if (ops > budget.max_pair_ops)
                        throw std::runtime_error("pairwise distance exceeds budget");
                }
            }
        }
        // every pair at distance <= nb-1 collides in some block
        if (best <= nb - 1) return best;
        if (nb >= n) return n;  // all remaining pairs are at full distance
    }
}

}  // namespace

int min_pairwise_distance(const std::vector<std::uint64_t>& book, int n,
                          const Budget& budget) {
    if (book.size() < 2) throw std::invalid_argument("pairwise distance needs >= 2 words");
    const std::uint64_t pairs = book.size() * (book.size() - 1) / 2;
    if (pairs > budget.max_pair_ops) return bucketed_pairwise(book, n, budget);

    int best = n + 1;
    for (std::size_t i = 0; i < book.size() && best > 1; ++i)
        for (std::size_t j = i + 1; j < book.size(); ++j)
            best = std::min(best, packed_distance(book[i], book[j]));
    return best;
}

std::optional<std::vector<int>> functional_repair_set(
    const std::vector<std::uint64_t>& book, int n, int j, int r_target) {
    if (r_target > 13)
        throw std::invalid_argument("functional repair search limited to sets of size 13");
    std::vector<int> others;
    for (int c = 0; c < n; ++c)
        if (c != j) others.push_back(c);

    std::vector<int> subset;
    std::vector<std::int8_t> table;
    auto determined = [&]() {
        table.assign(1ull << (2 * subset.size()), -1);
        for (const std::uint64_t w : book) {
            std::uint64_t key = 0;
            for (std::size_t t = 0; t < subset.size(); ++t)
                key |= std::uint64_t(packed_symbol(w, subset[t])) << (2 * t);
            const std::int8_t val = static_cast<std::int8_t>(packed_symbol(w, j));
            if (table[key] < 0) table[key] = val;
            else if (table[key] != val) return false;
        }
        return true;
    };

    for (int s = 1; s <= r_target; ++s) {
        std::optional<std::vector<int>> hit;
        auto combos = [&](auto&& self, int from) -> bool {
            if (static_cast<int>(subset.size()) == s) {
                if (determined()) {
                    hit = subset;
                    return true;
                }
                return false;
            }
            for (int t = from; t < static_cast<int>(others.size()); ++t) {
                subset.push_back(others[t]);
                if (self(self, t + 1)) return true;
                subset.pop_back();
            }
            return false;
        };
        subset.clear();
        if (combos(combos, 0)) return hit;
    }
    return std::nullopt;
}

int locality_functional(const std::vector<std::uint64_t>& book, int n, int r_target) {
    int worst = 0;
    for (int j = 0; j < n; ++j) {
        const auto set = functional_repair_set(book, n, j, r_target);
        if (!set) return r_target + 1;
        worst = std::max(worst, static_cast<int>(set->size()));
    }
    return worst;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Optimal: return "optimal";
        case Verdict::AlmostOptimal: return "almost-optimal";
        case Verdict::Below: return "below";
        case Verdict::Invalid: return "invalid";
    }
    return "?";
}

Verdict verdict_for(int d, int dopt, bool locality_ok) {
    if (!locality_ok) return Verdict::Invalid;
    if (d == dopt) return Verdict::Optimal;
    if (d == dopt - 1) return Verdict::AlmostOptimal;
    return Verdict::Below;
}

CodeReport analyze(const LinearLrcCode& code, const Budget& budget) {
    CodeReport report;
    report.n = code.params.n;
    report.k = code.params.k;
    report.r_claimed = code.params.r;

    if (linalg::rank(code.generator) != code.params.k) {
        report.verdict = Verdict::Invalid;
        report.locality_ok = false;
        return report;
    }

    const int d_bf = min_distance_bruteforce(code, budget);
    const int d_ci = min_distance_circuits(code, budget);
    if (d_bf != d_ci)
        throw std::runtime_error("distance oracle disagreement: bruteforce " +
                                 std::to_string(d_bf) + " vs circuits " +
                                 std::to_string(d_ci) + " (implementation bug)");
    report.d = d_bf;

    report.r_measured = locality_linear(code.generator, code.params.r);
    report.locality_ok = report.r_measured <= code.params.r;
    const int r_eval = report.locality_ok ? report.r_claimed : report.r_measured;
    report.dopt = d_opt(report.n, report.k, std::min(r_eval, report.k));
    if (report.locality_ok && report.d > report.dopt)
        throw std::runtime_error("measured d exceeds the locality bound (implementation bug)");
    report.verdict = verdict_for(report.d, report.dopt, report.locality_ok);
    return report;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

std::vector<SweepRow> sweep(int n_max, std::uint64_t seed, const Budget& budget) {
    std::vector<SweepRow> rows;
    for (int n = 2; n <= n_max; ++n) {
        for (int k = 1; k < n; ++k) {
            for (int r = 1; r <= k; ++r) {
                const auto verdict = construction::feasibility(n, k, r);
                SweepRow row;
                row.n = n;
                row.k = k;
                row.r = r;
                row.mode = verdict.mode;
                row.dopt = d_opt(n, k, r);
                row.pred = predicted_distance(n, k, r);
                row.seed = splitmix64(seed ^ (std::uint64_t(n) << 40) ^
                                      (std::uint64_t(k) << 20) ^ std::uint64_t(r));
                if (verdict.mode == Feasibility::Infeasible) {
                    rows.push_back(std::move(row));
                    continue;
                }
                try {
                    row.q = construction::smallest_supported_q(n, k);
                    const LinearLrcCode code =
                        verdict.mode == Feasibility::Direct
                            ? construction::build(CodeParams{n, k, r, row.q}, row.seed)
                            : construction::build_with_replication(n, k, r, row.q, row.seed);
                    const CodeReport report = analyze(code, budget);
                    row.d_measured = report.d;
                    row.r_measured = report.r_measured;
                    row.verdict = report.verdict;
                    row.within_prediction =
                        report.d >= row.pred.lower && report.d <= row.pred.upper;
                } catch (const std::exception& e) {
                    row.error = e.what();
                    row.within_prediction = false;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

}  // namespace lrc::analysis

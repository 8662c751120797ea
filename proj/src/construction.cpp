#include "lrc/construction.hpp"

#include <cassert>
#include <random>
#include <stdexcept>

namespace lrc::construction {

using linalg::Echelon;

FeasibilityVerdict feasibility(int n, int k, int r) {
    if (n < 1 || k < 1 || r < 1) return {Feasibility::Invalid, 0, "n, k, r must be positive"};
    if (r > k) return {Feasibility::Invalid, 0, "locality r exceeds dimension k"};
    if (k >= n) return {Feasibility::Invalid, 0, "dimension k must be below length n"};

    const int ceil_n = (n + r) / (r + 1);
    const int ceil_k = (k + r - 1) / r;
    const int dopt = std::max(n - k - ceil_k + 2, 0);

    if (n - ceil_n >= k) {
        if (n % (r + 1) != 1)
            return {Feasibility::Direct, dopt, "direct construction applies"};
        return {Feasibility::Replicate, dopt,
                "n = 1 mod (r+1); replicate a column of the (n-1, k, r) code"};
    }
    // n - ceil(n/(r+1)) + 1 <= k forces d_opt <= 1
    assert(dopt <= 1);
    if (dopt == 0)
        return {Feasibility::Infeasible, 0, "d_opt = 0: no code exists for (n, k, r)"};
    return {Feasibility::Infeasible, 1,
            "d_opt = 1: unknown feasibility (not covered by the construction)"};
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;  // exact: product of i consecutive ints divisible by i!
    }
    return acc;
}

std::uint64_t minimum_guaranteed_q(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("minimum_guaranteed_q: need 1 <= k <= n");
    const std::uint64_t bound = 2 * binomial(n, k - 1);
    for (std::uint64_t q = bound + 1;; ++q)
        if (gf::is_prime_power(q)) return q;
}

std::uint64_t smallest_supported_q(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("smallest_supported_q: need 1 <= k <= n");
    const std::uint64_t bound = 2 * binomial(n, k - 1);
    for (std::uint64_t q = bound + 1;; ++q) {
        std::uint32_t p = 0, m = 0;
        if (!gf::is_prime_power(q, &p, &m)) continue;
        if (m == 1 || (p == 2 && m <= 16)) return q;
    }
}

FieldPtr make_field_for_q(std::uint64_t q) {
    std::uint32_t p = 0, m = 0;
    if (!gf::is_prime_power(q, &p, &m))
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return gf::Field::make(p, m);
}

namespace {

// platform-stable uniform draw in [0, q)
Elem uniform_elem(std::mt19937_64& rng, std::uint64_t q) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % q;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<Elem>(x % q);
}

using Vec = std::vector<Elem>;

Vec vec_add(const gf::Field& f, const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

// Echelon bases of every maximal admissible selection: at most
// (set size - 1) vectors from each set, min(k-1, sum of caps) in total.
// Smaller selections are subsets of maximal ones, so span checks against
// these cover all admissible selections.
struct SelectionSpans {
    std::vector<Echelon> spans;

    void enumerate(const gf::Field& f, const std::vector<std::vector<Vec>>& sets,
                   std::size_t set_idx, int remaining, const Echelon& ech, int k) {
        if (remaining == 0 || set_idx == sets.size()) {
            spans.push_back(ech);
            return;
        }
        int caps_after = 0;
        for (std::size_t t = set_idx + 1; t < sets.size(); ++t)
            caps_after += static_cast<int>(sets[t].size()) - 1;
        const int cap = static_cast<int>(sets[set_idx].size()) - 1;
        const int lo = std::max(0, remaining - caps_after);
        const int hi = std::min(cap, remaining);
        for (int take = lo; take <= hi; ++take)
            combinations(f, sets, set_idx, take, 0, remaining, ech, k);
    }

    void combinations(const gf::Field& f, const std::vector<std::vector<Vec>>& sets,
                      std::size_t set_idx, int take, int from, int remaining,
                      const Echelon& ech, int k) {
        if (take == 0) {
            enumerate(f, sets, set_idx + 1, remaining, ech, k);
            return;
        }
        const auto& set = sets[set_idx];
        for (int i = from; i <= static_cast<int>(set.size()) - take; ++i) {
            Echelon ext = ech;
            ext.absorb(set[i]);
            combinations(f, sets, set_idx, take - 1, i + 1, remaining - 1, ext, k);
        }
    }
};

SelectionSpans admissible_spans(const gf::Field& f, FieldPtr fp,
                                const std::vector<std::vector<Vec>>& sets, int k) {
    int total_caps = 0;
    for (const auto& s : sets) total_caps += static_cast<int>(s.size()) - 1;
    const int selection_size = std::min(k - 1, total_caps);
    SelectionSpans spans;
    spans.enumerate(f, sets, 0, selection_size, Echelon(std::move(fp), k), k);
    return spans;
}

bool candidate_ok(const SelectionSpans& spans, const Vec& g, const Vec& s_next) {
    for (const auto& span : spans.spans) {
        if (span.contains(g)) return false;
        if (span.contains(s_next)) return false;
    }
    return true;
}

}  // namespace

LinearLrcCode build(const CodeParams& params, std::uint64_t seed, int max_attempts) {
    const int n = params.n, k = params.k, r = params.r;
    const auto verdict = feasibility(n, k, r);
    if (verdict.mode != Feasibility::Direct)
        throw std::invalid_argument("build: (n,k,r) not directly feasible: " + verdict.reason);

    FieldPtr field = make_field_for_q(params.q);
    const auto& f = *field;
    if (max_attempts <= 0) max_attempts = 64 * n;

    std::mt19937_64 rng(seed);
    const int num_groups = params.num_groups();
    const int b = params.b();

    // the construction's sets S_i, each {g_1, .., g_{size-1}, s_{size-1}}
    std::vector<std::vector<Vec>> sets;
    for (int gi = 0; gi < num_groups; ++gi) {
        const int group_size = (gi + 1 < num_groups || b == 0) ? r + 1 : b;
        std::vector<Vec> members;
        Vec running_sum(k, 0);

        if (gi == 0) {
            // any r independent vectors work for S_1; use unit vectors
            for (int j = 0; j < group_size - 1; ++j) {
                Vec g(k, 0);
                g[j] = 1;
                members.push_back(g);
                running_sum = vec_add(f, running_sum, g);
            }
        } else {
            std::vector<std::vector<Vec>> context = sets;
            for (int j = 0; j < group_size - 1; ++j) {
                // partial current set {g_1..g_j, s_j} participates with cap j
                if (j > 0) {
                    context.push_back(members);
                    context.back().push_back(running_sum);
                }
                const auto spans = admissible_spans(f, field, context, k);
                if (j > 0) context.pop_back();

                Vec accepted;
                bool found = false;
                for (int attempt = 0; attempt < max_attempts && !found; ++attempt) {
                    Vec cand(k);
                    for (int t = 0; t < k; ++t) cand[t] = uniform_elem(rng, params.q);
                    if (candidate_ok(spans, cand, vec_add(f, running_sum, cand))) {
                        accepted = std::move(cand);
                        found = true;
                    }
                }
                if (!found) {
                    // deterministic lexicographic fallback over F_q^k
                    Vec cand(k, 0);
                    while (true) {
                        if (candidate_ok(spans, cand, vec_add(f, running_sum, cand))) {
                            accepted = cand;
                            found = true;
                            break;
                        }
                        int t = k - 1;
                        while (t >= 0 && cand[t] == params.q - 1) cand[t--] = 0;
                        if (t < 0) break;
                        ++cand[t];
                    }
                }
                if (!found)
                    throw std::runtime_error(
                        "build: no admissible vector exists over GF(" +
                        std::to_string(params.q) + "); the construction is guaranteed for q >= " +
                        std::to_string(minimum_guaranteed_q(n, k)));
                members.push_back(accepted);
                running_sum = vec_add(f, running_sum, accepted);
            }
        }
        members.push_back(running_sum);  // s_{i, size-1} closes the group
        sets.push_back(std::move(members));
    }

    Matrix gen(field, k, n);
    std::vector<std::vector<int>> groups;
    int col = 0;
    for (const auto& set : sets) {
        std::vector<int> group;
        for (const auto& v : set) {
            for (int t = 0; t < k; ++t) gen.at(t, col) = v[t];
            group.push_back(col++);
        }
        groups.push_back(std::move(group));
    }
    assert(col == n);
    assert(linalg::rank(gen) == k);  // guaranteed by n - num_groups >= k

    return LinearLrcCode{params, std::move(gen), std::move(groups), -1, -1, seed};
}

LinearLrcCode build_with_replication(int n, int k, int r, std::uint64_t q,
                                     std::uint64_t seed) {
    const auto verdict = feasibility(n, k, r);
    if (verdict.mode != Feasibility::Replicate)
        throw std::invalid_argument("build_with_replication: (n,k,r) is not a replication case: " +
                                    verdict.reason);

    LinearLrcCode base = build(CodeParams{n - 1, k, r, q}, seed);
    LinearLrcCode code{CodeParams{n, k, r, q},
                       base.generator.with_replicated_column(0),
                       std::move(base.groups),
                       0,
                       n - 1,
                       seed};
    code.groups[0].push_back(n - 1);  // replica joins its source group
    return code;
}

bool verify_selection_property(const LinearLrcCode& code) {
    if (code.replicated())
        throw std::invalid_argument("selection property applies to direct builds");
    const int n = code.params.n, k = code.params.k;

    std::vector<int> cap_of_col(n);
    for (const auto& group : code.groups) {
        const int cap = static_cast<int>(group.size()) - 1;
        for (int c : group) cap_of_col[c] = cap;
    }
    std::vector<int> group_of_col(n);
    for (std::size_t gi = 0; gi < code.groups.size(); ++gi)
        for (int c : code.groups[gi]) group_of_col[c] = static_cast<int>(gi);

    // DFS over selections of size <= k honoring per-group caps; every
    // selection must be independent, i.e. each absorb must grow the rank.
    std::vector<int> taken(code.groups.size(), 0);
    auto dfs = [&](auto&& self, int next, int size, const Echelon& ech) -> bool {
        if (size == k) return true;
        for (int c = next; c < n; ++c) {
            const int gi = group_of_col[c];
            if (taken[gi] >= cap_of_col[c]) continue;
            Echelon ext = ech;
            if (!ext.absorb(code.generator.column(c))) return false;  // dependent selection
            ++taken[gi];
            const bool ok = self(self, c + 1, size + 1, ext);
            --taken[gi];
            if (!ok) return false;
        }
        return true;
    };
    return dfs(dfs, 0, 0, Echelon(code.generator.field(), k));
}

}  // namespace lrc::construction

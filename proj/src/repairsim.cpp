#include "lrc/repairsim.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lrc::repairsim {

using linalg::Echelon;
using linalg::Matrix;

int ErasedWord::known_count() const {
    return static_cast<int>(std::count(known.begin(), known.end(), true));
}

ErasedWord erase(const std::vector<Elem>& word, const std::vector<int>& positions) {
    ErasedWord w{word, std::vector<bool>(word.size(), true)};
    for (int p : positions) {
        if (p < 0 || p >= static_cast<int>(word.size()))
            throw std::out_of_range("erase: position out of range");
        w.known[p] = false;
        w.symbols[p] = 0;
    }
    return w;
}

namespace {

void require_some_known(const ErasedWord& w) {
    if (w.known_count() == 0)
        throw std::invalid_argument("repair needs at least one known coordinate");
}

// Smallest set of known same-group columns spanning column j, along with
// the combination coefficients. Search is over subsets of the group, so it
// is O(2^|group|) worst case - groups have r+2 columns at most.
struct LocalPlan {
    std::vector<int> read_from;
    std::vector<Elem> coefs;  // y_j = sum coefs[t] * y_read[t]
};

std::optional<LocalPlan> plan_local_repair(const LinearLrcCode& code, int j,
                                            const std::vector<bool>& known,
                                            const std::vector<int>& group) {
    const Matrix& g = code.generator;
    const auto& f = *g.field();
    const auto target = g.column(j);

    std::vector<int> candidates;
    for (int c : group)
        if (c != j && known[c]) candidates.push_back(c);

    std::vector<int> subset;
    for (int s = 1; s <= std::min<int>(code.params.r, candidates.size()); ++s) {
        std::optional<LocalPlan> plan;
        auto combos = [&](auto&& self, int from) -> bool {
            if (static_cast<int>(subset.size()) == s) {
                if (!linalg::in_span(g, target, subset)) return false;
                // solve target = sum c_t * col_t by elimination on k x s system
                const int k = g.rows();
                Matrix sys(g.field(), k, s + 1);
                for (int t = 0; t < s; ++t)
                    for (int row = 0; row < k; ++row) sys.at(row, t) = g.at(row, subset[t]);
                for (int row = 0; row < k; ++row) sys.at(row, s) = target[row];
                // gaussian elimination, then back-substitution
                std::vector<int> pivot_row(s, -1);
                int row = 0;
                for (int col = 0; col < s && row < k; ++col) {
                    int sel = -1;
                    for (int i = row; i < k; ++i)
                        if (sys.at(i, col) != 0) { sel = i; break; }
                    if (sel < 0) continue;
                    for (int c2 = 0; c2 <= s; ++c2) std::swap(sys.at(sel, c2), sys.at(row, c2));
                    const Elem scale = f.inv(sys.at(row, col));
                    for (int c2 = 0; c2 <= s; ++c2)
                        sys.at(row, c2) = f.mul(sys.at(row, c2), scale);
                    for (int i = 0; i < k; ++i) {
                        if (i == row) continue;
                        const Elem c0 = sys.at(i, col);
                        if (c0 == 0) continue;
                        for (int c2 = 0; c2 <= s; ++c2)
                            sys.at(i, c2) = f.sub(sys.at(i, c2), f.mul(c0, sys.at(row, c2)));
                    }
                    pivot_row[col] = row++;
                }
                LocalPlan p;
                p.read_from = subset;
                p.coefs.resize(s);
                for (int t = 0; t < s; ++t)
                    p.coefs[t] = pivot_row[t] >= 0 ? sys.at(pivot_row[t], s) : 0;
                plan = std::move(p);
                return true;
            }
            for (int t = from; t < static_cast<int>(candidates.size()); ++t) {
                subset.push_back(candidates[t]);
                if (self(self, t + 1)) return true;
                subset.pop_back();
            }
            return false;
        };
        subset.clear();
        if (combos(combos, 0)) return plan;
    }
    return std::nullopt;
}

}  // namespace

RepairOutcome repair_local(const LinearLrcCode& code, const ErasedWord& w) {
    require_some_known(w);
    const auto& f = *code.generator.field();
    const int n = w.length();

    std::vector<int> group_of(n, -1);
    for (std::size_t gi = 0; gi < code.groups.size(); ++gi)
        for (int c : code.groups[gi]) group_of[c] = static_cast<int>(gi);

    RepairOutcome out{w, std::vector<RepairMethod>(n, RepairMethod::Untouched),
                      std::vector<int>(n, 0), false};

    bool progress = true;
    while (progress) {
        progress = false;
        for (int j = 0; j < n; ++j) {
            if (out.word.known[j] || group_of[j] < 0) continue;
            const auto plan =
                plan_local_repair(code, j, out.word.known, code.groups[group_of[j]]);
            if (!plan) continue;
            Elem value = 0;
            for (std::size_t t = 0; t < plan->read_from.size(); ++t)
                value = f.add(value, f.mul(plan->coefs[t], out.word.symbols[plan->read_from[t]]));
            out.word.symbols[j] = value;
            out.word.known[j] = true;
            out.method[j] = RepairMethod::Local;
            out.symbols_read[j] = static_cast<int>(plan->read_from.size());
            progress = true;
        }
    }
    for (int j = 0; j < n; ++j)
        if (!out.word.known[j]) out.method[j] = RepairMethod::Failed;
    out.complete = out.word.known_count() == n;
    return out;
}

OperatorCodeContext OperatorCodeContext::make(const f4family::OperatorMatrix& m,
                                              int r_target,
                                              const analysis::Budget& budget) {
    OperatorCodeContext ctx;
    ctx.matrix = m;
    ctx.book = f4family::codebook(m, budget);
    ctx.repair_sets.resize(m.n);
    for (int j = 0; j < m.n; ++j) {
        auto set = analysis::functional_repair_set(ctx.book, m.n, j, r_target);
        if (set) ctx.repair_sets[j] = std::move(*set);
    }
    return ctx;
}

OperatorCodeContext OperatorCodeContext::make_with_sets(
    const f4family::OperatorMatrix& m, std::vector<std::vector<int>> sets,
    const analysis::Budget& budget) {
    OperatorCodeContext ctx;
    ctx.matrix = m;
    ctx.book = f4family::codebook(m, budget);
    ctx.repair_sets = std::move(sets);
    ctx.repair_sets.resize(m.n);
    return ctx;
}

RepairOutcome repair_local(const OperatorCodeContext& code, const ErasedWord& w) {
    require_some_known(w);
    const int n = code.matrix.n;

    RepairOutcome out{w, std::vector<RepairMethod>(n, RepairMethod::Untouched),
                      std::vector<int>(n, 0), false};

    bool progress = true;
    while (progress) {
        progress = false;
        for (int j = 0; j < n; ++j) {
            if (out.word.known[j]) continue;
            const auto& set = code.repair_sets[j];
            if (set.empty()) continue;
            const bool ready = std::all_of(set.begin(), set.end(),
                                           [&](int c) { return out.word.known[c]; });
            if (!ready) continue;
            // evaluate the repair function: scan for a codeword matching the
            // repair-set projection (existence is the functional guarantee)
            std::optional<Elem> value;
            for (const std::uint64_t cw : code.book) {
                bool match = true;
                for (int c : set) {
                    if (analysis::packed_symbol(cw, c) != out.word.symbols[c]) {
                        match = false;
                        break;
                    }
                }
                if (match) {
                    value = analysis::packed_symbol(cw, j);
                    break;
                }
            }
            if (!value) continue;  // projection not realizable: word is not a codeword
            out.word.symbols[j] = *value;
            out.word.known[j] = true;
            out.method[j] = RepairMethod::Local;
            out.symbols_read[j] = static_cast<int>(set.size());
            progress = true;
        }
    }
    for (int j = 0; j < n; ++j)
        if (!out.word.known[j]) out.method[j] = RepairMethod::Failed;
    out.complete = out.word.known_count() == n;
    return out;
}

DecodeResult decode_global(const LinearLrcCode& code, const ErasedWord& w) {
    const Matrix& g = code.generator;
    const auto& f = *g.field();
    const int k = g.rows(), n = g.cols();
    if (w.length() != n) throw std::invalid_argument("decode_global: length mismatch");

    // solve m * G_known = y_known; transpose to rows for elimination
    std::vector<int> cols;
    for (int c = 0; c < n; ++c)
        if (w.known[c]) cols.push_back(c);

    Matrix sys(g.field(), static_cast<int>(cols.size()), k + 1);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        for (int t = 0; t < k; ++t) sys.at(static_cast<int>(i), t) = g.at(t, cols[i]);
        sys.at(static_cast<int>(i), k) = w.symbols[cols[i]];
    }

    int row = 0;
    std::vector<int> pivot_row(k, -1);
    const int rows = sys.rows();
    for (int col = 0; col < k && row < rows; ++col) {
        int sel = -1;
        for (int i = row; i < rows; ++i)
            if (sys.at(i, col) != 0) { sel = i; break; }
        if (sel < 0) continue;
        for (int c2 = 0; c2 <= k; ++c2) std::swap(sys.at(sel, c2), sys.at(row, c2));
        const Elem scale = f.inv(sys.at(row, col));
        for (int c2 = 0; c2 <= k; ++c2) sys.at(row, c2) = f.mul(sys.at(row, c2), scale);
        for (int i = 0; i < rows; ++i) {
            if (i == row) continue;
            const Elem c0 = sys.at(i, col);
            if (c0 == 0) continue;
            for (int c2 = 0; c2 <= k; ++c2)
                sys.at(i, c2) = f.sub(sys.at(i, c2), f.mul(c0, sys.at(row, c2)));
        }
        pivot_row[col] = row++;
    }

    DecodeResult res;
    for (int i = row; i < rows; ++i)
        if (sys.at(i, k) != 0) {  // 0 = nonzero: inconsistent
            res.consistent = false;
            return res;
        }
    if (std::count(pivot_row.begin(), pivot_row.end(), -1) > 0) {
        res.unique = false;  // rank < k: >= q >= 2 consistent codewords
        return res;
    }
    std::vector<Elem> msg(k);
    for (int t = 0; t < k; ++t) msg[t] = sys.at(pivot_row[t], k);
    res.unique = true;
    res.word.resize(n);
    for (int c = 0; c < n; ++c) {
        Elem acc = 0;
        for (int t = 0; t < k; ++t) acc = f.add(acc, f.mul(msg[t], g.at(t, c)));
        res.word[c] = acc;
    }
    return res;
}

DecodeResult decode_global(const OperatorCodeContext& code, const ErasedWord& w) {
    const int n = code.matrix.n;
    if (w.length() != n) throw std::invalid_argument("decode_global: length mismatch");
    DecodeResult res;
    std::optional<std::uint64_t> match;
    for (const std::uint64_t cw : code.book) {
        bool ok = true;
        for (int c = 0; c < n && ok; ++c)
            if (w.known[c] && analysis::packed_symbol(cw, c) != w.symbols[c]) ok = false;
        if (!ok) continue;
        if (match) {
            res.unique = false;  // ambiguous
            return res;
        }
        match = cw;
    }
    if (!match) {
        res.consistent = false;
        return res;
    }
    res.unique = true;
    res.word.resize(n);
    for (int c = 0; c < n; ++c) res.word[c] = analysis::packed_symbol(*match, c);
    return res;
}

namespace {

std::vector<int> random_pattern(std::mt19937_64& rng, int n, int count) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int i = 0; i < count; ++i) {
        const int j = i + static_cast<int>(rng() % (n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(count);
    return idx;
}

template <typename Code, typename MakeWord>
SimStats run_sim(const Code& code, int n, int trials, int erasure_count,
                 std::uint64_t seed, MakeWord&& make_word) {
    if (erasure_count < 0 || erasure_count >= n)
        throw std::invalid_argument("simulate: erasure count must be in [0, n)");
    if (trials < 1) throw std::invalid_argument("simulate: trials must be positive");

    std::mt19937_64 rng(seed);
    int local_ok = 0, global_ok = 0;
    std::uint64_t reads = 0, repaired = 0;

    for (int t = 0; t < trials; ++t) {
        const std::vector<Elem> word = make_word(rng);
        const auto pattern = random_pattern(rng, n, erasure_count);
        const ErasedWord w = erase(word, pattern);

        const RepairOutcome local = repair_local(code, w);
        bool correct = local.complete;
        for (int j = 0; correct && j < n; ++j) correct = local.word.symbols[j] == word[j];
        local_ok += correct;
        for (int j = 0; j < n; ++j) {
            if (local.method[j] == RepairMethod::Local) {
                reads += local.symbols_read[j];
                ++repaired;
            }
        }

        const DecodeResult global = decode_global(code, w);
        global_ok += global.unique && global.word == word;
    }

    SimStats stats;
    stats.trials = trials;
    stats.erasures = erasure_count;
    stats.local_rate = static_cast<double>(local_ok) / trials;
    stats.global_rate = static_cast<double>(global_ok) / trials;
    stats.mean_reads = repaired ? static_cast<double>(reads) / repaired : 0.0;
    stats.seed = seed;
    return stats;
}

}  // namespace

SimStats simulate(const LinearLrcCode& code, int trials, int erasure_count,
                  std::uint64_t seed) {
    const auto& g = code.generator;
    const auto& f = *g.field();
    const int n = g.cols(), k = g.rows();
    const std::uint64_t q = code.params.q;
    return run_sim(code, n, trials, erasure_count, seed, [&](std::mt19937_64& rng) {
        std::vector<Elem> msg(k);
        for (int t = 0; t < k; ++t) msg[t] = static_cast<Elem>(rng() % q);
        std::vector<Elem> word(n, 0);
        for (int c = 0; c < n; ++c) {
            Elem acc = 0;
            for (int t = 0; t < k; ++t) acc = f.add(acc, f.mul(msg[t], g.at(t, c)));
            word[c] = acc;
        }
        return word;
    });
}

SimStats simulate(const OperatorCodeContext& code, int trials, int erasure_count,
                  std::uint64_t seed) {
    const int n = code.matrix.n;
    return run_sim(code, n, trials, erasure_count, seed, [&](std::mt19937_64& rng) {
        const std::uint64_t cw = code.book[rng() % code.book.size()];
        std::vector<Elem> word(n);
        for (int c = 0; c < n; ++c) word[c] = analysis::packed_symbol(cw, c);
        return word;
    });
}

}  // namespace lrc::repairsim

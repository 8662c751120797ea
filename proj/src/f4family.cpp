#include "lrc/f4family.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace lrc::f4family {

namespace {

// the seven operator tables on the bit-pair encoding 0..3. alpha is
// multiplication by x, beta is +1 on the integer encoding; both squares
// and the cube are compositions, asserted below.
constexpr std::uint8_t kTables[7][4] = {
    {0, 0, 0, 0},  // zero
    {0, 1, 2, 3},  // one
    {0, 2, 3, 1},  // alpha
    {0, 3, 1, 2},  // alpha2
    {1, 2, 3, 0},  // beta
    {2, 3, 0, 1},  // beta2
    {3, 0, 1, 2},  // beta3
};

constexpr const char* kOpNames[7] = {"zero", "one",   "alpha", "alpha2",
                                     "beta", "beta2", "beta3"};

bool tables_selfcheck() {
    auto t = [](Op op, std::uint8_t x) { return kTables[static_cast<int>(op)][x]; };
    for (std::uint8_t x = 0; x < 4; ++x) {
        if (t(Op::Alpha2, x) != t(Op::Alpha, t(Op::Alpha, x))) return false;
        if (t(Op::Beta2, x) != t(Op::Beta, t(Op::Beta, x))) return false;
        if (t(Op::Beta3, x) != t(Op::Beta, t(Op::Beta, t(Op::Beta, x)))) return false;
        if (t(Op::One, x) != x || t(Op::Zero, x) != 0) return false;
        if ((t(Op::One, x) ^ t(Op::Alpha, x) ^ t(Op::Alpha2, x)) != 0) return false;
    }
    return true;
}

}  // namespace

std::uint8_t apply(Op op, std::uint8_t x) {
    // transcription errors in the 28 table entries are the main risk; the
    // composition identities catch them on first use
    static const bool ok = [] {
        if (!tables_selfcheck())
            throw std::logic_error("F4 operator tables fail their composition identities");
        return true;
    }();
    (void)ok;
    return kTables[static_cast<int>(op)][x & 3];
}

const char* op_name(Op op) { return kOpNames[static_cast<int>(op)]; }

std::optional<Op> op_from_name(const std::string& name) {
    for (int i = 0; i < 7; ++i)
        if (name == kOpNames[i]) return static_cast<Op>(i);
    return std::nullopt;
}

std::string f4_str(std::uint8_t x) {
    return {static_cast<char>('0' + (x >> 1 & 1)), static_cast<char>('0' + (x & 1))};
}

const char* family_name(Family f) {
    switch (f) {
        case Family::F1_33: return "f1-33";
        case Family::F2_33: return "f2-33";
        case Family::F1_34: return "f1-34";
        case Family::Custom: return "custom";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::F1_33, Family::F2_33, Family::F1_34, Family::Custom})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

FamilyClaim family_claim(Family family, int i) {
    switch (family) {
        case Family::F1_33: return {4 * i + 3, 3 * i + 1, 3, 3};
        case Family::F2_33: return {4 * i + 4, 3 * i + 2, 3, 3};
        case Family::F1_34: return {4 * i + 4, 3 * i + 1, 3, 4};
        case Family::Custom: break;
    }
    throw std::invalid_argument("custom operator matrices carry no claim");
}

namespace {

constexpr Op Z = Op::Zero, I = Op::One, A = Op::Alpha, A2 = Op::Alpha2;
constexpr Op B = Op::Beta, B2 = Op::Beta2, B3 = Op::Beta3;

constexpr Op kBlockA[3][4] = {{I, Z, Z, I}, {Z, I, Z, I}, {Z, Z, I, I}};
constexpr Op kBlockB[3][3] = {{Z, I, I}, {Z, A, A}, {Z, A2, A2}};
constexpr Op kBlockD[3][4] = {{Z, Z, I, I}, {Z, Z, A, A}, {Z, Z, A2, A2}};

}  // namespace

OperatorMatrix family_matrix(Family family, int i) {
    if (i < 1) throw std::invalid_argument("family block index i must be >= 1");
    const FamilyClaim claim = family_claim(family, i);
    OperatorMatrix m;
    m.k = claim.k;
    m.n = claim.n;
    m.family = family;
    m.block_index = i;
    m.ops.assign(std::size_t(m.k) * m.n, Z);

    const int tail = 4 * i;  // first column of the right-hand block
    for (int j = 0; j < i; ++j) {
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 4; ++c) m.at(3 * j + r, 4 * j + c) = kBlockA[r][c];
            switch (family) {
                case Family::F1_33:
                    for (int c = 0; c < 3; ++c) m.at(3 * j + r, tail + c) = kBlockB[r][c];
                    break;
                case Family::F2_33:
                    for (int c = 0; c < 4; ++c) m.at(3 * j + r, tail + c) = kBlockD[r][c];
                    break;
                case Family::F1_34:
                    for (int c = 0; c < 4; ++c) m.at(3 * j + r, tail + c) = kBlockA[r][c];
                    break;
                case Family::Custom: break;
            }
        }
    }
    switch (family) {
        case Family::F1_33: {
            const Op last[3] = {I, A, A2};
            for (int c = 0; c < 3; ++c) m.at(3 * i, tail + c) = last[c];
            break;
        }
        case Family::F2_33: {
            const Op last[2][4] = {{I, Z, B, B2}, {Z, I, B2, B}};
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 4; ++c) m.at(3 * i + r, tail + c) = last[r][c];
            break;
        }
        case Family::F1_34: {
            const Op last[4] = {I, B, B2, B3};
            for (int c = 0; c < 4; ++c) m.at(3 * i, tail + c) = last[c];
            break;
        }
        case Family::Custom: break;
    }
    return m;
}

std::vector<std::uint8_t> encode(const OperatorMatrix& m,
                                 const std::vector<std::uint8_t>& msg) {
    if (static_cast<int>(msg.size()) != m.k)
        throw std::invalid_argument("encode: message length != k");
    std::vector<std::uint8_t> word(m.n, 0);
    for (int j = 0; j < m.n; ++j) {
        std::uint8_t acc = 0;
        for (int r = 0; r < m.k; ++r) acc ^= apply(m.at(r, j), msg[r]);
        word[j] = acc;
    }
    return word;
}

std::vector<std::uint64_t> codebook(const OperatorMatrix& m,
                                    const analysis::Budget& budget) {
    if (m.n > 32) throw std::invalid_argument("codebook: n > 32 does not pack");
    const std::uint64_t size = 1ull << (2 * m.k);
    if (size > budget.max_messages)
        throw std::runtime_error("codebook exceeds budget (4^k too large)");

    std::vector<std::uint64_t> book(size);
    std::vector<std::uint8_t> msg(m.k, 0);
    for (std::uint64_t x = 0; x < size; ++x) {
        for (int r = 0; r < m.k; ++r) msg[r] = static_cast<std::uint8_t>(x >> (2 * r) & 3);
        std::uint64_t packed = 0;
        for (int j = 0; j < m.n; ++j) {
            std::uint8_t acc = 0;
            for (int r = 0; r < m.k; ++r) acc ^= apply(m.at(r, j), msg[r]);
            packed |= std::uint64_t(acc) << (2 * j);
        }
        book[x] = packed;
    }

    std::unordered_set<std::uint64_t> seen(book.begin(), book.end());
    if (seen.size() != book.size())
        throw std::runtime_error("operator matrix encoder is not injective");
    return book;
}

int min_distance_bruteforce(const OperatorMatrix& m, const analysis::Budget& budget) {
    return analysis::min_pairwise_distance(codebook(m, budget), m.n, budget);
}

analysis::CodeReport verify_operator_code(const OperatorMatrix& m, int r_claimed,
                                          int d_claimed, const analysis::Budget& budget) {
    const auto book = codebook(m, budget);

    analysis::CodeReport report;
    report.n = m.n;
    report.k = m.k;
    report.d_claimed = d_claimed;
    report.r_claimed = r_claimed;
    report.d = analysis::min_pairwise_distance(book, m.n, budget);
    report.r_measured = analysis::locality_functional(book, m.n, std::min(m.n - 1, 13));
    report.locality_ok = r_claimed < 0 || report.r_measured <= r_claimed;
    const int r_eval = report.locality_ok && r_claimed >= 1 ? r_claimed : report.r_measured;
    report.dopt = analysis::d_opt(report.n, report.k, std::min(r_eval, report.k));
    if (report.locality_ok && r_claimed >= 1 && report.d > report.dopt)
        throw std::runtime_error("measured d exceeds the locality bound (implementation bug)");
    report.verdict = analysis::verdict_for(report.d, report.dopt, report.locality_ok);
    return report;
}

analysis::CodeReport verify_family(Family family, int i, const analysis::Budget& budget) {
    const FamilyClaim claim = family_claim(family, i);
    return verify_operator_code(family_matrix(family, i), claim.r, claim.d, budget);
}

}  // namespace lrc::f4family

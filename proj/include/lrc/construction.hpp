#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrc/linalg.hpp"

namespace lrc::construction {

using gf::Elem;
using gf::FieldPtr;
using linalg::Matrix;

/// Parameters of a length-n, dimension-k code with all-symbol locality r
/// over GF(q). Write n = a(r+1) + b, 0 <= b < r+1; num_groups = ceil(n/(r+1)).
struct CodeParams {
    int n = 0, k = 0, r = 0;
    std::uint64_t q = 0;

    int a() const { return n / (r + 1); }
    int b() const { return n % (r + 1); }
    int num_groups() const { return (n + r) / (r + 1); }

    bool operator==(const CodeParams&) const = default;
};

enum class Feasibility { Direct, Replicate, Infeasible, Invalid };

struct FeasibilityVerdict {
    Feasibility mode = Feasibility::Invalid;
    int dopt = 0;  // locality bound value, clamped at 0
    std::string reason;
};

/// Classifies (n, k, r): Direct when n - ceil(n/(r+1)) >= k, k < n and
/// n mod (r+1) != 1; Replicate when n mod (r+1) = 1 and the (n-1, k, r)
/// triple is Direct; otherwise Infeasible, with the reason reporting the
/// d_opt = 0 (no code exists) vs d_opt = 1 (unknown feasibility) case.
/// r < 1, r > k or k >= n yield mode Invalid.
FeasibilityVerdict feasibility(int n, int k, int r);

std::uint64_t binomial(int n, int k);

/// Smallest prime power q with q > 2*C(n, k-1), the sufficient field size
/// for the randomized construction. May be an odd prime power the field
/// layer does not instantiate; see smallest_supported_q.
std::uint64_t minimum_guaranteed_q(int n, int k);

/// Smallest q > 2*C(n, k-1) that the gf module can instantiate (a prime,
/// or 2^m with m <= 16). Used by the CLI and the sweep to pick fields.
std::uint64_t smallest_supported_q(int n, int k);

FieldPtr make_field_for_q(std::uint64_t q);

/// A linear LRC: generator matrix plus the partition of its columns into
/// repair groups. For direct builds the groups are the construction's sets
/// S_1..S_A (the last column of each group is the sum of the others, and
/// every admissible selection of columns is independent). For replicated
/// codes the duplicated column joins its source group and `groups` is
/// authoritative.
struct LinearLrcCode {
    CodeParams params;
    Matrix generator;
    std::vector<std::vector<int>> groups;
    int replica_source = -1;  // -1: direct build
    int replica_col = -1;
    std::uint64_t seed = 0;

    bool replicated() const { return replica_col >= 0; }
};

/// Builds the generator matrix by seeded rejection sampling with explicit
/// verification of both candidate conditions, falling back to a
/// deterministic lexicographic scan of F_q^k if sampling exhausts
/// max_attempts (default 64n) per vector. Identical (params, seed) yield
/// an identical matrix. Requires feasibility(n,k,r) = Direct.
/// Throws std::runtime_error when no admissible vector exists at this q;
/// the message reports the guaranteed field size.
LinearLrcCode build(const CodeParams& params, std::uint64_t seed,
                    int max_attempts = 0);

/// Handles n = 1 mod (r+1): builds the (n-1, k, r) code and appends a copy
/// of its first column, recorded as joining its source group. Costs at most
/// one unit of minimum distance: d >= d_opt(n,k,r) - 1.
LinearLrcCode build_with_replication(int n, int k, int r, std::uint64_t q,
                                     std::uint64_t seed);

/// Exhaustively checks that every selection of at most k columns taking at
/// most (group size - 1) from each group is linearly independent.
/// Direct builds only.
bool verify_selection_property(const LinearLrcCode& code);

}  // namespace lrc::construction

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/analysis.hpp"

namespace lrc::f4family {

/// The seven unary operators on F4. one/alpha/alpha2 are additive,
/// beta/beta2/beta3 are bijective but not additive, zero absorbs.
enum class Op : std::uint8_t { Zero, One, Alpha, Alpha2, Beta, Beta2, Beta3 };

std::uint8_t apply(Op op, std::uint8_t x);

const char* op_name(Op op);
std::optional<Op> op_from_name(const std::string& name);

/// F4 element as a two-bit string, "00".."11".
std::string f4_str(std::uint8_t x);

enum class Family { F1_33, F2_33, F1_34, Custom };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// k x n grid of operators defining the encoder
/// y_j = F_{1,j}(x_1) + ... + F_{k,j}(x_k).
struct OperatorMatrix {
    int k = 0, n = 0;
    Family family = Family::Custom;
    int block_index = 0;  // the family parameter i; 0 for custom grids
    std::vector<Op> ops;  // row-major

    Op at(int r, int c) const { return ops[std::size_t(r) * n + c]; }
    Op& at(int r, int c) { return ops[std::size_t(r) * n + c]; }

    bool operator==(const OperatorMatrix&) const = default;
};

/// Parameters a family claims at block index i.
struct FamilyClaim {
    int n = 0, k = 0, d = 0, r = 0;
};

FamilyClaim family_claim(Family family, int i);

/// Assembles the block matrix of the given family: i diagonal A-blocks,
/// the right-hand column blocks (B, D or A), and the closing row(s).
/// Unspecified entries are zero operators.
OperatorMatrix family_matrix(Family family, int i);

std::vector<std::uint8_t> encode(const OperatorMatrix& m,
                                 const std::vector<std::uint8_t>& msg);

/// All 4^k codewords, packed two bits per symbol, message-order. Verifies
/// injectivity (distinct words) and throws if the encoder collapses.
std::vector<std::uint64_t> codebook(const OperatorMatrix& m,
                                    const analysis::Budget& budget = {});

/// Minimum pairwise distance over the full codebook.
int min_distance_bruteforce(const OperatorMatrix& m,
                            const analysis::Budget& budget = {});

/// Exhaustive verification: builds the codebook, measures pairwise
/// distance and functional locality, and grades against the claimed
/// parameters. locality_ok reflects whether the claimed r is achievable at
/// every coordinate; d_opt is evaluated at the claimed r when it is, else
/// at the measured locality.
analysis::CodeReport verify_family(Family family, int i,
                                   const analysis::Budget& budget = {});

analysis::CodeReport verify_operator_code(const OperatorMatrix& m, int r_claimed,
                                          int d_claimed,
                                          const analysis::Budget& budget = {});

}  // namespace lrc::f4family

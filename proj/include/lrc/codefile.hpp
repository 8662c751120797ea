#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrc/repairsim.hpp"

namespace lrc::codefile {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kToolVersion = "lrctool 0.1.0";

enum class Kind { Linear, Operator };

/// On-disk representation of a code: exactly one of the two payloads is
/// populated, matching `kind`. Round-trips are bit-exact (all fields are
/// integers or names).
struct CodeFile {
    Kind kind = Kind::Linear;
    std::optional<construction::LinearLrcCode> linear;
    std::optional<f4family::OperatorMatrix> op_matrix;
    std::optional<std::vector<std::vector<int>>> repair_sets;  // operator codes
    construction::CodeParams params;  // r for operator codes = claimed locality
    std::uint64_t seed = 0;
    std::string tool = kToolVersion;
};

CodeFile wrap(construction::LinearLrcCode code);
CodeFile wrap(f4family::OperatorMatrix matrix, int r_claimed,
              std::vector<std::vector<int>> repair_sets, std::uint64_t seed);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string serialize(const CodeFile& file);        // pretty JSON, trailing newline
CodeFile parse(const std::string& text);            // throws ParseError

void save(const CodeFile& file, const std::string& path);
CodeFile load(const std::string& path);             // throws ParseError on I/O too

bool equal(const CodeFile& a, const CodeFile& b);

}  // namespace lrc::codefile

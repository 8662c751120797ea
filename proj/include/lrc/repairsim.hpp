#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/f4family.hpp"

namespace lrc::repairsim {

using construction::LinearLrcCode;
using gf::Elem;

/// A stored codeword with some coordinates lost.
struct ErasedWord {
    std::vector<Elem> symbols;  // valid where known
    std::vector<bool> known;

    int length() const { return static_cast<int>(symbols.size()); }
    int known_count() const;
};

ErasedWord erase(const std::vector<Elem>& word, const std::vector<int>& positions);

enum class RepairMethod : std::uint8_t { Untouched, Local, Failed };

struct RepairOutcome {
    ErasedWord word;                    // after repair
    std::vector<RepairMethod> method;   // per coordinate
    std::vector<int> symbols_read;      // per locally repaired coordinate
    bool complete = false;              // every coordinate known afterwards
};

/// Iterative within-group repair for a linear LRC. Each erased coordinate
/// is recovered from the smallest set of known columns of its own group
/// whose span contains it (the group sum relation, or the duplicate for
/// replicated columns); repairs cascade until a fixpoint. Reads per
/// coordinate never exceed r.
RepairOutcome repair_local(const LinearLrcCode& code, const ErasedWord& w);

/// Operator-code context: the codebook plus per-coordinate repair sets
/// discovered by the functional locality search (cached in code files).
struct OperatorCodeContext {
    f4family::OperatorMatrix matrix;
    std::vector<std::uint64_t> book;
    std::vector<std::vector<int>> repair_sets;  // empty set = none within target

    static OperatorCodeContext make(const f4family::OperatorMatrix& m, int r_target,
                                    const analysis::Budget& budget = {});
    static OperatorCodeContext make_with_sets(const f4family::OperatorMatrix& m,
                                              std::vector<std::vector<int>> sets,
                                              const analysis::Budget& budget = {});
};

RepairOutcome repair_local(const OperatorCodeContext& code, const ErasedWord& w);

struct DecodeResult {
    bool unique = false;
    bool consistent = true;            // false: no codeword matches the knowns
    std::vector<Elem> word;            // populated when unique
};

/// Erasure-only ML decoding. Linear: solve for the message on the known
/// coordinates; unique iff the known columns have full rank. Operator:
/// filter the codebook. Ambiguity is reported, never tie-broken.
DecodeResult decode_global(const LinearLrcCode& code, const ErasedWord& w);
DecodeResult decode_global(const OperatorCodeContext& code, const ErasedWord& w);

struct SimStats {
    int trials = 0;
    int erasures = 0;
    double local_rate = 0.0;   // trials fully repaired by local fixpoint
    double global_rate = 0.0;  // trials decodable from the erased word alone
    double mean_reads = 0.0;   // symbols read per locally repaired coordinate
    std::uint64_t seed = 0;
};

/// Seeded random codewords and erasure patterns; deterministic per seed.
SimStats simulate(const LinearLrcCode& code, int trials, int erasure_count,
                  std::uint64_t seed);
SimStats simulate(const OperatorCodeContext& code, int trials, int erasure_count,
                  std::uint64_t seed);

}  // namespace lrc::repairsim

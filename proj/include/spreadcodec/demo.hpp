#pragma once

// End-to-end run of the hybrid codec over a toy operator channel:
// message -> enc5 -> corruption -> nearest codeword of S2 -> dec5.

#include <string>

#include "spreadcodec/hybrid.hpp"

namespace spreadcodec {

enum class Corruption { none, erase_row, add_row };

Corruption parse_corruption(const std::string& text);
std::string to_string(Corruption c);

struct DemoReport {
    u64 trials = 0;
    u64 successes = 0;
    u64 tied_trials = 0;  // nearest codeword was not unique
    double elapsed_ms = 0.0;

    double success_rate() const { return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 1.0; }
};

/// trials == 0 runs every message against every corruption of its codeword
/// (each basis row erased, or each vector outside the codeword appended).
/// Otherwise draws trials random (message, corruption) pairs from seed.
DemoReport run_demo(const HybridCodec& codec, Corruption corruption, u64 trials, u64 seed);

}  // namespace spreadcodec

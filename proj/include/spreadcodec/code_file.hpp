#pragma once

// Text files written by `construct` and read by `encode`, `decode` and `verify`.
//
//   kind spread|orbit|hybrid
//   <descriptor>
//   code
//   <k n p count, then one RREF basis block per codeword>
//
// Descriptors: spread -> "q", "k", "n", "modulus" lines; orbit -> orbit
// context (generator block, seed block, N, N_U); hybrid -> codec bundle.

#include <iosfwd>
#include <optional>
#include <string>

#include "spreadcodec/hybrid.hpp"
#include "spreadcodec/orbit_codes.hpp"
#include "spreadcodec/spread_codes.hpp"
#include "spreadcodec/subspace.hpp"

namespace spreadcodec {

enum class CodeKind { spread, orbit, hybrid };

CodeKind parse_kind(const std::string& text);
std::string to_string(CodeKind kind);

struct CodeFile {
    CodeKind kind;
    std::optional<SpreadContext> spread;
    std::optional<OrbitContext> orbit;
    std::optional<HybridCodec> hybrid;
    SubspaceCode code;

    static CodeFile from_spread(SpreadContext ctx);
    static CodeFile from_orbit(const Subspace& seed, const FqMatrix& generator);
    static CodeFile from_hybrid(HybridCodec codec);

    /// First message: 1 for spread and hybrid codes, 0 for orbit codes.
    u64 first_message() const;
    u64 message_count() const;

    Subspace encode(u64 message) const;
    /// Throws std::domain_error when the subspace is not a codeword.
    u64 decode(const Subspace& codeword) const;
};

void write_code_file(std::ostream& out, const CodeFile& file);

/// Rebuilds the contexts from the descriptor and checks the stored codeword
/// list against them; throws std::invalid_argument on any mismatch.
CodeFile read_code_file(std::istream& in);

}  // namespace spreadcodec

#include "spreadcodec/code_file.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace spreadcodec {

namespace {

std::string read_tagged(std::istream& in, const std::string& tag) {
    std::string key, value;
    if (!(in >> key) || key != tag) throw std::invalid_argument("code file: expected '" + tag + "'");
    if (!(in >> value)) throw std::invalid_argument("code file: missing value for '" + tag + "'");
    return value;
}

}  // namespace

CodeKind parse_kind(const std::string& text) {
    if (text == "spread") return CodeKind::spread;
    if (text == "orbit") return CodeKind::orbit;
    if (text == "hybrid") return CodeKind::hybrid;
    throw std::invalid_argument("unknown code kind '" + text + "' (spread|orbit|hybrid)");
}

std::string to_string(CodeKind kind) {
    switch (kind) {
        case CodeKind::spread: return "spread";
        case CodeKind::orbit: return "orbit";
        case CodeKind::hybrid: return "hybrid";
    }
    return "?";
}

CodeFile CodeFile::from_spread(SpreadContext ctx) {
    SubspaceCode code = enumerate_spread(ctx);
    return CodeFile{CodeKind::spread, std::move(ctx), std::nullopt, std::nullopt, std::move(code)};
}

CodeFile CodeFile::from_orbit(const Subspace& seed, const FqMatrix& generator) {
    auto [ctx, code] = build_orbit(seed, generator);
    return CodeFile{CodeKind::orbit, std::nullopt, std::move(ctx), std::nullopt, std::move(code)};
}

CodeFile CodeFile::from_hybrid(HybridCodec codec) {
    SubspaceCode code = codec.channel_code();
    return CodeFile{CodeKind::hybrid, std::nullopt, std::nullopt, std::move(codec), std::move(code)};
}

u64 CodeFile::first_message() const { return kind == CodeKind::orbit ? 0 : 1; }

u64 CodeFile::message_count() const {
    switch (kind) {
        case CodeKind::spread: return spread->message_count();
        case CodeKind::orbit: return orbit->orbit_length();
        case CodeKind::hybrid: return hybrid->message_count();
    }
    return 0;
}

Subspace CodeFile::encode(u64 message) const {
    switch (kind) {
        case CodeKind::spread: return enc2(message, *spread);
        case CodeKind::orbit: return enc4(message, *orbit);
        case CodeKind::hybrid: return enc5(message, *hybrid);
    }
    throw std::logic_error("unreachable");
}

u64 CodeFile::decode(const Subspace& codeword) const {
    if (!code.index_of(codeword)) throw std::domain_error("subspace is not a codeword of this code");
    switch (kind) {
        case CodeKind::spread: return dec2(codeword, *spread);
        case CodeKind::orbit: return dec4(codeword, *orbit);
        case CodeKind::hybrid: return dec5(codeword, *hybrid);
    }
    throw std::logic_error("unreachable");
}

void write_code_file(std::ostream& out, const CodeFile& file) {
    out << "kind " << to_string(file.kind) << '\n';
    switch (file.kind) {
        case CodeKind::spread:
            out << "q " << file.spread->q() << '\n';
            out << "k " << file.spread->k() << '\n';
            out << "n " << file.spread->n() << '\n';
            out << "modulus " << format_poly(file.spread->modulus()) << '\n';
            break;
        case CodeKind::orbit:
            write_orbit_context(out, *file.orbit);
            break;
        case CodeKind::hybrid:
            write_codec(out, *file.hybrid);
            break;
    }
    out << "code\n";
    write_code(out, file.code);
}

CodeFile read_code_file(std::istream& in) {
    const CodeKind kind = parse_kind(read_tagged(in, "kind"));
    CodeFile file = [&] {
        switch (kind) {
            case CodeKind::spread: {
                const Residue q = static_cast<Residue>(std::stoul(read_tagged(in, "q")));
                const std::size_t k = std::stoul(read_tagged(in, "k"));
                const std::size_t n = std::stoul(read_tagged(in, "n"));
                Poly modulus = parse_poly(read_tagged(in, "modulus"), q);
                if (k == 0 || n % k != 0) throw std::invalid_argument("code file: k must divide n");
                return CodeFile::from_spread(SpreadContext(q, k, n / k, std::move(modulus)));
            }
            case CodeKind::orbit: {
                OrbitContext ctx = read_orbit_context(in);
                return CodeFile::from_orbit(ctx.seed(), ctx.generator());
            }
            case CodeKind::hybrid:
                return CodeFile::from_hybrid(read_codec(in));
        }
        throw std::logic_error("unreachable");
    }();
    std::string tag;
    if (!(in >> tag) || tag != "code") throw std::invalid_argument("code file: expected 'code'");
    const SubspaceCode stored = read_code(in);
    if (stored.codewords() != file.code.codewords())
        throw std::invalid_argument("code file: stored codewords do not match the descriptor");
    return file;
}

}  // namespace spreadcodec

#include "spreadcodec/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "spreadcodec/code_file.hpp"
#include "spreadcodec/demo.hpp"
#include "spreadcodec/smooth_table.hpp"

namespace spreadcodec {

namespace {

enum class Format { text, kv };

// Ordered key/value output: "key: value" lines for people, one
// space-separated key=value record for scripts.
class Record {
public:
    template <typename T>
    Record& add(const std::string& key, const T& value) {
        std::ostringstream s;
        s << value;
        fields_.emplace_back(key, s.str());
        return *this;
    }

    void print(std::ostream& out, Format format) const {
        if (format == Format::kv) {
            for (std::size_t i = 0; i < fields_.size(); ++i) out << (i ? " " : "") << fields_[i].first << '=' << fields_[i].second;
            out << '\n';
            return;
        }
        std::size_t width = 0;
        for (const auto& f : fields_) width = std::max(width, f.first.size());
        for (const auto& [k, v] : fields_) out << std::left << std::setw(static_cast<int>(width + 2)) << (k + ":") << v << '\n';
    }

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

struct Options {
    std::string format = "text";
    unsigned q = 2;
    std::size_t k = 0;
    std::size_t n = 0;
    std::string modulus;
    std::string modulus_n;
    std::string kind;
    std::string generator_file;
    std::string subspace_file;
    std::string file;
    std::string codeword_file;
    std::string message;
    bool zero_based = false;
    u64 seed = 1;
    u64 trials = 0;
    std::string corruption = "none";
    std::string out_file;
    std::vector<unsigned> n_list;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return in;
}

CodeFile load_code_file(const std::string& path) {
    auto in = open_input(path);
    return read_code_file(in);
}

FqMatrix load_matrix(const std::string& path) {
    if (path == "-") return read_matrix(std::cin);
    auto in = open_input(path);
    return read_matrix(in);
}

void emit(const std::string& text, const Options& opt, std::ostream& out) {
    if (opt.out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.out_file);
    if (!file) throw std::invalid_argument("cannot write '" + opt.out_file + "'");
    file << text;
}

std::optional<Poly> optional_poly(const std::string& text, Residue q) {
    if (text.empty()) return std::nullopt;
    return parse_poly(text, q);
}

void require_divides(const Options& opt) {
    if (opt.k == 0 || opt.n == 0 || opt.n % opt.k != 0) throw std::invalid_argument("--k and --n are required with k dividing n");
}

Record describe(const CodeFile& file) {
    Record rec;
    rec.add("kind", to_string(file.kind))
        .add("k", file.code.dim())
        .add("n", file.code.ambient())
        .add("q", file.code.characteristic())
        .add("codewords", file.code.size());
    if (file.kind == CodeKind::orbit) {
        rec.add("group_order", file.orbit->group_order()).add("orbit_length", file.orbit->orbit_length());
    }
    return rec;
}

int cmd_construct(const Options& opt, std::ostream& out, Format format) {
    const CodeKind kind = parse_kind(opt.kind);
    const Residue q = opt.q;
    CodeFile file = [&] {
        switch (kind) {
            case CodeKind::spread:
                require_divides(opt);
                return CodeFile::from_spread(SpreadContext(q, opt.k, opt.n / opt.k, optional_poly(opt.modulus, q)));
            case CodeKind::orbit: {
                std::optional<FieldContext> field;
                auto field_n = [&]() -> const FieldContext& {
                    if (!field) {
                        if (opt.n == 0) throw std::invalid_argument("--n is required");
                        field = opt.modulus.empty() ? FieldContext::standard(q, static_cast<unsigned>(opt.n))
                                                    : FieldContext(q, parse_poly(opt.modulus, q));
                    }
                    return *field;
                };
                const FqMatrix generator = opt.generator_file.empty()
                                               ? companion_matrix(field_n().modulus(), q)
                                               : load_matrix(opt.generator_file);
                Subspace seed;
                if (!opt.subspace_file.empty()) {
                    seed = Subspace::from_rows(load_matrix(opt.subspace_file));
                } else {
                    require_divides(opt);
                    seed = build_subfield_seed(field_n(), opt.k);
                }
                return CodeFile::from_orbit(seed, generator);
            }
            case CodeKind::hybrid:
                require_divides(opt);
                return CodeFile::from_hybrid(
                    HybridCodec::build(q, opt.k, opt.n, optional_poly(opt.modulus, q), optional_poly(opt.modulus_n, q)));
        }
        throw std::logic_error("unreachable");
    }();

    std::ostringstream body;
    write_code_file(body, file);
    emit(body.str(), opt, out);
    if (!opt.out_file.empty()) {
        Record rec = describe(file);
        rec.add("is_spread", is_spread(file.code).ok ? "true" : "false").add("out", opt.out_file);
        rec.print(out, format);
    }
    return kExitOk;
}

int cmd_encode(const Options& opt, std::ostream& out) {
    const CodeFile file = load_code_file(opt.file);
    u64 message = static_cast<u64>(parse_u128(opt.message));
    if (opt.zero_based && file.first_message() == 1) ++message;
    emit(format_matrix(file.encode(message).basis()), opt, out);
    return kExitOk;
}

int cmd_decode(const Options& opt, std::ostream& out) {
    const CodeFile file = load_code_file(opt.file);
    const Subspace codeword = Subspace::from_rows(load_matrix(opt.codeword_file));
    u64 message = file.decode(codeword);
    if (opt.zero_based && file.first_message() == 1) --message;
    emit(std::to_string(message) + "\n", opt, out);
    return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, Format format) {
    const CodeFile file = load_code_file(opt.file);
    Record rec = describe(file);
    const SpreadVerdict verdict = is_spread(file.code);
    bool ok = verdict.ok;
    rec.add("is_spread", verdict.ok ? "true" : "false");
    if (!verdict.ok) rec.add("failure", verdict.detail);
    if (file.code.size() >= 2) rec.add("min_distance", code_min_distance(file.code));
    if (file.kind == CodeKind::hybrid) {
        const bool iso = verify_isometry(enumerate_spread(file.hybrid->spread()), file.code, file.hybrid->transform());
        rec.add("isometry", iso ? "true" : "false");
        ok = ok && iso;
    }
    rec.print(out, format);
    return ok ? kExitOk : kExitVerification;
}

int cmd_table_smooth(const Options& opt, std::ostream& out, Format format) {
    std::vector<unsigned> ns = opt.n_list;
    if (ns.empty()) {
        for (const auto& r : reference_smooth_rows()) ns.push_back(r.n);
    }
    bool any_discrepancy = false;
    if (format == Format::text) {
        out << std::right << std::setw(4) << "n" << std::setw(8) << "max_p" << std::setw(7) << "max_e" << std::setw(12)
            << "max(en,ep)" << std::setw(7) << "n^2" << std::setw(8) << "smooth" << "  factorization\n";
    }
    for (unsigned n : ns) {
        const SmoothComparison cmp = compare_with_reference(n);
        const SmoothRow& row = cmp.derived;
        any_discrepancy = any_discrepancy || cmp.discrepancy();
        std::string mismatch;
        if (cmp.reference) {
            if (cmp.max_p_differs) mismatch += (mismatch.empty() ? "" : ",") + std::string("max_p:") + std::to_string(cmp.reference->max_p);
            if (cmp.max_e_differs) mismatch += (mismatch.empty() ? "" : ",") + std::string("max_e:") + std::to_string(cmp.reference->max_e);
            if (cmp.max_weighted_differs)
                mismatch += (mismatch.empty() ? "" : ",") + std::string("max_weighted:") + std::to_string(cmp.reference->max_weighted);
        }
        if (format == Format::kv) {
            Record rec;
            rec.add("n", row.n)
                .add("max_p", to_string(row.max_p))
                .add("max_e", row.max_e)
                .add("max_weighted", to_string(row.max_weighted))
                .add("bound", to_string(row.bound))
                .add("smooth", row.smooth ? 1 : 0)
                .add("factors", format_factorization(row.factors))
                .add("discrepancy", mismatch.empty() ? "none" : mismatch);
            rec.print(out, format);
        } else {
            out << std::setw(4) << row.n << std::setw(8) << to_string(row.max_p) << std::setw(7) << row.max_e
                << std::setw(12) << to_string(row.max_weighted) << std::setw(7) << to_string(row.bound) << std::setw(8)
                << (row.smooth ? "yes" : "no") << "  " << format_factorization(row.factors);
            if (!mismatch.empty()) out << "  * tabulated " << mismatch;
            out << '\n';
        }
    }
    if (format == Format::text && any_discrepancy)
        out << "* derived value differs from the tabulated reference value shown\n";
    return kExitOk;
}

int cmd_demo(const Options& opt, std::ostream& out, Format format) {
    require_divides(opt);
    const HybridCodec codec = HybridCodec::build(opt.q, opt.k, opt.n, optional_poly(opt.modulus, opt.q),
                                                 optional_poly(opt.modulus_n, opt.q));
    const Corruption corruption = parse_corruption(opt.corruption);
    const DemoReport report = run_demo(codec, corruption, opt.trials, opt.seed);
    Record rec;
    rec.add("q", opt.q)
        .add("k", opt.k)
        .add("n", opt.n)
        .add("corruption", to_string(corruption))
        .add("mode", opt.trials == 0 ? "exhaustive" : "random")
        .add("trials", report.trials)
        .add("successes", report.successes)
        .add("success_rate", report.success_rate())
        .add("tied_trials", report.tied_trials)
        .add("elapsed_ms", report.elapsed_ms);
    rec.print(out, format);
    return report.successes == report.trials ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Message encoding and decoding for spread and cyclic orbit subspace codes", "spreadcodec"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output style")->check(CLI::IsMember({"text", "kv"}));

    auto* construct = app.add_subcommand("construct", "Build a code and write its descriptor and codewords");
    construct->add_option("--kind", opt.kind, "spread | orbit | hybrid")->required()->check(CLI::IsMember({"spread", "orbit", "hybrid"}));
    construct->add_option("--q", opt.q, "Prime field size");
    construct->add_option("--k", opt.k, "Codeword dimension");
    construct->add_option("--n", opt.n, "Ambient dimension");
    construct->add_option("--modulus", opt.modulus, "Modulus, low-to-high coefficients (degree k; degree n for orbit)");
    construct->add_option("--modulus-n", opt.modulus_n, "Hybrid only: degree-n modulus of F_{q^n}");
    construct->add_option("--generator", opt.generator_file, "Orbit only: generator matrix file");
    construct->add_option("--subspace", opt.subspace_file, "Orbit only: seed subspace matrix file");
    construct->add_option("--out", opt.out_file, "Write the code file here instead of stdout");

    auto* encode = app.add_subcommand("encode", "Map a message to its codeword");
    encode->add_option("file", opt.file, "Code file from construct")->required();
    encode->add_option("--message", opt.message, "Message number")->required();
    encode->add_flag("--zero-based", opt.zero_based, "Messages numbered from 0");
    encode->add_option("--out", opt.out_file, "Write the codeword here instead of stdout");

    auto* decode = app.add_subcommand("decode", "Map a codeword back to its message");
    decode->add_option("file", opt.file, "Code file from construct")->required();
    decode->add_option("--codeword", opt.codeword_file, "Codeword matrix file, '-' for stdin")->required();
    decode->add_flag("--zero-based", opt.zero_based, "Messages numbered from 0");
    decode->add_option("--out", opt.out_file, "Write the message here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Check the spread axioms (and the isometry for hybrid codes)");
    verify->add_option("file", opt.file, "Code file from construct")->required();

    auto* table = app.add_subcommand("table-smooth", "Factor 2^n - 1 and report n^2-smoothness");
    table->add_option("--n", opt.n_list, "Values of n (default: the tabulated smooth n)")->delimiter(',')->check(CLI::Range(1u, 64u));

    auto* demo = app.add_subcommand("demo", "Hybrid encode, corrupt, nearest-codeword decode, message decode");
    demo->add_option("--q", opt.q, "Prime field size");
    demo->add_option("--k", opt.k, "Codeword dimension")->required();
    demo->add_option("--n", opt.n, "Ambient dimension")->required();
    demo->add_option("--modulus", opt.modulus, "Degree-k modulus");
    demo->add_option("--modulus-n", opt.modulus_n, "Degree-n modulus");
    demo->add_option("--corruption", opt.corruption, "none | erase-row | add-row")->check(CLI::IsMember({"none", "erase-row", "add-row"}));
    demo->add_option("--trials", opt.trials, "Random trials; 0 runs exhaustively");
    demo->add_option("--seed", opt.seed, "Random seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const Format format = opt.format == "kv" ? Format::kv : Format::text;
    try {
        if (*construct) return cmd_construct(opt, out, format);
        if (*encode) return cmd_encode(opt, out);
        if (*decode) return cmd_decode(opt, out);
        if (*verify) return cmd_verify(opt, out, format);
        if (*table) return cmd_table_smooth(opt, out, format);
        if (*demo) return cmd_demo(opt, out, format);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerification;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace spreadcodec

#include "spreadcodec/demo.hpp"

#include <chrono>
#include <random>
#include <stdexcept>

namespace spreadcodec {

namespace {

Subspace erase_row(const Subspace& c, std::size_t row) {
    FqMatrix rows(c.characteristic(), 0, c.ambient());
    for (std::size_t r = 0; r < c.dim(); ++r) {
        if (r != row) rows = vstack(rows, submatrix_rows(c.basis(), r, 1));
    }
    return Subspace::from_rows(rows);
}

Subspace add_row(const Subspace& c, const std::vector<Residue>& v) {
    return Subspace::from_rows(vstack(c.basis(), FqMatrix(c.characteristic(), 1, v.size(), v)));
}

std::vector<Residue> vector_from_index(u64 index, std::size_t n, Residue p) {
    std::vector<Residue> v(n);
    for (auto& x : v) {
        x = static_cast<Residue>(index % p);
        index /= p;
    }
    return v;
}

void run_trial(const HybridCodec& codec, u64 message, const Subspace& received, DemoReport& report) {
    const DecodeResult nearest = min_distance_decode(codec.channel_code(), received);
    ++report.trials;
    if (nearest.ties > 0) ++report.tied_trials;
    if (dec5(codec.channel_code()[nearest.index], codec) == message) ++report.successes;
}

}  // namespace

Corruption parse_corruption(const std::string& text) {
    if (text == "none") return Corruption::none;
    if (text == "erase-row") return Corruption::erase_row;
    if (text == "add-row") return Corruption::add_row;
    throw std::invalid_argument("unknown corruption '" + text + "' (none|erase-row|add-row)");
}

std::string to_string(Corruption c) {
    switch (c) {
        case Corruption::none: return "none";
        case Corruption::erase_row: return "erase-row";
        case Corruption::add_row: return "add-row";
    }
    return "?";
}

DemoReport run_demo(const HybridCodec& codec, Corruption corruption, u64 trials, u64 seed) {
    const auto start = std::chrono::steady_clock::now();
    DemoReport report;
    const Residue q = codec.spread().q();
    const std::size_t n = codec.spread().n();
    const u64 space = static_cast<u64>(ipow(q, static_cast<unsigned>(n)));

    if (trials == 0) {
        for (u64 i = 1; i <= codec.message_count(); ++i) {
            const Subspace sent = enc5(i, codec);
            switch (corruption) {
                case Corruption::none:
                    run_trial(codec, i, sent, report);
                    break;
                case Corruption::erase_row:
                    for (std::size_t r = 0; r < sent.dim(); ++r) run_trial(codec, i, erase_row(sent, r), report);
                    break;
                case Corruption::add_row:
                    for (u64 idx = 1; idx < space; ++idx) {
                        const auto v = vector_from_index(idx, n, q);
                        if (!sent.contains(v)) run_trial(codec, i, add_row(sent, v), report);
                    }
                    break;
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<u64> pick_message(1, codec.message_count());
        std::uniform_int_distribution<u64> pick_vector(1, space - 1);
        for (u64 t = 0; t < trials; ++t) {
            const u64 i = pick_message(rng);
            const Subspace sent = enc5(i, codec);
            switch (corruption) {
                case Corruption::none:
                    run_trial(codec, i, sent, report);
                    break;
                case Corruption::erase_row: {
                    std::uniform_int_distribution<std::size_t> pick_row(0, sent.dim() - 1);
                    run_trial(codec, i, erase_row(sent, pick_row(rng)), report);
                    break;
                }
                case Corruption::add_row: {
                    if (sent.dim() == n) throw std::invalid_argument("add-row needs k < n");
                    std::vector<Residue> v;
                    do {
                        v = vector_from_index(pick_vector(rng), n, q);
                    } while (sent.contains(v));
                    run_trial(codec, i, add_row(sent, v), report);
                    break;
                }
            }
        }
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace spreadcodec

#pragma once

#include "spreadcodec/finite_field.hpp"

namespace spreadcodec::detail {

inline Residue add_res(Residue a, Residue b, Residue p) {
    const u64 s = static_cast<u64>(a) + b;
    return static_cast<Residue>(s >= p ? s - p : s);
}

inline Residue sub_res(Residue a, Residue b, Residue p) {
    return a >= b ? a - b : static_cast<Residue>(static_cast<u64>(a) + p - b);
}

inline Residue mul_res(Residue a, Residue b, Residue p) {
    return static_cast<Residue>(static_cast<u64>(a) * b % p);
}

}  // namespace spreadcodec::detail

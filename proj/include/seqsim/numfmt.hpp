#pragma once

#include <charconv>
#include <string>

namespace seqsim {

// Shortest decimal representation that round-trips the double exactly.
// Used for all CSV/JSON emission so outputs are byte-deterministic.
inline std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace seqsim

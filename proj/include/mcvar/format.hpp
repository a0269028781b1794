#pragma once

#include <charconv>
#include <string>
#include <vector>

namespace mcvar {

// Shortest decimal representation that round-trips to the same binary double
// (at most 17 significant digits). Used everywhere a number is printed so the
// CLI output is byte-deterministic.
inline std::string format_double(double value) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

inline std::string format_vector(const std::vector<double>& v,
                                 const char* open = "(", const char* close = ")") {
    std::string out = open;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += format_double(v[i]);
    }
    out += close;
    return out;
}

} // namespace mcvar

#include "ifnstat/vector.hpp"

#include <charconv>

namespace ifnstat {

std::string Vector::to_string() const {
    std::string out = "(";
    char buf[32];
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ", ";
        // Shortest form that reads back to the same double.
        const auto res = std::to_chars(buf, buf + sizeof buf, coords_[i]);
        out.append(buf, res.ptr);
    }
    return out + ")";
}

}  // namespace ifnstat

#include "tetra/report.hpp"

#include <sstream>

namespace tetra {

std::string Report::serialize() const
{
    std::ostringstream out;
    out << "tetra-report v1\n";
    for (const auto& s : sections) {
        out << "[" << s.name << "]\n";
        for (const auto& [k, v] : s.entries) out << k << " = " << v << "\n";
    }
    return out.str();
}

} // namespace tetra

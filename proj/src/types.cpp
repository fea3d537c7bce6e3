#include "hifi/types.hpp"

namespace hifi {

std::string heading_path_display(const Section& section) {
    if (section.heading_path.empty()) return "(preamble)";
    std::string out;
    for (std::size_t i = 0; i < section.heading_path.size(); ++i) {
        if (i) out += " > ";
        out += section.heading_path[i];
    }
    return out;
}

}  // namespace hifi

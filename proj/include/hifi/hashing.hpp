#pragma once

#include <string>
#include <string_view>

namespace hifi {

// Hex-encoded SHA-256 digest. Used for fixture keys and cache filenames.
std::string sha256_hex(std::string_view data);

}  // namespace hifi

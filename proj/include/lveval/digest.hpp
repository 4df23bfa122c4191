#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace lveval {

// SHA-256 of a byte string, lowercase hex. Used for cache keys and
// deterministic mock seeding; not a security boundary.
std::string sha256_hex(std::string_view data);

// First 8 bytes of sha256 as an unsigned integer, for seeding RNGs.
std::uint64_t digest_seed(std::string_view data);

}  // namespace lveval

#pragma once

#include <cstdint>
#include <vector>

namespace ecclink {

// Hard bits, one per element, values 0 or 1.
using Bits = std::vector<std::uint8_t>;

// Unquantized channel observations. Sign convention: positive means bit 0.
using SoftWord = std::vector<double>;

}  // namespace ecclink

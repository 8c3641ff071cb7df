#pragma once

#include <cstddef>

namespace hvn {

// Default resource caps. Functions take caps as parameters so callers
// (CLI, suites) can raise them; HVN_ORDER_CAP in the environment is read
// by the CLI and applied where group order is the capped quantity.
inline constexpr std::size_t kTableOrderCap = 20000;  // Cayley table construction
inline constexpr std::size_t kSubgroupOrderCap = 400;  // exhaustive subgroup enumeration
inline constexpr std::size_t kGrouplikeDualCap = 20;   // |dual(G)| for grouplike enumeration
inline constexpr std::size_t kIsoPointCap = 16;        // brute-force system isomorphism
inline constexpr std::size_t kMeasureIsoCap = 16;      // brute-force measure isomorphism

}  // namespace hvn

#pragma once

#include <cstdint>

namespace tbtop {

/// Global enumeration budget, read once from TBTOP_BUDGET (default 4096).
/// Bounds exhaustive searches: subgroup enumeration, character search,
/// series truncation depth.
std::uint64_t budget();

}  // namespace tbtop

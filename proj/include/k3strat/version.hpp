#pragma once

namespace k3strat {

inline constexpr const char* k3strat_version = "1.0.0";

}  // namespace k3strat

#pragma once

#include <cstdint>

namespace secvar {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

} // namespace secvar

#pragma once

namespace parkfn {

inline constexpr const char* version = "0.1.0";

}  // namespace parkfn

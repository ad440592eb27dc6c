#pragma once

namespace fsc {

inline constexpr const char* kCodeVersion = "fieldscatter 1.0.0";

}  // namespace fsc

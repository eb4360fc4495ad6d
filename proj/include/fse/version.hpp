#pragma once

namespace fse {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fse

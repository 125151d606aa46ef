#pragma once

namespace lambda_lab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lambda_lab

#pragma once

#include <string>

namespace lmsa {

// 17 significant digits: enough to round-trip any double, so equal values
// always print identically.
std::string format_g17(double v);

}  // namespace lmsa

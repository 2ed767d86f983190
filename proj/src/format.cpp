#include "lmsa/format.hpp"

#include <cstdio>

namespace lmsa {

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace lmsa

#pragma once

#include <cstdio>
#include <string>

namespace annuli {

// Full 17-significant-digit decimal formatting. Round-trips any double, so
// file output can be compared byte-for-byte across runs.
inline std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace annuli

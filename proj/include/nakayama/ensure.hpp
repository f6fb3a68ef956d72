#pragma once

#include <stdexcept>
#include <string>

namespace nakayama {

/// Internal consistency check. A failure means a theorem the code relies on
/// did not hold, so it is always on regardless of NDEBUG.
inline void ensure(bool condition, const std::string& message) {
    if (!condition) throw std::logic_error("internal invariant violated: " + message);
}

}  // namespace nakayama

#pragma once

#include <cstdint>
#include <string>

namespace simpdeg {

/// Decimal text of num/den with `decimals` fraction digits, rounded half to
/// even on the exact rational value. den must be positive.
std::string format_ratio(std::int64_t num, std::int64_t den, int decimals = 2);

}  // namespace simpdeg

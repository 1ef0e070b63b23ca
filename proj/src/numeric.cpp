#include "simpdeg/numeric.hpp"

#include "simpdeg/error.hpp"

namespace simpdeg {

std::string format_ratio(std::int64_t num, std::int64_t den, int decimals) {
  if (den <= 0) throw ParamError("format_ratio needs a positive denominator");
  if (decimals < 0 || decimals > 12) throw ParamError("format_ratio supports 0..12 decimals");
  const bool negative = num < 0;
  const __int128 n = negative ? -static_cast<__int128>(num) : static_cast<__int128>(num);
  __int128 scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const __int128 scaled = n * scale;
  __int128 q = scaled / den;
  const __int128 r = scaled % den;
  if (2 * r > den || (2 * r == den && q % 2 == 1)) ++q;

  std::string digits;
  for (__int128 v = q; v > 0; v /= 10) digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
  while (static_cast<int>(digits.size()) < decimals + 1) digits.insert(digits.begin(), '0');
  if (decimals > 0) digits.insert(digits.end() - decimals, '.');
  if (negative && q != 0) digits.insert(digits.begin(), '-');
  return digits;
}

}  // namespace simpdeg

#include "dkps3/exact.hpp"

// Exact arithmetic is header-only; this translation unit pins the header's
// ODR-used symbols into the library.
namespace dkps3 {
static_assert(sizeof(Rational) == 16);
}

#pragma once

namespace vat::detail {

// 128-bit products for exact cross-multiplication of 64-bit ratios.
__extension__ typedef __int128 int128;

} // namespace vat::detail

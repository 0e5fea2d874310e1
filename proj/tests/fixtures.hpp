#pragma once

#include <array>
#include <string_view>

namespace fixtures {

// L(T_{h,2}) for h = 0..5.
inline constexpr std::array<std::string_view, 6> kBinaryTreeCounts{
    "1", "4", "240", "82368000", "315717859104620544000000",
    "11684127387646867268494413939618462518646164707029811200000000000",
};

// The expansion of the two-cycle generating function through total degree 11,
// copied term for term from the printed display.
inline constexpr std::string_view kPrintedExpansion =
    "208x^2y^2z^2+672x^2y^2z^3+752x^2y^3z^2+672x^3y^2z^2+"
    "2048x^2y^2z^4+2336x^2y^3z^3+2544x^2y^4z^2+2496x^3y^2z^3+"
    "2336x^3y^3z^2+2048x^4y^2z^2+5952x^2y^2z^5+6848x^2y^3z^4+"
    "8048x^2y^4z^3+8048x^2y^5z^2+8640x^3y^2z^4+8064x^3y^3z^3+"
    "8048x^3y^4z^2+8640x^4y^2z^3+6848x^4y^3z^2+5952x^5y^2z^2+"
    "16640x^2y^2z^6+19200x^2y^3z^5+24048x^2y^4z^4+26720x^2y^5z^3+"
    "24048x^2y^6z^2+28160x^3y^2z^5+26368x^3y^3z^4+26720x^3y^4z^3+"
    "26720x^3y^5z^2+33536x^4y^2z^4+26368x^4y^3z^3+24048x^4y^4z^2+"
    "28160x^5y^2z^3+19200x^5y^3z^2+16640x^6y^2z^2+45056x^2y^2z^7+"
    "51968x^2y^3z^6+68592x^2y^4z^5+84816x^2y^5z^4+84816x^2y^6z^3+"
    "68592x^2y^7z^2+87296x^3y^2z^6+82176x^3y^3z^5+84816x^3y^4z^4+"
    "87840x^3y^5z^3+84816x^3y^6z^2+121088x^4y^2z^5+96512x^4y^3z^4+"
    "84816x^4y^4z^3+84816x^4y^5z^2+121088x^5y^2z^4+82176x^5y^3z^3+"
    "68592x^5y^4z^2+87296x^6y^2z^3+51968x^6y^3z^2+45056x^7y^2z^2";

inline constexpr int kPrintedTermCount = 56;

} // namespace fixtures

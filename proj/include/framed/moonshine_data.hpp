#pragma once

// Literal data of the length-48 moonshine frame: three blocks of 16 coordinates,
// bit strings written left to right from coordinate 1.

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>

namespace framed::moonshine {

inline constexpr std::size_t kLength = 48;

// Generator matrix of the first order Reed-Muller code RM(1,4).
inline constexpr std::array<std::string_view, 5> kRM14Rows = {
    "1111111111111111",
    "1111111100000000",
    "1111000011110000",
    "1100110011001100",
    "1010101010101010",
};

// D is spanned by 1^16 0^32, 0^32 1^16 and (a,a,a) for a in RM(1,4).
inline constexpr std::string_view kFirstBlock = "111111111111111100000000000000000000000000000000";
inline constexpr std::string_view kThirdBlock = "000000000000000000000000000000001111111111111111";

// The order-4 lift direction and the dual shift of its twisted module.
inline constexpr std::string_view kXi = "110000001100000001100000011000001010000010100000";
inline constexpr std::string_view kKappa = "100000001000000000000000000000000000000000000000";

// D0 = span{1^16 0^32, 0^32 1^16, (a,a,a) for a below}; D1 = kD1Rep + D0.
inline constexpr std::array<std::string_view, 4> kD0Alphas = {
    "1111111111111111",
    "1111000011110000",
    "1100110011001100",
    "1010101010101010",
};
inline constexpr std::string_view kD1Rep = "111111110000000011111111000000001111111100000000";

// Generator matrix of the subcode of C0 supported on supp(xi).
inline constexpr std::array<std::string_view, 6> kXiSubcodeRows = {
    "110000001100000000000000000000000000000000000000",
    "000000000000000001100000011000000000000000000000",
    "000000000000000000000000000000001010000010100000",
    "100000001000000001000000010000000000000000000000",
    "100000001000000000000000000000001000000010000000",
    "110000000000000001100000000000001010000000000000",
};

// (weight, coefficient) pairs of the enumerators of D, D + <xi> and their difference f.
inline constexpr std::array<std::pair<int, int>, 5> kWD = {{{0, 1}, {16, 3}, {24, 120}, {32, 3}, {48, 1}}};
inline constexpr std::array<std::pair<int, int>, 9> kWDxi = {
    {{0, 1}, {12, 2}, {16, 3}, {20, 30}, {24, 184}, {28, 30}, {32, 3}, {36, 2}, {48, 1}}};
inline constexpr std::array<std::pair<int, int>, 5> kF = {{{12, 2}, {20, 30}, {24, 64}, {28, 30}, {36, 2}}};

// Leading McKay-Thompson coefficients as (exponent in 1/48 units, coefficient).
inline constexpr std::array<std::pair<std::int64_t, int>, 4> kMcKayThompson = {
    {{-48, 1}, {0, 0}, {48, 276}, {96, 2048}}};

// Supports (1-based) of the 24 weight-2 words of C0 + kappa.
inline constexpr std::array<std::pair<int, int>, 24> kWeightTwoSupports = {{
    {1, 9},   {2, 10},  {3, 11},  {4, 12},  {5, 13},  {6, 14},  {7, 15},  {8, 16},
    {17, 25}, {18, 26}, {19, 27}, {20, 28}, {21, 29}, {22, 30}, {23, 31}, {24, 32},
    {33, 41}, {34, 42}, {35, 43}, {36, 44}, {37, 45}, {38, 46}, {39, 47}, {40, 48},
}};

// Lowest weights and top-level dimensions of M(C0; xi, 0) and M(C0; 0, kappa).
inline constexpr std::pair<int, int> kTwistedTopWeight = {3, 4};
inline constexpr int kTwistedTopDimension = 1;
inline constexpr std::pair<int, int> kKappaTopWeight = {1, 1};
inline constexpr int kKappaTopDimension = 24;

}  // namespace framed::moonshine

#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace telepathy::reference {

// Third-vertex type lists and cover sizes reported by the original hand
// analysis of level 6 of G_16, for the canonical pairs
//   d=12: u = 111111.000000.0000, v = 000000.111111.0000
//   d=10: u = 11111.1.00000.00000, v = 00000.1.11111.00000
// Block strings transcribe with the first character at bit position 0.

struct TypeRow {
  std::string_view pattern;
  std::uint64_t a;  // orbit size
  std::uint64_t b;  // clique-cover size
};

inline constexpr std::string_view d12_u = "111111.000000.0000";
inline constexpr std::string_view d12_v = "000000.111111.0000";
inline constexpr std::string_view d10_u = "11111.1.00000.00000";
inline constexpr std::string_view d10_v = "00000.1.11111.00000";

inline constexpr std::array<TypeRow, 8> d12_types{{
    {"000000.111000.1110", 80, 394},
    {"000000.111100.1100", 90, 426},
    {"000000.111110.1000", 24, 495},
    {"100000.100000.1111", 36, 320},
    {"100000.111000.1100", 720, 370},
    {"100000.111100.1000", 360, 399},
    {"100000.111110.0000", 36, 425},
    {"111000.111000.0000", 400, 314},
}};

inline constexpr std::array<TypeRow, 15> d10_types{{
    {"00000.0.10000.11111", 5, 318},
    {"00000.0.11100.11100", 100, 366},
    {"00000.0.11110.11000", 50, 394},
    {"00000.0.11111.10000", 5, 428},
    {"00000.1.00000.11111", 1, 260},
    {"00000.1.11000.11100", 100, 345},
    {"00000.1.11100.11000", 100, 365},
    {"00000.1.11110.10000", 25, 408},
    {"10000.0.10000.11110", 125, 300},
    {"10000.0.11100.11000", 500, 346},
    {"10000.0.11110.10000", 125, 373},
    {"10000.0.11111.00000", 5, 405},
    {"11000.1.11000.10000", 500, 298},
    {"11000.1.11100.00000", 100, 313},
    {"11100.0.11100.00000", 100, 302},
}};

// Reported maxima of the two combinator arms and the resulting bounds.
inline constexpr std::uint64_t d12_max_arm = 399;
inline constexpr std::uint64_t d10_max_arm = 365;
inline constexpr std::uint64_t level6_bound = 402;
inline constexpr std::uint64_t independence_bound = 3912;

}  // namespace telepathy::reference

#pragma once

// Generated by tools/derive_sg64_182.cpp; do not edit.
// Cayley table of C8 : Q8 matching the SmallGroup(64,182) fingerprints.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace dcg::fixtures {

inline constexpr std::size_t sg64_182_order = 64;

inline constexpr std::array<std::string_view, 64> sg64_182_names{
    "1",
    "t",
    "t^2",
    "t^3",
    "t^4",
    "t^5",
    "t^6",
    "t^7",
    "a",
    "ta",
    "t^2a",
    "t^3a",
    "t^4a",
    "t^5a",
    "t^6a",
    "t^7a",
    "a^2",
    "ta^2",
    "t^2a^2",
    "t^3a^2",
    "t^4a^2",
    "t^5a^2",
    "t^6a^2",
    "t^7a^2",
    "a^3",
    "ta^3",
    "t^2a^3",
    "t^3a^3",
    "t^4a^3",
    "t^5a^3",
    "t^6a^3",
    "t^7a^3",
    "b",
    "tb",
    "t^2b",
    "t^3b",
    "t^4b",
    "t^5b",
    "t^6b",
    "t^7b",
    "ba",
    "tba",
    "t^2ba",
    "t^3ba",
    "t^4ba",
    "t^5ba",
    "t^6ba",
    "t^7ba",
    "ba^2",
    "tba^2",
    "t^2ba^2",
    "t^3ba^2",
    "t^4ba^2",
    "t^5ba^2",
    "t^6ba^2",
    "t^7ba^2",
    "ba^3",
    "tba^3",
    "t^2ba^3",
    "t^3ba^3",
    "t^4ba^3",
    "t^5ba^3",
    "t^6ba^3",
    "t^7ba^3",
};

inline constexpr std::array<std::uint8_t, 4096> sg64_182_table{
    0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 63,
    1, 2, 3, 4, 5, 6, 7, 0, 9, 10, 11, 12, 13, 14, 15, 8, 17, 18, 19, 20, 21, 22, 23, 16, 25, 26, 27, 28, 29, 30, 31, 24, 33, 34, 35, 36, 37, 38, 39, 32, 41, 42, 43, 44, 45, 46, 47, 40, 49, 50, 51, 52, 53, 54, 55, 48, 57, 58, 59, 60, 61, 62, 63, 56,
    2, 3, 4, 5, 6, 7, 0, 1, 10, 11, 12, 13, 14, 15, 8, 9, 18, 19, 20, 21, 22, 23, 16, 17, 26, 27, 28, 29, 30, 31, 24, 25, 34, 35, 36, 37, 38, 39, 32, 33, 42, 43, 44, 45, 46, 47, 40, 41, 50, 51, 52, 53, 54, 55, 48, 49, 58, 59, 60, 61, 62, 63, 56, 57,
    3, 4, 5, 6, 7, 0, 1, 2, 11, 12, 13, 14, 15, 8, 9, 10, 19, 20, 21, 22, 23, 16, 17, 18, 27, 28, 29, 30, 31, 24, 25, 26, 35, 36, 37, 38, 39, 32, 33, 34, 43, 44, 45, 46, 47, 40, 41, 42, 51, 52, 53, 54, 55, 48, 49, 50, 59, 60, 61, 62, 63, 56, 57, 58,
    4, 5, 6, 7, 0, 1, 2, 3, 12, 13, 14, 15, 8, 9, 10, 11, 20, 21, 22, 23, 16, 17, 18, 19, 28, 29, 30, 31, 24, 25, 26, 27, 36, 37, 38, 39, 32, 33, 34, 35, 44, 45, 46, 47, 40, 41, 42, 43, 52, 53, 54, 55, 48, 49, 50, 51, 60, 61, 62, 63, 56, 57, 58, 59,
    5, 6, 7, 0, 1, 2, 3, 4, 13, 14, 15, 8, 9, 10, 11, 12, 21, 22, 23, 16, 17, 18, 19, 20, 29, 30, 31, 24, 25, 26, 27, 28, 37, 38, 39, 32, 33, 34, 35, 36, 45, 46, 47, 40, 41, 42, 43, 44, 53, 54, 55, 48, 49, 50, 51, 52, 61, 62, 63, 56, 57, 58, 59, 60,
    6, 7, 0, 1, 2, 3, 4, 5, 14, 15, 8, 9, 10, 11, 12, 13, 22, 23, 16, 17, 18, 19, 20, 21, 30, 31, 24, 25, 26, 27, 28, 29, 38, 39, 32, 33, 34, 35, 36, 37, 46, 47, 40, 41, 42, 43, 44, 45, 54, 55, 48, 49, 50, 51, 52, 53, 62, 63, 56, 57, 58, 59, 60, 61,
    7, 0, 1, 2, 3, 4, 5, 6, 15, 8, 9, 10, 11, 12, 13, 14, 23, 16, 17, 18, 19, 20, 21, 22, 31, 24, 25, 26, 27, 28, 29, 30, 39, 32, 33, 34, 35, 36, 37, 38, 47, 40, 41, 42, 43, 44, 45, 46, 55, 48, 49, 50, 51, 52, 53, 54, 63, 56, 57, 58, 59, 60, 61, 62,
    8, 11, 14, 9, 12, 15, 10, 13, 16, 19, 22, 17, 20, 23, 18, 21, 24, 27, 30, 25, 28, 31, 26, 29, 0, 3, 6, 1, 4, 7, 2, 5, 56, 59, 62, 57, 60, 63, 58, 61, 32, 35, 38, 33, 36, 39, 34, 37, 40, 43, 46, 41, 44, 47, 42, 45, 48, 51, 54, 49, 52, 55, 50, 53,
    9, 12, 15, 10, 13, 8, 11, 14, 17, 20, 23, 18, 21, 16, 19, 22, 25, 28, 31, 26, 29, 24, 27, 30, 1, 4, 7, 2, 5, 0, 3, 6, 57, 60, 63, 58, 61, 56, 59, 62, 33, 36, 39, 34, 37, 32, 35, 38, 41, 44, 47, 42, 45, 40, 43, 46, 49, 52, 55, 50, 53, 48, 51, 54,
    10, 13, 8, 11, 14, 9, 12, 15, 18, 21, 16, 19, 22, 17, 20, 23, 26, 29, 24, 27, 30, 25, 28, 31, 2, 5, 0, 3, 6, 1, 4, 7, 58, 61, 56, 59, 62, 57, 60, 63, 34, 37, 32, 35, 38, 33, 36, 39, 42, 45, 40, 43, 46, 41, 44, 47, 50, 53, 48, 51, 54, 49, 52, 55,
    11, 14, 9, 12, 15, 10, 13, 8, 19, 22, 17, 20, 23, 18, 21, 16, 27, 30, 25, 28, 31, 26, 29, 24, 3, 6, 1, 4, 7, 2, 5, 0, 59, 62, 57, 60, 63, 58, 61, 56, 35, 38, 33, 36, 39, 34, 37, 32, 43, 46, 41, 44, 47, 42, 45, 40, 51, 54, 49, 52, 55, 50, 53, 48,
    12, 15, 10, 13, 8, 11, 14, 9, 20, 23, 18, 21, 16, 19, 22, 17, 28, 31, 26, 29, 24, 27, 30, 25, 4, 7, 2, 5, 0, 3, 6, 1, 60, 63, 58, 61, 56, 59, 62, 57, 36, 39, 34, 37, 32, 35, 38, 33, 44, 47, 42, 45, 40, 43, 46, 41, 52, 55, 50, 53, 48, 51, 54, 49,
    13, 8, 11, 14, 9, 12, 15, 10, 21, 16, 19, 22, 17, 20, 23, 18, 29, 24, 27, 30, 25, 28, 31, 26, 5, 0, 3, 6, 1, 4, 7, 2, 61, 56, 59, 62, 57, 60, 63, 58, 37, 32, 35, 38, 33, 36, 39, 34, 45, 40, 43, 46, 41, 44, 47, 42, 53, 48, 51, 54, 49, 52, 55, 50,
    14, 9, 12, 15, 10, 13, 8, 11, 22, 17, 20, 23, 18, 21, 16, 19, 30, 25, 28, 31, 26, 29, 24, 27, 6, 1, 4, 7, 2, 5, 0, 3, 62, 57, 60, 63, 58, 61, 56, 59, 38, 33, 36, 39, 34, 37, 32, 35, 46, 41, 44, 47, 42, 45, 40, 43, 54, 49, 52, 55, 50, 53, 48, 51,
    15, 10, 13, 8, 11, 14, 9, 12, 23, 18, 21, 16, 19, 22, 17, 20, 31, 26, 29, 24, 27, 30, 25, 28, 7, 2, 5, 0, 3, 6, 1, 4, 63, 58, 61, 56, 59, 62, 57, 60, 39, 34, 37, 32, 35, 38, 33, 36, 47, 42, 45, 40, 43, 46, 41, 44, 55, 50, 53, 48, 51, 54, 49, 52,
    16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 48, 49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 63, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47,
    17, 18, 19, 20, 21, 22, 23, 16, 25, 26, 27, 28, 29, 30, 31, 24, 1, 2, 3, 4, 5, 6, 7, 0, 9, 10, 11, 12, 13, 14, 15, 8, 49, 50, 51, 52, 53, 54, 55, 48, 57, 58, 59, 60, 61, 62, 63, 56, 33, 34, 35, 36, 37, 38, 39, 32, 41, 42, 43, 44, 45, 46, 47, 40,
    18, 19, 20, 21, 22, 23, 16, 17, 26, 27, 28, 29, 30, 31, 24, 25, 2, 3, 4, 5, 6, 7, 0, 1, 10, 11, 12, 13, 14, 15, 8, 9, 50, 51, 52, 53, 54, 55, 48, 49, 58, 59, 60, 61, 62, 63, 56, 57, 34, 35, 36, 37, 38, 39, 32, 33, 42, 43, 44, 45, 46, 47, 40, 41,
    19, 20, 21, 22, 23, 16, 17, 18, 27, 28, 29, 30, 31, 24, 25, 26, 3, 4, 5, 6, 7, 0, 1, 2, 11, 12, 13, 14, 15, 8, 9, 10, 51, 52, 53, 54, 55, 48, 49, 50, 59, 60, 61, 62, 63, 56, 57, 58, 35, 36, 37, 38, 39, 32, 33, 34, 43, 44, 45, 46, 47, 40, 41, 42,
    20, 21, 22, 23, 16, 17, 18, 19, 28, 29, 30, 31, 24, 25, 26, 27, 4, 5, 6, 7, 0, 1, 2, 3, 12, 13, 14, 15, 8, 9, 10, 11, 52, 53, 54, 55, 48, 49, 50, 51, 60, 61, 62, 63, 56, 57, 58, 59, 36, 37, 38, 39, 32, 33, 34, 35, 44, 45, 46, 47, 40, 41, 42, 43,
    21, 22, 23, 16, 17, 18, 19, 20, 29, 30, 31, 24, 25, 26, 27, 28, 5, 6, 7, 0, 1, 2, 3, 4, 13, 14, 15, 8, 9, 10, 11, 12, 53, 54, 55, 48, 49, 50, 51, 52, 61, 62, 63, 56, 57, 58, 59, 60, 37, 38, 39, 32, 33, 34, 35, 36, 45, 46, 47, 40, 41, 42, 43, 44,
    22, 23, 16, 17, 18, 19, 20, 21, 30, 31, 24, 25, 26, 27, 28, 29, 6, 7, 0, 1, 2, 3, 4, 5, 14, 15, 8, 9, 10, 11, 12, 13, 54, 55, 48, 49, 50, 51, 52, 53, 62, 63, 56, 57, 58, 59, 60, 61, 38, 39, 32, 33, 34, 35, 36, 37, 46, 47, 40, 41, 42, 43, 44, 45,
    23, 16, 17, 18, 19, 20, 21, 22, 31, 24, 25, 26, 27, 28, 29, 30, 7, 0, 1, 2, 3, 4, 5, 6, 15, 8, 9, 10, 11, 12, 13, 14, 55, 48, 49, 50, 51, 52, 53, 54, 63, 56, 57, 58, 59, 60, 61, 62, 39, 32, 33, 34, 35, 36, 37, 38, 47, 40, 41, 42, 43, 44, 45, 46,
    24, 27, 30, 25, 28, 31, 26, 29, 0, 3, 6, 1, 4, 7, 2, 5, 8, 11, 14, 9, 12, 15, 10, 13, 16, 19, 22, 17, 20, 23, 18, 21, 40, 43, 46, 41, 44, 47, 42, 45, 48, 51, 54, 49, 52, 55, 50, 53, 56, 59, 62, 57, 60, 63, 58, 61, 32, 35, 38, 33, 36, 39, 34, 37,
    25, 28, 31, 26, 29, 24, 27, 30, 1, 4, 7, 2, 5, 0, 3, 6, 9, 12, 15, 10, 13, 8, 11, 14, 17, 20, 23, 18, 21, 16, 19, 22, 41, 44, 47, 42, 45, 40, 43, 46, 49, 52, 55, 50, 53, 48, 51, 54, 57, 60, 63, 58, 61, 56, 59, 62, 33, 36, 39, 34, 37, 32, 35, 38,
    26, 29, 24, 27, 30, 25, 28, 31, 2, 5, 0, 3, 6, 1, 4, 7, 10, 13, 8, 11, 14, 9, 12, 15, 18, 21, 16, 19, 22, 17, 20, 23, 42, 45, 40, 43, 46, 41, 44, 47, 50, 53, 48, 51, 54, 49, 52, 55, 58, 61, 56, 59, 62, 57, 60, 63, 34, 37, 32, 35, 38, 33, 36, 39,
    27, 30, 25, 28, 31, 26, 29, 24, 3, 6, 1, 4, 7, 2, 5, 0, 11, 14, 9, 12, 15, 10, 13, 8, 19, 22, 17, 20, 23, 18, 21, 16, 43, 46, 41, 44, 47, 42, 45, 40, 51, 54, 49, 52, 55, 50, 53, 48, 59, 62, 57, 60, 63, 58, 61, 56, 35, 38, 33, 36, 39, 34, 37, 32,
    28, 31, 26, 29, 24, 27, 30, 25, 4, 7, 2, 5, 0, 3, 6, 1, 12, 15, 10, 13, 8, 11, 14, 9, 20, 23, 18, 21, 16, 19, 22, 17, 44, 47, 42, 45, 40, 43, 46, 41, 52, 55, 50, 53, 48, 51, 54, 49, 60, 63, 58, 61, 56, 59, 62, 57, 36, 39, 34, 37, 32, 35, 38, 33,
    29, 24, 27, 30, 25, 28, 31, 26, 5, 0, 3, 6, 1, 4, 7, 2, 13, 8, 11, 14, 9, 12, 15, 10, 21, 16, 19, 22, 17, 20, 23, 18, 45, 40, 43, 46, 41, 44, 47, 42, 53, 48, 51, 54, 49, 52, 55, 50, 61, 56, 59, 62, 57, 60, 63, 58, 37, 32, 35, 38, 33, 36, 39, 34,
    30, 25, 28, 31, 26, 29, 24, 27, 6, 1, 4, 7, 2, 5, 0, 3, 14, 9, 12, 15, 10, 13, 8, 11, 22, 17, 20, 23, 18, 21, 16, 19, 46, 41, 44, 47, 42, 45, 40, 43, 54, 49, 52, 55, 50, 53, 48, 51, 62, 57, 60, 63, 58, 61, 56, 59, 38, 33, 36, 39, 34, 37, 32, 35,
    31, 26, 29, 24, 27, 30, 25, 28, 7, 2, 5, 0, 3, 6, 1, 4, 15, 10, 13, 8, 11, 14, 9, 12, 23, 18, 21, 16, 19, 22, 17, 20, 47, 42, 45, 40, 43, 46, 41, 44, 55, 50, 53, 48, 51, 54, 49, 52, 63, 58, 61, 56, 59, 62, 57, 60, 39, 34, 37, 32, 35, 38, 33, 36,
    32, 37, 34, 39, 36, 33, 38, 35, 40, 45, 42, 47, 44, 41, 46, 43, 48, 53, 50, 55, 52, 49, 54, 51, 56, 61, 58, 63, 60, 57, 62, 59, 16, 21, 18, 23, 20, 17, 22, 19, 24, 29, 26, 31, 28, 25, 30, 27, 0, 5, 2, 7, 4, 1, 6, 3, 8, 13, 10, 15, 12, 9, 14, 11,
    33, 38, 35, 32, 37, 34, 39, 36, 41, 46, 43, 40, 45, 42, 47, 44, 49, 54, 51, 48, 53, 50, 55, 52, 57, 62, 59, 56, 61, 58, 63, 60, 17, 22, 19, 16, 21, 18, 23, 20, 25, 30, 27, 24, 29, 26, 31, 28, 1, 6, 3, 0, 5, 2, 7, 4, 9, 14, 11, 8, 13, 10, 15, 12,
    34, 39, 36, 33, 38, 35, 32, 37, 42, 47, 44, 41, 46, 43, 40, 45, 50, 55, 52, 49, 54, 51, 48, 53, 58, 63, 60, 57, 62, 59, 56, 61, 18, 23, 20, 17, 22, 19, 16, 21, 26, 31, 28, 25, 30, 27, 24, 29, 2, 7, 4, 1, 6, 3, 0, 5, 10, 15, 12, 9, 14, 11, 8, 13,
    35, 32, 37, 34, 39, 36, 33, 38, 43, 40, 45, 42, 47, 44, 41, 46, 51, 48, 53, 50, 55, 52, 49, 54, 59, 56, 61, 58, 63, 60, 57, 62, 19, 16, 21, 18, 23, 20, 17, 22, 27, 24, 29, 26, 31, 28, 25, 30, 3, 0, 5, 2, 7, 4, 1, 6, 11, 8, 13, 10, 15, 12, 9, 14,
    36, 33, 38, 35, 32, 37, 34, 39, 44, 41, 46, 43, 40, 45, 42, 47, 52, 49, 54, 51, 48, 53, 50, 55, 60, 57, 62, 59, 56, 61, 58, 63, 20, 17, 22, 19, 16, 21, 18, 23, 28, 25, 30, 27, 24, 29, 26, 31, 4, 1, 6, 3, 0, 5, 2, 7, 12, 9, 14, 11, 8, 13, 10, 15,
    37, 34, 39, 36, 33, 38, 35, 32, 45, 42, 47, 44, 41, 46, 43, 40, 53, 50, 55, 52, 49, 54, 51, 48, 61, 58, 63, 60, 57, 62, 59, 56, 21, 18, 23, 20, 17, 22, 19, 16, 29, 26, 31, 28, 25, 30, 27, 24, 5, 2, 7, 4, 1, 6, 3, 0, 13, 10, 15, 12, 9, 14, 11, 8,
    38, 35, 32, 37, 34, 39, 36, 33, 46, 43, 40, 45, 42, 47, 44, 41, 54, 51, 48, 53, 50, 55, 52, 49, 62, 59, 56, 61, 58, 63, 60, 57, 22, 19, 16, 21, 18, 23, 20, 17, 30, 27, 24, 29, 26, 31, 28, 25, 6, 3, 0, 5, 2, 7, 4, 1, 14, 11, 8, 13, 10, 15, 12, 9,
    39, 36, 33, 38, 35, 32, 37, 34, 47, 44, 41, 46, 43, 40, 45, 42, 55, 52, 49, 54, 51, 48, 53, 50, 63, 60, 57, 62, 59, 56, 61, 58, 23, 20, 17, 22, 19, 16, 21, 18, 31, 28, 25, 30, 27, 24, 29, 26, 7, 4, 1, 6, 3, 0, 5, 2, 15, 12, 9, 14, 11, 8, 13, 10,
    40, 47, 46, 45, 44, 43, 42, 41, 48, 55, 54, 53, 52, 51, 50, 49, 56, 63, 62, 61, 60, 59, 58, 57, 32, 39, 38, 37, 36, 35, 34, 33, 8, 15, 14, 13, 12, 11, 10, 9, 16, 23, 22, 21, 20, 19, 18, 17, 24, 31, 30, 29, 28, 27, 26, 25, 0, 7, 6, 5, 4, 3, 2, 1,
    41, 40, 47, 46, 45, 44, 43, 42, 49, 48, 55, 54, 53, 52, 51, 50, 57, 56, 63, 62, 61, 60, 59, 58, 33, 32, 39, 38, 37, 36, 35, 34, 9, 8, 15, 14, 13, 12, 11, 10, 17, 16, 23, 22, 21, 20, 19, 18, 25, 24, 31, 30, 29, 28, 27, 26, 1, 0, 7, 6, 5, 4, 3, 2,
    42, 41, 40, 47, 46, 45, 44, 43, 50, 49, 48, 55, 54, 53, 52, 51, 58, 57, 56, 63, 62, 61, 60, 59, 34, 33, 32, 39, 38, 37, 36, 35, 10, 9, 8, 15, 14, 13, 12, 11, 18, 17, 16, 23, 22, 21, 20, 19, 26, 25, 24, 31, 30, 29, 28, 27, 2, 1, 0, 7, 6, 5, 4, 3,
    43, 42, 41, 40, 47, 46, 45, 44, 51, 50, 49, 48, 55, 54, 53, 52, 59, 58, 57, 56, 63, 62, 61, 60, 35, 34, 33, 32, 39, 38, 37, 36, 11, 10, 9, 8, 15, 14, 13, 12, 19, 18, 17, 16, 23, 22, 21, 20, 27, 26, 25, 24, 31, 30, 29, 28, 3, 2, 1, 0, 7, 6, 5, 4,
    44, 43, 42, 41, 40, 47, 46, 45, 52, 51, 50, 49, 48, 55, 54, 53, 60, 59, 58, 57, 56, 63, 62, 61, 36, 35, 34, 33, 32, 39, 38, 37, 12, 11, 10, 9, 8, 15, 14, 13, 20, 19, 18, 17, 16, 23, 22, 21, 28, 27, 26, 25, 24, 31, 30, 29, 4, 3, 2, 1, 0, 7, 6, 5,
    45, 44, 43, 42, 41, 40, 47, 46, 53, 52, 51, 50, 49, 48, 55, 54, 61, 60, 59, 58, 57, 56, 63, 62, 37, 36, 35, 34, 33, 32, 39, 38, 13, 12, 11, 10, 9, 8, 15, 14, 21, 20, 19, 18, 17, 16, 23, 22, 29, 28, 27, 26, 25, 24, 31, 30, 5, 4, 3, 2, 1, 0, 7, 6,
    46, 45, 44, 43, 42, 41, 40, 47, 54, 53, 52, 51, 50, 49, 48, 55, 62, 61, 60, 59, 58, 57, 56, 63, 38, 37, 36, 35, 34, 33, 32, 39, 14, 13, 12, 11, 10, 9, 8, 15, 22, 21, 20, 19, 18, 17, 16, 23, 30, 29, 28, 27, 26, 25, 24, 31, 6, 5, 4, 3, 2, 1, 0, 7,
    47, 46, 45, 44, 43, 42, 41, 40, 55, 54, 53, 52, 51, 50, 49, 48, 63, 62, 61, 60, 59, 58, 57, 56, 39, 38, 37, 36, 35, 34, 33, 32, 15, 14, 13, 12, 11, 10, 9, 8, 23, 22, 21, 20, 19, 18, 17, 16, 31, 30, 29, 28, 27, 26, 25, 24, 7, 6, 5, 4, 3, 2, 1, 0,
    48, 53, 50, 55, 52, 49, 54, 51, 56, 61, 58, 63, 60, 57, 62, 59, 32, 37, 34, 39, 36, 33, 38, 35, 40, 45, 42, 47, 44, 41, 46, 43, 0, 5, 2, 7, 4, 1, 6, 3, 8, 13, 10, 15, 12, 9, 14, 11, 16, 21, 18, 23, 20, 17, 22, 19, 24, 29, 26, 31, 28, 25, 30, 27,
    49, 54, 51, 48, 53, 50, 55, 52, 57, 62, 59, 56, 61, 58, 63, 60, 33, 38, 35, 32, 37, 34, 39, 36, 41, 46, 43, 40, 45, 42, 47, 44, 1, 6, 3, 0, 5, 2, 7, 4, 9, 14, 11, 8, 13, 10, 15, 12, 17, 22, 19, 16, 21, 18, 23, 20, 25, 30, 27, 24, 29, 26, 31, 28,
    50, 55, 52, 49, 54, 51, 48, 53, 58, 63, 60, 57, 62, 59, 56, 61, 34, 39, 36, 33, 38, 35, 32, 37, 42, 47, 44, 41, 46, 43, 40, 45, 2, 7, 4, 1, 6, 3, 0, 5, 10, 15, 12, 9, 14, 11, 8, 13, 18, 23, 20, 17, 22, 19, 16, 21, 26, 31, 28, 25, 30, 27, 24, 29,
    51, 48, 53, 50, 55, 52, 49, 54, 59, 56, 61, 58, 63, 60, 57, 62, 35, 32, 37, 34, 39, 36, 33, 38, 43, 40, 45, 42, 47, 44, 41, 46, 3, 0, 5, 2, 7, 4, 1, 6, 11, 8, 13, 10, 15, 12, 9, 14, 19, 16, 21, 18, 23, 20, 17, 22, 27, 24, 29, 26, 31, 28, 25, 30,
    52, 49, 54, 51, 48, 53, 50, 55, 60, 57, 62, 59, 56, 61, 58, 63, 36, 33, 38, 35, 32, 37, 34, 39, 44, 41, 46, 43, 40, 45, 42, 47, 4, 1, 6, 3, 0, 5, 2, 7, 12, 9, 14, 11, 8, 13, 10, 15, 20, 17, 22, 19, 16, 21, 18, 23, 28, 25, 30, 27, 24, 29, 26, 31,
    53, 50, 55, 52, 49, 54, 51, 48, 61, 58, 63, 60, 57, 62, 59, 56, 37, 34, 39, 36, 33, 38, 35, 32, 45, 42, 47, 44, 41, 46, 43, 40, 5, 2, 7, 4, 1, 6, 3, 0, 13, 10, 15, 12, 9, 14, 11, 8, 21, 18, 23, 20, 17, 22, 19, 16, 29, 26, 31, 28, 25, 30, 27, 24,
    54, 51, 48, 53, 50, 55, 52, 49, 62, 59, 56, 61, 58, 63, 60, 57, 38, 35, 32, 37, 34, 39, 36, 33, 46, 43, 40, 45, 42, 47, 44, 41, 6, 3, 0, 5, 2, 7, 4, 1, 14, 11, 8, 13, 10, 15, 12, 9, 22, 19, 16, 21, 18, 23, 20, 17, 30, 27, 24, 29, 26, 31, 28, 25,
    55, 52, 49, 54, 51, 48, 53, 50, 63, 60, 57, 62, 59, 56, 61, 58, 39, 36, 33, 38, 35, 32, 37, 34, 47, 44, 41, 46, 43, 40, 45, 42, 7, 4, 1, 6, 3, 0, 5, 2, 15, 12, 9, 14, 11, 8, 13, 10, 23, 20, 17, 22, 19, 16, 21, 18, 31, 28, 25, 30, 27, 24, 29, 26,
    56, 63, 62, 61, 60, 59, 58, 57, 32, 39, 38, 37, 36, 35, 34, 33, 40, 47, 46, 45, 44, 43, 42, 41, 48, 55, 54, 53, 52, 51, 50, 49, 24, 31, 30, 29, 28, 27, 26, 25, 0, 7, 6, 5, 4, 3, 2, 1, 8, 15, 14, 13, 12, 11, 10, 9, 16, 23, 22, 21, 20, 19, 18, 17,
    57, 56, 63, 62, 61, 60, 59, 58, 33, 32, 39, 38, 37, 36, 35, 34, 41, 40, 47, 46, 45, 44, 43, 42, 49, 48, 55, 54, 53, 52, 51, 50, 25, 24, 31, 30, 29, 28, 27, 26, 1, 0, 7, 6, 5, 4, 3, 2, 9, 8, 15, 14, 13, 12, 11, 10, 17, 16, 23, 22, 21, 20, 19, 18,
    58, 57, 56, 63, 62, 61, 60, 59, 34, 33, 32, 39, 38, 37, 36, 35, 42, 41, 40, 47, 46, 45, 44, 43, 50, 49, 48, 55, 54, 53, 52, 51, 26, 25, 24, 31, 30, 29, 28, 27, 2, 1, 0, 7, 6, 5, 4, 3, 10, 9, 8, 15, 14, 13, 12, 11, 18, 17, 16, 23, 22, 21, 20, 19,
    59, 58, 57, 56, 63, 62, 61, 60, 35, 34, 33, 32, 39, 38, 37, 36, 43, 42, 41, 40, 47, 46, 45, 44, 51, 50, 49, 48, 55, 54, 53, 52, 27, 26, 25, 24, 31, 30, 29, 28, 3, 2, 1, 0, 7, 6, 5, 4, 11, 10, 9, 8, 15, 14, 13, 12, 19, 18, 17, 16, 23, 22, 21, 20,
    60, 59, 58, 57, 56, 63, 62, 61, 36, 35, 34, 33, 32, 39, 38, 37, 44, 43, 42, 41, 40, 47, 46, 45, 52, 51, 50, 49, 48, 55, 54, 53, 28, 27, 26, 25, 24, 31, 30, 29, 4, 3, 2, 1, 0, 7, 6, 5, 12, 11, 10, 9, 8, 15, 14, 13, 20, 19, 18, 17, 16, 23, 22, 21,
    61, 60, 59, 58, 57, 56, 63, 62, 37, 36, 35, 34, 33, 32, 39, 38, 45, 44, 43, 42, 41, 40, 47, 46, 53, 52, 51, 50, 49, 48, 55, 54, 29, 28, 27, 26, 25, 24, 31, 30, 5, 4, 3, 2, 1, 0, 7, 6, 13, 12, 11, 10, 9, 8, 15, 14, 21, 20, 19, 18, 17, 16, 23, 22,
    62, 61, 60, 59, 58, 57, 56, 63, 38, 37, 36, 35, 34, 33, 32, 39, 46, 45, 44, 43, 42, 41, 40, 47, 54, 53, 52, 51, 50, 49, 48, 55, 30, 29, 28, 27, 26, 25, 24, 31, 6, 5, 4, 3, 2, 1, 0, 7, 14, 13, 12, 11, 10, 9, 8, 15, 22, 21, 20, 19, 18, 17, 16, 23,
    63, 62, 61, 60, 59, 58, 57, 56, 39, 38, 37, 36, 35, 34, 33, 32, 47, 46, 45, 44, 43, 42, 41, 40, 55, 54, 53, 52, 51, 50, 49, 48, 31, 30, 29, 28, 27, 26, 25, 24, 7, 6, 5, 4, 3, 2, 1, 0, 15, 14, 13, 12, 11, 10, 9, 8, 23, 22, 21, 20, 19, 18, 17, 16,
};

}  // namespace dcg::fixtures

#pragma once

#include <array>

namespace kronfam::reference {

/// Published family1(a, a, k), a = 0..5, k = 0..12.
inline constexpr std::array<std::array<int, 13>, 6> kFamily1Grid{{
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7},
    {1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57},
    {1, 1, 3, 5, 9, 13, 22, 30, 45, 61, 85, 111, 150},
    {1, 1, 3, 5, 10, 15, 26, 38, 60, 85, 125, 172, 243},
    {1, 1, 3, 5, 10, 16, 28, 42, 68, 100, 151, 215, 312},
}};

struct Family2Row {
  int label;  ///< the i printed in the row header
  std::array<int, 17> values;
};

/// Published family2(2, 2, k, i), k = 0..16, rows with their printed labels.
inline constexpr std::array<Family2Row, 5> kFamily2Grid{{
    {0, {1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57, 66, 81, 93, 111}},
    {1, {0, 0, 0, 1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57, 66}},
    {2, {0, 0, 0, 0, 0, 0, 1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38}},
    {4, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 3, 4, 7, 9, 14, 17}},
    {5, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 3, 4, 7}},
}};

/// Published family3(2, 3, k, i), i = 0..5, k = 0..13.
inline constexpr std::array<std::array<int, 14>, 6> kFamily3Grid{{
    {1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57, 66},
    {0, 1, 2, 4, 7, 11, 16, 23, 31, 41, 53, 67, 83, 102},
    {0, 0, 1, 2, 5, 8, 14, 20, 30, 40, 55, 70, 91, 112},
    {0, 0, 0, 1, 2, 5, 9, 15, 23, 34, 47, 64, 84, 108},
    {0, 0, 0, 0, 1, 2, 5, 9, 16, 24, 37, 51, 71, 93},
    {0, 0, 0, 0, 0, 1, 2, 5, 9, 16, 25, 38, 54, 75},
}};

/// Published stable diagonal values diag_stable(2, j), j = 0..5.
inline constexpr std::array<int, 6> kFamily3Diagonal{1, 2, 5, 9, 16, 25};

/// Published quasipolynomial for family1(2, 2, k), residues mod 6, constant first.
inline constexpr std::array<std::array<const char*, 4>, 6> kFamily1A2{{
    {"1", "2/3", "1/6", "1/72"},
    {"5/18", "13/24", "1/6", "1/72"},
    {"8/9", "2/3", "1/6", "1/72"},
    {"1/2", "13/24", "1/6", "1/72"},
    {"7/9", "2/3", "1/6", "1/72"},
    {"7/18", "13/24", "1/6", "1/72"},
}};

/// Published quasipolynomial for diag_stable(2, j), residues mod 6, constant first.
inline constexpr std::array<std::array<const char*, 5>, 6> kFamily3A2{{
    {"1", "1", "7/18", "1/16", "1/288"},
    {"175/288", "15/16", "7/18", "1/16", "1/288"},
    {"8/9", "1", "7/18", "1/16", "1/288"},
    {"23/32", "15/16", "7/18", "1/16", "1/288"},
    {"8/9", "1", "7/18", "1/16", "1/288"},
    {"175/288", "15/16", "7/18", "1/16", "1/288"},
}};

}  // namespace kronfam::reference

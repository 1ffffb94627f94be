#pragma once

#include <array>

namespace sedenion {

/// Signed basis index: e_m * e_n = sign * e_index.
struct signed_basis {
  int sign = 1;
  int index = 0;

  friend bool operator==(const signed_basis&, const signed_basis&) = default;
};

/// Published sedenion multiplication table, row e_m times column e_n.
/// Kept as an independent fixture; the library never multiplies through it.
inline constexpr std::array<std::array<signed_basis, 16>, 16> reference_sedenion_table{{
    {{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {1, 9}, {1, 10}, {1, 11}, {1, 12}, {1, 13}, {1, 14}, {1, 15}}},
    {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}, {1, 5}, {-1, 4}, {-1, 7}, {1, 6}, {1, 9}, {-1, 8}, {-1, 11}, {1, 10}, {-1, 13}, {1, 12}, {1, 15}, {-1, 14}}},
    {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}, {1, 6}, {1, 7}, {-1, 4}, {-1, 5}, {1, 10}, {1, 11}, {-1, 8}, {-1, 9}, {-1, 14}, {-1, 15}, {1, 12}, {1, 13}}},
    {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}, {1, 7}, {-1, 6}, {1, 5}, {-1, 4}, {1, 11}, {-1, 10}, {1, 9}, {-1, 8}, {-1, 15}, {1, 14}, {-1, 13}, {1, 12}}},
    {{{1, 4}, {-1, 5}, {-1, 6}, {-1, 7}, {-1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 12}, {1, 13}, {1, 14}, {1, 15}, {-1, 8}, {-1, 9}, {-1, 10}, {-1, 11}}},
    {{{1, 5}, {1, 4}, {-1, 7}, {1, 6}, {-1, 1}, {-1, 0}, {-1, 3}, {1, 2}, {1, 13}, {-1, 12}, {1, 15}, {-1, 14}, {1, 9}, {-1, 8}, {1, 11}, {-1, 10}}},
    {{{1, 6}, {1, 7}, {1, 4}, {-1, 5}, {-1, 2}, {1, 3}, {-1, 0}, {-1, 1}, {1, 14}, {-1, 15}, {-1, 12}, {1, 13}, {1, 10}, {-1, 11}, {-1, 8}, {1, 9}}},
    {{{1, 7}, {-1, 6}, {1, 5}, {1, 4}, {-1, 3}, {-1, 2}, {1, 1}, {-1, 0}, {1, 15}, {1, 14}, {-1, 13}, {-1, 12}, {1, 11}, {1, 10}, {-1, 9}, {-1, 8}}},
    {{{1, 8}, {-1, 9}, {-1, 10}, {-1, 11}, {-1, 12}, {-1, 13}, {-1, 14}, {-1, 15}, {-1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}}},
    {{{1, 9}, {1, 8}, {-1, 11}, {1, 10}, {-1, 13}, {1, 12}, {1, 15}, {-1, 14}, {-1, 1}, {-1, 0}, {-1, 3}, {1, 2}, {-1, 5}, {1, 4}, {1, 7}, {-1, 6}}},
    {{{1, 10}, {1, 11}, {1, 8}, {-1, 9}, {-1, 14}, {-1, 15}, {1, 12}, {1, 13}, {-1, 2}, {1, 3}, {-1, 0}, {-1, 1}, {-1, 6}, {-1, 7}, {1, 4}, {1, 5}}},
    {{{1, 11}, {-1, 10}, {1, 9}, {1, 8}, {-1, 15}, {1, 14}, {-1, 13}, {1, 12}, {-1, 3}, {-1, 2}, {1, 1}, {-1, 0}, {-1, 7}, {1, 6}, {-1, 5}, {1, 4}}},
    {{{1, 12}, {1, 13}, {1, 14}, {1, 15}, {1, 8}, {-1, 9}, {-1, 10}, {-1, 11}, {-1, 4}, {1, 5}, {1, 6}, {1, 7}, {-1, 0}, {-1, 1}, {-1, 2}, {-1, 3}}},
    {{{1, 13}, {-1, 12}, {1, 15}, {-1, 14}, {1, 9}, {1, 8}, {1, 11}, {-1, 10}, {-1, 5}, {-1, 4}, {1, 7}, {-1, 6}, {1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
    {{{1, 14}, {-1, 15}, {-1, 12}, {1, 13}, {1, 10}, {-1, 11}, {1, 8}, {1, 9}, {-1, 6}, {-1, 7}, {-1, 4}, {1, 5}, {1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
    {{{1, 15}, {1, 14}, {-1, 13}, {-1, 12}, {1, 11}, {1, 10}, {-1, 9}, {1, 8}, {-1, 7}, {1, 6}, {-1, 5}, {-1, 4}, {1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
}};

}  // namespace sedenion

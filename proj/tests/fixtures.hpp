#pragma once

// Matrices printed for H_4 and H_6, transcribed as integers. Inverses are
// scaled by 18 (H_4) and 30 (H_6); Laplacians by 2.

#include <vector>

#include "helm/matrix.hpp"

namespace helm::fixtures {

using IntRows = std::vector<std::vector<long>>;

inline const IntRows kDistanceH4 = {
    {0, 1, 1, 1, 2, 2, 2}, {1, 0, 1, 1, 1, 2, 2}, {1, 1, 0, 1, 2, 1, 2}, {1, 1, 1, 0, 2, 2, 1},
    {2, 1, 2, 2, 0, 3, 3}, {2, 2, 1, 2, 3, 0, 3}, {2, 2, 2, 1, 3, 3, 0},
};

inline const IntRows kDistanceH6 = {
    {0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2}, {1, 0, 1, 2, 2, 1, 1, 2, 3, 3, 2}, {1, 1, 0, 1, 2, 2, 2, 1, 2, 3, 3},
    {1, 2, 1, 0, 1, 2, 3, 2, 1, 2, 3}, {1, 2, 2, 1, 0, 1, 3, 3, 2, 1, 2}, {1, 1, 2, 2, 1, 0, 2, 3, 3, 2, 1},
    {2, 1, 2, 3, 3, 2, 0, 3, 4, 4, 3}, {2, 2, 1, 2, 3, 3, 3, 0, 3, 4, 4}, {2, 3, 2, 1, 2, 3, 4, 3, 0, 3, 4},
    {2, 3, 3, 2, 1, 2, 4, 4, 3, 0, 3}, {2, 2, 3, 3, 2, 1, 3, 4, 4, 3, 0},
};

// 18 * D^{-1} for H_4.
inline const IntRows kInverseH4Times18 = {
    {-13, 4, 4, 4, 1, 1, 1},   {4, -22, 5, 5, 8, -1, -1}, {4, 5, -22, 5, -1, 8, -1}, {4, 5, 5, -22, -1, -1, 8},
    {1, 8, -1, -1, -7, 2, 2},  {1, -1, 8, -1, 2, -7, 2}, {1, -1, -1, 8, 2, 2, -7},
};

// 30 * D^{-1} for H_6.
inline const IntRows kInverseH6Times30 = {
    {-37, 8, 8, 8, 8, 8, -1, -1, -1, -1, -1},
    {8, -52, 23, -7, -7, 23, 14, -1, -1, -1, -1},
    {8, 23, -52, 23, -7, -7, -1, 14, -1, -1, -1},
    {8, -7, 23, -52, 23, -7, -1, -1, 14, -1, -1},
    {8, -7, -7, 23, -52, 23, -1, -1, -1, 14, -1},
    {8, 23, -7, -7, 23, -52, -1, -1, -1, -1, 14},
    {-1, 14, -1, -1, -1, -1, -13, 2, 2, 2, 2},
    {-1, -1, 14, -1, -1, -1, 2, -13, 2, 2, 2},
    {-1, -1, -1, 14, -1, -1, 2, 2, -13, 2, 2},
    {-1, -1, -1, -1, 14, -1, 2, 2, 2, -13, 2},
    {-1, -1, -1, -1, -1, 14, 2, 2, 2, 2, -13},
};

// 2 * L for H_4.
inline const IntRows kLaplacianH4Times2 = {
    {3, -1, -1, -1, 0, 0, 0},  {-1, 5, -1, -1, -2, 0, 0}, {-1, -1, 5, -1, 0, -2, 0}, {-1, -1, -1, 5, 0, 0, -2},
    {0, -2, 0, 0, 2, 0, 0},    {0, 0, -2, 0, 0, 2, 0},    {0, 0, 0, -2, 0, 0, 2},
};

// 2 * L for H_6.
inline const IntRows kLaplacianH6Times2 = {
    {5, -1, -1, -1, -1, -1, 0, 0, 0, 0, 0},
    {-1, 7, -3, 1, 1, -3, -2, 0, 0, 0, 0},
    {-1, -3, 7, -3, 1, 1, 0, -2, 0, 0, 0},
    {-1, 1, -3, 7, -3, 1, 0, 0, -2, 0, 0},
    {-1, 1, 1, -3, 7, -3, 0, 0, 0, -2, 0},
    {-1, -3, 1, 1, -3, 7, 0, 0, 0, 0, -2},
    {0, -2, 0, 0, 0, 0, 2, 0, 0, 0, 0},
    {0, 0, -2, 0, 0, 0, 0, 2, 0, 0, 0},
    {0, 0, 0, -2, 0, 0, 0, 0, 2, 0, 0},
    {0, 0, 0, 0, -2, 0, 0, 0, 0, 2, 0},
    {0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 2},
};

inline IntMatrix int_matrix(const IntRows& rows) {
  IntMatrix out(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) out(i, j) = rows[i][j];
  return out;
}

// rows / scale as a rational matrix.
inline RatMatrix scaled(const IntRows& rows, long scale) {
  RatMatrix out = to_rational(int_matrix(rows));
  return out * frac(1, scale);
}

}  // namespace helm::fixtures

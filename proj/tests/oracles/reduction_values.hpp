#pragma once

// Generated by generate_reduction.py.

#include <array>

namespace oracle {

struct ReducedCoefficient {
  int stage;
  const char* monomial;
  long num;
  long den;
};

inline constexpr std::array<ReducedCoefficient, 20> kReducedCoefficients = {{
    {1, "ydd/t", 1, 1},
    {1, "yd*ydd/y", -4, 1},
    {1, "yd^3/y^2", -1, 1},
    {1, "yd^2/y", 0, 1},
    {1, "yd^2/(y*t)", 21, 10},
    {1, "yd/t^2", -12, 5},
    {1, "y/t^3", 9, 10},
    {2, "zd/t", 1, 1},
    {2, "z*zd", -7, 1},
    {2, "z^2/t", 31, 10},
    {2, "z^3", -6, 1},
    {2, "z", 0, 1},
    {2, "z/t^2", -12, 5},
    {2, "1/t^3", 9, 10},
    {3, "1", 4, 1},
    {3, "u", -7, 1},
    {3, "u^3/v", -6, 1},
    {3, "u^2/v", 101, 10},
    {3, "u/v", -27, 5},
    {3, "1/v", 9, 10},
}};

// u where the stage-3 relation has a v = 0 fixed point.
inline constexpr std::array<double, 3> kStage3Equilibria = {1.0 / 3, 3.0 / 5, 3.0 / 4};

}  // namespace oracle

#pragma once

// Generated by generate_jets.py; sympy derivatives rounded to double.

#include <array>

namespace oracle {

// (x + 1)**(3/2) at x = 0
inline constexpr std::array<double, 7> kPow32At0 = {1, 1.5, 0.75, -0.375, 0.5625, -1.40625, 4.921875};

// (x + 1)**(5/2) at x = 1
inline constexpr std::array<double, 7> kPow52At1 = {5.6568542494923806, 7.0710678118654755, 5.3033008588991066, 1.3258252147247767, -0.33145630368119416, 0.24859222776089562, -0.31074028470111953};

// exp(x)*log(x + 1) at x = 0
inline constexpr std::array<double, 7> kExpLogAt0 = {0, 1, 1, 2, 0, 9, -35};

// exp(-x/2)*cos(3*x) + sqrt(sin(x) + 2)/(x**2 + 1) at x = 7/10
inline constexpr std::array<double, 7> kMixedAt07 = {0.73558664515012484, -2.5145897058414737, 4.9474761339744369, 13.673025129162102, -68.619553456453417, -25.227369357339494, 732.56868223062565};

// exp(-x/4) at x = 3/10
inline constexpr std::array<double, 7> kGPrimeExpAt03 = {0.92774348632855286, -0.23193587158213821, 0.057983967895534554, -0.014495991973883638, 0.0036239979934709096, -0.0009059994983677274, 0.00022649987459193185};

}  // namespace oracle

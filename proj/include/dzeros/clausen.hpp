#pragma once

namespace dzeros {

inline constexpr double kZeta3 = 1.2020569031595942854;

// Clausen functions: cl2(x) = sum sin(nx)/n^2, cl3(x) = sum cos(nx)/n^3.
// Evaluated by Bernoulli-series expansions after range reduction; absolute
// accuracy ~1e-15 over the whole real line.
double cl2(double x);
double cl3(double x);

}  // namespace dzeros

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hill/types.hpp"

namespace hill {

// Bisection on a bracketing interval [a, b] with f(a) f(b) <= 0.
double bisect(const std::function<double(double)>& f, double a, double b, double xtol, int max_iter = 200);

// Bisection followed by Newton polish with an explicit derivative; falls back
// to the bisection value if Newton leaves the bracket.
double bisect_newton(const std::function<double(double)>& f, const std::function<double(double)>& df, double a,
                     double b, double xtol);

// Golden-section minimization of f on [a, b].
double golden_min(const std::function<double(double)>& f, double a, double b, double xtol);

// Scans [a, b] on a uniform grid and returns all sign-change brackets.
std::vector<std::pair<double, double>> sign_change_scan(const std::function<double(double)>& f, double a, double b,
                                                        int points);

}  // namespace hill

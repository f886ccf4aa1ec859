#pragma once

#include <vector>

namespace maass {

enum class Parity { Even, Odd };

// Hejhal's collocation method for Maass cusp forms on SL(2,Z):
// u(z) = sum_n c_n sqrt(y) K_{iR}(2 pi n y) cs(2 pi n x), cs = cos or sin.
// Coefficients are normalised so that c_1 = 1 (so c_n = lambda(n)).
struct Collocation {
    double R;
    Parity parity;
    int M0;   // coefficients kept in the expansion at heights >= sqrt(3)/2
    int Q;    // collocation points on the horizontal line y = Y
};

Collocation make_collocation(double R, Parity parity);

// Solve the truncated system at height Y; returns c_1..c_M0 (index 0 is c_1).
std::vector<double> solve_low_coefficients(const Collocation& c, double Y);

// Eigenvalue test functional: c_n(Y1) - c_n(Y2) for n = 2, 3 and the Hecke
// defect c_2 c_3 - c_6 at Y1.
struct Defect {
    double f2, f3, hecke;
};
Defect defect(const Collocation& c);

// Coefficients c_1..n_max for a form already known to high accuracy.
std::vector<double> all_coefficients(double R, Parity parity, int n_max);

}  // namespace maass

#include "conic/special.hpp"

#include <cmath>
#include <stdexcept>

namespace conic {

double chi2_survival(int k, double r) {
    if (k < 0) throw std::invalid_argument("chi2_survival: negative dof");
    if (r < 0) throw std::invalid_argument("chi2_survival: negative threshold");
    if (k == 0) return r <= 0.0 ? 1.0 : 0.0;
    if (r == 0.0) return 1.0;

    // Q_{k+2}(r) = Q_k(r) + (r/2)^{k/2} e^{-r/2} / Gamma(k/2 + 1)
    double h = r / 2.0;
    double q, term;
    int j;
    if (k % 2 == 0) {
        q = std::exp(-h); // Q_2
        // (r/2)^1 e^{-r/2} / Gamma(2)
        term = h * std::exp(-h);
        j = 2;
    } else {
        q = std::erfc(std::sqrt(h)); // Q_1
        // (r/2)^{1/2} e^{-r/2} / Gamma(3/2)
        term = std::sqrt(h) * std::exp(-h) / (std::sqrt(M_PI) / 2.0);
        j = 1;
    }
    while (j + 2 <= k) {
        q += term;
        term *= h / (static_cast<double>(j) / 2.0 + 1.0);
        j += 2;
    }
    return q;
}

} // namespace conic

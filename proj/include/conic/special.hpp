#pragma once

namespace conic {

/// P{chi^2_k >= r} for integer degrees of freedom. k = 0 is the point mass
/// at zero (survival 1 at r = 0, else 0).
double chi2_survival(int k, double r);

} // namespace conic

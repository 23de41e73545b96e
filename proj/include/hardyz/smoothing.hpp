#pragma once

namespace hardyz::smoothing {

// Smooth unit-partition cutoff: rho(x) = 1 on [0, 1/b], 0 on [b, inf),
// and rho(x) + rho(1/x) = 1 for all x > 0.
//
// Built in log coordinates, rho(e^y) = 1 - S((y + log b)/(2 log b)), with
// the symmetric C-infinity step S(u) = sigma(u)/(sigma(u)+sigma(1-u)),
// sigma(u) = exp(-1/u) for u > 0 and 0 otherwise.  The odd symmetry of S
// about u = 1/2 makes the partition identity exact by construction.
class Kernel {
public:
    explicit Kernel(double b = 2.0, int max_derivative_order = 4);

    double b() const { return b_; }
    int max_derivative_order() const { return max_order_; }

    // Value in [0,1]; exact 1 / exact 0 on the plateau and tail.
    double rho(double x) const;

    // d^order/dx^order rho(x), 1 <= order <= max_derivative_order.
    double rho_deriv(double x, int order) const;

private:
    double b_;
    double inv_b_;
    double log_b_;
    int max_order_;
};

Kernel make_kernel(double b);

} // namespace hardyz::smoothing

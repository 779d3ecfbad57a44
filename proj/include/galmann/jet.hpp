#ifndef GALMANN_JET_HPP
#define GALMANN_JET_HPP

#include <vector>

namespace galmann {

/// Truncated derivative tower of a smooth function at a point.
///
/// A Jet of order K stores (f(s0), f'(s0), ..., f^(K)(s0)); coefficient k
/// is the k-th derivative itself, not the Taylor coefficient f^(k)/k!.
/// Arithmetic converts to Taylor form internally, runs the usual truncated
/// power-series recurrences, and converts back, so the stored values stay
/// in the derivative convention throughout.
///
/// Binary operations on jets of different order truncate to the smaller
/// order; all operations on equal-order operands preserve the order.
class Jet {
public:
    /// Zero jet (all coefficients 0) of the given order >= 0.
    explicit Jet(int order);

    /// Jet of the constant function: (value, 0, ..., 0).
    static Jet constant(double value, int order);

    /// Jet of the identity evaluated at s0: (s0, 1, 0, ..., 0).
    static Jet variable(double s0, int order);

    int order() const { return static_cast<int>(d_.size()) - 1; }

    /// Value of the underlying function at the expansion point.
    double value() const { return d_[0]; }

    /// k-th derivative, 0 <= k <= order().
    double deriv(int k) const { return d_.at(static_cast<std::size_t>(k)); }

    double operator[](int k) const { return d_[static_cast<std::size_t>(k)]; }
    double& operator[](int k) { return d_[static_cast<std::size_t>(k)]; }

    /// Jet of f' at the same point, one order lower.  Requires order() >= 1.
    Jet derivative() const;

    /// Copy truncated to a lower (or equal) order.
    Jet truncated(int order) const;

    bool all_finite() const;

    friend Jet operator-(const Jet& a);
    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);

    friend Jet operator+(const Jet& a, double c);
    friend Jet operator+(double c, const Jet& a);
    friend Jet operator-(const Jet& a, double c);
    friend Jet operator-(double c, const Jet& a);
    friend Jet operator*(const Jet& a, double c);
    friend Jet operator*(double c, const Jet& a);
    friend Jet operator/(const Jet& a, double c);
    friend Jet operator/(double c, const Jet& a);

private:
    std::vector<double> d_; // d_[k] = f^(k)(s0)
};

Jet sin(const Jet& f);
Jet cos(const Jet& f);
Jet tan(const Jet& f);
Jet sinh(const Jet& f);
Jet cosh(const Jet& f);
Jet tanh(const Jet& f);
Jet exp(const Jet& f);
Jet log(const Jet& f);
Jet sqrt(const Jet& f);

/// Absolute value.  |f(s0)| within 1e-12 of zero is rejected: the
/// derivative tower is discontinuous across the sign change.
Jet abs(const Jet& f);

/// f^p for constant p.  Integer p uses repeated multiplication and works
/// for any base; fractional p lifts through exp(p*log f) and requires
/// f(s0) > 0.
Jet pow(const Jet& f, double p);

} // namespace galmann

#endif

#include "galmann/jet.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "galmann/errors.hpp"

namespace galmann {
namespace {

// Taylor form: t[k] = f^(k)(s0) / k!.  The series recurrences below all
// assume this normalization; to_taylor/from_taylor convert at the edges.
std::vector<double> to_taylor(const Jet& f) {
    std::vector<double> t(static_cast<std::size_t>(f.order()) + 1);
    double fact = 1.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k > 1) fact *= static_cast<double>(k);
        t[k] = f[static_cast<int>(k)] / fact;
    }
    return t;
}

Jet from_taylor(const std::vector<double>& t) {
    Jet f(static_cast<int>(t.size()) - 1);
    double fact = 1.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k > 1) fact *= static_cast<double>(k);
        f[static_cast<int>(k)] = t[k] * fact;
    }
    return f;
}

int common_order(const Jet& a, const Jet& b) {
    return std::min(a.order(), b.order());
}

// Cauchy product of truncated series.
std::vector<double> series_mul(const std::vector<double>& a,
                               const std::vector<double>& b) {
    std::vector<double> r(std::min(a.size(), b.size()), 0.0);
    for (std::size_t n = 0; n < r.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k)
            r[n] += a[k] * b[n - k];
    return r;
}

// h = f/g with h[n] = (f[n] - sum_{k<n} h[k] g[n-k]) / g[0].
std::vector<double> series_div(const std::vector<double>& f,
                               const std::vector<double>& g) {
    if (g[0] == 0.0) throw DomainError("division by zero");
    std::vector<double> h(std::min(f.size(), g.size()), 0.0);
    for (std::size_t n = 0; n < h.size(); ++n) {
        double acc = f[n];
        for (std::size_t k = 0; k < n; ++k) acc -= h[k] * g[n - k];
        h[n] = acc / g[0];
    }
    return h;
}

// r = exp(t): n r[n] = sum_{k<n} (n-k) t[n-k] r[k].
std::vector<double> series_exp(const std::vector<double>& t) {
    std::vector<double> r(t.size(), 0.0);
    r[0] = std::exp(t[0]);
    for (std::size_t n = 1; n < r.size(); ++n) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            acc += static_cast<double>(n - k) * t[n - k] * r[k];
        r[n] = acc / static_cast<double>(n);
    }
    return r;
}

// r = log(t): r[n] = (t[n] - (1/n) sum_{0<k<n} k r[k] t[n-k]) / t[0].
std::vector<double> series_log(const std::vector<double>& t) {
    if (t[0] <= 0.0) throw DomainError("log of a non-positive value");
    std::vector<double> r(t.size(), 0.0);
    r[0] = std::log(t[0]);
    for (std::size_t n = 1; n < r.size(); ++n) {
        double acc = 0.0;
        for (std::size_t k = 1; k < n; ++k)
            acc += static_cast<double>(k) * r[k] * t[n - k];
        r[n] = (t[n] - acc / static_cast<double>(n)) / t[0];
    }
    return r;
}

// r = sqrt(t): r[n] = (t[n] - sum_{0<k<n} r[k] r[n-k]) / (2 r[0]).
std::vector<double> series_sqrt(const std::vector<double>& t) {
    if (t[0] < 0.0) throw DomainError("sqrt of a negative value");
    if (t[0] == 0.0 && t.size() > 1)
        throw DomainError("sqrt at zero (derivatives undefined)");
    std::vector<double> r(t.size(), 0.0);
    r[0] = std::sqrt(t[0]);
    for (std::size_t n = 1; n < r.size(); ++n) {
        double acc = t[n];
        for (std::size_t k = 1; k < n; ++k) acc -= r[k] * r[n - k];
        r[n] = acc / (2.0 * r[0]);
    }
    return r;
}

// Coupled recurrence for (sin t, cos t) or (sinh t, cosh t):
//   n s[n] =  sum_{k<n} (n-k) t[n-k] c[k]
//   n c[n] = -sign * sum_{k<n} (n-k) t[n-k] s[k]
// with sign = +1 circular, -1 hyperbolic.
void series_sincos(const std::vector<double>& t, double sign,
                   std::vector<double>& s, std::vector<double>& c) {
    s.assign(t.size(), 0.0);
    c.assign(t.size(), 0.0);
    if (sign > 0) {
        s[0] = std::sin(t[0]);
        c[0] = std::cos(t[0]);
    } else {
        s[0] = std::sinh(t[0]);
        c[0] = std::cosh(t[0]);
    }
    for (std::size_t n = 1; n < t.size(); ++n) {
        double as = 0.0, ac = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double w = static_cast<double>(n - k) * t[n - k];
            as += w * c[k];
            ac += w * s[k];
        }
        s[n] = as / static_cast<double>(n);
        c[n] = -sign * ac / static_cast<double>(n);
    }
}

} // namespace

Jet::Jet(int order) : d_(static_cast<std::size_t>(order) + 1, 0.0) {}

Jet Jet::constant(double value, int order) {
    Jet j(order);
    j[0] = value;
    return j;
}

Jet Jet::variable(double s0, int order) {
    Jet j(order);
    j[0] = s0;
    if (order >= 1) j[1] = 1.0;
    return j;
}

Jet Jet::derivative() const {
    Jet r(order() - 1);
    for (int k = 0; k <= r.order(); ++k) r[k] = d_[static_cast<std::size_t>(k) + 1];
    return r;
}

Jet Jet::truncated(int order) const {
    Jet r(order);
    for (int k = 0; k <= order; ++k) r[k] = d_[static_cast<std::size_t>(k)];
    return r;
}

bool Jet::all_finite() const {
    for (double v : d_)
        if (!std::isfinite(v)) return false;
    return true;
}

Jet operator-(const Jet& a) {
    Jet r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = -a[k];
    return r;
}

Jet operator+(const Jet& a, const Jet& b) {
    Jet r(common_order(a, b));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
    return r;
}

Jet operator-(const Jet& a, const Jet& b) {
    Jet r(common_order(a, b));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
    return r;
}

Jet operator*(const Jet& a, const Jet& b) {
    return from_taylor(series_mul(to_taylor(a), to_taylor(b)));
}

Jet operator/(const Jet& a, const Jet& b) {
    return from_taylor(series_div(to_taylor(a), to_taylor(b)));
}

Jet operator+(const Jet& a, double c) {
    Jet r = a;
    r[0] += c;
    return r;
}

Jet operator+(double c, const Jet& a) { return a + c; }

Jet operator-(const Jet& a, double c) { return a + (-c); }

Jet operator-(double c, const Jet& a) { return (-a) + c; }

Jet operator*(const Jet& a, double c) {
    Jet r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = a[k] * c;
    return r;
}

Jet operator*(double c, const Jet& a) { return a * c; }

Jet operator/(const Jet& a, double c) {
    if (c == 0.0) throw DomainError("division by zero");
    return a * (1.0 / c);
}

Jet operator/(double c, const Jet& a) {
    return Jet::constant(c, a.order()) / a;
}

Jet sin(const Jet& f) {
    std::vector<double> s, c;
    series_sincos(to_taylor(f), 1.0, s, c);
    return from_taylor(s);
}

Jet cos(const Jet& f) {
    std::vector<double> s, c;
    series_sincos(to_taylor(f), 1.0, s, c);
    return from_taylor(c);
}

Jet tan(const Jet& f) {
    std::vector<double> s, c;
    series_sincos(to_taylor(f), 1.0, s, c);
    if (c[0] == 0.0) throw DomainError("tan pole");
    return from_taylor(series_div(s, c));
}

Jet sinh(const Jet& f) {
    std::vector<double> s, c;
    series_sincos(to_taylor(f), -1.0, s, c);
    return from_taylor(s);
}

Jet cosh(const Jet& f) {
    std::vector<double> s, c;
    series_sincos(to_taylor(f), -1.0, s, c);
    return from_taylor(c);
}

Jet tanh(const Jet& f) {
    std::vector<double> s, c;
    series_sincos(to_taylor(f), -1.0, s, c);
    return from_taylor(series_div(s, c));
}

Jet exp(const Jet& f) { return from_taylor(series_exp(to_taylor(f))); }

Jet log(const Jet& f) { return from_taylor(series_log(to_taylor(f))); }

Jet sqrt(const Jet& f) { return from_taylor(series_sqrt(to_taylor(f))); }

Jet abs(const Jet& f) {
    if (std::abs(f.value()) < 1e-12)
        throw DomainError("abs at a sign change");
    return f.value() > 0.0 ? f : -f;
}

Jet pow(const Jet& f, double p) {
    if (p == std::nearbyint(p) && std::abs(p) <= 1e9) {
        long n = static_cast<long>(p);
        if (n == 0) return Jet::constant(1.0, f.order());
        const bool neg = n < 0;
        n = neg ? -n : n;
        // Square-and-multiply keeps the loop short for large exponents.
        Jet acc = Jet::constant(1.0, f.order());
        Jet base = f;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return neg ? Jet::constant(1.0, f.order()) / acc : acc;
    }
    if (f.value() <= 0.0)
        throw DomainError("pow of a non-positive base with fractional exponent");
    return exp(log(f) * p);
}

} // namespace galmann

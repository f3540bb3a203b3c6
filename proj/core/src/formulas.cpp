#include "balance/formulas.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace balance {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
bool operator<=(Rational a, Rational b) { return a.num * b.den <= b.num * a.den; }

Rational half_binomial2(long long n) { return {n * (n - 1), 4}; }

Rational bal_odd_cycle(long long n, long long k, int alpha) {
    if (alpha != 1 && alpha != -1) throw std::invalid_argument("bal_odd_cycle: alpha must be +-1");
    return Rational{(k - 1) * n} - Rational{k * k - k - 1 - alpha, 2};
}

bool odd_cycle_threshold_ok(long long n, long long k) {
    // n >= 9k^2/2 + 13k/4 + 49/32, cleared of denominators.
    return 32 * n >= 144 * k * k + 104 * k + 49;
}

std::pair<long long, long long> c4k_bounds(long long n, long long k) {
    long long lower = (k - 1) * n - (k - 1) * (k - 1);
    long long upper = (k - 1) * n + 12 * k * k + 3 * k;
    return {lower, upper};
}

long long linear_forest_ex(long long n, const std::vector<long long>& orders) {
    if (orders.empty()) throw std::invalid_argument("linear_forest_ex: empty component list");
    long long s = 0;
    bool all_odd = true;
    for (long long v : orders) {
        if (v < 2) throw std::invalid_argument("linear_forest_ex: component orders must be >= 2");
        s += v / 2;
        if (v % 2 == 0) all_odd = false;
    }
    long long c = all_odd ? 1 : 0;
    return (s - 1) * (n - s + 1) + (s - 1) * (s - 2) / 2 + c;
}

K5Constants k5_constants() {
    const double root2 = std::sqrt(2.0);
    const double base = (root2 - 1.0) / (2.0 * root2);
    return {2.0 * std::pow(base, 2.5), 1.0 / (4.0 * root2)};
}

std::pair<double, double> k5_bounds(long long n, double eps) {
    if (eps < 0.0 || eps >= 1.0) throw std::invalid_argument("k5_bounds: need 0 <= eps < 1");
    const K5Constants constants = k5_constants();
    const double half = half_binomial2(n).value();
    const double n32 = std::pow(static_cast<double>(n), 1.5);
    return {half + (1.0 - eps) * constants.c * n32, half + (1.0 + eps) * constants.upper_coeff * n32};
}

Rational structural_upper_bound(long long n, long long exval) {
    if (exval < 0) throw std::invalid_argument("structural_upper_bound: exval must be >= 0");
    return half_binomial2(n) + Rational{(exval + 1) / 2};
}

}  // namespace balance

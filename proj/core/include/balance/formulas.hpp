#ifndef BALANCE_FORMULAS_HPP
#define BALANCE_FORMULAS_HPP

#include <string>
#include <utility>
#include <vector>

namespace balance {

/// Exact rational with a tiny footprint; every displayed bound in the
/// library is an integer or a half-integer, but the type stays general.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);

    bool is_integer() const { return den == 1; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;  // "p" or "p/q"

    bool operator==(const Rational&) const = default;
};

Rational operator+(Rational a, Rational b);
Rational operator-(Rational a, Rational b);
bool operator<(Rational a, Rational b);
bool operator<=(Rational a, Rational b);

Rational half_binomial2(long long n);  // C(n,2)/2, exact

/// Predicted balancing number of the odd cycle C_{4k+alpha}:
/// (k-1)n - (k^2 - k - 1 - alpha)/2, alpha in {-1, +1}.
Rational bal_odd_cycle(long long n, long long k, int alpha);

/// Whether n meets the odd-cycle theorem threshold 9k^2/2 + 13k/4 + 49/32.
bool odd_cycle_threshold_ok(long long n, long long k);

/// [lower, upper) window for bal(n, C_{4k}):
/// (k-1)n - (k-1)^2 <= value < (k-1)n + 12k^2 + 3k.
std::pair<long long, long long> c4k_bounds(long long n, long long k);

/// Extremal number of the linear-forest family with component orders v_i:
/// (S-1)(n-S+1) + C(S-1,2) + c with S = sum floor(v_i/2), c = 1 iff all odd.
long long linear_forest_ex(long long n, const std::vector<long long>& orders);

struct K5Constants {
    double c;            // 2 ((sqrt(2)-1) / (2 sqrt 2))^{5/2}, about 0.016
    double upper_coeff;  // 1 / (4 sqrt 2), about 0.177
};
K5Constants k5_constants();

/// Window for lbal(n, K5):
/// C(n,2)/2 + (1-eps) c n^{3/2} <= value <= C(n,2)/2 + (1+eps) n^{3/2}/(4 sqrt 2).
std::pair<double, double> k5_bounds(long long n, double eps);

/// C(n,2)/2 + ceil(exval / 2): the list balancing upper bound driven by the
/// extremal number of the half-edge family.
Rational structural_upper_bound(long long n, long long exval);

}  // namespace balance

#endif

#include "rotcost/error_model.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace rotcost {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

void check_k(int k) {
    if (k < 1 || k > k_max)
        throw std::invalid_argument("k must be in 1.." + std::to_string(k_max) +
                                    ", got " + std::to_string(k));
}

void check_prob(double p, double hi, const char* name) {
    if (!(p >= 0.0) || !(p < hi))
        throw std::domain_error(std::string(name) + " out of range");
}

}  // namespace

PhysicalParams PhysicalParams::standard(double p_g, bool include_even, int d_max) {
    PhysicalParams params;
    params.p_g = p_g;
    params.d_max = d_max;
    for (int d = 3; d <= d_max; d += include_even ? 1 : 2)
        params.allowed_distances.push_back(d);
    params.validate();
    return params;
}

void PhysicalParams::validate() const {
    if (!(p_g > 0.0) || !(p_g < 0.02))
        throw std::domain_error("p_g must lie in (0, 0.02), got " + std::to_string(p_g));
    if (allowed_distances.empty())
        throw std::invalid_argument("allowed_distances must be non-empty");
    int prev = 2;
    for (int d : allowed_distances) {
        if (d < 3 || d <= prev)
            throw std::invalid_argument("allowed_distances must be strictly increasing, all >= 3");
        prev = d;
    }
    if (d_max < allowed_distances.front())
        throw std::invalid_argument("d_max below the smallest allowed distance");
}

void DistillLevelParams::validate() const {
    check_k(k);
    if (!(epsilon > 0.0))
        throw std::domain_error("epsilon must be positive");
}

std::int64_t a_k(int k) {
    check_k(k);
    const std::int64_t num = 1 - 3 * (std::int64_t{1} << (k + 1)) + (std::int64_t{1} << (2 * k + 3));
    // 2^{2k+3} = 2 (mod 3) and 3*2^{k+1} = 0, so num = 1+2 = 0 (mod 3).
    return num / 3;
}

std::int64_t n_inputs(int k) {
    check_k(k);
    return (std::int64_t{1} << (k + 2)) - 1;
}

double p_out_cubic(double p_s, int k) {
    check_prob(p_s, 0.5, "p_s");
    return static_cast<double>(a_k(k)) * p_s * p_s * p_s;
}

double p_out_exact(double p_s, int k) {
    check_prob(p_s, 0.5, "p_s");
    // Numerator loses ~2 log10(1/p) digits to cancellation; 50-digit
    // arithmetic keeps the O(p^3) result exact to double precision for any
    // p down to ~1e-18 and k up to 16.
    const Wide p = p_s;
    const Wide q = 1 - 2 * p;
    const std::int64_t m = std::int64_t{1} << (k + 1);
    const std::int64_t n = (std::int64_t{1} << (k + 2)) - 1;
    const Wide q_m1 = pow(q, static_cast<unsigned>(m - 1));
    const Wide q_m = q_m1 * q;
    const Wide num = 1 - q_m1 * (2 * p * n + q_m);
    const Wide den = 2 * (1 + n * q_m);
    return static_cast<double>(num / den);
}

double success_prob_exact(double p_s, int k) {
    check_prob(p_s, 0.5 + 1e-12, "p_s");
    const double m = static_cast<double>(std::int64_t{1} << (k + 1));
    const double n1 = static_cast<double>(std::int64_t{1} << (k + 2));
    // (1-2p)^m in log domain; exact zero at p=0.5.
    const double q = 1.0 - 2.0 * p_s;
    const double qm = q == 0.0 ? 0.0 : std::exp(m * std::log1p(-2.0 * p_s));
    return (1.0 + (n1 - 1.0) * qm) / n1;
}

double success_prob_floor(double p_s, int k) {
    check_prob(p_s, 1.0, "p_s");
    const double n = static_cast<double>(n_inputs(k));
    return std::exp(n * std::log1p(-p_s));
}

double p_s_effective(double p_in, int k) {
    check_k(k);
    if (!(p_in >= 0.0)) throw std::domain_error("p_in must be non-negative");
    return 2.0 * (1.0 - std::ldexp(1.0, -k)) * p_in;
}

double pin_required(double p_out, int k, double epsilon) {
    check_k(k);
    if (!(p_out > 0.0)) throw std::domain_error("p_out must be positive");
    if (!(epsilon > 0.0)) throw std::domain_error("epsilon must be positive");
    const double target = p_out / ((1.0 + epsilon) * static_cast<double>(a_k(k)));
    return std::cbrt(target) / (2.0 * (1.0 - std::ldexp(1.0, -k)));
}

double logical_error_square(int d, double p_g) {
    if (d < 3) throw std::invalid_argument("d must be >= 3");
    const double x = 50.0 * p_g;
    if (x > 1.0)
        throw ModelRangeError("50*p_g above 1: logical error fit invalid above threshold");
    return 0.25 * std::pow(x, 0.5 * (d + 1));
}

double plumbing_failure(int d, double p_g) {
    // 2 defect types x 3 error classes x 5d/4 rounds x p_L, with the
    // 30/16 prefactor rounded to 2 as in the source model.
    return 8.0 * d * logical_error_square(d, p_g);
}

double qubit_rounds_per_plumbing(int d) {
    if (d < 3) throw std::invalid_argument("d must be >= 3");
    const double dd = static_cast<double>(d);
    return 125.0 * dd * dd * dd / 16.0;
}

double injection_error(double p_g) {
    if (!(p_g >= 0.0)) throw std::domain_error("p_g must be non-negative");
    return 10.0 * p_g;
}

double distillation_threshold(int k, ThresholdKind kind) {
    check_k(k);
    const double ak = static_cast<double>(a_k(k));
    if (kind == ThresholdKind::independent)
        return 1.0 / std::sqrt(ak);
    const double c = 2.0 * (1.0 - std::ldexp(1.0, -k));
    return 1.0 / std::sqrt(ak * c * c * c);
}

}  // namespace rotcost

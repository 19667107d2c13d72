#pragma once

#include <cstdint>
#include <vector>

#include "rotcost/errors.hpp"

namespace rotcost {

/// Physical gate error rate plus the code-distance search space shared by
/// every cost query.
struct PhysicalParams {
    double p_g = 1e-3;
    std::vector<int> allowed_distances;  // strictly increasing, all >= 3
    int d_max = 199;

    /// Odd distances 3..d_max (the usual surface code choice), or every
    /// integer >= 3 when `include_even` is set.
    static PhysicalParams standard(double p_g, bool include_even = false, int d_max = 199);

    /// Throws std::domain_error / std::invalid_argument on out-of-range
    /// values. The fit behind the cost model was taken on p_g in (0, 0.02).
    void validate() const;
};

inline constexpr int k_max = 16;  // 2^{k+2}-1 input counts stop being practical

/// Per-level distillation query: rotation index and error budget fraction.
struct DistillLevelParams {
    int k = 1;
    double epsilon = 1.0;
    void validate() const;
};

/// Cubic error suppression coefficient of the k-th generalized Reed-Muller
/// distillation code: (1 - 3*2^{k+1} + 2^{2k+3})/3, exactly.
std::int64_t a_k(int k);

/// Input states consumed by one level of |psi_k> distillation: 2^{k+2}-1.
std::int64_t n_inputs(int k);

/// Leading-order output error A_k * p_s^3.
double p_out_cubic(double p_s, int k);

/// Full input-output error relation of the distillation code, evaluated with
/// extended-precision compensated powers so that the O(p^3) result survives
/// the cancellation between near-unit terms.
double p_out_exact(double p_s, int k);

/// Probability that a distillation round reports no error (exact form).
double success_prob_exact(double p_s, int k);

/// Lower bound (1-p_s)^{n_k}: probability that no input state failed.
double success_prob_floor(double p_s, int k);

/// Total error of the recursive Z_k implementation when every consumed state
/// has error p_in: the corrective cascade needs Z_j half as often per step
/// down, so p_s = 2(1-2^{-k}) p_in.
double p_s_effective(double p_in, int k);

/// Inverts p_out = (1+eps) A_k (2(1-2^{-k}) p_in)^3 for p_in.
double pin_required(double p_out, int k, double epsilon);

/// Per-round logical X error rate of a d x d surface code patch,
/// 0.25*(50 p_g)^{(d+1)/2}. Throws ModelRangeError above threshold.
double logical_error_square(int d, double p_g);

/// Upper bound on the logical error rate of one plumbing piece,
/// 2d*(50 p_g)^{(d+1)/2}.
double plumbing_failure(int d, double p_g);

/// Qubits-rounds per plumbing piece: eta = 125 d^3 / 16.
double qubit_rounds_per_plumbing(int d);

/// Error rate of an injected (undistilled) logical state, 10 p_g. Doubles as
/// the base-case cutoff of the cost recursion.
double injection_error(double p_g);

enum class ThresholdKind {
    equal_errors,  // fixed point of the eps=0 recursion with p_s = 2(1-2^{-k}) p
    independent,   // threshold on p_s itself: A_k^{-1/2}
};

/// Largest input error below which distillation still improves the state.
double distillation_threshold(int k, ThresholdKind kind);

}  // namespace rotcost

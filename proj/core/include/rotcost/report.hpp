#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rotcost {

enum class PlanStatus {
    ok,
    infeasible_distance,  // no allowed distance meets the error budget
    infeasible_depth,     // recursion cannot reach the injection cutoff
    infeasible_pin,       // required input error is not a valid probability
};

inline bool feasible(PlanStatus s) { return s == PlanStatus::ok; }
std::string to_string(PlanStatus s);

/// One distillation level. children[i] holds the sub-chain producing the
/// |psi_j> inputs at weight 2^{-(k-j)}; a null child means those states are
/// injected directly (error already above the 10 p_g cutoff).
struct LevelPlan {
    int k = 0;
    double p_out = 0;  // this level's output error target
    double p_in = 0;   // per-input-state error
    double p_s = 0;    // effective transversal rotation error
    int d = 0;         // code distance
    double inv_p0 = 1;
    double volume_pp = 0;  // structure volume, plumbing pieces
    double volume_qr = 0;  // eta(d) * volume_pp
    double total_qr = 0;   // recursive total including retries
    struct Child {
        double weight = 1;
        std::shared_ptr<const LevelPlan> plan;  // null = injection base case
    };
    std::vector<Child> children;
};

/// Full answer to "what does one distilled |psi_k> state cost". An empty
/// root with total_qr = 0 is the injection base case.
struct ChainPlan {
    std::shared_ptr<const LevelPlan> root;
    double epsilon = 0;
    double total_qr = 0;
    PlanStatus status = PlanStatus::ok;
};

enum class Method { distillation, sequence };
enum class SequenceSource { generated, imported, model };

std::string to_string(Method m);
std::string to_string(SequenceSource s);

struct DistillParams {
    double epsilon = 0;
    std::vector<int> distances;     // preorder over chains, j = k..1
    std::vector<ChainPlan> chains;  // one per j = k..1
};

struct SequenceParams {
    int t_count = 0;
    double delta = 0;
    double per_t_error = 0;
    double inner_epsilon = 0;  // epsilon chosen for the per-T distillation
    SequenceSource source = SequenceSource::model;
};

/// Cost of implementing one Z_k gate by either method.
struct CostReport {
    Method method = Method::distillation;
    int k = 0;
    double p_target = 0;
    double p_g = 0;
    PlanStatus status = PlanStatus::ok;
    double total_qr = 0;
    std::optional<DistillParams> distill;
    std::optional<SequenceParams> sequence;
};

}  // namespace rotcost

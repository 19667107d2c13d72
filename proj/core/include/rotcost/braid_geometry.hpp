#pragma once

#include <cstdint>

namespace rotcost {

/// Bounding box of a braided structure, measured in plumbing pieces.
/// depth runs along the time axis.
struct CuboidDims {
    int depth = 1;
    int width = 1;
    int height = 1;
};

/// Dimensions and defect bookkeeping of the uniform |psi_k> distillation
/// structure family: one row of two primal defects per logical qubit,
/// k+3 initialization/CNOT layers followed by k rotation layers.
struct CanonicalStructure {
    int k = 1;
    CuboidDims dims;
    std::int64_t primal_defect_count = 0;  // 2^{k+3}
    int cnot_layers = 0;                   // k+3
    int rotation_layers = 0;               // k
};

CanonicalStructure canonical_dims(int k);

/// Primal cubes in the minimum-volume bounding cuboid.
std::int64_t structure_volume(const CuboidDims& dims);

/// Closed form for the canonical family: V_k = 2^{k+3} (2k+3).
std::int64_t v_k(int k);

}  // namespace rotcost

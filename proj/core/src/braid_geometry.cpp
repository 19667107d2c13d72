#include "rotcost/braid_geometry.hpp"

#include <stdexcept>

#include "rotcost/error_model.hpp"

namespace rotcost {

CanonicalStructure canonical_dims(int k) {
    if (k < 1 || k > k_max) throw std::invalid_argument("canonical_dims: k out of range");
    CanonicalStructure s;
    s.k = k;
    s.cnot_layers = k + 3;
    s.rotation_layers = k;
    s.dims.depth = 2 * k + 3;
    s.dims.width = 2;
    s.dims.height = 1 << (k + 2);
    s.primal_defect_count = std::int64_t{1} << (k + 3);
    return s;
}

std::int64_t structure_volume(const CuboidDims& dims) {
    if (dims.depth < 1 || dims.width < 1 || dims.height < 1)
        throw std::invalid_argument("structure_volume: dims must be >= 1");
    return std::int64_t{dims.depth} * dims.width * dims.height;
}

std::int64_t v_k(int k) {
    if (k < 1 || k > k_max) throw std::invalid_argument("v_k: k out of range");
    return (std::int64_t{1} << (k + 3)) * (2 * k + 3);
}

}  // namespace rotcost

#include "pps/matrices.hpp"

namespace pps {

bool gram_identities_check(const Graph& g, const Orientation& o) {
    using M = DenseMatrix<std::int64_t>;
    const M d = directed_incidence<std::int64_t>(g, o);
    const M x = incidence<std::int64_t>(g);
    const M dl = d * d.transpose() - laplacian<std::int64_t>(g);
    const M xq = x * x.transpose() - signless_laplacian<std::int64_t>(g);
    return (dl.array() == 0).all() && (xq.array() == 0).all();
}

} // namespace pps

#include "ufact/manifolds.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ufact {

StiefelFrame stiefel_frame(const ParamSet& p) {
    const SchemeTag tag = p.scheme.tag;
    if (tag != SchemeTag::StiefelReduced && tag != SchemeTag::StiefelFull)
        throw std::invalid_argument("stiefel_frame: ParamSet scheme is not a Stiefel variant");
    const ComplexMatrix u = compose(p);
    StiefelFrame f;
    f.n = p.scheme.n;
    f.k = p.scheme.k;
    f.matrix = block(u, 0, 0, f.n, f.k);
    f.variant = tag == SchemeTag::StiefelReduced ? StiefelVariant::Reduced : StiefelVariant::Full;
    return f;
}

ComplexMatrix stiefel_projection(const StiefelFrame& f) {
    return matmul(f.matrix, adjoint(f.matrix));
}

GrassmannPoint make_grassmann_point(std::size_t n, std::size_t k, ParamSet params) {
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("GrassmannPoint: need 1 <= k <= n-1");
    const std::size_t kc = std::min(k, n - k);
    if (params.scheme.tag != SchemeTag::Grassmann || params.scheme.n != n ||
        params.scheme.k != kc)
        throw std::invalid_argument("GrassmannPoint: params must use the Grassmann scheme over (" +
                                    std::to_string(n) + ", " + std::to_string(kc) + ")");
    validate_param_set(params);
    GrassmannPoint g;
    g.n = n;
    g.k = k;
    g.params = std::move(params);
    g.complemented = k > n - k;
    return g;
}

ComplexMatrix grassmann_matrix(const GrassmannPoint& g) {
    if (g.complemented)
        throw std::invalid_argument(
            "grassmann_matrix: k > floor(n/2) has no direct matrix; use the projection");
    return compose(g.params);
}

ComplexMatrix grassmann_projection(const GrassmannPoint& g) {
    if (g.complemented) {
        GrassmannPoint direct;
        direct.n = g.n;
        direct.k = g.n - g.k;
        direct.params = g.params;
        direct.complemented = false;
        return ComplexMatrix::identity(g.n) - grassmann_projection(direct);
    }
    const ComplexMatrix u = grassmann_matrix(g);
    ComplexMatrix p(g.n, g.n);
    for (std::size_t i = 0; i < g.k; ++i) {
        const ComplexMatrix ui = column(u, i);
        p = p + outer(ui, ui);
    }
    return p;
}

}  // namespace ufact

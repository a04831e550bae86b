#include "singlab/fd.hpp"

namespace singlab {

FdResult fd_derivative(const std::function<double(const std::array<double, 3>&)>& f,
                       const std::array<double, 3>& point, const MultiIndex& direction) {
    int order = direction.order();
    if (order < 1 || order > 2)
        throw std::invalid_argument("fd_derivative: direction order must be 1 or 2");

    int axes[2] = {-1, -1};
    int pos = 0;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < direction[i]; ++k) axes[pos++] = i;

    if (order == 1) {
        int ax = axes[0];
        return fd_first(
            [&](double s) {
                auto q = point;
                q[static_cast<size_t>(ax)] = s;
                return f(q);
            },
            point[static_cast<size_t>(ax)]);
    }
    if (axes[0] == axes[1]) {
        int ax = axes[0];
        return fd_second(
            [&](double s) {
                auto q = point;
                q[static_cast<size_t>(ax)] = s;
                return f(q);
            },
            point[static_cast<size_t>(ax)]);
    }
    // mixed second derivative: outer fd_first of an inner fd_first
    int ax0 = axes[0], ax1 = axes[1];
    auto inner = [&](double s0) {
        auto q = point;
        q[static_cast<size_t>(ax0)] = s0;
        return fd_first(
                   [&](double s1) {
                       auto qq = q;
                       qq[static_cast<size_t>(ax1)] = s1;
                       return f(qq);
                   },
                   point[static_cast<size_t>(ax1)])
            .value;
    };
    FdResult r = fd_first(inner, point[static_cast<size_t>(ax0)]);
    r.error = std::max(r.error, 1e-9 * (1.0 + std::abs(r.value)));
    return r;
}

}  // namespace singlab

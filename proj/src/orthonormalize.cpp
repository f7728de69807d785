#include "minkpair/orthonormalize.hpp"

#include <cmath>

namespace minkpair {

Transition<double> orthonormal_transition(const SymForm<double>& g,
                                          const TolerancePolicy& policy) {
    validate_pair(MetricPair<double>{g, SymForm<double>{}}, policy);
    const OrthogonalFrame<double> frame = g_orthogonal_frame(g);
    const double nt = std::sqrt(frame.q_time);
    const double ns = std::sqrt(-frame.q_space);
    double c0x = frame.vx / nt, c0y = frame.vy / nt;
    double c1x = frame.wx / ns, c1y = frame.wy / ns;
    if (c0x * c1y - c1x * c0y < 0) {
        c1x = -c1x;
        c1y = -c1y;
    }
    return Transition<double>::from_columns(c0x, c0y, c1x, c1y);
}

std::pair<MetricPair<double>, Transition<double>> orthonormalize_pair(
    const MetricPair<double>& pair, const TolerancePolicy& policy) {
    const Transition<double> s = orthonormal_transition(pair.g, policy);
    return {MetricPair<double>{congruence(pair.g, s), congruence(pair.gcheck, s)}, s};
}

}  // namespace minkpair

#include "hcs/spectral.hpp"

#include <Eigen/Core>
#include <cmath>

#include "hcs/rng.hpp"

namespace hcs {

FiedlerResult fiedler_vector(const WeightedGraph& g, uint64_t seed, int iterations) {
    const int n = g.n();
    FiedlerResult res;
    res.vec.assign(n, 0.0);
    if (n < 2) return res;

    Eigen::VectorXd sqrt_d(n);
    for (int v = 0; v < n; ++v) {
        double d = g.weighted_degree(v);
        sqrt_d[v] = std::sqrt(d > 0 ? d : 1.0);
    }
    Eigen::VectorXd top = sqrt_d.normalized();  // eigenvector of 2I - L for eigenvalue 2

    // y = (2I - L) x = x + D^{-1/2} W D^{-1/2} x
    auto apply = [&](const Eigen::VectorXd& x) {
        Eigen::VectorXd t = x.cwiseQuotient(sqrt_d);
        Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
        for (const auto& e : g.edges()) {
            s[e.u] += e.w * t[e.v];
            s[e.v] += e.w * t[e.u];
        }
        return Eigen::VectorXd(x + s.cwiseQuotient(sqrt_d));
    };

    Rng rng(seed * 0x2545F4914F6CDD1DULL + 1);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.uniform01() - 0.5;
    x -= top * top.dot(x);
    double norm = x.norm();
    if (norm < 1e-300) return res;
    x /= norm;

    double mu = 0;
    for (int it = 0; it < iterations; ++it) {
        Eigen::VectorXd y = apply(x);
        y -= top * top.dot(y);
        double ny = y.norm();
        if (ny < 1e-300) {
            // x is (numerically) in the kernel of 2I - L after deflation; treat as converged
            res.converged = true;
            break;
        }
        y /= ny;
        double drift = (y - x).norm();
        x = y;
        mu = ny;  // Rayleigh-quotient-ish estimate from the last normalization
        if (drift < 1e-10 && it > 10) {
            res.converged = true;
            break;
        }
    }
    mu = x.dot(apply(x));  // eigenvalue of 2I - L
    res.lambda2 = std::max(0.0, 2.0 - mu);
    for (int i = 0; i < n; ++i) res.vec[i] = x[i] / sqrt_d[i];  // D^{-1/2} back-transform
    return res;
}

}  // namespace hcs

#include "bitlsh/params.hpp"

#include <cmath>
#include <string>

#include "bitlsh/error.hpp"

namespace bitlsh {

namespace {

// Largest table count we are willing to derive; beyond this the parameters
// are unusable in practice and uint64 arithmetic would be at risk.
constexpr double kMaxTables = 1e15;

}  // namespace

void IndexParams::validate() const {
    if (n == 0) {
        throw ParamError("IndexParams: n must be positive");
    }
    if (d == 0) {
        throw ParamError("IndexParams: d must be positive");
    }
    if (r < 1 || r > d) {
        throw ParamError("IndexParams: r must satisfy 1 <= r <= d, got r=" +
                         std::to_string(r) + " d=" + std::to_string(d));
    }
    if (!(eps > 0.0)) {
        throw ParamError("IndexParams: eps must be positive");
    }
    if (!(c > 0.0) || !(c < 1.0) || std::abs(c * (1.0 + eps) - 1.0) > 1e-9) {
        throw ParamError("IndexParams: c must equal 1/(1+eps)");
    }
    if (!(p > 0.0) || !(p < 1.0)) {
        throw ParamError("IndexParams: p must lie in (0, 1)");
    }
    if (t < 1) {
        throw ParamError("IndexParams: t must be at least 1");
    }
    if (L < 1) {
        throw ParamError("IndexParams: L must be at least 1");
    }
    if (!(delta_fail > 0.0) || !(delta_fail < 1.0)) {
        throw ParamError("IndexParams: delta_fail must lie in (0, 1)");
    }
    const double expected_q =
        std::pow(1.0 - p, static_cast<double>(r) * static_cast<double>(t));
    if (!(q_near > 0.0) || !(q_near <= 1.0) ||
        std::abs(q_near - expected_q) > 1e-12 * expected_q) {
        throw ParamError("IndexParams: q_near must equal (1-p)^(r*t)");
    }
}

IndexParams derive_params(uint64_t n, uint32_t d, uint32_t r, double eps,
                          double delta_fail) {
    if (n == 0) {
        throw ParamError("derive_params: n must be positive");
    }
    if (d == 0) {
        throw ParamError("derive_params: d must be positive");
    }
    if (r < 1 || r > d) {
        throw ParamError("derive_params: r must satisfy 1 <= r <= d, got r=" +
                         std::to_string(r) + " d=" + std::to_string(d));
    }
    if (!(eps > 0.0)) {
        throw ParamError("derive_params: eps must be positive");
    }
    if (!(delta_fail > 0.0) || !(delta_fail < 1.0)) {
        throw ParamError("derive_params: delta_fail must lie in (0, 1)");
    }

    IndexParams ip;
    ip.n = n;
    ip.d = d;
    ip.r = r;
    ip.eps = eps;
    ip.delta_fail = delta_fail;
    ip.c = 1.0 / (1.0 + eps);
    ip.p = -std::expm1(-1.0 / static_cast<double>(r));

    const double t_real = ip.c * std::log(static_cast<double>(n));
    ip.t = static_cast<uint64_t>(std::max(1.0, std::ceil(t_real)));

    ip.q_near = std::pow(1.0 - ip.p,
                         static_cast<double>(r) * static_cast<double>(ip.t));
    const double tables = std::ceil(std::log(1.0 / delta_fail) / ip.q_near);
    if (!(tables >= 1.0)) {
        ip.L = 1;
    } else if (tables > kMaxTables) {
        throw ParamError("derive_params: derived table count " +
                         std::to_string(tables) +
                         " exceeds supported range; increase delta_fail or eps");
    } else {
        ip.L = static_cast<uint64_t>(tables);
    }

    ip.validate();
    return ip;
}

}  // namespace bitlsh

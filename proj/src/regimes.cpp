#include "singlab/regimes.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace singlab {

ProblemParams::ProblemParams(int N_, double p_) : N(N_), p(p_) {
    if (N < 2)
        throw std::invalid_argument("ProblemParams: N must be >= 2, got " + std::to_string(N));
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("ProblemParams: p must be a finite real > 1");
}

double ell_exponent(int N, double p) {
    const double q = 1.0 / (p - 1.0);
    return q * (q + 2.0 - N);
}

CriticalData critical_exponents(const ProblemParams& params) {
    CriticalData out;
    out.ell = ell_exponent(params.N, params.p);
    out.p_low = static_cast<double>(params.N) / (params.N - 1);
    out.p_high = params.N >= 3 ? static_cast<double>(params.N - 1) / (params.N - 2)
                               : std::numeric_limits<double>::infinity();
    // Boundary values go with the closed inequalities: p = p_low is Low,
    // p = p_high is Supercritical.
    if (params.p >= out.p_high)
        out.regime = Regime::Supercritical;
    else if (params.p > out.p_low)
        out.regime = Regime::Interval;
    else
        out.regime = Regime::Low;
    return out;
}

SolutionSetClass classify_solution_set(const CriticalData& data) {
    if (std::isinf(data.p_high))
        throw std::invalid_argument(
            "classify_solution_set: N = 2 is handled by the closed-form half-circle solver");
    switch (data.regime) {
        case Regime::Supercritical: return SolutionSetClass::OnlyZero;
        case Regime::Low: return SolutionSetClass::OnlyZeroAmongNonnegative;
        case Regime::Interval: return SolutionSetClass::ThreeElementSet;
    }
    throw std::logic_error("classify_solution_set: unreachable");
}

namespace {

bool same_point(const std::vector<double>& a, const std::vector<double>& b) {
    double d2 = 0.0, n2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d2 += (a[i] - b[i]) * (a[i] - b[i]);
        n2 += a[i] * a[i] + b[i] * b[i];
    }
    return d2 <= 1e-18 * (1.0 + n2);
}

}  // namespace

std::vector<ScaledSample> apply_scaling(const std::vector<FieldSample>& samples,
                                        double k, double p) {
    if (!(k > 0.0))
        throw std::invalid_argument("apply_scaling: k must be positive");
    if (!(p > 1.0))
        throw std::invalid_argument("apply_scaling: p must be > 1");

    const double amp = std::pow(k, 1.0 / (p - 1.0));
    std::vector<ScaledSample> out;
    out.reserve(samples.size());
    for (const auto& s : samples) {
        std::vector<double> target(s.x.size());
        for (std::size_t d = 0; d < s.x.size(); ++d) target[d] = k * s.x[d];

        ScaledSample r{s.x, 0.0, false};
        for (const auto& cand : samples) {
            if (cand.x.size() == target.size() && same_point(cand.x, target)) {
                r.value = amp * cand.value;
                r.valid = true;
                break;
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace singlab

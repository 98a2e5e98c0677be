#ifndef SINGLAB_REGIMES_HPP
#define SINGLAB_REGIMES_HPP

#include <utility>
#include <vector>

namespace singlab {

/// Problem data (N, p) for the nonlinear Neumann boundary problem.
/// Throws std::invalid_argument unless N >= 2 and p > 1.
struct ProblemParams {
    int N;
    double p;

    ProblemParams(int N_, double p_);
};

enum class Regime {
    Supercritical,  // p >= (N-1)/(N-2), ell <= 0
    Interval,       // N/(N-1) < p < (N-1)/(N-2), 0 < ell < N-1
    Low             // 1 < p <= N/(N-1), ell >= N-1
};

struct CriticalData {
    double ell;     // (1/(p-1)) * (1/(p-1) + 2 - N)
    double p_low;   // N/(N-1)
    double p_high;  // (N-1)/(N-2); +infinity when N == 2
    Regime regime;
};

CriticalData critical_exponents(const ProblemParams& params);

/// ell as a plain function of (N, p).
double ell_exponent(int N, double p);

enum class SolutionSetClass {
    OnlyZero,
    OnlyZeroAmongNonnegative,
    ThreeElementSet
};

/// Structure of the separable-solution set for N >= 3. Rejects the
/// 2D case (p_high infinite), which is handled in closed form elsewhere.
SolutionSetClass classify_solution_set(const CriticalData& data);

/// One sampled value of a scalar field on the closed upper half-space.
struct FieldSample {
    std::vector<double> x;
    double value;
};

struct ScaledSample {
    std::vector<double> x;
    double value;
    bool valid;  // false when k*x had no matching sample point
};

/// Scaling transformation u -> k^{1/(p-1)} u(k x), evaluated on the sampled
/// set itself: for each sample point x the value at k*x is looked up among
/// the input points. Points whose image k*x is not sampled are flagged
/// invalid and carry value 0.
std::vector<ScaledSample> apply_scaling(const std::vector<FieldSample>& samples,
                                        double k, double p);

}  // namespace singlab

#endif

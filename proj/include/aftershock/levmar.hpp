#ifndef AFTERSHOCK_LEVMAR_HPP
#define AFTERSHOCK_LEVMAR_HPP

#include <span>
#include <vector>

namespace aftershock {

// Dense residual problem with analytic Jacobian.
class LeastSquaresProblem {
  public:
    virtual ~LeastSquaresProblem() = default;
    virtual int residual_count() const = 0;
    virtual int param_count() const = 0;
    // jacobian is row-major residual_count x param_count, or nullptr when
    // only residuals are needed.
    virtual void evaluate(std::span<const double> params, std::span<double> residuals,
                          double* jacobian) const = 0;
};

struct LevMarOptions {
    int max_iterations = 200;
    double ftol = 1e-14;  // relative SSE improvement
    double xtol = 1e-12;  // relative step size
    double lambda_init = 1e-3;
    double lambda_down = 0.3;
    double lambda_up = 4.0;
};

struct LevMarResult {
    std::vector<double> params;
    double sse = 0.0;
    bool converged = false;
    int iterations = 0;
    std::vector<double> jtj;  // row-major normal matrix at the solution
};

// Damped least squares with Marquardt diagonal scaling. Steps that do not
// reduce the SSE are rejected; the result is deterministic in the inputs.
LevMarResult levmar_fit(const LeastSquaresProblem& problem, std::span<const double> init,
                        const LevMarOptions& options = {});

}  // namespace aftershock

#endif

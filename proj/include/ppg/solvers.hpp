#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "ppg/linops.hpp"
#include "ppg/prox.hpp"
#include "ppg/smooth.hpp"

namespace ppg {

/// The composite problem min_z h(z) + P(M z - b).
struct CompositeProblem {
  std::shared_ptr<const Smooth> h;
  std::shared_ptr<const Proximable> P;
  std::shared_ptr<const LinearMap> M;
  Vec b;              // codomain offset
  double lipschitz;   // upper bound on the gradient modulus of h

  /// Throws std::invalid_argument if shapes disagree or lipschitz is not a
  /// valid bound for h.
  void validate() const;
};

double primal_objective(const CompositeProblem& prob, const Vec& z);

/// Data passed to the termination callback at every checkpoint. x is the
/// dual-side iterate maintained by the solver (the gradient of h at the
/// previous primal point).
struct CheckpointInfo {
  int t;
  const Vec& z;
  const Vec& y;
  const Vec& x;
};

struct CheckpointResult {
  bool stop = false;
  double pobj = std::numeric_limits<double>::quiet_NaN();
  double dobj = std::numeric_limits<double>::quiet_NaN();
  double dfeas = std::numeric_limits<double>::quiet_NaN();
};

using TerminationFn = std::function<CheckpointResult(const CheckpointInfo&)>;
/// Progress observer: (t, pobj_min, dobj, dfeas); returning true halts the run.
using ProgressFn = std::function<bool(int, double, double, double)>;

struct SolveHooks {
  TerminationFn termination;   // problem-specific stopping rule, may be empty
  ProgressFn on_progress;      // optional observer
  bool record_history = false; // keep full iterate history in the trace
};

struct SolveTrace {
  int iterations = 0;
  bool converged = false;
  double wall_time_s = 0.0;

  Vec z_final, y_final, x_final;

  std::vector<int> checkpoint_iters;
  std::vector<double> primal_values;  // running-min primal value at checkpoints
  std::vector<double> dual_values;
  std::vector<double> dfeas_values;

  // Running averages over the iterates t = 1..N.
  Vec ergodic_x, ergodic_y;

  std::optional<std::vector<double>> lyapunov;

  // Filled only when record_history is set: z_history[t] = z^t for
  // t = 0..N, same for y; x_history[t] = x^{t+1} (so x_history has one
  // entry per completed iteration).
  std::vector<Vec> z_history, y_history, x_history;

  double last_pobj() const { return primal_values.empty() ? std::numeric_limits<double>::quiet_NaN() : primal_values.back(); }
  double last_dobj() const { return dual_values.empty() ? std::numeric_limits<double>::quiet_NaN() : dual_values.back(); }
  double last_dfeas() const { return dfeas_values.empty() ? std::numeric_limits<double>::quiet_NaN() : dfeas_values.back(); }
};

/// Stepsize configuration for ppg_solve. Admissible ranges:
///   beta in (0, 2/L),
///   gamma in (0, 1 + min{1/2, 1/(beta L) - 1/2}),
///   tau >= beta * ||M*M||.
struct PpgConfig {
  double beta = 0.0;
  double gamma = 0.0;
  double tau = 0.0;
  int max_iter = 1000;
  double tol = 1e-4;
  int check_every = 10;
};

double ppg_gamma_upper(double beta, double L);

/// beta = 1/L unless overridden, gamma at 95% of its upper limit, and the
/// smallest admissible tau.
PpgConfig default_ppg_config(double L, double gram_bound, int max_iter,
                             double tol = 1e-4, int check_every = 10,
                             std::optional<double> beta_override = std::nullopt);

/// Throws std::invalid_argument naming the violated inequality.
void validate_ppg_config(const PpgConfig& cfg, double L, double gram_bound);

/// Proximal-proximal gradient iteration:
///   x^{t+1} = grad h(z^t)
///   y^{t+1} = prox of the scaled conjugate of P at
///             (T y^t - b + M z^t - beta M x^{t+1}) / tau,  T = tau I - beta M M*
///   z^{t+1} = z^t - gamma beta (x^{t+1} + M* y^{t+1})
/// T is applied matrix-free. A run that exhausts max_iter is returned with
/// converged = false rather than raising.
SolveTrace ppg_solve(const CompositeProblem& prob, const PpgConfig& cfg,
                     const Vec& z0, const Vec& y0, const SolveHooks& hooks = {});
SolveTrace ppg_solve(const CompositeProblem& prob, const PpgConfig& cfg,
                     const SolveHooks& hooks = {});  // starts at the origin

/// Classical proximal gradient z^{t+1} = prox_{P/L}(z^t - grad h(z^t)/L + shift),
/// valid only when M is the identity. Stops when the objective decrease
/// falls below tol (relative) or a supplied termination fires.
SolveTrace proximal_gradient_solve(const CompositeProblem& prob, double L,
                                   int max_iter, double tol,
                                   const Vec& z0, const SolveHooks& hooks = {},
                                   int check_every = 1);
SolveTrace proximal_gradient_solve(const CompositeProblem& prob, double L,
                                   int max_iter, double tol);

/// Generic two-block problem min f(x) + g(y) s.t. A x + B y = c with f
/// strongly convex, solved by alternating minimization with a proximal
/// term on the y-block. Oracles:
///   argmin_f(a)   = argmin_x f(x) - <a, x>
///   prox_g(v, s)  = argmin_y g(y) + ||y - v||^2 / (2 s)
/// The proximal scaling is the structured family T = tau I - beta B*B
/// (tau >= beta * gram_B makes T PSD; tau = beta with B*B = I gives T = 0).
struct AmaProblem {
  std::function<Vec(const Vec&)> argmin_f;
  std::function<Vec(const Vec&, double)> prox_g;
  std::function<Vec(const Vec&)> A_apply, A_adjoint;
  std::function<Vec(const Vec&)> B_apply, B_adjoint;
  Index x_dim = 0, y_dim = 0, z_dim = 0;
  Vec c;
  double sigma_f_lower = 0.0;  // strong-convexity modulus bound of f
  double gram_A = 0.0;         // bound on ||A*A||
  double gram_B = 0.0;         // bound on ||B*B||
  double tau = 0.0;
};

/// Largest admissible gamma for the proximal AMA given the strong-convexity
/// and operator-norm bounds.
double ama_gamma_upper(double beta, double sigma_f_lower, double gram_A);

SolveTrace proximal_ama_solve(const AmaProblem& prob, double beta, double gamma,
                              int max_iter, const Vec& y0, const Vec& z0,
                              const SolveHooks& hooks = {});

/// The dual instantiation used by the composite problem: f = h*, g = P*
/// shifted by b, A = identity, B = M*, c = 0. Iterates coincide with
/// ppg_solve under the same stepsizes.
AmaProblem dual_ama_problem(const CompositeProblem& prob, double tau);

/// Tseng's modified forward-backward splitting on the saddle-point form.
/// The y-subproblem is handled through the conjugate prox with scaling
/// lip_G / sigma; termination is evaluated at the corrected pair (u^t, v^t).
SolveTrace mfbs_solve(const CompositeProblem& prob, double sigma, double lip_G,
                      int max_iter, const Vec& z0, const Vec& y0,
                      const SolveHooks& hooks = {}, int check_every = 10);
SolveTrace mfbs_solve(const CompositeProblem& prob, double sigma, double lip_G,
                      int max_iter, const SolveHooks& hooks = {},
                      int check_every = 10);

/// Default Lipschitz bound for the saddle-point field
/// (grad h(z) + M* y, b - M z): (L + sqrt(L^2 + 4 ||M*M||)) / 2.
double mfbs_default_lip(double L, double gram_bound);

/// Primal-dual baseline with extrapolation on both variables and a 2*beta
/// scaling inside the y-step. Requires 1/beta - ||M*M||/tau >= L/2 and
/// gamma in (0, 2 - (L/2) / (1/beta - ||M*M||/tau)).
void validate_condat_params(double beta, double tau, double gamma, double L,
                            double gram_bound);
SolveTrace condat_solve(const CompositeProblem& prob, double beta, double tau,
                        double gamma, int max_iter, const Vec& z0, const Vec& y0,
                        const SolveHooks& hooks = {}, int check_every = 10);
SolveTrace condat_solve(const CompositeProblem& prob, double beta, double tau,
                        double gamma, int max_iter, const SolveHooks& hooks = {},
                        int check_every = 10);

/// Merit value (1/(gamma beta)) ||z - z_ref||^2 + ||y - y_ref||^2_T with
/// ||v||^2_T = tau ||v||^2 - beta ||M* v||^2; nonincreasing along valid runs.
double lyapunov_value(const Vec& z, const Vec& y, const Vec& z_ref,
                      const Vec& y_ref, double gamma, double beta, double tau,
                      const LinearMap& M);

/// Appends the per-iteration Lyapunov values of a recorded run to its trace.
void attach_lyapunov(SolveTrace& trace, const Vec& z_ref, const Vec& y_ref,
                     double gamma, double beta, double tau, const LinearMap& M);

/// Ergodic complexity estimates for the dual-AMA instantiation (A = I,
/// B = M*, c = 0). Constants default to the specialization
/// beta = 1/L, gamma = 1, sigma = 1/4, delta = mu = 1/(2L).
struct ErgodicBoundParams {
  double beta, gamma, tau;
  double sigma, delta;
  double norm_A = 1.0;  // operator norm of the x-block map
};

ErgodicBoundParams default_ergodic_params(double L, double gram_bound);

struct ErgodicBoundRow {
  int N;
  double measured_constraint;  // || xbar^N + M* ybar^N ||
  double constraint_bound;
  double gap_lower;
  double gap_upper;
  double measured_gap;  // NaN unless dual objective oracles were supplied
};

/// Evaluates both sides of the ergodic bounds for every recorded N.
/// Requires a trace with history and a reference triple from a
/// high-accuracy run; throws std::logic_error otherwise. Optional oracles
/// f_value / g_value evaluate the dual objective pieces at the averages.
std::vector<ErgodicBoundRow> theorem2_bounds(
    const SolveTrace& trace, const LinearMap& M, const Vec& x_ref,
    const Vec& y_ref, const Vec& z_ref, const ErgodicBoundParams& params,
    const std::function<double(const Vec&)>& f_value = nullptr,
    const std::function<double(const Vec&)>& g_value = nullptr);

}  // namespace ppg

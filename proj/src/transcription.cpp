#include "ask/transcription.hpp"

#include <cmath>
#include <memory>

#include "ask/errors.hpp"

namespace ask {

namespace {

struct Workspace {
  const Integrand& R;
  double dt;
  int segments;
  std::vector<double> endpoint_u, endpoint_v;
  std::size_t dim;

  // x stacks the interior knots; knot(i) resolves endpoint pinning
  std::vector<double> knot(const std::vector<double>& x, int i) const {
    if (i == 0) return endpoint_u;
    if (i == segments) return endpoint_v;
    const std::size_t off = static_cast<std::size_t>(i - 1) * dim;
    return {x.begin() + off, x.begin() + off + dim};
  }

  double objective(const std::vector<double>& x) const {
    double total = 0.0;
    std::vector<double> mid(dim), zeta(dim);
    std::vector<double> prev = knot(x, 0);
    for (int i = 0; i < segments; ++i) {
      const std::vector<double> next = knot(x, i + 1);
      for (std::size_t d = 0; d < dim; ++d) {
        mid[d] = 0.5 * (prev[d] + next[d]);
        zeta[d] = (next[d] - prev[d]) / dt;
      }
      total += dt * R(mid, zeta);
      prev = next;
    }
    if (!std::isfinite(total)) throw numeric_error("action_integral_cost: non-finite objective");
    return total;
  }

  std::vector<double> gradient(const std::vector<double>& x) const {
    std::vector<double> g(x.size(), 0.0);
    std::vector<double> mid(dim), zeta(dim), gt, gz;
    std::vector<double> prev = knot(x, 0);
    for (int i = 0; i < segments; ++i) {
      const std::vector<double> next = knot(x, i + 1);
      for (std::size_t d = 0; d < dim; ++d) {
        mid[d] = 0.5 * (prev[d] + next[d]);
        zeta[d] = (next[d] - prev[d]) / dt;
      }
      R.gradient(mid, zeta, gt, gz);
      // segment i touches interior knots i (as tail) and i+1 (as head)
      if (i >= 1) {
        const std::size_t off = static_cast<std::size_t>(i - 1) * dim;
        for (std::size_t d = 0; d < dim; ++d) g[off + d] += dt * 0.5 * gt[d] - gz[d];
      }
      if (i + 1 <= segments - 1) {
        const std::size_t off = static_cast<std::size_t>(i) * dim;
        for (std::size_t d = 0; d < dim; ++d) g[off + d] += dt * 0.5 * gt[d] + gz[d];
      }
      prev = next;
    }
    return g;
  }
};

}  // namespace

TranscriptionResult action_integral_cost(const Integrand& R, double tau, const Point& u,
                                         const Point& v, int segments,
                                         const DescentOptions& opts) {
  if (!(tau > 0.0)) throw std::domain_error("action_integral_cost: tau must be positive");
  if (segments < 1) throw config_error("action_integral_cost: segments must be >= 1");
  if (!u.is_euclidean() || !v.is_euclidean() || u.dim() != v.dim()) {
    throw config_error("action_integral_cost: endpoints must be Euclidean of equal dimension");
  }

  Workspace ws{R, tau / segments, segments, u.coords(), v.coords(), u.dim()};

  TranscriptionResult out;
  out.path.segments = segments;
  out.path.tau = tau;

  if (segments == 1) {
    out.value = ws.objective({});
    out.converged = true;
    out.path.knots = {u, v};
    return out;
  }

  // straight-line initialization
  std::vector<double> x0(static_cast<std::size_t>(segments - 1) * ws.dim);
  for (int i = 1; i < segments; ++i) {
    const double w = static_cast<double>(i) / segments;
    for (std::size_t d = 0; d < ws.dim; ++d) {
      x0[static_cast<std::size_t>(i - 1) * ws.dim + d] =
          (1.0 - w) * ws.endpoint_u[d] + w * ws.endpoint_v[d];
    }
  }

  const Objective f = [&ws](const std::vector<double>& x) { return ws.objective(x); };
  GradientFn grad;
  if (R.has_gradient()) {
    grad = [&ws](const std::vector<double>& x) { return ws.gradient(x); };
  } else {
    grad = finite_difference_gradient(f);
  }

  const DescentResult dr = minimize_descent(f, grad, std::move(x0), opts);
  out.value = dr.value;
  out.grad_norm = dr.grad_norm;
  out.iterations = dr.iterations;
  out.converged = dr.converged;
  out.path.knots.reserve(segments + 1);
  for (int i = 0; i <= segments; ++i) out.path.knots.push_back(Point::euclidean(ws.knot(dr.x, i)));
  return out;
}

ActionCost wrap_as_action_cost(Integrand R, int segments, const DescentOptions& opts) {
  if (segments < 1) throw config_error("wrap_as_action_cost: segments must be >= 1");
  CostClaims claims;
  claims.symmetric = true;  // R is even in zeta
  claims.continuous = true;
  claims.growth = Growth::Superlinear;
  auto shared = std::make_shared<Integrand>(std::move(R));
  return ActionCost(
      [shared, segments, opts](double tau, const Point& u, const Point& v) {
        if (u == v) return 0.0;
        return action_integral_cost(*shared, tau, u, v, segments, opts).value;
      },
      claims, "action_integral(" + shared->label() + ")");
}

}  // namespace ask

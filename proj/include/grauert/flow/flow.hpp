#pragma once

// Real flows of xi = (Y + Ybar)/2 and eta = (Y - Ybar)/(2i). In coordinates
// xi moves z by Y/2 and eta by -iY/2, so on C^n the eta orbits have period 4 pi.

#include <optional>
#include <vector>

#include "grauert/flow/exhaustion.hpp"

namespace grauert::flow {

enum class FieldKind { xi, eta };

struct FlowSample {
  double t = 0.0;
  CVec z;
  double tau = 0.0;
};

struct FlowTrace {
  FieldKind field_kind = FieldKind::xi;
  std::vector<FlowSample> samples;
  // Set when the orbit left the model's domain; the trace stops there.
  bool left_chart = false;
};

CVec field(const ExhaustionModel& model, const CVec& z, FieldKind kind);

// One RK4 step of size h (h may be negative).
CVec flow_step(const ExhaustionModel& model, const CVec& z, FieldKind kind, double h);

// Point reached after time t, using steps of at most `step`.
CVec flow_to(const ExhaustionModel& model, const CVec& z, FieldKind kind, double t,
             double step = 1e-3);

FlowTrace flow(const ExhaustionModel& model, const CVec& z, FieldKind kind, double t_end,
               double step = 1e-3);

// First return of the eta orbit to the hyperplane through z orthogonal to
// its velocity, refined by bisection. Empty if the orbit does not close
// before max_time.
std::optional<double> detect_period(const ExhaustionModel& model, const CVec& z,
                                    double max_time = 50.0, double step = 1e-3,
                                    double tol = 1e-8);

// Uniformization of the leaf through z by the punctured disk:
// zeta = exp(-(2 pi / s0)(t + u0 - i s)) for the point phi_s psi_t z.
class LeafChart {
 public:
  LeafChart(const ExhaustionModel& model, CVec base, double s0, double step = 1e-3);

  // Leaf point with coordinate zeta, 0 < |zeta|.
  CVec point(Complex zeta) const;
  // Coordinate of the base point.
  Complex base_coordinate() const;
  // e^{-2 pi u / s0} at a leaf point.
  double modulus_at(const CVec& z) const;
  // |d/dzetabar| / |d/dzeta| of the chart; five-point differences with step
  // h |zeta|.
  double cr_residual(Complex zeta, double h = 1e-3) const;

  double period() const { return s0_; }
  double u0() const { return u0_; }

 private:
  const ExhaustionModel& model_;
  CVec base_;
  double s0_;
  double u0_;
  double step_;
};

// Throws InvalidInput if the eta orbit through z does not close.
LeafChart leaf_uniformize(const ExhaustionModel& model, const CVec& z, double step = 1e-3);

struct GrowthSample {
  double tau = 0.0;
  double abs_f = 0.0;
};

struct GrowthResult {
  bool passes = false;
  double C_estimate = 0.0;
  double tail_slope = 0.0;
};

// |f| <= C (1 + tau)^N: the upper envelope of |f| / (1 + tau)^N over the
// top decade of tau must have log-log slope <= 0.05.
GrowthResult growth_test(const std::vector<GrowthSample>& samples, int N);

}  // namespace grauert::flow

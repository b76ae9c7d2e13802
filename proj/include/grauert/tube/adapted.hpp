#pragma once

#include <Eigen/Core>

#include "grauert/geom/jacobi.hpp"

namespace grauert::tube {

// Thrown when the point lies outside the tube (Im a <= 0).
class OutsideTube : public InvalidInput {
 public:
  OutsideTube(const std::string& what, Complex at) : InvalidInput(what), at_(at) {}
  Complex at() const { return at_; }

 private:
  Complex at_;
};

struct AdaptedJ {
  Complex at{};
  int geodesic_id = 0;
  double re_a = 0.0;
  double im_a = 0.0;
  double e = 0.0;
  // Columns are J xi and J eta in the (xi, eta) frame.
  Eigen::Matrix2d J_matrix = Eigen::Matrix2d::Zero();
};

AdaptedJ adapted_structure(const geom::JacobiFrame& frame, int geodesic_id = 0);

}  // namespace grauert::tube

#include "chain3/geometry.hpp"

#include "chain3/chain.hpp"

namespace chain3 {

OrthantModel orthant_model(const TripleDecomposition& dec) {
  const BinaryMatrix* factors[] = {&dec.a1, &dec.a2, &dec.a3};
  OrthantModel model;
  model.points.assign(dec.a1.rows(), {0, 0, 0});
  model.corners.assign(dec.a1.cols(), {0, 0, 0});
  model.point_labels = dec.a1.row_labels();
  model.corner_labels = dec.a1.col_labels();
  for (std::size_t axis = 0; axis < 3; ++axis) {
    ThresholdRepresentation rep = threshold_representation(*factors[axis]);
    for (std::size_t u = 0; u < model.points.size(); ++u)
      model.points[u][axis] = rep.row_values[u];
    for (std::size_t v = 0; v < model.corners.size(); ++v)
      model.corners[v][axis] = rep.col_thresholds[v];
  }
  return model;
}

bool verify_model(const OrthantModel& model, const BinaryMatrix& a) {
  if (model.points.size() != a.rows() || model.corners.size() != a.cols())
    throw error(errc::dimension_mismatch, "model shape does not match matrix");
  if (model.point_labels != a.row_labels() || model.corner_labels != a.col_labels())
    throw error(errc::label_mismatch, "model labels do not match matrix");
  for (std::size_t u = 0; u < model.points.size(); ++u)
    for (std::size_t v = 0; v < model.corners.size(); ++v) {
      bool inside = true;
      for (std::size_t axis = 0; axis < 3; ++axis) {
        if (model.points[u][axis] == model.corners[v][axis]) return false;  // tie
        inside = inside && model.points[u][axis] < model.corners[v][axis];
      }
      if (inside != a.get(u, v)) return false;
    }
  return true;
}

}  // namespace chain3

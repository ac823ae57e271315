#include "chain3/serialize.hpp"

#include <sstream>

namespace chain3 {

namespace {

json one_based(const std::vector<std::size_t>& indices) {
  json out = json::array();
  for (std::size_t v : indices) out.push_back(v + 1);
  return out;
}

}  // namespace

json matrix_json(const BinaryMatrix& m) {
  json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["row_labels"] = m.row_labels();
  out["col_labels"] = m.col_labels();
  out["entries"] = m.to_row_strings();
  return out;
}

json occurrence_json(const std::string& pattern_name, const Occurrence& occ) {
  json out;
  out["pattern"] = pattern_name;
  out["rows"] = one_based(occ.row_indices);
  out["cols"] = one_based(occ.col_indices);
  return out;
}

json ordering_json(const Permutation& row_order, const Permutation& col_order) {
  json out;
  out["row_order"] = one_based(row_order.order());
  out["col_order"] = one_based(col_order.order());
  return out;
}

json threshold_json(const ThresholdRepresentation& rep) {
  json out;
  out["row_values"] = rep.row_values;
  out["col_thresholds"] = rep.col_thresholds;
  return out;
}

json decomposition_json(const TripleDecomposition& dec) {
  json out;
  out["A1"] = dec.a1.to_row_strings();
  out["A2"] = dec.a2.to_row_strings();
  out["A3"] = dec.a3.to_row_strings();
  out["L3"] = one_based(dec.l3.order());
  out["certified"] = dec.certified;
  json checks;
  for (const auto& [name, ok] : dec.checks) checks[name] = ok;
  out["checks"] = checks;
  return out;
}

json certificate_json(const DimensionCertificate& cert) {
  json out;
  if (cert.dimension)
    out["dimension"] = *cert.dimension;
  else
    out["dimension"] = "exceeds d_max";
  out["d_max"] = cert.d_max;
  json cover = json::array();
  for (const ZeroSet& zs : cert.cover) {
    json cells = json::array();
    for (auto [r, c] : zs.cells) cells.push_back({r + 1, c + 1});
    cover.push_back(cells);
  }
  out["cover"] = cover;
  return out;
}

json model_json(const OrthantModel& model) {
  json points;
  for (std::size_t u = 0; u < model.points.size(); ++u)
    points[model.point_labels[u]] = model.points[u];
  json corners;
  for (std::size_t v = 0; v < model.corners.size(); ++v)
    corners[model.corner_labels[v]] = model.corners[v];
  json out;
  out["points"] = points;
  out["corners"] = corners;
  return out;
}

std::string model_csv(const OrthantModel& model) {
  std::ostringstream out;
  out << "side,label,x,y,z\n";
  for (std::size_t u = 0; u < model.points.size(); ++u)
    out << "point," << model.point_labels[u] << ',' << model.points[u][0] << ','
        << model.points[u][1] << ',' << model.points[u][2] << '\n';
  for (std::size_t v = 0; v < model.corners.size(); ++v)
    out << "corner," << model.corner_labels[v] << ',' << model.corners[v][0] << ','
        << model.corners[v][1] << ',' << model.corners[v][2] << '\n';
  return out.str();
}

json report_json(const CrossValidationReport& report) {
  json out;
  out["m"] = report.m;
  out["n"] = report.n;
  out["classes"] = report.classes;
  out["freeable"] = report.freeable;
  out["dim_le_3"] = report.dim_le_3;
  out["discrepancies"] = report.discrepancies;
  return out;
}

}  // namespace chain3

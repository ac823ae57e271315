#pragma once

// Exact three-dimensional point/orthant model of a certified three-chain
// factorization: rows become points, columns become lower-left open orthant
// corners, and adjacency is strict coordinate dominance on every axis.
// Coordinates are integers (points even, corners odd per axis construction),
// so no comparison ever ties.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "chain3/decompose.hpp"

namespace chain3 {

struct OrthantModel {
  std::vector<std::array<std::int64_t, 3>> points;   // one per row
  std::vector<std::array<std::int64_t, 3>> corners;  // one per column
  std::vector<std::string> point_labels;
  std::vector<std::string> corner_labels;
};

// Axis k takes its coordinates from the threshold representation of the k-th
// factor. Throws not_chain when a factor is not a chain graph.
OrthantModel orthant_model(const TripleDecomposition& dec);

// True iff strict dominance on all three axes reproduces a exactly and no
// point coordinate ties with a corner coordinate on its axis.
bool verify_model(const OrthantModel& model, const BinaryMatrix& a);

}  // namespace chain3

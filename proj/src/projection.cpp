#include "asdim/projection.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace asdim {

RealProjection rooted_projection(const WeightedGraph& g,
                                 const DistanceOracle& oracle, int root) {
  if (root < 0 || root >= g.vertex_count())
    throw std::invalid_argument("root out of range");
  RealProjection f{oracle.row(root)};
  for (double d : f.values)
    if (d == kInf)
      throw std::invalid_argument("rooted projection needs a connected graph");
  return f;
}

RealProjection coordinate_projection(
    const std::vector<std::vector<double>>& coords, int axis, double divisor) {
  if (!(divisor > 0.0)) throw std::invalid_argument("divisor must be positive");
  RealProjection f;
  f.values.reserve(coords.size());
  for (const auto& p : coords) {
    if (axis < 0 || axis >= static_cast<int>(p.size()))
      throw std::invalid_argument("projection axis out of range");
    f.values.push_back(p[axis] / divisor);
  }
  return f;
}

bool is_lipschitz(const WeightedGraph& g, const RealProjection& f,
                  std::string* violation) {
  if (static_cast<int>(f.values.size()) != g.vertex_count())
    throw std::invalid_argument("projection size mismatch");
  for (const Edge& e : g.edges()) {
    if (std::abs(f.values[e.u] - f.values[e.v]) > e.w + kEps) {
      if (violation) {
        std::ostringstream os;
        os << "edge (" << e.u << "," << e.v << ") weight " << e.w
           << " but |f difference| = " << std::abs(f.values[e.u] - f.values[e.v]);
        *violation = os.str();
      }
      return false;
    }
  }
  return true;
}

VertexSet preimage(const RealProjection& f, double lo, double hi) {
  VertexSet s;
  for (int v = 0; v < static_cast<int>(f.values.size()); ++v)
    if (in_half_open(f.values[v], lo, hi)) s.push_back(v);
  return s;
}

}  // namespace asdim

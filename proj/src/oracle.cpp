#include "asdim/oracle.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace asdim {

long long interval_index(double x, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("interval width must be positive");
  return static_cast<long long>(std::floor((x + kEps) / width));
}

DistanceOracle::DistanceOracle(const WeightedGraph& g, int all_pairs_cap)
    : g_(&g), cap_(all_pairs_cap), rows_(g.vertex_count()) {}

int DistanceOracle::vertex_count() const { return g_->vertex_count(); }

const std::vector<double>& DistanceOracle::row(int source) const {
  if (source < 0 || source >= g_->vertex_count())
    throw std::invalid_argument("oracle source out of range");
  {
    std::lock_guard<std::mutex> lk(mu_);
    if (rows_[source]) return *rows_[source];
  }
  // Dijkstra outside the lock; first publisher wins so every reader sees
  // one immutable row.
  auto dist = std::make_shared<std::vector<double>>(g_->vertex_count(), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  (*dist)[source] = 0.0;
  pq.emplace(0.0, source);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > (*dist)[u]) continue;
    for (const auto& [v, w] : g_->neighbors(u)) {
      double nd = d + w;
      if (nd < (*dist)[v]) {
        (*dist)[v] = nd;
        pq.emplace(nd, v);
      }
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  if (!rows_[source]) rows_[source] = std::move(dist);
  return *rows_[source];
}

void DistanceOracle::warm_all_pairs() {
  if (g_->vertex_count() > cap_)
    throw std::runtime_error("graph exceeds all-pairs cap");
  for (int v = 0; v < g_->vertex_count(); ++v) row(v);
}

}  // namespace asdim

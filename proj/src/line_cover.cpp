#include "asdim/line_cover.hpp"

#include <stdexcept>

namespace asdim {

namespace {

long long mod_pos(long long k, int m) { return ((k % m) + m) % m; }

void check(const LineCover& lc, int i) {
  if (lc.num_classes < 2) throw std::invalid_argument("need >= 2 classes");
  if (!(lc.grain > 0.0)) throw std::invalid_argument("grain must be positive");
  if (i < 0 || i >= lc.num_classes)
    throw std::invalid_argument("class index out of range");
}

}  // namespace

bool line_class_contains(const LineCover& lc, int i, double x) {
  check(lc, i);
  return mod_pos(interval_index(x, lc.grain), lc.num_classes) != i;
}

int line_membership_count(const LineCover& lc, double x) {
  int count = 0;
  for (int i = 0; i < lc.num_classes; ++i)
    if (line_class_contains(lc, i, x)) ++count;
  return count;
}

void line_run_around(const LineCover& lc, int i, double x, double* lo,
                     double* hi) {
  check(lc, i);
  long long k = interval_index(x, lc.grain);
  if (mod_pos(k, lc.num_classes) == i)
    throw std::invalid_argument("x not in class");
  // Runs are the K-1 cells strictly between consecutive dropped cells
  // k ≡ i (mod K).
  long long down = k;
  while (mod_pos(down - 1, lc.num_classes) != i) --down;
  *lo = static_cast<double>(down) * lc.grain;
  *hi = static_cast<double>(down + lc.num_classes - 1) * lc.grain;
}

}  // namespace asdim

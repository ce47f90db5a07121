#pragma once

#include <vector>

#include "asdim/oracle.hpp"

namespace asdim {

// K-class cover of the real line at grain s: class i drops the cells
// [k*s, (k+1)*s) with k ≡ i (mod K). Every real lies in exactly K-1 classes;
// within one class, maximal runs of kept cells have length exactly (K-1)*s
// and consecutive runs are separated by a dropped cell, so s-components of a
// class are single runs.
struct LineCover {
  int num_classes = 2;
  double grain = 1.0;
};

// True when x belongs to class i.
bool line_class_contains(const LineCover& lc, int i, double x);

// Number of classes containing x (always K-1; exposed for property tests).
int line_membership_count(const LineCover& lc, double x);

// Maximal run [lo, hi) of kept cells around x in class i; precondition:
// x in class i.
void line_run_around(const LineCover& lc, int i, double x, double* lo,
                     double* hi);

}  // namespace asdim

#pragma once

#include "ktheory/intmat.hpp"

namespace a2ck::ktheory {

// Smith normal form U*A*V = S with U, V unimodular and S diagonal with the
// divisibility chain d1 | d2 | ... . The result is verified on construction:
// the product identity is recomputed, the chain checked, and the tracked
// determinants of U and V (exact bookkeeping over the elementary operations)
// must be +-1.
struct SNFResult {
  IntMatrix S, U, V;
  std::vector<Int> diag;  // min(rows,cols) entries, zeros included
  std::size_t rank = 0;
  Int det_u = 0, det_v = 0;
};

// Pivot choice: least absolute value, ties broken by smallest row then
// column index, so runs are reproducible.
SNFResult smith_normal_form(const IntMatrix& a);

}  // namespace a2ck::ktheory

#pragma once

#include <vector>

#include "pnb/numeric.hpp"

// Dense exact integer matrices with fraction-free (Bareiss) elimination.
// Rank results are certificates, not estimates: no floating point, no
// modular shortcuts.

namespace pnb {

class IntMat {
  public:
    IntMat(long rows, long cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {
        if (rows < 0 || cols < 0) throw DomainError("matrix dimensions must be nonnegative");
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Int& at(long r, long c) { return a_[static_cast<size_t>(r * cols_ + c)]; }
    const Int& at(long r, long c) const { return a_[static_cast<size_t>(r * cols_ + c)]; }

  private:
    long rows_, cols_;
    std::vector<Int> a_;
};

// Rank over Q via fraction-free Gaussian elimination with full pivoting.
long rank(IntMat m);

}  // namespace pnb

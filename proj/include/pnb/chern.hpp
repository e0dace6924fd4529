#pragma once

#include <string>
#include <vector>

#include "pnb/atoms.hpp"
#include "pnb/numeric.hpp"

// Total Chern classes in the ring Z[h]/(h^{n+1}) of P^n, as truncated
// integer polynomials c_0 + c_1 h + ... + c_n h^n.  Division is power-series
// inversion and is exact over Z whenever the divisor has constant term 1.

namespace pnb {

class ChernPoly {
  public:
    explicit ChernPoly(const Ambient& amb);  // zero polynomial
    ChernPoly(const Ambient& amb, std::vector<Int> coeffs);
    static ChernPoly one(const Ambient& amb);
    static ChernPoly line(const Ambient& amb, int k);  // 1 + k h

    const Ambient& ambient() const { return amb_; }
    const Int& coeff(int i) const { return c_.at(static_cast<size_t>(i)); }
    const std::vector<Int>& coeffs() const { return c_; }
    std::string str() const;

    bool operator==(const ChernPoly& o) const { return amb_ == o.amb_ && c_ == o.c_; }

  private:
    Ambient amb_;
    std::vector<Int> c_;  // size n + 1
};

ChernPoly mul(const ChernPoly& a, const ChernPoly& b);
// Truncated series quotient a / b; requires b to have constant term 1.
ChernPoly div(const ChernPoly& a, const ChernPoly& b);

// Total Chern class of a single atom.  Supported: line bundles, Om^1(k) via
// c(Om^1) = (1-h)^{n+1} truncated, and Om^{n-1}(k) = T(k-n-1) via
// c(T) = (1+h)^{n+1} truncated.  Other form degrees raise
// UnsupportedAtomError (their cohomology is still available via h_bott).
ChernPoly chern_atom(const Ambient& amb, const BundleAtom& atom);

// c(E(k)) from c(E) for a rank-r bundle:
//   c_i(E(k)) = sum_j C(r-j, i-j) k^{i-j} c_j(E).
ChernPoly chern_twist(const ChernPoly& c, long rank, int k);

// Whitney product over a free sum.
ChernPoly chern_sum(const FreeSum& sum);

// c(E) = c(L0) / c(L1) for a two-term presentation 0 -> L1 -> L0 -> E -> 0.
ChernPoly chern_quotient(const FreeSum& l1, const FreeSum& l0);

// c(F) = c(B) / (c(A) c(C)) for a monad A -> B -> C with middle cohomology F.
ChernPoly chern_monad(const FreeSum& a, const FreeSum& b, const FreeSum& c);

}  // namespace pnb

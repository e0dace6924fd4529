#pragma once

#include "pnb/atoms.hpp"
#include "pnb/numeric.hpp"

// Closed-form sheaf cohomology on P^n.
//
// Line bundles:   h^0(O(k)) = C(n+k, n) for k >= 0,
//                 h^n(O(k)) = C(-k-1, n) for k <= -n-1, zero otherwise.
// Twisted forms (Bott):
//                 h^0(Om^p(k)) = C(k-1, p) * C(n+k-p, k)      for k > p,
//                 h^p(Om^p)    = 1,
//                 h^n(Om^p(k)) = h^0(Om^{n-p}(-k))            for k < p - n,
//                 zero in all other positions.
// The q = n case is evaluated through Serre duality
//                 h^q(Om^p(k)) = h^{n-q}(Om^{n-p}(-k)).

namespace pnb {

Int h_line(const Ambient& amb, int k, int q);
Int h_bott(const Ambient& amb, int p, int k, int q);

// Cohomology of a single (possibly twisted) atom.
Int h_atom(const Ambient& amb, const BundleAtom& atom, int extra_twist, int q);

// h^q(F(j)) for a free sum F.
Int h_sum(const FreeSum& sum, int j, int q);

// Euler characteristic chi(A(t)) as a polynomial in t (exact, valid at every
// integer).  For forms this comes from the Koszul-type resolution
// 0 -> Om^p -> C(n+1, p) O(-p) -> Om^{p-1} -> 0.
RatPoly chi_atom_poly(const Ambient& amb, const BundleAtom& atom);
RatPoly chi_sum_poly(const FreeSum& sum);

// chi(F(j)) evaluated at an integer twist.
Int chi_sum(const FreeSum& sum, int j);

}  // namespace pnb

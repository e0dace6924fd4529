#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pnb/atoms.hpp"
#include "pnb/cohomology.hpp"
#include "pnb/presentation.hpp"

// Codimension-two subschemes Z of P^n given by length-one free resolutions
//   0 -> F1 -> F0 -> I_Z -> 0,
// together with the two transforms that drive the catalog: the mapping-cone
// liaison step inside a complete intersection, and the section-space
// correspondence producing a bundle E with
//   0 -> F1(c1) -> F0(c1) (+) s O -> E -> 0.

namespace pnb {

struct IdealResolution {
    IdealResolution(FreeSum f1_in, FreeSum f0_in);

    Ambient ambient() const { return f0.ambient(); }
    FreeSum f1, f0;

    bool operator==(const IdealResolution&) const = default;
};

struct SchemeInvariants {
    RatPoly hilbert;  // chi(O_Z(t))
    int dimension;    // degree of the Hilbert polynomial (-1 for empty)
    Int degree;       // dim! * leading coefficient
};

SchemeInvariants scheme_invariants(const IdealResolution& r);

// Koszul resolution of a complete intersection of hypersurfaces of degrees
// d1, d2: 0 -> O(-d1-d2) -> O(-d1) + O(-d2) -> I_Z -> 0.
IdealResolution ci_resolution(const Ambient& amb, int d1, int d2);

struct LinkResult {
    IdealResolution resolution;
    Int degree_in, degree_out;  // deg Z + deg Z' = d1 * d2
    std::string note;           // records the containment assumption
};

// Liaison of Z inside a complete intersection of type (d1, d2): the dual
// mapping cone gives
//   0 -> F0^(-d1-d2) -> F1^(-d1-d2) + O(-d1) + O(-d2) -> I_Z' -> 0.
// `cancel` lists twists k for which one matching pair O(k) is removed from
// both terms.  The engine checks degree feasibility only; that Z actually
// lies on such a complete intersection is recorded as an assumption.
LinkResult link(const IdealResolution& r, int d1, int d2, const std::vector<int>& cancel = {});

// Bundle with c_1 = c1 built from s spanning sections over Z.
TwoTermPresentation bundle_from_ideal(const IdealResolution& r, int c1, long s);

struct TwistedLineOnZ {
    int twist;  // Lambda_Z = O_Z(d1 + d2 - 3)
    bool globally_generated;
};

// The twisted canonical module attached to a complete intersection (d1, d2):
// omega_Z(n - 2) = O_Z(d1 + d2 - 3), globally generated iff d1 + d2 >= 3.
TwistedLineOnZ lambda_ci(int d1, int d2);

}  // namespace pnb

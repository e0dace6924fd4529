#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pnb/atoms.hpp"
#include "pnb/chern.hpp"
#include "pnb/cohomology.hpp"

// Two-term presentations 0 -> L1 -> L0 -> E -> 0 of bundles on P^n, where L1
// and L0 are free sums of atoms and the map is an (unspecified) injective
// bundle map.  An empty L1 means E is the split sum L0 itself; that covers
// both direct sums of line bundles and single special atoms such as T or
// Om^1(2).
//
// Cohomology tables are derived from the long exact sequence.  Cells whose
// value depends on the rank of an induced map H^q(L1(j)) -> H^q(L0(j)) carry
// a [lo, hi] range plus the value at maximal rank, which is what a generic
// presentation matrix realizes; H^0-level maps are injective for every
// presentation, so h^0 rows are always exact.

namespace pnb {

class TwoTermPresentation {
  public:
    // Split sum (empty L1).
    explicit TwoTermPresentation(FreeSum l0);
    TwoTermPresentation(FreeSum l1, FreeSum l0);

    const Ambient& ambient() const { return amb_; }
    const FreeSum& l1() const { return l1_; }
    const FreeSum& l0() const { return l0_; }
    bool split_sum() const { return l1_.empty(); }
    bool line_bundles_only() const { return l1_.line_bundles_only() && l0_.line_bundles_only(); }

    long rank() const { return l0_.rank() - l1_.rank(); }

    bool operator==(const TwoTermPresentation& o) const { return l1_ == o.l1_ && l0_ == o.l0_; }

  private:
    Ambient amb_;
    FreeSum l1_, l0_;
};

// ---- Chern data ------------------------------------------------------------

ChernPoly total_chern(const TwoTermPresentation& p);
Int c1(const TwoTermPresentation& p);

// ---- Cohomology table ------------------------------------------------------

struct CohCell {
    Int lo, hi, generic;
    bool exact() const { return lo == hi; }
    static CohCell exact_value(Int v) { return CohCell{v, v, v}; }
    bool operator==(const CohCell&) const = default;
};

struct TwistRange {
    int lo, hi;  // inclusive
};

class CohTable {
  public:
    CohTable(int n, TwistRange range) : n_(n), range_(range) {}
    const CohCell& cell(int j, int q) const;
    void set(int j, int q, CohCell c);
    TwistRange range() const { return range_; }
    int n() const { return n_; }
    // Alternating sum over a column j; uses generic values for range cells.
    Int chi(int j) const;

  private:
    int n_;
    TwistRange range_;
    std::vector<CohCell> cells_;
};

// Default scan window [-M-n-2, M+n+2], M = max |twist| over all atoms.  For
// two-term line-bundle presentations this window is decisive for the
// splitting scan below.
TwistRange default_window(const TwoTermPresentation& p);

CohTable cohomology_table(const TwoTermPresentation& p, TwistRange range);

// ---- Structural transforms -------------------------------------------------

TwoTermPresentation twist(const TwoTermPresentation& p, int k);
TwoTermPresentation direct_sum(const TwoTermPresentation& a, const TwoTermPresentation& b);
TwoTermPresentation extend_by_trivial(const TwoTermPresentation& p, long s);
// Removes s trivial summands O from L0 (a split-off trivial subbundle).
TwoTermPresentation cancel_trivial_subbundle(const TwoTermPresentation& p, long s);
// Restriction to a hyperplane P^{n-1}: same twists, smaller ambient.
// Line-bundle presentations only.
TwoTermPresentation restrict_hyperplane(const TwoTermPresentation& p);

// ---- Certificates and classification helpers --------------------------------

enum class GgStatus { certified, not_gg, undetermined };

struct GgCertificate {
    GgStatus status;
    std::string reason;
};

// Sufficient criterion: every L0 atom globally generated and, for a nonempty
// L1, expected dependency-locus codimension rank(L0) - rank(L1) + 1 > n, so a
// generic map presents a bundle quotient of a globally generated sum.  Split
// sums are decided exactly.  Forced h^0(E) < rank(E) refutes global
// generation outright.
GgCertificate global_generation_certificate(const TwoTermPresentation& p);

struct SplitScan {
    bool splits;
    int witness_q = 0, witness_j = 0;  // valid when !splits
};

// Splitting scan in the spirit of the intermediate-cohomology criterion:
// reports a witness (q, j), 1 <= q <= n-1, where h^q(E(j)) is forced nonzero
// (the cell's lower bound is positive), or "splits" if the window shows no
// forced intermediate cohomology.
SplitScan horrocks_split_check(const TwoTermPresentation& p, TwistRange range);
SplitScan horrocks_split_check(const TwoTermPresentation& p);

enum class CaseLabel { case_I, case_II, case_III, split_D };

std::string to_string(CaseLabel label);

struct VanishingPattern {
    Int h0_m1, h0_m2, h0_m3;  // h^0(E(-1)), h^0(E(-2)), h^0(E(-3))
    CaseLabel label;
};

// Case split by section vanishing of negative twists:
//   split_D: h^0(E(-3)) > 0
//   I:       h^0(E(-3)) = 0, h^0(E(-2)) > 0
//   II:      h^0(E(-2)) = 0, h^0(E(-1)) > 0
//   III:     h^0(E(-1)) = 0
VanishingPattern vanishing_pattern(const TwoTermPresentation& p);

}  // namespace pnb

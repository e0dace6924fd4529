#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pnb/linalg.hpp"
#include "pnb/presentation.hpp"

// Explicit presentation matrices: homogeneous forms with integer
// coefficients filling the shape of a line-bundle presentation.  Everything
// here is exact — ranks come from integer elimination, sample points are
// integer points — so a full-column-rank evaluation is a *certificate* that
// the matrix defines an injective sheaf map.

namespace pnb {

using Monomial = std::vector<int>;  // exponents, length n+1

// All monomials of the given degree in n+1 variables, lexicographic order;
// empty for negative degree.
std::vector<Monomial> monomials(int n, int degree);

struct HomogeneousForm {
    int degree = -1;                // negative: the zero form of impossible degree
    std::map<Monomial, Int> terms;  // monomial -> coefficient

    bool zero() const { return terms.empty(); }
    Int eval(const std::vector<Int>& point) const;
};

class FormMatrix {
  public:
    // Deterministic dense matrix for a line-bundle presentation: entry (r, c)
    // is a form of degree row_twist - col_twist with coefficients drawn from
    // [-9, 9] by the seeded generator; negative degrees give zero entries.
    static FormMatrix random(const TwoTermPresentation& p, std::uint64_t seed);

    const TwoTermPresentation& presentation() const { return pres_; }
    long rows() const { return static_cast<long>(row_twists_.size()); }
    long cols() const { return static_cast<long>(col_twists_.size()); }
    int row_twist(long r) const { return row_twists_[static_cast<size_t>(r)]; }
    int col_twist(long c) const { return col_twists_[static_cast<size_t>(c)]; }
    const HomogeneousForm& entry(long r, long c) const;

    // Matrix-level trivial extension: s extra trivial rows with zero entries,
    // so the added summands split off and survive dualization.
    FormMatrix extended_by_trivial(long s) const;

    IntMat evaluated(const std::vector<Int>& point) const;

  private:
    explicit FormMatrix(TwoTermPresentation p);
    TwoTermPresentation pres_;
    std::vector<int> row_twists_, col_twists_;
    std::vector<std::vector<HomogeneousForm>> entries_;
};

struct InjectivitySample {
    bool injective_everywhere_sampled;
    long samples;
    std::optional<std::vector<Int>> drop_point;  // a point where rank fell
};

// Evaluates the matrix at `count` deterministic integer points (coordinates
// in [-20, 20], never the zero point) and checks full column rank.
InjectivitySample fiberwise_injectivity_sample(const FormMatrix& m, std::uint64_t seed, long count);

struct SectionMapInfo {
    long domain_dim, codomain_dim, rank, kernel_dim, cokernel_dim;
};

// The induced map H^0(L1(j)) -> H^0(L0(j)) in monomial bases, with exact rank.
SectionMapInfo section_map(const FormMatrix& m, int j);

// dim ker(H^0(L0^) -> H^0(L1^)): counts trivial summands split off by the
// specific matrix.
long h0_dual(const FormMatrix& m);

struct TopCohomology {
    Int rho;     // rank of H^n(L1(j)) -> H^n(L0(j)), via the dual section map
    Int h_nm1;   // h^{n-1}(E(j)) = h^n(L1(j)) - rho
    Int h_n;     // h^n(E(j))     = h^n(L0(j)) - rho
};

TopCohomology exact_top_cohomology(const FormMatrix& m, int j);

struct WindowAgreement {
    bool agrees;            // h^0(E(j)) matches h^0(L0(j)) - h^0(L1(j)) on the whole window
    bool certificate;       // true: proved by a full-column-rank evaluation point
    std::string detail;
};

// Checks matrix-mode h^0 against the formula on every twist in the window.
// A single full-column-rank evaluation certifies the sheaf map is injective,
// which forces agreement at every twist (left exactness of sections); if no
// certificate point is found the twists are checked one by one.
WindowAgreement h0_window_agreement(const FormMatrix& m, TwistRange range, std::uint64_t seed,
                                    long attempts = 8);

}  // namespace pnb

#include "pnb/presentation.hpp"

#include <algorithm>

namespace pnb {

namespace {

// A sum map O(b) -> L0 can only be injective if some L0 twist reaches b.
void check_shape(const FreeSum& l1, const FreeSum& l0) {
    if (!l1.line_bundles_only() || !l0.line_bundles_only()) return;  // trusted for special atoms
    int max_l0 = 0;
    bool has = false;
    for (const auto& [a, m] : l0.atoms()) {
        max_l0 = has ? std::max(max_l0, a.twist) : a.twist;
        has = true;
    }
    for (const auto& [a, m] : l1.atoms())
        if (!has || a.twist > max_l0)
            throw DomainError("no injective map of this shape exists (L1 twist exceeds all of L0)");
}

}  // namespace

TwoTermPresentation::TwoTermPresentation(FreeSum l0)
    : amb_(l0.ambient()), l1_(l0.ambient()), l0_(std::move(l0)) {
    if (l0_.empty()) throw DomainError("presentation needs a nonempty L0");
}

TwoTermPresentation::TwoTermPresentation(FreeSum l1, FreeSum l0)
    : amb_(l0.ambient()), l1_(std::move(l1)), l0_(std::move(l0)) {
    if (!(l1_.ambient() == l0_.ambient()))
        throw DomainError("L1 and L0 must live on the same ambient space");
    if (l0_.empty()) throw DomainError("presentation needs a nonempty L0");
    if (l0_.rank() - l1_.rank() < 1) throw DomainError("presentation must have positive rank");
    check_shape(l1_, l0_);
}

ChernPoly total_chern(const TwoTermPresentation& p) { return chern_quotient(p.l1(), p.l0()); }

Int c1(const TwoTermPresentation& p) { return total_chern(p).coeff(p.ambient().n >= 1 ? 1 : 0); }

const CohCell& CohTable::cell(int j, int q) const {
    if (j < range_.lo || j > range_.hi || q < 0 || q > n_) throw DomainError("table cell out of range");
    return cells_.at(static_cast<size_t>(j - range_.lo) * static_cast<size_t>(n_ + 1) +
                     static_cast<size_t>(q));
}

void CohTable::set(int j, int q, CohCell c) {
    size_t need = static_cast<size_t>(range_.hi - range_.lo + 1) * static_cast<size_t>(n_ + 1);
    if (cells_.size() != need) cells_.resize(need, CohCell::exact_value(Int(0)));
    cells_[static_cast<size_t>(j - range_.lo) * static_cast<size_t>(n_ + 1) + static_cast<size_t>(q)] =
        std::move(c);
}

Int CohTable::chi(int j) const {
    Int acc = 0;
    for (int q = 0; q <= n_; ++q) {
        const Int& v = cell(j, q).generic;
        acc += (q % 2 == 0) ? v : -v;
    }
    return acc;
}

TwistRange default_window(const TwoTermPresentation& p) {
    int m = std::max(p.l1().max_abs_twist(), p.l0().max_abs_twist());
    int n = p.ambient().n;
    return TwistRange{-m - n - 2, m + n + 2};
}

CohTable cohomology_table(const TwoTermPresentation& p, TwistRange range) {
    const int n = p.ambient().n;
    if (range.lo > range.hi) throw DomainError("empty twist range");
    CohTable table(n, range);
    for (int j = range.lo; j <= range.hi; ++j) {
        if (p.split_sum()) {
            for (int q = 0; q <= n; ++q) table.set(j, q, CohCell::exact_value(h_sum(p.l0(), j, q)));
            continue;
        }
        // a_q = h^q(L1(j)), b_q = h^q(L0(j)); the connecting structure of the
        // long exact sequence gives
        //   h^q(E(j)) = (b_q - r_q) + (a_{q+1} - r_{q+1}),
        // where r_q = rank of H^q(L1(j)) -> H^q(L0(j)).  r_0 = a_0 always
        // (global sections of an injective bundle map), all other r_q are only
        // bounded: 0 <= r_q <= min(a_q, b_q).
        std::vector<Int> a(static_cast<size_t>(n) + 2, Int(0)), b(static_cast<size_t>(n) + 2, Int(0));
        for (int q = 0; q <= n; ++q) {
            a[static_cast<size_t>(q)] = h_sum(p.l1(), j, q);
            b[static_cast<size_t>(q)] = h_sum(p.l0(), j, q);
        }
        std::vector<Int> r_min(static_cast<size_t>(n) + 2, Int(0)),
            r_max(static_cast<size_t>(n) + 2, Int(0));
        for (int q = 0; q <= n; ++q)
            r_max[static_cast<size_t>(q)] = std::min(a[static_cast<size_t>(q)], b[static_cast<size_t>(q)]);
        r_min[0] = r_max[0] = a[0];
        if (a[0] > b[0]) throw DomainError("shape forces a non-injective section map");
        for (int q = 0; q <= n; ++q) {
            const size_t s = static_cast<size_t>(q);
            Int lo = (b[s] - r_max[s]) + (a[s + 1] - r_max[s + 1]);
            Int hi = (b[s] - r_min[s]) + (a[s + 1] - r_min[s + 1]);
            table.set(j, q, CohCell{lo, hi, lo});
        }
    }
    return table;
}

TwoTermPresentation twist(const TwoTermPresentation& p, int k) {
    if (p.split_sum()) return TwoTermPresentation(p.l0().twisted(k));
    return TwoTermPresentation(p.l1().twisted(k), p.l0().twisted(k));
}

TwoTermPresentation direct_sum(const TwoTermPresentation& a, const TwoTermPresentation& b) {
    FreeSum l1 = a.l1().merged(b.l1());
    FreeSum l0 = a.l0().merged(b.l0());
    if (l1.empty()) return TwoTermPresentation(std::move(l0));
    return TwoTermPresentation(std::move(l1), std::move(l0));
}

TwoTermPresentation extend_by_trivial(const TwoTermPresentation& p, long s) {
    if (s < 0) throw DomainError("trivial extension needs s >= 0");
    if (s == 0) return p;
    FreeSum l0 = p.l0();
    l0.add(BundleAtom::line(0), s);
    if (p.split_sum()) return TwoTermPresentation(std::move(l0));
    return TwoTermPresentation(p.l1(), std::move(l0));
}

TwoTermPresentation cancel_trivial_subbundle(const TwoTermPresentation& p, long s) {
    if (s < 0) throw DomainError("trivial cancellation needs s >= 0");
    if (s == 0) return p;
    if (p.l0().count_of(BundleAtom::line(0)) < s)
        throw DomainError("L0 does not contain enough trivial summands to cancel");
    if (p.rank() - s < 1) throw DomainError("cancellation would drop the rank below 1");
    FreeSum l0 = p.l0().without(BundleAtom::line(0), s);
    if (p.split_sum()) return TwoTermPresentation(std::move(l0));
    return TwoTermPresentation(p.l1(), std::move(l0));
}

TwoTermPresentation restrict_hyperplane(const TwoTermPresentation& p) {
    if (!p.line_bundles_only())
        throw UnsupportedAtomError("hyperplane restriction implemented for line-bundle presentations");
    if (p.ambient().n < 2) throw DomainError("no hyperplane restriction below P^2");
    Ambient amb(p.ambient().n - 1);
    FreeSum l1(amb), l0(amb);
    for (const auto& [a, m] : p.l1().atoms()) l1.add(BundleAtom::line(a.twist), m);
    for (const auto& [a, m] : p.l0().atoms()) l0.add(BundleAtom::line(a.twist), m);
    if (l1.empty()) return TwoTermPresentation(std::move(l0));
    return TwoTermPresentation(std::move(l1), std::move(l0));
}

GgCertificate global_generation_certificate(const TwoTermPresentation& p) {
    const int n = p.ambient().n;
    std::string bad_atom;
    for (const auto& [a, m] : p.l0().atoms()) {
        if (!a.globally_generated()) {
            bad_atom = "L0 contains a summand that is not globally generated";
            break;
        }
    }
    if (p.split_sum()) {
        if (bad_atom.empty()) return {GgStatus::certified, "split sum of globally generated atoms"};
        return {GgStatus::not_gg, "split sum with a non-globally-generated summand"};
    }
    Int h0 = h_sum(p.l0(), 0, 0) - h_sum(p.l1(), 0, 0);
    bool h0_exact = h_sum(p.l1(), 0, 1) == 0;
    if (h0_exact && h0 < p.rank())
        return {GgStatus::not_gg, "forced h^0(E) below the rank"};
    if (!bad_atom.empty()) return {GgStatus::undetermined, bad_atom};
    long codim = p.l0().rank() - p.l1().rank() + 1;
    if (codim > n)
        return {GgStatus::certified,
                "quotient of a globally generated sum; expected dependency locus is empty"};
    return {GgStatus::undetermined,
            "expected dependency-locus codimension " + std::to_string(codim) +
                " does not exceed the ambient dimension"};
}

SplitScan horrocks_split_check(const TwoTermPresentation& p, TwistRange range) {
    const int n = p.ambient().n;
    CohTable table = cohomology_table(p, range);
    for (int q = 1; q <= n - 1; ++q)
        for (int j = range.lo; j <= range.hi; ++j)
            if (table.cell(j, q).lo > 0) return SplitScan{false, q, j};
    return SplitScan{true};
}

SplitScan horrocks_split_check(const TwoTermPresentation& p) {
    return horrocks_split_check(p, default_window(p));
}

std::string to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::case_I: return "I";
        case CaseLabel::case_II: return "II";
        case CaseLabel::case_III: return "III";
        case CaseLabel::split_D: return "split-D";
    }
    return "?";
}

VanishingPattern vanishing_pattern(const TwoTermPresentation& p) {
    auto h0 = [&](int j) -> Int {
        if (!p.split_sum() && h_sum(p.l1(), j, 1) != 0)
            throw DomainError("h^0 is not forced exact at twist " + std::to_string(j));
        return h_sum(p.l0(), j, 0) - h_sum(p.l1(), j, 0);
    };
    VanishingPattern out{h0(-1), h0(-2), h0(-3), CaseLabel::case_III};
    if (out.h0_m3 > 0)
        out.label = CaseLabel::split_D;
    else if (out.h0_m2 > 0)
        out.label = CaseLabel::case_I;
    else if (out.h0_m1 > 0)
        out.label = CaseLabel::case_II;
    else
        out.label = CaseLabel::case_III;
    return out;
}

}  // namespace pnb

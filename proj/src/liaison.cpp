#include "pnb/liaison.hpp"

namespace pnb {

IdealResolution::IdealResolution(FreeSum f1_in, FreeSum f0_in)
    : f1(std::move(f1_in)), f0(std::move(f0_in)) {
    if (!(f1.ambient() == f0.ambient()))
        throw DomainError("resolution terms must live on the same ambient space");
    if (!f1.line_bundles_only() || !f0.line_bundles_only())
        throw DomainError("ideal resolutions are built from line bundles");
    if (f0.rank() - f1.rank() != 1)
        throw DomainError("ideal resolution needs rank(F0) - rank(F1) = 1");
    for (const auto& part : {f1, f0})
        for (const auto& [a, m] : part.atoms())
            if (a.twist > 0) throw DomainError("ideal resolution twists must be <= 0");
}

SchemeInvariants scheme_invariants(const IdealResolution& r) {
    const int n = r.ambient().n;
    // chi(O_Z(t)) = chi(O(t)) - chi(F0(t)) + chi(F1(t)).
    RatPoly hp = RatPoly::binom_shifted(0, n) - chi_sum_poly(r.f0) + chi_sum_poly(r.f1);
    SchemeInvariants out{hp, hp.degree(), Int(0)};
    if (!hp.is_zero()) {
        Int dfact(1);
        for (int i = 2; i <= hp.degree(); ++i) dfact *= i;
        Rat lead = hp.leading() * Rat(dfact);
        lead.canonicalize();
        if (lead.get_den() != 1) throw DomainError("scheme degree is not an integer");
        out.degree = lead.get_num();
    }
    return out;
}

IdealResolution ci_resolution(const Ambient& amb, int d1, int d2) {
    if (d1 < 1 || d2 < 1) throw DomainError("complete intersection degrees must be >= 1");
    FreeSum f1(amb), f0(amb);
    f1.add(BundleAtom::line(-d1 - d2));
    f0.add(BundleAtom::line(-d1));
    f0.add(BundleAtom::line(-d2));
    return IdealResolution(std::move(f1), std::move(f0));
}

LinkResult link(const IdealResolution& r, int d1, int d2, const std::vector<int>& cancel) {
    if (d1 < 1 || d2 < 1) throw DomainError("complete intersection degrees must be >= 1");
    Int deg_in = scheme_invariants(r).degree;
    Int deg_out = Int(d1) * Int(d2) - deg_in;
    if (deg_out <= 0)
        throw DomainError("degree infeasible: a (" + std::to_string(d1) + "," + std::to_string(d2) +
                          ") complete intersection cannot properly contain the input scheme");
    const int c = -d1 - d2;
    FreeSum f1 = r.f0.dual().twisted(c);
    FreeSum f0 = r.f1.dual().twisted(c);
    f0.add(BundleAtom::line(-d1));
    f0.add(BundleAtom::line(-d2));
    for (int k : cancel) {
        f1 = f1.without(BundleAtom::line(k), 1);
        f0 = f0.without(BundleAtom::line(k), 1);
    }
    IdealResolution out(std::move(f1), std::move(f0));
    Int check = scheme_invariants(out).degree;
    if (check != deg_out)
        throw DomainError("internal consistency: linked degree " + check.get_str() +
                          " does not match " + deg_out.get_str());
    return LinkResult{std::move(out), deg_in, deg_out,
                      "assumes the scheme lies on a complete intersection of type (" +
                          std::to_string(d1) + "," + std::to_string(d2) + ")"};
}

TwoTermPresentation bundle_from_ideal(const IdealResolution& r, int c1, long s) {
    if (s < 0) throw DomainError("section count must be >= 0");
    FreeSum l1 = r.f1.twisted(c1);
    FreeSum l0 = r.f0.twisted(c1);
    if (s > 0) l0.add(BundleAtom::line(0), s);
    if (l1.empty()) return TwoTermPresentation(std::move(l0));
    return TwoTermPresentation(std::move(l1), std::move(l0));
}

TwistedLineOnZ lambda_ci(int d1, int d2) {
    if (d1 < 1 || d2 < 1) throw DomainError("complete intersection degrees must be >= 1");
    int t = d1 + d2 - 3;
    return TwistedLineOnZ{t, t >= 0};
}

}  // namespace pnb

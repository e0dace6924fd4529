#include "pnb/cohomology.hpp"

namespace pnb {

Int h_line(const Ambient& amb, int k, int q) {
    const int n = amb.n;
    if (q < 0 || q > n) return 0;
    if (q == 0) return k >= 0 ? binom(n + k, n) : Int(0);
    if (q == n) return k <= -n - 1 ? binom(-k - 1, n) : Int(0);
    return 0;
}

namespace {

// h^0(Om^p(k)); assumes 0 <= p <= n already normalized away from {0, n}.
Int bott_h0(int n, int p, int k) {
    if (k <= p) return 0;
    return binom(k - 1, p) * binom(n + k - p, k);
}

}  // namespace

Int h_bott(const Ambient& amb, int p, int k, int q) {
    const int n = amb.n;
    if (p < 0 || p > n) throw DomainError("form degree p out of range [0, n]");
    if (q < 0 || q > n) return 0;
    if (p == 0) return h_line(amb, k, q);
    if (p == n) return h_line(amb, k - n - 1, q);
    if (q == 0) return bott_h0(n, p, k);
    if (q == n) return bott_h0(n, n - p, -k);  // Serre duality
    if (q == p && k == 0) return 1;
    return 0;
}

Int h_atom(const Ambient& amb, const BundleAtom& atom, int extra_twist, int q) {
    const int k = atom.twist + extra_twist;
    if (atom.kind == AtomKind::line) return h_line(amb, k, q);
    return h_bott(amb, atom.p, k, q);
}

Int h_sum(const FreeSum& sum, int j, int q) {
    Int total = 0;
    for (const auto& [a, m] : sum.atoms()) total += Int(m) * h_atom(sum.ambient(), a, j, q);
    return total;
}

RatPoly chi_atom_poly(const Ambient& amb, const BundleAtom& atom) {
    const int n = amb.n;
    if (atom.kind == AtomKind::line) return RatPoly::binom_shifted(atom.twist, n);
    // chi(Om^p(t)) = sum_{i=0..p} (-1)^{p-i} C(n+1, i) chi(O(t - i)),
    // unrolled from the exterior-power Euler sequences.
    const int p = atom.p;
    RatPoly acc;
    for (int i = 0; i <= p; ++i) {
        RatPoly term = RatPoly::binom_shifted(atom.twist - i, n).scaled(Rat(binom(n + 1, i)));
        acc = ((p - i) % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

RatPoly chi_sum_poly(const FreeSum& sum) {
    RatPoly acc;
    for (const auto& [a, m] : sum.atoms()) acc = acc + chi_atom_poly(sum.ambient(), a).scaled(Rat(m));
    return acc;
}

Int chi_sum(const FreeSum& sum, int j) {
    return chi_sum_poly(sum).eval_int(Int(j));
}

}  // namespace pnb

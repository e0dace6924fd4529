#include "pnb/atoms.hpp"

#include <algorithm>

namespace pnb {

BundleAtom BundleAtom::form(const Ambient& amb, int p, int k) {
    if (p < 0 || p > amb.n) throw DomainError("form degree p out of range [0, n]");
    if (p == 0) return line(k);
    if (p == amb.n) return line(k - amb.n - 1);  // Om^n = O(-n-1)
    return BundleAtom{AtomKind::form, p, k};
}

BundleAtom BundleAtom::tangent(const Ambient& amb, int k) {
    return form(amb, amb.n - 1, k + amb.n + 1);
}

long BundleAtom::rank(const Ambient& amb) const {
    if (kind == AtomKind::line) return 1;
    return to_long(binom(amb.n, p));
}

BundleAtom BundleAtom::twisted(int j) const {
    BundleAtom a = *this;
    a.twist += j;
    return a;
}

BundleAtom BundleAtom::dual(const Ambient& amb) const {
    if (kind == AtomKind::line) return line(-twist);
    return form(amb, amb.n - p, amb.n + 1 - twist);
}

bool BundleAtom::globally_generated() const {
    if (kind == AtomKind::line) return twist >= 0;
    return twist >= p + 1;
}

void FreeSum::add(const BundleAtom& atom, long mult) {
    if (mult <= 0) throw DomainError("atom multiplicity must be positive");
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom,
                               [](const auto& e, const BundleAtom& a) { return e.first < a; });
    if (it != atoms_.end() && it->first == atom)
        it->second += mult;
    else
        atoms_.insert(it, {atom, mult});
}

long FreeSum::rank() const {
    long r = 0;
    for (const auto& [a, m] : atoms_) r += a.rank(amb_) * m;
    return r;
}

long FreeSum::atom_count() const {
    long c = 0;
    for (const auto& [a, m] : atoms_) c += m;
    return c;
}

FreeSum FreeSum::twisted(int j) const {
    FreeSum out(amb_);
    for (const auto& [a, m] : atoms_) out.add(a.twisted(j), m);
    return out;
}

FreeSum FreeSum::dual() const {
    FreeSum out(amb_);
    for (const auto& [a, m] : atoms_) out.add(a.dual(amb_), m);
    return out;
}

FreeSum FreeSum::merged(const FreeSum& other) const {
    if (!(amb_ == other.amb_)) throw DomainError("cannot merge sums over different ambient spaces");
    FreeSum out = *this;
    for (const auto& [a, m] : other.atoms_) out.add(a, m);
    return out;
}

bool FreeSum::line_bundles_only() const {
    return std::all_of(atoms_.begin(), atoms_.end(),
                       [](const auto& e) { return e.first.kind == AtomKind::line; });
}

int FreeSum::max_abs_twist() const {
    int m = 0;
    for (const auto& [a, _] : atoms_) m = std::max(m, std::abs(a.twist));
    return m;
}

long FreeSum::count_of(const BundleAtom& atom) const {
    for (const auto& [a, m] : atoms_)
        if (a == atom) return m;
    return 0;
}

FreeSum FreeSum::without(const BundleAtom& atom, long mult) const {
    FreeSum out(amb_);
    bool found = false;
    for (const auto& [a, m] : atoms_) {
        if (a == atom) {
            found = true;
            if (m < mult) throw DomainError("not enough copies of atom to remove");
            if (m > mult) out.add(a, m - mult);
        } else {
            out.add(a, m);
        }
    }
    if (!found && mult > 0) throw DomainError("atom to remove is not present");
    return out;
}

}  // namespace pnb

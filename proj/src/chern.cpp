#include "pnb/chern.hpp"

#include <sstream>

namespace pnb {

ChernPoly::ChernPoly(const Ambient& amb) : amb_(amb), c_(static_cast<size_t>(amb.n) + 1, Int(0)) {}

ChernPoly::ChernPoly(const Ambient& amb, std::vector<Int> coeffs) : amb_(amb), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<size_t>(amb.n) + 1)
        throw DomainError("Chern polynomial needs exactly n+1 coefficients");
}

ChernPoly ChernPoly::one(const Ambient& amb) {
    ChernPoly p(amb);
    p.c_[0] = 1;
    return p;
}

ChernPoly ChernPoly::line(const Ambient& amb, int k) {
    ChernPoly p = one(amb);
    if (amb.n >= 1) p.c_[1] = k;
    return p;
}

std::string ChernPoly::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i].get_str();
    os << ")";
    return os.str();
}

ChernPoly mul(const ChernPoly& a, const ChernPoly& b) {
    if (!(a.ambient() == b.ambient())) throw DomainError("Chern arithmetic across different ambient spaces");
    const int n = a.ambient().n;
    ChernPoly out(a.ambient());
    std::vector<Int> c(static_cast<size_t>(n) + 1, Int(0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    return ChernPoly(a.ambient(), std::move(c));
}

ChernPoly div(const ChernPoly& a, const ChernPoly& b) {
    if (!(a.ambient() == b.ambient())) throw DomainError("Chern arithmetic across different ambient spaces");
    if (b.coeff(0) != 1) throw DomainError("Chern division requires divisor with constant term 1");
    const int n = a.ambient().n;
    std::vector<Int> q(static_cast<size_t>(n) + 1, Int(0));
    for (int i = 0; i <= n; ++i) {
        Int acc = a.coeff(i);
        for (int j = 1; j <= i; ++j) acc -= b.coeff(j) * q[static_cast<size_t>(i - j)];
        q[static_cast<size_t>(i)] = acc;
    }
    return ChernPoly(a.ambient(), std::move(q));
}

namespace {

ChernPoly binomial_power(const Ambient& amb, int sign) {
    // (1 + sign*h)^{n+1} truncated at h^{n+1}.
    const int n = amb.n;
    std::vector<Int> c(static_cast<size_t>(n) + 1, Int(0));
    for (int i = 0; i <= n; ++i) {
        Int term = binom(n + 1, i);
        c[static_cast<size_t>(i)] = (sign < 0 && i % 2 == 1) ? -term : term;
    }
    return ChernPoly(amb, std::move(c));
}

}  // namespace

ChernPoly chern_atom(const Ambient& amb, const BundleAtom& atom) {
    if (atom.kind == AtomKind::line) return ChernPoly::line(amb, atom.twist);
    const int n = amb.n;
    if (atom.p == 1) {
        // c(Om^1) = (1-h)^{n+1} truncated, then twisted by k at rank n.
        return chern_twist(binomial_power(amb, -1), n, atom.twist);
    }
    if (atom.p == n - 1) {
        // Om^{n-1}(k) = T(k - n - 1), c(T) = (1+h)^{n+1} truncated.
        return chern_twist(binomial_power(amb, +1), n, atom.twist - n - 1);
    }
    throw UnsupportedAtomError("total Chern class implemented only for O(k), Om^1(k) and T(k)");
}

ChernPoly chern_twist(const ChernPoly& c, long rank, int k) {
    const int n = c.ambient().n;
    std::vector<Int> out(static_cast<size_t>(n) + 1, Int(0));
    for (int i = 0; i <= n; ++i) {
        Int acc = 0;
        Int kpow = 1;  // k^{i-j} built from j = i downwards
        for (int j = i; j >= 0; --j) {
            acc += binom(rank - j, i - j) * kpow * c.coeff(j);
            kpow *= k;
        }
        out[static_cast<size_t>(i)] = acc;
    }
    return ChernPoly(c.ambient(), std::move(out));
}

ChernPoly chern_sum(const FreeSum& sum) {
    ChernPoly acc = ChernPoly::one(sum.ambient());
    for (const auto& [a, m] : sum.atoms()) {
        ChernPoly ca = chern_atom(sum.ambient(), a);
        for (long i = 0; i < m; ++i) acc = mul(acc, ca);
    }
    return acc;
}

ChernPoly chern_quotient(const FreeSum& l1, const FreeSum& l0) {
    return div(chern_sum(l0), chern_sum(l1));
}

ChernPoly chern_monad(const FreeSum& a, const FreeSum& b, const FreeSum& c) {
    return div(chern_sum(b), mul(chern_sum(a), chern_sum(c)));
}

}  // namespace pnb

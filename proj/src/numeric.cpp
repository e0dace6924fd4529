#include "pnb/numeric.hpp"

#include <sstream>

namespace pnb {

Int binom(long a, long b) {
    if (b < 0) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), Int(a).get_mpz_t(), static_cast<unsigned long>(b));
    return r;
}

long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw DomainError("integer out of machine range: " + v.get_str());
    return v.get_si();
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const Rat& c) { return RatPoly({c}); }

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int RatPoly::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

const Rat& RatPoly::coeff(int i) const {
    static const Rat zero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

const Rat& RatPoly::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rat RatPoly::eval(const Int& t) const {
    Rat acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * Rat(t) + coeffs_[i];
    return acc;
}

Int RatPoly::eval_int(const Int& t) const {
    Rat v = eval(t);
    v.canonicalize();
    if (v.get_den() != 1) throw DomainError("polynomial value is not an integer at t=" + t.get_str());
    return v.get_num();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    return *this + o.scaled(Rat(-1));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::scaled(const Rat& s) const {
    std::vector<Rat> out = coeffs_;
    for (auto& c : out) c *= s;
    return RatPoly(std::move(out));
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeff(i);
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RatPoly RatPoly::binom_shifted(int shift, int n) {
    RatPoly p = RatPoly::constant(Rat(1));
    Int nfact(1);
    for (int i = 1; i <= n; ++i) {
        p = p * RatPoly({Rat(shift + i), Rat(1)});
        nfact *= i;
    }
    return p.scaled(Rat(1, nfact));
}

std::uint64_t Rng::next() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::range(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

}  // namespace pnb

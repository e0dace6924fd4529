#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic primitives shared by all modules.  Every quantity the
// engine computes (dimensions, Chern coefficients, Hilbert polynomials,
// matrix ranks) is an integer or a rational; nothing here ever rounds.

namespace pnb {

using Int = mpz_class;
using Rat = mpq_class;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnsupportedAtomError : DomainError {
    using DomainError::DomainError;
};

struct OutOfScopeError : DomainError {
    using DomainError::DomainError;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generalized binomial coefficient C(a, b) = a(a-1)...(a-b+1)/b! for any
// integer a and b >= 0; zero for b < 0.  This is the polynomial extension in
// the upper argument, so Euler characteristics become single closed formulas
// valid at every twist.
Int binom(long a, long b);

long to_long(const Int& v);

// Dense univariate polynomial with rational coefficients, used for Hilbert
// polynomials.  Coefficient i multiplies t^i; trailing zeros are trimmed.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    static RatPoly constant(const Rat& c);

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return coeffs_.empty(); }
    const Rat& coeff(int i) const;
    const Rat& leading() const;

    Rat eval(const Int& t) const;
    // Evaluation that must land on an integer (Euler characteristics do).
    Int eval_int(const Int& t) const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly scaled(const Rat& s) const;
    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

    std::string str(const std::string& var = "t") const;

    // Product (t + shift + 1)(t + shift + 2)...(t + shift + n) / n!, i.e. the
    // binomial C(t + shift + n, n) as a polynomial in t.
    static RatPoly binom_shifted(int shift, int n);

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

// Deterministic 64-bit stream (splitmix64).  Used for seeded matrices and
// sample points so results are reproducible across platforms; we do not rely
// on std::uniform_int_distribution, whose output is implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform value in [lo, hi] (inclusive), |hi - lo| small.
    long range(long lo, long hi);

  private:
    std::uint64_t state_;
};

}  // namespace pnb

#include <vector>

#include "doctest.h"
#include "pnb/chern.hpp"
#include "pnb/format.hpp"

using namespace pnb;

namespace {

// Test-local power-series division over the rationals: long division of
// truncated series, independent of the library's integer recurrence.
std::vector<Rat> series_div(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> q(a.size(), Rat(0));
    std::vector<Rat> rem = a;
    for (size_t i = 0; i < a.size(); ++i) {
        q[i] = rem[i] / b[0];
        for (size_t j = 0; i + j < a.size() && j < b.size(); ++j) rem[i + j] -= q[i] * b[j];
    }
    return q;
}

FreeSum random_line_sum(const Ambient& amb, Rng& rng) {
    FreeSum s(amb);
    long terms = rng.range(1, 4);
    for (long i = 0; i < terms; ++i)
        s.add(BundleAtom::line(static_cast<int>(rng.range(-5, 5))), rng.range(1, 3));
    return s;
}

ChernPoly random_unit_series(const Ambient& amb, Rng& rng) {
    std::vector<Int> c(static_cast<size_t>(amb.n) + 1);
    c[0] = 1;
    for (int i = 1; i <= amb.n; ++i) c[static_cast<size_t>(i)] = rng.range(-9, 9);
    return ChernPoly(amb, std::move(c));
}

}  // namespace

TEST_CASE("oracle: integer quotient agrees with rational series long division") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        Ambient amb(static_cast<int>(rng.range(2, 6)));
        ChernPoly a = random_unit_series(amb, rng);
        ChernPoly b = random_unit_series(amb, rng);
        ChernPoly q = div(a, b);
        std::vector<Rat> ra, rb;
        for (int i = 0; i <= amb.n; ++i) {
            ra.emplace_back(a.coeff(i));
            rb.emplace_back(b.coeff(i));
        }
        std::vector<Rat> rq = series_div(ra, rb);
        for (int i = 0; i <= amb.n; ++i) CHECK(Rat(q.coeff(i)) == rq[static_cast<size_t>(i)]);
    }
}

TEST_CASE("mul and div are inverse on unit series") {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        Ambient amb(static_cast<int>(rng.range(2, 6)));
        ChernPoly a = random_unit_series(amb, rng);
        ChernPoly b = random_unit_series(amb, rng);
        CHECK(div(mul(a, b), b) == a);
        CHECK(mul(div(a, b), b) == a);
    }
}

TEST_CASE("Whitney formula on random free sums") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Ambient amb(static_cast<int>(rng.range(2, 5)));
        FreeSum a = random_line_sum(amb, rng);
        FreeSum b = random_line_sum(amb, rng);
        CHECK(chern_sum(a.merged(b)) == mul(chern_sum(a), chern_sum(b)));
    }
}

TEST_CASE("twist formula against direct products of line factors") {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        Ambient amb(static_cast<int>(rng.range(2, 5)));
        FreeSum s = random_line_sum(amb, rng);
        int k = static_cast<int>(rng.range(-4, 4));
        CHECK(chern_twist(chern_sum(s), s.rank(), k) == chern_sum(s.twisted(k)));
    }
}

TEST_CASE("frozen atom classes") {
    Ambient p2(2), p4(4);
    CHECK(chern_atom(p2, BundleAtom::tangent(p2, 0)).coeffs() == std::vector<Int>{1, 3, 3});
    CHECK(chern_atom(p2, BundleAtom::form(p2, 1, 0)).coeffs() == std::vector<Int>{1, -3, 3});
    CHECK(chern_atom(p4, BundleAtom::tangent(p4, 0)).coeffs() == std::vector<Int>{1, 5, 10, 10, 5});
    CHECK(chern_atom(p4, BundleAtom::form(p4, 1, 2)).coeffs() == std::vector<Int>{1, 3, 4, 2, 1});
    CHECK(chern_atom(p4, BundleAtom::tangent(p4, -2)).coeffs() ==
          std::vector<Int>{1, -3, 4, -2, 1});
    // On the plane T and Om(3) are the same atom; their classes must agree.
    CHECK(chern_atom(p2, BundleAtom::tangent(p2, 0)) == chern_atom(p2, BundleAtom::form(p2, 1, 3)));
}

TEST_CASE("duality flips the sign of odd Chern coefficients") {
    for (int n = 2; n <= 6; ++n) {
        Ambient amb(n);
        ChernPoly t = chern_atom(amb, BundleAtom::tangent(amb, 0));
        ChernPoly om = chern_atom(amb, BundleAtom::form(amb, 1, 0));
        for (int i = 0; i <= n; ++i) CHECK(om.coeff(i) == (i % 2 == 0 ? t.coeff(i) : -t.coeff(i)));
    }
}

TEST_CASE("presentation quotients: frozen classes") {
    Ambient p2(2), p4(4);
    CHECK(total_chern(parse_presentation("O(-1) -> 2O+O(2)", p2)).coeffs() ==
          std::vector<Int>{1, 3, 3});
    CHECK(total_chern(parse_presentation("O(-3) -> 3O", p2)).coeffs() == std::vector<Int>{1, 3, 9});
    CHECK(total_chern(parse_presentation("T(-2) -> 7O", p4)).coeffs() ==
          std::vector<Int>{1, 3, 5, 5, 0});
    CHECK(total_chern(parse_presentation("3O(-1) -> 7O", p4)).coeffs() ==
          std::vector<Int>{1, 3, 6, 10, 15});
    CHECK(c1(parse_presentation("O(-2)+O(-1) -> 6O", p4)) == 3);
}

TEST_CASE("monad middle cohomology: the stable rank-2 plane family") {
    // (m-1)O(-1) -> m Om^1(1) -> (m-1)O has middle cohomology F with
    // c(F) = (1, -1, m).
    Ambient p2(2);
    for (long m = 2; m <= 6; ++m) {
        FreeSum a(p2), b(p2), c(p2);
        a.add(BundleAtom::line(-1), m - 1);
        b.add(BundleAtom::form(p2, 1, 1), m);
        c.add(BundleAtom::line(0), m - 1);
        ChernPoly f = chern_monad(a, b, c);
        CHECK(f.coeff(0) == 1);
        CHECK(f.coeff(1) == -1);
        CHECK(f.coeff(2) == m);
    }
}

TEST_CASE("domain guards") {
    Ambient p2(2), p4(4);
    ChernPoly two(p2, {Int(2), Int(0), Int(0)});
    CHECK_THROWS_AS(div(ChernPoly::one(p2), two), DomainError);
    CHECK_THROWS_AS(mul(ChernPoly::one(p2), ChernPoly::one(Ambient(3))), DomainError);
    CHECK_THROWS_AS(chern_atom(p4, BundleAtom::form(p4, 2, 0)), UnsupportedAtomError);
    CHECK(chern_atom(p2, BundleAtom::line(4)).coeffs() == std::vector<Int>{1, 4, 0});
    CHECK(ChernPoly::line(p2, -2).str() == "(1, -2, 0)");
}

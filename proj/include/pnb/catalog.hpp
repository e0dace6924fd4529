#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pnb/presentation.hpp"

// The verified catalog of globally generated bundles with c_1 = 3 on P^n.
// Covered ambients: n = 2 (eight rank-2 families), n = 4 (one rank-3 family,
// the dual Trautmann-Vetter bundle, plus eight rank-4 families), and n >= 5
// (seven families of every rank r >= n).  n = 3 is deliberately out of
// scope, and requesting it raises OutOfScopeError.  Families of rank above
// the minimum arise as trivial extensions E + sO.

namespace pnb {

struct ExpectedInvariants {
    int c2;
    CaseLabel label;
    int deg_z;  // degree of the associated codimension-two scheme (= c2)
};

struct CatalogEntry {
    std::string id;
    int n;
    long rank;
    TwoTermPresentation pres;
    ExpectedInvariants expected;
    bool gg_recorded;  // global generation holds by the recorded construction
    std::string note;  // how the family arises
};

// All entries on P^n.  With a rank filter, every family whose minimal rank is
// <= the filter is instantiated at exactly that rank (trivial extension);
// families above the filter are dropped.
std::vector<CatalogEntry> enumerate_entries(int n, std::optional<long> rank = std::nullopt);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerificationReport {
    std::string id;
    std::vector<CheckResult> checks;
    bool pass() const;
};

// Recomputes every recorded invariant of the entry from scratch: rank, c_1,
// Chern coefficients beyond the rank, c_2 against the scheme degree, the
// global-generation certificate, the vanishing case, non-splitting, and (for
// line-bundle entries) matrix-mode section counts with a seeded matrix.
VerificationReport verify_entry(const CatalogEntry& e, std::uint64_t seed = 1);

struct VerifySummary {
    std::vector<VerificationReport> reports;
    long passed = 0, total = 0;
    bool all_pass() const { return passed == total; }
};

VerifySummary verify_all(int n, std::optional<long> rank = std::nullopt, std::uint64_t seed = 1);

enum class ClassifyVerdict { matched, direct_sum, no_match };

struct ClassifyResult {
    ClassifyVerdict verdict;
    std::string entry_id;     // valid when matched
    long trivial_excess = 0;  // trivial summands beyond the entry's minimal rank
    GgCertificate gg;
    std::string detail;
};

// Identifies a presentation with c_1 = 3 against the catalog, up to trivial
// summands: direct sums of line bundles are recognized by the splitting scan;
// otherwise the trivial excess is canceled and the fingerprint
// (rank, total Chern class, h^0 row on twists [-3, 1]) is compared.
ClassifyResult classify_presentation(const TwoTermPresentation& p);

// Rank <= n and vanishing top Chern coefficient (a trivial-subbundle
// criterion); disabled (nullopt) when the rank exceeds n.
std::optional<bool> predicate_B(const TwoTermPresentation& p);
// Sections of E(-c_1) exist (the split-off criterion behind case split-D).
bool predicate_D(const TwoTermPresentation& p);

struct CatalogFact {
    std::string id;
    int n;  // 0 when not tied to one ambient
    std::string statement;
};

// Classification facts that are recorded rather than recomputed.
std::vector<CatalogFact> recorded_facts();

}  // namespace pnb

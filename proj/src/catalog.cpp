#include "pnb/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "pnb/chern.hpp"
#include "pnb/cohomology.hpp"
#include "pnb/form_matrix.hpp"
#include "pnb/format.hpp"

namespace pnb {

namespace {

CatalogEntry make_entry(std::string id, int n, const std::string& text, int c2, CaseLabel label,
                        bool gg_recorded, std::string note) {
    Ambient amb(n);
    TwoTermPresentation pres = parse_presentation(text, amb);
    return CatalogEntry{std::move(id), n,   pres.rank(),        pres, ExpectedInvariants{c2, label, c2},
                        gg_recorded,   std::move(note)};
}

std::vector<CatalogEntry> base_p2() {
    using L = CaseLabel;
    return {
        make_entry("P2-1", 2, "O(-1) -> 2O+O(2)", 3, L::case_I, false,
                   "Z: three collinear points, a (1,3) complete intersection"),
        make_entry("P2-2", 2, "T", 3, L::case_II, false, "tangent bundle of the plane"),
        make_entry("P2-3", 2, "O(-1) -> O+2O(1)", 4, L::case_II, false,
                   "Z: a (2,2) complete intersection"),
        make_entry("P2-4", 2, "2O(-1) -> 3O+O(1)", 5, L::case_II, false, "Z: five general points"),
        make_entry("P2-5", 2, "O(-2) -> 2O+O(1)", 6, L::case_II, false,
                   "Z: a (2,3) complete intersection"),
        make_entry("P2-6", 2, "O(-3) -> 3O", 9, L::case_III, false,
                   "Z: a (3,3) complete intersection"),
        make_entry("P2-7", 2, "O(-2)+O(-1) -> 4O", 7, L::case_III, false,
                   "Z: degree 7, linked to a (1,2) complete intersection inside a (3,3)"),
        make_entry("P2-8", 2, "3O(-1) -> 5O", 6, L::case_III, false,
                   "Z: degree 6, linked to three points inside a (3,3)"),
    };
}

std::vector<CatalogEntry> base_p4() {
    using L = CaseLabel;
    return {
        make_entry("P4-r3-TV", 4, "T(-2) -> 7O", 5, L::case_III, true,
                   "dual Trautmann-Vetter (Tango) bundle; Z: elliptic quintic scroll"),
        make_entry("P4-r4-1", 4, "O(-1) -> 4O+O(2)", 3, L::case_I, false,
                   "Z: a (1,3) complete intersection"),
        make_entry("P4-r4-2", 4, "O(-1) -> 3O+2O(1)", 4, L::case_II, false,
                   "Z: a (2,2) complete intersection"),
        make_entry("P4-r4-3", 4, "2O(-1) -> 5O+O(1)", 5, L::case_II, false,
                   "Z: Castelnuovo surface of degree 5"),
        make_entry("P4-r4-4", 4, "O(-2) -> 4O+O(1)", 6, L::case_II, false,
                   "Z: a (2,3) complete intersection"),
        make_entry("P4-r4-5", 4, "3O(-1) -> 7O", 6, L::case_III, false,
                   "Z: Bordiga surface of degree 6"),
        make_entry("P4-r4-6", 4, "O(-2)+O(-1) -> 6O", 7, L::case_III, false,
                   "Z: degree 7, linked to a (1,2) complete intersection inside a (3,3)"),
        make_entry("P4-r4-7", 4, "O(-3) -> 5O", 9, L::case_III, false,
                   "Z: a (3,3) complete intersection"),
        make_entry("P4-r4-8", 4, "Om(2)", 4, L::case_III, false,
                   "twisted cotangent bundle; Z: Veronese surface"),
    };
}

std::vector<CatalogEntry> family_at(int n, long r) {
    using L = CaseLabel;
    auto sum = [&](long mult, int twist) {
        std::ostringstream os;
        if (mult > 1) os << mult;
        os << "O";
        if (twist != 0) os << "(" << twist << ")";
        return os.str();
    };
    std::vector<CatalogEntry> out;
    out.push_back(make_entry("Pn-v-1", n, "O(-1) -> " + sum(r, 0) + "+O(2)", 3, L::case_I, false,
                             "Z: a (1,3) complete intersection"));
    out.push_back(make_entry("Pn-v-2", n, "O(-1) -> " + sum(r - 1, 0) + "+2O(1)", 4, L::case_II,
                             false, "Z: a (2,2) complete intersection"));
    out.push_back(make_entry("Pn-v-3", n, "2O(-1) -> " + sum(r + 1, 0) + "+O(1)", 5, L::case_II,
                             false, "Z: Castelnuovo variety of degree 5"));
    out.push_back(make_entry("Pn-v-4", n, "O(-2) -> " + sum(r, 0) + "+O(1)", 6, L::case_II, false,
                             "Z: a (2,3) complete intersection"));
    out.push_back(make_entry("Pn-v-5", n, "3O(-1) -> " + sum(r + 3, 0), 6, L::case_III, false,
                             "Z: Bordiga variety of degree 6"));
    out.push_back(make_entry("Pn-v-6", n, "O(-2)+O(-1) -> " + sum(r + 2, 0), 7, L::case_III, false,
                             "Z: degree 7, linked to a (1,2) complete intersection inside a (3,3)"));
    out.push_back(make_entry("Pn-v-7", n, "O(-3) -> " + sum(r + 1, 0), 9, L::case_III, false,
                             "Z: a (3,3) complete intersection"));
    return out;
}

CatalogEntry extended(const CatalogEntry& e, long rank) {
    if (rank == e.rank) return e;
    CatalogEntry out = e;
    out.pres = extend_by_trivial(e.pres, rank - e.rank);
    out.rank = rank;
    return out;
}

}  // namespace

std::vector<CatalogEntry> enumerate_entries(int n, std::optional<long> rank) {
    if (n == 3)
        throw OutOfScopeError(
            "the catalog excludes n = 3; that classification is maintained separately");
    if (n < 2) throw OutOfScopeError("the catalog covers n = 2 and n >= 4");
    std::vector<CatalogEntry> base;
    if (n == 2)
        base = base_p2();
    else if (n == 4)
        base = base_p4();
    else
        base = family_at(n, std::max(rank.value_or(n), static_cast<long>(n)));
    if (!rank) return base;
    std::vector<CatalogEntry> out;
    for (const auto& e : base)
        if (e.rank <= *rank) out.push_back(extended(e, *rank));
    return out;
}

bool VerificationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::string chern_str(const ChernPoly& c) { return c.str(); }

}  // namespace

VerificationReport verify_entry(const CatalogEntry& e, std::uint64_t seed) {
    VerificationReport rep{e.id, {}};
    auto add = [&](std::string name, bool pass, std::string detail) {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    const int n = e.n;

    add("rank", e.pres.rank() == e.rank, "computed " + std::to_string(e.pres.rank()));

    ChernPoly c = total_chern(e.pres);
    add("c1", c.coeff(1) == 3, "computed " + c.coeff(1).get_str());

    bool beyond = true;
    for (int i = static_cast<int>(e.rank) + 1; i <= n; ++i) beyond = beyond && c.coeff(i) == 0;
    add("chern-beyond-rank", beyond, chern_str(c));

    add("c2-matches-degree", c.coeff(2) == e.expected.c2 && e.expected.c2 == e.expected.deg_z,
        "c2 = " + c.coeff(2).get_str() + ", deg Z = " + std::to_string(e.expected.deg_z));

    GgCertificate gg = global_generation_certificate(e.pres);
    if (gg.status == GgStatus::certified)
        add("globally-generated", true, gg.reason);
    else if (e.gg_recorded && gg.status != GgStatus::not_gg)
        add("globally-generated", true, "recorded construction: " + e.note);
    else
        add("globally-generated", false, gg.reason);

    VanishingPattern vp = vanishing_pattern(e.pres);
    add("vanishing-case", vp.label == e.expected.label,
        "computed " + to_string(vp.label) + ", recorded " + to_string(e.expected.label));

    SplitScan scan = horrocks_split_check(e.pres);
    add("non-split", !scan.splits,
        scan.splits ? "no forced intermediate cohomology found"
                    : "witness h^" + std::to_string(scan.witness_q) + "(E(" +
                          std::to_string(scan.witness_j) + ")) > 0");

    if (e.pres.line_bundles_only() && !e.pres.split_sum()) {
        FormMatrix m = FormMatrix::random(e.pres, seed);
        WindowAgreement wa = h0_window_agreement(m, default_window(e.pres), seed);
        add("matrix-h0-agreement", wa.agrees, wa.detail);
    } else {
        add("matrix-h0-agreement", true, "formula mode only (non-line-bundle atoms)");
    }

    return rep;
}

VerifySummary verify_all(int n, std::optional<long> rank, std::uint64_t seed) {
    VerifySummary out;
    for (const auto& e : enumerate_entries(n, rank)) {
        out.reports.push_back(verify_entry(e, seed));
        out.total += 1;
        if (out.reports.back().pass()) out.passed += 1;
    }
    return out;
}

namespace {

struct Fingerprint {
    long rank;
    std::vector<Int> chern;
    std::vector<Int> h0_row;  // twists -3..1
};

Fingerprint fingerprint(const TwoTermPresentation& p) {
    Fingerprint f;
    f.rank = p.rank();
    f.chern = total_chern(p).coeffs();
    for (int j = -3; j <= 1; ++j) {
        if (!p.split_sum() && h_sum(p.l1(), j, 1) != 0)
            throw DomainError("h^0 row is not forced exact");
        f.h0_row.push_back(h_sum(p.l0(), j, 0) - h_sum(p.l1(), j, 0));
    }
    return f;
}

bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.rank == b.rank && a.chern == b.chern && a.h0_row == b.h0_row;
}

}  // namespace

ClassifyResult classify_presentation(const TwoTermPresentation& p) {
    if (c1(p) != 3) throw DomainError("classification requires c_1 = 3");
    ClassifyResult out{ClassifyVerdict::no_match, "", 0, global_generation_certificate(p), ""};
    if (out.gg.status == GgStatus::not_gg) {
        out.detail = "not globally generated: " + out.gg.reason;
        return out;
    }
    SplitScan scan = horrocks_split_check(p);
    if (scan.splits) {
        out.verdict = ClassifyVerdict::direct_sum;
        out.detail = "no forced intermediate cohomology on the scan window";
        return out;
    }
    Fingerprint fp_p;
    try {
        fp_p = fingerprint(p);
    } catch (const DomainError&) {
        out.detail = "fingerprint unavailable for this presentation";
        return out;
    }
    const long trivials = p.l0().count_of(BundleAtom::line(0));
    for (const CatalogEntry& e : enumerate_entries(p.ambient().n)) {
        long s = p.rank() - e.rank;
        if (s < 0 || s > trivials) continue;
        Fingerprint fp_core = fp_p;
        if (s > 0) {
            if (p.rank() - s < 1) continue;
            fp_core = fingerprint(cancel_trivial_subbundle(p, s));
        }
        if (fp_core == fingerprint(e.pres)) {
            out.verdict = ClassifyVerdict::matched;
            out.entry_id = e.id;
            out.trivial_excess = s;
            out.detail = "fingerprint match after canceling " + std::to_string(s) +
                         " trivial summand(s)";
            return out;
        }
    }
    out.detail = out.detail.empty() ? "no catalog fingerprint matches" : out.detail;
    return out;
}

std::optional<bool> predicate_B(const TwoTermPresentation& p) {
    const long r = p.rank();
    if (r > p.ambient().n) return std::nullopt;
    return total_chern(p).coeff(static_cast<int>(r)) == 0;
}

bool predicate_D(const TwoTermPresentation& p) {
    long c = to_long(c1(p));
    int j = static_cast<int>(-c);
    if (!p.split_sum() && h_sum(p.l1(), j, 1) != 0)
        throw DomainError("h^0(E(-c1)) is not forced exact for this presentation");
    return h_sum(p.l0(), j, 0) - h_sum(p.l1(), j, 0) > 0;
}

std::vector<CatalogFact> recorded_facts() {
    return {
        {"p4-no-rank-2", 4,
         "no rank-2 family on P^4: globally generated rank-2 bundles with c_1 = 3 split there"},
        {"extension-closure", 0,
         "every family of rank above the listed minimum is a trivial extension E + sO of a "
         "minimal-rank family"},
        {"p3-out-of-scope", 3, "the P^3 classification is maintained separately from this catalog"},
    };
}

}  // namespace pnb

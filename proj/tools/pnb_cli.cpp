// pnb: exact sheaf-cohomology and Chern-class calculator for bundles on P^n
// given by two-term presentations, with the verified c_1 = 3 catalog.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/usage error.

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pnb/catalog.hpp"
#include "pnb/cohomology.hpp"
#include "pnb/form_matrix.hpp"
#include "pnb/format.hpp"
#include "pnb/liaison.hpp"

using nlohmann::json;

namespace {

using namespace pnb;

TwistRange parse_range_arg(const std::string& text) {
    auto pos = text.find(':');
    if (pos == std::string::npos || pos == 0 || pos + 1 == text.size())
        throw ParseError("--range expects 'lo:hi'");
    try {
        int lo = std::stoi(text.substr(0, pos));
        int hi = std::stoi(text.substr(pos + 1));
        if (lo > hi) throw ParseError("--range expects lo <= hi");
        return TwistRange{lo, hi};
    } catch (const std::invalid_argument&) {
        throw ParseError("--range expects integer bounds 'lo:hi'");
    } catch (const std::out_of_range&) {
        throw ParseError("--range bounds do not fit in an int");
    }
}

std::pair<int, int> parse_ci_arg(const std::string& text) {
    auto pos = text.find(',');
    if (pos == std::string::npos || pos == 0 || pos + 1 == text.size())
        throw ParseError("--ci expects 'd1,d2'");
    try {
        return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 1))};
    } catch (const std::exception&) {
        throw ParseError("--ci expects integer degrees 'd1,d2'");
    }
}

std::string cell_str(const CohCell& c) {
    if (c.exact()) return c.lo.get_str();
    return c.lo.get_str() + ".." + c.hi.get_str() + "(" + c.generic.get_str() + ")";
}

json cell_json(const CohCell& c) {
    return json{{"lo", c.lo.get_str()}, {"hi", c.hi.get_str()}, {"generic", c.generic.get_str()}};
}

json chern_json(const ChernPoly& c) {
    json coeffs = json::array();
    for (const Int& v : c.coeffs()) coeffs.push_back(v.get_str());
    return coeffs;
}

void print_table(const TwoTermPresentation& p, const CohTable& t) {
    const int n = t.n();
    std::vector<std::string> header{"j"};
    for (int q = 0; q <= n; ++q) header.push_back("h^" + std::to_string(q));
    header.push_back("chi");
    std::vector<std::vector<std::string>> rows;
    for (int j = t.range().lo; j <= t.range().hi; ++j) {
        std::vector<std::string> row{std::to_string(j)};
        for (int q = 0; q <= n; ++q) row.push_back(cell_str(t.cell(j, q)));
        row.push_back(t.chi(j).get_str());
        rows.push_back(std::move(row));
    }
    std::vector<size_t> width(header.size());
    for (size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto print_row = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            std::cout << std::setw(static_cast<int>(width[i])) << row[i];
            if (i + 1 == 1 || i + 2 == row.size()) std::cout << " |";
            if (i + 1 < row.size()) std::cout << " ";
        }
        std::cout << "\n";
    };
    std::cout << to_string(p) << "  (P^" << n << ")\n";
    print_row(header);
    for (const auto& row : rows) print_row(row);
}

int cmd_coh(int n, const std::string& text, const std::optional<std::string>& range_arg,
            bool as_json) {
    Ambient amb(n);
    TwoTermPresentation p = parse_presentation(text, amb);
    TwistRange r = range_arg ? parse_range_arg(*range_arg) : default_window(p);
    CohTable t = cohomology_table(p, r);
    if (as_json) {
        json rows = json::array();
        for (int j = r.lo; j <= r.hi; ++j) {
            json cells = json::array();
            for (int q = 0; q <= n; ++q) cells.push_back(cell_json(t.cell(j, q)));
            rows.push_back(json{{"j", j}, {"cells", cells}, {"chi", t.chi(j).get_str()}});
        }
        json out{{"n", n},
                 {"presentation", to_string(p)},
                 {"range", {{"lo", r.lo}, {"hi", r.hi}}},
                 {"rows", rows}};
        std::cout << out.dump(2) << "\n";
    } else {
        print_table(p, t);
    }
    return 0;
}

int cmd_chern(int n, const std::string& text, bool as_json) {
    Ambient amb(n);
    TwoTermPresentation p = parse_presentation(text, amb);
    ChernPoly c = total_chern(p);
    if (as_json) {
        json out{{"n", n},
                 {"presentation", to_string(p)},
                 {"coefficients", chern_json(c)},
                 {"polynomial", c.str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "[";
        for (int i = 0; i <= n; ++i) std::cout << (i ? ", " : "") << c.coeff(i).get_str();
        std::cout << "]\n" << c.str() << "\n";
    }
    return 0;
}

json entry_json(const CatalogEntry& e) {
    return json{{"id", e.id},
                {"n", e.n},
                {"rank", e.rank},
                {"presentation", to_string(e.pres)},
                {"expected",
                 {{"c2", e.expected.c2},
                  {"case", to_string(e.expected.label)},
                  {"degZ", e.expected.deg_z}}},
                {"provenance", e.note}};
}

int cmd_catalog_list(int n, std::optional<long> rank, bool as_json) {
    auto entries = enumerate_entries(n, rank);
    if (as_json) {
        json out = json::array();
        for (const auto& e : entries) out.push_back(entry_json(e));
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    size_t idw = 2, prw = 0;
    for (const auto& e : entries) {
        idw = std::max(idw, e.id.size());
        prw = std::max(prw, to_string(e.pres).size());
    }
    for (const auto& e : entries) {
        std::ostringstream line;
        line << std::left << std::setw(static_cast<int>(idw)) << e.id << "  rank " << e.rank
             << "  c2=" << e.expected.c2 << "  case " << std::setw(7)
             << to_string(e.expected.label) << std::setw(static_cast<int>(prw))
             << to_string(e.pres) << "  " << e.note;
        std::cout << line.str() << "\n";
    }
    return 0;
}

int cmd_catalog_verify(int n, std::optional<long> rank, std::uint64_t seed, bool as_json) {
    VerifySummary s = verify_all(n, rank, seed);
    if (as_json) {
        json reports = json::array();
        for (const auto& rep : s.reports) {
            json checks = json::array();
            for (const auto& c : rep.checks)
                checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            reports.push_back(json{{"id", rep.id}, {"pass", rep.pass()}, {"checks", checks}});
        }
        json out{{"n", n}, {"passed", s.passed}, {"total", s.total}, {"reports", reports}};
        std::cout << out.dump(2) << "\n";
        return s.all_pass() ? 0 : 1;
    }
    for (const auto& rep : s.reports) {
        long ok = 0;
        for (const auto& c : rep.checks) ok += c.pass ? 1 : 0;
        std::cout << rep.id << ": " << (rep.pass() ? "pass" : "FAIL") << " (" << ok << "/"
                  << rep.checks.size() << " checks)\n";
        if (!rep.pass())
            for (const auto& c : rep.checks)
                if (!c.pass) std::cout << "  " << c.name << ": " << c.detail << "\n";
    }
    std::cout << s.passed << "/" << s.total << " pass\n";
    return s.all_pass() ? 0 : 1;
}

int cmd_link(int n, const std::string& text, const std::string& ci,
             const std::vector<int>& cancel, bool as_json) {
    Ambient amb(n);
    IdealResolution r = parse_ideal_resolution(text, amb);
    auto [d1, d2] = parse_ci_arg(ci);
    LinkResult res = link(r, d1, d2, cancel);
    if (as_json) {
        json out{{"n", n},
                 {"input", to_string(r)},
                 {"ci", {d1, d2}},
                 {"output", to_string(res.resolution)},
                 {"degree_in", res.degree_in.get_str()},
                 {"degree_out", res.degree_out.get_str()},
                 {"note", res.note}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << to_string(res.resolution) << "\n";
        std::cout << "deg in: " << res.degree_in.get_str() << ", deg out: "
                  << res.degree_out.get_str() << " (sum " << d1 * d2 << ")\n";
        std::cout << res.note << "\n";
    }
    return 0;
}

int cmd_serre(int n, const std::string& text, int c1_in, long sections, bool as_json) {
    Ambient amb(n);
    IdealResolution r = parse_ideal_resolution(text, amb);
    TwoTermPresentation p = bundle_from_ideal(r, c1_in, sections);
    SchemeInvariants inv = scheme_invariants(r);
    if (as_json) {
        json out{{"n", n},
                 {"ideal", to_string(r)},
                 {"c1", c1_in},
                 {"sections", sections},
                 {"presentation", to_string(p)},
                 {"rank", p.rank()},
                 {"degZ", inv.degree.get_str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << to_string(p) << "\n";
        std::cout << "rank " << p.rank() << ", deg Z = " << inv.degree.get_str() << "\n";
    }
    return 0;
}

int cmd_classify(int n, const std::string& text, bool as_json) {
    Ambient amb(n);
    TwoTermPresentation p = parse_presentation(text, amb);
    ClassifyResult res = classify_presentation(p);
    std::string verdict = res.verdict == ClassifyVerdict::matched      ? "matched"
                          : res.verdict == ClassifyVerdict::direct_sum ? "direct-sum"
                                                                       : "no-match";
    std::string gg = res.gg.status == GgStatus::certified ? "certified"
                     : res.gg.status == GgStatus::not_gg  ? "not-globally-generated"
                                                          : "undetermined";
    if (as_json) {
        json out{{"n", n},
                 {"presentation", to_string(p)},
                 {"verdict", verdict},
                 {"entry", res.entry_id},
                 {"trivial_excess", res.trivial_excess},
                 {"gg", {{"status", gg}, {"reason", res.gg.reason}}},
                 {"detail", res.detail}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "verdict: " << verdict << "\n";
        if (res.verdict == ClassifyVerdict::matched)
            std::cout << "entry: " << res.entry_id << " (trivial excess " << res.trivial_excess
                      << ")\n";
        std::cout << "gg: " << gg << " (" << res.gg.reason << ")\n";
        std::cout << res.detail << "\n";
    }
    return 0;
}

json matrix_json(const FormMatrix& m) {
    json entries = json::array();
    for (long r = 0; r < m.rows(); ++r)
        for (long c = 0; c < m.cols(); ++c) {
            const HomogeneousForm& f = m.entry(r, c);
            json terms = json::array();
            for (const auto& [mono, coef] : f.terms)
                terms.push_back(json::array({json(mono), coef.get_str(), "1"}));
            entries.push_back(json{
                {"row", r}, {"col", c}, {"degree", f.degree}, {"terms", terms}});
        }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

int cmd_matrix_check(int n, const std::string& text, std::uint64_t seed, long samples,
                     const std::optional<std::string>& range_arg, bool as_json) {
    Ambient amb(n);
    TwoTermPresentation p = parse_presentation(text, amb);
    FormMatrix m = FormMatrix::random(p, seed);
    TwistRange r = range_arg ? parse_range_arg(*range_arg) : default_window(p);
    InjectivitySample inj = fiberwise_injectivity_sample(m, seed, samples);
    WindowAgreement agree = h0_window_agreement(m, r, seed);
    long dual = h0_dual(m);
    bool pass = inj.injective_everywhere_sampled && agree.agrees;
    if (as_json) {
        json out{{"n", n},
                 {"presentation", to_string(p)},
                 {"seed", seed},
                 {"matrix", matrix_json(m)},
                 {"fiberwise_injective_at_samples", inj.injective_everywhere_sampled},
                 {"samples", inj.samples},
                 {"h0_agreement", {{"agrees", agree.agrees},
                                   {"certificate", agree.certificate},
                                   {"detail", agree.detail},
                                   {"range", {{"lo", r.lo}, {"hi", r.hi}}}}},
                 {"h0_dual", dual},
                 {"pass", pass}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "matrix: " << m.rows() << " x " << m.cols() << ", seed " << seed << "\n";
        std::cout << "fiberwise injectivity: "
                  << (inj.injective_everywhere_sampled ? "full column rank" : "RANK DROP")
                  << " at " << inj.samples << " sample points\n";
        std::cout << "h^0 window agreement on [" << r.lo << ", " << r.hi
                  << "]: " << (agree.agrees ? "agrees" : "DISAGREES") << " (" << agree.detail
                  << ")\n";
        std::cout << "h^0 dual (split-off trivial summands): " << dual << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cohomology, Chern classes and the c1=3 catalog for bundles on P^n"};
    app.require_subcommand(1);

    int n = 0;
    std::string pres_text, ideal_text, ci_text;
    std::optional<std::string> range_arg;
    std::optional<long> rank_filter;
    std::uint64_t seed = 1;
    long samples = 12, sections = 0;
    int c1_val = 3;
    bool as_json = false;
    std::vector<int> cancel;

    auto add_common = [&](CLI::App* cmd, bool needs_pres) {
        cmd->add_option("--n", n, "Ambient dimension (P^n)")->required();
        if (needs_pres)
            cmd->add_option("presentation", pres_text, "Presentation, e.g. \"O(-3) -> 3O\"")
                ->required();
        cmd->add_flag("--json", as_json, "JSON output");
    };

    CLI::App* coh = app.add_subcommand("coh", "Cohomology table h^q(E(j)) over a twist window");
    add_common(coh, true);
    coh->add_option("--range", range_arg, "Twist window 'lo:hi' (default: decisive window)");

    CLI::App* chern = app.add_subcommand("chern", "Total Chern class in Z[h]/(h^{n+1})");
    add_common(chern, true);

    CLI::App* catalog = app.add_subcommand("catalog", "The verified catalog of c1=3 families");
    catalog->require_subcommand(1);
    CLI::App* cat_list = catalog->add_subcommand("list", "List catalog entries");
    cat_list->add_option("--n", n, "Ambient dimension (P^n)")->required();
    cat_list->add_option("--rank", rank_filter, "Instantiate families at this rank");
    cat_list->add_flag("--json", as_json, "JSON output");
    CLI::App* cat_verify = catalog->add_subcommand("verify", "Re-derive every recorded invariant");
    cat_verify->add_option("--n", n, "Ambient dimension (P^n)")->required();
    cat_verify->add_option("--rank", rank_filter, "Instantiate families at this rank");
    cat_verify->add_option("--seed", seed, "Seed for presentation matrices");
    cat_verify->add_flag("--json", as_json, "JSON output");

    CLI::App* link_cmd = app.add_subcommand("link", "Liaison inside a complete intersection");
    link_cmd->add_option("--n", n, "Ambient dimension (P^n)")->required();
    link_cmd->add_option("ideal", ideal_text, "Resolution, e.g. \"O(-3) -> O(-1)+O(-2) => I\"")
        ->required();
    link_cmd->add_option("--ci", ci_text, "Complete-intersection type 'd1,d2'")->required();
    link_cmd->add_option("--cancel", cancel, "Twists with a matching O(k) pair to cancel");
    link_cmd->add_flag("--json", as_json, "JSON output");

    CLI::App* serre = app.add_subcommand("serre", "Bundle from an ideal resolution and sections");
    serre->add_option("--n", n, "Ambient dimension (P^n)")->required();
    serre->add_option("ideal", ideal_text, "Resolution, e.g. \"O(-4) -> O(-1)+O(-3) => I\"")
        ->required();
    serre->add_option("--c1", c1_val, "First Chern class of the bundle (default 3)");
    serre->add_option("--sections", sections, "Extra spanning sections s")->required();
    serre->add_flag("--json", as_json, "JSON output");

    CLI::App* classify = app.add_subcommand("classify", "Identify a presentation in the catalog");
    add_common(classify, true);

    CLI::App* mcheck = app.add_subcommand("matrix-check",
                                          "Seeded presentation matrix: injectivity and h^0");
    add_common(mcheck, true);
    mcheck->add_option("--seed", seed, "Matrix seed");
    mcheck->add_option("--samples", samples, "Number of evaluation points");
    mcheck->add_option("--range", range_arg, "Twist window 'lo:hi' for h^0 agreement");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (coh->parsed()) return cmd_coh(n, pres_text, range_arg, as_json);
        if (chern->parsed()) return cmd_chern(n, pres_text, as_json);
        if (cat_list->parsed()) return cmd_catalog_list(n, rank_filter, as_json);
        if (cat_verify->parsed()) return cmd_catalog_verify(n, rank_filter, seed, as_json);
        if (link_cmd->parsed()) return cmd_link(n, ideal_text, ci_text, cancel, as_json);
        if (serre->parsed()) return cmd_serre(n, ideal_text, c1_val, sections, as_json);
        if (classify->parsed()) return cmd_classify(n, pres_text, as_json);
        if (mcheck->parsed()) return cmd_matrix_check(n, pres_text, seed, samples, range_arg, as_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

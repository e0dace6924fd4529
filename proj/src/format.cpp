#include "pnb/format.hpp"

#include <cctype>
#include <sstream>

namespace pnb {

namespace {

class Scanner {
  public:
    explicit Scanner(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    bool accept(const std::string& tok) {
        skip_ws();
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    long read_int() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected an integer");
        return std::stol(s_.substr(start, pos_ - start));
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

  private:
    const std::string& s_;
    size_t pos_ = 0;
};

void parse_term(Scanner& sc, const Ambient& amb, FreeSum& out) {
    long mult = 1;
    if (sc.peek_digit()) {
        mult = sc.read_int();
        if (mult < 1) sc.fail("multiplicity must be positive");
    }
    // "Om" must be tried before "O".
    enum { om, oh, tan } atom;
    if (sc.accept("Om"))
        atom = om;
    else if (sc.accept("O"))
        atom = oh;
    else if (sc.accept("T"))
        atom = tan;
    else
        sc.fail("expected atom O, T or Om");
    int k = 0;
    if (sc.accept("(")) {
        k = static_cast<int>(sc.read_int());
        if (!sc.accept(")")) sc.fail("expected ')'");
    }
    switch (atom) {
        case oh: out.add(BundleAtom::line(k), mult); break;
        case om: out.add(BundleAtom::form(amb, 1, k), mult); break;
        case tan: out.add(BundleAtom::tangent(amb, k), mult); break;
    }
}

FreeSum parse_sum(Scanner& sc, const Ambient& amb) {
    FreeSum out(amb);
    parse_term(sc, amb, out);
    while (sc.accept("+")) parse_term(sc, amb, out);
    return out;
}

std::string atom_str(const Ambient& amb, const BundleAtom& a) {
    std::ostringstream os;
    if (a.kind == AtomKind::line) {
        os << "O";
        if (a.twist != 0) os << "(" << a.twist << ")";
        return os.str();
    }
    if (a.p == 1) {
        os << "Om";
        if (a.twist != 0) os << "(" << a.twist << ")";
    } else if (a.p == amb.n - 1) {
        os << "T";
        if (a.twist - amb.n - 1 != 0) os << "(" << a.twist - amb.n - 1 << ")";
    } else {
        os << "Om^" << a.p;  // no grammar form; diagnostic output only
        if (a.twist != 0) os << "(" << a.twist << ")";
    }
    return os.str();
}

}  // namespace

FreeSum parse_free_sum(const std::string& text, const Ambient& amb) {
    Scanner sc(text);
    FreeSum out = parse_sum(sc, amb);
    if (!sc.done()) sc.fail("unexpected trailing input");
    return out;
}

TwoTermPresentation parse_presentation(const std::string& text, const Ambient& amb) {
    Scanner sc(text);
    FreeSum first = parse_sum(sc, amb);
    if (sc.accept("->")) {
        FreeSum l0 = parse_sum(sc, amb);
        if (!sc.done()) sc.fail("unexpected trailing input");
        return TwoTermPresentation(std::move(first), std::move(l0));
    }
    if (!sc.done()) sc.fail("expected '->' or end of input");
    return TwoTermPresentation(std::move(first));
}

IdealResolution parse_ideal_resolution(const std::string& text, const Ambient& amb) {
    Scanner sc(text);
    FreeSum f1 = parse_sum(sc, amb);
    if (!sc.accept("->")) sc.fail("expected '->'");
    FreeSum f0 = parse_sum(sc, amb);
    if (!sc.accept("=>")) sc.fail("expected '=> I'");
    if (!sc.accept("I")) sc.fail("expected '=> I'");
    if (!sc.done()) sc.fail("unexpected trailing input");
    return IdealResolution(std::move(f1), std::move(f0));
}

std::string to_string(const FreeSum& sum) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, m] : sum.atoms()) {
        if (!first) os << "+";
        first = false;
        if (m > 1) os << m;
        os << atom_str(sum.ambient(), a);
    }
    return os.str();
}

std::string to_string(const TwoTermPresentation& p) {
    if (p.split_sum()) return to_string(p.l0());
    return to_string(p.l1()) + " -> " + to_string(p.l0());
}

std::string to_string(const IdealResolution& r) {
    return to_string(r.f1) + " -> " + to_string(r.f0) + " => I";
}

}  // namespace pnb

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pnb/numeric.hpp"

// Building blocks for sheaves on projective space P^n: line bundles O(k),
// twisted differential forms Om^p(k), and the tangent bundle T(k).  Atoms are
// kept in a canonical normal form so that equal bundles compare equal:
//   - Om^0(k)  is stored as O(k),
//   - Om^n(k)  is stored as O(k - n - 1)   (top forms are line bundles),
//   - T(k)     is stored as Om^{n-1}(k + n + 1).

namespace pnb {

struct Ambient {
    int n;  // dimension of P^n
    explicit Ambient(int dim) : n(dim) {
        if (dim < 1) throw DomainError("ambient dimension must be >= 1");
    }
    bool operator==(const Ambient&) const = default;
};

enum class AtomKind { line, form };

struct BundleAtom {
    AtomKind kind;
    int p;      // form degree; 0 for line bundles
    int twist;  // k in O(k) / Om^p(k)

    static BundleAtom line(int k) { return BundleAtom{AtomKind::line, 0, k}; }
    // Om^p(k), normalized.  Requires 0 <= p <= n.
    static BundleAtom form(const Ambient& amb, int p, int k);
    // T(k), stored via T = Om^{n-1}(n+1).
    static BundleAtom tangent(const Ambient& amb, int k);

    long rank(const Ambient& amb) const;
    BundleAtom twisted(int j) const;
    // Dual bundle: O(k)^ = O(-k); Om^p(k)^ = Om^{n-p}(n+1-k).
    BundleAtom dual(const Ambient& amb) const;
    // Globally generated: O(k) iff k >= 0; Om^p(k) iff k >= p + 1 (p >= 1).
    bool globally_generated() const;

    auto operator<=>(const BundleAtom&) const = default;
};

// Finite direct sum of atoms with multiplicities, kept sorted and merged.
class FreeSum {
  public:
    explicit FreeSum(const Ambient& amb) : amb_(amb) {}

    void add(const BundleAtom& atom, long mult = 1);
    const std::vector<std::pair<BundleAtom, long>>& atoms() const { return atoms_; }
    const Ambient& ambient() const { return amb_; }

    bool empty() const { return atoms_.empty(); }
    long rank() const;
    long atom_count() const;  // rank-weighted count of summands ignoring form rank
    FreeSum twisted(int j) const;
    FreeSum dual() const;
    FreeSum merged(const FreeSum& other) const;

    bool line_bundles_only() const;
    // Largest / smallest stored twist magnitude, for scan windows.
    int max_abs_twist() const;
    long count_of(const BundleAtom& atom) const;
    // Removes `mult` copies of `atom`; throws if not present.
    FreeSum without(const BundleAtom& atom, long mult) const;

    bool operator==(const FreeSum& o) const { return amb_ == o.amb_ && atoms_ == o.atoms_; }

  private:
    Ambient amb_;
    std::vector<std::pair<BundleAtom, long>> atoms_;
};

}  // namespace pnb

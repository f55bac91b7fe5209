#pragma once

#include "degenkit/series.hpp"
#include "degenkit/stirling.hpp"
#include "degenkit/x_poly.hpp"

#include <vector>

namespace degenkit {

/// A sequence of polynomials indexed 0..n_max with an x-degree-n member at
/// index n. Covers both families used here (Bell-type and Fubini-type).
class PolyFamily {
  public:
    explicit PolyFamily(std::vector<XPoly> polys);

    int n_max() const { return static_cast<int>(polys_.size()) - 1; }
    const XPoly& at(int n) const;

    friend bool operator==(const PolyFamily& lhs, const PolyFamily& rhs) = default;

  private:
    std::vector<XPoly> polys_;
};

/// phi_n(x) = sum_k S2(n, k) x^k from a second-kind triangle row.
XPoly bell_polynomial(const StirlingTriangle& second, int n);

/// F_n(x) = sum_k k! S2(n, k) x^k.
XPoly fubini_polynomial(const StirlingTriangle& second, int n);

PolyFamily bell_family(const StirlingTriangle& second, int n_max);
PolyFamily fubini_family(const StirlingTriangle& second, int n_max);

/// Bell family read off exp(x (e_L(t) - 1)): n! * [t^n]. Independent of
/// any triangle; the cross-check partner of bell_family.
PolyFamily bell_family_from_egf(int n_max, int order);

/// Fubini family read off 1 / (1 - x (e_L(t) - 1)): n! * [t^n].
PolyFamily fubini_family_from_ogf(int n_max, int order);

}  // namespace degenkit

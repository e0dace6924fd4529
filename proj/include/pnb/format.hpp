#pragma once

#include <string>

#include "pnb/atoms.hpp"
#include "pnb/liaison.hpp"
#include "pnb/presentation.hpp"

// Text form for presentations and ideal resolutions:
//
//   PRESENTATION := SUM "->" SUM | SUM            (bare sum: split, empty L1)
//   IDEAL        := SUM "->" SUM "=>" "I"
//   SUM          := TERM ("+" TERM)*
//   TERM         := [INT] ATOM [ "(" INT ")" ]
//   ATOM         := "O" | "T" | "Om"
//
// Examples: "O(-3) -> 3O", "T(-2) -> 7O", "2O(-1) -> 5O+O(1)",
//           "O(-3) -> O(-1)+O(-2) => I".
// Printing emits the canonical form (atoms sorted, multiplicities merged);
// parsing a printed value yields an equal value.

namespace pnb {

FreeSum parse_free_sum(const std::string& text, const Ambient& amb);
TwoTermPresentation parse_presentation(const std::string& text, const Ambient& amb);
IdealResolution parse_ideal_resolution(const std::string& text, const Ambient& amb);

std::string to_string(const FreeSum& sum);
std::string to_string(const TwoTermPresentation& p);
std::string to_string(const IdealResolution& r);

}  // namespace pnb

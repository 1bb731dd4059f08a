#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "deltaritz/precision.hpp"

namespace deltaritz {

// coefficient * |x|^exponent
struct MonomialTerm {
  double coefficient;
  int exponent;

  bool operator==(const MonomialTerm&) const = default;
};

// V(x) = sum_k A_k |x|^{b_k}, A_k > 0, b_k >= 1, exponents strictly increasing.
// Parity invariant by construction.
class MonomialPotential {
 public:
  explicit MonomialPotential(std::vector<MonomialTerm> terms);

  // Grammar: term ('+' term)*, term := [A '*'] '|x|^' b. Whitespace ignored.
  static MonomialPotential parse(std::string_view text);

  const std::vector<MonomialTerm>& terms() const { return terms_; }
  bool is_monomial() const { return terms_.size() == 1; }
  int max_exponent() const { return terms_.back().exponent; }
  // True for exactly x^2/2, the case with a closed-form oracle.
  bool is_unit_harmonic() const;

  // Same exponents, every coefficient multiplied by `factor`.
  MonomialPotential scaled(double factor) const;

  std::string to_string() const;

  bool operator==(const MonomialPotential&) const = default;

 private:
  std::vector<MonomialTerm> terms_;
};

enum class PresetKind { Harmonic, Quartic, Cubic };

// Potential plus the Gaussian width used with it in the reference tables.
struct Preset {
  PresetKind kind;
  std::string name;
  MonomialPotential potential;
  double width;
};

Preset preset(PresetKind kind);
// Accepts "harmonic", "quartic", "cubic"; throws ParseError otherwise.
Preset preset(std::string_view name);

}  // namespace deltaritz

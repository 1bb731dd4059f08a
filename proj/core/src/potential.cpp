#include "deltaritz/potential.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "deltaritz/errors.hpp"

namespace deltaritz {

MonomialPotential::MonomialPotential(std::vector<MonomialTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw DomainError("potential needs at least one term");
  std::sort(terms_.begin(), terms_.end(),
            [](const MonomialTerm& l, const MonomialTerm& r) { return l.exponent < r.exponent; });
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const MonomialTerm& t = terms_[k];
    if (!(t.coefficient > 0.0) || !std::isfinite(t.coefficient))
      throw DomainError("potential coefficients must be positive and finite");
    if (t.exponent < 1) throw DomainError("potential exponents must be >= 1");
    if (k > 0 && terms_[k - 1].exponent == t.exponent)
      throw DomainError("repeated exponent " + std::to_string(t.exponent) + " in potential");
  }
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) compact_.push_back(c);
  }

  std::vector<MonomialTerm> parse() {
    if (compact_.empty()) fail("empty potential");
    std::vector<MonomialTerm> terms;
    terms.push_back(term());
    while (pos_ < compact_.size()) {
      expect("+");
      terms.push_back(term());
    }
    return terms;
  }

 private:
  MonomialTerm term() {
    double coefficient = 1.0;
    if (!lookahead("|x|")) {
      coefficient = number();
      expect("*");
    }
    expect("|x|^");
    int exponent = 0;
    const char* first = compact_.data() + pos_;
    const char* last = compact_.data() + compact_.size();
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr == first) fail("expected an integer exponent");
    pos_ += static_cast<std::size_t>(ptr - first);
    return {coefficient, exponent};
  }

  double number() {
    const char* first = compact_.data() + pos_;
    const char* last = compact_.data() + compact_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected a coefficient");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  bool lookahead(std::string_view token) const {
    return std::string_view(compact_).substr(pos_).starts_with(token);
  }

  void expect(std::string_view token) {
    if (!lookahead(token)) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("invalid potential '" + compact_ + "' at offset " + std::to_string(pos_) +
                     ": " + why + " (grammar: A*|x|^b [+ A*|x|^b ...])");
  }

  std::string compact_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialPotential MonomialPotential::parse(std::string_view text) {
  auto terms = TermParser(text).parse();
  try {
    return MonomialPotential(std::move(terms));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

bool MonomialPotential::is_unit_harmonic() const {
  return terms_.size() == 1 && terms_[0].exponent == 2 && terms_[0].coefficient == 0.5;
}

MonomialPotential MonomialPotential::scaled(double factor) const {
  std::vector<MonomialTerm> out = terms_;
  for (auto& t : out) t.coefficient *= factor;
  return MonomialPotential(std::move(out));
}

std::string MonomialPotential::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k > 0) out << " + ";
    char buffer[32];
    auto result = std::to_chars(buffer, buffer + sizeof buffer, terms_[k].coefficient);
    out << std::string_view(buffer, static_cast<std::size_t>(result.ptr - buffer)) << "*|x|^"
        << terms_[k].exponent;
  }
  return out.str();
}

Preset preset(PresetKind kind) {
  switch (kind) {
    case PresetKind::Harmonic:
      return {kind, "harmonic", MonomialPotential({{0.5, 2}}), 1.0};
    case PresetKind::Quartic:
      return {kind, "quartic", MonomialPotential({{1.0, 4}}), 2.0};
    case PresetKind::Cubic:
      return {kind, "cubic", MonomialPotential({{1.0, 3}}), 2.0};
  }
  throw DomainError("unknown preset");
}

Preset preset(std::string_view name) {
  if (name == "harmonic") return preset(PresetKind::Harmonic);
  if (name == "quartic") return preset(PresetKind::Quartic);
  if (name == "cubic") return preset(PresetKind::Cubic);
  throw ParseError("unknown preset '" + std::string(name) + "' (expected harmonic, quartic or cubic)");
}

}  // namespace deltaritz

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "statmon/errors.hpp"
#include "statmon/monogamy.hpp"
#include "statmon/states.hpp"

namespace statmon {

namespace {

using Terms = std::vector<std::pair<const char*, double>>;

PureState from_terms(const Terms& terms) {
  const auto& ordering = BasisOrdering::canonical(3);
  Eigen::VectorXcd raw = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(ordering.dimension()));
  for (const auto& [word, coefficient] : terms) {
    raw(static_cast<Eigen::Index>(ordering.index_of(OccupationWord::parse(word)))) += coefficient;
  }
  return normalize(3, raw);
}

Sign parse_sign(const std::string& token) {
  if (token == "+" || token == "+1" || token == "1") return Sign::kPlus;
  if (token == "-" || token == "-1") return Sign::kMinus;
  throw ValidationError("chi sign must be + or -, got '" + token + "'");
}

}  // namespace

NamedState NamedState::parse(std::string_view name) {
  static const std::pair<const char*, NamedKind> kFixed[] = {
      {"sym_plus", NamedKind::kSymPlus},   {"antisym_minus", NamedKind::kAntisymMinus},
      {"eq5", NamedKind::kEq5},            {"eq6", NamedKind::kEq6},
      {"phi_eq23", NamedKind::kPhiEq23},   {"nontransitive_3_5", NamedKind::kNontransitive35},
  };
  for (const auto& [label, kind] : kFixed) {
    if (name == label) return {kind, {}};
  }
  constexpr std::string_view kChiPrefix = "chi:";
  if (name.substr(0, kChiPrefix.size()) != kChiPrefix) {
    throw ValidationError("unknown state name '" + std::string(name) + "'");
  }
  std::vector<std::string> fields;
  std::string current;
  for (char c : name.substr(kChiPrefix.size())) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  if (fields.size() != 4) throw ValidationError("chi needs theta,phi,s1,s2");

  NamedState out{NamedKind::kChi, {}};
  try {
    std::size_t used = 0;
    out.chi.theta = std::stod(fields[0], &used);
    if (used != fields[0].size()) throw std::invalid_argument("trailing");
    out.chi.phi = std::stod(fields[1], &used);
    if (used != fields[1].size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ValidationError("chi angles must be numbers");
  }
  out.chi.symmetry = parse_sign(fields[2]);
  out.chi.branch = parse_sign(fields[3]);
  return out;
}

std::string NamedState::str() const {
  switch (kind) {
    case NamedKind::kSymPlus: return "sym_plus";
    case NamedKind::kAntisymMinus: return "antisym_minus";
    case NamedKind::kEq5: return "eq5";
    case NamedKind::kEq6: return "eq6";
    case NamedKind::kPhiEq23: return "phi_eq23";
    case NamedKind::kNontransitive35: return "nontransitive_3_5";
    case NamedKind::kChi: {
      char buf[96];
      std::snprintf(buf, sizeof buf, "chi:%.12g,%.12g,%c,%c", chi.theta, chi.phi,
                    sign_char(chi.symmetry), sign_char(chi.branch));
      return buf;
    }
  }
  return "unknown";
}

PureState named_state(NamedKind kind) {
  if (kind == NamedKind::kChi) throw ValidationError("chi needs parameters");
  return named_state(NamedState{kind, {}});
}

PureState named_state(const NamedState& name) {
  const auto& ordering = BasisOrdering::canonical(3);
  const auto d = static_cast<Eigen::Index>(ordering.dimension());
  switch (name.kind) {
    case NamedKind::kSymPlus:
      return normalize(3, Eigen::VectorXcd::Ones(d));
    case NamedKind::kAntisymMinus: {
      Eigen::VectorXcd raw(d);
      for (Eigen::Index i = 0; i < d; ++i) {
        raw(i) = word_sign(ordering.word_at(static_cast<std::size_t>(i)));
      }
      return normalize(3, raw);
    }
    case NamedKind::kEq5:
      return from_terms({{"ABC", 0.5}, {"BAC", 0.5}, {"ACB", -0.5}, {"BCA", -0.5}});
    case NamedKind::kEq6:
      return from_terms({{"ABC", 0.5}, {"BAC", -0.5}, {"ACB", 0.5}, {"BCA", -0.5}});
    case NamedKind::kPhiEq23:
      return from_terms({{"ABC", 0.5}, {"BAC", 0.5}, {"CBA", -0.5}, {"BCA", -0.5}});
    case NamedKind::kNontransitive35: {
      const Eigen::VectorXcd mix = std::sqrt(4.0 / 5.0) * named_state(NamedKind::kPhiEq23).amplitudes() +
                                   (1.0 / std::sqrt(5.0)) * named_state(NamedKind::kSymPlus).amplitudes();
      return normalize(3, mix);
    }
    case NamedKind::kChi:
      return boundary_state(name.chi);
  }
  throw ValidationError("unknown named state");
}

}  // namespace statmon

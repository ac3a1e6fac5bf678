#pragma once

// One entry point per supported variety: selector syntax, class tokens, and
// classification with every witness the engines can produce.
//
//   gr:k,n   lg:n   og:n   quad:n   e6   e7
//
// Class tokens are comma sequences for Grassmannians ("-" is the empty
// sequence), linear-j / colinear-j / max-plus / max-minus for quadrics, and
// dim:deg for the exceptional posets, with a suffix a/b where two nodes share
// the same dim:deg (a = the maximal linear space).

#include "schubert/classical.hpp"
#include "schubert/errors.hpp"
#include "schubert/exceptional.hpp"
#include "schubert/lattice.hpp"
#include "schubert/poset.hpp"
#include "schubert/rigidity.hpp"
#include "schubert/witness.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

enum class Family { Gr, LG, OG, Quadric, E6, E7 };

struct VarietySelector {
  Family family = Family::Gr;
  int k = 0;
  int n = 0;
};

inline std::string to_string(const VarietySelector& s) {
  switch (s.family) {
  case Family::Gr:
    return "gr:" + std::to_string(s.k) + "," + std::to_string(s.n);
  case Family::LG:
    return "lg:" + std::to_string(s.n);
  case Family::OG:
    return "og:" + std::to_string(s.n);
  case Family::Quadric:
    return "quad:" + std::to_string(s.n);
  case Family::E6:
    return "e6";
  case Family::E7:
    return "e7";
  }
  return {};
}

namespace detail {

inline std::string lowercase(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

} // namespace detail

/// Parses a selector; any trailing ":class" part is left in `rest`.
inline VarietySelector parse_selector(std::string_view text, std::string* rest = nullptr) {
  const std::string s = detail::lowercase(text);
  const auto parts = detail::split(s, ':');
  auto tail = [&](std::size_t from) {
    std::string out;
    for (std::size_t k = from; k < parts.size(); ++k) out += (k > from ? ":" : "") + std::string(parts[k]);
    return out;
  };
  auto no_tail = [&](std::size_t used) {
    if (parts.size() > used && !rest) throw InvalidArgument("unexpected class in selector '" + std::string(text) + "'");
    if (rest) *rest = tail(used);
  };
  VarietySelector sel;
  const std::string head(parts.empty() ? std::string_view{} : parts[0]);
  if (head == "e6" || head == "e7") {
    sel.family = head == "e6" ? Family::E6 : Family::E7;
    no_tail(1);
    return sel;
  }
  if (parts.size() < 2) throw InvalidArgument("unknown variety selector '" + std::string(text) + "'");
  if (head == "gr") {
    const auto kn = detail::split(parts[1], ',');
    if (kn.size() != 2) throw InvalidArgument("expected gr:k,n, got '" + std::string(text) + "'");
    sel.family = Family::Gr;
    sel.k = detail::parse_int(kn[0], "gr selector");
    sel.n = detail::parse_int(kn[1], "gr selector");
    if (sel.k < 1 || sel.k >= sel.n) throw InvalidArgument("gr:k,n needs 1 <= k < n");
  } else if (head == "lg" || head == "og" || head == "quad" || head == "quadric") {
    sel.family = head == "lg" ? Family::LG : head == "og" ? Family::OG : Family::Quadric;
    sel.n = detail::parse_int(parts[1], head + " selector");
  } else {
    throw InvalidArgument("unknown variety selector '" + std::string(text) + "'");
  }
  no_tail(2);
  return sel;
}

inline QuotientPoset build_variety_poset(const VarietySelector& s) {
  switch (s.family) {
  case Family::Gr:
    return gr_poset(s.k, s.n);
  case Family::LG:
    return isotropic_poset(IsoFamily::LG, s.n);
  case Family::OG:
    return isotropic_poset(IsoFamily::OG, s.n);
  case Family::Quadric:
    return quadric_poset(s.n);
  case Family::E6:
    return build_quotient_poset(build_cartan(LieType::E6, 6), {6});
  case Family::E7:
    return build_quotient_poset(build_cartan(LieType::E7, 7), {7});
  }
  throw InvalidArgument("unknown family");
}

struct Classification {
  NodeId node;
  std::string token;
  int dim = 0;
  BigInt degree;
  Verdict verdict;
  std::vector<ConstructionWitness> witnesses;
};

class Variety {
public:
  explicit Variety(VarietySelector s) : sel_(s), poset_(build_variety_poset(s)) {}

  [[nodiscard]] const VarietySelector& selector() const { return sel_; }
  [[nodiscard]] const QuotientPoset& poset() const { return poset_; }
  [[nodiscard]] bool exceptional() const { return sel_.family == Family::E6 || sel_.family == Family::E7; }
  [[nodiscard]] std::string name() const { return to_string(sel_); }

  [[nodiscard]] NodeId parse_class(std::string_view token) const {
    const std::string t = detail::lowercase(token);
    switch (sel_.family) {
    case Family::Gr:
      return gr_to_coset(poset_, make_gr(sel_.k, sel_.n, parse_sequence(t)));
    case Family::LG:
    case Family::OG:
      return isotropic_to_coset(poset_, make_isotropic(iso_family(), sel_.n, parse_sequence(t)));
    case Family::Quadric:
      return quadric_to_coset(poset_, parse_quadric_class(sel_.n, t));
    case Family::E6:
    case Family::E7:
      return parse_exceptional(t);
    }
    throw InvalidArgument("unknown family");
  }

  [[nodiscard]] std::string class_token(NodeId id) const {
    poset_.check(id);
    switch (sel_.family) {
    case Family::Gr:
      return format_sequence(coset_to_gr(poset_, id).lambda);
    case Family::LG:
    case Family::OG:
      return format_sequence(coset_to_isotropic(poset_, id).lambda);
    case Family::Quadric:
      return schubert::class_token(coset_to_quadric(poset_, id));
    case Family::E6:
    case Family::E7:
      break;
    }
    const auto& n = poset_.node(id);
    std::string base = std::to_string(n.dim) + ":" + n.degree.str();
    const auto same = ordered_matches(n.dim, n.degree);
    if (same.size() == 1) return base;
    const auto pos = std::find(same.begin(), same.end(), id) - same.begin();
    return base + static_cast<char>('a' + pos);
  }

  /// Flexibility witnesses for exceptional nodes, computed once per variety.
  [[nodiscard]] const ExceptionalCertificates& certificates() const {
    if (!exceptional()) throw InvalidArgument(name() + " has no exceptional certificates");
    if (!certs_) {
      auto e6 = std::make_shared<ExceptionalCertificates>(certify_e6());
      certs_ = sel_.family == Family::E6 ? e6 : std::make_shared<ExceptionalCertificates>(certify_e7(*e6));
    }
    return *certs_;
  }

  [[nodiscard]] Classification classify(NodeId id, const std::filesystem::path& golden = golden_dir()) const {
    poset_.check(id);
    Classification c{id, class_token(id), poset_.node(id).dim, poset_.node(id).degree, {}, {}};
    if (exceptional()) {
      c.verdict = classify_exceptional(poset_, id, load_exceptional_golden(poset_, golden));
      c.witnesses = certificates().witnesses.at(id.value);
    } else {
      c.verdict = classical_verdict(id);
      if (!c.verdict.rigid()) {
        if (auto w = classical_moduli_witness(id)) c.witnesses.push_back(std::move(*w));
      }
      if (sel_.family == Family::Quadric) {
        if (auto w = quadric_witness(coset_to_quadric(poset_, id))) c.witnesses.push_back(std::move(*w));
      }
      if (auto w = bertini_witness(poset_, id)) c.witnesses.push_back(std::move(*w));
      for (auto& w : linear_and_divisor_witness(poset_, id)) c.witnesses.push_back(std::move(w));
    }
    std::stable_sort(c.witnesses.begin(), c.witnesses.end(),
                     [](const auto& a, const auto& b) { return a.kind < b.kind; });
    return c;
  }

private:
  [[nodiscard]] IsoFamily iso_family() const { return sel_.family == Family::LG ? IsoFamily::LG : IsoFamily::OG; }

  [[nodiscard]] Verdict classical_verdict(NodeId id) const {
    switch (sel_.family) {
    case Family::Gr:
      return classify_gr(coset_to_gr(poset_, id));
    case Family::LG:
    case Family::OG:
      return classify_isotropic(coset_to_isotropic(poset_, id));
    case Family::Quadric:
      return classify_quadric(coset_to_quadric(poset_, id));
    default:
      throw InvalidArgument("not a classical family");
    }
  }

  [[nodiscard]] std::optional<ConstructionWitness> classical_moduli_witness(NodeId id) const {
    if (sel_.family == Family::Gr) return moduli_witness_gr(coset_to_gr(poset_, id));
    if (sel_.family == Family::LG || sel_.family == Family::OG)
      return moduli_witness_isotropic(coset_to_isotropic(poset_, id));
    return std::nullopt;
  }

  /// Nodes with the given dim:deg; maximal linear spaces first, then by id.
  [[nodiscard]] std::vector<NodeId> ordered_matches(int dim, const BigInt& deg) const {
    auto ids = nodes_by_dim_deg(poset_, dim, deg);
    auto maximal_linear = [&](NodeId v) {
      if (poset_.node(v).degree != 1) return false;
      for (NodeId u : poset_.upper_covers(v))
        if (poset_.node(u).degree == 1) return false;
      return true;
    };
    std::stable_sort(ids.begin(), ids.end(), [&](NodeId a, NodeId b) {
      const bool ma = maximal_linear(a);
      const bool mb = maximal_linear(b);
      return ma != mb ? ma : a.value < b.value;
    });
    return ids;
  }

  [[nodiscard]] NodeId parse_exceptional(const std::string& t) const {
    const auto colon = t.find(':');
    if (colon == std::string::npos) throw InvalidArgument("expected dim:deg, got '" + t + "'");
    std::string deg = t.substr(colon + 1);
    std::optional<char> suffix;
    if (!deg.empty() && std::isalpha(static_cast<unsigned char>(deg.back()))) {
      suffix = deg.back();
      deg.pop_back();
    }
    const int dim = detail::parse_int(t.substr(0, colon), "class dimension");
    if (deg.empty() || deg.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidArgument("malformed degree in class '" + t + "'");
    const auto ids = ordered_matches(dim, BigInt(deg));
    if (ids.empty()) throw InvalidArgument("no class " + t + " in " + poset_.label());
    if (!suffix) {
      if (ids.size() > 1) throw InvalidArgument("class '" + t + "' is ambiguous in " + poset_.label() + "; add a or b");
      return ids.front();
    }
    const std::size_t pos = static_cast<std::size_t>(*suffix - 'a');
    if (*suffix < 'a' || pos >= ids.size()) throw InvalidArgument("no class '" + t + "' in " + poset_.label());
    return ids[pos];
  }

  VarietySelector sel_;
  QuotientPoset poset_;
  mutable std::shared_ptr<ExceptionalCertificates> certs_;
};

} // namespace schubert

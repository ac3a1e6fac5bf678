#pragma once

// Multi-rigidity criteria for the classical families, and the exceptional
// decorations read from golden data.

#include "schubert/classical.hpp"
#include "schubert/errors.hpp"
#include "schubert/poset.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef SCHUBERT_DEFAULT_GOLDEN_DIR
#define SCHUBERT_DEFAULT_GOLDEN_DIR "data/golden"
#endif

namespace schubert {

enum class RigidityStatus { MultiRigid, Flexible };

inline std::string to_string(RigidityStatus s) { return s == RigidityStatus::MultiRigid ? "MultiRigid" : "Flexible"; }

struct Verdict {
  RigidityStatus status = RigidityStatus::MultiRigid;
  /// The clause that decided, for diagnostics.
  std::string source;

  [[nodiscard]] bool rigid() const { return status == RigidityStatus::MultiRigid; }
};

namespace detail {

inline Verdict rigid(std::string why) { return {RigidityStatus::MultiRigid, std::move(why)}; }
inline Verdict flexible(std::string why) { return {RigidityStatus::Flexible, std::move(why)}; }

inline std::string jstr(int j) { return "j=" + std::to_string(j); }

/// Clauses shared by LG and OG; `bound` is n-2 (LG) or n-3 (OG), `full` is n or n-1.
inline Verdict classify_isotropic_clauses(const IsotropicIndex& x, int full, int bound) {
  if (x.lambda.empty()) return rigid("empty index (fundamental class)");
  const auto a = associated_sequence(x.lambda);
  const int t = a.t();
  for (int j = 2; j <= t; ++j) {
    if (a.mult(j) < 2) return flexible("i_j >= 2 fails at " + jstr(j));
    if (a.mu(j - 1) > a.mu(j) - 2) return flexible("mu_{j-1} <= mu_j - 2 fails at " + jstr(j));
  }
  if (a.mu(1) > 0 && a.mult(1) < 2) return flexible("i_1 >= 2 fails with mu_1 > 0");
  const int last = x.lambda.back();
  if (last < full && last > bound) {
    return flexible("lambda_s <= " + std::to_string(bound) + " fails with lambda_s < " + std::to_string(full));
  }
  return rigid("all clauses hold");
}

} // namespace detail

/// Clause evaluation exactly as stated for G(k,n), k >= 2 meaningful.
inline Verdict classify_gr_clauses(const GrIndex& g) {
  validate(g);
  const auto a = associated_sequence(g.lambda);
  const int t = a.t();
  for (int j = 2; j < t; ++j)
    if (a.mult(j) < 2) return detail::flexible("i_j >= 2 fails at interior " + detail::jstr(j));
  for (int j = 2; j <= t; ++j)
    if (a.mu(j - 1) > a.mu(j) - 2) return detail::flexible("mu_{j-1} <= mu_j - 2 fails at " + detail::jstr(j));
  if (a.mu(1) > 0 && a.mult(1) < 2) return detail::flexible("i_1 >= 2 fails with mu_1 > 0");
  if (a.mu(t) < g.n - g.k && a.mult(t) < 2) return detail::flexible("i_t >= 2 fails with mu_t < n-k");
  return detail::rigid("all clauses hold");
}

/// G(1,n) is read through G(n-1,n): the literal clauses would call the point
/// and the fundamental class of P^{n-1} flexible.
inline Verdict classify_gr(const GrIndex& g) {
  validate(g);
  if (g.k == 1) {
    if (g.n == 2) return detail::rigid("P^1: point and fundamental class");
    Verdict v = classify_gr_clauses(ann_index(g));
    v.source = "via G(n-1,n): " + v.source;
    return v;
  }
  return classify_gr_clauses(g);
}

inline Verdict classify_lg(const IsotropicIndex& x) {
  validate(x);
  if (x.family != IsoFamily::LG) throw InvalidArgument("classify_lg needs an LG index");
  return detail::classify_isotropic_clauses(x, x.n, x.n - 2);
}

inline Verdict classify_og(const IsotropicIndex& x) {
  validate(x);
  if (x.family != IsoFamily::OG) throw InvalidArgument("classify_og needs an OG index");
  return detail::classify_isotropic_clauses(x, x.n - 1, x.n - 3);
}

inline Verdict classify_isotropic(const IsotropicIndex& x) {
  return x.family == IsoFamily::LG ? classify_lg(x) : classify_og(x);
}

inline Verdict classify_quadric(const QuadricIndex& q) {
  validate(q);
  switch (q.kind) {
  case QuadricKind::Linear:
    return q.j == 1 ? detail::rigid("point class") : detail::flexible("linear space other than a point");
  case QuadricKind::CoLinear:
    return q.j == 0 ? detail::rigid("fundamental class") : detail::flexible("proper linear section");
  case QuadricKind::MaxLinear:
    return detail::rigid("maximal isotropic space, n even");
  }
  return {};
}

// ---- exceptional golden data ----

enum class Decoration { Rigid, Plus, Star, T };

inline std::string to_string(Decoration d) {
  switch (d) {
  case Decoration::Rigid:
    return "rigid";
  case Decoration::Plus:
    return "plus";
  case Decoration::Star:
    return "star";
  case Decoration::T:
    return "T";
  }
  return {};
}

inline std::optional<Decoration> parse_decoration(const std::string& s) {
  if (s == "rigid") return Decoration::Rigid;
  if (s == "plus") return Decoration::Plus;
  if (s == "star") return Decoration::Star;
  if (s == "T") return Decoration::T;
  return std::nullopt;
}

struct ExceptionalGoldenRecord {
  NodeId id;
  int dim = 0;
  BigInt degree;
  Decoration decoration = Decoration::Rigid;
  std::string note;
};

/// Records indexed by node id, validated against the poset they describe.
struct ExceptionalGolden {
  std::string label;
  std::vector<ExceptionalGoldenRecord> records;

  [[nodiscard]] const ExceptionalGoldenRecord& at(NodeId id) const {
    if (id.value >= records.size()) throw InvalidArgument("node id " + std::to_string(id.value) + " not in golden data");
    return records[id.value];
  }
};

inline std::filesystem::path golden_dir() {
  if (const char* env = std::getenv("SCHUBERT_GOLDEN_DIR"); env && *env) return env;
  return SCHUBERT_DEFAULT_GOLDEN_DIR;
}

/// Golden data is absent or unreadable.
class MissingGoldenData : public DataIntegrityError {
public:
  using DataIntegrityError::DataIntegrityError;
};

namespace detail {

inline std::vector<std::vector<std::string>> read_tsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingGoldenData("cannot open golden file " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, '\t')) fields.push_back(f);
    rows.push_back(std::move(fields));
  }
  return rows;
}

inline long parse_field_int(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DataIntegrityError(where + ": malformed integer '" + s + "'");
  }
}

} // namespace detail

/// Parse and validate golden rows against `poset`.  Any disagreement in node
/// count, ids, dimensions or degrees is a DataIntegrityError.
inline ExceptionalGolden parse_exceptional_golden(const std::vector<std::vector<std::string>>& rows,
                                                  const QuotientPoset& poset, const std::string& source) {
  ExceptionalGolden g;
  g.label = poset.datum().label();
  g.records.resize(poset.size());
  std::vector<char> seen(poset.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& f = rows[r];
    const std::string where = source + " row " + std::to_string(r + 1);
    if (f.size() < 4 || f.size() > 5) throw DataIntegrityError(where + ": expected 4 or 5 tab-separated fields");
    const long id = detail::parse_field_int(f[0], where);
    if (id < 0 || static_cast<std::size_t>(id) >= poset.size())
      throw DataIntegrityError(where + ": node id " + f[0] + " not in " + poset.label());
    if (seen[id]) throw DataIntegrityError(where + ": duplicate node id " + f[0]);
    seen[id] = 1;
    const auto& node = poset.node(NodeId{static_cast<std::uint32_t>(id)});
    ExceptionalGoldenRecord rec;
    rec.id = node.id;
    rec.dim = static_cast<int>(detail::parse_field_int(f[1], where));
    try {
      rec.degree = BigInt(f[2]);
    } catch (const std::exception&) {
      throw DataIntegrityError(where + ": malformed degree '" + f[2] + "'");
    }
    auto dec = parse_decoration(f[3]);
    if (!dec) throw DataIntegrityError(where + ": unknown decoration '" + f[3] + "'");
    rec.decoration = *dec;
    rec.note = f.size() == 5 ? f[4] : "";
    if (rec.dim != node.dim || rec.degree != node.degree) {
      throw DataIntegrityError(where + ": golden (" + f[1] + ":" + f[2] + ") disagrees with computed (" +
                               std::to_string(node.dim) + ":" + node.degree.str() + ") for node " + f[0]);
    }
    g.records[id] = std::move(rec);
  }
  for (std::size_t id = 0; id < seen.size(); ++id)
    if (!seen[id]) throw DataIntegrityError(source + ": node " + std::to_string(id) + " of " + poset.label() + " missing");
  return g;
}

inline std::string golden_file_name(const QuotientPoset& poset) {
  std::string l = poset.datum().label();
  for (auto& c : l) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return l + ".tsv";
}

inline ExceptionalGolden load_exceptional_golden(const QuotientPoset& poset,
                                                 const std::filesystem::path& dir = golden_dir()) {
  const auto path = dir / golden_file_name(poset);
  return parse_exceptional_golden(detail::read_tsv(path), poset, path.string());
}

inline Verdict classify_exceptional(const QuotientPoset& poset, NodeId id, const ExceptionalGolden& golden) {
  poset.check(id);
  if (golden.label != poset.datum().label() || golden.records.size() != poset.size())
    throw DataIntegrityError("golden data for " + golden.label + " does not describe " + poset.label());
  const auto& rec = golden.at(id);
  if (rec.dim != poset.node(id).dim || rec.degree != poset.node(id).degree)
    throw DataIntegrityError("golden record for node " + std::to_string(id.value) + " disagrees with the poset");
  if (rec.decoration == Decoration::Rigid) return detail::rigid("marked rigid in the golden data");
  return detail::flexible("decorated '" + to_string(rec.decoration) + "' in the golden data");
}

} // namespace schubert

// Command-line front end.  Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 data-integrity error or missing golden data.

#include "schubert/exceptional.hpp"
#include "schubert/tits.hpp"
#include "schubert/variety.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

using namespace schubert;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kDataIntegrity = 3;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json degree_json(const BigInt& d) {
  if (d <= std::numeric_limits<std::int64_t>::max()) return Json(static_cast<std::int64_t>(d));
  return Json(d.str());
}

Json ids_json(const NodeSubset& s) {
  Json a = Json::array();
  for (int v : s) a.push_back(v);
  return a;
}

Json word_json(const WeylWord& w) {
  Json a = Json::array();
  for (int v : w.letters) a.push_back(v);
  return a;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string word_text(const WeylWord& w) {
  std::vector<std::string> s;
  for (int v : w.letters) s.push_back(std::to_string(v));
  return s.empty() ? "e" : join(s, ".");
}

std::string dim_deg(const QuotientPoset& p, NodeId id) {
  return std::to_string(p.node(id).dim) + ":" + p.node(id).degree.str();
}

std::vector<NodeId> reading_order(const QuotientPoset& p) {
  std::vector<NodeId> ids;
  for (const auto& n : p.nodes()) ids.push_back(n.id);
  std::stable_sort(ids.begin(), ids.end(), [&](NodeId a, NodeId b) {
    return p.node(a).dim != p.node(b).dim ? p.node(a).dim < p.node(b).dim : a.value < b.value;
  });
  return ids;
}

// ---- hasse ----

std::string render_hasse(const Variety& v, const std::string& format) {
  const auto& p = v.poset();
  require_cominuscule(p, "hasse");
  const auto order = reading_order(p);
  std::ostringstream out;
  if (format == "json") {
    Json j;
    j["type"] = p.datum().label();
    j["parabolic"] = ids_json(p.parabolic());
    j["variety"] = v.name();
    Json nodes = Json::array();
    for (NodeId id : order) {
      const auto& n = p.node(id);
      nodes.push_back(Json{{"id", id.value},
                           {"dim", n.dim},
                           {"degree", degree_json(n.degree)},
                           {"class", v.class_token(id)},
                           {"min_word", word_json(n.min_word)}});
    }
    j["nodes"] = nodes;
    Json covers = Json::array();
    for (NodeId id : order)
      for (NodeId u : p.upper_covers(id)) covers.push_back(Json::array({id.value, u.value}));
    j["covers"] = covers;
    out << j.dump(2) << "\n";
  } else if (format == "dot") {
    out << "digraph \"" << p.label() << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    int dim = -1;
    for (NodeId id : order) {
      if (p.node(id).dim != dim) {
        if (dim >= 0) out << " }\n";
        dim = p.node(id).dim;
        out << "  { rank=same;";
      }
      out << " n" << id.value << " [label=\"" << dim_deg(p, id) << "\"];";
    }
    if (dim >= 0) out << " }\n";
    for (NodeId id : order)
      for (NodeId u : p.upper_covers(id)) out << "  n" << id.value << " -> n" << u.value << ";\n";
    out << "}\n";
  } else {
    out << p.label() << " (" << v.name() << "): " << p.size() << " nodes, " << p.covers().size() << " covers\n";
    out << "id\tdim\tdegree\tclass\tmin_word\tupper_covers\n";
    for (NodeId id : order) {
      std::vector<std::string> ups;
      for (NodeId u : p.upper_covers(id)) ups.push_back(std::to_string(u.value));
      out << id.value << "\t" << p.node(id).dim << "\t" << p.node(id).degree << "\t" << v.class_token(id) << "\t"
          << word_text(p.node(id).min_word) << "\t" << (ups.empty() ? "-" : join(ups, ",")) << "\n";
    }
  }
  return out.str();
}

// ---- classify ----

Json gr_json(const GrIndex& g) { return Json{{"k", g.k}, {"n", g.n}, {"lambda", g.lambda}}; }

Json payload_json(const Variety& v, const ConstructionWitness& w) {
  const auto& p = v.poset();
  return std::visit(
      [&](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BertiniPayload>) {
          return Json{{"cover", v.class_token(x.cover)}, {"cover_dim", x.cover_dim}, {"degree", degree_json(x.degree)}};
        } else if constexpr (std::is_same_v<T, LinearPayload>) {
          return Json{{"container", v.class_token(x.container)}, {"dim", x.dim}};
        } else if constexpr (std::is_same_v<T, DivisorPayload>) {
          return Json{{"top", v.class_token(x.top)}, {"ambient_dim", x.ambient_dim}};
        } else if constexpr (std::is_same_v<T, QuadricPayload>) {
          return Json{{"construction", to_string(x.construction)}, {"ambient_dim", x.ambient_dim}};
        } else if constexpr (std::is_same_v<T, ModuliGrPayload>) {
          return Json{{"case", x.case_number},     {"u", x.u},
                      {"flag_dims", x.flag_dims},  {"vertex_dim", x.vertex_dim},
                      {"carrier", gr_json(x.carrier)}, {"container", gr_json(x.container)}};
        } else if constexpr (std::is_same_v<T, ModuliIsotropicPayload>) {
          Json j{{"branch", std::string(1, x.branch)}, {"special_case", x.special_case}};
          j["inner"] = x.inner ? gr_json(*x.inner) : Json(nullptr);
          j["inner_case"] = x.inner_witness ? Json(x.inner_witness->case_number) : Json(nullptr);
          j["second_component"] = x.second_component;
          return j;
        } else if constexpr (std::is_same_v<T, ConePayload>) {
          return Json{{"apex", dim_deg(p, x.apex)}, {"sub_variety", x.sub_label}, {"sub_node", x.source.value}};
        } else {
          return Json{{"route", x.route},           {"P", ids_json(x.p)},        {"Q", ids_json(x.q)},
                      {"source", x.source.value},   {"source_cover", x.source_cover.value},
                      {"source_dim", x.source_dim}, {"d_tau", x.d_tau}};
        }
      },
      w.payload);
}

std::string render_classify(const Variety& v, const Classification& c, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    Json j;
    j["variety"] = v.name();
    j["class"] = c.token;
    j["node"] = c.node.value;
    j["dim"] = c.dim;
    j["degree"] = degree_json(c.degree);
    j["verdict"] = to_string(c.verdict.status);
    j["source"] = c.verdict.source;
    Json ws = Json::array();
    for (const auto& w : c.witnesses)
      ws.push_back(Json{{"kind", to_string(w.kind)}, {"summary", w.summary}, {"payload", payload_json(v, w)}});
    j["witnesses"] = ws;
    out << j.dump(2) << "\n";
    return out.str();
  }
  std::vector<std::string> kinds;
  for (const auto& w : c.witnesses) {
    std::string k = to_string(w.kind);
    if (const auto* m = std::get_if<ModuliGrPayload>(&w.payload)) k += "(case " + std::to_string(m->case_number) + ")";
    if (const auto* m = std::get_if<ModuliIsotropicPayload>(&w.payload)) k += "(" + std::string(1, m->branch) + ")";
    if (std::find(kinds.begin(), kinds.end(), k) == kinds.end()) kinds.push_back(k);
  }
  out << v.name() << " " << c.token << " (" << c.dim << ":" << c.degree << "): " << to_string(c.verdict.status);
  if (!kinds.empty()) out << " {" << join(kinds, ", ") << "}";
  out << "\n  clause: " << c.verdict.source << "\n";
  for (const auto& w : c.witnesses) out << "  " << to_string(w.kind) << ": " << w.summary << "\n";
  return out.str();
}

// ---- degree / dual ----

std::string render_degree(const Variety& v, NodeId id, const std::string& format) {
  const auto& n = v.poset().node(id);
  if (format == "json") {
    Json j{{"variety", v.name()}, {"class", v.class_token(id)}, {"node", id.value}, {"dim", n.dim},
           {"degree", degree_json(n.degree)}};
    return j.dump(2) + "\n";
  }
  return v.name() + " " + v.class_token(id) + ": dim " + std::to_string(n.dim) + ", degree " + n.degree.str() + "\n";
}

std::string render_dual(const Variety& v, NodeId id, const std::string& format) {
  const NodeId d = poincare_dual(v.poset(), id);
  auto side = [&](NodeId x) {
    return Json{{"class", v.class_token(x)}, {"node", x.value}, {"dim", v.poset().node(x).dim},
                {"degree", degree_json(v.poset().node(x).degree)}};
  };
  if (format == "json") return Json{{"variety", v.name()}, {"class", side(id)}, {"dual", side(d)}}.dump(2) + "\n";
  return v.name() + " " + v.class_token(id) + " (" + dim_deg(v.poset(), id) + ") -> " + v.class_token(d) + " (" +
         dim_deg(v.poset(), d) + ")\n";
}

// ---- tits ----

CartanDatum parse_lie_type(const std::string& text) {
  const std::string s = detail::lowercase(text);
  if (s == "e6") return build_cartan(LieType::E6, 6);
  if (s == "e7") return build_cartan(LieType::E7, 7);
  if (s.size() < 2) throw InvalidArgument("unknown Lie type '" + text + "'");
  const int rank = detail::parse_int(std::string_view(s).substr(1), "Lie type rank");
  switch (s[0]) {
  case 'a':
    return build_cartan(LieType::A, rank);
  case 'b':
    return build_cartan(LieType::B, rank);
  case 'c':
    return build_cartan(LieType::C, rank);
  case 'd':
    return build_cartan(LieType::D, rank);
  default:
    throw InvalidArgument("unknown Lie type '" + text + "'");
  }
}

NodeSubset parse_subset(const std::string& text) {
  NodeSubset out;
  for (auto part : detail::split(text, ',')) out.push_back(detail::parse_int(part, "parabolic node"));
  return out;
}

Json side_json(NodeId id, int dim, const BigInt& deg) {
  return Json{{"id", id.value}, {"dim", dim}, {"deg", degree_json(deg)}};
}

Json context_json(const TitsContext& ctx) {
  return Json{{"type", ctx.datum.label()}, {"P", ids_json(ctx.p)}, {"Q", ids_json(ctx.q)}, {"d_tau", ctx.d_tau}};
}

std::string render_tits(const TitsContext& ctx, const std::string& format) {
  const auto rows = transform_table(ctx);
  if (format == "json") {
    Json j;
    j["context"] = context_json(ctx);
    Json rs = Json::array();
    for (const auto& r : rows)
      rs.push_back(Json{{"src", side_json(r.src, r.src_dim, r.src_degree)},
                        {"dst", side_json(r.dst, r.dst_dim, r.dst_degree)},
                        {"injective", r.injective}});
    j["rows"] = rs;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << ctx.label() << ", d_tau=" << ctx.d_tau << ", d_eta=" << ctx.d_eta << "\n";
  out << "src\tsrc_dim:deg\tdst\tdst_dim:deg\tinjective\n";
  for (const auto& r : rows)
    out << r.src.value << "\t" << r.src_dim << ":" << r.src_degree << "\t" << r.dst.value << "\t" << r.dst_dim << ":"
        << r.dst_degree << "\t" << (r.injective ? "yes" : "no") << "\n";
  return out.str();
}

struct ExceptionalData {
  ExceptionalCertificates e6;
  ExceptionalCertificates e7;
  ExceptionalGolden g6;
  ExceptionalGolden g7;
};

ExceptionalData load_exceptional(const std::filesystem::path& dir) {
  auto e6 = certify_e6();
  auto e7 = certify_e7(e6);
  auto g6 = load_exceptional_golden(e6.poset, dir);
  auto g7 = load_exceptional_golden(e7.poset, dir);
  return {std::move(e6), std::move(e7), std::move(g6), std::move(g7)};
}

std::vector<Table1Row> compute_table1(const ExceptionalData& d, TitsContext& q1_out) {
  const CayleyInterval ci = cayley_interval(d.e6.poset);
  q1_out = build_context(build_cartan(LieType::E7, 7), {7}, {1});
  return table1(ci, q1_out, d.g6, d.g7);
}

std::string star(const std::string& s, bool rigid) { return rigid ? s + "*" : s; }

std::string render_table1(const std::filesystem::path& dir, const std::string& format) {
  const auto data = load_exceptional(dir);
  TitsContext q1 = build_context(build_cartan(LieType::E7, 7), {7}, {1});
  const auto rows = compute_table1(data, q1);
  if (format == "json") {
    Json j;
    j["context"] = context_json(q1);
    Json rs = Json::array();
    for (const auto& r : rows) {
      Json src = side_json(r.src, r.src_dim, r.src_degree);
      src["rigid"] = r.src_rigid;
      src["e6_id"] = r.src_e6.value;
      Json dst = side_json(r.dst, r.dst_dim, r.dst_degree);
      dst["rigid"] = r.dst_rigid;
      rs.push_back(Json{{"src", src}, {"dst", dst}, {"injective", r.injective}});
    }
    j["rows"] = rs;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "Cayley plane Y in E7/P1 -> E7/P7, d_tau=" << q1.d_tau << " (* multi-rigid)\n";
  for (const auto& r : rows)
    out << star(std::to_string(r.src_dim) + ":" + r.src_degree.str(), r.src_rigid) << "\t"
        << star(std::to_string(r.dst_dim) + ":" + r.dst_degree.str(), r.dst_rigid) << "\n";
  return out.str();
}

// ---- verify ----

struct VerifyOutcome {
  bool pass = true;
  Json json;
  std::string text;
};

VerifyOutcome verify_decoration_target(const ExceptionalCertificates& certs, const ExceptionalGolden& golden,
                                       const std::string& target) {
  const auto report = verify_decorations(certs, golden);
  const auto& p = certs.poset;
  const Variety v(parse_selector(target));
  VerifyOutcome o;
  o.pass = report.all_pass();
  const int passed = static_cast<int>(report.entries.size()) - report.failures();
  Json entries = Json::array();
  std::ostringstream text;
  text << report.label << ": " << passed << "/" << report.entries.size() << " degree+decoration pass, "
       << report.rigid_count() << " rigid, " << report.witnessed_count() << " witnessed, " << report.violations()
       << " violations\n";
  for (const auto& e : report.entries) {
    Json kinds = Json::array();
    std::vector<std::string> names;
    for (auto k : e.certified) {
      kinds.push_back(to_string(k));
      names.push_back(to_string(k));
    }
    entries.push_back(Json{{"id", e.id.value},
                           {"dim", e.dim},
                           {"degree", degree_json(e.degree)},
                           {"class", v.class_token(e.id)},
                           {"decoration", to_string(e.decoration)},
                           {"certified", kinds},
                           {"pass", e.pass},
                           {"violation", e.violation},
                           {"note", e.note}});
    text << "  " << (e.pass ? "PASS" : "FAIL") << "\t" << e.id.value << "\t" << dim_deg(p, e.id) << "\t"
         << to_string(e.decoration) << "\t" << (names.empty() ? "-" : join(names, ",")) << "\n";
  }
  o.json = Json{{"target", target},
                {"label", report.label},
                {"pass", o.pass},
                {"summary",
                 {{"nodes", report.entries.size()},
                  {"passed", passed},
                  {"rigid", report.rigid_count()},
                  {"witnessed", report.witnessed_count()},
                  {"violations", report.violations()}}},
                {"entries", entries}};
  o.text = text.str();
  return o;
}

VerifyOutcome verify_table1_target(const ExceptionalData& data, const std::filesystem::path& dir) {
  TitsContext q1 = build_context(build_cartan(LieType::E7, 7), {7}, {1});
  const auto rows = compute_table1(data, q1);
  const auto golden = load_table1_golden(dir);
  const auto checks = verify_table1(rows, golden);
  VerifyOutcome o;
  int passed = 0;
  Json rs = Json::array();
  std::ostringstream body;
  for (const auto& c : checks) {
    passed += c.pass;
    o.pass = o.pass && c.pass;
    const auto& r = c.row;
    const std::string src = star(std::to_string(r.src_dim) + ":" + r.src_degree.str(), r.src_rigid);
    const std::string dst = star(std::to_string(r.dst_dim) + ":" + r.dst_degree.str(), r.dst_rigid);
    rs.push_back(Json{{"src", src},
                      {"dst", dst},
                      {"injective", r.injective},
                      {"golden_row", c.golden_row ? Json(*c.golden_row + 1) : Json(nullptr)},
                      {"pass", c.pass}});
    body << "  " << (c.pass ? "PASS" : "FAIL") << "\t" << src << "\t-> " << dst << "\n";
  }
  o.pass = o.pass && checks.size() == golden.size();
  o.json = Json{{"target", "table1"},
                {"label", q1.label()},
                {"pass", o.pass},
                {"summary", {{"rows", golden.size()}, {"passed", passed}}},
                {"rows", rs}};
  o.text = "transform table (" + q1.label() + "): " + std::to_string(passed) + "/" + std::to_string(golden.size()) +
           " pass\n" + body.str();
  return o;
}

int run_verify(const std::string& target, const std::filesystem::path& dir, const std::string& format,
               std::string& out) {
  const auto data = load_exceptional(dir);
  std::vector<VerifyOutcome> parts;
  if (target == "e6" || target == "all") parts.push_back(verify_decoration_target(data.e6, data.g6, "e6"));
  if (target == "e7" || target == "all") parts.push_back(verify_decoration_target(data.e7, data.g7, "e7"));
  if (target == "table1" || target == "all") parts.push_back(verify_table1_target(data, dir));
  bool pass = true;
  for (const auto& p : parts) pass = pass && p.pass;
  if (format == "json") {
    Json j = parts.size() == 1 ? parts.front().json : Json{{"target", "all"}, {"pass", pass}, {"reports", Json::array()}};
    if (parts.size() > 1)
      for (const auto& p : parts) j["reports"].push_back(p.json);
    out = j.dump(2) + "\n";
  } else {
    for (const auto& p : parts) out += p.text;
    out += std::string(pass ? "verify " : "verify FAILED ") + target + "\n";
  }
  return pass ? kOk : kVerifyFailed;
}

// ---- plumbing ----

void require_format(const std::string& format, std::initializer_list<const char*> allowed, const std::string& cmd) {
  for (const char* a : allowed)
    if (format == a) return;
  throw Usage("format '" + format + "' is not supported by " + cmd);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Usage("cannot write " + path);
  f << text;
}

/// Selector plus class, where the class may also be appended to the selector.
std::pair<Variety, NodeId> variety_and_class(const std::string& selector, const std::string& cls) {
  std::string embedded;
  const auto sel = parse_selector(selector, &embedded);
  if (!embedded.empty() && !cls.empty()) throw Usage("class given twice: '" + embedded + "' and '" + cls + "'");
  const std::string token = cls.empty() ? embedded : cls;
  if (token.empty()) throw Usage("missing class for " + selector);
  Variety v(sel);
  const NodeId id = v.parse_class(token);
  return {std::move(v), id};
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert classes of cominuscule varieties: posets, rigidity, witnesses, Tits transforms"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  std::string output;
  std::string golden;
  app.add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"json", "dot", "table"}));
  app.add_option("-o,--output", output, "Write output to this file instead of stdout");
  app.add_option("--golden-dir", golden, "Golden data directory")->envname("SCHUBERT_GOLDEN_DIR");

  std::string selector;
  std::string cls;

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the Schubert classes");
  hasse->add_option("variety", selector, "gr:k,n | lg:n | og:n | quad:n | e6 | e7")->required();

  auto* classify = app.add_subcommand("classify", "Multi-rigidity verdict and flexibility witnesses");
  classify->add_option("variety", selector, "Variety selector, optionally with :class appended")->required();
  classify->add_option("class", cls, "Class token");

  auto* degree = app.add_subcommand("degree", "Dimension and degree of a Schubert class");
  degree->add_option("variety", selector)->required();
  degree->add_option("class", cls);

  auto* dual = app.add_subcommand("dual", "Poincare dual class");
  dual->add_option("variety", selector)->required();
  dual->add_option("class", cls);

  std::string lie;
  std::string p_text;
  std::string q_text;
  auto* tits = app.add_subcommand("tits", "Tits transform table G/Q -> G/P, or 'tits table1'");
  tits->add_option("type", lie, "Lie type (e6, e7, a4, ...) or table1")->required();
  tits->add_option("--P", p_text, "Target parabolic, comma-separated nodes");
  tits->add_option("--Q", q_text, "Source parabolic, comma-separated nodes");

  std::string target;
  auto* verify = app.add_subcommand("verify", "Check the exceptional golden data");
  verify->add_option("target", target, "e6 | e7 | table1 | all")
      ->required()
      ->check(CLI::IsMember({"e6", "e7", "table1", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::filesystem::path dir = golden.empty() ? golden_dir() : std::filesystem::path(golden);
  try {
    std::string text;
    int status = kOk;
    if (*hasse) {
      require_format(format, {"json", "dot", "table"}, "hasse");
      const Variety v(parse_selector(selector));
      text = render_hasse(v, format);
    } else if (*classify) {
      require_format(format, {"json", "table"}, "classify");
      auto [v, id] = variety_and_class(selector, cls);
      text = render_classify(v, v.classify(id, dir), format);
    } else if (*degree) {
      require_format(format, {"json", "table"}, "degree");
      auto [v, id] = variety_and_class(selector, cls);
      text = render_degree(v, id, format);
    } else if (*dual) {
      require_format(format, {"json", "table"}, "dual");
      auto [v, id] = variety_and_class(selector, cls);
      text = render_dual(v, id, format);
    } else if (*tits) {
      require_format(format, {"json", "table"}, "tits");
      if (detail::lowercase(lie) == "table1") {
        text = render_table1(dir, format);
      } else {
        if (p_text.empty() || q_text.empty()) throw Usage("tits needs --P and --Q");
        const auto datum = parse_lie_type(lie);
        text = render_tits(build_context(datum, parse_subset(p_text), parse_subset(q_text)), format);
      }
    } else if (*verify) {
      require_format(format, {"json", "table"}, "verify");
      status = run_verify(target, dir, format, text);
    }
    emit(text, output);
    return status;
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const MissingGoldenData& e) {
    std::cerr << "missing golden data: " << e.what() << "\n";
    return kDataIntegrity;
  } catch (const DataIntegrityError& e) {
    std::cerr << "data integrity error: " << e.what() << "\n";
    return kDataIntegrity;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

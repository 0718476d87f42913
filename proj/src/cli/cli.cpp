#include "chowkit/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "chowkit/corpus/builders.hpp"
#include "chowkit/corpus/verify.hpp"
#include "chowkit/format/serialize.hpp"

namespace chowkit::cli {

namespace {

using json = nlohmann::ordered_json;
using algebra::Presentation;
using format::Detail;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ParseError tagged with the file it came from.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "text";
  std::string out;
  bool verbose = false;

  bool structured() const { return format == "structured"; }
  Detail detail() const { return verbose ? Detail::kFull : Detail::kSummary; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
auto parsing(const std::string& origin, F&& f) {
  try {
    return f();
  } catch (const format::ParseError& e) {
    throw InputError(origin + ":" + e.what());
  }
}

Presentation load_presentation(const std::string& path) {
  std::string text = read_file(path);
  return parsing(path, [&] { return format::parse_presentation(text); });
}

algebra::Polynomial load_polynomial(const std::string& text, const Presentation& pres) {
  return parsing("--poly", [&] { return format::parse_polynomial(text, pres.signature_ptr()); });
}

Integer integer_flag(const std::string& name, const std::string& value) {
  auto v = parse_integer(value);
  if (!v) throw UsageError("--" + name + ": not an integer: " + value);
  return *v;
}

long long_flag(const std::string& name, const std::string& value) {
  Integer v = integer_flag(name, value);
  if (!v.fits_slong_p()) throw UsageError("--" + name + ": out of range: " + value);
  return v.get_si();
}

std::size_t degree_flag(const std::string& name, const std::string& value) {
  long v = long_flag(name, value);
  if (v < 0) throw UsageError("--" + name + ": must be nonnegative: " + value);
  return static_cast<std::size_t>(v);
}

std::pair<long, long> range_flag(const std::string& name, const std::string& value) {
  auto dots = value.find("..");
  if (dots == std::string::npos) {
    long v = long_flag(name, value);
    return {v, v};
  }
  long lo = long_flag(name, value.substr(0, dots)), hi = long_flag(name, value.substr(dots + 2));
  if (lo > hi) throw UsageError("--" + name + ": empty range: " + value);
  return {lo, hi};
}

json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return chowkit::to_string(x);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct Outcome {
  std::string text;
  int code = kExitPass;
};

Outcome ring_piece(const Common& c, const std::string& file, const std::string& degree) {
  Presentation pres = load_presentation(file);
  auto report = algebra::graded_piece(pres, degree_flag("degree", degree));
  return {c.structured() ? format::to_json(report, c.detail()) : format::serialize(report, c.detail())};
}

Outcome ring_member(const Common& c, const std::string& file, const std::string& poly) {
  Presentation pres = load_presentation(file);
  auto p = load_polynomial(poly, pres);
  auto result = algebra::is_ideal_member(pres, p);
  std::vector<std::string> witness;
  for (const auto& w : result.witness) witness.push_back(format::format_witness(pres, w));
  Outcome o;
  o.code = result.member ? kExitPass : kExitCheckFailed;
  if (c.structured()) {
    json j;
    j["polynomial"] = algebra::to_string(p);
    j["member"] = result.member;
    j["witness_terms"] = witness.size();
    if (c.verbose) j["witness"] = witness;
    o.text = dump(j);
    return o;
  }
  o.text = "polynomial: " + algebra::to_string(p) + "\n";
  o.text += std::string("member: ") + (result.member ? "true" : "false") + "\n";
  if (result.member) {
    o.text += "witness_terms: " + std::to_string(witness.size()) + "\n";
    if (c.verbose)
      for (const auto& w : witness) o.text += "  " + w + "\n";
  }
  return o;
}

Outcome ring_order(const Common& c, const std::string& file, const std::string& poly) {
  Presentation pres = load_presentation(file);
  auto p = load_polynomial(poly, pres);
  auto order = algebra::element_order(pres, p);
  if (c.structured()) {
    json j;
    j["polynomial"] = algebra::to_string(p);
    j["order"] = order.is_finite() ? integer_json(order.value()) : json("infinite");
    return {dump(j)};
  }
  return {"polynomial: " + algebra::to_string(p) + "\norder: " + order.to_string() + "\n"};
}

algebra::RingMap load_map(const std::string& path, const Presentation& target) {
  std::string text = read_file(path);
  return parsing(path, [&] { return format::parse_ring_map(text, target); });
}

void require_source(const algebra::RingMap& m, const Presentation& src, const std::string& map_path) {
  if (!(m.source() == src.signature()))
    throw UsageError(map_path + ": source line does not match the source presentation");
}

Outcome map_check(const Common& c, const std::string& map_path, const std::string& source,
                  const std::string& target, const std::string& max_degree) {
  Presentation src = load_presentation(source), tgt = load_presentation(target);
  auto m = load_map(map_path, tgt);
  require_source(m, src, map_path);
  auto check = algebra::check_map_defined(m, src, degree_flag("max-degree", max_degree));
  Outcome o;
  o.code = check.defined ? kExitPass : kExitCheckFailed;
  std::vector<std::string> witness;
  if (c.verbose)
    for (std::size_t i = 0; i < check.certificates.size(); ++i)
      for (const auto& w : check.certificates[i].witness)
        witness.push_back("rel " + std::to_string(i) + ": " + format::format_witness(tgt, w));
  if (c.structured()) {
    json j;
    j["defined"] = check.defined;
    j["max_degree"] = check.max_degree;
    j["relations_checked"] = check.certificates.size();
    if (check.failed_relation) {
      j["failed_relation"] = *check.failed_relation;
      j["failed_image"] = algebra::to_string(*check.failed_image);
    }
    if (c.verbose) j["witness"] = witness;
    o.text = dump(j);
    return o;
  }
  o.text = std::string("defined: ") + (check.defined ? "true" : "false") + "\n";
  o.text += "max_degree: " + std::to_string(check.max_degree) + "\n";
  o.text += "relations_checked: " + std::to_string(check.certificates.size()) + "\n";
  if (check.failed_relation) {
    o.text += "failed_relation: " + std::to_string(*check.failed_relation) + "\n";
    o.text += "failed_image: " + algebra::to_string(*check.failed_image) + "\n";
  }
  for (const auto& w : witness) o.text += "  " + w + "\n";
  return o;
}

Outcome iso_check(const Common& c, const std::string& map_path, const std::string& inverse_path,
                  const std::string& source, const std::string& target, const std::string& max_degree) {
  Presentation a = load_presentation(source), b = load_presentation(target);
  auto f = load_map(map_path, b);
  auto f_inv = load_map(inverse_path, a);
  require_source(f, a, map_path);
  require_source(f_inv, b, inverse_path);
  auto iso = algebra::check_iso_up_to(f, f_inv, a, b, degree_flag("max-degree", max_degree));
  Outcome o;
  o.code = iso.isomorphic ? kExitPass : kExitCheckFailed;
  if (c.structured()) {
    json j;
    j["isomorphic"] = iso.isomorphic;
    if (!iso.isomorphic) j["failure"] = iso.failure;
    json degrees = json::array();
    for (const auto& d : iso.degrees)
      degrees.push_back({{"degree", d.degree}, {"source", d.group_a.to_string()}, {"target", d.group_b.to_string()}});
    j["degrees"] = degrees;
    o.text = dump(j);
    return o;
  }
  o.text = std::string("isomorphic: ") + (iso.isomorphic ? "true" : "false") + "\n";
  if (!iso.isomorphic) o.text += "failure: " + iso.failure + "\n";
  for (const auto& d : iso.degrees)
    o.text += "degree " + std::to_string(d.degree) + ": " + d.group_a.to_string() + " | " + d.group_b.to_string() + "\n";
  return o;
}

struct BuildFlags {
  std::string family, g, n, b, c, basis, which, weights;
};

Outcome corpus_build(const Common& common, const BuildFlags& f) {
  using namespace corpus;
  auto need = [&](const std::string& name, const std::string& v) {
    if (v.empty()) throw UsageError("--" + name + " is required for family " + f.family);
    return long_flag(name, v);
  };
  std::optional<Integer> b;
  if (!f.b.empty()) b = integer_flag("b", f.b);
  std::optional<long> c;
  if (!f.c.empty()) c = long_flag("c", f.c);
  std::vector<std::pair<std::string, std::string>> meta{{"family", f.family}};
  auto note = [&](const std::string& key, const std::string& v) {
    if (!v.empty()) meta.emplace_back(key, v);
  };

  std::optional<Presentation> pres;
  if (f.family == "Hg1") {
    long g = need("g", f.g);
    Hg1Basis basis = f.basis.empty() ? Hg1Basis::kL : parse_hg1_basis(f.basis);
    pres = build_chow_Hg1(g, basis);
    note("g", f.g);
    note("basis", to_string(basis));
  } else if (f.family == "Hg2far") {
    long g = need("g", f.g);
    Hg2FarBasis basis = f.basis.empty() ? Hg2FarBasis::kL : parse_hg2far_basis(f.basis);
    pres = build_chow_Hg2far(g, basis);
    note("g", f.g);
    note("basis", to_string(basis));
  } else if (f.family == "Hgn") {
    long g = need("g", f.g), n = need("n", f.n);
    pres = build_chow_Hgn(g, n, b, c);
    note("g", f.g);
    note("n", f.n);
    if (n >= 3) note("b", f.b);
    note("c", f.c);
  } else if (f.family == "Hgn-far") {
    long g = need("g", f.g), n = need("n", f.n);
    pres = build_chow_Hgn_far(g, n, c);
    note("g", f.g);
    note("n", f.n);
    note("c", f.c);
  } else if (f.family == "intermediate") {
    if (f.which.empty()) throw UsageError("--which is required for family intermediate");
    Intermediate which = parse_intermediate(f.which);
    long g = need("g", f.g);
    long n = f.n.empty() ? 2 : long_flag("n", f.n);
    pres = build_intermediate(g, n, which);
    note("g", f.g);
    note("n", f.n);
    note("which", to_string(which));
  } else if (f.family == "weighted") {
    if (f.weights.empty()) throw UsageError("--weights is required for family weighted");
    std::vector<Integer> weights;
    std::string item;
    std::istringstream ss(f.weights);
    while (std::getline(ss, item, ',')) weights.push_back(integer_flag("weights", item));
    pres = weighted_projective_chow(weights);
    note("weights", f.weights);
  } else {
    throw UsageError("--family: unknown family " + f.family);
  }

  format::PresentationDocument doc{*pres, meta};
  std::string text = format::serialize(doc);
  if (!common.structured()) return {text};
  json j;
  json m = json::object();
  for (const auto& [k, v] : meta) m[k] = v;
  j["metadata"] = m;
  j["vars"] = format::serialize(pres->signature());
  json rels = json::array();
  for (const auto& r : pres->relations()) rels.push_back(algebra::to_string(r));
  j["relations"] = rels;
  return {dump(j)};
}

struct VerifyFlags {
  std::string g, n, b, c, max_degree = "6";
};

Outcome corpus_verify(const Common& common, const VerifyFlags& f) {
  corpus::VerifyRanges r;
  std::tie(r.g_min, r.g_max) = range_flag("g", f.g);
  std::tie(r.n_min, r.n_max) = range_flag("n", f.n);
  r.max_degree = degree_flag("max-degree", f.max_degree);
  if (!f.b.empty()) r.b = integer_flag("b", f.b);
  if (!f.c.empty()) r.c = long_flag("c", f.c);
  auto report = corpus::verify_all(r);
  Outcome o;
  o.code = report.ok() ? kExitPass : kExitCheckFailed;
  o.text = common.structured() ? format::to_json(report, common.detail()) : format::serialize(report, common.detail());
  return o;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  sub->add_option("--out", c.out, "Write the report to this file");
  sub->add_flag("--verbose", c.verbose, "Include witnesses");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Chow ring computations over finitely presented graded rings", "chowkit"};
  app.require_subcommand(1);

  Common common;
  std::string file, poly, degree, map_path, inverse_path, source, target, max_degree = "6";
  BuildFlags build;
  VerifyFlags verify;

  auto* piece = app.add_subcommand("ring-piece", "Abelian group of one graded piece");
  piece->add_option("--file", file, "Presentation (.gpres)")->required();
  piece->add_option("--degree", degree, "Degree")->required();
  add_common(piece, common);

  auto* member = app.add_subcommand("ring-member", "Ideal membership of a polynomial");
  member->add_option("--file", file, "Presentation (.gpres)")->required();
  member->add_option("--poly", poly, "Homogeneous polynomial")->required();
  add_common(member, common);

  auto* order = app.add_subcommand("ring-order", "Additive order of a polynomial class");
  order->add_option("--file", file, "Presentation (.gpres)")->required();
  order->add_option("--poly", poly, "Homogeneous polynomial")->required();
  add_common(order, common);

  auto* mapc = app.add_subcommand("map-check", "Check that a map respects the source relations");
  mapc->add_option("--map", map_path, "Ring map (.gmap)")->required();
  mapc->add_option("--source", source, "Source presentation")->required();
  mapc->add_option("--target", target, "Target presentation")->required();
  mapc->add_option("--max-degree", max_degree, "Highest relation degree checked");
  add_common(mapc, common);

  auto* iso = app.add_subcommand("iso-check", "Check a pair of mutually inverse maps");
  iso->add_option("--map", map_path, "Map source -> target (.gmap)")->required();
  iso->add_option("--inverse", inverse_path, "Map target -> source (.gmap)")->required();
  iso->add_option("--source", source, "Source presentation")->required();
  iso->add_option("--target", target, "Target presentation")->required();
  iso->add_option("--max-degree", max_degree, "Degree bound");
  add_common(iso, common);

  auto* cbuild = app.add_subcommand("corpus-build", "Emit a corpus presentation as .gpres");
  cbuild->add_option("--family", build.family, "Hg1, Hg2far, Hgn, Hgn-far, intermediate or weighted")->required();
  cbuild->add_option("--g", build.g, "Genus");
  cbuild->add_option("--n", build.n, "Number of markings");
  cbuild->add_option("--b", build.b, "Hypothesis parameter b");
  cbuild->add_option("--c", build.c, "Hypothesis parameter c");
  cbuild->add_option("--basis", build.basis, "Generator basis");
  cbuild->add_option("--which", build.which, "Intermediate ring");
  cbuild->add_option("--weights", build.weights, "Comma-separated weights");
  add_common(cbuild, common);

  auto* cverify = app.add_subcommand("corpus-verify", "Verify the claim corpus over parameter ranges");
  cverify->add_option("--g", verify.g, "Genus, N or A..B")->required();
  cverify->add_option("--n", verify.n, "Markings, N or A..B")->required();
  cverify->add_option("--b", verify.b, "Fix b instead of running every admissible value");
  cverify->add_option("--c", verify.c, "Fix c instead of running every admissible value");
  cverify->add_option("--max-degree", verify.max_degree, "Degree bound");
  add_common(cverify, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Outcome o;
  try {
    if (piece->parsed()) {
      o = ring_piece(common, file, degree);
    } else if (member->parsed()) {
      o = ring_member(common, file, poly);
    } else if (order->parsed()) {
      o = ring_order(common, file, poly);
    } else if (mapc->parsed()) {
      o = map_check(common, map_path, source, target, max_degree);
    } else if (iso->parsed()) {
      o = iso_check(common, map_path, inverse_path, source, target, max_degree);
    } else if (cbuild->parsed()) {
      o = corpus_build(common, build);
    } else {
      o = corpus_verify(common, verify);
    }
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (common.out.empty()) {
    out << o.text;
  } else {
    std::ofstream f(common.out, std::ios::binary);
    if (!f || !(f << o.text)) {
      err << "error: cannot write " << common.out << "\n";
      return kExitUsage;
    }
  }
  return o.code;
}

}  // namespace chowkit::cli

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chowkit/cli/cli.hpp"

namespace fs = std::filesystem;
using chowkit::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CHOWKIT_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / ("chowkit_cli_" + name);
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("ring-piece of the g=2 l-basis ring in degree 1") {
  auto r = invoke({"ring-piece", "--file", data("hg1_l_g2.gpres"), "--degree", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "group: ℤ ⊕ ℤ/10\n"));
  auto j = invoke({"ring-piece", "--file", data("hg1_l_g2.gpres"), "--degree", "1", "--format", "structured"});
  CHECK(j.code == 0);
  CHECK(contains(j.out, "\"free_rank\": 1"));
}

TEST_CASE("ring-member on a defining relation") {
  auto r = invoke({"ring-member", "--file", data("hg1_l_g2.gpres"), "--poly", "l1*l2 + 2*l2^2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "member: true\n"));
  CHECK(contains(r.out, "witness_terms: 1\n"));
  auto v = invoke({"ring-member", "--file", data("hg1_l_g2.gpres"), "--poly", "l1*l2 + 2*l2^2", "--verbose"});
  CHECK(contains(v.out, "1 * (l1*l2 + 2*l2^2)"));
  auto no = invoke({"ring-member", "--file", data("hg1_l_g2.gpres"), "--poly", "l2^2"});
  CHECK(no.code == 1);
  CHECK(contains(no.out, "member: false\n"));
}

TEST_CASE("ring-order") {
  auto r = invoke({"ring-order", "--file", data("hg1_l_g2.gpres"), "--poly", "3*l1 + 2*l2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "order: 10\n"));
  auto inf = invoke({"ring-order", "--file", data("hg1_l_g2.gpres"), "--poly", "l1"});
  CHECK(contains(inf.out, "order: infinite\n"));
}

TEST_CASE("corpus-verify for g=2 n=3 b=15") {
  auto r = invoke({"corpus-verify", "--g", "2", "--n", "3", "--b", "15", "--max-degree", "5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Thm-Picard/degree1"));
  CHECK(contains(r.out, " 0 fail"));
  auto range = invoke({"corpus-verify", "--g", "2..2", "--n", "1..2", "--max-degree", "4"});
  CHECK(range.code == 0);
  CHECK(contains(range.out, "Cor-newbase/"));
}

TEST_CASE("map-check and iso-check") {
  auto iso = invoke({"iso-check", "--map", data("hg1_geometric_to_l_g2.gmap"), "--inverse",
                     data("hg1_l_to_geometric_g2.gmap"), "--source", data("hg1_geometric_g2.gpres"), "--target",
                     data("hg1_l_g2.gpres"), "--max-degree", "4"});
  CHECK(iso.code == 0);
  CHECK(contains(iso.out, "isomorphic: true\n"));
  CHECK(contains(iso.out, "degree 1: ℤ ⊕ ℤ/10 | ℤ ⊕ ℤ/10\n"));

  auto far = invoke({"map-check", "--map", data("hgn_to_far_g2_n3.gmap"), "--source", data("hgn_g2_n3_b15.gpres"),
                     "--target", data("hgn_far_g2_n3.gpres")});
  CHECK(far.code == 0);
  CHECK(contains(far.out, "defined: true\n"));

  auto wrong = scratch("wrong.gmap", "source: psi1:1 W1:1\ntarget: l1:1 l2:1\nimg: psi1 = l1\nimg: W1 = l2\n");
  auto bad = invoke({"map-check", "--map", wrong.string(), "--source", data("hg1_geometric_g2.gpres"), "--target",
                     data("hg1_l_g2.gpres")});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "defined: false\n"));
  CHECK(contains(bad.out, "failed_relation: 0\n"));
}

TEST_CASE("corpus-build round-trips through the ring commands") {
  auto b = invoke({"corpus-build", "--family", "Hg1", "--g", "2", "--basis", "l-basis"});
  REQUIRE(b.code == 0);
  std::ifstream in(data("hg1_l_g2.gpres"), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(b.out == ss.str());

  fs::path out = fs::temp_directory_path() / "chowkit_cli_w.gpres";
  auto w = invoke({"corpus-build", "--family", "weighted", "--weights", "2,3", "--out", out.string()});
  REQUIRE(w.code == 0);
  CHECK(w.out.empty());
  auto piece = invoke({"ring-piece", "--file", out.string(), "--degree", "2"});
  CHECK(contains(piece.out, "group: ℤ/6\n"));

  CHECK(invoke({"corpus-build", "--family", "Hgn", "--g", "2", "--n", "3", "--b", "7"}).code == 2);
  CHECK(invoke({"corpus-build", "--family", "Hgn", "--g", "2", "--n", "3"}).code == 2);
  CHECK(invoke({"corpus-build", "--family", "nope", "--g", "2"}).code == 2);
  CHECK(invoke({"corpus-build", "--family", "intermediate", "--g", "2", "--n", "5", "--which", "H-open-n"}).code == 0);
}

TEST_CASE("usage and input errors exit 2 with positioned diagnostics") {
  auto bad = scratch("bad.gpres", "vars: x:1\nrel: x^2 + y\n");
  auto r = invoke({"ring-piece", "--file", bad.string(), "--degree", "1"});
  CHECK(r.code == 2);
  CHECK(r.err == bad.string() + ":2:12: unknown variable: 'y' is not declared\n");

  auto p = invoke({"ring-member", "--file", data("hg1_l_g2.gpres"), "--poly", "l1 + $l2"});
  CHECK(p.code == 2);
  CHECK(contains(p.err, "--poly:1:6: lexical error"));
  auto h = invoke({"ring-member", "--file", data("hg1_l_g2.gpres"), "--poly", "l1 + l2^2"});
  CHECK(h.code == 2);
  CHECK(contains(h.err, "not homogeneous"));

  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"ring-piece", "--file", data("hg1_l_g2.gpres")}).code == 2);
  CHECK(invoke({"ring-piece", "--file", data("hg1_l_g2.gpres"), "--degree", "-1"}).code == 2);
  CHECK(invoke({"ring-piece", "--file", "/nonexistent.gpres", "--degree", "1"}).code == 2);
  CHECK(invoke({"ring-piece", "--file", data("hg1_l_g2.gpres"), "--degree", "1", "--format", "xml"}).code == 2);
  CHECK(invoke({"corpus-verify", "--g", "3..2", "--n", "1"}).code == 2);
  CHECK(invoke({"corpus-verify", "--g", "2", "--n", "3", "--b", "16"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("repeated invocations are byte-identical") {
  std::vector<std::string> args{"corpus-verify", "--g", "2", "--n", "2..4", "--max-degree", "4", "--format",
                                "structured", "--verbose"};
  auto a = invoke(args), b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "\"witness\""));
}

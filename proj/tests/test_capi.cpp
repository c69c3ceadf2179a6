#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "somborq.h"

using nlohmann::json;

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { sq_free(p); }
  std::string s() const { return p ? p : ""; }
};

struct G {
  sq_graph* g = nullptr;
  ~G() { sq_graph_free(g); }
};

}  // namespace

TEST_CASE("build a graph through the handle API") {
  G g;
  REQUIRE(sq_graph_create(4, &g.g) == SQ_OK);
  CHECK(sq_graph_order(g.g) == 4);
  CHECK(sq_graph_size(g.g) == 0);
  REQUIRE(sq_graph_add_edge(g.g, 0, 1) == SQ_OK);
  REQUIRE(sq_graph_add_edge(g.g, 1, 2) == SQ_OK);
  REQUIRE(sq_graph_add_edge(g.g, 2, 3) == SQ_OK);
  CHECK(sq_graph_size(g.g) == 3);

  int deg = -1;
  REQUIRE(sq_graph_degree(g.g, 1, &deg) == SQ_OK);
  CHECK(deg == 2);

  int present = 0;
  REQUIRE(sq_graph_has_edge(g.g, 0, 1, &present) == SQ_OK);
  CHECK(present == 1);

  int tree = 0;
  REQUIRE(sq_graph_is_tree(g.g, &tree) == SQ_OK);
  CHECK(tree == 1);

  // duplicate edge is an argument error with a message
  CHECK(sq_graph_add_edge(g.g, 0, 1) == SQ_ERR_ARGUMENT);
  CHECK(std::string(sq_last_error()).find("already present") != std::string::npos);

  int n_witness = 0;
  std::vector<int> apexes(4), degrees(4);
  REQUIRE(sq_graph_witnesses(g.g, apexes.data(), degrees.data(), 4, &n_witness) == SQ_OK);
  CHECK(n_witness == 2);  // only the endpoints of P4: interior removal disconnects
  CHECK(apexes[0] == 0);
  CHECK(apexes[1] == 3);
  CHECK(degrees[0] == 1);

  G clone;
  REQUIRE(sq_graph_clone(g.g, &clone.g) == SQ_OK);
  REQUIRE(sq_graph_delete_vertex(clone.g, 0) == SQ_OK);
  CHECK(sq_graph_order(clone.g) == 3);
  CHECK(sq_graph_order(g.g) == 4);
}

TEST_CASE("parse, format and index an edge list") {
  G g;
  REQUIRE(sq_graph_parse("5 4\n0 1\n0 2\n0 3\n0 4\n", &g.g) == SQ_OK);
  double so = 0;
  REQUIRE(sq_sombor(g.g, &so) == SQ_OK);
  CHECK(so == doctest::Approx(16.4924225025).epsilon(1e-9));

  Str text;
  REQUIRE(sq_graph_format(g.g, &text.p) == SQ_OK);
  CHECK(text.s() == "5 4\n0 1\n0 2\n0 3\n0 4\n");

  Str terms;
  REQUIRE(sq_sombor_terms(g.g, &terms.p) == SQ_OK);
  json t = json::parse(terms.s());
  REQUIRE(t.size() == 1);
  CHECK(t[0][0] == 1);
  CHECK(t[0][1] == 4);
  CHECK(t[0][2] == 4);

  G bad;
  CHECK(sq_graph_parse("3 2\n0 1\n1 0\n", &bad.g) == SQ_ERR_PARSE);
  CHECK(std::string(sq_last_error()).find("line 3") != std::string::npos);

  CHECK(sq_graph_read("definitely/missing.el", &bad.g) == SQ_ERR_IO);
}

TEST_CASE("family generation against the closed forms") {
  G g;
  int apex = -1, k = -1;
  REQUIRE(sq_gen_family("Q", 5, 2, &g.g, &apex, &k) == SQ_OK);
  CHECK(apex == 4);
  CHECK(k == 2);
  double so = 0, cf = 0;
  REQUIRE(sq_sombor(g.g, &so) == SQ_OK);
  REQUIRE(sq_formula("phi", 5, 2, &cf) == SQ_OK);
  CHECK(so == doctest::Approx(cf).epsilon(1e-12));

  G bad;
  CHECK(sq_gen_family("Qdprime", 8, 5, &bad.g, nullptr, nullptr) == SQ_ERR_ARGUMENT);
  CHECK(std::string(sq_last_error()).find("Qdprime") != std::string::npos);
  CHECK(sq_gen_family("Nope", 8, 5, &bad.g, nullptr, nullptr) == SQ_ERR_ARGUMENT);

  Str terms;
  REQUIRE(sq_formula_terms("phi", 6, 1, &terms.p) == SQ_OK);
  json t = json::parse(terms.s());
  CHECK(t.size() == 2);  // 4*sqrt(26) + 1*sqrt(26), as printed

  double fval = 0;
  REQUIRE(sq_formula("f", 23, 4, &fval) == SQ_OK);
  CHECK(fval == doctest::Approx(0.0092).epsilon(0.06));
  CHECK(sq_formula("phi", 2, 1, &fval) == SQ_ERR_ARGUMENT);
  CHECK(sq_formula("zeta", 5, 1, &fval) == SQ_ERR_ARGUMENT);
}

TEST_CASE("canonical bytes settle isomorphism across the API") {
  G a, b, c;
  REQUIRE(sq_graph_parse("3 2\n0 1\n1 2\n", &a.g) == SQ_OK);
  REQUIRE(sq_graph_parse("3 2\n0 1\n0 2\n", &b.g) == SQ_OK);
  REQUIRE(sq_graph_parse("3 3\n0 1\n0 2\n1 2\n", &c.g) == SQ_OK);

  unsigned char ba[64], bb[64], bc[64];
  size_t la = 0, lb = 0, lc = 0;
  REQUIRE(sq_graph_canonical(a.g, ba, sizeof(ba), &la) == SQ_OK);
  REQUIRE(sq_graph_canonical(b.g, bb, sizeof(bb), &lb) == SQ_OK);
  REQUIRE(sq_graph_canonical(c.g, bc, sizeof(bc), &lc) == SQ_OK);
  REQUIRE(la == lb);
  CHECK(std::memcmp(ba, bb, la) == 0);
  CHECK((lc != la || std::memcmp(ba, bc, la) != 0));

  size_t need = 0;
  REQUIRE(sq_graph_canonical(a.g, nullptr, 0, &need) == SQ_OK);  // size query
  CHECK(need == la);
  CHECK(sq_graph_canonical(a.g, ba, 1, &need) == SQ_ERR_ARGUMENT);

  G big;
  REQUIRE(sq_graph_create(17, &big.g) == SQ_OK);
  CHECK(sq_graph_canonical(big.g, ba, sizeof(ba), &la) == SQ_ERR_UNSUPPORTED);
}

TEST_CASE("two-tier comparison across the API") {
  G a, b;
  REQUIRE(sq_graph_parse("6 6\n0 1\n0 2\n0 3\n0 4\n0 5\n1 5\n", &a.g) == SQ_OK);
  REQUIRE(sq_graph_parse("6 6\n0 1\n0 2\n0 3\n0 4\n0 5\n3 5\n", &b.g) == SQ_OK);
  int ord = 5, esc = 5;
  double gap = 1;
  REQUIRE(sq_sombor_compare(a.g, b.g, &ord, &gap, &esc) == SQ_OK);
  CHECK(ord == 0);
  CHECK(esc == 0);
  CHECK(gap == 0.0);
}

TEST_CASE("rank JSON carries values, counts and family annotations") {
  Str payload;
  REQUIRE(sq_rank(6, 2, 3, 2, &payload.p) == SQ_OK);
  json doc = json::parse(payload.s());
  CHECK(doc["universe"] == "quasi-tree");
  CHECK(doc["universe_size"].get<long long>() == 1250);
  REQUIRE(doc["levels"].size() == 3);
  CHECK(doc["levels"][0]["representatives"][0]["family"] == "Q_{6,2}");
  CHECK(doc["levels"][1]["representatives"][0]["family"] == "Q'_{6,2}");
  CHECK(doc["levels"][2]["representatives"][0]["family"] == "Q*_{6,2}");
  CHECK(doc["levels"][0]["labeled_count"].get<long long>() == 60);

  Str bad;
  CHECK(sq_rank(12, 2, 3, 1, &bad.p) == SQ_ERR_UNSUPPORTED);
}

TEST_CASE("verify: single claim and options") {
  int passed = 0;
  Str payload;
  REQUIRE(sq_verify("constants", nullptr, &passed, &payload.p) == SQ_OK);
  CHECK(passed == 1);
  json doc = json::parse(payload.s());
  CHECK(doc["reports"][0]["claim"] == "constants");
  CHECK(doc["reports"][0]["status"] == "pass");

  Str payload2;
  REQUIRE(sq_verify("thm3.1", "{\"n_lo\":5,\"n_hi\":5,\"jobs\":2}", &passed, &payload2.p) ==
          SQ_OK);
  CHECK(passed == 1);

  CHECK(sq_verify("thm9.9", nullptr, &passed, &payload2.p) == SQ_ERR_ARGUMENT);
  CHECK(sq_verify("thm3.1", "{not json", &passed, &payload2.p) == SQ_ERR_ARGUMENT);

  Str claims;
  REQUIRE(sq_claims(&claims.p) == SQ_OK);
  CHECK(claims.s().find("thm3.1") != std::string::npos);
  CHECK(claims.s().find("all:") != std::string::npos);
}

TEST_CASE("null argument handling") {
  CHECK(sq_graph_create(3, nullptr) == SQ_ERR_ARGUMENT);
  CHECK(sq_graph_order(nullptr) == -1);
  CHECK(sq_sombor(nullptr, nullptr) == SQ_ERR_ARGUMENT);
  CHECK(std::string(sq_status_name(SQ_ERR_PARSE)) == "parse");
  CHECK(std::string(sq_version()) == "1.0.0");
}

#include "somborq.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "somborq/edgelist.hpp"
#include "somborq/families.hpp"
#include "somborq/formulas.hpp"
#include "somborq/graph.hpp"
#include "somborq/oracle.hpp"
#include "somborq/sombor.hpp"
#include "somborq/verify.hpp"

using nlohmann::json;

struct sq_graph {
  somborq::Graph g;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sq_status fail(sq_status code, const std::string& msg) {
  t_last_error = msg;
  return code;
}

// Run `fn`, translating exceptions to status codes. `io` marks calls whose
// runtime errors are file problems rather than internal ones.
template <typename Fn>
sq_status guarded(Fn&& fn, bool io = false) {
  try {
    fn();
    t_last_error.clear();
    return SQ_OK;
  } catch (const somborq::parse_error& e) {
    return fail(SQ_ERR_PARSE, e.what());
  } catch (const somborq::unsupported_size_error& e) {
    return fail(SQ_ERR_UNSUPPORTED, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SQ_ERR_ARGUMENT, e.what());
  } catch (const json::exception& e) {
    return fail(SQ_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SQ_ERR_INTERNAL, "out of memory");
  } catch (const std::runtime_error& e) {
    return fail(io ? SQ_ERR_IO : SQ_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(SQ_ERR_INTERNAL, e.what());
  }
}

sq_status need(bool ok, const char* what) {
  return ok ? SQ_OK : fail(SQ_ERR_ARGUMENT, what);
}

// Canonical forms of every named family member of order n, labelled; the
// task's own k first so rank annotations prefer Q_{n,k} over coincidences.
std::vector<std::pair<somborq::CanonicalForm, std::string>> family_forms(int n, int k_pref) {
  using namespace somborq;
  std::vector<std::pair<CanonicalForm, std::string>> out;
  auto push = [&](Family f, int k) {
    FamilySpec spec{f, n, k};
    if (!family_spec_valid(spec)) return;
    CanonicalForm form = canonical_form(construct(spec).graph);
    for (const auto& [existing, label] : out)
      if (existing == form) return;
    out.emplace_back(std::move(form), family_label(f, n, k));
  };
  for (Family f : {Family::Q, Family::Qprime, Family::Qstar, Family::Qdprime})
    push(f, k_pref);
  push(Family::S, 1);
  push(Family::Sprime, 1);
  push(Family::Sdprime, 1);
  for (int k = 1; k <= n - 1; ++k)
    for (Family f : {Family::Q, Family::Qprime, Family::Qstar, Family::Qdprime}) push(f, k);
  return out;
}

json rank_to_json(const somborq::RankResult& rr) {
  auto forms = family_forms(rr.n, rr.k > 0 ? rr.k : 1);
  json levels = json::array();
  for (const auto& e : rr.entries) {
    json reps = json::array();
    for (const auto& rep : e.reps) {
      json jr;
      jr["edges"] = somborq::format_edgelist(rep.graph);
      jr["automorphisms"] = rep.automorphisms;
      jr["hits"] = rep.hits;
      jr["family"] = nullptr;
      for (const auto& [form, label] : forms)
        if (form == rep.form) {
          jr["family"] = label;
          break;
        }
      reps.push_back(std::move(jr));
    }
    json terms = json::array();
    for (auto [d, c] : e.signature.parts) terms.push_back(json::array({d, c}));
    levels.push_back(json{{"level", e.level},
                          {"value", e.value},
                          {"value_str", e.value_str},
                          {"radicals", terms},
                          {"labeled_count", e.labeled_count},
                          {"hits", e.hits},
                          {"representatives", reps}});
  }
  return json{{"universe", rr.universe}, {"n", rr.n},   {"k", rr.k},
              {"top", rr.top},           {"universe_size", rr.universe_size},
              {"levels", levels}};
}

somborq::VerifyOptions options_from_json(const char* options_json) {
  somborq::VerifyOptions opt;
  if (!options_json || !*options_json) return opt;
  json j = json::parse(options_json);
  if (j.contains("n_lo")) opt.n_lo = j["n_lo"].get<int>();
  if (j.contains("n_hi")) opt.n_hi = j["n_hi"].get<int>();
  if (j.contains("nmax")) opt.nmax = j["nmax"].get<int>();
  if (j.contains("nmax2")) opt.nmax2 = j["nmax2"].get<int>();
  if (j.contains("samples")) opt.samples = j["samples"].get<long long>();
  if (j.contains("seed")) opt.seed = j["seed"].get<unsigned long long>();
  if (j.contains("jobs")) opt.jobs = j["jobs"].get<int>();
  return opt;
}

}  // namespace

extern "C" {

const char* sq_version(void) { return "1.0.0"; }

const char* sq_status_name(sq_status s) {
  switch (s) {
    case SQ_OK: return "ok";
    case SQ_ERR_ARGUMENT: return "argument";
    case SQ_ERR_PARSE: return "parse";
    case SQ_ERR_UNSUPPORTED: return "unsupported";
    case SQ_ERR_IO: return "io";
    case SQ_ERR_INTERNAL: return "internal";
  }
  return "?";
}

const char* sq_last_error(void) { return t_last_error.c_str(); }

void sq_free(char* p) { std::free(p); }

sq_status sq_graph_create(int n, sq_graph** out) {
  if (sq_status s = need(out != nullptr, "out is null")) return s;
  return guarded([&] { *out = new sq_graph{somborq::Graph(n)}; });
}

sq_status sq_graph_clone(const sq_graph* g, sq_graph** out) {
  if (sq_status s = need(g && out, "null argument")) return s;
  return guarded([&] { *out = new sq_graph{g->g}; });
}

void sq_graph_free(sq_graph* g) { delete g; }

int sq_graph_order(const sq_graph* g) { return g ? g->g.order() : -1; }

int sq_graph_size(const sq_graph* g) { return g ? g->g.size() : -1; }

sq_status sq_graph_degree(const sq_graph* g, int v, int* degree) {
  if (sq_status s = need(g && degree, "null argument")) return s;
  return guarded([&] { *degree = g->g.degree(v); });
}

sq_status sq_graph_has_edge(const sq_graph* g, int u, int v, int* present) {
  if (sq_status s = need(g && present, "null argument")) return s;
  return guarded([&] { *present = g->g.has_edge(u, v) ? 1 : 0; });
}

sq_status sq_graph_add_edge(sq_graph* g, int u, int v) {
  if (sq_status s = need(g != nullptr, "graph is null")) return s;
  return guarded([&] { g->g = g->g.add_edge(u, v); });
}

sq_status sq_graph_delete_edge(sq_graph* g, int u, int v) {
  if (sq_status s = need(g != nullptr, "graph is null")) return s;
  return guarded([&] { g->g = g->g.delete_edge(u, v); });
}

sq_status sq_graph_delete_vertex(sq_graph* g, int v) {
  if (sq_status s = need(g != nullptr, "graph is null")) return s;
  return guarded([&] { g->g = g->g.delete_vertex(v); });
}

sq_status sq_graph_is_tree(const sq_graph* g, int* out) {
  if (sq_status s = need(g && out, "null argument")) return s;
  return guarded([&] { *out = somborq::is_tree(g->g) ? 1 : 0; });
}

sq_status sq_graph_witnesses(const sq_graph* g, int* apexes, int* degrees, int cap,
                             int* count) {
  if (sq_status s = need(g && count, "null argument")) return s;
  return guarded([&] {
    auto ws = somborq::quasi_tree_witnesses(g->g);
    *count = static_cast<int>(ws.size());
    int fill = std::min(cap, *count);
    for (int i = 0; i < fill; ++i) {
      if (apexes) apexes[i] = ws[static_cast<std::size_t>(i)].apex;
      if (degrees) degrees[i] = ws[static_cast<std::size_t>(i)].k;
    }
  });
}

sq_status sq_graph_canonical(const sq_graph* g, unsigned char* buf, size_t cap, size_t* len) {
  if (sq_status s = need(g && len, "null argument")) return s;
  return guarded([&] {
    somborq::CanonicalForm form = somborq::canonical_form(g->g);
    *len = form.bytes.size();
    if (buf) {
      if (cap < form.bytes.size())
        throw std::invalid_argument("canonical buffer too small (need " +
                                    std::to_string(form.bytes.size()) + " bytes)");
      std::memcpy(buf, form.bytes.data(), form.bytes.size());
    }
  });
}

sq_status sq_graph_parse(const char* text, sq_graph** out) {
  if (sq_status s = need(text && out, "null argument")) return s;
  return guarded([&] { *out = new sq_graph{somborq::parse_edgelist(text)}; });
}

sq_status sq_graph_read(const char* path, sq_graph** out) {
  if (sq_status s = need(path && out, "null argument")) return s;
  return guarded([&] { *out = new sq_graph{somborq::read_edgelist(path)}; }, /*io=*/true);
}

sq_status sq_graph_format(const sq_graph* g, char** text) {
  if (sq_status s = need(g && text, "null argument")) return s;
  return guarded([&] { *text = dup_string(somborq::format_edgelist(g->g)); });
}

sq_status sq_graph_write(const sq_graph* g, const char* path) {
  if (sq_status s = need(g && path, "null argument")) return s;
  return guarded([&] { somborq::write_edgelist(g->g, path); }, /*io=*/true);
}

sq_status sq_sombor(const sq_graph* g, double* value) {
  if (sq_status s = need(g && value, "null argument")) return s;
  return guarded([&] { *value = somborq::sombor_value(g->g); });
}

sq_status sq_sombor_terms(const sq_graph* g, char** out) {
  if (sq_status s = need(g && out, "null argument")) return s;
  return guarded([&] {
    somborq::SomborValue v = somborq::sombor_index(g->g);
    json terms = json::array();
    for (const auto& t : v.terms) terms.push_back(json::array({t.a, t.b, t.count}));
    *out = dup_string(terms.dump());
  });
}

sq_status sq_sombor_compare(const sq_graph* a, const sq_graph* b, int* ordering, double* gap,
                            int* escalated) {
  if (sq_status s = need(a && b && ordering, "null argument")) return s;
  return guarded([&] {
    somborq::ComparisonOutcome c =
        somborq::compare(somborq::sombor_index(a->g), somborq::sombor_index(b->g));
    *ordering = c.ordering == somborq::Ordering::Less      ? -1
                : c.ordering == somborq::Ordering::Greater ? 1
                                                           : 0;
    if (gap) *gap = c.gap;
    if (escalated) *escalated = c.escalated ? 1 : 0;
  });
}

sq_status sq_gen_family(const char* family, int n, int k, sq_graph** out, int* apex,
                        int* apex_degree) {
  if (sq_status s = need(family && out, "null argument")) return s;
  return guarded([&] {
    somborq::FamilySpec spec{somborq::family_from_name(family), n, k};
    somborq::FamilyGraph fg = somborq::construct(spec);
    *out = new sq_graph{std::move(fg.graph)};
    if (apex) *apex = fg.witness.apex;
    if (apex_degree) *apex_degree = fg.witness.k;
  });
}

sq_status sq_formula(const char* name, int n, int k, double* value) {
  if (sq_status s = need(name && value, "null argument")) return s;
  return guarded([&] { *value = somborq::formula_by_name(name, n, k).value; });
}

sq_status sq_formula_terms(const char* name, int n, int k, char** out) {
  if (sq_status s = need(name && out, "null argument")) return s;
  return guarded([&] {
    somborq::ClosedFormValue v = somborq::formula_by_name(name, n, k);
    json terms = json::array();
    for (const auto& t : v.terms) terms.push_back(json::array({t.coeff, t.radicand}));
    *out = dup_string(terms.dump());
  });
}

sq_status sq_rank(int n, int k, int top, int jobs, char** out) {
  if (sq_status s = need(out != nullptr, "out is null")) return s;
  return guarded([&] {
    somborq::RankResult rr = somborq::enumerate_rank({n, k, top, jobs});
    *out = dup_string(rank_to_json(rr).dump(2));
  });
}

sq_status sq_verify(const char* claim, const char* options_json, int* passed,
                    char** report_json) {
  if (sq_status s = need(claim != nullptr, "claim is null")) return s;
  return guarded([&] {
    somborq::VerifyOptions opt = options_from_json(options_json);
    std::string invocation = std::string("verify ") + claim;
    somborq::ReportDocument doc;
    if (std::string(claim) == "all") {
      doc = somborq::run_battery(opt, invocation);
    } else {
      doc = somborq::make_report_document(invocation);
      doc.reports.push_back(somborq::verify_claim(claim, opt));
    }
    if (passed) *passed = doc.all_pass() ? 1 : 0;
    if (report_json) *report_json = dup_string(somborq::to_json(doc).dump(2));
  });
}

sq_status sq_claims(char** out) {
  if (sq_status s = need(out != nullptr, "out is null")) return s;
  return guarded([&] {
    std::string text;
    for (const auto& [id, desc] : somborq::known_claims()) text += id + ": " + desc + "\n";
    *out = dup_string(text);
  });
}

}  // extern "C"

// somborq command line front end. Everything goes through the shared
// library's C API (somborq.h); this file only parses arguments and formats
// output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "somborq.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { sq_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct OwnedGraph {
  sq_graph* g = nullptr;
  ~OwnedGraph() { sq_graph_free(g); }
};

int complain(sq_status s) {
  std::cerr << "error (" << sq_status_name(s) << "): " << sq_last_error() << "\n";
  return s == SQ_ERR_IO || s == SQ_ERR_INTERNAL ? kExitFail : kExitUsage;
}

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// "a..b" or "a"
bool parse_range(const std::string& text, int& lo, int& hi) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (...) {
    return false;
  }
  return lo <= hi;
}

int default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void print_terms(const std::string& terms_json, bool degree_pairs) {
  json terms = json::parse(terms_json);
  for (const auto& t : terms) {
    if (degree_pairs) {
      long long a = t[0], b = t[1], c = t[2];
      std::cout << "  " << c << " x sqrt(" << a << "^2 + " << b << "^2)   [degree pair " << a
                << "," << b << "]\n";
    } else {
      long long c = t[0], rad = t[1];
      std::cout << "  " << c << " x sqrt(" << rad << ")\n";
    }
  }
}

int cmd_so(const std::string& path, bool terms) {
  OwnedGraph g;
  if (sq_status s = sq_graph_read(path.c_str(), &g.g)) return complain(s);
  double value = 0.0;
  if (sq_status s = sq_sombor(g.g, &value)) return complain(s);
  std::cout << fmt12(value) << "\n";
  if (terms) {
    OwnedString t;
    if (sq_status s = sq_sombor_terms(g.g, &t.p)) return complain(s);
    print_terms(t.str(), true);
  }
  return kExitOk;
}

int cmd_gen(const std::string& family, int n, int k, const std::string& out_path) {
  OwnedGraph g;
  int apex = -1, apex_degree = -1;
  if (sq_status s = sq_gen_family(family.c_str(), n, k, &g.g, &apex, &apex_degree))
    return complain(s);
  OwnedString text;
  if (sq_status s = sq_graph_format(g.g, &text.p)) return complain(s);
  if (out_path.empty()) {
    std::cout << "# " << family << " n=" << n << " k=" << k << ", witness vertex " << apex
              << " with degree " << apex_degree << "\n"
              << text.str();
  } else {
    if (sq_status s = sq_graph_write(g.g, out_path.c_str())) return complain(s);
    std::cout << "wrote " << out_path << "; witness vertex " << apex << " with degree "
              << apex_degree << "\n";
  }
  return kExitOk;
}

int cmd_formula(const std::string& name, int n, int k, bool terms) {
  double value = 0.0;
  if (sq_status s = sq_formula(name.c_str(), n, k, &value)) return complain(s);
  std::cout << fmt12(value) << "\n";
  if (terms) {
    OwnedString t;
    if (sq_status s = sq_formula_terms(name.c_str(), n, k, &t.p)) return complain(s);
    print_terms(t.str(), false);
  }
  return kExitOk;
}

void write_json_file(const std::string& path, const std::string& payload) {
  std::ofstream f(path, std::ios::binary);
  f << payload << "\n";
  if (!f) throw std::runtime_error("cannot write " + path);
}

std::string one_line_edges(const std::string& edgelist) {
  // drop the header line, join edges as u-v pairs
  std::string out;
  std::size_t pos = edgelist.find('\n');
  while (pos != std::string::npos) {
    std::size_t next = edgelist.find('\n', pos + 1);
    std::string line = edgelist.substr(pos + 1, next == std::string::npos
                                                    ? std::string::npos
                                                    : next - pos - 1);
    if (!line.empty()) {
      std::size_t sp = line.find(' ');
      if (sp != std::string::npos) {
        if (!out.empty()) out += ' ';
        out += line.substr(0, sp) + "-" + line.substr(sp + 1);
      }
    }
    pos = next;
  }
  return out.empty() ? "(no edges)" : out;
}

int cmd_rank(int n, int k, int top, int jobs, const std::string& json_path) {
  OwnedString payload;
  if (sq_status s = sq_rank(n, k, top, jobs, &payload.p)) return complain(s);
  json doc = json::parse(payload.str());
  std::cout << "universe " << doc["universe"].get<std::string>() << " n=" << n << " k=" << k
            << "  (" << doc["universe_size"].get<unsigned long long>()
            << " labeled graphs streamed)\n";
  for (const auto& lvl : doc["levels"]) {
    std::cout << "level " << lvl["level"].get<int>() << "  SO = "
              << lvl["value_str"].get<std::string>() << "  labeled "
              << lvl["labeled_count"].get<long long>() << "\n";
    for (const auto& rep : lvl["representatives"]) {
      std::string family =
          rep["family"].is_null() ? "(unnamed class)" : rep["family"].get<std::string>();
      std::cout << "    " << family << ": " << one_line_edges(rep["edges"].get<std::string>())
                << "\n";
    }
  }
  if (!json_path.empty()) write_json_file(json_path, payload.str());
  return kExitOk;
}

int cmd_verify(const std::string& claim, const json& options, const std::string& json_path) {
  int passed = 0;
  OwnedString payload;
  std::string opts = options.dump();
  if (sq_status s = sq_verify(claim.c_str(), opts.c_str(), &passed, &payload.p)) {
    int code = complain(s);
    if (s == SQ_ERR_ARGUMENT) {
      OwnedString claims;
      if (sq_claims(&claims.p) == SQ_OK) std::cerr << "claims:\n" << claims.str();
    }
    return code;
  }
  json doc = json::parse(payload.str());
  for (const auto& r : doc["reports"]) {
    bool pass = r["status"].get<std::string>() == "pass";
    bool advisory = r["advisory"].get<bool>();
    std::cout << (advisory ? (pass ? "ADVISORY pass" : "ADVISORY fail")
                           : (pass ? "PASS" : "FAIL"))
              << "  " << r["claim"].get<std::string>() << " [" << r["params"].get<std::string>()
              << "]  " << r["checked"].get<long long>() << " checks, "
              << r["failures"].get<long long>() << " failures, "
              << r["runtime_ms"].get<long long>() << " ms\n";
    if (!pass) {
      for (const auto& d : r["details"]) {
        if (d["pass"].get<bool>()) continue;
        std::cout << "    n=" << d["n"].get<int>() << " k=" << d["k"].get<int>() << " "
                  << d["item"].get<std::string>() << ": expected "
                  << d["expected"].get<std::string>() << ", observed "
                  << d["observed"].get<std::string>();
        std::string note = d["note"].get<std::string>();
        if (!note.empty()) std::cout << " (" << note << ")";
        std::cout << "\n";
      }
    }
  }
  if (!json_path.empty()) write_json_file(json_path, payload.str());
  int advisory_findings = 0;
  for (const auto& r : doc["reports"])
    if (r["advisory"].get<bool>() && r["status"].get<std::string>() != "pass")
      ++advisory_findings;
  if (passed && advisory_findings > 0)
    std::cout << "all binding claims pass (" << advisory_findings
              << " advisory finding(s) reported above)\n";
  else
    std::cout << (passed ? "all claims pass" : "some claims FAILED") << "\n";
  return passed ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sombor index toolkit for quasi-tree graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sq_version()));

  // so
  auto* so = app.add_subcommand("so", "Sombor index of an edge-list file");
  std::string so_file;
  bool so_terms = false;
  so->add_option("file", so_file, "edge-list file")->required();
  so->add_flag("--terms", so_terms, "also print the degree-pair terms");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named family member");
  std::string gen_family, gen_out;
  int gen_n = 0, gen_k = 1;
  gen->add_option("family", gen_family, "S|Sprime|Sdprime|Q|Qstar|Qprime|Qdprime")->required();
  gen->add_option("--n", gen_n, "order")->required();
  gen->add_option("--k", gen_k, "apex degree (ignored for S families)");
  gen->add_option("--out", gen_out, "output path (default: stdout)");

  // formula
  auto* formula = app.add_subcommand("formula", "evaluate a closed form");
  std::string f_name;
  int f_n = 0, f_k = 1;
  bool f_terms = false;
  formula->add_option("name", f_name, "phi|phi_prime|phi_star|phi_dprime|f")->required();
  formula->add_option("--n", f_n, "order")->required();
  formula->add_option("--k", f_k, "apex degree");
  formula->add_flag("--terms", f_terms, "also print the (coeff, radicand) terms");

  // rank
  auto* rank = app.add_subcommand("rank", "exhaustively rank Q(n,k) by Sombor index");
  int r_n = 0, r_k = 0, r_top = 3, r_jobs = 0;
  std::string r_json;
  rank->add_option("--n", r_n, "order (<= 10)")->required();
  rank->add_option("--k", r_k, "apex degree")->required();
  rank->add_option("--top", r_top, "levels to retain (default 3)");
  rank->add_option("--jobs", r_jobs, "worker threads (default: hardware)");
  rank->add_option("--json", r_json, "write the machine-readable report here");

  // verify
  auto* verify = app.add_subcommand("verify", "check a claim or the whole battery");
  std::string v_claim, v_n_range, v_json;
  int v_nmax = 0, v_nmax2 = 0, v_jobs = 0;
  long long v_samples = 0;
  unsigned long long v_seed = 0;
  bool v_list = false;
  verify->add_option("claim", v_claim, "claim id or \"all\"");
  verify->add_option("--n", v_n_range, "order range a..b for enumeration claims");
  verify->add_option("--nmax", v_nmax, "upper bound for formula sweeps");
  verify->add_option("--nmax2", v_nmax2, "secondary sweep bound (prop3.1 part ii)");
  verify->add_option("--samples", v_samples, "randomized contract sample count");
  verify->add_option("--seed", v_seed, "randomized contract seed");
  verify->add_option("--jobs", v_jobs, "worker threads (default: hardware)");
  verify->add_option("--json", v_json, "write the report document here");
  verify->add_flag("--list", v_list, "list claim ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (so->parsed()) return cmd_so(so_file, so_terms);
    if (gen->parsed()) return cmd_gen(gen_family, gen_n, gen_k, gen_out);
    if (formula->parsed()) return cmd_formula(f_name, f_n, f_k, f_terms);
    if (rank->parsed())
      return cmd_rank(r_n, r_k, r_top, r_jobs > 0 ? r_jobs : default_jobs(), r_json);
    if (verify->parsed()) {
      if (v_list) {
        OwnedString claims;
        if (sq_status s = sq_claims(&claims.p)) return complain(s);
        std::cout << claims.str();
        return kExitOk;
      }
      if (v_claim.empty()) {
        std::cerr << "error: verify needs a claim id (or --list)\n";
        return kExitUsage;
      }
      json options = json::object();
      if (!v_n_range.empty()) {
        int lo = 0, hi = 0;
        if (!parse_range(v_n_range, lo, hi)) {
          std::cerr << "error: bad range \"" << v_n_range << "\" (use a or a..b)\n";
          return kExitUsage;
        }
        options["n_lo"] = lo;
        options["n_hi"] = hi;
      }
      if (v_nmax > 0) options["nmax"] = v_nmax;
      if (v_nmax2 > 0) options["nmax2"] = v_nmax2;
      if (v_samples > 0) options["samples"] = v_samples;
      if (v_seed > 0) options["seed"] = v_seed;
      options["jobs"] = v_jobs > 0 ? v_jobs : default_jobs();
      return cmd_verify(v_claim, options, v_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

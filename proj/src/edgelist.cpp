#include "somborq/edgelist.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace somborq {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool parse_two_ints(const std::string& line, long& a, long& b) {
  std::istringstream in(line);
  if (!(in >> a >> b)) return false;
  std::string rest;
  if (in >> rest) return false;  // trailing junk
  return true;
}

}  // namespace

Graph parse_edgelist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    if (!parse_two_ints(line, n, m)) throw parse_error("expected header \"n m\"", lineno);
    break;
  }
  if (n < 0 || m < 0) throw parse_error("missing header \"n m\"", lineno);
  if (n > 1000000 || m > 2000000) throw parse_error("header out of supported range", lineno);

  Graph g(static_cast<int>(n));
  long seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    long u, v;
    if (!parse_two_ints(line, u, v)) throw parse_error("expected edge \"u v\"", lineno);
    if (seen == m) throw parse_error("more than m edge lines", lineno);
    if (u < 0 || v >= n) throw parse_error("vertex out of range [0,n)", lineno);
    if (u >= v) throw parse_error("edges must satisfy u < v", lineno);
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw parse_error("duplicate edge", lineno);
    g = g.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  if (seen != m)
    throw parse_error("header promised " + std::to_string(m) + " edges, found " +
                          std::to_string(seen),
                      lineno);
  return g;
}

Graph read_edgelist(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_edgelist(buf.str());
}

std::string format_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

void write_edgelist(const Graph& g, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << format_edgelist(g);
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace somborq

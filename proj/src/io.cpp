#include "latticemill/io.hpp"

#include <fstream>
#include <sstream>

#include "latticemill/errors.hpp"

namespace latticemill {

namespace {

// Strips comments and blank lines; returns the remaining payload lines.
std::vector<std::string> payload_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) lines.push_back(line);
  }
  return lines;
}

int parse_header(const std::string& line, char expect) {
  std::istringstream ss(line);
  std::string key;
  long long count = -1;
  if (!(ss >> key >> count) || key.size() != 1 || key[0] != expect || count < 0)
    throw ParseError("expected header '" + std::string(1, expect) + " <count>', got: " + line);
  std::string extra;
  if (ss >> extra) throw ParseError("trailing tokens after header: " + line);
  if (count > kMaxGround)
    throw ParseError("count " + std::to_string(count) + " exceeds the supported maximum");
  return static_cast<int>(count);
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

} // namespace

Poset parse_poset(std::istream& in) {
  std::vector<std::string> lines = payload_lines(in);
  if (lines.empty()) throw ParseError("empty poset file");
  int p = parse_header(lines[0], 'p');

  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ss(lines[i]);
    long long a = 0, b = 0;
    std::string rel;
    if (!(ss >> a >> rel >> b) || rel != "<")
      throw ParseError("expected cover line 'a < b', got: " + lines[i]);
    std::string extra;
    if (ss >> extra) throw ParseError("trailing tokens after cover: " + lines[i]);
    if (a < 1 || a > p || b < 1 || b > p)
      throw IndexError("cover element out of range in: " + lines[i]);
    covers.emplace_back(static_cast<int>(a) - 1, static_cast<int>(b) - 1);
  }
  return Poset::from_cover_relations(p, covers);
}

Poset parse_poset_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_poset(in);
}

void write_poset(std::ostream& out, const Poset& P) {
  out << "p " << P.size() << "\n";
  for (auto [a, b] : P.cover_relations()) out << a + 1 << " < " << b + 1 << "\n";
}

SimplicialComplex parse_complex(std::istream& in) {
  std::vector<std::string> lines = payload_lines(in);
  if (lines.empty()) throw ParseError("empty complex file");
  int n = parse_header(lines[0], 'n');

  std::vector<Bits> facets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ss(lines[i]);
    Bits f = 0;
    long long v = 0;
    while (ss >> v) {
      if (v < 1 || v > n) throw IndexError("vertex out of range in: " + lines[i]);
      f |= bit(static_cast<int>(v) - 1);
    }
    if (!ss.eof()) throw ParseError("expected vertex list, got: " + lines[i]);
    facets.push_back(f);
  }
  return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex parse_complex_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_complex(in);
}

void write_complex(std::ostream& out, const SimplicialComplex& c) {
  out << "n " << c.ground_size() << "\n";
  for (Bits f : c.facets()) {
    if (f == 0) continue; // the complex {∅} has no facet lines
    bool first = true;
    for_each_bit(f, [&](int v) {
      out << (first ? "" : " ") << v + 1;
      first = false;
    });
    out << "\n";
  }
}

SimpleGraph parse_graph(std::istream& in) {
  std::vector<std::string> lines = payload_lines(in);
  if (lines.empty()) throw ParseError("empty graph file");
  int n = parse_header(lines[0], 'n');

  SimpleGraph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ss(lines[i]);
    long long u = 0, v = 0;
    if (!(ss >> u >> v)) throw ParseError("expected edge line 'u v', got: " + lines[i]);
    std::string extra;
    if (ss >> extra) throw ParseError("trailing tokens after edge: " + lines[i]);
    if (u < 1 || u > n || v < 1 || v > n)
      throw IndexError("edge endpoint out of range in: " + lines[i]);
    g.add_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
  }
  return g;
}

void write_graph(std::ostream& out, const SimpleGraph& G) {
  out << "n " << G.size() << "\n";
  for (auto [u, v] : G.edges()) out << u + 1 << " " << v + 1 << "\n";
}

std::string lattice_canonical_text(const DistributiveLattice& L) {
  std::ostringstream out;
  for (OrderIdeal x : L.elems) out << x << "\n";
  return out.str();
}

Json report_to_json(const VerificationReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json row;
    row["index"] = r.index;
    row["lhs"] = r.lhs.str();
    row["rhs"] = r.rhs.str();
    rows.push_back(std::move(row));
  }
  Json j;
  j["identity"] = rep.identity;
  j["instance"] = rep.instance;
  j["rows"] = std::move(rows);
  j["pass"] = rep.pass;
  return j;
}

std::string report_to_text(const VerificationReport& rep) {
  std::ostringstream out;
  out << rep.identity << " @ " << rep.instance << "\n";
  for (const auto& r : rep.rows)
    out << "  [" << r.index << "] " << r.lhs.str() << (r.lhs == r.rhs ? " == " : " != ")
        << r.rhs.str() << "\n";
  if (!rep.note.empty()) out << "  note: " << rep.note << "\n";
  out << (rep.pass ? "  => PASS" : "  => FAIL") << "\n";
  return out.str();
}

} // namespace latticemill

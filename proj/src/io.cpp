#include "digspec/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace digspec {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Strips comments, yields (line_number, content) for significant lines.
std::vector<std::pair<int, std::string>> significant_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    out.emplace_back(lineno, line.substr(first, last - first + 1));
  }
  return out;
}

Digraph parse_digraph_json(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, origin + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
    fail(Errc::ParseError, origin + ": expected {\"n\": int, \"arcs\": [[u,v],...]}");
  int n = j.at("n").get<int>();
  std::vector<Arc> arcs;
  for (const auto& a : j.at("arcs")) {
    if (!a.is_array() || a.size() != 2) fail(Errc::ParseError, origin + ": arc entries must be pairs");
    arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  return Digraph::from_arc_list(n, arcs);
}

}  // namespace

Digraph parse_digraph_text(const std::string& text, const std::string& origin) {
  auto first_sig = text.find_first_not_of(" \t\r\n");
  if (first_sig != std::string::npos && text[first_sig] == '{') return parse_digraph_json(text, origin);

  auto lines = significant_lines(text);
  if (lines.empty()) fail(Errc::ParseError, origin + ": empty digraph file");
  int n = 0;
  {
    std::istringstream ss(lines[0].second);
    std::string extra;
    if (!(ss >> n) || (ss >> extra))
      fail(Errc::ParseError, origin + ":" + std::to_string(lines[0].first) + ": expected the vertex count");
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ss(lines[i].second);
    int u, v;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra))
      fail(Errc::ParseError, origin + ":" + std::to_string(lines[i].first) + ": expected 'u v'");
    arcs.emplace_back(u, v);
  }
  try {
    return Digraph::from_arc_list(n, arcs);
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidArgument || e.code() == Errc::LoopArc || e.code() == Errc::IndexOutOfRange ||
        e.code() == Errc::DuplicateArc)
      fail(Errc::ParseError, origin + ": " + e.what());
    throw;
  }
}

Digraph read_digraph_file(const std::string& path) { return parse_digraph_text(slurp(path), path); }

std::string digraph_to_text(const Digraph& g, const std::string& header_comment) {
  std::ostringstream out;
  if (!header_comment.empty()) {
    std::istringstream hc(header_comment);
    std::string line;
    while (std::getline(hc, line)) out << "# " << line << "\n";
  }
  out << g.order() << "\n";
  for (const auto& [u, v] : g.arcs()) out << u << " " << v << "\n";
  return out.str();
}

void write_digraph_file(const std::string& path, const Digraph& g, const std::string& header_comment) {
  std::ofstream out(path);
  if (!out) fail(Errc::ParseError, "cannot write '" + path + "'");
  out << digraph_to_text(g, header_comment);
}

Matrix parse_matrix_text(const std::string& text, const std::string& origin) {
  auto lines = significant_lines(text);
  if (lines.empty()) fail(Errc::ParseError, origin + ": empty matrix file");
  int rows = 0, cols = 0;
  {
    std::istringstream ss(lines[0].second);
    std::string extra;
    if (!(ss >> rows >> cols) || (ss >> extra) || rows < 1 || cols < 1)
      fail(Errc::ParseError, origin + ":" + std::to_string(lines[0].first) + ": expected 'rows cols'");
  }
  Matrix m(rows, cols);
  std::size_t idx = 0;
  const std::size_t want = static_cast<std::size_t>(rows) * cols;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ss(lines[i].second);
    double x;
    while (ss >> x) {
      if (idx >= want)
        fail(Errc::ParseError, origin + ":" + std::to_string(lines[i].first) + ": too many entries");
      m.data()[idx++] = x;
    }
    if (!ss.eof())
      fail(Errc::ParseError, origin + ":" + std::to_string(lines[i].first) + ": bad number");
  }
  if (idx != want)
    fail(Errc::ParseError,
         origin + ": expected " + std::to_string(want) + " entries, found " + std::to_string(idx));
  return m;
}

Matrix read_matrix_file(const std::string& path) { return parse_matrix_text(slurp(path), path); }

std::string spectrum_to_json(const Spectrum& s, int indent) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& it : s.items) {
    nlohmann::ordered_json e;
    e["re"] = it.value.real();
    e["im"] = it.value.imag();
    e["mult"] = it.multiplicity;
    arr.push_back(std::move(e));
  }
  return arr.dump(indent);
}

std::string spectrum_to_csv(const Spectrum& s) {
  std::ostringstream out;
  out << "re,im,mult\n";
  out.precision(17);
  for (const auto& it : s.items) out << it.value.real() << "," << it.value.imag() << "," << it.multiplicity << "\n";
  return out.str();
}

}  // namespace digspec

#include "commgraph/cayley_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "commgraph/errors.hpp"

namespace commgraph {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

FiniteGroup ingest_cayley(std::istream& in, const std::string& default_label, const BuildOptions& opts) {
  std::string label = default_label;
  std::vector<std::string> lines;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::size_t> linenos;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = trim(t.substr(1));
      if (body.rfind("name:", 0) == 0) label = trim(body.substr(5));
      continue;
    }
    lines.push_back(t);
    linenos.push_back(lineno);
  }
  if (lines.empty()) throw ParseError("empty Cayley file");

  auto parse_row = [&](std::size_t idx) {
    std::istringstream ss(lines[idx]);
    std::vector<long long> vals;
    std::string tok;
    while (ss >> tok) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        vals.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(linenos[idx]) + ": not an integer: \"" + tok + "\"");
      }
    }
    return vals;
  };

  const auto header = parse_row(0);
  if (header.size() != 1 || header[0] < 1) throw ParseError("line " + std::to_string(linenos[0]) + ": expected a positive order");
  const auto n64 = static_cast<std::uint64_t>(header[0]);
  if (n64 > opts.order_cap)
    throw OrderCapExceeded("table order " + std::to_string(n64) + " above the cap " + std::to_string(opts.order_cap));
  const auto n = static_cast<std::uint32_t>(n64);
  if (lines.size() != std::size_t{n} + 1)
    throw ParseError("expected " + std::to_string(n) + " table rows, found " + std::to_string(lines.size() - 1));

  std::vector<Element> raw(std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto row = parse_row(i + 1);
    if (row.size() != n)
      throw ParseError("line " + std::to_string(linenos[i + 1]) + ": expected " + std::to_string(n) + " entries");
    for (std::uint32_t j = 0; j < n; ++j) {
      if (row[j] < 0 || row[j] >= static_cast<long long>(n))
        throw GroupAxiomError("range", "entry " + std::to_string(row[j]) + " at row " + std::to_string(i) + " outside [0, n)");
      raw[std::size_t{i} * n + j] = static_cast<Element>(row[j]);
    }
  }

  // Locate the identity and move it to index 0; other elements keep their order.
  std::uint32_t e = n;
  for (std::uint32_t i = 0; i < n && e == n; ++i) {
    bool ok = true;
    for (std::uint32_t j = 0; j < n && ok; ++j)
      ok = raw[std::size_t{i} * n + j] == j && raw[std::size_t{j} * n + i] == j;
    if (ok) e = i;
  }
  if (e == n) throw GroupAxiomError("identity", "no two-sided identity element");
  std::vector<std::uint32_t> to_new(n), to_old(n);
  to_old[0] = e;
  for (std::uint32_t i = 0, k = 1; i < n; ++i)
    if (i != e) to_old[k++] = i;
  for (std::uint32_t k = 0; k < n; ++k) to_new[to_old[k]] = k;
  std::vector<Element> table(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      table[std::size_t{a} * n + b] = to_new[raw[std::size_t{to_old[a]} * n + to_old[b]]];

  validate_group(n, table);
  return FiniteGroup(n, std::move(table), label);
}

FiniteGroup ingest_cayley_file(const std::filesystem::path& path, const BuildOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return ingest_cayley(in, path.stem().string(), opts);
}

void write_cayley(std::ostream& out, const FiniteGroup& g) {
  out << g.order() << '\n';
  for (Element i = 0; i < g.order(); ++i) {
    for (Element j = 0; j < g.order(); ++j) out << (j ? " " : "") << g.mul(i, j);
    out << '\n';
  }
  if (!g.label().empty()) out << "# name: " << g.label() << '\n';
}

}  // namespace commgraph

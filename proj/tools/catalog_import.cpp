// Builds JSON-lines fixtures from LaTeX align rows of the form
//   \sum_{k=1}^\infty \frac{H_k}{(2k+1)^2(3k+1)} &= \frac{1}{2}\left( ... \right) \\
// and from tab-separated rows "id  lhs  source  rhs-latex  expected-digits"
// ("-" for an absent field). Output goes to stdout.
//
//   catalog_import --latex rows.tex --group single > part.jsonl
//   catalog_import --tsv extra.tsv >> part.jsonl

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eulersum/catalog.hpp"
#include "eulersum/latex.hpp"

using namespace eulersum;

namespace {

const std::string kRowStart = "\\sum_{k=1}^\\infty \\frac{H_k}{";

// "(2k+1)^{2}(3k+1)" -> "(2*k+1)^2*(3*k+1)"
std::string to_rfparse(const std::string& den) {
  std::string out;
  for (char ch : den) {
    if (ch == '{' || ch == '}' || ch == ' ') continue;
    if (!out.empty()) {
      const char prev = out.back();
      const bool prev_closes = prev == ')' || std::isdigit(static_cast<unsigned char>(prev)) || prev == 'k';
      if ((ch == 'k' && std::isdigit(static_cast<unsigned char>(prev))) || (ch == '(' && prev_closes)) out += '*';
    }
    out += ch;
  }
  return out;
}

std::string compact(const std::string& den) {
  std::string out;
  for (char ch : den)
    if (ch != '{' && ch != '}' && ch != ' ') out += ch;
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void emit(const Fixture& f) { std::cout << fixture_to_json(f).dump() << '\n'; }

int import_latex(const std::string& path, const std::string& group) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << '\n';
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  size_t pos = 0;
  int count = 0;
  while ((pos = text.find(kRowStart, pos)) != std::string::npos) {
    size_t p = pos + kRowStart.size();
    int depth = 1;
    const size_t den_begin = p;
    while (p < text.size() && depth > 0) {
      if (text[p] == '{') ++depth;
      if (text[p] == '}') --depth;
      ++p;
    }
    const std::string den = text.substr(den_begin, p - 1 - den_begin);
    const size_t eq = text.find("&=", p);
    size_t end = text.find(kRowStart, p);
    const size_t align_end = text.find("\\end{align}", p);
    if (align_end < end) end = align_end;
    if (eq == std::string::npos || eq > end) {
      std::cerr << "row without '&=' near offset " << pos << '\n';
      return 1;
    }
    std::string rhs = trim(text.substr(eq + 2, end - eq - 2));
    if (rhs.size() >= 2 && rhs.compare(rhs.size() - 2, 2, "\\\\") == 0) rhs = trim(rhs.substr(0, rhs.size() - 2));

    Fixture f;
    f.id = group + "/" + compact(den);
    f.source = f.id;
    f.lhs = "1/(" + to_rfparse(den) + ")";
    try {
      f.rhs = parse_latex(rhs);
    } catch (const std::exception& e) {
      std::cerr << f.id << ": " << e.what() << '\n';
      return 1;
    }
    emit(fixture_from_json(fixture_to_json(f)));
    ++count;
    pos = end;
  }
  std::cerr << count << " rows imported into group " << group << '\n';
  return 0;
}

int import_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << '\n';
    return 1;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, '\t');) cols.push_back(trim(c));
    if (cols.size() != 5) {
      std::cerr << "expected 5 tab-separated columns: " << line << '\n';
      return 1;
    }
    Fixture f;
    f.id = cols[0];
    f.lhs = cols[1];
    f.source = cols[2];
    try {
      if (cols[3] != "-") f.rhs = parse_latex(cols[3]);
    } catch (const std::exception& e) {
      std::cerr << f.id << ": " << e.what() << '\n';
      return 1;
    }
    if (cols[4] != "-") f.expected_digits = cols[4];
    emit(fixture_from_json(fixture_to_json(f)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convert LaTeX or TSV formula listings into catalog fixtures", "catalog_import"};
  std::string latex, tsv, group = "catalog";
  app.add_option("--latex", latex, "LaTeX file with align rows");
  app.add_option("--group", group, "id prefix for LaTeX rows");
  app.add_option("--tsv", tsv, "tab-separated fixture rows");
  CLI11_PARSE(app, argc, argv);
  try {
    if (!latex.empty()) {
      if (int rc = import_latex(latex, group)) return rc;
    }
    if (!tsv.empty()) return import_tsv(tsv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

#include "unram/cli/group_file.hpp"

#include <fstream>
#include <sstream>

#include "unram/errors.hpp"

namespace unram::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw InputError("group file line " + std::to_string(line) + ": " + msg);
}

std::vector<exactla::Int> parse_row(const std::string& s, std::size_t line) {
  std::vector<exactla::Int> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    const std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (start == tok.size() || tok.find_first_not_of("0123456789", start) != std::string::npos)
      fail(line, "expected an integer, got '" + tok + "'");
    out.emplace_back(tok[0] == '+' ? tok.substr(1) : tok);
  }
  return out;
}

}  // namespace

GroupFile parse_group_file(const std::string& text) {
  GroupFile f;
  bool have_dim = false;
  std::vector<std::vector<exactla::Int>> rows;
  std::size_t gen_line = 0;

  auto finish_generator = [&](std::size_t line) {
    if (!gen_line) return;
    if (rows.size() != f.dimension)
      fail(line, "generator at line " + std::to_string(gen_line) + " has " + std::to_string(rows.size()) +
                     " rows, expected " + std::to_string(f.dimension));
    IntMatrix m(f.dimension, f.dimension);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < f.dimension; ++j) m(i, j) = rows[i][j];
    f.generators.push_back(std::move(m));
    rows.clear();
    gen_line = 0;
  };

  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
      if (!gen_line) fail(line, "matrix row outside a generator block");
      auto row = parse_row(s, line);
      if (row.size() != f.dimension)
        fail(line, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(f.dimension));
      if (rows.size() == f.dimension) fail(line, "too many rows in generator");
      rows.push_back(std::move(row));
      continue;
    }
    const std::string key = trim(s.substr(0, colon)), value = trim(s.substr(colon + 1));
    finish_generator(line);
    if (key == "name") {
      if (!f.name.empty()) fail(line, "duplicate name");
      if (value.empty() || value.find_first_of(" \t") != std::string::npos)
        fail(line, "name must be a single non-empty token");
      f.name = value;
    } else if (key == "note") {
      f.notes.push_back(value);
    } else if (key == "dimension") {
      if (have_dim) fail(line, "duplicate dimension");
      auto v = parse_row(value, line);
      if (v.size() != 1 || v[0] < 1 || v[0] > 4096) fail(line, "dimension must be one integer in 1..4096");
      f.dimension = v[0].get_ui();
      have_dim = true;
    } else if (key == "generator") {
      if (!have_dim) fail(line, "generator before dimension");
      if (!value.empty()) fail(line, "unexpected text after 'generator:'");
      gen_line = line;
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }
  finish_generator(line + 1);
  if (!have_dim) throw InputError("group file: missing dimension");
  return f;
}

GroupFile read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str());
}

std::string emit_group_file(const GroupFile& f) {
  std::ostringstream out;
  if (!f.name.empty()) out << "name: " << f.name << '\n';
  for (const auto& n : f.notes) out << (n.empty() ? "note:" : "note: " + n) << '\n';
  out << "dimension: " << f.dimension << '\n';
  for (const auto& g : f.generators) {
    out << "generator:\n";
    for (std::size_t i = 0; i < g.rows(); ++i) {
      out << ' ';
      for (std::size_t j = 0; j < g.cols(); ++j) out << ' ' << g(i, j);
      out << '\n';
    }
  }
  return out.str();
}

GroupFile group_file_of(const group::MatGroup& g, const std::string& name) {
  GroupFile f;
  f.name = name;
  f.dimension = g.dim();
  f.generators = g.generators();
  return f;
}

group::MatGroup close_group_file(const GroupFile& f) {
  return group::MatGroup::close(f.dimension, f.generators);
}

}  // namespace unram::cli

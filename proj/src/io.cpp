#include "addcomb/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "addcomb/errors.hpp"

namespace addcomb {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return in;
}

}  // namespace

FiniteRealSet read_set(std::istream& in) {
  std::vector<Rational> elems;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    try {
      elems.push_back(parse_rational(body));
    } catch (const ParseError&) {
      throw;
    } catch (const InvalidInput& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return FiniteRealSet(std::move(elems));
}

FiniteRealSet read_set_file(const std::string& path) {
  auto in = open_in(path);
  try {
    return read_set(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail() + " in " + path);
  }
}

void write_set(std::ostream& out, const FiniteRealSet& a, const std::string& comment) {
  std::istringstream lines(comment);
  for (std::string l; std::getline(lines, l);) out << "# " << l << '\n';
  for (const auto& x : a) out << to_string(x) << '\n';
}

void write_set_file(const std::string& path, const FiniteRealSet& a, const std::string& comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  write_set(out, a, comment);
}

void write_rep_csv(std::ostream& out, const RepFunction& r) {
  out << "value,count\n";
  for (const auto& [x, c] : r.counts) out << to_string(x) << ',' << to_string(c) << '\n';
}

void write_conv_csv(std::ostream& out, const std::vector<ConvolutionPoint>& table) {
  const std::size_t arity = table.empty() ? 1 : table.front().shifts.size();
  for (std::size_t i = 1; i <= arity; ++i) out << "shift" << i << ',';
  out << "count\n";
  for (const auto& p : table) {
    for (const auto& s : p.shifts) out << to_string(s) << ',';
    out << to_string(p.value) << '\n';
  }
}

std::string file_digest(const std::string& path) {
  auto in = open_in(path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[4096];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string read_text_file(const std::string& path) {
  auto in = open_in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

}  // namespace addcomb

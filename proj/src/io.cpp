#include "cspoly/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cspoly/errors.hpp"

#ifndef CSPOLY_SOURCE_DIR
#define CSPOLY_SOURCE_DIR "."
#endif

namespace cspoly {

namespace {

// Yields (line number, tokens) for every non-blank, non-comment line.
class TokenLines {
 public:
  explicit TokenLines(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream s(line);
      tokens.clear();
      std::string tok;
      while (s >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }
  std::size_t line() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& msg) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + msg);
}

long parse_count(const std::string& tok, const std::string& source, std::size_t line) {
  char* end = nullptr;
  long v = std::strtol(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end != '\0' || v < 0) fail(source, line, "expected a non-negative integer, got '" + tok + "'");
  return v;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  return out;
}

}  // namespace

PointConfiguration read_points(std::istream& in, const std::string& source) {
  TokenLines lines(in);
  std::vector<std::string> tok;
  if (!lines.next(tok)) fail(source, lines.line(), "missing header 'd n'");
  if (tok.size() != 2) fail(source, lines.line(), "header must be 'd n'");
  const long d = parse_count(tok[0], source, lines.line());
  const long n = parse_count(tok[1], source, lines.line());
  if (d == 0) fail(source, lines.line(), "dimension must be positive");
  PointConfiguration config;
  config.dim = static_cast<std::size_t>(d);
  while (lines.next(tok)) {
    if (static_cast<long>(config.points.size()) == n) fail(source, lines.line(), "more than " + std::to_string(n) + " points");
    if (static_cast<long>(tok.size()) != d)
      fail(source, lines.line(), "expected " + std::to_string(d) + " coordinates, got " + std::to_string(tok.size()));
    RatVector p;
    for (const auto& t : tok) {
      try {
        p.push_back(parse_rational(t));
      } catch (const ParseError& e) {
        fail(source, lines.line(), e.what());
      }
    }
    config.points.push_back(std::move(p));
  }
  if (static_cast<long>(config.points.size()) != n)
    fail(source, lines.line(), "expected " + std::to_string(n) + " points, got " + std::to_string(config.points.size()));
  if (auto pairing = config.detect_pairing()) config.pairing = *pairing;
  return config;
}

PointConfiguration load_points(const std::string& path) {
  auto in = open_in(path);
  return read_points(in, path);
}

void write_points(std::ostream& out, const PointConfiguration& config) {
  out << config.dim << ' ' << config.size() << '\n';
  for (const auto& p : config.points) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << to_string(p[i]);
    out << '\n';
  }
}

void save_points(const std::string& path, const PointConfiguration& config) {
  auto out = open_out(path);
  write_points(out, config);
}

void save_float_points(const std::string& path, const FloatPoints& points) {
  auto out = open_out(path);
  const std::size_t d = points.empty() ? 0 : points.front().size();
  out << d << ' ' << points.size() << '\n';
  char buf[32];
  for (const auto& p : points) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", p[i]);
      out << (i ? " " : "") << buf;
    }
    out << '\n';
  }
}

FloatPoints load_float_points(const std::string& path) {
  PointConfiguration config = load_points(path);
  FloatPoints out;
  for (const auto& p : config.points) {
    std::vector<double> q;
    for (const auto& x : p) q.push_back(x.get_d());
    out.push_back(std::move(q));
  }
  return out;
}

SimplicialComplex read_facets(std::istream& in, const std::string& source, bool allow_nonpure) {
  TokenLines lines(in);
  std::vector<std::string> tok;
  std::vector<Face> facets;
  long max_vertex = -1;
  std::size_t first_size = 0, first_line = 0;
  while (lines.next(tok)) {
    Face f;
    for (const auto& t : tok) {
      long v = parse_count(t, source, lines.line());
      f.push_back(static_cast<int>(v));
      max_vertex = std::max(max_vertex, v);
    }
    if (facets.empty()) {
      first_size = f.size();
      first_line = lines.line();
    } else if (f.size() != first_size && !allow_nonpure) {
      fail(source, lines.line(),
           "non-pure complex: facet of size " + std::to_string(f.size()) + " but line " + std::to_string(first_line) +
               " has size " + std::to_string(first_size));
    }
    facets.push_back(std::move(f));
  }
  try {
    return SimplicialComplex(static_cast<std::size_t>(max_vertex + 1), std::move(facets));
  } catch (const PreconditionError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

SimplicialComplex load_facets(const std::string& path, bool allow_nonpure) {
  auto in = open_in(path);
  return read_facets(in, path, allow_nonpure);
}

void write_facets(std::ostream& out, const SimplicialComplex& c) {
  for (const auto& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
}

void save_facets(const std::string& path, const SimplicialComplex& c) {
  auto out = open_out(path);
  write_facets(out, c);
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::string points_checksum(const PointConfiguration& config) {
  std::ostringstream s;
  write_points(s, config);
  return hex64(fnv1a64(s.str()));
}

std::string facets_checksum(const SimplicialComplex& c) {
  std::ostringstream s;
  write_facets(s, c);
  return hex64(fnv1a64(s.str()));
}

std::optional<std::string> find_reference_facets() {
  if (const char* env = std::getenv("CSPOLY_REFERENCE_FACETS"); env && *env) {
    if (std::filesystem::is_regular_file(env)) return std::string(env);
    return std::nullopt;
  }
  std::filesystem::path p = std::filesystem::path(CSPOLY_SOURCE_DIR) / "data" / "reference_rp5_24.txt";
  if (std::filesystem::is_regular_file(p)) return p.string();
  return std::nullopt;
}

}  // namespace cspoly

#pragma once

#include <cstddef>
#include <string>

namespace growthlab::cli {

enum class GroupKind {
  Zn,
  Cyclic,
  Free,
  Lamplighter,
  Heisenberg,
  BaumslagSolitar,
  Grigorchuk,
  Matrix,
};

/// Parsed group description. Grammar (exact):
///   spec := kind (":" args)?
///   "z:" d | "cyclic:" N | "free:" k | "lamplighter:" m | "heisenberg"
///   | "bs:" p "," q | "grigorchuk:" prefix "(" period ")*" | "matrix:" path
/// prefix/period are strings over {0,1,2}; the matrix file is JSON
/// {"generators": [[row-major exact rationals as strings], ...]}.
struct GroupSpec {
  GroupKind kind = GroupKind::Free;
  long n = 0;  // z: dimension, cyclic: order, free: rank, lamplighter: m, bs: p
  long q = 0;  // bs: q
  std::string omega_prefix;
  std::string omega_period;
  std::string path;   // matrix kind
  std::string label;  // original text, for reports

  bool operator==(const GroupSpec& o) const {
    return kind == o.kind && n == o.n && q == o.q &&
           omega_prefix == o.omega_prefix && omega_period == o.omega_period &&
           path == o.path;
  }
};

/// Throws ParseError (with position) on syntax errors and SemanticError on
/// invalid parameters (m < 2, omega alphabet outside {0,1,2}, ...).
GroupSpec parse_spec(const std::string& text);

/// Canonical text form; parse_spec(render_spec(s)) == s.
std::string render_spec(const GroupSpec& spec);

/// Run-wide configuration shared by all commands.
struct RunConfig {
  std::size_t element_cap = 8'000'000;
  int workers = 1;
  int precision = 12;  // emitted fractional digits
  enum class Format { Csv, Json, Dot } format = Format::Csv;
  std::string out_path;  // empty: stdout

  void validate() const;
};

}  // namespace growthlab::cli

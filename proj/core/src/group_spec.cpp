#include "growthlab/group_spec.hpp"

#include "growthlab/errors.hpp"

#include <cctype>
#include <sstream>

namespace growthlab::cli {

namespace {

long parse_positive_long(const std::string& text, std::size_t at,
                         const char* what) {
  if (text.empty()) throw ParseError(std::string("missing ") + what, at);
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("invalid ") + what + ": " + text, at);
    }
  }
  try {
    return std::stol(text);
  } catch (const std::exception&) {
    throw ParseError(std::string("out-of-range ") + what + ": " + text, at);
  }
}

}  // namespace

GroupSpec parse_spec(const std::string& text) {
  GroupSpec spec;
  spec.label = text;

  const std::size_t colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? std::string() : text.substr(colon + 1);
  const std::size_t args_at = colon == std::string::npos ? 0 : colon + 1;

  auto require_args = [&](bool want) {
    if (want && colon == std::string::npos) {
      throw ParseError("spec kind '" + kind + "' requires arguments",
                       text.size());
    }
    if (!want && colon != std::string::npos) {
      throw ParseError("spec kind '" + kind + "' takes no arguments", colon);
    }
  };

  if (kind == "z") {
    require_args(true);
    spec.kind = GroupKind::Zn;
    spec.n = parse_positive_long(args, args_at, "dimension");
    if (spec.n < 1) throw SemanticError("z: dimension must be >= 1");
    if (spec.n > 16) throw SemanticError("z: dimension capped at 16");
  } else if (kind == "cyclic") {
    require_args(true);
    spec.kind = GroupKind::Cyclic;
    spec.n = parse_positive_long(args, args_at, "order");
    if (spec.n < 1) throw SemanticError("cyclic: order must be >= 1");
    if (spec.n > 4096) throw SemanticError("cyclic: order capped at 4096");
  } else if (kind == "free") {
    require_args(true);
    spec.kind = GroupKind::Free;
    spec.n = parse_positive_long(args, args_at, "rank");
    if (spec.n < 1) throw SemanticError("free: rank must be >= 1");
    if (spec.n > 16) throw SemanticError("free: rank capped at 16");
  } else if (kind == "lamplighter") {
    require_args(true);
    spec.kind = GroupKind::Lamplighter;
    spec.n = parse_positive_long(args, args_at, "modulus");
    if (spec.n < 2) throw SemanticError("lamplighter: modulus must be >= 2");
    if (spec.n > 1'000'000) {
      throw SemanticError("lamplighter: modulus capped at 1000000");
    }
  } else if (kind == "heisenberg") {
    require_args(false);
    spec.kind = GroupKind::Heisenberg;
  } else if (kind == "bs") {
    require_args(true);
    spec.kind = GroupKind::BaumslagSolitar;
    const std::size_t comma = args.find(',');
    if (comma == std::string::npos) {
      throw ParseError("bs: expected \"p,q\"", args_at);
    }
    spec.n = parse_positive_long(args.substr(0, comma), args_at, "p");
    spec.q =
        parse_positive_long(args.substr(comma + 1), args_at + comma + 1, "q");
    if (spec.n < 1 || spec.q < 1) {
      throw SemanticError("bs: p and q must be >= 1");
    }
  } else if (kind == "grigorchuk") {
    require_args(true);
    spec.kind = GroupKind::Grigorchuk;
    const std::size_t open = args.find('(');
    if (open == std::string::npos) {
      throw ParseError("grigorchuk: expected \"prefix(period)*\"", args_at);
    }
    const std::size_t close = args.find(')', open);
    if (close == std::string::npos || close + 1 >= args.size() + 1 ||
        args.substr(close + 1) != "*") {
      throw ParseError("grigorchuk: expected \"(period)*\" tail",
                       args_at + open);
    }
    spec.omega_prefix = args.substr(0, open);
    spec.omega_period = args.substr(open + 1, close - open - 1);
    if (spec.omega_period.empty()) {
      throw ParseError("grigorchuk: empty period", args_at + open + 1);
    }
    for (const std::string* part : {&spec.omega_prefix, &spec.omega_period}) {
      for (char c : *part) {
        if (c < '0' || c > '2') {
          throw SemanticError("grigorchuk: omega alphabet is {0,1,2}");
        }
      }
    }
  } else if (kind == "matrix") {
    require_args(true);
    spec.kind = GroupKind::Matrix;
    if (args.empty()) throw ParseError("matrix: empty path", args_at);
    spec.path = args;
  } else {
    throw ParseError("unknown group kind: '" + kind + "'", 0);
  }
  return spec;
}

std::string render_spec(const GroupSpec& spec) {
  std::ostringstream out;
  switch (spec.kind) {
    case GroupKind::Zn: out << "z:" << spec.n; break;
    case GroupKind::Cyclic: out << "cyclic:" << spec.n; break;
    case GroupKind::Free: out << "free:" << spec.n; break;
    case GroupKind::Lamplighter: out << "lamplighter:" << spec.n; break;
    case GroupKind::Heisenberg: out << "heisenberg"; break;
    case GroupKind::BaumslagSolitar:
      out << "bs:" << spec.n << ',' << spec.q;
      break;
    case GroupKind::Grigorchuk:
      out << "grigorchuk:" << spec.omega_prefix << '(' << spec.omega_period
          << ")*";
      break;
    case GroupKind::Matrix: out << "matrix:" << spec.path; break;
  }
  return out.str();
}

void RunConfig::validate() const {
  if (element_cap == 0) throw SemanticError("element cap must be positive");
  if (workers < 1 || workers > 64) {
    throw SemanticError("workers must be in 1..64");
  }
  if (precision < 12) throw SemanticError("precision must be >= 12");
}

}  // namespace growthlab::cli

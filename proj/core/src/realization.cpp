#include "growthlab/realization.hpp"

#include "growthlab/errors.hpp"
#include "growthlab/numeric.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace growthlab::groups {

namespace {

using cli::GroupKind;

std::vector<std::string> default_names(std::size_t count) {
  static const char* kFirst[] = {"x", "y", "z"};
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i < 3) {
      names.emplace_back(kFirst[i]);
    } else {
      names.push_back("g" + std::to_string(i + 1));
    }
  }
  return names;
}

RealizationPtr build(GroupKind kind, std::vector<std::string> names,
                     std::vector<Payload> payloads, int lamp_modulus = 0,
                     OmegaSequence omega = {}) {
  auto r = std::make_shared<GroupRealization>();
  r->kind = kind;
  r->generator_count = static_cast<int>(payloads.size());
  r->generator_names = std::move(names);
  r->generator_payloads = std::move(payloads);
  r->lamp_modulus = lamp_modulus;
  r->omega = std::move(omega);
  if (r->generator_count == 0) {
    throw SemanticError("realization needs at least one generator");
  }
  return r;
}

RealizationPtr make_zn(long d) {
  // Z^d as (d+1)x(d+1) unitriangular translation matrices.
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  std::vector<Payload> gens;
  for (long i = 0; i < d; ++i) {
    RatMatrix m = RatMatrix::identity(n);
    m.at(static_cast<std::size_t>(i), n - 1) = 1;
    gens.emplace_back(std::move(m));
  }
  return build(GroupKind::Zn, default_names(static_cast<std::size_t>(d)),
               std::move(gens));
}

RealizationPtr make_cyclic(long order) {
  // Z/N as the N-cycle permutation matrix; N = 1 gives the trivial group.
  const std::size_t n = static_cast<std::size_t>(order);
  std::vector<Rat> entries(n * n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    entries[((j + 1) % n) * n + j] = 1;
  }
  std::vector<Payload> gens;
  gens.emplace_back(RatMatrix(n, std::move(entries)));
  return build(GroupKind::Cyclic, {"g"}, std::move(gens));
}

RealizationPtr make_free(long rank) {
  std::vector<Payload> gens;
  for (long i = 0; i < rank; ++i) {
    gens.emplace_back(single_letter(static_cast<std::int32_t>(i)));
  }
  return build(GroupKind::Free, default_names(static_cast<std::size_t>(rank)),
               std::move(gens));
}

RealizationPtr make_lamplighter(long m) {
  std::vector<Payload> gens;
  gens.emplace_back(wreath_lamp(0, 1, static_cast<int>(m)));
  gens.emplace_back(wreath_shift(1));
  return build(GroupKind::Lamplighter, {"a", "t"}, std::move(gens),
               static_cast<int>(m));
}

RealizationPtr make_heisenberg() {
  RatMatrix x = RatMatrix::identity(3);
  x.at(0, 1) = 1;
  RatMatrix y = RatMatrix::identity(3);
  y.at(1, 2) = 1;
  std::vector<Payload> gens;
  gens.emplace_back(std::move(x));
  gens.emplace_back(std::move(y));
  return build(GroupKind::Heisenberg, {"x", "y"}, std::move(gens));
}

RealizationPtr make_bs(long p, long q) {
  // Affine realization: a is the unit translation, t scales by q/p. For
  // p = 1 this is the faithful upper-triangular model of BS(1,q); bs:1,2 is
  // the canonical metabelian non-polycyclic case.
  RatMatrix a = RatMatrix::identity(2);
  a.at(0, 1) = 1;
  RatMatrix t = RatMatrix::identity(2);
  t.at(0, 0) = Rat(Int(q), Int(p));
  std::vector<Payload> gens;
  gens.emplace_back(std::move(a));
  gens.emplace_back(std::move(t));
  return build(GroupKind::BaumslagSolitar, {"a", "t"}, std::move(gens));
}

RealizationPtr make_grigorchuk(const std::string& prefix,
                               const std::string& period) {
  OmegaSequence omega(prefix, period);
  std::vector<Payload> gens;
  for (std::uint8_t letter : {kGrigA, kGrigB, kGrigC, kGrigD}) {
    gens.emplace_back(GrigWord{letter});
  }
  // d = bc is redundant but retained so the marked alphabet is uniform
  // across the family.
  return build(GroupKind::Grigorchuk, {"a", "b", "c", "d"}, std::move(gens), 0,
               std::move(omega));
}

RealizationPtr make_matrix_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SemanticError("cannot open matrix file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ParseError("matrix file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("generators") ||
      !doc["generators"].is_array() || doc["generators"].empty()) {
    throw ParseError("matrix file needs a nonempty \"generators\" array");
  }
  std::vector<RatMatrix> mats;
  for (const auto& g : doc["generators"]) {
    if (!g.is_array() || g.empty()) {
      throw ParseError("each generator must be a nonempty array of strings");
    }
    std::size_t dim = 0;
    while (dim * dim < g.size()) ++dim;
    if (dim * dim != g.size()) {
      throw SemanticError("generator entry count is not a perfect square");
    }
    std::vector<Rat> entries;
    entries.reserve(g.size());
    for (const auto& e : g) {
      if (!e.is_string()) {
        throw ParseError("matrix entries must be exact-rational strings");
      }
      entries.push_back(parse_rational(e.get<std::string>()));
    }
    mats.emplace_back(dim, std::move(entries));
  }
  return make_matrix_realization(std::move(mats));
}

const GroupRealization& same_realization(const Element& x, const Element& y) {
  if (!x.realization() || !y.realization() ||
      x.realization().get() != y.realization().get()) {
    throw SemanticError("elements belong to different realizations");
  }
  return *x.realization();
}

}  // namespace

RealizationPtr make_matrix_realization(std::vector<RatMatrix> generators) {
  if (generators.empty()) {
    throw SemanticError("matrix realization needs at least one generator");
  }
  const std::size_t dim = generators.front().dim();
  std::vector<Payload> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].dim() != dim) {
      throw SemanticError("matrix generators have mixed dimensions");
    }
    generators[i].inverse();  // invertibility check; throws if singular
    names.push_back("g" + std::to_string(i + 1));
    gens.emplace_back(std::move(generators[i]));
  }
  return build(cli::GroupKind::Matrix, std::move(names), std::move(gens));
}

RealizationPtr make_realization(const cli::GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::Zn: return make_zn(spec.n);
    case GroupKind::Cyclic: return make_cyclic(spec.n);
    case GroupKind::Free: return make_free(spec.n);
    case GroupKind::Lamplighter: return make_lamplighter(spec.n);
    case GroupKind::Heisenberg: return make_heisenberg();
    case GroupKind::BaumslagSolitar: return make_bs(spec.n, spec.q);
    case GroupKind::Grigorchuk:
      return make_grigorchuk(spec.omega_prefix, spec.omega_period);
    case GroupKind::Matrix: return make_matrix_from_file(spec.path);
  }
  throw SemanticError("unknown group kind");
}

Element identity_element(const RealizationPtr& r) {
  if (!r) throw SemanticError("null realization");
  switch (r->kind) {
    case GroupKind::Lamplighter: return Element(r, wreath_identity());
    case GroupKind::Free: return Element(r, Word{});
    case GroupKind::Grigorchuk: return Element(r, GrigWord{});
    default: {
      const auto& m = std::get<RatMatrix>(r->generator_payloads.front());
      return Element(r, RatMatrix::identity(m.dim()));
    }
  }
}

Element generator_element(const RealizationPtr& r, int index) {
  if (!r) throw SemanticError("null realization");
  if (index < 0 || index >= r->generator_count) {
    throw SemanticError("generator index out of range");
  }
  return Element(r, r->generator_payloads[static_cast<std::size_t>(index)]);
}

Element multiply(const Element& x, const Element& y) {
  const GroupRealization& r = same_realization(x, y);
  switch (r.kind) {
    case GroupKind::Lamplighter:
      return Element(x.realization(),
                     wreath_multiply(std::get<WreathElement>(x.payload()),
                                     std::get<WreathElement>(y.payload()),
                                     r.lamp_modulus));
    case GroupKind::Free:
      return Element(x.realization(),
                     free_reduce(concat(std::get<Word>(x.payload()),
                                        std::get<Word>(y.payload()))));
    case GroupKind::Grigorchuk: {
      const auto& a = std::get<GrigWord>(x.payload());
      const auto& b = std::get<GrigWord>(y.payload());
      GrigWord prod = a;
      prod.insert(prod.end(), b.begin(), b.end());
      return Element(x.realization(), grig_reduce(prod));
    }
    default:
      return Element(x.realization(), std::get<RatMatrix>(x.payload()) *
                                          std::get<RatMatrix>(y.payload()));
  }
}

Element invert(const Element& x) {
  if (!x.realization()) throw SemanticError("null realization");
  const GroupRealization& r = *x.realization();
  switch (r.kind) {
    case GroupKind::Lamplighter:
      return Element(x.realization(),
                     wreath_inverse(std::get<WreathElement>(x.payload()),
                                    r.lamp_modulus));
    case GroupKind::Free:
      return Element(x.realization(), inverse(std::get<Word>(x.payload())));
    case GroupKind::Grigorchuk: {
      // All four letters are involutions: the inverse is the reversed word.
      const auto& w = std::get<GrigWord>(x.payload());
      return Element(x.realization(), GrigWord(w.rbegin(), w.rend()));
    }
    default:
      return Element(x.realization(),
                     std::get<RatMatrix>(x.payload()).inverse());
  }
}

bool equal(const Element& x, const Element& y) {
  const GroupRealization& r = same_realization(x, y);
  if (r.kind == GroupKind::Grigorchuk) {
    const auto& a = std::get<GrigWord>(x.payload());
    const auto& b = std::get<GrigWord>(y.payload());
    GrigWord prod = a;
    prod.insert(prod.end(), b.rbegin(), b.rend());
    return grig_trivial(prod, r.omega);
  }
  return x.payload() == y.payload();
}

bool is_identity(const Element& x) {
  if (!x.realization()) throw SemanticError("null realization");
  return equal(x, identity_element(x.realization()));
}

std::string canonical_key(const Element& x) {
  if (!x.realization()) throw SemanticError("null realization");
  const GroupRealization& r = *x.realization();
  switch (r.kind) {
    case GroupKind::Lamplighter:
      return wreath_canonical_key(std::get<WreathElement>(x.payload()));
    case GroupKind::Free:
      return encode_word(std::get<Word>(x.payload()));
    case GroupKind::Grigorchuk: {
      const std::uint64_t bits =
          grig_portrait(std::get<GrigWord>(x.payload()), r.omega, 0,
                        GroupRealization::kPortraitDepth);
      std::string key(8, '\0');
      for (int i = 0; i < 8; ++i) {
        key[static_cast<std::size_t>(i)] =
            static_cast<char>((bits >> (8 * i)) & 0xff);
      }
      return key;
    }
    default:
      return std::get<RatMatrix>(x.payload()).canonical_key();
  }
}

std::string key_tiebreak(const Element& x) {
  if (!x.realization()) throw SemanticError("null realization");
  if (x.realization()->injective_keys()) return {};
  const auto& w = std::get<GrigWord>(x.payload());
  return std::string(w.begin(), w.end());
}

Element evaluate_word(const RealizationPtr& r, const Word& w) {
  Element acc = identity_element(r);
  for (const Letter& l : w.letters) {
    Element g = generator_element(r, l.symbol);
    if (l.sign < 0) g = invert(g);
    acc = multiply(acc, g);
  }
  return acc;
}

std::vector<Element> neighbor_alphabet(const RealizationPtr& r) {
  std::vector<Element> out;
  for (int i = 0; i < r->generator_count; ++i) {
    const Element g = generator_element(r, i);
    const Element gi = invert(g);
    auto known = [&](const Element& e) {
      for (const Element& k : out) {
        if (equal(k, e)) return true;
      }
      return false;
    };
    if (!known(g)) out.push_back(g);
    if (!known(gi)) out.push_back(gi);
  }
  return out;
}

}  // namespace growthlab::groups

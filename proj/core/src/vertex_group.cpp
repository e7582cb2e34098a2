#include "graphprod/vertex_group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>

#include "graphprod/errors.hpp"

namespace graphprod {

namespace {

constexpr std::string_view kFreeAlphabet = "xyzuvw";

const char* kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::InfiniteCyclic: return "infinite-cyclic";
    case GroupKind::FreeAbelian: return "free-abelian";
    case GroupKind::FiniteCyclic: return "finite-cyclic";
    case GroupKind::Free: return "free";
  }
  return "?";
}

[[noreturn]] void mismatch(const GroupSpec& spec, const char* what) {
  throw InputError(std::string("element payload does not match ") + kind_name(spec.kind) +
                   " group " + spec.tag() + ": " + what);
}

std::int64_t parse_int(std::string_view text, std::string_view context) {
  std::int64_t value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("expected an integer in '" + std::string(context) + "'");
  }
  return value;
}

std::int64_t residue(std::int64_t value, int order) {
  std::int64_t r = value % order;
  return r < 0 ? r + order : r;
}

void free_reduce_push(std::vector<std::int32_t>& out, std::int32_t letter) {
  if (!out.empty() && out.back() == -letter) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

std::string free_generator_name(int rank, int index) {
  if (rank <= static_cast<int>(kFreeAlphabet.size())) {
    return std::string(1, kFreeAlphabet[static_cast<std::size_t>(index)]);
  }
  return "x" + std::to_string(index + 1);
}

std::string format_free(const GroupSpec& spec, const FreeWord& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    if (!out.empty()) out += '.';
    const std::int32_t letter = w.letters[i];
    out += free_generator_name(spec.parameter, std::abs(letter) - 1);
    const auto count = static_cast<std::int64_t>(j - i) * (letter < 0 ? -1 : 1);
    if (count != 1) out += "^" + std::to_string(count);
    i = j;
  }
  return out;
}

FreeWord parse_free(const GroupSpec& spec, std::string_view text) {
  FreeWord w;
  if (text == "1") return w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string_view syllable =
        text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    if (syllable.empty()) throw InputError("empty syllable in free-group word '" + std::string(text) + "'");
    std::string_view name = syllable;
    std::int64_t exponent = 1;
    if (auto caret = syllable.find('^'); caret != std::string_view::npos) {
      name = syllable.substr(0, caret);
      exponent = parse_int(syllable.substr(caret + 1), syllable);
    }
    int index = -1;
    for (int g = 0; g < spec.parameter; ++g) {
      if (free_generator_name(spec.parameter, g) == name) index = g;
    }
    if (index < 0) {
      throw InputError("unknown generator '" + std::string(name) + "' for " + spec.tag());
    }
    const std::int32_t letter = (exponent < 0 ? -1 : 1) * (index + 1);
    for (std::int64_t k = 0; k < std::abs(exponent); ++k) free_reduce_push(w.letters, letter);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return w;
}

}  // namespace

GroupSpec GroupSpec::free_abelian(int rank) {
  if (rank < 1) throw InputError("free-abelian rank must be >= 1");
  return {GroupKind::FreeAbelian, rank};
}

GroupSpec GroupSpec::finite_cyclic(int order) {
  if (order < 2) throw InputError("finite-cyclic order must be >= 2");
  return {GroupKind::FiniteCyclic, order};
}

GroupSpec GroupSpec::free(int rank) {
  if (rank < 1) throw InputError("free rank must be >= 1");
  return {GroupKind::Free, rank};
}

std::string GroupSpec::tag() const {
  switch (kind) {
    case GroupKind::InfiniteCyclic: return "Z";
    case GroupKind::FreeAbelian: return "Z^" + std::to_string(parameter);
    case GroupKind::FiniteCyclic: return "Z" + std::to_string(parameter);
    case GroupKind::Free: return "F" + std::to_string(parameter);
  }
  return "?";
}

GroupSpec GroupSpec::parse(std::string_view tag) {
  auto number = [&](std::string_view digits) {
    std::int64_t v = parse_int(digits, tag);
    if (v > 1'000'000'000) throw InputError("group parameter too large in '" + std::string(tag) + "'");
    return static_cast<int>(v);
  };
  if (tag == "Z") return infinite_cyclic();
  if (tag.starts_with("Z^")) return free_abelian(number(tag.substr(2)));
  if (tag.starts_with("Z") && tag.size() > 1) return finite_cyclic(number(tag.substr(1)));
  if (tag.starts_with("F") && tag.size() > 1) return free(number(tag.substr(1)));
  throw InputError("unknown group '" + std::string(tag) + "' (expected Z, Z^k, Zn or Fk)");
}

std::size_t hash_element(const GroupElement& x) {
  std::size_t h = x.index() * 0x9e3779b97f4a7c15ULL;
  std::visit(
      [&](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, CyclicValue>) {
          h ^= std::hash<std::int64_t>{}(payload.value) + 0x9e3779b9 + (h << 6) + (h >> 2);
        } else if constexpr (std::is_same_v<T, LatticeVector>) {
          for (auto c : payload.coords) h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b9 + (h << 6) + (h >> 2);
        } else {
          for (auto c : payload.letters) h ^= std::hash<std::int32_t>{}(c) + 0x9e3779b9 + (h << 6) + (h >> 2);
        }
      },
      x);
  return h;
}

void check_element(const GroupSpec& spec, const GroupElement& x) {
  switch (spec.kind) {
    case GroupKind::InfiniteCyclic:
      if (!std::holds_alternative<CyclicValue>(x)) mismatch(spec, "expected an integer");
      return;
    case GroupKind::FiniteCyclic: {
      const auto* c = std::get_if<CyclicValue>(&x);
      if (c == nullptr) mismatch(spec, "expected a residue");
      if (c->value < 0 || c->value >= spec.parameter) mismatch(spec, "residue out of range");
      return;
    }
    case GroupKind::FreeAbelian: {
      const auto* v = std::get_if<LatticeVector>(&x);
      if (v == nullptr) mismatch(spec, "expected an integer vector");
      if (static_cast<int>(v->coords.size()) != spec.parameter) mismatch(spec, "wrong rank");
      return;
    }
    case GroupKind::Free: {
      const auto* w = std::get_if<FreeWord>(&x);
      if (w == nullptr) mismatch(spec, "expected a free-group word");
      for (std::size_t i = 0; i < w->letters.size(); ++i) {
        const auto g = w->letters[i];
        if (g == 0 || std::abs(g) > spec.parameter) mismatch(spec, "generator out of range");
        if (i > 0 && w->letters[i - 1] == -g) mismatch(spec, "word not freely reduced");
      }
      return;
    }
  }
}

GroupElement identity(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::InfiniteCyclic:
    case GroupKind::FiniteCyclic: return CyclicValue{0};
    case GroupKind::FreeAbelian:
      return LatticeVector{std::vector<std::int64_t>(static_cast<std::size_t>(spec.parameter), 0)};
    case GroupKind::Free: return FreeWord{};
  }
  return CyclicValue{0};
}

GroupElement multiply(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  check_element(spec, x);
  check_element(spec, y);
  switch (spec.kind) {
    case GroupKind::InfiniteCyclic:
      return CyclicValue{std::get<CyclicValue>(x).value + std::get<CyclicValue>(y).value};
    case GroupKind::FiniteCyclic:
      return CyclicValue{residue(std::get<CyclicValue>(x).value + std::get<CyclicValue>(y).value,
                                 spec.parameter)};
    case GroupKind::FreeAbelian: {
      LatticeVector out = std::get<LatticeVector>(x);
      const auto& b = std::get<LatticeVector>(y).coords;
      for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b[i];
      return out;
    }
    case GroupKind::Free: {
      FreeWord out = std::get<FreeWord>(x);
      for (auto g : std::get<FreeWord>(y).letters) free_reduce_push(out.letters, g);
      return out;
    }
  }
  return x;
}

GroupElement invert(const GroupSpec& spec, const GroupElement& x) {
  check_element(spec, x);
  switch (spec.kind) {
    case GroupKind::InfiniteCyclic: return CyclicValue{-std::get<CyclicValue>(x).value};
    case GroupKind::FiniteCyclic:
      return CyclicValue{residue(-std::get<CyclicValue>(x).value, spec.parameter)};
    case GroupKind::FreeAbelian: {
      LatticeVector out = std::get<LatticeVector>(x);
      for (auto& c : out.coords) c = -c;
      return out;
    }
    case GroupKind::Free: {
      const auto& w = std::get<FreeWord>(x).letters;
      FreeWord out;
      out.letters.reserve(w.size());
      for (auto it = w.rbegin(); it != w.rend(); ++it) out.letters.push_back(-*it);
      return out;
    }
  }
  return x;
}

bool is_identity(const GroupSpec& spec, const GroupElement& x) {
  check_element(spec, x);
  return x == identity(spec);
}

GroupElement canonicalize(const GroupSpec& spec, GroupElement x) {
  if (spec.kind == GroupKind::FiniteCyclic) {
    if (auto* c = std::get_if<CyclicValue>(&x)) c->value = residue(c->value, spec.parameter);
  } else if (spec.kind == GroupKind::Free) {
    if (auto* w = std::get_if<FreeWord>(&x)) {
      std::vector<std::int32_t> reduced;
      for (auto g : w->letters) free_reduce_push(reduced, g);
      w->letters = std::move(reduced);
    }
  }
  check_element(spec, x);
  return x;
}

std::vector<GroupElement> standard_generators(const GroupSpec& spec) {
  std::vector<GroupElement> gens;
  switch (spec.kind) {
    case GroupKind::InfiniteCyclic:
      gens = {CyclicValue{1}, CyclicValue{-1}};
      break;
    case GroupKind::FiniteCyclic:
      gens = {CyclicValue{1}, CyclicValue{spec.parameter - 1}};
      if (spec.parameter == 2) gens.pop_back();
      break;
    case GroupKind::FreeAbelian:
      for (int i = 0; i < spec.parameter; ++i) {
        for (int sign : {1, -1}) {
          LatticeVector e{std::vector<std::int64_t>(static_cast<std::size_t>(spec.parameter), 0)};
          e.coords[static_cast<std::size_t>(i)] = sign;
          gens.emplace_back(std::move(e));
        }
      }
      break;
    case GroupKind::Free:
      for (int i = 1; i <= spec.parameter; ++i) {
        gens.emplace_back(FreeWord{{i}});
        gens.emplace_back(FreeWord{{-i}});
      }
      break;
  }
  return gens;
}

std::vector<GroupElement> enumerate_ball(const GroupSpec& spec, int radius) {
  if (radius < 0) throw InputError("ball radius must be nonnegative");
  std::set<GroupElement> seen{identity(spec)};
  std::vector<GroupElement> frontier{identity(spec)};
  const auto gens = standard_generators(spec);
  for (int r = 0; r < radius && !frontier.empty(); ++r) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        auto y = multiply(spec, x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::string format_payload(const GroupSpec& spec, const GroupElement& x) {
  check_element(spec, x);
  switch (spec.kind) {
    case GroupKind::InfiniteCyclic:
    case GroupKind::FiniteCyclic: return std::to_string(std::get<CyclicValue>(x).value);
    case GroupKind::FreeAbelian: {
      std::string out = "(";
      const auto& c = std::get<LatticeVector>(x).coords;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(c[i]);
      }
      return out + ")";
    }
    case GroupKind::Free: return "[" + format_free(spec, std::get<FreeWord>(x)) + "]";
  }
  return {};
}

GroupElement parse_payload(const GroupSpec& spec, std::string_view text) {
  switch (spec.kind) {
    case GroupKind::InfiniteCyclic: return CyclicValue{parse_int(text, text)};
    case GroupKind::FiniteCyclic: return CyclicValue{residue(parse_int(text, text), spec.parameter)};
    case GroupKind::FreeAbelian: {
      if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
        throw InputError("expected '(c1,...,ck)' for " + spec.tag() + ", got '" + std::string(text) + "'");
      }
      std::string_view body = text.substr(1, text.size() - 2);
      LatticeVector v;
      std::size_t pos = 0;
      while (true) {
        std::size_t comma = body.find(',', pos);
        v.coords.push_back(parse_int(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                      : comma - pos),
                                     text));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
      GroupElement out = std::move(v);
      check_element(spec, out);
      return out;
    }
    case GroupKind::Free: {
      if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
        text = text.substr(1, text.size() - 2);
      }
      return parse_free(spec, text);
    }
  }
  throw InputError("unsupported group");
}

std::string format_element(const GroupSpec& spec, const GroupElement& x) {
  check_element(spec, x);
  if (spec.kind == GroupKind::Free) return spec.tag() + ":" + format_free(spec, std::get<FreeWord>(x));
  return spec.tag() + ":" + format_payload(spec, x);
}

std::pair<GroupSpec, GroupElement> parse_element(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InputError("expected '<group>:<payload>', got '" + std::string(text) + "'");
  }
  GroupSpec spec = GroupSpec::parse(text.substr(0, colon));
  GroupElement x = parse_payload(spec, text.substr(colon + 1));
  return {spec, std::move(x)};
}

}  // namespace graphprod

#include "graphprod/word.hpp"

#include "graphprod/errors.hpp"

namespace graphprod {

PrismWord PrismWord::subword(std::size_t first, std::size_t count) const {
  if (first > letters_.size() || count > letters_.size() - first) {
    throw InputError("subword range out of bounds");
  }
  return PrismWord(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                                       letters_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

std::size_t PrismWordHash::operator()(const PrismWord& w) const {
  std::size_t h = w.size();
  for (const auto& l : w) {
    h ^= (l.vertex * 0x9e3779b97f4a7c15ULL) + 0x7f4a7c15 + (h << 6) + (h >> 2);
    h ^= hash_element(l.element) + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}

Letter make_letter(const DefiningGraph& graph, VertexId vertex, GroupElement element) {
  if (vertex >= graph.vertex_count()) {
    throw InputError("letter refers to vertex index " + std::to_string(vertex) + " outside the graph");
  }
  const auto& spec = graph.group(vertex);
  check_element(spec, element);
  if (is_identity(spec, element)) {
    throw InputError("letter at vertex '" + graph.name(vertex) + "' is the identity");
  }
  return Letter{vertex, std::move(element)};
}

Letter make_letter(const DefiningGraph& graph, std::string_view vertex, std::int64_t value) {
  const VertexId v = graph.id(vertex);
  return make_letter(graph, v, canonicalize(graph.group(v), CyclicValue{value}));
}

void validate(const DefiningGraph& graph, const PrismWord& w) {
  for (const auto& l : w) make_letter(graph, l.vertex, l.element);
}

PrismWord concat(const PrismWord& a, const PrismWord& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return PrismWord(std::move(out));
}

Letter inverse(const DefiningGraph& graph, const Letter& l) {
  return Letter{l.vertex, invert(graph.group(l.vertex), l.element)};
}

PrismWord inverse(const DefiningGraph& graph, const PrismWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(inverse(graph, *it));
  return PrismWord(std::move(out));
}

VertexSet support(const DefiningGraph& graph, const PrismWord& w) {
  VertexSet s = graph.empty_set();
  for (const auto& l : w) s.insert(l.vertex);
  return s;
}

std::string format_letter(const DefiningGraph& graph, const Letter& l) {
  return graph.name(l.vertex) + ":" + format_payload(graph.group(l.vertex), l.element);
}

std::string format_word(const DefiningGraph& graph, const PrismWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += '.';
    out += format_letter(graph, w[i]);
  }
  return out;
}

PrismWord parse_word(const DefiningGraph& graph, std::string_view text) {
  PrismWord w;
  if (text == "1" || text.empty()) return w;
  std::size_t start = 0;
  int depth = 0;
  auto flush = [&](std::size_t end) {
    std::string_view token = text.substr(start, end - start);
    const auto colon = token.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == token.size()) {
      throw InputError("malformed letter '" + std::string(token) + "' (expected vertex:element)");
    }
    const VertexId v = graph.id(token.substr(0, colon));
    w.push_back(make_letter(graph, v, parse_payload(graph.group(v), token.substr(colon + 1))));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == '.' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return w;
}

}  // namespace graphprod

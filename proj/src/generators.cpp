#include <charconv>
#include <set>

#include "syncgraph/error.hpp"
#include "syncgraph/graph.hpp"
#include "syncgraph/rng.hpp"

namespace syncgraph {

namespace {

using Pairs = std::vector<std::pair<Node, Node>>;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidSpec(what);
}

// Seed clique on m+1 nodes, then each new node draws m distinct targets
// with probability proportional to degree (endpoint-list sampling).
Graph barabasi_albert(int n, int m, std::uint64_t seed) {
  Pairs pairs;
  std::vector<Node> endpoints;
  for (Node u = 0; u <= m; ++u) {
    for (Node v = u + 1; v <= m; ++v) {
      pairs.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }

  Rng rng(seed);
  for (Node t = m + 1; t < n; ++t) {
    std::set<Node> targets;
    while (static_cast<int>(targets.size()) < m) {
      targets.insert(endpoints[rng.uniform_index(endpoints.size())]);
    }
    for (Node x : targets) {
      pairs.emplace_back(x, t);
      endpoints.push_back(x);
      endpoints.push_back(t);
    }
  }
  return Graph::build(n, pairs);
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidSpec("bad integer '" + std::string(text) + "' in generator spec '" + std::string(whole) + "'");
  }
  return value;
}

std::uint64_t parse_u64(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidSpec("bad seed '" + std::string(text) + "' in generator spec '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
  Pairs pairs;
  switch (spec.kind) {
    case GeneratorKind::cycle:
      require(spec.n >= 3, "cycle needs N >= 3");
      for (Node i = 0; i < spec.n; ++i) pairs.emplace_back(i, (i + 1) % spec.n);
      return Graph::build(spec.n, pairs);

    case GeneratorKind::path:
      require(spec.n >= 1, "path needs N >= 1");
      for (Node i = 0; i + 1 < spec.n; ++i) pairs.emplace_back(i, i + 1);
      return Graph::build(spec.n, pairs);

    case GeneratorKind::complete:
      require(spec.n >= 1, "complete graph needs N >= 1");
      for (Node u = 0; u < spec.n; ++u)
        for (Node v = u + 1; v < spec.n; ++v) pairs.emplace_back(u, v);
      return Graph::build(spec.n, pairs);

    case GeneratorKind::complete_bipartite:
      require(spec.p >= 1 && spec.q >= 1, "complete bipartite graph needs p, q >= 1");
      for (Node u = 0; u < spec.p; ++u)
        for (Node v = 0; v < spec.q; ++v) pairs.emplace_back(u, spec.p + v);
      return Graph::build(spec.p + spec.q, pairs);

    case GeneratorKind::petersen:
      // outer 5-cycle 0..4, spokes i -> i+5, inner pentagram on 5..9
      for (Node i = 0; i < 5; ++i) {
        pairs.emplace_back(i, (i + 1) % 5);
        pairs.emplace_back(i, i + 5);
        pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
      }
      return Graph::build(10, pairs);

    case GeneratorKind::barabasi_albert:
      require(spec.m_attach >= 1 && spec.n > spec.m_attach, "barabasi_albert needs N > m_attach >= 1");
      return barabasi_albert(spec.n, spec.m_attach, spec.seed);
  }
  throw InvalidSpec("unknown generator kind");
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }

  const auto kind = parts.front();
  const auto arity = parts.size() - 1;
  auto expect = [&](std::size_t k) {
    if (arity != k) {
      throw InvalidSpec("generator '" + std::string(kind) + "' takes " + std::to_string(k) +
                        " parameter(s): '" + std::string(text) + "'");
    }
  };

  if (kind == "cycle") {
    expect(1);
    return GeneratorSpec::cycle(parse_int(parts[1], text));
  }
  if (kind == "path") {
    expect(1);
    return GeneratorSpec::path(parse_int(parts[1], text));
  }
  if (kind == "complete") {
    expect(1);
    return GeneratorSpec::complete(parse_int(parts[1], text));
  }
  if (kind == "kbip") {
    expect(2);
    return GeneratorSpec::complete_bipartite(parse_int(parts[1], text), parse_int(parts[2], text));
  }
  if (kind == "petersen") {
    expect(0);
    return GeneratorSpec::petersen();
  }
  if (kind == "ba") {
    expect(3);
    return GeneratorSpec::barabasi_albert(parse_int(parts[1], text), parse_int(parts[2], text),
                                          parse_u64(parts[3], text));
  }
  throw InvalidSpec("unknown generator '" + std::string(text) + "'");
}

std::string to_string(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::cycle: return "cycle:" + std::to_string(spec.n);
    case GeneratorKind::path: return "path:" + std::to_string(spec.n);
    case GeneratorKind::complete: return "complete:" + std::to_string(spec.n);
    case GeneratorKind::complete_bipartite:
      return "kbip:" + std::to_string(spec.p) + ":" + std::to_string(spec.q);
    case GeneratorKind::petersen: return "petersen";
    case GeneratorKind::barabasi_albert:
      return "ba:" + std::to_string(spec.n) + ":" + std::to_string(spec.m_attach) + ":" +
             std::to_string(spec.seed);
  }
  return "?";
}

}  // namespace syncgraph

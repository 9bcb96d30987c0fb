#include "isg/builtins.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>

#include "isg/error.hpp"

namespace isg {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

std::size_t parse_count(const std::string& text, std::string_view name) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0)
    throw Error(ErrorKind::kUnknownName, "bad numeric parameter in builtin name: " + std::string(name));
  return v;
}

InverseSemigroup from_partial_maps(std::vector<PartialMap> maps, std::vector<std::string> labels) {
  auto pm = semigroup_of_partial_maps(std::move(maps));
  std::vector<Index> order(pm.semigroup.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Index>(i);
  return permuted(pm.semigroup, order, std::move(labels));
}

InverseSemigroup diamond_munn() {
  const auto e = diamond_semilattice();
  auto pm = munn_semigroup(e);
  // Points: 0, a=1, b=2, top=3.
  std::vector<Index> order(7, 0);
  for (Index i = 0; i < pm.maps.size(); ++i) {
    const auto& f = pm.maps[i];
    const auto dom = f.domain().count();
    if (dom == 4) order[f.is_partial_identity() ? 0 : 1] = i;
    else if (dom == 1) order[6] = i;
    else {
      const bool from_a = f.defined(1);
      const bool to_a = f.image().contains(1);
      order[from_a ? (to_a ? 2 : 3) : (to_a ? 4 : 5)] = i;
    }
  }
  return permuted(pm.semigroup, order, {"1", "-1", "a", "a>b", "b>a", "b", "0"});
}

// Y x| Z2 with Z2 swapping a and b: (y,g)(z,h) = (y meet g.z, gh).
InverseSemigroup semidirect_diamond() {
  const auto y = diamond_semilattice();
  const Index swap[4] = {0, 2, 1, 3};
  const char* names[4] = {"0", "a", "b", "1"};
  std::vector<Index> table(64);
  std::vector<std::string> labels;
  for (Index p = 0; p < 8; ++p) {
    const Index yp = p / 2, gp = p % 2;
    labels.push_back(std::string("(") + names[yp] + (gp ? ",t)" : ",1)"));
    for (Index q = 0; q < 8; ++q) {
      const Index zq = q / 2, hq = q % 2;
      const Index moved = gp ? swap[zq] : zq;
      table[p * 8 + q] = y.meet(yp, moved) * 2 + (gp ^ hq);
    }
  }
  return validate_inverse_semigroup(8, std::move(table), std::move(labels));
}

InverseSemigroup b2() {
  // a sends point 1 to point 0.
  std::vector<PartialMap> maps{PartialMap(2), PartialMap({-1, 0}), PartialMap({1, -1}), PartialMap({0, -1}),
                               PartialMap({-1, 1})};
  return from_partial_maps(std::move(maps), {"0", "a", "a*", "aa*", "a*a"});
}

// Elements e, u (top copy of Z2) and f, v (bottom copy).
InverseSemigroup clifford_chain(bool kill) {
  auto level = [](Index x) { return x / 2; };
  auto link = [&](Index x, Index to_level) -> Index {
    if (level(x) == to_level) return x;
    const Index g = x % 2;
    return 2 * to_level + (kill ? 0 : g);
  };
  std::vector<Index> table(16);
  for (Index x = 0; x < 4; ++x)
    for (Index y = 0; y < 4; ++y) {
      const Index l = std::max(level(x), level(y));
      table[x * 4 + y] = 2 * l + ((link(x, l) % 2) ^ (link(y, l) % 2));
    }
  return validate_inverse_semigroup(4, std::move(table), {"e", "u", "f", "v"});
}

InverseSemigroup graph_semigroup(const DirectedGraph& g) { return graph_inverse_semigroup(g).semigroup; }

}  // namespace

Semilattice diamond_semilattice() {
  // 0 < a, b < 1; a meet b = 0.
  std::vector<Index> meet(16);
  for (Index x = 0; x < 4; ++x)
    for (Index y = 0; y < 4; ++y) {
      Index m;
      if (x == y) m = x;
      else if (x == 3) m = y;
      else if (y == 3) m = x;
      else m = 0;
      meet[x * 4 + y] = m;
    }
  return Semilattice::from_meet_table(4, std::move(meet), {"0", "a", "b", "1"});
}

Semilattice chain_semilattice(std::size_t k) {
  std::vector<Index> meet(k * k);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < k; ++x) {
    labels.push_back("c" + std::to_string(x));
    for (std::size_t y = 0; y < k; ++y) meet[x * k + y] = static_cast<Index>(std::min(x, y));
  }
  return Semilattice::from_meet_table(k, std::move(meet), std::move(labels));
}

InverseSemigroup permuted(const InverseSemigroup& s, const std::vector<Index>& order,
                          std::vector<std::string> labels) {
  const std::size_t n = order.size();
  if (n != s.size()) throw Error(ErrorKind::kMalformedTable, "permutation has the wrong length");
  std::vector<Index> pos(n, static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) pos.at(order[i]) = static_cast<Index>(i);
  if (std::count(pos.begin(), pos.end(), static_cast<Index>(n)) != 0)
    throw Error(ErrorKind::kMalformedTable, "order is not a permutation");
  std::vector<Index> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = pos[s.mul(order[i], order[j])];
  if (labels.empty())
    for (Index x : order) labels.push_back(s.label(x));
  return validate_inverse_semigroup(n, std::move(table), std::move(labels));
}

InverseSemigroup cyclic_group(std::size_t n) {
  std::vector<Index> table(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("g" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Index>((i + j) % n);
  }
  return validate_inverse_semigroup(n, std::move(table), std::move(labels));
}

InverseSemigroup brandt_semigroup(std::size_t n, std::size_t m) {
  // (i, g, j) at 1 + (i*m + g)*n + j; 0 at index 0.
  const std::size_t size = 1 + n * n * m;
  auto idx = [&](std::size_t i, std::size_t g, std::size_t j) { return static_cast<Index>(1 + (i * m + g) * n + j); };
  std::vector<Index> table(size * size, 0);
  std::vector<std::string> labels(size, "0");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t j = 0; j < n; ++j) {
        labels[idx(i, g, j)] = "(" + std::to_string(i) + ",g" + std::to_string(g) + "," + std::to_string(j) + ")";
        for (std::size_t h = 0; h < m; ++h)
          for (std::size_t l = 0; l < n; ++l) table[std::size_t{idx(i, g, j)} * size + idx(j, h, l)] = idx(i, (g + h) % m, l);
      }
  return validate_inverse_semigroup(size, std::move(table), std::move(labels));
}

InverseSemigroup group_times_chain(std::size_t n, std::size_t k) {
  const std::size_t size = n * k;
  std::vector<Index> table(size * size);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < size; ++x) {
    labels.push_back("(g" + std::to_string(x % n) + ",c" + std::to_string(x / n) + ")");
    for (std::size_t y = 0; y < size; ++y)
      table[x * size + y] = static_cast<Index>(std::min(x / n, y / n) * n + (x % n + y % n) % n);
  }
  return validate_inverse_semigroup(size, std::move(table), std::move(labels));
}

InverseSemigroup strong_semilattice_of_cyclic_groups(const std::vector<std::uint32_t>& family,
                                                     const std::vector<std::size_t>& primes) {
  std::vector<std::size_t> order, offset;
  std::size_t size = 0;
  for (auto a : family) {
    std::size_t m = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if ((a >> i) & 1u) m *= primes[i];
    order.push_back(m);
    offset.push_back(size);
    size += m;
  }
  auto find = [&](std::uint32_t a) {
    const auto it = std::find(family.begin(), family.end(), a);
    if (it == family.end()) throw Error(ErrorKind::kNotSemilattice, "family is not closed under intersection");
    return static_cast<std::size_t>(it - family.begin());
  };
  std::vector<Index> table(size * size);
  std::vector<std::string> labels(size);
  for (std::size_t p = 0; p < family.size(); ++p)
    for (std::size_t x = 0; x < order[p]; ++x) {
      labels[offset[p] + x] = "(A" + std::to_string(family[p]) + "," + std::to_string(x) + ")";
      for (std::size_t q = 0; q < family.size(); ++q) {
        const std::size_t r = find(family[p] & family[q]);
        for (std::size_t y = 0; y < order[q]; ++y)
          table[(offset[p] + x) * size + offset[q] + y] =
              static_cast<Index>(offset[r] + (x % order[r] + y % order[r]) % order[r]);
      }
    }
  return validate_inverse_semigroup(size, std::move(table), std::move(labels));
}

DirectedGraph path_graph(std::size_t n) {
  DirectedGraph g{n, {}};
  for (std::size_t v = 0; v + 1 < n; ++v) g.edges.emplace_back(static_cast<Index>(v), static_cast<Index>(v + 1));
  return g;
}

DirectedGraph parallel_graph(std::size_t k) {
  DirectedGraph g{2, {}};
  for (std::size_t e = 0; e < k; ++e) g.edges.emplace_back(0, 1);
  return g;
}

InverseSemigroup builtin(std::string_view name) {
  const auto parts = split(name, ':');
  const auto& head = parts[0];
  if (parts.size() == 1) {
    if (head == "diamond_munn") return diamond_munn();
    if (head == "semidirect_diamond") return semidirect_diamond();
    if (head == "b2") return b2();
  } else if (head == "symmetric" && parts.size() == 2) {
    return symmetric_inverse_monoid(parse_count(parts[1], name)).semigroup;
  } else if (head == "clifford_chain" && parts.size() == 2) {
    if (parts[1] == "identity") return clifford_chain(false);
    if (parts[1] == "kill") return clifford_chain(true);
  } else if (head == "group" && parts.size() == 3 && parts[1] == "cyclic") {
    return cyclic_group(parse_count(parts[2], name));
  } else if (head == "brandt" && parts.size() == 3) {
    return brandt_semigroup(parse_count(parts[1], name), parse_count(parts[2], name));
  } else if (head == "graph" && parts.size() == 3) {
    if (parts[1] == "path") return graph_semigroup(path_graph(parse_count(parts[2], name)));
    if (parts[1] == "parallel") return graph_semigroup(parallel_graph(parse_count(parts[2], name)));
  }
  throw Error(ErrorKind::kUnknownName, "unknown builtin: " + std::string(name));
}

std::vector<std::string> builtin_names() {
  return {"diamond_munn", "semidirect_diamond", "b2", "symmetric:n", "clifford_chain:identity",
          "clifford_chain:kill", "group:cyclic:n", "brandt:n:m", "graph:path:n", "graph:parallel:k"};
}

namespace {

std::vector<std::uint32_t> random_intersection_family(std::mt19937_64& rng, std::size_t bits) {
  std::uniform_int_distribution<std::uint32_t> pick(0, (1u << bits) - 1);
  std::set<std::uint32_t> fam;
  const std::size_t gens = 2 + rng() % 2;
  for (std::size_t i = 0; i < gens; ++i) fam.insert(pick(rng));
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto a : std::vector<std::uint32_t>(fam.begin(), fam.end()))
      for (auto b : std::vector<std::uint32_t>(fam.begin(), fam.end())) grew |= fam.insert(a & b).second;
  }
  return {fam.begin(), fam.end()};
}

PartialMap random_partial_bijection(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::int32_t> targets(n);
  for (std::size_t i = 0; i < n; ++i) targets[i] = static_cast<std::int32_t>(i);
  std::shuffle(targets.begin(), targets.end(), rng);
  PartialMap f(n);
  for (std::size_t x = 0; x < n; ++x)
    if (rng() % 3 != 0) f.set(x, targets[x]);
  return f;
}

}  // namespace

std::vector<CorpusEntry> corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, InverseSemigroup s) {
    out.push_back({std::move(name), std::make_shared<const InverseSemigroup>(std::move(s))});
  };
  for (const char* name : {"diamond_munn", "semidirect_diamond", "b2", "symmetric:1", "symmetric:2", "symmetric:3",
                           "clifford_chain:identity", "clifford_chain:kill", "group:cyclic:1", "group:cyclic:2",
                           "group:cyclic:3", "brandt:2:1", "brandt:2:2", "brandt:3:1", "graph:path:1", "graph:path:2",
                           "graph:path:3", "graph:parallel:2"})
    add(name, builtin(name));
  add("munn:chain:3", munn_semigroup(chain_semilattice(3)).semigroup);

  std::mt19937_64 rng(seed);
  for (int k = 0; k < 2; ++k) {
    const std::size_t n = 2 + rng() % 2, c = 2 + rng() % 2;
    add("product:cyclic" + std::to_string(n) + "xchain" + std::to_string(c), group_times_chain(n, c));
  }
  const std::vector<std::size_t> primes{2, 3, 5};
  for (int k = 0; k < 3; ++k) {
    const auto fam = random_intersection_family(rng, primes.size());
    std::string name = "strong:";
    for (std::size_t i = 0; i < fam.size(); ++i) name += (i ? "," : "") + std::to_string(fam[i]);
    add(name, strong_semilattice_of_cyclic_groups(fam, primes));
  }
  // Closures that collapse to one or two elements say nothing new; draw again.
  for (int k = 0, accepted = 0; accepted < 4 && k < 64; ++k) {
    const std::size_t points = 2 + accepted % 2;
    std::vector<PartialMap> gens;
    const std::size_t count = 1 + rng() % 2;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_partial_bijection(rng, points));
    auto closure = inverse_closure(gens).semigroup;
    if (closure.size() < 3) continue;
    std::string name = "closure:I" + std::to_string(points);
    for (const auto& g : gens) name += ":" + g.to_string();
    add(name, std::move(closure));
    ++accepted;
  }
  return out;
}

}  // namespace isg

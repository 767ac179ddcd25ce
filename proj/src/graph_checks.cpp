#include "schemeforge/graph_checks.hpp"

#include <algorithm>
#include <queue>

#include "schemeforge/param_search.hpp"
#include "schemeforge/util.hpp"

namespace schemeforge {

nlohmann::json DsrgParams::to_json() const {
  return nlohmann::json{{"v", v},       {"k", k},   {"t", t},
                        {"lambda", lambda}, {"mu", mu}, {"srg", srg}};
}

nlohmann::json DdgParams::to_json() const {
  return nlohmann::json{{"v", v},          {"k", k}, {"lambda1", lambda1},
                        {"lambda2", lambda2}, {"m", m}, {"n", n},
                        {"proper", proper}};
}

nlohmann::json CheckWitness::to_json() const {
  return nlohmann::json{{"pair", {a, b}}, {"count1", count1}, {"count2", count2},
                        {"detail", detail}};
}

nlohmann::json IntersectionArray::to_json() const {
  return nlohmann::json{{"b", b},
                        {"c", c},
                        {"diameter", diameter},
                        {"antipodal", antipodal},
                        {"antipodal_class_size", antipodal_class_size}};
}

bool dsrg_condition(std::uint64_t p, std::uint64_t q) {
  if (p % 4 != 3 || !is_prime(p)) return false;
  auto power = prime_power(q);
  if (!power) return false;
  if (q - 1 != p * (p - 3) / 4) return false;
  // The extension degree is forced odd whenever the identity holds.
  if (power->second % 2 == 0) {
    fail(Errc::bad_parameters, "degree parity violated; arithmetic is inconsistent");
  }
  return true;
}

ColoredDigraph build_dsrg(const Omega& omega, int i, std::uint32_t g) {
  const std::uint32_t p = omega.n();
  if (i != 1 && i != 2) fail(Errc::bad_parameters, "class index must be 1 or 2");
  if (g >= p) fail(Errc::bad_parameters, "relation label out of range");
  if (!is_small_prime(p) || p % 4 != 3) {
    fail(Errc::bad_parameters, "construction needs n = p prime, p = 3 mod 4");
  }
  PaleyClasses classes = paley_classes(p);
  const std::vector<std::uint32_t>& part = (i == 1) ? classes.c1 : classes.c2;

  const std::size_t v = omega.size();
  ColoredDigraph graph(v);
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = 0; b < v; ++b) {
      int f = omega.form(a, b);
      if (f == static_cast<int>(g)) {
        graph.adj.set(a, b);
      } else if (f == Omega::kZeroForm && a != b) {
        std::uint32_t label = omega.thin_label(a, b);
        if (std::binary_search(part.begin(), part.end(), label)) graph.adj.set(a, b);
      }
    }
  }
  if (!graph.loop_free()) fail(Errc::bad_parameters, "constructed digraph has loops");
  return graph;
}

namespace {

struct PathCountClassifier {
  // Classifies ordered pairs into diagonal / arc / non-arc and insists every
  // class has one constant count.
  std::int64_t t = -1, lambda = -1, mu = -1;
  CheckWitness witness;
  bool bad = false;

  bool feed(std::int64_t& slot, std::int64_t count, std::size_t a, std::size_t b) {
    if (slot < 0) slot = count;
    if (slot != count) {
      witness = CheckWitness{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                             slot, count, "2-path count differs within one pair class"};
      bad = true;
      return false;
    }
    return true;
  }
};

}  // namespace

std::optional<DsrgParams> verify_dsrg(const ColoredDigraph& graph, CheckWitness* witness) {
  const std::size_t v = graph.size();
  if (v > kExhaustiveVertexCap) {
    fail(Errc::too_large, "exhaustive verification is capped at " +
                              std::to_string(kExhaustiveVertexCap) + " vertices");
  }
  if (v == 0) return std::nullopt;
  if (!graph.loop_free()) {
    if (witness) *witness = {0, 0, 0, 0, "graph has a loop"};
    return std::nullopt;
  }

  const std::size_t k = graph.out_degree(0);
  BitMatrix in_rows = graph.adj.transposed();
  for (std::size_t i = 0; i < v; ++i) {
    if (graph.out_degree(i) != k || in_rows.row_popcount(i) != k) {
      if (witness) {
        *witness = {static_cast<std::uint32_t>(i), 0, static_cast<std::int64_t>(k),
                    static_cast<std::int64_t>(graph.out_degree(i)), "degree is not constant"};
      }
      return std::nullopt;
    }
  }

  // counts[a][b] = #{c : a->c, c->b} = |out(a) & in(b)|
  std::vector<PathCountClassifier> rows(v);
  parallel_for(v, [&](std::size_t a) {
    PathCountClassifier& cls = rows[a];
    for (std::size_t b = 0; b < v; ++b) {
      std::int64_t count =
          static_cast<std::int64_t>(graph.adj.and_popcount(a, in_rows, b));
      if (a == b) {
        if (!cls.feed(cls.t, count, a, b)) return;
      } else if (graph.adj.test(a, b)) {
        if (!cls.feed(cls.lambda, count, a, b)) return;
      } else {
        if (!cls.feed(cls.mu, count, a, b)) return;
      }
    }
  });

  PathCountClassifier total;
  for (const auto& cls : rows) {
    if (cls.bad) {
      if (witness) *witness = cls.witness;
      return std::nullopt;
    }
    for (auto [mine, theirs] : {std::pair{&total.t, cls.t},
                                std::pair{&total.lambda, cls.lambda},
                                std::pair{&total.mu, cls.mu}}) {
      if (theirs < 0) continue;
      if (*mine < 0) *mine = theirs;
      if (*mine != theirs) {
        if (witness) *witness = {0, 0, *mine, theirs, "count differs across rows"};
        return std::nullopt;
      }
    }
  }
  if (total.t < 0 || total.lambda < 0 || total.mu < 0) {
    if (witness) *witness = {0, 0, 0, 0, "degenerate graph (some pair class is empty)"};
    return std::nullopt;
  }

  DsrgParams params;
  params.v = v;
  params.k = k;
  params.t = static_cast<std::uint64_t>(total.t);
  params.lambda = static_cast<std::uint64_t>(total.lambda);
  params.mu = static_cast<std::uint64_t>(total.mu);
  params.srg = (params.t == params.k) && graph.is_symmetric();

  // Sanity: k(k + mu - lambda) = t + (v-1) mu, a consequence of the matrix
  // equation, must hold for every certified instance.
  std::int64_t kk = static_cast<std::int64_t>(params.k);
  std::int64_t lhs = kk * (kk + static_cast<std::int64_t>(params.mu) -
                           static_cast<std::int64_t>(params.lambda));
  std::int64_t rhs = static_cast<std::int64_t>(params.t) +
                     static_cast<std::int64_t>(params.v - 1) * static_cast<std::int64_t>(params.mu);
  if (lhs != rhs) {
    if (witness) *witness = {0, 0, 0, 0, "parameter identity failed"};
    return std::nullopt;
  }
  return params;
}

namespace {

std::vector<std::int64_t> adjacency_square(const ColoredDigraph& graph) {
  const std::size_t v = graph.size();
  std::vector<std::int64_t> a(v * v, 0), out(v * v, 0);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) a[i * v + j] = graph.adj.test(i, j) ? 1 : 0;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t k = 0; k < v; ++k) {
      if (a[i * v + k] == 0) continue;
      const std::int64_t* brow = a.data() + k * v;
      std::int64_t* orow = out.data() + i * v;
      for (std::size_t j = 0; j < v; ++j) orow[j] += brow[j];
    }
  }
  return out;
}

}  // namespace

std::optional<DsrgParams> verify_dsrg_matrix(const ColoredDigraph& graph) {
  const std::size_t v = graph.size();
  if (v > 500) fail(Errc::too_large, "matrix route is limited to 500 vertices");
  if (v == 0 || !graph.loop_free()) return std::nullopt;
  std::size_t k = graph.out_degree(0);
  for (std::size_t i = 0; i < v; ++i) {
    if (graph.out_degree(i) != k) return std::nullopt;
  }
  std::vector<std::int64_t> sq = adjacency_square(graph);
  std::int64_t t = -1, lambda = -1, mu = -1;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      std::int64_t& slot = (i == j) ? t : (graph.adj.test(i, j) ? lambda : mu);
      if (slot < 0) slot = sq[i * v + j];
      if (slot != sq[i * v + j]) return std::nullopt;
    }
  }
  if (t < 0 || lambda < 0 || mu < 0) return std::nullopt;
  // Column regularity via A^T checked by the popcount route; here J A = k J
  // follows from the row sums of A^2 = k^2.
  DsrgParams params{static_cast<std::uint64_t>(v), k, static_cast<std::uint64_t>(t),
                    static_cast<std::uint64_t>(lambda), static_cast<std::uint64_t>(mu),
                    false};
  params.srg = params.t == params.k && graph.is_symmetric();
  return params;
}

ColoredDigraph build_ddg(const Omega& omega, const DifferenceSet& d) {
  if (d.n != omega.n()) fail(Errc::mismatched_n, "difference set group order must equal n");
  const std::size_t v = omega.size();
  ColoredDigraph graph(v);
  std::vector<bool> in_d(omega.n(), false);
  for (std::uint32_t g : d.elements) in_d[g] = true;
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = 0; b < v; ++b) {
      int f = omega.form(a, b);
      if (f != Omega::kZeroForm && in_d[static_cast<std::uint32_t>(f)]) graph.adj.set(a, b);
    }
  }
  graph.vertex_class.resize(v);
  for (std::size_t a = 0; a < v; ++a) {
    graph.vertex_class[a] = static_cast<std::uint32_t>(a / omega.n());
  }
  return graph;
}

std::optional<DdgParams> verify_ddg(const ColoredDigraph& graph, CheckWitness* witness) {
  const std::size_t v = graph.size();
  if (v > kExhaustiveVertexCap) {
    fail(Errc::too_large, "exhaustive verification is capped at " +
                              std::to_string(kExhaustiveVertexCap) + " vertices");
  }
  if (v == 0 || graph.vertex_class.size() != v) {
    if (witness) *witness = {0, 0, 0, 0, "missing vertex partition"};
    return std::nullopt;
  }
  if (!graph.is_symmetric() || !graph.loop_free()) {
    if (witness) *witness = {0, 0, 0, 0, "not a loop-free undirected graph"};
    return std::nullopt;
  }

  std::uint32_t m = *std::max_element(graph.vertex_class.begin(), graph.vertex_class.end()) + 1;
  std::vector<std::size_t> class_size(m, 0);
  for (std::uint32_t c : graph.vertex_class) class_size[c]++;
  for (std::uint32_t c = 0; c < m; ++c) {
    if (class_size[c] != class_size[0]) {
      if (witness) *witness = {c, 0, 0, 0, "classes have unequal sizes"};
      return std::nullopt;
    }
  }

  const std::size_t k = graph.out_degree(0);
  for (std::size_t i = 0; i < v; ++i) {
    if (graph.out_degree(i) != k) {
      if (witness) {
        *witness = {static_cast<std::uint32_t>(i), 0, static_cast<std::int64_t>(k),
                    static_cast<std::int64_t>(graph.out_degree(i)), "graph is not regular"};
      }
      return std::nullopt;
    }
  }

  struct RowState {
    std::int64_t l1 = -1, l2 = -1;
    CheckWitness witness;
    bool bad = false;
  };
  std::vector<RowState> rows(v);
  parallel_for(v, [&](std::size_t a) {
    RowState& st = rows[a];
    for (std::size_t b = a + 1; b < v; ++b) {
      std::int64_t common =
          static_cast<std::int64_t>(graph.adj.and_popcount(a, graph.adj, b));
      std::int64_t& slot =
          (graph.vertex_class[a] == graph.vertex_class[b]) ? st.l1 : st.l2;
      if (slot < 0) slot = common;
      if (slot != common) {
        st.witness = {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), slot,
                      common, "common-neighbor count differs within one pair class"};
        st.bad = true;
        return;
      }
    }
  });

  std::int64_t l1 = -1, l2 = -1;
  for (const RowState& st : rows) {
    if (st.bad) {
      if (witness) *witness = st.witness;
      return std::nullopt;
    }
    for (auto [mine, theirs] : {std::pair{&l1, st.l1}, std::pair{&l2, st.l2}}) {
      if (theirs < 0) continue;
      if (*mine < 0) *mine = theirs;
      if (*mine != theirs) {
        if (witness) *witness = {0, 0, *mine, theirs, "count differs across rows"};
        return std::nullopt;
      }
    }
  }
  std::size_t n = class_size[0];
  if (l1 < 0 && n > 1) {
    if (witness) *witness = {0, 0, 0, 0, "no within-class pairs"};
    return std::nullopt;
  }
  if (l2 < 0 && m > 1) {
    if (witness) *witness = {0, 0, 0, 0, "no cross-class pairs"};
    return std::nullopt;
  }

  DdgParams params;
  params.v = v;
  params.k = k;
  params.lambda1 = l1 < 0 ? 0 : static_cast<std::uint64_t>(l1);
  params.lambda2 = l2 < 0 ? 0 : static_cast<std::uint64_t>(l2);
  params.m = m;
  params.n = n;
  params.proper = m > 1 && n > 1 && params.lambda1 != params.lambda2;
  return params;
}

std::optional<DdgParams> verify_ddg_matrix(const ColoredDigraph& graph) {
  const std::size_t v = graph.size();
  if (v > 500) fail(Errc::too_large, "matrix route is limited to 500 vertices");
  if (v == 0 || graph.vertex_class.size() != v) return std::nullopt;
  if (!graph.is_symmetric() || !graph.loop_free()) return std::nullopt;
  std::uint32_t m = *std::max_element(graph.vertex_class.begin(), graph.vertex_class.end()) + 1;
  std::vector<std::size_t> class_size(m, 0);
  for (std::uint32_t c : graph.vertex_class) class_size[c]++;
  for (std::uint32_t c = 0; c < m; ++c) {
    if (class_size[c] != class_size[0]) return std::nullopt;
  }
  std::size_t k = graph.out_degree(0);
  for (std::size_t i = 0; i < v; ++i) {
    if (graph.out_degree(i) != k) return std::nullopt;
  }
  std::vector<std::int64_t> sq = adjacency_square(graph);
  std::int64_t l1 = -1, l2 = -1;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      if (i == j) {
        if (sq[i * v + j] != static_cast<std::int64_t>(k)) return std::nullopt;
        continue;
      }
      std::int64_t& slot = (graph.vertex_class[i] == graph.vertex_class[j]) ? l1 : l2;
      if (slot < 0) slot = sq[i * v + j];
      if (slot != sq[i * v + j]) return std::nullopt;
    }
  }
  DdgParams params;
  params.v = v;
  params.k = k;
  params.lambda1 = l1 < 0 ? 0 : static_cast<std::uint64_t>(l1);
  params.lambda2 = l2 < 0 ? 0 : static_cast<std::uint64_t>(l2);
  params.m = m;
  params.n = class_size[0];
  params.proper = params.m > 1 && params.n > 1 && params.lambda1 != params.lambda2;
  return params;
}

bool ddg_square_identity(const Omega& omega, const DifferenceSet& d,
                         const ColoredDigraph& graph) {
  const std::size_t v = omega.size();
  const std::uint32_t n = omega.n();
  if (graph.size() != v || d.n != n) return false;
  const std::uint64_t q = omega.q();
  const std::uint64_t m = omega.m();
  const std::uint64_t k = d.params.k;
  const std::uint64_t lambda = d.params.lambda;

  // B_D^2 = kq A_e + lambda q A_{C#} + k^2 m B_C, entry by entry:
  //   diagonal       -> kq
  //   same line, i!=j -> lambda q
  //   different line -> k^2 m
  bool ok = true;
  std::vector<char> row_ok(v, 1);
  parallel_for(v, [&](std::size_t i) {
    for (std::size_t j = 0; j < v; ++j) {
      std::uint64_t count = graph.adj.and_popcount(i, graph.adj, j);
      std::uint64_t expect;
      if (i == j) {
        expect = k * q;
      } else if (i / n == j / n) {
        expect = lambda * q;
      } else {
        expect = k * k * m;
      }
      if (count != expect) {
        row_ok[i] = 0;
        return;
      }
    }
  });
  for (char c : row_ok) ok = ok && c;
  return ok;
}

std::optional<SrgPrediction> srg_condition(std::uint64_t q, std::uint64_t n,
                                           std::uint64_t k, std::uint64_t lambda) {
  if (n == 0 || (q - 1) % n != 0) fail(Errc::not_divisor, "n must divide q-1");
  if (lambda * q != k * k * (q - 1) / n) return std::nullopt;
  return SrgPrediction{n * (q + 1), k * q, lambda * q, lambda * q};
}

std::optional<IntersectionArray> distance_regular_check(const ColoredDigraph& graph,
                                                        CheckWitness* witness) {
  const std::size_t v = graph.size();
  if (v == 0) fail(Errc::bad_parameters, "empty graph");
  if (!graph.is_symmetric()) fail(Errc::bad_parameters, "distance regularity needs a graph");

  std::vector<std::vector<std::uint32_t>> neighbors(v);
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      if (graph.adj.test(i, j)) neighbors[i].push_back(static_cast<std::uint32_t>(j));
    }
  }

  std::vector<std::int64_t> b_arr, c_arr;
  std::uint32_t diameter = 0;
  std::vector<std::uint32_t> dist(v);
  bool first_vertex = true;
  std::optional<IntersectionArray> result;

  std::vector<std::vector<std::uint32_t>> antipodes(v);

  for (std::size_t root = 0; root < v; ++root) {
    std::fill(dist.begin(), dist.end(), 0xffffffffu);
    std::queue<std::uint32_t> bfs;
    dist[root] = 0;
    bfs.push(static_cast<std::uint32_t>(root));
    std::uint32_t ecc = 0;
    std::size_t reached = 0;
    while (!bfs.empty()) {
      std::uint32_t u = bfs.front();
      bfs.pop();
      ++reached;
      ecc = std::max(ecc, dist[u]);
      for (std::uint32_t w : neighbors[u]) {
        if (dist[w] == 0xffffffffu) {
          dist[w] = dist[u] + 1;
          bfs.push(w);
        }
      }
    }
    if (reached != v) fail(Errc::disconnected, "graph is disconnected");

    if (first_vertex) {
      diameter = ecc;
      b_arr.assign(diameter + 1, -1);
      c_arr.assign(diameter + 1, -1);
      first_vertex = false;
    } else if (ecc != diameter) {
      if (witness) {
        *witness = {static_cast<std::uint32_t>(root), 0, diameter, ecc,
                    "eccentricity differs between vertices"};
      }
      return std::nullopt;
    }

    for (std::size_t u = 0; u < v; ++u) {
      std::uint32_t i = dist[u];
      std::int64_t down = 0, up = 0;
      for (std::uint32_t w : neighbors[u]) {
        if (dist[w] + 1 == i) ++down;
        if (dist[w] == i + 1) ++up;
      }
      auto check = [&](std::int64_t& slot, std::int64_t value, const char* what) {
        if (slot < 0) slot = value;
        if (slot != value) {
          if (witness) {
            *witness = {static_cast<std::uint32_t>(root), static_cast<std::uint32_t>(u),
                        slot, value, what};
          }
          return false;
        }
        return true;
      };
      if (i > 0 && !check(c_arr[i], down, "c_i not constant")) return std::nullopt;
      if (i < diameter && !check(b_arr[i], up, "b_i not constant")) return std::nullopt;
    }

    for (std::size_t u = 0; u < v; ++u) {
      if (dist[u] == diameter) antipodes[root].push_back(static_cast<std::uint32_t>(u));
    }
  }

  IntersectionArray arr;
  arr.diameter = diameter;
  for (std::uint32_t i = 0; i < diameter; ++i) arr.b.push_back(static_cast<std::uint64_t>(b_arr[i]));
  for (std::uint32_t i = 1; i <= diameter; ++i) arr.c.push_back(static_cast<std::uint64_t>(c_arr[i]));

  // Antipodality: u ~ w iff dist(u,w) in {0, diameter} must be an equivalence
  // with classes of one size.
  bool antipodal = diameter >= 1;
  std::size_t class_size = antipodes.empty() ? 0 : antipodes[0].size() + 1;
  for (std::size_t u = 0; u < v && antipodal; ++u) {
    if (antipodes[u].size() + 1 != class_size) {
      antipodal = false;
      break;
    }
    for (std::uint32_t w : antipodes[u]) {
      // The class of u and the class of w must agree.
      std::vector<std::uint32_t> cu{static_cast<std::uint32_t>(u)};
      cu.insert(cu.end(), antipodes[u].begin(), antipodes[u].end());
      std::vector<std::uint32_t> cw{w};
      cw.insert(cw.end(), antipodes[w].begin(), antipodes[w].end());
      std::sort(cu.begin(), cu.end());
      std::sort(cw.begin(), cw.end());
      if (cu != cw) {
        antipodal = false;
        break;
      }
    }
  }
  arr.antipodal = antipodal;
  arr.antipodal_class_size = antipodal ? static_cast<std::uint32_t>(class_size) : 0;
  return arr;
}

}  // namespace schemeforge

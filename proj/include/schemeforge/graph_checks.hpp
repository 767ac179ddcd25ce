#ifndef SCHEMEFORGE_GRAPH_CHECKS_HPP
#define SCHEMEFORGE_GRAPH_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "schemeforge/difference_set.hpp"
#include "schemeforge/digraph.hpp"
#include "schemeforge/omega.hpp"

namespace schemeforge {

inline constexpr std::size_t kExhaustiveVertexCap = 25000;

struct DsrgParams {
  std::uint64_t v = 0, k = 0, t = 0, lambda = 0, mu = 0;
  bool srg = false;  // t == k and symmetric adjacency

  friend bool operator==(const DsrgParams&, const DsrgParams&) = default;
  nlohmann::json to_json() const;
};

struct DdgParams {
  std::uint64_t v = 0, k = 0, lambda1 = 0, lambda2 = 0, m = 0, n = 0;
  bool proper = false;

  friend bool operator==(const DdgParams&, const DdgParams&) = default;
  nlohmann::json to_json() const;
};

struct CheckWitness {
  std::uint32_t a = 0, b = 0;
  std::int64_t count1 = 0, count2 = 0;
  std::string detail;

  nlohmann::json to_json() const;
};

// q-1 == p(p-3)/4 for p prime = 3 mod 4 and q a prime power; when it holds,
// the extension degree of q is necessarily odd (asserted).
bool dsrg_condition(std::uint64_t p, std::uint64_t q);

// Arc set s_g | r_{C_i} with C_i the quadratic-residue classes of Z_p.
// Requires n = p prime = 3 mod 4.
ColoredDigraph build_dsrg(const Omega& omega, int i, std::uint32_t g);

// Directed-2-path counts per ordered pair via bitset popcounts.
std::optional<DsrgParams> verify_dsrg(const ColoredDigraph& graph,
                                      CheckWitness* witness = nullptr);

// Secondary route: full integer A^2 (v <= 500).
std::optional<DsrgParams> verify_dsrg_matrix(const ColoredDigraph& graph);

// Edge set s_D = union of s_g over g in D; vertex classes = lines.
ColoredDigraph build_ddg(const Omega& omega, const DifferenceSet& d);

std::optional<DdgParams> verify_ddg(const ColoredDigraph& graph,
                                    CheckWitness* witness = nullptr);

std::optional<DdgParams> verify_ddg_matrix(const ColoredDigraph& graph);

// Exact check of B_D^2 = kq A_e + lambda*q A_{C#} + k^2 m B_C for a graph
// built from the given Omega and difference set.
bool ddg_square_identity(const Omega& omega, const DifferenceSet& d,
                         const ColoredDigraph& graph);

struct SrgPrediction {
  std::uint64_t v = 0, k = 0, lambda = 0, mu = 0;
};

// lambda*q == k^2(q-1)/n; on success the predicted SRG parameters.
std::optional<SrgPrediction> srg_condition(std::uint64_t q, std::uint64_t n,
                                           std::uint64_t k, std::uint64_t lambda);

struct IntersectionArray {
  std::vector<std::uint64_t> b;  // b_0 .. b_{D-1}
  std::vector<std::uint64_t> c;  // c_1 .. c_D
  std::uint32_t diameter = 0;
  bool antipodal = false;
  std::uint32_t antipodal_class_size = 0;

  nlohmann::json to_json() const;
};

// BFS from every vertex; constant b_i/c_i arrays or nullopt with a witness.
// Throws Disconnected.
std::optional<IntersectionArray> distance_regular_check(const ColoredDigraph& graph,
                                                        CheckWitness* witness = nullptr);

}  // namespace schemeforge

#endif

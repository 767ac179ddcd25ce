#include "schemeforge/scheme.hpp"

#include <algorithm>
#include <random>

#include "schemeforge/util.hpp"

namespace schemeforge {

nlohmann::json SchemeViolation::to_json() const {
  return nlohmann::json{
      {"kind", kind},   {"r", r},     {"s", s},         {"t", t},
      {"pair1", pair1}, {"pair2", pair2}, {"count1", count1},
      {"count2", count2}, {"detail", detail}};
}

nlohmann::json SchemeCertificate::to_json() const {
  nlohmann::json j{
      {"object", "scheme"},
      {"ok", ok},
      {"points", points},
      {"rank", rank},
      {"mode", mode},
  };
  if (ok) {
    j["identity"] = identity;
    j["inverse"] = inverse;
    j["valencies"] = valencies;
    j["commutative"] = commutative;
    j["tensor_hash"] = to_hex(tensor_hash);
  }
  if (violation) j["violation"] = violation->to_json();
  return j;
}

std::uint64_t IntersectionTensor::hash() const {
  return fnv1a64(c_.data(), c_.size() * sizeof(std::int64_t));
}

namespace {

// counts[r*rank+s] = #{gamma : color(a,gamma)=r, color(gamma,b)=s}
void pair_counts(const Scheme& x, std::size_t a, std::size_t b,
                 std::vector<std::int64_t>& counts) {
  const std::size_t v = x.size();
  const std::uint16_t rank = x.rank();
  std::fill(counts.begin(), counts.end(), 0);
  const std::uint16_t* row_a = x.colors().data() + a * v;
  const std::uint16_t* col_b = x.colors().data() + b;  // stride v
  for (std::size_t g = 0; g < v; ++g) {
    counts[static_cast<std::size_t>(row_a[g]) * rank + col_b[g * v]]++;
  }
}

}  // namespace

SchemeCertificate verify_scheme(const Scheme& x, const VerifyOptions& options) {
  SchemeCertificate cert;
  const std::size_t v = x.size();
  const std::uint16_t rank = x.rank();
  cert.points = v;
  cert.rank = rank;

  auto fail_with = [&](SchemeViolation viol) {
    cert.ok = false;
    cert.violation = std::move(viol);
    return cert;
  };

  if (v == 0 || rank == 0) {
    return fail_with({.kind = "partition", .detail = "empty color matrix"});
  }

  // Totality and nonemptiness of every label.
  std::vector<std::uint64_t> label_sizes(rank, 0);
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      std::uint16_t c = x.color(i, j);
      if (c >= rank) {
        SchemeViolation viol;
        viol.kind = "partition";
        viol.pair1 = {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
        viol.detail = "label out of range";
        return fail_with(viol);
      }
      label_sizes[c]++;
    }
  }
  for (std::uint16_t c = 0; c < rank; ++c) {
    if (label_sizes[c] == 0) {
      return fail_with({.kind = "partition", .r = c, .detail = "label never used"});
    }
  }

  // The diagonal must be one dedicated label.
  cert.identity = x.color(0, 0);
  for (std::size_t i = 0; i < v; ++i) {
    if (x.color(i, i) != cert.identity) {
      SchemeViolation viol;
      viol.kind = "identity";
      viol.pair1 = {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i)};
      viol.detail = "diagonal is not a single label";
      return fail_with(viol);
    }
  }
  if (label_sizes[cert.identity] != v) {
    return fail_with({.kind = "identity", .r = cert.identity,
                      .detail = "identity label appears off the diagonal"});
  }

  // Transpose closure: color(j,i) is a function of color(i,j).
  constexpr std::uint16_t kUnset = 0xffff;
  cert.inverse.assign(rank, kUnset);
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      std::uint16_t c = x.color(i, j);
      std::uint16_t ct = x.color(j, i);
      if (cert.inverse[c] == kUnset) {
        cert.inverse[c] = ct;
      } else if (cert.inverse[c] != ct) {
        SchemeViolation viol;
        viol.kind = "inverse";
        viol.r = c;
        viol.pair1 = {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
        viol.detail = "transpose of a label is not a single label";
        return fail_with(viol);
      }
    }
  }

  // Row and column regularity; valency per label.
  cert.valencies.assign(rank, 0);
  {
    std::vector<std::uint64_t> row0(rank, 0), buf(rank, 0);
    for (std::size_t j = 0; j < v; ++j) row0[x.color(0, j)]++;
    for (std::size_t i = 1; i < v; ++i) {
      std::fill(buf.begin(), buf.end(), 0);
      for (std::size_t j = 0; j < v; ++j) buf[x.color(i, j)]++;
      if (buf != row0) {
        for (std::uint16_t c = 0; c < rank; ++c) {
          if (buf[c] != row0[c]) {
            SchemeViolation viol;
            viol.kind = "regularity";
            viol.r = c;
            viol.pair1 = {0, static_cast<std::uint32_t>(i)};
            viol.count1 = static_cast<std::int64_t>(row0[c]);
            viol.count2 = static_cast<std::int64_t>(buf[c]);
            viol.detail = "row degree of a label is not constant";
            return fail_with(viol);
          }
        }
      }
    }
    for (std::uint16_t c = 0; c < rank; ++c) cert.valencies[c] = row0[c];
  }

  // Intersection-number constancy.  Reference pair per label: the row-major
  // first occurrence.
  const bool full = options.force_full || v <= options.sample_threshold;
  cert.mode = full ? "full" : "sampled";

  std::vector<std::size_t> ref_pair(rank, 0);
  {
    std::vector<bool> seen(rank, false);
    std::size_t found = 0;
    for (std::size_t idx = 0; idx < v * v && found < rank; ++idx) {
      std::uint16_t c = x.colors().data()[idx];
      if (!seen[c]) {
        seen[c] = true;
        ref_pair[c] = idx;
        ++found;
      }
    }
  }

  IntersectionTensor tensor(rank);
  {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(rank) * rank, 0);
    for (std::uint16_t t = 0; t < rank; ++t) {
      pair_counts(x, ref_pair[t] / v, ref_pair[t] % v, counts);
      for (std::uint16_t r = 0; r < rank; ++r) {
        for (std::uint16_t s = 0; s < rank; ++s) {
          // c_{rs}^t counts gamma in (alpha)r with (gamma,beta) in s, i.e.
          // gamma in beta s^*; our counts are over color(gamma,beta).
          tensor.c(r, s, t) = counts[static_cast<std::size_t>(r) * rank + s];
        }
      }
    }
  }

  struct RowResult {
    bool bad = false;
    std::uint32_t a = 0, b = 0;
    std::uint16_t r = 0, s = 0, t = 0;
    std::int64_t expect = 0, got = 0;
  };

  if (full) {
    std::vector<RowResult> results(v);
    parallel_for(v, [&](std::size_t a) {
      std::vector<std::int64_t> counts(static_cast<std::size_t>(rank) * rank, 0);
      RowResult& res = results[a];
      for (std::size_t b = 0; b < v; ++b) {
        std::uint16_t t = x.color(a, b);
        pair_counts(x, a, b, counts);
        for (std::size_t rs = 0; rs < counts.size(); ++rs) {
          std::uint16_t r = static_cast<std::uint16_t>(rs / rank);
          std::uint16_t s = static_cast<std::uint16_t>(rs % rank);
          if (counts[rs] != tensor.c(r, s, t)) {
            res.bad = true;
            res.a = static_cast<std::uint32_t>(a);
            res.b = static_cast<std::uint32_t>(b);
            res.r = r;
            res.s = s;
            res.t = t;
            res.expect = tensor.c(r, s, t);
            res.got = counts[rs];
            return;
          }
        }
      }
    });
    for (const RowResult& res : results) {
      if (res.bad) {
        SchemeViolation viol;
        viol.kind = "intersection";
        viol.r = res.r;
        viol.s = res.s;
        viol.t = res.t;
        viol.pair1 = {static_cast<std::uint32_t>(ref_pair[res.t] / v),
                      static_cast<std::uint32_t>(ref_pair[res.t] % v)};
        viol.pair2 = {res.a, res.b};
        viol.count1 = res.expect;
        viol.count2 = res.got;
        viol.detail = "intersection number differs between two pairs of one label";
        return fail_with(viol);
      }
    }
  } else {
    std::mt19937_64 rng(options.seed);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(rank) * rank, 0);
    for (std::uint16_t t = 0; t < rank; ++t) {
      for (int trial = 0; trial < options.samples_per_relation; ++trial) {
        // Sample a row, then a uniform cell of label t inside it.
        std::size_t a = rng() % v;
        std::vector<std::size_t> hits;
        for (std::size_t b = 0; b < v; ++b) {
          if (x.color(a, b) == t) hits.push_back(b);
        }
        if (hits.empty()) continue;  // regularity already certified above
        std::size_t b = hits[rng() % hits.size()];
        pair_counts(x, a, b, counts);
        for (std::size_t rs = 0; rs < counts.size(); ++rs) {
          std::uint16_t r = static_cast<std::uint16_t>(rs / rank);
          std::uint16_t s = static_cast<std::uint16_t>(rs % rank);
          if (counts[rs] != tensor.c(r, s, t)) {
            SchemeViolation viol;
            viol.kind = "intersection";
            viol.r = r;
            viol.s = s;
            viol.t = t;
            viol.pair1 = {static_cast<std::uint32_t>(ref_pair[t] / v),
                          static_cast<std::uint32_t>(ref_pair[t] % v)};
            viol.pair2 = {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
            viol.count1 = tensor.c(r, s, t);
            viol.count2 = counts[rs];
            viol.detail = "intersection number differs (sampled)";
            return fail_with(viol);
          }
        }
      }
    }
  }

  cert.ok = true;
  cert.commutative = is_commutative(tensor);
  cert.tensor_hash = tensor.hash();
  if (options.keep_tensor) cert.tensor = std::move(tensor);
  return cert;
}

IntersectionTensor intersection_numbers(const Scheme& x) {
  VerifyOptions options;
  options.force_full = true;
  SchemeCertificate cert = verify_scheme(x, options);
  if (!cert.ok) {
    fail(Errc::not_a_scheme,
         "intersection numbers requested for a non-scheme (" + cert.violation->kind + ")");
  }
  return std::move(*cert.tensor);
}

bool is_commutative(const IntersectionTensor& tensor) {
  const std::uint16_t rank = tensor.rank();
  for (std::uint16_t r = 0; r < rank; ++r)
    for (std::uint16_t s = 0; s < rank; ++s)
      for (std::uint16_t t = 0; t < rank; ++t)
        if (tensor.c(r, s, t) != tensor.c(s, r, t)) return false;
  return true;
}

ThinRadicalReport thin_radical(const Scheme& x, const SchemeCertificate& cert) {
  ThinRadicalReport report;
  const std::size_t v = x.size();
  for (std::uint16_t c = 0; c < cert.rank; ++c) {
    if (cert.valencies[c] == 1) report.labels.push_back(c);
  }
  const std::size_t k = report.labels.size();
  std::vector<std::uint16_t> pos(cert.rank, 0xffff);
  for (std::size_t i = 0; i < k; ++i) pos[report.labels[i]] = static_cast<std::uint16_t>(i);

  // Permutation of each thin label.
  std::vector<std::vector<std::uint32_t>> perms(k, std::vector<std::uint32_t>(v, 0));
  for (std::size_t li = 0; li < k; ++li) {
    std::uint16_t c = report.labels[li];
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = 0; j < v; ++j) {
        if (x.color(i, j) == c) {
          perms[li][i] = static_cast<std::uint32_t>(j);
          break;
        }
      }
    }
  }

  report.closed = true;
  report.table.assign(k * k, 0);
  for (std::size_t a = 0; a < k && report.closed; ++a) {
    for (std::size_t b = 0; b < k && report.closed; ++b) {
      // relation composition: alpha -> (alpha^a)^b
      std::uint16_t c = x.color(0, perms[b][perms[a][0]]);
      if (pos[c] == 0xffff) {
        report.closed = false;
        break;
      }
      for (std::size_t i = 0; i < v; ++i) {
        if (x.color(i, perms[b][perms[a][i]]) != c) {
          report.closed = false;
          break;
        }
      }
      report.table[a * k + b] = pos[c];
    }
  }

  if (report.closed && k > 0) {
    // Identity and inverses; associativity is inherited from permutation
    // composition once the table is closed and consistent.
    std::uint16_t e = pos[cert.identity];
    bool group = e != 0xffff;
    for (std::size_t a = 0; a < k && group; ++a) {
      bool has_inverse = false;
      for (std::size_t b = 0; b < k; ++b) {
        if (report.table[a * k + b] == e && report.table[b * k + a] == e) has_inverse = true;
      }
      group = group && has_inverse;
    }
    report.is_group = group;
    if (group) {
      for (std::size_t a = 0; a < k; ++a) {
        std::size_t cur = a, order = 1;
        while (cur != e) {
          cur = report.table[cur * k + a];
          ++order;
        }
        if (order == k) {
          report.is_cyclic = true;
          break;
        }
      }
      if (k == 1) report.is_cyclic = true;
    }
  }
  return report;
}

StarGroupReport star_group(const SchemeCertificate& cert) {
  StarGroupReport report;
  if (!cert.ok || !cert.tensor) return report;
  const IntersectionTensor& tensor = *cert.tensor;
  const std::uint16_t rank = cert.rank;

  report.table.assign(static_cast<std::size_t>(rank) * rank, 0);
  for (std::uint16_t a = 0; a < rank; ++a) {
    for (std::uint16_t b = 0; b < rank; ++b) {
      bool thin_factor = cert.valencies[a] == 1 || cert.valencies[b] == 1;
      std::uint16_t result = 0;
      int found = 0;
      for (std::uint16_t t = 0; t < rank; ++t) {
        if (tensor.c(a, b, t) == 0) continue;
        if (!thin_factor && cert.valencies[t] != 1) continue;
        result = t;
        ++found;
      }
      if (found != 1) return report;  // defined stays false
      report.table[a * rank + b] = result;
    }
  }
  report.defined = true;
  report.order = rank;

  const std::uint16_t e = cert.identity;
  bool group = true;
  for (std::uint16_t a = 0; a < rank && group; ++a) {
    bool has_inverse = false;
    for (std::uint16_t b = 0; b < rank; ++b) {
      if (report.table[a * rank + b] == e && report.table[b * rank + a] == e) {
        has_inverse = true;
      }
    }
    group = has_inverse;
  }
  for (std::uint16_t a = 0; a < rank && group; ++a) {
    for (std::uint16_t b = 0; b < rank && group; ++b) {
      for (std::uint16_t c = 0; c < rank; ++c) {
        std::uint16_t ab_c = report.table[report.table[a * rank + b] * rank + c];
        std::uint16_t a_bc = report.table[a * rank + report.table[b * rank + c]];
        if (ab_c != a_bc) {
          group = false;
          break;
        }
      }
    }
  }
  report.is_group = group;
  if (!group) return report;

  // Dihedral shape: the thin labels form a cyclic subgroup of index 2 and
  // every non-thin label is an involution inverting it by conjugation.
  std::vector<std::uint16_t> thin;
  for (std::uint16_t c = 0; c < rank; ++c) {
    if (cert.valencies[c] == 1) thin.push_back(c);
  }
  if (thin.size() * 2 != rank) return report;

  auto star = [&](std::uint16_t u, std::uint16_t w) { return report.table[u * rank + w]; };
  auto order_of = [&](std::uint16_t u) {
    std::uint16_t cur = u;
    std::uint32_t ord = 1;
    while (cur != e) {
      cur = star(cur, u);
      ++ord;
    }
    return ord;
  };
  bool cyclic = false;
  for (std::uint16_t t : thin) {
    if (order_of(t) == thin.size()) cyclic = true;
  }
  if (thin.size() == 1) cyclic = true;
  if (!cyclic) return report;

  for (std::uint16_t s = 0; s < rank; ++s) {
    if (cert.valencies[s] == 1) continue;
    if (star(s, s) != e) return report;
    for (std::uint16_t t : thin) {
      std::uint16_t conj = star(star(s, t), s);
      if (star(conj, t) != e) return report;  // s t s must be t^{-1}
    }
  }
  report.is_dihedral = true;
  return report;
}

namespace {

std::vector<std::int64_t> cyclic_convolve_local(std::uint32_t n,
                                                const std::vector<std::int64_t>& a,
                                                const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(n, 0);
  for (std::uint32_t g = 0; g < n; ++g) {
    if (a[g] == 0) continue;
    for (std::uint32_t h = 0; h < n; ++h) out[(g + h) % n] += a[g] * b[h];
  }
  return out;
}

}  // namespace

IdentityCheck tatra_identity_check(const Omega& omega) {
  const std::size_t v = omega.size();
  const std::uint32_t n = omega.n();
  const std::uint32_t q = omega.q();
  const std::uint32_t m = omega.m();

  std::vector<std::vector<std::uint32_t>> perm(n);
  std::vector<BitMatrix> b(n);
  for (std::uint32_t g = 0; g < n; ++g) {
    perm[g] = omega.thin_permutation(g);
    b[g] = omega.relation_s(g);
  }

  auto fail_check = [](const char* name) { return IdentityCheck{false, name}; };

  // (5) transposes: B_g symmetric, A_g^T = A_{-g}.
  for (std::uint32_t g = 0; g < n; ++g) {
    if (!b[g].is_symmetric()) return fail_check("s_g symmetric");
    for (std::size_t i = 0; i < v; ++i) {
      if (perm[(n - g) % n][perm[g][i]] != i) return fail_check("r_g transpose");
    }
  }

  // (4) valencies.
  for (std::uint32_t g = 0; g < n; ++g) {
    BitMatrix bt = b[g].transposed();
    for (std::size_t i = 0; i < v; ++i) {
      if (b[g].row_popcount(i) != q) return fail_check("s_g out-degree");
      if (bt.row_popcount(i) != q) return fail_check("s_g in-degree");
    }
  }

  // (1) A_h A_g = A_g A_h = A_{h+g} as permutations.
  for (std::uint32_t h = 0; h < n; ++h) {
    for (std::uint32_t g = 0; g < n; ++g) {
      const auto& ph = perm[h];
      const auto& pg = perm[g];
      const auto& phg = perm[(h + g) % n];
      for (std::size_t i = 0; i < v; ++i) {
        if (pg[ph[i]] != phg[i] || ph[pg[i]] != phg[i]) return fail_check("r_h r_g = r_{hg}");
      }
    }
  }

  // (2) A_h B_g = B_{-h+g} and B_g A_h = B_{g+h}.
  for (std::uint32_t h = 0; h < n; ++h) {
    for (std::uint32_t g = 0; g < n; ++g) {
      const BitMatrix& left = b[g];
      const BitMatrix& expect1 = b[(g + n - h) % n];
      for (std::size_t i = 0; i < v; ++i) {
        // row i of A_h B_g is row h*i of B_g
        const std::uint64_t* lhs = left.row(perm[h][i]);
        const std::uint64_t* rhs = expect1.row(i);
        for (std::size_t w = 0; w < left.words_per_row(); ++w) {
          if (lhs[w] != rhs[w]) return fail_check("r_h s_g = s_{-h+g}");
        }
      }
      const BitMatrix& expect2 = b[(g + h) % n];
      const auto& ph_inv = perm[(n - h) % n];
      for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
          if (left.test(i, ph_inv[j]) != expect2.test(i, j)) {
            return fail_check("s_g r_h = s_{g+h}");
          }
        }
      }
    }
  }

  // (3) B_h B_g = q A_{-h+g} + m (J - A_C).
  const std::uint32_t line_size = n;
  for (std::uint32_t h = 0; h < n; ++h) {
    for (std::uint32_t g = 0; g < n; ++g) {
      const auto& p = perm[(g + n - h) % n];
      for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
          // s_g is symmetric (checked above), so row j doubles as column j.
          std::size_t count = b[h].and_popcount(i, b[g], j);
          std::uint64_t expect = 0;
          if (p[i] == j) expect += q;
          if (i / line_size != j / line_size) expect += m;
          if (count != expect) return fail_check("s_h s_g = q r_{-h+g} + m (J - A_C)");
        }
      }
    }
  }

  return IdentityCheck{};
}

bool tatra_linearized_identities(const Omega& omega,
                                 const std::vector<std::int64_t>& xi,
                                 const std::vector<std::int64_t>& eta) {
  const std::size_t v = omega.size();
  const std::uint32_t n = omega.n();
  const std::int64_t q = omega.q();
  const std::int64_t m = omega.m();

  auto reversed = [n](const std::vector<std::int64_t>& a) {
    std::vector<std::int64_t> out(n);
    for (std::uint32_t g = 0; g < n; ++g) out[(n - g) % n] = a[g];
    return out;
  };
  auto augmentation = [n](const std::vector<std::int64_t>& a) {
    std::int64_t s = 0;
    for (std::uint32_t g = 0; g < n; ++g) s += a[g];
    return s;
  };

  using Dense = std::vector<std::int64_t>;
  auto thin_matrix = [&](const std::vector<std::int64_t>& a) {
    Dense out(v * v, 0);
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = 0; j < v; ++j) {
        if (i / n == j / n) out[i * v + j] = a[omega.thin_label(i, j)];
      }
    }
    return out;
  };
  auto form_matrix = [&](const std::vector<std::int64_t>& a) {
    Dense out(v * v, 0);
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = 0; j < v; ++j) {
        int f = omega.form(i, j);
        if (f != Omega::kZeroForm) out[i * v + j] = a[static_cast<std::size_t>(f)];
      }
    }
    return out;
  };
  auto product = [&](const Dense& a, const Dense& b) {
    Dense out(v * v, 0);
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t k = 0; k < v; ++k) {
        std::int64_t aik = a[i * v + k];
        if (aik == 0) continue;
        const std::int64_t* brow = b.data() + k * v;
        std::int64_t* orow = out.data() + i * v;
        for (std::size_t j = 0; j < v; ++j) orow[j] += aik * brow[j];
      }
    }
    return out;
  };

  Dense a_xi = thin_matrix(xi), a_eta = thin_matrix(eta);
  Dense b_xi = form_matrix(xi), b_eta = form_matrix(eta);

  std::vector<std::int64_t> conv = cyclic_convolve_local(n, xi, eta);
  std::vector<std::int64_t> conv_rev = cyclic_convolve_local(n, reversed(xi), eta);

  if (product(a_xi, a_eta) != thin_matrix(conv)) return false;
  if (product(a_xi, b_eta) != form_matrix(conv_rev)) return false;
  if (product(b_eta, a_xi) != form_matrix(conv)) return false;

  Dense lhs = product(b_xi, b_eta);
  Dense expect = thin_matrix(conv_rev);
  for (auto& x : expect) x *= q;
  std::int64_t eps = augmentation(conv_rev) * m;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      if (i / n != j / n) expect[i * v + j] += eps;
    }
  }
  return lhs == expect;
}

}  // namespace schemeforge

#include "operalg/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace operalg {

namespace {

struct TypeInfo {
  std::vector<std::vector<int>> cartan;
  int num_pos;
  std::vector<int> exponents;
  std::string dual;
};

const std::map<std::string, TypeInfo>& type_table() {
  static const std::map<std::string, TypeInfo> table = {
      {"A1", {{{2}}, 1, {1}, "A1"}},
      {"A2", {{{2, -1}, {-1, 2}}, 3, {1, 2}, "A2"}},
      {"A3", {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, 6, {1, 2, 3}, "A3"}},
      {"A4",
       {{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}},
        10,
        {1, 2, 3, 4},
        "A4"}},
      {"B2", {{{2, -2}, {-1, 2}}, 4, {1, 3}, "C2"}},
      {"C2", {{{2, -1}, {-2, 2}}, 4, {1, 3}, "B2"}},
      {"B3",
       {{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}, 9, {1, 3, 5}, "C3"}},
      {"C3",
       {{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}, 9, {1, 3, 5}, "B3"}},
      {"D4",
       {{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}},
        12,
        {1, 3, 3, 5},
        "D4"}},
      {"G2", {{{2, -1}, {-3, 2}}, 6, {1, 5}, "G2"}},
  };
  return table;
}

int vec_height(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

bool height_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  int ha = vec_height(a), hb = vec_height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

RootSystem build_from_cartan(const std::string& label,
                             const std::vector<std::vector<int>>& cartan,
                             int expect_pos, const std::vector<int>& expect_exp) {
  const int n = static_cast<int>(cartan.size());
  RootSystem rs;
  rs.label = label;
  rs.rank = n;
  rs.cartan = cartan;

  // Reflection closure on (root, coroot) pairs. Reflections act on
  // simple-root coordinates a and simple-coroot coordinates b by
  //   s_j(a)_j = a_j - sum_k a_k cartan[k][j],
  //   s_j(b)_j = b_j - sum_k cartan[j][k] b_k.
  using Pair = std::pair<std::vector<int>, std::vector<int>>;
  std::set<Pair> seen;
  std::vector<Pair> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> a(n, 0), b(n, 0);
    a[i] = 1;
    b[i] = 1;
    seen.insert({a, b});
    queue.push_back({a, b});
  }
  std::map<std::vector<int>, std::vector<int>> coroot_of;
  while (!queue.empty()) {
    Pair cur = queue.back();
    queue.pop_back();
    for (int j = 0; j < n; ++j) {
      std::vector<int> a = cur.first, b = cur.second;
      long pa = 0, pb = 0;
      for (int k = 0; k < n; ++k) {
        pa += static_cast<long>(a[k]) * cartan[k][j];
        pb += static_cast<long>(cartan[j][k]) * b[k];
      }
      a[j] -= static_cast<int>(pa);
      b[j] -= static_cast<int>(pb);
      Pair next{a, b};
      if (seen.insert(next).second) queue.push_back(next);
      if (seen.size() > 4096)
        throw InputError("reflection closure does not terminate for " + label);
    }
  }
  for (const auto& [a, b] : seen) {
    bool pos = false, neg = false;
    for (int x : a) {
      if (x > 0) pos = true;
      if (x < 0) neg = true;
    }
    if (pos && neg)
      throw InputError("non-root generated in closure for " + label);
    if (!pos) continue;
    auto it = coroot_of.find(a);
    if (it != coroot_of.end() && it->second != b)
      throw InputError("root/coroot pairing inconsistent for " + label);
    coroot_of[a] = b;
  }
  for (const auto& [a, b] : coroot_of) rs.pos_roots.push_back(a);
  std::sort(rs.pos_roots.begin(), rs.pos_roots.end(), height_lex_less);
  for (const auto& a : rs.pos_roots) rs.pos_coroots.push_back(coroot_of[a]);

  if (rs.num_pos_roots() != expect_pos)
    throw InputError("positive-root count for " + label + " is " +
                     std::to_string(rs.num_pos_roots()) + ", expected " +
                     std::to_string(expect_pos));

  // Exponents: the conjugate partition of the root-height multiplicities
  // (for multiplicity level m, the number of heights attained by at least m
  // roots is one exponent; levels are scanned from the largest down so the
  // list comes out ascending).
  std::map<int, int> by_height;
  for (const auto& a : rs.pos_roots) ++by_height[vec_height(a)];
  int max_mult = 0;
  for (const auto& [h, c] : by_height) max_mult = std::max(max_mult, c);
  std::vector<int> exps;
  for (int m = max_mult; m >= 1; --m) {
    int count = 0;
    for (const auto& [h, c] : by_height)
      if (c >= m) ++count;
    exps.push_back(count);
  }
  rs.exponents = exps;
  if (rs.exponents != expect_exp)
    throw InputError("exponent list mismatch for " + label);
  return rs;
}

}  // namespace

int RootSystem::root_height(int k) const { return vec_height(pos_roots.at(k)); }

int RootSystem::root_index(const std::vector<int>& coords) const {
  for (int k = 0; k < num_pos_roots(); ++k)
    if (pos_roots[k] == coords) return k;
  return -1;
}

int RootSystem::coxeter_number() const { return exponents.back() + 1; }

Weight RootSystem::rho() const { return Weight{std::vector<int>(rank, 1)}; }

Coweight RootSystem::rho_check() const {
  return Coweight{std::vector<int>(rank, 1)};
}

const RootSystem& build_root_system(const std::string& label) {
  static std::map<std::string, RootSystem> cache;
  auto it = cache.find(label);
  if (it != cache.end()) return it->second;
  auto info = type_table().find(label);
  if (info == type_table().end())
    throw InputError("unsupported type label: " + label);
  RootSystem rs = build_from_cartan(label, info->second.cartan,
                                    info->second.num_pos,
                                    info->second.exponents);
  return cache.emplace(label, std::move(rs)).first->second;
}

RootSystem langlands_dual(const RootSystem& rs) {
  auto info = type_table().find(rs.label);
  if (info == type_table().end())
    throw InputError("unsupported type label: " + rs.label);
  const int n = rs.rank;
  std::vector<std::vector<int>> tr(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tr[i][j] = rs.cartan[j][i];
  const TypeInfo& dual_info = type_table().at(info->second.dual);
  return build_from_cartan(info->second.dual, tr, dual_info.num_pos,
                           dual_info.exponents);
}

long pair_root_coweight(const std::vector<int>& root, const Coweight& mu) {
  if (root.size() != mu.coords.size())
    throw InputError("rank mismatch in root/coweight pairing");
  long s = 0;
  for (std::size_t i = 0; i < root.size(); ++i)
    s += static_cast<long>(root[i]) * mu.coords[i];
  return s;
}

long pair_weight_coroot(const Weight& lambda, const std::vector<int>& coroot) {
  if (lambda.coords.size() != coroot.size())
    throw InputError("rank mismatch in weight/coroot pairing");
  long s = 0;
  for (std::size_t j = 0; j < coroot.size(); ++j)
    s += static_cast<long>(lambda.coords[j]) * coroot[j];
  return s;
}

bool is_dominant(const Weight& w) {
  for (int c : w.coords)
    if (c < 0) return false;
  return true;
}

bool is_dominant(const Coweight& w) {
  for (int c : w.coords)
    if (c < 0) return false;
  return true;
}

RatVec coweight_to_coroot_coords(const RootSystem& rs, const RatVec& fund) {
  if (static_cast<int>(fund.size()) != rs.rank)
    throw InputError("rank mismatch in coweight coordinates");
  RatMat a(rs.rank, RatVec(rs.rank, Rat(0)));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) a[i][j] = rs.cartan[i][j];
  auto sol = solve_linear(a, fund);
  if (!sol) throw InputError("Cartan matrix is singular");
  return *sol;
}

RatVec coroot_coords_to_fund(const RootSystem& rs, const RatVec& c) {
  if (static_cast<int>(c.size()) != rs.rank)
    throw InputError("rank mismatch in coroot coordinates");
  RatVec fund(rs.rank, Rat(0));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) fund[i] += Rat(rs.cartan[i][j]) * c[j];
  return fund;
}

namespace {
template <typename T>
std::vector<T> enumerate_dominant(int rank, int bound) {
  std::vector<T> out;
  std::vector<int> cur(rank, 0);
  while (true) {
    out.push_back(T{cur});
    int i = rank - 1;
    while (i >= 0 && cur[i] == bound) {
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}
}  // namespace

std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, int bound) {
  if (bound < 0) throw InputError("negative bound");
  return enumerate_dominant<Weight>(rs.rank, bound);
}

std::vector<Coweight> dominant_coweights_up_to(const RootSystem& rs,
                                               int bound) {
  if (bound < 0) throw InputError("negative bound");
  return enumerate_dominant<Coweight>(rs.rank, bound);
}

bool same_weyl_orbit_coweight(const RootSystem& rs, const RatVec& mu,
                              const RatVec& nu) {
  if (static_cast<int>(mu.size()) != rs.rank ||
      static_cast<int>(nu.size()) != rs.rank)
    throw InputError("rank mismatch in orbit comparison");
  if (mu == nu) return true;
  std::set<RatVec> seen{mu};
  std::vector<RatVec> queue{mu};
  while (!queue.empty()) {
    RatVec cur = queue.back();
    queue.pop_back();
    for (int i = 0; i < rs.rank; ++i) {
      RatVec next = cur;
      // (s_i mu)_j = mu_j - mu_i * cartan[j][i] on fundamental coordinates.
      for (int j = 0; j < rs.rank; ++j)
        next[j] -= cur[i] * Rat(rs.cartan[j][i]);
      if (next == nu) return true;
      if (seen.insert(next).second) queue.push_back(next);
      if (seen.size() > 2000)
        throw InputError("Weyl orbit unexpectedly large");
    }
  }
  return false;
}

}  // namespace operalg

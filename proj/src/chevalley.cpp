#include "operalg/chevalley.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace operalg {

namespace {

RatMat mzero(int n) { return RatMat(n, RatVec(n, Rat(0))); }

RatMat munit(int n, int a, int b) {
  RatMat m = mzero(n);
  m[a][b] = 1;
  return m;
}

RatMat madd(const RatMat& a, const RatMat& b) {
  RatMat out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] += b[i][j];
  return out;
}

RatMat mscale(const Rat& c, const RatMat& a) {
  RatMat out = a;
  for (auto& row : out)
    for (auto& x : row) x *= c;
  return out;
}

RatMat mtranspose(const RatMat& a) {
  std::size_t n = a.size();
  RatMat out = mzero(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j][i] = a[i][j];
  return out;
}

RatMat mbracket(const RatMat& a, const RatMat& b) {
  RatMat ab = mat_mul(a, b);
  RatMat ba = mat_mul(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

bool mis_zero(const RatMat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

struct GenSet {
  int n = 0;                // representation size
  std::vector<RatMat> e, f; // one matrix per simple root
};

GenSet gens_type_a(int rank) {
  GenSet g;
  g.n = rank + 1;
  for (int i = 0; i < rank; ++i) {
    RatMat e = munit(g.n, i, i + 1);
    g.e.push_back(e);
    g.f.push_back(mtranspose(e));
  }
  return g;
}

// Orthogonal presentation of the D4 algebra on an 8-dimensional space; the
// branching node is simple root 1.
GenSet gens_d4() {
  GenSet g;
  g.n = 8;
  auto pair_mat = [&](int a, int b, int c, int d) {
    RatMat m = munit(g.n, a, b);
    m[c][d] -= 1;
    return m;
  };
  g.e.push_back(pair_mat(0, 1, 6, 7));
  g.e.push_back(pair_mat(1, 2, 5, 6));
  g.e.push_back(pair_mat(2, 3, 4, 5));
  g.e.push_back(pair_mat(2, 4, 3, 5));
  for (const RatMat& e : g.e) g.f.push_back(mtranspose(e));
  return g;
}

// Diagram folding: the child generator for an orbit is the sum of the parent
// generators over that orbit.
GenSet fold(const GenSet& parent, const std::vector<std::vector<int>>& orbits) {
  GenSet g;
  g.n = parent.n;
  for (const auto& orbit : orbits) {
    RatMat e = mzero(g.n), f = mzero(g.n);
    for (int i : orbit) {
      e = madd(e, parent.e[static_cast<std::size_t>(i)]);
      f = madd(f, parent.f[static_cast<std::size_t>(i)]);
    }
    g.e.push_back(e);
    g.f.push_back(f);
  }
  return g;
}

GenSet generators_for(const std::string& label) {
  if (label == "A1") return gens_type_a(1);
  if (label == "A2") return gens_type_a(2);
  if (label == "A3") return gens_type_a(3);
  if (label == "A4") return gens_type_a(4);
  if (label == "D4") return gens_d4();
  if (label == "C2") return fold(gens_type_a(3), {{0, 2}, {1}});
  if (label == "B2") return fold(gens_type_a(3), {{1}, {0, 2}});
  if (label == "C3") return fold(gens_type_a(5), {{0, 4}, {1, 3}, {2}});
  if (label == "B3") return fold(gens_d4(), {{0}, {1}, {2, 3}});
  if (label == "G2") return fold(gens_d4(), {{0, 2, 3}, {1}});
  throw InputError("unsupported type label: " + label);
}

std::vector<Rat> vec_of(const RatMat& m) {
  std::vector<Rat> v;
  v.reserve(m.size() * m.size());
  for (const auto& row : m)
    for (const auto& x : row) v.push_back(x);
  return v;
}

}  // namespace

LieBasis::LieBasis(const RootSystem& rs) : rs_(&rs) {
  GenSet gens = generators_for(rs.label);
  rep_n_ = gens.n;
  const int m = num_pos();

  // Raising/lowering matrices per positive root, simple ones straight from
  // the generators, the rest by the minimal-pair recursion in height order.
  std::vector<RatMat> emat(m), fmat(m);
  std::vector<bool> have(m, false);
  for (int i = 0; i < rank(); ++i) {
    std::vector<int> unit(rank(), 0);
    unit[i] = 1;
    int r = rs.root_index(unit);
    if (r < 0) throw InputError("simple root missing from closure");
    emat[r] = gens.e[static_cast<std::size_t>(i)];
    fmat[r] = gens.f[static_cast<std::size_t>(i)];
    have[r] = true;
  }
  for (int r = 0; r < m; ++r) {
    if (have[r]) continue;
    const std::vector<int>& gamma = rs.pos_roots[r];
    bool built = false;
    for (int a = 0; a < m && !built; ++a) {
      std::vector<int> beta(gamma);
      bool ok = true;
      for (int i = 0; i < rank(); ++i) {
        beta[i] -= rs.pos_roots[a][i];
        if (beta[i] < 0) ok = false;
      }
      if (!ok) continue;
      int b = rs.root_index(beta);
      if (b < 0) continue;
      // p = largest k with beta - k*alpha still a root.
      int p = 0;
      std::vector<int> probe = beta;
      while (true) {
        bool nonneg = true;
        for (int i = 0; i < rank(); ++i) {
          probe[i] -= rs.pos_roots[a][i];
          if (probe[i] < 0) nonneg = false;
        }
        if (!nonneg || rs.root_index(probe) < 0) break;
        ++p;
      }
      Rat scale = Rat(1) / Rat(p + 1);
      emat[r] = mscale(scale, mbracket(emat[a], emat[b]));
      fmat[r] = mscale(scale, mbracket(fmat[b], fmat[a]));
      if (mis_zero(emat[r]))
        throw InputError("vanishing raising vector for a root of " + rs.label);
      built = true;
    }
    if (!built)
      throw InputError("no decomposition found for a root of " + rs.label);
  }

  basis_mats_.clear();
  for (int r = 0; r < m; ++r) basis_mats_.push_back(emat[r]);
  for (int r = 0; r < m; ++r) basis_mats_.push_back(fmat[r]);
  for (int i = 0; i < rank(); ++i) {
    std::vector<int> unit(rank(), 0);
    unit[i] = 1;
    int r = rs.root_index(unit);
    basis_mats_.push_back(mbracket(emat[r], fmat[r]));
  }

  // Solve operator: RREF of [B | I] where the columns of B are the basis
  // matrices flattened; the first dim() rows then express coordinates as
  // linear functionals of the flattened input.
  const int nn = rep_n_ * rep_n_;
  RatMat aug(static_cast<std::size_t>(nn),
             RatVec(static_cast<std::size_t>(dim() + nn), Rat(0)));
  for (int j = 0; j < dim(); ++j) {
    std::vector<Rat> col = vec_of(basis_mats_[static_cast<std::size_t>(j)]);
    for (int i = 0; i < nn; ++i) aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < nn; ++i)
    aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(dim() + i)] = 1;
  std::vector<int> pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) < dim())
    throw InputError("basis matrices are linearly dependent for " + rs.label);
  for (int k = 0; k < dim(); ++k)
    if (pivots[static_cast<std::size_t>(k)] != k)
      throw InputError("basis matrices are linearly dependent for " + rs.label);
  solve_rows_.assign(static_cast<std::size_t>(dim()),
                     RatVec(static_cast<std::size_t>(nn), Rat(0)));
  for (int k = 0; k < dim(); ++k)
    for (int i = 0; i < nn; ++i)
      solve_rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
          aug[static_cast<std::size_t>(k)][static_cast<std::size_t>(dim() + i)];

  build_table();
  build_principal();
  validate();
}

LieBasis::Row LieBasis::extract(const RatMat& x) const {
  std::vector<Rat> flat = vec_of(x);
  Row out;
  std::vector<Rat> coords(static_cast<std::size_t>(dim()), Rat(0));
  for (int k = 0; k < dim(); ++k) {
    Rat acc(0);
    const RatVec& row = solve_rows_[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < flat.size(); ++i)
      if (flat[i] != 0 && row[i] != 0) acc += row[i] * flat[i];
    coords[static_cast<std::size_t>(k)] = acc;
    if (acc != 0) out.push_back({k, acc});
  }
  // Confirm the element lies in the span (the representation is closed, so a
  // failure here means the construction itself is broken).
  RatMat recon = mzero(rep_n_);
  for (const auto& [idx, c] : out)
    recon = madd(recon, mscale(c, basis_mats_[static_cast<std::size_t>(idx)]));
  for (int i = 0; i < rep_n_; ++i)
    for (int j = 0; j < rep_n_; ++j)
      if (recon[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        throw InputError("bracket left the spanned subalgebra for " +
                         rs_->label);
  return out;
}

void LieBasis::build_table() {
  table_.assign(static_cast<std::size_t>(dim()),
                std::vector<Row>(static_cast<std::size_t>(dim())));
  for (int a = 0; a < dim(); ++a) {
    for (int b = a; b < dim(); ++b) {
      RatMat br = mbracket(basis_mats_[static_cast<std::size_t>(a)],
                           basis_mats_[static_cast<std::size_t>(b)]);
      Row row = extract(br);
      table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = row;
      Row neg;
      for (const auto& [idx, c] : row) neg.push_back({idx, -c});
      table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = neg;
    }
  }
}

void LieBasis::build_principal() {
  const RootSystem& rs = *rs_;
  const int m = num_pos();

  RatVec ones(static_cast<std::size_t>(rank()), Rat(1));
  RatVec c = coweight_to_coroot_coords(rs, ones);  // rho_check over coroots
  pplus_.assign(static_cast<std::size_t>(m), Rat(0));
  for (int i = 0; i < rank(); ++i) {
    std::vector<int> unit(rank(), 0);
    unit[i] = 1;
    int r = rs.root_index(unit);
    pplus_[static_cast<std::size_t>(r)] = 2 * c[static_cast<std::size_t>(i)];
  }

  // Roots grouped by height.
  int H = rs.exponents.back();
  std::vector<std::vector<int>> by_height(static_cast<std::size_t>(H + 2));
  for (int r = 0; r < m; ++r) {
    int h = rs.root_height(r);
    if (h <= H + 1) by_height[static_cast<std::size_t>(h)].push_back(r);
  }

  // Kernel of ad(p+) per graded piece, in ascending height order.
  slice_.clear();
  for (std::size_t j = 0; j < rs.exponents.size(); ++j) {
    int k = rs.exponents[j];
    if (j > 0 && rs.exponents[j - 1] == k) continue;  // handled below
    const auto& dom = by_height[static_cast<std::size_t>(k)];
    const auto& img = by_height[static_cast<std::size_t>(k + 1)];
    // mat[row][col] = coefficient of e_img[row] in [p+, e_dom[col]].
    RatMat mat(img.size(), RatVec(dom.size(), Rat(0)));
    for (std::size_t col = 0; col < dom.size(); ++col) {
      for (int s = 0; s < m; ++s) {
        if (pplus_[static_cast<std::size_t>(s)] == 0) continue;
        const Row& br = bracket(e_index(s), e_index(dom[col]));
        for (const auto& [idx, cc] : br) {
          for (std::size_t row = 0; row < img.size(); ++row)
            if (idx == e_index(img[row]))
              mat[row][col] += pplus_[static_cast<std::size_t>(s)] * cc;
        }
      }
    }
    RatMat r = mat;
    std::vector<int> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(dom.size(), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    int mult = 0;
    for (int e : rs.exponents)
      if (e == k) ++mult;
    int found = 0;
    for (std::size_t free = 0; free < dom.size(); ++free) {
      if (is_pivot[free]) continue;
      RatVec v(static_cast<std::size_t>(m), Rat(0));
      v[static_cast<std::size_t>(dom[free])] = 1;
      for (std::size_t row = 0; row < pivots.size(); ++row)
        v[static_cast<std::size_t>(dom[static_cast<std::size_t>(
            pivots[row])])] = -r[row][free];
      slice_.push_back(v);
      ++found;
    }
    if (found != mult)
      throw InputError("slice dimension mismatch at height " +
                       std::to_string(k) + " for " + rs.label);
  }

  // Grade data for the reduction: at grade k the square system
  // [slice columns | [e_delta, p-] columns] over the grade-k component.
  grades_.clear();
  for (int k = 0; k <= H; ++k) {
    GradeData gd;
    if (k == 0) {
      for (int i = 0; i < rank(); ++i) gd.basis.push_back(h_index(i));
    } else {
      for (int r : by_height[static_cast<std::size_t>(k)])
        gd.basis.push_back(e_index(r));
    }
    for (std::size_t j = 0; j < rs.exponents.size(); ++j)
      if (rs.exponents[j] == k) gd.slice_cols.push_back(static_cast<int>(j));
    if (k + 1 <= H + 1)
      gd.gauge_roots = by_height[static_cast<std::size_t>(k + 1)];

    const std::size_t nk = gd.basis.size();
    if (gd.slice_cols.size() + gd.gauge_roots.size() != nk)
      throw InputError("graded decomposition is not square at grade " +
                       std::to_string(k) + " for " + rs.label);
    RatMat mat(nk, RatVec(nk, Rat(0)));
    std::size_t col = 0;
    auto coord_in_grade = [&](int basis_idx) -> int {
      for (std::size_t row = 0; row < nk; ++row)
        if (gd.basis[row] == basis_idx) return static_cast<int>(row);
      return -1;
    };
    for (int sc : gd.slice_cols) {
      const RatVec& v = slice_[static_cast<std::size_t>(sc)];
      for (int r = 0; r < m; ++r) {
        if (v[static_cast<std::size_t>(r)] == 0) continue;
        int row = coord_in_grade(e_index(r));
        if (row < 0)
          throw InputError("slice vector escapes its grade for " + rs.label);
        mat[static_cast<std::size_t>(row)][col] = v[static_cast<std::size_t>(r)];
      }
      ++col;
    }
    for (int delta : gd.gauge_roots) {
      // [e_delta, p-] with p- = sum over simple roots of f.
      for (int i = 0; i < rank(); ++i) {
        std::vector<int> unit(rank(), 0);
        unit[i] = 1;
        int fr = rs.root_index(unit);
        const Row& br = bracket(e_index(delta), f_index(fr));
        for (const auto& [idx, cc] : br) {
          int row = coord_in_grade(idx);
          if (row < 0)
            throw InputError("gauge column escapes its grade for " + rs.label);
          mat[static_cast<std::size_t>(row)][col] += cc;
        }
      }
      ++col;
    }
    gd.inverse = mat_inverse(mat);  // throws if the decomposition degenerates
    grades_.push_back(std::move(gd));
  }
}

const LieBasis& LieBasis::get(const std::string& label) {
  static std::map<std::string, std::unique_ptr<LieBasis>> cache;
  auto it = cache.find(label);
  if (it != cache.end()) return *it->second;
  const RootSystem& rs = build_root_system(label);
  auto built = std::make_unique<LieBasis>(rs);
  return *cache.emplace(label, std::move(built)).first->second;
}

int LieBasis::root_of(int idx) const {
  if (is_h(idx)) throw InputError("basis index has no root");
  return is_e(idx) ? idx : idx - num_pos();
}

int LieBasis::height_of(int idx) const {
  if (is_h(idx)) return 0;
  int h = rs_->root_height(root_of(idx));
  return is_e(idx) ? h : -h;
}

std::string LieBasis::label_of(int idx) const {
  std::ostringstream os;
  if (is_h(idx)) {
    os << "h[" << (idx - 2 * num_pos() + 1) << "]";
    return os.str();
  }
  os << (is_e(idx) ? "e[" : "f[");
  const auto& coords = rs_->pos_roots[static_cast<std::size_t>(root_of(idx))];
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i];
  }
  os << "]";
  return os.str();
}

int LieBasis::index_of_label(const std::string& label) const {
  for (int idx = 0; idx < dim(); ++idx)
    if (label_of(idx) == label) return idx;
  throw InputError("unknown basis label: " + label);
}

const LieBasis::Row& LieBasis::bracket(int a, int b) const {
  if (a < 0 || b < 0 || a >= dim() || b >= dim())
    throw InputError("basis index out of range");
  return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

const LieBasis::GradeData& LieBasis::grade_data(int k) const {
  if (k < 0 || k >= static_cast<int>(grades_.size()))
    throw InputError("grade out of range");
  return grades_[static_cast<std::size_t>(k)];
}

namespace {
// Sparse bracket of two rows against a table lookup.
LieBasis::Row bracket_rows(const LieBasis& lb, const LieBasis::Row& x,
                           const LieBasis::Row& y) {
  std::map<int, Rat> acc;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y)
      for (const auto& [k, ck] : lb.bracket(i, j)) acc[k] += ci * cj * ck;
  LieBasis::Row out;
  for (const auto& [k, c] : acc)
    if (c != 0) out.push_back({k, c});
  return out;
}
}  // namespace

void LieBasis::validate() const {
  const RootSystem& rs = *rs_;
  const int m = num_pos();

  // Defining relations on the generators.
  for (int i = 0; i < rank(); ++i) {
    std::vector<int> ui(rank(), 0);
    ui[i] = 1;
    int ri = rs.root_index(ui);
    for (int j = 0; j < rank(); ++j) {
      std::vector<int> uj(rank(), 0);
      uj[j] = 1;
      int rj = rs.root_index(uj);
      // [h_i, h_j] = 0
      if (!bracket(h_index(i), h_index(j)).empty())
        throw InputError("Cartan subalgebra not abelian for " + rs.label);
      // [h_i, e_j] = <alpha_j, coroot_i> e_j
      Row expect{{e_index(rj), Rat(rs.cartan[j][i])}};
      if (Rat(rs.cartan[j][i]) == 0) expect.clear();
      if (bracket(h_index(i), e_index(rj)) != expect)
        throw InputError("[h,e] relation fails for " + rs.label);
      Row expect_f{{f_index(rj), Rat(-rs.cartan[j][i])}};
      if (Rat(rs.cartan[j][i]) == 0) expect_f.clear();
      if (bracket(h_index(i), f_index(rj)) != expect_f)
        throw InputError("[h,f] relation fails for " + rs.label);
      // [e_i, f_j] = delta_ij h_i
      Row expect_ef;
      if (i == j) expect_ef.push_back({h_index(i), Rat(1)});
      if (bracket(e_index(ri), f_index(rj)) != expect_ef)
        throw InputError("[e,f] relation fails for " + rs.label);
      // Serre relation (ad e_i)^{1 - a_ji} e_j = 0 for i != j.
      if (i != j) {
        Row cur{{e_index(rj), Rat(1)}};
        Row ei{{e_index(ri), Rat(1)}};
        int steps = 1 - rs.cartan[j][i];
        for (int s = 0; s < steps; ++s) cur = bracket_rows(*this, ei, cur);
        if (!cur.empty())
          throw InputError("Serre relation fails for " + rs.label);
      }
    }
  }

  // Antisymmetry and integrality of the full table; [e_r, f_r] must equal
  // the coroot computed independently by reflection closure.
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b) {
      const Row& ab = bracket(a, b);
      const Row& ba = bracket(b, a);
      if (ab.size() != ba.size())
        throw InputError("antisymmetry fails for " + rs.label);
      for (std::size_t t = 0; t < ab.size(); ++t)
        if (ab[t].first != ba[t].first || ab[t].second != -ba[t].second)
          throw InputError("antisymmetry fails for " + rs.label);
      for (const auto& [idx, c] : ab)
        if (c.get_den() != 1)
          throw InputError("non-integral structure constant for " + rs.label);
    }
  for (int r = 0; r < m; ++r) {
    std::map<int, Rat> acc;
    for (const auto& [idx, c] : bracket(e_index(r), f_index(r))) acc[idx] = c;
    for (int i = 0; i < rank(); ++i) {
      Rat want(rs.pos_coroots[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]);
      Rat got = acc.count(h_index(i)) ? acc[h_index(i)] : Rat(0);
      acc.erase(h_index(i));
      if (got != want)
        throw InputError("[e,f] does not match the coroot for " + rs.label);
    }
    if (!acc.empty())
      throw InputError("[e,f] leaves the Cartan subalgebra for " + rs.label);
  }

  // Jacobi identity over all basis triples.
  for (int a = 0; a < dim(); ++a)
    for (int b = a + 1; b < dim(); ++b)
      for (int c = b + 1; c < dim(); ++c) {
        std::map<int, Rat> acc;
        auto add3 = [&](int x, int y, int z) {
          // accumulate [x, [y, z]]
          Row xr{{x, Rat(1)}};
          Row res = bracket_rows(*this, xr, bracket(y, z));
          for (const auto& [k, ck] : res) acc[k] += ck;
        };
        add3(a, b, c);
        add3(b, c, a);
        add3(c, a, b);
        for (const auto& [k, ck] : acc)
          if (ck != 0) throw InputError("Jacobi identity fails for " + rs.label);
      }

  // p+ data: (p-, 2 rho_check, p+) is an sl2 triple and the slice vectors
  // centralize p+.
  Row pplus_row, pminus_row, hrow;
  for (int r = 0; r < m; ++r)
    if (pplus_[static_cast<std::size_t>(r)] != 0)
      pplus_row.push_back({e_index(r), pplus_[static_cast<std::size_t>(r)]});
  for (int i = 0; i < rank(); ++i) {
    std::vector<int> unit(rank(), 0);
    unit[i] = 1;
    pminus_row.push_back({f_index(rs.root_index(unit)), Rat(1)});
  }
  RatVec rho_coords = coweight_to_coroot_coords(rs, RatVec(rank(), Rat(1)));
  for (int i = 0; i < rank(); ++i)
    hrow.push_back({h_index(i), 2 * rho_coords[static_cast<std::size_t>(i)]});
  Row comm = bracket_rows(*this, pplus_row, pminus_row);
  std::map<int, Rat> commmap(comm.begin(), comm.end()),
      hmap(hrow.begin(), hrow.end());
  if (commmap != hmap)
    throw InputError("principal sl2 relation [p+, p-] = 2 rho_check fails for " +
                     rs.label);
  for (const RatVec& v : slice_) {
    Row vr;
    for (int r = 0; r < m; ++r)
      if (v[static_cast<std::size_t>(r)] != 0)
        vr.push_back({e_index(r), v[static_cast<std::size_t>(r)]});
    if (!bracket_rows(*this, pplus_row, vr).empty())
      throw InputError("slice vector fails to centralize p+ for " + rs.label);
  }
}

}  // namespace operalg

#pragma once

#include <map>
#include <string>
#include <vector>

#include "operalg/linalg.hpp"
#include "operalg/rootdata.hpp"

namespace operalg {

/// Integral structure-constant basis of the simple Lie algebra of a supported
/// type, together with the principal sl2 data and the graded transversal
/// slice used by the canonical-form algorithm.
///
/// Basis order: raising vectors e_r for each positive root r (height-lex root
/// order), then lowering vectors f_r in the same order, then the coroot
/// generators h_1..h_rank. All structure constants are exact rationals and
/// are validated at construction (defining relations, Serre relations,
/// Jacobi, antisymmetry, integrality on the e/f part, and agreement of
/// [e_r, f_r] with the coroot computed independently by reflection closure).
///
/// Construction is by faithful matrix representations: sl(n+1) for type A,
/// an orthogonal 8x8 presentation for D4, and diagram folding of those for
/// the B, C and G types; raising vectors of non-simple roots come from the
/// minimal-pair recursion e_{a+b} = [e_a, e_b] / (p+1) with p the largest k
/// such that b - k a is still a root.
class LieBasis {
 public:
  /// Sparse Lie-algebra element: list of (basis index, coefficient).
  using Row = std::vector<std::pair<int, Rat>>;

  explicit LieBasis(const RootSystem& rs);

  /// Cached instance per type label.
  static const LieBasis& get(const std::string& label);

  const RootSystem& root_system() const { return *rs_; }
  int rank() const { return rs_->rank; }
  int num_pos() const { return rs_->num_pos_roots(); }
  int dim() const { return 2 * num_pos() + rank(); }

  int e_index(int r) const { return r; }
  int f_index(int r) const { return num_pos() + r; }
  int h_index(int i) const { return 2 * num_pos() + i; }
  bool is_e(int idx) const { return idx < num_pos(); }
  bool is_f(int idx) const { return idx >= num_pos() && idx < 2 * num_pos(); }
  bool is_h(int idx) const { return idx >= 2 * num_pos(); }
  /// Positive-root index of an e- or f-basis vector.
  int root_of(int idx) const;
  /// Principal grading: +height for e, -height for f, 0 for h.
  int height_of(int idx) const;

  std::string label_of(int idx) const;
  int index_of_label(const std::string& label) const;

  /// [x_a, x_b] as a sparse row over the basis.
  const Row& bracket(int a, int b) const;

  /// Coefficients of the principal raising element p+ over the e_r
  /// (supported on simple roots): p+ = sum_r pplus()[r] e_r, normalized so
  /// that (p-, 2 rho_check, p+) is an sl2 triple for p- = sum_i f_{alpha_i}.
  const RatVec& pplus() const { return pplus_; }

  /// Graded transversal slice: slice()[j] spans the kernel of ad(p+) in the
  /// height-exponents()[j] component; coordinates over the e_r.
  const std::vector<RatVec>& slice() const { return slice_; }

  /// Grade data for the canonical-form reduction at grade k (0-based up to
  /// the largest exponent): basis indices spanning the grade, the indices
  /// into slice() landing there, the positive roots of height k+1, and the
  /// exact inverse of the square matrix [slice columns | ad(e_delta)(p-)
  /// columns] over that grade.
  struct GradeData {
    std::vector<int> basis;        // LieBasis indices spanning grade k
    std::vector<int> slice_cols;   // indices into slice()
    std::vector<int> gauge_roots;  // positive-root indices of height k+1
    RatMat inverse;                // square, size basis.size()
  };
  const GradeData& grade_data(int k) const;
  int max_grade() const { return rs_->exponents.back(); }

  /// Re-run the construction self-checks; throws InputError on any failure.
  void validate() const;

 private:
  void build_table();
  void build_principal();
  Row extract(const RatMat& x) const;

  const RootSystem* rs_;
  std::vector<RatMat> basis_mats_;          // matrices per basis index
  std::vector<std::vector<Row>> table_;     // full bracket table
  RatVec pplus_;
  std::vector<RatVec> slice_;
  std::vector<GradeData> grades_;
  // Solve operator: coordinates of a matrix over basis_mats_.
  RatMat solve_rows_;  // dim x N^2
  int rep_n_ = 0;      // representation size N
};

}  // namespace operalg

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affkm/linalg.hpp"
#include "affkm/scalars.hpp"

namespace affkm {

/// Input names a type or rank this library does not construct.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Root as integer coordinates on the simple roots.
using Root = std::vector<int>;

int root_height(const Root& r);
Root negate(const Root& r);
/// "a1", "a122", "-a12": simple indices (1-based) repeated by multiplicity.
std::string root_name(const Root& r);
std::optional<Root> parse_root_name(const std::string& text, int rank);

struct StructureConstant {
  Root alpha;
  Root beta;
  long value;  // [X_alpha, X_beta] = value * X_{alpha+beta}
};

/// Cartan matrix convention: cartan[i][j] = alpha_j(H_i).
struct RootDatum {
  std::string label;  // "A2", "D4", or "TABLE"
  std::vector<std::vector<int>> cartan;
  /// Only for TABLE input; empty means simply-laced cocycle signs.
  std::vector<StructureConstant> constants;
};

RootDatum make_datum(const std::string& label);
RootDatum make_table_datum(std::vector<std::vector<int>> cartan,
                           std::vector<StructureConstant> constants);

/// Simple Lie algebra with a Chevalley basis.
///
/// Basis order: H_1..H_n, then X_alpha for positive roots by height, then the
/// negatives in the same order. Structure constants and the Killing form are
/// integers.
class ChevAlgebra {
 public:
  struct Term {
    std::size_t index;
    long coeff;
  };

  static std::shared_ptr<const ChevAlgebra> build(const RootDatum& datum);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  std::size_t dim() const { return rank_ + roots_.size(); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  const std::vector<Root>& roots() const { return roots_; }
  std::size_t num_positive() const { return roots_.size() / 2; }
  std::optional<std::size_t> root_index(const Root& r) const;
  std::size_t basis_of_root(std::size_t root_idx) const { return rank_ + root_idx; }
  std::optional<std::size_t> basis_of(const Root& r) const;
  bool is_cartan(std::size_t b) const { return b < static_cast<std::size_t>(rank_); }
  /// Root of a root-vector basis element; zero root for Cartan elements.
  Root weight_of(std::size_t b) const;

  /// Coroot H_alpha as coefficients on H_1..H_n.
  const std::vector<Rational>& coroot(std::size_t root_idx) const { return coroots_[root_idx]; }
  /// alpha(H_i) for the i-th simple coroot.
  int pairing(const Root& alpha, int i) const;

  const std::vector<Term>& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  long killing(std::size_t i, std::size_t j) const { return killing_[i * dim() + j]; }

  std::string basis_label(std::size_t b) const;
  std::optional<std::size_t> find_label(const std::string& label) const;

  /// Operations on coordinate vectors over Q(z_m).
  Vec bracket(const Vec& x, const Vec& y) const;
  CycScalar killing(const Vec& x, const Vec& y) const;
  Vec basis_vec(int m, std::size_t b) const;
  /// Matrix of ad(x) in the Chevalley basis.
  Matrix ad(const Vec& x) const;

 private:
  ChevAlgebra() = default;
  void generate_roots();
  void compute_coroots();
  void fill_table(const std::vector<StructureConstant>& constants);
  void compute_killing();

  std::string label_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::map<Root, std::size_t> root_lookup_;
  std::vector<std::vector<Rational>> coroots_;
  std::vector<std::vector<Term>> table_;
  std::vector<long> killing_;
};

using AlgebraPtr = std::shared_ptr<const ChevAlgebra>;

/// Counts of failed identities over all basis pairs/triples.
struct IdentityCheck {
  std::size_t checked = 0;
  std::size_t failures = 0;
};
IdentityCheck check_jacobi(const ChevAlgebra& g);
IdentityCheck check_killing_invariance(const ChevAlgebra& g);

/// Lie algebra automorphism induced by a Dynkin diagram symmetry:
/// X_alpha -> eps_alpha X_{sigma(alpha)}, H_i -> H_{sigma(i)}.
class DiagramAuto {
 public:
  /// perm[i] is the image of simple root i (0-based).
  static std::shared_ptr<const DiagramAuto> build(AlgebraPtr g, std::vector<int> perm);
  static std::shared_ptr<const DiagramAuto> identity(AlgebraPtr g);

  const AlgebraPtr& algebra() const { return g_; }
  const std::vector<int>& perm() const { return perm_; }
  int order() const { return order_; }
  int sign(std::size_t root_idx) const { return signs_[root_idx]; }
  std::size_t root_image(std::size_t root_idx) const { return root_image_[root_idx]; }

  /// Basis image: sigma(b_i) = sign * b_{image}.
  std::size_t basis_image(std::size_t b) const;
  int basis_sign(std::size_t b) const;

  Vec apply(const Vec& x) const;
  Vec apply_inverse(const Vec& x) const;
  Matrix matrix(int m) const;

 private:
  DiagramAuto() = default;

  AlgebraPtr g_;
  std::vector<int> perm_;
  int order_ = 1;
  std::vector<int> signs_;
  std::vector<std::size_t> root_image_;
};

using DiagramPtr = std::shared_ptr<const DiagramAuto>;

/// Bases of g_i = {x : sigma(x) = z^i x}, i = 0..m-1, over Q(z_m).
std::vector<std::vector<Vec>> sigma_eigenspaces(const DiagramAuto& sigma);

struct FixedCartan {
  std::vector<Vec> h0;  // orbit sums of the H_i
  std::vector<Vec> h;   // centralizer of h0 in g
};
FixedCartan cartan_of_fixed(const DiagramAuto& sigma);

/// Joint kernel of ad(t), t in ts, acting on g.
std::vector<Vec> centralizer_in_g(const ChevAlgebra& g, int m, const std::vector<Vec>& ts);

}  // namespace affkm

#include "affkm/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace affkm {

int root_height(const Root& r) {
  int h = 0;
  for (int x : r) h += x;
  return h;
}

Root negate(const Root& r) {
  Root out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = -r[i];
  return out;
}

std::string root_name(const Root& r) {
  bool negative = std::any_of(r.begin(), r.end(), [](int x) { return x < 0; });
  std::string out = negative ? "-a" : "a";
  for (std::size_t i = 0; i < r.size(); ++i) {
    int k = r[i] < 0 ? -r[i] : r[i];
    out.append(static_cast<std::size_t>(k), static_cast<char>('1' + i));
  }
  return out;
}

std::optional<Root> parse_root_name(const std::string& text, int rank) {
  std::size_t pos = 0;
  int sign = 1;
  if (pos < text.size() && text[pos] == '-') {
    sign = -1;
    ++pos;
  }
  if (pos >= text.size() || text[pos] != 'a') return std::nullopt;
  ++pos;
  if (pos == text.size()) {
    if (rank != 1) return std::nullopt;
    return Root{sign};
  }
  Root r(static_cast<std::size_t>(rank), 0);
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return std::nullopt;
    int d = text[pos] - '0';
    if (d < 1 || d > rank) return std::nullopt;
    r[static_cast<std::size_t>(d - 1)] += sign;
  }
  return r;
}

namespace {

std::vector<std::vector<int>> cartan_a(int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

std::vector<std::vector<int>> cartan_d(int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (int i = 0; i + 2 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
  return a;
}

}  // namespace

RootDatum make_datum(const std::string& label) {
  if (label.size() < 2 || !std::isdigit(static_cast<unsigned char>(label[1]))) {
    throw Unsupported("unknown algebra type '" + label + "'");
  }
  char family = label[0];
  int n = 0;
  try {
    n = std::stoi(label.substr(1));
  } catch (const std::exception&) {
    throw Unsupported("unknown algebra type '" + label + "'");
  }
  if (label.substr(1) != std::to_string(n)) throw Unsupported("unknown algebra type '" + label + "'");
  RootDatum d;
  d.label = label;
  if (family == 'A' && n >= 1 && n <= 8) {
    d.cartan = cartan_a(n);
  } else if (family == 'D' && n >= 4 && n <= 8) {
    d.cartan = cartan_d(n);
  } else {
    throw Unsupported("type " + label + " is not supported (A1..A8 and D4..D8 only)");
  }
  return d;
}

RootDatum make_table_datum(std::vector<std::vector<int>> cartan,
                           std::vector<StructureConstant> constants) {
  RootDatum d;
  d.label = "TABLE";
  d.cartan = std::move(cartan);
  d.constants = std::move(constants);
  return d;
}

std::shared_ptr<const ChevAlgebra> ChevAlgebra::build(const RootDatum& datum) {
  const std::size_t n = datum.cartan.size();
  if (n == 0 || n > 9) throw Unsupported("rank must be between 1 and 9");
  for (const auto& row : datum.cartan) {
    if (row.size() != n) throw std::invalid_argument("Cartan matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (datum.cartan[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      int a = datum.cartan[i][j];
      if (a > 0 || (a == 0) != (datum.cartan[j][i] == 0)) {
        throw std::invalid_argument("Cartan matrix entries are inconsistent");
      }
    }
  }
  auto g = std::shared_ptr<ChevAlgebra>(new ChevAlgebra());
  g->label_ = datum.label;
  g->rank_ = static_cast<int>(n);
  g->cartan_ = datum.cartan;
  g->generate_roots();
  g->compute_coroots();
  g->fill_table(datum.constants);
  g->compute_killing();
  if (!datum.constants.empty() && check_jacobi(*g).failures != 0) {
    throw std::invalid_argument("structure-constant table violates the Jacobi identity");
  }
  return g;
}

int ChevAlgebra::pairing(const Root& alpha, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += alpha[j] * cartan_[i][j];
  return s;
}

void ChevAlgebra::generate_roots() {
  const int n = rank_;
  std::set<Root> found;
  std::vector<std::vector<Root>> by_height(2);
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    found.insert(r);
    by_height[1].push_back(r);
  }
  for (std::size_t h = 1; h < by_height.size(); ++h) {
    for (const Root& beta : by_height[h]) {
      for (int i = 0; i < n; ++i) {
        if (h == 1 && beta[i] == 1) continue;
        int p = 0;
        Root down = beta;
        while (true) {
          down[i] -= 1;
          if (!found.count(down)) break;
          ++p;
        }
        int q = p - pairing(beta, i);
        if (q <= 0) continue;
        Root up = beta;
        up[i] += 1;
        if (found.insert(up).second) {
          if (by_height.size() <= h + 1) by_height.emplace_back();
          by_height[h + 1].push_back(up);
        }
      }
    }
    if (found.size() > 400) throw Unsupported("Cartan matrix is not of finite type");
  }
  std::vector<Root> positive;
  for (auto& level : by_height) {
    std::sort(level.begin(), level.end(), std::greater<>());
    positive.insert(positive.end(), level.begin(), level.end());
  }
  roots_ = positive;
  for (const auto& r : positive) roots_.push_back(negate(r));
  for (std::size_t k = 0; k < roots_.size(); ++k) root_lookup_[roots_[k]] = k;
}

void ChevAlgebra::compute_coroots() {
  const int n = rank_;
  // Squared lengths e_i with e_i A_ij = e_j A_ji, fixed by e_0 = 2 on each component.
  std::vector<Rational> e(n, Rational(0));
  for (int start = 0; start < n; ++start) {
    if (e[start] != 0) continue;
    e[start] = 2;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (i == j || cartan_[i][j] == 0) continue;
        Rational ej = e[i] * cartan_[i][j] / cartan_[j][i];
        if (e[j] == 0) {
          e[j] = ej;
          queue.push_back(j);
        } else if (e[j] != ej) {
          throw std::invalid_argument("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  coroots_.clear();
  for (const Root& beta : roots_) {
    Rational norm = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) norm += Rational(beta[i] * beta[j]) * e[i] * cartan_[i][j] / 2;
    std::vector<Rational> h(n);
    for (int j = 0; j < n; ++j) {
      h[j] = Rational(beta[j]) * e[j] / norm;
      h[j].canonicalize();
    }
    coroots_.push_back(std::move(h));
  }
}

namespace {

// Simply-laced cocycle: bimultiplicative, -1 on (a_i, a_i) and on (a_i, a_j) for i < j adjacent.
int cocycle_sign(const Root& a, const Root& b, const std::vector<std::vector<int>>& cartan) {
  long parity = 0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      if (i == j || (i < j && cartan[i][j] != 0)) parity += static_cast<long>(a[i]) * b[j];
    }
  }
  return (parity % 2 == 0) ? 1 : -1;
}

int positivity(const Root& r) { return root_height(r) > 0 ? 1 : -1; }

Root add_roots(const Root& a, const Root& b) {
  Root r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

void ChevAlgebra::fill_table(const std::vector<StructureConstant>& constants) {
  const std::size_t d = dim();
  const std::size_t n = static_cast<std::size_t>(rank_);
  table_.assign(d * d, {});
  bool simply_laced = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && cartan_[i][j] != cartan_[j][i]) simply_laced = false;
  if (constants.empty() && !simply_laced) {
    throw Unsupported("non-simply-laced types need an explicit structure-constant table");
  }

  std::map<std::pair<Root, Root>, long> given;
  for (const auto& sc : constants) {
    if (!root_index(sc.alpha) || !root_index(sc.beta) || !root_index(add_roots(sc.alpha, sc.beta))) {
      throw std::invalid_argument("structure constant " + root_name(sc.alpha) + " " + root_name(sc.beta) +
                                  " does not name a root pair with root sum");
    }
    auto put = [&](const Root& a, const Root& b, long v) {
      auto [it, inserted] = given.emplace(std::make_pair(a, b), v);
      if (!inserted && it->second != v) {
        throw std::invalid_argument("conflicting structure constants for " + root_name(a) + " " + root_name(b));
      }
    };
    put(sc.alpha, sc.beta, sc.value);
    put(sc.beta, sc.alpha, -sc.value);
  }

  for (std::size_t b = n; b < d; ++b) {
    const Root& beta = roots_[b - n];
    for (std::size_t i = 0; i < n; ++i) {
      long v = pairing(beta, static_cast<int>(i));
      if (v == 0) continue;
      table_[i * d + b].push_back({b, v});
      table_[b * d + i].push_back({b, -v});
    }
  }
  for (std::size_t a = n; a < d; ++a) {
    const Root& alpha = roots_[a - n];
    for (std::size_t b = n; b < d; ++b) {
      const Root& beta = roots_[b - n];
      Root sum = add_roots(alpha, beta);
      if (std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; })) {
        const auto& h = coroots_[a - n];
        for (std::size_t i = 0; i < n; ++i) {
          if (h[i] == 0) continue;
          if (h[i].get_den() != 1) throw std::invalid_argument("coroot is not integral");
          table_[a * d + b].push_back({i, h[i].get_num().get_si()});
        }
        continue;
      }
      auto target = root_index(sum);
      if (!target) continue;
      long v = 0;
      if (constants.empty()) {
        v = cocycle_sign(alpha, beta, cartan_) * positivity(alpha) * positivity(beta) * positivity(sum);
      } else {
        auto it = given.find({alpha, beta});
        if (it == given.end()) {
          throw std::invalid_argument("missing structure constant for " + root_name(alpha) + " " +
                                      root_name(beta));
        }
        v = it->second;
      }
      table_[a * d + b].push_back({basis_of_root(*target), v});
    }
  }
}

void ChevAlgebra::compute_killing() {
  const std::size_t d = dim();
  killing_.assign(d * d, 0);
  auto coeff_of = [&](std::size_t i, std::size_t k, std::size_t l) -> long {
    for (const auto& t : bracket(i, k)) {
      if (t.index == l) return t.coeff;
    }
    return 0;
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      long s = 0;
      for (std::size_t l = 0; l < d; ++l) {
        for (const auto& t : bracket(j, l)) s += t.coeff * coeff_of(i, t.index, l);
      }
      killing_[i * d + j] = killing_[j * d + i] = s;
    }
  }
}

std::optional<std::size_t> ChevAlgebra::root_index(const Root& r) const {
  auto it = root_lookup_.find(r);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ChevAlgebra::basis_of(const Root& r) const {
  auto k = root_index(r);
  if (!k) return std::nullopt;
  return basis_of_root(*k);
}

Root ChevAlgebra::weight_of(std::size_t b) const {
  if (is_cartan(b)) return Root(static_cast<std::size_t>(rank_), 0);
  return roots_[b - rank_];
}

std::string ChevAlgebra::basis_label(std::size_t b) const {
  if (is_cartan(b)) return "H_" + std::to_string(b + 1);
  return "X_" + root_name(roots_[b - rank_]);
}

std::optional<std::size_t> ChevAlgebra::find_label(const std::string& label) const {
  if (label == "H" && rank_ == 1) return 0;
  if (label.rfind("H_", 0) == 0) {
    std::string num = label.substr(2);
    if (num.empty() || num.size() > 2 ||
        !std::all_of(num.begin(), num.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      return std::nullopt;
    }
    int i = std::stoi(num);
    if (i < 1 || i > rank_) return std::nullopt;
    return static_cast<std::size_t>(i - 1);
  }
  if (label.rfind("X_", 0) == 0) {
    auto r = parse_root_name(label.substr(2), rank_);
    if (!r) return std::nullopt;
    return basis_of(*r);
  }
  return std::nullopt;
}

Vec ChevAlgebra::bracket(const Vec& x, const Vec& y) const {
  const std::size_t d = dim();
  const int m = x.empty() ? 1 : x[0].order();
  Vec r = zero_vec(m, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = bracket(i, j);
      if (terms.empty()) continue;
      CycScalar xy = x[i] * y[j];
      for (const auto& t : terms) r[t.index] += xy * Rational(t.coeff);
    }
  }
  return r;
}

CycScalar ChevAlgebra::killing(const Vec& x, const Vec& y) const {
  const std::size_t d = dim();
  const int m = x.empty() ? 1 : x[0].order();
  CycScalar s(m);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      long k = killing(i, j);
      if (k != 0 && !y[j].is_zero()) s += x[i] * y[j] * Rational(k);
    }
  }
  return s;
}

Vec ChevAlgebra::basis_vec(int m, std::size_t b) const {
  Vec v = zero_vec(m, dim());
  v[b] = CycScalar(m, 1);
  return v;
}

Matrix ChevAlgebra::ad(const Vec& x) const {
  const std::size_t d = dim();
  const int m = x.empty() ? 1 : x[0].order();
  std::vector<Vec> cols;
  cols.reserve(d);
  for (std::size_t l = 0; l < d; ++l) cols.push_back(bracket(x, basis_vec(m, l)));
  return Matrix::from_columns(m, d, cols);
}

namespace {

using Sparse = std::map<std::size_t, long>;

Sparse sparse_bracket(const ChevAlgebra& g, const Sparse& x, std::size_t b) {
  Sparse r;
  for (const auto& [i, c] : x) {
    for (const auto& t : g.bracket(i, b)) r[t.index] += c * t.coeff;
  }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

Sparse as_sparse(const std::vector<ChevAlgebra::Term>& terms) {
  Sparse r;
  for (const auto& t : terms) r[t.index] += t.coeff;
  return r;
}

}  // namespace

IdentityCheck check_jacobi(const ChevAlgebra& g) {
  IdentityCheck out;
  const std::size_t d = g.dim();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      ++out.checked;
      Sparse ab = as_sparse(g.bracket(a, b));
      Sparse ba = as_sparse(g.bracket(b, a));
      for (auto& [k, v] : ba) ab[k] += v;
      if (std::any_of(ab.begin(), ab.end(), [](const auto& kv) { return kv.second != 0; })) ++out.failures;
    }
  }
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      for (std::size_t c = b + 1; c < d; ++c) {
        ++out.checked;
        Sparse total = sparse_bracket(g, as_sparse(g.bracket(a, b)), c);
        for (const auto& [k, v] : sparse_bracket(g, as_sparse(g.bracket(b, c)), a)) total[k] += v;
        for (const auto& [k, v] : sparse_bracket(g, as_sparse(g.bracket(c, a)), b)) total[k] += v;
        if (std::any_of(total.begin(), total.end(), [](const auto& kv) { return kv.second != 0; })) {
          ++out.failures;
        }
      }
    }
  }
  return out;
}

IdentityCheck check_killing_invariance(const ChevAlgebra& g) {
  IdentityCheck out;
  const std::size_t d = g.dim();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (g.killing(a, b) != g.killing(b, a)) ++out.failures;
      for (std::size_t c = 0; c < d; ++c) {
        ++out.checked;
        long lhs = 0;
        for (const auto& t : g.bracket(a, b)) lhs += t.coeff * g.killing(t.index, c);
        long rhs = 0;
        for (const auto& t : g.bracket(b, c)) rhs += t.coeff * g.killing(a, t.index);
        if (lhs != rhs) ++out.failures;
      }
    }
  }
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < d; ++a) {
    Vec r;
    for (std::size_t b = 0; b < d; ++b) r.emplace_back(1, g.killing(a, b));
    rows.push_back(std::move(r));
  }
  ++out.checked;
  if (span_rank(1, d, rows) != d) ++out.failures;
  return out;
}

std::shared_ptr<const DiagramAuto> DiagramAuto::identity(AlgebraPtr g) {
  std::vector<int> perm(static_cast<std::size_t>(g->rank()));
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  return build(std::move(g), perm);
}

std::shared_ptr<const DiagramAuto> DiagramAuto::build(AlgebraPtr g, std::vector<int> perm) {
  const int n = g->rank();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("diagram permutation has wrong length");
  std::vector<int> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]++) throw std::invalid_argument("diagram map is not a permutation");
  }
  const auto& a = g->cartan();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a[perm[i]][perm[j]] != a[i][j]) throw std::invalid_argument("permutation is not a Dynkin diagram symmetry");

  auto s = std::shared_ptr<DiagramAuto>(new DiagramAuto());
  s->g_ = g;
  s->perm_ = perm;
  const auto& roots = g->roots();
  const std::size_t nr = roots.size();
  s->root_image_.resize(nr);
  for (std::size_t k = 0; k < nr; ++k) {
    Root img(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) img[perm[j]] += roots[k][j];
    auto idx = g->root_index(img);
    if (!idx) throw std::runtime_error("diagram symmetry does not preserve the root system");
    s->root_image_[k] = *idx;
  }

  // Signs: 1 on +-simple roots, then forced by bracket compatibility one height step at a time.
  s->signs_.assign(nr, 0);
  auto n_const = [&](std::size_t ba, std::size_t bb, std::size_t target) -> long {
    for (const auto& t : g->bracket(ba, bb)) {
      if (t.index == target) return t.coeff;
    }
    return 0;
  };
  std::vector<std::size_t> order(nr);
  for (std::size_t k = 0; k < nr; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::abs(root_height(roots[x])) < std::abs(root_height(roots[y]));
  });
  for (std::size_t k : order) {
    const Root& beta = roots[k];
    int h = root_height(beta);
    if (h == 1 || h == -1) {
      s->signs_[k] = 1;
      continue;
    }
    int step = h > 0 ? 1 : -1;
    bool done = false;
    for (int i = 0; i < n && !done; ++i) {
      Root gamma = beta;
      gamma[i] -= step;
      auto gi = g->root_index(gamma);
      if (!gi) continue;
      Root simple(static_cast<std::size_t>(n), 0);
      simple[i] = step;
      std::size_t si = *g->root_index(simple);
      long nb = n_const(g->basis_of_root(*gi), g->basis_of_root(si), g->basis_of_root(k));
      if (nb == 0) continue;
      long ns = n_const(g->basis_of_root(s->root_image_[*gi]), g->basis_of_root(s->root_image_[si]),
                        g->basis_of_root(s->root_image_[k]));
      if (ns == 0 || (ns != nb && ns != -nb)) throw std::runtime_error("sign resolution infeasible");
      s->signs_[k] = s->signs_[*gi] * static_cast<int>(ns / nb);
      done = true;
    }
    if (!done) throw std::runtime_error("sign resolution infeasible");
  }

  // Automorphism check on all basis pairs.
  const std::size_t d = g->dim();
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      Vec lhs = s->apply(g->bracket(g->basis_vec(1, x), g->basis_vec(1, y)));
      Vec rhs = g->bracket(s->apply(g->basis_vec(1, x)), s->apply(g->basis_vec(1, y)));
      if (lhs != rhs) throw std::runtime_error("sign resolution infeasible");
    }
  }

  // Order: smallest k with sigma^k = id on the basis.
  Matrix mat = s->matrix(1);
  Matrix power = mat;
  int order_k = 1;
  while (!(power == Matrix::identity(1, d))) {
    power = power * mat;
    if (++order_k > 6) break;
  }
  if (order_k > 3) throw Unsupported("diagram automorphism order exceeds 3");
  s->order_ = order_k;
  return s;
}

std::size_t DiagramAuto::basis_image(std::size_t b) const {
  if (g_->is_cartan(b)) return static_cast<std::size_t>(perm_[b]);
  return g_->basis_of_root(root_image_[b - g_->rank()]);
}

int DiagramAuto::basis_sign(std::size_t b) const {
  if (g_->is_cartan(b)) return 1;
  return signs_[b - g_->rank()];
}

Vec DiagramAuto::apply(const Vec& x) const {
  const int m = x.empty() ? 1 : x[0].order();
  Vec y = zero_vec(m, x.size());
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (x[b].is_zero()) continue;
    y[basis_image(b)] = basis_sign(b) > 0 ? x[b] : -x[b];
  }
  return y;
}

Vec DiagramAuto::apply_inverse(const Vec& x) const {
  const int m = x.empty() ? 1 : x[0].order();
  Vec y = zero_vec(m, x.size());
  for (std::size_t b = 0; b < x.size(); ++b) {
    const CycScalar& v = x[basis_image(b)];
    if (!v.is_zero()) y[b] = basis_sign(b) > 0 ? v : -v;
  }
  return y;
}

Matrix DiagramAuto::matrix(int m) const {
  const std::size_t d = g_->dim();
  Matrix r(m, d, d);
  for (std::size_t b = 0; b < d; ++b) r(basis_image(b), b) = CycScalar(m, basis_sign(b));
  return r;
}

std::vector<std::vector<Vec>> sigma_eigenspaces(const DiagramAuto& sigma) {
  const int m = sigma.order();
  const std::size_t d = sigma.algebra()->dim();
  Matrix mat = sigma.matrix(m);
  std::vector<std::vector<Vec>> out;
  for (int i = 0; i < m; ++i) {
    Matrix shifted = mat;
    for (std::size_t k = 0; k < d; ++k) shifted(k, k) -= CycScalar::zeta_pow(m, i);
    out.push_back(kernel(shifted));
  }
  return out;
}

std::vector<Vec> centralizer_in_g(const ChevAlgebra& g, int m, const std::vector<Vec>& ts) {
  const std::size_t d = g.dim();
  if (ts.empty()) {
    std::vector<Vec> all;
    for (std::size_t b = 0; b < d; ++b) all.push_back(g.basis_vec(m, b));
    return all;
  }
  Matrix stacked = g.ad(ts[0]);
  for (std::size_t k = 1; k < ts.size(); ++k) stacked = stacked.vcat(g.ad(ts[k]));
  return kernel(stacked);
}

FixedCartan cartan_of_fixed(const DiagramAuto& sigma) {
  const auto& g = *sigma.algebra();
  const int m = sigma.order();
  const int n = g.rank();
  FixedCartan out;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    Vec h = zero_vec(m, g.dim());
    int j = i;
    while (!used[j]) {
      used[j] = true;
      h[j] = CycScalar(m, 1);
      j = sigma.perm()[j];
    }
    out.h0.push_back(std::move(h));
  }
  out.h = centralizer_in_g(g, m, out.h0);
  return out;
}

}  // namespace affkm

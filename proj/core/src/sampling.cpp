#include "affkm/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace affkm {

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  auto span = static_cast<std::uint64_t>(static_cast<long>(hi) - lo + 1);
  return lo + static_cast<int>(next() % span);
}

int Rng::nonzero(int lo, int hi) {
  if (lo == 0 && hi == 0) throw std::invalid_argument("no nonzero value in range");
  while (true) {
    int v = uniform(lo, hi);
    if (v != 0) return v;
  }
}

LoopElt random_loop(const LoopAlgebra& alg, Rng& rng, int lo, int hi, int terms) {
  const int m = alg.order();
  LoopElt x(alg.g_ptr(), m);
  for (int k = 0; k < terms; ++k) {
    int j = rng.uniform(lo, hi);
    const auto& basis = alg.eigenbasis(j);
    if (basis.empty()) continue;
    const Vec& e = basis[rng.index(basis.size())];
    x += CycScalar(m, rng.nonzero(-5, 5)) * LoopElt::from_vec(alg.g_ptr(), e, j);
  }
  return x;
}

AffineElt random_affine(const LoopAlgebra& alg, Rng& rng, int lo, int hi, bool with_c, bool with_d, int terms) {
  const int m = alg.order();
  AffineElt x(random_loop(alg, rng, lo, hi, terms));
  if (x.loop.algebra() == nullptr) x = AffineElt(alg.g_ptr(), m);
  if (with_c) x.c = CycScalar(m, rng.uniform(-5, 5));
  if (with_d) x.d = CycScalar(m, rng.uniform(-5, 5));
  return x;
}

std::vector<std::vector<int>> diagram_symmetries(const ChevAlgebra& g) {
  const int n = g.rank();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  const auto& a = g.cartan();
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) ok = a[perm[i]][perm[j]] == a[i][j];
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

const int kSmallNumerators[] = {1, -1, 2, -2, 3, -3};
const int kSmallDenominators[] = {1, 1, 2, 3};

Rational small_unit(Rng& rng) {
  int num = kSmallNumerators[rng.index(6)];
  int den = kSmallDenominators[rng.index(4)];
  return Rational(num, den);
}

// Orbit representative of each simple root under sigma.
std::vector<int> orbit_rep(const DiagramAuto& s) {
  const int n = static_cast<int>(s.perm().size());
  std::vector<int> rep(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (rep[i] >= 0) continue;
    int j = i;
    while (rep[j] < 0) {
      rep[j] = i;
      j = s.perm()[j];
    }
  }
  return rep;
}

}  // namespace

std::vector<GenKind> generator_kinds(Level level) {
  std::vector<GenKind> kinds = {GenKind::RootExp, GenKind::Diagram, GenKind::Cochar, GenKind::Torus, GenKind::Ring};
  if (level == Level::Hat) kinds.push_back(GenKind::VShift);
  return kinds;
}

AutoGen random_generator(const LoopAlgebra& alg, Rng& rng, GenKind kind) {
  const ChevAlgebra& g = alg.g();
  const int m = alg.order();
  const DiagramAuto& sigma = *alg.sigma();
  const int n = g.rank();
  switch (kind) {
    case GenKind::RootExp: {
      // Roots whose line lies in a single eigenspace g_r: sigma(X_a) = z^r X_a.
      std::vector<std::pair<std::size_t, int>> usable;
      for (std::size_t k = 0; k < g.roots().size(); ++k) {
        if (sigma.root_image(k) != k) continue;
        int eps = sigma.sign(k);
        if (m == 1) {
          usable.emplace_back(k, 0);
        } else if (eps == 1) {
          usable.emplace_back(k, 0);
        } else if (m == 2) {
          usable.emplace_back(k, 1);
        }
      }
      if (usable.empty()) throw std::runtime_error("no root line is stable under sigma");
      auto [k, r] = usable[rng.index(usable.size())];
      int p = r + m * rng.uniform(-1, 1);
      return AutoGen::root_exp(g.roots()[k], Laurent::monomial(p, CycScalar(m, rng.nonzero(-5, 5))));
    }
    case GenKind::Diagram: {
      if (m > 1) return AutoGen::make_diagram(alg.sigma());
      auto syms = diagram_symmetries(g);
      return AutoGen::make_diagram(DiagramAuto::build(alg.sigma()->algebra(), syms[rng.index(syms.size())]));
    }
    case GenKind::Cochar: {
      auto rep = orbit_rep(sigma);
      std::vector<int> phi(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) phi[i] = rep[i] == i ? m * rng.uniform(-1, 1) : phi[rep[i]];
      return AutoGen::cochar(phi);
    }
    case GenKind::Torus: {
      auto rep = orbit_rep(sigma);
      std::vector<CycScalar> t;
      for (int i = 0; i < n; ++i) t.push_back(rep[i] == i ? CycScalar(m, small_unit(rng)) : t[rep[i]]);
      return AutoGen::make_torus(t);
    }
    case GenKind::Ring: {
      CycScalar a(m, small_unit(rng));
      if (m > 1) a *= CycScalar::zeta_pow(m, rng.uniform(0, m - 1));
      int e = (m <= 2 && rng.uniform(0, 1) == 1) ? -1 : 1;
      return AutoGen::ring(a, e);
    }
    case GenKind::VShift:
      return AutoGen::vshift(CycScalar(m, rng.nonzero(-5, 5)));
  }
  throw std::logic_error("unknown generator kind");
}

AutoWord random_word(const LoopAlgebra& alg, Rng& rng, Level level, int max_len) {
  auto kinds = generator_kinds(level);
  AutoWord w;
  w.level = level;
  int len = rng.uniform(1, max_len);
  for (int i = 0; i < len; ++i) w.gens.push_back(random_generator(alg, rng, kinds[rng.index(kinds.size())]));
  return w;
}

}  // namespace affkm

#include <random>

#include "twinrep/analysis.hpp"
#include "twinrep/error.hpp"

namespace twinrep::analysis {

namespace {

using exact::Int;
using exact::Rat;
using la::Matrix;
using la::Vec;

constexpr int kElementBudget = 100;

// rational roots of the characteristic polynomial, by the rational root test
std::vector<Rat> rational_eigenvalues(const Matrix& a) {
  auto coeffs = la::char_poly(a);
  std::vector<Rat> c;
  for (const auto& s : coeffs) c.push_back(s.rational_value());
  Int common = 1;
  for (const auto& q : c) common = boost::multiprecision::lcm(common, denominator(q));
  std::vector<Int> ic;
  for (const auto& q : c) ic.push_back(numerator(q) * (common / denominator(q)));
  std::vector<Rat> roots;
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) low++;
  if (low > 0) roots.push_back(Rat(0));
  if (low >= ic.size() - 1) return roots;
  Int a0 = ic[low] < 0 ? Int(-ic[low]) : ic[low];
  Int an = ic.back() < 0 ? Int(-ic.back()) : ic.back();
  auto divisors = [](const Int& n) {
    std::vector<Int> out;
    for (Int i = 1; i * i <= n; i++)
      if (n % i == 0) {
        out.push_back(i);
        out.push_back(n / i);
      }
    return out;
  };
  auto eval = [&](const Rat& x) {
    Rat acc = 0;
    for (size_t i = ic.size(); i-- > 0;) acc = acc * x + Rat(ic[i]);
    return acc;
  };
  for (const Int& p : divisors(a0))
    for (const Int& q : divisors(an))
      for (int sign : {1, -1}) {
        Rat cand(sign * p, q);
        if (eval(cand) == 0) {
          bool seen = false;
          for (const auto& r : roots) seen |= r == cand;
          if (!seen) roots.push_back(cand);
        }
      }
  return roots;
}

struct SpinBasis {
  std::vector<Vec> rows;  // kept in RREF
  std::vector<size_t> pivots;

  bool insert(Vec v) {  // returns true if v enlarged the span
    for (size_t r = 0; r < rows.size(); r++) {
      const Scalar& c = v[pivots[r]];
      if (c.is_zero()) continue;
      for (size_t j = 0; j < v.size(); j++) v[j] = v[j] - c * rows[r][j];
    }
    size_t lead = 0;
    while (lead < v.size() && v[lead].is_zero()) lead++;
    if (lead == v.size()) return false;
    Scalar inv = v[lead].inverse();
    for (auto& x : v) x = x * inv;
    for (size_t r = 0; r < rows.size(); r++) {
      const Scalar& c = rows[r][lead];
      if (c.is_zero()) continue;
      for (size_t j = 0; j < v.size(); j++) rows[r][j] = rows[r][j] - c * v[j];
    }
    size_t at = 0;
    while (at < pivots.size() && pivots[at] < lead) at++;
    rows.insert(rows.begin() + at, std::move(v));
    pivots.insert(pivots.begin() + at, lead);
    return true;
  }
};

std::vector<Vec> spin(const Vec& seed, const std::vector<Matrix>& gens, size_t m) {
  SpinBasis basis;
  std::vector<Vec> queue{seed};
  basis.insert(seed);
  while (!queue.empty() && basis.rows.size() < m) {
    Vec w = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : gens) {
      Vec u = g.apply(w);
      if (basis.insert(u)) queue.push_back(std::move(u));
    }
  }
  return basis.rows;
}

std::vector<Vec> kernel_rows(std::vector<Vec> rows, size_t ncols) {
  auto pivots = la::rref(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < ncols; f++) {
    if (is_pivot[f]) continue;
    Vec v(ncols);
    v[f] = Scalar::integer(1);
    for (size_t r = 0; r < pivots.size(); r++) v[pivots[r]] = -rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool closed_under(const std::vector<Vec>& subspace, const std::vector<Matrix>& gens) {
  std::vector<Vec> rr = subspace;
  auto pivots = la::rref(rr);
  for (const auto& g : gens)
    for (const auto& b : rr)
      if (!la::in_span(rr, pivots, g.apply(b))) return false;
  return true;
}

std::vector<Vec> annihilator(const std::vector<Vec>& dual_rows, size_t m) {
  return kernel_rows(dual_rows, m);
}

}  // namespace

MeatAxeResult meataxe_irreducible(const reps::Rep& rep, uint64_t seed) {
  auto pres = groups::presentation(rep.tag, rep.n);
  std::vector<Matrix> gens, gens_t;
  for (const auto& g : pres.generators) {
    Matrix img = rep.images.image(g.kind, g.index);
    if (!img.is_constant())
      throw Error("meataxe needs a fully specialized representation");
    gens.push_back(img);
    gens_t.push_back(img.transpose());
  }
  size_t m = rep.dim;
  if (m > 8) throw Error("meataxe covers dimension <= 8");
  if (m == 1) return MeatAxeResult{true, {}, "dimension one"};

  auto reducible = [&](std::vector<Vec> basis, const std::string& how) {
    la::rref(basis);
    if (!closed_under(basis, gens)) throw Error("internal: meataxe certificate not invariant");
    return MeatAxeResult{false, std::move(basis), how};
  };

  // deterministic pass: 1-dimensional submodules are common eigenvectors,
  // and (m-1)-dimensional ones are annihilators of common dual eigenvectors;
  // for m <= 3 this decides outright
  auto eigenline_search = [&](const std::vector<Matrix>& side) -> std::optional<Vec> {
    struct St {
      std::vector<Vec> basis;
    };
    std::vector<St> states;
    {
      St full;
      for (size_t i = 0; i < m; i++) {
        Vec e(m);
        e[i] = Scalar::integer(1);
        full.basis.push_back(std::move(e));
      }
      states.push_back(std::move(full));
    }
    for (const auto& img : side) {
      std::vector<St> next;
      for (auto& st : states) {
        for (const Rat& lambda : rational_eigenvalues(img)) {
          std::vector<Vec> sys(m, Vec(st.basis.size()));
          for (size_t j = 0; j < st.basis.size(); j++) {
            Vec w = img.apply(st.basis[j]);
            for (size_t i = 0; i < m; i++)
              sys[i][j] = w[i] - Scalar::rational(lambda) * st.basis[j][i];
          }
          auto coeffs = kernel_rows(std::move(sys), st.basis.size());
          if (coeffs.empty()) continue;
          St refined;
          for (const auto& cvec : coeffs) {
            Vec v(m);
            for (size_t j = 0; j < st.basis.size(); j++)
              for (size_t i = 0; i < m; i++) v[i] = v[i] + cvec[j] * st.basis[j][i];
            refined.basis.push_back(std::move(v));
          }
          la::rref(refined.basis);
          next.push_back(std::move(refined));
        }
      }
      states = std::move(next);
    }
    for (const auto& st : states)
      if (!st.basis.empty()) return st.basis[0];
    return std::nullopt;
  };

  if (auto line = eigenline_search(gens))
    return reducible({*line}, "common eigenvector");
  if (auto dual = eigenline_search(gens_t)) {
    auto sub = annihilator({*dual}, m);
    return reducible(sub, "annihilator of a common dual eigenvector");
  }
  if (m <= 3)
    return MeatAxeResult{true, {}, "exhaustive eigenline search (dim <= 3)"};

  // Norton phase: spin null vectors of singular algebra elements
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, 3);
  auto random_element = [&]() {
    Matrix acc(m);
    int terms = len(rng);
    for (int t = 0; t < terms; t++) {
      Matrix prod = Matrix::identity(m);
      int factors = len(rng);
      for (int f = 0; f < factors; f++) prod = prod * gens[pick(rng)];
      int c = coeff(rng);
      if (c == 0) c = 1;
      for (size_t i = 0; i < m; i++)
        for (size_t j = 0; j < m; j++)
          acc.at(i, j) = acc.at(i, j) + Scalar::integer(c) * prod.at(i, j);
    }
    return acc;
  };

  for (int trial = 0; trial < kElementBudget; trial++) {
    Matrix z =
        trial < static_cast<int>(gens.size()) ? gens[static_cast<size_t>(trial)] : random_element();
    for (const Rat& lambda : rational_eigenvalues(z)) {
      Matrix theta = z;
      for (size_t i = 0; i < m; i++) theta.at(i, i) = theta.at(i, i) - Scalar::rational(lambda);
      auto nullv = la::null_space(theta);
      if (nullv.empty()) continue;
      bool spun_full = false;
      for (const auto& v : nullv) {
        auto w = spin(v, gens, m);
        if (w.size() < m) return reducible(w, "spin of a null vector");
        spun_full = true;
      }
      if (spun_full && nullv.size() == 1) {
        auto nt = la::null_space(theta.transpose());
        auto wd = spin(nt[0], gens_t, m);
        if (wd.size() < m) {
          auto sub = annihilator(wd, m);
          return reducible(sub, "annihilator of a dual spin");
        }
        return MeatAxeResult{true, {}, "norton criterion (nullity one, both spins full)"};
      }
    }
  }
  throw Error("meataxe inconclusive within the element budget");
}

}  // namespace twinrep::analysis

// Derived complex on the E^1 page.
//
// Steps p = 1..R index the distinct filtration levels. Because the
// differential strictly lowers the level, E^1_{p,k} is spanned by the
// degree-k generators of step p. For each (p,k) the page is split as
//   E^1 = Z^inf + M^{p-1} + ... + M^1,
// with M^r a complement of Z^{r+1} in Z^r, and delta sends m in M^r to the
// H^r-component (along B^r) of eta_{p-r}(d lift(m)) at step p-r.
#include <algorithm>
#include <map>
#include <unordered_map>

#include "toric/errors.hpp"
#include "toric/filtered.hpp"

namespace toric {

using linalg::Matrix;
using linalg::Span;
using linalg::Vec;

namespace {

struct Lifted {
  Vec e1;    // coordinates on the step-p generators
  Vec lift;  // coordinates on all degree-k generators
};

class Builder {
 public:
  explicit Builder(const FilteredComplex& c) : c_(c) {
    levels_ = c.distinct_levels();
    R_ = static_cast<int>(levels_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      int step = static_cast<int>(
          std::lower_bound(levels_.begin(), levels_.end(), c.generator(i).level) -
          levels_.begin()) + 1;
      step_.push_back(step);
    }
  }

  DerivedComplex build();

 private:
  struct Degree {
    std::vector<std::size_t> gens;                   // all generators of the degree
    std::unordered_map<std::size_t, std::size_t> local;
    std::map<int, std::vector<std::size_t>> by_step;  // step -> local indices
  };

  const Degree& degree(int k) {
    auto it = degrees_.find(k);
    if (it != degrees_.end()) return it->second;
    Degree d;
    d.gens = c_.generators_in(k);
    for (std::size_t i = 0; i < d.gens.size(); ++i) {
      d.local[d.gens[i]] = i;
      d.by_step[step_[d.gens[i]]].push_back(i);
    }
    return degrees_.emplace(k, std::move(d)).first->second;
  }

  std::size_t page_size(int p, int k) {
    const auto& d = degree(k);
    auto it = d.by_step.find(p);
    return it == d.by_step.end() ? 0 : it->second.size();
  }

  Vec boundary_of(const Vec& x, int k) {
    const auto& dk = degree(k);
    const auto& dprev = degree(k - 1);
    Vec y(dprev.gens.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j].is_zero()) continue;
      for (const auto& [i, coeff] : c_.boundary(dk.gens[j])) y[dprev.local.at(i)] += coeff * x[j];
    }
    return y;
  }

  Vec eta(const Vec& x, int p, int k) {
    const auto& d = degree(k);
    Vec out;
    if (auto it = d.by_step.find(p); it != d.by_step.end())
      for (auto li : it->second) out.push_back(x[li]);
    return out;
  }

  // Basis of { x in F_p C_k : d x in F_target C_{k-1} }; A^r_{p,k} has target p-r.
  std::vector<Vec> A(int p, int target, int k) {
    p = std::min(p, R_);
    const auto& dk = degree(k);
    const auto& dprev = degree(k - 1);
    std::vector<std::size_t> cols, rows;
    for (std::size_t j = 0; j < dk.gens.size(); ++j)
      if (step_[dk.gens[j]] <= p) cols.push_back(j);
    for (std::size_t i = 0; i < dprev.gens.size(); ++i)
      if (step_[dprev.gens[i]] > target) rows.push_back(i);
    std::unordered_map<std::size_t, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[dprev.gens[rows[i]]] = i;
    Matrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [g, coeff] : c_.boundary(dk.gens[cols[j]]))
        if (auto it = row_of.find(g); it != row_of.end()) m(it->second, j) = coeff;
    std::vector<Vec> out;
    for (const auto& v : linalg::nullspace(m)) {
      Vec full(dk.gens.size());
      for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = v[j];
      out.push_back(std::move(full));
    }
    return out;
  }

  // Z^r_{p,k}: an independent set of eta_p(A^r) together with lifts.
  const std::vector<Lifted>& Z(int p, int r, int k) {
    r = std::min(r, p);
    auto key = std::tuple{p, r, k};
    if (auto it = z_.find(key); it != z_.end()) return it->second;
    std::vector<Lifted> out;
    Span span(page_size(p, k));
    for (auto& x : A(p, p - r, k)) {
      Vec e = eta(x, p, k);
      if (span.insert(e)) out.push_back({std::move(e), std::move(x)});
    }
    return z_.emplace(key, std::move(out)).first->second;
  }

  // B^r_{p,k} = eta_p(d A^{r-1}_{p+r-1,k+1}).
  const std::vector<Vec>& B(int p, int r, int k) {
    r = std::min(r, R_ + 1);
    auto key = std::tuple{p, r, k};
    if (auto it = b_.find(key); it != b_.end()) return it->second;
    std::vector<Vec> out;
    if (r >= 2) {
      Span span(page_size(p, k));
      for (const auto& z : A(p + r - 1, p, k + 1)) {
        Vec e = eta(boundary_of(z, k + 1), p, k);
        if (span.insert(e)) out.push_back(std::move(e));
      }
    }
    return b_.emplace(key, std::move(out)).first->second;
  }

  // Span with B^r accepted first and H^r (complement in Z^r) after it.
  const std::pair<Span, std::size_t>& BH(int p, int r, int k) {
    auto key = std::tuple{p, r, k};
    if (auto it = bh_.find(key); it != bh_.end()) return it->second;
    Span s(page_size(p, k));
    for (const auto& b : B(p, r, k))
      if (!s.insert(b)) throw std::logic_error("B^r basis not independent");
    std::size_t nb = s.dim();
    for (const auto& z : Z(p, r, k)) s.insert(z.e1);
    return bh_.emplace(key, std::pair{std::move(s), nb}).first->second;
  }

  const FilteredComplex& c_;
  std::vector<double> levels_;
  std::vector<int> step_;
  int R_ = 0;
  std::map<int, Degree> degrees_;
  std::map<std::tuple<int, int, int>, std::vector<Lifted>> z_;
  std::map<std::tuple<int, int, int>, std::vector<Vec>> b_;
  std::map<std::tuple<int, int, int>, std::pair<Span, std::size_t>> bh_;
};

DerivedComplex Builder::build() {
  DerivedComplex out;
  out.step_levels = levels_;
  std::vector<FilteredComplex::Chain> delta(c_.size());
  for (int k : c_.degrees()) {
    const auto& dk = degree(k);
    const auto& dprev = degree(k - 1);
    for (const auto& [p, locals] : dk.by_step) {
      const std::size_t n = locals.size();
      PageRecord rec;
      rec.step = p;
      rec.degree = k;
      rec.e1 = n;
      for (int r = 1; r <= p; ++r) {
        rec.z.push_back(Z(p, r, k).size());
        rec.b.push_back(B(p, r, k).size());
        rec.h.push_back(rec.z.back() - rec.b.back());
        rec.m.push_back(r < p ? Z(p, r, k).size() - Z(p, r + 1, k).size() : 0);
      }
      // Basis Z^inf, M^{p-1}, ..., M^1 with the image of each vector.
      std::vector<Vec> basis;
      std::vector<Vec> images;
      Span acc(n);
      for (const auto& z : Z(p, p, k)) {
        acc.insert(z.e1);
        basis.push_back(z.e1);
        images.emplace_back(dprev.gens.size());
      }
      for (int r = p - 1; r >= 1; --r) {
        for (const auto& cand : Z(p, r, k)) {
          if (!acc.insert(cand.e1)) continue;
          basis.push_back(cand.e1);
          Vec target(dprev.gens.size());
          const int q = p - r;
          Vec y = eta(boundary_of(cand.lift, k), q, k - 1);
          const auto& [bh, nb] = BH(q, r, k - 1);
          auto coords = bh.coordinates(y);
          if (!coords) throw std::logic_error("boundary image outside Z^r");
          const auto& qlocals = dprev.by_step.at(q);
          for (std::size_t h = nb; h < coords->size(); ++h) {
            if ((*coords)[h].is_zero()) continue;
            const Vec& hv = bh.accepted()[h];
            for (std::size_t i = 0; i < hv.size(); ++i)
              if (!hv[i].is_zero()) target[qlocals[i]] += (*coords)[h] * hv[i];
          }
          images.push_back(std::move(target));
        }
      }
      if (basis.size() != n) throw std::logic_error("E^1 decomposition has wrong dimension");
      // delta on the standard basis: images * P^{-1}.
      Matrix P(n, n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) P(i, j) = basis[j][i];
      Matrix Pinv = linalg::inverse(P);
      for (std::size_t col = 0; col < n; ++col) {
        Vec v(dprev.gens.size());
        for (std::size_t j = 0; j < n; ++j) {
          if (Pinv(j, col).is_zero()) continue;
          for (std::size_t i = 0; i < v.size(); ++i)
            if (!images[j][i].is_zero()) v[i] += images[j][i] * Pinv(j, col);
        }
        auto& chain = delta[dk.gens[locals[col]]];
        for (std::size_t i = 0; i < v.size(); ++i)
          if (!v[i].is_zero()) chain.emplace_back(dprev.gens[i], v[i]);
      }
      out.pages.push_back(std::move(rec));
    }
  }
  std::vector<FilteredComplex::Generator> gens;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const auto& g = c_.generator(i);
    gens.push_back({g.name, g.degree, static_cast<double>(step_[i])});
  }
  out.complex = FilteredComplex(std::move(gens), std::move(delta));
  return out;
}

}  // namespace

DerivedComplex derived_complex(const FilteredComplex& c) { return Builder(c).build(); }

}  // namespace toric

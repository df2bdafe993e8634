#include "kleinian/fock.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "kleinian/cartan.hpp"
#include "kleinian/parallel.hpp"

namespace kleinian {

FockVector FockVector::basis(const Partition& p, int truncation) {
  if (p.weight() > truncation) throw std::invalid_argument("FockVector: partition above truncation");
  FockVector v;
  v.truncation = truncation;
  v.add(p, 1);
  return v;
}

void FockVector::add(const Partition& p, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = amplitudes.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) amplitudes.erase(it);
  }
}

Integer FockVector::coefficient(const Partition& p) const {
  auto it = amplitudes.find(p);
  return it == amplitudes.end() ? Integer(0) : it->second;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (o.truncation != truncation) throw std::invalid_argument("FockVector: truncation mismatch");
  for (const auto& [p, c] : o.amplitudes) add(p, c);
  truncation_loss = truncation_loss || o.truncation_loss;
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  if (o.truncation != truncation) throw std::invalid_argument("FockVector: truncation mismatch");
  for (const auto& [p, c] : o.amplitudes) add(p, -c);
  truncation_loss = truncation_loss || o.truncation_loss;
  return *this;
}

FockVector FockVector::scaled(const Integer& k) const {
  FockVector out;
  out.truncation = truncation;
  out.truncation_loss = truncation_loss;
  if (k == 0) return out;
  for (const auto& [p, c] : amplitudes) out.amplitudes.emplace(p, c * k);
  return out;
}

namespace {

int label_mod(int c, int r) { return ((c % (r + 1)) + (r + 1)) % (r + 1); }

FockVector diagonal(const FockVector& v, const std::function<int(const Partition&)>& f) {
  FockVector out;
  out.truncation = v.truncation;
  out.truncation_loss = v.truncation_loss;
  for (const auto& [p, c] : v.amplitudes) out.add(p, c * f(p));
  return out;
}

}  // namespace

FockVector apply_e(int c, const FockVector& v, int r) {
  c = label_mod(c, r);
  FockVector out;
  out.truncation = v.truncation;
  out.truncation_loss = v.truncation_loss;
  for (const auto& [p, a] : v.amplitudes)
    for (const auto& cell : p.removable_cells())
      if (cell_label(cell, r) == c) out.add(p.without_cell(cell), a);
  return out;
}

FockVector apply_f(int c, const FockVector& v, int r) {
  c = label_mod(c, r);
  FockVector out;
  out.truncation = v.truncation;
  out.truncation_loss = v.truncation_loss;
  for (const auto& [p, a] : v.amplitudes)
    for (const auto& cell : p.addable_cells()) {
      if (cell_label(cell, r) != c) continue;
      if (p.weight() + 1 > v.truncation) {
        out.truncation_loss = true;
        continue;
      }
      out.add(p.with_cell(cell), a);
    }
  return out;
}

int h_value(const Partition& p, int c, int r) {
  c = label_mod(c, r);
  int h = 0;
  for (const auto& cell : p.addable_cells()) h += cell_label(cell, r) == c ? 1 : 0;
  for (const auto& cell : p.removable_cells()) h -= cell_label(cell, r) == c ? 1 : 0;
  return h;
}

FockVector apply_h(int c, const FockVector& v, int r) {
  return diagonal(v, [&](const Partition& p) { return h_value(p, c, r); });
}

FockVector apply_d(int c, const FockVector& v, int r) {
  const int lc = label_mod(c, r);
  return diagonal(v, [&](const Partition& p) {
    return multiweight(p, r)[static_cast<std::size_t>(lc)];
  });
}

IntSeries graded_trace(int r, int n) {
  IntSeries out = int_series(indexed_variables(r + 1), n);
  for_each_partition(n, [&](const Partition& p) {
    const auto m = multiweight(p, r);
    out.add_term(Exponents(m.begin(), m.end()), 1);
  });
  return out;
}

namespace {

using Op = std::function<FockVector(const FockVector&)>;

struct Check {
  bool ok = true;
  std::optional<FockWitness> witness;

  void require(bool cond, const char* relation, int c, int c2, const Partition& p) {
    if (cond || !ok) {
      ok = ok && cond;
      return;
    }
    ok = false;
    witness = FockWitness{relation, c, c2, p};
  }
};

// (ad x)^k y = sum_i (-1)^i binom(k, i) x^{k-i} y x^i
FockVector ad_power(const Op& x, const Op& y, int k, const FockVector& v) {
  FockVector total;
  total.truncation = v.truncation;
  Integer binom = 1;
  for (int i = 0; i <= k; ++i) {
    FockVector w = v;
    for (int t = 0; t < i; ++t) w = x(w);
    w = y(w);
    for (int t = 0; t < k - i; ++t) w = x(w);
    total += w.scaled(i % 2 == 0 ? binom : Integer(-binom));
    binom = binom * (k - i) / (i + 1);
  }
  return total;
}

}  // namespace

CommutatorReport commutator_report(int r, int n, bool serre) {
  if (r < 0) throw std::invalid_argument("commutator_report: negative rank");
  if (n < 2) throw std::invalid_argument("commutator_report: truncation must be at least 2");
  CommutatorReport rep;
  rep.r = r;
  rep.truncation = n;
  const int labels = r + 1;
  const auto basis = partitions_up_to(n - 1);
  rep.basis_checked = basis.size();

  auto e = [&](int c) -> Op { return [=](const FockVector& v) { return apply_e(c, v, r); }; };
  auto f = [&](int c) -> Op { return [=](const FockVector& v) { return apply_f(c, v, r); }; };

  struct Partial {
    Check ef, grading, h0, hsum;
    int hmin = 0, hmax = 0;
  };
  auto results = parallel_map(basis.size(), [&](std::size_t i) {
    Partial out;
    const Partition& p = basis[i];
    const FockVector v = FockVector::basis(p, n);
    int hs = 0;
    for (int c = 0; c < labels; ++c) {
      const int h = h_value(p, c, r);
      hs += h;
      out.hmin = std::min(out.hmin, h);
      out.hmax = std::max(out.hmax, h);
      const FockVector ev = apply_e(c, v, r);
      const FockVector fv = apply_f(c, v, r);
      for (int c2 = 0; c2 < labels; ++c2) {
        const FockVector comm = apply_e(c, apply_f(c2, v, r), r) - apply_f(c2, ev, r);
        const FockVector expect = c == c2 ? apply_h(c, v, r) : FockVector{n, {}, false};
        out.ef.require(comm == expect && !comm.truncation_loss, "[e_c,f_c']", c, c2, p);
        const FockVector de = apply_e(c, apply_d(c2, v, r), r) - apply_d(c2, ev, r);
        out.grading.require(de == (c == c2 ? ev : FockVector{n, {}, false}), "[e_c,d_c']", c, c2, p);
        const FockVector df = apply_f(c, apply_d(c2, v, r), r) - apply_d(c2, fv, r);
        out.grading.require(df == (c == c2 ? fv.scaled(-1) : FockVector{n, {}, false}), "[f_c,d_c']", c, c2, p);
      }
    }
    out.hsum.require(hs == 1, "sum_c h_c = 1", 0, 0, p);
    if (r == 0) out.h0.require(apply_h(0, v, r) == v, "h_0 = id", 0, 0, p);
    return out;
  });

  Check ef, grading, h0, hsum;
  for (const auto& part : results) {
    for (auto [dst, src] : {std::pair{&ef, &part.ef}, std::pair{&grading, &part.grading}, std::pair{&h0, &part.h0},
                            std::pair{&hsum, &part.hsum}}) {
      if (dst->ok && !src->ok) *dst = *src;
    }
    rep.h_min = std::min(rep.h_min, part.hmin);
    rep.h_max = std::max(rep.h_max, part.hmax);
  }
  rep.ef_relations = ef.ok;
  rep.grading_relations = grading.ok;
  rep.h0_identity = r == 0 && h0.ok;
  rep.h_sum_is_one = hsum.ok;
  for (const Check* c : {&ef, &grading, &hsum, &h0})
    if (!rep.witness && c->witness) rep.witness = c->witness;

  if (serre && r >= 1) {
    const IntMatrix a = [&] {
      const auto d = affine_diagram(Family::A, r);
      IntMatrix m(static_cast<std::size_t>(labels), std::vector<int>(static_cast<std::size_t>(labels), 0));
      for (int i = 0; i < labels; ++i)
        for (int j = 0; j < labels; ++j)
          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              i == j ? 2 : -d.edges[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      return m;
    }();
    Check s;
    for (int c = 0; c < labels && s.ok; ++c)
      for (int c2 = 0; c2 < labels && s.ok; ++c2) {
        if (c == c2) continue;
        const int k = 1 - a[static_cast<std::size_t>(c)][static_cast<std::size_t>(c2)];
        for (const auto& p : partitions_up_to(n)) {
          const FockVector v = FockVector::basis(p, n);
          s.require(ad_power(e(c), e(c2), k, v).is_zero(), "(ad e_c)^k e_c'", c, c2, p);
          if (p.weight() + k + 1 <= n) {
            const FockVector w = ad_power(f(c), f(c2), k, v);
            s.require(w.is_zero() && !w.truncation_loss, "(ad f_c)^k f_c'", c, c2, p);
          }
          if (!s.ok) break;
        }
      }
    rep.serre = s.ok;
    if (!rep.witness && s.witness) rep.witness = s.witness;
  }

  rep.graded_trace = graded_trace(r, n) == formula_Zr(r, n);
  return rep;
}

}  // namespace kleinian

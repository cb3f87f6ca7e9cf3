/**
 * This code is part of qcu.
 *
 * (C) Copyright qcu contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * Any modifications or derivative works of this code must retain this
 * copyright notice, and modified files need to carry a notice indicating
 * that they have been altered from the originals.
 */

#include "qcu/detail/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qcu::detail {

namespace {

// Simplex bookkeeping: vertices kept in an index array sorted by value, and
// the coordinate sum maintained incrementally so each iteration is O(n)
// instead of O(n^2). With objective evaluations only a microsecond each,
// the bookkeeping would otherwise dominate.
struct Simplex {
  std::size_t n;
  std::vector<std::vector<double>> pts;
  std::vector<double> fv;
  std::vector<std::size_t> order; // ascending by fv
  std::vector<double> coord_sum;  // over all n+1 vertices

  void reorder() {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
  }

  void recompute_sum() {
    std::fill(coord_sum.begin(), coord_sum.end(), 0.0);
    for (const auto& p : pts) {
      for (std::size_t j = 0; j < n; ++j) coord_sum[j] += p[j];
    }
  }

  // Replace the current worst vertex and re-rank it.
  void replace_worst(const std::vector<double>& x, double f) {
    const std::size_t w = order[n];
    for (std::size_t j = 0; j < n; ++j) {
      coord_sum[j] += x[j] - pts[w][j];
    }
    pts[w] = x;
    fv[w] = f;
    std::size_t pos = n;
    while (pos > 0 && fv[order[pos - 1]] > f) {
      order[pos] = order[pos - 1];
      --pos;
    }
    order[pos] = w;
  }
};

} // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> x0,
                             const NelderMeadOptions& opts) {
  const std::size_t n = x0.size();
  const double nd = static_cast<double>(n);

  // Gao-Han adaptive coefficients; noticeably better than the classic set
  // once the dimension passes ~10.
  const double refl = 1.0;
  const double expa = 1.0 + 2.0 / nd;
  const double contr = 0.75 - 1.0 / (2.0 * nd);
  const double shrink = 1.0 - 1.0 / nd;

  Simplex s;
  s.n = n;
  s.pts.assign(n + 1, std::vector<double>(x0.begin(), x0.end()));
  s.fv.resize(n + 1);
  s.order.resize(n + 1);
  s.coord_sum.assign(n, 0.0);

  int evals = 0;
  const auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(std::span<const double>(x.data(), x.size()));
  };

  for (std::size_t i = 1; i <= n; ++i) s.pts[i][i - 1] += opts.init_step;
  for (std::size_t i = 0; i <= n; ++i) s.fv[i] = eval(s.pts[i]);
  s.reorder();
  s.recompute_sum();

  std::vector<double> centroid(n), xr(n), xe(n), xc(n);

  while (evals < opts.max_evals) {
    const std::size_t best = s.order[0];
    const std::size_t worst = s.order[n];
    const std::size_t second_worst = s.order[n - 1];

    if (s.fv[worst] - s.fv[best] < opts.f_tol) break;

    double extent = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      extent = std::max(extent,
                        std::abs(s.pts[worst][j] - s.pts[best][j]));
    }
    if (extent < opts.x_tol) break;

    for (std::size_t j = 0; j < n; ++j) {
      centroid[j] = (s.coord_sum[j] - s.pts[worst][j]) / nd;
    }

    for (std::size_t j = 0; j < n; ++j) {
      xr[j] = centroid[j] + refl * (centroid[j] - s.pts[worst][j]);
    }
    const double fr = eval(xr);

    if (fr < s.fv[best]) {
      for (std::size_t j = 0; j < n; ++j) {
        xe[j] = centroid[j] + expa * (xr[j] - centroid[j]);
      }
      const double fe = eval(xe);
      if (fe < fr) {
        s.replace_worst(xe, fe);
      } else {
        s.replace_worst(xr, fr);
      }
    } else if (fr < s.fv[second_worst]) {
      s.replace_worst(xr, fr);
    } else {
      const bool outside = fr < s.fv[worst];
      if (outside) {
        for (std::size_t j = 0; j < n; ++j) {
          xc[j] = centroid[j] + contr * (xr[j] - centroid[j]);
        }
      } else {
        for (std::size_t j = 0; j < n; ++j) {
          xc[j] = centroid[j] - contr * (xr[j] - centroid[j]);
        }
      }
      const double fc = eval(xc);
      if (fc < std::min(fr, s.fv[worst])) {
        s.replace_worst(xc, fc);
      } else {
        const std::size_t b = s.order[0];
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == b) continue;
          for (std::size_t j = 0; j < n; ++j) {
            s.pts[i][j] = s.pts[b][j] + shrink * (s.pts[i][j] - s.pts[b][j]);
          }
          s.fv[i] = eval(s.pts[i]);
          if (evals >= opts.max_evals) break;
        }
        s.reorder();
        s.recompute_sum();
      }
    }
  }

  const std::size_t best = s.order[0];
  return {s.pts[best], s.fv[best], evals};
}

} // namespace qcu::detail

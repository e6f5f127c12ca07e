#ifndef ORTHO_ENSEMBLE_HPP
#define ORTHO_ENSEMBLE_HPP

#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ortho/motion.hpp"

namespace ortho {

/// Square histogram over the rotated coordinates xi = x+y, eta = x-y on
/// (-range, range)^2, so bins never straddle the singular boundary lines.
struct Histogram2D {
  double range = 0.0;
  int bins = 0;
  std::vector<std::int64_t> counts;  // row-major, xi index major

  void init(double r, int b) {
    range = r;
    bins = b;
    counts.assign(static_cast<std::size_t>(b) * b, 0);
  }
  void add(double xi, double eta) {
    const double w = 2.0 * range / bins;
    int ix = static_cast<int>((xi + range) / w);
    int ie = static_cast<int>((eta + range) / w);
    ix = std::min(std::max(ix, 0), bins - 1);
    ie = std::min(std::max(ie, 0), bins - 1);
    counts[static_cast<std::size_t>(ix) * bins + ie] += 1;
  }
};

/// Rectangular grid of characteristic-function evaluation points, the outer
/// product of the two axis vectors.
struct CfGrid {
  std::vector<double> alphas;
  std::vector<double> betas;
  std::size_t size() const { return alphas.size() * betas.size(); }
};

struct EnsembleOptions {
  bool decomposed = false;          // which sampler produces the points
  bool collect_occupation = true;   // direct sampler only
  bool collect_histogram = true;    // direct sampler only
  int histogram_bins = 64;
  CfGrid cf_grid;
  unsigned workers = 0;             // 0 = hardware concurrency
};

/// Ensemble statistics. Everything here is reproducible from (seed, n_paths)
/// alone: each path uses its own derived stream and floating-point partial
/// sums are merged in fixed chunk order, independent of the worker count.
struct EnsembleSummary {
  std::uint64_t n_paths = 0;
  std::uint64_t seed = 0;
  std::array<std::int64_t, 4> side_counts{};
  std::array<std::int64_t, 4> vertex_counts{};
  std::int64_t interior_count = 0;
  std::int64_t support_violations = 0;
  Histogram2D binned_counts;
  std::vector<double> occupation_samples;
  CfGrid cf_grid;
  std::vector<std::complex<double>> empirical_cf_grid;
  double sum_x = 0.0, sum_y = 0.0;
  double sum_xx = 0.0, sum_yy = 0.0, sum_xy = 0.0;
  double sum_x4 = 0.0;

  double mean_x() const { return sum_x / static_cast<double>(n_paths); }
  double mean_y() const { return sum_y / static_cast<double>(n_paths); }
  double var_x() const {
    const double m = mean_x();
    return sum_xx / static_cast<double>(n_paths) - m * m;
  }
  double var_y() const {
    const double m = mean_y();
    return sum_yy / static_cast<double>(n_paths) - m * m;
  }
  double cov_xy() const {
    return sum_xy / static_cast<double>(n_paths) - mean_x() * mean_y();
  }
  double correlation() const {
    return cov_xy() / std::sqrt(var_x() * var_y());
  }
  /// Standard error of var_x() from the sample fourth moment.
  double var_x_std_error() const {
    const double n = static_cast<double>(n_paths);
    const double m4 = sum_x4 / n;
    const double v = var_x();
    return std::sqrt(std::max(m4 - v * v, 0.0) / n);
  }
};

namespace ensemble_detail {

struct ChunkPartial {
  std::array<std::int64_t, 4> side{};
  std::array<std::int64_t, 4> vertex{};
  std::int64_t interior = 0;
  std::int64_t violations = 0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0, sx4 = 0.0;
  std::vector<std::complex<double>> cf;
};

}  // namespace ensemble_detail

inline EnsembleSummary run_ensemble(const ModelParams& m, double t,
                                    std::uint64_t n_paths, std::uint64_t seed,
                                    const EnsembleOptions& opt) {
  validate(m);
  if (!(t > 0.0) || n_paths == 0) {
    throw std::domain_error("run_ensemble: need t > 0 and n_paths >= 1");
  }
  constexpr std::uint64_t kChunk = 8192;
  const std::uint64_t n_chunks = (n_paths + kChunk - 1) / kChunk;
  const std::size_t cf_size = opt.cf_grid.size();
  const bool direct = !opt.decomposed;
  const bool want_occupation = direct && opt.collect_occupation;
  const bool want_hist = direct && opt.collect_histogram;

  EnsembleSummary out;
  out.n_paths = n_paths;
  out.seed = seed;
  out.cf_grid = opt.cf_grid;
  if (want_hist) out.binned_counts.init(m.c * t, opt.histogram_bins);
  if (want_occupation) out.occupation_samples.resize(n_paths);

  std::vector<ensemble_detail::ChunkPartial> partials(n_chunks);
  for (auto& p : partials) p.cf.assign(cf_size, {0.0, 0.0});

  unsigned workers = opt.workers ? opt.workers
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, n_chunks));

  std::vector<Histogram2D> thread_hists(want_hist ? workers : 0);
  for (auto& h : thread_hists) h.init(m.c * t, opt.histogram_bins);

  std::atomic<std::uint64_t> next_chunk{0};
  const double ct_tol = m.c * t * (1.0 + 1e-12);

  auto work = [&](unsigned worker_id) {
    PathSample path;
    std::vector<std::complex<double>> ea(opt.cf_grid.alphas.size());
    std::vector<std::complex<double>> eb(opt.cf_grid.betas.size());
    for (;;) {
      const std::uint64_t chunk = next_chunk.fetch_add(1);
      if (chunk >= n_chunks) break;
      auto& part = partials[chunk];
      const std::uint64_t lo = chunk * kChunk;
      const std::uint64_t hi = std::min(n_paths, lo + kChunk);
      for (std::uint64_t i = lo; i < hi; ++i) {
        RngStream rng(seed, i);
        PlanarPoint pt{};
        if (direct) {
          sample_path_into(m, t, rng, path);
          pt = position_at(path, m, t);
          const BoundaryClass cls = classify_boundary(path);
          switch (cls.kind) {
            case BoundaryClass::interior:
              ++part.interior;
              if (want_hist) thread_hists[worker_id].add(pt.x + pt.y, pt.x - pt.y);
              break;
            case BoundaryClass::side:
              ++part.side[cls.index];
              break;
            case BoundaryClass::vertex:
              ++part.vertex[cls.index];
              break;
          }
          if (want_occupation) {
            out.occupation_samples[i] = occupation_vertical(path);
          }
        } else {
          pt = sample_planar_decomposed(m, t, rng);
        }
        if (std::abs(pt.x + pt.y) > ct_tol || std::abs(pt.x - pt.y) > ct_tol) {
          ++part.violations;
        }
        part.sx += pt.x;
        part.sy += pt.y;
        part.sxx += pt.x * pt.x;
        part.syy += pt.y * pt.y;
        part.sxy += pt.x * pt.y;
        part.sx4 += pt.x * pt.x * pt.x * pt.x;
        if (cf_size != 0) {
          for (std::size_t a = 0; a < ea.size(); ++a) {
            const double phi = opt.cf_grid.alphas[a] * pt.x;
            ea[a] = {std::cos(phi), std::sin(phi)};
          }
          for (std::size_t b = 0; b < eb.size(); ++b) {
            const double phi = opt.cf_grid.betas[b] * pt.y;
            eb[b] = {std::cos(phi), std::sin(phi)};
          }
          std::size_t idx = 0;
          for (std::size_t a = 0; a < ea.size(); ++a) {
            for (std::size_t b = 0; b < eb.size(); ++b) {
              part.cf[idx++] += ea[a] * eb[b];
            }
          }
        }
      }
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  out.empirical_cf_grid.assign(cf_size, {0.0, 0.0});
  for (const auto& part : partials) {  // fixed chunk order
    for (int k = 0; k < 4; ++k) {
      out.side_counts[k] += part.side[k];
      out.vertex_counts[k] += part.vertex[k];
    }
    out.interior_count += part.interior;
    out.support_violations += part.violations;
    out.sum_x += part.sx;
    out.sum_y += part.sy;
    out.sum_xx += part.sxx;
    out.sum_yy += part.syy;
    out.sum_xy += part.sxy;
    out.sum_x4 += part.sx4;
    for (std::size_t k = 0; k < cf_size; ++k) {
      out.empirical_cf_grid[k] += part.cf[k];
    }
  }
  for (auto& v : out.empirical_cf_grid) {
    v /= static_cast<double>(n_paths);
  }
  for (const auto& h : thread_hists) {  // integer sums, order-free
    for (std::size_t k = 0; k < h.counts.size(); ++k) {
      out.binned_counts.counts[k] += h.counts[k];
    }
  }

  if (direct) {
    std::int64_t total = out.interior_count;
    for (int k = 0; k < 4; ++k) {
      total += out.side_counts[k] + out.vertex_counts[k];
    }
    if (total != static_cast<std::int64_t>(n_paths)) {
      throw std::logic_error("run_ensemble: tally conservation violated");
    }
  }
  return out;
}

}  // namespace ortho

#endif  // ORTHO_ENSEMBLE_HPP

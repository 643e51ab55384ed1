#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <thread>

#include "toric/errors.hpp"
#include "toric/torus_map.hpp"

namespace toric::torus {

namespace {

constexpr std::size_t kBlock = 250;
constexpr double kTwoPi = 2 * std::numbers::pi;

std::mt19937_64 block_rng(std::uint64_t seed, std::size_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), 0x746f7275u};
  return std::mt19937_64(seq);
}

// Runs fn(block, begin, end) for every block of [0, n); block contents are
// independent of the number of workers.
template <class Fn>
void for_blocks(std::size_t n, unsigned workers, Fn fn) {
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(blocks, 1))));
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t b = w; b < blocks; b += workers)
        fn(b, b * kBlock, std::min(n, (b + 1) * kBlock));
    });
  }
}

C2Point polar(double w2, double theta, double z2, double phi) {
  return {std::polar(std::sqrt(w2), theta), std::polar(std::sqrt(z2), phi)};
}

double pair_residual(const SpherePair& p) {
  return std::max(p.v.norm_residual(), p.w.norm_residual());
}

}  // namespace

bool PhiVerifyReport::pass(const Tolerances& tol) const {
  return max_unit_norm < tol.unit_norm && max_moment < tol.agreement &&
         max_agreement < tol.agreement && max_flow_conservation < tol.agreement;
}

PhiVerifyReport verify_phi(std::size_t samples, std::uint64_t seed, const Tolerances&,
                           unsigned workers) {
  const std::size_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<PhiVerifyReport> partial(blocks);
  for_blocks(samples, workers, [&](std::size_t b, std::size_t begin, std::size_t end) {
    auto rng = block_rng(seed, b);
    std::uniform_real_distribution<double> ux(0, 2), uy(0, 4), angle(0, kTwoPi), ut(-kTwoPi, kTwoPi);
    PhiVerifyReport& r = partial[b];
    for (std::size_t i = begin; i < end; ++i) {
      double x, y;
      do {
        x = ux(rng);
        y = uy(rng);
      } while (!(x / 2 + y / 4 < 1 && 2 * x <= 4 - 1e-6));
      const C2Point p = polar(2 * x, angle(rng), 2 * y, angle(rng));
      const SpherePair a = phi_flow(p), c = phi_closed(p);
      const auto j = J_map(a);
      r.max_unit_norm = std::max({r.max_unit_norm, pair_residual(a), pair_residual(c)});
      r.max_moment = std::max(r.max_moment, std::hypot(j[0] - x, j[1] - y));
      r.max_agreement = std::max(r.max_agreement, distance(a, c));
      const SpherePair moved = flow_F2(ut(rng), flow_F1(ut(rng), a));
      const auto jm = J_map(moved);
      r.max_flow_conservation =
          std::max(r.max_flow_conservation, std::hypot(jm[0] - j[0], jm[1] - j[1]));
      ++r.samples;
    }
  });
  PhiVerifyReport total;
  total.seed = seed;
  for (const auto& r : partial) {
    total.samples += r.samples;
    total.max_unit_norm = std::max(total.max_unit_norm, r.max_unit_norm);
    total.max_moment = std::max(total.max_moment, r.max_moment);
    total.max_agreement = std::max(total.max_agreement, r.max_agreement);
    total.max_flow_conservation = std::max(total.max_flow_conservation, r.max_flow_conservation);
  }
  return total;
}

namespace {

// Searches the torus fiber over a parabola point inside the square for the
// circle that Phi sends onto the pole locus. The T^2 equivariance reduces this
// to the single angle theta - phi.
void find_pole_witness(double c, SquareReport& report) {
  const double x = c, y = c * c / 2 - 3 * c + 4;
  if (y < 0 || y > c || !(x / 2 + y / 4 < 1)) return;
  auto pole_distance = [&](double psi) {
    const SpherePair s = phi_closed(polar(2 * x, psi, 2 * y, 0));
    return std::min(s.v.v3 + 1, s.w.v3 + 1);  // height above the south pole
  };
  constexpr int kGrid = 3600;
  double best = 0, best_value = pole_distance(0);
  for (int k = 1; k < kGrid; ++k) {
    const double psi = kTwoPi * k / kGrid, v = pole_distance(psi);
    if (v < best_value) best = psi, best_value = v;
  }
  double lo = best - kTwoPi / kGrid, hi = best + kTwoPi / kGrid;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (pole_distance(m1) < pole_distance(m2)) hi = m2; else lo = m1;
  }
  const double psi = (lo + hi) / 2;
  report.pole_witness = polar(2 * x, psi, 2 * y, 0);
  const SpherePair s = phi_closed(*report.pole_witness);
  report.pole_witness_distance = std::min(distance(s.v, {0, 0, -1}), distance(s.w, {0, 0, -1}));
}

}  // namespace

SquareReport square_report(double c, std::size_t samples, std::uint64_t seed,
                           const Tolerances& tol, std::size_t symplectic_samples, bool keep_rows,
                           unsigned workers) {
  if (!(c > 0) || 6 * c >= 8) throw InvalidArgument("square_report: c outside the domain of Phi");
  const std::size_t blocks = (samples + kBlock - 1) / kBlock;
  struct Partial {
    std::size_t contained = 0, unsafe = 0, image_failures = 0, sym = 0;
    double min_margin = std::numeric_limits<double>::infinity(), max_sym = 0;
    std::vector<SquareRow> rows;
  };
  std::vector<Partial> partial(blocks);
  const double alpha = 2 / c;
  for_blocks(samples, workers, [&](std::size_t b, std::size_t begin, std::size_t end) {
    auto rng = block_rng(seed, b);
    std::uniform_real_distribution<double> ur(0, 2 * c), angle(0, kTwoPi);
    Partial& r = partial[b];
    for (std::size_t i = begin; i < end; ++i) {
      SquareRow row;
      row.input = polar(ur(rng), angle(rng), ur(rng), angle(rng));
      row.parabola_safe = parabola_safe(row.input);
      if (!row.parabola_safe) ++r.unsafe;
      auto out = sigma_phi(row.input);
      if (out) {
        row.output = *out;
        row.margin = 2 - std::max(std::abs(out->w), std::abs(out->z));
        const double g1 = G1(*out), g2 = G2(*out);
        row.image_residual = std::max({0.0, (2 - 2 / alpha) - g2, (-g1 + g2) - 2 / alpha});
        if (row.image_residual > tol.agreement) ++r.image_failures;
      } else {
        row.margin = std::numeric_limits<double>::quiet_NaN();
      }
      if (row.margin > 0) ++r.contained;
      r.min_margin = std::min(r.min_margin, std::isnan(row.margin) ? -1.0 : row.margin);
      if (i < symplectic_samples) {
        ++r.sym;
        r.max_sym = std::max(r.max_sym, symplectic_residual(row.input, tol.fd_step));
      }
      if (keep_rows) r.rows.push_back(row);
    }
  });
  SquareReport report;
  report.c = c;
  report.seed = seed;
  report.samples = samples;
  report.in_proven_window = c > 1 && c < 4 - 2 * std::numbers::sqrt2;
  report.min_margin = std::numeric_limits<double>::infinity();
  for (auto& r : partial) {
    report.contained += r.contained;
    report.parabola_unsafe += r.unsafe;
    report.image_description_failures += r.image_failures;
    report.symplectic_samples += r.sym;
    report.min_margin = std::min(report.min_margin, r.min_margin);
    report.max_symplectic_residual = std::max(report.max_symplectic_residual, r.max_sym);
    if (keep_rows) report.rows.insert(report.rows.end(), r.rows.begin(), r.rows.end());
  }
  if (!report.in_proven_window) find_pole_witness(c, report);
  return report;
}

std::string csv_header() {
  return "w_re,w_im,z_re,z_im,out_w_re,out_w_im,out_z_re,out_z_im,margin,image_residual,parabola_safe";
}

std::string csv_row(const SquareRow& row) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d",
                row.input.w.real(), row.input.w.imag(), row.input.z.real(), row.input.z.imag(),
                row.output.w.real(), row.output.w.imag(), row.output.z.real(), row.output.z.imag(),
                row.margin, row.image_residual, row.parabola_safe ? 1 : 0);
  return buf;
}

}  // namespace toric::torus

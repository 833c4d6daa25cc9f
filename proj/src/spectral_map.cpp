#include "galton/spectral_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace galton {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kFwhmPerSigma = 2.3548200450309493;  // 2 sqrt(2 ln 2)

// Acklam's rational approximation to the standard normal quantile,
// polished with one Halley step; accurate to ~1e-15 on (0,1).
double normal_quantile(double p) {
  if (p <= 0.0 || p >= 1.0)
    throw std::invalid_argument("quantile argument must lie in (0,1)");
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425, phigh = 1.0 - plow;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p > phigh) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else {
    const double q = p - 0.5, r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  const double e = 0.5 * std::erfc(-x / kSqrt2) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(x * x / 2.0);
  return x - u / (1.0 + x * u / 2.0);
}

}  // namespace

DosSpec DosSpec::gaussian_fwhm(double mean, double fwhm) {
  DosSpec d;
  d.kind = Kind::gaussian;
  d.mean = mean;
  d.sigma = fwhm / kFwhmPerSigma;
  d.validate();
  return d;
}

DosSpec DosSpec::gaussian_sigma(double mean, double sigma) {
  DosSpec d;
  d.kind = Kind::gaussian;
  d.mean = mean;
  d.sigma = sigma;
  d.validate();
  return d;
}

DosSpec DosSpec::from_levels(std::vector<double> levels) {
  DosSpec d;
  d.kind = Kind::explicit_levels;
  d.levels = std::move(levels);
  d.validate();
  return d;
}

void DosSpec::validate() const {
  if (kind == Kind::gaussian) {
    if (sigma <= 0.0) throw std::invalid_argument("dos sigma must be > 0");
    return;
  }
  if (!levels || levels->size() < 2)
    throw std::invalid_argument("explicit dos requires at least two levels");
  if (!std::is_sorted(levels->begin(), levels->end()))
    throw std::invalid_argument("explicit dos levels must be sorted ascending");
}

double DosSpec::density(double x) const {
  if (kind == Kind::gaussian) {
    const double z = (x - mean) / sigma;
    return std::exp(-z * z / 2.0) / (sigma * std::sqrt(2.0 * std::numbers::pi));
  }
  // Gaussian kernel estimate with Silverman's bandwidth.
  const auto& lv = *levels;
  const double n = static_cast<double>(lv.size());
  double m = 0.0, s2 = 0.0;
  for (double v : lv) m += v;
  m /= n;
  for (double v : lv) s2 += (v - m) * (v - m);
  const double sd = std::sqrt(s2 / std::max(1.0, n - 1.0));
  const double h = std::max(1e-12, 1.06 * sd * std::pow(n, -0.2));
  double acc = 0.0;
  for (double v : lv) {
    const double z = (x - v) / h;
    acc += std::exp(-z * z / 2.0);
  }
  return acc / (n * h * std::sqrt(2.0 * std::numbers::pi));
}

Checkerboard place_levels_by_dos(int n_nuclei, const DosSpec& dos,
                                 const DosBoardOptions& opts) {
  dos.validate();
  if (n_nuclei < 1 || n_nuclei > 10)
    throw std::invalid_argument("n_nuclei must lie in [1,10]");
  const int L = 1 << n_nuclei;
  if (L < 2) throw std::invalid_argument("board needs at least two levels");

  std::vector<double> cols(L);
  if (dos.kind == DosSpec::Kind::explicit_levels) {
    if (static_cast<int>(dos.levels->size()) != L)
      throw std::invalid_argument("explicit dos must supply 2^N levels");
    cols = *dos.levels;
  } else if (opts.sample_seed) {
    std::mt19937_64 rng(*opts.sample_seed);
    std::normal_distribution<double> dist(dos.mean, dos.sigma);
    for (double& v : cols) v = dist(rng);
    std::sort(cols.begin(), cols.end());
  } else {
    for (int i = 0; i < L; ++i)
      cols[i] = dos.mean + dos.sigma * normal_quantile((i + 0.5) / L);
  }

  // Row energies from the power-law model, scaled down so the board tilt is
  // negligible against the column spacing.
  const double width = dos.kind == DosSpec::Kind::gaussian
                           ? dos.sigma
                           : (cols.back() - cols.front()) / 2.0;
  std::vector<double> w0(n_nuclei);
  double w0_sum = 0.0;
  for (int j = 0; j < n_nuclei; ++j) {
    w0[j] = std::pow(static_cast<double>(j + 1), opts.p_exp);
    w0_sum += w0[j];
  }
  const double scale = opts.tilt_scale * width / w0_sum;

  Checkerboard b;
  b.n_nuclei = n_nuclei;
  b.size = L;
  b.col_energy = cols;
  b.center = {dos.kind == DosSpec::Kind::gaussian
                  ? dos.mean
                  : (cols.front() + cols.back()) / 2.0,
              0.0};

  std::vector<std::pair<double, NuclearStateIndex>> rows(L);
  for (NuclearStateIndex s = 0; s < static_cast<NuclearStateIndex>(L); ++s) {
    double e = 0.0;
    for (int j = 0; j < n_nuclei; ++j)
      e += (((s >> j) & 1) ? -1.0 : 1.0) * scale * w0[j];
    rows[s] = {e, s};
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& c) { return a.first > c.first; });
  b.row_energy.resize(L);
  b.l_states.resize(L);
  b.l_rank.resize(L);
  b.k_states.resize(L);
  b.k_rank.resize(L);
  for (int l = 0; l < L; ++l) {
    b.row_energy[l] = rows[l].first;
    b.l_states[l] = rows[l].second;
    b.l_rank[l] = L - 1 - l;  // rows descend in energy
    // Column k carries the state of ascending-energy rank k so that the
    // conjugate diagonal joins identical nuclear states.
    b.k_states[l] = rows[L - 1 - l].second;
    b.k_rank[l] = l;
  }
  // DOS boards carry no microscopic gap model; tunneling is supplied as a
  // uniform table by the caller.
  b.gaps.assign(static_cast<size_t>(L) * L, 0.0);
  return b;
}

SpectralProfile scan_profile(const Checkerboard& board, const TunnelingTable& table,
                             double bandwidth, const std::vector<double>& centers,
                             const ScanDirections& directions, int threads) {
  if (bandwidth <= 0.0) throw std::invalid_argument("bandwidth must be > 0");
  for (size_t i = 0; i + 1 < centers.size(); ++i)
    if (!(centers[i] < centers[i + 1]))
      throw std::invalid_argument("centers must be strictly increasing");
  if (threads < 1) threads = 1;

  SpectralProfile prof;
  prof.centers = centers;
  prof.bandwidth = bandwidth;
  const size_t n = centers.size();
  if (directions.forward) prof.polarization_fwd.assign(n, 0.0);
  if (directions.reverse) prof.polarization_rev.assign(n, 0.0);
  std::vector<double> cons_err(n, 0.0);

  auto run_point = [&](size_t i) {
    const StatePopulations init = StatePopulations::mixed(board.size);
    double err = 0.0;
    auto one = [&](SweepDirection dir) {
      SweepSpec sweep;
      sweep.direction = dir;
      sweep.window = SweepWindow{centers[i], bandwidth};
      const StatePopulations out =
          laser_reset(propagate(board, table, sweep, init));
      err = std::max(err, std::abs(out.total() - 1.0));
      return polarization(out);
    };
    if (directions.forward)
      prof.polarization_fwd[i] = one(SweepDirection::low_to_high);
    if (directions.reverse)
      prof.polarization_rev[i] = one(SweepDirection::high_to_low);
    cons_err[i] = err;
  };

  if (threads == 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) run_point(i);
  } else {
    const int nt = std::min<size_t>(threads, n);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t)
      pool.emplace_back([&, t] {
        for (size_t i = t; i < n; i += nt) run_point(i);
      });
    for (auto& th : pool) th.join();
  }
  for (double e : cons_err)
    prof.max_conservation_error = std::max(prof.max_conservation_error, e);
  return prof;
}

double correlation_with_dos(const SpectralProfile& profile, const DosSpec& dos) {
  // Each sweep direction polarizes only the half of the board it enters
  // first, so the spectral signature is carried by the superposition of the
  // forward and reverse magnitudes (they mirror each other about the board
  // center); with a single scanned direction this reduces to that profile.
  const auto& f = profile.polarization_fwd;
  const auto& r = profile.polarization_rev;
  const size_t n = profile.centers.size();
  if ((f.size() != n && r.size() != n) || n < 2)
    throw std::invalid_argument("profile is empty");
  double mx = 0.0, my = 0.0;
  std::vector<double> xs(n), ys(n);
  for (size_t i = 0; i < n; ++i) {
    xs[i] = (f.size() == n ? std::abs(f[i]) : 0.0) +
            (r.size() == n ? std::abs(r[i]) : 0.0);
    ys[i] = dos.density(profile.centers[i]);
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    throw std::invalid_argument("constant profile: correlation undefined");
  return sxy / std::sqrt(sxx * syy);
}

double profile_fwhm(const std::vector<double>& centers,
                    const std::vector<double>& values) {
  if (centers.size() != values.size() || centers.size() < 3)
    throw std::invalid_argument("profile too short for width estimate");
  const size_t n = values.size();
  std::vector<double> v(n);
  for (size_t i = 0; i < n; ++i) v[i] = std::abs(values[i]);
  const size_t imax = std::max_element(v.begin(), v.end()) - v.begin();
  const double half = v[imax] / 2.0;
  if (half <= 0.0) throw std::invalid_argument("flat profile: width undefined");
  auto interp = [&](size_t a, size_t b) {
    return centers[a] + (half - v[a]) * (centers[b] - centers[a]) / (v[b] - v[a]);
  };
  double left = centers.front();
  for (size_t i = imax; i-- > 0;)
    if (v[i] < half) {
      left = interp(i, i + 1);
      break;
    }
  double right = centers.back();
  for (size_t i = imax + 1; i < n; ++i)
    if (v[i] < half) {
      right = interp(i, i - 1);
      break;
    }
  return right - left;
}

}  // namespace galton

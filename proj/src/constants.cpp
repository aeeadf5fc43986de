#include "metab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

namespace metab {

namespace {

using Vec = std::vector<double>;
using Family = std::vector<std::vector<Vec>>;

double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

double f_at(const Family& F, const Vec& u) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& L : F) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& y : L) m = std::min(m, dot(u, y));
    best = std::max(best, m);
  }
  return best;
}

std::vector<Vec> directions(int k, long n) {
  std::vector<Vec> d;
  if (k == 1) return {{1.0}, {-1.0}};
  if (k == 2) {
    for (long i = 0; i < n; ++i) {
      double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
      d.push_back({std::cos(a), std::sin(a)});
    }
    return d;
  }
  if (k == 3) {
    double golden = std::numbers::pi * (3 - std::sqrt(5.0));
    for (long i = 0; i < n; ++i) {
      double z = 1 - 2 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
      double r = std::sqrt(1 - z * z), a = golden * static_cast<double>(i);
      d.push_back({r * std::cos(a), r * std::sin(a), z});
    }
    return d;
  }
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> g;
  for (long i = 0; i < n; ++i) {
    Vec v(k);
    for (auto& x : v) x = g(rng);
    double l = norm(v);
    for (auto& x : v) x /= l;
    d.push_back(v);
  }
  return d;
}

// distance within which every unit vector has a sample
double covering_radius(int k, long n, const std::vector<Vec>& dirs) {
  if (k == 2) return 2 * std::sin(std::numbers::pi / (2 * static_cast<double>(n)));
  std::mt19937_64 rng(777);
  std::normal_distribution<double> g;
  double worst = 0;
  for (int probe = 0; probe < 2000; ++probe) {
    Vec v(k);
    for (auto& x : v) x = g(rng);
    double l = norm(v);
    for (auto& x : v) x /= l;
    double best = 2;
    for (const auto& d : dirs) {
      Vec diff(k);
      for (int i = 0; i < k; ++i) diff[i] = v[i] - d[i];
      best = std::min(best, norm(diff));
    }
    worst = std::max(worst, best);
  }
  return worst * 1.1;
}

struct Sampled {
  double C_low;
  double min_f;
  Vec argmin;
  long n;
};

Sampled sample(const Family& F, int k, long n, double lipschitz) {
  auto dirs = directions(k, n);
  Sampled s{0, std::numeric_limits<double>::infinity(), {}, static_cast<long>(dirs.size())};
  for (const auto& u : dirs) {
    double v = f_at(F, u);
    if (v < s.min_f) s.min_f = v, s.argmin = u;
  }
  double slack = k == 1 ? 0 : lipschitz * covering_radius(k, n, dirs);
  s.C_low = s.min_f - slack;
  return s;
}

}  // namespace

Family support_family(const TamenessDatum& lambda, const RingSpec& ring) {
  Family F;
  auto add = [&](const ModuleElement& l) {
    std::vector<Vec> L;
    for (const auto& t : l.terms()) {
      Vec y;
      for (std::size_t i = 0; i < ring.nvars(); ++i)
        if (!ring.is_torsion(i)) y.push_back(t.mono.exps[i].get_d());
      L.push_back(y);
    }
    if (!L.empty()) F.push_back(L);
  };
  for (const auto& l : lambda.centralizer) add(l);
  for (const auto& l : lambda.co_centralizer) add(l);
  return F;
}

TamenessVerdict tameness_check(const TamenessDatum& lambda, const RingSpec& ring) {
  int k = static_cast<int>(ring.nfree());
  Family F = support_family(lambda, ring);
  TamenessVerdict v;
  v.exact = k == 1;
  if (k == 0) {
    v.tame = true;
    return v;
  }
  long n = k == 1 ? 2 : (k == 2 ? 4096 : 20000);
  auto dirs = directions(k, n);
  v.grid = k == 1 ? 0 : static_cast<long>(dirs.size());
  v.tame = !F.empty();
  if (F.empty()) v.witness = dirs.front();
  for (const auto& u : dirs)
    if (v.tame && f_at(F, u) <= 0) {
      v.tame = false;
      v.witness = u;
    }
  return v;
}

GeometryReport geometry_constants(const TamenessDatum& lambda, const RingSpec& ring) {
  int k = static_cast<int>(ring.nfree());
  if (k < 1) throw std::invalid_argument("geometry constants need at least one free generator");
  Family F = support_family(lambda, ring);
  if (F.empty()) throw TamenessViolation("tameness datum is empty", Vec(k, 0.0));
  GeometryReport r;
  r.k = k;
  double lipschitz = 0;
  r.D = 0;
  for (const auto& L : F) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& y : L) {
      m = std::min(m, norm(y));
      lipschitz = std::max(lipschitz, norm(y));
    }
    r.D = std::max(r.D, m);
  }
  Sampled s = sample(F, k, k == 2 ? 256 : 2000, lipschitz);
  if (k >= 2) {
    for (int it = 0; it < 8; ++it) {
      Sampled t = sample(F, k, s.n * 2, lipschitz);
      bool stable = std::abs(t.C_low - s.C_low) <= 0.01 * std::abs(t.C_low);
      s = t;
      if (stable) break;
    }
  }
  if (s.min_f <= 0 || r.D <= 0)
    throw TamenessViolation("tameness fails: no element of the datum is positive in some direction", s.argmin);
  r.exact = k == 1;
  r.grid = k == 1 ? 0 : s.n;
  r.C = s.C_low;
  if (r.C <= 0) throw TamenessViolation("grid too coarse to certify a positive lower bound for C", s.argmin);
  r.r0 = r.D * r.D / (2 * r.C);
  double denom = 4 * k * r.C - 4;
  if (denom <= 0) {
    r.R_diagnostic = "4kC - 4 = " + format_real(denom) + " <= 0; supply a datum with larger C, e.g. powers of its elements";
  } else {
    r.R = 2 * k * std::max({r.D * r.D / (2 * r.C), r.D, r.D * r.D / denom});
  }
  return r;
}

Int conjugation_constant(const Presentation& p, const Int& K1) {
  Int K2 = 0;
  if (p.tameness) {
    for (const auto& l : p.tameness->centralizer) K2 = std::max(K2, l.length());
    for (const auto& l : p.tameness->co_centralizer) K2 = std::max(K2, l.length());
  }
  K2 += 2;
  Int K;
  mpz_pow_ui(K.get_mpz_t(), K2.get_mpz_t(), 2 * p.k());
  return std::max(K, K1);
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace metab

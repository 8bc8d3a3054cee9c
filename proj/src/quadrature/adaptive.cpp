#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "besselxi/quadrature.hpp"

namespace besselxi {

namespace {

// Gauss–Kronrod 7/15 abscissae and weights (QUADPACK qk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kMaxDepth = 40;

double magnitude(double v) { return std::fabs(v); }
double magnitude(Complex v) { return std::abs(v); }
bool finite_value(double v) { return std::isfinite(v); }
bool finite_value(Complex v) { return is_finite(v); }

template <class T>
struct Panel {
  double a;
  double b;
  T value;
  double err;
  int depth;
  bool operator<(const Panel& o) const { return err < o.err; }
};

template <class T, class F>
Panel<T> gk15(const F& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(center);
  T resk = fc * kWgk[7];
  T resg = fc * kWg[3];
  double resabs = magnitude(resk);
  T fv1[7];
  T fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const T sum = fv1[j] + fv2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (magnitude(fv1[j]) + magnitude(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const T mean = resk * 0.5;
  double resasc = kWgk[7] * magnitude(fc - mean);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (magnitude(fv1[j] - mean) + magnitude(fv2[j] - mean));

  const double ah = std::fabs(half);
  resabs *= ah;
  resasc *= ah;
  double err = magnitude((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
  T value = resk * half;
  if (!finite_value(value)) throw DomainError("integrate: integrand produced a non-finite value");
  return {a, b, value, err, depth};
}

template <class T, class F>
QuadResult<T> adaptive(const F& f, const std::vector<double>& points, const QuadOptions& opt) {
  std::priority_queue<Panel<T>> heap;
  QuadResult<T> out;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i + 1] > points[i]) {
      heap.push(gk15<T>(f, points[i], points[i + 1], 0));
      out.evals += 15;
    }
  }
  auto totals = [&heap](T& value, double& err) {
    // Re-sum from scratch in a fixed order so the result does not depend on
    // floating-point drift in running totals.
    auto copy = heap;
    std::vector<Panel<T>> panels;
    while (!copy.empty()) {
      panels.push_back(copy.top());
      copy.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel<T>& x, const Panel<T>& y) { return x.a < y.a; });
    value = T{};
    err = 0.0;
    for (const auto& p : panels) {
      value += p.value;
      err += p.err;
    }
  };
  T value{};
  double err = 0.0;
  totals(value, err);
  int splits = 0;
  bool stuck = false;
  while (!heap.empty()) {
    const double target = std::max(opt.abs_tol, opt.rel_tol * magnitude(value));
    if (err <= target) break;
    if (splits >= opt.max_subdivisions) break;
    Panel<T> worst = heap.top();
    if (worst.depth >= kMaxDepth) {
      stuck = true;
      break;
    }
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel<T> left = gk15<T>(f, worst.a, mid, worst.depth + 1);
    Panel<T> right = gk15<T>(f, mid, worst.b, worst.depth + 1);
    out.evals += 30;
    value += left.value + right.value - worst.value;
    err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++splits;
  }
  totals(out.value, out.err_estimate);
  const double target = std::max(opt.abs_tol, opt.rel_tol * magnitude(out.value));
  out.converged = !stuck && out.err_estimate <= target;
  return out;
}

std::vector<double> panel_points(double a, double b, const std::vector<double>& breakpoints) {
  std::vector<double> pts{a};
  for (double p : breakpoints) {
    if (p > a && p < b) pts.push_back(p);
  }
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

template <class T, class F>
QuadResult<T> finite_impl(const F& f, double a, double b, const QuadOptions& opt) {
  if (!(a < b)) {
    if (a == b) return {T{}, 0.0, 0, true};
    throw DomainError("integrate_finite: require a < b");
  }
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate_finite: infinite limit");
  switch (opt.singularity) {
    case EndpointSingularity::none:
      return adaptive<T>(f, panel_points(a, b, opt.breakpoints), opt);
    case EndpointSingularity::left_sqrt: {
      auto g = [&](double u) -> T { return u == 0.0 ? T{} : f(a + u * u) * (2.0 * u); };
      std::vector<double> bp;
      for (double p : opt.breakpoints)
        if (p > a && p < b) bp.push_back(std::sqrt(p - a));
      return adaptive<T>(g, panel_points(0.0, std::sqrt(b - a), bp), opt);
    }
    case EndpointSingularity::right_sqrt: {
      auto g = [&](double u) -> T { return u == 0.0 ? T{} : f(b - u * u) * (2.0 * u); };
      std::vector<double> bp;
      for (double p : opt.breakpoints)
        if (p > a && p < b) bp.push_back(std::sqrt(b - p));
      return adaptive<T>(g, panel_points(0.0, std::sqrt(b - a), bp), opt);
    }
    case EndpointSingularity::both_sqrt: {
      const double mid = 0.5 * (a + b);
      QuadOptions half = opt;
      half.abs_tol *= 0.5;
      half.singularity = EndpointSingularity::left_sqrt;
      auto lo = finite_impl<T>(f, a, mid, half);
      half.singularity = EndpointSingularity::right_sqrt;
      auto hi = finite_impl<T>(f, mid, b, half);
      return {lo.value + hi.value, lo.err_estimate + hi.err_estimate, lo.evals + hi.evals,
              lo.converged && hi.converged};
    }
  }
  throw InvariantError("integrate_finite: unknown singularity kind");
}

template <class T, class F>
QuadResult<T> semi_infinite_impl(const F& f, double a, const DecayCertificate& decay, const QuadOptions& opt) {
  if (!std::isfinite(a)) throw DomainError("integrate_semi_infinite: a must be finite");
  const double budget = std::max(opt.abs_tol, 1e-300);
  const double y_cut = decay.cutoff(a, budget);
  // Geometric breakpoints keep panels proportionate on long ranges.
  QuadOptions inner = opt;
  inner.abs_tol = 0.5 * opt.abs_tol;
  for (double step = 1.0; a + step < y_cut; step *= 2.0) inner.breakpoints.push_back(a + step);
  QuadResult<T> body;
  if (opt.singularity == EndpointSingularity::left_sqrt) {
    const double split = a + std::min(1.0, 0.5 * (y_cut - a));
    QuadOptions head = inner;
    head.abs_tol *= 0.5;
    auto first = finite_impl<T>(f, a, split, head);
    head.singularity = EndpointSingularity::none;
    auto rest = finite_impl<T>(f, split, y_cut, head);
    body = {first.value + rest.value, first.err_estimate + rest.err_estimate, first.evals + rest.evals,
            first.converged && rest.converged};
  } else {
    inner.singularity = EndpointSingularity::none;
    body = finite_impl<T>(f, a, y_cut, inner);
  }
  if constexpr (std::is_same_v<T, double>) {
    body.value += decay.tail_value(y_cut).real();
  } else {
    body.value += decay.tail_value(y_cut);
  }
  const double tail = decay.tail_bound(y_cut);
  body.err_estimate += tail;
  const double target = std::max(opt.abs_tol, opt.rel_tol * magnitude(body.value));
  body.converged = body.converged && body.err_estimate <= target;
  return body;
}

}  // namespace

RealQuad integrate_finite(const RealFn& f, double a, double b, const QuadOptions& opt) {
  return finite_impl<double>(f, a, b, opt);
}

ComplexQuad integrate_finite_complex(const ComplexFn& f, double a, double b, const QuadOptions& opt) {
  return finite_impl<Complex>(f, a, b, opt);
}

RealQuad integrate_semi_infinite(const RealFn& f, double a, const DecayCertificate& decay,
                                 const QuadOptions& opt) {
  return semi_infinite_impl<double>(f, a, decay, opt);
}

ComplexQuad integrate_semi_infinite_complex(const ComplexFn& f, double a, const DecayCertificate& decay,
                                            const QuadOptions& opt) {
  return semi_infinite_impl<Complex>(f, a, decay, opt);
}

// ---- decay certificates ----

DecayCertificate DecayCertificate::exponential(double c, double lambda, double power) {
  if (!(c > 0.0) || !(lambda > 0.0) || power < 0.0) throw DomainError("DecayCertificate::exponential: bad constants");
  DecayCertificate d;
  d.kind_ = Kind::exponential;
  d.c_ = c;
  d.rate_ = lambda;
  d.power_ = power;
  return d;
}

DecayCertificate DecayCertificate::gaussian(double c, double lambda, double power) {
  if (!(c > 0.0) || !(lambda > 0.0) || power < 0.0) throw DomainError("DecayCertificate::gaussian: bad constants");
  DecayCertificate d;
  d.kind_ = Kind::gaussian;
  d.c_ = c;
  d.rate_ = lambda;
  d.power_ = power;
  return d;
}

DecayCertificate DecayCertificate::algebraic(double c, double p) {
  if (!(c > 0.0)) throw DomainError("DecayCertificate::algebraic: C must be positive");
  if (!(p > 1.0)) throw DomainError("DecayCertificate::algebraic: p <= 1 gives a divergent tail");
  DecayCertificate d;
  d.kind_ = Kind::algebraic;
  d.c_ = c;
  d.rate_ = p;
  return d;
}

DecayCertificate DecayCertificate::analytic_tail(double cutoff, std::function<Complex(double)> tail,
                                                 double tail_error) {
  if (!(cutoff > 0.0) || !tail || tail_error < 0.0) throw DomainError("DecayCertificate::analytic_tail: bad arguments");
  DecayCertificate d;
  d.kind_ = Kind::analytic_tail;
  d.fixed_cutoff_ = cutoff;
  d.tail_ = std::move(tail);
  d.tail_error_ = tail_error;
  return d;
}

double DecayCertificate::tail_bound(double y) const {
  switch (kind_) {
    case Kind::exponential: {
      const double denom = rate_ - power_ / (1.0 + y);
      if (denom <= 0.0) return std::numeric_limits<double>::infinity();
      return c_ * std::pow(1.0 + y, power_) * std::exp(-rate_ * y) / denom;
    }
    case Kind::gaussian: {
      const double denom = 2.0 * rate_ * y - power_ / (1.0 + y);
      if (denom <= 0.0) return std::numeric_limits<double>::infinity();
      return c_ * std::pow(1.0 + y, power_) * std::exp(-rate_ * y * y) / denom;
    }
    case Kind::algebraic:
      return c_ * std::pow(y, 1.0 - rate_) / (rate_ - 1.0);
    case Kind::analytic_tail:
      return tail_error_;
  }
  return std::numeric_limits<double>::infinity();
}

double DecayCertificate::cutoff(double a, double tol) const {
  if (kind_ == Kind::analytic_tail) return std::max(a, fixed_cutoff_);
  const double goal = 0.5 * tol;
  double hi = std::max(a, 0.0) + 1.0;
  int guard = 0;
  while (!(tail_bound(hi) < goal)) {
    hi *= 2.0;
    if (++guard > 200) throw ConvergenceError("DecayCertificate::cutoff: tolerance unreachable");
  }
  double lo = std::max(a, 0.0);
  if (tail_bound(lo) < goal) return std::max(lo, a);
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (tail_bound(mid) < goal) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return std::max(hi, a);
}

DecayCertificate DecayCertificate::times_power(double sigma_minus_one) const {
  DecayCertificate d = *this;
  switch (kind_) {
    case Kind::exponential:
    case Kind::gaussian:
      // y^{q} <= (1+y)^{q} for q >= 0 and y^{q} <= 1 for q < 0 on y >= 1.
      d.power_ = power_ + std::max(0.0, sigma_minus_one);
      break;
    case Kind::algebraic:
      d.rate_ = rate_ - sigma_minus_one;
      if (!(d.rate_ > 1.0)) throw DomainError("mellin: algebraic decay too slow for this Re s");
      break;
    case Kind::analytic_tail:
      throw DomainError("DecayCertificate::times_power: analytic tails do not transform");
  }
  return d;
}

}  // namespace besselxi

#include "cmera/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace cmera::quad {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.9914553711208126392068546975263285, 0.9491079123427585245261896840478513,
    0.8648644233597690727897127886409262, 0.7415311855993944398638647732807884,
    0.5860872354676911302941448382587296, 0.4058451513773971669066064120769615,
    0.2077849550078984676006894037732449, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292249637320080589695, 0.0630920926299785532907006631892042,
    0.1047900103222501838398763225415180, 0.1406532597155259187451895905102379,
    0.1690047266392679028265834265985503, 0.1903505780647854099132564024210137,
    0.2044329400752988924141619992346491, 0.2094821410847278280129991748917143};
constexpr double kWg[4] = {
    0.1294849661688696932706114326790820, 0.2797053914892766679014677714237796,
    0.3818300505051189449503697754889751, 0.4179591836734693877551020408163265};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel eval_panel(const Fn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double resg = kWg[3] * f(c);
  double resk = kWgk[7] * f(c);
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fsum = f(c - x) + f(c + x);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  const double value = resk * h;
  const double error = std::abs((resk - resg) * h);
  return {a, b, value, error};
}

double kahan_sum(const std::vector<Panel>& panels, double* err_out) {
  double s = 0.0, comp = 0.0, err = 0.0;
  for (const auto& p : panels) {
    const double y = p.value - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
    err += p.error;
  }
  *err_out = err;
  return s;
}

}  // namespace

Result gk15(const Fn& f, double a, double b) {
  const Panel p = eval_panel(f, a, b);
  return {p.value, p.error};
}

Result integrate(const Fn& f, double a, double b, double abs_tol,
                 double max_width, int max_panels) {
  if (a == b) return {0.0, 0.0};
  std::vector<Panel> panels;
  int n0 = 1;
  if (max_width > 0.0) {
    n0 = static_cast<int>(std::ceil((b - a) / max_width));
    n0 = std::clamp(n0, 1, max_panels);
  }
  panels.reserve(static_cast<size_t>(n0) + 64);
  for (int i = 0; i < n0; ++i) {
    const double pa = a + (b - a) * i / n0;
    const double pb = a + (b - a) * (i + 1) / n0;
    panels.push_back(eval_panel(f, pa, pb));
  }
  double err = 0.0;
  double val = kahan_sum(panels, &err);
  std::make_heap(panels.begin(), panels.end());
  while (err > abs_tol) {
    if (static_cast<int>(panels.size()) >= max_panels) {
      throw ToleranceError("adaptive quadrature: panel budget exhausted");
    }
    std::pop_heap(panels.begin(), panels.end());
    const Panel worst = panels.back();
    panels.pop_back();
    if (worst.b - worst.a < 1e-15 * (std::abs(worst.a) + std::abs(worst.b)) + 1e-300) {
      throw ToleranceError("adaptive quadrature: interval underflow");
    }
    const double m = 0.5 * (worst.a + worst.b);
    panels.push_back(eval_panel(f, worst.a, m));
    std::push_heap(panels.begin(), panels.end());
    panels.push_back(eval_panel(f, m, worst.b));
    std::push_heap(panels.begin(), panels.end());
    val = kahan_sum(panels, &err);
  }
  return {val, err};
}

namespace {

// Iterated-averaging (Euler) accelerator for the sequence of partial sums of
// alternating half-period cell integrals.
class Averager {
 public:
  std::complex<double> push(std::complex<double> partial_sum) {
    std::complex<double> cur = partial_sum;
    const size_t depth = std::min<size_t>(diag_.size(), 48);
    for (size_t m = 0; m < depth; ++m) {
      const std::complex<double> next = 0.5 * (diag_[m] + cur);
      diag_[m] = cur;
      cur = next;
    }
    if (diag_.size() < 48) {
      diag_.push_back(cur);
    } else {
      diag_.back() = cur;
    }
    return cur;
  }

 private:
  std::vector<std::complex<double>> diag_;
};

ComplexResult dc_tail(const Fn& h, double k0, double abs_tol) {
  const double k1 = std::max(1000.0 * k0, 1e4);
  const Result body = integrate(h, k0, k1, 0.25 * abs_tol, 0.0, 60000);
  // Close with an inverse-square continuation fitted at k1/2 and k1:
  // h ~ C/k^2 + D/k^4  =>  int_{k1}^inf h = k1*(h1 - (2/3)e), e=(h2-4h1)/12.
  const double h1 = h(k1);
  const double h2 = h(0.5 * k1);
  const double e = (h2 - 4.0 * h1) / 12.0;
  const double cont = k1 * (h1 - (2.0 / 3.0) * e);
  const double cont_err = std::abs(e) * k1 * 0.2 + 1e-18;
  return {{body.value + cont, 0.0}, body.error + cont_err};
}

}  // namespace

ComplexResult oscillatory_tail(const Fn& h, double u, double k0,
                               double abs_tol, int max_cells) {
  if (u == 0.0) return dc_tail(h, k0, abs_tol);
  const double au = std::abs(u);
  std::complex<double> lead{0.0, 0.0};
  double lead_err = 0.0;
  double k = k0;
  // Let the phase wind a few times before cell-summing kicks in.
  if (k * au < 6.0) {
    const double k_osc = 6.0 / au;
    const auto re = integrate([&](double q) { return h(q) * std::cos(u * q); },
                              k, k_osc, 0.2 * abs_tol, M_PI / (4.0 * au));
    const auto im = integrate([&](double q) { return h(q) * std::sin(u * q); },
                              k, k_osc, 0.2 * abs_tol, M_PI / (4.0 * au));
    lead = {re.value, im.value};
    lead_err = re.error + im.error;
    k = k_osc;
  }
  const double half = M_PI / au;
  Averager acc;
  std::complex<double> partial{0.0, 0.0};
  std::complex<double> est{0.0, 0.0};
  double rule_err = 0.0;
  double d1 = 1e300, d2 = 1e300, d3 = 1e300;
  for (int j = 0; j < max_cells; ++j) {
    const double a = k + j * half;
    const double b = a + half;
    const auto re = gk15([&](double q) { return h(q) * std::cos(u * q); }, a, b);
    const auto im = gk15([&](double q) { return h(q) * std::sin(u * q); }, a, b);
    double ce = re.error + im.error;
    std::complex<double> cell{re.value, im.value};
    if (ce > 0.02 * abs_tol) {
      // Wide or structured cell: refine it adaptively.
      const auto re2 = integrate([&](double q) { return h(q) * std::cos(u * q); },
                                 a, b, 0.02 * abs_tol, 0.0, 4000);
      const auto im2 = integrate([&](double q) { return h(q) * std::sin(u * q); },
                                 a, b, 0.02 * abs_tol, 0.0, 4000);
      cell = {re2.value, im2.value};
      ce = re2.error + im2.error;
    }
    rule_err += ce;
    partial += cell;
    const std::complex<double> prev_est = est;
    est = acc.push(partial);
    d3 = d2;
    d2 = d1;
    d1 = std::abs(est - prev_est);
    // The accelerated corner value must have settled for three consecutive
    // cells before the tail is accepted.
    if (j >= 8 && d1 < 0.25 * abs_tol && d2 < 0.25 * abs_tol &&
        d3 < 0.25 * abs_tol) {
      return {lead + est, lead_err + rule_err + d1 + d2};
    }
  }
  throw ToleranceError("oscillatory tail: cell budget exhausted");
}

}  // namespace cmera::quad

#include "cgames/gadget_poly.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace cgames {

Game build_gadget(const GadgetParams& p) {
  if (p.d < 2 || p.n < 1 || p.k < 1 || p.k > p.d) throw std::invalid_argument("bad gadget params");
  if (p.w <= 0 || p.w > 1 || p.beta < 0 || p.beta > 1)
    throw std::invalid_argument("gadget params out of range");

  Game game;
  game.degree_bound = p.d;
  std::vector<int> a(p.n + 1), b(p.n + 1);
  for (int i = 0; i <= p.n; ++i) {
    const CostFunction cost = i == 0 ? CostFunction::monomial(1, p.k)
                                     : CostFunction::monomial(p.beta, p.d);
    a[i] = game.add_resource("a_" + std::to_string(i), cost);
    b[i] = game.add_resource("b_" + std::to_string(i), cost);
  }

  int heavy = game.add_player("heavy", 1);
  game.add_strategy(heavy, a);
  game.add_strategy(heavy, b);
  for (int i = 1; i <= p.n; ++i) {
    int light = game.add_player("light_" + std::to_string(i), p.w);
    game.add_strategy(light, {a[0], b[i]});
    game.add_strategy(light, {b[0], a[i]});
  }
  game.validate();
  return game;
}

std::pair<Rational, Rational> case_ratios(const GadgetParams& p) {
  if (p.d < 2 || p.n < 1 || p.k < 1 || p.k > p.d) throw std::invalid_argument("bad gadget params");
  if (p.w < 0 || p.w > 1 || p.beta < 0 || p.beta > 1)
    throw std::invalid_argument("gadget params out of range");
  if (p.w == 0 && p.beta == 0)
    throw std::invalid_argument("case ratio undefined for w = beta = 0");

  const Rational one_plus_w = 1 + p.w;
  const Rational opw_d = pow_rational(one_plus_w, p.d);
  const Rational nw = Rational(p.n) * p.w;

  Rational r1 = (1 + p.n * p.beta * opw_d) / (pow_rational(1 + nw, p.k) + p.n * p.beta);
  Rational r2 = (pow_rational(one_plus_w, p.k) + p.beta * pow_rational(p.w, p.d)) /
                (pow_rational(nw, p.k) + p.beta * opw_d);
  return {r1, r2};
}

int n_max_heuristic(int d) {
  IntervalContext ctx(96);
  Enclosure dd = ctx.from_int(d);
  Enclosure bound = ctx.div(ctx.mul(ctx.mul(ctx.from_int(4), dd), ctx.sqrt(dd)), ctx.ln(dd));
  auto c = ctx.ceil(bound);
  Int value = c ? *c : num(dyadic_floor(bound.hi, 0)) + 1;
  return static_cast<int>(value.convert_to<long>());
}

namespace {

// Both case ratios are Mobius functions of beta once (d, n, k, w) are fixed:
//   r1 = (1 + A b) / (B + C b),   r2 = (D + E b) / (G + F b).
struct BetaObjective {
  Rational A, B, C, D, E, F, G;

  Rational r1(const Rational& beta) const { return (1 + A * beta) / (B + C * beta); }
  Rational r2(const Rational& beta) const { return (D + E * beta) / (G + F * beta); }
  Rational value(const Rational& beta) const { return std::min(r1(beta), r2(beta)); }

  // sign of r1(beta) - r2(beta) without divisions
  int diff_sign(const Rational& beta) const {
    Rational lhs = (1 + A * beta) * (G + F * beta);
    Rational rhs = (D + E * beta) * (B + C * beta);
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
  }
  // r2 is monotone in beta with the constant sign of E*G - D*F
  int r2_slope_sign() const {
    Rational det = E * G - D * F;
    return det < 0 ? -1 : (det == 0 ? 0 : 1);
  }
};

// Powers that depend only on w, shared across every (n, k) cell.
struct WRow {
  Rational w;
  std::vector<Rational> one_plus_w_pow;  // (1+w)^j for j = 0..d
  Rational w_pow_d;
};

WRow make_w_row(const Rational& w, int d) {
  WRow row{w, {}, pow_rational(w, d)};
  row.one_plus_w_pow.reserve(d + 1);
  Rational acc = 1;
  const Rational base = 1 + w;
  for (int j = 0; j <= d; ++j) {
    row.one_plus_w_pow.push_back(acc);
    acc *= base;
  }
  return row;
}

BetaObjective make_objective(const WRow& row, int d, int n, int k) {
  BetaObjective obj;
  obj.A = Rational(n) * row.one_plus_w_pow[d];
  obj.B = pow_rational(1 + Rational(n) * row.w, k);
  obj.C = Rational(n);
  obj.D = row.one_plus_w_pow[k];
  obj.E = row.w_pow_d;
  obj.F = row.one_plus_w_pow[d];
  obj.G = pow_rational(Rational(n) * row.w, k);
  return obj;
}

std::vector<Rational> log_grid(int points, double min_value) {
  std::vector<Rational> grid;
  grid.reserve(points);
  const double lmin = std::log(min_value);
  for (int j = 0; j < points; ++j) {
    double x = std::exp(lmin * (1.0 - double(j) / (points - 1)));
    Rational q = dyadic_floor(Rational(Int(std::llround(x * 16777216.0))), 0) / 16777216;
    if (q <= 0) q = Rational(1, 16777216);
    if (q > 1) q = 1;
    if (grid.empty() || grid.back() != q) grid.push_back(q);
  }
  return grid;
}

struct CellBest {
  Rational value = -1;
  int n = 0, k = 0;
  int w_index = -1;
  Rational w, beta;
};

bool better(const CellBest& a, const CellBest& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.k != b.k) return a.k < b.k;
  return a.n < b.n;
}

// max over beta in [lo, hi] of min(r1, r2); r1 is nondecreasing in beta, so
// the maximum sits at the crossing with r2 when r2 decreases, else at an end.
std::pair<Rational, Rational> best_beta(const BetaObjective& obj, Rational lo, Rational hi,
                                        std::uint64_t& evals) {
  auto value_at = [&](const Rational& b) {
    ++evals;
    return obj.value(b);
  };
  if (obj.r2_slope_sign() >= 0) return {hi, value_at(hi)};
  if (obj.diff_sign(hi) <= 0) return {hi, value_at(hi)};
  if (obj.diff_sign(lo) >= 0) return {lo, value_at(lo)};
  for (int it = 0; it < 80; ++it) {
    Rational mid = (lo + hi) / 2;
    if (obj.diff_sign(mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  Rational vlo = value_at(lo), vhi = value_at(hi);
  return vlo >= vhi ? std::make_pair(lo, vlo) : std::make_pair(hi, vhi);
}

Rational snap_inside(const Rational& x, const Rational& lo, const Rational& hi) {
  Rational s = dyadic_floor(x, 64);
  return (s <= lo || s >= hi) ? x : s;
}

// Golden-section ascent on w with the beta coordinate solved per candidate.
CellBest refine_cell(int d, int n, int k, Rational a, Rational b, const Rational& tolerance,
                     std::uint64_t& evals) {
  static const Rational kInvPhi(2584, 4181);  // ~0.618, Fibonacci approximant
  const Rational kInvPhi2 = 1 - kInvPhi;

  CellBest best;
  best.n = n;
  best.k = k;
  auto eval_w = [&](const Rational& w) {
    WRow row = make_w_row(w, d);
    auto [beta, value] = best_beta(make_objective(row, d, n, k), 0, 1, evals);
    if (value > best.value) {
      best.value = value;
      best.w = w;
      best.beta = beta;
    }
    return value;
  };

  Rational c = snap_inside(a + kInvPhi2 * (b - a), a, b);
  Rational dpt = snap_inside(a + kInvPhi * (b - a), a, b);
  Rational fc = eval_w(c), fd = eval_w(dpt);
  while (b - a > tolerance) {
    if (fc > fd) {
      b = dpt;
      dpt = c;
      fd = fc;
      c = snap_inside(a + kInvPhi2 * (b - a), a, b);
      fc = eval_w(c);
    } else {
      a = c;
      c = dpt;
      fc = fd;
      dpt = snap_inside(a + kInvPhi * (b - a), a, b);
      fd = eval_w(dpt);
    }
  }
  return best;
}

}  // namespace

FrontierPoint optimize_alpha(int d, const SearchConfig& config) {
  if (d < 2) throw std::invalid_argument("optimize_alpha needs d >= 2");

  const int n_max = config.n_max_override.value_or(n_max_heuristic(d));
  const std::vector<Rational> ws = log_grid(config.grid, 1e-5);
  const std::vector<Rational> betas = log_grid(config.grid, 1e-6);

  std::vector<WRow> rows;
  rows.reserve(ws.size());
  for (const auto& w : ws) rows.push_back(make_w_row(w, d));

  // k columns are independent; workers pull them from a shared counter and
  // results merge in fixed k order afterwards.
  std::vector<std::vector<CellBest>> per_k(d + 1);
  std::vector<std::uint64_t> evals_per_k(d + 1, 0);
  std::atomic<int> next_k{1};

  auto run_column = [&](int k) {
    auto& cells = per_k[k];
    auto& evals = evals_per_k[k];
    Rational best_for_k = -1;
    int streak = 0;
    for (int n = 1; n <= n_max; ++n) {
      CellBest cell;
      cell.n = n;
      cell.k = k;
      for (int wi = 0; wi < static_cast<int>(rows.size()); ++wi) {
        BetaObjective obj = make_objective(rows[wi], d, n, k);
        for (const auto& beta : betas) {
          ++evals;
          Rational v = obj.value(beta);
          if (v > cell.value) {
            cell.value = v;
            cell.w_index = wi;
            cell.w = rows[wi].w;
            cell.beta = beta;
          }
        }
      }
      cells.push_back(cell);
      if (cell.value > best_for_k) {
        best_for_k = cell.value;
        streak = 0;
      } else if (++streak >= config.n_patience && n >= config.n_floor) {
        break;
      }
    }
  };

  auto worker = [&] {
    while (true) {
      int k = next_k.fetch_add(1);
      if (k > d) break;
      run_column(k);
    }
  };
  int workers = std::max(1, config.workers);
  if (workers == 1) {
    for (int k = 1; k <= d; ++k) run_column(k);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  SearchStats stats;
  std::vector<CellBest> cells;
  for (int k = 1; k <= d; ++k) {
    stats.evaluations += evals_per_k[k];
    stats.cells += per_k[k].size();
    cells.insert(cells.end(), per_k[k].begin(), per_k[k].end());
  }
  if (cells.empty()) throw std::logic_error("empty search space");
  std::sort(cells.begin(), cells.end(), better);

  CellBest best = cells.front();
  int to_refine = std::min<int>(config.refine_top, cells.size());
  std::uint64_t refine_evals = 0;
  for (int i = 0; i < to_refine; ++i) {
    const CellBest& cell = cells[i];
    Rational lo = cell.w_index > 0 ? ws[cell.w_index - 1] : ws.front() / 2;
    Rational hi = cell.w_index + 1 < static_cast<int>(ws.size()) ? ws[cell.w_index + 1]
                                                                 : Rational(1);
    CellBest refined = refine_cell(d, cell.n, cell.k, lo, hi, config.tolerance, refine_evals);
    if (better(refined, best)) best = refined;
  }
  stats.evaluations += refine_evals;

  GadgetParams argmax{d, best.n, best.k, best.w, best.beta};
  auto [r1, r2] = case_ratios(argmax);
  FrontierPoint point{d, std::min(r1, r2), argmax, stats};
  if (point.alpha_lower != best.value) throw std::logic_error("optimizer value mismatch");
  return point;
}

GadgetParams asymptotic_params(int d) {
  if (d < 4) throw std::invalid_argument("asymptotic_params needs d >= 4");

  for (unsigned bits = 192; bits <= 1024; bits *= 2) {
    IntervalContext ctx(bits);
    Enclosure dd = ctx.from_int(d);
    Enclosure L = ctx.ln(dd);
    Enclosure LL = ctx.ln(L);
    auto k_val = ctx.ceil(ctx.div(L, ctx.mul(ctx.from_int(2), LL)));
    if (!k_val) continue;
    int k = static_cast<int>(k_val->convert_to<long>());

    Enclosure w_enc = ctx.div(L, ctx.from_int(2 * d));
    Rational w = dyadic_floor(w_enc.lo, 64);
    if (w <= 0) continue;

    Enclosure root = ctx.exp(ctx.div(ctx.mul(L, ctx.from_int(k)), ctx.from_int(2 * (k + 1))));
    Enclosure opw_d = ctx.exp(ctx.mul(ctx.from_int(d), ctx.ln(ctx.from(1 + w))));
    Enclosure beta_enc = ctx.inv(ctx.mul(root, opw_d));
    Rational beta = dyadic_floor(beta_enc.lo, 96);
    if (beta <= 0) continue;

    Enclosure nroot = ctx.exp(ctx.div(L, ctx.from_int(2 * (k + 1))));
    auto n_val = ctx.floor(ctx.inv(ctx.mul(nroot, ctx.from(w))));
    if (!n_val) continue;
    int n = static_cast<int>(n_val->convert_to<long>());

    if (k < 1 || k > d || n < 1 || w > 1 || beta > 1)
      throw std::logic_error("asymptotic parameter choice out of range");
    return GadgetParams{d, n, k, w, beta};
  }
  throw std::runtime_error("asymptotic_params: enclosure precision exhausted");
}

Enclosure appendix_g(int d) {
  if (d < 3) throw std::invalid_argument("appendix_g needs d >= 3");
  for (unsigned bits = 192; bits <= 1024; bits *= 2) {
    IntervalContext ctx(bits);
    Enclosure dd = ctx.from_int(d);
    Enclosure L = ctx.ln(dd);
    Enclosure LL = ctx.ln(L);
    auto k_val = ctx.ceil(ctx.div(L, ctx.mul(ctx.from_int(2), LL)));
    if (!k_val) continue;
    long k = k_val->convert_to<long>();

    Enclosure t = ctx.exp(ctx.neg(ctx.div(L, ctx.from_int(2 * (k + 1)))));
    Enclosure g1 = ctx.pow(ctx.add(ctx.from_int(1), t), static_cast<unsigned>(k));

    Enclosure w = ctx.div(L, ctx.from_int(2 * d));
    Enclosure opw_d = ctx.exp(ctx.mul(dd, ctx.ln(ctx.add(ctx.from_int(1), w))));
    Enclosure g2 = ctx.div(ctx.mul(ctx.from_int(2), ctx.sqrt(dd)), ctx.mul(L, opw_d));

    Enclosure g = ctx.add(g1, g2);
    if (g.width() <= Rational(1, 1000000)) return g;
  }
  throw std::runtime_error("appendix_g: requested width not reached");
}

}  // namespace cgames

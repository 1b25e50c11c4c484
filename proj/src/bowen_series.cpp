#include "weldlab/bowen_series.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "weldlab/error.hpp"

namespace weldlab {

namespace {

constexpr double kBreakpointTol = 1e-12;
constexpr double kMarkovTol = 1e-8;

double circular_gap(double a, double b) {
  const double d = ccw_distance(a, b);
  return std::min(d, kTwoPi - d);
}

// Offset of a inside the closed arc [lo, lo + len], or -1 if outside.
double offset_in_arc(double a, double lo, double len, double tol) {
  const double d = ccw_distance(lo, a);
  if (d <= len + tol) return std::min(d, len);
  if (d >= kTwoPi - tol) return 0.0;
  return -1.0;
}

void sort_unique_angles(std::vector<double>& angles, double tol) {
  for (double& a : angles) {
    a = normalize_angle(a);
    if (kTwoPi - a < tol) a = 0.0;
  }
  std::sort(angles.begin(), angles.end());
  std::vector<double> out;
  for (double a : angles) {
    if (out.empty() || a - out.back() > tol) out.push_back(a);
  }
  if (out.size() > 1 && circular_gap(out.front(), out.back()) <= tol) out.pop_back();
  angles = std::move(out);
}

std::string letter(int s) { return "g" + std::to_string(s); }

// Word of g_{r,s} = M^{r-1} g_s M^{-(r-1)} in the first-sector alphabet.
std::vector<std::string> generator_word(int r, int s) {
  std::vector<std::string> w;
  for (int i = 1; i < r; ++i) w.push_back("M");
  w.push_back(letter(s));
  for (int i = 1; i < r; ++i) w.push_back("M^-1");
  return w;
}

void append_reduced(std::vector<std::string>& word, const std::vector<std::string>& tail) {
  for (const auto& x : tail) {
    if (!word.empty() && ((word.back() == "M" && x == "M^-1") || (word.back() == "M^-1" && x == "M"))) {
      word.pop_back();
    } else {
      word.push_back(x);
    }
  }
}

}  // namespace

BowenSeriesMap::BowenSeriesMap(GroupPreset preset, bool factor)
    : preset_(std::move(preset)), factor_(factor) {
  const int n = preset_.n();
  const int p = preset_.p();
  if (factor_ && n < 2) {
    throw Error(ErrorCode::PreconditionViolation, "the factor map needs n >= 2");
  }
  if (factor_) {
    for (int s = 1; s <= p; ++s) {
      branches_.push_back({s - 1, kTwoPi * (s - 1) / p, kTwoPi * s / p, preset_.generator(1, s), n});
    }
  } else {
    const int count = preset_.side_count();
    const double u = kTwoPi / count;
    for (int k = 0; k < count; ++k) {
      branches_.push_back({k, k * u, (k + 1) * u, preset_.side_generator(k), 1});
    }
  }
  const auto fixed = fixed_angles();
  marked_fixed_angle_ = fixed.empty() ? 0.0 : fixed.front();
}

double BowenSeriesMap::branch_value(const Branch& b, double x) const {
  return normalize_angle(b.lift * std::arg(b.map(unit(x / b.lift))));
}

std::vector<double> BowenSeriesMap::fixed_angles() const {
  std::vector<double> out;
  for (const Branch& b : branches_) {
    for (int j = 0; j < b.lift; ++j) {
      const MobiusMap shifted = compose(MobiusMap::rotation(-kTwoPi * j / b.lift), b.map);
      for (cplx f : shifted.fixed_points()) {
        if (std::abs(std::abs(f) - 1.0) > 1e-9) continue;
        const double off = offset_in_arc(normalize_angle(std::arg(f)), b.alpha / b.lift,
                                         (b.beta - b.alpha) / b.lift, 1e-10);
        if (off < 0.0) continue;
        const double x = normalize_angle(b.alpha + b.lift * off);
        if (circular_gap(branch_value(b, x), x) < 1e-8) out.push_back(x);
      }
    }
  }
  sort_unique_angles(out, 1e-9);
  return out;
}

double eval_circle(const BowenSeriesMap& m, double theta) {
  theta = normalize_angle(theta);
  std::vector<double> one_sided;
  for (const Branch& b : m.branches()) {
    const double len = b.beta - b.alpha;
    const bool at_alpha = circular_gap(theta, b.alpha) < kBreakpointTol;
    const bool at_beta = circular_gap(theta, b.beta) < kBreakpointTol;
    if (at_alpha) one_sided.push_back(m.branch_value(b, b.alpha));
    if (at_beta) one_sided.push_back(m.branch_value(b, b.beta));
    if (!at_alpha && !at_beta && ccw_distance(b.alpha, theta) < len) {
      return m.branch_value(b, b.alpha + ccw_distance(b.alpha, theta));
    }
  }
  if (one_sided.empty()) throw Error(ErrorCode::OutsideDomain, "angle not covered by any branch");
  for (double v : one_sided) {
    if (circular_gap(v, one_sided.front()) > default_tolerance()) {
      throw Error(ErrorCode::AtBreakpoint,
                  "discontinuity at angle " + std::to_string(theta) + "; use one-sided limits");
    }
  }
  return one_sided.front();
}

std::vector<double> factor_lift_values(const BowenSeriesMap& m, double phi) {
  const GroupPreset& g = m.preset();
  const int n = g.n();
  const int count = g.side_count();
  const double u = kTwoPi / count;
  std::vector<double> values;
  for (int j = 0; j < n; ++j) {
    const double z_angle = normalize_angle((normalize_angle(phi) + kTwoPi * j) / n);
    const double pos = z_angle / u;
    const int k = static_cast<int>(std::floor(pos)) % count;
    if (std::abs(pos - std::round(pos)) * u < kBreakpointTol) {
      throw Error(ErrorCode::AtBreakpoint, "lift lands on a polygon vertex");
    }
    values.push_back(normalize_angle(n * std::arg(g.side_generator(k)(unit(z_angle)))));
  }
  return values;
}

cplx eval_pocket(const BowenSeriesMap& m, cplx z) {
  const GroupPreset& g = m.preset();
  constexpr double kClosedPocket = 1e-9;
  if (std::abs(z) > 1.0 + 1e-12) throw Error(ErrorCode::OutsideDomain, "point outside the disk");
  if (!m.factor()) {
    const int k = g.polygon().pocket_of(z, kClosedPocket);
    if (k < 0) throw Error(ErrorCode::OutsideDomain, "point lies in the interior of Π");
    return g.side_generator(k)(z);
  }
  const int n = g.n();
  const double r = std::abs(z);
  const cplx root = r == 0.0 ? cplx{0.0} : std::polar(std::pow(r, 1.0 / n), normalize_angle(std::arg(z)) / n);
  const int k = g.polygon().pocket_of(root, kClosedPocket);
  if (k < 0 || k >= g.p()) throw Error(ErrorCode::OutsideDomain, "point lies in the projected Π");
  return std::pow(g.generator(1, k + 1)(root), n);
}

std::vector<double> circle_preimages(const BowenSeriesMap& m, double theta) {
  std::vector<double> out;
  for (const Branch& b : m.branches()) {
    const MobiusMap inv = b.map.inverse();
    for (int j = 0; j < b.lift; ++j) {
      const cplx target = unit((theta + kTwoPi * j) / b.lift);
      const double a = normalize_angle(std::arg(inv(target)));
      const double off = offset_in_arc(a, b.alpha / b.lift, (b.beta - b.alpha) / b.lift, 1e-11);
      if (off >= 0.0) out.push_back(b.alpha + b.lift * off);
    }
  }
  sort_unique_angles(out, 1e-9);
  return out;
}

int circle_degree(const BowenSeriesMap& m) {
  int degree = -1;
  for (int i = 0; i < 20; ++i) {
    double frac = 0.1234567 + i * 0.6180339887498949;
    frac -= std::floor(frac);
    const int count = static_cast<int>(circle_preimages(m, kTwoPi * frac).size());
    if (degree < 0) {
      degree = count;
    } else if (count != degree) {
      throw Error(ErrorCode::InconsistentDegree,
                  "preimage counts " + std::to_string(degree) + " and " + std::to_string(count));
    }
  }
  return degree;
}

std::vector<std::vector<bool>> MarkovPartition::transition() const {
  std::vector<std::vector<bool>> t;
  for (const auto& row : cover) {
    std::vector<bool> r;
    for (int c : row) r.push_back(c > 0);
    t.push_back(std::move(r));
  }
  return t;
}

MarkovPartition markov_partition(const BowenSeriesMap& m) {
  MarkovPartition part;
  const auto& branches = m.branches();
  for (const Branch& b : branches) part.breakpoints.push_back(normalize_angle(b.alpha));
  std::vector<int> order(branches.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return part.breakpoints[a] < part.breakpoints[b]; });
  std::vector<double> sorted;
  for (int i : order) sorted.push_back(part.breakpoints[i]);
  part.breakpoints = sorted;
  const int count = part.arcs();
  auto arc_length = [&](int j) {
    const double next = j + 1 < count ? part.breakpoints[j + 1] : part.breakpoints[0] + kTwoPi;
    return next - part.breakpoints[j];
  };

  part.cover.assign(count, std::vector<int>(count, 0));
  for (int i = 0; i < count; ++i) {
    const Branch& b = branches[order[i]];
    part.branch_maps.push_back(b.map);
    const double start = m.branch_value(b, b.alpha);
    const double z_start = std::arg(b.map(unit(b.alpha / b.lift)));
    const double z_end = std::arg(b.map(unit(b.beta / b.lift)));
    double z_sweep = ccw_distance(z_start, z_end);
    if (z_sweep < 1e-12) z_sweep = kTwoPi;
    double remaining = b.lift * z_sweep;

    int pos = -1;
    for (int j = 0; j < count; ++j) {
      if (circular_gap(part.breakpoints[j], start) < kMarkovTol) pos = j;
    }
    if (pos < 0) {
      throw Error(ErrorCode::MarkovViolation,
                  "image of arc " + std::to_string(i) + " starts off the partition");
    }
    while (remaining > kMarkovTol) {
      part.cover[i][pos] += 1;
      remaining -= arc_length(pos);
      pos = (pos + 1) % count;
    }
    if (remaining < -kMarkovTol) {
      throw Error(ErrorCode::MarkovViolation,
                  "image of arc " + std::to_string(i) + " ends inside an arc");
    }
  }
  return part;
}

Orbit orbit(const BowenSeriesMap& m, double theta, int steps) {
  Orbit o;
  o.angles.push_back(normalize_angle(theta));
  for (int i = 0; i < steps; ++i) {
    try {
      o.angles.push_back(eval_circle(m, o.angles.back()));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::AtBreakpoint) throw;
      o.hit_breakpoint = true;
      break;
    }
  }
  return o;
}

ConjugacyValue conjugacy_h(const BowenSeriesMap& m, double theta, int depth,
                           std::optional<double> max_width) {
  if (depth < 1) throw Error(ErrorCode::PreconditionViolation, "depth must be at least 1");
  if (!m.continuous()) {
    throw Error(ErrorCode::NotConjugable, "the unfactored map is discontinuous for n >= 2");
  }
  const int d = m.expected_degree();
  if (d < 2) throw Error(ErrorCode::NotConjugable, "degree-1 map");
  if (m.fixed_angles().empty()) throw Error(ErrorCode::NotConjugable, "no fixed point on the circle");

  const double x0 = m.marked_fixed_angle();
  std::vector<double> cuts;
  for (double y : circle_preimages(m, x0)) cuts.push_back(ccw_distance(x0, y));
  std::sort(cuts.begin(), cuts.end());
  if (static_cast<int>(cuts.size()) != d || cuts.front() > 1e-9) {
    throw Error(ErrorCode::InconsistentDegree, "marked fixed point has the wrong preimage count");
  }
  cuts.front() = 0.0;
  cuts.push_back(kTwoPi);

  // Inverse branch of A onto J_j, in offsets from x0.
  auto pull_back = [&](int j, double offset) {
    if (offset <= 0.0) return cuts[j];
    if (offset >= kTwoPi) return cuts[j + 1];
    double best = cuts[j];
    double best_gap = 1e300;
    for (double y : circle_preimages(m, x0 + offset)) {
      double o = ccw_distance(x0, y);
      if (j + 1 == d && o < 1e-9) o = kTwoPi;
      const double gap = o < cuts[j] ? cuts[j] - o : (o > cuts[j + 1] ? o - cuts[j + 1] : 0.0);
      if (gap < best_gap) {
        best_gap = gap;
        best = o;
      }
    }
    return std::clamp(best, cuts[j], cuts[j + 1]);
  };

  ConjugacyValue out;
  double t = normalize_angle(theta) / kTwoPi;
  for (int k = 0; k < depth; ++k) {
    const int symbol = std::min(d - 1, static_cast<int>(std::floor(d * t)));
    out.itinerary.push_back(symbol);
    t = d * t - symbol;
  }
  double lo = 0.0;
  double hi = kTwoPi;
  for (int k = depth - 1; k >= 0; --k) {
    const int j = out.itinerary[k];
    const double new_lo = pull_back(j, lo);
    const double new_hi = pull_back(j, hi);
    lo = new_lo;
    hi = std::max(new_hi, new_lo);
  }
  out.angle = normalize_angle(x0 + (lo + hi) / 2.0);
  out.radius = (hi - lo) / 2.0;
  if (max_width && hi - lo > *max_width) {
    throw Error(ErrorCode::DepthTooSmall, "itinerary arc width " + std::to_string(hi - lo) +
                                              " exceeds " + std::to_string(*max_width));
  }
  return out;
}

std::vector<Tile> tiles(const BowenSeriesMap& m, int rank) {
  if (rank < 0) throw Error(ErrorCode::PreconditionViolation, "rank must be non-negative");
  if (rank > kMaxTileRank) {
    throw Error(ErrorCode::RankLimit, "rank " + std::to_string(rank) + " exceeds " +
                                          std::to_string(kMaxTileRank));
  }
  const GroupPreset& g = m.preset();
  const int count = g.side_count();
  const int first_letters = m.factor() ? g.p() : count;
  double estimate = rank == 0 ? 1.0 : first_letters * std::pow(count - 1.0, rank - 1);
  if (estimate > 2e6) throw Error(ErrorCode::RankLimit, "too many tiles at this rank");

  std::vector<Tile> out;
  const IdealPolygon& poly = g.polygon();
  auto finish = [&](Tile t) {
    std::vector<std::string> word;
    for (int k : t.sides) {
      const int partner = g.paired_side(k);
      append_reduced(word, generator_word(partner / g.p() + 1, partner % g.p() + 1));
    }
    for (std::size_t i = 0; i < word.size(); ++i) t.word += (i ? " " : "") + word[i];
    if (t.word.empty()) t.word = "id";
    for (double v : poly.vertices()) {
      cplx z = t.element(unit(v));
      if (m.factor()) z = std::pow(z, g.n());
      t.vertices.push_back(z);
    }
    out.push_back(std::move(t));
  };

  std::function<void(Tile&, int)> grow = [&](Tile& t, int left) {
    if (left == 0) {
      finish(t);
      return;
    }
    const int limit = t.sides.empty() ? first_letters : count;
    for (int k = 0; k < limit; ++k) {
      if (!t.sides.empty() && k == g.paired_side(t.sides.back())) continue;
      Tile next = t;
      next.sides.push_back(k);
      next.element = compose(t.element, g.side_generator(k).inverse());
      grow(next, left - 1);
    }
  };
  Tile root;
  grow(root, rank);
  return out;
}

bool tile_contains(const BowenSeriesMap& m, const Tile& t, cplx z, double margin) {
  const GroupPreset& g = m.preset();
  const MobiusMap inv = t.element.inverse();
  std::vector<cplx> roots;
  if (!m.factor()) {
    roots.push_back(z);
  } else {
    const int n = g.n();
    const double r = std::pow(std::abs(z), 1.0 / n);
    const double a = std::arg(z);
    for (int j = 0; j < n; ++j) roots.push_back(std::polar(r, (a + kTwoPi * j) / n));
  }
  return std::any_of(roots.begin(), roots.end(),
                     [&](cplx w) { return g.polygon().contains_interior(inv(w), margin); });
}

int critical_local_degree(const BowenSeriesMap& m, int s) {
  if (!m.factor()) throw Error(ErrorCode::PreconditionViolation, "critical points need the factor map");
  const GroupPreset& g = m.preset();
  const int n = g.n();
  const MobiusMap gs = g.generator(1, s);
  const cplx zeta0 = gs.inverse()(0.0);
  const cplx w0 = std::pow(zeta0, n);
  const double rho = 1e-3 * (1.0 - std::abs(w0));
  auto value = [&](cplx w) { return std::pow(gs(zeta0 * std::pow(w / w0, 1.0 / n)), n); };
  constexpr int kSamples = 64;
  double total = 0.0;
  cplx prev = value(w0 + rho);
  for (int i = 1; i <= kSamples; ++i) {
    const cplx cur = value(w0 + std::polar(rho, kTwoPi * i / kSamples));
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

}  // namespace weldlab

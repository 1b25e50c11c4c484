#include "weldlab/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_map>

#include "weldlab/error.hpp"

namespace weldlab {

namespace {

int wrap(int k, int m) { return ((k % m) + m) % m; }

int floor_div(int a, int b) { return (a >= 0) ? a / b : -((-a + b - 1) / b); }

// Entrywise distance of normalized matrices, up to the overall sign.
double map_distance(const MobiusMap& f, const MobiusMap& g) {
  double plus = 0.0;
  double minus = 0.0;
  const cplx fe[] = {f.a(), f.b(), f.c(), f.d()};
  const cplx ge[] = {g.a(), g.b(), g.c(), g.d()};
  for (int i = 0; i < 4; ++i) {
    plus = std::max(plus, std::abs(fe[i] - ge[i]));
    minus = std::max(minus, std::abs(fe[i] + ge[i]));
  }
  return std::min(plus, minus);
}

}  // namespace

// ---------------------------------------------------------------------------
// Model tiling set

ModelTilingSet::ModelTilingSet(GroupPreset preset) : preset_(std::move(preset)) {
  const int p = preset_.p();
  const int np = preset_.side_count();
  for (int j = 1; j <= p; ++j) {
    eta_maps_.push_back(preset_.generator(1, j));
    // τ^{k_j} carries component σ(j) back to j; the representative in [0, np)
    // wraps around the full τ-cycle, so no rotation is picked up.
    k_.push_back(wrap(j - preset_.sigma(j), np));
  }
}

ModelPoint ModelTilingSet::make_point(cplx w, int comp) const {
  if (comp < 1 || comp > p()) {
    throw Error(ErrorCode::PreconditionViolation, "component " + std::to_string(comp) + " out of range");
  }
  return ModelPoint{w, 0, comp};
}

cplx ModelTilingSet::value(const ModelPoint& z) const {
  if (z.rot == 0) return z.base;
  return unit(kTwoPi * z.rot / n()) * z.base;
}

cplx ModelTilingSet::project(const ModelPoint& z) const {
  cplx v = 1.0;
  for (int i = 0; i < n(); ++i) v *= z.base;
  return v;
}

ModelPoint ModelTilingSet::tau(const ModelPoint& z, int k) const {
  if (z.base == cplx(0.0)) {
    return ModelPoint{z.base, 0, wrap(z.comp - 1 + k, p()) + 1};
  }
  const int idx = wrap(z.rot * p() + (z.comp - 1) + k, degree());
  return ModelPoint{z.base, idx / p(), idx % p() + 1};
}

ModelPoint ModelTilingSet::eta(const ModelPoint& z) const {
  const cplx w = eta_maps_[z.comp - 1](value(z));
  return ModelPoint{w, 0, preset_.sigma(z.comp)};
}

std::vector<ModelPoint> ModelTilingSet::fiber(const ModelPoint& z) const {
  std::vector<ModelPoint> out{z};
  for (ModelPoint t = tau(z); !(t == z); t = tau(t)) out.push_back(t);
  return out;
}

bool ModelTilingSet::same_point(const ModelPoint& a, const ModelPoint& b, double tol) const {
  return a.comp == b.comp && std::abs(value(a) - value(b)) <= tol;
}

// ---------------------------------------------------------------------------
// Words

ModelWord ModelWord::tau(int k) { return ModelWord{{ModelLetter{false, k}}}; }

ModelWord ModelWord::eta() { return ModelWord{{ModelLetter{true, 0}}}; }

ModelWord ModelWord::then(const ModelWord& first) const {
  ModelWord out = *this;
  out.letters.insert(out.letters.end(), first.letters.begin(), first.letters.end());
  return out;
}

std::string ModelWord::text() const {
  std::string out;
  for (const auto& l : letters) {
    if (!l.eta && l.tau_power == 0) continue;
    if (!out.empty()) out += " ";
    if (l.eta) {
      out += "eta";
    } else {
      out += "tau";
      if (l.tau_power != 1) out += "^" + std::to_string(l.tau_power);
    }
  }
  return out.empty() ? "id" : out;
}

ModelPoint apply(const ModelTilingSet& m, const ModelWord& w, const ModelPoint& z) {
  ModelPoint out = z;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out = it->eta ? m.eta(out) : m.tau(out, it->tau_power);
  }
  return out;
}

bool ComponentAction::is_identity(double tol) const {
  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (targets[j] != static_cast<int>(j) + 1 || !maps[j].is_identity(tol)) return false;
  }
  return true;
}

namespace {

ComponentAction letter_action(const ModelTilingSet& m, const ModelLetter& l) {
  ComponentAction a;
  const int p = m.p();
  for (int j = 1; j <= p; ++j) {
    if (l.eta) {
      a.maps.push_back(m.preset().generator(1, j));
      a.targets.push_back(m.preset().sigma(j));
    } else {
      const int shifted = j - 1 + l.tau_power;
      const int turns = floor_div(shifted, p);
      a.maps.push_back(MobiusMap::rotation(kTwoPi * wrap(turns, m.n()) / m.n()));
      a.targets.push_back(wrap(shifted, p) + 1);
    }
  }
  return a;
}

}  // namespace

ComponentAction compose(const ComponentAction& f, const ComponentAction& g) {
  ComponentAction out;
  for (std::size_t j = 0; j < g.maps.size(); ++j) {
    const int t = g.targets[j] - 1;
    out.maps.push_back(compose(f.maps[t], g.maps[j]));
    out.targets.push_back(f.targets[t]);
  }
  return out;
}

ComponentAction action_of(const ModelTilingSet& m, const ModelWord& w) {
  ComponentAction out = letter_action(m, ModelLetter{false, 0});
  for (const auto& l : w.letters) out = compose(out, letter_action(m, l));
  return out;
}

int mobius_order(const MobiusMap& f, int max_order) {
  // a non-elliptic map never returns to the identity, and its powers overflow
  if (std::abs(f.trace()) > 2.0 - 1e-9 && !f.is_identity(1e-8)) return 0;
  MobiusMap g = f;
  for (int k = 1; k <= max_order; ++k) {
    if (g.is_identity(1e-8)) return k;
    g = compose(g, f);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Branches

BranchReport branch_words(const ModelTilingSet& m, int samples, unsigned seed) {
  BranchReport report;
  for (int k = 1; k < m.degree(); ++k) {
    report.branches.push_back(ModelWord::tau(k).then(ModelWord::eta()));
  }

  // τ = (τ²η)(τη)⁻¹ with (τη)⁻¹ = η τ⁻¹
  const ModelWord recovered = ModelWord::tau(2)
                                  .then(ModelWord::eta())
                                  .then(ModelWord::eta())
                                  .then(ModelWord::tau(-1));
  const ModelWord eta2 = ModelWord::eta().then(ModelWord::eta());

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> radius(0.0, 0.9);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_int_distribution<int> comp(1, m.p());
  auto distance = [&](const ModelPoint& a, const ModelPoint& b) {
    if (a.comp != b.comp) return std::numeric_limits<double>::infinity();
    return std::abs(m.value(a) - m.value(b));
  };
  for (int i = 0; i < samples; ++i) {
    const ModelPoint z = m.make_point(std::polar(radius(rng), angle(rng)), comp(rng));
    report.generating_residual =
        std::max(report.generating_residual, distance(apply(m, recovered, z), m.tau(z)));
    report.involution_residual = std::max(report.involution_residual, distance(apply(m, eta2, z), z));
  }
  report.samples = samples;
  return report;
}

// ---------------------------------------------------------------------------
// Representation recovery

Representation recover_representation(const ModelTilingSet& m) {
  Representation rep;
  const GroupPreset& g = m.preset();
  const int max_order = 4 * std::max(2, m.n());

  for (int j = 1; j <= m.p(); ++j) {
    RecoveredGenerator r;
    r.side = j;
    r.word = ModelWord::tau(-(j - 1))
                 .then(ModelWord::tau(m.k_exponents()[j - 1]))
                 .then(ModelWord::eta())
                 .then(ModelWord::tau(j - 1));
    const ComponentAction a = action_of(m, r.word);
    r.stabilizes_first = a.targets[0] == 1;
    r.residual = map_distance(a.maps[0], g.generator(1, j));
    r.order = r.stabilizes_first ? mobius_order(a.maps[0], max_order) : 0;
    rep.generators.push_back(r);
  }

  RecoveredGenerator rot;
  rot.side = 0;
  rot.word = ModelWord::tau(m.p());
  const ComponentAction ra = action_of(m, rot.word);
  rot.stabilizes_first = ra.targets[0] == 1;
  rot.residual = map_distance(ra.maps[0], g.rotation());
  rot.order = mobius_order(ra.maps[0], max_order);
  rep.generators.push_back(rot);

  for (const auto& r : rep.generators) {
    if (!r.stabilizes_first) {
      throw Error(ErrorCode::RelationMismatch,
                  "word " + r.word.text() + " does not stabilize component 1");
    }
    if (r.residual > 1e-8) {
      throw Error(ErrorCode::RelationMismatch,
                  "word " + r.word.text() + " does not act as the expected generator");
    }
    if (r.order > 1) rep.recovered_orders.push_back(r.order);
  }
  std::sort(rep.recovered_orders.begin(), rep.recovered_orders.end());
  rep.signature_orders = orbifold_signature(g, true).cone_points;
  if (rep.recovered_orders != rep.signature_orders) {
    auto join = [](const std::vector<int>& v) {
      std::string s;
      for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
      return "[" + s + "]";
    };
    throw Error(ErrorCode::RelationMismatch, g.label() + ": recovered orders " +
                                                 join(rep.recovered_orders) + " vs signature " +
                                                 join(rep.signature_orders));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Tiling

bool in_fundamental_domain(const GroupPreset& g, cplx z, double margin) {
  if (!g.polygon().contains_interior(z, margin)) return false;
  if (g.n() == 1) return true;
  if (std::abs(z) <= margin) return false;
  const double t = normalize_angle(std::arg(z));
  const double span = kTwoPi / g.n();
  // distance to the bounding radii, measured perpendicular to them
  const double r = std::abs(z);
  return t < span && r * std::sin(t) > margin && r * std::sin(span - t) > margin;
}

std::vector<cplx> fundamental_samples(const GroupPreset& g) {
  const double rho = g.polygon().inner_radius();
  const double span = kTwoPi / g.n();
  std::vector<cplx> out;
  for (double f : {0.35, 0.75}) {
    for (int k = 0; k < 10; ++k) out.push_back(std::polar(f * rho, span * (k + 0.5) / 10.0));
  }
  return out;
}

namespace {

struct Box {
  double x0 = 1.0, y0 = 1.0, x1 = -1.0, y1 = -1.0;

  void add(cplx z) {
    x0 = std::min(x0, z.real());
    x1 = std::max(x1, z.real());
    y0 = std::min(y0, z.imag());
    y1 = std::max(y1, z.imag());
  }
};

// Bounding box of the geodesic segment between two points of the closed disk.
void add_segment(Box& box, cplx a, cplx b) {
  box.add(a);
  box.add(b);
  const auto circle = geodesic_circle(a, b);
  if (!circle) return;
  const cplx c = circle->center;
  const double r = circle->radius;
  const double pa = std::arg(a - c);
  double sweep = std::remainder(std::arg(b - c) - pa, kTwoPi);  // short arc
  const double lo = std::min(pa, pa + sweep);
  const double hi = std::max(pa, pa + sweep);
  for (int q = -4; q <= 4; ++q) {
    const double t = q * std::numbers::pi / 2.0;
    if (t > lo && t < hi) box.add(c + std::polar(r, t));
  }
}

struct KeyHash {
  std::size_t operator()(const std::pair<long long, long long>& k) const {
    return std::hash<long long>()(k.first * 1000003LL) ^ std::hash<long long>()(k.second);
  }
};

constexpr std::size_t kMaxTilingTiles = 200000;
constexpr int kGrid = 512;

}  // namespace

TilingReport group_tiling(const GroupPreset& g, int max_word_length) {
  if (max_word_length < 0 || max_word_length > kMaxWordLength) {
    throw Error(ErrorCode::RankLimit, "word length " + std::to_string(max_word_length) +
                                          " outside [0, " + std::to_string(kMaxWordLength) + "]");
  }
  if (g.side_count() == 2) {
    throw Error(ErrorCode::DegenerateInput, g.label() + " has a two-sided polygon with empty interior");
  }

  struct Gen {
    MobiusMap map;
    std::string name;
    int inverse = -1;
  };
  std::vector<Gen> gens;
  for (int s = 1; s <= g.p(); ++s) gens.push_back({g.generator(1, s), "g" + std::to_string(s)});
  for (int s = 1; s <= g.p(); ++s) gens[s - 1].inverse = g.sigma(s) - 1;
  if (g.n() >= 2) {
    const int m = static_cast<int>(gens.size());
    gens.push_back({g.rotation(), "M", m + 1});
    gens.push_back({g.rotation().inverse(), "M^-1", m});
    if (g.n() == 2) gens.pop_back(), gens.back().inverse = m;
  }

  const cplx anchor = std::polar(0.5 * g.polygon().inner_radius(), std::numbers::pi / g.n() * 0.9);
  std::unordered_map<std::pair<long long, long long>, int, KeyHash> seen;
  auto key_of = [](cplx z) {
    return std::make_pair(std::llround(z.real() * 1e9), std::llround(z.imag() * 1e9));
  };
  auto lookup = [&](cplx z) {
    const auto k = key_of(z);
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        if (seen.count({k.first + dx, k.second + dy})) return true;
      }
    }
    return false;
  };

  TilingReport report;
  std::vector<int> last_letter;
  report.tiles.push_back({MobiusMap::identity(), "id", 0});
  last_letter.push_back(-1);
  seen[key_of(anchor)] = 0;
  std::size_t begin = 0;
  for (int len = 1; len <= max_word_length; ++len) {
    const std::size_t end = report.tiles.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (int k = 0; k < static_cast<int>(gens.size()); ++k) {
        if (last_letter[i] >= 0 && gens[last_letter[i]].inverse == k) continue;
        const MobiusMap e = compose(report.tiles[i].element, gens[k].map);
        const cplx image = e(anchor);
        if (lookup(image)) continue;
        seen[key_of(image)] = static_cast<int>(report.tiles.size());
        const std::string word =
            report.tiles[i].length == 0 ? gens[k].name : report.tiles[i].word + "." + gens[k].name;
        report.tiles.push_back({e, word, len});
        last_letter.push_back(k);
        if (report.tiles.size() > kMaxTilingTiles) {
          throw Error(ErrorCode::RankLimit, "tiling exceeds " + std::to_string(kMaxTilingTiles) + " tiles");
        }
      }
    }
    begin = end;
  }

  // Boundary of the fundamental domain as geodesic segments.
  std::vector<std::pair<cplx, cplx>> boundary;
  const auto& verts = g.polygon().vertices();
  const int last_side = g.n() == 1 ? g.side_count() : g.p();
  for (int k = 0; k < last_side; ++k) {
    boundary.push_back({unit(verts[k]), unit(verts[(k + 1) % g.side_count()])});
  }
  if (g.n() >= 2) {
    boundary.push_back({0.0, unit(verts[0])});
    boundary.push_back({0.0, unit(verts[g.p()])});
  }

  const std::size_t count = report.tiles.size();
  std::vector<MobiusMap> inverses(count);
  std::vector<std::vector<int>> grid(kGrid * kGrid);
  auto cell = [](double x) { return std::clamp(static_cast<int>((x + 1.0) * 0.5 * kGrid), 0, kGrid - 1); };
  for (std::size_t t = 0; t < count; ++t) {
    const MobiusMap& e = report.tiles[t].element;
    inverses[t] = e.inverse();
    Box box;
    for (const auto& [a, b] : boundary) add_segment(box, e(a), e(b));
    const double pad = 1e-9;
    for (int ix = cell(box.x0 - pad); ix <= cell(box.x1 + pad); ++ix) {
      for (int iy = cell(box.y0 - pad); iy <= cell(box.y1 + pad); ++iy) {
        grid[ix * kGrid + iy].push_back(static_cast<int>(t));
      }
    }
  }

  const std::vector<cplx> samples = fundamental_samples(g);
  report.samples_per_tile = static_cast<int>(samples.size());
  for (std::size_t t = 0; t < count; ++t) {
    for (cplx x : samples) {
      const cplx q = report.tiles[t].element(x);
      for (int other : grid[cell(q.real()) * kGrid + cell(q.imag())]) {
        if (other == static_cast<int>(t)) continue;
        ++report.checks;
        if (in_fundamental_domain(g, inverses[other](q))) ++report.overlaps;
      }
    }
  }
  if (report.overlaps > 0) {
    throw Error(ErrorCode::OverlapDetected, g.label() + ": " + std::to_string(report.overlaps) +
                                                " sample points lie in two tiles");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Blaschke products

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, cplx rotation)
    : zeros_(std::move(zeros)), rotation_(rotation) {
  if (zeros_.empty()) throw Error(ErrorCode::DegenerateInput, "Blaschke product needs at least one zero");
  for (cplx a : zeros_) {
    if (!(std::abs(a) < 1.0)) throw Error(ErrorCode::DegenerateInput, "Blaschke zero outside the open disk");
  }
  if (std::abs(std::abs(rotation_) - 1.0) > 1e-12) {
    throw Error(ErrorCode::DegenerateInput, "Blaschke rotation factor must be unimodular");
  }

  // Iterating from 0 settles exactly when there is an attracting fixed point;
  // near a parabolic boundary point the steps stay far above the threshold.
  cplx z = 0.0;
  bool settled = false;
  for (int i = 0; i < 20000 && !settled; ++i) {
    const cplx next = (*this)(z);
    settled = std::abs(next - z) < 1e-14;
    z = next;
  }
  for (int i = 0; settled && i < 4; ++i) {
    const cplx d = derivative(z) - 1.0;
    if (std::abs(d) < 1e-6) break;
    z -= ((*this)(z) - z) / d;
  }
  attracting_ = z;
  multiplier_ = std::abs(derivative(z));
  if (!settled || !(std::abs(z) < 1.0 - 1e-9) || !(multiplier_ < 1.0 - 1e-9)) {
    throw Error(ErrorCode::NotHyperbolic, "no attracting fixed point in the disk (|B'| = " +
                                              std::to_string(multiplier_) + ")");
  }
}

BlaschkeProduct BlaschkeProduct::power(int d) {
  return BlaschkeProduct(std::vector<cplx>(static_cast<std::size_t>(std::max(d, 0)), 0.0));
}

cplx BlaschkeProduct::operator()(cplx z) const {
  cplx v = rotation_;
  for (cplx a : zeros_) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

cplx BlaschkeProduct::derivative(cplx z) const {
  // product rule over the factors (z - a)/(1 - āz), whose derivative is (1 - |a|²)/(1 - āz)²
  cplx total = 0.0;
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    cplx term = rotation_;
    for (std::size_t k = 0; k < zeros_.size(); ++k) {
      const cplx a = zeros_[k];
      const cplx den = 1.0 - std::conj(a) * z;
      term *= (k == i) ? (1.0 - std::norm(a)) / (den * den) : (z - a) / den;
    }
    total += term;
  }
  return total;
}

int BlaschkeProduct::circle_winding(int samples) const {
  double turn = 0.0;
  cplx prev = (*this)(1.0);
  for (int k = 1; k <= samples; ++k) {
    const cplx cur = (*this)(unit(kTwoPi * k / samples));
    turn += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(turn / kTwoPi));
}

BlaschkeOrbit blaschke_orbit(const BlaschkeProduct& b, cplx z, int iterations, double tol) {
  if (std::abs(z) > 1.0 + 1e-12) throw Error(ErrorCode::OutsideDomain, "orbit start outside the closed disk");
  BlaschkeOrbit orbit;
  orbit.points.push_back(z);
  for (int i = 0; i < iterations; ++i) {
    if (std::abs(z - b.attracting_point()) < tol) {
      orbit.converged = true;
      break;
    }
    z = b(z);
    orbit.points.push_back(z);
    orbit.steps = i + 1;
  }
  if (!orbit.converged && std::abs(z - b.attracting_point()) < tol) orbit.converged = true;
  return orbit;
}

}  // namespace weldlab

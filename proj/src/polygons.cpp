#include "stairgf/polygons.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <set>

namespace stairgf {

bool LatticePolygon::is_valid() const {
  if (cycle.size() < 4) return false;
  std::set<Point> seen;
  for (size_t i = 0; i < cycle.size(); ++i) {
    const Point& a = cycle[i];
    const Point& b = cycle[(i + 1) % cycle.size()];
    if (std::abs(a.first - b.first) + std::abs(a.second - b.second) != 1) return false;
    if (!seen.insert(a).second) return false;
  }
  return true;
}

bool LatticePolygon::contains_strictly(const Point& p) const {
  // p is off the boundary, so it shares the status of the cell to its upper right;
  // count vertical edges crossed by a ray from that cell's center towards +x.
  int crossings = 0;
  for (size_t i = 0; i < cycle.size(); ++i) {
    const Point& a = cycle[i];
    const Point& b = cycle[(i + 1) % cycle.size()];
    if (a == p) return false;
    if (a.first != b.first || a.first <= p.first) continue;
    if (std::min(a.second, b.second) == p.second) ++crossings;
  }
  return crossings % 2 == 1;
}

LatticePolygon LatticePolygon::translated(int dx, int dy) const {
  LatticePolygon r = *this;
  for (auto& [x, y] : r.cycle) {
    x += dx;
    y += dy;
  }
  return r;
}

namespace {

void check_limit(int n, int limit, std::string_view what) {
  if (n > limit)
    throw DomainError(std::string(what) + " enumeration is limited to half-perimeter " + std::to_string(limit) +
                      " (requested " + std::to_string(n) + ")");
}

// All north/east step sequences with w east steps and h north steps; true = east.
std::vector<std::vector<bool>> ne_paths(int w, int h) {
  std::vector<std::vector<bool>> out;
  std::vector<bool> steps(static_cast<size_t>(w + h), false);
  std::fill(steps.begin(), steps.begin() + w, true);
  std::sort(steps.begin(), steps.end());
  do out.push_back(steps);
  while (std::next_permutation(steps.begin(), steps.end()));
  return out;
}

}  // namespace

std::vector<LatticePolygon> staircase_polygons(int n, const Point& origin) {
  std::vector<LatticePolygon> out;
  for (int w = 1; w < n; ++w) {
    const int h = n - w;
    auto paths = ne_paths(w, h);
    for (const auto& up : paths) {
      if (up.front() || !up.back()) continue;  // upper path: starts north, ends east
      for (const auto& lo : paths) {
        if (!lo.front() || lo.back()) continue;
        // Both paths are on the antidiagonal x + y = k after k steps; they may only meet at the ends.
        int yu = 0, yl = 0;
        bool ok = true;
        for (int k = 0; k + 1 < n && ok; ++k) {
          yu += up[static_cast<size_t>(k)] ? 0 : 1;
          yl += lo[static_cast<size_t>(k)] ? 0 : 1;
          ok = yu > yl;
        }
        if (!ok) continue;
        LatticePolygon p;
        int x = origin.first, y = origin.second;
        for (int k = 0; k < n; ++k) {
          p.cycle.emplace_back(x, y);
          (lo[static_cast<size_t>(k)] ? x : y) += 1;
        }
        for (int k = n - 1; k >= 0; --k) {
          p.cycle.emplace_back(x, y);
          (up[static_cast<size_t>(k)] ? x : y) -= 1;
        }
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

CountTable enumerate_staircase(int max_n, const EnumOptions& opt) {
  check_limit(max_n, kMaxStaircase, "staircase");
  CountTable t;
  for (int n = 2; n <= max_n; ++n) {
    auto polys = staircase_polygons(n, opt.origin);
    for (const auto& p : polys)
      if (!p.is_valid()) throw Error("generated an invalid staircase polygon");
    t[n] = static_cast<unsigned long>(polys.size());
  }
  return t;
}

namespace {

struct Shape {
  LatticePolygon poly;
  int half;
  int minx, miny, maxx, maxy;
};

Shape make_shape(LatticePolygon p, int half) {
  Shape s{std::move(p), half, 1 << 30, 1 << 30, -(1 << 30), -(1 << 30)};
  for (const auto& [x, y] : s.poly.cycle) {
    s.minx = std::min(s.minx, x);
    s.miny = std::min(s.miny, y);
    s.maxx = std::max(s.maxx, x);
    s.maxy = std::max(s.maxy, y);
  }
  return s;
}

// Placements of every inner shape strictly inside `outer`, by inner half-perimeter.
std::map<int, unsigned long> count_holes(const Shape& outer, const std::vector<Shape>& inners, int budget) {
  std::map<int, unsigned long> out;
  const int w = outer.maxx - outer.minx + 1, h = outer.maxy - outer.miny + 1;
  std::vector<char> inside(static_cast<size_t>(w * h), 0);
  for (int x = outer.minx; x <= outer.maxx; ++x)
    for (int y = outer.miny; y <= outer.maxy; ++y)
      inside[static_cast<size_t>((x - outer.minx) * h + (y - outer.miny))] = outer.poly.contains_strictly({x, y});
  for (const auto& in : inners) {
    if (in.half > budget) continue;
    for (int dx = outer.minx + 1 - in.minx; dx + in.maxx < outer.maxx; ++dx)
      for (int dy = outer.miny + 1 - in.miny; dy + in.maxy < outer.maxy; ++dy) {
        bool ok = true;
        for (const auto& [x, y] : in.poly.cycle)
          if (!inside[static_cast<size_t>((x + dx - outer.minx) * h + (y + dy - outer.miny))]) {
            ok = false;
            break;
          }
        if (ok) ++out[in.half];
      }
  }
  return out;
}

}  // namespace

CountTable enumerate_punctured(int max_n, const EnumOptions& opt) {
  check_limit(max_n, kMaxPunctured, "punctured");
  CountTable t;
  for (int n = 8; n <= max_n; ++n) t[n] = 0;
  if (max_n < 8) return t;
  // The smallest hole (half-perimeter 2) needs an outer polygon of half-perimeter >= 6.
  std::vector<Shape> inners, outers;
  for (int b = 2; b <= max_n - 6; ++b)
    for (auto& p : staircase_polygons(b)) inners.push_back(make_shape(std::move(p), b));
  for (int a = 6; a <= max_n - 2; ++a)
    for (auto& p : staircase_polygons(a, opt.origin)) outers.push_back(make_shape(std::move(p), a));

  auto work = [&](size_t begin, size_t end) {
    CountTable part;
    for (size_t i = begin; i < end; ++i) {
      const Shape& o = outers[i];
      for (const auto& [b, c] : count_holes(o, inners, max_n - o.half)) part[o.half + b] += c;
    }
    return part;
  };
  std::vector<CountTable> parts;
  if (opt.parallel) {
    const size_t chunks = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<CountTable>> futs;
    for (size_t c = 0; c < chunks; ++c)
      futs.push_back(std::async(std::launch::async, work, outers.size() * c / chunks, outers.size() * (c + 1) / chunks));
    for (auto& f : futs) parts.push_back(f.get());
  } else {
    parts.push_back(work(0, outers.size()));
  }
  for (const auto& part : parts)
    for (const auto& [n, c] : part) t[n] += c;
  return t;
}

std::string ThreeChoiceConvention::name() const {
  std::string s = objects == Objects::Traversals ? "rooted" : "polygons";
  if (closing_turn_checked) s += "-strict";
  return s;
}

ThreeChoiceConvention ThreeChoiceConvention::parse(std::string_view name) {
  for (const auto& c : all())
    if (c.name() == name) return c;
  std::string msg = "unknown convention '" + std::string(name) + "'; available:";
  for (const auto& c : all()) msg += " " + c.name();
  throw UnknownNameError(msg);
}

std::vector<ThreeChoiceConvention> ThreeChoiceConvention::all() {
  using O = Objects;
  return {{O::Traversals, false}, {O::Traversals, true}, {O::Polygons, false}, {O::Polygons, true}};
}

namespace {

// Directions in counterclockwise order: E, N, W, S. A right turn from d is (d + 3) % 4.
constexpr std::array<Point, 4> kDir{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

bool allowed(int prev, int next) {
  if (next == (prev + 2) % 4) return false;
  return !((prev == 0 || prev == 2) && next == (prev + 3) % 4);
}

struct WalkCounter {
  int max_len;
  ThreeChoiceConvention conv;
  std::vector<unsigned long> traversals;            // by length
  std::vector<std::set<std::vector<Point>>> shapes;  // by length
  std::vector<Point> path;
  std::set<Point> visited;
  std::vector<int> steps;

  void record(int len) {
    if (conv.objects == ThreeChoiceConvention::Objects::Traversals) {
      ++traversals[static_cast<size_t>(len)];
      return;
    }
    // Identify the polygon by its translation-normalized edge set.
    auto [mx, my] = *std::min_element(path.begin(), path.end());
    std::vector<Point> v;
    for (size_t i = 0; i < path.size(); ++i) {
      Point a{path[i].first - mx, path[i].second - my};
      Point b{path[(i + 1) % path.size()].first - mx, path[(i + 1) % path.size()].second - my};
      if (b < a) std::swap(a, b);
      v.push_back(a);
      v.push_back(b);
    }
    std::vector<std::pair<Point, Point>> edges;
    for (size_t i = 0; i < v.size(); i += 2) edges.emplace_back(v[i], v[i + 1]);
    std::sort(edges.begin(), edges.end());
    v.clear();
    for (const auto& [a, b] : edges) {
      v.push_back(a);
      v.push_back(b);
    }
    shapes[static_cast<size_t>(len)].insert(std::move(v));
  }

  void dfs(const Point& pos) {
    const int k = static_cast<int>(steps.size());
    for (int d = 0; d < 4; ++d) {
      if (k > 0 && !allowed(steps.back(), d)) continue;
      Point np{pos.first + kDir[static_cast<size_t>(d)].first, pos.second + kDir[static_cast<size_t>(d)].second};
      if (np == path.front()) {
        if (k + 1 >= 4 && (!conv.closing_turn_checked || allowed(d, steps.front()))) record(k + 1);
        continue;
      }
      if (k + 1 >= max_len) continue;
      // Remaining steps must be able to return.
      int dist = std::abs(np.first - path.front().first) + std::abs(np.second - path.front().second);
      if (dist > max_len - k - 1) continue;
      if (visited.count(np)) continue;
      visited.insert(np);
      path.push_back(np);
      steps.push_back(d);
      dfs(np);
      steps.pop_back();
      path.pop_back();
      visited.erase(np);
    }
  }
};

}  // namespace

CountTable enumerate_three_choice(int max_n, const ThreeChoiceConvention& conv, const EnumOptions& opt) {
  check_limit(max_n, kMaxThreeChoice, "three-choice");
  const int max_len = 2 * max_n;
  auto run = [&](int first_dir) {
    WalkCounter w{max_len, conv, std::vector<unsigned long>(static_cast<size_t>(max_len + 1)),
                  std::vector<std::set<std::vector<Point>>>(static_cast<size_t>(max_len + 1)), {}, {}, {}};
    Point o = opt.origin;
    Point p{o.first + kDir[static_cast<size_t>(first_dir)].first, o.second + kDir[static_cast<size_t>(first_dir)].second};
    w.path = {o, p};
    w.visited = {o, p};
    w.steps = {first_dir};
    w.dfs(p);
    return w;
  };
  std::vector<WalkCounter> parts;
  if (opt.parallel) {
    std::vector<std::future<WalkCounter>> futs;
    for (int d = 0; d < 4; ++d) futs.push_back(std::async(std::launch::async, run, d));
    for (auto& f : futs) parts.push_back(f.get());
  } else {
    for (int d = 0; d < 4; ++d) parts.push_back(run(d));
  }
  CountTable t;
  for (int n = 2; n <= max_n; ++n) {
    const size_t len = static_cast<size_t>(2 * n);
    if (conv.objects == ThreeChoiceConvention::Objects::Traversals) {
      unsigned long c = 0;
      for (const auto& p : parts) c += p.traversals[len];
      t[n] = c;
    } else {
      std::set<std::vector<Point>> all;
      for (const auto& p : parts) all.insert(p.shapes[len].begin(), p.shapes[len].end());
      t[n] = static_cast<unsigned long>(all.size());
    }
  }
  return t;
}

}  // namespace stairgf

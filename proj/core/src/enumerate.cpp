#include "cideal/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cideal {

namespace {

// Steps from p's parent up to the satellite target; 0 for a free point.
int satellite_distance(const Constellation& c, PointId p) {
  auto target = c.satellite_target(p);
  if (!target) return 0;
  int d = 1;
  for (auto q = *c.parent(p); q != *target; q = *c.parent(q)) ++d;
  return d;
}

std::string encode(const Constellation& c, PointId p) {
  std::vector<std::string> kids;
  for (auto ch : c.children(p)) kids.push_back(encode(c, ch));
  std::sort(kids.begin(), kids.end());
  std::string out = "(" + std::to_string(satellite_distance(c, p)) + ":" + std::to_string(c.degree(p));
  for (const auto& k : kids) out += k;
  return out + ")";
}

}  // namespace

std::string canonical_form(const Constellation& c) { return encode(c, c.root()); }

std::vector<ConstellationPtr> enumerate_constellations(std::size_t max_points) {
  std::vector<ConstellationPtr> out;
  if (max_points == 0) return out;
  std::vector<Constellation> layer{Constellation()};
  for (std::size_t size = 1;; ++size) {
    for (const auto& c : layer) out.push_back(share(c));
    if (size == max_points) break;
    std::set<std::string> seen;
    std::vector<Constellation> next;
    for (const auto& c : layer) {
      for (auto p : c.points()) {
        std::vector<std::optional<PointId>> targets{std::nullopt};
        for (auto q : c.proximity_set(p)) targets.emplace_back(q);
        for (auto t : targets) {
          Constellation grown = c;
          grown.add_point(p, t);
          if (seen.insert(canonical_form(grown)).second) next.push_back(std::move(grown));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<IdealClass> enumerate_complete_ideals(const ConstellationPtr& c, std::int64_t max_entry,
                                                  bool full_support_only) {
  std::vector<IdealClass> out;
  auto order = c->points();
  std::reverse(order.begin(), order.end());
  std::vector<std::int64_t> r(c->size(), 0);
  std::int64_t floor_value = full_support_only ? 1 : 0;
  // Descendants first, so every proximate point already has its value.
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == order.size()) {
      if (std::any_of(r.begin(), r.end(), [](auto x) { return x > 0; })) out.emplace_back(PointBasis(c, r));
      return;
    }
    auto b = order[k];
    std::int64_t lower = floor_value;
    std::int64_t load = 0;
    for (auto q : c->proximate_points(b)) load += c->relative_degree(b, q) * r[q.index];
    lower = std::max(lower, load);
    for (std::int64_t v = lower; v <= max_entry; ++v) {
      r[b.index] = v;
      assign(k + 1);
    }
    r[b.index] = 0;
  };
  assign(0);
  std::sort(out.begin(), out.end(), [](const IdealClass& x, const IdealClass& y) {
    return std::lexicographical_compare(x.basis().values().begin(), x.basis().values().end(),
                                        y.basis().values().begin(), y.basis().values().end());
  });
  return out;
}

std::vector<Staircase> monomial_corpus(std::int64_t bound) {
  std::vector<Staircase> out;
  std::vector<Exponent> chain;
  // Slopes (b' - b)/(a' - a) must increase strictly along the chain.
  std::function<void()> extend = [&] {
    const auto last = chain.back();
    if (last.b == 0) {
      out.push_back(newton_closure(Staircase(chain)));
      return;
    }
    for (std::int64_t a = last.a + 1; a <= bound; ++a) {
      for (std::int64_t b = 0; b < last.b; ++b) {
        if (chain.size() >= 2) {
          const auto prev = chain[chain.size() - 2];
          // (b - last.b)/(a - last.a) > (last.b - prev.b)/(last.a - prev.a)
          if ((b - last.b) * (last.a - prev.a) <= (last.b - prev.b) * (a - last.a)) continue;
        }
        chain.push_back({a, b});
        extend();
        chain.pop_back();
      }
    }
  };
  for (std::int64_t b0 = 1; b0 <= bound; ++b0) {
    chain = {{0, b0}};
    extend();
  }
  return out;
}

Constellation random_constellation(std::mt19937_64& rng, std::size_t n, std::int64_t max_degree) {
  Constellation c;
  for (std::size_t i = 1; i < n; ++i) {
    auto parent = PointId{static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng))};
    auto prox = c.proximity_set(parent);
    std::optional<PointId> sat;
    auto pick = std::uniform_int_distribution<std::size_t>(0, prox.size())(rng);
    if (pick < prox.size()) sat = prox[pick];
    std::int64_t degree = 1;
    if (max_degree > 1 && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
      degree = std::uniform_int_distribution<std::int64_t>(2, max_degree)(rng);
    }
    c.add_point(parent, sat, degree);
  }
  return c;
}

IdealClass random_ideal(std::mt19937_64& rng, const ConstellationPtr& c, std::int64_t max_excess) {
  std::uniform_int_distribution<std::int64_t> dist(0, max_excess);
  while (true) {
    std::vector<std::int64_t> e(c->size());
    for (auto& x : e) x = dist(rng);
    if (std::any_of(e.begin(), e.end(), [](auto x) { return x > 0; })) return from_excess(c, std::move(e));
  }
}

}  // namespace cideal

#include "skeletron/checks/oracles.hpp"

#include <algorithm>
#include <cstdlib>

#include "skeletron/tropical.hpp"

namespace skeletron::checks {

Rational recentering_oracle(const RationalFunction& f, const P1Point& x) {
  if (!x.is_type2()) throw InputError("recentering oracle needs a type-2 point");
  LaurentPolynomial num(Puiseux(1));
  LaurentPolynomial den(Puiseux(1));
  for (const auto& factor : f.factors()) {
    // T - a = u + (b - a)
    LaurentPolynomial linear = LaurentPolynomial::linear(x.center() - *factor.root);
    LaurentPolynomial power = linear.pow(static_cast<unsigned>(std::abs(factor.mult)));
    if (factor.mult > 0) {
      num = num * power;
    } else {
      den = den * power;
    }
  }
  Rational s = x.radius().value();
  return f.lead_val() + eval_trop(num.tropicalize(), s) - eval_trop(den.tropicalize(), s);
}

namespace {

// Grid values k * step in [lo, hi], endpoints included.
std::vector<Rational> grid(const Rational& lo, const Rational& hi, const Rational& step) {
  std::vector<Rational> out;
  mpz_class k = mpz_class(lo.get_num() * step.get_den());
  mpz_class d = mpz_class(lo.get_den() * step.get_num());
  mpz_fdiv_q(k.get_mpz_t(), k.get_mpz_t(), d.get_mpz_t());
  for (Rational s = Rational(k) * step; s <= hi; s += step) {
    if (s >= lo) out.push_back(s);
  }
  out.push_back(lo);
  out.push_back(hi);
  return out;
}

}  // namespace

P1Point brute_force_retract(const P1Point& x, const SkeletonTree& tree, const Rational& step) {
  if (!x.is_type2()) throw InputError("brute-force retraction is implemented for type-2 points only");
  const MetricGraph& g = tree.graph();
  Rational r = x.radius().value();
  std::vector<P1Point> candidates;
  for (const auto& e : g.edges()) {
    const P1Point& lo = tree.placement(e.u);
    const P1Point& hi = tree.placement(e.v);
    for (const auto& s : grid(lo.radius().value(), hi.radius().value(), step)) {
      candidates.push_back(P1Point::type2(hi.center(), s));
    }
  }
  for (const auto& [id, p] : tree.placement()) candidates.push_back(p);
  for (const auto& ray : g.rays()) {
    const P1Point& base = tree.placement(ray.base);
    const P1Point& target = tree.ray_targets().at(ray.mark);
    Rational s0 = base.radius().value();
    if (target.is_infinity()) {
      Rational far = std::min(s0, r) - 2;
      for (const auto& s : grid(far, s0, step)) candidates.push_back(P1Point::type2(base.center(), s));
    } else {
      Rational far = std::max(s0, r) + 2;
      for (const auto& s : grid(s0, far, step)) candidates.push_back(P1Point::type2(target.center(), s));
    }
  }
  const P1Point* best = nullptr;
  ValQ best_distance;
  for (const auto& c : candidates) {
    ValQ d = path_distance(x, c);
    if (best == nullptr || d < best_distance) {
      best = &c;
      best_distance = d;
    }
  }
  return *best;
}

Rational random_exponent(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> den(1, 4);
  int q = den(rng);
  std::uniform_int_distribution<int> num(lo * q, hi * q);
  return make_rational(num(rng), q);
}

Puiseux random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> count(1, 2);
  Puiseux out;
  int terms = count(rng);
  for (int i = 0; i < terms; ++i) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    out += Puiseux::monomial(c, random_exponent(rng, -2, 3));
  }
  return out;
}

RationalFunction random_function(std::mt19937_64& rng, int max_roots, int max_mult) {
  std::uniform_int_distribution<int> count(1, max_roots);
  std::uniform_int_distribution<int> mult(1, max_mult);
  std::bernoulli_distribution negative(0.5);
  std::bernoulli_distribution use_zero(0.15);
  std::uniform_int_distribution<int> pick(0, 1);
  int k = count(rng);
  std::vector<Puiseux> roots;
  std::vector<Factor> factors;
  while (static_cast<int>(factors.size()) < k) {
    Puiseux root = use_zero(rng) ? Puiseux() : random_element(rng);
    // sometimes cluster a root near an earlier one to get deep joins
    if (!roots.empty() && pick(rng) == 1) {
      std::uniform_int_distribution<std::size_t> which(0, roots.size() - 1);
      root = roots[which(rng)] + Puiseux::monomial(1 + pick(rng), random_exponent(rng, 1, 4));
    }
    if (std::find(roots.begin(), roots.end(), root) != roots.end()) continue;
    roots.push_back(root);
    int m = mult(rng);
    factors.push_back({root, negative(rng) ? -m : m});
  }
  return RationalFunction(random_exponent(rng, -3, 3), std::move(factors));
}

P1Point random_type2(std::mt19937_64& rng, const std::vector<Puiseux>& anchors) {
  std::bernoulli_distribution perturb(0.7);
  Puiseux center;
  if (!anchors.empty()) {
    std::uniform_int_distribution<std::size_t> which(0, anchors.size());
    std::size_t i = which(rng);
    if (i < anchors.size()) center = anchors[i];
  }
  if (perturb(rng)) center += random_element(rng);
  return P1Point::type2(center, random_exponent(rng, -2, 4));
}

MetricGraph random_graph(std::mt19937_64& rng, int max_vertices, int max_extra_edges, int max_rays) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  std::uniform_int_distribution<int> ne(0, max_extra_edges);
  std::uniform_int_distribution<int> nr(0, max_rays);
  std::uniform_int_distribution<int> weight(0, 2);
  std::uniform_int_distribution<int> len_num(1, 12);
  std::uniform_int_distribution<int> len_den(1, 4);
  int n = nv(rng);
  std::vector<Vertex> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back({"g" + std::to_string(i), weight(rng) == 2 ? 1 : 0});
  auto length = [&] { return make_rational(len_num(rng), len_den(rng)); };
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    edges.push_back({vertices[parent(rng)].id, vertices[i].id, length()});
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  int extra = ne(rng);
  for (int i = 0; i < extra; ++i) edges.push_back({vertices[any(rng)].id, vertices[any(rng)].id, length()});
  std::vector<Ray> rays;
  int r = nr(rng);
  for (int i = 0; i < r; ++i) rays.push_back({vertices[any(rng)].id, "m" + std::to_string(i)});
  return MetricGraph(std::move(vertices), std::move(edges), std::move(rays));
}

}  // namespace skeletron::checks
